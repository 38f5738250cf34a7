use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mocposite::branches::{eval_cos_sqrt, eval_f2, eval_log_sin};
use mocposite::continuation::{continue_sqrt, one_minus_square};
use mocposite::domain::{make_standard_domain, winding_number};
use mocposite::quadrature::{bessel_j0_quadrature, crack_integral, verify_collapse};
use mocposite::route::find_route;
use mocposite::{principal_sqrt, Complex, PolyPath, RouteOptions, StandardDomain};

fn branches(c: &mut Criterion) {
    let z = Complex::new(0.7, -1.3);
    c.bench_function("eval_f2", |b| b.iter(|| eval_f2(black_box(z))));
    c.bench_function("eval_cos_sqrt |z|=100", |b| b.iter(|| eval_cos_sqrt(black_box(Complex::new(60.0, 80.0)))));
    c.bench_function("eval_log_sin 5pi/2", |b| {
        b.iter(|| eval_log_sin(black_box(Complex::new(7.853981633974483, 0.3))))
    });
}

fn continuation(c: &mut Criterion) {
    let lp = PolyPath::circle(Complex::new(1.0, 0.0), 0.5, 256, true).unwrap();
    let seed = principal_sqrt(one_minus_square(lp.start()));
    c.bench_function("continue_sqrt loop of 256", |b| b.iter(|| continue_sqrt(one_minus_square, black_box(&lp), seed)));
    c.bench_function("winding_number loop of 256", |b| {
        b.iter(|| winding_number(black_box(&lp), Complex::new(1.0, 0.0)))
    });
    let comb = make_standard_domain(StandardDomain::Comb, 8.0).unwrap();
    let z0 = Complex::new(0.0, 3.0);
    c.bench_function("find_route comb", |b| b.iter(|| find_route(&comb, z0, -z0, &RouteOptions::seeded(black_box(1)))));
}

fn quadrature(c: &mut Criterion) {
    c.bench_function("crack_integral n=400", |b| b.iter(|| crack_integral(black_box(Complex::new(0.5, 1.2)), 400)));
    c.bench_function("bessel_j0 n=128", |b| b.iter(|| bessel_j0_quadrature(black_box(Complex::new(5.0, 0.0)), 128)));
    c.bench_function("verify_collapse 1024", |b| {
        b.iter(|| verify_collapse(black_box(Complex::new(2.0, 1.0)), 6.0, 1.2, 0.2, 1024))
    });
}

criterion_group!(benches, branches, continuation, quadrature);
criterion_main!(benches);
