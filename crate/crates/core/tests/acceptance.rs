//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::process::ExitCode;

use mocposite::branches::{
    estimate_order, estimate_order_from_log_modulus, eval_cos_sqrt, eval_f1, eval_f2, eval_f3, eval_log_sin,
    eval_log_z2, joukowski, joukowski_inverse_disk, log_modulus_cos,
};
use mocposite::continuation::{monodromy_of_loop, one_minus_square};
use mocposite::domain::winding_number;
use mocposite::geometry::point_segment_distance;
use mocposite::quadrature::{bessel_j0_quadrature, crack_integral, verify_collapse};
use mocposite::suite::{bessel_j0_series, routed_parities};
use mocposite::{principal_sqrt, Complex, EquationKind, Monodromy, Parity, PolyPath, StandardDomain, I};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + stream)
}

/// Uniform points in `[-5, 5]²` kept `gap` away from `excluded`.
fn sample(rng: &mut ChaCha8Rng, count: usize, gap: f64, excluded: impl Fn(Complex) -> f64) -> Vec<Complex> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let z = c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        if excluded(z) > gap {
            out.push(z);
        }
    }
    out
}

fn off_interval(z: Complex) -> f64 {
    point_segment_distance(z, c(-1.0, 0.0), c(1.0, 0.0))
}

fn off_outer_rays(z: Complex) -> f64 {
    if z.re.abs() >= 1.0 {
        z.im.abs()
    } else {
        (z - 1.0).norm().min((z + 1.0).norm())
    }
}

fn bounded(name: &str, worst: f64, limit: f64) -> Outcome {
    let line = format!("{name} {worst:.3e} (limit {limit:.1e})");
    if worst <= limit {
        Ok(line)
    } else {
        Err(line)
    }
}

fn max_of(values: impl IntoIterator<Item = Result<f64, mocposite::Error>>) -> Result<f64, String> {
    let mut worst: f64 = 0.0;
    for v in values {
        worst = worst.max(v.map_err(|e| e.to_string())?);
    }
    Ok(worst)
}

const CRACK_POINTS: [(f64, f64); 6] = [(2.0, 0.0), (3.0, 0.0), (-2.0, 0.0), (1.5, 0.0), (0.5, 1.2), (-0.3, -2.0)];

fn crack_identity() -> Outcome {
    let worst = max_of(CRACK_POINTS.iter().map(|&(x, y)| {
        let z = c(x, y);
        Ok((crack_integral(z, 400)? - (z - I * eval_f2(z)?)).norm())
    }))?;
    bounded("max error", worst, 1e-10)
}

fn antisymmetry() -> Outcome {
    let worst = max_of(CRACK_POINTS.iter().flat_map(|&(x, y)| {
        [8, 51, 200, 400].map(move |n| {
            let z = c(x, y);
            Ok((crack_integral(-z, n)? + crack_integral(z, n)?).norm())
        })
    }))?;
    bounded("max |I(-z) + I(z)|", worst, 1e-15)
}

fn parity() -> Outcome {
    let odd = sample(&mut rng(3), 1000, 1e-6, off_interval);
    let even = sample(&mut rng(4), 1000, 1e-6, off_outer_rays);
    let scale = |z: Complex| 1.0 + z.norm_sqr();
    let f2 = max_of(odd.iter().map(|&z| Ok((eval_f2(-z)? + eval_f2(z)?).norm() / scale(z))))?;
    let f3 = max_of(even.iter().map(|&z| Ok((eval_f3(-z)? - eval_f3(z)?).norm() / scale(z))))?;
    let line = format!("f2 odd {f2:.3e}, f3 even {f3:.3e} (relative to 1+|z|², limit 1e-12)");
    if f2 <= 1e-12 && f3 <= 1e-12 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn involution() -> Outcome {
    let points = sample(&mut rng(3), 1000, 1e-6, off_interval);
    let worst = max_of(points.iter().map(|&z| Ok((-eval_f2(eval_f2(z)?)? - z).norm() / (1.0 + z.norm()))))?;
    bounded("max |−f2(f2(z)) − z|/(1+|z|)", worst, 1e-11)
}

fn reflection() -> Outcome {
    let points = sample(&mut rng(3), 1000, 1e-6, off_interval);
    let worst = max_of(points.iter().map(|&z| Ok((eval_f2(z.conj())? + eval_f2(z)?.conj()).norm())))?;
    bounded("max |f2(z̄) + conj f2(z)|", worst, 1e-12)
}

fn random_loop(rng: &mut ChaCha8Rng) -> PolyPath {
    loop {
        let vertices = rng.random_range(3..9);
        let points: Vec<Complex> =
            (0..vertices).map(|_| c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))).collect();
        let Ok(lp) = PolyPath::closed(points) else { continue };
        let clear = lp.segments().all(|(a, b)| {
            point_segment_distance(c(1.0, 0.0), a, b) > 0.02 && point_segment_distance(c(-1.0, 0.0), a, b) > 0.02
        });
        if clear {
            return lp;
        }
    }
}

fn monodromy_winding() -> Outcome {
    let mut rng = rng(6);
    let mut failures = 0;
    let mut nontrivial = 0;
    for _ in 0..50 {
        let lp = random_loop(&mut rng);
        let winds = winding_number(&lp, c(1.0, 0.0)).map_err(|e| e.to_string())?
            + winding_number(&lp, c(-1.0, 0.0)).map_err(|e| e.to_string())?;
        let expected = if winds.rem_euclid(2) == 0 { 1 } else { -1 };
        nontrivial += usize::from(expected == -1);
        let seed = principal_sqrt(one_minus_square(lp.start()));
        match monodromy_of_loop(EquationKind::Sqrt, one_minus_square, &lp, seed) {
            Ok(Monodromy::SqrtSign { sign }) if i64::from(sign) == expected => {}
            _ => failures += 1,
        }
    }
    let line = format!("{failures} failures over 50 loops ({nontrivial} with sign −1)");
    if failures == 0 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn log_sin_values() -> Outcome {
    let worst = max_of((-3..=3).map(|n: i32| {
        let z = c((n as f64 + 0.5) * PI, 0.0);
        Ok((eval_log_sin(z)? - c(0.0, n as f64 * PI)).norm())
    }))?;
    bounded("max |log sin((n+½)π) − nπi|", worst, 1e-9)
}

fn log_z2_values() -> Outcome {
    let z = c(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    let a = (eval_log_z2(z).map_err(|e| e.to_string())? - c(0.0, PI / 2.0)).norm();
    let b = (eval_log_z2(-z).map_err(|e| e.to_string())? - c(0.0, -1.5 * PI)).norm();
    bounded("max error", a.max(b), 1e-13)
}

fn orders() -> Outcome {
    let radii = [1e2, 1e3, 1e4];
    let cos = estimate_order_from_log_modulus(log_modulus_cos, &radii).map_err(|e| e.to_string())?;
    let half = estimate_order(|z| eval_cos_sqrt(z).unwrap_or(c(f64::NAN, 0.0)), &radii).map_err(|e| e.to_string())?;
    let line = format!("cos {cos:.4}, cos √z {half:.4}");
    if (cos - 1.0).abs() <= 0.05 && (half - 0.5).abs() <= 0.05 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn collapse() -> Outcome {
    let worst = max_of(
        [c(2.0, 1.0), c(3.0, 0.0), c(-2.0, 0.5)]
            .into_iter()
            .map(|z| Ok(verify_collapse(z, 6.0, 1.2, 0.2, 1024)?.abs_err)),
    )?;
    bounded("max error", worst, 1e-8)
}

fn joukowski_round_trip() -> Outcome {
    let points = sample(&mut rng(11), 500, 1e-6, off_interval);
    let mut outside = 0;
    let worst = max_of(points.iter().map(|&cc| {
        let w = joukowski_inverse_disk(cc)?;
        if w.norm() >= 1.0 {
            outside += 1;
        }
        Ok((joukowski(w)? - cc).norm())
    }))?;
    let line = format!("max error {worst:.3e} (limit 1e-11), {outside} preimages outside the disk");
    if worst <= 1e-11 && outside == 0 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn bessel() -> Outcome {
    let worst = max_of((-32..=32).map(|k| {
        let x = k as f64 * 0.25;
        Ok((bessel_j0_quadrature(c(x, 0.0), 128)? - c(bessel_j0_series(x), 0.0)).norm())
    }))?;
    bounded("max error", worst, 1e-10)
}

fn closed_form_agreement() -> Outcome {
    let mut rng = rng(13);
    let worst = max_of((0..1000).map(|_| {
        let z = c(rng.random_range(-5.0..5.0), rng.random_range(1e-6..5.0));
        Ok((eval_f2(z)? - eval_f1(z)?).norm())
    }))?;
    bounded("max |f2 − f1|", worst, 1e-13)
}

fn exercise_one() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for kind in [StandardDomain::Comb, StandardDomain::DoubleSpiral] {
        let found = routed_parities(kind, 0).map_err(|e| format!("{kind}: {e}"))?;
        let agree = found.iter().all(|p| *p == found[0]) && found[0] != Parity::Inconsistent;
        ok &= agree;
        let names: Vec<String> = found.iter().map(ToString::to_string).collect();
        lines.push(format!("{kind}: {} (seeds 0,1,2)", names.join("/")));
    }
    let line = lines.join("; ");
    if ok {
        Ok(line)
    } else {
        Err(line)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("crack identity", crack_identity),
        ("crack antisymmetry", antisymmetry),
        ("odd and even branches", parity),
        ("involution", involution),
        ("reflection", reflection),
        ("monodromy and winding", monodromy_winding),
        ("log sin values", log_sin_values),
        ("log z^2 values", log_z2_values),
        ("order estimates", orders),
        ("contour collapse", collapse),
        ("joukowski round trip", joukowski_round_trip),
        ("bessel j0", bessel),
        ("closed form of f2", closed_form_agreement),
        ("parity path independence", exercise_one),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
