//! The built-in verification suites run by `mocposite verify`.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2, TAU};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::branches::{
    estimate_order, estimate_order_from_log_modulus, eval_cos_sqrt, eval_f1, eval_f2, eval_f3, eval_log_sin,
    eval_log_z2, joukowski, joukowski_inverse_disk, log_modulus_cos, log_sin_path,
};
use crate::complex::{principal_sqrt, Complex, I};
use crate::continuation::{
    continue_log, continue_sqrt, monodromy_of_loop, one_minus_square, parity_probe, EquationKind, Monodromy, Parity,
};
use crate::domain::{make_standard_domain, PolyPath, StandardDomain};
use crate::error::{Error, Result};
use crate::quadrature::{
    bessel_j0_quadrature, contour_integral, crack_closed_form, crack_integral, verify_collapse, ContourSpec,
    Orientation, COLLAPSE_TOL,
};
use crate::report::{fmt_complex, VerificationRecord, VerificationReport};
use crate::route::{find_route, RouteOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    All,
    Branches,
    Continuation,
    Quadrature,
    Exercises,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 5] =
        [SuiteKind::All, SuiteKind::Branches, SuiteKind::Continuation, SuiteKind::Quadrature, SuiteKind::Exercises];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::All => "all",
            SuiteKind::Branches => "branches",
            SuiteKind::Continuation => "continuation",
            SuiteKind::Quadrature => "quadrature",
            SuiteKind::Exercises => "exercises",
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Usage(format!("unknown suite `{s}`")))
    }
}

/// Overrides applied to a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SuiteConfig {
    /// Replaces the tolerance of every numeric record.
    pub tol: Option<f64>,
    /// Replaces the order of every Chebyshev quadrature.
    pub n: Option<usize>,
    /// Base seed for routed paths.
    pub seed: u64,
}

/// Collects records, turning evaluation errors into failed records.
struct Records<'a> {
    config: &'a SuiteConfig,
    out: Vec<VerificationRecord>,
}

impl<'a> Records<'a> {
    fn new(config: &'a SuiteConfig) -> Self {
        Self { config, out: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, tol: f64, f: impl FnOnce() -> Result<(Complex, Complex)>) {
        let name = name.into();
        let tol = self.config.tol.unwrap_or(tol);
        self.out.push(match f() {
            Ok((computed, expected)) => VerificationRecord::new(name, computed, expected, tol),
            Err(e) => errored(name, tol, e),
        });
    }

    /// A yes/no check; its tolerance is never overridden.
    fn holds(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<bool>) {
        let name = name.into();
        self.out.push(match f() {
            Ok(holds) => VerificationRecord::boolean(name, holds),
            Err(e) => errored(name, 0.0, e),
        });
    }

    fn order(&self, default: usize) -> usize {
        self.config.n.unwrap_or(default)
    }
}

fn errored(name: String, tol: f64, e: Error) -> VerificationRecord {
    VerificationRecord {
        name: format!("{name} [error: {e}]"),
        computed: Complex::new(0.0, 0.0),
        expected: Complex::new(0.0, 0.0),
        abs_err: f64::MAX,
        tol,
        pass: false,
    }
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn real(x: f64) -> Complex {
    c(x, 0.0)
}

/// `J₀(x)` by its power series.
pub fn bessel_j0_series(x: f64) -> f64 {
    let q = -(x * x) / 4.0;
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 1..80 {
        term *= q / (k * k) as f64;
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) && k > 4 {
            break;
        }
    }
    sum
}

fn branch_records(r: &mut Records) {
    let sqrt3 = 3f64.sqrt();
    r.check("f1 at i", 1e-12, || Ok((eval_f1(I)?, real(SQRT_2))));
    r.check("f1 at 2i", 1e-12, || Ok((eval_f1(c(0.0, 2.0))?, real(5f64.sqrt()))));
    r.check("f2 at 2", 1e-12, || Ok((eval_f2(real(2.0))?, c(0.0, -sqrt3))));
    r.check("f2 at -2", 1e-12, || Ok((eval_f2(real(-2.0))?, c(0.0, sqrt3))));
    r.check("f2 at i", 1e-12, || Ok((eval_f2(I)?, real(SQRT_2))));
    r.check("f2 at -i", 1e-12, || Ok((eval_f2(-I)?, real(-SQRT_2))));
    r.check("f3 at 0", 1e-12, || Ok((eval_f3(real(0.0))?, real(1.0))));
    r.check("f3 at 0.5", 1e-12, || Ok((eval_f3(real(0.5))?, real(0.75f64.sqrt()))));
    r.check("f3 at -i", 1e-12, || Ok((eval_f3(-I)?, real(SQRT_2))));
    r.check("log z^2 at i", 1e-12, || Ok((eval_log_z2(I)?, c(0.0, PI))));
    r.check("log z^2 at -i", 1e-12, || Ok((eval_log_z2(-I)?, c(0.0, -PI))));
    r.check("log z^2 at e", 1e-12, || Ok((eval_log_z2(real(std::f64::consts::E))?, real(2.0))));
    r.check("cos sqrt at 0", 1e-12, || Ok((eval_cos_sqrt(real(0.0))?, real(1.0))));
    r.check("cos sqrt at -1", 1e-12, || Ok((eval_cos_sqrt(real(-1.0))?, real(1.0f64.cosh()))));
    r.check("cos sqrt at pi^2/4", 1e-12, || Ok((eval_cos_sqrt(real(PI * PI / 4.0))?, real(0.0))));
    r.check("joukowski at i", 1e-12, || Ok((joukowski(I)?, real(0.0))));
    r.check("joukowski at 2", 1e-12, || Ok((joukowski(real(2.0))?, real(1.25))));
    r.check("joukowski inverse at 1.25", 1e-12, || Ok((joukowski_inverse_disk(real(1.25))?, real(0.5))));
    r.check("joukowski inverse at 2i", 1e-12, || Ok((joukowski_inverse_disk(c(0.0, 2.0))?, c(0.0, 2.0 - 5f64.sqrt()))));

    for z in [c(2.0, 1.0), c(-0.3, 0.7), c(1.5, -4.0)] {
        let tag = fmt_complex(z);
        r.check(format!("f2 odd at {tag}"), 1e-12, || Ok((eval_f2(-z)?, -eval_f2(z)?)));
        r.check(format!("f2 involution at {tag}"), 1e-11 * (1.0 + z.norm()), || Ok((-eval_f2(eval_f2(z)?)?, z)));
        r.check(format!("f2 reflection at {tag}"), 1e-12, || Ok((eval_f2(z.conj())?, -eval_f2(z)?.conj())));
        r.check(format!("f2 squared at {tag}"), 1e-12, || Ok((eval_f2(z)?.powu(2), one_minus_square(z))));
    }
    for z in [c(0.3, 0.4), c(-2.0, 0.1), c(5.0, 5.0)] {
        let tag = fmt_complex(z);
        r.check(format!("f2 equals f1 at {tag}"), 1e-13, || Ok((eval_f2(z)?, eval_f1(z)?)));
        r.check(format!("f3 equals f1 at {tag}"), 1e-13, || Ok((eval_f3(z)?, eval_f1(z)?)));
    }

    let radii = [1e2, 1e3, 1e4];
    r.check("order of cos", 0.05, || Ok((real(estimate_order_from_log_modulus(log_modulus_cos, &radii)?), real(1.0))));
    r.check("order of cos sqrt", 0.05, || {
        Ok((real(estimate_order(|z| eval_cos_sqrt(z).unwrap_or(Complex::new(f64::NAN, 0.0)), &radii)?), real(0.5)))
    });
}

fn continuation_records(r: &mut Records) {
    let sign = |m: Monodromy| match m {
        Monodromy::SqrtSign { sign } => real(sign as f64),
        Monodromy::LogOffset { offset_multiple } => real(offset_multiple as f64),
    };
    let around = |centre: Complex, radius: f64| PolyPath::circle(centre, radius, 256, true);

    r.check("sqrt monodromy around 1", 0.0, || {
        let lp = around(real(1.0), 0.5)?;
        Ok((
            sign(monodromy_of_loop(
                EquationKind::Sqrt,
                one_minus_square,
                &lp,
                principal_sqrt(one_minus_square(lp.start())),
            )?),
            real(-1.0),
        ))
    });
    r.check("sqrt monodromy around -1", 0.0, || {
        let lp = around(real(-1.0), 0.5)?;
        Ok((
            sign(monodromy_of_loop(
                EquationKind::Sqrt,
                one_minus_square,
                &lp,
                principal_sqrt(one_minus_square(lp.start())),
            )?),
            real(-1.0),
        ))
    });
    r.check("sqrt monodromy around both branch points", 0.0, || {
        let lp = around(real(0.0), 2.0)?;
        Ok((
            sign(monodromy_of_loop(
                EquationKind::Sqrt,
                one_minus_square,
                &lp,
                principal_sqrt(one_minus_square(lp.start())),
            )?),
            real(1.0),
        ))
    });
    r.check("log monodromy of z around 0", 0.0, || {
        let lp = around(real(0.0), 1.0)?;
        Ok((sign(monodromy_of_loop(EquationKind::Log, |z| z, &lp, real(0.0))?), real(1.0)))
    });
    r.check("log monodromy of z^2 around 0", 0.0, || {
        let lp = around(real(0.0), 1.0)?;
        Ok((sign(monodromy_of_loop(EquationKind::Log, |z| z * z, &lp, real(0.0))?), real(2.0)))
    });
    r.check("log monodromy of z^2 clockwise", 0.0, || {
        let lp = around(real(0.0), 1.0)?.reversed();
        Ok((sign(monodromy_of_loop(EquationKind::Log, |z| z * z, &lp, real(0.0))?), real(-2.0)))
    });
    r.check("sqrt continuation 0 to 2i", 1e-12, || {
        let path = PolyPath::open(vec![real(0.0), c(0.0, 2.0)])?;
        Ok((continue_sqrt(one_minus_square, &path, real(1.0))?.terminal, real(5f64.sqrt())))
    });
    r.check("sqrt continuation i to 2 over the top", 1e-12, || {
        let path = PolyPath::open(vec![I, c(2.0, 1.0), real(2.0)])?;
        Ok((continue_sqrt(one_minus_square, &path, real(SQRT_2))?.terminal, c(0.0, -3f64.sqrt())))
    });
    r.check("log sin continuation to 5pi/2", 1e-9, || {
        let path = log_sin_path(real(2.5 * PI))?;
        Ok((continue_log(|z| z.sin(), &path, real(0.0))?.terminal, c(0.0, TAU)))
    });

    let z0 = c(0.0, 2.0);
    let parity = |p: Parity| {
        real(if p == Parity::Odd {
            -1.0
        } else if p == Parity::Even {
            1.0
        } else {
            0.0
        })
    };
    r.check("parity on the slit interval", 0.0, || {
        let d = make_standard_domain(StandardDomain::SlitInterval, 10.0)?;
        let path = PolyPath::open(vec![z0, c(3.0, 2.0), c(3.0, -2.0), -z0])?;
        Ok((parity(parity_probe(&d, z0, &path)?), real(-1.0)))
    });
    r.check("parity on the double ray", 0.0, || {
        let d = make_standard_domain(StandardDomain::DoubleRay, 10.0)?;
        let path = PolyPath::open(vec![z0, -z0])?;
        Ok((parity(parity_probe(&d, z0, &path)?), real(1.0)))
    });
}

fn quadrature_records(r: &mut Records) {
    let exact = 2.0 - 3f64.sqrt();
    let n = r.order(200);
    r.check(format!("crack z=2 n={n}"), 1e-12, || Ok((crack_integral(real(2.0), n)?, real(exact))));
    let n = r.order(400);
    for z in [c(3.0, 0.0), c(-2.0, 0.0), c(1.5, 0.0), c(0.5, 1.2), c(-0.3, -2.0)] {
        let tag = fmt_complex(z);
        r.check(format!("crack z={tag} n={n}"), 1e-10, || Ok((crack_integral(z, n)?, crack_closed_form(z)?)));
        r.check(format!("crack antisymmetry z={tag} n={n}"), 1e-15, || {
            Ok((crack_integral(-z, n)?, -crack_integral(z, n)?))
        });
    }
    r.check("contour 1/w on the unit circle", 1e-12, || {
        let spec = ContourSpec::circle(real(0.0), 1.0, Orientation::Ccw, 256);
        Ok((contour_integral(&spec, |w| Ok(w.inv()))?, c(0.0, TAU)))
    });
    r.check("contour circle part is -2 pi z", 1e-10, || {
        let z = c(2.0, 1.0);
        let spec = ContourSpec::circle(real(0.0), 6.0, Orientation::Ccw, 1024);
        Ok((contour_integral(&spec, |w| Ok(eval_f2(w)? / (z - w)))?, -TAU * z))
    });
    for z in [c(2.0, 1.0), c(3.0, 0.0), c(-2.0, 0.5)] {
        let name = format!("collapse z={}", fmt_complex(z));
        let tol = r.config.tol.unwrap_or(COLLAPSE_TOL);
        r.out.push(match verify_collapse(z, 6.0, 1.2, 0.2, 1024) {
            Ok(record) => VerificationRecord { name, ..record }.with_tol(tol),
            Err(e) => errored(name, tol, e),
        });
    }
    let n = r.order(128);
    for k in -32..=32 {
        let x = k as f64 * 0.25;
        r.check(format!("j0 x={x:+.2} n={n}"), 1e-10, || {
            Ok((bessel_j0_quadrature(real(x), n)?, real(bessel_j0_series(x))))
        });
    }
}

/// Parity of `√(1 − z²)` on one region, probed along three seeded routes.
pub fn routed_parities(kind: StandardDomain, seed: u64) -> Result<Vec<Parity>> {
    let domain = make_standard_domain(kind, 8.0)?;
    let z0 = c(0.0, 3.0);
    (0..3)
        .map(|k| {
            let path = find_route(&domain, z0, -z0, &RouteOptions::seeded(seed.wrapping_add(k)))?;
            parity_probe(&domain, z0, &path)
        })
        .collect()
}

fn exercise_records(r: &mut Records) {
    for n in -3i32..=3 {
        let z = real((n as f64 + 0.5) * PI);
        r.check(format!("log sin at ({n}+1/2)pi"), 1e-9, || Ok((eval_log_sin(z)?, c(0.0, n as f64 * PI))));
    }
    r.check("log sin at pi/2", 1e-12, || Ok((eval_log_sin(real(FRAC_PI_2))?, real(0.0))));

    for kind in [StandardDomain::Comb, StandardDomain::DoubleSpiral] {
        let seed = r.config.seed;
        let outcome = routed_parities(kind, seed);
        let label = match &outcome {
            Ok(p) if p.iter().all(|q| *q == p[0]) => p[0].to_string(),
            Ok(_) => "mixed".into(),
            Err(_) => "error".into(),
        };
        r.holds(format!("sqrt(1-z^2) on {kind} is {label} for seeds {seed}..{}", seed + 2), || {
            let p = outcome?;
            Ok(p[0] != Parity::Inconsistent && p.iter().all(|q| *q == p[0]))
        });
    }

    for (k, z) in [c(0.5, 0.5), c(-3.0, 0.01), c(0.01, 7.0), c(-0.9, 2.5)].into_iter().enumerate() {
        r.check(format!("sqrt(1-z^2) = -iz sqrt(1-1/z^2) sample {k}"), 1e-13, || {
            Ok((-I * z * principal_sqrt(1.0 - (z * z).inv()), eval_f1(z)?))
        });
    }
}

/// Runs `kind` and returns its records sorted by name.
pub fn run_suite(kind: SuiteKind, config: &SuiteConfig) -> Vec<VerificationRecord> {
    let mut r = Records::new(config);
    let include = |k: SuiteKind| kind == SuiteKind::All || kind == k;
    if include(SuiteKind::Branches) {
        branch_records(&mut r);
    }
    if include(SuiteKind::Continuation) {
        continuation_records(&mut r);
    }
    if include(SuiteKind::Quadrature) {
        quadrature_records(&mut r);
    }
    if include(SuiteKind::Exercises) {
        exercise_records(&mut r);
    }
    let mut out = r.out;
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// Runs `kind` and wraps the records in a timed report.
pub fn verify(kind: SuiteKind, config: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let records = run_suite(kind, config);
    VerificationReport::new(records, start.elapsed().as_millis() as u64)
}
