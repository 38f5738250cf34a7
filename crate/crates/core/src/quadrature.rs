//! Gauss–Chebyshev rules, periodic trapezoid contour integrals, and the
//! crack-integral, contour-collapse and Bessel J₀ checks built on them.
//!
//! Chebyshev nodes are generated for the first half of the rule and mirrored,
//! so `t_{n+1-k} = -t_k` holds bitwise and symmetric integrands sum in
//! mirrored pairs. That makes `crack_integral(-z) == -crack_integral(z)`
//! exactly rather than to rounding.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::branches::{eval_f2, joukowski_inverse_disk};
use crate::complex::{ensure_finite, Complex, I};
use crate::error::{Error, Result};
use crate::report::VerificationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleKind {
    /// Weight `1/√(1 − t²)` on (−1, 1).
    ChebyshevFirst,
    /// Weight `√(1 − t²)` on (−1, 1).
    ChebyshevSecond,
    /// Equal weights on the angles `2πk/n` of a periodic parameter.
    PeriodicTrapezoid,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    pub n: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn chebyshev_first(n: usize) -> Result<Self> {
        Self::mirrored(RuleKind::ChebyshevFirst, n, |k| {
            let theta = (2 * k - 1) as f64 * PI / (2 * n) as f64;
            (theta.cos(), PI / n as f64)
        })
    }

    pub fn chebyshev_second(n: usize) -> Result<Self> {
        Self::mirrored(RuleKind::ChebyshevSecond, n, |k| {
            let h = PI / (n + 1) as f64;
            let s = (k as f64 * h).sin();
            ((k as f64 * h).cos(), h * s * s)
        })
    }

    pub fn periodic_trapezoid(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("a rule needs at least one node".into()));
        }
        let nodes = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
        Ok(Self { kind: RuleKind::PeriodicTrapezoid, n, nodes, weights: vec![TAU / n as f64; n] })
    }

    /// Builds a rule symmetric about 0 from the node/weight of index `k`
    /// (1-based, first half only).
    fn mirrored(kind: RuleKind, n: usize, node: impl Fn(usize) -> (f64, f64)) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("a rule needs at least one node".into()));
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for k in 1..=n / 2 {
            let (t, w) = node(k);
            nodes[k - 1] = t;
            nodes[n - k] = -t;
            weights[k - 1] = w;
            weights[n - k] = w;
        }
        if n % 2 == 1 {
            let mid = n / 2;
            nodes[mid] = 0.0;
            weights[mid] = node(mid + 1).1;
        }
        Ok(Self { kind, n, nodes, weights })
    }
}

/// `Σ w_k·h(t_k)`, summing Chebyshev rules in mirrored pairs.
pub fn integrate_weighted<H: Fn(f64) -> Complex>(rule: &QuadratureRule, h: H) -> Result<Complex> {
    let term = |k: usize| -> Result<Complex> {
        let t = rule.nodes[k];
        let v = h(t);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Numeric(format!("integrand is not finite at t = {t}")));
        }
        Ok(v * rule.weights[k])
    };
    let mut sum = Complex::new(0.0, 0.0);
    match rule.kind {
        RuleKind::PeriodicTrapezoid => {
            for k in 0..rule.n {
                sum += term(k)?;
            }
        }
        RuleKind::ChebyshevFirst | RuleKind::ChebyshevSecond => {
            let n = rule.n;
            for k in 0..n / 2 {
                sum += term(k)? + term(n - 1 - k)?;
            }
            if n % 2 == 1 {
                sum += term(n / 2)?;
            }
        }
    }
    Ok(sum)
}

fn check_order(n: usize) -> Result<()> {
    if n < 8 {
        return Err(Error::Usage(format!("quadrature order must be at least 8, got {n}")));
    }
    Ok(())
}

/// `(1/π)∫ √(1−t²)/(z−t) dt` over [−1, 1] by the second-kind rule.
pub fn crack_integral(z: Complex, n: usize) -> Result<Complex> {
    check_order(n)?;
    ensure_finite(z, "crack integral argument")?;
    let distance = (z - z.re.clamp(-1.0, 1.0)).norm();
    if distance <= crate::domain::DEFAULT_CLEARANCE {
        return Err(Error::Domain(format!("{z} is on the crack [-1, 1]")));
    }
    let rule = QuadratureRule::chebyshev_second(n)?;
    Ok(integrate_weighted(&rule, |t| (z - t).inv())? * (1.0 / PI))
}

/// Closed form of the crack integral, `z − √(z² − 1)` with the odd branch.
pub fn crack_closed_form(z: Complex) -> Result<Complex> {
    joukowski_inverse_disk(z)
}

/// `(1/π)∫ e^{izt}/√(1−t²) dt` by the first-kind rule.
pub fn bessel_j0_quadrature(z: Complex, n: usize) -> Result<Complex> {
    check_order(n)?;
    ensure_finite(z, "J0 argument")?;
    let rule = QuadratureRule::chebyshev_first(n)?;
    Ok(integrate_weighted(&rule, |t| (I * z * t).exp())? * (1.0 / PI))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Ccw,
    Cw,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContourShape {
    Circle {
        radius: f64,
    },
    /// `center + a·cos θ + i·b·sin θ`.
    Ellipse {
        semi_axes: (f64, f64),
    },
}

/// A closed circle or ellipse sampled at `samples` equally spaced parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    #[serde(flatten)]
    pub shape: ContourShape,
    pub center: Complex,
    pub orientation: Orientation,
    pub samples: usize,
}

impl ContourSpec {
    pub fn circle(center: Complex, radius: f64, orientation: Orientation, samples: usize) -> Self {
        Self { shape: ContourShape::Circle { radius }, center, orientation, samples }
    }

    pub fn ellipse(center: Complex, a: f64, b: f64, orientation: Orientation, samples: usize) -> Self {
        Self { shape: ContourShape::Ellipse { semi_axes: (a, b) }, center, orientation, samples }
    }

    pub fn validate(&self) -> Result<()> {
        ensure_finite(self.center, "contour centre")?;
        if self.samples < 64 || !self.samples.is_power_of_two() {
            return Err(Error::Usage(format!("contour samples must be a power of two >= 64, got {}", self.samples)));
        }
        let ok = match self.shape {
            ContourShape::Circle { radius } => radius > 0.0 && radius.is_finite(),
            ContourShape::Ellipse { semi_axes: (a, b) } => a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite(),
        };
        if !ok {
            return Err(Error::Usage("contour radii must be positive".into()));
        }
        Ok(())
    }

    /// Point and derivative at parameter `theta` for counterclockwise traversal.
    pub fn point(&self, theta: f64) -> (Complex, Complex) {
        let (s, c) = theta.sin_cos();
        match self.shape {
            ContourShape::Circle { radius } => {
                let e = Complex::new(c, s) * radius;
                (self.center + e, I * e)
            }
            ContourShape::Ellipse { semi_axes: (a, b) } => {
                (self.center + Complex::new(a * c, b * s), Complex::new(-a * s, b * c))
            }
        }
    }

    /// Sample points in traversal order.
    pub fn sample_points(&self) -> Vec<Complex> {
        let n = self.samples;
        let sign = match self.orientation {
            Orientation::Ccw => 1.0,
            Orientation::Cw => -1.0,
        };
        (0..n).map(|k| self.point(sign * TAU * k as f64 / n as f64).0).collect()
    }
}

/// Trapezoid approximation of `∮ f(w) dw`. The clockwise value is the exact
/// negative of the counterclockwise one.
pub fn contour_integral<F: Fn(Complex) -> Result<Complex>>(spec: &ContourSpec, integrand: F) -> Result<Complex> {
    spec.validate()?;
    let rule = QuadratureRule::periodic_trapezoid(spec.samples)?;
    let mut sum = Complex::new(0.0, 0.0);
    for (theta, weight) in rule.nodes.iter().zip(&rule.weights) {
        let (w, dw) = spec.point(*theta);
        let v = integrand(w)?;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Numeric(format!("integrand is not finite at {w}")));
        }
        sum += v * dw * *weight;
    }
    Ok(match spec.orientation {
        Orientation::Ccw => sum,
        Orientation::Cw => -sum,
    })
}

/// Absolute tolerance for the contour-collapse check.
pub const COLLAPSE_TOL: f64 = 1e-8;

/// Integrates `f2(w)/(z − w)` over the circle of radius `radius` (ccw) and the
/// ellipse with semi-axes `a`, `b` (cw) and compares with `−2πi·f2(z)`.
pub fn verify_collapse(z: Complex, radius: f64, a: f64, b: f64, samples: usize) -> Result<VerificationRecord> {
    ensure_finite(z, "collapse point")?;
    if !(a > 1.0 && b > 0.0 && b < a) {
        return Err(Error::Domain(format!("ellipse ({a}, {b}) must satisfy a > 1 and 0 < b < a")));
    }
    if !radius.is_finite() || radius <= a {
        return Err(Error::Domain(format!("circle radius {radius} must exceed the ellipse")));
    }
    if z.norm() >= radius {
        return Err(Error::Domain(format!("{z} is not inside the circle of radius {radius}")));
    }
    let inside = (z.re / a).powi(2) + (z.im / b).powi(2);
    if inside <= 1.0 {
        return Err(Error::Domain(format!("{z} is not outside the ellipse ({a}, {b})")));
    }
    // keep z clear of both contours
    let origin = Complex::new(0.0, 0.0);
    let circle = ContourSpec::circle(origin, radius, Orientation::Ccw, samples);
    let ellipse = ContourSpec::ellipse(origin, a, b, Orientation::Cw, samples);
    let clearance = crate::domain::DEFAULT_CLEARANCE;
    if radius - z.norm() <= clearance || inside.sqrt() - 1.0 <= clearance {
        return Err(Error::Domain(format!("{z} is too close to the contour")));
    }
    let integrand = |w: Complex| Ok(eval_f2(w)? / (z - w));
    let total = contour_integral(&circle, integrand)? + contour_integral(&ellipse, integrand)?;
    let expected = -2.0 * PI * I * eval_f2(z)?;
    Ok(VerificationRecord::new(
        format!("collapse z={} R={radius} a={a} b={b} n={samples}", crate::report::fmt_complex(z)),
        total,
        expected,
        COLLAPSE_TOL,
    ))
}
