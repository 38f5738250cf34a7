//! Closed-form branches of `√(1 − z²)`, `log z²`, `log sin z` and `cos √z`,
//! the Joukowski map with its inverse on the punctured unit disk, and an
//! estimator for the order of growth of entire functions.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{ensure_finite, principal_log, principal_sqrt, Complex, I};
use crate::continuation::continue_log;
use crate::domain::{make_standard_domain, PolyPath, SlitCurve, SlitDomain, StandardDomain, DEFAULT_CLEARANCE};
use crate::error::{Error, Result};

/// Radius of the semicircular detours below each zero of `sin`.
pub const LOG_SIN_DETOUR_RADIUS: f64 = 0.1;
const LOG_SIN_DETOUR_SAMPLES: usize = 32;
/// Truncation radius used when a branch's domain is materialised.
const TAG_RADIUS: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchName {
    F1UpperHalfPlane,
    F2OddSlit,
    F3EvenDoublySlit,
    LogZSquared,
    LogSin,
    CosSqrt,
    Joukowski,
    JoukowskiInverseDisk,
}

impl BranchName {
    pub const ALL: [BranchName; 8] = [
        BranchName::F1UpperHalfPlane,
        BranchName::F2OddSlit,
        BranchName::F3EvenDoublySlit,
        BranchName::LogZSquared,
        BranchName::LogSin,
        BranchName::CosSqrt,
        BranchName::Joukowski,
        BranchName::JoukowskiInverseDisk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BranchName::F1UpperHalfPlane => "f1_upper_half_plane",
            BranchName::F2OddSlit => "f2_odd_slit",
            BranchName::F3EvenDoublySlit => "f3_even_doubly_slit",
            BranchName::LogZSquared => "log_z_squared",
            BranchName::LogSin => "log_sin",
            BranchName::CosSqrt => "cos_sqrt",
            BranchName::Joukowski => "joukowski",
            BranchName::JoukowskiInverseDisk => "joukowski_inverse_disk",
        }
    }

    /// Short alias accepted on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            BranchName::F1UpperHalfPlane => "f1",
            BranchName::F2OddSlit => "f2",
            BranchName::F3EvenDoublySlit => "f3",
            BranchName::LogZSquared => "log_z2",
            BranchName::LogSin => "log_sin",
            BranchName::CosSqrt => "cos_sqrt",
            BranchName::Joukowski => "joukowski",
            BranchName::JoukowskiInverseDisk => "joukowski_inverse",
        }
    }

    pub fn eval(self, z: Complex) -> Result<Complex> {
        match self {
            BranchName::F1UpperHalfPlane => eval_f1(z),
            BranchName::F2OddSlit => eval_f2(z),
            BranchName::F3EvenDoublySlit => eval_f3(z),
            BranchName::LogZSquared => eval_log_z2(z),
            BranchName::LogSin => eval_log_sin(z),
            BranchName::CosSqrt => eval_cos_sqrt(z),
            BranchName::Joukowski => joukowski(z),
            BranchName::JoukowskiInverseDisk => joukowski_inverse_disk(z),
        }
    }
}

impl fmt::Display for BranchName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BranchName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().replace('-', "_").to_ascii_lowercase();
        BranchName::ALL
            .into_iter()
            .find(|b| b.name() == wanted || b.short_name() == wanted)
            .ok_or_else(|| Error::Usage(format!("unknown branch `{s}`")))
    }
}

/// A named branch together with the slit domain it lives on.
///
/// The upper half-plane of `f1` is not a slit plane; its tag carries
/// ℂ ∖ ℝ and the evaluator additionally rejects the lower half-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchTag {
    pub name: BranchName,
    pub domain: SlitDomain,
}

impl BranchTag {
    pub fn new(name: BranchName) -> Result<Self> {
        let one = Complex::new(1.0, 0.0);
        let zero = Complex::new(0.0, 0.0);
        let domain = match name {
            BranchName::F2OddSlit | BranchName::JoukowskiInverseDisk => {
                make_standard_domain(StandardDomain::SlitInterval, TAG_RADIUS)?
            }
            BranchName::F3EvenDoublySlit => make_standard_domain(StandardDomain::DoubleRay, TAG_RADIUS)?,
            BranchName::LogSin => make_standard_domain(StandardDomain::SineSlits, TAG_RADIUS)?,
            BranchName::LogZSquared => {
                SlitDomain::new(vec![SlitCurve::ray(zero, -one, TAG_RADIUS)?], Vec::new(), DEFAULT_CLEARANCE)?
            }
            BranchName::F1UpperHalfPlane => SlitDomain::new(
                vec![SlitCurve::ray(zero, one, TAG_RADIUS)?, SlitCurve::ray(zero, -one, TAG_RADIUS)?],
                Vec::new(),
                DEFAULT_CLEARANCE,
            )?,
            BranchName::CosSqrt => SlitDomain::new(Vec::new(), Vec::new(), DEFAULT_CLEARANCE)?,
            BranchName::Joukowski => SlitDomain::punctured(vec![zero])?,
        };
        Ok(Self { name, domain })
    }

    pub fn eval(&self, z: Complex) -> Result<Complex> {
        self.name.eval(z)
    }
}

fn distance_to_interval(z: Complex) -> f64 {
    let x = z.re.clamp(-1.0, 1.0);
    (z - x).norm()
}

fn distance_to_outer_rays(z: Complex) -> f64 {
    if z.re.abs() >= 1.0 {
        z.im.abs()
    } else {
        (z - 1.0).norm().min((z + 1.0).norm())
    }
}

fn distance_to_negative_axis(z: Complex) -> f64 {
    if z.re <= 0.0 {
        z.im.abs()
    } else {
        z.norm()
    }
}

fn require(z: Complex, distance: f64, what: &str) -> Result<()> {
    if distance > DEFAULT_CLEARANCE {
        Ok(())
    } else {
        Err(Error::Domain(format!("{z} is on or too close to the cut of {what}")))
    }
}

/// `√(1 − z²)` as a composite on the upper half-plane.
pub fn eval_f1(z: Complex) -> Result<Complex> {
    ensure_finite(z, "f1 argument")?;
    if z.im <= 0.0 {
        return Err(Error::Domain(format!("{z} is not in the upper half-plane")));
    }
    Ok(principal_sqrt(1.0 - z * z))
}

/// The odd branch of `√(1 − z²)` on ℂ ∖ [−1, 1], `−iz·√(1 − 1/z²)`.
pub fn eval_f2(z: Complex) -> Result<Complex> {
    ensure_finite(z, "f2 argument")?;
    require(z, distance_to_interval(z), "f2")?;
    Ok(-I * z * principal_sqrt(1.0 - (z * z).inv()))
}

/// The even branch of `√(1 − z²)` on ℂ ∖ ((−∞, −1] ∪ [1, ∞)).
pub fn eval_f3(z: Complex) -> Result<Complex> {
    ensure_finite(z, "f3 argument")?;
    require(z, distance_to_outer_rays(z), "f3")?;
    Ok(principal_sqrt(1.0 - z * z))
}

/// `2·log z`, a logarithm of `z²` on the plane slit along the negative axis.
pub fn eval_log_z2(z: Complex) -> Result<Complex> {
    ensure_finite(z, "log z² argument")?;
    require(z, distance_to_negative_axis(z), "log z²")?;
    Ok(2.0 * principal_log(z)?)
}

fn distance_to_sine_slits(z: Complex) -> f64 {
    let n = (z.re / PI).round();
    let foot = Complex::new(n * PI, 0.0);
    if z.im >= 0.0 {
        // the nearest upward ray is the one below or beside z
        (z.re - n * PI).abs()
    } else {
        (z - foot).norm()
    }
}

/// The path from π/2 used by [`eval_log_sin`]: along the real axis, dipping
/// below each zero `nπ` on a semicircle, then vertically to `z`.
pub fn log_sin_path(z: Complex) -> Result<PolyPath> {
    ensure_finite(z, "log sin argument")?;
    let r = LOG_SIN_DETOUR_RADIUS;
    let start = FRAC_PI_2;
    let target = z.re;
    let dir = if target >= start { 1.0 } else { -1.0 };
    let mut points = vec![Complex::new(start, 0.0)];

    // zeros whose detour window begins before the target
    let mut n = if dir > 0.0 { 1i64 } else { 0 };
    let mut landing = Complex::new(target, 0.0);
    loop {
        let zero = n as f64 * PI;
        let entry = zero - dir * r;
        if dir * (target - entry) <= 0.0 {
            break;
        }
        points.push(Complex::new(entry, 0.0));
        let offset = target - zero;
        if dir * offset < r {
            // target lies inside this detour window: stop on the semicircle
            let y = -(r * r - offset * offset).max(0.0).sqrt();
            let stop = Complex::new(target, y);
            let (from, to) = if dir > 0.0 { (PI, offset.atan2(y)) } else { (0.0, offset.atan2(y)) };
            let to = if dir > 0.0 && to < 0.0 { to + 2.0 * PI } else { to };
            push_arc(&mut points, zero, r, from, to, dir);
            landing = stop;
            break;
        }
        let (from, to) = if dir > 0.0 { (PI, 2.0 * PI) } else { (0.0, -PI) };
        push_arc(&mut points, zero, r, from, to, dir);
        n += dir as i64;
    }
    push_distinct(&mut points, landing);
    push_distinct(&mut points, z);
    PolyPath::open(points)
}

fn push_distinct(points: &mut Vec<Complex>, z: Complex) {
    if points.last().is_none_or(|p| (p - z).norm() > 1e-15) {
        points.push(z);
    }
}

fn push_arc(points: &mut Vec<Complex>, centre: f64, r: f64, from: f64, to: f64, _dir: f64) {
    let n = LOG_SIN_DETOUR_SAMPLES;
    for k in 1..=n {
        let t = from + (to - from) * k as f64 / n as f64;
        push_distinct(points, Complex::new(centre, 0.0) + Complex::from_polar(r, t));
    }
}

/// The logarithm of `sin` on the plane with upward slits from every `nπ`,
/// normalised to vanish at π/2.
pub fn eval_log_sin(z: Complex) -> Result<Complex> {
    ensure_finite(z, "log sin argument")?;
    require(z, distance_to_sine_slits(z), "log sin")?;
    if z == Complex::new(FRAC_PI_2, 0.0) {
        return Ok(Complex::new(0.0, 0.0));
    }
    let path = log_sin_path(z)?;
    let trace = continue_log(Complex::sin, &path, Complex::new(0.0, 0.0)).map_err(|e| match e {
        Error::Singularity { .. } | Error::Step { .. } => Error::Geometry(format!("log sin path failed: {e}")),
        other => other,
    })?;
    Ok(trace.terminal)
}

/// Hard cap on series terms; reached only when the sum overflows anyway.
const COS_SQRT_MAX_TERMS: usize = 4096;

/// The entire function `Σ (−z)ⁿ/(2n)!`.
pub fn eval_cos_sqrt(z: Complex) -> Result<Complex> {
    ensure_finite(z, "cos √z argument")?;
    let mut sum = Complex::new(1.0, 0.0);
    let mut term = Complex::new(1.0, 0.0);
    for n in 1..COS_SQRT_MAX_TERMS {
        let k = (2 * n) as f64;
        term *= -z / (k * (k - 1.0));
        if term.norm() < 1e-17 * (1.0 + sum.norm()) {
            return ensure_finite(sum, "cos √z");
        }
        sum += term;
    }
    Err(Error::Numeric(format!("cos √z series did not settle at {z}")))
}

/// `(z + 1/z)/2`.
pub fn joukowski(z: Complex) -> Result<Complex> {
    ensure_finite(z, "Joukowski argument")?;
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("Joukowski map is undefined at 0".into()));
    }
    Ok((z + z.inv()) * 0.5)
}

/// Inverse of the Joukowski map restricted to the punctured unit disk:
/// `c − i·f2(c)`.
///
/// Evaluated as `1/(c + i·f2(c))`, which is the same number because
/// `(c − i f2)(c + i f2) = c² + f2² = 1`, but avoids cancellation for large `c`.
pub fn joukowski_inverse_disk(c: Complex) -> Result<Complex> {
    let s = I * eval_f2(c)?;
    Ok((c + s).inv())
}

/// `ln|cos z|` without overflow, for growth estimates at large radii.
pub fn log_modulus_cos(z: Complex) -> f64 {
    // cos z = e^{∓iz}(1 + e^{±2iz})/2 with the dominant exponential factored out
    let y = z.im.abs();
    let small = if z.im >= 0.0 { (2.0 * I * z).exp() } else { (-2.0 * I * z).exp() };
    y - std::f64::consts::LN_2 + (1.0 + small).norm().ln()
}

/// Number of circle samples used for the maximum modulus.
pub const ORDER_SAMPLES: usize = 256;

/// Order of growth of `f` from `max |f|` on circles of the given radii.
pub fn estimate_order<F: Fn(Complex) -> Complex>(f: F, radii: &[f64]) -> Result<f64> {
    estimate_order_from_log_modulus(|z| f(z).norm().ln(), radii)
}

/// As [`estimate_order`], taking `ln|f|` directly so that `M(r)` may exceed
/// the floating-point range.
pub fn estimate_order_from_log_modulus<F: Fn(Complex) -> f64>(log_modulus: F, radii: &[f64]) -> Result<f64> {
    if radii.len() < 3 {
        return Err(Error::Usage("order estimate needs at least three radii".into()));
    }
    if radii.iter().any(|r| !(*r >= 10.0 && r.is_finite())) || radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Usage("radii must be increasing and at least 10".into()));
    }
    let mut xs = Vec::with_capacity(radii.len());
    let mut ys = Vec::with_capacity(radii.len());
    for &r in radii {
        let log_max = (0..ORDER_SAMPLES)
            .map(|k| log_modulus(Complex::from_polar(r, 2.0 * PI * k as f64 / ORDER_SAMPLES as f64)))
            .fold(f64::NEG_INFINITY, f64::max);
        if !log_max.is_finite() || log_max <= 0.0 {
            return Err(Error::Numeric(format!("max modulus at radius {r} is not above 1 (log = {log_max})")));
        }
        xs.push(r.ln());
        ys.push(log_max.ln());
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}
