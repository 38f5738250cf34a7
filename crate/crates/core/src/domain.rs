//! Slit-plane domains, sampled paths and winding numbers.
//!
//! A [`SlitDomain`] is the plane minus finitely many polyline slits (each
//! optionally continued by an exact ray to infinity) and finitely many
//! punctures. Membership and path validity are decided by Euclidean distance
//! to that excluded set against the domain's clearance.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{ensure_finite, principal_arg, Complex};
use crate::error::{Error, Result};
use crate::geometry::{point_ray_distance, point_segment_distance, segment_ray_distance, segment_segment_distance};

pub const DEFAULT_CLEARANCE: f64 = 1e-6;

/// A slit: a polyline, optionally extended to infinity from its last sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSlit", into = "RawSlit")]
pub struct SlitCurve {
    samples: Vec<Complex>,
    unbounded_tail: Option<Complex>,
}

#[derive(Serialize, Deserialize)]
struct RawSlit {
    samples: Vec<Complex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tail: Option<Complex>,
}

impl TryFrom<RawSlit> for SlitCurve {
    type Error = Error;

    fn try_from(raw: RawSlit) -> Result<Self> {
        SlitCurve::new(raw.samples, raw.tail)
    }
}

impl From<SlitCurve> for RawSlit {
    fn from(s: SlitCurve) -> Self {
        RawSlit { samples: s.samples, tail: s.unbounded_tail }
    }
}

impl SlitCurve {
    pub fn new(samples: Vec<Complex>, unbounded_tail: Option<Complex>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::Usage("a slit needs at least two samples".into()));
        }
        for z in &samples {
            ensure_finite(*z, "slit sample")?;
        }
        if samples.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Usage("consecutive slit samples must be distinct".into()));
        }
        if let Some(dir) = unbounded_tail {
            ensure_finite(dir, "slit tail")?;
            if (dir.norm() - 1.0).abs() > 1e-12 {
                return Err(Error::Usage(format!("slit tail {dir} is not a unit vector")));
            }
        }
        Ok(Self { samples, unbounded_tail })
    }

    pub fn segment(a: Complex, b: Complex) -> Result<Self> {
        Self::new(vec![a, b], None)
    }

    /// Segment from `start` to `start + length·direction`, continued to infinity.
    pub fn ray(start: Complex, direction: Complex, truncated_length: f64) -> Result<Self> {
        let dir = direction / direction.norm();
        Self::new(vec![start, start + dir * truncated_length], Some(dir))
    }

    pub fn samples(&self) -> &[Complex] {
        &self.samples
    }

    pub fn unbounded_tail(&self) -> Option<Complex> {
        self.unbounded_tail
    }

    fn last(&self) -> Complex {
        self.samples[self.samples.len() - 1]
    }

    pub fn negated(&self) -> Self {
        Self { samples: self.samples.iter().map(|z| -z).collect(), unbounded_tail: self.unbounded_tail.map(|d| -d) }
    }

    pub fn distance_to_point(&self, z: Complex) -> f64 {
        let mut d =
            self.samples.windows(2).map(|w| point_segment_distance(z, w[0], w[1])).fold(f64::INFINITY, f64::min);
        if let Some(dir) = self.unbounded_tail {
            d = d.min(point_ray_distance(z, self.last(), dir));
        }
        d
    }

    pub fn distance_to_segment(&self, a: Complex, b: Complex) -> f64 {
        let mut d =
            self.samples.windows(2).map(|w| segment_segment_distance(a, b, w[0], w[1])).fold(f64::INFINITY, f64::min);
        if let Some(dir) = self.unbounded_tail {
            d = d.min(segment_ray_distance(a, b, self.last(), dir));
        }
        d
    }
}

/// The plane minus slits and punctures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDomain")]
pub struct SlitDomain {
    pub slits: Vec<SlitCurve>,
    #[serde(default)]
    pub punctures: Vec<Complex>,
    pub clearance: f64,
}

#[derive(Deserialize)]
struct RawDomain {
    slits: Vec<SlitCurve>,
    #[serde(default)]
    punctures: Vec<Complex>,
    #[serde(default = "default_clearance")]
    clearance: f64,
}

fn default_clearance() -> f64 {
    DEFAULT_CLEARANCE
}

impl TryFrom<RawDomain> for SlitDomain {
    type Error = Error;

    fn try_from(raw: RawDomain) -> Result<Self> {
        SlitDomain::new(raw.slits, raw.punctures, raw.clearance)
    }
}

impl SlitDomain {
    pub fn new(slits: Vec<SlitCurve>, punctures: Vec<Complex>, clearance: f64) -> Result<Self> {
        if !(clearance > 0.0 && clearance.is_finite()) {
            return Err(Error::Usage(format!("clearance must be positive, got {clearance}")));
        }
        for p in &punctures {
            ensure_finite(*p, "puncture")?;
        }
        Ok(Self { slits, punctures, clearance })
    }

    /// The whole plane minus the given points.
    pub fn punctured(punctures: Vec<Complex>) -> Result<Self> {
        Self::new(Vec::new(), punctures, DEFAULT_CLEARANCE)
    }

    pub fn with_clearance(mut self, clearance: f64) -> Result<Self> {
        if !(clearance > 0.0 && clearance.is_finite()) {
            return Err(Error::Usage(format!("clearance must be positive, got {clearance}")));
        }
        self.clearance = clearance;
        Ok(self)
    }

    /// Distance from `z` to the excluded set (infinite for the whole plane).
    pub fn distance_to_excluded(&self, z: Complex) -> f64 {
        let slits = self.slits.iter().map(|s| s.distance_to_point(z));
        let punctures = self.punctures.iter().map(|p| (z - p).norm());
        slits.chain(punctures).fold(f64::INFINITY, f64::min)
    }

    pub fn segment_distance_to_excluded(&self, a: Complex, b: Complex) -> f64 {
        let slits = self.slits.iter().map(|s| s.distance_to_segment(a, b));
        let punctures = self.punctures.iter().map(|p| point_segment_distance(*p, a, b));
        slits.chain(punctures).fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, z: Complex) -> bool {
        crate::complex::is_finite(z) && self.distance_to_excluded(z) > self.clearance
    }

    /// Checks that every sample and every segment of `path` keeps clearance.
    pub fn check_path(&self, path: &PolyPath) -> Result<()> {
        for (a, b) in path.segments() {
            let d = self.segment_distance_to_excluded(a, b);
            if d <= self.clearance {
                return Err(Error::Geometry(format!(
                    "segment {a} -> {b} comes within {d:e} of the excluded set (clearance {:e})",
                    self.clearance
                )));
            }
        }
        Ok(())
    }

    /// Finite sample points, used for bounding boxes and plotting.
    pub fn finite_points(&self) -> impl Iterator<Item = Complex> + '_ {
        self.slits.iter().flat_map(|s| s.samples.iter().copied()).chain(self.punctures.iter().copied())
    }
}

/// An ordered sampled path; a closed path joins its last point to its first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct PolyPath {
    points: Vec<Complex>,
    closed: bool,
}

#[derive(Deserialize)]
struct RawPath {
    points: Vec<Complex>,
    #[serde(default)]
    closed: bool,
}

impl TryFrom<RawPath> for PolyPath {
    type Error = Error;

    fn try_from(raw: RawPath) -> Result<Self> {
        PolyPath::new(raw.points, raw.closed)
    }
}

impl PolyPath {
    /// A closed path whose last point repeats the first drops the repeat.
    pub fn new(mut points: Vec<Complex>, closed: bool) -> Result<Self> {
        for z in &points {
            ensure_finite(*z, "path point")?;
        }
        if closed && points.len() > 2 && points.first() == points.last() {
            points.pop();
        }
        if points.len() < 2 {
            return Err(Error::Usage("a path needs at least two points".into()));
        }
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Usage("consecutive path points must be distinct".into()));
        }
        Ok(Self { points, closed })
    }

    pub fn open(points: Vec<Complex>) -> Result<Self> {
        Self::new(points, false)
    }

    pub fn closed(points: Vec<Complex>) -> Result<Self> {
        Self::new(points, true)
    }

    /// Closed circle starting at `center + radius`.
    pub fn circle(center: Complex, radius: f64, samples: usize, counterclockwise: bool) -> Result<Self> {
        let sign = if counterclockwise { 1.0 } else { -1.0 };
        let points = (0..samples)
            .map(|k| center + Complex::from_polar(radius, sign * TAU * k as f64 / samples as f64))
            .collect();
        Self::closed(points)
    }

    /// Open arc of `samples + 1` points from angle `from` to angle `to`.
    pub fn arc(center: Complex, radius: f64, from: f64, to: f64, samples: usize) -> Result<Self> {
        let points = (0..=samples)
            .map(|k| center + Complex::from_polar(radius, from + (to - from) * k as f64 / samples as f64))
            .collect();
        Self::open(points)
    }

    pub fn points(&self) -> &[Complex] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn start(&self) -> Complex {
        self.points[0]
    }

    /// Where traversal ends: the start for closed paths.
    pub fn end(&self) -> Complex {
        if self.closed {
            self.points[0]
        } else {
            self.points[self.points.len() - 1]
        }
    }

    /// Segments in traversal order, including the closing one.
    pub fn segments(&self) -> impl Iterator<Item = (Complex, Complex)> + '_ {
        let closing = self.closed.then(|| (self.points[self.points.len() - 1], self.points[0]));
        self.points.windows(2).map(|w| (w[0], w[1])).chain(closing)
    }

    /// Points in traversal order, with the start repeated at the end of a closed path.
    pub fn traversal(&self) -> Vec<Complex> {
        let mut pts = self.points.clone();
        if self.closed {
            pts.push(self.points[0]);
        }
        pts
    }

    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        if self.closed {
            points[1..].reverse();
        } else {
            points.reverse();
        }
        Self { points, closed: self.closed }
    }

    /// Inserts `factor - 1` evenly spaced points inside every segment.
    pub fn refined(&self, factor: usize) -> Self {
        let factor = factor.max(1);
        let mut points = Vec::with_capacity(self.points.len() * factor + 1);
        for (a, b) in self.segments() {
            for j in 0..factor {
                points.push(a + (b - a) * (j as f64 / factor as f64));
            }
        }
        if !self.closed {
            points.push(self.end());
        }
        Self { points, closed: self.closed }
    }

    /// Open concatenation; `other` must start where `self` ends.
    pub fn concat(&self, other: &PolyPath) -> Result<Self> {
        if (self.end() - other.start()).norm() > 1e-12 {
            return Err(Error::Usage("concatenated paths must meet end to start".into()));
        }
        let mut points = self.traversal();
        points.extend(other.traversal().into_iter().skip(1));
        Self::open(points)
    }

    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| (b - a).norm()).sum()
    }
}

/// Winding number of a closed path about `p`, with the default clearance.
pub fn winding_number(path: &PolyPath, p: Complex) -> Result<i64> {
    winding_number_with_clearance(path, p, DEFAULT_CLEARANCE)
}

/// Sums principal-argument increments of `z - p` over the segments, bisecting
/// any segment whose increment exceeds π/2.
pub fn winding_number_with_clearance(path: &PolyPath, p: Complex, clearance: f64) -> Result<i64> {
    if !path.is_closed() {
        return Err(Error::Usage("winding number needs a closed path".into()));
    }
    ensure_finite(p, "winding centre")?;
    let mut total = 0.0;
    for (a, b) in path.segments() {
        let d = point_segment_distance(p, a, b);
        if d <= clearance {
            return Err(Error::Geometry(format!("path passes within {d:e} of {p}")));
        }
        total += argument_increment(a - p, b - p, 0)?;
    }
    let turns = total / TAU;
    let rounded = turns.round();
    if (turns - rounded).abs() > 1e-6 {
        return Err(Error::Consistency(format!("non-integral winding {turns}")));
    }
    Ok(rounded as i64)
}

fn argument_increment(u: Complex, v: Complex, depth: u32) -> Result<f64> {
    let inc = principal_arg(v / u)?;
    if inc.abs() <= PI / 2.0 || depth >= 60 {
        return Ok(inc);
    }
    let mid = (u + v) * 0.5;
    Ok(argument_increment(u, mid, depth + 1)? + argument_increment(mid, v, depth + 1)?)
}

/// Whether a branch of `√g` can exist as far as the probe loops witness.
///
/// `branch_points` pairs each zero of `g` with its multiplicity. Returns false
/// as soon as one loop has an odd multiplicity-weighted winding sum.
pub fn sqrt_branch_obstruction(
    domain: &SlitDomain,
    branch_points: &[(Complex, i64)],
    probe_loops: &[PolyPath],
) -> Result<bool> {
    for probe in probe_loops {
        if let Some(z) = probe.points().iter().find(|z| !domain.contains(**z)) {
            return Err(Error::Geometry(format!("probe loop leaves the domain at {z}")));
        }
        domain.check_path(probe)?;
        let mut sum = 0i64;
        for (point, multiplicity) in branch_points {
            sum += multiplicity * winding_number_with_clearance(probe, *point, domain.clearance)?;
        }
        if sum.rem_euclid(2) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Named domains from the standard gallery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StandardDomain {
    /// ℂ ∖ [−1, 1].
    SlitInterval,
    /// ℂ ∖ ((−∞, −1] ∪ [1, ∞)).
    DoubleRay,
    /// Nested rectangular combs from ±1 towards the origin plus a vertical slit.
    Comb,
    /// Two interleaved spirals from ±1.
    DoubleSpiral,
    /// Upward vertical rays from every nπ.
    SineSlits,
}

impl StandardDomain {
    pub const ALL: [StandardDomain; 5] = [
        StandardDomain::SlitInterval,
        StandardDomain::DoubleRay,
        StandardDomain::Comb,
        StandardDomain::DoubleSpiral,
        StandardDomain::SineSlits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardDomain::SlitInterval => "slit_interval",
            StandardDomain::DoubleRay => "double_ray",
            StandardDomain::Comb => "comb",
            StandardDomain::DoubleSpiral => "double_spiral",
            StandardDomain::SineSlits => "sine_slits",
        }
    }
}

impl fmt::Display for StandardDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StandardDomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().replace('-', "_").to_ascii_lowercase();
        StandardDomain::ALL
            .into_iter()
            .find(|k| k.name() == wanted)
            .ok_or_else(|| Error::Usage(format!("unknown domain kind `{s}`")))
    }
}

/// Shape parameters for the comb and spiral domains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExoticParams {
    /// Number of comb scales 1, 1/2, 1/4, ...
    pub comb_levels: u32,
    pub comb_height: f64,
    /// Join the innermost tooth to the origin so both combs meet the vertical slit.
    pub comb_close_to_origin: bool,
    /// Spiral radius is `1 + spiral_growth·t` at angle `t`.
    pub spiral_growth: f64,
    pub spiral_t_max: f64,
    pub spiral_samples: usize,
    /// Continue each spiral radially to infinity from its last sample.
    pub spiral_tail: bool,
}

impl Default for ExoticParams {
    fn default() -> Self {
        Self {
            comb_levels: 6,
            comb_height: 2.0,
            comb_close_to_origin: true,
            spiral_growth: 0.1,
            spiral_t_max: 11.0,
            spiral_samples: 111,
            spiral_tail: true,
        }
    }
}

pub fn make_standard_domain(kind: StandardDomain, truncation_radius: f64) -> Result<SlitDomain> {
    make_standard_domain_with(kind, truncation_radius, &ExoticParams::default())
}

pub fn make_standard_domain_with(
    kind: StandardDomain,
    truncation_radius: f64,
    params: &ExoticParams,
) -> Result<SlitDomain> {
    if !(truncation_radius >= 4.0 && truncation_radius.is_finite()) {
        return Err(Error::Usage(format!("truncation radius must be at least 4, got {truncation_radius}")));
    }
    let one = Complex::new(1.0, 0.0);
    let slits = match kind {
        StandardDomain::SlitInterval => vec![SlitCurve::segment(-one, one)?],
        StandardDomain::DoubleRay => vec![
            SlitCurve::ray(one, one, truncation_radius - 1.0)?,
            SlitCurve::ray(-one, -one, truncation_radius - 1.0)?,
        ],
        StandardDomain::Comb => comb_slits(params)?,
        StandardDomain::DoubleSpiral => {
            let spiral = spiral_slit(params)?;
            vec![spiral.negated(), spiral]
        }
        StandardDomain::SineSlits => {
            let n_max = (truncation_radius / PI).floor() as i64;
            (-n_max..=n_max)
                .map(|n| SlitCurve::ray(Complex::new(n as f64 * PI, 0.0), Complex::new(0.0, 1.0), truncation_radius))
                .collect::<Result<_>>()?
        }
    };
    SlitDomain::new(slits, Vec::new(), DEFAULT_CLEARANCE)
}

fn comb_slits(params: &ExoticParams) -> Result<Vec<SlitCurve>> {
    let h = params.comb_height;
    let mut right = Vec::new();
    for level in 0..params.comb_levels {
        let x = 0.5f64.powi(level as i32);
        // each tooth ends where the next, half-size tooth starts
        if level == 0 {
            right.push(Complex::new(x, 0.0));
        }
        right.extend([
            Complex::new(x, h),
            Complex::new(0.75 * x, h),
            Complex::new(0.75 * x, 0.0),
            Complex::new(0.5 * x, 0.0),
        ]);
    }
    if params.comb_close_to_origin {
        right.push(Complex::new(0.0, 0.0));
    }
    let right = SlitCurve::new(right, None)?;
    let spine = SlitCurve::segment(Complex::new(0.0, -h), Complex::new(0.0, h))?;
    Ok(vec![spine, right.negated(), right])
}

fn spiral_slit(params: &ExoticParams) -> Result<SlitCurve> {
    let n = params.spiral_samples.max(2);
    let samples: Vec<Complex> = (0..n)
        .map(|k| {
            let t = params.spiral_t_max * k as f64 / (n - 1) as f64;
            Complex::from_polar(1.0 + params.spiral_growth * t, t)
        })
        .collect();
    let tail = params.spiral_tail.then(|| Complex::from_polar(1.0, params.spiral_t_max));
    SlitCurve::new(samples, tail)
}
