//! Analytic continuation of solutions of `w² = g(z)` and `e^w = g(z)` along
//! polygonal paths, with adaptive bisection and monodromy bookkeeping.
//!
//! A square-root step from `(z_a, w_a)` to `z_b` takes the root of `g(z_b)`
//! nearer to `w_a` and is accepted only when the jump is below `0.8·|w_a|`.
//! Since the rival root `-w_b` then sits at distance at least
//! `2|w_a| - |w_b - w_a| > 1.2|w_a|`, an accepted choice is never ambiguous.
//! The same gate is also applied through the segment midpoint, so a long
//! straight segment cannot skip over a region where `g` winds around zero.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{ensure_finite, nearest_turns, principal_log, principal_sqrt, Complex, I};
use crate::domain::{PolyPath, SlitDomain};
use crate::error::{Error, Result};

pub const MAX_DEPTH: u32 = 40;
pub const STEP_GATE: f64 = 0.8;
/// `|g|` at or below this is treated as hitting a zero of `g`.
pub const SINGULAR_MODULUS: f64 = 1e-12;
/// Relative tolerance for seeds and for comparing terminal values.
pub const SEED_RTOL: f64 = 1e-8;
const LOG_RATIO_GATE: f64 = 0.5;

/// Samples `(z, w)` along a continuation, in path order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContinuationTrace {
    pub samples: Vec<(Complex, Complex)>,
    pub terminal: Complex,
    /// Number of segment bisections performed.
    pub refinements: u64,
}

/// What a closed loop does to the continued value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Monodromy {
    /// The square root comes back multiplied by `sign`.
    SqrtSign { sign: i8 },
    /// The logarithm comes back shifted by `2πi·offset_multiple`.
    LogOffset { offset_multiple: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationKind {
    Sqrt,
    Log,
}

impl FromStr for EquationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sqrt" => Ok(EquationKind::Sqrt),
            "log" => Ok(EquationKind::Log),
            other => Err(Error::Usage(format!("unknown equation kind `{other}`"))),
        }
    }
}

/// Right-hand sides with names, for callers that pick `g` at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedFunction {
    Identity,
    Square,
    OneMinusSquare,
    Sin,
}

impl NamedFunction {
    pub const ALL: [NamedFunction; 4] =
        [NamedFunction::Identity, NamedFunction::Square, NamedFunction::OneMinusSquare, NamedFunction::Sin];

    pub fn eval(self, z: Complex) -> Complex {
        match self {
            NamedFunction::Identity => z,
            NamedFunction::Square => z * z,
            NamedFunction::OneMinusSquare => one_minus_square(z),
            NamedFunction::Sin => z.sin(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedFunction::Identity => "identity",
            NamedFunction::Square => "square",
            NamedFunction::OneMinusSquare => "one_minus_square",
            NamedFunction::Sin => "sin",
        }
    }
}

impl FromStr for NamedFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().replace('-', "_").to_ascii_lowercase();
        NamedFunction::ALL
            .into_iter()
            .find(|f| f.name() == wanted)
            .ok_or_else(|| Error::Usage(format!("unknown function `{s}`")))
    }
}

pub fn one_minus_square(z: Complex) -> Complex {
    1.0 - z * z
}

fn eval_nonzero<G: Fn(Complex) -> Complex>(g: &G, z: Complex) -> Result<Complex> {
    let v = ensure_finite(g(z), "g(z)")?;
    let modulus = v.norm();
    if modulus <= SINGULAR_MODULUS {
        return Err(Error::Singularity { at: z, modulus });
    }
    Ok(v)
}

fn nearer_root(prev: Complex, gz: Complex) -> Complex {
    let r = principal_sqrt(gz);
    if (r - prev).norm() <= (r + prev).norm() {
        r
    } else {
        -r
    }
}

fn gate(new: Complex, old: Complex) -> bool {
    (new - old).norm() < STEP_GATE * old.norm()
}

struct SqrtWalker<'g, G> {
    g: &'g G,
    samples: Vec<(Complex, Complex)>,
    refinements: u64,
}

impl<G: Fn(Complex) -> Complex> SqrtWalker<'_, G> {
    fn advance(&mut self, za: Complex, wa: Complex, zb: Complex, depth: u32) -> Result<Complex> {
        let gb = eval_nonzero(self.g, zb)?;
        let zm = (za + zb) * 0.5;
        let gm = eval_nonzero(self.g, zm)?;
        let wb = nearer_root(wa, gb);
        let wm = nearer_root(wa, gm);
        let wb_via_mid = nearer_root(wm, gb);
        let same_sheet = (wb_via_mid - wb).norm() < (wb_via_mid + wb).norm();
        if gate(wb, wa) && gate(wm, wa) && gate(wb_via_mid, wm) && same_sheet {
            self.samples.push((zb, wb));
            return Ok(wb);
        }
        if depth >= MAX_DEPTH {
            let r = principal_sqrt(gb);
            if ((r - wa).norm() - (r + wa).norm()).abs() <= 1e-12 {
                return Err(Error::Ambiguity { at: zb });
            }
            return Err(Error::Step { at: zb, depth });
        }
        self.refinements += 1;
        let wm = self.advance(za, wa, zm, depth + 1)?;
        self.advance(zm, wm, zb, depth + 1)
    }
}

/// Continues a root of `w² = g(z)` from `w0` at the start of `path`.
pub fn continue_sqrt<G: Fn(Complex) -> Complex>(g: G, path: &PolyPath, w0: Complex) -> Result<ContinuationTrace> {
    ensure_finite(w0, "seed")?;
    let z0 = path.start();
    let g0 = eval_nonzero(&g, z0)?;
    if (w0 * w0 - g0).norm() > SEED_RTOL * g0.norm() {
        return Err(Error::Usage(format!("seed {w0} does not square to g({z0}) = {g0}")));
    }
    let mut walker = SqrtWalker { g: &g, samples: vec![(z0, w0)], refinements: 0 };
    let mut w = w0;
    for (za, zb) in path.segments() {
        w = walker.advance(za, w, zb, 0)?;
    }
    Ok(ContinuationTrace { samples: walker.samples, terminal: w, refinements: walker.refinements })
}

struct LogWalker<'g, G> {
    g: &'g G,
    samples: Vec<(Complex, Complex)>,
    refinements: u64,
}

impl<G: Fn(Complex) -> Complex> LogWalker<'_, G> {
    fn advance(
        &mut self,
        za: Complex,
        ga: Complex,
        ua: Complex,
        zb: Complex,
        depth: u32,
    ) -> Result<(Complex, Complex)> {
        let gb = eval_nonzero(self.g, zb)?;
        let zm = (za + zb) * 0.5;
        let gm = eval_nonzero(self.g, zm)?;
        let small = |r: Complex| (r - 1.0).norm() < LOG_RATIO_GATE;
        if small(gb / ga) && small(gm / ga) && small(gb / gm) {
            // re-anchor on the principal log so rounding does not accumulate
            let principal = principal_log(gb)?;
            let stepped = ua + principal_log(gb / ga)?;
            let ub = principal + I * (TAU * nearest_turns(stepped - principal) as f64);
            self.samples.push((zb, ub));
            return Ok((gb, ub));
        }
        if depth >= MAX_DEPTH {
            return Err(Error::Step { at: zb, depth });
        }
        self.refinements += 1;
        let (gm, um) = self.advance(za, ga, ua, zm, depth + 1)?;
        self.advance(zm, gm, um, zb, depth + 1)
    }
}

/// Continues a logarithm of `g` (a solution of `e^u = g(z)`) from `u0`.
pub fn continue_log<G: Fn(Complex) -> Complex>(g: G, path: &PolyPath, u0: Complex) -> Result<ContinuationTrace> {
    ensure_finite(u0, "seed")?;
    let z0 = path.start();
    let g0 = eval_nonzero(&g, z0)?;
    if (u0.exp() - g0).norm() > SEED_RTOL * g0.norm() {
        return Err(Error::Usage(format!("seed {u0} is not a logarithm of g({z0}) = {g0}")));
    }
    let mut walker = LogWalker { g: &g, samples: vec![(z0, u0)], refinements: 0 };
    let (mut gz, mut u) = (g0, u0);
    for (za, zb) in path.segments() {
        (gz, u) = walker.advance(za, gz, u, zb, 0)?;
    }
    Ok(ContinuationTrace { samples: walker.samples, terminal: u, refinements: walker.refinements })
}

/// Runs the matching continuation once around `lp` and reports the monodromy.
pub fn monodromy_of_loop<G: Fn(Complex) -> Complex>(
    kind: EquationKind,
    g: G,
    lp: &PolyPath,
    seed: Complex,
) -> Result<Monodromy> {
    if !lp.is_closed() {
        return Err(Error::Usage("monodromy needs a closed loop".into()));
    }
    match kind {
        EquationKind::Sqrt => {
            let trace = continue_sqrt(g, lp, seed)?;
            let sign = if (trace.terminal - seed).norm() <= SEED_RTOL * seed.norm() { 1 } else { -1 };
            Ok(Monodromy::SqrtSign { sign })
        }
        EquationKind::Log => {
            let trace = continue_log(g, lp, seed)?;
            let offset = trace.terminal - seed;
            let k = nearest_turns(offset);
            let residual = (offset - I * (TAU * k as f64)).norm();
            if residual >= 1e-6 {
                return Err(Error::Consistency(format!("loop offset {offset} is not a multiple of 2πi")));
            }
            Ok(Monodromy::LogOffset { offset_multiple: k })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
    Inconsistent,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
            Parity::Inconsistent => "inconsistent",
        })
    }
}

/// Classifies `√(1 − z²)` on `domain` by continuing from `z0` to `-z0`.
pub fn parity_probe(domain: &SlitDomain, z0: Complex, path_to_negation: &PolyPath) -> Result<Parity> {
    ensure_finite(z0, "probe point")?;
    parity_probe_with_seed(domain, z0, path_to_negation, principal_sqrt(one_minus_square(z0)))
}

/// As [`parity_probe`] with an explicit seed root. Negating the seed negates
/// every continued value including the terminal one, so the ratio
/// `terminal / seed` and hence the classification do not depend on it.
pub fn parity_probe_with_seed(
    domain: &SlitDomain,
    z0: Complex,
    path_to_negation: &PolyPath,
    w0: Complex,
) -> Result<Parity> {
    for z in [z0, -z0] {
        if !domain.contains(z) {
            return Err(Error::Geometry(format!("{z} is not in the domain")));
        }
    }
    let scale = 1e-12 * (1.0 + z0.norm());
    if (path_to_negation.start() - z0).norm() > scale || (path_to_negation.end() + z0).norm() > scale {
        return Err(Error::Usage("parity path must run from z0 to -z0".into()));
    }
    domain.check_path(path_to_negation)?;
    let trace = continue_sqrt(one_minus_square, path_to_negation, w0)?;
    let tol = SEED_RTOL * w0.norm();
    Ok(if (trace.terminal + w0).norm() <= tol {
        Parity::Odd
    } else if (trace.terminal - w0).norm() <= tol {
        Parity::Even
    } else {
        Parity::Inconsistent
    })
}
