use thiserror::Error;

use crate::complex::Complex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the domain of the requested branch or operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed request: wrong path kind, bad seed, unknown name.
    #[error("usage error: {0}")]
    Usage(String),
    /// A point or path violates the clearance of an excluded set.
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("continuation hit a near-zero of g at {at} (|g| = {modulus:e})")]
    Singularity { at: Complex, modulus: f64 },
    #[error("step refinement exceeded depth {depth} near {at}")]
    Step { at: Complex, depth: u32 },
    #[error("ambiguous root choice near {at}")]
    Ambiguity { at: Complex },
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("consistency error: {0}")]
    Consistency(String),
}
