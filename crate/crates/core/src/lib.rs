//! Branches of `√(1 − z²)` and related multivalued expressions, analytic
//! continuation with monodromy detection on slit domains, and quadrature
//! checks of the integral identities these branches satisfy.

pub mod branches;
pub mod complex;
pub mod continuation;
pub mod domain;
pub mod error;
pub mod geometry;
pub mod quadrature;
pub mod report;
pub mod route;
pub mod suite;

pub use branches::{BranchName, BranchTag};
pub use complex::{principal_arg, principal_log, principal_sqrt, Complex, Tolerance, I};
pub use continuation::{ContinuationTrace, EquationKind, Monodromy, NamedFunction, Parity};
pub use domain::{PolyPath, SlitCurve, SlitDomain, StandardDomain};
pub use error::{Error, Result};
pub use quadrature::{ContourSpec, Orientation, QuadratureRule};
pub use report::{VerificationRecord, VerificationReport};
pub use route::RouteOptions;
pub use suite::{SuiteConfig, SuiteKind};
