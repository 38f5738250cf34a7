//! JSON inputs accepted by the `continue`, `parity` and `plot` commands.

use mocposite::continuation::{continue_log, continue_sqrt, ContinuationTrace};
use mocposite::domain::make_standard_domain;
use mocposite::{principal_log, principal_sqrt, Complex, ContourSpec, EquationKind, NamedFunction, PolyPath};
use mocposite::{SlitDomain, StandardDomain};
use serde::{Deserialize, Serialize};

/// `{"equation": "sqrt", "function": "one_minus_square", "path": {...}, "seed": [re, im]}`.
///
/// Without a seed the principal root or logarithm at the path start is used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContinueRequest {
    pub equation: EquationKind,
    #[serde(default = "default_function")]
    pub function: NamedFunction,
    pub path: PolyPath,
    #[serde(default)]
    pub seed: Option<Complex>,
}

fn default_function() -> NamedFunction {
    NamedFunction::OneMinusSquare
}

impl ContinueRequest {
    pub fn seed(&self) -> mocposite::Result<Complex> {
        if let Some(seed) = self.seed {
            return Ok(seed);
        }
        let g = self.function.eval(self.path.start());
        match self.equation {
            EquationKind::Sqrt => Ok(principal_sqrt(g)),
            EquationKind::Log => principal_log(g),
        }
    }

    pub fn run(&self) -> mocposite::Result<ContinuationTrace> {
        let f = self.function;
        let seed = self.seed()?;
        match self.equation {
            EquationKind::Sqrt => continue_sqrt(|z| f.eval(z), &self.path, seed),
            EquationKind::Log => continue_log(|z| f.eval(z), &self.path, seed),
        }
    }
}

/// A domain given inline or by its gallery name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DomainInput {
    Named(StandardDomain),
    Explicit(SlitDomain),
}

fn default_radius() -> f64 {
    10.0
}

impl DomainInput {
    pub fn build(&self, radius: f64) -> mocposite::Result<SlitDomain> {
        match self {
            DomainInput::Named(kind) => make_standard_domain(*kind, radius),
            DomainInput::Explicit(domain) => Ok(domain.clone()),
        }
    }
}

/// `{"domain": "comb" | {...}, "z0": [re, im], "path": {...}?, "radius": 10}`.
///
/// Without a path one is routed inside the domain using the global seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParityRequest {
    pub domain: DomainInput,
    pub z0: Complex,
    #[serde(default)]
    pub path: Option<PolyPath>,
    #[serde(default = "default_radius")]
    pub radius: f64,
}

/// A domain alone, or a domain with paths drawn over it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DomainScene {
    Scene {
        domain: DomainInput,
        #[serde(default)]
        paths: Vec<PolyPath>,
        #[serde(default = "default_radius")]
        radius: f64,
    },
    Bare(SlitDomain),
}

impl DomainScene {
    pub fn build(&self) -> mocposite::Result<(SlitDomain, Vec<PolyPath>)> {
        match self {
            DomainScene::Scene { domain, paths, radius } => Ok((domain.build(*radius)?, paths.clone())),
            DomainScene::Bare(domain) => Ok((domain.clone(), Vec::new())),
        }
    }
}

/// A finished trace, or a request to compute one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TraceInput {
    Request(ContinueRequest),
    Trace(ContinuationTrace),
}

impl TraceInput {
    pub fn build(&self) -> mocposite::Result<(ContinuationTrace, EquationKind)> {
        match self {
            TraceInput::Request(request) => Ok((request.run()?, request.equation)),
            TraceInput::Trace(trace) => Ok((trace.clone(), EquationKind::Sqrt)),
        }
    }
}

/// One contour, a list of them, or a list over a domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ContourScene {
    Scene {
        contours: Vec<ContourSpec>,
        #[serde(default)]
        domain: Option<DomainInput>,
        #[serde(default = "default_radius")]
        radius: f64,
    },
    Many(Vec<ContourSpec>),
    One(ContourSpec),
}

impl ContourScene {
    pub fn build(&self) -> mocposite::Result<(Vec<ContourSpec>, Option<SlitDomain>)> {
        match self {
            ContourScene::Scene { contours, domain, radius } => {
                let domain = domain.as_ref().map(|d| d.build(*radius)).transpose()?;
                Ok((contours.clone(), domain))
            }
            ContourScene::Many(contours) => Ok((contours.clone(), None)),
            ContourScene::One(contour) => Ok((vec![*contour], None)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn requests_parse() {
        let r: ContinueRequest =
            serde_json::from_str(r#"{"equation":"sqrt","path":{"points":[[0,0],[0,2]],"closed":false}}"#).unwrap();
        assert_eq!(r.function, NamedFunction::OneMinusSquare);
        let t = r.run().unwrap();
        assert!((t.terminal - Complex::new(5f64.sqrt(), 0.0)).norm() < 1e-12);

        let p: ParityRequest = serde_json::from_str(r#"{"domain":"comb","z0":[0,3]}"#).unwrap();
        assert_eq!(p.domain, DomainInput::Named(StandardDomain::Comb));
        assert!(serde_json::from_str::<ParityRequest>(r#"{"domain":"comb","z0":[0,3],"extra":1}"#).is_err());
    }

    #[test]
    fn scenes_parse() {
        let bare = r#"{"slits":[{"samples":[[-1,0],[1,0]]}],"punctures":[],"clearance":1e-6}"#;
        let (d, paths) = serde_json::from_str::<DomainScene>(bare).unwrap().build().unwrap();
        assert_eq!(d.slits.len(), 1);
        assert!(paths.is_empty());
        let named = r#"{"domain":"double_ray","paths":[{"points":[[0,1],[0,-1]],"closed":false}]}"#;
        let (_, paths) = serde_json::from_str::<DomainScene>(named).unwrap().build().unwrap();
        assert_eq!(paths.len(), 1);

        let one = r#"{"kind":"circle","center":[0,0],"radius":2,"orientation":"ccw","samples":64}"#;
        assert_eq!(serde_json::from_str::<ContourScene>(one).unwrap().build().unwrap().0.len(), 1);
        let many = format!("[{one},{one}]");
        assert_eq!(serde_json::from_str::<ContourScene>(&many).unwrap().build().unwrap().0.len(), 2);
    }
}
