//! JSON function specs and their translation to library oracles.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use submodular::setfn::Explicit;
use submodular::transforms;
use submodular::zoo::{
    ConcaveCardinality, ConcaveFn, CoverFunction, CoverSystem, CutFunction, Digraph, FlowFunction,
    FlowNetwork, GraphicMatroid, LinearMatroid, LogDet, PsdMatrix, WeightedConcave,
};
use submodular::{Result, SharedFn, Subset};

/// A set function described by its family and parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionSpec {
    /// Table of `2^p` values indexed by bitmask.
    Explicit { values: Vec<f64> },
    /// Weight of arcs leaving `A`; `symmetric` adds each arc in both directions.
    Cut {
        nodes: usize,
        arcs: Vec<(usize, usize, f64)>,
        #[serde(default)]
        symmetric: bool,
    },
    Cover { p: usize, groups: Vec<Group> },
    /// `g(|A|)` from the table `g(0..=p)`.
    CardConcave { values: Vec<f64> },
    WeightedConcave { weights: Vec<f64>, g: Concave },
    Logdet { matrix: Vec<Vec<f64>> },
    Flow {
        nodes: usize,
        sources: Vec<usize>,
        sinks: Vec<usize>,
        arcs: Vec<(usize, usize, f64)>,
    },
    GraphicMatroid { vertices: usize, edges: Vec<(usize, usize)> },
    LinearMatroid {
        rows: Vec<Vec<f64>>,
        #[serde(default = "default_rank_tol")]
        tol: f64,
    },
    Transform(Transform),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Group {
    pub elements: Vec<usize>,
    pub weight: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Concave {
    Sqrt,
    Log1p,
    MinCap(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Transform {
    Restrict { set: Vec<usize>, inner: Box<FunctionSpec> },
    Contract { set: Vec<usize>, inner: Box<FunctionSpec> },
    /// Minimizes out the listed elements of the inner ground set.
    PartialMin { hidden: Vec<usize>, inner: Box<FunctionSpec> },
    Monotonize { inner: Box<FunctionSpec> },
    ConvolveModular { z: Vec<f64>, inner: Box<FunctionSpec> },
    AddModular { s: Vec<f64>, inner: Box<FunctionSpec> },
    Scale { lambda: f64, inner: Box<FunctionSpec> },
    Sum { parts: Vec<FunctionSpec> },
}

fn default_rank_tol() -> f64 {
    LinearMatroid::DEFAULT_TOL
}

fn subset(ix: &[usize]) -> Result<Subset> {
    match ix.iter().find(|&&k| k >= submodular::setfn::MAX_GROUND) {
        Some(k) => Err(submodular::Error::InvalidArgument(format!("element {k} out of range"))),
        None => Ok(Subset::from_indices(ix.iter().copied())),
    }
}

impl FunctionSpec {
    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn build(&self) -> Result<SharedFn> {
        Ok(match self {
            FunctionSpec::Explicit { values } => Arc::new(Explicit::new(values.clone())?),
            FunctionSpec::Cut { nodes, arcs, symmetric } => {
                let g = if *symmetric {
                    Digraph::undirected(*nodes, arcs)?
                } else {
                    Digraph::new(*nodes, arcs)?
                };
                Arc::new(CutFunction::new(g))
            }
            FunctionSpec::Cover { p, groups } => {
                let groups = groups
                    .iter()
                    .map(|g| Ok((subset(&g.elements)?, g.weight)))
                    .collect::<Result<Vec<_>>>()?;
                Arc::new(CoverFunction::new(CoverSystem::new(*p, groups)?))
            }
            FunctionSpec::CardConcave { values } => Arc::new(ConcaveCardinality::new(values.clone())?),
            FunctionSpec::WeightedConcave { weights, g } => {
                let g = match *g {
                    Concave::Sqrt => ConcaveFn::Sqrt,
                    Concave::Log1p => ConcaveFn::Log1p,
                    Concave::MinCap(c) => ConcaveFn::MinCap(c),
                };
                Arc::new(WeightedConcave::new(weights.clone(), g)?)
            }
            FunctionSpec::Logdet { matrix } => Arc::new(LogDet::new(PsdMatrix::from_rows(matrix)?)),
            FunctionSpec::Flow { nodes, sources, sinks, arcs } => Arc::new(FlowFunction::new(
                FlowNetwork::new(*nodes, sources.clone(), sinks.clone(), arcs.clone())?,
            )),
            FunctionSpec::GraphicMatroid { vertices, edges } => {
                Arc::new(GraphicMatroid::new(*vertices, edges.clone())?)
            }
            FunctionSpec::LinearMatroid { rows, tol } => Arc::new(LinearMatroid::new(rows, *tol)?),
            FunctionSpec::Transform(t) => t.build()?,
        })
    }
}

impl Transform {
    fn build(&self) -> Result<SharedFn> {
        Ok(match self {
            Transform::Restrict { set, inner } => Arc::new(transforms::restrict(inner.build()?, subset(set)?)?),
            Transform::Contract { set, inner } => Arc::new(transforms::contract(inner.build()?, subset(set)?)?),
            Transform::PartialMin { hidden, inner } => {
                Arc::new(transforms::partial_min(inner.build()?, subset(hidden)?)?)
            }
            Transform::Monotonize { inner } => Arc::new(transforms::monotonize(inner.build()?)?),
            Transform::ConvolveModular { z, inner } => {
                Arc::new(transforms::convolve_modular(inner.build()?, z.clone())?)
            }
            Transform::AddModular { s, inner } => Arc::new(transforms::add_modular(inner.build()?, s.clone())?),
            Transform::Scale { lambda, inner } => Arc::new(transforms::scale(inner.build()?, *lambda)?),
            Transform::Sum { parts } => {
                let parts = parts.iter().map(FunctionSpec::build).collect::<Result<Vec<_>>>()?;
                Arc::new(transforms::add(parts)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use submodular::setfn::to_explicit;

    #[test]
    fn parses_every_kind() {
        let docs = [
            r#"{"kind":"explicit","values":[0,1,1,1]}"#,
            r#"{"kind":"cut","nodes":2,"arcs":[[0,1,1.0]],"symmetric":true}"#,
            r#"{"kind":"cover","p":2,"groups":[{"elements":[0,1],"weight":1}]}"#,
            r#"{"kind":"card_concave","values":[0,1,1]}"#,
            r#"{"kind":"weighted_concave","weights":[1,1],"g":{"min_cap":1}}"#,
            r#"{"kind":"logdet","matrix":[[2,0],[0,2]]}"#,
            r#"{"kind":"flow","nodes":3,"sources":[0],"sinks":[1,2],"arcs":[[0,1,1],[0,2,1]]}"#,
            r#"{"kind":"graphic_matroid","vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#,
            r#"{"kind":"linear_matroid","rows":[[1,0,1],[0,1,1]]}"#,
            r#"{"kind":"transform","op":"scale","lambda":2,"inner":{"kind":"explicit","values":[0,1]}}"#,
        ];
        for doc in docs {
            let spec = FunctionSpec::parse(doc).unwrap();
            let f = spec.build().unwrap();
            assert_eq!(to_explicit(&f).unwrap()[0], 0.0, "{doc}");
            let again = FunctionSpec::parse(&serde_json::to_string(&spec).unwrap()).unwrap();
            assert_eq!(again, spec);
        }
    }

    #[test]
    fn nested_transforms() {
        let doc = r#"{"kind":"transform","op":"add_modular","s":[-2,0],
            "inner":{"kind":"cut","nodes":2,"arcs":[[0,1,1]],"symmetric":true}}"#;
        let f = FunctionSpec::parse(doc).unwrap().build().unwrap();
        assert_eq!(to_explicit(&f).unwrap(), vec![0.0, -1.0, 1.0, -2.0]);
        let doc = r#"{"kind":"transform","op":"sum","parts":[
            {"kind":"explicit","values":[0,1,1,1]},{"kind":"explicit","values":[0,1,1,1]}]}"#;
        let f = FunctionSpec::parse(doc).unwrap().build().unwrap();
        assert_eq!(to_explicit(&f).unwrap(), vec![0.0, 2.0, 2.0, 2.0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FunctionSpec::parse(r#"{"kind":"explicit","values":[0,1],"extra":1}"#).is_err());
        assert!(FunctionSpec::parse(r#"{"kind":"nope"}"#).is_err());
        let bad = FunctionSpec::parse(r#"{"kind":"explicit","values":[1,1]}"#).unwrap();
        assert!(bad.build().is_err());
        let neg = FunctionSpec::parse(
            r#"{"kind":"transform","op":"scale","lambda":-1,"inner":{"kind":"explicit","values":[0,1]}}"#,
        )
        .unwrap();
        assert!(neg.build().is_err());
    }
}
