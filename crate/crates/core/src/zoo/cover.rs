use crate::error::{Error, Result};
use crate::setfn::{check_p, SetFunction, Subset};

/// Weighted groups `G ⊆ V` with non-negative weights `D(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverSystem {
    p: usize,
    groups: Vec<(Subset, f64)>,
}

impl CoverSystem {
    pub fn new(p: usize, groups: Vec<(Subset, f64)>) -> Result<Self> {
        check_p(p)?;
        for &(g, w) in &groups {
            if !g.is_subset_of(Subset::full(p)) {
                return Err(Error::InvalidArgument(format!("group {g:?} outside V")));
            }
            if !(w >= 0.0) || !w.is_finite() {
                return Err(Error::InvalidArgument(format!("group weight {w} is not >= 0")));
            }
        }
        Ok(CoverSystem { p, groups })
    }

    pub fn groups(&self) -> &[(Subset, f64)] {
        &self.groups
    }
}

/// `F(A) = Σ_{G ∩ A ≠ ∅} D(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverFunction {
    system: CoverSystem,
}

impl CoverFunction {
    pub fn new(system: CoverSystem) -> Self {
        CoverFunction { system }
    }

    pub fn system(&self) -> &CoverSystem {
        &self.system
    }

    /// `f(w) = Σ_G D(G) max_{k∈G} w_k`, valid for `w ⩾ 0`.
    pub fn lovasz(&self, w: &[f64]) -> f64 {
        assert_eq!(w.len(), self.system.p, "weight vector length");
        self.system
            .groups
            .iter()
            .filter(|(g, _)| !g.is_empty())
            .map(|&(g, d)| d * g.iter().map(|k| w[k]).fold(f64::NEG_INFINITY, f64::max))
            .sum()
    }
}

impl SetFunction for CoverFunction {
    fn ground_size(&self) -> usize {
        self.system.p
    }
    fn eval(&self, a: Subset) -> f64 {
        self.system
            .groups
            .iter()
            .filter(|(g, _)| !g.intersection(a).is_empty())
            .map(|&(_, d)| d)
            .sum()
    }
}
