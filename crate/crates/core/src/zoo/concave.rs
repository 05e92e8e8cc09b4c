use crate::error::{Error, Result};
use crate::lovasz::descending_order;
use crate::setfn::{check_len, check_p, SetFunction, Subset};

const CONCAVITY_TOL: f64 = 1e-12;

/// `F(A) = g(|A|)` for a tabulated concave `g` with `g(0) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcaveCardinality {
    g: Vec<f64>,
}

impl ConcaveCardinality {
    /// `g` holds `g(0), …, g(p)`.
    pub fn new(g: Vec<f64>) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::InvalidArgument("g table must contain g(0)".into()));
        }
        check_p(g.len() - 1)?;
        if g[0] != 0.0 {
            return Err(Error::NotZeroAtZero(g[0]));
        }
        for k in 1..g.len().saturating_sub(1) {
            if g[k + 1] - g[k] > g[k] - g[k - 1] + CONCAVITY_TOL {
                return Err(Error::NotConcave(k));
            }
        }
        Ok(ConcaveCardinality { g })
    }

    pub fn table(&self) -> &[f64] {
        &self.g
    }

    /// Order-statistic form `Σ_k w_{j_k} (g(k) − g(k−1))` with `w` sorted descending.
    pub fn lovasz(&self, w: &[f64]) -> f64 {
        assert_eq!(w.len(), self.g.len() - 1, "weight vector length");
        descending_order(w)
            .iter()
            .enumerate()
            .map(|(i, &j)| w[j] * (self.g[i + 1] - self.g[i]))
            .sum()
    }
}

impl SetFunction for ConcaveCardinality {
    fn ground_size(&self) -> usize {
        self.g.len() - 1
    }
    fn eval(&self, a: Subset) -> f64 {
        self.g[a.len()]
    }
}

/// Concave functions on `[0, ∞)` vanishing at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConcaveFn {
    Sqrt,
    Log1p,
    /// `min(x, c)`.
    MinCap(f64),
}

impl ConcaveFn {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            ConcaveFn::Sqrt => x.sqrt(),
            ConcaveFn::Log1p => x.ln_1p(),
            ConcaveFn::MinCap(c) => x.min(c),
        }
    }
}

/// `F(A) = g(s(A))` for non-negative weights `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedConcave {
    s: Vec<f64>,
    g: ConcaveFn,
}

impl WeightedConcave {
    pub fn new(s: Vec<f64>, g: ConcaveFn) -> Result<Self> {
        check_p(s.len())?;
        if s.iter().any(|&v| !(v >= 0.0) || !v.is_finite()) {
            return Err(Error::InvalidArgument("weights must be finite and >= 0".into()));
        }
        if let ConcaveFn::MinCap(c) = g {
            if !(c >= 0.0) {
                return Err(Error::InvalidArgument(format!("cap {c} is not >= 0")));
            }
        }
        Ok(WeightedConcave { s, g })
    }

    pub fn lovasz(&self, w: &[f64]) -> Result<f64> {
        check_len(self.s.len(), w.len())?;
        let mut acc = 0.0;
        let mut prev = 0.0;
        let mut total = 0.0;
        for j in descending_order(w) {
            acc += self.s[j];
            let cur = self.g.apply(acc);
            total += w[j] * (cur - prev);
            prev = cur;
        }
        Ok(total)
    }
}

impl SetFunction for WeightedConcave {
    fn ground_size(&self) -> usize {
        self.s.len()
    }
    fn eval(&self, a: Subset) -> f64 {
        self.g.apply(a.sum(&self.s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lovasz::lovasz_extension;
    use crate::setfn::{is_submodular, to_explicit};

    #[test]
    fn cardinality_examples() {
        let id = ConcaveCardinality::new(vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(to_explicit(&id).unwrap(), vec![0.0, 1.0, 1.0, 2.0, 1.0, 2.0, 2.0, 3.0]);
        let or = ConcaveCardinality::new(vec![0.0, 1.0, 1.0]).unwrap();
        assert_eq!(to_explicit(&or).unwrap(), vec![0.0, 1.0, 1.0, 1.0]);
        let sq = ConcaveCardinality::new(vec![0.0, 1.0, 2f64.sqrt()]).unwrap();
        let expect = 4.0 + (2f64.sqrt() - 1.0);
        assert!((sq.lovasz(&[4.0, 1.0]) - expect).abs() < 1e-12);
        assert!((lovasz_extension(&sq, &[4.0, 1.0]) - expect).abs() < 1e-12);
    }

    #[test]
    fn validation() {
        assert_eq!(
            ConcaveCardinality::new(vec![0.0, 1.0, 3.0]),
            Err(Error::NotConcave(1))
        );
        assert_eq!(
            ConcaveCardinality::new(vec![1.0, 2.0]),
            Err(Error::NotZeroAtZero(1.0))
        );
        assert!(WeightedConcave::new(vec![-1.0], ConcaveFn::Sqrt).is_err());
    }

    #[test]
    fn weighted_forms() {
        for g in [ConcaveFn::Sqrt, ConcaveFn::Log1p, ConcaveFn::MinCap(1.5)] {
            let f = WeightedConcave::new(vec![0.5, 2.0, 1.0, 0.0], g).unwrap();
            assert!(is_submodular(&f, 1e-12).unwrap().holds);
            let w = [0.3, -1.0, 2.5, 0.7];
            assert!((f.lovasz(&w).unwrap() - lovasz_extension(&f, &w)).abs() < 1e-12);
        }
    }
}
