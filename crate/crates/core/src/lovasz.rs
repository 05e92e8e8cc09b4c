//! Lovász extension, greedy bases and the discrete conjugate.
//!
//! For `w` sorted as `w_{j1} ⩾ … ⩾ w_{jp}`, the extension is
//! `f(w) = Σ_k w_{jk} [F({j1..jk}) − F({j1..j(k−1)})]`, and the bracketed
//! increments form the greedy base, a maximizer of `wᵀs` over `B(F)`.
//! Ties are broken by ascending index so outputs are deterministic.

use crate::error::Result;
use crate::setfn::{check_cap, SetFunction, Subset, DEFAULT_EXHAUSTIVE_CAP};

/// Indices of `w` sorted by decreasing value, ties by ascending index.
pub fn descending_order(w: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| w[b].total_cmp(&w[a]).then(a.cmp(&b)));
    order
}

/// Marginal gains of `F` along the chain induced by `order`.
pub fn chain_increments<F: SetFunction + ?Sized>(f: &F, order: &[usize]) -> Vec<f64> {
    let mut s = vec![0.0; f.ground_size()];
    let mut prefix = Subset::EMPTY;
    let mut prev = 0.0;
    for &j in order {
        prefix = prefix.insert(j);
        let cur = f.eval(prefix);
        s[j] = cur - prev;
        prev = cur;
    }
    s
}

/// Greedy base for `w`: a vertex of `B(F)` maximizing `wᵀs`.
///
/// Panics if `w.len()` differs from the ground-set size.
pub fn greedy_base<F: SetFunction + ?Sized>(f: &F, w: &[f64]) -> Vec<f64> {
    assert_eq!(w.len(), f.ground_size(), "weight vector length");
    chain_increments(f, &descending_order(w))
}

/// Lovász extension `f(w)`.
pub fn lovasz_extension<F: SetFunction + ?Sized>(f: &F, w: &[f64]) -> f64 {
    assert_eq!(w.len(), f.ground_size(), "weight vector length");
    lovasz_with_order(f, w, &descending_order(w))
}

/// Evaluates the extension along a caller-supplied order, which must sort
/// `w` non-increasingly for the result to be `f(w)`.
///
/// Uses the level-set form `Σ_k (w_{j_k} − w_{j_{k+1}}) F({j_1..j_k}) + w_{j_p} F(V)`,
/// which is exact on indicator vectors.
pub fn lovasz_with_order<F: SetFunction + ?Sized>(f: &F, w: &[f64], order: &[usize]) -> f64 {
    let mut prefix = Subset::EMPTY;
    let mut total = 0.0;
    for (i, &j) in order.iter().enumerate() {
        prefix = prefix.insert(j);
        let next = order.get(i + 1).map_or(0.0, |&k| w[k]);
        let step = w[j] - next;
        if step != 0.0 {
            total += step * f.eval(prefix);
        }
    }
    total
}

/// Maximizer of `wᵀs` over `P₊(F) = P(F) ∩ ℝ₊^p` for non-decreasing `F`:
/// greedy on the strictly positive entries of `w`, zero elsewhere.
pub fn truncated_greedy<F: SetFunction + ?Sized>(f: &F, w: &[f64]) -> Vec<f64> {
    assert_eq!(w.len(), f.ground_size(), "weight vector length");
    let order: Vec<usize> = descending_order(w)
        .into_iter()
        .filter(|&j| w[j] > 0.0)
        .collect();
    chain_increments(f, &order)
}

/// Value of `max_{s∈P(F)} wᵀs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Support {
    Finite(f64),
    PlusInfinity,
}

impl Support {
    pub fn finite(self) -> Option<f64> {
        match self {
            Support::Finite(v) => Some(v),
            Support::PlusInfinity => None,
        }
    }
}

/// Support function of `P(F)`: `f(w)` for `w ⩾ 0`, `+∞` as soon as one entry is negative.
pub fn support_p<F: SetFunction + ?Sized>(f: &F, w: &[f64]) -> Support {
    if w.iter().any(|&v| v < 0.0) {
        Support::PlusInfinity
    } else {
        Support::Finite(lovasz_extension(f, w))
    }
}

/// Discrete conjugate `max_A s(A) − F(A)` with the smallest maximizing bitmask.
pub fn conjugate<F: SetFunction + ?Sized>(f: &F, s: &[f64]) -> Result<(f64, Subset)> {
    conjugate_capped(f, s, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn conjugate_capped<F: SetFunction + ?Sized>(
    f: &F,
    s: &[f64],
    cap: usize,
) -> Result<(f64, Subset)> {
    let p = f.ground_size();
    assert_eq!(s.len(), p, "vector length");
    check_cap(p, cap)?;
    let mut best = (0.0, Subset::EMPTY);
    for a in Subset::full(p).subsets().skip(1) {
        let v = a.sum(s) - f.eval(a);
        if v > best.0 {
            best = (v, a);
        }
    }
    Ok(best)
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfn::{Cardinality, Explicit, Modular};

    fn f_or() -> Explicit {
        Explicit::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap()
    }

    fn sym_cut2() -> Explicit {
        Explicit::new(vec![0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    #[test]
    fn ordering_breaks_ties_by_index() {
        assert_eq!(descending_order(&[1.0, 3.0, 1.0, 3.0]), vec![1, 3, 0, 2]);
    }

    #[test]
    fn extension_examples() {
        let m = Modular::new(vec![1.0, -2.0, 0.5]).unwrap();
        let w = [0.3, 1.1, -4.0];
        assert!((lovasz_extension(&m, &w) - dot(&w, m.weights())).abs() < 1e-12);
        assert_eq!(lovasz_extension(&f_or(), &[1.0, 0.0]), 1.0);
        assert!((lovasz_extension(&sym_cut2(), &[2.0, 0.5]) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn greedy_examples() {
        let s = greedy_base(&f_or(), &[3.0, 1.0]);
        assert_eq!(s, vec![1.0, 0.0]);
        assert_eq!(dot(&s, &[3.0, 1.0]), 3.0);
        let card = Cardinality::new(3).unwrap();
        assert_eq!(greedy_base(&card, &[0.2, -1.0, 5.0]), vec![1.0, 1.0, 1.0]);
        assert_eq!(greedy_base(&sym_cut2(), &[0.0, 1.0]), vec![-1.0, 1.0]);
    }

    #[test]
    fn truncated_greedy_examples() {
        assert_eq!(truncated_greedy(&f_or(), &[3.0, -1.0]), vec![1.0, 0.0]);
        assert_eq!(truncated_greedy(&f_or(), &[-1.0, -2.0]), vec![0.0, 0.0]);
        let card = Cardinality::new(2).unwrap();
        assert_eq!(truncated_greedy(&card, &[2.0, 1.0]), vec![1.0, 1.0]);
    }

    #[test]
    fn support_examples() {
        assert_eq!(support_p(&f_or(), &[1.0, 1.0]), Support::Finite(1.0));
        assert_eq!(support_p(&f_or(), &[1.0, -0.1]), Support::PlusInfinity);
        assert_eq!(support_p(&sym_cut2(), &[0.0, 0.0]), Support::Finite(0.0));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            conjugate(&f_or(), &[2.0, 0.0]).unwrap(),
            (1.0, Subset::singleton(0))
        );
        let t = Modular::new(vec![1.0, -3.0, 2.0]).unwrap();
        assert_eq!(conjugate(&t, t.weights()).unwrap(), (0.0, Subset::EMPTY));
        // s = 0 gives −min F
        let g = Explicit::new(vec![0.0, -1.0, 2.0, -0.5]).unwrap();
        assert_eq!(conjugate(&g, &[0.0, 0.0]).unwrap().0, 1.0);
    }
}
