//! Optimality of a base for `min_{s∈B(F)} Σ_k g_k(s_k)` and the induced
//! lexicographic order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyhedra::{exchangeable_pairs, tight_sets};
use crate::setfn::{check_len, SetFunction, Subset};

/// Checks optimality of `s ∈ B(F)` for `min Σ_k g_k(s_k)` given the
/// derivatives `dg(k, s_k)`.
///
/// The exchange form requires `g′_k(s_k) ⩾ g′_q(s_q)` for every exchangeable
/// pair `(k, q)`; the level-set form requires every sublevel set
/// `{k : g′_k(s_k) ⩽ α}` to be tight. Both are evaluated and must agree.
pub fn check_separable_optimality<F, D>(f: &F, s: &[f64], dg: D, tol: f64) -> Result<bool>
where
    F: SetFunction + ?Sized,
    D: Fn(usize, f64) -> f64,
{
    check_len(f.ground_size(), s.len())?;
    let d: Vec<f64> = s.iter().enumerate().map(|(k, &v)| dg(k, v)).collect();
    let exchange = exchangeable_pairs(f, s, tol)?
        .into_iter()
        .all(|(k, q)| d[k] >= d[q] - tol);

    let tight = tight_sets(f, s, tol)?;
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let mut prefix = Subset::EMPTY;
    let mut level_sets = true;
    for (i, &k) in order.iter().enumerate() {
        prefix = prefix.insert(k);
        let closes_level = order.get(i + 1).is_none_or(|&next| d[next] > d[k] + tol);
        if closes_level && !tight.contains(prefix) {
            level_sets = false;
            break;
        }
    }
    if exchange != level_sets {
        return Err(Error::NumericalInconsistency(format!(
            "exchange form says {exchange}, level-set form says {level_sets}"
        )));
    }
    Ok(exchange)
}

/// Compares `T(g′(s1))` with `T(g′(s2))`, where `T` sorts increasingly, in
/// lexicographic order. Optimal bases are the lexicographic maxima.
pub fn lex_compare<D: Fn(usize, f64) -> f64>(s1: &[f64], s2: &[f64], dg: D) -> Ordering {
    lex_compare_tol(s1, s2, dg, 0.0)
}

/// As [`lex_compare`], treating entries within `tol` as equal.
pub fn lex_compare_tol<D: Fn(usize, f64) -> f64>(s1: &[f64], s2: &[f64], dg: D, tol: f64) -> Ordering {
    let sorted = |s: &[f64]| {
        let mut v: Vec<f64> = s.iter().enumerate().map(|(k, &x)| dg(k, x)).collect();
        v.sort_by(f64::total_cmp);
        v
    };
    let (a, b) = (sorted(s1), sorted(s2));
    for (x, y) in a.iter().zip(&b) {
        if (x - y).abs() > tol {
            return x.total_cmp(y);
        }
    }
    a.len().cmp(&b.len())
}
