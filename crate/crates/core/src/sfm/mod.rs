//! Submodular function minimization with duality certificates.
//!
//! For `s ∈ B(F)` and any `A`, `F(A) ⩾ s₋(V) = Σ_k min(s_k, 0)`, with equality
//! at optimum. The minimum-norm point of `B(F)` attains the bound and its
//! sign pattern yields the minimal and maximal minimizers.

mod minnorm;

pub use minnorm::{min_norm_point, min_norm_point_weighted, Corral, MinNormOptions, MinNormPoint};

use crate::error::{Error, Result};
use crate::setfn::{check_cap, SetFunction, Subset, DEFAULT_EXHAUSTIVE_CAP};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SfmBackend {
    MinNorm { eps: f64 },
    Brute,
}

impl Default for SfmBackend {
    fn default() -> Self {
        SfmBackend::MinNorm { eps: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SfmResult {
    pub min_value: f64,
    pub minimal_minimizer: Subset,
    pub maximal_minimizer: Subset,
    /// A base `s ∈ B(F)` certifying the value through `s₋(V)`.
    pub certificate: Vec<f64>,
    /// `F(A*) − s₋(V)`.
    pub gap: f64,
}

/// `F(A) − Σ_k min(s_k, 0)`.
pub fn certificate_gap<F: SetFunction + ?Sized>(f: &F, a: Subset, s: &[f64]) -> f64 {
    f.eval(a) - negative_part_sum(s)
}

pub fn negative_part_sum(s: &[f64]) -> f64 {
    s.iter().map(|&v| v.min(0.0)).sum()
}

/// Values within this of the minimum count as ties.
pub(crate) fn tie_tol(min_value: f64) -> f64 {
    1e-9 * min_value.abs().max(1.0)
}

pub fn minimize<F: SetFunction + ?Sized>(f: &F, backend: SfmBackend) -> Result<SfmResult> {
    match backend {
        SfmBackend::MinNorm { eps } => minimize_minnorm(f, eps),
        SfmBackend::Brute => minimize_brute(f),
    }
}

/// Sign tolerance used to read minimizers off an approximate min-norm point.
pub fn sign_tolerance(eps: f64) -> f64 {
    (10.0 * eps.sqrt()).max(1e-7)
}

fn minimize_minnorm<F: SetFunction + ?Sized>(f: &F, eps: f64) -> Result<SfmResult> {
    let mn = min_norm_point(f, eps)?.into_converged()?;
    let (min_value, minimal, maximal) = sets_from_base(f, &mn.x, sign_tolerance(eps));
    Ok(SfmResult {
        min_value,
        minimal_minimizer: minimal,
        maximal_minimizer: maximal,
        gap: min_value - negative_part_sum(&mn.x),
        certificate: mn.x,
    })
}

/// Scans the chain of sublevel sets of `x` between `{x < −τ}` and `{x ⩽ τ}`,
/// re-evaluating each exactly. Returns the best value with the smallest and
/// largest chain members attaining it.
pub(crate) fn sets_from_base<F: SetFunction + ?Sized>(
    f: &F,
    x: &[f64],
    tau: f64,
) -> (f64, Subset, Subset) {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    let lo = x.iter().filter(|&&v| v < -tau).count();
    let hi = x.iter().filter(|&&v| v <= tau).count();
    let mut prefix = Subset::from_indices(order[..lo].iter().copied());
    let mut candidates = vec![(prefix, f.eval(prefix))];
    for &k in &order[lo..hi] {
        prefix = prefix.insert(k);
        candidates.push((prefix, f.eval(prefix)));
    }
    let best = candidates.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let tol = tie_tol(best);
    let ties: Vec<Subset> = candidates
        .iter()
        .filter(|c| c.1 <= best + tol)
        .map(|c| c.0)
        .collect();
    (best, ties[0], *ties.last().unwrap())
}

fn minimize_brute<F: SetFunction + ?Sized>(f: &F) -> Result<SfmResult> {
    let p = f.ground_size();
    check_cap(p, DEFAULT_EXHAUSTIVE_CAP)?;
    let values: Vec<f64> = Subset::full(p).subsets().map(|a| f.eval(a)).collect();
    let min_value = values.iter().copied().fold(f64::INFINITY, f64::min);
    let tol = tie_tol(min_value);
    let mut minimal = Subset::full(p);
    let mut maximal = Subset::EMPTY;
    for (m, &v) in values.iter().enumerate() {
        if v <= min_value + tol {
            minimal = minimal.intersection(Subset(m as u64));
            maximal = maximal.union(Subset(m as u64));
        }
    }
    // certificate from the min-norm point; a non-converged run still yields a base
    let mn = min_norm_point(f, 1e-12)?;
    Ok(SfmResult {
        min_value,
        minimal_minimizer: minimal,
        maximal_minimizer: maximal,
        gap: min_value - negative_part_sum(&mn.x),
        certificate: mn.x,
    })
}

/// Groups equal coordinates of a Euclidean min-norm point and recomputes each
/// block value as `(F(A_1∪…∪A_j) − F(A_1∪…∪A_{j−1})) / |A_j|`, blocks ascending.
pub fn recover_level_values<F: SetFunction + ?Sized>(
    f: &F,
    x: &[f64],
    group_tol: f64,
) -> Result<Vec<(Subset, f64)>> {
    crate::setfn::check_len(f.ground_size(), x.len())?;
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &k in &order {
        match blocks.last_mut() {
            Some(b) if x[k] - x[b[0]] <= group_tol => b.push(k),
            _ => blocks.push(vec![k]),
        }
    }
    let mut out = Vec::with_capacity(blocks.len());
    let mut prefix = Subset::EMPTY;
    let mut prev = 0.0;
    for b in blocks {
        let block = Subset::from_indices(b.iter().copied());
        prefix = prefix.union(block);
        let cur = f.eval(prefix);
        let value = (cur - prev) / block.len() as f64;
        prev = cur;
        let mean = b.iter().map(|&k| x[k]).sum::<f64>() / b.len() as f64;
        if (value - mean).abs() > 1e-6 {
            return Err(Error::NumericalInconsistency(format!(
                "block {block:?} recomputes to {value} but the point averages {mean}"
            )));
        }
        out.push((block, value));
    }
    Ok(out)
}
