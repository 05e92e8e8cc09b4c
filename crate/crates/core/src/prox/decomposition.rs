use super::separable::{solve_increasing, Separable};
use crate::error::{Error, Result};
use crate::setfn::{check_len, SetFunction, Subset};
use crate::sfm::{minimize, SfmBackend};
use crate::transforms::{add_modular, contract, restrict};

#[derive(Debug, Clone, Copy, Default)]
pub struct DecompositionOptions {
    /// Maximum recursion depth; `None` means `p`.
    pub depth_limit: Option<usize>,
}

/// Optimal dual base `s` of the prox problem by divide and conquer.
///
/// Each call equalizes the dual derivatives under `t(V) = F(V)`, finds the
/// largest minimizer `A` of `F − t`, and if `A ≠ V` recurses on the
/// restriction to `A` and the contraction by `A`.
pub fn prox_decomposition<F: SetFunction + ?Sized>(
    f: &F,
    psi: &Separable,
    backend: SfmBackend,
    opts: DecompositionOptions,
) -> Result<Vec<f64>> {
    let p = f.ground_size();
    check_len(p, psi.len())?;
    let idx: Vec<usize> = (0..p).collect();
    let limit = opts.depth_limit.unwrap_or(p);
    decompose(&f, psi, &idx, backend, 0, limit)
}

/// `t` with equal dual derivatives and `t(V) = F(V)`: `t_j = −ψ′_j(ν)` where
/// `Σ_j ψ′_j(ν) = −F(V)`.
fn equalize(psi: &Separable, idx: &[usize], total: f64) -> Result<Vec<f64>> {
    let nu = match psi.quadratic() {
        Some(q) => {
            let sa: f64 = idx.iter().map(|&j| q.a()[j]).sum();
            let saz: f64 = idx.iter().map(|&j| q.a()[j] * q.z()[j]).sum();
            (saz - total) / sa
        }
        None => solve_increasing(|nu| idx.iter().map(|&j| psi.deriv(j, nu)).sum(), -total, 0.0)?,
    };
    Ok(idx.iter().map(|&j| -psi.deriv(j, nu)).collect())
}

fn decompose(
    f: &dyn SetFunction,
    psi: &Separable,
    idx: &[usize],
    backend: SfmBackend,
    depth: usize,
    limit: usize,
) -> Result<Vec<f64>> {
    let p = idx.len();
    if p == 0 {
        return Ok(Vec::new());
    }
    if depth > limit {
        return Err(Error::RecursionOverflow { limit });
    }
    let full = Subset::full(p);
    let t = equalize(psi, idx, f.eval(full))?;
    let shifted = add_modular(f, t.iter().map(|v| -v).collect())?;
    let a = minimize(&shifted, backend)?.maximal_minimizer;
    if a == full || a.is_empty() {
        return Ok(t);
    }
    let mut s = vec![0.0; p];
    let inner = restrict(f, a)?;
    let sub: Vec<usize> = inner.index_map().iter().map(|&k| idx[k]).collect();
    let part = decompose(&inner, psi, &sub, backend, depth + 1, limit)?;
    for (&k, v) in inner.index_map().iter().zip(part) {
        s[k] = v;
    }
    let outer = contract(f, a)?;
    let sub: Vec<usize> = outer.index_map().iter().map(|&k| idx[k]).collect();
    let part = decompose(&outer, psi, &sub, backend, depth + 1, limit)?;
    for (&k, v) in outer.index_map().iter().zip(part) {
        s[k] = v;
    }
    Ok(s)
}
