use super::separable::{solve_increasing, Separable};
use crate::error::{Error, Result};
use crate::setfn::{check_len, SetFunction, Subset};
use crate::sfm::{minimize, SfmBackend};
use crate::transforms::{add_modular, contract};

const MAX_STEPS: usize = 200;

/// Primal prox solution `u` by peeling its level sets from the top.
///
/// With `g(α) = min_A F(A) + Σ_{j∈A} ψ′_j(α)`, the largest value of `u` is the
/// smallest `α*` with `g(α*) = 0`, found by the secant iteration that solves
/// `F(A) + ψ′(α)(A) = 0` on the current minimizer `A`. The maximal minimizer at
/// `α*` is the top level set; the rest of `u` solves the same problem for the
/// contraction by that set.
pub fn prox_homotopy<F: SetFunction + ?Sized>(
    f: &F,
    psi: &Separable,
    backend: SfmBackend,
) -> Result<Vec<f64>> {
    let p = f.ground_size();
    check_len(p, psi.len())?;
    let mut u = vec![0.0; p];
    let idx: Vec<usize> = (0..p).collect();
    peel(&f, psi, &idx, backend, &mut u)?;
    Ok(u)
}

/// Solves `F(A) + Σ_{j∈A} ψ′_j(α) = 0` for `α`.
fn block_level(psi: &Separable, members: &[usize], value: f64, start: f64) -> Result<f64> {
    match psi.quadratic() {
        Some(q) => {
            let sa: f64 = members.iter().map(|&j| q.a()[j]).sum();
            let saz: f64 = members.iter().map(|&j| q.a()[j] * q.z()[j]).sum();
            Ok((saz - value) / sa)
        }
        None => solve_increasing(
            |al| members.iter().map(|&j| psi.deriv(j, al)).sum(),
            -value,
            start,
        ),
    }
}

fn peel(
    f: &dyn SetFunction,
    psi: &Separable,
    idx: &[usize],
    backend: SfmBackend,
    u: &mut [f64],
) -> Result<()> {
    let p = idx.len();
    if p == 0 {
        return Ok(());
    }
    // α₀ = min_k (ψ′_k)⁻¹(−F({k})) makes g(α₀) ⩽ 0 and α₀ ⩽ α*
    let mut alpha = f64::INFINITY;
    let mut fallback = Subset::EMPTY;
    for (k, &j) in idx.iter().enumerate() {
        let a = psi.deriv_inv(j, -f.eval(Subset::singleton(k)))?;
        if a < alpha {
            alpha = a;
            fallback = Subset::singleton(k);
        }
    }
    let scale = 1.0
        + (0..p)
            .map(|k| f.eval(Subset::singleton(k)).abs())
            .sum::<f64>();
    let tol = 1e-10 * scale;
    let mut steps = 0;
    let top = loop {
        let slopes: Vec<f64> = idx.iter().map(|&j| psi.deriv(j, alpha)).collect();
        let r = minimize(&add_modular(f, slopes)?, backend)?;
        if r.min_value >= -tol {
            break r.maximal_minimizer;
        }
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::NoConvergence {
                iterations: MAX_STEPS,
                gap: -r.min_value,
            });
        }
        let a = r.maximal_minimizer;
        let members: Vec<usize> = a.iter().map(|k| idx[k]).collect();
        let next = block_level(psi, &members, f.eval(a), alpha)?;
        fallback = a;
        if !(next > alpha) {
            // the secant step cannot move in floating point
            break a;
        }
        alpha = next;
    };
    let top = if top.is_empty() { fallback } else { top };
    for k in top.iter() {
        u[idx[k]] = alpha;
    }
    if top == Subset::full(p) {
        return Ok(());
    }
    let rest = contract(f, top)?;
    let sub: Vec<usize> = rest.index_map().iter().map(|&k| idx[k]).collect();
    peel(&rest, psi, &sub, backend, u)
}
