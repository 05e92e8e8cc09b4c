//! Proximal problems `min_w f(w) + Σ_j ψ_j(w_j)` for the Lovász extension `f`.
//!
//! The dual is `max_{s∈B(F)} −Σ_j ψ*_j(−s_j)`, and at optimum `s_k = −ψ′_k(u_k)`.
//! Three solvers are provided: the minimum-norm point (quadratic terms), the
//! decomposition algorithm and the homotopy peeling (any strictly convex
//! terms). The sublevel sets of the solution `u` are minimizers of
//! `F + ψ′(α)`, which links the problem to submodular minimization.

mod constrained;
mod decomposition;
mod homotopy;
mod linesearch;
mod optimality;
mod separable;

pub use constrained::{prox_over_p, prox_over_p_plus};
pub use decomposition::{prox_decomposition, DecompositionOptions};
pub use homotopy::prox_homotopy;
pub use linesearch::{line_search_p, line_search_p_with};
pub use optimality::{check_separable_optimality, lex_compare, lex_compare_tol};
pub use separable::{solve_increasing, Quadratic, QuadraticSpec, ScalarConvex, Separable};

use crate::error::Result;
use crate::lovasz::lovasz_extension;
use crate::setfn::{check_len, SetFunction, Subset};
use crate::sfm::{min_norm_point_weighted, MinNormOptions, SfmBackend};

#[derive(Debug, Clone, PartialEq)]
pub struct ProxResult {
    /// Primal minimizer.
    pub u: Vec<f64>,
    /// Dual optimal base.
    pub s: Vec<f64>,
    pub primal_value: f64,
    pub dual_value: f64,
    /// `primal_value − dual_value`.
    pub gap: f64,
}

impl ProxResult {
    /// Evaluates both objectives at a primal-dual pair.
    pub fn from_pair<F: SetFunction + ?Sized>(
        f: &F,
        psi: &Separable,
        u: Vec<f64>,
        s: Vec<f64>,
    ) -> Result<Self> {
        let primal_value = lovasz_extension(f, &u) + psi.value(&u);
        let dual_value = psi.dual_value(&s)?;
        Ok(ProxResult {
            u,
            s,
            primal_value,
            dual_value,
            gap: primal_value - dual_value,
        })
    }
}

/// Quadratic prox through a weighted minimum-norm point.
///
/// For `ψ_j = (a_j/2)(w_j − z_j)²` the dual is `min Σ_j (s_j − a_j z_j)²/(2a_j)`
/// over `B(F)`, then `u = z − s/a`.
pub fn prox_minnorm<F: SetFunction + ?Sized>(f: &F, q: &QuadraticSpec, eps: f64) -> Result<ProxResult> {
    check_len(f.ground_size(), q.len())?;
    let metric: Vec<f64> = q.a().iter().map(|a| 1.0 / a).collect();
    let center: Vec<f64> = q.a().iter().zip(q.z()).map(|(a, z)| a * z).collect();
    let mn = min_norm_point_weighted(f, &metric, &center, MinNormOptions::with_eps(eps))?
        .into_converged()?;
    let s = mn.x;
    let u: Vec<f64> = s
        .iter()
        .zip(q.a())
        .zip(q.z())
        .map(|((s, a), z)| z - s / a)
        .collect();
    ProxResult::from_pair(f, &q.clone().into(), u, s)
}

/// `({u > α + τ}, {u ⩾ α − τ})`: the smallest and largest minimizers of
/// `A ↦ F(A) + Σ_{j∈A} ψ′_j(α)` read off the prox solution `u`.
pub fn prox_threshold_sets(u: &[f64], alpha: f64, tau: f64) -> (Subset, Subset) {
    let minimal = (0..u.len()).filter(|&k| u[k] > alpha + tau).collect();
    let maximal = (0..u.len()).filter(|&k| u[k] >= alpha - tau).collect();
    (minimal, maximal)
}

/// Solves the prox problem over `B(F)` with the best available solver: the
/// minimum-norm point for quadratic terms with that backend, the
/// decomposition algorithm otherwise.
pub fn prox<F: SetFunction + ?Sized>(f: &F, psi: &Separable, backend: SfmBackend) -> Result<ProxResult> {
    check_len(f.ground_size(), psi.len())?;
    if let (Some(q), SfmBackend::MinNorm { eps }) = (psi.quadratic(), backend) {
        return prox_minnorm(f, q, eps.min(1e-12));
    }
    let s = prox_decomposition(f, psi, backend, DecompositionOptions::default())?;
    let u = psi.primal_from_dual(&s)?;
    ProxResult::from_pair(f, psi, u, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfn::{Explicit, Modular};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn minnorm_examples() {
        let f_or = Explicit::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        let r = prox_minnorm(&f_or, &QuadraticSpec::centered(vec![0.0, 0.0]), 1e-12).unwrap();
        assert!(close(&r.u, &[-0.5, -0.5], 1e-9));
        assert!(close(&r.s, &[0.5, 0.5], 1e-9));
        assert!(r.gap.abs() < 1e-9);

        let t = Modular::new(vec![1.0, -2.0, 0.5]).unwrap();
        let r = prox_minnorm(&t, &QuadraticSpec::centered(vec![0.0; 3]), 1e-12).unwrap();
        assert!(close(&r.u, &[-1.0, 2.0, -0.5], 1e-12));
        assert!(close(&r.s, t.weights(), 1e-12));

        let cut = Explicit::new(vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let r = prox_minnorm(&cut, &QuadraticSpec::centered(vec![1.0, -1.0]), 1e-12).unwrap();
        assert!(close(&r.s, &[1.0, -1.0], 1e-9));
        assert!(close(&r.u, &[0.0, 0.0], 1e-9));
    }

    #[test]
    fn weighted_quadratic_matches_fenchel_pairing() {
        let f = Explicit::new(vec![0.0, 2.0, 1.0, 1.5, 1.0, 2.5, 1.5, 2.0]).unwrap();
        let q = QuadraticSpec::new(vec![1.0, 3.0, 0.5], vec![0.2, -1.0, 2.0]).unwrap();
        let r = prox_minnorm(&f, &q, 1e-12).unwrap();
        let psi: Separable = q.into();
        let back = psi.dual_from_primal(&r.u);
        assert!(close(&back, &r.s, 1e-9));
        assert!(r.gap.abs() < 1e-8, "gap {}", r.gap);
    }

    #[test]
    fn threshold_examples() {
        let u = [-0.5, -0.5];
        let full = Subset::full(2);
        assert_eq!(prox_threshold_sets(&u, -0.6, 1e-9), (full, full));
        assert_eq!(prox_threshold_sets(&u, 0.0, 1e-9), (Subset::EMPTY, Subset::EMPTY));
        assert_eq!(prox_threshold_sets(&u, -0.5, 1e-9), (Subset::EMPTY, full));
    }
}
