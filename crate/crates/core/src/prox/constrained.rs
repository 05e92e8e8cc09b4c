//! Separable problems over `P(F)` and `P₊(F)`, derived from the base problem.

use super::separable::Separable;
use super::prox;
use crate::error::{Error, Result};
use crate::setfn::{SetFunction, Subset};
use crate::sfm::SfmBackend;

/// Solves `min_w f(w) + Σ ψ_k(w_k)` restricted to the `P(F)` support form:
/// from the base solution `(v, t)`, `w = v₊` and `s_k` maximizes
/// `−ψ*_k(−·)` on `(−∞, t_k]`, i.e. `s_k = min(t_k, −ψ′_k(0))`.
pub fn prox_over_p<F: SetFunction + ?Sized>(
    f: &F,
    psi: &Separable,
    backend: SfmBackend,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let base = prox(f, psi, backend)?;
    let w = base.u.iter().map(|v| v.max(0.0)).collect();
    let s = base
        .s
        .iter()
        .enumerate()
        .map(|(k, &t)| t.min(-psi.deriv(k, 0.0)))
        .collect();
    Ok((w, s))
}

/// `P₊(F)` variant for non-decreasing `F`: `s_k` clips `−ψ′_k(0)` to `[0, t_k]`
/// and `w_k` solves `s_k + ψ′_k(w_k) = 0`.
pub fn prox_over_p_plus<F: SetFunction + ?Sized>(
    f: &F,
    psi: &Separable,
    backend: SfmBackend,
) -> Result<(Vec<f64>, Vec<f64>)> {
    spot_check_monotone(f)?;
    let base = prox(f, psi, backend)?;
    let s: Vec<f64> = base
        .s
        .iter()
        .enumerate()
        .map(|(k, &t)| (-psi.deriv(k, 0.0)).max(0.0).min(t.max(0.0)))
        .collect();
    let w = psi.primal_from_dual(&s)?;
    Ok((w, s))
}

/// Cheap necessary conditions for a non-decreasing `F`: non-negative
/// singletons, non-negative last increments, and a non-decreasing chain.
fn spot_check_monotone<F: SetFunction + ?Sized>(f: &F) -> Result<()> {
    let p = f.ground_size();
    let full = Subset::full(p);
    let fv = f.eval(full);
    let tol = 1e-9 * (1.0 + fv.abs());
    let mut prefix = Subset::EMPTY;
    let mut prev = 0.0;
    for k in 0..p {
        if f.eval(Subset::singleton(k)) < -tol {
            return Err(Error::MonotonicityRequired(format!("F({{{k}}}) < 0")));
        }
        if fv < f.eval(full.remove(k)) - tol {
            return Err(Error::MonotonicityRequired(format!("F(V) < F(V∖{{{k}}})")));
        }
        prefix = prefix.insert(k);
        let cur = f.eval(prefix);
        if cur < prev - tol {
            return Err(Error::MonotonicityRequired(format!(
                "F decreases when adding {k} to {:?}",
                prefix.remove(k)
            )));
        }
        prev = cur;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prox::QuadraticSpec;
    use crate::setfn::{Cardinality, Explicit, Modular};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    fn quad(z: Vec<f64>) -> Separable {
        QuadraticSpec::centered(z).into()
    }

    #[test]
    fn over_p_examples() {
        let f_or = Explicit::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        let (w, s) = prox_over_p(&f_or, &quad(vec![0.0, 0.0]), SfmBackend::default()).unwrap();
        assert!(close(&w, &[0.0, 0.0], 1e-12));
        assert!(close(&s, &[0.0, 0.0], 1e-12));

        let t0 = Modular::new(vec![1.0, -1.0]).unwrap();
        let (w, s) = prox_over_p(&t0, &quad(vec![0.0, 0.0]), SfmBackend::default()).unwrap();
        assert!(close(&w, &[0.0, 1.0], 1e-9));
        assert!(close(&s, &[0.0, -1.0], 1e-9));

        // with v > 0 the base and P(F) problems coincide
        let (w, s) = prox_over_p(&f_or, &quad(vec![2.0, 2.0]), SfmBackend::default()).unwrap();
        assert!(close(&w, &[1.5, 1.5], 1e-9));
        assert!(close(&s, &[0.5, 0.5], 1e-9));
    }

    #[test]
    fn over_p_plus_examples() {
        let f_or = Explicit::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        let (w, s) = prox_over_p_plus(&f_or, &quad(vec![0.0, 0.0]), SfmBackend::default()).unwrap();
        assert!(close(&w, &[0.0, 0.0], 1e-12));
        assert!(close(&s, &[0.0, 0.0], 1e-12));

        let (w, s) = prox_over_p_plus(&f_or, &quad(vec![1.0, 1.0]), SfmBackend::default()).unwrap();
        assert!(close(&s, &[0.5, 0.5], 1e-9));
        assert!(close(&w, &[0.5, 0.5], 1e-9));

        let card = Cardinality::new(1).unwrap();
        let (w, s) = prox_over_p_plus(&card, &quad(vec![-3.0]), SfmBackend::default()).unwrap();
        assert_eq!((w[0], s[0]), (-3.0, 0.0));
    }

    #[test]
    fn decreasing_function_is_rejected() {
        let neg = Modular::new(vec![-1.0, 1.0]).unwrap();
        assert!(matches!(
            prox_over_p_plus(&neg, &quad(vec![0.0, 0.0]), SfmBackend::default()),
            Err(Error::MonotonicityRequired(_))
        ));
    }
}
