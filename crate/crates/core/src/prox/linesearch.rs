use crate::error::{Error, Result};
use crate::setfn::{check_len, SetFunction};
use crate::sfm::{minimize, SfmBackend};
use crate::transforms::add_modular;

const MAX_STEPS: usize = 200;
const GROWTH_LIMIT: f64 = 1e300;

/// Largest `λ ⩾ 0` with `s0 + λt ∈ P(F)`, using the default backend.
pub fn line_search_p<F: SetFunction + ?Sized>(f: &F, s0: &[f64], t: &[f64], tol: f64) -> Result<f64> {
    line_search_p_with(f, s0, t, tol, SfmBackend::default())
}

/// Secant iteration on `g(λ) = min_A G(A) − λt(A)` with `G = F − s0`:
/// starting above the root, each step sets `λ ← G(A)/t(A)` on the current
/// minimizer until `g(λ) ⩾ −tol`.
pub fn line_search_p_with<F: SetFunction + ?Sized>(
    f: &F,
    s0: &[f64],
    t: &[f64],
    tol: f64,
    backend: SfmBackend,
) -> Result<f64> {
    let p = f.ground_size();
    check_len(p, s0.len())?;
    check_len(p, t.len())?;
    if !(tol >= 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} is not >= 0")));
    }
    let g = add_modular(f, s0.iter().map(|v| -v).collect())?;
    let at = |lambda: f64| {
        let dir: Vec<f64> = t.iter().map(|v| -lambda * v).collect();
        minimize(&add_modular(&g, dir)?, backend)
    };
    let start = at(0.0)?;
    if start.min_value < -tol {
        return Err(Error::Precondition(format!(
            "s0 is not in P(F): F − s0 reaches {}",
            start.min_value
        )));
    }
    // only constraints with t(A) > 0 can bind, and some singleton does bind first
    let ratio = (0..p)
        .filter(|&k| t[k] > 0.0)
        .map(|k| g.eval(crate::setfn::Subset::singleton(k)) / t[k])
        .fold(f64::INFINITY, f64::min);
    if ratio == f64::INFINITY {
        return Err(Error::Unbounded);
    }
    let mut lambda = (1.0 + 1e-6) * ratio.max(0.0);
    if lambda <= 0.0 {
        return Ok(0.0);
    }
    let mut r = at(lambda)?;
    while r.min_value >= -tol {
        // the singleton ratio already bounds λ*; only rounding gets here
        lambda *= 2.0;
        if lambda > GROWTH_LIMIT {
            return Err(Error::Unbounded);
        }
        r = at(lambda)?;
    }
    for _ in 0..MAX_STEPS {
        let a = r.maximal_minimizer;
        let ta = a.sum(t);
        if ta <= 0.0 {
            return Err(Error::NumericalInconsistency(format!(
                "binding set {a:?} has t(A) = {ta} at λ = {lambda}"
            )));
        }
        let next = g.eval(a) / ta;
        if !(next < lambda) {
            return Ok(next.min(lambda));
        }
        lambda = next;
        r = at(lambda)?;
        if r.min_value >= -tol {
            return Ok(lambda);
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_STEPS,
        gap: -r.min_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfn::{Cardinality, Explicit};

    #[test]
    fn line_search_examples() {
        let f_or = Explicit::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        for backend in [SfmBackend::Brute, SfmBackend::default()] {
            let l = line_search_p_with(&f_or, &[0.0, 0.0], &[1.0, 1.0], 1e-12, backend).unwrap();
            assert!((l - 0.5).abs() < 1e-12);
            let l = line_search_p_with(&f_or, &[0.0, 0.0], &[1.0, 0.0], 1e-12, backend).unwrap();
            assert!((l - 1.0).abs() < 1e-12);
        }
        let card = Cardinality::new(3).unwrap();
        assert_eq!(
            line_search_p(&card, &[0.0; 3], &[-1.0; 3], 1e-12),
            Err(Error::Unbounded)
        );
    }

    #[test]
    fn infeasible_start_is_rejected() {
        let f_or = Explicit::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            line_search_p(&f_or, &[2.0, 0.0], &[1.0, 1.0], 1e-12),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tight_start_returns_zero() {
        let f_or = Explicit::new(vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(line_search_p(&f_or, &[1.0, 0.0], &[1.0, 0.0], 1e-12).unwrap(), 0.0);
    }
}
