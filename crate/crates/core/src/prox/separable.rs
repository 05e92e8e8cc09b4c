//! Separable strictly convex terms `Σ_j ψ_j(w_j)` and the scalar equations
//! they induce.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::setfn::check_len;

const ROOT_MAX_ITER: usize = 200;
const ROOT_REL_TOL: f64 = 1e-12;

/// Solves `h(x) = target` for a continuous non-decreasing `h` that is
/// unbounded in both directions.
///
/// The bracket is grown geometrically from `x0`, then shrunk by secant steps
/// (Illinois variant) with a bisection fallback.
pub fn solve_increasing<H: Fn(f64) -> f64>(h: H, target: f64, x0: f64) -> Result<f64> {
    let r = |x: f64| h(x) - target;
    let r0 = r(x0);
    if r0 == 0.0 {
        return Ok(x0);
    }
    let mut iterations = 0;
    let mut step = 1.0_f64.max(x0.abs());
    let (mut lo, mut hi, mut rlo, mut rhi);
    if r0 < 0.0 {
        (lo, rlo) = (x0, r0);
        loop {
            hi = x0 + step;
            rhi = r(hi);
            if rhi >= 0.0 {
                break;
            }
            (lo, rlo) = (hi, rhi);
            step *= 2.0;
            iterations += 1;
            if iterations >= ROOT_MAX_ITER || !hi.is_finite() {
                return Err(Error::NoConvergence { iterations, gap: rhi.abs() });
            }
        }
    } else {
        (hi, rhi) = (x0, r0);
        loop {
            lo = x0 - step;
            rlo = r(lo);
            if rlo <= 0.0 {
                break;
            }
            (hi, rhi) = (lo, rlo);
            step *= 2.0;
            iterations += 1;
            if iterations >= ROOT_MAX_ITER || !lo.is_finite() {
                return Err(Error::NoConvergence { iterations, gap: rlo.abs() });
            }
        }
    }
    if rlo == 0.0 {
        return Ok(lo);
    }
    if rhi == 0.0 {
        return Ok(hi);
    }
    let mut side = 0i8;
    while iterations < ROOT_MAX_ITER {
        iterations += 1;
        let width = hi - lo;
        if width <= ROOT_REL_TOL * lo.abs().max(hi.abs()).max(1.0) {
            return Ok(0.5 * (lo + hi));
        }
        let mut x = lo - rlo * width / (rhi - rlo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let rx = r(x);
        if rx == 0.0 {
            return Ok(x);
        }
        if rx < 0.0 {
            (lo, rlo) = (x, rx);
            if side == -1 {
                rhi *= 0.5;
            }
            side = -1;
        } else {
            (hi, rhi) = (x, rx);
            if side == 1 {
                rlo *= 0.5;
            }
            side = 1;
        }
    }
    Err(Error::NoConvergence {
        iterations,
        gap: hi - lo,
    })
}

/// A strictly convex, continuously differentiable `ψ: ℝ → ℝ` whose derivative
/// is a bijection of `ℝ`.
pub trait ScalarConvex: Send + Sync {
    fn value(&self, w: f64) -> f64;

    fn deriv(&self, w: f64) -> f64;

    /// `(ψ′)⁻¹(y)`.
    fn deriv_inv(&self, y: f64) -> Result<f64> {
        solve_increasing(|w| self.deriv(w), y, 0.0)
    }

    /// `ψ*(y) = y·w − ψ(w)` at `w = (ψ′)⁻¹(y)`.
    fn conjugate(&self, y: f64) -> Result<f64> {
        let w = self.deriv_inv(y)?;
        Ok(y * w - self.value(w))
    }
}

/// `ψ(w) = (a/2)(w − z)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic {
    pub a: f64,
    pub z: f64,
}

impl ScalarConvex for Quadratic {
    fn value(&self, w: f64) -> f64 {
        0.5 * self.a * (w - self.z).powi(2)
    }
    fn deriv(&self, w: f64) -> f64 {
        self.a * (w - self.z)
    }
    fn deriv_inv(&self, y: f64) -> Result<f64> {
        Ok(self.z + y / self.a)
    }
    fn conjugate(&self, y: f64) -> Result<f64> {
        Ok(y * self.z + y * y / (2.0 * self.a))
    }
}

/// Weights `a > 0` and centers `z` of `Σ_j (a_j/2)(w_j − z_j)²`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticSpec {
    a: Vec<f64>,
    z: Vec<f64>,
}

impl QuadraticSpec {
    pub fn new(a: Vec<f64>, z: Vec<f64>) -> Result<Self> {
        check_len(a.len(), z.len())?;
        if a.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidArgument("quadratic weights must be positive".into()));
        }
        if z.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("quadratic centers must be finite".into()));
        }
        Ok(QuadraticSpec { a, z })
    }

    /// Unit weights around `z`.
    pub fn centered(z: Vec<f64>) -> Self {
        QuadraticSpec {
            a: vec![1.0; z.len()],
            z,
        }
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn z(&self) -> &[f64] {
        &self.z
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// `Σ_j ψ_j(w_j)`. Quadratic instances keep their parameters so that solvers
/// can use closed forms.
#[derive(Clone)]
pub struct Separable {
    terms: Vec<Arc<dyn ScalarConvex>>,
    quadratic: Option<QuadraticSpec>,
}

impl std::fmt::Debug for Separable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.quadratic {
            Some(q) => f.debug_tuple("Separable").field(q).finish(),
            None => write!(f, "Separable(<{} terms>)", self.terms.len()),
        }
    }
}

impl From<QuadraticSpec> for Separable {
    fn from(q: QuadraticSpec) -> Self {
        let terms = q
            .a
            .iter()
            .zip(&q.z)
            .map(|(&a, &z)| Arc::new(Quadratic { a, z }) as Arc<dyn ScalarConvex>)
            .collect();
        Separable {
            terms,
            quadratic: Some(q),
        }
    }
}

impl Separable {
    /// Generic terms, spot-checked for a strictly increasing derivative and a
    /// consistent inverse on a grid.
    pub fn new(terms: Vec<Arc<dyn ScalarConvex>>) -> Result<Self> {
        for (j, t) in terms.iter().enumerate() {
            let mut prev = f64::NEG_INFINITY;
            for i in -20..=20 {
                let w = i as f64 * 0.5;
                let d = t.deriv(w);
                if !(d > prev) {
                    return Err(Error::InvalidArgument(format!(
                        "derivative of term {j} is not strictly increasing near {w}"
                    )));
                }
                prev = d;
                let back = t.deriv_inv(d)?;
                if (back - w).abs() > 1e-9 * (1.0 + w.abs()) {
                    return Err(Error::InvalidArgument(format!(
                        "inverse derivative of term {j} is inconsistent at {w}"
                    )));
                }
            }
        }
        Ok(Separable {
            terms,
            quadratic: None,
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn quadratic(&self) -> Option<&QuadraticSpec> {
        self.quadratic.as_ref()
    }

    pub fn term(&self, j: usize) -> &dyn ScalarConvex {
        self.terms[j].as_ref()
    }

    pub fn deriv(&self, j: usize, w: f64) -> f64 {
        self.terms[j].deriv(w)
    }

    pub fn deriv_inv(&self, j: usize, y: f64) -> Result<f64> {
        self.terms[j].deriv_inv(y)
    }

    /// `Σ_j ψ_j(w_j)`.
    pub fn value(&self, w: &[f64]) -> f64 {
        self.terms.iter().zip(w).map(|(t, &x)| t.value(x)).sum()
    }

    /// Dual objective `−Σ_j ψ*_j(−s_j)`.
    pub fn dual_value(&self, s: &[f64]) -> Result<f64> {
        let mut total = 0.0;
        for (t, &x) in self.terms.iter().zip(s) {
            total -= t.conjugate(-x)?;
        }
        Ok(total)
    }

    /// Derivative of the dual term `g_j(s) = ψ*_j(−s)`, i.e. `−(ψ′_j)⁻¹(−s)`.
    pub fn dual_deriv(&self, j: usize, s: f64) -> Result<f64> {
        Ok(-self.deriv_inv(j, -s)?)
    }

    /// Primal point paired with a dual point: `u_k = (ψ′_k)⁻¹(−s_k)`.
    pub fn primal_from_dual(&self, s: &[f64]) -> Result<Vec<f64>> {
        s.iter()
            .enumerate()
            .map(|(k, &v)| self.deriv_inv(k, -v))
            .collect()
    }

    /// Dual point paired with a primal point: `s_k = −ψ′_k(u_k)`.
    pub fn dual_from_primal(&self, u: &[f64]) -> Vec<f64> {
        u.iter().enumerate().map(|(k, &w)| -self.deriv(k, w)).collect()
    }
}
