//! Wolfe's minimum-norm-point algorithm over the base polyhedron.
//!
//! Solves `min Σ_j d_j (s_j − c_j)²` over `s ∈ B(F)`. Internally the problem is
//! mapped to a Euclidean projection of the origin through
//! `y = √d ⊙ (s − c)`, and linear minimization over the image uses the greedy
//! algorithm on `−√d ⊙ y`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::lovasz::{dot, greedy_base};
use crate::setfn::SetFunction;

/// Coefficients below this are treated as zero and their points dropped.
const DROP: f64 = 1e-12;
const JITTER: f64 = 1e-12;

/// Active set of greedy vertices and the convex weights of the current iterate.
#[derive(Debug, Clone, Default)]
pub struct Corral {
    /// Extreme points of `B(F)` in the original coordinates.
    pub bases: Vec<Vec<f64>>,
    pub coeffs: Vec<f64>,
    /// Inner products of the transformed points.
    pub gram: Vec<Vec<f64>>,
    points: Vec<Vec<f64>>,
}

impl Corral {
    fn push(&mut self, base: Vec<f64>, point: Vec<f64>) {
        let row: Vec<f64> = self.points.iter().map(|q| dot(q, &point)).collect();
        for (g, &v) in self.gram.iter_mut().zip(&row) {
            g.push(v);
        }
        let mut row = row;
        row.push(dot(&point, &point));
        self.gram.push(row);
        self.points.push(point);
        self.bases.push(base);
        self.coeffs.push(0.0);
    }

    fn retain(&mut self, keep: &[bool]) {
        let mut it = keep.iter();
        self.bases.retain(|_| *it.next().unwrap());
        let mut it = keep.iter();
        self.points.retain(|_| *it.next().unwrap());
        let mut it = keep.iter();
        self.coeffs.retain(|_| *it.next().unwrap());
        let mut it = keep.iter();
        self.gram.retain(|_| *it.next().unwrap());
        for row in &mut self.gram {
            let mut it = keep.iter();
            row.retain(|_| *it.next().unwrap());
        }
    }

    fn combine(vectors: &[Vec<f64>], coeffs: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; vectors.first().map_or(0, |v| v.len())];
        for (v, &l) in vectors.iter().zip(coeffs) {
            for (o, &x) in out.iter_mut().zip(v) {
                *o += l * x;
            }
        }
        out
    }

    /// Current iterate `Σ λ_i s_i` in original coordinates.
    pub fn point(&self) -> Vec<f64> {
        Self::combine(&self.bases, &self.coeffs)
    }

    fn transformed(&self) -> Vec<f64> {
        Self::combine(&self.points, &self.coeffs)
    }

    /// Minimizer of `‖Σ μ_i y_i‖²` subject to `Σ μ_i = 1` (no sign constraint).
    fn affine_minimizer(&self) -> Vec<f64> {
        let n = self.points.len();
        // G + 11ᵀ is positive definite exactly when the points are affinely independent
        let m = DMatrix::from_fn(n, n, |i, j| self.gram[i][j] + 1.0);
        let ones = DVector::from_element(n, 1.0);
        let alpha = match m.clone().cholesky() {
            Some(ch) => {
                // one step of iterative refinement
                let a = ch.solve(&ones);
                let r = &ones - &m * &a;
                a + ch.solve(&r)
            }
            None => {
                let scale = 1.0 + (0..n).map(|i| self.gram[i][i]).fold(0.0, f64::max);
                let jittered = &m + DMatrix::identity(n, n) * (JITTER * scale);
                match jittered.clone().cholesky() {
                    Some(ch) => ch.solve(&ones),
                    None => jittered.lu().solve(&ones).unwrap_or_else(|| ones.clone()),
                }
            }
        };
        let total: f64 = alpha.iter().sum();
        alpha.iter().map(|a| a / total).collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MinNormOptions {
    /// Relative tolerance on the Wolfe gap.
    pub eps: f64,
    /// Major-cycle budget; `None` means `100 · p`.
    pub max_major_cycles: Option<usize>,
}

impl Default for MinNormOptions {
    fn default() -> Self {
        MinNormOptions {
            eps: 1e-9,
            max_major_cycles: None,
        }
    }
}

impl MinNormOptions {
    pub fn with_eps(eps: f64) -> Self {
        MinNormOptions {
            eps,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct MinNormPoint {
    pub x: Vec<f64>,
    pub corral: Corral,
    /// `⟨x−c, x⟩_d − min_{s∈B(F)} ⟨x−c, s⟩_d` at the returned point.
    pub gap: f64,
    pub major_cycles: usize,
    pub converged: bool,
}

impl MinNormPoint {
    pub fn into_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NoConvergence {
                iterations: self.major_cycles,
                gap: self.gap,
            })
        }
    }
}

/// Euclidean minimum-norm point of `B(F)`.
pub fn min_norm_point<F: SetFunction + ?Sized>(f: &F, eps: f64) -> Result<MinNormPoint> {
    let p = f.ground_size();
    min_norm_point_weighted(f, &vec![1.0; p], &vec![0.0; p], MinNormOptions::with_eps(eps))
}

/// Minimizes `Σ_j d_j (s_j − c_j)²` over `B(F)`.
///
/// A result with `converged == false` carries the best iterate reached within
/// the major-cycle budget.
pub fn min_norm_point_weighted<F: SetFunction + ?Sized>(
    f: &F,
    metric: &[f64],
    center: &[f64],
    opts: MinNormOptions,
) -> Result<MinNormPoint> {
    let p = f.ground_size();
    crate::setfn::check_len(p, metric.len())?;
    crate::setfn::check_len(p, center.len())?;
    if metric.iter().any(|&d| !(d > 0.0 && d.is_finite())) {
        return Err(Error::InvalidArgument("metric weights must be positive".into()));
    }
    if !(opts.eps > 0.0) {
        return Err(Error::InvalidArgument("eps must be positive".into()));
    }
    let root: Vec<f64> = metric.iter().map(|d| d.sqrt()).collect();
    let to_point = |s: &[f64]| -> Vec<f64> {
        s.iter()
            .zip(center)
            .zip(&root)
            .map(|((s, c), r)| r * (s - c))
            .collect()
    };
    // linear minimization of ⟨y, ·⟩ over the transformed polytope
    let lmo = |y: &[f64]| -> Vec<f64> {
        let w: Vec<f64> = y.iter().zip(&root).map(|(y, r)| -y * r).collect();
        greedy_base(f, &w)
    };

    let max_major = opts.max_major_cycles.unwrap_or(100 * p).max(1);
    let mut corral = Corral::default();
    let start: Vec<f64> = metric.iter().zip(center).map(|(d, c)| d * c).collect();
    let s0 = greedy_base(f, &start);
    let y0 = to_point(&s0);
    corral.push(s0, y0);
    corral.coeffs[0] = 1.0;

    let mut gap = f64::INFINITY;
    let mut converged = false;
    let mut major = 0;
    let mut last_norm = f64::INFINITY;
    while major < max_major {
        major += 1;
        let y = corral.transformed();
        let x = corral.point();
        let q_base = lmo(&y);
        let q = to_point(&q_base);
        let norm = dot(&y, &y);
        gap = norm - dot(&y, &q);
        let scale = 1.0 + dot(&x, &x.iter().zip(metric).map(|(x, d)| x * d).collect::<Vec<_>>());
        if gap <= opts.eps * scale {
            converged = true;
            break;
        }
        // exact arithmetic strictly decreases the norm across major cycles
        debug_assert!(
            norm <= last_norm + 1e-9 * (1.0 + last_norm.min(norm)),
            "min-norm iterate grew from {last_norm} to {norm}"
        );
        if corral.bases.contains(&q_base) || norm > last_norm {
            // no descent possible in floating point
            break;
        }
        last_norm = norm;
        corral.push(q_base, q);
        minor_cycles(&mut corral);
    }
    let x = corral.point();
    Ok(MinNormPoint {
        x,
        corral,
        gap,
        major_cycles: major,
        converged,
    })
}

fn minor_cycles(corral: &mut Corral) {
    let budget = corral.coeffs.len() + 1;
    for _ in 0..budget {
        let mu = corral.affine_minimizer();
        if mu.iter().all(|&m| m > DROP) {
            corral.coeffs = mu;
            return;
        }
        // step from λ toward μ until the first coefficient hits zero
        let lambda = &corral.coeffs;
        let theta = lambda
            .iter()
            .zip(&mu)
            .filter(|(_, &m)| m <= DROP)
            .map(|(&l, &m)| if l - m > 0.0 { l / (l - m) } else { 0.0 })
            .fold(1.0_f64, f64::min)
            .clamp(0.0, 1.0);
        let mut next: Vec<f64> = lambda
            .iter()
            .zip(&mu)
            .map(|(&l, &m)| (1.0 - theta) * l + theta * m)
            .collect();
        let mut keep: Vec<bool> = next.iter().map(|&v| v > DROP).collect();
        if keep.iter().all(|&k| k) {
            // rounding left every coefficient positive; drop the smallest
            let (i, _) = next
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.total_cmp(b.1))
                .unwrap();
            keep[i] = false;
        }
        if !keep.iter().any(|&k| k) {
            return;
        }
        let mut it = keep.iter();
        next.retain(|_| *it.next().unwrap());
        let total: f64 = next.iter().sum();
        corral.retain(&keep);
        corral.coeffs = next.iter().map(|v| v / total).collect();
    }
}
