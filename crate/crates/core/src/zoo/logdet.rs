use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::setfn::{check_p, SetFunction, Subset};

/// Symmetric positive-definite matrix, validated on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PsdMatrix(DMatrix<f64>);

impl PsdMatrix {
    pub fn new(q: DMatrix<f64>) -> Result<Self> {
        if !q.is_square() {
            return Err(Error::DimensionMismatch {
                expected: q.nrows(),
                got: q.ncols(),
            });
        }
        check_p(q.nrows())?;
        let scale = q.amax().max(1.0);
        if (&q - q.transpose()).amax() > 1e-12 * scale {
            return Err(Error::InvalidArgument("matrix is not symmetric".into()));
        }
        if q.clone().cholesky().is_none() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(PsdMatrix(q))
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
        }
        PsdMatrix::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }
}

/// `F(A) = log det Q_AA`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogDet {
    q: PsdMatrix,
}

impl LogDet {
    pub fn new(q: PsdMatrix) -> Self {
        LogDet { q }
    }
}

impl SetFunction for LogDet {
    fn ground_size(&self) -> usize {
        self.q.0.nrows()
    }

    fn eval(&self, a: Subset) -> f64 {
        if a.is_empty() {
            return 0.0;
        }
        let idx = a.to_vec();
        let sub = DMatrix::from_fn(idx.len(), idx.len(), |i, j| self.q.0[(idx[i], idx[j])]);
        // principal submatrices of a positive-definite matrix stay positive definite
        let l = sub.cholesky().expect("principal submatrix is positive definite");
        2.0 * l.l_dirty().diagonal().iter().map(|d| d.ln()).sum::<f64>()
    }
}
