use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::setfn::{check_p, SetFunction, Subset};

/// Rank of the cycle matroid: ground-set element `k` is edge `edges[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_p(edges.len())?;
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::InvalidArgument(format!("edge ({u}, {v}) outside 0..{vertices}")));
        }
        Ok(GraphicMatroid { vertices, edges })
    }
}

impl SetFunction for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    /// Size of a spanning forest of the edges in `a`.
    fn eval(&self, a: Subset) -> f64 {
        let mut uf = UnionFind::<usize>::new(self.vertices);
        a.iter().filter(|&k| uf.union(self.edges[k].0, self.edges[k].1)).count() as f64
    }
}

/// Column rank of a real matrix: ground-set element `k` is column `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMatroid {
    columns: Vec<Vec<f64>>,
    threshold: f64,
}

impl LinearMatroid {
    pub const DEFAULT_TOL: f64 = 1e-9;

    /// `rows` is row-major; pivots below `tol · max column norm` count as zero.
    pub fn new(rows: &[Vec<f64>], tol: f64) -> Result<Self> {
        let p = rows.first().map_or(0, |r| r.len());
        check_p(p)?;
        if let Some(r) = rows.iter().find(|r| r.len() != p) {
            return Err(Error::DimensionMismatch {
                expected: p,
                got: r.len(),
            });
        }
        if !(tol >= 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance {tol} is not >= 0")));
        }
        let columns: Vec<Vec<f64>> = (0..p).map(|k| rows.iter().map(|r| r[k]).collect()).collect();
        let max_norm = columns
            .iter()
            .map(|c| c.iter().map(|x| x * x).sum::<f64>().sqrt())
            .fold(0.0, f64::max);
        Ok(LinearMatroid {
            columns,
            threshold: tol * max_norm,
        })
    }
}

impl SetFunction for LinearMatroid {
    fn ground_size(&self) -> usize {
        self.columns.len()
    }

    fn eval(&self, a: Subset) -> f64 {
        // Gram–Schmidt on the selected columns with re-orthogonalization
        let mut basis: Vec<Vec<f64>> = Vec::new();
        for k in a.iter() {
            let mut v = self.columns[k].clone();
            for _ in 0..2 {
                for b in &basis {
                    let c: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
                    v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
                }
            }
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > self.threshold && norm > 0.0 {
                basis.push(v.into_iter().map(|x| x / norm).collect());
            }
        }
        basis.len() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfn::{is_monotone, is_submodular, CheckOptions};

    #[test]
    fn graphic_examples() {
        let tri = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.eval(Subset::full(3)), 2.0);
        let forest = GraphicMatroid::new(5, vec![(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(forest.eval(Subset::full(3)), 3.0);
        assert!(GraphicMatroid::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn linear_examples() {
        let m = LinearMatroid::new(&[vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 1.0]], 1e-9).unwrap();
        assert_eq!(m.eval(Subset::full(3)), 2.0);
        assert_eq!(m.eval(Subset::from_indices([0, 2])), 2.0);
        assert_eq!(m.eval(Subset::singleton(1)), 1.0);
        let zero = LinearMatroid::new(&[vec![0.0, 1.0]], 1e-9).unwrap();
        assert_eq!(zero.eval(Subset::singleton(0)), 0.0);
    }

    #[test]
    fn ranks_are_polymatroids() {
        let k4 = GraphicMatroid::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_submodular(&k4, 0.0).unwrap().holds);
        assert!(is_monotone(&k4, CheckOptions::default()).unwrap().holds);
    }
}
