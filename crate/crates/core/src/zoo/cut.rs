use super::maxflow::FlowGraph;
use crate::error::{Error, Result};
use crate::setfn::{check_len, check_p, SetFunction, Subset};
use crate::sfm::{negative_part_sum, SfmResult};

/// Weighted directed graph on nodes `0..n`; self-loops are dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize, f64)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize, f64)]) -> Result<Self> {
        check_p(n)?;
        let mut kept = Vec::with_capacity(arcs.len());
        for &(u, v, w) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("arc ({u}, {v}) outside 0..{n}")));
            }
            if !(w >= 0.0) || !w.is_finite() {
                return Err(Error::InvalidArgument(format!("arc weight {w} is not >= 0")));
            }
            if u != v {
                kept.push((u, v, w));
            }
        }
        Ok(Digraph { n, arcs: kept })
    }

    /// Each edge contributes both directions with the same weight.
    pub fn undirected(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let arcs: Vec<_> = edges
            .iter()
            .flat_map(|&(u, v, w)| [(u, v, w), (v, u, w)])
            .collect();
        Digraph::new(n, &arcs)
    }

    /// 4-connected `rows × cols` grid with uniform weight, row-major node ids.
    pub fn grid(rows: usize, cols: usize, weight: f64) -> Result<Self> {
        let id = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((id(r, c), id(r, c + 1), weight));
                }
                if r + 1 < rows {
                    edges.push((id(r, c), id(r + 1, c), weight));
                }
            }
        }
        Digraph::undirected(rows * cols, &edges)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize, f64)] {
        &self.arcs
    }
}

/// `F(A) = Σ_{k∈A, j∉A} d(k, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutFunction {
    graph: Digraph,
}

impl CutFunction {
    pub fn new(graph: Digraph) -> Self {
        CutFunction { graph }
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    /// `f(w) = Σ d(k, j) (w_k − w_j)₊`.
    pub fn lovasz(&self, w: &[f64]) -> f64 {
        assert_eq!(w.len(), self.graph.n, "weight vector length");
        self.graph
            .arcs
            .iter()
            .map(|&(k, j, d)| d * (w[k] - w[j]).max(0.0))
            .sum()
    }
}

impl SetFunction for CutFunction {
    fn ground_size(&self) -> usize {
        self.graph.n
    }
    fn eval(&self, a: Subset) -> f64 {
        self.graph
            .arcs
            .iter()
            .filter(|&&(k, j, _)| a.contains(k) && !a.contains(j))
            .map(|&(_, _, d)| d)
            .sum()
    }
}

/// Minimizes `F(A) − z(A)` for the cut function of `g` by a single max-flow.
///
/// The source feeds node `k` with capacity `(z_k)₊`, node `k` drains to the
/// sink with capacity `(−z_k)₊`, and the source side of a minimum cut is a
/// minimizer. The certificate is the net internal flow minus `z`, a base of
/// `B(F − z)`.
pub fn cut_minimize(g: &Digraph, z: &[f64]) -> Result<SfmResult> {
    let p = g.n;
    check_len(p, z.len())?;
    let (src, sink) = (p, p + 1);
    let mut net = FlowGraph::new(p + 2);
    for &(u, v, d) in &g.arcs {
        net.add_arc(u, v, d);
    }
    let mut src_arcs = Vec::with_capacity(p);
    let mut sink_arcs = Vec::with_capacity(p);
    for (k, &zk) in z.iter().enumerate() {
        src_arcs.push(net.add_arc(src, k, zk.max(0.0)));
        sink_arcs.push(net.add_arc(k, sink, (-zk).max(0.0)));
    }
    net.max_flow(src, sink);
    let from_source = net.reachable_from(src);
    let to_sink = net.reaching(sink);
    let minimal: Subset = (0..p).filter(|&k| from_source[k]).collect();
    let maximal: Subset = (0..p).filter(|&k| !to_sink[k]).collect();
    let f = CutFunction::new(g.clone());
    let min_value = f.eval(maximal) - maximal.sum(z);
    let certificate: Vec<f64> = (0..p)
        .map(|k| net.flow(src_arcs[k]) - net.flow(sink_arcs[k]) - z[k])
        .collect();
    Ok(SfmResult {
        min_value,
        minimal_minimizer: minimal,
        maximal_minimizer: maximal,
        gap: min_value - negative_part_sum(&certificate),
        certificate,
    })
}
