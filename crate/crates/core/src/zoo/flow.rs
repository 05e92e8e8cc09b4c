use super::maxflow::FlowGraph;
use crate::error::{Error, Result};
use crate::setfn::{check_p, SetFunction, Subset};

/// Capacitated network on nodes `0..nodes` with designated sources and sinks.
/// Sink `sinks[k]` is ground-set element `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowNetwork {
    nodes: usize,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    arcs: Vec<(usize, usize, f64)>,
}

impl FlowNetwork {
    pub fn new(
        nodes: usize,
        sources: Vec<usize>,
        sinks: Vec<usize>,
        arcs: Vec<(usize, usize, f64)>,
    ) -> Result<Self> {
        check_p(sinks.len())?;
        let in_range = |v: &usize| *v < nodes;
        if !sources.iter().all(in_range) || !sinks.iter().all(in_range) {
            return Err(Error::InvalidArgument("terminal outside the node range".into()));
        }
        if sources.iter().any(|s| sinks.contains(s)) {
            return Err(Error::InvalidArgument("sources and sinks must be disjoint".into()));
        }
        let mut seen = sinks.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != sinks.len() {
            return Err(Error::InvalidArgument("duplicate sink".into()));
        }
        for &(u, v, c) in &arcs {
            if u >= nodes || v >= nodes {
                return Err(Error::InvalidArgument(format!("arc ({u}, {v}) outside 0..{nodes}")));
            }
            if !(c >= 0.0) || !c.is_finite() {
                return Err(Error::InvalidArgument(format!("capacity {c} is not >= 0")));
            }
        }
        Ok(FlowNetwork {
            nodes,
            sources,
            sinks,
            arcs,
        })
    }
}

/// `F(A)`: maximal flow from the sources into the sinks of `A`, i.e. the
/// minimum capacity of a cut separating `S` from `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowFunction {
    net: FlowNetwork,
    infinity: f64,
}

impl FlowFunction {
    pub fn new(net: FlowNetwork) -> Self {
        let infinity = 1.0 + net.arcs.iter().map(|a| a.2).sum::<f64>();
        FlowFunction { net, infinity }
    }
}

impl SetFunction for FlowFunction {
    fn ground_size(&self) -> usize {
        self.net.sinks.len()
    }

    fn eval(&self, a: Subset) -> f64 {
        if a.is_empty() {
            return 0.0;
        }
        let n = self.net.nodes;
        let (src, sink) = (n, n + 1);
        let mut g = FlowGraph::new(n + 2);
        for &(u, v, c) in &self.net.arcs {
            g.add_arc(u, v, c);
        }
        for &s in &self.net.sources {
            g.add_arc(src, s, self.infinity);
        }
        for k in a.iter() {
            g.add_arc(self.net.sinks[k], sink, self.infinity);
        }
        g.max_flow(src, sink)
    }
}
