//! Shortest-augmenting-path max-flow (Edmonds–Karp) on real capacities.

use std::collections::VecDeque;

/// Residual capacities at or below this are treated as saturated.
pub const RESIDUAL_EPS: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct FlowGraph {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<f64>,
    residual: Vec<f64>,
}

impl FlowGraph {
    pub fn new(n: usize) -> Self {
        FlowGraph {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            residual: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds arc `u → v`; its reverse arc is `id ^ 1`.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: f64) -> usize {
        let e = self.to.len();
        self.adj[u].push(e);
        self.to.push(v);
        self.cap.push(cap);
        self.residual.push(cap);
        self.adj[v].push(e + 1);
        self.to.push(u);
        self.cap.push(0.0);
        self.residual.push(0.0);
        e
    }

    /// Flow currently carried by arc `e`.
    pub fn flow(&self, e: usize) -> f64 {
        self.cap[e] - self.residual[e]
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> f64 {
        let n = self.node_count();
        let mut total = 0.0;
        let mut parent = vec![usize::MAX; n];
        loop {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut seen = vec![false; n];
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if !seen[v] && self.residual[e] > RESIDUAL_EPS {
                        seen[v] = true;
                        parent[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut bottleneck = f64::INFINITY;
            let mut v = t;
            while v != s {
                let e = parent[v];
                bottleneck = bottleneck.min(self.residual[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = parent[v];
                self.residual[e] -= bottleneck;
                self.residual[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            total += bottleneck;
        }
    }

    /// Nodes reachable from `s` in the residual graph.
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if !seen[v] && self.residual[e] > RESIDUAL_EPS {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Nodes that can still reach `t` in the residual graph.
    pub fn reaching(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[t] = true;
        let mut stack = vec![t];
        while let Some(v) = stack.pop() {
            for &e in &self.adj[v] {
                // e leaves v; its reverse e^1 enters v from `u`
                let u = self.to[e];
                if !seen[u] && self.residual[e ^ 1] > RESIDUAL_EPS {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }
}
