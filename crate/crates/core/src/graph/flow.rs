//! Unit vertex-capacity max-flow on the vertex-split digraph.
//!
//! Vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by an arc of
//! capacity 1; each undirected edge `{u, v}` becomes `out(u) -> in(v)` and
//! `out(v) -> in(u)` with unbounded capacity. Augmenting paths are found by
//! BFS.

use std::collections::VecDeque;

use super::SimpleGraph;

const UNBOUNDED: u32 = u32::MAX / 2;

pub(crate) struct SplitNetwork {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    residual: Vec<u32>,
    parent_arc: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl SplitNetwork {
    pub fn new(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let mut net = SplitNetwork {
            head: vec![NONE; 2 * n],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            residual: Vec::new(),
            parent_arc: vec![NONE; 2 * n],
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, UNBOUNDED);
            net.arc(2 * v + 1, 2 * u, UNBOUNDED);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        for (a, b, c) in [(from, to, cap), (to, from, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.residual.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, stopping early once
    /// `limit` is reached. `s` and `t` must be distinct and non-adjacent.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.residual.copy_from_slice(&self.cap);
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit && self.augment(source, sink) {
            flow += 1;
        }
        flow
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        self.parent_arc.iter_mut().for_each(|p| *p = NONE);
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let mut e = self.head[x];
            while e != NONE {
                let y = self.to[e];
                if self.residual[e] > 0 && !seen[y] {
                    seen[y] = true;
                    self.parent_arc[y] = e;
                    if y == sink {
                        self.push_path(source, sink);
                        return true;
                    }
                    queue.push_back(y);
                }
                e = self.next[e];
            }
        }
        false
    }

    fn push_path(&mut self, source: usize, sink: usize) {
        let mut bottleneck = u32::MAX;
        let mut y = sink;
        while y != source {
            let e = self.parent_arc[y];
            bottleneck = bottleneck.min(self.residual[e]);
            y = self.to[e ^ 1];
        }
        let mut y = sink;
        while y != source {
            let e = self.parent_arc[y];
            self.residual[e] -= bottleneck;
            self.residual[e ^ 1] += bottleneck;
            y = self.to[e ^ 1];
        }
    }

    /// Vertices whose split arc crosses the residual cut closest to `s`.
    /// Only meaningful right after a `max_flow` call that was not truncated.
    pub fn source_side_cut(&self, s: usize) -> Vec<usize> {
        let source = 2 * s + 1;
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let mut e = self.head[x];
            while e != NONE {
                let y = self.to[e];
                if self.residual[e] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
                e = self.next[e];
            }
        }
        (0..self.head.len() / 2)
            .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
            .collect()
    }
}
