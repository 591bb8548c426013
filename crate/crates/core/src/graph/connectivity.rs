use fixedbitset::FixedBitSet;

use super::flow::SplitNetwork;
use super::{SimpleGraph, VertexSet};
use crate::error::{Error, Result};

/// A separating set together with two vertex sets it separates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub cut: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl CutWitness {
    /// Checks that `side_a` and `side_b` are nonempty, disjoint from the cut
    /// and from each other, and lie in different components of `g - cut`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        if self.side_a.is_empty() || self.side_b.is_empty() {
            return false;
        }
        let mut removed = FixedBitSet::with_capacity(g.vertex_count());
        self.cut.iter().for_each(|&v| removed.insert(v));
        if self
            .side_a
            .iter()
            .chain(&self.side_b)
            .any(|&v| removed.contains(v))
        {
            return false;
        }
        let comp = component_ids(g, &removed);
        let a = comp[self.side_a[0]];
        let b = comp[self.side_b[0]];
        a != b
            && self.side_a.iter().all(|&v| comp[v] == a)
            && self.side_b.iter().all(|&v| comp[v] == b)
    }
}

/// Vertex connectivity with an optional minimum separating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub kappa: usize,
    /// Absent exactly for complete graphs.
    pub witness: Option<CutWitness>,
}

fn component_ids(g: &SimpleGraph, removed: &FixedBitSet) -> Vec<usize> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut next_id = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if removed.contains(start) || comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next_id;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !removed.contains(w) && comp[w] == usize::MAX {
                    comp[w] = next_id;
                    stack.push(w);
                }
            }
        }
        next_id += 1;
    }
    comp
}

/// Components of `g` minus `removed`, each sorted, ordered by smallest vertex.
pub fn components_without(g: &SimpleGraph, removed: &FixedBitSet) -> Vec<VertexSet> {
    let comp = component_ids(g, removed);
    let count = comp.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (v, &c) in comp.iter().enumerate() {
        if c != usize::MAX {
            out[c].push(v);
        }
    }
    out
}

pub fn connected_components(g: &SimpleGraph) -> Vec<VertexSet> {
    components_without(g, &FixedBitSet::with_capacity(g.vertex_count()))
}

/// `true` iff `g - s` has at least two components.
pub fn is_separating(g: &SimpleGraph, s: &[usize]) -> bool {
    let mut removed = FixedBitSet::with_capacity(g.vertex_count());
    s.iter().for_each(|&v| removed.insert(v));
    components_without(g, &removed).len() >= 2
}

pub fn dominating_vertices(g: &SimpleGraph) -> VertexSet {
    let n = g.vertex_count();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Induced subgraph on `V \ s`, labels preserved.
pub fn remove_vertices(g: &SimpleGraph, s: &[usize]) -> SimpleGraph {
    let mut removed = FixedBitSet::with_capacity(g.vertex_count());
    s.iter().for_each(|&v| removed.insert(v));
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| !removed.contains(v)).collect();
    g.induced_subgraph(&keep)
}

/// Minimum number of vertices separating the non-adjacent pair `(s, t)`,
/// with a minimum separator.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize) -> Result<(usize, VertexSet)> {
    if s == t || g.has_edge(s, t) {
        return Err(Error::InvalidArgument(format!(
            "vertices {s} and {t} must be distinct and non-adjacent"
        )));
    }
    let mut net = SplitNetwork::new(g);
    let k = net.max_flow(s, t, usize::MAX);
    Ok((k, net.source_side_cut(s)))
}

fn trivial_cases(g: &SimpleGraph) -> Result<Option<Connectivity>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(Some(Connectivity {
            kappa: n - 1,
            witness: None,
        }));
    }
    let comps = connected_components(g);
    if comps.len() > 1 {
        return Ok(Some(Connectivity {
            kappa: 0,
            witness: Some(CutWitness {
                cut: Vec::new(),
                side_a: comps[0].clone(),
                side_b: comps[1].clone(),
            }),
        }));
    }
    Ok(None)
}

fn witness_for(g: &SimpleGraph, s: usize, t: usize, cut: VertexSet) -> CutWitness {
    let mut removed = FixedBitSet::with_capacity(g.vertex_count());
    cut.iter().for_each(|&v| removed.insert(v));
    let comps = components_without(g, &removed);
    let find = |v: usize| comps.iter().find(|c| c.binary_search(&v).is_ok()).cloned().unwrap_or_default();
    CutWitness {
        side_a: find(s),
        side_b: find(t),
        cut,
    }
}

/// Vertex connectivity via unit-capacity max-flow.
///
/// Sources are scanned in vertex order and each is paired with every later
/// non-adjacent vertex. Once more sources have been scanned than the best
/// cut found so far (or the minimum degree), some scanned source lies outside
/// a minimum cut, so the scan stops. The reported cut belongs to the
/// lexicographically first pair `(s, t)` attaining the minimum and is the
/// minimum cut closest to `s`.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<Connectivity> {
    if let Some(c) = trivial_cases(g)? {
        return Ok(c);
    }
    let n = g.vertex_count();
    let min_degree = g.min_degree().unwrap_or(0);
    let mut net = SplitNetwork::new(g);
    let mut best: Option<(usize, usize, usize, VertexSet)> = None;
    for s in 0..n {
        let bound = best.as_ref().map_or(min_degree, |b| b.0.min(min_degree));
        if s > bound {
            break;
        }
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
            let k = net.max_flow(s, t, limit);
            if k < limit {
                best = Some((k, s, t, net.source_side_cut(s)));
            }
        }
    }
    let (kappa, s, t, cut) = best.expect("a connected non-complete graph has a non-adjacent pair");
    Ok(Connectivity {
        kappa,
        witness: Some(witness_for(g, s, t, cut)),
    })
}

/// Reference implementation: full max-flow over every non-adjacent pair.
pub fn vertex_connectivity_all_pairs(g: &SimpleGraph) -> Result<Connectivity> {
    if let Some(c) = trivial_cases(g)? {
        return Ok(c);
    }
    let n = g.vertex_count();
    let mut net = SplitNetwork::new(g);
    let mut best: Option<(usize, usize, usize, VertexSet)> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let k = net.max_flow(s, t, usize::MAX);
            if best.as_ref().is_none_or(|b| k < b.0) {
                best = Some((k, s, t, net.source_side_cut(s)));
            }
        }
    }
    let (kappa, s, t, cut) = best.expect("non-adjacent pair exists");
    Ok(Connectivity {
        kappa,
        witness: Some(witness_for(g, s, t, cut)),
    })
}
