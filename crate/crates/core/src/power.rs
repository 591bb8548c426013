//! Commuting, power and enhanced power graphs of a finite group.
//!
//! Vertex `i` of every graph here is group element `i` (the commuting,
//! deleted and proper variants keep the surviving elements in index order),
//! labelled with the element label.

use crate::graph::{dominating_vertices, remove_vertices, SimpleGraph};
use crate::group::{FiniteGroup, GroupElement};
use crate::number::gcd;

fn labelled(g: &FiniteGroup) -> SimpleGraph {
    SimpleGraph::with_labels(g.labels().to_vec())
}

/// `u ~ v` iff `u, v` lie in a common cyclic subgroup. Built by stamping a
/// clique on each distinct `<g>`.
pub fn enhanced_power_graph(g: &FiniteGroup) -> SimpleGraph {
    let mut graph = labelled(g);
    let mut stamped = vec![false; g.order()];
    for x in g.elements() {
        if stamped[x.index()] {
            continue;
        }
        let powers = g.cyclic_subgroup(x);
        let o = powers.len() as u64;
        // every generator of <x> spans the same clique
        for (k, y) in powers.iter().enumerate() {
            if gcd(k as u64, o) == 1 {
                stamped[y.index()] = true;
            }
        }
        let members: Vec<usize> = powers.iter().map(|e| e.index()).collect();
        graph.add_clique(&members);
    }
    graph
}

/// `u ~ v` iff one is a power of the other.
pub fn power_graph(g: &FiniteGroup) -> SimpleGraph {
    let mut graph = labelled(g);
    for x in g.elements() {
        for y in g.cyclic_subgroup(x) {
            graph.add_edge(x.index(), y.index());
        }
    }
    graph
}

/// Non-central elements, adjacent iff they commute.
pub fn commuting_graph(g: &FiniteGroup) -> SimpleGraph {
    let center = g.center();
    let vertices: Vec<GroupElement> = g
        .elements()
        .filter(|x| center.binary_search(x).is_err())
        .collect();
    let mut graph = SimpleGraph::with_labels(vertices.iter().map(|&x| g.label(x).to_string()).collect());
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            if g.commutes(a, b) {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

/// Enhanced power graph minus the identity.
pub fn deleted_enhanced(g: &FiniteGroup) -> SimpleGraph {
    remove_vertices(&enhanced_power_graph(g), &[g.identity().index()])
}

/// Enhanced power graph minus all of its dominating vertices.
pub fn proper_enhanced(g: &FiniteGroup) -> SimpleGraph {
    let full = enhanced_power_graph(g);
    remove_vertices(&full, &dominating_vertices(&full))
}

/// Which group graph to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Enhanced,
    Power,
    Commuting,
    Deleted,
    Proper,
}

impl GraphKind {
    pub fn build(self, g: &FiniteGroup) -> SimpleGraph {
        match self {
            GraphKind::Enhanced => enhanced_power_graph(g),
            GraphKind::Power => power_graph(g),
            GraphKind::Commuting => commuting_graph(g),
            GraphKind::Deleted => deleted_enhanced(g),
            GraphKind::Proper => proper_enhanced(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Enhanced => "enhanced",
            GraphKind::Power => "power",
            GraphKind::Commuting => "commuting",
            GraphKind::Deleted => "deleted",
            GraphKind::Proper => "proper",
        }
    }
}

impl std::str::FromStr for GraphKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "enhanced" => GraphKind::Enhanced,
            "power" => GraphKind::Power,
            "commuting" => GraphKind::Commuting,
            "deleted" => GraphKind::Deleted,
            "proper" => GraphKind::Proper,
            other => return Err(crate::Error::InvalidArgument(format!("unknown graph kind {other:?}"))),
        })
    }
}
