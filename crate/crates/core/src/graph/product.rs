//! Strong products and the I-/L-set separators of strong products.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::connectivity::{components_without, is_separating};
use super::{SimpleGraph, VertexSet};
use crate::error::{Error, Result};

fn tuple_label(parts: &[&str]) -> String {
    format!("({})", parts.join(","))
}

/// Strong product of one or more factors. Vertices are tuples in
/// lexicographic order (first factor most significant); two distinct tuples
/// are adjacent iff every coordinate is equal or adjacent.
pub fn strong_product(factors: &[&SimpleGraph]) -> Result<SimpleGraph> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("strong product needs at least one factor".into()));
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let sizes: Vec<usize> = factors.iter().map(|g| g.vertex_count()).collect();
    let total = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s))
        .ok_or(Error::Overflow("strong product size"))?;
    let mut strides = vec![1; sizes.len()];
    for i in (0..sizes.len() - 1).rev() {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    // closed neighbourhoods per factor
    let closed: Vec<Vec<Vec<usize>>> = factors
        .iter()
        .map(|g| {
            (0..g.vertex_count())
                .map(|v| {
                    let mut n: Vec<usize> = g.neighbors(v).collect();
                    n.push(v);
                    n.sort_unstable();
                    n
                })
                .collect()
        })
        .collect();

    let labels = (0..total)
        .map(|u| {
            let parts: Vec<&str> = factors
                .iter()
                .enumerate()
                .map(|(i, g)| g.label(u / strides[i] % sizes[i]))
                .collect();
            tuple_label(&parts)
        })
        .collect();
    let mut product = SimpleGraph::with_labels(labels);
    let mut coords = vec![0; factors.len()];
    let mut choice = vec![0; factors.len()];
    for u in 0..total {
        for i in 0..factors.len() {
            coords[i] = u / strides[i] % sizes[i];
        }
        // odometer over the product of closed neighbourhoods
        choice.iter_mut().for_each(|c| *c = 0);
        'odometer: loop {
            let v: usize = (0..factors.len())
                .map(|i| closed[i][coords[i]][choice[i]] * strides[i])
                .sum();
            if v > u {
                product.add_edge(u, v);
            }
            for i in (0..factors.len()).rev() {
                choice[i] += 1;
                if choice[i] < closed[i][coords[i]].len() {
                    continue 'odometer;
                }
                choice[i] = 0;
            }
            break;
        }
    }
    Ok(product)
}

/// True iff both graphs carry the same label set and the label bijection
/// maps edges onto edges.
pub fn graphs_equal(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let index: HashMap<&str, usize> = h
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    if index.len() != h.vertex_count() {
        return false;
    }
    let Some(map) = g
        .labels()
        .iter()
        .map(|l| index.get(l.as_str()).copied())
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let mut hit = vec![false; h.vertex_count()];
    for &m in &map {
        if std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    g.edges().into_iter().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// One factor's contribution to an I-/L-set: a separating set of the factor
/// and a component of the factor minus that set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacapanFactor {
    pub factor: usize,
    pub separator: VertexSet,
    pub component: VertexSet,
}

/// The chosen factors `F` with their separators and components. An I-set
/// when `|F| = 1`, an L-set otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacapanSpec {
    pub entries: Vec<SpacapanFactor>,
}

fn normalized(set: &[usize]) -> VertexSet {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn validate_spec(factors: &[&SimpleGraph], spec: &SpacapanSpec) -> Result<()> {
    if spec.entries.is_empty() {
        return Err(Error::InvalidArgument("the factor set F must be nonempty".into()));
    }
    let mut used = vec![false; factors.len()];
    for entry in &spec.entries {
        let i = entry.factor;
        let bad = |reason: String| Error::InvalidSpacapan { factor: i, reason };
        let g = factors
            .get(i)
            .ok_or_else(|| bad(format!("only {} factors", factors.len())))?;
        if std::mem::replace(&mut used[i], true) {
            return Err(bad("factor listed twice".into()));
        }
        let n = g.vertex_count();
        if entry.separator.iter().chain(&entry.component).any(|&v| v >= n) {
            return Err(bad("vertex out of range".into()));
        }
        if !is_separating(g, &entry.separator) {
            return Err(bad(if g.is_complete() {
                "a complete factor has no separating set".into()
            } else {
                format!("{:?} does not separate the factor", entry.separator)
            }));
        }
        let mut removed = FixedBitSet::with_capacity(n);
        entry.separator.iter().for_each(|&v| removed.insert(v));
        let component = normalized(&entry.component);
        if !components_without(g, &removed).contains(&component) {
            return Err(bad(format!(
                "{:?} is not a component of the factor minus its separator",
                entry.component
            )));
        }
    }
    Ok(())
}

/// `S_F = prod U_i - prod W_i`, with `U_i = S_i ∪ A_i`, `W_i = A_i` on `F`
/// and `U_i = W_i = V_i` elsewhere. Returns product vertex indices in the
/// order used by [`strong_product`].
pub fn build_spacapan_set(factors: &[&SimpleGraph], spec: &SpacapanSpec) -> Result<VertexSet> {
    validate_spec(factors, spec)?;
    let sizes: Vec<usize> = factors.iter().map(|g| g.vertex_count()).collect();
    let total: usize = sizes.iter().product();
    let mut strides = vec![1; sizes.len()];
    for i in (0..sizes.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    let masks: Vec<(usize, FixedBitSet, FixedBitSet)> = spec
        .entries
        .iter()
        .map(|e| {
            let n = sizes[e.factor];
            let mut in_a = FixedBitSet::with_capacity(n);
            e.component.iter().for_each(|&v| in_a.insert(v));
            let mut in_u = in_a.clone();
            e.separator.iter().for_each(|&v| in_u.insert(v));
            (e.factor, in_u, in_a)
        })
        .collect();
    Ok((0..total)
        .filter(|&x| {
            let coord = |i: usize| x / strides[i] % sizes[i];
            masks.iter().all(|(i, u, _)| u.contains(coord(*i)))
                && !masks.iter().all(|(i, _, a)| a.contains(coord(*i)))
        })
        .collect())
}

/// `|S_F| = prod |U_i| - prod |W_i|` without building the set.
pub fn spacapan_set_size(factors: &[&SimpleGraph], spec: &SpacapanSpec) -> Result<u128> {
    validate_spec(factors, spec)?;
    let mut u: u128 = 1;
    let mut w: u128 = 1;
    for (i, g) in factors.iter().enumerate() {
        match spec.entries.iter().find(|e| e.factor == i) {
            Some(e) => {
                let a = normalized(&e.component).len() as u128;
                let s = normalized(&e.separator).len() as u128;
                u *= a + s;
                w *= a;
            }
            None => {
                u *= g.vertex_count() as u128;
                w *= g.vertex_count() as u128;
            }
        }
    }
    Ok(u - w)
}
