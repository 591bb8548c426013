//! Explicit separating sets of `G_E(G)` realizing a formula term.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{components_without, VertexSet};
use crate::group::{FiniteGroup, NilpotentDecomposition, SylowKind, SylowSubgroup};
use crate::power::enhanced_power_graph;

/// Per-factor separator `S_i` and smallest component `A_i` of
/// `G_E(P_i) - S_i`, as local element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCut {
    pub separator: VertexSet,
    pub component: VertexSet,
}

/// `S_i = {e}` for a non-cyclic non-quaternion factor and `{e, z}` (z the
/// unique involution) for a quaternion factor; `A_i` is a smallest component
/// of what remains, ties broken by smallest element.
pub fn factor_cut(factor: &SylowSubgroup) -> Result<FactorCut> {
    let p = &factor.group;
    let mut separator = vec![p.identity().index()];
    match factor.kind {
        SylowKind::NonCyclic => {}
        SylowKind::Quaternion => {
            let z = p
                .elements()
                .find(|&x| p.element_order(x) == 2)
                .expect("quaternion group has an involution");
            separator.push(z.index());
            separator.sort_unstable();
        }
        SylowKind::Cyclic => {
            return Err(Error::InvalidArgument(
                "a cyclic Sylow factor has no separating set".into(),
            ))
        }
    }
    let graph = enhanced_power_graph(p);
    let mut removed = FixedBitSet::with_capacity(p.order());
    separator.iter().for_each(|&v| removed.insert(v));
    let component = components_without(&graph, &removed)
        .into_iter()
        .min_by_key(|c| (c.len(), c[0]))
        .ok_or_else(|| Error::InvalidArgument("factor minus separator is empty".into()))?;
    Ok(FactorCut {
        separator,
        component,
    })
}

/// Separating set of `G_E(G)` built from the cuts of the formula factors
/// outside `t` (indices into [`NilpotentDecomposition::formula_factors`]):
///
/// ```text
/// ( prod_{i not in T} (A_i ∪ S_i) - prod_{i not in T} A_i ) x prod_{i in T} P_i x Z_n
/// ```
///
/// Returned as sorted element indices of `group`.
pub fn witness_separating_set(
    group: &FiniteGroup,
    decomposition: &NilpotentDecomposition,
    t: &[usize],
) -> Result<VertexSet> {
    let factors = decomposition.formula_factors();
    if factors.is_empty() {
        return Err(Error::InvalidArgument(
            "cyclic group: the enhanced power graph is complete".into(),
        ));
    }
    if let Some(&bad) = t.iter().find(|&&i| i >= factors.len()) {
        return Err(Error::InvalidArgument(format!(
            "subset index {bad} out of range for {} factors",
            factors.len()
        )));
    }
    let outside: Vec<&SylowSubgroup> = factors
        .iter()
        .enumerate()
        .filter(|(i, _)| !t.contains(i))
        .map(|(_, f)| *f)
        .collect();
    if outside.is_empty() {
        return Err(Error::InvalidArgument(
            "T must be a proper subset of the factor indices".into(),
        ));
    }
    let masks: Vec<(&SylowSubgroup, FixedBitSet, FixedBitSet)> = outside
        .iter()
        .map(|f| {
            let cut = factor_cut(f)?;
            let mut in_a = FixedBitSet::with_capacity(f.order());
            cut.component.iter().for_each(|&v| in_a.insert(v));
            let mut in_u = in_a.clone();
            cut.separator.iter().for_each(|&v| in_u.insert(v));
            Ok((*f, in_u, in_a))
        })
        .collect::<Result<_>>()?;
    Ok(group
        .elements()
        .filter(|&g| {
            let coords: Vec<usize> = masks
                .iter()
                .map(|(f, _, _)| {
                    f.local(group.p_part(g, f.prime))
                        .expect("p-part lies in the Sylow subgroup")
                        .index()
                })
                .collect();
            let all_u = masks.iter().zip(&coords).all(|((_, u, _), &c)| u.contains(c));
            let all_a = masks.iter().zip(&coords).all(|((_, _, a), &c)| a.contains(c));
            all_u && !all_a
        })
        .map(|g| g.index())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_separating;
    use crate::group::{build_group_from_str, sylow_decomposition};

    fn witness(s: &str, t: &[usize]) -> (FiniteGroup, VertexSet) {
        let g = build_group_from_str(s).unwrap();
        let d = sylow_decomposition(&g).unwrap();
        let w = witness_separating_set(&g, &d, t).unwrap();
        (g, w)
    }

    #[test]
    fn quaternion_identity_and_involution() {
        let (g, w) = witness("Q8", &[]);
        let labels: Vec<&str> = w.iter().map(|&i| g.labels()[i].as_str()).collect();
        assert_eq!(labels, vec!["e", "x^2"]);
    }

    #[test]
    fn cyclic_part_multiplies_identity_slice() {
        let (g, w) = witness("Z5 x Ab(3;1,1)", &[]);
        assert_eq!(w.len(), 5);
        assert!(is_separating(&enhanced_power_graph(&g), &w));
    }

    #[test]
    fn two_factor_l_set() {
        let (g, w) = witness("Ab(3;1,2) x Ab(2;1,1)", &[]);
        assert_eq!(w.len(), 4);
        assert!(is_separating(&enhanced_power_graph(&g), &w));
    }

    #[test]
    fn rejects_full_subset() {
        let g = build_group_from_str("Ab(3;1,1)").unwrap();
        let d = sylow_decomposition(&g).unwrap();
        assert!(witness_separating_set(&g, &d, &[0]).is_err());
        assert!(witness_separating_set(&g, &d, &[3]).is_err());
        let z = build_group_from_str("Z6").unwrap();
        let dz = sylow_decomposition(&z).unwrap();
        assert!(witness_separating_set(&z, &dz, &[]).is_err());
    }
}
