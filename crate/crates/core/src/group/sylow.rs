//! Nilpotency test and Sylow decomposition of nilpotent groups.

use super::{build_group, is_power_of, Atom, FiniteGroup, GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::number::{factorize, gcd};

/// `true` iff the upper central series of `group` reaches the whole group.
///
/// Groups built from a spec are decided atom by atom (a direct product is
/// nilpotent iff each factor is); table atoms and spec-less groups run the
/// central series directly.
pub fn is_nilpotent(group: &FiniteGroup) -> bool {
    match group.spec() {
        Some(spec) => spec_is_nilpotent(spec).unwrap_or_else(|_| upper_central_series_reaches_top(group)),
        None => upper_central_series_reaches_top(group),
    }
}

fn spec_is_nilpotent(spec: &GroupSpec) -> Result<bool> {
    for atom in spec.factors() {
        let ok = match atom {
            Atom::Cyclic(_) | Atom::AbelianP { .. } | Atom::Quaternion(_) => true,
            // D_{2m} is nilpotent iff m is a power of two
            Atom::Dihedral(order) => is_power_of(order / 2, 2),
            Atom::Table(_) => {
                let g = build_group(&GroupSpec::new(vec![atom.clone()])?)?;
                upper_central_series_reaches_top(&g)
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Iterates `Z_{i+1} = { g : [g, h] in Z_i for all h }` from `Z_0 = {e}`.
fn upper_central_series_reaches_top(group: &FiniteGroup) -> bool {
    let n = group.order();
    let mut in_z = vec![false; n];
    in_z[group.identity().index()] = true;
    let mut size = 1;
    loop {
        let next: Vec<bool> = (0..n)
            .map(|a| {
                in_z[a] || {
                    let g = GroupElement(a);
                    let gi = group.inverse(g);
                    group.elements().all(|h| {
                        let comm = group.mul(group.mul(g, h), group.mul(gi, group.inverse(h)));
                        in_z[comm.index()]
                    })
                }
            })
            .collect();
        let next_size = next.iter().filter(|&&b| b).count();
        if next_size == n {
            return true;
        }
        if next_size == size {
            return false;
        }
        in_z = next;
        size = next_size;
    }
}

/// Structural class of a Sylow subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylowKind {
    Cyclic,
    /// Non-cyclic 2-group with a unique involution.
    Quaternion,
    /// Neither cyclic nor generalized quaternion.
    NonCyclic,
}

#[derive(Debug, Clone)]
pub struct SylowSubgroup {
    pub prime: u64,
    pub kind: SylowKind,
    pub group: FiniteGroup,
    /// Ambient element for each local element index.
    pub embedding: Vec<GroupElement>,
    from_parent: Vec<u32>,
}

impl SylowSubgroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Local element corresponding to an ambient element of this subgroup.
    pub fn local(&self, ambient: GroupElement) -> Option<GroupElement> {
        match self.from_parent.get(ambient.index()) {
            Some(&i) if i != u32::MAX => Some(GroupElement(i as usize)),
            _ => None,
        }
    }
}

/// A nilpotent group split into its cyclic part, its non-cyclic
/// non-quaternion Sylow subgroups, and an optional generalized quaternion
/// Sylow 2-subgroup.
#[derive(Debug, Clone)]
pub struct NilpotentDecomposition {
    pub cyclic_order: u64,
    pub cyclic_factors: Vec<SylowSubgroup>,
    pub sylow_factors: Vec<SylowSubgroup>,
    pub quaternion_factor: Option<SylowSubgroup>,
}

impl NilpotentDecomposition {
    /// All Sylow subgroups in increasing prime order.
    pub fn all_factors(&self) -> Vec<&SylowSubgroup> {
        let mut all: Vec<&SylowSubgroup> = self
            .cyclic_factors
            .iter()
            .chain(&self.sylow_factors)
            .chain(&self.quaternion_factor)
            .collect();
        all.sort_by_key(|f| f.prime);
        all
    }

    /// Non-cyclic factors in formula order: the `sylow_factors` followed by
    /// the quaternion factor, if any.
    pub fn formula_factors(&self) -> Vec<&SylowSubgroup> {
        self.sylow_factors
            .iter()
            .chain(&self.quaternion_factor)
            .collect()
    }

    pub fn order(&self) -> u128 {
        self.all_factors()
            .iter()
            .map(|f| f.order() as u128)
            .product()
    }
}

/// Splits a nilpotent group into its Sylow subgroups. For each prime the
/// elements of prime-power order form the unique Sylow subgroup.
pub fn sylow_decomposition(group: &FiniteGroup) -> Result<NilpotentDecomposition> {
    if !is_nilpotent(group) {
        return Err(Error::NotNilpotent(
            "upper central series stops below the whole group".into(),
        ));
    }
    let orders: Vec<u64> = group.elements().map(|g| group.element_order(g)).collect();
    let mut decomposition = NilpotentDecomposition {
        cyclic_order: 1,
        cyclic_factors: Vec::new(),
        sylow_factors: Vec::new(),
        quaternion_factor: None,
    };
    for (p, e) in factorize(group.order() as u64) {
        let members: Vec<GroupElement> = group
            .elements()
            .filter(|g| is_power_of(orders[g.index()], p))
            .collect();
        let expected = p.pow(e) as usize;
        if members.len() != expected {
            return Err(Error::NotNilpotent(format!(
                "{} elements of {p}-power order, expected {expected}",
                members.len()
            )));
        }
        let sub = group.subgroup(&members)?;
        let local_orders: Vec<u64> = sub.embedding.iter().map(|g| orders[g.index()]).collect();
        let cyclic = local_orders.iter().any(|&o| o as usize == expected);
        let involutions = local_orders.iter().filter(|&&o| o == 2).count();
        let kind = if cyclic {
            SylowKind::Cyclic
        } else if p == 2 && involutions == 1 {
            SylowKind::Quaternion
        } else {
            SylowKind::NonCyclic
        };
        let mut from_parent = vec![u32::MAX; group.order()];
        for (i, g) in sub.embedding.iter().enumerate() {
            from_parent[g.index()] = i as u32;
        }
        let factor = SylowSubgroup {
            prime: p,
            kind,
            group: sub.group,
            embedding: sub.embedding,
            from_parent,
        };
        match kind {
            SylowKind::Cyclic => {
                decomposition.cyclic_order *= expected as u64;
                decomposition.cyclic_factors.push(factor);
            }
            SylowKind::Quaternion => decomposition.quaternion_factor = Some(factor),
            SylowKind::NonCyclic => decomposition.sylow_factors.push(factor),
        }
    }
    if let Some(q) = &decomposition.quaternion_factor {
        assert_eq!(
            gcd(decomposition.cyclic_order, q.order() as u64),
            1,
            "a quaternion Sylow 2-subgroup excludes a cyclic 2-part"
        );
    }
    Ok(decomposition)
}
