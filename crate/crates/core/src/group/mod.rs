//! Finite groups in a uniform element-indexed representation.

mod law;
mod spec;
mod sylow;
mod table;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use law::{Component, Law, TableLaw};

pub use spec::{Atom, GroupSpec};
pub use sylow::{is_nilpotent, sylow_decomposition, NilpotentDecomposition, SylowKind, SylowSubgroup};
pub use table::{parse_table, read_table_file, validate_table};

use crate::error::{Error, Result};
use crate::number::{factorize, mod_inverse, prime_power_exponent};

/// Largest group order accepted by [`build_group`].
pub const MAX_ORDER: u128 = 1 << 20;

/// An element of a [`FiniteGroup`], identified by its dense index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(usize);

impl GroupElement {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A concrete finite group. Cheap to clone.
#[derive(Clone)]
pub struct FiniteGroup {
    law: Arc<Law>,
    identity: usize,
    labels: Arc<Vec<String>>,
    spec: Option<GroupSpec>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("spec", &self.spec.as_ref().map(|s| s.to_string()))
            .finish()
    }
}

/// A subgroup re-indexed as a group of its own, with the map back into the
/// ambient group.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: FiniteGroup,
    /// `embedding[i]` is the ambient element for local element `i`.
    pub embedding: Vec<GroupElement>,
}

impl FiniteGroup {
    /// Builds a group from an explicit Cayley table (`table[i][j] = i * j`).
    ///
    /// Labels default to the element indices.
    pub fn from_table(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::NotAGroup(format!("entry {v} out of range")));
                }
                flat.push(v as u32);
            }
        }
        validate_table(n, &flat, false)?;
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::InvalidArgument(format!(
                    "{} labels for a group of order {n}",
                    l.len()
                )))
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let law = Law::Table(TableLaw::new(n, flat));
        let identity = law.identity();
        let group = FiniteGroup {
            law: Arc::new(law),
            identity,
            labels: Arc::new(labels),
            spec: None,
        };
        group.check_unique_labels()?;
        Ok(group)
    }

    fn check_unique_labels(&self) -> Result<()> {
        let mut seen = HashMap::with_capacity(self.order());
        for (i, l) in self.labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::InvalidArgument(format!(
                    "elements {j} and {i} share the label {l:?}"
                )));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    /// The spec this group was built from, if any.
    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn element(&self, index: usize) -> Option<GroupElement> {
        (index < self.order()).then_some(GroupElement(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(GroupElement)
    }

    pub fn label(&self, g: GroupElement) -> &str {
        &self.labels[g.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<GroupElement> {
        self.labels.iter().position(|l| l == label).map(GroupElement)
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.law.mul(a.0, b.0))
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.law.inverse(a.0))
    }

    pub fn pow(&self, a: GroupElement, mut k: u64) -> GroupElement {
        let mut base = a;
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `m >= 1` with `g^m = e`.
    pub fn element_order(&self, g: GroupElement) -> u64 {
        let mut x = g;
        let mut m = 1;
        while x.0 != self.identity {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    /// `<g>` listed as `e, g, g^2, ...`.
    pub fn cyclic_subgroup(&self, g: GroupElement) -> Vec<GroupElement> {
        let mut out = vec![self.identity()];
        let mut x = g;
        while x.0 != self.identity {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn commutes(&self, a: GroupElement, b: GroupElement) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        if let Some(spec) = &self.spec {
            if spec.factors().iter().all(Atom::is_abelian_shape) {
                return true;
            }
        }
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.commutes(GroupElement(a), GroupElement(b))))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements().any(|g| self.element_order(g) == n)
    }

    pub fn center(&self) -> Vec<GroupElement> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.commutes(z, g)))
            .collect()
    }

    /// Component of `g` of `p`-power order in the decomposition of `<g>`
    /// into its primary parts. Always a power of `g`.
    pub fn p_part(&self, g: GroupElement, p: u64) -> GroupElement {
        let o = self.element_order(g);
        let mut pa = 1u64;
        while (o / pa).is_multiple_of(p) {
            pa *= p;
        }
        if pa == 1 {
            return self.identity();
        }
        let m = o / pa;
        let c = (m as u128 * mod_inverse(m % pa, pa).expect("coprime") as u128) % o as u128;
        self.pow(g, c as u64)
    }

    /// Materialized Cayley table, `table[i][j] = i * j`.
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).map(|j| self.law.mul(i, j)).collect())
            .collect()
    }

    /// Checks the group axioms: Latin-square rows and columns, a two-sided
    /// identity, and associativity (exhaustive up to order 64, sampled
    /// above).
    pub fn verify_group_law(&self) -> Result<()> {
        let n = self.order();
        let flat: Vec<u32> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.law.mul(i, j) as u32)
            .collect();
        validate_table(n, &flat, false)
    }

    /// Extracts the subgroup formed by `elements`, which must be closed under
    /// multiplication and contain the identity.
    pub fn subgroup(&self, elements: &[GroupElement]) -> Result<Subgroup> {
        let mut embedding: Vec<GroupElement> = elements.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        if embedding.binary_search(&self.identity()).is_err() {
            return Err(Error::InvalidArgument("subgroup must contain the identity".into()));
        }
        let mut from_parent = vec![u32::MAX; self.order()];
        for (i, g) in embedding.iter().enumerate() {
            from_parent[g.0] = i as u32;
        }
        for &a in &embedding {
            for &b in &embedding {
                if from_parent[self.mul(a, b).0] == u32::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "subset is not closed: {} * {} escapes",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        let to_parent = embedding.iter().map(|g| g.0 as u32).collect();
        let labels = embedding.iter().map(|&g| self.label(g).to_string()).collect();
        let law = Law::Embedded {
            parent: Arc::clone(&self.law),
            to_parent,
            from_parent,
        };
        let identity = law.identity();
        Ok(Subgroup {
            group: FiniteGroup {
                law: Arc::new(law),
                identity,
                labels: Arc::new(labels),
                spec: None,
            },
            embedding,
        })
    }

    /// If the group order is a prime power `p^k` with `k >= 1`, returns `p`.
    pub fn prime_of_p_group(&self) -> Option<u64> {
        match factorize(self.order() as u64).as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }
}

/// Builds the direct product described by `spec`. Elements are ordered
/// lexicographically by atom coordinates, first atom most significant, and
/// labelled by the tuple of atom labels.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    let mut components = Vec::with_capacity(spec.factors().len());
    let mut order: u128 = 1;
    for atom in spec.factors() {
        atom.validate()?;
        let component = match atom {
            Atom::Cyclic(n) => Component::Cyclic { n: checked_usize(*n as u128)? },
            Atom::AbelianP { p, exponents } => {
                let moduli = exponents
                    .iter()
                    .map(|&t| {
                        (*p as u128)
                            .checked_pow(t)
                            .ok_or(Error::OrderTooLarge(u128::MAX))
                            .and_then(checked_usize)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Component::Abelian { moduli }
            }
            Atom::Dihedral(n) => Component::Dihedral { m: checked_usize(*n as u128)? / 2 },
            Atom::Quaternion(n) => Component::Quaternion { m: checked_usize(*n as u128)? / 2 },
            Atom::Table(path) => {
                let (n, flat) = read_table_file(path)?;
                Component::Table(TableLaw::new(n, flat))
            }
        };
        order = order
            .checked_mul(component.order() as u128)
            .ok_or(Error::OrderTooLarge(u128::MAX))?;
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        components.push(component);
    }
    let n = order as usize;
    let law = Law::product(components);
    let labels = product_labels(&law, n);
    let identity = law.identity();
    Ok(FiniteGroup {
        law: Arc::new(law),
        identity,
        labels: Arc::new(labels),
        spec: Some(spec.clone()),
    })
}

fn checked_usize(v: u128) -> Result<usize> {
    if v > MAX_ORDER {
        return Err(Error::OrderTooLarge(v));
    }
    Ok(v as usize)
}

fn product_labels(law: &Law, n: usize) -> Vec<String> {
    let Law::Product {
        components,
        strides,
    } = law
    else {
        unreachable!("built groups use a product law");
    };
    (0..n)
        .map(|i| {
            if components.len() == 1 {
                return components[0].label(i);
            }
            let parts: Vec<String> = components
                .iter()
                .zip(strides)
                .map(|(c, &s)| c.label(i / s % c.order()))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect()
}

/// Parses and builds in one step.
pub fn build_group_from_str(text: &str) -> Result<FiniteGroup> {
    build_group(&GroupSpec::parse(text)?)
}

pub(crate) fn is_power_of(n: u64, p: u64) -> bool {
    prime_power_exponent(n, p).is_some()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn g(s: &str) -> FiniteGroup {
        build_group_from_str(s).unwrap()
    }

    pub(crate) fn s3() -> FiniteGroup {
        // permutations of {0,1,2} in lexicographic order, composed as (a*b)(x) = a(b(x))
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&table, None).unwrap()
    }

    #[test]
    fn cyclic_law() {
        let z6 = g("Z6");
        assert_eq!(z6.order(), 6);
        for i in 0..6 {
            for j in 0..6 {
                let (a, b) = (GroupElement(i), GroupElement(j));
                assert_eq!(z6.mul(a, b).index(), (i + j) % 6);
            }
        }
        z6.verify_group_law().unwrap();
    }

    #[test]
    fn quaternion_generators() {
        let q8 = g("Q8");
        assert_eq!(q8.order(), 8);
        let x = q8.find_label("x").unwrap();
        let y = q8.find_label("y").unwrap();
        assert_eq!(q8.element_order(x), 4);
        assert_eq!(q8.element_order(y), 4);
        assert_eq!(q8.pow(x, 2), q8.pow(y, 2));
        q8.verify_group_law().unwrap();
        let q16 = g("Q16");
        assert_eq!(q16.element_order(q16.find_label("x").unwrap()), 8);
    }

    #[test]
    fn quaternion_has_one_involution() {
        for k in 3..=6 {
            let q = g(&format!("Q{}", 1 << k));
            let involutions = q.elements().filter(|&e| q.element_order(e) == 2).count();
            assert_eq!(involutions, 1, "Q{}", 1 << k);
        }
    }

    #[test]
    fn product_group_labels_and_order() {
        let grp = g("Ab(3;1,2) x Z2");
        assert_eq!(grp.order(), 54);
        assert_eq!(grp.label(grp.identity()), "((0,0),0)");
        assert!(grp.find_label("((1,3),1)").is_some());
        grp.verify_group_law().unwrap();
    }

    #[test]
    fn element_orders() {
        let z12 = g("Z12");
        assert_eq!(z12.element_order(GroupElement(4)), 3);
        assert_eq!(z12.element_order(z12.identity()), 1);
        let q16 = g("Q16");
        assert_eq!(q16.element_order(q16.identity()), 1);
    }

    #[test]
    fn cyclic_subgroups() {
        let z12 = g("Z12");
        let mut sub: Vec<usize> = z12
            .cyclic_subgroup(GroupElement(4))
            .into_iter()
            .map(|e| e.index())
            .collect();
        sub.sort();
        assert_eq!(sub, vec![0, 4, 8]);
        let q8 = g("Q8");
        let x = q8.find_label("x").unwrap();
        let labels: Vec<&str> = q8.cyclic_subgroup(x).into_iter().map(|e| q8.label(e)).collect();
        assert_eq!(labels, vec!["e", "x", "x^2", "x^3"]);
        assert_eq!(q8.cyclic_subgroup(q8.identity()), vec![q8.identity()]);
    }

    #[test]
    fn lagrange_on_catalog() {
        for s in ["Z12", "Q16", "D12", "Ab(2;1,1,2)", "Z3 x Q8", "D8 x Z3"] {
            let grp = g(s);
            let n = grp.order() as u64;
            for e in grp.elements() {
                assert_eq!(n % grp.element_order(e), 0, "{s}");
            }
        }
    }

    #[test]
    fn group_axioms_for_atoms() {
        for s in ["D2", "D4", "D10", "D16", "Q32", "Ab(5;1,1)", "Z1", "Q8 x Ab(3;1,1)"] {
            g(s).verify_group_law().unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }

    #[test]
    fn s3_from_table() {
        let s3 = s3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.center(), vec![s3.identity()]);
        assert!(!s3.is_cyclic());
    }

    #[test]
    fn rejects_bad_tables() {
        let not_latin = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table(&not_latin, None).is_err());
        let ragged = vec![vec![0, 1], vec![1]];
        assert!(FiniteGroup::from_table(&ragged, None).is_err());
    }

    #[test]
    fn subgroup_extraction() {
        let z12 = g("Z12");
        let sub = z12
            .subgroup(&[GroupElement(0), GroupElement(4), GroupElement(8)])
            .unwrap();
        assert_eq!(sub.group.order(), 3);
        assert!(sub.group.is_cyclic());
        sub.group.verify_group_law().unwrap();
        assert!(z12.subgroup(&[GroupElement(0), GroupElement(5)]).is_err());
    }

    #[test]
    fn p_parts_multiply_back() {
        let grp = g("Z12 x D8");
        for e in grp.elements() {
            let a = grp.p_part(e, 2);
            let b = grp.p_part(e, 3);
            assert_eq!(grp.mul(a, b), e);
            assert!(is_power_of(grp.element_order(a), 2));
            assert!(is_power_of(grp.element_order(b), 3));
        }
    }

    #[test]
    fn rejects_oversized_groups() {
        assert!(matches!(
            build_group_from_str("Z1048576 x Z2"),
            Err(Error::OrderTooLarge(_))
        ));
    }
}
