//! Subset minimizations giving the connectivity of enhanced power graphs of
//! nilpotent groups.
//!
//! For factor terms `(|P_i|, mr_i, x_i)` and a proper subset `T`, the term
//! value is
//!
//! ```text
//! prod_{i in T} |P_i| * ( prod_{i not in T} (mr_i + x_i) - prod_{i not in T} mr_i )
//! ```
//!
//! `T` ranges over proper subsets only: `T = [r]` would contribute the
//! degenerate value 0.

use crate::error::{Error, Result};

/// Largest number of factors accepted by the subset search.
pub const MAX_FACTORS: usize = 24;

/// `mr` and separator size used for a generalized quaternion coordinate.
pub const QUATERNION_MR: u128 = 2;
pub const QUATERNION_INCREMENT: u128 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorTerm {
    pub size: u128,
    pub mr: u128,
    /// Size of the separator used for this coordinate (1, or 2 for a
    /// quaternion factor).
    pub increment: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaFormulaResult {
    pub value: u128,
    /// 0-based factor indices of the minimizing `T`.
    pub minimizing_subset: Vec<usize>,
    pub per_factor_mr: Vec<u128>,
}

const OVERFLOW: Error = Error::Overflow("connectivity formula");

/// Value of the term for subset `t` (0-based indices into `terms`).
pub fn term_value(terms: &[FactorTerm], t: &[usize]) -> Result<u128> {
    let mut outside_with = 1u128;
    let mut outside_mr = 1u128;
    let mut inside = 1u128;
    for (i, term) in terms.iter().enumerate() {
        if t.contains(&i) {
            inside = inside.checked_mul(term.size).ok_or(OVERFLOW)?;
        } else {
            let grown = term.mr.checked_add(term.increment).ok_or(OVERFLOW)?;
            outside_with = outside_with.checked_mul(grown).ok_or(OVERFLOW)?;
            outside_mr = outside_mr.checked_mul(term.mr).ok_or(OVERFLOW)?;
        }
    }
    inside
        .checked_mul(outside_with - outside_mr)
        .ok_or(OVERFLOW)
}

/// Proper subsets of `0..r`, ordered by size and then lexicographically.
pub fn proper_subsets(r: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..r).flat_map(move |k| Combinations::new(r, k))
}

struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Minimizes [`term_value`] over proper subsets. Ties go to the smaller `T`,
/// then the lexicographically smaller one.
pub fn minimize_terms(terms: &[FactorTerm]) -> Result<KappaFormulaResult> {
    if terms.is_empty() {
        return Err(Error::InvalidArgument("at least one factor is required".into()));
    }
    if terms.len() > MAX_FACTORS {
        return Err(Error::InvalidArgument(format!(
            "at most {MAX_FACTORS} factors are supported"
        )));
    }
    if terms.iter().any(|t| t.size == 0 || t.mr == 0) {
        return Err(Error::InvalidArgument("factor sizes and mr values must be positive".into()));
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    for t in proper_subsets(terms.len()) {
        let v = term_value(terms, &t)?;
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, t));
        }
    }
    let (value, minimizing_subset) = best.expect("r >= 1 has the empty proper subset");
    Ok(KappaFormulaResult {
        value,
        minimizing_subset,
        per_factor_mr: terms.iter().map(|t| t.mr).collect(),
    })
}

/// `tau` over factors `(|P_i|, mr(P_i))`.
pub fn tau(factors: &[(u128, u128)]) -> Result<KappaFormulaResult> {
    let terms: Vec<FactorTerm> = factors
        .iter()
        .map(|&(size, mr)| FactorTerm {
            size,
            mr,
            increment: 1,
        })
        .collect();
    minimize_terms(&terms)
}

/// `mu` over factors `(|P_i|, mr(P_i))` plus a generalized quaternion factor
/// of the given order, which is placed last with `mr = 2` and increment 2.
pub fn mu(factors: &[(u128, u128)], quaternion_size: u128) -> Result<KappaFormulaResult> {
    if quaternion_size < 8 || !quaternion_size.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "quaternion order must be a power of two >= 8, got {quaternion_size}"
        )));
    }
    let mut terms: Vec<FactorTerm> = factors
        .iter()
        .map(|&(size, mr)| FactorTerm {
            size,
            mr,
            increment: 1,
        })
        .collect();
    terms.push(FactorTerm {
        size: quaternion_size,
        mr: QUATERNION_MR,
        increment: QUATERNION_INCREMENT,
    });
    minimize_terms(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn subset_order() {
        let all: Vec<Vec<usize>> = proper_subsets(3).collect();
        assert_eq!(
            all,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2]
            ]
        );
        assert_eq!(proper_subsets(1).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn tau_single_factor() {
        for (size, mr) in [(4, 1), (27, 2), (81, 20)] {
            let r = tau(&[(size, mr)]).unwrap();
            assert_eq!(r.value, 1);
            assert!(r.minimizing_subset.is_empty());
        }
    }

    #[test]
    fn tau_examples() {
        // {} -> 3*2-2 = 4, {0} -> 27, {1} -> 4
        let r = tau(&[(27, 2), (4, 1)]).unwrap();
        assert_eq!((r.value, r.minimizing_subset.clone()), (4, vec![]));
        assert_eq!(r.per_factor_mr, vec![2, 1]);
        let r = tau(&[(9, 2), (4, 1)]).unwrap();
        assert_eq!(r.value, 4);
        assert!(tau(&[]).is_err());
    }

    #[test]
    fn mu_examples() {
        let r = mu(&[], 8).unwrap();
        assert_eq!((r.value, r.minimizing_subset.clone()), (2, vec![]));
        // {} -> 3*4-2*2 = 8, {0} -> 9*2 = 18, {1} -> 8*1 = 8
        let r = mu(&[(9, 2)], 8).unwrap();
        assert_eq!((r.value, r.minimizing_subset.clone()), (8, vec![]));
        let r = mu(&[(27, 2)], 8).unwrap();
        assert_eq!(r.value, 8);
        assert!(mu(&[], 12).is_err());
        assert!(mu(&[], 4).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = u128::MAX / 2;
        assert!(matches!(
            tau(&[(big, big), (big, big)]),
            Err(Error::Overflow(_))
        ));
    }

    proptest! {
        // increasing one mr or one |P_i| never decreases any fixed term
        #[test]
        fn terms_are_monotone(
            raw in prop::collection::vec((1u128..50, 1u128..20), 1..5),
            pick in 0usize..5,
            bump in 1u128..10,
            subset_mask in 0u32..16,
        ) {
            let terms: Vec<FactorTerm> = raw.iter().map(|&(s, m)| FactorTerm { size: s, mr: m, increment: 1 }).collect();
            let r = terms.len();
            let t: Vec<usize> = (0..r).filter(|i| subset_mask & (1 << i) != 0).collect();
            prop_assume!(t.len() < r);
            let i = pick % r;
            let base = term_value(&terms, &t).unwrap();
            let mut grown_mr = terms.clone();
            grown_mr[i].mr += bump;
            prop_assert!(term_value(&grown_mr, &t).unwrap() >= base);
            let mut grown_size = terms.clone();
            grown_size[i].size += bump;
            prop_assert!(term_value(&grown_size, &t).unwrap() >= base);
        }
    }
}
