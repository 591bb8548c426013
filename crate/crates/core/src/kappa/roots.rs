//! Roots of elements and the minimum root count `mr` of a p-group.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};
use crate::number::{checked_pow, gcd, is_prime, prime_power_exponent};

/// `{ g : a ∈ <g> }`, sorted.
pub fn roots(g: &FiniteGroup, a: GroupElement) -> Vec<GroupElement> {
    g.elements()
        .filter(|&x| g.cyclic_subgroup(x).contains(&a))
        .collect()
}

/// `|Roots(a)|` for every element `a`, by enumerating the distinct cyclic
/// subgroups: each `<x>` of order `o` has `phi(o)` generators, each of which
/// is a root of every member of `<x>`.
pub fn root_counts(g: &FiniteGroup) -> Vec<u64> {
    let mut counts = vec![0u64; g.order()];
    let mut seen = vec![false; g.order()];
    for x in g.elements() {
        if seen[x.index()] {
            continue;
        }
        let powers = g.cyclic_subgroup(x);
        let o = powers.len() as u64;
        let mut generators = 0;
        for (k, y) in powers.iter().enumerate() {
            if gcd(k as u64, o) == 1 {
                seen[y.index()] = true;
                generators += 1;
            }
        }
        for y in &powers {
            counts[y.index()] += generators;
        }
    }
    counts
}

/// Minimum of `|Roots(a)|` over the elements `a` of order `p` of the
/// `p`-group `group`.
pub fn mr(group: &FiniteGroup, p: u64) -> Result<u64> {
    match prime_power_exponent(group.order() as u64, p) {
        Some(k) if k >= 1 && is_prime(p) => {}
        _ => return Err(Error::NotPGroup(p)),
    }
    let counts = root_counts(group);
    group
        .elements()
        .filter(|&a| group.element_order(a) == p)
        .map(|a| counts[a.index()])
        .min()
        .ok_or(Error::NotPGroup(p))
}

/// `(p^{t1*k} - 1) / (p^k - 1)`: the per-factor quantity of the abelian
/// closed form without the `(p - 1)` factor.
pub fn abelian_root_series(p: u64, exponents: &[u32]) -> Result<u128> {
    validate_exponents(p, exponents)?;
    let k = exponents.len() as u32;
    let t1 = exponents[0];
    let num = checked_pow(p as u128, t1.checked_mul(k).ok_or(Error::Overflow("exponent"))?, "p^(t1 k)")? - 1;
    let den = checked_pow(p as u128, k, "p^k")? - 1;
    Ok(num / den)
}

/// `(p - 1)(p^{t1*k} - 1) / (p^k - 1)`, the minimum root count of
/// `Z_{p^t1} x ... x Z_{p^tk}` for `k >= 2`.
pub fn mr_abelian_closed_form(p: u64, exponents: &[u32]) -> Result<u128> {
    abelian_root_series(p, exponents)?
        .checked_mul(p as u128 - 1)
        .ok_or(Error::Overflow("mr closed form"))
}

fn validate_exponents(p: u64, exponents: &[u32]) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if exponents.len() < 2 {
        return Err(Error::InvalidArgument(
            "closed form needs k >= 2 cyclic factors (k = 1 is cyclic)".into(),
        ));
    }
    if exponents[0] == 0 || exponents.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument(format!(
            "exponents must be positive and nondecreasing, got {exponents:?}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group_from_str;

    fn grp(s: &str) -> FiniteGroup {
        build_group_from_str(s).unwrap()
    }

    #[test]
    fn roots_in_z3_z9() {
        let g = grp("Ab(3;1,2)");
        let a = g.find_label("(1,3)").unwrap();
        let r: Vec<&str> = roots(&g, a).into_iter().map(|x| g.label(x)).collect();
        assert_eq!(r, vec!["(1,3)", "(2,6)"]);
        let b = g.find_label("(0,3)").unwrap();
        assert_eq!(roots(&g, b).len(), 20);
        assert_eq!(roots(&g, g.identity()).len(), 27);
    }

    #[test]
    fn grouped_counts_match_definition() {
        for s in ["Ab(3;1,2)", "D8", "Q8", "Z12", "Ab(2;1,1,2)", "Z3 x D8"] {
            let g = grp(s);
            let counts = root_counts(&g);
            for a in g.elements() {
                assert_eq!(counts[a.index()] as usize, roots(&g, a).len(), "{s} {a}");
            }
        }
    }

    #[test]
    fn mr_examples() {
        assert_eq!(mr(&grp("Ab(3;1,2)"), 3).unwrap(), 2);
        assert_eq!(mr(&grp("D8"), 2).unwrap(), 1);
        assert_eq!(mr(&grp("Ab(2;1,1)"), 2).unwrap(), 1);
        assert!(matches!(mr(&grp("Z6"), 2), Err(Error::NotPGroup(2))));
        assert!(mr(&grp("Z1"), 2).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(mr_abelian_closed_form(3, &[1, 2]).unwrap(), 2);
        assert_eq!(mr_abelian_closed_form(2, &[1, 1]).unwrap(), 1);
        assert_eq!(mr_abelian_closed_form(3, &[2, 2]).unwrap(), 20);
        assert_eq!(mr(&grp("Ab(3;2,2)"), 3).unwrap(), 20);
        assert!(mr_abelian_closed_form(3, &[2]).is_err());
        assert!(mr_abelian_closed_form(4, &[1, 1]).is_err());
        assert!(matches!(mr_abelian_closed_form(2, &[200, 200]), Err(Error::Overflow(_))));
    }
}
