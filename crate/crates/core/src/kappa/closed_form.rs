//! Closed forms for finite abelian groups
//! `Z_{p_1^{t_11}} x ... x Z_{p_r^{t_rk_r}} x Z_n` with every `k_i >= 2`.

use super::formula::{minimize_terms, FactorTerm, KappaFormulaResult};
use super::roots::{abelian_root_series, mr_abelian_closed_form};
use crate::error::{Error, Result};
use crate::group::{Atom, GroupSpec};
use crate::number::{checked_pow, gcd};

/// Which per-factor quantity to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormVariant {
    /// `(p^{t1 k} - 1) / (p^k - 1)` per factor, with no `(p - 1)` factor.
    Printed,
    /// `(p - 1)(p^{t1 k} - 1) / (p^k - 1)`, the minimum root count.
    MrCorrected,
}

impl ClosedFormVariant {
    pub fn name(self) -> &'static str {
        match self {
            ClosedFormVariant::Printed => "printed",
            ClosedFormVariant::MrCorrected => "mr-corrected",
        }
    }
}

/// Evaluated closed form: `value = cyclic_order * inner.value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: u128,
    pub cyclic_order: u128,
    pub inner: KappaFormulaResult,
}

/// `(p, exponents)` of one abelian p-group atom.
type PrimeFactor = (u64, Vec<u32>);

/// Factor terms of an abelian spec in the closed-form shape, in written order,
/// with the cyclic part `n`.
fn abelian_shape(spec: &GroupSpec) -> Result<(Vec<PrimeFactor>, u128)> {
    let mut factors: Vec<PrimeFactor> = Vec::new();
    let mut cyclic: Vec<u64> = Vec::new();
    for atom in spec.factors() {
        match atom {
            Atom::Cyclic(n) => cyclic.push(*n),
            Atom::AbelianP { p, exponents } => {
                if exponents.len() < 2 {
                    return Err(Error::InvalidArgument(format!(
                        "{atom} is cyclic; write it as a Z atom"
                    )));
                }
                if factors.iter().any(|(q, _)| q == p) {
                    return Err(Error::InvalidArgument(format!(
                        "prime {p} appears in two abelian atoms"
                    )));
                }
                factors.push((*p, exponents.clone()));
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "closed form applies to abelian specs only, found {other}"
                )))
            }
        }
    }
    if factors.is_empty() {
        return Err(Error::InvalidArgument(
            "no non-cyclic Sylow factor: the group is cyclic".into(),
        ));
    }
    for (i, &a) in cyclic.iter().enumerate() {
        for &b in &cyclic[i + 1..] {
            if gcd(a, b) != 1 {
                return Err(Error::InvalidArgument(format!(
                    "cyclic atoms Z{a} and Z{b} are not coprime"
                )));
            }
        }
        for (p, _) in &factors {
            if a % p == 0 {
                return Err(Error::InvalidArgument(format!(
                    "cyclic atom Z{a} shares the prime {p} with an abelian atom"
                )));
            }
        }
    }
    let n = cyclic.iter().map(|&c| c as u128).product();
    Ok((factors, n))
}

pub fn abelian_closed_form(spec: &GroupSpec, variant: ClosedFormVariant) -> Result<ClosedForm> {
    let (factors, n) = abelian_shape(spec)?;
    let terms = factors
        .iter()
        .map(|(p, exps)| {
            let size = checked_pow(*p as u128, exps.iter().sum(), "abelian factor order")?;
            let mr = match variant {
                ClosedFormVariant::Printed => abelian_root_series(*p, exps)?,
                ClosedFormVariant::MrCorrected => mr_abelian_closed_form(*p, exps)?,
            };
            Ok(FactorTerm {
                size,
                mr,
                increment: 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let inner = minimize_terms(&terms)?;
    let value = inner
        .value
        .checked_mul(n)
        .ok_or(Error::Overflow("closed form"))?;
    Ok(ClosedForm {
        value,
        cyclic_order: n,
        inner,
    })
}

/// Connectivity of the enhanced power graph of an abelian group from its
/// closed form.
pub fn kappa_abelian_closed_form(spec: &GroupSpec, variant: ClosedFormVariant) -> Result<u128> {
    Ok(abelian_closed_form(spec, variant)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(s: &str) -> (u128, u128) {
        let spec = GroupSpec::parse(s).unwrap();
        (
            kappa_abelian_closed_form(&spec, ClosedFormVariant::Printed).unwrap(),
            kappa_abelian_closed_form(&spec, ClosedFormVariant::MrCorrected).unwrap(),
        )
    }

    #[test]
    fn examples() {
        assert_eq!(both("Ab(2;1,1)"), (1, 1));
        // printed: {} -> 2*2-1 = 3; corrected: {} -> 3*2-2 = 4, {1} -> 4
        assert_eq!(both("Ab(3;1,1) x Ab(2;1,1)"), (3, 4));
        assert_eq!(both("Ab(3;1,2) x Z5"), (5, 5));
    }

    #[test]
    fn rejects_other_shapes() {
        let bad = ["Q8 x Ab(3;1,1)", "Z2 x Ab(2;1,1)", "Z6 x Z4 x Ab(5;1,1)", "Z7", "Ab(3;2)", "Ab(3;1,1) x Ab(3;1,2)"];
        for s in bad {
            let spec = GroupSpec::parse(s).unwrap();
            assert!(kappa_abelian_closed_form(&spec, ClosedFormVariant::MrCorrected).is_err(), "{s}");
        }
    }
}
