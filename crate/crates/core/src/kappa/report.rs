//! Formula-versus-oracle reports for a single group.

use serde::Serialize;

use super::closed_form::{kappa_abelian_closed_form, ClosedFormVariant};
use super::formula::{mu, tau, KappaFormulaResult};
use super::roots::mr;
use super::witness::witness_separating_set;
use crate::error::{Error, Result};
use crate::graph::{vertex_connectivity, Connectivity, VertexSet};
use crate::group::{build_group, sylow_decomposition, FiniteGroup, GroupSpec};
use crate::power::enhanced_power_graph;

pub const DEFAULT_BUDGET: usize = 600;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    fn formula(self) -> bool {
        matches!(self, Method::Formula | Method::Both)
    }

    fn oracle(self) -> bool {
        matches!(self, Method::Oracle | Method::Both)
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KappaOptions {
    pub method: Method,
    /// Largest group order for which the oracle runs.
    pub budget: usize,
}

impl Default for KappaOptions {
    fn default() -> Self {
        KappaOptions {
            method: Method::Both,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Which branch of the formula applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaCase {
    /// Cyclic group: `G_E(G)` is complete with connectivity `|G| - 1`.
    Complete,
    /// No quaternion Sylow subgroup: `n * tau`.
    Tau(KappaFormulaResult),
    /// Generalized quaternion Sylow 2-subgroup present: `n * mu`.
    Mu(KappaFormulaResult),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaOutcome {
    pub case: FormulaCase,
    pub cyclic_order: u64,
    pub kappa: u128,
}

impl FormulaOutcome {
    pub fn result(&self) -> Option<&KappaFormulaResult> {
        match &self.case {
            FormulaCase::Complete => None,
            FormulaCase::Tau(r) | FormulaCase::Mu(r) => Some(r),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbelianVariants {
    pub printed: Option<u128>,
    pub mr_corrected: Option<u128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Disagree,
    OracleSkipped,
    FormulaSkipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::Disagree => "disagree",
            Verdict::OracleSkipped => "oracle-skipped",
            Verdict::FormulaSkipped => "formula-skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConnectivityReport {
    pub spec: String,
    pub order: usize,
    pub formula: Option<FormulaOutcome>,
    pub oracle: Option<Connectivity>,
    pub witness_set: Option<VertexSet>,
    pub variants: Option<AbelianVariants>,
    pub verdict: Verdict,
}

impl ConnectivityReport {
    pub fn kappa_formula(&self) -> Option<u128> {
        self.formula.as_ref().map(|f| f.kappa)
    }

    pub fn kappa_oracle(&self) -> Option<usize> {
        self.oracle.as_ref().map(|o| o.kappa)
    }

    pub fn minimizing_subset(&self) -> &[usize] {
        self.formula
            .as_ref()
            .and_then(|f| f.result())
            .map_or(&[], |r| r.minimizing_subset.as_slice())
    }

    /// Whether the printed abelian variant disagrees with the oracle.
    pub fn printed_variant_mismatch(&self) -> Option<bool> {
        let printed = self.variants?.printed?;
        let oracle = self.kappa_oracle()?;
        Some(printed != oracle as u128)
    }

    pub fn to_json_value(&self) -> ReportJson {
        ReportJson {
            spec: self.spec.clone(),
            order: self.order,
            kappa_formula: self.kappa_formula(),
            kappa_oracle: self.kappa_oracle(),
            minimizing_t: self.minimizing_subset().to_vec(),
            witness_size: self.witness_set.as_ref().map(Vec::len),
            variants: self.variants.unwrap_or(AbelianVariants {
                printed: None,
                mr_corrected: None,
            }),
            verdict: self.verdict.as_str(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("report serializes")
    }
}

/// Serialized report; field order is the wire order.
#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub spec: String,
    pub order: usize,
    pub kappa_formula: Option<u128>,
    pub kappa_oracle: Option<usize>,
    #[serde(rename = "minimizing_T")]
    pub minimizing_t: Vec<usize>,
    pub witness_size: Option<usize>,
    pub variants: AbelianVariants,
    pub verdict: &'static str,
}

/// Formula value for a nilpotent group, with the separating set realizing
/// the minimizing term.
pub fn formula_for_group(group: &FiniteGroup) -> Result<(FormulaOutcome, Option<VertexSet>)> {
    let decomposition = sylow_decomposition(group)?;
    let n = decomposition.cyclic_order;
    if decomposition.formula_factors().is_empty() {
        let outcome = FormulaOutcome {
            case: FormulaCase::Complete,
            cyclic_order: n,
            kappa: group.order() as u128 - 1,
        };
        return Ok((outcome, None));
    }
    let factors = decomposition
        .sylow_factors
        .iter()
        .map(|f| Ok((f.order() as u128, mr(&f.group, f.prime)? as u128)))
        .collect::<Result<Vec<_>>>()?;
    let case = match &decomposition.quaternion_factor {
        None => FormulaCase::Tau(tau(&factors)?),
        Some(q) => FormulaCase::Mu(mu(&factors, q.order() as u128)?),
    };
    let result = match &case {
        FormulaCase::Tau(r) | FormulaCase::Mu(r) => r,
        FormulaCase::Complete => unreachable!(),
    };
    let kappa = result
        .value
        .checked_mul(n as u128)
        .ok_or(Error::Overflow("n * tau"))?;
    let witness = witness_separating_set(group, &decomposition, &result.minimizing_subset)?;
    Ok((
        FormulaOutcome {
            case,
            cyclic_order: n,
            kappa,
        },
        Some(witness),
    ))
}

fn abelian_variants(spec: &GroupSpec) -> Option<AbelianVariants> {
    if !spec.factors().iter().all(|a| a.is_abelian_shape()) {
        return None;
    }
    let printed = kappa_abelian_closed_form(spec, ClosedFormVariant::Printed).ok();
    let mr_corrected = kappa_abelian_closed_form(spec, ClosedFormVariant::MrCorrected).ok();
    (printed.is_some() || mr_corrected.is_some()).then_some(AbelianVariants {
        printed,
        mr_corrected,
    })
}

/// Connectivity of `G_E(G)` for the group described by `spec`, by formula,
/// by exhaustive max-flow, or both.
pub fn kappa_enhanced(spec: &GroupSpec, options: KappaOptions) -> Result<ConnectivityReport> {
    let group = build_group(spec)?;
    kappa_enhanced_group(&group, &spec.to_string(), options)
}

pub fn kappa_enhanced_group(
    group: &FiniteGroup,
    name: &str,
    options: KappaOptions,
) -> Result<ConnectivityReport> {
    let (formula, witness_set) = if options.method.formula() {
        let (f, w) = formula_for_group(group)?;
        (Some(f), w)
    } else {
        (None, None)
    };
    let within_budget = group.order() <= options.budget;
    let oracle = if options.method.oracle() && within_budget {
        Some(vertex_connectivity(&enhanced_power_graph(group))?)
    } else if options.method == Method::Oracle {
        return Err(Error::BudgetExceeded {
            order: group.order(),
            budget: options.budget,
        });
    } else {
        None
    };
    let verdict = match (&formula, &oracle) {
        (Some(f), Some(o)) if f.kappa == o.kappa as u128 => Verdict::Agree,
        (Some(_), Some(_)) => Verdict::Disagree,
        (Some(_), None) => Verdict::OracleSkipped,
        (None, _) => Verdict::FormulaSkipped,
    };
    Ok(ConnectivityReport {
        spec: name.to_string(),
        order: group.order(),
        formula,
        oracle,
        witness_set,
        variants: group.spec().and_then(abelian_variants),
        verdict,
    })
}
