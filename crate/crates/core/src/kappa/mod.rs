//! Connectivity formulas for enhanced power graphs of nilpotent groups.

mod closed_form;
mod formula;
mod report;
mod roots;
mod witness;

pub use closed_form::{abelian_closed_form, kappa_abelian_closed_form, ClosedForm, ClosedFormVariant};
pub use formula::{
    minimize_terms, mu, proper_subsets, tau, term_value, FactorTerm, KappaFormulaResult, MAX_FACTORS,
    QUATERNION_INCREMENT, QUATERNION_MR,
};
pub use report::{
    formula_for_group, kappa_enhanced, kappa_enhanced_group, AbelianVariants, ConnectivityReport,
    FormulaCase, FormulaOutcome, KappaOptions, Method, ReportJson, Verdict, DEFAULT_BUDGET,
};
pub use roots::{abelian_root_series, mr, mr_abelian_closed_form, root_counts, roots};
pub use witness::{factor_cut, witness_separating_set, FactorCut};
