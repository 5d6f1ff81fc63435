//! Closed forms: the `(γ, u, v)` calculus, cohomology and Betti tables from
//! `Δ` complexes, local cohomology, vanishing and linearity predicates.

mod linearity;
mod params;
mod tables;
mod vanishing;

pub use linearity::{
    ideal_betti_from_quotient, is_c_linear, is_support_linear, two_var_linearity_predicted,
};
pub use params::{
    betti_params, betti_params_recursive, guv, interval_nakayama_summary, reduce_k,
    thecalc1_params, BettiParams, GuvTriple, IntervalSummary,
};
pub use tables::{
    betti_table_formula, cohomology_table_formula, cohomology_table_formula_with_mult,
    dual_betti_table_formula, local_cohomology, multiplication_rank_formula,
    multiplication_ranks_formula,
};
pub use vanishing::{
    nonvanishing_witness, two_var_report, vanishing_h0, vanishing_top, TwoVarCase, TwoVarReport,
    Witness, WitnessKind,
};
