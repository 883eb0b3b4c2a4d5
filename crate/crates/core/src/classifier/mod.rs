//! Parameter-level and graph-level decisions about triple regularity and
//! triple transitivity.

mod forms;
mod intersection;
mod krein;
mod triple;

pub use forms::{
    exclusion_lemma, ls_nls_lemma, param_form, require_primitive, ExclusionVerdict, LsLemmaOutcome, ParamForm,
};
pub use intersection::{
    intersection_numbers, matches_t0_template, swap_cells, t0_case, t0_templates, IntersectionNumbers, T0Case,
};
pub use krein::{krein, krein_all, KreinReport};
pub use triple::{
    triple_intersection_numbers, triple_regularity, SubconstituentFailure, TripleClass, TripleRegularity, TripleTable,
    TripleViolation, TripleWitness, TRIPLE_GUARD,
};

use crate::autgrp::AutomorphismGroup;
use crate::error::Result;
use crate::graphcore::Graph;
use crate::terwilliger::{analyze_at, AlgebraReport, AnalysisOptions};

/// The full pipeline at ω = 0: group data, the three algebras and the
/// verdict `transitive ∧ rank 3 ∧ dim T₀ = dim T = dim T̃`. Equal
/// dimensions suffice because `T₀ ⊆ T ⊆ T̃`.
pub fn triple_transitivity_verdict(
    g: &Graph,
    group: &AutomorphismGroup,
    opts: &AnalysisOptions,
) -> Result<AlgebraReport> {
    analyze_at(g, group, 0, opts)
}
