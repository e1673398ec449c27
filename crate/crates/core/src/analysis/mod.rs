//! Type-level classification tables as executable predicates, checked
//! against the linear algebra by exact evaluation.

mod campaign;
mod counterexample;
mod instance;
mod pi2;
mod sampling;
mod tables;

pub use campaign::{
    campaign_cells, cell_samples, pit_campaign, table_checks, CampaignConfig, CampaignReport, CellFailure, CellKey,
    CellReport, Depth,
};
pub use counterexample::{bilinear_form, counterexample_d2, CounterexampleReport, FormMatch};
pub use instance::{analyze_instance, Check, InstanceAnalysis};
pub use pi2::{pi2_delta, q_expression, verify_pi2, verify_pi2_with, Pi2Witness};
pub use sampling::{forcings_for, sample_spec, sampling_fields, Forcing, MAX_ATTEMPTS};
pub use tables::{
    apm_product_identity, condition_id, dim2_predicate, factor_for_type, predicate_report,
    relation_check, relation_row, self_dual_array_check, self_dual_predicate, spin_predicate,
    spin_table_predicate, z_conditions, z_nonzero_predicate, PredicateReport, ZCondition,
};

use crate::field::FieldError;
use crate::parray::{LeonardType, SpecError};
use crate::realization::RealizationError;
use crate::zerodiag::ZeroDiagError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    ZeroDiag(#[from] ZeroDiagError),
    #[error("indices ({i},{j}) outside 1..={} for d = {d}", .d - 1)]
    IndexOutOfRange { i: usize, j: usize, d: usize },
    #[error("Q({i},{j}) has a zero denominator")]
    ZeroDenominator { i: usize, j: usize },
    #[error("pi2 identity fails at ({i},{j}): difference {lhs}, Q times factor {rhs}")]
    IdentityFailure { i: usize, j: usize, lhs: String, rhs: String },
    #[error("relation `{label}` fails at index {index}")]
    RelationFailure { label: String, index: usize },
    #[error("{0} has Z = 0 here, so no relation row applies")]
    NoRelation(LeonardType),
    #[error("table inconsistency for {kind}: {detail}")]
    TableInconsistency { kind: LeonardType, detail: String },
    #[error("theta = theta* but the second split sequence is not palindromic")]
    SelfDualPhi2,
    #[error("no sampler for forcing `{forcing}` on {kind}")]
    ForcingNotApplicable { kind: LeonardType, forcing: String },
    #[error("no valid {kind} sample at d = {d} after {attempts} attempts")]
    SamplingExhausted { kind: LeonardType, d: usize, attempts: usize },
    #[error("campaign needs at least one trial")]
    NoTrials,
    #[error("diameter range {min}..={max} is empty or starts below 3")]
    BadDiameterRange { min: usize, max: usize },
    #[error("rank of M is {0}")]
    RankOutOfRange(usize),
    #[error("{step}: {detail}")]
    MismatchAtEntry { step: String, detail: String },
}
