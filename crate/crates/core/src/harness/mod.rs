//! Isomorph-free enumeration of small graphs and the verification runs
//! built on it.

pub mod canon;
pub mod enumerate;
pub mod random;
pub mod report;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling};
pub use enumerate::{enumerate_graphs, EnumerateError, MAX_ENUMERATION_ORDER};
pub use report::{Counterexample, Params, Status, Theorem, VerificationReport};
pub use verify::{
    check_saturation_invariants, survey_nonhamiltonian, verify_erdos, verify_erdos_with,
    verify_ore, verify_ore_with, verify_posa_theorems, verify_stability, NonhamSurvey, VerifyError,
};
