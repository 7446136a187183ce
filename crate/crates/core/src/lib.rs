//! Strong graph bundles of cycles over cycles, `C_m ⊠^σℓ C_n`, and their
//! L(2,1)-labelings.
//!
//! The crate builds the bundles, produces the closed-form span-10 labelings
//! for qualifying cyclic shifts, verifies any labeling against the L(2,1)
//! conditions, and computes exact λ-numbers of small graphs by backtracking
//! as an independent check.

pub mod bundle;
pub mod certificate;
pub mod error;
pub mod formats;
pub mod graph;
pub mod labeling;
pub mod solver;
pub mod sweep;
pub mod theorem;

pub use bundle::{make_bundle, Automorphism, BundleSpec, Coordinate};
pub use certificate::{certify_theorem_instance, Certificate};
pub use error::{Error, Result};
pub use graph::{
    distance2_pairs, is_isomorphic_edge_set, make_complete, make_cycle, make_path, strong_product,
    Graph,
};
pub use labeling::{grid_view, span, verify_l21, Labeling, Violation, ViolationKind};
pub use solver::{
    lemma1_applies, lower_bound, solve_lambda, solve_lambda_with_order, Bound, Budget,
    Justification, SolveResult, SolveStatus,
};
pub use sweep::{sweep, sweep_csv, SweepRow};
pub use theorem::{
    classify_shift, closed_form_label, corollary1_equiv, corollary1_sufficient, corollary2_fact,
    generate_labeling, mod_abs_diff_fact, Family, Formula, FormulaParams, ShiftClass,
};
