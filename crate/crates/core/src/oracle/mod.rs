//! Independent ground truth: brute-force constant terms, the splitting
//! identity, and checkers for the auxiliary identities.

mod brute;
mod identities;
mod report;
mod splitting;

pub use brute::{brute_d, brute_d_with_kernel, KernelCache};
pub use identities::{
    check_lemma31, check_lemma52, check_lemma53, check_prop41, check_prop51, check_prop54,
    check_section6,
};
pub use report::{Status, VerificationReport};
pub use splitting::{a_ij, check_power_series, verify_splitting, SplitTerm};
