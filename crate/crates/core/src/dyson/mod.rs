//! Compositions, the `L_{I,J}` statistic, closed forms, and the fast
//! evaluators of `D_{v,v+}(a)`.

mod closed_forms;
mod composition;
mod eval;

pub use closed_forms::{
    corollary_rhs, kadell_rhs, l_statistic, multinomial_ratio, qdyson_rhs, theorem_factor,
    CorollaryStep,
};
pub use composition::{Composition, IndexSet};
pub use eval::{eval_corollary, eval_inductive, eval_recursive, reduce_zero_parts};
