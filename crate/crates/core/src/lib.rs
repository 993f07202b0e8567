//! Exact evaluation of generalized q-Dyson constant terms
//! `D_{v,lambda}(a) = CT_x x^{-v} h_lambda(x^(a)) prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}`,
//! with two fast evaluators for `lambda = v+` and a brute-force expansion
//! oracle that checks them and the supporting identities.

pub mod error;
pub mod qring;

pub use error::{Error, Result};
pub use qring::{QLaurentPoly, QRat};
pub mod laurent;
pub use laurent::{ExponentVector, MultiLaurent};
pub mod dyson;
pub use dyson::{Composition, IndexSet};
pub mod oracle;
pub mod sweep;
