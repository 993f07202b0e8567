//! Exact arithmetic in `Z[q, q^-1]` and its fraction field, plus the
//! q-combinatorial building blocks used everywhere else.

mod comb;
mod poly;
mod rat;

pub use comb::{one_minus_q_pow, q_binomial, q_factorial, q_multinomial, q_pochhammer};
pub use poly::QLaurentPoly;
pub use rat::QRat;
