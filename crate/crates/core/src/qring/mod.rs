//! Exact arithmetic in `Z[q]`, its fraction field, and Laurent polynomials in
//! `X` over that field.

mod laurent;
mod parse;
mod poly;
mod qanalog;
mod rat;

pub use laurent::{gl2_shape, XLaurent};
pub use poly::QPoly;
pub use qanalog::{q_binomial, q_factorial, q_factorial_base, q_int, q_multinomial};
pub use rat::QRat;
