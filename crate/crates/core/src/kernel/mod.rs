//! Exact arithmetic primitives shared by every other module.

pub mod poly;
pub mod rational;
pub mod sturm;

pub use poly::RationalPolynomial;
pub use rational::{
    approx, factorial, format_rational, gen_binomial, int, parse_rational, pochhammer, rat,
    sign_power, signum, Rational,
};
pub use sturm::{count_real_roots, count_real_roots_closed, sturm_sequence};
