//! Exact arithmetic over the rationals and over the real quadratic field Q(sqrt 2).

mod qlin;
mod rat;

pub use qlin::{qlin_cmp, QLin};
pub use rat::{
    big, fmt_rat, is_integer, parse_rat, rat, rat_big, rat_floor, rat_int, Rat,
};
