//! Exponent monoids: the positive rationals, the monoid generated by sqrt 2, the dyadics and the
//! paired generators, and the eventually constant sequence monoid.

mod atoms;
mod pairing;
mod s4;
mod seq;

pub use atoms::{atoms_up_to, monoid_factorizations, MonoidElem, MonoidId};
pub use pairing::{is_prime_u64, pairing_inverse, pairing_prime};
pub use s4::{
    check_s4_sum, s4_decompose, s4_in_atom_span, s4_is_atom, s4_membership, s4_min_rational_subtract, S4Decomp,
    S4Elem, S4Gen,
};
pub use seq::{
    check_seq_sum, limit_has_flex, seq_atom_characterization, seq_in_m_span, seq_in_s, seq_membership, three_five,
    SeqElem,
};
