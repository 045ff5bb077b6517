use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{fmt_rat, parse_rat, QLin, Rat};

/// Coefficient ring of a sparse polynomial.
pub trait Coeff: Clone + Eq + fmt::Debug {
    fn nil() -> Self;
    fn unity() -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient when it exists in the ring.
    fn try_div(&self, o: &Self) -> Option<Self>;
    fn text(&self) -> String;
    fn parse_text(s: &str) -> Result<Self>;

    fn is_unity(&self) -> bool {
        *self == Self::unity()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

/// Coefficient rings in which every nonzero element is invertible.
pub trait Field: Coeff {
    fn inv(&self) -> Self {
        Self::unity().try_div(self).expect("inverse of zero")
    }
    fn div(&self, o: &Self) -> Self {
        self.try_div(o).expect("division by zero")
    }
}

impl Coeff for Rat {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unity() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        (!Zero::is_zero(o)).then(|| self / o)
    }
    fn text(&self) -> String {
        fmt_rat(self)
    }
    fn parse_text(s: &str) -> Result<Self> {
        parse_rat(s)
    }
}

impl Field for Rat {}

impl Coeff for QLin {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unity() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o).ok()
    }
    fn text(&self) -> String {
        if self.is_rational() {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
    fn parse_text(s: &str) -> Result<Self> {
        QLin::parse(s)
    }
}

impl Field for QLin {}

impl Coeff for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unity() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
    fn text(&self) -> String {
        self.to_string()
    }
    fn parse_text(s: &str) -> Result<Self> {
        s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct F2(pub bool);

impl Coeff for F2 {
    fn nil() -> Self {
        F2(false)
    }
    fn unity() -> Self {
        F2(true)
    }
    fn is_nil(&self) -> bool {
        !self.0
    }
    fn add(&self, o: &Self) -> Self {
        F2(self.0 ^ o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        F2(self.0 & o.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        o.0.then_some(*self)
    }
    fn text(&self) -> String {
        if self.0 { "1" } else { "0" }.into()
    }
    fn parse_text(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(F2(true)),
            "0" => Ok(F2(false)),
            other => Err(Error::Parse(format!("not an F2 element: {other:?}"))),
        }
    }
}

impl Field for F2 {}

/// Integer that is a rational prime up to sign.
pub fn is_prime_int(n: &BigInt) -> bool {
    let n = n.abs();
    if n < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if Zero::is_zero(&(&n % &d)) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors with multiplicity, ascending, of |n| (n nonzero).
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        while Zero::is_zero(&(&n % &d)) {
            n /= &d;
            out.push(d.clone());
        }
        d += 1;
    }
    if n > <BigInt as One>::one() {
        out.push(n);
    }
    out
}

/// Positive divisors of |n|, ascending.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut ds = vec![<BigInt as One>::one()];
    let pf = prime_factors(n);
    let mut i = 0;
    while i < pf.len() {
        let p = &pf[i];
        let mut e = 0;
        while i < pf.len() && &pf[i] == p {
            e += 1;
            i += 1;
        }
        let mut next = Vec::with_capacity(ds.len() * (e + 1));
        for d in &ds {
            let mut q = d.clone();
            for _ in 0..=e {
                next.push(q.clone());
                q *= p;
            }
        }
        ds = next;
    }
    ds.sort();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_helpers() {
        assert!(is_prime_int(&BigInt::from(-7)));
        assert!(!is_prime_int(&BigInt::from(1)));
        assert_eq!(prime_factors(&BigInt::from(-12)), vec![2.into(), 2.into(), BigInt::from(3)]);
        let ds: Vec<i64> = positive_divisors(&BigInt::from(12))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
    }
}
