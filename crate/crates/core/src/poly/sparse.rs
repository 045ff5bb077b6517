use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{fmt_rat, parse_rat, Rat};

use super::coeff::Coeff;

/// Exponent monoid of a sparse polynomial, embedded in a group so that differences can be formed.
pub trait Exponent: Clone + Ord + fmt::Debug {
    fn origin() -> Self;
    fn is_origin(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    /// `self - o` when it is representable in the exponent type.
    fn sub(&self, o: &Self) -> Option<Self>;
    /// Text of `x^self` for nonzero `self`.
    fn monomial_text(&self) -> String;
    fn parse_monomial(s: &str) -> Result<Self>;
}

fn strip_x_pow(s: &str) -> Result<&str> {
    s.trim()
        .strip_prefix("x^(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("not a monomial: {s:?}")))
}

impl Exponent for u32 {
    fn origin() -> Self {
        0
    }
    fn is_origin(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn monomial_text(&self) -> String {
        format!("x^({self})")
    }
    fn parse_monomial(s: &str) -> Result<Self> {
        let e = strip_x_pow(s)?;
        e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))
    }
}

impl Exponent for Rat {
    fn origin() -> Self {
        num_traits::Zero::zero()
    }
    fn is_origin(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn monomial_text(&self) -> String {
        format!("x^({})", fmt_rat(self))
    }
    fn parse_monomial(s: &str) -> Result<Self> {
        parse_rat(strip_x_pow(s)?)
    }
}

/// Finite sum of `coefficient * x^exponent` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Poly<E: Exponent, C: Coeff> {
    terms: BTreeMap<E, C>,
}

impl<E: Exponent, C: Coeff> Default for Poly<E, C> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<E: Exponent, C: Coeff> Poly<E, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::unity())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(E::origin(), c)
    }

    pub fn monomial(e: E, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_nil() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    /// `x^e` with unit coefficient.
    pub fn x_pow(e: E) -> Self {
        Self::monomial(e, C::unity())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (E, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: E, c: C) {
        if c.is_nil() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_nil() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<E, C> {
        &self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&E, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &E> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &E) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::nil)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&E::origin())
    }

    pub fn min_term(&self) -> Option<(&E, &C)> {
        self.terms.iter().next()
    }

    pub fn max_term(&self) -> Option<(&E, &C)> {
        self.terms.iter().next_back()
    }

    /// Single term polynomial.
    pub fn as_monomial(&self) -> Option<(&E, &C)> {
        (self.terms.len() == 1).then(|| self.min_term().unwrap())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                p.add_term(e1.add(e2), c1.mul(c2));
            }
        }
        p
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, d)| (e.clone(), d.mul(c))))
    }

    /// Multiply by `x^e`.
    pub fn shift(&self, e: &E) -> Self {
        Poly { terms: self.terms.iter().map(|(f, c)| (f.add(e), c.clone())).collect() }
    }

    /// Divide by `x^e`; `None` if some exponent difference is not representable.
    pub fn unshift(&self, e: &E) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (f, c) in &self.terms {
            terms.insert(f.sub(e)?, c.clone());
        }
        Some(Poly { terms })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn product<'a>(it: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        it.into_iter().fold(Self::one(), |acc, p| acc.mul(p))
    }

    /// Divide every coefficient exactly by `c`.
    pub fn try_div_coeff(&self, c: &C) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, d) in &self.terms {
            terms.insert(e.clone(), d.try_div(c)?);
        }
        Some(Poly { terms })
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<E, D> {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn try_map_exponents<F: Exponent>(&self, f: impl Fn(&E) -> Option<F>) -> Option<Poly<F, C>> {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.add_term(f(e)?, c.clone());
        }
        Some(out)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in split_top_level(s, " + ") {
            let (e, c) = parse_term::<E, C>(term)?;
            if p.terms.contains_key(&e) {
                return Err(Error::Parse(format!("repeated exponent in {s:?}")));
            }
            if c.is_nil() {
                return Err(Error::Parse(format!("zero coefficient in {s:?}")));
            }
            p.terms.insert(e, c);
        }
        Ok(p)
    }
}

fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' | b'{' => depth += 1,
            b')' | b'}' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            out.push(&s[start..i]);
            i += sep.len();
            start = i;
            continue;
        }
        i += 1;
    }
    out.push(&s[start..]);
    out
}

fn find_monomial_start(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'x' | b'y' if depth == 0 && s[i..].starts_with(&format!("{}^(", bytes[i] as char)) => {
                return Some(i)
            }
            _ => {}
        }
    }
    None
}

fn parse_term<E: Exponent, C: Coeff>(t: &str) -> Result<(E, C)> {
    let t = t.trim();
    match find_monomial_start(t) {
        None => Ok((E::origin(), C::parse_text(t)?)),
        Some(i) => {
            let head = &t[..i];
            let c = match head {
                "" => C::unity(),
                "-" => C::unity().neg(),
                _ => {
                    let h = head
                        .strip_suffix('*')
                        .ok_or_else(|| Error::Parse(format!("bad term {t:?}")))?;
                    C::parse_text(h)?
                }
            };
            Ok((E::parse_monomial(&t[i..])?, c))
        }
    }
}

impl<E: Exponent, C: Coeff> fmt::Display for Poly<E, C> {
    /// Terms in increasing exponent order joined by ` + `: `c*x^(e)`, with unit coefficients dropped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_origin() {
                write!(f, "{}", c.text())?;
            } else if c.is_unity() {
                write!(f, "{}", e.monomial_text())?;
            } else if c.neg().is_unity() {
                write!(f, "-{}", e.monomial_text())?;
            } else {
                write!(f, "{}*{}", c.text(), e.monomial_text())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, QLin};
    use num_bigint::BigInt;

    #[test]
    fn arithmetic_and_text() {
        let p: Poly<Rat, BigInt> = Poly::parse("1 + -x^(1/2) + 3*x^(2)").unwrap();
        assert_eq!(p.to_string(), "1 + -x^(1/2) + 3*x^(2)");
        let q = p.mul(&p);
        assert_eq!(q.coeff(&rat(1, 2)), BigInt::from(-2));
        assert_eq!(q.coeff(&rat(1, 1)), BigInt::from(1));
        assert!(p.sub(&p).is_zero());
        let r: Poly<u32, QLin> = Poly::parse("(1 + 1*sqrt2)*x^(2) + -3/2*x^(3)").unwrap();
        assert_eq!(Poly::<u32, QLin>::parse(&r.to_string()).unwrap(), r);
        assert!(Poly::<u32, Rat>::parse("x^(1) + x^(1)").is_err());
    }
}
