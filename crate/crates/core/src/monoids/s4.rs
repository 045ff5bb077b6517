//! The monoid generated by `alpha = sqrt 2`, the dyadic rationals `1/2^n`, and the elements
//! `g(n,m) = (alpha + m/2^n) / p(n,m)` for the paired odd primes.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::pairing::{is_prime_u64, pairing_inverse, pairing_prime};
use crate::error::{invalid, Error, Result};
use crate::exact::{fmt_rat, parse_rat, qlin_cmp, rat_big, QLin, Rat};
use crate::poly::{prime_factors, Exponent};
use crate::verdict::{Basis, Certificate, GenCount, Outcome, Rule, Verdict};

/// `alpha_coeff * alpha + rat_coeff`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct S4Elem {
    pub alpha: Rat,
    pub rat: Rat,
}

impl S4Elem {
    pub fn new(alpha: Rat, rat: Rat) -> Self {
        S4Elem { alpha, rat }
    }

    pub fn alpha() -> Self {
        S4Elem::new(Rat::one(), Rat::zero())
    }

    pub fn rational(q: Rat) -> Self {
        S4Elem::new(Rat::zero(), q)
    }

    pub fn value(&self) -> QLin {
        QLin::new(self.rat.clone(), self.alpha.clone())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let k = rat_big(k.clone());
        S4Elem::new(&self.alpha * &k, &self.rat * &k)
    }

    pub fn plus(&self, o: &Self) -> Self {
        S4Elem::new(&self.alpha + &o.alpha, &self.rat + &o.rat)
    }

    pub fn minus(&self, o: &Self) -> Self {
        S4Elem::new(&self.alpha - &o.alpha, &self.rat - &o.rat)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = S4Elem::default();
        for part in s.split(" + ") {
            let part = part.trim();
            if part == "alpha" {
                out.alpha += Rat::one();
            } else if let Some(a) = part.strip_suffix("*alpha") {
                out.alpha += parse_rat(a)?;
            } else {
                out.rat += parse_rat(part)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for S4Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match &self.alpha {
            a if a.is_zero() => None,
            a if a.is_one() => Some("alpha".to_string()),
            a => Some(format!("{}*alpha", fmt_rat(a))),
        };
        match (a, self.rat.is_zero()) {
            (None, _) => write!(f, "{}", fmt_rat(&self.rat)),
            (Some(a), true) => write!(f, "{a}"),
            (Some(a), false) => write!(f, "{a} + {}", fmt_rat(&self.rat)),
        }
    }
}

impl PartialOrd for S4Elem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for S4Elem {
    /// Order of real values; injective because alpha is irrational.
    fn cmp(&self, other: &Self) -> Ordering {
        qlin_cmp(&self.value(), &other.value())
    }
}

impl Exponent for S4Elem {
    fn origin() -> Self {
        S4Elem::default()
    }
    fn is_origin(&self) -> bool {
        self.alpha.is_zero() && self.rat.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self.plus(o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self.minus(o))
    }
    fn monomial_text(&self) -> String {
        format!("x^({self})")
    }
    fn parse_monomial(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("x^(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("not a monomial: {s:?}")))?;
        S4Elem::parse(inner)
    }
}

/// A generator of the monoid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum S4Gen {
    Alpha,
    /// `1 / 2^e`.
    Dyadic(u32),
    /// `(alpha + m/2^n) / p`.
    Paired { n: u64, m: u64, p: u64 },
}

impl S4Gen {
    pub fn paired(n: u64, m: u64) -> Result<Self> {
        Ok(S4Gen::Paired { n, m, p: pairing_prime(n, m)? })
    }

    pub fn value(&self) -> S4Elem {
        match *self {
            S4Gen::Alpha => S4Elem::alpha(),
            S4Gen::Dyadic(e) => S4Elem::rational(Rat::new(BigInt::one(), BigInt::one() << e)),
            S4Gen::Paired { n, m, p } => {
                let p = Rat::from_integer(p.into());
                S4Elem::new(Rat::one() / &p, Rat::new(m.into(), BigInt::one() << n) / &p)
            }
        }
    }

    pub fn is_atom(&self) -> bool {
        !matches!(self, S4Gen::Dyadic(_))
    }
}

impl fmt::Display for S4Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            S4Gen::Alpha => write!(f, "alpha"),
            S4Gen::Dyadic(e) => write!(f, "1/2^{e}"),
            S4Gen::Paired { n, m, .. } => write!(f, "g({n},{m})"),
        }
    }
}

impl Serialize for S4Gen {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for S4Elem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Canonical decomposition `t = c0 * alpha + sum r_p g(p) + residue` with `0 <= r_p < p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S4Decomp {
    pub c0: BigInt,
    /// `(generator, r_p)` with `r_p >= 1`, ascending in `p`.
    pub parts: Vec<(S4Gen, BigInt)>,
    pub residue: Rat,
}

fn is_dyadic(q: &Rat) -> bool {
    let d = q.denom();
    (d & (d - BigInt::one())).is_zero()
}

/// Compute the canonical decomposition or the rule that rules out membership.
pub fn s4_decompose(t: &S4Elem) -> std::result::Result<S4Decomp, (Rule, String)> {
    let a = &t.alpha;
    if a.is_negative() {
        return Err((Rule::NegativeAlphaCoefficient, format!("alpha coefficient {} < 0", fmt_rat(a))));
    }
    let d = a.denom().clone();
    if d.is_even() {
        return Err((Rule::EvenAlphaDenominator, format!("alpha coefficient {} has even denominator", fmt_rat(a))));
    }
    let primes = prime_factors(&d);
    if primes.windows(2).any(|w| w[0] == w[1]) {
        return Err((Rule::SquareInAlphaDenominator, format!("denominator {d} is not squarefree")));
    }
    let mut parts = Vec::new();
    let mut frac = Rat::zero();
    let mut paired_rat = Rat::zero();
    for p in &primes {
        let pu = p.to_u64().filter(|&p| is_prime_u64(p));
        let (n, m) = match pu.and_then(pairing_inverse) {
            Some(nm) => nm,
            None => return Err((Rule::PrimeBeyondBound, format!("prime {p} beyond pairing limit"))),
        };
        let cof = &d / p;
        let inv = cof.mod_floor(p).extended_gcd(p).x.mod_floor(p);
        let r = (a.numer() * inv).mod_floor(p);
        let g = S4Gen::Paired { n, m, p: pu.unwrap() };
        let v = g.value();
        frac += &v.alpha * rat_big(r.clone());
        paired_rat += &v.rat * rat_big(r.clone());
        parts.push((g, r));
    }
    let c0 = a - &frac;
    debug_assert!(c0.is_integer());
    if c0.is_negative() {
        return Err((Rule::AlphaPartTooSmall, format!("integer part of alpha coefficient is {}", fmt_rat(&c0))));
    }
    let residue = &t.rat - &paired_rat;
    if residue.is_negative() {
        return Err((Rule::NegativeResidue, format!("rational residue {} < 0", fmt_rat(&residue))));
    }
    if !is_dyadic(&residue) {
        return Err((Rule::NonDyadicResidue, format!("rational residue {} is not dyadic", fmt_rat(&residue))));
    }
    Ok(S4Decomp { c0: c0.to_integer(), parts, residue })
}

/// `k / 2^e` in lowest terms as `(k, e)`.
fn dyadic_parts(q: &Rat) -> (BigInt, u32) {
    let e = q.denom().bits().saturating_sub(1) as u32;
    (q.numer().clone(), e)
}

fn sum_terms(terms: &[GenCount]) -> S4Elem {
    terms.iter().fold(S4Elem::default(), |acc, t| acc.plus(&t.generator.value().scale(&t.count)))
}

/// Decide membership in the monoid; the certificate lists generator multiplicities.
pub fn s4_membership(t: &S4Elem) -> Verdict {
    match s4_decompose(t) {
        Err((rule, detail)) => {
            let outcome = if rule == Rule::PrimeBeyondBound { Outcome::UnknownAtBound } else { Outcome::Refuted };
            Verdict::structural(outcome, rule, t, detail)
        }
        Ok(dec) => {
            let mut terms = Vec::new();
            if !dec.c0.is_zero() {
                terms.push(GenCount { generator: S4Gen::Alpha, count: dec.c0.clone() });
            }
            for (g, r) in &dec.parts {
                terms.push(GenCount { generator: *g, count: r.clone() });
            }
            if !dec.residue.is_zero() {
                let (k, e) = dyadic_parts(&dec.residue);
                terms.push(GenCount { generator: S4Gen::Dyadic(e), count: k });
            }
            debug_assert_eq!(sum_terms(&terms), *t);
            Verdict::holds(Basis::Exhaustive, Certificate::S4Sum { target: t.clone(), terms })
        }
    }
}

/// Re-verify an `S4Sum` certificate: nonnegative counts of genuine generators summing to the target.
pub fn check_s4_sum(target: &S4Elem, terms: &[GenCount], atoms_only: bool) -> bool {
    terms.iter().all(|t| {
        !t.count.is_negative()
            && (!atoms_only || t.generator.is_atom())
            && match t.generator {
                S4Gen::Paired { n, m, p } => pairing_prime(n, m).ok() == Some(p),
                _ => true,
            }
    }) && sum_terms(terms) == *target
}

/// Largest rational `q` with `b - q` in the monoid, with the membership certificate of `b - q`.
pub fn s4_min_rational_subtract(b: &S4Elem) -> Result<(Rat, Verdict)> {
    match s4_decompose(b) {
        Err((_, detail)) => invalid(format!("{b} is not in the monoid: {detail}")),
        Ok(dec) => {
            let rest = S4Elem::new(b.alpha.clone(), &b.rat - &dec.residue);
            Ok((dec.residue, s4_membership(&rest)))
        }
    }
}

/// Atoms are exactly `alpha` and the `g(n,m)`.
pub fn s4_is_atom(t: &S4Elem) -> bool {
    match s4_decompose(t) {
        Ok(dec) => {
            let count: BigInt = dec.parts.iter().map(|(_, r)| r.clone()).sum::<BigInt>() + &dec.c0;
            dec.residue.is_zero() && count.is_one()
        }
        Err(_) => false,
    }
}

/// Decide whether `t` is a finite sum of atoms; the certificate lists atom multiplicities.
pub fn s4_in_atom_span(t: &S4Elem) -> Verdict {
    let dec = match s4_decompose(t) {
        Err((rule, detail)) => {
            let outcome = if rule == Rule::PrimeBeyondBound { Outcome::UnknownAtBound } else { Outcome::Refuted };
            return Verdict::structural(outcome, rule, t, detail);
        }
        Ok(dec) => dec,
    };
    let mut extra: Vec<(S4Gen, BigInt)> = Vec::new();
    let d = &dec.residue;
    let mut used = BigInt::zero();
    if d.is_zero() {
    } else if !d.is_integer() {
        let (m, n) = dyadic_parts(d);
        extra.push((dyadic_pair(n as u64, &m), BigInt::one()));
        used = BigInt::one();
    } else {
        // An integer is not m/2^n with n >= 1, but 2D - 1 over 2 plus 1/2 is.
        let two_d_minus_one = d.to_integer() * 2 - 1;
        let g1 = dyadic_pair(1, &two_d_minus_one);
        let g2 = dyadic_pair(1, &BigInt::one());
        if g1 == g2 {
            extra.push((g1, BigInt::from(2)));
        } else {
            extra.push((g1, BigInt::one()));
            extra.push((g2, BigInt::one()));
        }
        used = BigInt::from(2);
    }
    if dec.c0 < used {
        return Verdict::structural(
            Outcome::Refuted,
            Rule::ResidueNeedsMoreAlpha,
            t,
            format!("residue {} needs {used} spare alpha, only {} available", fmt_rat(d), dec.c0),
        );
    }
    let mut counts: std::collections::BTreeMap<S4Gen, BigInt> = std::collections::BTreeMap::new();
    if dec.c0 > used {
        counts.insert(S4Gen::Alpha, &dec.c0 - &used);
    }
    for (g, r) in &dec.parts {
        *counts.entry(*g).or_default() += r;
    }
    for (g, k) in extra {
        if let S4Gen::Paired { p, .. } = g {
            *counts.entry(g).or_default() += k * BigInt::from(p);
        }
    }
    let terms: Vec<GenCount> = counts.into_iter().map(|(generator, count)| GenCount { generator, count }).collect();
    debug_assert_eq!(sum_terms(&terms), *t);
    Verdict::holds(Basis::Structural(Rule::SumOfAtomsWitness), Certificate::S4Sum { target: t.clone(), terms })
}

fn dyadic_pair(n: u64, m: &BigInt) -> S4Gen {
    let m = m.to_u64().expect("odd numerator fits in u64");
    S4Gen::paired(n, m).expect("odd numerator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn e(a: (i64, i64), q: (i64, i64)) -> S4Elem {
        S4Elem::new(rat(a.0, a.1), rat(q.0, q.1))
    }

    #[test]
    fn membership_examples() {
        let v = s4_membership(&e((0, 1), (3, 8)));
        assert!(v.is_holds());
        match v.certificate {
            Certificate::S4Sum { terms, .. } => {
                assert_eq!(terms, vec![GenCount { generator: S4Gen::Dyadic(3), count: 3.into() }])
            }
            _ => panic!(),
        }
        let v = s4_membership(&e((1, 1), (1, 2)));
        match v.certificate {
            Certificate::S4Sum { terms, .. } => assert_eq!(terms.len(), 2),
            _ => panic!(),
        }
        let v = s4_membership(&e((1, 2), (0, 1)));
        assert_eq!(v.basis, Basis::Structural(Rule::EvenAlphaDenominator));
        assert!(v.is_refuted());
    }

    #[test]
    fn min_rational_subtract_examples() {
        assert_eq!(s4_min_rational_subtract(&e((0, 1), (5, 4))).unwrap().0, rat(5, 4));
        assert_eq!(s4_min_rational_subtract(&e((1, 1), (1, 2))).unwrap().0, rat(1, 2));
        let g = S4Gen::paired(1, 1).unwrap().value();
        assert_eq!(s4_min_rational_subtract(&g).unwrap().0, rat(0, 1));
        assert!(s4_min_rational_subtract(&e((1, 2), (0, 1))).is_err());
    }

    #[test]
    fn atoms_and_span() {
        assert!(s4_is_atom(&S4Elem::alpha()));
        assert!(s4_is_atom(&S4Gen::paired(2, 3).unwrap().value()));
        assert!(!s4_is_atom(&e((0, 1), (1, 2))));
        // alpha + 1/2 is three copies of g(1,1)
        match s4_in_atom_span(&e((1, 1), (1, 2))).certificate {
            Certificate::S4Sum { terms, .. } => assert_eq!(
                terms,
                vec![GenCount { generator: S4Gen::paired(1, 1).unwrap(), count: 3.into() }]
            ),
            _ => panic!(),
        }
        assert!(s4_in_atom_span(&e((1, 1), (1, 1))).is_refuted());
        assert!(s4_in_atom_span(&e((2, 1), (1, 1))).is_holds());
        assert!(s4_in_atom_span(&e((0, 1), (1, 4))).is_refuted());
    }

    #[test]
    fn text() {
        for s in ["alpha", "1/3*alpha + 1/6", "5/4", "0"] {
            assert_eq!(S4Elem::parse(s).unwrap().to_string(), s);
        }
    }
}
