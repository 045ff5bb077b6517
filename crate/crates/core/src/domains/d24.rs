//! `Z[x^(1/n)]` for all `n`: integer coefficients, non-negative rational exponents.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ops::{divisor_cert, from_furstenberg, multiplied, Ops};
use super::GenPoly;
use crate::exact::{fmt_rat, Rat};
use crate::poly::{factor_z, is_prime_int, positive_divisors, prime_factors, Poly, UPoly};
use crate::verdict::{Basis, Certificate, Outcome, Rule, SearchBounds, Verdict};

pub(crate) struct D24;

type P = Poly<Rat, BigInt>;

fn un(g: &GenPoly) -> &P {
    match g {
        GenPoly::Puiseux(p) => p,
        _ => panic!("element of another domain"),
    }
}

fn w(p: P) -> GenPoly {
    GenPoly::Puiseux(p)
}

/// Common denominator of the exponents.
pub(crate) fn level(f: &P) -> u64 {
    f.exponents().fold(BigInt::one(), |l, e| l.lcm(e.denom())).to_u64().expect("level fits in u64")
}

/// Coefficients in `t = x^(1/l)`.
pub(crate) fn dense(f: &P, l: u64) -> Vec<BigInt> {
    let mut v = Vec::new();
    for (e, c) in f.iter() {
        let i = (e * Rat::from_integer(l.into())).to_integer().to_usize().unwrap();
        if v.len() <= i {
            v.resize(i + 1, BigInt::zero());
        }
        v[i] = c.clone();
    }
    v
}

pub(crate) fn from_dense(v: &[BigInt], l: u64) -> P {
    Poly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Rat::new((i as u64).into(), l.into()), c.clone())),
    )
}

fn content(f: &P) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
}

fn min_exp(f: &P) -> Rat {
    f.min_term().unwrap().0.clone()
}

/// Exact quotient in the ring.
pub(crate) fn quotient(f: &P, g: &P) -> Option<P> {
    let l = level(f).lcm(&level(g));
    let to_q = |p: &P| UPoly::new(dense(p, l).into_iter().map(Rat::from_integer).collect());
    let h = to_q(f).exact_div(&to_q(g))?;
    if !h.coeffs().iter().all(|c| c.is_integer()) {
        return None;
    }
    let v: Vec<BigInt> = h.coeffs().iter().map(|c| c.to_integer()).collect();
    Some(from_dense(&v, l))
}

fn is_monomial_up_to_sign(f: &P) -> bool {
    f.as_monomial().is_some_and(|(_, c)| c.abs().is_one())
}

impl D24 {
    /// Levels examined for `f`: multiples of its own level up to the denominator bound.
    fn levels(f: &P, b: &SearchBounds) -> Vec<u64> {
        let n = level(f);
        let top = n.max(b.max_denominator as u64);
        (1..).map(|j| j * n).take_while(|&l| l <= top).collect()
    }

    /// A splitting into two non-units, or `None` if irreducible at bound; the flag tells whether
    /// "irreducible" is a closed form (prime constant).
    fn split(f: &P, b: &SearchBounds) -> (Option<(P, P)>, bool) {
        let q = min_exp(f);
        if !q.is_zero() {
            let half = q / Rat::from_integer(2.into());
            let left = Poly::x_pow(half.clone());
            return (Some((left, f.unshift(&half).unwrap())), false);
        }
        let c = content(f);
        if c > BigInt::one() {
            if f.len() == 1 {
                if is_prime_int(&c) {
                    return (None, true);
                }
            }
            let p = prime_factors(&c)[0].clone();
            if f.len() > 1 || c != p {
                return (Some((Poly::constant(p.clone()), f.try_div_coeff(&p).unwrap())), false);
            }
        }
        for l in Self::levels(f, b) {
            let zf = factor_z(&dense(f, l));
            let total: u32 = zf.factors.iter().map(|(_, e)| e).sum();
            if total >= 2 {
                let g = from_dense(&zf.factors[0].0, l);
                let h = quotient(f, &g).expect("factor divides");
                return (Some((g, h)), false);
            }
        }
        (None, false)
    }

    fn full_factor(f: &P, b: &SearchBounds, out: &mut Vec<P>) {
        match Self::split(f, b).0 {
            None => out.push(f.clone()),
            Some((l, r)) => {
                Self::full_factor(&l, b, out);
                Self::full_factor(&r, b, out);
            }
        }
    }

    fn no_divisor_refuter(f: &GenPoly, rule: Rule, what: &str) -> Verdict {
        Verdict::structural(
            Outcome::Refuted,
            rule,
            f,
            format!("irreducibles have nonzero constant term (x^q = x^(q/2) x^(q/2) splits off otherwise); {what}"),
        )
    }
}

impl Ops for D24 {
    fn contains(&self, f: &GenPoly) -> bool {
        matches!(f, GenPoly::Puiseux(p) if p.exponents().all(|e| !e.is_negative()))
    }

    fn is_unit(&self, f: &GenPoly) -> bool {
        un(f).as_monomial().is_some_and(|(e, c)| e.is_zero() && c.abs().is_one())
    }

    fn one(&self) -> GenPoly {
        w(Poly::one())
    }

    fn mul(&self, a: &GenPoly, b: &GenPoly) -> GenPoly {
        w(un(a).mul(un(b)))
    }

    fn divide(&self, f: &GenPoly, g: &GenPoly) -> Option<(GenPoly, GenPoly)> {
        quotient(un(f), un(g)).map(|h| (w(h), self.one()))
    }

    fn irreducible(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        match Self::split(un(f), b) {
            (Some((l, r)), _) => Verdict::refuted(Basis::Witness, Certificate::Split { target: f.clone(), left: w(l), right: w(r), unit: None }),
            (None, true) => Verdict::structural(Outcome::Holds, Rule::PrimeConstant, f, "a rational prime"),
            (None, false) => Verdict {
                outcome: Outcome::Holds,
                basis: Basis::AtBound,
                certificate: Certificate::SearchExhausted { explored: Self::levels(un(f), b).len() as u64 },
                bounds: Some(b.clone()),
            },
        }
    }

    fn atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = un(f);
        if !min_exp(p).is_zero() {
            return Self::no_divisor_refuter(f, Rule::ZeroConstantTermPersists, "so products of irreducibles never have constant term 0");
        }
        let mut fs = Vec::new();
        Self::full_factor(p, b, &mut fs);
        let unit = Poly::constant(if p.constant_term().is_negative() { -BigInt::one() } else { BigInt::one() });
        let prod = fs.iter().fold(Poly::one(), |a: P, g| a.mul(g));
        let unit = if prod == *p { Poly::one() } else { unit };
        Verdict {
            outcome: Outcome::Holds,
            basis: Basis::Witness,
            certificate: Certificate::Factorization { target: f.clone(), unit: w(unit), factors: fs.into_iter().map(w).collect() },
            bounds: Some(b.clone()),
        }
    }

    fn divisors(&self, f: &GenPoly, b: &SearchBounds) -> Vec<GenPoly> {
        let p = un(f);
        let q = min_exp(p);
        let core = p.unshift(&q).unwrap();
        let l = level(&core);
        let zf = factor_z(&dense(&core, l));
        let mut pieces: Vec<P> = Vec::new();
        for (g, e) in &zf.factors {
            pieces.extend(std::iter::repeat_n(from_dense(g, l), *e as usize));
        }
        let mut monos = vec![Rat::zero()];
        for den in 1..=b.max_denominator as i64 {
            for num in 1..=(&q * Rat::from_integer(den.into())).to_integer().to_i64().unwrap_or(0) {
                monos.push(Rat::new(num.into(), den.into()));
            }
        }
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << pieces.len().min(12)) {
            let mut g: P = Poly::one();
            for (i, pc) in pieces.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    g = g.mul(pc);
                }
            }
            for d in positive_divisors(&zf.content) {
                for m in &monos {
                    let cand = w(g.scale(&d).shift(m));
                    if !self.is_unit(&cand) && self.divide(f, &cand).is_some() {
                        out.insert(cand);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    fn furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = un(f);
        let c = content(p);
        let pi = if c > BigInt::one() {
            Poly::constant(prime_factors(&c)[0].clone())
        } else {
            let core = p.unshift(&min_exp(p)).unwrap();
            if is_monomial_up_to_sign(&core) {
                return Self::no_divisor_refuter(
                    f,
                    Rule::MonomialHasNoIrreducibleDivisor,
                    &format!("a divisor of x^{} would have constant term 0", fmt_rat(&min_exp(p))),
                );
            }
            let mut fs = Vec::new();
            Self::full_factor(&core, b, &mut fs);
            fs.swap_remove(0)
        };
        let mut v = Verdict::holds(Basis::Witness, divisor_cert(self, f, &w(pi)).expect("divides"));
        if c <= BigInt::one() {
            v = v.with_bounds(b);
        }
        v
    }

    fn almost_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        if !min_exp(un(f)).is_zero() {
            return Self::no_divisor_refuter(f, Rule::ZeroConstantTermPersists, "so f times irreducibles keeps constant term 0 and is never atomic");
        }
        multiplied(f, Vec::new(), true, self.atomic(f, b))
    }

    fn quasi_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        if !min_exp(un(f)).is_zero() {
            return Self::no_divisor_refuter(f, Rule::ZeroConstantTermPersists, "so every multiple of f has constant term 0 and is never atomic");
        }
        multiplied(f, Vec::new(), false, self.atomic(f, b))
    }

    fn semi_furstenberg_at(&self, beta: &GenPoly, alpha: &GenPoly, b: &SearchBounds) -> Verdict {
        if is_monomial_up_to_sign(un(alpha)) {
            return Self::no_divisor_refuter(alpha, Rule::IrreducibleHasNonzeroConstant, "an irreducible dividing x^q beta divides beta");
        }
        let p = self.mul(alpha, beta);
        let mut fs = Vec::new();
        let pp = un(&p);
        let c = content(pp);
        for q in prime_factors(&c) {
            fs.push(Poly::constant(q));
        }
        let core = pp.unshift(&min_exp(pp)).unwrap().try_div_coeff(&c).unwrap();
        if !self.is_unit(&w(core.clone())) {
            Self::full_factor(&core, b, &mut fs);
        }
        for pi in fs {
            let pi = w(pi);
            if self.divide(beta, &pi).is_none() {
                let div = divisor_cert(self, &p, &pi).expect("factor divides");
                return Verdict::holds(
                    Basis::Witness,
                    Certificate::Furstenberg {
                        alpha: alpha.clone(),
                        others: vec![beta.clone()],
                        irreducible_others: false,
                        pi,
                        division: Box::new(div),
                    },
                )
                .with_bounds(b);
            }
        }
        Verdict::unknown(b, Certificate::None)
    }

    fn almost_furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        if is_monomial_up_to_sign(un(f)) {
            return Self::no_divisor_refuter(f, Rule::IrreducibleHasNonzeroConstant, "an irreducible dividing x^q g1...gn divides g1...gn");
        }
        from_furstenberg(f, self.furstenberg(f, b), b)
    }

    fn quasi_furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        if is_monomial_up_to_sign(un(f)) {
            return Self::no_divisor_refuter(f, Rule::IrreducibleHasNonzeroConstant, "an irreducible dividing x^q beta divides beta");
        }
        from_furstenberg(f, self.furstenberg(f, b), b)
    }

    fn antimatter(&self, _b: &SearchBounds) -> Verdict {
        let two = w(Poly::constant(2.into()));
        Verdict::refuted(Basis::Witness, Certificate::Factorization { target: two.clone(), unit: self.one(), factors: vec![two] })
    }

    fn samples(&self, seed: u64, b: &SearchBounds) -> Vec<GenPoly> {
        let mut out: Vec<GenPoly> = ["x^(1)", "6", "x^(1/2)", "1 + x^(1)", "2 + x^(1/2)", "2*x^(1/3) + 4*x^(1)", "-1 + x^(2)"]
            .iter()
            .map(|s| w(Poly::parse(s).unwrap()))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = (b.max_coeff_height as i64).min(10);
        while out.len() < 20 {
            let n = rng.gen_range(1..=b.max_denominator.max(1) as u64);
            let v: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-h..=h))).collect();
            let g = w(from_dense(&v, n));
            if !g.is_zero() && !self.is_unit(&g) {
                out.push(g);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Domain, DomainId};
    use super::*;
    use crate::domains::{check_quasi_furstenberg, is_irreducible};

    #[test]
    fn examples() {
        let d = Domain::new(DomainId::D24);
        let b = SearchBounds::default();
        let v = is_irreducible(&d, &d.parse("x^(1/2)").unwrap(), &b).unwrap();
        match v.certificate {
            Certificate::Split { left, right, .. } => {
                assert_eq!(left.to_string(), "x^(1/4)");
                assert_eq!(right.to_string(), "x^(1/4)");
            }
            c => panic!("{c:?}"),
        }
        // 1 + x = 1 + t^3 splits at level 3
        assert!(is_irreducible(&d, &d.parse("1 + x^(1)").unwrap(), &b).unwrap().is_refuted());
        assert!(check_quasi_furstenberg(&d, &d.parse("x^(1)").unwrap(), &b).unwrap().is_refuted());
        assert!(check_quasi_furstenberg(&d, &d.parse("6").unwrap(), &b).unwrap().is_holds());
    }
}
