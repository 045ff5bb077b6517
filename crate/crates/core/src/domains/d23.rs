//! `Z + x Q[x]`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ops::{divisor_cert, multiplied, Ops};
use super::{Domain, DomainId, GenPoly};
use crate::error::{invalid, Result};
use crate::exact::Rat;
use crate::poly::{factor_q, is_prime_int, positive_divisors, prime_factors, Field, Poly, UPoly};
use crate::verdict::{Basis, Certificate, Outcome, Rule, SearchBounds, Verdict};

pub(crate) struct D23;

type P = Poly<u32, Rat>;

fn un(g: &GenPoly) -> &P {
    match g {
        GenPoly::Int(p) => p,
        _ => panic!("element of another domain"),
    }
}

fn w(p: P) -> GenPoly {
    GenPoly::Int(p)
}

fn cst(n: &BigInt) -> P {
    Poly::constant(Rat::from_integer(n.clone()))
}

/// Normalized (constant term 1) irreducible factors over Q, with multiplicity, of `f / x^k`.
fn hats(f: &P) -> Vec<P> {
    let (&k, _) = f.min_term().expect("nonzero");
    let g = UPoly::from_sparse(&f.unshift(&k).unwrap());
    let mut out = Vec::new();
    for (m, e) in factor_q(&g).1 {
        let hat = m.scale(&m.coeff(0).inv()).to_sparse();
        out.extend(std::iter::repeat_n(hat, e as usize));
    }
    out
}

fn c0(f: &P) -> Option<BigInt> {
    let c = f.constant_term();
    (!c.is_zero()).then(|| c.to_integer())
}

fn zero_constant_refuter(f: &GenPoly, what: &str) -> Verdict {
    Verdict::structural(
        Outcome::Refuted,
        Rule::ZeroConstantTermPersists,
        f,
        format!("irreducibles have nonzero constant term, so no product of them has constant term 0; {what}"),
    )
}

impl D23 {
    fn factorization(&self, f: &P) -> Option<(BigInt, Vec<P>)> {
        let c = c0(f)?;
        let mut fs: Vec<P> = prime_factors(&c).iter().map(cst).collect();
        fs.extend(hats(f));
        Some((c.signum(), fs))
    }
}

impl Ops for D23 {
    fn contains(&self, f: &GenPoly) -> bool {
        matches!(f, GenPoly::Int(p) if p.constant_term().is_integer())
    }

    fn is_unit(&self, f: &GenPoly) -> bool {
        let p = un(f);
        p.as_monomial().is_some_and(|(&e, c)| e == 0 && c.abs().is_one())
    }

    fn one(&self) -> GenPoly {
        w(Poly::one())
    }

    fn mul(&self, a: &GenPoly, b: &GenPoly) -> GenPoly {
        w(un(a).mul(un(b)))
    }

    fn divide(&self, f: &GenPoly, g: &GenPoly) -> Option<(GenPoly, GenPoly)> {
        let h = UPoly::from_sparse(un(f)).exact_div(&UPoly::from_sparse(un(g)))?.to_sparse();
        h.constant_term().is_integer().then(|| (w(h), self.one()))
    }

    fn irreducible(&self, f: &GenPoly, _b: &SearchBounds) -> Verdict {
        let p = un(f);
        let split = |l: P, r: P| Verdict::refuted(Basis::Witness, Certificate::Split { target: f.clone(), left: w(l), right: w(r), unit: None });
        let Some(c) = c0(p) else {
            let two = Rat::from_integer(2.into());
            return split(Poly::constant(two.clone()), p.scale(&two.inv()));
        };
        let constant_only = p.len() == 1;
        if c.abs() >= BigInt::from(2) {
            if constant_only && is_prime_int(&c) {
                return Verdict::structural(Outcome::Holds, Rule::PrimeConstant, f, format!("{c} is a rational prime"));
            }
            let q = prime_factors(&c)[0].clone();
            return split(cst(&q), p.scale(&Rat::from_integer(q).inv()));
        }
        let hs = hats(p);
        if hs.len() == 1 {
            return Verdict::structural(
                Outcome::Holds,
                Rule::ConstantOneRationallyIrreducible,
                f,
                "constant term +-1 and irreducible over Q",
            );
        }
        let right = UPoly::from_sparse(p).exact_div(&UPoly::from_sparse(&hs[0])).unwrap().to_sparse();
        split(hs[0].clone(), right)
    }

    fn atomic(&self, f: &GenPoly, _b: &SearchBounds) -> Verdict {
        let p = un(f);
        match self.factorization(p) {
            None => zero_constant_refuter(f, "f has constant term 0"),
            Some((s, fs)) => Verdict::holds(
                Basis::Witness,
                Certificate::Factorization { target: f.clone(), unit: w(cst(&s)), factors: fs.into_iter().map(w).collect() },
            ),
        }
    }

    fn divisors(&self, f: &GenPoly, b: &SearchBounds) -> Vec<GenPoly> {
        let p = un(f);
        let (&k, _) = p.min_term().unwrap();
        let hs = hats(p);
        let h = b.max_coeff_height as i64;
        let mut mus: Vec<(u32, Rat)> = Vec::new();
        match c0(p) {
            Some(c) => mus.extend(positive_divisors(&c).into_iter().map(|d| (0, Rat::from_integer(d)))),
            None => {
                for a in 1..=h {
                    mus.push((0, Rat::from_integer(a.into())));
                }
                for j in 1..=k {
                    for a in 1..=h {
                        for d in 1..=b.max_denominator as i64 {
                            if a.gcd(&d) == 1 {
                                mus.push((j, Rat::new(a.into(), d.into())));
                            }
                        }
                    }
                }
            }
        }
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << hs.len().min(12)) {
            let mut core: P = Poly::one();
            for (i, hp) in hs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    core = core.mul(hp);
                }
            }
            for (j, mu) in &mus {
                let g = w(core.scale(mu).shift(j));
                if self.contains(&g) && !self.is_unit(&g) && self.divide(f, &g).is_some() {
                    out.insert(g);
                }
            }
        }
        out.into_iter().collect()
    }

    fn furstenberg(&self, f: &GenPoly, _b: &SearchBounds) -> Verdict {
        let p = un(f);
        let pi = match c0(p) {
            None => cst(&2.into()),
            Some(c) if c.abs() >= BigInt::from(2) => cst(&prime_factors(&c)[0]),
            Some(_) => hats(p)[0].clone(),
        };
        Verdict::holds(Basis::Witness, divisor_cert(self, f, &w(pi)).expect("divides"))
    }

    fn almost_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        match c0(un(f)) {
            None => zero_constant_refuter(f, "multiplying by irreducibles keeps it 0"),
            Some(_) => multiplied(f, Vec::new(), true, self.atomic(f, b)),
        }
    }

    fn quasi_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        match c0(un(f)) {
            None => zero_constant_refuter(f, "every multiple of f has constant term 0"),
            Some(_) => multiplied(f, Vec::new(), false, self.atomic(f, b)),
        }
    }

    fn antimatter(&self, _b: &SearchBounds) -> Verdict {
        let two = w(cst(&2.into()));
        Verdict::refuted(Basis::Witness, Certificate::Factorization { target: two.clone(), unit: self.one(), factors: vec![two] })
    }

    fn samples(&self, seed: u64, b: &SearchBounds) -> Vec<GenPoly> {
        let mut out: Vec<GenPoly> =
            ["x^(1)", "6 + x^(1)", "1 + x^(1)", "2", "6", "1/2*x^(1) + x^(2)", "-1 + 3/2*x^(2)", "4 + -4*x^(2)"]
                .iter()
                .map(|s| w(Poly::parse(s).unwrap()))
                .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = b.max_coeff_height as i64;
        let den = b.max_denominator as i64;
        while out.len() < 20 {
            let mut p = Poly::zero();
            p.add_term(0, Rat::from_integer(rng.gen_range(-h..=h).into()));
            for e in 1..=4u32 {
                if rng.gen_bool(0.5) {
                    p.add_term(e, Rat::new(rng.gen_range(-h..=h).into(), rng.gen_range(1..=den).into()));
                }
            }
            let g = w(p);
            if !g.is_zero() && !self.is_unit(&g) {
                out.push(g);
            }
        }
        out
    }
}

/// Every irreducible in a bounded family lies outside the prime ideal `{f : f(0) = 0}`.
pub fn prime_ideal_instance_check(d: &Domain, bounds: &SearchBounds) -> Result<Verdict> {
    if d.id != DomainId::D23 {
        return invalid(format!("prime ideal instance check is implemented for d23, not {}", d.id));
    }
    let o = D23;
    let h = (bounds.max_coeff_height as i64).min(4);
    let den = bounds.max_denominator as i64;
    let mut fams: Vec<P> = (2..=bounds.max_coeff_height as i64).map(|n| cst(&n.into())).collect();
    let mut coeffs = vec![Rat::zero()];
    for a in -h..=h {
        for q in 1..=den {
            let r = Rat::new(a.into(), q.into());
            if !r.is_zero() && !coeffs.contains(&r) {
                coeffs.push(r);
            }
        }
    }
    for c in [-1i64, 1] {
        for a in &coeffs {
            for b2 in &coeffs {
                let p = Poly::from_terms([(0, Rat::from_integer(c.into())), (1, a.clone()), (2, b2.clone())]);
                if p.len() > 1 {
                    fams.push(p);
                }
            }
        }
    }
    let mut checked = 0u64;
    for p in fams {
        let g = w(p.clone());
        if o.irreducible(&g, bounds).is_holds() {
            checked += 1;
            if p.constant_term().is_zero() {
                return Ok(Verdict::refuted(
                    Basis::Witness,
                    Certificate::Factorization { target: g.clone(), unit: o.one(), factors: vec![g] },
                ));
            }
        }
    }
    Ok(Verdict {
        outcome: Outcome::Holds,
        basis: Basis::AtBound,
        certificate: Certificate::Structural {
            rule: Rule::AllIrreduciblesOutsideIdeal,
            subject: "{f : f(0) = 0}".into(),
            detail: format!("{checked} irreducibles enumerated, none with constant term 0"),
        },
        bounds: Some(bounds.clone()),
    })
}
