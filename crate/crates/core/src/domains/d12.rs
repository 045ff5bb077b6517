//! Power series in `x^(1/n)`, integer coefficients up to exponent 1, rational beyond; truncated at `T`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ops::{divisor_cert, multiplied, Ops};
use super::GenPoly;
use crate::exact::{fmt_rat, rat_int, Rat};
use crate::poly::{is_prime_int, positive_divisors, prime_factors, Poly};
use crate::verdict::{Basis, Certificate, Outcome, Rule, SearchBounds, Verdict};

pub(crate) struct D12 {
    t: Rat,
}

type P = Poly<Rat, Rat>;

fn un(g: &GenPoly) -> &P {
    match g {
        GenPoly::Series(p) => p,
        _ => panic!("element of another domain"),
    }
}

fn w(p: P) -> GenPoly {
    GenPoly::Series(p)
}

fn level(f: &P) -> u64 {
    f.exponents().fold(BigInt::one(), |l, e| l.lcm(e.denom())).to_u64().expect("level fits in u64")
}

fn cst(n: &BigInt) -> P {
    Poly::constant(Rat::from_integer(n.clone()))
}

fn c0(f: &P) -> BigInt {
    f.constant_term().to_integer()
}

fn min_exp(f: &P) -> Rat {
    f.min_term().unwrap().0.clone()
}

impl D12 {
    pub(crate) fn new(t: Rat) -> Self {
        D12 { t }
    }

    fn truncate(&self, f: P) -> P {
        Poly::from_terms(f.iter().filter(|(e, _)| **e < self.t).map(|(e, c)| (e.clone(), c.clone())))
    }

    /// `f / g` as a series with rational coefficients, exact below the truncation order.
    fn series_quotient(&self, f: &P, g: &P) -> Option<P> {
        let q = min_exp(g);
        if min_exp(f) < q {
            return None;
        }
        let l = level(f).lcm(&level(g));
        let step = Rat::new(BigInt::one(), l.into());
        let f1 = f.unshift(&q)?;
        let g1 = g.unshift(&q)?;
        let g0 = g1.constant_term();
        let n = ((&self.t - &q) * Rat::from_integer(l.into())).ceil().to_integer().to_i64().unwrap_or(0).max(0);
        let mut h: Vec<Rat> = Vec::new();
        for i in 0..n {
            let e = &step * Rat::from_integer(i.into());
            let mut r = f1.coeff(&e);
            for (j, hj) in h.iter().enumerate() {
                if !hj.is_zero() {
                    let ge = &e - &step * Rat::from_integer(j.into());
                    r -= hj * g1.coeff(&ge);
                }
            }
            h.push(r / &g0);
        }
        Some(Poly::from_terms(
            h.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (&step * Rat::from_integer(i.into()), c)),
        ))
    }

    fn in_ring(&self, f: &P) -> bool {
        f.iter().all(|(e, c)| !e.is_negative() && *e < self.t && (*e > rat_int(1) || c.is_integer()))
    }

    /// Least exponent whose coefficient is not an integer.
    fn first_fractional(f: &P) -> Option<Rat> {
        f.iter().find(|(_, c)| !c.is_integer()).map(|(e, _)| e.clone())
    }

    /// `f = g * h` with `c(g) = a`, `c(h) = c(f) / a`, solving order by order at refined levels.
    fn split_with(&self, f: &P, a: &BigInt, b: &SearchBounds) -> Option<(P, P)> {
        let c = c0(f);
        let bb = &c / a;
        let n = level(f);
        let top = n.max(b.max_denominator as u64);
        for l in (1..).map(|j| j * n).take_while(|&l| l <= top) {
            let fs: Vec<BigInt> = (0..=l).map(|i| f.coeff(&Rat::new(i.into(), l.into())).to_integer()).collect();
            let mut g = vec![a.clone()];
            let mut h = vec![bb.clone()];
            if let Some(gv) = Self::dfs(&fs, a, &bb, &mut g, &mut h) {
                let gp: P = Poly::from_terms(
                    gv.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (Rat::new((i as u64).into(), l.into()), Rat::from_integer(c.clone()))),
                );
                if let Some(hp) = self.series_quotient(f, &gp) {
                    if self.in_ring(&hp) {
                        return Some((gp, hp));
                    }
                }
            }
        }
        None
    }

    fn dfs(fs: &[BigInt], a: &BigInt, bb: &BigInt, g: &mut Vec<BigInt>, h: &mut Vec<BigInt>) -> Option<Vec<BigInt>> {
        let i = g.len();
        if i == fs.len() {
            return Some(g.clone());
        }
        let mut r = fs[i].clone();
        for j in 1..i {
            r -= &g[j] * &h[i - j];
        }
        let am = a.abs();
        let mut gi = BigInt::zero();
        while gi < am {
            let rest = &r - bb * &gi;
            if rest.is_multiple_of(a) {
                g.push(gi.clone());
                h.push(rest / a);
                if let Some(v) = Self::dfs(fs, a, bb, g, h) {
                    return Some(v);
                }
                g.pop();
                h.pop();
            }
            gi += 1;
        }
        None
    }

    fn split_cert(f: &GenPoly, l: P, r: P) -> Verdict {
        Verdict::refuted(Basis::Witness, Certificate::Split { target: f.clone(), left: w(l), right: w(r), unit: None })
    }

    /// Splitting of an element with constant term 0 as `x^e * (f / x^e)`.
    fn monomial_split(&self, f: &P) -> (P, P) {
        let v = min_exp(f);
        let e = match Self::first_fractional(f) {
            Some(fr) => std::cmp::min(v, fr - rat_int(1)),
            None => v,
        } / rat_int(2);
        (Poly::x_pow(e.clone()), f.unshift(&e).unwrap())
    }

    /// Full factorization for a nonzero constant term: one irreducible per prime of `c(f)`.
    fn factor(&self, f: &P, b: &SearchBounds) -> Option<Vec<P>> {
        let c = c0(f);
        if is_prime_int(&c) {
            return Some(vec![f.clone()]);
        }
        let p = prime_factors(&c)[0].clone();
        let (g, h) = self.split_with(f, &p, b)?;
        let mut out = vec![g];
        out.extend(self.factor(&h, b)?);
        Some(out)
    }

    fn p_of(f: &P) -> BigInt {
        let c = c0(f);
        if c.is_zero() {
            BigInt::from(2)
        } else {
            prime_factors(&c)[0].clone()
        }
    }
}

impl Ops for D12 {
    fn contains(&self, f: &GenPoly) -> bool {
        matches!(f, GenPoly::Series(p) if self.in_ring(p))
    }

    fn is_unit(&self, f: &GenPoly) -> bool {
        un(f).constant_term().abs().is_one()
    }

    fn one(&self) -> GenPoly {
        w(Poly::one())
    }

    fn mul(&self, a: &GenPoly, b: &GenPoly) -> GenPoly {
        w(self.truncate(un(a).mul(un(b))))
    }

    fn divide(&self, f: &GenPoly, g: &GenPoly) -> Option<(GenPoly, GenPoly)> {
        let h = self.series_quotient(un(f), un(g))?;
        self.in_ring(&h).then(|| (w(h), self.one()))
    }

    fn irreducible(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = un(f);
        let c = c0(p);
        if c.is_zero() {
            let (l, r) = self.monomial_split(p);
            return Self::split_cert(f, l, r);
        }
        if is_prime_int(&c) {
            return Verdict::structural(Outcome::Holds, Rule::PrimeConstant, f, format!("constant term {c} is a rational prime"));
        }
        let ds = positive_divisors(&c);
        for a in ds.iter().filter(|a| **a > BigInt::one() && **a < c.abs()) {
            if let Some((l, r)) = self.split_with(p, a, b) {
                return Self::split_cert(f, l, r);
            }
        }
        Verdict::unknown(b, Certificate::SearchExhausted { explored: ds.len() as u64 })
    }

    fn atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = un(f);
        if c0(p).is_zero() {
            return Verdict::structural(
                Outcome::Refuted,
                Rule::ZeroConstantTermPersists,
                f,
                "irreducibles have nonzero constant term (x^q splits otherwise), so no product of them has constant term 0",
            );
        }
        match self.factor(p, b) {
            Some(fs) => Verdict::holds(
                Basis::Witness,
                Certificate::Factorization { target: f.clone(), unit: self.one(), factors: fs.into_iter().map(w).collect() },
            ),
            None => Verdict::unknown(b, Certificate::None),
        }
    }

    fn divisors(&self, f: &GenPoly, b: &SearchBounds) -> Vec<GenPoly> {
        let v = min_exp(un(f));
        let mut monos = vec![Rat::zero()];
        for den in 1..=b.max_denominator as i64 {
            for num in 1..=(&v * rat_int(den)).floor().to_integer().to_i64().unwrap_or(0) {
                monos.push(Rat::new(num.into(), den.into()));
            }
        }
        let mut out = BTreeSet::new();
        for k in 1..=b.max_coeff_height as i64 {
            for m in &monos {
                let g = w(Poly::monomial(m.clone(), rat_int(k)));
                if !self.is_unit(&g) && self.divide(f, &g).is_some() {
                    out.insert(g);
                }
            }
        }
        out.into_iter().collect()
    }

    fn furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = un(f);
        let c = c0(p);
        let pi = if c.is_zero() {
            let (v, fv) = p.min_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            if v <= rat_int(1) && fv.abs().is_one() {
                return Verdict::structural(
                    Outcome::Refuted,
                    Rule::MonomialHasNoIrreducibleDivisor,
                    f,
                    format!(
                        "an irreducible divisor has constant term c != 0 and c divides the coefficient {} at x^({})",
                        fmt_rat(&fv),
                        fmt_rat(&v)
                    ),
                );
            }
            let q = if v > rat_int(1) { BigInt::from(2) } else { prime_factors(&fv.to_integer())[0].clone() };
            let g = cst(&q);
            if self.divide(f, &w(g.clone())).is_none() {
                return Verdict::unknown(b, Certificate::None);
            }
            g
        } else if is_prime_int(&c) {
            p.clone()
        } else {
            match self.split_with(p, &prime_factors(&c)[0], b) {
                Some((g, _)) => g,
                None => return Verdict::unknown(b, Certificate::None),
            }
        };
        Verdict::holds(Basis::Witness, divisor_cert(self, f, &w(pi)).expect("divides"))
    }

    fn almost_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        if c0(un(f)).is_zero() {
            return Verdict::structural(
                Outcome::Refuted,
                Rule::ZeroConstantTermPersists,
                f,
                "irreducibles have nonzero constant term, so f times irreducibles keeps constant term 0",
            );
        }
        multiplied(f, Vec::new(), true, self.atomic(f, b))
    }

    fn quasi_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        if c0(un(f)).is_zero() {
            return Verdict::structural(
                Outcome::Refuted,
                Rule::ZeroConstantTermPersists,
                f,
                "every multiple of f has constant term 0 and irreducibles do not",
            );
        }
        multiplied(f, Vec::new(), false, self.atomic(f, b))
    }

    fn semi_furstenberg_at(&self, beta: &GenPoly, alpha: &GenPoly, b: &SearchBounds) -> Verdict {
        let prod = self.mul(alpha, beta);
        let pi = w(cst(&Self::p_of(un(alpha))));
        match (divisor_cert(self, &prod, &pi), self.divide(beta, &pi)) {
            (Some(div), None) => Verdict::holds(
                Basis::Witness,
                Certificate::Furstenberg {
                    alpha: alpha.clone(),
                    others: vec![beta.clone()],
                    irreducible_others: false,
                    pi,
                    division: Box::new(div),
                },
            ),
            _ => Verdict::unknown(b, Certificate::None),
        }
    }

    fn almost_furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = Self::p_of(un(f));
        let pi = w(cst(&p));
        let gamma = w(cst(&p).add(&Poly::x_pow(rat_int(1))));
        let prod = self.mul(f, &gamma);
        match (divisor_cert(self, &prod, &pi), self.divide(&gamma, &pi)) {
            (Some(div), None) => Verdict::holds(
                Basis::Witness,
                Certificate::Furstenberg {
                    alpha: f.clone(),
                    others: vec![gamma],
                    irreducible_others: true,
                    pi,
                    division: Box::new(div),
                },
            ),
            _ => Verdict::unknown(b, Certificate::None),
        }
    }

    fn antimatter(&self, _b: &SearchBounds) -> Verdict {
        let two = w(cst(&2.into()));
        Verdict::refuted(Basis::Witness, Certificate::Factorization { target: two.clone(), unit: self.one(), factors: vec![two] })
    }

    fn semi_furstenberg_candidate(&self) -> Option<GenPoly> {
        Some(w(Poly::x_pow(rat_int(1))))
    }

    fn samples(&self, seed: u64, b: &SearchBounds) -> Vec<GenPoly> {
        let mut out: Vec<GenPoly> = [
            "x^(1)",
            "6",
            "6 + x^(1/2)",
            "2 + x^(1/3)",
            "4 + x^(1/2)",
            "x^(1/2) + 1/2*x^(3/2)",
            "3*x^(1/2) + x^(3/2)",
        ]
        .iter()
        .map(|s| w(Poly::parse(s).unwrap()))
        .filter(|g| self.contains(g))
        .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while out.len() < 20 {
            out.push(self.random_elem(&mut rng, b));
        }
        out
    }
}

impl D12 {
    /// Random non-unit with level at most the denominator bound.
    pub(crate) fn random_elem(&self, rng: &mut ChaCha8Rng, b: &SearchBounds) -> GenPoly {
        let h = (b.max_coeff_height as i64).min(12);
        loop {
            let n = rng.gen_range(1..=b.max_denominator.max(1) as i64);
            let mut p: P = Poly::zero();
            p.add_term(Rat::zero(), rat_int(rng.gen_range(-h..=h)));
            let top = (&self.t * rat_int(n)).ceil().to_integer().to_i64().unwrap_or(1);
            for i in 1..top {
                if rng.gen_bool(0.3) {
                    let e = Rat::new(i.into(), n.into());
                    let c = if e <= rat_int(1) {
                        rat_int(rng.gen_range(-h..=h))
                    } else {
                        Rat::new(rng.gen_range(-h..=h).into(), rng.gen_range(1..=h).into())
                    };
                    p.add_term(e, c);
                }
            }
            let g = w(p);
            if !g.is_zero() && self.contains(&g) && !self.is_unit(&g) {
                return g;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_constants_split() {
        let d = D12::new(rat_int(4));
        let b = SearchBounds { max_denominator: 8, ..SearchBounds::default() };
        for s in ["4 + x^(1/2)", "4 + x^(1)", "6 + x^(1/2)"] {
            let f = w(Poly::parse(s).unwrap());
            let v = d.irreducible(&f, &b);
            let Certificate::Split { left, right, .. } = &v.certificate else { panic!("{s}: {v:?}") };
            assert_eq!(d.mul(left, right), f, "{s}");
        }
        let x = w(Poly::parse("x^(1)").unwrap());
        assert!(d.furstenberg(&x, &b).is_refuted());
    }
}
