//! `F2[X, y, Z]` localized at its monomial ideal: exponents `x^a y^k` with `a >= 0` when `k <= 1`
//! and any rational `a` when `k >= 2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ops::{from_furstenberg, multiplied, Ops};
use super::{BiExp, GenPoly};
use crate::error::{invalid, Result};
use crate::exact::{fmt_rat, rat, rat_int, Rat};
use crate::poly::{Coeff, Poly, F2};
use crate::verdict::{Basis, Certificate, Outcome, Rule, SearchBounds, Verdict};

pub(crate) struct AppB;

type P = Poly<BiExp, F2>;

fn un(g: &GenPoly) -> &P {
    match g {
        GenPoly::Bi(p) => p,
        _ => panic!("element of another domain"),
    }
}

fn w(p: P) -> GenPoly {
    GenPoly::Bi(p)
}

fn m(a: Rat, k: u32) -> P {
    Poly::x_pow(BiExp::new(a, k))
}

fn y() -> P {
    m(Rat::from_integer(0.into()), 1)
}

fn allowed(p: &P) -> bool {
    p.exponents().all(BiExp::allowed)
}

fn has_y(p: &P) -> bool {
    !p.coeff(&BiExp::new(rat_int(0), 1)).is_nil()
}

fn has_constant(p: &P) -> bool {
    !p.constant_term().is_nil()
}

/// Exact quotient in the group ring, by cancelling maximal terms.
fn exact_quotient(f: &P, g: &P) -> Option<P> {
    let (fmin, _) = f.min_term()?;
    let (gmin, _) = g.min_term()?;
    let bound = BiExp { k: fmin.k.checked_sub(gmin.k)?, a: &fmin.a - &gmin.a };
    let (gmax, _) = g.max_term()?;
    let gmax = gmax.clone();
    let mut rem = f.clone();
    let mut q: P = Poly::zero();
    for _ in 0..10_000 {
        let Some((rmax, _)) = rem.max_term() else { return Some(q) };
        let t = BiExp { k: rmax.k.checked_sub(gmax.k)?, a: &rmax.a - &gmax.a };
        if t < bound {
            return None;
        }
        rem = rem.sub(&g.shift(&t));
        q.add_term(t, F2::unity());
    }
    None
}

/// `c` for the divisor `y + x^c`: least of `a/2` over `k = 0` terms and `a` over `k = 1` terms.
fn pi_exponent(f: &P) -> Rat {
    f.exponents()
        .filter(|e| e.k <= 1)
        .map(|e| if e.k == 0 { &e.a / rat_int(2) } else { e.a.clone() })
        .min()
        .unwrap_or_else(|| rat_int(1))
}

/// `pi = y + x^c`, `h = x^(-2c) pi f` and the unit `u = 1 + x^(-2c) y^2` with `pi h = u f`.
fn pi_trick(f: &P, c: &Rat) -> (P, P, P) {
    let pi = y().add(&m(c.clone(), 0));
    let neg2c = -(c * rat_int(2));
    let h = pi.mul(f).shift(&BiExp::new(neg2c.clone(), 0));
    let u = Poly::one().add(&m(neg2c, 2));
    (pi, h, u)
}

/// Least `j` with `f / y^j` in the ring and `y^(j+1)` a term of `f`.
pub fn corollary_shape(f: &GenPoly) -> Option<u32> {
    let p = un(f);
    p.exponents()
        .filter(|e| num_traits::Zero::is_zero(&e.a) && e.k >= 1)
        .map(|e| e.k - 1)
        .find(|&j| p.unshift(&BiExp::new(rat_int(0), j)).is_some_and(|g| allowed(&g)))
}

/// The first term in the order that compares the power of `y` first, then the power of `x`.
pub fn appb_minimal_term(f: &GenPoly) -> Result<(Rat, u32)> {
    match f {
        GenPoly::Bi(p) if !p.is_zero() => {
            let (e, _) = p.min_term().unwrap();
            Ok((e.a.clone(), e.k))
        }
        _ => invalid("expected a nonzero element of appb"),
    }
}

/// The case-prescribed multiplier and the case number.
pub fn appb_witness(f: &GenPoly) -> Result<(GenPoly, u8)> {
    let (a, k) = appb_minimal_term(f)?;
    let p = un(f);
    if has_constant(p) {
        return invalid(format!("{f} is a unit"));
    }
    let zero = rat_int(0);
    if a == zero {
        return Ok((w(Poly::one()), 1));
    }
    if a < zero {
        return Ok((w(y().add(&m(-a, 0))), 2));
    }
    let beta = p.exponents().filter(|e| e.k == k + 1 && e.a < zero).map(|e| -e.a.clone()).max();
    match beta {
        None => Ok((w(y().add(&m(-a, 2))), 3)),
        Some(b) => Ok((w(y().add(&m(b, 0))), 4)),
    }
}

/// Atomic through `f = y^j g` with `g` containing the term `y`.
pub fn appb_atomic_by_corollary(f: &GenPoly) -> Verdict {
    let Some(j) = corollary_shape(f) else {
        return Verdict::unknown(
            &SearchBounds::default(),
            Certificate::Structural {
                rule: Rule::YTermWithoutConstant,
                subject: f.to_string(),
                detail: "no j with y^(j+1) a term and f a multiple of y^j".into(),
            },
        );
    };
    let g = un(f).unshift(&BiExp::new(rat_int(0), j)).unwrap();
    let mut factors = vec![w(y()); j as usize];
    factors.push(w(g));
    Verdict::holds(
        Basis::Structural(Rule::YTermWithoutConstant),
        Certificate::Factorization { target: f.clone(), unit: w(Poly::one()), factors },
    )
}

impl AppB {
    /// `f * unit = product`, peeling `y` factors and using the `y + x^c` divisor.
    fn factor(&self, f: &P, depth: u32) -> Option<(P, Vec<P>)> {
        if has_y(f) {
            return Some((Poly::one(), vec![f.clone()]));
        }
        if depth == 0 {
            return None;
        }
        if let Some(g) = f.unshift(&BiExp::new(rat_int(0), 1)).filter(allowed) {
            let (u, mut fs) = self.factor(&g, depth - 1)?;
            fs.insert(0, y());
            return Some((u, fs));
        }
        let c = pi_exponent(f);
        if c > rat_int(0) {
            let (pi, h, u) = pi_trick(f, &c);
            if allowed(&h) && has_y(&h) {
                return Some((u, vec![pi, h]));
            }
        }
        None
    }

    fn negative_min(f: &GenPoly) -> Option<Verdict> {
        let (a, k) = appb_minimal_term(f).ok()?;
        (a < rat_int(0)).then(|| {
            Verdict::structural(
                Outcome::Refuted,
                Rule::NegativeMinimalExponent,
                f,
                format!(
                    "first term x^({})*y^({k}); first terms multiply, and irreducibles and units have first term with x-exponent >= 0",
                    fmt_rat(&a)
                ),
            )
        })
    }
}

impl Ops for AppB {
    fn contains(&self, f: &GenPoly) -> bool {
        matches!(f, GenPoly::Bi(p) if allowed(p))
    }

    fn is_unit(&self, f: &GenPoly) -> bool {
        has_constant(un(f))
    }

    fn one(&self) -> GenPoly {
        w(Poly::one())
    }

    fn mul(&self, a: &GenPoly, b: &GenPoly) -> GenPoly {
        w(un(a).mul(un(b)))
    }

    fn exact_divisibility(&self) -> bool {
        false
    }

    fn divide(&self, f: &GenPoly, g: &GenPoly) -> Option<(GenPoly, GenPoly)> {
        let (pf, pg) = (un(f), un(g));
        if has_constant(pg) {
            return Some((f.clone(), g.clone()));
        }
        if let Some(h) = exact_quotient(pf, pg).filter(allowed) {
            return Some((w(h), self.one()));
        }
        // y + x^c divides f up to the unit 1 + x^(-2c) y^2
        if pg.len() == 2 && has_y(pg) {
            let (e, _) = pg.min_term().unwrap();
            if e.k == 0 {
                let (pi, h, u) = pi_trick(pf, &e.a);
                if pi == *pg && allowed(&h) {
                    return Some((w(h), w(u)));
                }
            }
        }
        None
    }

    fn irreducible(&self, f: &GenPoly, _b: &SearchBounds) -> Verdict {
        let p = un(f);
        if has_y(p) {
            return Verdict::structural(Outcome::Holds, Rule::YTermWithoutConstant, f, "y is a term and the constant term is 0");
        }
        // x^e * (f / x^e) with e half the least x-exponent among terms with k <= 1
        let e = p.exponents().filter(|e| e.k <= 1).map(|e| e.a.clone()).min().unwrap_or_else(|| rat_int(2)) / rat_int(2);
        let left = m(e.clone(), 0);
        let right = p.shift(&BiExp::new(-e, 0));
        Verdict::refuted(Basis::Witness, Certificate::Split { target: f.clone(), left: w(left), right: w(right), unit: None })
    }

    fn atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        if let Some(v) = Self::negative_min(f) {
            return v;
        }
        match self.factor(un(f), 8) {
            Some((u, fs)) => Verdict::holds(
                Basis::Witness,
                Certificate::Factorization { target: f.clone(), unit: w(u), factors: fs.into_iter().map(w).collect() },
            ),
            None => Verdict::unknown(b, Certificate::None),
        }
    }

    fn divisors(&self, f: &GenPoly, b: &SearchBounds) -> Vec<GenPoly> {
        let p = un(f);
        let mut cands: Vec<P> = vec![y(), p.clone()];
        let c = pi_exponent(p);
        if c > rat_int(0) {
            cands.push(pi_trick(p, &c).0);
        }
        for den in 1..=b.max_denominator as i64 {
            for num in 1..=2 * den {
                cands.push(m(rat(num, den), 0));
            }
        }
        let mut out: Vec<GenPoly> = cands
            .into_iter()
            .map(w)
            .filter(|g| !self.is_unit(g) && self.divide(f, g).is_some())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn furstenberg(&self, f: &GenPoly, _b: &SearchBounds) -> Verdict {
        let p = un(f);
        if has_y(p) {
            return Verdict::holds(
                Basis::Structural(Rule::YTermWithoutConstant),
                Certificate::Divisor { target: f.clone(), divisor: f.clone(), cofactor: self.one(), unit: self.one() },
            );
        }
        let (pi, h, u) = pi_trick(p, &pi_exponent(p));
        Verdict::holds(
            Basis::Witness,
            Certificate::Divisor { target: f.clone(), divisor: w(pi), cofactor: w(h), unit: w(u) },
        )
    }

    fn almost_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let v = self.atomic(f, b);
        if v.is_holds() {
            return multiplied(f, Vec::new(), true, v);
        }
        let mut mults: Vec<GenPoly> = Vec::new();
        if let Ok((mw, _)) = appb_witness(f) {
            if !self.is_unit(&mw) {
                mults.push(mw);
            }
        }
        let (a, _) = appb_minimal_term(f).unwrap();
        for c in [a.clone(), -a, rat(1, 2), rat_int(1), rat_int(2)] {
            if c > rat_int(0) {
                mults.push(w(y().add(&m(c.clone(), 0))));
            }
            mults.push(w(y().add(&m(-c, 2))));
        }
        for g in mults {
            let prod = self.mul(f, &g);
            let v = self.atomic(&prod, b);
            if v.is_holds() {
                return multiplied(f, vec![g], true, v);
            }
        }
        Verdict::unknown(b, Certificate::None)
    }

    fn almost_furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        from_furstenberg(f, self.furstenberg(f, b), b)
    }

    fn antimatter(&self, _b: &SearchBounds) -> Verdict {
        let pi = w(y());
        Verdict::refuted(Basis::Witness, Certificate::Factorization { target: pi.clone(), unit: self.one(), factors: vec![pi] })
    }

    fn samples(&self, seed: u64, b: &SearchBounds) -> Vec<GenPoly> {
        let mut out: Vec<GenPoly> = [
            "y^(1)",
            "x^(1/2)",
            "x^(-1)*y^(2)",
            "x^(1)*y^(1) + y^(2)",
            "y^(3)",
            "x^(1)*y^(1) + x^(-1)*y^(2)",
            "x^(1/2) + y^(1)",
        ]
        .iter()
        .map(|s| w(Poly::parse(s).unwrap()))
        .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while out.len() < 20 {
            out.push(random_appb(&mut rng, b.max_denominator.clamp(1, 4) as i64, 3));
        }
        out
    }
}

/// Random non-unit with at most `terms` terms, `y`-degree at most 3.
pub(crate) fn random_appb(rng: &mut ChaCha8Rng, max_den: i64, terms: usize) -> GenPoly {
    loop {
        let mut p: P = Poly::zero();
        for _ in 0..rng.gen_range(1..=terms) {
            let k = rng.gen_range(0..=3u32);
            let den = rng.gen_range(1..=max_den);
            let lo = if k <= 1 { 0 } else { -2 * den };
            let a = rat(rng.gen_range(lo..=2 * den), den);
            let e = BiExp::new(a, k);
            if !p.terms().contains_key(&e) {
                p.add_term(e, F2::unity());
            }
        }
        if !p.is_zero() && allowed(&p) && !has_constant(&p) {
            return w(p);
        }
    }
}
