//! `Z + Zx + x^2 K[x]` for `K = Q` (D8) and `K = Q(sqrt 2)` (D9).
//!
//! A nonzero `f` is `c x^k prod P_i` with each `P_i` irreducible over `K` and normalized to
//! constant term 1. For `k <= 1` every factorization in the ring regroups these pieces, so
//! irreducibility is a finite search over groupings.

use std::collections::BTreeSet;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ops::{divisor_cert, Ops};
use super::GenPoly;
use crate::exact::{QLin, Rat};
use crate::poly::{factor_q, factor_qsqrt2, positive_divisors, prime_factors, Field, Poly, UPoly};
use crate::verdict::{Basis, Certificate, Outcome, Rule, SearchBounds, Verdict};

pub(crate) trait HeadField: Field + Ord + fmt::Debug + 'static {
    const IRRATIONAL: bool;
    fn wrap(p: Poly<u32, Self>) -> GenPoly;
    fn unwrap(g: &GenPoly) -> Option<&Poly<u32, Self>>;
    fn as_int(&self) -> Option<BigInt>;
    fn from_rat(q: Rat) -> Self;
    fn is_rational(&self) -> bool;
    /// Denominator when rational.
    fn rat_denom(&self) -> Option<BigInt>;
    fn factor(p: &UPoly<Self>) -> (Self, Vec<(UPoly<Self>, u32)>);
    fn random(rng: &mut ChaCha8Rng, height: i64, den: i64) -> Self;
}

impl HeadField for Rat {
    const IRRATIONAL: bool = false;
    fn wrap(p: Poly<u32, Self>) -> GenPoly {
        GenPoly::Int(p)
    }
    fn unwrap(g: &GenPoly) -> Option<&Poly<u32, Self>> {
        match g {
            GenPoly::Int(p) => Some(p),
            _ => None,
        }
    }
    fn as_int(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
    fn from_rat(q: Rat) -> Self {
        q
    }
    fn is_rational(&self) -> bool {
        true
    }
    fn rat_denom(&self) -> Option<BigInt> {
        Some(self.denom().clone())
    }
    fn factor(p: &UPoly<Self>) -> (Self, Vec<(UPoly<Self>, u32)>) {
        factor_q(p)
    }
    fn random(rng: &mut ChaCha8Rng, height: i64, den: i64) -> Self {
        Rat::new(rng.gen_range(-height..=height).into(), rng.gen_range(1..=den).into())
    }
}

impl HeadField for QLin {
    const IRRATIONAL: bool = true;
    fn wrap(p: Poly<u32, Self>) -> GenPoly {
        GenPoly::Quad(p)
    }
    fn unwrap(g: &GenPoly) -> Option<&Poly<u32, Self>> {
        match g {
            GenPoly::Quad(p) => Some(p),
            _ => None,
        }
    }
    fn as_int(&self) -> Option<BigInt> {
        (self.is_rational() && self.rat.is_integer()).then(|| self.rat.to_integer())
    }
    fn from_rat(q: Rat) -> Self {
        QLin::from_rat(q)
    }
    fn is_rational(&self) -> bool {
        QLin::is_rational(self)
    }
    fn rat_denom(&self) -> Option<BigInt> {
        QLin::is_rational(self).then(|| self.rat.denom().clone())
    }
    fn factor(p: &UPoly<Self>) -> (Self, Vec<(UPoly<Self>, u32)>) {
        factor_qsqrt2(p)
    }
    fn random(rng: &mut ChaCha8Rng, height: i64, den: i64) -> Self {
        let a = Rat::new(rng.gen_range(-height..=height).into(), rng.gen_range(1..=den).into());
        let b = Rat::new(rng.gen_range(-height..=height).into(), rng.gen_range(1..=den).into());
        QLin::new(a, b)
    }
}

pub(crate) struct HeadPoly<K>(PhantomData<K>);

impl<K: HeadField> HeadPoly<K> {
    pub fn new() -> Self {
        HeadPoly(PhantomData)
    }
}

fn kint<K: HeadField>(n: &BigInt) -> K {
    K::from_rat(Rat::from_integer(n.clone()))
}

/// `c x^k prod hats[i]^cnt[i]`.
struct Shape<K: HeadField> {
    k: u32,
    c: K,
    hats: Vec<Poly<u32, K>>,
    /// Linear coefficient of each normalized factor.
    lin: Vec<K>,
    cnt: Vec<u32>,
}

fn shape<K: HeadField>(f: &Poly<u32, K>) -> Shape<K> {
    let (&k, c) = f.min_term().expect("nonzero");
    let g = UPoly::from_sparse(&f.unshift(&k).expect("min exponent"));
    let (_, fs) = K::factor(&g);
    let mut hats = Vec::new();
    let mut lin = Vec::new();
    let mut cnt = Vec::new();
    for (m, e) in fs {
        let hat = m.scale(&m.coeff(0).inv());
        lin.push(hat.coeff(1));
        hats.push(hat.to_sparse());
        cnt.push(e);
    }
    Shape { k, c: c.clone(), hats, lin, cnt }
}

/// `lam * x^[xtype] * prod hats^cnt`.
#[derive(Clone, Debug)]
struct Group {
    lam: BigInt,
    cnt: Vec<u32>,
    xtype: bool,
}

impl<K: HeadField> Shape<K> {
    fn group(&self) -> Option<Group> {
        Some(Group { lam: self.c.as_int()?, cnt: self.cnt.clone(), xtype: self.k >= 1 })
    }

    fn valid(&self, g: &Group) -> bool {
        if g.xtype {
            return true;
        }
        let mut s = K::nil();
        for (l, &c) in self.lin.iter().zip(&g.cnt) {
            s = s.add(&l.mul(&kint(&BigInt::from(c))));
        }
        s.mul(&kint(&g.lam)).as_int().is_some()
    }

    fn nonunit(g: &Group) -> bool {
        g.xtype || g.cnt.iter().any(|&c| c > 0) || g.lam.abs() > BigInt::one()
    }

    fn poly(&self, g: &Group) -> Poly<u32, K> {
        let mut p = Poly::constant(kint(&g.lam));
        if g.xtype {
            p = p.shift(&1);
        }
        for (h, &c) in self.hats.iter().zip(&g.cnt) {
            p = p.mul(&h.pow(c));
        }
        p
    }

    /// First split into two valid non-unit groups, with the number of candidates examined.
    fn split(&self, g: &Group) -> (Option<(Group, Group)>, u64) {
        let mut explored = 0;
        let divs = positive_divisors(&g.lam);
        let mut c1 = vec![0u32; g.cnt.len()];
        loop {
            for d in &divs {
                explored += 1;
                let left = Group { lam: d.clone(), cnt: c1.clone(), xtype: g.xtype };
                let right = Group {
                    lam: &g.lam / d,
                    cnt: g.cnt.iter().zip(&c1).map(|(a, b)| a - b).collect(),
                    xtype: false,
                };
                if Self::nonunit(&left) && Self::nonunit(&right) && self.valid(&left) && self.valid(&right) {
                    return (Some((left, right)), explored);
                }
            }
            // next sub-multiset
            let mut i = 0;
            loop {
                if i == c1.len() {
                    return (None, explored);
                }
                if c1[i] < g.cnt[i] {
                    c1[i] += 1;
                    break;
                }
                c1[i] = 0;
                i += 1;
            }
        }
    }

    fn full_factor(&self, g: &Group) -> Vec<Group> {
        match self.split(g).0 {
            None => vec![g.clone()],
            Some((l, r)) => {
                let mut out = self.full_factor(&l);
                out.extend(self.full_factor(&r));
                out
            }
        }
    }
}

impl<K: HeadField> HeadPoly<K> {
    fn un<'a>(&self, g: &'a GenPoly) -> &'a Poly<u32, K> {
        K::unwrap(g).expect("element of another domain")
    }

    fn constant(&self, n: i64) -> GenPoly {
        K::wrap(Poly::constant(kint(&BigInt::from(n))))
    }

    fn min_rule(&self, c: &K) -> Rule {
        if c.is_rational() {
            Rule::NonIntegralMinCoefficient
        } else {
            Rule::IrrationalMinCoefficient
        }
    }

    /// Irreducible factorization when one exists (`None` for a non-integral minimal coefficient
    /// in degree at least 2).
    fn factorization(&self, f: &Poly<u32, K>) -> Option<Vec<Poly<u32, K>>> {
        let sh = shape(f);
        let mut g = sh.group()?;
        let mut out = Vec::new();
        if sh.k >= 2 {
            out.extend(std::iter::repeat_n(Poly::x_pow(1), (sh.k - 1) as usize));
        } else if !Shape::<K>::nonunit(&g) {
            return Some(Vec::new());
        }
        g.xtype = sh.k >= 1;
        out.extend(sh.full_factor(&g).iter().map(|g| sh.poly(g)));
        Some(out)
    }

    fn factorization_cert(&self, f: &Poly<u32, K>, factors: Vec<Poly<u32, K>>) -> Certificate {
        Certificate::Factorization {
            target: K::wrap(f.clone()),
            unit: K::wrap(Poly::one()),
            factors: factors.into_iter().map(K::wrap).collect(),
        }
    }

    fn in_ring(f: &Poly<u32, K>) -> bool {
        f.iter().all(|(&e, c)| e >= 2 || c.as_int().is_some())
    }

    pub(crate) fn random_elem(&self, rng: &mut ChaCha8Rng, deg: u32, height: i64, den: i64) -> Poly<u32, K> {
        loop {
            let mut p = Poly::zero();
            for e in 0..=deg {
                if rng.gen_bool(0.55) {
                    let c = if e <= 1 {
                        kint(&BigInt::from(rng.gen_range(-height..=height)))
                    } else {
                        K::random(rng, height, den)
                    };
                    p.add_term(e, c);
                }
            }
            if !p.is_zero() && !self.is_unit(&K::wrap(p.clone())) {
                return p;
            }
        }
    }
}

impl<K: HeadField> Ops for HeadPoly<K> {
    fn contains(&self, f: &GenPoly) -> bool {
        K::unwrap(f).is_some_and(Self::in_ring)
    }

    fn is_unit(&self, f: &GenPoly) -> bool {
        let p = self.un(f);
        p.as_monomial().is_some_and(|(&e, c)| e == 0 && c.as_int().is_some_and(|n| n.abs().is_one()))
    }

    fn one(&self) -> GenPoly {
        K::wrap(Poly::one())
    }

    fn mul(&self, a: &GenPoly, b: &GenPoly) -> GenPoly {
        K::wrap(self.un(a).mul(self.un(b)))
    }

    fn divide(&self, f: &GenPoly, g: &GenPoly) -> Option<(GenPoly, GenPoly)> {
        let (f, g) = (UPoly::from_sparse(self.un(f)), UPoly::from_sparse(self.un(g)));
        let h = f.exact_div(&g)?.to_sparse();
        Self::in_ring(&h).then(|| (K::wrap(h), self.one()))
    }

    fn irreducible(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = self.un(f);
        let sh = shape(p);
        if sh.k >= 2 {
            let two = kint::<K>(&BigInt::from(2));
            return Verdict::refuted(Basis::Witness, Certificate::Split {
                target: f.clone(),
                left: K::wrap(Poly::constant(two.clone())),
                right: K::wrap(p.scale(&two.inv())),
                unit: None,
            });
        }
        let g = sh.group().expect("degree <= 1 coefficients are integers");
        match sh.split(&g) {
            (Some((l, r)), _) => Verdict::refuted(
                Basis::Witness,
                Certificate::Split { target: f.clone(), left: K::wrap(sh.poly(&l)), right: K::wrap(sh.poly(&r)), unit: None },
            ),
            (None, explored) => {
                Verdict::holds(Basis::Exhaustive, Certificate::SearchExhausted { explored }).with_bounds(b)
            }
        }
    }

    fn atomic(&self, f: &GenPoly, _b: &SearchBounds) -> Verdict {
        let p = self.un(f);
        match self.factorization(p) {
            Some(fs) => Verdict::holds(Basis::Witness, self.factorization_cert(p, fs)),
            None => {
                let (k, c) = p.min_term().unwrap();
                Verdict::structural(
                    Outcome::Refuted,
                    self.min_rule(c),
                    f,
                    format!(
                        "minimal term has degree {k} >= 2 and coefficient {} outside Z; products of \
                         irreducibles have integer minimal coefficient",
                        c.text()
                    ),
                )
            }
        }
    }

    fn divisors(&self, f: &GenPoly, b: &SearchBounds) -> Vec<GenPoly> {
        let p = self.un(f);
        let sh = shape(p);
        let mut mus: Vec<(u32, K)> = Vec::new();
        let h = b.max_coeff_height as i64;
        for j in 0..=sh.k {
            if j <= 1 {
                for a in 1..=h {
                    mus.push((j, kint(&BigInt::from(a))));
                }
            } else {
                for a in 1..=h {
                    for d in 1..=b.max_denominator as i64 {
                        if a.gcd(&d) == 1 {
                            mus.push((j, K::from_rat(Rat::new(a.into(), d.into()))));
                        }
                    }
                }
                mus.push((j, sh.c.clone()));
            }
        }
        let mut out = BTreeSet::new();
        let mut c1 = vec![0u32; sh.cnt.len()];
        loop {
            let mut core = Poly::one();
            for (hp, &c) in sh.hats.iter().zip(&c1) {
                core = core.mul(&hp.pow(c));
            }
            for (j, mu) in &mus {
                let g = K::wrap(core.scale(mu).shift(j));
                if self.contains(&g) && !self.is_unit(&g) && self.divide(f, &g).is_some() {
                    out.insert(g);
                }
            }
            let mut i = 0;
            loop {
                if i == c1.len() {
                    return out.into_iter().collect();
                }
                if c1[i] < sh.cnt[i] {
                    c1[i] += 1;
                    break;
                }
                c1[i] = 0;
                i += 1;
            }
        }
    }

    fn furstenberg(&self, f: &GenPoly, _b: &SearchBounds) -> Verdict {
        let p = self.un(f);
        let sh = shape(p);
        let pi = if sh.k >= 2 {
            self.constant(2)
        } else {
            let fs = self.factorization(p).expect("degree <= 1 is atomic");
            K::wrap(fs[0].clone())
        };
        let cert = divisor_cert(self, f, &pi).expect("divisor divides");
        Verdict::holds(Basis::Witness, cert)
    }

    fn almost_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = self.un(f);
        let (_, c) = p.min_term().unwrap();
        match (self.factorization(p), c.rat_denom()) {
            (Some(_), _) => super::ops::multiplied(f, Vec::new(), true, self.atomic(f, b)),
            (None, Some(n)) => {
                let mult: Vec<GenPoly> = prime_factors(&n).iter().map(|q| K::wrap(Poly::constant(kint(q)))).collect();
                let prod = K::wrap(p.scale(&kint(&n)));
                super::ops::multiplied(f, mult, true, self.atomic(&prod, b))
            }
            (None, None) => Verdict::structural(
                Outcome::Refuted,
                Rule::IrrationalMinCoefficient,
                f,
                format!(
                    "irreducibles have integer minimal coefficient, so every product f*g1*...*gn keeps the \
                     irrational minimal coefficient {} times an integer in degree >= 2",
                    c.text()
                ),
            ),
        }
    }

    fn quasi_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = self.un(f);
        let (&k, c) = p.min_term().unwrap();
        if K::IRRATIONAL && k >= 2 && c.as_int().is_none() {
            let beta = K::wrap(Poly::monomial(2, c.inv()));
            let prod = self.mul(f, &beta);
            return super::ops::multiplied(f, vec![beta], false, self.atomic(&prod, b));
        }
        let v = self.almost_atomic(f, b);
        if v.is_holds() {
            v
        } else {
            Verdict::unknown(b, v.certificate)
        }
    }

    fn antimatter(&self, b: &SearchBounds) -> Verdict {
        let two = self.constant(2);
        let v = self.irreducible(&two, b);
        debug_assert!(v.is_holds());
        Verdict::refuted(
            Basis::Witness,
            Certificate::Factorization { target: two.clone(), unit: self.one(), factors: vec![two] },
        )
    }

    fn samples(&self, seed: u64, b: &SearchBounds) -> Vec<GenPoly> {
        let mut out: Vec<GenPoly> = ["1/2*x^(2)", "x^(2)", "x^(1)", "2", "6 + x^(1)", "x^(1) + 1/3*x^(3)"]
            .iter()
            .map(|s| K::wrap(Poly::parse(s).unwrap()))
            .collect();
        if K::IRRATIONAL {
            out.push(K::wrap(Poly::parse("(0 + 1*sqrt2)*x^(2)").unwrap()));
            out.push(K::wrap(Poly::parse("1 + -2*x^(1) + (1/2 + 1*sqrt2)*x^(3)").unwrap()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let deg = b.max_degree.to_integer().to_u32().unwrap_or(6).min(6);
        for _ in 0..12 {
            out.push(K::wrap(self.random_elem(&mut rng, deg, b.max_coeff_height as i64, b.max_denominator as i64)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Domain, DomainId};
    use super::*;
    use crate::domains::{is_atomic_elem, is_irreducible};

    #[test]
    fn d8_examples() {
        let d = Domain::new(DomainId::D8);
        let b = SearchBounds::default();
        let half = d.parse("1/2*x^(2)").unwrap();
        assert!(is_atomic_elem(&d, &half, &b).unwrap().is_refuted());
        let x2 = d.parse("x^(2)").unwrap();
        match is_atomic_elem(&d, &x2, &b).unwrap().certificate {
            Certificate::Factorization { factors, .. } => assert_eq!(factors.len(), 2),
            c => panic!("{c:?}"),
        }
        assert!(is_irreducible(&d, &d.parse("x^(1)").unwrap(), &b).unwrap().is_holds());
        // 2x + 2x^2 = 2 * (x + x^2)
        assert!(is_irreducible(&d, &d.parse("2*x^(1) + 2*x^(2)").unwrap(), &b).unwrap().is_refuted());
        // x + x^2/2 only splits as x * (1 + x/2), which is not in the ring
        assert!(is_irreducible(&d, &d.parse("x^(1) + 1/2*x^(2)").unwrap(), &b).unwrap().is_holds());
    }
}
