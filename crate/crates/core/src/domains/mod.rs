//! The constructed integral domains behind one adapter contract.

mod appb;
mod certify;
mod d12;
mod d23;
mod d24;
mod headpoly;
mod ma;
mod ops;

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::exact::{fmt_rat, parse_rat, rat, rat_floor, rat_int, QLin, Rat};
use crate::monoids::{S4Elem, SeqElem};
use crate::poly::{Exponent, Poly, F2};
use crate::verdict::{SearchBounds, Verdict};

pub use appb::{appb_atomic_by_corollary, appb_minimal_term, appb_witness, corollary_shape};
pub use certify::{certificate_ok, check_certificate};
pub use d23::prime_ideal_instance_check;
pub use ma::{min_exponent_decompose, pth_power_identity, semi_atomic_witness};
pub(crate) use ma::random_seq;
pub(crate) use ops::ops;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainId {
    D8,
    D9,
    D23,
    D24,
    D12,
    MaQPlus,
    MaS4,
    MaAppA,
    AppB,
}

impl DomainId {
    pub const ALL: [DomainId; 9] = [
        DomainId::D8,
        DomainId::D9,
        DomainId::D23,
        DomainId::D24,
        DomainId::D12,
        DomainId::MaQPlus,
        DomainId::MaS4,
        DomainId::MaAppA,
        DomainId::AppB,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            DomainId::D8 => "d8",
            DomainId::D9 => "d9",
            DomainId::D23 => "d23",
            DomainId::D24 => "d24",
            DomainId::D12 => "d12",
            DomainId::MaQPlus => "ma_qplus",
            DomainId::MaS4 => "ma_s4",
            DomainId::MaAppA => "ma_appa",
            DomainId::AppB => "appb",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        let t = s.to_ascii_lowercase();
        Self::ALL.into_iter().find(|d| d.tag() == t).ok_or_else(|| {
            let valid: Vec<&str> = Self::ALL.iter().map(|d| d.tag()).collect();
            Error::InvalidArgument(format!("unknown domain {s:?}; valid: {}", valid.join(", ")))
        })
    }
}

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for DomainId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// A domain together with its parameters (only the series domain has one: the truncation order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub id: DomainId,
    pub truncation: Rat,
}

impl Domain {
    pub fn new(id: DomainId) -> Self {
        Domain { id, truncation: rat_int(4) }
    }

    pub fn with_truncation(id: DomainId, truncation: Rat) -> Self {
        Domain { id, truncation }
    }

    pub fn parse(&self, s: &str) -> Result<GenPoly> {
        let f = GenPoly::parse(self.id, s)?;
        if !contains(self, &f) {
            return invalid(format!("{s:?} is not an element of {}", self.id));
        }
        Ok(f)
    }
}

impl From<DomainId> for Domain {
    fn from(id: DomainId) -> Self {
        Domain::new(id)
    }
}

/// Exponent `x^a y^k` of the two-variable domain; ordered by `k` first, then `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiExp {
    pub k: u32,
    pub a: Rat,
}

impl BiExp {
    pub fn new(a: Rat, k: u32) -> Self {
        BiExp { k, a }
    }

    /// Allowed exponents: `k >= 2`, or `k <= 1` with `a >= 0`.
    pub fn allowed(&self) -> bool {
        self.k >= 2 || self.a >= Rat::from_integer(0.into())
    }
}

impl Exponent for BiExp {
    fn origin() -> Self {
        BiExp::default()
    }
    fn is_origin(&self) -> bool {
        self.k == 0 && num_traits::Zero::is_zero(&self.a)
    }
    fn add(&self, o: &Self) -> Self {
        BiExp { k: self.k + o.k, a: &self.a + &o.a }
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(BiExp { k: self.k.checked_sub(o.k)?, a: &self.a - &o.a })
    }
    fn monomial_text(&self) -> String {
        let x = format!("x^({})", fmt_rat(&self.a));
        let y = format!("y^({})", self.k);
        match (num_traits::Zero::is_zero(&self.a), self.k == 0) {
            (true, true) => String::new(),
            (true, false) => y,
            (false, true) => x,
            (false, false) => format!("{x}*{y}"),
        }
    }
    fn parse_monomial(s: &str) -> Result<Self> {
        let mut out = BiExp::default();
        for part in s.trim().split('*') {
            let part = part.trim();
            let inner = |p: &str| {
                part.strip_prefix(p)
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad monomial {s:?}")))
                    .map(str::to_string)
            };
            if part.starts_with("x^(") {
                out.a = parse_rat(&inner("x^(")?)?;
            } else if part.starts_with("y^(") {
                out.k = inner("y^(")?.parse().map_err(|_| Error::Parse(format!("bad y exponent in {s:?}")))?;
            } else {
                return Err(Error::Parse(format!("bad monomial {s:?}")));
            }
        }
        Ok(out)
    }
}

/// Element of one of the domains; the variant fixes exponent and coefficient types.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenPoly {
    /// Integer exponents, rational coefficients (`D8`, `D23`).
    Int(Poly<u32, Rat>),
    /// Integer exponents, coefficients in Q(sqrt 2) (`D9`).
    Quad(Poly<u32, QLin>),
    /// Rational exponents, integer coefficients (`D24`).
    Puiseux(Poly<Rat, BigInt>),
    /// Truncated series, rational exponents and coefficients (`D12`).
    Series(Poly<Rat, Rat>),
    QPlus(Poly<Rat, F2>),
    S4(Poly<S4Elem, F2>),
    Seq(Poly<SeqElem, F2>),
    Bi(Poly<BiExp, F2>),
}

impl GenPoly {
    pub fn parse(d: DomainId, s: &str) -> Result<Self> {
        Ok(match d {
            DomainId::D8 | DomainId::D23 => GenPoly::Int(Poly::parse(s)?),
            DomainId::D9 => GenPoly::Quad(Poly::parse(s)?),
            DomainId::D24 => GenPoly::Puiseux(Poly::parse(s)?),
            DomainId::D12 => GenPoly::Series(Poly::parse(s)?),
            DomainId::MaQPlus => GenPoly::QPlus(Poly::parse(s)?),
            DomainId::MaS4 => GenPoly::S4(Poly::parse(s)?),
            DomainId::MaAppA => GenPoly::Seq(Poly::parse(s)?),
            DomainId::AppB => GenPoly::Bi(Poly::parse(s)?),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GenPoly::Int(p) => p.is_zero(),
            GenPoly::Quad(p) => p.is_zero(),
            GenPoly::Puiseux(p) => p.is_zero(),
            GenPoly::Series(p) => p.is_zero(),
            GenPoly::QPlus(p) => p.is_zero(),
            GenPoly::S4(p) => p.is_zero(),
            GenPoly::Seq(p) => p.is_zero(),
            GenPoly::Bi(p) => p.is_zero(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GenPoly::Int(p) => p.len(),
            GenPoly::Quad(p) => p.len(),
            GenPoly::Puiseux(p) => p.len(),
            GenPoly::Series(p) => p.len(),
            GenPoly::QPlus(p) => p.len(),
            GenPoly::S4(p) => p.len(),
            GenPoly::Seq(p) => p.len(),
            GenPoly::Bi(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenPoly::Int(p) => write!(f, "{p}"),
            GenPoly::Quad(p) => write!(f, "{p}"),
            GenPoly::Puiseux(p) => write!(f, "{p}"),
            GenPoly::Series(p) => write!(f, "{p}"),
            GenPoly::QPlus(p) => write!(f, "{p}"),
            GenPoly::S4(p) => write!(f, "{p}"),
            GenPoly::Seq(p) => write!(f, "{p}"),
            GenPoly::Bi(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for GenPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn nonzero(f: &GenPoly) -> Result<()> {
    if f.is_zero() {
        return invalid("zero element");
    }
    Ok(())
}

fn nonunit(d: &Domain, f: &GenPoly) -> Result<()> {
    nonzero(f)?;
    if is_unit(d, f)? {
        return invalid(format!("{f} is a unit of {}", d.id));
    }
    Ok(())
}

pub fn contains(d: &Domain, f: &GenPoly) -> bool {
    ops(d).contains(f)
}

pub fn is_unit(d: &Domain, f: &GenPoly) -> Result<bool> {
    nonzero(f)?;
    let o = ops(d);
    if !o.contains(f) {
        return invalid(format!("{f} is not an element of {}", d.id));
    }
    Ok(o.is_unit(f))
}

/// Product in the domain (truncated for the series domain).
pub fn mul(d: &Domain, a: &GenPoly, b: &GenPoly) -> GenPoly {
    ops(d).mul(a, b)
}

/// `(h, u)` with `g * h = f * u`, `h` in the domain and `u` a unit, when `g` divides `f`.
pub fn divide(d: &Domain, f: &GenPoly, g: &GenPoly) -> Option<(GenPoly, GenPoly)> {
    ops(d).divide(f, g)
}

pub fn is_irreducible(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonunit(d, f)?;
    Ok(ops(d).irreducible(f, bounds))
}

pub fn divisors_up_to(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Vec<GenPoly>> {
    nonzero(f)?;
    Ok(ops(d).divisors(f, bounds))
}

pub fn is_atomic_elem(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonunit(d, f)?;
    Ok(ops(d).atomic(f, bounds))
}

/// Semi-atomicity of one candidate `beta` over a sample of non-units.
pub fn check_semi_atomic(d: &Domain, beta: &GenPoly, samples: &[GenPoly], bounds: &SearchBounds) -> Result<Verdict> {
    nonzero(beta)?;
    let o = ops(d);
    Ok(ops::per_sample(samples, |a| {
        let p = o.mul(a, beta);
        if o.is_unit(&p) {
            ops::trivially_atomic_unit(&p)
        } else {
            ops::multiplied(a, vec![beta.clone()], false, o.atomic(&p, bounds))
        }
    }, bounds))
}

/// `beta^2` as a product of irreducibles.
pub fn lemma6_transform(d: &Domain, beta: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonzero(beta)?;
    if is_unit(d, beta)? {
        return invalid(format!("{beta} is a unit: the domain would already be atomic"));
    }
    let o = ops(d);
    let sq = o.mul(beta, beta);
    Ok(o.atomic(&sq, bounds))
}

pub fn almost_atomic_witness_search(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonunit(d, f)?;
    Ok(ops(d).almost_atomic(f, bounds))
}

pub fn quasi_atomic_witness_search(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonunit(d, f)?;
    Ok(ops(d).quasi_atomic(f, bounds))
}

pub fn furstenberg_divisor(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonunit(d, f)?;
    Ok(ops(d).furstenberg(f, bounds))
}

pub fn check_semi_furstenberg(d: &Domain, beta: &GenPoly, samples: &[GenPoly], bounds: &SearchBounds) -> Result<Verdict> {
    nonzero(beta)?;
    let o = ops(d);
    Ok(ops::per_sample(samples, |a| o.semi_furstenberg_at(beta, a, bounds), bounds))
}

pub fn check_almost_furstenberg(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonunit(d, f)?;
    Ok(ops(d).almost_furstenberg(f, bounds))
}

pub fn check_quasi_furstenberg(d: &Domain, f: &GenPoly, bounds: &SearchBounds) -> Result<Verdict> {
    nonunit(d, f)?;
    Ok(ops(d).quasi_furstenberg(f, bounds))
}

pub fn check_antimatter(d: &Domain, bounds: &SearchBounds) -> Verdict {
    ops(d).antimatter(bounds)
}

/// Deterministic sample of non-units: fixed structural elements first, then seeded random ones.
pub fn sample_universe(d: &Domain, seed: u64, bounds: &SearchBounds) -> Vec<GenPoly> {
    ops(d).samples(seed, bounds)
}

/// `count` seeded random non-units (monomials for the monoid algebras).
pub fn random_elements(d: &Domain, seed: u64, count: usize, bounds: &SearchBounds) -> Vec<GenPoly> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let o = ops(d);
    let h = bounds.max_coeff_height.max(1) as i64;
    let den = bounds.max_denominator.max(1) as i64;
    let deg = rat_floor(&bounds.max_degree).try_into().unwrap_or(6u32).max(1);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = match d.id {
            DomainId::D8 => GenPoly::Int(headpoly::HeadPoly::<Rat>::new().random_elem(&mut rng, deg, h, den)),
            DomainId::D9 => GenPoly::Quad(headpoly::HeadPoly::<QLin>::new().random_elem(&mut rng, deg, h, den)),
            DomainId::D23 => {
                let mut p = Poly::zero();
                p.add_term(0, rat_int(rng.gen_range(-h..=h)));
                for e in 1..=deg {
                    if rng.gen_bool(0.5) {
                        p.add_term(e, rat(rng.gen_range(-h..=h), rng.gen_range(1..=den)));
                    }
                }
                GenPoly::Int(p)
            }
            DomainId::D24 => {
                let n = rng.gen_range(1..=den as u64);
                let v: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-h..=h))).collect();
                GenPoly::Puiseux(d24::from_dense(&v, n))
            }
            DomainId::D12 => d12::D12::new(d.truncation.clone()).random_elem(&mut rng, bounds),
            DomainId::MaQPlus => GenPoly::QPlus(Poly::x_pow(rat(rng.gen_range(1..=h), rng.gen_range(1..=den)))),
            DomainId::MaS4 => GenPoly::S4(Poly::x_pow(ma::random_s4(&mut rng))),
            DomainId::MaAppA => GenPoly::Seq(Poly::x_pow(ma::random_seq(&mut rng, bounds, None))),
            DomainId::AppB => appb::random_appb(&mut rng, den.min(4), 3),
        };
        if !f.is_zero() && o.contains(&f) && !o.is_unit(&f) {
            out.push(f);
        }
    }
    out
}

/// Candidate `beta` for semi-atomicity, when the domain has one.
pub fn semi_atomic_candidate(d: &Domain) -> Option<GenPoly> {
    ops(d).semi_atomic_candidate()
}

/// Candidate `beta` for semi-Furstenberg, when the domain has one.
pub fn semi_furstenberg_candidate(d: &Domain) -> Option<GenPoly> {
    ops(d).semi_furstenberg_candidate()
}
