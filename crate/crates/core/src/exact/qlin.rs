use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::{fmt_rat, parse_rat, Rat};
use crate::error::{Error, Result};

/// The number `rat + irr * sqrt(2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QLin {
    pub rat: Rat,
    pub irr: Rat,
}

fn sign_of(a: &Rat, b: &Rat) -> Ordering {
    let sa = a.cmp(&Rat::zero());
    let sb = b.cmp(&Rat::zero());
    match (sa, sb) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (x, y) if x == y => x,
        // Opposite signs: compare a^2 with 2 b^2.
        (sa, _) => {
            let lhs = a * a;
            let rhs = b * b * Rat::from_integer(2.into());
            match lhs.cmp(&rhs) {
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
                Ordering::Equal => unreachable!("sqrt 2 is irrational"),
            }
        }
    }
}

/// Exact comparison of real values.
pub fn qlin_cmp(u: &QLin, v: &QLin) -> Ordering {
    sign_of(&(&u.rat - &v.rat), &(&u.irr - &v.irr))
}

impl QLin {
    pub fn new(rat: Rat, irr: Rat) -> Self {
        QLin { rat, irr }
    }

    pub fn from_rat(q: Rat) -> Self {
        QLin { rat: q, irr: Rat::zero() }
    }

    pub fn sqrt2() -> Self {
        QLin { rat: Rat::zero(), irr: Rat::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn conj(&self) -> Self {
        QLin { rat: self.rat.clone(), irr: -&self.irr }
    }

    /// Field norm `a^2 - 2 b^2`.
    pub fn norm(&self) -> Rat {
        &self.rat * &self.rat - &self.irr * &self.irr * Rat::from_integer(2.into())
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.rat, &self.irr)
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(QLin { rat: &self.rat / &n, irr: -&self.irr / &n })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let bad = || Error::Parse(format!("not a Q(sqrt2) number: {s:?}"));
        match s.split_once(" + ") {
            Some((a, b)) => {
                let b = b.trim().strip_suffix("*sqrt2").ok_or_else(bad)?;
                Ok(QLin::new(parse_rat(a)?, parse_rat(b)?))
            }
            None => match s.strip_suffix("*sqrt2") {
                Some(b) => Ok(QLin::new(Rat::zero(), parse_rat(b)?)),
                None if s == "sqrt2" => Ok(QLin::sqrt2()),
                None => Ok(QLin::from_rat(parse_rat(s)?)),
            },
        }
    }
}

impl fmt::Display for QLin {
    /// `p/q + r/s*sqrt2`, dropping a zero irrational part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            write!(f, "{}", fmt_rat(&self.rat))
        } else {
            write!(f, "{} + {}*sqrt2", fmt_rat(&self.rat), fmt_rat(&self.irr))
        }
    }
}

impl PartialOrd for QLin {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QLin {
    fn cmp(&self, other: &Self) -> Ordering {
        qlin_cmp(self, other)
    }
}

impl From<Rat> for QLin {
    fn from(q: Rat) -> Self {
        QLin::from_rat(q)
    }
}

impl Zero for QLin {
    fn zero() -> Self {
        QLin::default()
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for QLin {
    fn one() -> Self {
        QLin::from_rat(Rat::one())
    }
}

impl<'a> Add<&'a QLin> for &'a QLin {
    type Output = QLin;
    fn add(self, o: &QLin) -> QLin {
        QLin { rat: &self.rat + &o.rat, irr: &self.irr + &o.irr }
    }
}

impl<'a> Sub<&'a QLin> for &'a QLin {
    type Output = QLin;
    fn sub(self, o: &QLin) -> QLin {
        QLin { rat: &self.rat - &o.rat, irr: &self.irr - &o.irr }
    }
}

impl<'a> Mul<&'a QLin> for &'a QLin {
    type Output = QLin;
    fn mul(self, o: &QLin) -> QLin {
        let two = Rat::from_integer(2.into());
        QLin {
            rat: &self.rat * &o.rat + &self.irr * &o.irr * two,
            irr: &self.rat * &o.irr + &self.irr * &o.rat,
        }
    }
}

impl Neg for &QLin {
    type Output = QLin;
    fn neg(self) -> QLin {
        QLin { rat: -&self.rat, irr: -&self.irr }
    }
}

impl Neg for QLin {
    type Output = QLin;
    fn neg(self) -> QLin {
        -&self
    }
}

impl Add for QLin {
    type Output = QLin;
    fn add(self, o: QLin) -> QLin {
        &self + &o
    }
}

impl Sub for QLin {
    type Output = QLin;
    fn sub(self, o: QLin) -> QLin {
        &self - &o
    }
}

impl Mul for QLin {
    type Output = QLin;
    fn mul(self, o: QLin) -> QLin {
        &self * &o
    }
}

impl Signed for QLin {
    fn abs(&self) -> Self {
        QLin::abs(self)
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            QLin::zero()
        } else {
            self - other
        }
    }
    fn signum(&self) -> Self {
        match QLin::signum(self) {
            Ordering::Less => -QLin::one(),
            Ordering::Equal => QLin::zero(),
            Ordering::Greater => QLin::one(),
        }
    }
    fn is_positive(&self) -> bool {
        QLin::signum(self) == Ordering::Greater
    }
    fn is_negative(&self) -> bool {
        QLin::signum(self) == Ordering::Less
    }
}

// `Signed` requires `Num`, which requires `Div` and `Rem`; these panic on zero like integer division.
impl std::ops::Div for QLin {
    type Output = QLin;
    fn div(self, o: QLin) -> QLin {
        self.checked_div(&o).expect("division by zero")
    }
}

impl std::ops::Rem for QLin {
    type Output = QLin;
    fn rem(self, _o: QLin) -> QLin {
        QLin::zero()
    }
}

impl num_traits::Num for QLin {
    type FromStrRadixErr = Error;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        if radix != 10 {
            return Err(Error::Parse("only radix 10".into()));
        }
        QLin::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn q(a: (i64, i64), b: (i64, i64)) -> QLin {
        QLin::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn examples() {
        assert_eq!(qlin_cmp(&QLin::zero(), &QLin::zero()), Ordering::Equal);
        assert_eq!(qlin_cmp(&QLin::sqrt2(), &QLin::one()), Ordering::Greater);
        assert_eq!(q((3, 1), (-2, 1)).signum(), Ordering::Greater);
        assert_eq!(q((1, 1), (1, 1)) * q((1, 1), (-1, 1)), -QLin::one());
        assert_eq!(QLin::sqrt2() * QLin::sqrt2(), QLin::from_rat(rat(2, 1)));
        assert_eq!(q((1, 1), (1, 1)).inv().unwrap(), q((-1, 1), (1, 1)));
        assert_eq!(QLin::one().checked_div(&QLin::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn text() {
        let u = q((-1, 3), (5, 2));
        assert_eq!(u.to_string(), "-1/3 + 5/2*sqrt2");
        assert_eq!(QLin::parse(&u.to_string()).unwrap(), u);
        assert_eq!(QLin::parse("(7/2)").unwrap(), q((7, 2), (0, 1)));
        assert_eq!(QLin::parse("-2*sqrt2").unwrap(), q((0, 1), (-2, 1)));
    }
}
