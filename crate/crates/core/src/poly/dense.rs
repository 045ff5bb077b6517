use super::coeff::Field;
use super::sparse::Poly;

/// Dense univariate polynomial over a field, coefficients in increasing degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct UPoly<K: Field> {
    c: Vec<K>,
}

impl<K: Field> UPoly<K> {
    pub fn new(mut c: Vec<K>) -> Self {
        while c.last().is_some_and(|x| x.is_nil()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly { c: vec![K::unity()] }
    }

    pub fn constant(k: K) -> Self {
        Self::new(vec![k])
    }

    /// `x + a`.
    pub fn linear(a: K) -> Self {
        Self::new(vec![a, K::unity()])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_else(K::nil)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> K {
        self.c.last().cloned().unwrap_or_else(K::nil)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::nil(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_nil() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::new(self.c.iter().map(|a| a.mul(k)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().inv())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().inv();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![K::nil(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let f = r[i].mul(&inv);
            if f.is_nil() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                let k = i - dd + j;
                r[k] = r[k].sub(&f.mul(b));
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        let mut k = K::nil();
        for (i, a) in self.c.iter().enumerate() {
            if i > 0 {
                out.push(a.mul(&k));
            }
            k = k.add(&K::unity());
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &K) -> K {
        self.c.iter().rev().fold(K::nil(), |acc, a| acc.mul(x).add(a))
    }

    /// `self(x + a)` by Horner's rule.
    pub fn shift(&self, a: &K) -> Self {
        let lin = Self::linear(a.clone());
        self.c
            .iter()
            .rev()
            .fold(Self::zero(), |acc, k| acc.mul(&lin).add(&Self::constant(k.clone())))
    }

    /// Square-free decomposition (Yun): monic `s_i` with `monic(self) = prod s_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = f.derivative();
        let mut a = f.gcd(&d);
        let mut b = f.exact_div(&a).unwrap();
        let mut c = d.exact_div(&a).unwrap();
        let mut i = 1;
        loop {
            let dd = c.sub(&b.derivative());
            if b.degree() == Some(0) {
                break;
            }
            a = b.gcd(&dd);
            if a.degree() != Some(0) {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            c = dd.exact_div(&a).unwrap();
            i += 1;
        }
        out
    }

    pub fn to_sparse(&self) -> Poly<u32, K> {
        Poly::from_terms(self.c.iter().enumerate().map(|(i, k)| (i as u32, k.clone())))
    }

    pub fn from_sparse(p: &Poly<u32, K>) -> Self {
        let n = p.max_term().map(|(e, _)| *e as usize + 1).unwrap_or(0);
        let mut c = vec![K::nil(); n];
        for (e, k) in p.iter() {
            c[*e as usize] = k.clone();
        }
        Self::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Rat};

    fn p(v: &[i64]) -> UPoly<Rat> {
        UPoly::new(v.iter().map(|&i| rat_int(i)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.exact_div(&b), Some(p(&[-1, 1])));
        assert_eq!(a.gcd(&p(&[1, 2, 1])), b);
        assert_eq!(p(&[1, 1]).shift(&rat_int(2)), p(&[3, 1]));
    }

    #[test]
    fn squarefree() {
        // (x+1)^2 (x-2)
        let f = p(&[1, 1]).pow(2).mul(&p(&[-2, 1]));
        assert_eq!(f.squarefree_decomposition(), vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2)]);
    }
}
