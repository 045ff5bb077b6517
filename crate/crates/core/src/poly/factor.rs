//! Factorization in Z[x] and Q[x].
//!
//! Polynomials of degree at most four with small coefficients go through a direct rational-root and
//! quadratic-split search; everything else is handed to the Zassenhaus implementation in `algebraics`.

use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense::UPoly;
use crate::exact::Rat;

/// Primitive integer polynomial with positive leading coefficient, coefficients in increasing degree.
pub type ZPoly = Vec<BigInt>;

/// Factorization of a nonzero integer polynomial: `p = unit_content * prod f_i^{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZFactors {
    pub content: BigInt,
    pub factors: Vec<(ZPoly, u32)>,
}

const FAST_LIMIT: i128 = 1_000_000;

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

pub fn factor_z(p: &[BigInt]) -> ZFactors {
    let p = trim(p.to_vec());
    assert!(!p.is_empty(), "factor of zero polynomial");
    let mut c = content(&p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    let prim: Vec<BigInt> = p.iter().map(|a| a / &c).collect();
    let mut flat = fast_factor(&prim).unwrap_or_else(|| slow_factor(&prim));
    flat.sort_by(|a, b| canonical_cmp(a, b));
    let mut factors: Vec<(ZPoly, u32)> = Vec::new();
    for f in flat {
        match factors.last_mut() {
            Some((g, e)) if *g == f => *e += 1,
            _ => factors.push((f, 1)),
        }
    }
    ZFactors { content: c, factors }
}

fn canonical_cmp(a: &ZPoly, b: &ZPoly) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

fn slow_factor(p: &[BigInt]) -> Vec<ZPoly> {
    if p.len() <= 2 {
        return if p.len() == 2 { vec![p.to_vec()] } else { vec![] };
    }
    let poly: Polynomial<BigInt> = p.to_vec().into();
    let fs = poly.factor();
    let mut out = Vec::new();
    for f in fs.polynomial_factors {
        let mut coeffs = trim(f.polynomial.into_coefficients());
        if coeffs.len() <= 1 {
            continue;
        }
        let g = content(&coeffs);
        let g = if coeffs.last().unwrap().is_negative() { -g } else { g };
        coeffs = coeffs.iter().map(|a| a / &g).collect();
        for _ in 0..f.power {
            out.push(coeffs.clone());
        }
    }
    out
}

fn fast_factor(p: &[BigInt]) -> Option<Vec<ZPoly>> {
    if p.len() > 5 {
        return None;
    }
    let mut small = Vec::with_capacity(p.len());
    for c in p {
        let v = c.to_i128()?;
        if v.abs() > FAST_LIMIT {
            return None;
        }
        small.push(v);
    }
    let mut out = Vec::new();
    let mut start = 0;
    while small[start] == 0 {
        out.push(vec![0, 1]);
        start += 1;
    }
    split_small(&small[start..], &mut out)?;
    Some(out.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect())
}

fn divisors_i128(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mul_small(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Divide by `q x - r` exactly, if it divides.
fn div_linear(p: &[i128], q: i128, r: i128) -> Option<Vec<i128>> {
    let n = p.len() - 1;
    let mut out = vec![0i128; n];
    let mut rem = p.to_vec();
    for i in (1..=n).rev() {
        if rem[i] % q != 0 {
            return None;
        }
        let c = rem[i] / q;
        out[i - 1] = c;
        rem[i] = 0;
        rem[i - 1] += c * r;
    }
    (rem[0] == 0).then_some(out)
}

fn normalize_small(mut p: Vec<i128>) -> Vec<i128> {
    let g = p.iter().fold(0i128, |g, &c| g.gcd(&c));
    let g = if *p.last().unwrap() < 0 { -g } else { g };
    for c in &mut p {
        *c /= g;
    }
    p
}

/// Split a primitive polynomial with nonzero constant term and degree <= 4.
fn split_small(p: &[i128], out: &mut Vec<Vec<i128>>) -> Option<()> {
    let n = p.len() - 1;
    if n == 0 {
        return Some(());
    }
    if n == 1 {
        out.push(normalize_small(p.to_vec()));
        return Some(());
    }
    let a0 = p[0];
    let an = p[n];
    for q in divisors_i128(an) {
        for r0 in divisors_i128(a0) {
            for r in [r0, -r0] {
                if r.gcd(&q) != 1 {
                    continue;
                }
                // q^n P(r/q) = sum a_i r^i q^(n-i)
                let mut acc = 0i128;
                for (i, a) in p.iter().enumerate() {
                    acc += a * r.pow(i as u32) * q.pow((n - i) as u32);
                }
                if acc == 0 {
                    let rest = div_linear(p, q, r)?;
                    out.push(normalize_small(vec![-r, q]));
                    return split_small(&rest, out);
                }
            }
        }
    }
    if n <= 3 {
        out.push(normalize_small(p.to_vec()));
        return Some(());
    }
    let sign = an.signum();
    for b2 in divisors_i128(an) {
        let c2 = an / b2;
        for b00 in divisors_i128(a0) {
            for b0 in [b00, -b00] {
                let c0 = a0 / b0;
                let (b2s, c2s) = (b2 * sign, c2);
                for (b1, c1) in quadratic_pairs(p, b2s, b0, c2s, c0) {
                    let a = vec![b0, b1, b2s];
                    let b = vec![c0, c1, c2s];
                    if mul_small(&a, &b) == p {
                        out.push(normalize_small(a));
                        out.push(normalize_small(b));
                        return Some(());
                    }
                }
            }
        }
    }
    out.push(normalize_small(p.to_vec()));
    Some(())
}

/// Candidate middle coefficients for `(b2 x^2 + b1 x + b0)(c2 x^2 + c1 x + c0) = p`.
fn quadratic_pairs(p: &[i128], b2: i128, b0: i128, c2: i128, c0: i128) -> Vec<(i128, i128)> {
    let (a1, a2, a3) = (p[1], p[2], p[3]);
    let det = c2 * b0 - b2 * c0;
    if det != 0 {
        let n1 = a3 * b0 - b2 * a1;
        let n2 = c2 * a1 - c0 * a3;
        if n1 % det == 0 && n2 % det == 0 {
            return vec![(n1 / det, n2 / det)];
        }
        return vec![];
    }
    // Degenerate system: c2 b1^2 - a3 b1 + k b2 = 0 with k = a2 - b2 c0 - b0 c2.
    let k = a2 - b2 * c0 - b0 * c2;
    let disc = a3 * a3 - 4 * c2 * k * b2;
    if disc < 0 {
        return vec![];
    }
    let s = disc.sqrt();
    if s * s != disc {
        return vec![];
    }
    let mut out = Vec::new();
    for num in [a3 + s, a3 - s] {
        if num % (2 * c2) == 0 {
            let b1 = num / (2 * c2);
            let t = a3 - b1 * c2;
            if t % b2 == 0 {
                out.push((b1, t / b2));
            }
        }
    }
    out
}

/// Full factorization through the Zassenhaus path only; used to cross-check the small-degree path.
pub fn factor_z_reference(p: &[BigInt]) -> ZFactors {
    let p = trim(p.to_vec());
    let mut c = content(&p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    let prim: Vec<BigInt> = p.iter().map(|a| a / &c).collect();
    let mut start = 0;
    let mut flat = Vec::new();
    while prim[start].is_zero() {
        flat.push(vec![BigInt::zero(), BigInt::one()]);
        start += 1;
    }
    flat.extend(slow_factor(&prim[start..]));
    flat.sort_by(canonical_cmp);
    let mut factors: Vec<(ZPoly, u32)> = Vec::new();
    for f in flat {
        match factors.last_mut() {
            Some((g, e)) if *g == f => *e += 1,
            _ => factors.push((f, 1)),
        }
    }
    ZFactors { content: c, factors }
}

/// Clear denominators: `p = z / d` with `z` integral.
pub fn to_integer_poly(p: &UPoly<Rat>) -> (Vec<BigInt>, BigInt) {
    let d = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let z = p.coeffs().iter().map(|c| (c * Rat::from_integer(d.clone())).to_integer()).collect();
    (z, d)
}

/// Monic irreducible factors over Q with multiplicities, plus the leading coefficient.
pub fn factor_q(p: &UPoly<Rat>) -> (Rat, Vec<(UPoly<Rat>, u32)>) {
    assert!(!p.is_zero(), "factor of zero polynomial");
    let (z, _) = to_integer_poly(p);
    let zf = factor_z(&z);
    let factors = zf
        .factors
        .into_iter()
        .map(|(f, e)| {
            let u = UPoly::new(f.into_iter().map(Rat::from_integer).collect());
            (u.monic(), e)
        })
        .collect();
    (p.lc(), factors)
}

pub fn is_irreducible_q(p: &UPoly<Rat>) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => {
            let (_, fs) = factor_q(p);
            fs.len() == 1 && fs[0].1 == 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cases() {
        let f = factor_z(&z(&[1, 0, 0, 0, 1]));
        assert_eq!(f.factors, vec![(z(&[1, 0, 0, 0, 1]), 1)]);
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
        let f = factor_z(&z(&[4, 0, 0, 0, 1]));
        assert_eq!(f.factors, vec![(z(&[2, -2, 1]), 1), (z(&[2, 2, 1]), 1)]);
        // -6x^2 + 6 = -6 (x - 1)(x + 1)
        let f = factor_z(&z(&[6, 0, -6]));
        assert_eq!(f.content, BigInt::from(-6));
        assert_eq!(f.factors, vec![(z(&[-1, 1]), 1), (z(&[1, 1]), 1)]);
        let f = factor_z(&z(&[0, 0, 2, 2]));
        assert_eq!(f.factors, vec![(z(&[0, 1]), 2), (z(&[1, 1]), 1)]);
    }

    #[test]
    fn matches_reference_on_squares_of_quadratics() {
        for a in -3..=3 {
            for b in -3..=3 {
                let q = z(&[b, a, 1]);
                let sq = vec![
                    &q[0] * &q[0],
                    BigInt::from(2) * &q[0] * &q[1],
                    &q[1] * &q[1] + BigInt::from(2) * &q[0],
                    BigInt::from(2) * &q[1],
                    BigInt::one(),
                ];
                if sq[0].is_zero() {
                    continue;
                }
                assert_eq!(factor_z(&sq), factor_z_reference(&sq), "{sq:?}");
            }
        }
    }
}
