//! Factorization over Q(sqrt 2) by the norm method: shift until the norm is square-free, factor
//! the norm over Q and pull the factors back with gcds.

use num_traits::Zero;

use super::dense::UPoly;
use super::factor::factor_q;
use crate::exact::{rat_int, QLin, Rat};

fn conj(p: &UPoly<QLin>) -> UPoly<QLin> {
    UPoly::new(p.coeffs().iter().map(QLin::conj).collect())
}

fn norm(p: &UPoly<QLin>) -> UPoly<Rat> {
    let n = p.mul(&conj(p));
    debug_assert!(n.coeffs().iter().all(|c| Zero::is_zero(&c.irr)));
    UPoly::new(n.coeffs().iter().map(|c| c.rat.clone()).collect())
}

fn lift(p: &UPoly<Rat>) -> UPoly<QLin> {
    UPoly::new(p.coeffs().iter().cloned().map(QLin::from_rat).collect())
}

fn squarefree_factor(h: &UPoly<QLin>) -> Vec<UPoly<QLin>> {
    if h.degree() == Some(1) {
        return vec![h.clone()];
    }
    for s in 0i64.. {
        let shift = QLin::new(<Rat as Zero>::zero(), rat_int(s));
        let hs = h.shift(&-&shift);
        let n = norm(&hs);
        if n.gcd(&n.derivative()).degree() != Some(0) {
            continue;
        }
        let (_, fs) = factor_q(&n);
        if fs.len() == 1 {
            return vec![h.clone()];
        }
        let mut out = Vec::new();
        for (f, _) in fs {
            let g = hs.gcd(&lift(&f));
            if g.degree().unwrap_or(0) >= 1 {
                out.push(g.shift(&shift).monic());
            }
        }
        return out;
    }
    unreachable!()
}

/// Monic irreducible factors over Q(sqrt 2) with multiplicities, plus the leading coefficient.
pub fn factor_qsqrt2(p: &UPoly<QLin>) -> (QLin, Vec<(UPoly<QLin>, u32)>) {
    assert!(!p.is_zero(), "factor of zero polynomial");
    let mut out = Vec::new();
    for (s, e) in p.squarefree_decomposition() {
        for f in squarefree_factor(&s) {
            out.push((f, e));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().iter().rev().cmp(b.0.coeffs().iter().rev()))
    });
    (p.lc(), out)
}

pub fn is_irreducible_qsqrt2(p: &UPoly<QLin>) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => {
            let (_, fs) = factor_qsqrt2(p);
            fs.len() == 1 && fs[0].1 == 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(v: &[(i64, i64)]) -> UPoly<QLin> {
        UPoly::new(v.iter().map(|&(a, b)| QLin::new(rat_int(a), rat_int(b))).collect())
    }

    #[test]
    fn splits_x2_minus_2() {
        let (_, fs) = factor_qsqrt2(&q(&[(-2, 0), (0, 0), (1, 0)]));
        assert_eq!(fs, vec![(q(&[(0, -1), (1, 0)]), 1), (q(&[(0, 1), (1, 0)]), 1)]);
    }

    #[test]
    fn keeps_x2_minus_3() {
        assert!(is_irreducible_qsqrt2(&q(&[(-3, 0), (0, 0), (1, 0)])));
        assert!(!is_irreducible_qsqrt2(&q(&[(-8, 0), (0, 0), (0, 0), (0, 0), (1, 0)])));
    }

    #[test]
    fn product_reconstructs() {
        // (x + sqrt2)^2 (x^2 + x + 1 + sqrt2) (3x - 1)
        let a = q(&[(0, 1), (1, 0)]).pow(2);
        let b = q(&[(1, 1), (1, 0), (1, 0)]);
        let c = q(&[(-1, 0), (3, 0)]);
        let p = a.mul(&b).mul(&c);
        let (lc, fs) = factor_qsqrt2(&p);
        let mut prod = UPoly::constant(lc);
        for (f, e) in &fs {
            prod = prod.mul(&f.pow(*e));
        }
        assert_eq!(prod, p);
        assert_eq!(fs.iter().map(|f| f.1).sum::<u32>(), 4);
        assert!(fs.iter().all(|(f, _)| f.lc().is_one()));
    }
}
