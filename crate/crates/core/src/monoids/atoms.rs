//! Brute force atom enumeration and bounded factorization into atoms.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::pairing::pairing_prime;
use super::s4::{s4_decompose, s4_membership, S4Elem, S4Gen};
use super::seq::{seq_in_s, SeqElem};
use crate::error::{invalid, Error, Result};
use crate::exact::{fmt_rat, parse_rat, rat, Rat};
use crate::verdict::SearchBounds;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidId {
    QPlus,
    SectionFour,
    AppendixA,
}

impl MonoidId {
    pub const ALL: [MonoidId; 3] = [MonoidId::QPlus, MonoidId::SectionFour, MonoidId::AppendixA];

    pub fn tag(&self) -> &'static str {
        match self {
            MonoidId::QPlus => "qplus",
            MonoidId::SectionFour => "section_four",
            MonoidId::AppendixA => "appendix_a",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown monoid {s:?}; valid: qplus, section_four, appendix_a")))
    }
}

impl fmt::Display for MonoidId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for MonoidId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidElem {
    QPlus(Rat),
    S4(S4Elem),
    Seq(SeqElem),
}

impl MonoidElem {
    pub fn parse(mid: MonoidId, s: &str) -> Result<Self> {
        Ok(match mid {
            MonoidId::QPlus => MonoidElem::QPlus(parse_rat(s)?),
            MonoidId::SectionFour => MonoidElem::S4(S4Elem::parse(s)?),
            MonoidId::AppendixA => MonoidElem::Seq(SeqElem::parse(s)?),
        })
    }
}

impl fmt::Display for MonoidElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidElem::QPlus(q) => f.write_str(&fmt_rat(q)),
            MonoidElem::S4(e) => write!(f, "{e}"),
            MonoidElem::Seq(e) => write!(f, "{e}"),
        }
    }
}

impl Serialize for MonoidElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Membership of a limit/window pair, treating entries beyond the window as the limit.
fn window_member(limit: u64, entries: &[u8]) -> bool {
    match limit {
        3 | 5 | 6 => true,
        l if l >= 8 => true,
        0 => entries.iter().all(|a| a % 7 == 0),
        7 => entries.iter().all(|a| a % 7 == 0),
        _ => false,
    }
}

fn window_nonzero(limit: u64, entries: &[u8]) -> bool {
    limit != 0 || entries.iter().any(|&a| a != 0)
}

/// Every member of the monoid in the bounded universe, grouped by limit.
fn appendix_a_universe(w: usize, e: u8, max_limit: u64) -> Vec<(u64, Vec<Vec<u8>>)> {
    let mut out = Vec::new();
    for l in 0..=max_limit {
        let mut members = Vec::new();
        let mut v = vec![0u8; w];
        loop {
            if window_member(l, &v) && window_nonzero(l, &v) {
                members.push(v.clone());
            }
            let mut i = 0;
            while i < w && v[i] == e {
                v[i] = 0;
                i += 1;
            }
            if i == w {
                break;
            }
            v[i] += 1;
        }
        out.push((l, members));
    }
    out
}

fn appendix_a_atoms(b: &SearchBounds) -> Vec<SeqElem> {
    let w = b.index_bound as usize;
    let e = b.entry_bound.min(u8::MAX as u32) as u8;
    let universe = appendix_a_universe(w, e, b.limit_bound as u64);
    let mut atoms = Vec::new();
    let mut diff = vec![0u8; w];
    for (l, members) in &universe {
        'outer: for s in members {
            for l1 in 0..=l / 2 {
                let l2 = l - l1;
                let (m1, m2) = (&universe[l1 as usize].1, &universe[l2 as usize].1);
                let (cands, other) = if m1.len() <= m2.len() { (m1, l2) } else { (m2, l1) };
                for c in cands {
                    if c.iter().zip(s).any(|(a, b)| a > b) {
                        continue;
                    }
                    for i in 0..w {
                        diff[i] = s[i] - c[i];
                    }
                    if window_member(other, &diff) && window_nonzero(other, &diff) {
                        continue 'outer;
                    }
                }
            }
            atoms.push(SeqElem::new(*l, s.iter().enumerate().map(|(i, &a)| (i as u32 + 1, a as u64))));
        }
    }
    atoms.sort();
    atoms
}

fn s4_universe(b: &SearchBounds) -> Result<Vec<S4Elem>> {
    let k = b.index_bound as u64;
    let mut gens = vec![S4Gen::Alpha.value()];
    for e in 0..=k {
        gens.push(S4Gen::Dyadic(e as u32).value());
    }
    for n in 1..=k {
        for m in (1..=k).step_by(2) {
            gens.push(S4Gen::paired(n, m)?.value());
        }
    }
    let mut level: BTreeSet<S4Elem> = BTreeSet::new();
    level.insert(S4Elem::default());
    let mut all = BTreeSet::new();
    for _ in 0..b.max_multiset {
        let mut next = BTreeSet::new();
        for t in &level {
            for g in &gens {
                next.insert(t.plus(g));
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all.into_iter().collect())
}

fn s4_member(t: &S4Elem) -> bool {
    s4_decompose(t).is_ok()
}

fn s4_decomposable(t: &S4Elem) -> bool {
    let mut cands = vec![S4Gen::Alpha.value()];
    if let Ok(dec) = s4_decompose(t) {
        for (g, _) in &dec.parts {
            cands.push(g.value());
        }
        if !dec.residue.is_zero() {
            let e = dec.residue.denom().bits() as u32;
            for k in 0..=e {
                cands.push(S4Gen::Dyadic(k).value());
            }
        }
    }
    cands.iter().any(|c| c != t && s4_member(&t.minus(c)))
}

/// Atoms of the bounded universe, by brute force over `S \ (S + S)`.
pub fn atoms_up_to(mid: MonoidId, bounds: &SearchBounds) -> Result<Vec<MonoidElem>> {
    Ok(match mid {
        MonoidId::QPlus => {
            let mut atoms = Vec::new();
            let mut universe = BTreeSet::new();
            for q in 1..=bounds.max_denominator as i64 {
                for p in 1..=bounds.max_coeff_height as i64 {
                    universe.insert(rat(p, q));
                }
            }
            for s in &universe {
                let half = s / rat(2, 1);
                let split = universe.iter().chain(std::iter::once(&half)).any(|s1| s1 < s && (s - s1).is_positive());
                if !split {
                    atoms.push(MonoidElem::QPlus(s.clone()));
                }
            }
            atoms
        }
        MonoidId::SectionFour => s4_universe(bounds)?
            .into_iter()
            .filter(|t| !s4_decomposable(t))
            .map(MonoidElem::S4)
            .collect(),
        MonoidId::AppendixA => appendix_a_atoms(bounds).into_iter().map(MonoidElem::Seq).collect(),
    })
}

/// All factorizations of `t` into at most `max_multiset` atoms, as sorted multisets.
///
/// Sequence atoms are only allowed to deviate from their limit at indices up to
/// `max(index_bound, largest deviating index of t)`; beyond that the set is infinite.
pub fn monoid_factorizations(mid: MonoidId, t: &MonoidElem, bounds: &SearchBounds) -> Result<Vec<Vec<MonoidElem>>> {
    match (mid, t) {
        (MonoidId::QPlus, MonoidElem::QPlus(q)) => {
            if !q.is_positive() {
                return invalid("QPlus elements are positive");
            }
            Ok(Vec::new())
        }
        (MonoidId::SectionFour, MonoidElem::S4(t)) => s4_factorizations(t, bounds),
        (MonoidId::AppendixA, MonoidElem::Seq(t)) => seq_factorizations(t, bounds),
        _ => invalid(format!("{t} is not an element of {mid}")),
    }
}

fn s4_factorizations(t: &S4Elem, b: &SearchBounds) -> Result<Vec<Vec<MonoidElem>>> {
    if !s4_membership(t).is_holds() {
        return invalid(format!("{t} is not in the monoid"));
    }
    let dec = s4_decompose(t).unwrap();
    let cap = b.max_multiset as u64;
    // Extra paired generators g(n,m) used in blocks of p copies, each block absorbing m/2^n of
    // the residue and one alpha.
    let mut pairs = Vec::new();
    for n in 1..=64u64 {
        if pairing_prime(n, 1)? > cap {
            break;
        }
        for m in (1..).step_by(2) {
            let p = pairing_prime(n, m)?;
            if p > cap {
                break;
            }
            pairs.push((S4Gen::Paired { n, m, p }, Rat::new(m.into(), BigInt::one() << n), p));
        }
    }
    let base_size: BigInt = dec.parts.iter().map(|(_, r)| r.clone()).sum::<BigInt>() + &dec.c0;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        i: usize,
        rest: &Rat,
        pairs: &[(S4Gen, Rat, u64)],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget_alpha: &BigInt,
        size: &BigInt,
        cap: u64,
    ) {
        if *size > BigInt::from(cap) || BigInt::from(chosen.len()) > *budget_alpha {
            return;
        }
        if rest.is_zero() {
            out.push(chosen.clone());
        }
        for j in i..pairs.len() {
            if pairs[j].1 <= *rest {
                chosen.push(j);
                let r = rest - &pairs[j].1;
                rec(j, &r, pairs, chosen, out, budget_alpha, &(size + (pairs[j].2 - 1)), cap);
                chosen.pop();
            }
        }
    }
    let mut combos = Vec::new();
    rec(0, &dec.residue, &pairs, &mut chosen, &mut combos, &dec.c0, &base_size, cap);
    for combo in combos {
        let mut atoms = Vec::new();
        let alpha_left = &dec.c0 - BigInt::from(combo.len());
        for _ in 0..alpha_left.to_u64().unwrap() {
            atoms.push(MonoidElem::S4(S4Gen::Alpha.value()));
        }
        let mut counts: std::collections::BTreeMap<S4Gen, BigInt> = dec.parts.iter().cloned().collect();
        for j in combo {
            *counts.entry(pairs[j].0).or_default() += BigInt::from(pairs[j].2);
        }
        for (g, c) in counts {
            for _ in 0..c.to_u64().unwrap() {
                atoms.push(MonoidElem::S4(g.value()));
            }
        }
        atoms.sort();
        out.push(atoms);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn seq_factorizations(t: &SeqElem, b: &SearchBounds) -> Result<Vec<Vec<MonoidElem>>> {
    if !seq_in_s(t) || t.is_zero() {
        return invalid(format!("{t} is not a nonzero element of the monoid"));
    }
    let cap = b.max_multiset as u64;
    let w = t.max_index().max(b.index_bound) as usize;
    let target: Vec<u64> = (1..=w as u32).map(|i| t.get(i)).collect();
    let l = t.limit();
    let mut out: BTreeSet<Vec<SeqElem>> = BTreeSet::new();
    let splits: Vec<(u64, u64)> = if l == 0 {
        vec![(0, 0)]
    } else {
        (0..=l / 3).filter(|x| (l - 3 * x) % 5 == 0).map(|x| (x, (l - 3 * x) / 5)).collect()
    };
    for (x, y) in splits {
        let n = x + y;
        if n > cap {
            continue;
        }
        let limits: Vec<u64> = std::iter::repeat_n(3, x as usize).chain(std::iter::repeat_n(5, y as usize)).collect();
        let mut chosen: Vec<Vec<u64>> = Vec::new();
        seq_rec(&limits, &target, &mut chosen, cap, &mut out);
    }
    Ok(out.into_iter().map(|f| f.into_iter().map(MonoidElem::Seq).collect()).collect())
}

fn seq_rec(limits: &[u64], rest: &[u64], chosen: &mut Vec<Vec<u64>>, cap: u64, out: &mut BTreeSet<Vec<SeqElem>>) {
    let k = chosen.len();
    if k == limits.len() {
        if rest.iter().any(|r| r % 7 != 0) {
            return;
        }
        let sevens: u64 = rest.iter().map(|r| r / 7).sum();
        if sevens + limits.len() as u64 > cap || (limits.is_empty() && sevens == 0) {
            return;
        }
        let mut atoms = Vec::new();
        for (li, v) in limits.iter().zip(chosen.iter()) {
            atoms.push(SeqElem::new(*li, v.iter().enumerate().map(|(i, &a)| (i as u32 + 1, a))));
        }
        for (i, r) in rest.iter().enumerate() {
            for _ in 0..r / 7 {
                atoms.push(SeqElem::unit_vec(i as u32 + 1, 7));
            }
        }
        atoms.sort();
        out.insert(atoms);
        return;
    }
    let w = rest.len();
    let mut v = vec![0u64; w];
    loop {
        let ok = v.iter().zip(rest).all(|(a, r)| a <= r)
            && (k == 0 || limits[k] != limits[k - 1] || v <= chosen[k - 1]);
        if ok {
            let next: Vec<u64> = rest.iter().zip(&v).map(|(r, a)| r - a).collect();
            chosen.push(v.clone());
            seq_rec(limits, &next, chosen, cap, out);
            chosen.pop();
        }
        let mut i = 0;
        while i < w && v[i] == 6 {
            v[i] = 0;
            i += 1;
        }
        if i == w {
            break;
        }
        v[i] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qplus_has_no_atoms() {
        assert!(atoms_up_to(MonoidId::QPlus, &SearchBounds::default()).unwrap().is_empty());
        let one = MonoidElem::QPlus(rat(1, 1));
        assert!(monoid_factorizations(MonoidId::QPlus, &one, &SearchBounds::default()).unwrap().is_empty());
    }

    #[test]
    fn appendix_a_small_universe() {
        let b = SearchBounds { index_bound: 2, entry_bound: 14, ..SearchBounds::default() };
        let atoms = atoms_up_to(MonoidId::AppendixA, &b).unwrap();
        let has = |s: SeqElem| atoms.contains(&MonoidElem::Seq(s));
        assert!(has(SeqElem::unit_vec(1, 7)));
        assert!(has(SeqElem::unit_vec(2, 7)));
        assert!(!has(SeqElem::unit_vec(1, 14)));
        assert!(has(SeqElem::constant(3)));
    }

    #[test]
    fn section_four_atoms() {
        let b = SearchBounds { index_bound: 2, max_multiset: 3, ..SearchBounds::default() };
        let atoms = atoms_up_to(MonoidId::SectionFour, &b).unwrap();
        let expect: Vec<MonoidElem> = {
            let mut v = vec![
                MonoidElem::S4(S4Gen::Alpha.value()),
                MonoidElem::S4(S4Gen::paired(1, 1).unwrap().value()),
                MonoidElem::S4(S4Gen::paired(2, 1).unwrap().value()),
            ];
            v.sort();
            v
        };
        assert_eq!(atoms, expect);
    }

    #[test]
    fn factorization_examples() {
        let b = SearchBounds::default();
        let a = MonoidElem::Seq(SeqElem::unit_vec(1, 7));
        assert_eq!(monoid_factorizations(MonoidId::AppendixA, &a, &b).unwrap(), vec![vec![a.clone()]]);
        let seven = MonoidElem::Seq(SeqElem::new(7, [(1, 14)]));
        assert!(monoid_factorizations(MonoidId::AppendixA, &seven, &b).unwrap().is_empty());
        let six = MonoidElem::Seq(SeqElem::constant(6));
        let fs = monoid_factorizations(MonoidId::AppendixA, &six, &SearchBounds { index_bound: 1, ..b.clone() }).unwrap();
        // (a, 3) + (6 - a, 3) at index 1, a in 0..=3
        assert_eq!(fs.len(), 4);
        let t = MonoidElem::S4(S4Elem::new(rat(1, 1), rat(1, 2)));
        let fs = monoid_factorizations(MonoidId::SectionFour, &t, &b).unwrap();
        assert_eq!(fs, vec![vec![MonoidElem::S4(S4Gen::paired(1, 1).unwrap().value()); 3]]);
    }
}
