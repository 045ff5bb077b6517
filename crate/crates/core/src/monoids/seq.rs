//! Eventually constant sequences of nonnegative integers, and the monoid generated by
//! (i) nonzero sequences whose entries are all multiples of 7 and (ii) sequences with limit 3 or 5.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::poly::Exponent;
use crate::verdict::{Basis, Certificate, Outcome, Rule, SearchBounds, Verdict};

/// Sequence stored as its limit plus the finitely many entries that differ from it (indices from 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct SeqElem {
    limit: u64,
    dev: BTreeMap<u32, u64>,
}

impl SeqElem {
    pub fn new(limit: u64, entries: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut s = SeqElem { limit, dev: BTreeMap::new() };
        for (i, a) in entries {
            s.set(i, a);
        }
        s
    }

    pub fn constant(limit: u64) -> Self {
        SeqElem { limit, dev: BTreeMap::new() }
    }

    /// `c * e_n`.
    pub fn unit_vec(n: u32, c: u64) -> Self {
        SeqElem::new(0, [(n, c)])
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn get(&self, i: u32) -> u64 {
        self.dev.get(&i).copied().unwrap_or(self.limit)
    }

    pub fn set(&mut self, i: u32, a: u64) {
        assert!(i >= 1, "sequence indices start at 1");
        if a == self.limit {
            self.dev.remove(&i);
        } else {
            self.dev.insert(i, a);
        }
    }

    /// Indices whose entry differs from the limit.
    pub fn deviations(&self) -> &BTreeMap<u32, u64> {
        &self.dev
    }

    pub fn max_index(&self) -> u32 {
        self.dev.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.limit == 0 && self.dev.is_empty()
    }

    /// Largest entry.
    pub fn max_entry(&self) -> u64 {
        self.dev.values().copied().fold(self.limit, u64::max)
    }

    pub fn entries_all(&self, f: impl Fn(u64) -> bool) -> bool {
        f(self.limit) && self.dev.values().all(|&a| f(a))
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut s = SeqElem::constant(self.limit + o.limit);
        for &i in self.dev.keys().chain(o.dev.keys()) {
            s.set(i, self.get(i) + o.get(i));
        }
        s
    }

    /// Componentwise difference when no entry goes negative.
    pub fn minus(&self, o: &Self) -> Option<Self> {
        let mut s = SeqElem::constant(self.limit.checked_sub(o.limit)?);
        for &i in self.dev.keys().chain(o.dev.keys()) {
            s.set(i, self.get(i).checked_sub(o.get(i))?);
        }
        Some(s)
    }

    pub fn leq(&self, o: &Self) -> bool {
        o.minus(self).is_some()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a sequence: {s:?}"));
        let (l, rest) = s.trim().split_once(';').ok_or_else(bad)?;
        let limit: u64 = l.trim().strip_prefix("limit=").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let body = rest.trim().strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(bad)?;
        let mut out = SeqElem::constant(limit);
        for item in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (i, a) = item.split_once(':').ok_or_else(bad)?;
            let i: u32 = i.trim().parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            out.set(i, a.trim().parse().map_err(|_| bad())?);
        }
        Ok(out)
    }
}

impl fmt::Display for SeqElem {
    /// `limit=L; {i:a,...}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "limit={}; {{", self.limit)?;
        for (k, (i, a)) in self.dev.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}:{a}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SeqElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Exponent for SeqElem {
    fn origin() -> Self {
        SeqElem::default()
    }
    fn is_origin(&self) -> bool {
        SeqElem::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self.plus(o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.minus(o)
    }
    fn monomial_text(&self) -> String {
        format!("x^({self})")
    }
    fn parse_monomial(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("x^(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("not a monomial: {s:?}")))?;
        SeqElem::parse(inner)
    }
}

/// Limits reachable with at least one generator of type (ii): `7a + 3x + 5y` with `x + y >= 1`.
pub fn limit_has_flex(l: u64) -> bool {
    matches!(l, 3 | 5 | 6) || l >= 8
}

/// `(x, y)` with `3x + 5y = l` and `x` smallest, if any.
pub fn three_five(l: u64) -> Option<(u64, u64)> {
    (0..=l / 3).find(|x| (l - 3 * x) % 5 == 0).map(|x| (x, (l - 3 * x) / 5))
}

/// Membership test on the raw data.
pub fn seq_in_s(t: &SeqElem) -> bool {
    let l = t.limit;
    if limit_has_flex(l) {
        true
    } else if l == 0 || l == 7 {
        t.entries_all(|a| a % 7 == 0)
    } else {
        false
    }
}

fn generator_kind(g: &SeqElem) -> bool {
    !g.is_zero() && (g.entries_all(|a| a % 7 == 0) || matches!(g.limit, 3 | 5))
}

/// Sum of summands equals target and every summand is a generator (or an atom when `atoms`).
pub fn check_seq_sum(target: &SeqElem, summands: &[SeqElem], atoms: bool) -> bool {
    let sum = summands.iter().fold(SeqElem::default(), |acc, s| acc.plus(s));
    sum == *target
        && summands.iter().all(|s| if atoms { seq_atom_characterization(s).unwrap_or(false) } else { generator_kind(s) })
}

/// Decide membership in the monoid; the certificate is an explicit list of generators.
pub fn seq_membership(t: &SeqElem) -> Verdict {
    let l = t.limit;
    let summands = if t.is_zero() {
        Vec::new()
    } else if limit_has_flex(l) {
        // One flexible generator of limit 3 or 5 carries every deviation; the rest are constants
        // zeroed at the deviating indices.
        let (mut sevens, mut rest) = (0, l);
        while three_five(rest).is_none() {
            rest -= 7;
            sevens += 1;
        }
        let (x, y) = three_five(rest).unwrap();
        let mut limits: Vec<u64> = std::iter::repeat_n(3, x as usize)
            .chain(std::iter::repeat_n(5, y as usize))
            .chain(std::iter::repeat_n(7, sevens))
            .collect();
        let flex_limit = limits.remove(0);
        let mut flex = SeqElem::constant(flex_limit);
        for (&i, &a) in &t.dev {
            flex.set(i, a);
        }
        let mut out = vec![flex];
        for lim in limits {
            out.push(SeqElem::new(lim, t.dev.keys().map(|&i| (i, 0))));
        }
        out
    } else if (l == 0 || l == 7) && t.entries_all(|a| a % 7 == 0) {
        vec![t.clone()]
    } else if l == 0 || l == 7 {
        return Verdict::structural(
            Outcome::Refuted,
            Rule::EntriesNotMultiplesOfSeven,
            t,
            format!("limit {l} forces generators of type (i), whose entries are multiples of 7"),
        );
    } else {
        return Verdict::structural(
            Outcome::Refuted,
            Rule::LimitUnreachable,
            t,
            format!("limit {l} is not a sum of 7s, 3s and 5s"),
        );
    };
    debug_assert!(check_seq_sum(t, &summands, false));
    Verdict::holds(Basis::Exhaustive, Certificate::SeqSum { target: t.clone(), summands })
}

/// Closed form atom test: `7 e_n`, or limit 3 or 5 with every entry below 7.
pub fn seq_atom_characterization(t: &SeqElem) -> Result<bool> {
    if !seq_in_s(t) || t.is_zero() {
        return invalid(format!("{t} is not a nonzero element of the monoid"));
    }
    let seven_e = t.limit == 0 && t.dev.len() == 1 && t.dev.values().all(|&a| a == 7);
    let small = matches!(t.limit, 3 | 5) && t.max_entry() < 7;
    Ok(seven_e || small)
}

/// Write `t` as a sum of atoms, or refute that this is possible (limit 7).
pub fn seq_in_m_span(t: &SeqElem, _bounds: &SearchBounds) -> Result<Verdict> {
    if !seq_in_s(t) {
        return invalid(format!("{t} is not in the monoid"));
    }
    let l = t.limit;
    let mut atoms = Vec::new();
    if l == 7 {
        return Ok(Verdict::structural(
            Outcome::Refuted,
            Rule::SevenNotThreeXPlusFiveY,
            t,
            "atoms have limit 0, 3 or 5 and 7 is not 3x + 5y",
        ));
    } else if l == 0 {
        for (&i, &a) in &t.dev {
            atoms.extend(std::iter::repeat_n(SeqElem::unit_vec(i, 7), (a / 7) as usize));
        }
    } else if l == 3 || l == 5 {
        let mut rest = t.clone();
        for (&i, &a) in &t.dev {
            for _ in 0..a / 7 {
                atoms.push(SeqElem::unit_vec(i, 7));
            }
            rest.set(i, a % 7);
        }
        atoms.push(rest);
    } else {
        let (x, y) = three_five(l).expect("limits other than 1, 2, 4, 7 split as 3x + 5y");
        let n = x + y;
        let mut parts: Vec<SeqElem> = std::iter::repeat_n(3, x as usize)
            .chain(std::iter::repeat_n(5, y as usize))
            .map(SeqElem::constant)
            .collect();
        for (&i, &v) in &t.dev {
            let k = v.saturating_sub(6 * n).div_ceil(7);
            for _ in 0..k {
                atoms.push(SeqElem::unit_vec(i, 7));
            }
            let mut r = v - 7 * k;
            for p in parts.iter_mut() {
                let take = r.min(6);
                p.set(i, take);
                r -= take;
            }
            debug_assert_eq!(r, 0);
        }
        atoms.extend(parts);
    }
    atoms.sort();
    debug_assert!(check_seq_sum(t, &atoms, true));
    Ok(Verdict::holds(Basis::Structural(Rule::SumOfAtomsWitness), Certificate::SeqSum { target: t.clone(), summands: atoms }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert!(seq_membership(&SeqElem::unit_vec(1, 7)).is_holds());
        assert!(seq_membership(&SeqElem::constant(3)).is_holds());
        assert!(seq_membership(&SeqElem::unit_vec(1, 1)).is_refuted());
        assert!(seq_membership(&SeqElem::new(4, [(2, 9)])).is_refuted());
        let t = SeqElem::new(17, [(1, 0), (3, 40)]);
        match seq_membership(&t).certificate {
            Certificate::SeqSum { summands, .. } => assert!(check_seq_sum(&t, &summands, false)),
            _ => panic!(),
        }
    }

    #[test]
    fn atom_examples() {
        assert!(seq_atom_characterization(&SeqElem::unit_vec(3, 7)).unwrap());
        assert!(seq_atom_characterization(&SeqElem::new(5, [(1, 6), (4, 0)])).unwrap());
        assert!(!seq_atom_characterization(&SeqElem::new(3, [(2, 9)])).unwrap());
        assert!(seq_atom_characterization(&SeqElem::unit_vec(1, 1)).is_err());
    }

    #[test]
    fn span_examples() {
        let b = SearchBounds::default();
        let six = SeqElem::new(6, [(1, 20), (2, 0)]);
        assert!(seq_in_m_span(&six, &b).unwrap().is_holds());
        assert!(seq_in_m_span(&SeqElem::new(7, [(1, 14)]), &b).unwrap().is_refuted());
        match seq_in_m_span(&SeqElem::unit_vec(1, 14), &b).unwrap().certificate {
            Certificate::SeqSum { summands, .. } => assert_eq!(summands, vec![SeqElem::unit_vec(1, 7); 2]),
            _ => panic!(),
        }
    }

    #[test]
    fn text() {
        let t = SeqElem::new(3, [(1, 5), (4, 0)]);
        assert_eq!(t.to_string(), "limit=3; {1:5,4:0}");
        assert_eq!(SeqElem::parse(&t.to_string()).unwrap(), t);
    }
}
