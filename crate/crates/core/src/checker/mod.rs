//! The eight subatomic properties (plus "not antimatter"), their implication graph, per-domain
//! classification and the separation table.

mod classify;
mod report;
pub mod verify;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use classify::{classify_all, classify_domain, dag_consistency, expected_for, separation_table, ClassificationRow, Expected, Separation, SeparationStatus};
pub use report::{matrix_report, render, row_records, Format, MatrixReport, Record};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyId {
    Atomic,
    SemiAtomic,
    AlmostAtomic,
    QuasiAtomic,
    Furstenberg,
    SemiFurstenberg,
    AlmostFurstenberg,
    QuasiFurstenberg,
    NotAntimatter,
}

use PropertyId::*;

impl PropertyId {
    pub const ALL: [PropertyId; 9] = [
        Atomic,
        SemiAtomic,
        AlmostAtomic,
        QuasiAtomic,
        Furstenberg,
        SemiFurstenberg,
        AlmostFurstenberg,
        QuasiFurstenberg,
        NotAntimatter,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Atomic => "atomic",
            SemiAtomic => "semi_atomic",
            AlmostAtomic => "almost_atomic",
            QuasiAtomic => "quasi_atomic",
            Furstenberg => "furstenberg",
            SemiFurstenberg => "semi_furstenberg",
            AlmostFurstenberg => "almost_furstenberg",
            QuasiFurstenberg => "quasi_furstenberg",
            NotAntimatter => "not_antimatter",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property {s:?}")))
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The arrows between implemented properties.
pub const EDGES: [(PropertyId, PropertyId); 12] = [
    (Atomic, SemiAtomic),
    (SemiAtomic, AlmostAtomic),
    (AlmostAtomic, QuasiAtomic),
    (Atomic, Furstenberg),
    (SemiAtomic, SemiFurstenberg),
    (AlmostAtomic, AlmostFurstenberg),
    (QuasiAtomic, QuasiFurstenberg),
    (Furstenberg, SemiFurstenberg),
    (Furstenberg, AlmostFurstenberg),
    (SemiFurstenberg, QuasiFurstenberg),
    (AlmostFurstenberg, QuasiFurstenberg),
    (QuasiFurstenberg, NotAntimatter),
];

/// Whether `p` implies `q` along the arrows (reflexive, transitive).
pub fn implies(p: PropertyId, q: PropertyId) -> bool {
    let mut seen = vec![p];
    let mut i = 0;
    while i < seen.len() {
        let cur = seen[i];
        if cur == q {
            return true;
        }
        for &(a, b) in &EDGES {
            if a == cur && !seen.contains(&b) {
                seen.push(b);
            }
        }
        i += 1;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dag_is_acyclic_and_closed() {
        for &(a, b) in &EDGES {
            assert!(implies(a, b));
            assert!(!implies(b, a), "{a} <-> {b}");
        }
        assert!(implies(Atomic, NotAntimatter));
        assert!(!implies(SemiFurstenberg, AlmostFurstenberg));
        assert!(!implies(QuasiAtomic, AlmostFurstenberg));
        for p in PropertyId::ALL {
            assert_eq!(PropertyId::from_tag(p.tag()).unwrap(), p);
        }
    }
}
