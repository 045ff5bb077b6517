use std::collections::BTreeMap;

use serde::Serialize;

use super::PropertyId::{self, *};
use super::{implies, EDGES};
use crate::domains::{
    self, check_antimatter, check_semi_atomic, check_semi_furstenberg, Domain, DomainId, GenPoly,
};
use crate::error::{invalid, Result};
use crate::exact::Rat;
use crate::verdict::{Basis, Certificate, Outcome, Rule, SampleVerdict, SearchBounds, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Yes,
    No,
    Open,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRow {
    pub domain: DomainId,
    pub verdicts: BTreeMap<PropertyId, Verdict>,
    pub expected: BTreeMap<PropertyId, Expected>,
}

impl ClassificationRow {
    pub fn verdict(&self, p: PropertyId) -> &Verdict {
        &self.verdicts[&p]
    }

    pub fn expected(&self, p: PropertyId) -> Expected {
        self.expected.get(&p).copied().unwrap_or(Expected::Open)
    }

    /// A "yes" needs Holds and a "no" needs Refuted, each backed by more than an empty search.
    pub fn agrees(&self, p: PropertyId) -> bool {
        let v = self.verdict(p);
        let backed = !matches!(v.certificate, Certificate::None | Certificate::SearchExhausted { .. });
        match self.expected(p) {
            Expected::Open => true,
            Expected::Yes => v.is_holds() && backed,
            Expected::No => v.is_refuted() && backed,
        }
    }

    pub fn disagreements(&self) -> Vec<PropertyId> {
        PropertyId::ALL.into_iter().filter(|&p| !self.agrees(p)).collect()
    }
}

/// Claims made for each construction, closed under the arrows.
pub fn expected_for(d: DomainId) -> BTreeMap<PropertyId, Expected> {
    use Expected::{No, Yes};
    let claims: &[(PropertyId, Expected)] = match d {
        DomainId::MaS4 => &[(SemiAtomic, Yes), (Furstenberg, No)],
        DomainId::D12 => &[(SemiFurstenberg, Yes), (AlmostFurstenberg, Yes), (Furstenberg, No)],
        DomainId::D23 => &[(Furstenberg, Yes), (QuasiAtomic, No)],
        DomainId::D24 => &[(QuasiFurstenberg, No), (NotAntimatter, Yes)],
        DomainId::D8 => &[(AlmostAtomic, Yes), (Atomic, No)],
        DomainId::D9 => &[(QuasiAtomic, Yes), (AlmostAtomic, No)],
        DomainId::MaAppA => &[(SemiAtomic, Yes), (Atomic, No)],
        DomainId::AppB => &[(AlmostAtomic, Yes), (Furstenberg, No)],
        DomainId::MaQPlus => &[(NotAntimatter, No)],
    };
    let mut out: BTreeMap<PropertyId, Expected> = PropertyId::ALL.into_iter().map(|p| (p, Expected::Open)).collect();
    for &(p, e) in claims {
        for q in PropertyId::ALL {
            match e {
                Yes if implies(p, q) => {
                    out.insert(q, Yes);
                }
                No if implies(q, p) => {
                    out.insert(q, No);
                }
                _ => {}
            }
        }
    }
    out
}

fn per_sample(samples: &[GenPoly], b: &SearchBounds, mut f: impl FnMut(&GenPoly) -> Result<Verdict>) -> Result<Verdict> {
    let mut out = Vec::new();
    let mut outcome = Outcome::Holds;
    for s in samples {
        let v = f(s)?;
        match v.outcome {
            Outcome::Refuted => {
                return Ok(Verdict {
                    outcome: Outcome::Refuted,
                    basis: v.basis,
                    certificate: Certificate::PerSample { samples: vec![SampleVerdict { sample: s.clone(), verdict: v }] },
                    bounds: Some(b.clone()),
                })
            }
            Outcome::UnknownAtBound => outcome = Outcome::UnknownAtBound,
            Outcome::Holds => {}
        }
        out.push(SampleVerdict { sample: s.clone(), verdict: v });
    }
    Ok(Verdict { outcome, basis: Basis::AtBound, certificate: Certificate::PerSample { samples: out }, bounds: Some(b.clone()) })
}

/// A failure for one candidate `beta` says nothing about other choices.
fn only_holds(v: Verdict, b: &SearchBounds) -> Verdict {
    if v.is_holds() {
        v
    } else {
        Verdict::unknown(b, v.certificate)
    }
}

/// Fill unknown verdicts along the arrows and their contrapositives until nothing changes.
fn fill_implications(vs: &mut BTreeMap<PropertyId, Verdict>) {
    loop {
        let mut changed = false;
        for &(p, q) in &EDGES {
            if vs[&p].is_holds() && vs[&q].is_unknown() {
                let v = Verdict::holds(Basis::AtBound, Certificate::Implied { from: p, to: q, contrapositive: false });
                vs.insert(q, v);
                changed = true;
            }
            if vs[&q].is_refuted() && vs[&p].is_unknown() {
                let v = Verdict::refuted(Basis::AtBound, Certificate::Implied { from: q, to: p, contrapositive: true });
                vs.insert(p, v);
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

pub fn classify_domain(d: &Domain, bounds: &SearchBounds, samples: &[GenPoly]) -> Result<ClassificationRow> {
    if samples.is_empty() {
        return invalid("empty sample universe");
    }
    for s in samples {
        if domains::is_unit(d, s)? {
            return invalid(format!("sample {s} is a unit"));
        }
    }
    let b = bounds;
    let mut vs = BTreeMap::new();
    vs.insert(Atomic, per_sample(samples, b, |f| domains::is_atomic_elem(d, f, b))?);
    let sa = match domains::semi_atomic_candidate(d) {
        Some(beta) => only_holds(check_semi_atomic(d, &beta, samples, b)?, b),
        None => Verdict::unknown(b, Certificate::None),
    };
    vs.insert(SemiAtomic, sa);
    vs.insert(AlmostAtomic, per_sample(samples, b, |f| domains::almost_atomic_witness_search(d, f, b))?);
    vs.insert(QuasiAtomic, per_sample(samples, b, |f| domains::quasi_atomic_witness_search(d, f, b))?);
    vs.insert(Furstenberg, per_sample(samples, b, |f| domains::furstenberg_divisor(d, f, b))?);
    let sf = match domains::semi_furstenberg_candidate(d) {
        Some(beta) => only_holds(check_semi_furstenberg(d, &beta, samples, b)?, b),
        None => Verdict::unknown(b, Certificate::None),
    };
    vs.insert(SemiFurstenberg, sf);
    vs.insert(AlmostFurstenberg, per_sample(samples, b, |f| domains::check_almost_furstenberg(d, f, b))?);
    vs.insert(QuasiFurstenberg, per_sample(samples, b, |f| domains::check_quasi_furstenberg(d, f, b))?);
    let anti = check_antimatter(d, b);
    let na = Verdict {
        outcome: match anti.outcome {
            Outcome::Holds => Outcome::Refuted,
            Outcome::Refuted => Outcome::Holds,
            Outcome::UnknownAtBound => Outcome::UnknownAtBound,
        },
        ..anti
    };
    vs.insert(NotAntimatter, na);
    fill_implications(&mut vs);
    Ok(ClassificationRow { domain: d.id, verdicts: vs, expected: expected_for(d.id) })
}

/// Every domain, each on its own thread, over its seeded sample universe. Row order follows `DomainId::ALL`.
pub fn classify_all(bounds: &SearchBounds, seed: u64, truncation: &Rat) -> Result<Vec<ClassificationRow>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = DomainId::ALL
            .into_iter()
            .map(|id| {
                s.spawn(move || {
                    let d = Domain::with_truncation(id, truncation.clone());
                    classify_domain(&d, bounds, &domains::sample_universe(&d, seed, bounds))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("classification thread panicked")).collect()
    })
}

/// Holds iff no row has `p` holding and `q` refuted for `p` implying `q`.
pub fn dag_consistency(rows: &[ClassificationRow]) -> Verdict {
    let mut explored = 0u64;
    for row in rows {
        for p in PropertyId::ALL {
            for q in PropertyId::ALL {
                if p == q || !implies(p, q) {
                    continue;
                }
                explored += 1;
                let (vp, vq) = (row.verdicts.get(&p), row.verdicts.get(&q));
                if vp.is_some_and(Verdict::is_holds) && vq.is_some_and(Verdict::is_refuted) {
                    return Verdict::structural(
                        Outcome::Refuted,
                        Rule::ImplicationViolated,
                        format!("{}: {p} -> {q}", row.domain),
                        format!("{p} holds but {q} is refuted"),
                    );
                }
            }
        }
    }
    Verdict::holds(Basis::Exhaustive, Certificate::SearchExhausted { explored })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum SeparationStatus {
    Witnessed { domain: DomainId },
    /// No construction is known; never filled in from computed rows.
    Open,
    /// The construction exists but is not implemented.
    NotComputed,
    /// No computed row shows the separation.
    NotWitnessed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub item: &'static str,
    pub holds: PropertyId,
    pub fails: PropertyId,
    pub status: SeparationStatus,
    /// Rows that would witness an open item; expected to stay empty.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conflicting: Vec<DomainId>,
}

pub fn separation_table(rows: &[ClassificationRow]) -> Vec<Separation> {
    let items: [(&str, PropertyId, PropertyId); 6] = [
        ("i", SemiAtomic, Furstenberg),
        ("ii", AlmostAtomic, SemiFurstenberg),
        ("iii", QuasiAtomic, AlmostFurstenberg),
        ("iv", SemiFurstenberg, AlmostFurstenberg),
        ("v", Furstenberg, QuasiAtomic),
        ("vi", NotAntimatter, QuasiFurstenberg),
    ];
    items
        .into_iter()
        .map(|(item, holds, fails)| {
            let witnesses: Vec<DomainId> = rows
                .iter()
                .filter(|r| r.verdict(holds).is_holds() && r.verdict(fails).is_refuted())
                .map(|r| r.domain)
                .collect();
            let (status, conflicting) = match item {
                "iii" | "iv" => (SeparationStatus::Open, witnesses),
                "ii" => (SeparationStatus::NotComputed, witnesses),
                _ => match witnesses.first() {
                    Some(&domain) => (SeparationStatus::Witnessed { domain }, Vec::new()),
                    None => (SeparationStatus::NotWitnessed, Vec::new()),
                },
            };
            Separation { item, holds, fails, status, conflicting }
        })
        .collect()
}
