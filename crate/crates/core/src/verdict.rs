//! Three-valued answers with checkable certificates.

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::checker::PropertyId;
use crate::domains::GenPoly;
use crate::exact::{fmt_rat, rat_int, Rat};
use crate::monoids::{S4Gen, SeqElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Refuted,
    UnknownAtBound,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Refuted => "refuted",
            Outcome::UnknownAtBound => "unknown_at_bound",
        })
    }
}

/// Proof rules behind structural (closed form) verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    // S4 membership
    NegativeAlphaCoefficient,
    EvenAlphaDenominator,
    SquareInAlphaDenominator,
    AlphaPartTooSmall,
    NegativeResidue,
    NonDyadicResidue,
    ResidueNeedsMoreAlpha,
    PrimeBeyondBound,
    // sequence monoid
    LimitUnreachable,
    EntriesNotMultiplesOfSeven,
    SevenNotThreeXPlusFiveY,
    // monoid algebras
    AntimatterHalving,
    ExponentIsAtom,
    ExponentNotAtom,
    ExponentInAtomSpan,
    DyadicExponentNoAtomBelow,
    SumOfAtomsWitness,
    // polynomial domains
    NonIntegralMinCoefficient,
    IrrationalMinCoefficient,
    ZeroConstantTermPersists,
    PrimeConstant,
    ConstantOneRationallyIrreducible,
    YTermWithoutConstant,
    NegativeMinimalExponent,
    NoYTermOrConstant,
    MonomialHasNoIrreducibleDivisor,
    IrreducibleHasNonzeroConstant,
    PrimeDividesConstantTerm,
    AllIrreduciblesOutsideIdeal,
    DoubledWitness,
    // classification
    ImplicationViolated,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        f.write_str(s.as_str().unwrap())
    }
}

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "rule")]
pub enum Basis {
    /// Closed form characterization or structural argument.
    Structural(Rule),
    /// Explicit construction that re-verifies exactly.
    Witness,
    /// A finite search that covered every possibility.
    Exhaustive,
    /// Valid only over the bounded search space or sample.
    AtBound,
}

/// All search cutoffs in one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    #[serde(serialize_with = "ser_rat")]
    pub max_degree: Rat,
    pub max_denominator: u32,
    pub max_coeff_height: u32,
    pub max_factors: u32,
    pub max_multiset: u32,
    pub index_bound: u32,
    pub entry_bound: u32,
    pub limit_bound: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_degree: rat_int(6),
            max_denominator: 4,
            max_coeff_height: 12,
            max_factors: 4,
            max_multiset: 6,
            index_bound: 2,
            entry_bound: 14,
            limit_bound: 5,
        }
    }
}

pub(crate) fn ser_rat<S: Serializer>(q: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(q))
}

fn ser_big<S: Serializer>(q: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenCount {
    pub generator: S4Gen,
    #[serde(serialize_with = "ser_big")]
    pub count: BigInt,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    None,
    /// `target = sum count * generator` in the section-four monoid.
    S4Sum { target: crate::monoids::S4Elem, terms: Vec<GenCount> },
    /// `target = sum of summands` in the sequence monoid.
    SeqSum { target: SeqElem, summands: Vec<SeqElem> },
    /// Closed form rule applied to a subject.
    Structural { rule: Rule, subject: String, detail: String },
    /// `left * right = target * unit` (unit 1 when absent), both non-units.
    Split {
        target: GenPoly,
        left: GenPoly,
        right: GenPoly,
        #[serde(skip_serializing_if = "Option::is_none")]
        unit: Option<GenPoly>,
    },
    /// `target * unit = product of factors`, factors irreducible.
    Factorization { target: GenPoly, unit: GenPoly, factors: Vec<GenPoly> },
    /// `divisor * cofactor = target * unit`.
    Divisor { target: GenPoly, divisor: GenPoly, cofactor: GenPoly, unit: GenPoly },
    /// `target * product(multiplier)` is atomic; `irreducible_multiplier` asks that each multiplier
    /// factor be irreducible.
    Multiplier {
        target: GenPoly,
        multiplier: Vec<GenPoly>,
        irreducible_multiplier: bool,
        product: Box<Certificate>,
    },
    /// Irreducible `pi` divides `alpha * product(others)` but not `product(others)`.
    Furstenberg {
        alpha: GenPoly,
        others: Vec<GenPoly>,
        irreducible_others: bool,
        pi: GenPoly,
        division: Box<Certificate>,
    },
    /// A verdict for each sample element.
    PerSample { samples: Vec<SampleVerdict> },
    /// Filled in from another verdict through an implication edge (or its contrapositive).
    Implied { from: PropertyId, to: PropertyId, contrapositive: bool },
    /// A search that found nothing.
    SearchExhausted { explored: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleVerdict {
    pub sample: GenPoly,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub basis: Basis,
    pub certificate: Certificate,
    pub bounds: Option<SearchBounds>,
}

impl Verdict {
    pub fn holds(basis: Basis, certificate: Certificate) -> Self {
        Verdict { outcome: Outcome::Holds, basis, certificate, bounds: None }
    }

    pub fn refuted(basis: Basis, certificate: Certificate) -> Self {
        Verdict { outcome: Outcome::Refuted, basis, certificate, bounds: None }
    }

    pub fn unknown(bounds: &SearchBounds, certificate: Certificate) -> Self {
        Verdict {
            outcome: Outcome::UnknownAtBound,
            basis: Basis::AtBound,
            certificate,
            bounds: Some(bounds.clone()),
        }
    }

    pub fn structural(outcome: Outcome, rule: Rule, subject: impl fmt::Display, detail: impl Into<String>) -> Self {
        Verdict {
            outcome,
            basis: Basis::Structural(rule),
            certificate: Certificate::Structural { rule, subject: subject.to_string(), detail: detail.into() },
            bounds: None,
        }
    }

    pub fn with_bounds(mut self, bounds: &SearchBounds) -> Self {
        self.bounds = Some(bounds.clone());
        self
    }

    pub fn is_holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn is_refuted(&self) -> bool {
        self.outcome == Outcome::Refuted
    }

    pub fn is_unknown(&self) -> bool {
        self.outcome == Outcome::UnknownAtBound
    }
}
