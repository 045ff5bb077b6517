//! The per-domain contract and the generic searches built on it.

use super::{appb, d12, d23, d24, headpoly, ma, Domain, DomainId, GenPoly};
use crate::exact::{QLin, Rat};
use crate::verdict::{Basis, Certificate, Outcome, SampleVerdict, SearchBounds, Verdict};

pub(crate) trait Ops {
    fn contains(&self, f: &GenPoly) -> bool;
    fn is_unit(&self, f: &GenPoly) -> bool;
    fn one(&self) -> GenPoly;
    fn mul(&self, a: &GenPoly, b: &GenPoly) -> GenPoly;
    /// `(h, u)` with `g * h = f * u`; `None` means `g` does not divide `f`.
    fn divide(&self, f: &GenPoly, g: &GenPoly) -> Option<(GenPoly, GenPoly)>;
    fn irreducible(&self, f: &GenPoly, b: &SearchBounds) -> Verdict;
    fn atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict;
    fn divisors(&self, f: &GenPoly, b: &SearchBounds) -> Vec<GenPoly>;
    fn furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict;
    fn almost_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict;
    fn antimatter(&self, b: &SearchBounds) -> Verdict;
    fn samples(&self, seed: u64, b: &SearchBounds) -> Vec<GenPoly>;

    /// Whether `divide` returning `None` is a proof of non-divisibility.
    fn exact_divisibility(&self) -> bool {
        true
    }

    fn quasi_atomic(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        let v = self.almost_atomic(f, b);
        if v.is_holds() {
            v
        } else {
            Verdict::unknown(b, v.certificate)
        }
    }

    fn semi_furstenberg_at(&self, beta: &GenPoly, alpha: &GenPoly, b: &SearchBounds) -> Verdict {
        let p = self.mul(alpha, beta);
        if self.is_unit(&p) {
            return Verdict::unknown(b, Certificate::None);
        }
        let mut cands = Vec::new();
        if let Certificate::Divisor { divisor, .. } = self.furstenberg(&p, b).certificate {
            cands.push(divisor);
        }
        cands.extend(self.divisors(&p, b));
        for pi in cands {
            if self.divide(beta, &pi).is_some() || !self.exact_divisibility() {
                continue;
            }
            if !self.irreducible(&pi, b).is_holds() {
                continue;
            }
            if let Some(div) = divisor_cert(self, &p, &pi) {
                return Verdict::holds(
                    Basis::Witness,
                    Certificate::Furstenberg {
                        alpha: alpha.clone(),
                        others: vec![beta.clone()],
                        irreducible_others: false,
                        pi,
                        division: Box::new(div),
                    },
                );
            }
        }
        Verdict::unknown(b, Certificate::None)
    }

    fn almost_furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        from_furstenberg(f, self.furstenberg(f, b), b)
    }

    fn quasi_furstenberg(&self, f: &GenPoly, b: &SearchBounds) -> Verdict {
        self.almost_furstenberg(f, b)
    }

    fn semi_atomic_candidate(&self) -> Option<GenPoly> {
        None
    }

    fn semi_furstenberg_candidate(&self) -> Option<GenPoly> {
        self.semi_atomic_candidate()
    }
}

pub(crate) fn ops(d: &Domain) -> Box<dyn Ops> {
    match d.id {
        DomainId::D8 => Box::new(headpoly::HeadPoly::<Rat>::new()),
        DomainId::D9 => Box::new(headpoly::HeadPoly::<QLin>::new()),
        DomainId::D23 => Box::new(d23::D23),
        DomainId::D24 => Box::new(d24::D24),
        DomainId::D12 => Box::new(d12::D12::new(d.truncation.clone())),
        DomainId::MaQPlus => Box::new(ma::Ma::QPlus),
        DomainId::MaS4 => Box::new(ma::Ma::S4),
        DomainId::MaAppA => Box::new(ma::Ma::AppA),
        DomainId::AppB => Box::new(appb::AppB),
    }
}

/// Divisor certificate for `g | f`, when it divides.
pub(crate) fn divisor_cert<O: Ops + ?Sized>(o: &O, f: &GenPoly, g: &GenPoly) -> Option<Certificate> {
    o.divide(f, g).map(|(h, u)| Certificate::Divisor {
        target: f.clone(),
        divisor: g.clone(),
        cofactor: h,
        unit: u,
    })
}

/// An irreducible divisor with no extra factors is a witness for every Furstenberg variant.
pub(crate) fn from_furstenberg(f: &GenPoly, v: Verdict, b: &SearchBounds) -> Verdict {
    match (&v.outcome, v.certificate) {
        (Outcome::Holds, Certificate::Divisor { target, divisor, cofactor, unit }) => Verdict::holds(
            Basis::Witness,
            Certificate::Furstenberg {
                alpha: f.clone(),
                others: Vec::new(),
                irreducible_others: true,
                pi: divisor.clone(),
                division: Box::new(Certificate::Divisor { target, divisor, cofactor, unit }),
            },
        ),
        (_, c) => Verdict::unknown(b, c),
    }
}

/// Wrap a verdict on `target * product(multiplier)` as a multiplier verdict on `target`.
pub(crate) fn multiplied(target: &GenPoly, multiplier: Vec<GenPoly>, irreducible: bool, product: Verdict) -> Verdict {
    let outcome = product.outcome;
    let basis = if product.is_holds() { Basis::Witness } else { product.basis };
    Verdict {
        outcome,
        basis,
        certificate: Certificate::Multiplier {
            target: target.clone(),
            multiplier,
            irreducible_multiplier: irreducible,
            product: Box::new(product.certificate),
        },
        bounds: product.bounds,
    }
}

/// A unit is the empty product.
pub(crate) fn trivially_atomic_unit(u: &GenPoly) -> Verdict {
    Verdict::holds(Basis::Witness, Certificate::Factorization { target: u.clone(), unit: u.clone(), factors: Vec::new() })
}

/// Aggregate per-sample verdicts: any refutation refutes, all holding holds over the sample.
pub(crate) fn per_sample(samples: &[GenPoly], mut f: impl FnMut(&GenPoly) -> Verdict, b: &SearchBounds) -> Verdict {
    let mut out = Vec::new();
    let mut outcome = Outcome::Holds;
    for s in samples {
        let v = f(s);
        match v.outcome {
            Outcome::Refuted => {
                let basis = v.basis;
                return Verdict {
                    outcome: Outcome::Refuted,
                    basis,
                    certificate: Certificate::PerSample { samples: vec![SampleVerdict { sample: s.clone(), verdict: v }] },
                    bounds: Some(b.clone()),
                };
            }
            Outcome::UnknownAtBound => outcome = Outcome::UnknownAtBound,
            Outcome::Holds => {}
        }
        out.push(SampleVerdict { sample: s.clone(), verdict: v });
    }
    Verdict {
        outcome,
        basis: Basis::AtBound,
        certificate: Certificate::PerSample { samples: out },
        bounds: Some(b.clone()),
    }
}
