//! Independent re-verification of certificates: re-multiply, re-divide, re-run closed forms.

use super::ops::{ops, Ops};
use super::{Domain, GenPoly};
use crate::checker::implies;
use crate::monoids::{check_s4_sum, check_seq_sum};
use crate::verdict::{Basis, Certificate, Outcome, SearchBounds, Verdict};

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Ctx<'a> {
    o: Box<dyn Ops>,
    d: &'a Domain,
    bounds: SearchBounds,
}

impl Ctx<'_> {
    fn member(&self, f: &GenPoly, what: &str) -> Check {
        ensure(!f.is_zero() && self.o.contains(f), || format!("{what} {f} is not a nonzero element of {}", self.d.id))
    }

    fn unit(&self, u: &GenPoly) -> Check {
        self.member(u, "unit")?;
        ensure(self.o.is_unit(u), || format!("{u} is not a unit"))
    }

    fn non_unit(&self, f: &GenPoly, what: &str) -> Check {
        self.member(f, what)?;
        ensure(!self.o.is_unit(f), || format!("{what} {f} is a unit"))
    }

    fn irreducible(&self, f: &GenPoly) -> Check {
        self.non_unit(f, "factor")?;
        let v = self.o.irreducible(f, &self.bounds);
        ensure(v.is_holds(), || format!("{f} is not irreducible ({})", v.outcome))
    }

    fn product(&self, fs: &[GenPoly]) -> GenPoly {
        fs.iter().fold(self.o.one(), |acc, f| self.o.mul(&acc, f))
    }

    fn cert(&self, outcome: Outcome, basis: Basis, c: &Certificate) -> Check {
        match c {
            Certificate::None => ensure(outcome == Outcome::UnknownAtBound, || "decided verdict without certificate".into()),
            Certificate::SearchExhausted { .. } => {
                ensure(matches!(basis, Basis::AtBound | Basis::Exhaustive), || "search exhaustion needs a bounded basis".into())
            }
            Certificate::S4Sum { target, terms } => {
                ensure(check_s4_sum(target, terms, false), || format!("generators do not sum to {target}"))
            }
            Certificate::SeqSum { target, summands } => {
                ensure(check_seq_sum(target, summands, false), || format!("summands do not sum to {target}"))
            }
            Certificate::Structural { rule, subject, .. } => {
                ensure(!subject.is_empty(), || "structural certificate without subject".into())?;
                match basis {
                    Basis::Structural(r) => ensure(r == *rule, || format!("basis rule {r} differs from certificate rule {rule}")),
                    _ => Ok(()),
                }
            }
            Certificate::Split { target, left, right, unit } => {
                self.non_unit(target, "target")?;
                self.non_unit(left, "left factor")?;
                self.non_unit(right, "right factor")?;
                let rhs = match unit {
                    Some(u) => {
                        self.unit(u)?;
                        self.o.mul(target, u)
                    }
                    None => target.clone(),
                };
                ensure(self.o.mul(left, right) == rhs, || format!("{left} * {right} does not give {target}"))
            }
            Certificate::Factorization { target, unit, factors } => {
                self.member(target, "target")?;
                self.unit(unit)?;
                if factors.is_empty() {
                    return ensure(self.o.is_unit(target), || format!("empty factorization of non-unit {target}"));
                }
                for f in factors {
                    self.irreducible(f)?;
                }
                ensure(self.o.mul(target, unit) == self.product(factors), || {
                    format!("factors do not multiply to {target} up to the unit {unit}")
                })
            }
            Certificate::Divisor { target, divisor, cofactor, unit } => {
                self.member(target, "target")?;
                self.non_unit(divisor, "divisor")?;
                self.member(cofactor, "cofactor")?;
                self.unit(unit)?;
                ensure(self.o.mul(divisor, cofactor) == self.o.mul(target, unit), || {
                    format!("{divisor} * ({cofactor}) is not {target} up to the unit {unit}")
                })
            }
            Certificate::Multiplier { target, multiplier, irreducible_multiplier, product } => {
                self.member(target, "target")?;
                if *irreducible_multiplier {
                    for m in multiplier {
                        self.irreducible(m)?;
                    }
                }
                let expect = self.o.mul(target, &self.product(multiplier));
                if let Some(t) = cert_target(product) {
                    ensure(*t == expect, || format!("inner certificate is about {t}, not {expect}"))?;
                }
                self.cert(outcome, basis, product)
            }
            Certificate::Furstenberg { alpha, others, irreducible_others, pi, division } => {
                self.irreducible(pi)?;
                if *irreducible_others {
                    for g in others {
                        self.irreducible(g)?;
                    }
                }
                let rest = self.product(others);
                let Certificate::Divisor { target, divisor, .. } = division.as_ref() else {
                    return Err("Furstenberg certificate needs a divisor certificate".into());
                };
                ensure(divisor == pi, || format!("division is by {divisor}, not {pi}"))?;
                ensure(*target == self.o.mul(alpha, &rest), || format!("division target {target} is not alpha times the others"))?;
                self.cert(outcome, basis, division)?;
                if !others.is_empty() {
                    ensure(self.o.exact_divisibility() && self.o.divide(&rest, pi).is_none(), || {
                        format!("{pi} divides the product of the others")
                    })?;
                }
                Ok(())
            }
            Certificate::PerSample { samples } => {
                for s in samples {
                    if s.verdict.outcome != Outcome::UnknownAtBound {
                        self.verdict(&s.verdict).map_err(|e| format!("sample {}: {e}", s.sample))?;
                    }
                }
                Ok(())
            }
            Certificate::Implied { from, to, contrapositive } => {
                let ok = if *contrapositive { implies(*to, *from) } else { implies(*from, *to) };
                ensure(ok, || format!("no implication path {from} -> {to}"))
            }
        }
    }

    fn verdict(&self, v: &Verdict) -> Check {
        self.cert(v.outcome, v.basis, &v.certificate)
    }
}

fn cert_target(c: &Certificate) -> Option<&GenPoly> {
    match c {
        Certificate::Split { target, .. }
        | Certificate::Factorization { target, .. }
        | Certificate::Divisor { target, .. }
        | Certificate::Multiplier { target, .. } => Some(target),
        _ => None,
    }
}

/// Re-verify the certificate of `v` in `d`; the error names the first failing check.
pub fn check_certificate(d: &Domain, v: &Verdict) -> std::result::Result<(), String> {
    let ctx = Ctx { o: ops(d), d, bounds: v.bounds.clone().unwrap_or_default() };
    ctx.verdict(v)
}

pub fn certificate_ok(d: &Domain, v: &Verdict) -> bool {
    check_certificate(d, v).is_ok()
}
