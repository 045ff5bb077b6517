//! Named verification procedures, one per construction or lemma tag.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{classify_domain, PropertyId};
use crate::domains::{
    self, appb_atomic_by_corollary, appb_witness, check_almost_furstenberg, check_antimatter, check_certificate,
    check_quasi_furstenberg, check_semi_atomic, check_semi_furstenberg, corollary_shape, divide, furstenberg_divisor,
    is_atomic_elem, is_irreducible, lemma6_transform, min_exponent_decompose, mul, prime_ideal_instance_check,
    pth_power_identity, random_elements, sample_universe, semi_atomic_candidate, Domain, DomainId, GenPoly,
};
use crate::error::{invalid, Result};
use crate::exact::{rat, rat_int, QLin, Rat};
use crate::monoids::{
    atoms_up_to, check_seq_sum, monoid_factorizations, s4_membership, seq_atom_characterization, seq_in_m_span,
    seq_in_s, MonoidElem, MonoidId, S4Elem, SeqElem,
};
use crate::poly::{prime_factors, Poly};
use crate::verdict::{Certificate, SearchBounds, Verdict};

pub const TAGS: [&str; 13] = [
    "lemma6",
    "lemma14",
    "lemma15",
    "lemma16",
    "lemma23",
    "lemma24",
    "example8",
    "example9",
    "example11",
    "example12",
    "section4",
    "appendix_b",
    "theorem10",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub bounds: SearchBounds,
    pub seed: u64,
    pub truncation: Rat,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { bounds: SearchBounds::default(), seed: 0, truncation: rat_int(4) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TagReport {
    pub tag: &'static str,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
}

#[derive(Default)]
struct Lines(Vec<CheckLine>);

impl Lines {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckLine { name: name.into(), passed, detail: detail.into() });
    }

    /// `ok` out of `total`, passing only at 100%.
    fn ratio(&mut self, name: &str, ok: usize, total: usize, first_failure: Option<String>) {
        let mut detail = format!("{ok}/{total}");
        if let Some(f) = first_failure {
            detail.push_str(&format!("; first failure: {f}"));
        }
        self.add(name, ok == total && total > 0, detail);
    }
}

/// Counts successes of `f` over `items`, remembering the first failure.
fn tally<T>(items: &[T], mut f: impl FnMut(&T) -> std::result::Result<(), String>) -> (usize, usize, Option<String>) {
    let mut ok = 0;
    let mut first = None;
    for x in items {
        match f(x) {
            Ok(()) => ok += 1,
            Err(e) => {
                first.get_or_insert(e);
            }
        }
    }
    (ok, items.len(), first)
}

fn holds_certified(d: &Domain, v: &Verdict, what: &str) -> std::result::Result<(), String> {
    if !v.is_holds() {
        return Err(format!("{what}: {}", v.outcome));
    }
    check_certificate(d, v).map_err(|e| format!("{what}: {e}"))
}

fn refuted_certified(d: &Domain, v: &Verdict, what: &str) -> std::result::Result<(), String> {
    if !v.is_refuted() {
        return Err(format!("{what}: {}", v.outcome));
    }
    check_certificate(d, v).map_err(|e| format!("{what}: {e}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn verify(tag: &str, cfg: &VerifyConfig) -> Result<Vec<TagReport>> {
    if tag == "all" {
        return TAGS.iter().map(|t| verify_one(t, cfg)).collect();
    }
    Ok(vec![verify_one(tag, cfg)?])
}

fn verify_one(tag: &str, cfg: &VerifyConfig) -> Result<TagReport> {
    let Some(&tag) = TAGS.iter().find(|t| **t == tag) else {
        return invalid(format!("unknown tag {tag:?}; valid: {}, all", TAGS.join(", ")));
    };
    let mut l = Lines::default();
    match tag {
        "lemma6" => lemma6(cfg, &mut l)?,
        "lemma14" => lemma14(cfg, &mut l)?,
        "lemma15" => lemma15(cfg, &mut l)?,
        "lemma16" => lemma16(cfg, &mut l)?,
        "lemma23" => lemma23(cfg, &mut l)?,
        "lemma24" => lemma24(cfg, &mut l)?,
        "example8" => example8(cfg, &mut l)?,
        "example9" => example9(cfg, &mut l)?,
        "example11" => example11(cfg, &mut l)?,
        "example12" => example12(cfg, &mut l)?,
        "section4" => section4(cfg, &mut l)?,
        "appendix_b" => appendix_b(cfg, &mut l)?,
        "theorem10" => theorem10(cfg, &mut l)?,
        _ => unreachable!(),
    }
    let passed = l.0.iter().all(|c| c.passed);
    Ok(TagReport { tag, passed, checks: l.0 })
}

fn lemma6(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    for id in [DomainId::MaS4, DomainId::MaAppA] {
        let d = Domain::new(id);
        let beta = semi_atomic_candidate(&d).expect("candidate");
        let samples = sample_universe(&d, cfg.seed, b);
        let sa = check_semi_atomic(&d, &beta, &samples, b)?;
        l.add(&format!("{id}: beta = {beta} is a semi-atomic multiplier"), holds_certified(&d, &sa, "semi-atomic").is_ok(), sa.outcome.to_string());
        let sq = lemma6_transform(&d, &beta, b)?;
        let r = holds_certified(&d, &sq, "beta^2");
        l.add(&format!("{id}: beta^2 factors into irreducibles"), r.is_ok(), r.err().unwrap_or_default());
        let beta2 = mul(&d, &beta, &beta);
        let v = check_semi_atomic(&d, &beta2, &samples, b)?;
        let r = holds_certified(&d, &v, "alpha * beta^2");
        l.add(&format!("{id}: beta^2 makes every sample atomic"), r.is_ok(), r.err().unwrap_or_default());
    }
    Ok(())
}

fn seq_universe(b: &SearchBounds) -> Vec<SeqElem> {
    let w = b.index_bound;
    let e = b.entry_bound as u64;
    let mut out = Vec::new();
    for lim in 0..=b.limit_bound as u64 {
        let mut v = vec![0u64; w as usize];
        loop {
            let t = SeqElem::new(lim, v.iter().enumerate().map(|(i, &a)| (i as u32 + 1, a)));
            if !t.is_zero() && seq_in_s(&t) {
                out.push(t);
            }
            let mut i = 0;
            while i < v.len() && v[i] == e {
                v[i] = 0;
                i += 1;
            }
            if i == v.len() {
                break;
            }
            v[i] += 1;
        }
    }
    out
}

fn lemma14(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let atoms: BTreeSet<SeqElem> = atoms_up_to(MonoidId::AppendixA, b)?
        .into_iter()
        .filter_map(|a| match a {
            MonoidElem::Seq(s) => Some(s),
            _ => None,
        })
        .collect();
    let universe = seq_universe(b);
    let (ok, n, first) = tally(&universe, |t| {
        let closed = seq_atom_characterization(t).map_err(err)?;
        if closed == atoms.contains(t) {
            Ok(())
        } else {
            Err(format!("{t}: closed form {closed}, brute force {}", !closed))
        }
    });
    l.ratio(
        &format!("closed form = brute force atoms (indices <= {}, entries <= {})", b.index_bound, b.entry_bound),
        ok,
        n,
        first,
    );
    let seven = SeqElem::unit_vec(1, 7);
    let fourteen = SeqElem::unit_vec(1, 14);
    l.add("7e1 is an atom, 14e1 is not", atoms.contains(&seven) && !atoms.contains(&fourteen), "");
    Ok(())
}

fn lemma15(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut spanned = Vec::new();
    for lim in [0u64, 3, 5, 6, 8, 9, 10, 12] {
        for _ in 0..25 {
            spanned.push(domains::random_seq(&mut rng, b, Some(lim)));
        }
    }
    let (ok, n, first) = tally(&spanned, |t| {
        let v = seq_in_m_span(t, b).map_err(err)?;
        match (&v.outcome, &v.certificate) {
            (crate::verdict::Outcome::Holds, Certificate::SeqSum { target, summands }) if check_seq_sum(target, summands, true) && target == t => Ok(()),
            _ => Err(format!("{t}: {}", v.outcome)),
        }
    });
    l.ratio("sum of atoms for limits other than 7", ok, n, first);
    let sevens: Vec<SeqElem> = (0..50).map(|_| domains::random_seq(&mut rng, b, Some(7))).collect();
    let (ok, n, first) = tally(&sevens, |t| {
        let v = seq_in_m_span(t, b).map_err(err)?;
        if v.is_refuted() {
            Ok(())
        } else {
            Err(format!("{t}: {}", v.outcome))
        }
    });
    l.ratio("limit 7 is outside the span of the atoms", ok, n, first);
    Ok(())
}

fn lemma16(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::MaAppA);
    let fs = random_elements(&d, cfg.seed, 100, b);
    let (ok, n, first) = tally(&fs, |f| {
        let (beta, g) = min_exponent_decompose(&d, f).map_err(err)?;
        let MonoidElem::Seq(beta) = beta else { return Err("not a sequence".into()) };
        if mul(&d, &GenPoly::Seq(Poly::x_pow(beta.clone())), &g) != *f {
            return Err(format!("{f} != x^({beta}) * {g}"));
        }
        let atomic_g = is_atomic_elem(&d, &g, b).map_err(err)?;
        holds_certified(&d, &atomic_g, "g")?;
        if beta.limit() == 7 {
            refuted_certified(&d, &is_atomic_elem(&d, f, b).map_err(err)?, "limit-7 element is not atomic")
        } else if beta.is_zero() {
            Ok(())
        } else {
            Err(format!("unexpected factor x^({beta})"))
        }
    });
    l.ratio("every element is atomic or x^beta times an atomic element, beta of limit 7", ok, n, first);
    let t = MonoidElem::Seq(SeqElem::constant(7));
    let facs = monoid_factorizations(MonoidId::AppendixA, &t, b)?;
    l.add("the constant-7 sequence has no factorization into atoms", facs.is_empty(), format!("{} found", facs.len()));
    Ok(())
}

fn d23_elements(cfg: &VerifyConfig) -> (Domain, Vec<GenPoly>) {
    let d = Domain::new(DomainId::D23);
    let mut fs = sample_universe(&d, cfg.seed, &cfg.bounds);
    fs.extend(random_elements(&d, cfg.seed, 40, &cfg.bounds));
    (d, fs)
}

fn lemma23(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let (d, fs) = d23_elements(cfg);
    let (ok, n, first) = tally(&fs, |f| holds_certified(&d, &furstenberg_divisor(&d, f, b).map_err(err)?, &f.to_string()));
    l.ratio("every sample has an irreducible divisor", ok, n, first);
    let x = d.parse("x^(1)")?;
    let (ok, n, first) = tally(&fs, |beta| {
        let p = mul(&d, &x, beta);
        refuted_certified(&d, &is_atomic_elem(&d, &p, b).map_err(err)?, &format!("x * ({beta})"))
    });
    l.ratio("x * beta is never atomic", ok, n, first);
    let v = domains::quasi_atomic_witness_search(&d, &x, b)?;
    l.add("x refutes quasi-atomicity", refuted_certified(&d, &v, "x").is_ok(), v.outcome.to_string());
    Ok(())
}

fn lemma24(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::D24);
    let anti = check_antimatter(&d, b);
    let two_ok = matches!(&anti.certificate, Certificate::Factorization { target, .. } if target.to_string() == "2");
    l.add("not antimatter: 2 is irreducible", anti.is_refuted() && two_ok && check_certificate(&d, &anti).is_ok(), anti.outcome.to_string());
    let x = d.parse("x^(1)")?;
    let v = check_quasi_furstenberg(&d, &x, b)?;
    l.add("x refutes quasi-Furstenberg", refuted_certified(&d, &v, "x").is_ok(), v.outcome.to_string());
    let mut universe = BTreeSet::new();
    for n in 1..=2u64 {
        for c0 in -3i64..=3 {
            for c1 in -3i64..=3 {
                for c2 in -3i64..=3 {
                    let v = [BigInt::from(c0), BigInt::from(c1), BigInt::from(c2)];
                    let mut p = Poly::zero();
                    for (i, c) in v.iter().enumerate() {
                        p.add_term(rat(i as i64, n as i64), c.clone());
                    }
                    let g = GenPoly::Puiseux(p);
                    if !g.is_zero() {
                        universe.insert(g);
                    }
                }
            }
        }
    }
    let universe: Vec<GenPoly> = universe.into_iter().collect();
    let irreducibles: Vec<&GenPoly> = universe
        .iter()
        .filter(|g| !domains::is_unit(&d, g).unwrap_or(true) && is_irreducible(&d, g, b).is_ok_and(|v| v.is_holds()))
        .collect();
    let mut cases = 0usize;
    let mut bad = None;
    for beta in &universe {
        let xb = mul(&d, &x, beta);
        for pi in &irreducibles {
            if divide(&d, &xb, pi).is_some() {
                cases += 1;
                if divide(&d, beta, pi).is_none() && bad.is_none() {
                    bad = Some(format!("{pi} | x*({beta}) but not {beta}"));
                }
            }
        }
    }
    l.add(
        &format!("pi | x*beta implies pi | beta ({} irreducibles, {} elements)", irreducibles.len(), universe.len()),
        bad.is_none() && cases > 0,
        bad.unwrap_or_else(|| format!("{cases} dividing pairs")),
    );
    Ok(())
}

fn omega(n: &BigInt) -> usize {
    prime_factors(n).len()
}

/// Non-integer minimal coefficient `m/n` at degree `k >= 2`.
fn d8_element(rng: &mut ChaCha8Rng) -> (GenPoly, u32, BigInt) {
    loop {
        let k = rng.gen_range(2..=5u32);
        let m = rng.gen_range(-50i64..=50);
        let n = rng.gen_range(2i64..=50);
        if m == 0 || m.gcd(&n) != 1 {
            continue;
        }
        let mut p: Poly<u32, Rat> = Poly::zero();
        p.add_term(k, rat(m, n));
        for e in k + 1..=6 {
            if rng.gen_bool(0.5) {
                p.add_term(e, rat(rng.gen_range(-50..=50), rng.gen_range(1..=50)));
            }
        }
        return (GenPoly::Int(p), k, BigInt::from(m));
    }
}

/// Factor count of `n f = x^(k-1) g` minus the `k - 1` copies of `x`, and `omega(m) + deg(g) + 1`.
pub fn example8_counts(f: &GenPoly, factors: usize) -> Option<(usize, usize)> {
    let GenPoly::Int(p) = f else { return None };
    let (&k, c) = p.min_term()?;
    let (&deg, _) = p.max_term()?;
    let m = c.numer().clone();
    let deg_g = (deg - (k - 1)) as usize;
    Some((factors.checked_sub(k as usize - 1)?, omega(&m) + deg_g + 1))
}

fn example8(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::D8);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let fs: Vec<GenPoly> = (0..100).map(|_| d8_element(&mut rng).0).collect();
    let (ok, n, first) = tally(&fs, |f| {
        let v = domains::almost_atomic_witness_search(&d, f, b).map_err(err)?;
        holds_certified(&d, &v, &f.to_string())?;
        let Certificate::Multiplier { product, .. } = &v.certificate else { return Err("no multiplier".into()) };
        let Certificate::Factorization { factors, .. } = product.as_ref() else { return Err("no factorization".into()) };
        let (got, bound) = example8_counts(f, factors.len()).ok_or("bad shape")?;
        if got <= bound {
            Ok(())
        } else {
            Err(format!("{f}: {got} factors > {bound}"))
        }
    });
    l.ratio("almost atomic witness within the factor-count bound", ok, n, first);
    let (ok, n, first) = tally(&fs, |f| refuted_certified(&d, &is_atomic_elem(&d, f, b).map_err(err)?, &f.to_string()));
    l.ratio("non-integer minimal coefficient is not atomic", ok, n, first);
    Ok(())
}

fn d9_element(rng: &mut ChaCha8Rng) -> GenPoly {
    let k = rng.gen_range(2..=5u32);
    let mut p: Poly<u32, QLin> = Poly::zero();
    let irr = loop {
        let v = rng.gen_range(-20i64..=20);
        if v != 0 {
            break v;
        }
    };
    p.add_term(k, QLin::new(rat(rng.gen_range(-20..=20), rng.gen_range(1..=5)), rat(irr, rng.gen_range(1..=5))));
    for e in k + 1..=6 {
        if rng.gen_bool(0.5) {
            p.add_term(e, QLin::new(rat(rng.gen_range(-20..=20), 1), rat(rng.gen_range(-20..=20), 1)));
        }
    }
    GenPoly::Quad(p)
}

fn example9(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::D9);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let fs: Vec<GenPoly> = (0..50).map(|_| d9_element(&mut rng)).collect();
    let (ok, n, first) = tally(&fs, |f| {
        let v = domains::quasi_atomic_witness_search(&d, f, b).map_err(err)?;
        holds_certified(&d, &v, &f.to_string())?;
        let GenPoly::Quad(p) = f else { unreachable!() };
        let (_, r) = p.min_term().unwrap();
        let want = GenPoly::Quad(Poly::monomial(2, r.inv().map_err(err)?));
        match &v.certificate {
            Certificate::Multiplier { multiplier, .. } if multiplier.as_slice() == [want.clone()] => Ok(()),
            _ => Err(format!("{f}: multiplier is not {want}")),
        }
    });
    l.ratio("x^2/r makes f atomic", ok, n, first);
    let (ok, n, first) = tally(&fs, |f| {
        let v = domains::almost_atomic_witness_search(&d, f, b).map_err(err)?;
        if v.is_holds() {
            Err(format!("{f}: almost atomic witness found"))
        } else {
            Ok(())
        }
    });
    l.ratio("no product of irreducibles makes f atomic", ok, n, first);
    Ok(())
}

fn example11(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::MaQPlus);
    let v = check_antimatter(&d, b);
    l.add("antimatter", holds_certified(&d, &v, "antimatter").is_ok(), v.outcome.to_string());
    let atoms = atoms_up_to(MonoidId::QPlus, b)?;
    l.add("no atoms in the positive rationals", atoms.is_empty(), format!("{} atoms", atoms.len()));
    let fs = random_elements(&d, cfg.seed, 30, b);
    let (ok, n, first) = tally(&fs, |f| refuted_certified(&d, &is_irreducible(&d, f, b).map_err(err)?, &f.to_string()));
    l.ratio("every monomial splits in half", ok, n, first);
    Ok(())
}

fn example12(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::with_truncation(DomainId::D12, cfg.truncation.clone());
    let fs = random_elements(&d, cfg.seed, 100, b);
    let x = d.parse("x^(1)")?;
    let (ok, n, first) = tally(&fs, |f| {
        holds_certified(&d, &check_almost_furstenberg(&d, f, b).map_err(err)?, &format!("(p + x) * ({f})"))?;
        holds_certified(&d, &check_semi_furstenberg(&d, &x, std::slice::from_ref(f), b).map_err(err)?, &format!("x * ({f})"))
    });
    l.ratio("(p + x) f and x f witnesses", ok, n, first);
    let v = furstenberg_divisor(&d, &x, b)?;
    l.add("x has no irreducible divisor", refuted_certified(&d, &v, "x").is_ok(), v.outcome.to_string());
    let row = classify_domain(&d, b, &sample_universe(&d, cfg.seed, b))?;
    for p in [PropertyId::SemiFurstenberg, PropertyId::AlmostFurstenberg] {
        l.add(&format!("classification: {p} holds"), row.verdict(p).is_holds(), row.verdict(p).outcome.to_string());
    }
    Ok(())
}

fn section4(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::MaS4);
    let mut pairs = Vec::new();
    for n in 1..=8u64 {
        for m in (1..=8u64).step_by(2) {
            pairs.push((n, m));
        }
    }
    let (ok, total, first) = tally(&pairs, |&(n, m)| {
        if !pth_power_identity(n, m).map_err(err)? {
            return Err(format!("identity fails at ({n}, {m})"));
        }
        let f = GenPoly::S4(Poly::x_pow(S4Elem::rational(Rat::new(m.into(), BigInt::from(1u64) << n))));
        refuted_certified(&d, &furstenberg_divisor(&d, &f, b).map_err(err)?, &f.to_string())
    });
    l.ratio("p-th power identity and no irreducible divisor of x^(m/2^n), n, m <= 8", ok, total, first);
    let half_alpha = S4Elem::new(rat(1, 2), rat_int(0));
    let alpha_half = S4Elem::new(rat_int(1), rat(1, 2));
    l.add(
        "alpha + 1/2 is in the monoid, alpha/2 is not",
        s4_membership(&alpha_half).is_holds() && s4_membership(&half_alpha).is_refuted(),
        "",
    );
    let beta = semi_atomic_candidate(&d).expect("candidate");
    let samples = random_elements(&d, cfg.seed, 40, b);
    let v = check_semi_atomic(&d, &beta, &samples, b)?;
    let r = holds_certified(&d, &v, "semi-atomic");
    l.add(&format!("beta = {beta} makes random monomials atomic"), r.is_ok(), r.err().unwrap_or_default());
    Ok(())
}

/// `f * multiplier` with the corollary shape, or why not.
pub fn appb_witness_shape(f: &GenPoly) -> std::result::Result<(), String> {
    let d = Domain::new(DomainId::AppB);
    let (m, case) = appb_witness(f).map_err(err)?;
    let p = mul(&d, f, &m);
    match corollary_shape(&p) {
        Some(_) => Ok(()),
        None => Err(format!("{f}: case {case} product {p}")),
    }
}

fn appendix_b(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::AppB);
    let fs = random_elements(&d, cfg.seed, 1000, b);
    let (ok, n, first) = tally(&fs, appb_witness_shape);
    l.ratio("witness product is y^j times an element with a y term", ok, n, first);
    let f = d.parse("x^(1)*y^(1) + y^(2)")?;
    let v = appb_atomic_by_corollary(&f);
    l.add("x y + y^2 = y (x + y) is atomic", holds_certified(&d, &v, "corollary").is_ok(), v.outcome.to_string());
    let samples: Vec<GenPoly> = fs.iter().take(100).cloned().collect();
    let (ok, n, first) = tally(&samples, |f| holds_certified(&d, &domains::almost_atomic_witness_search(&d, f, b).map_err(err)?, &f.to_string()));
    l.ratio("almost atomic on random elements", ok, n, first);
    let (ok, n, first) = tally(&samples, |f| {
        let v = is_irreducible(&d, f, b).map_err(err)?;
        if v.is_unknown() {
            return Err(format!("{f}: undecided"));
        }
        check_certificate(&d, &v).map_err(|e| format!("{f}: {e}"))
    });
    l.ratio("irreducibility decided with checked certificates", ok, n, first);
    Ok(())
}

fn theorem10(cfg: &VerifyConfig, l: &mut Lines) -> Result<()> {
    let b = &cfg.bounds;
    let d = Domain::new(DomainId::D23);
    let v = prime_ideal_instance_check(&d, b)?;
    l.add("no enumerated irreducible lies in {f : f(0) = 0}", v.is_holds(), v.outcome.to_string());
    let (_, fs) = d23_elements(cfg);
    let in_ideal: Vec<GenPoly> = fs.into_iter().filter(|f| matches!(f, GenPoly::Int(p) if num_traits::Zero::is_zero(&p.constant_term()))).collect();
    let (ok, n, first) = tally(&in_ideal, |f| refuted_certified(&d, &domains::quasi_atomic_witness_search(&d, f, b).map_err(err)?, &f.to_string()));
    l.ratio("elements of the ideal are not quasi-atomic", ok, n, first);
    Ok(())
}
