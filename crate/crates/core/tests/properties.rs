use num_traits::{One, Zero};
use proptest::prelude::*;

use subatomic_core::checker::implies;
use subatomic_core::domains::{self, check_certificate, divide, is_irreducible, mul};
use subatomic_core::exact::{rat, rat_int};
use subatomic_core::monoids::{seq_atom_characterization, seq_in_m_span, seq_in_s};
use subatomic_core::poly::Poly;
use subatomic_core::{Certificate, Domain, DomainId, GenPoly, PropertyId, QLin, Rat, SearchBounds, SeqElem};

fn q() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn ql() -> impl Strategy<Value = QLin> {
    (q(), q()).prop_map(|(a, b)| QLin::new(a, b))
}

fn qpoly() -> impl Strategy<Value = Poly<u32, Rat>> {
    prop::collection::vec((0u32..6, q()), 0..5).prop_map(Poly::from_terms)
}

fn seq() -> impl Strategy<Value = SeqElem> {
    (0u64..12, prop::collection::vec((1u32..5, 0u64..20), 0..4)).prop_map(|(l, e)| SeqElem::new(l, e))
}

fn d23_elem() -> impl Strategy<Value = GenPoly> {
    (-6i64..=6, prop::collection::vec((1u32..4, q()), 0..3)).prop_map(|(c, rest)| {
        let mut p = Poly::from_terms(rest);
        p.add_term(0, rat_int(c));
        GenPoly::Int(p)
    })
}

proptest! {
    #[test]
    fn qlin_field_laws(a in ql(), b in ql(), c in ql()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), QLin::one());
        }
        prop_assert_eq!(a.norm(), (&a * &a.conj()).rat);
    }

    #[test]
    fn poly_ring_laws(f in qpoly(), g in qpoly(), h in qpoly()) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn poly_display_parse_roundtrip(c0 in -9i64..9, c1 in -9i64..9, rest in prop::collection::vec((2u32..6, q()), 0..4)) {
        let mut f = Poly::from_terms(rest);
        f.add_term(0, rat_int(c0));
        f.add_term(1, rat_int(c1));
        let g = GenPoly::Int(f);
        let back = Domain::new(DomainId::D8).parse(&g.to_string()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn seq_plus_minus(s in seq(), t in seq()) {
        let u = s.plus(&t);
        prop_assert!(s.leq(&u));
        prop_assert_eq!(u.minus(&t), Some(s.clone()));
        prop_assert_eq!(s.plus(&t), t.plus(&s));
    }

    #[test]
    fn seq_atoms_are_members(t in seq()) {
        if let Ok(atom) = seq_atom_characterization(&t) {
            prop_assert!(!atom || seq_in_s(&t));
        }
    }

    #[test]
    fn seq_span_certificates_add_up(t in seq()) {
        let r = seq_in_m_span(&t, &SearchBounds::default());
        if !seq_in_s(&t) {
            prop_assert!(r.is_err());
            return Ok(());
        }
        let v = r.unwrap();
        if let Certificate::SeqSum { target, summands } = &v.certificate {
            prop_assert_eq!(target, &t);
            let sum = summands.iter().fold(SeqElem::constant(0), |a, s| a.plus(s));
            prop_assert_eq!(&sum, &t);
        }
        if v.is_holds() {
            let is_sum = matches!(v.certificate, Certificate::SeqSum { .. });
            prop_assert!(is_sum);
        }
        if t.limit() == 7 {
            prop_assert!(!v.is_holds());
        }
    }

    #[test]
    fn d23_product_divides_back(f in d23_elem(), g in d23_elem()) {
        let d = Domain::new(DomainId::D23);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = mul(&d, &f, &g);
        let (h, u) = divide(&d, &fg, &g).expect("g divides f*g");
        prop_assert!(domains::is_unit(&d, &u).unwrap());
        prop_assert_eq!(mul(&d, &g, &h), mul(&d, &fg, &u));
    }

    #[test]
    fn irreducibility_certificates_check(f in d23_elem()) {
        let d = Domain::new(DomainId::D23);
        prop_assume!(!f.is_zero() && !domains::is_unit(&d, &f).unwrap());
        let v = is_irreducible(&d, &f, &SearchBounds::default()).unwrap();
        prop_assert!(check_certificate(&d, &v).is_ok(), "{}", f);
    }

    #[test]
    fn implication_is_transitive(a in 0usize..9, b in 0usize..9, c in 0usize..9) {
        let (p, q, r) = (PropertyId::ALL[a], PropertyId::ALL[b], PropertyId::ALL[c]);
        if implies(p, q) && implies(q, r) {
            prop_assert!(implies(p, r));
        }
        prop_assert!(implies(p, p));
    }

    #[test]
    fn sampling_is_seeded(seed in 0u64..1000) {
        let d = Domain::new(DomainId::D8);
        let b = SearchBounds::default();
        prop_assert_eq!(domains::random_elements(&d, seed, 5, &b), domains::random_elements(&d, seed, 5, &b));
    }
}

#[test]
fn seq_membership_small_cases() {
    assert!(seq_in_s(&SeqElem::unit_vec(1, 7)));
    assert!(!seq_in_s(&SeqElem::unit_vec(1, 3)));
    assert!(seq_in_s(&SeqElem::constant(3)));
    assert!(!seq_in_s(&SeqElem::constant(4)));
    assert!(!seq_in_s(&SeqElem::new(7, [(1, 1)])));
    assert_eq!(rat(2, 4), rat(1, 2));
    assert!(Rat::one() > Rat::zero());
}
