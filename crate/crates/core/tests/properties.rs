use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use pgl2q::decompose::{bs_normal_form, decompose_traced, decompose_borel};
use pgl2q::harness::rewrite::{replay, rewrite_search, SearchLimits, SearchOutcome};
use pgl2q::torsion::{conjugator_to_canonical, family, order_of, OrderClass};
use pgl2q::{Base, ExtRat, GenLetter, Mat2, ProjMat2, Word};

fn matrix(bound: i64) -> impl Strategy<Value = ProjMat2> {
    prop::array::uniform4(-bound..=bound).prop_filter_map("singular", |[p, q, r, s]| ProjMat2::new(p, q, r, s).ok())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=15)
        .prop_filter("zero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn base() -> impl Strategy<Value = Base> {
    prop_oneof![
        Just(Base::T),
        Just(Base::U),
        Just(Base::V),
        Just(Base::K),
        Just(Base::S),
        Just(Base::L),
        rational().prop_filter("H(1)", |r| !r.is_one()).prop_map(Base::H),
        rational().prop_map(Base::I),
    ]
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((base(), prop_oneof![-3i64..=-1, 1i64..=3]), 0..=max).prop_map(|ls| {
        Word::from_letters(ls.into_iter().map(|(b, e)| GenLetter::new(b, e).unwrap()).collect())
    })
}

fn point() -> impl Strategy<Value = ExtRat> {
    prop_oneof![Just(ExtRat::infinity()), (-30i64..=30, 1i64..=9).prop_map(|(n, d)| ExtRat::from_pair(n.into(), d.into()).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_scaling(m in matrix(60), k in prop_oneof![-9i64..=-1, 1i64..=9]) {
        let scaled = m.to_mat2().scale(&BigInt::from(k));
        prop_assert_eq!(scaled.canonicalize().unwrap(), m);
    }

    #[test]
    fn canonical_entries_are_primitive(p in -60i64..=60, q in -60i64..=60, r in -60i64..=60, s in -60i64..=60) {
        if let Ok(m) = Mat2::new(p, q, r, s).canonicalize() {
            let first = m.entries().into_iter().find(|x| !x.is_zero()).unwrap().clone();
            prop_assert!(first > BigInt::zero());
            let g = m.entries().into_iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            prop_assert!(g.is_one());
        }
    }

    #[test]
    fn multiplication_is_associative(a in matrix(30), b in matrix(30), c in matrix(30)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(100)) {
        prop_assert!(m.mul(&m.inverse()).is_identity());
        prop_assert!(m.inverse().mul(&m).is_identity());
    }

    #[test]
    fn pdet_is_a_homomorphism(a in matrix(100), b in matrix(100)) {
        prop_assert_eq!(a.mul(&b).pdet(), a.pdet().mul(&b.pdet()));
        prop_assert!(a.pdet().mul(&a.pdet()).is_identity());
        prop_assert_eq!(a.is_psl(), a.pdet().is_identity());
    }

    #[test]
    fn action_is_a_left_action(a in matrix(20), b in matrix(20), z in point()) {
        prop_assert_eq!(a.mul(&b).apply(&z), a.apply(&b.apply(&z)));
        prop_assert_eq!(ProjMat2::identity().apply(&z), z);
    }

    #[test]
    fn order_is_conjugation_invariant(m in matrix(12), g in matrix(12)) {
        prop_assert_eq!(order_of(&m.conjugate_by(&g)), order_of(&m));
        prop_assert_eq!(m.conjugate_by(&g).trace_sq_over_det(), m.trace_sq_over_det());
    }

    #[test]
    fn torsion_orders_are_restricted(m in matrix(8)) {
        if let Some(n) = order_of(&m).order() {
            prop_assert!([1, 2, 3, 4, 6].contains(&n));
        }
    }

    #[test]
    fn free_reduce_preserves_value(w in word(8)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.eval(), w.eval());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.free_reduce(), r);
    }

    #[test]
    fn inverse_word_evaluates_to_inverse(w in word(8)) {
        prop_assert!(w.concat(&w.inverse()).eval().is_identity());
        prop_assert_eq!(w.inverse().eval(), w.eval().inverse());
    }

    #[test]
    fn words_print_and_parse_back(w in word(8)) {
        let r = w.free_reduce();
        let parsed: Word = r.to_string().parse().unwrap();
        prop_assert_eq!(parsed, r);
    }

    #[test]
    fn matrices_print_and_parse_back(m in matrix(1000)) {
        prop_assert_eq!(m.to_string().parse::<ProjMat2>().unwrap(), m);
    }

    #[test]
    fn decompose_round_trips(m in matrix(1000)) {
        let (w, _) = decompose_traced(&m);
        prop_assert_eq!(w.eval(), m);
        prop_assert!(w.uses_prime_parameters());
        prop_assert!(w.letters().iter().all(|l| matches!(l.base, Base::T | Base::U | Base::V | Base::H(_))));
    }

    #[test]
    fn decompose_of_a_word_round_trips(w in word(6)) {
        let m = w.eval();
        prop_assert_eq!(decompose_traced(&m).0.eval(), m);
    }

    #[test]
    fn borel_decomposition(p in 1i64..=50, q in -50i64..=50, s in prop_oneof![-50i64..=-1, 1i64..=50]) {
        let m = ProjMat2::new(p, q, 0, s).unwrap();
        prop_assert_eq!(decompose_borel(&m).unwrap().eval(), m);
    }

    #[test]
    fn bs_normal_form_evaluates_back(letters in prop::collection::vec((any::<bool>(), prop_oneof![-2i64..=-1, 1i64..=2]), 0..8),
                                     p in prop_oneof![Just(2i64), Just(3), Just(5)]) {
        let w = Word::from_letters(letters.into_iter().map(|(t, e)| {
            GenLetter::new(if t { Base::T } else { Base::h(p) }, e).unwrap()
        }).collect());
        let nf = bs_normal_form(&w, &BigInt::from(p)).unwrap();
        prop_assert_eq!(nf.eval(), w.eval());
        prop_assert_eq!(nf.word().eval(), w.eval());
    }

    #[test]
    fn families_have_their_order(n in prop_oneof![Just(2u32), Just(3), Just(4), Just(6)],
                                 a in -20i64..=20, b in -20i64..=20, c in -20i64..=20) {
        if let Ok(m) = family(n, &a.into(), &b.into(), &c.into()) {
            prop_assert_eq!(order_of(&m), OrderClass::Finite(n));
            if n >= 3 {
                prop_assert_eq!(m.is_psl(), n == 3);
                let w = conjugator_to_canonical(&m).unwrap();
                prop_assert!(w.verify(&m));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Appending one relator is undone by a single move.
    #[test]
    fn rewrite_paths_replay(letters in prop::collection::vec(prop_oneof![Just("T"), Just("U"), Just("V"), Just("H(2)")], 0..3)) {
        let w: Word = letters.join(" ").parse().unwrap();
        let padded: Word = format!("{} U V U V", letters.join(" ")).parse().unwrap();
        let limits = SearchLimits { primes: vec![2], depth: 4, length_cap: 16, node_budget: 20_000 };
        match rewrite_search(&padded, &w, &limits).unwrap() {
            SearchOutcome::Path(path) => {
                let end = replay(&padded, &path).unwrap();
                prop_assert_eq!(end, w.free_reduce());
            }
            SearchOutcome::Exhausted { .. } => prop_assert!(false, "no path"),
        }
    }
}
