use lsf_core::braid::{torus_alexander, twisted_torus_braid};
use lsf_core::homology::{surgery_h1, SurgeryDescription};
use lsf_core::rational::Rational;
use lsf_core::seifert::SeifertForm;
use lsf_core::twistalex::{enumerate_candidates, os_candidate_check, staircase};
use num_bigint::BigInt;
use proptest::prelude::*;

fn seifert_ratio() -> impl Strategy<Value = Rational> {
    (2i64..=12).prop_flat_map(|a| (1..a).prop_map(move |b| Rational::new(b, a)))
}

// S²(b; r_1..r_k) is surgery on an unknot framed b with k meridians framed
// -1/r_i; the H1 order from that surgery description must match the
// closed form.
proptest! {
    #[test]
    fn seifert_h1_matches_surgery(b in -4i64..=4, ratios in proptest::collection::vec(seifert_ratio(), 1..=4)) {
        let form = SeifertForm::from_rationals(b, &ratios);
        let k = ratios.len();
        let mut linking = vec![vec![0i64; k + 1]; k + 1];
        linking[0][1..].fill(1);
        for row in linking.iter_mut().skip(1) {
            row[0] = 1;
        }
        let mut framings = vec![Rational::from_integer(b)];
        framings.extend(ratios.iter().map(|r| -r.recip()));
        let surgery = SurgeryDescription::new(linking, framings).unwrap();
        prop_assert_eq!(surgery_h1(&surgery), form.h1_order().unwrap());
    }
}

#[test]
fn positive_twisted_torus_knots_pass_the_candidate_test() {
    for (p, q) in [(2i64, 3i64), (3, 2), (5, 2), (2, 5), (5, 3), (3, 4)] {
        for n in -2..=3 {
            let w = twisted_torus_braid(p, q, n).unwrap();
            let delta = w.burau_alexander().unwrap();
            assert!(os_candidate_check(&delta), "({p},{q},{n})");
            let hfk = staircase(&delta).unwrap();
            let g = w.genus_positive().unwrap() as i64;
            assert_eq!(hfk.generators.first().map(|x| x.0), Some(g));
        }
    }
}

#[test]
fn torus_polynomials_are_candidates() {
    for g in 1..=4u64 {
        let cands = enumerate_candidates(g);
        assert!(cands.contains(&torus_alexander(2 * g + 1, 2)));
    }
    assert!(enumerate_candidates(3).contains(&torus_alexander(4, 3)));
    for (p, q) in [(3u64, 2u64), (5, 3), (7, 4), (8, 5)] {
        assert!(os_candidate_check(&torus_alexander(p, q)));
    }
}

#[test]
fn surgery_on_a_hopf_link() {
    // framings m and 0 on a Hopf link: H1 = Z/1 regardless of m
    for m in -5i64..=5 {
        let s = SurgeryDescription::new(vec![vec![0, 1], vec![1, 0]], vec![Rational::from_integer(m), Rational::from_integer(0)]).unwrap();
        assert_eq!(surgery_h1(&s), BigInt::from(1));
    }
}
