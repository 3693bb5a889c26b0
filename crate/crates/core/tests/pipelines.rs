//! Cross-module flows: each test chains several public APIs the way the
//! command-line tool does, on seeded random inputs.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use pseudoseg::arrangement::{realize_wiring, sweep, x_iso_canonical};
use pseudoseg::census::{dilworth_color, dual_trace_check, PermutationPoset};
use pseudoseg::geom::CurveFamily;
use pseudoseg::setsystem::{decode, encode, vc_dimension, SetFamily};
use pseudoseg::Rat;

/// Realizing a wiring diagram as curves and sweeping the curves back must
/// reproduce the diagram up to x-isomorphism, and the left-ground order
/// must match the original wires.
#[test]
fn sweep_inverts_realize_wiring() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..25 {
        let m = rng.gen_range(2..=12);
        let w = random_wiring(m, &mut rng);
        let fam: CurveFamily<Rat> = realize_wiring(&w).unwrap();
        let back = sweep(&fam).unwrap();
        assert_eq!(x_iso_canonical(&back), x_iso_canonical(&w));
        assert_eq!(back.wires(), w.wires());
        assert_eq!(back.final_order(), w.final_order());
    }
}

/// A realized diagram is a strip family of through curves: the crossing
/// poset read off the strip must color into as many classes as the longest
/// chain of pairwise-crossing wires, and the dual trace bound must hold
/// against the vertical decompositions of its subfamilies.
#[test]
fn realized_wirings_feed_the_census_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..10 {
        let m = rng.gen_range(3..=7);
        let w = random_wiring(m, &mut rng);
        let a: CurveFamily<Rat> = realize_wiring(&w).unwrap();
        let poset = PermutationPoset::from_family(&a).unwrap();
        let classes = dilworth_color(&poset);
        assert!(!classes.is_empty() && classes.len() <= m);

        let b = inner_probes("p", rng.gen_range(1..=5), w.swaps().len() as i64 + 1, &mut rng);
        let dual = dual_trace_check(&a, &b, 2.min(m)).unwrap();
        assert!(dual.ok, "trial {trial}: {dual:?}");
    }
}

/// Text form in, wire format out: parse a set family, encode and decode it,
/// and compare the value-sorted row lists byte for byte.
#[test]
fn codec_preserves_text_families() {
    let text = "6 5\n110000\n011000\n110000\n000111\n101010\n";
    let f = SetFamily::from_text(text).unwrap();
    assert_eq!(f.m(), 5);
    let dec = decode(&encode(&f).bytes).unwrap();
    assert!(dec.multiset_eq(&f));
    let sorted_text = |fam: &SetFamily| {
        let mut rows = fam.rows().to_vec();
        rows.sort_by(|a, b| a.cmp_value(b));
        SetFamily::new(fam.n(), rows).unwrap().to_text()
    };
    assert_eq!(sorted_text(&dec), sorted_text(&f));
    assert_eq!(vc_dimension(&f, 1 << 20).unwrap(), 2);
}

/// Random families survive the full fuzz chain with budget enforcement.
#[test]
fn oversized_shatter_budgets_are_reported() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let f = random_set_family(&mut rng);
    let err = vc_dimension(&f, 1).unwrap_err();
    assert!(matches!(err, pseudoseg::Error::BudgetExceeded { .. }));
}
