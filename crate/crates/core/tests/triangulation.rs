use std::collections::{BTreeMap, HashSet};

use permutomino::census::{count, LabelCensus};
use permutomino::closed::closed_f_u64;
use permutomino::eco::{self, generate_par, generate_with_paths};
use permutomino::oracle::{oracle_permutominoes, perm_pair_census};
use permutomino::series::{census_series, kernel_substitution_residuals};
use permutomino::verify::{run_all, VerifyConfig};
use permutomino::{Class, Permutomino};

#[test]
fn oracle_set_equals_generated_set() {
    for n in 1..=6 {
        let oracle: HashSet<Permutomino> = oracle_permutominoes(n).into_iter().collect();
        let generated: HashSet<Permutomino> = eco::level(n).into_iter().collect();
        assert_eq!(oracle, generated, "size {n}");
    }
}

#[test]
fn census_matches_generated_labels() {
    for n in 1..=7 {
        let mut tally = BTreeMap::<(u32, Class), u64>::new();
        eco::generate(n, |p| *tally.entry(p.label().key()).or_default() += 1);
        let census: BTreeMap<(u32, Class), u64> = LabelCensus::at_level(n)
            .iter()
            .map(|(k, c, v)| ((k, c), u64::try_from(v).unwrap()))
            .collect();
        assert_eq!(tally, census, "level {n}");
    }
}

#[test]
fn parallel_generation_matches_closed_form() {
    use std::sync::atomic::{AtomicU64, Ordering};
    let seen = AtomicU64::new(0);
    generate_par(8, |_| {
        seen.fetch_add(1, Ordering::Relaxed);
    });
    assert_eq!(Some(seen.into_inner()), closed_f_u64(8));
    assert_eq!(count(8), 38632u32.into());
}

#[test]
fn paths_replay() {
    generate_with_paths(5, |p, path| {
        let rebuilt = path.iter().try_fold(Permutomino::single_cell(), |q, &op| eco::apply(&q, op)).unwrap();
        assert_eq!(&rebuilt, p);
    });
}

#[test]
fn pair_census_fixtures() {
    let c = perm_pair_census(3);
    assert_eq!(
        (c.pairs, c.valid, c.disconnected, c.self_intersecting, c.counter_clockwise, c.not_convex, c.distinct),
        (216, 18, 72, 92, 26, 8, 18)
    );
    let c = perm_pair_census(2);
    assert_eq!((c.pairs, c.valid, c.distinct), (12, 4, 4));
}

#[test]
fn kernel_substitution_vanishes() {
    let cs = census_series(14);
    let (b, r) = kernel_substitution_residuals(&cs);
    assert!(b.is_zero(), "{:?}", b.nonzero);
    assert!(r.is_zero(), "{:?}", r.nonzero);
}

#[test]
fn verify_suite_passes() {
    for outcome in run_all(VerifyConfig::up_to(6)) {
        assert!(outcome.passed, "{outcome}");
    }
}
