//! Cross-checks between the generator, the label census, the closed forms,
//! the series expansions and the brute-force oracle.
//!
//! Each check returns a [`CheckOutcome`]; failing geometric checks carry the
//! first offending permutomino as a JSON record.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::census::{counts_up_to, LabelCensus};
use crate::closed::{central_binomial, closed_convex_polyominoes, closed_f, closed_stack};
use crate::eco::{self, children, parent, Operation};
use crate::grid::{Class, CornerKind, Label, Permutomino, ReentrantKind, Side};
use crate::oracle;
use crate::record::PermutominoRecord;
use crate::series;

/// Counts printed for sizes 1 through 7.
pub const KNOWN_COUNTS: [u64; 7] = [1, 4, 18, 84, 394, 1836, 8468];

/// Convex polyominoes by semi-perimeter 2 through 9.
pub const KNOWN_CONVEX_POLYOMINOES: [u64; 8] = [1, 2, 7, 28, 120, 528, 2344, 10416];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome { name, passed: true, detail: detail.into(), witness: None }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome { name, passed: false, detail: detail.into(), witness: None }
    }

    fn fail_at(name: &'static str, detail: impl Into<String>, p: &Permutomino) -> Self {
        CheckOutcome {
            witness: Some(PermutominoRecord::new(p).to_json_line()),
            ..CheckOutcome::fail(name, detail)
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Census totals reproduce the printed sequence.
pub fn check_sequence() -> CheckOutcome {
    const NAME: &str = "sequence";
    let got = counts_up_to(KNOWN_COUNTS.len() as u32);
    for (i, (g, &w)) in got.iter().zip(&KNOWN_COUNTS).enumerate() {
        if *g != big(w) {
            return CheckOutcome::fail(NAME, format!("count({}) = {g}, expected {w}", i + 1));
        }
    }
    CheckOutcome::pass(NAME, "count(1..=7) = 1, 4, 18, 84, 394, 1836, 8468")
}

pub fn check_closed_form(max_n: u32) -> CheckOutcome {
    const NAME: &str = "closed form";
    for (i, c) in counts_up_to(max_n).iter().enumerate() {
        let n = i as u32 + 1;
        let f = closed_f(n);
        if f != *c {
            return CheckOutcome::fail(NAME, format!("closed_f({n}) = {f}, census {c}"));
        }
    }
    CheckOutcome::pass(NAME, format!("closed_f(n) = count(n) for n <= {max_n}"))
}

fn series_coeff(s: &series::TruncatedSeries, n: usize) -> BigRational {
    s.coeff(n).clone()
}

pub fn check_series(order: usize) -> CheckOutcome {
    const NAME: &str = "series";
    let levels = LabelCensus::levels(order as u32);
    let (b1, r1, n1, f1) = (
        series::series_b1(order),
        series::series_r1(order),
        series::series_n1(order),
        series::series_f1(order),
    );
    let total = &(&b1 + &r1) + &n1;
    if total != f1 {
        return CheckOutcome::fail(NAME, "B1 + R1 + N1 != F1");
    }
    let as_q = |v: BigUint| BigRational::from_integer(v.into());
    for c in &levels {
        let n = c.level() as usize;
        let t = c.by_class();
        let pairs = [
            ("F1", series_coeff(&f1, n), c.total()),
            ("B1", series_coeff(&b1, n), t.b),
            ("R1", series_coeff(&r1, n), t.r),
            ("N1", series_coeff(&n1, n), t.g),
        ];
        for (name, s, census) in pairs {
            if s != as_q(census.clone()) {
                return CheckOutcome::fail(NAME, format!("[t^{n}] {name} = {s}, census {census}"));
            }
        }
    }
    CheckOutcome::pass(NAME, format!("F1, B1, R1, N1 match the census through t^{order}"))
}

/// Label multiset the succession rule prescribes for `label`, keyed on
/// `(k, class)`.
pub fn production(label: Label) -> Vec<(u32, Class)> {
    let k = label.k;
    let mut out = Vec::new();
    match label.class {
        Class::B => {
            for j in 1..=k {
                out.extend([(j, Class::R), (j, Class::R)]);
            }
            out.extend([(k + 1, Class::B), (k + 1, Class::B)]);
        }
        Class::R => {
            for j in 1..=k {
                out.extend([(j, Class::R), (j, Class::G)]);
            }
            out.push((k + 1, Class::R));
        }
        Class::G => {
            for j in 1..=k {
                out.extend([(j, Class::G), (j, Class::G)]);
            }
        }
    }
    out.sort();
    out
}

fn rightmost_kind(p: &Permutomino) -> Option<ReentrantKind> {
    p.corner_report().rightmost_reentrant().and_then(|c| match c.kind {
        CornerKind::Reentrant(k) => Some(k),
        CornerKind::Salient => None,
    })
}

/// Checks one node of the generating tree: child count, labels, validity,
/// rightmost reentrant kinds, and parent round-trips.
pub fn check_node(p: &Permutomino) -> Result<Vec<(Operation, Permutomino)>, String> {
    let kids = children(p);
    let label = p.label();
    let expected_len = match label.class {
        Class::B => 2 * label.k + 2,
        Class::R => 2 * label.k + 1,
        Class::G => 2 * label.k,
    };
    if kids.len() as u32 != expected_len {
        return Err(format!("{label} has {} children, expected {expected_len}", kids.len()));
    }
    let mut labels: Vec<(u32, Class)> = kids.iter().map(|(_, c)| c.label().key()).collect();
    labels.sort();
    if labels != production(label) {
        return Err(format!("children labels of {label} do not follow the production"));
    }
    let mut distinct = HashSet::new();
    for (op, c) in &kids {
        let poly = c.as_polyomino();
        if c.size() != p.size() + 1 || !poly.is_convex() || !poly.is_permutomino() {
            return Err(format!("{op} child {c} is not a convex permutomino of size {}", p.size() + 1));
        }
        if rightmost_kind(c) != Some(op.kind()) {
            return Err(format!("{op} child {c} has rightmost reentrant {:?}", rightmost_kind(c)));
        }
        match parent(c) {
            Ok((q, back)) if q == *p && back == *op => {}
            other => return Err(format!("parent of {op} child {c} is {other:?}")),
        }
        if !distinct.insert(c) {
            return Err(format!("{op} child {c} repeats a sibling"));
        }
    }
    // side-specific class transitions for class R
    if let Some(side) = label.side {
        for (op, c) in &kids {
            let keeps_r = matches!(
                (side, op),
                (Side::Top, Operation::Gamma(_) | Operation::Alpha) | (Side::Bottom, Operation::Beta(_) | Operation::Delta)
            );
            if (c.label().class == Class::R) != keeps_r {
                return Err(format!("{op} child of {label} ({side:?}) has class {}", c.label().class));
            }
        }
    }
    Ok(kids)
}

/// Generation, partition, child-count, label-transition, rightmost-reentrant
/// and parent laws for sizes `1..=max_n` (children reach `max_n + 1`).
pub fn check_eco(max_n: u32) -> CheckOutcome {
    const NAME: &str = "eco partition";
    let counts = counts_up_to(max_n + 1);
    let mut current = eco::level(1);
    for n in 1..=max_n {
        let set: HashSet<&Permutomino> = current.iter().collect();
        if set.len() != current.len() || big(current.len() as u64) != counts[n as usize - 1] {
            return CheckOutcome::fail(
                NAME,
                format!("level {n}: {} objects, {} distinct, f = {}", current.len(), set.len(), counts[n as usize - 1]),
            );
        }
        let mut next: Vec<Permutomino> = Vec::new();
        for p in &current {
            match check_node(p) {
                Ok(kids) => next.extend(kids.into_iter().map(|(_, c)| c)),
                Err(e) => return CheckOutcome::fail_at(NAME, e, p),
            }
        }
        let union: HashSet<&Permutomino> = next.iter().collect();
        if union.len() != next.len() {
            let mut seen = HashSet::new();
            let dup = next.iter().find(|c| !seen.insert(*c)).expect("duplicate exists");
            return CheckOutcome::fail_at(NAME, format!("level {} produced twice", n + 1), dup);
        }
        if big(next.len() as u64) != counts[n as usize] {
            return CheckOutcome::fail(
                NAME,
                format!("children of level {n} number {}, f = {}", next.len(), counts[n as usize]),
            );
        }
        current = next;
    }
    CheckOutcome::pass(NAME, format!("levels 1..={max_n} expand exactly onto the next level"))
}

pub fn check_corners(max_n: u32) -> CheckOutcome {
    const NAME: &str = "corner identities";
    for n in 1..=max_n {
        let mut failure = None;
        eco::generate(n, |p| {
            if failure.is_some() {
                return;
            }
            let word = p.boundary_word();
            let r = p.corner_report();
            let m = p.reentrant_matrix();
            let ok = word.len() == 4 * n as usize
                && r.turning_number() == 4
                && r.salient.len() == n as usize + 3
                && r.reentrant.len() == n as usize - 1
                && m.is_permutation_matrix();
            if !ok {
                failure = Some(p.clone());
            }
        });
        if let Some(p) = failure {
            return CheckOutcome::fail_at(NAME, format!("size {n}"), &p);
        }
    }
    CheckOutcome::pass(NAME, format!("4n boundary, n+3 salient, n-1 reentrant, permutation matrix for n <= {max_n}"))
}

/// Generated objects survive the pair round trip.
pub fn check_vertex_permutations(max_n: u32) -> CheckOutcome {
    const NAME: &str = "vertex permutations";
    for n in 1..=max_n {
        let mut failure = None;
        eco::generate(n, |p| {
            if failure.is_some() {
                return;
            }
            let pp = p.vertex_permutations();
            let ok = pp.pi1.iter().zip(&pp.pi2).all(|(a, b)| a != b)
                && crate::grid::from_permutations(&pp).as_ref() == Ok(p);
            if !ok {
                failure = Some(p.clone());
            }
        });
        if let Some(p) = failure {
            return CheckOutcome::fail_at(NAME, format!("size {n}"), &p);
        }
    }
    CheckOutcome::pass(NAME, format!("from_permutations inverts vertex_permutations for n <= {max_n}"))
}

pub fn check_oracle_calibration(max_m: u32) -> CheckOutcome {
    const NAME: &str = "oracle calibration";
    for m in 0..=max_m {
        let got = oracle::convex_by_semi_perimeter(m);
        let want = closed_convex_polyominoes(m);
        if big(got) != want {
            return CheckOutcome::fail(NAME, format!("semi-perimeter {}: {got} enumerated, {want} expected", m + 2));
        }
        if let Some(&known) = KNOWN_CONVEX_POLYOMINOES.get(m as usize) {
            if got != known {
                return CheckOutcome::fail(NAME, format!("semi-perimeter {}: {got}, listed {known}", m + 2));
            }
        }
    }
    CheckOutcome::pass(NAME, format!("convex polyomino totals match for semi-perimeter <= {}", max_m + 2))
}

pub fn check_oracle(max_n: u32) -> CheckOutcome {
    const NAME: &str = "oracle triangulation";
    let counts = counts_up_to(max_n);
    for n in 1..=max_n {
        let o = oracle::oracle_count_permutominoes(n);
        if big(o) != counts[n as usize - 1] {
            return CheckOutcome::fail(NAME, format!("oracle({n}) = {o}, census {}", counts[n as usize - 1]));
        }
    }
    CheckOutcome::pass(NAME, format!("oracle count = census for n <= {max_n}"))
}

/// The oracle and the generator produce the same sets.
pub fn check_oracle_sets(max_n: u32) -> CheckOutcome {
    const NAME: &str = "oracle sets";
    for n in 1..=max_n {
        let from_oracle: HashSet<Permutomino> = oracle::oracle_permutominoes(n).into_iter().collect();
        let generated: HashSet<Permutomino> = eco::level(n).into_iter().collect();
        if let Some(p) = generated.symmetric_difference(&from_oracle).next() {
            return CheckOutcome::fail_at(NAME, format!("size {n}: sets differ"), p);
        }
    }
    CheckOutcome::pass(NAME, format!("oracle and generator agree as sets for n <= {max_n}"))
}

pub fn check_class_split(max_n: u32) -> CheckOutcome {
    const NAME: &str = "class split";
    for n in 1..=max_n {
        let census = LabelCensus::at_level(n);
        let mut tally = std::collections::BTreeMap::<(u32, Class), u64>::new();
        eco::generate(n, |p| *tally.entry(p.label().key()).or_default() += 1);
        let from_census: std::collections::BTreeMap<(u32, Class), u64> =
            census.iter().map(|(k, c, v)| ((k, c), v.to_u64().expect("small"))).collect();
        if tally != from_census {
            return CheckOutcome::fail(NAME, format!("level {n}: generator and census labels differ"));
        }
    }
    CheckOutcome::pass(NAME, format!("generated labels match the census for n <= {max_n}"))
}

pub fn check_corollaries(max_n: u32) -> CheckOutcome {
    const NAME: &str = "corollaries";
    for c in LabelCensus::levels(max_n) {
        let n = c.level();
        let t = c.by_class();
        if t.b != closed_stack(n) {
            return CheckOutcome::fail(NAME, format!("B_{n} = {}, 2^(n-1) = {}", t.b, closed_stack(n)));
        }
        if t.r.bit(0) {
            return CheckOutcome::fail(NAME, format!("R_{n} = {} is odd", t.r));
        }
        let directed = &t.b + &t.r / 2u32;
        let half_central = central_binomial(u64::from(n)) / 2u32;
        if directed != half_central {
            return CheckOutcome::fail(NAME, format!("B_{n} + R_{n}/2 = {directed}, C(2n,n)/2 = {half_central}"));
        }
    }
    CheckOutcome::pass(NAME, format!("B_n = 2^(n-1) and B_n + R_n/2 = C(2n,n)/2 for n <= {max_n}"))
}

pub fn check_functional_equations(order: usize, kernel_order: usize) -> CheckOutcome {
    const NAME: &str = "functional equations";
    let (r, g) = series::check_functional_equations(order);
    for res in [&r, &g] {
        if !res.is_zero() {
            return CheckOutcome::fail(NAME, format!("{} residual {:?}", res.name, res.nonzero.first()));
        }
    }
    let kernel = series::check_kernel(kernel_order);
    if !kernel.is_zero() {
        return CheckOutcome::fail(NAME, format!("kernel residual {kernel}"));
    }
    let s0 = series::kernel_root_s0(kernel_order);
    if s0.coeffs().iter().any(|c| c <= &BigRational::from_integer(0.into())) {
        return CheckOutcome::fail(NAME, "s0 has a non-positive coefficient");
    }
    CheckOutcome::pass(
        NAME,
        format!("R and G equations vanish to t^{order}; 1 - s0 + t s0^2 vanishes to t^{kernel_order}"),
    )
}

pub fn check_perm_pairs(max_n: u32) -> CheckOutcome {
    const NAME: &str = "permutation pairs";
    for n in 1..=max_n {
        let got = oracle::perm_pair_oracle(n);
        let want = KNOWN_COUNTS[n as usize - 1];
        if got != want {
            return CheckOutcome::fail(NAME, format!("pairs of [{}] decode to {got} permutominoes, expected {want}", n + 1));
        }
    }
    CheckOutcome::pass(NAME, format!("pair decoding reaches f_n for n <= {max_n}"))
}

/// Bounds for [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest size materialized by the generator.
    pub max_n: u32,
    /// Largest size for the brute-force oracle.
    pub oracle_max_n: u32,
    /// Largest size for the permutation-pair decoder.
    pub pair_max_n: u32,
    pub census_max_n: u32,
    pub series_order: usize,
}

impl VerifyConfig {
    pub fn up_to(max_n: u32) -> Self {
        VerifyConfig {
            max_n,
            oracle_max_n: max_n.min(7),
            pair_max_n: max_n.min(4),
            census_max_n: 40,
            series_order: 25,
        }
    }
}

pub fn run_all(cfg: VerifyConfig) -> Vec<CheckOutcome> {
    vec![
        check_sequence(),
        check_closed_form(cfg.census_max_n),
        check_series(cfg.series_order),
        check_eco(cfg.max_n),
        check_corners(cfg.max_n),
        check_vertex_permutations(cfg.max_n.min(7)),
        check_class_split(cfg.max_n),
        check_oracle_calibration(10),
        check_oracle(cfg.oracle_max_n),
        check_oracle_sets(cfg.oracle_max_n.min(6)),
        check_corollaries(20),
        check_functional_equations(12, 30),
        check_perm_pairs(cfg.pair_max_n),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn production_shapes() {
        assert_eq!(production(Label::b(1)), vec![(1, Class::R), (1, Class::R), (2, Class::B), (2, Class::B)]);
        assert_eq!(production(Label::r(2, Side::Top)).len(), 5);
        assert_eq!(production(Label::g(3)).len(), 6);
    }

    #[test]
    fn small_suite_passes() {
        for outcome in run_all(VerifyConfig::up_to(4)) {
            assert!(outcome.passed, "{outcome}");
        }
    }

    #[test]
    fn outcome_display() {
        let p = Permutomino::single_cell();
        let o = CheckOutcome::fail_at("x", "broken", &p);
        assert_eq!(
            o.to_string(),
            "FAIL x: broken\n  witness: {\"n\":1,\"cols\":[[1,1]],\"label\":{\"k\":1,\"class\":\"B\"}}"
        );
    }
}
