use std::collections::BTreeMap;

use proptest::prelude::*;

use permutomino::eco::{apply, children, operations, parent, Operation};
use permutomino::grid::{from_permutations, CornerKind};
use permutomino::oracle::enumerate_convex;
use permutomino::verify::{check_node, production};
use permutomino::{Class, ColumnPolyomino, Permutomino, Side};

/// Walks from the single cell, picking each child by `choices[i] % fanout`.
fn walk(choices: &[usize]) -> (Permutomino, Vec<Operation>) {
    let mut p = Permutomino::single_cell();
    let mut path = Vec::new();
    for &c in choices {
        let ops: Vec<Operation> = operations(&p).collect();
        let op = ops[c % ops.len()];
        p = apply(&p, op).unwrap();
        path.push(op);
    }
    (p, path)
}

fn arb_permutomino() -> impl Strategy<Value = (Permutomino, Vec<Operation>)> {
    prop::collection::vec(any::<usize>(), 0..10).prop_map(|c| walk(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn node_laws_hold((p, _) in arb_permutomino()) {
        if let Err(e) = check_node(&p) {
            prop_assert!(false, "{}", e);
        }
    }

    #[test]
    fn parent_chain_replays_path((p, path) in arb_permutomino()) {
        let mut cur = p;
        for &op in path.iter().rev() {
            let (q, back) = parent(&cur).unwrap();
            prop_assert_eq!(back, op);
            cur = q;
        }
        prop_assert_eq!(&cur, &Permutomino::single_cell());
        prop_assert!(parent(&cur).is_err());
    }

    #[test]
    fn corner_identities((p, _) in arb_permutomino()) {
        let n = p.size() as usize;
        let r = p.corner_report();
        prop_assert_eq!(p.boundary_word().len(), 4 * n);
        prop_assert_eq!(r.salient.len(), n + 3);
        prop_assert_eq!(r.reentrant.len(), n - 1);
        prop_assert!(p.reentrant_matrix().is_permutation_matrix());
    }

    #[test]
    fn pair_round_trip((p, _) in arb_permutomino()) {
        let pair = p.vertex_permutations();
        prop_assert_eq!(pair.len(), p.size() as usize + 1);
        prop_assert_eq!(from_permutations(&pair).unwrap(), p);
    }

    #[test]
    fn rightmost_reentrant_names_last_operation((p, path) in arb_permutomino()) {
        let kind = p.corner_report().rightmost_reentrant().map(|c| c.kind);
        match path.last() {
            None => prop_assert_eq!(kind, None),
            Some(op) => prop_assert_eq!(kind, Some(CornerKind::Reentrant(op.kind()))),
        }
    }

    #[test]
    fn record_round_trip((p, path) in arb_permutomino()) {
        let rec = permutomino::record::PermutominoRecord::with_path(&p, &path);
        let back = permutomino::record::PermutominoRecord::parse(&rec.to_json_line()).unwrap();
        prop_assert_eq!(back.permutomino().unwrap(), p);
        prop_assert_eq!(back.operations().unwrap().unwrap(), path);
    }
}

#[test]
fn class_transitions_by_side() {
    // (1)_r touching the bottom only, and its mirror touching the top only
    let bottom = Permutomino::new([(1, 2), (1, 1)]).unwrap();
    let top = Permutomino::new([(1, 2), (2, 2)]).unwrap();
    assert_eq!(bottom.label().side, Some(Side::Bottom));
    assert_eq!(top.label().side, Some(Side::Top));
    for p in [bottom, top] {
        let mut got: Vec<(u32, Class)> = children(&p).iter().map(|(_, c)| c.label().key()).collect();
        got.sort();
        assert_eq!(got, production(p.label()));
    }
}

/// Lattice points where the cell neighbourhood turns: one or three of the
/// four surrounding cells occupied, or two diagonal ones.
fn vertices(p: &ColumnPolyomino) -> Vec<(u32, u32)> {
    let cell = |x: u32, y: u32| x >= 1 && y >= 1 && p.contains(x, y);
    let mut out = Vec::new();
    for x in 0..=p.width() {
        for y in 0..=p.height() {
            let around = [cell(x, y), cell(x + 1, y), cell(x, y + 1), cell(x + 1, y + 1)];
            let k = around.iter().filter(|&&b| b).count();
            let diagonal = k == 2 && around[0] == around[3];
            if k == 1 || k == 3 || diagonal {
                out.push((x, y));
            }
        }
    }
    out
}

fn vertex_definition(p: &ColumnPolyomino) -> bool {
    if p.width() != p.height() {
        return false;
    }
    let vs = vertices(p);
    let mut by_x = BTreeMap::<u32, usize>::new();
    let mut by_y = BTreeMap::<u32, usize>::new();
    for &(x, y) in &vs {
        *by_x.entry(x).or_default() += 1;
        *by_y.entry(y).or_default() += 1;
    }
    let n = p.width();
    (0..=n).all(|i| by_x.get(&i) == Some(&2) && by_y.get(&i) == Some(&2))
}

#[test]
fn permutomino_predicate_matches_vertex_definition() {
    for rows in 1..=5 {
        for cols in 1..=5 {
            enumerate_convex(rows, cols, |p| {
                assert_eq!(p.is_permutomino(), vertex_definition(p), "{p}");
            });
        }
    }
}

#[test]
fn children_cover_every_operation_once() {
    let (p, _) = walk(&[3, 1, 4, 1, 5]);
    let ops: Vec<Operation> = operations(&p).collect();
    let kids: Vec<Operation> = children(&p).into_iter().map(|(op, _)| op).collect();
    assert_eq!(ops, kids);
}
