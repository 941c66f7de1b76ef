//! Brute-force enumeration of convex polyominoes and convex permutominoes.
//!
//! Nothing here touches the ECO construction; only the predicates of
//! [`crate::grid`] are shared.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::grid::{from_permutations, Column, ColumnPolyomino, PermPair, PermPairError, Permutomino};

/// Columns chosen so far plus the monotonicity phase of their tops and
/// bottoms. In a convex polyomino the tops rise then fall and the bottoms
/// fall then rise.
#[derive(Debug, Clone)]
struct IntervalStack {
    rows: u32,
    cols: Vec<Column>,
    /// Per depth: (tops have started falling, bottoms have started rising).
    phase: Vec<(bool, bool)>,
}

impl IntervalStack {
    fn new(rows: u32, width: u32) -> Self {
        IntervalStack {
            rows,
            cols: Vec::with_capacity(width as usize),
            phase: Vec::with_capacity(width as usize),
        }
    }

    /// Pushes `c` if it keeps the partial sequence connected and unimodal.
    fn try_push(&mut self, c: Column) -> bool {
        let phase = match (self.cols.last(), self.phase.last()) {
            (None, _) => (false, false),
            (Some(prev), Some(&(falling, rising))) => {
                if c.lo > prev.hi || c.hi < prev.lo {
                    return false;
                }
                if (falling && c.hi > prev.hi) || (rising && c.lo < prev.lo) {
                    return false;
                }
                (falling || c.hi < prev.hi, rising || c.lo > prev.lo)
            }
            (Some(_), None) => unreachable!(),
        };
        self.cols.push(c);
        self.phase.push(phase);
        true
    }

    fn pop(&mut self) {
        self.cols.pop();
        self.phase.pop();
    }

    fn spans_all_rows(&self) -> bool {
        self.cols.iter().any(|c| c.lo == 1) && self.cols.iter().any(|c| c.hi == self.rows)
    }
}

fn dfs<F: FnMut(&ColumnPolyomino)>(st: &mut IntervalStack, width: u32, visit: &mut F) -> u64 {
    if st.cols.len() as u32 == width {
        if !st.spans_all_rows() {
            return 0;
        }
        let poly = ColumnPolyomino::new(st.cols.iter().copied()).expect("connected by construction");
        if !poly.is_convex() {
            return 0;
        }
        visit(&poly);
        return 1;
    }
    let mut total = 0;
    for lo in 1..=st.rows {
        for hi in lo..=st.rows {
            if st.try_push(Column::new(lo, hi)) {
                total += dfs(st, width, visit);
                st.pop();
            }
        }
    }
    total
}

/// Visits every convex polyomino with exactly `cols` columns and `rows` rows,
/// returning how many there are.
pub fn enumerate_convex<F: FnMut(&ColumnPolyomino)>(rows: u32, cols: u32, mut visit: F) -> u64 {
    if rows == 0 || cols == 0 {
        return 0;
    }
    dfs(&mut IntervalStack::new(rows, cols), cols, &mut visit)
}

/// Parallel count over first-column subtrees, keeping the leaves accepted by
/// `keep`.
fn count_convex_par<P>(rows: u32, cols: u32, keep: P) -> u64
where
    P: Fn(&ColumnPolyomino) -> bool + Sync,
{
    if rows == 0 || cols == 0 {
        return 0;
    }
    let firsts: Vec<Column> = (1..=rows).flat_map(|lo| (lo..=rows).map(move |hi| Column::new(lo, hi))).collect();
    let total = AtomicU64::new(0);
    firsts.par_iter().for_each(|&first| {
        let mut st = IntervalStack::new(rows, cols);
        st.try_push(first);
        let mut kept = 0u64;
        dfs(&mut st, cols, &mut |p: &ColumnPolyomino| {
            if keep(p) {
                kept += 1;
            }
        });
        total.fetch_add(kept, Ordering::Relaxed);
    });
    total.into_inner()
}

/// Number of convex polyominoes of semi-perimeter `m + 2`.
pub fn convex_by_semi_perimeter(m: u32) -> u64 {
    let sp = m + 2;
    (1..sp).map(|rows| count_convex_par(rows, sp - rows, |_| true)).sum()
}

pub fn oracle_count_permutominoes(n: u32) -> u64 {
    count_convex_par(n, n, ColumnPolyomino::is_permutomino)
}

/// Every convex permutomino of size `n` found by filtering convex
/// polyominoes, in enumeration order.
pub fn oracle_permutominoes(n: u32) -> Vec<Permutomino> {
    let mut out = Vec::new();
    enumerate_convex(n, n, |p| {
        if p.is_permutomino() {
            out.push(Permutomino::try_from(p.clone()).expect("convex and permutomino"));
        }
    });
    out
}

/// Outcome tally of decoding every pointwise-distinct permutation pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairCensus {
    pub pairs: u64,
    pub valid: u64,
    pub disconnected: u64,
    pub self_intersecting: u64,
    pub counter_clockwise: u64,
    pub not_convex: u64,
    /// Distinct permutominoes among the valid decodings.
    pub distinct: u64,
}

fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("exists past i");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn permutations(m: u32) -> Vec<Vec<u32>> {
    let mut p: Vec<u32> = (1..=m).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// Decodes every pair of pointwise-distinct permutations of `[n+1]`.
/// Intended for `n <= 5`.
pub fn perm_pair_census(n: u32) -> PairCensus {
    let perms = permutations(n + 1);
    let mut census = PairCensus::default();
    let mut seen = HashSet::new();
    for pi1 in &perms {
        for pi2 in &perms {
            if pi1.iter().zip(pi2).any(|(a, b)| a == b) {
                continue;
            }
            census.pairs += 1;
            let pair = PermPair { pi1: pi1.clone(), pi2: pi2.clone() };
            match from_permutations(&pair) {
                Ok(p) => {
                    census.valid += 1;
                    seen.insert(p);
                }
                Err(PermPairError::Disconnected { .. }) => census.disconnected += 1,
                Err(PermPairError::SelfIntersecting(_)) => census.self_intersecting += 1,
                Err(PermPairError::CounterClockwise) => census.counter_clockwise += 1,
                Err(PermPairError::NotConvex) => census.not_convex += 1,
                Err(e) => unreachable!("input pairs are well formed: {e}"),
            }
        }
    }
    census.distinct = seen.len() as u64;
    census
}

/// Distinct convex permutominoes reached from permutation pairs of `[n+1]`.
pub fn perm_pair_oracle(n: u32) -> u64 {
    perm_pair_census(n).distinct
}
