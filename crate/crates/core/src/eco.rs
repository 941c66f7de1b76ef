//! The ECO operator on convex permutominoes.
//!
//! Every convex permutomino of size `n + 1` arises exactly once by applying
//! one of four local expansions to the rightmost column of a permutomino of
//! size `n`:
//!
//! * `alpha` (needs U1): append a column one cell taller than the last one,
//!   reaching a new top row;
//! * `beta(i)`: duplicate the row through the `i`-th cell of the last column,
//!   then append a column covering that column's cells `1..=i`;
//! * `gamma(i)`: same row duplication, then append a column covering the cells
//!   `i..=k` of the (extended) last column, anchored at its top;
//! * `delta` (needs U2): append a column one cell taller than the last one,
//!   reaching a new bottom row.
//!
//! [`parent`] inverts the construction by looking at the kind of the
//! rightmost reentrant corner.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::grid::{Column, CornerKind, Permutomino, ReentrantKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EcoError {
    #[error("alpha needs the rightmost column to reach the top row")]
    NotTouchingTop,
    #[error("delta needs the rightmost column to reach the bottom row")]
    NotTouchingBottom,
    #[error("cell index {index} outside 1..={degree}")]
    CellIndexOutOfRange { index: u32, degree: u32 },
    #[error("the single cell has no parent")]
    NoParent,
}

/// One expansion of the operator; `Beta` and `Gamma` carry the 1-based cell
/// index in the rightmost column, counted from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operation {
    Alpha,
    Beta(u32),
    Gamma(u32),
    Delta,
}

impl Operation {
    pub fn kind(self) -> ReentrantKind {
        match self {
            Operation::Alpha => ReentrantKind::Alpha,
            Operation::Beta(_) => ReentrantKind::Beta,
            Operation::Gamma(_) => ReentrantKind::Gamma,
            Operation::Delta => ReentrantKind::Delta,
        }
    }

    pub fn cell_index(self) -> Option<u32> {
        match self {
            Operation::Beta(i) | Operation::Gamma(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Alpha => f.write_str("alpha"),
            Operation::Beta(i) => write!(f, "beta{i}"),
            Operation::Gamma(i) => write!(f, "gamma{i}"),
            Operation::Delta => f.write_str("delta"),
        }
    }
}

impl std::str::FromStr for Operation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let index = |rest: &str| rest.parse::<u32>().map_err(|e| format!("{s}: {e}"));
        match s {
            "alpha" => Ok(Operation::Alpha),
            "delta" => Ok(Operation::Delta),
            _ if s.starts_with("beta") => Ok(Operation::Beta(index(&s[4..])?)),
            _ if s.starts_with("gamma") => Ok(Operation::Gamma(index(&s[5..])?)),
            _ => Err(format!("unknown operation {s:?}")),
        }
    }
}

/// Duplicates row `r`; columns through `r` grow by one, columns above shift.
fn duplicate_row(cols: &[Column], r: u32) -> Vec<Column> {
    cols.iter()
        .map(|c| Column::new(c.lo + u32::from(c.lo > r), c.hi + u32::from(c.hi >= r)))
        .collect()
}

/// Removes row `r`; inverse of [`duplicate_row`] on a row that has a twin.
fn remove_row(cols: &[Column], r: u32) -> Vec<Column> {
    cols.iter()
        .map(|c| Column::new(c.lo - u32::from(c.lo > r), c.hi - u32::from(c.hi >= r)))
        .collect()
}

fn check_index(p: &Permutomino, i: u32) -> Result<u32, EcoError> {
    let degree = p.degree();
    if i == 0 || i > degree {
        return Err(EcoError::CellIndexOutOfRange { index: i, degree });
    }
    Ok(p.rightmost().lo + i - 1)
}

pub fn op_alpha(p: &Permutomino) -> Result<Permutomino, EcoError> {
    if !p.touches_top() {
        return Err(EcoError::NotTouchingTop);
    }
    let last = p.rightmost();
    let mut cols = p.columns().to_vec();
    cols.push(Column::new(last.lo, last.hi + 1));
    Ok(Permutomino::from_columns_unchecked(cols))
}

pub fn op_beta(p: &Permutomino, i: u32) -> Result<Permutomino, EcoError> {
    let r = check_index(p, i)?;
    let last = p.rightmost();
    let mut cols = duplicate_row(p.columns(), r);
    cols.push(Column::new(last.lo, r));
    Ok(Permutomino::from_columns_unchecked(cols))
}

pub fn op_gamma(p: &Permutomino, i: u32) -> Result<Permutomino, EcoError> {
    let r = check_index(p, i)?;
    let last = p.rightmost();
    let mut cols = duplicate_row(p.columns(), r);
    cols.push(Column::new(r + 1, last.hi + 1));
    Ok(Permutomino::from_columns_unchecked(cols))
}

pub fn op_delta(p: &Permutomino) -> Result<Permutomino, EcoError> {
    if !p.touches_bottom() {
        return Err(EcoError::NotTouchingBottom);
    }
    let last = p.rightmost();
    let mut cols: Vec<Column> = p.columns().iter().map(|c| Column::new(c.lo + 1, c.hi + 1)).collect();
    cols.push(Column::new(1, last.hi + 1));
    Ok(Permutomino::from_columns_unchecked(cols))
}

pub fn apply(p: &Permutomino, op: Operation) -> Result<Permutomino, EcoError> {
    match op {
        Operation::Alpha => op_alpha(p),
        Operation::Beta(i) => op_beta(p, i),
        Operation::Gamma(i) => op_gamma(p, i),
        Operation::Delta => op_delta(p),
    }
}

/// Admissible operations in emission order: alpha, beta by ascending index,
/// gamma by ascending index, delta.
pub fn operations(p: &Permutomino) -> impl Iterator<Item = Operation> {
    let k = p.degree();
    let alpha = p.touches_top().then_some(Operation::Alpha);
    let delta = p.touches_bottom().then_some(Operation::Delta);
    alpha
        .into_iter()
        .chain((1..=k).map(Operation::Beta))
        .chain((1..=k).map(Operation::Gamma))
        .chain(delta)
}

pub fn children(p: &Permutomino) -> Vec<(Operation, Permutomino)> {
    operations(p)
        .map(|op| (op, apply(p, op).expect("operation admissible by construction")))
        .collect()
}

/// The unique permutomino and operation producing `p`.
pub fn parent(p: &Permutomino) -> Result<(Permutomino, Operation), EcoError> {
    let n = p.size();
    if n < 2 {
        return Err(EcoError::NoParent);
    }
    let report = p.corner_report();
    let corner = report.rightmost_reentrant().expect("size >= 2 has reentrant corners");
    let kind = match corner.kind {
        CornerKind::Reentrant(k) => k,
        CornerKind::Salient => unreachable!(),
    };
    let (body, last) = p.columns().split_at(n as usize - 1);
    let last = last[0];
    let (cols, op) = match kind {
        ReentrantKind::Alpha => (body.to_vec(), Operation::Alpha),
        ReentrantKind::Delta => (
            body.iter().map(|c| Column::new(c.lo - 1, c.hi - 1)).collect(),
            Operation::Delta,
        ),
        ReentrantKind::Beta => (remove_row(body, last.hi + 1), Operation::Beta(last.len())),
        ReentrantKind::Gamma => {
            let cols = remove_row(body, last.lo - 1);
            let degree = cols[cols.len() - 1].len();
            (cols, Operation::Gamma(degree - last.len() + 1))
        }
    };
    Ok((Permutomino::from_columns_unchecked(cols), op))
}

fn walk<F>(p: &Permutomino, n: u32, path: &mut Vec<Operation>, visit: &mut F)
where
    F: FnMut(&Permutomino, &[Operation]),
{
    if p.size() == n {
        visit(p, path);
        return;
    }
    for op in operations(p) {
        let child = apply(p, op).expect("operation admissible by construction");
        path.push(op);
        walk(&child, n, path, visit);
        path.pop();
    }
}

/// Depth-first traversal of the generating tree, calling `visit` once for
/// each convex permutomino of size `n` together with its operation path from
/// the single cell. Memory is proportional to the depth.
pub fn generate_with_paths<F>(n: u32, mut visit: F)
where
    F: FnMut(&Permutomino, &[Operation]),
{
    if n == 0 {
        return;
    }
    walk(&Permutomino::single_cell(), n, &mut Vec::with_capacity(n as usize), &mut visit);
}

pub fn generate<F>(n: u32, mut visit: F)
where
    F: FnMut(&Permutomino),
{
    generate_with_paths(n, |p, _| visit(p));
}

/// Parallel variant of [`generate`]: subtrees rooted at a fixed depth are
/// traversed on the rayon pool. Visit order is unspecified.
pub fn generate_par<F>(n: u32, visit: F)
where
    F: Fn(&Permutomino) + Sync,
{
    if n == 0 {
        return;
    }
    let split = n.min(4);
    let roots = level(split);
    roots.par_iter().for_each(|root| {
        walk(root, n, &mut Vec::new(), &mut |p: &Permutomino, _: &[Operation]| visit(p));
    });
}

/// All convex permutominoes of size `n`, in traversal order.
pub fn level(n: u32) -> Vec<Permutomino> {
    let mut out = Vec::new();
    generate(n, |p| out.push(p.clone()));
    out
}

/// Number of size-`n` leaves reached by the traversal.
pub fn count(n: u32) -> u64 {
    let mut total = 0;
    generate(n, |_| total += 1);
    total
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::grid::{Label, Side};

    fn perm(cols: &[(u32, u32)]) -> Permutomino {
        Permutomino::new(cols.iter().copied()).unwrap()
    }

    #[test]
    fn single_cell_children() {
        let root = Permutomino::single_cell();
        let kids = children(&root);
        let got: Vec<(Operation, Vec<Column>)> =
            kids.iter().map(|(op, c)| (*op, c.columns().to_vec())).collect();
        assert_eq!(
            got,
            vec![
                (Operation::Alpha, vec![Column::new(1, 1), Column::new(1, 2)]),
                (Operation::Beta(1), vec![Column::new(1, 2), Column::new(1, 1)]),
                (Operation::Gamma(1), vec![Column::new(1, 2), Column::new(2, 2)]),
                (Operation::Delta, vec![Column::new(2, 2), Column::new(1, 2)]),
            ]
        );
        let labels: Vec<Label> = kids.iter().map(|(_, c)| c.label()).collect();
        assert_eq!(
            labels,
            vec![Label::b(2), Label::r(1, Side::Bottom), Label::r(1, Side::Top), Label::b(2)]
        );
    }

    #[test]
    fn preconditions() {
        let g = perm(&[(1, 3), (2, 3), (2, 2)]);
        assert_eq!(op_alpha(&g), Err(EcoError::NotTouchingTop));
        assert_eq!(op_delta(&g), Err(EcoError::NotTouchingBottom));
        assert_eq!(
            op_beta(&g, 2),
            Err(EcoError::CellIndexOutOfRange { index: 2, degree: 1 })
        );
        assert_eq!(
            op_gamma(&g, 0),
            Err(EcoError::CellIndexOutOfRange { index: 0, degree: 1 })
        );
        assert_eq!(parent(&Permutomino::single_cell()), Err(EcoError::NoParent));
    }

    #[test]
    fn parent_examples() {
        assert_eq!(
            parent(&perm(&[(1, 1), (1, 2)])).unwrap(),
            (Permutomino::single_cell(), Operation::Alpha)
        );
        assert_eq!(
            parent(&perm(&[(1, 2), (1, 1)])).unwrap(),
            (Permutomino::single_cell(), Operation::Beta(1))
        );
    }

    #[test]
    fn class_g_children_stay_g() {
        let g = perm(&[(1, 3), (2, 3), (2, 2)]);
        let kids = children(&g);
        assert_eq!(kids.len(), 2);
        assert!(kids.iter().all(|(_, c)| c.label() == Label::g(1)));
    }

    #[test]
    fn operation_names_round_trip() {
        for op in [Operation::Alpha, Operation::Beta(3), Operation::Gamma(12), Operation::Delta] {
            assert_eq!(op.to_string().parse::<Operation>(), Ok(op));
        }
        assert!("beta".parse::<Operation>().is_err());
        assert!("eta1".parse::<Operation>().is_err());
    }

    #[test]
    fn small_levels() {
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 4);
        assert_eq!(count(3), 18);
        let lvl = level(4);
        assert_eq!(lvl.len(), 84);
        assert_eq!(lvl.iter().collect::<HashSet<_>>().len(), 84);
    }

    #[test]
    fn parallel_matches_sequential() {
        use std::sync::Mutex;
        let seen = Mutex::new(Vec::new());
        generate_par(6, |p| seen.lock().unwrap().push(p.clone()));
        let mut par = seen.into_inner().unwrap();
        let mut seq = level(6);
        par.sort();
        seq.sort();
        assert_eq!(par, seq);
    }
}
