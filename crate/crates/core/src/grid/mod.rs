//! Lattice model: column-interval polyominoes, convex permutominoes and
//! their labels.
//!
//! Cells are addressed by 1-based `(column, row)`. A cell `(x, y)` is the unit
//! square with lower-left lattice point `(x, y)`, so a polyomino with `w`
//! columns and `h` rows has its boundary vertices in `[1, w+1] x [1, h+1]`.

mod boundary;
mod perm;
mod render;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use boundary::{BoundaryWord, Corner, CornerKind, CornerReport, Point, ReentrantKind, Run, Step};
pub use perm::{from_permutations, PermPair, PermPairError, ReentrantPermutation};
pub use render::{render_ascii, render_svg};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("polyomino has no columns")]
    Empty,
    #[error("column {column} has inverted interval [{lo}, {hi}]")]
    InvertedInterval { column: usize, lo: u32, hi: u32 },
    #[error("column {column} has ordinate 0; ordinates are 1-based")]
    ZeroOrdinate { column: usize },
    #[error("columns {column} and {} do not share an edge", column + 1)]
    Disconnected { column: usize },
    #[error("polyomino is not row-convex")]
    NotConvex,
    #[error("polyomino is not a permutomino")]
    NotPermutomino,
    #[error("boundary word contains a back-track at position {position}")]
    Backtrack { position: usize },
    #[error("boundary word is not a closed path")]
    NotClosed,
    #[error("boundary word is empty")]
    EmptyWord,
    #[error("boundary word visits lattice point ({x}, {y}) twice")]
    SelfIntersecting { x: i64, y: i64 },
    #[error("boundary word runs counter-clockwise")]
    CounterClockwise,
    #[error("unknown boundary step {0:?}")]
    BadStep(char),
}

/// One column of cells, rows `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct Column {
    pub lo: u32,
    pub hi: u32,
}

impl Column {
    pub const fn new(lo: u32, hi: u32) -> Self {
        Column { lo, hi }
    }

    #[allow(clippy::len_without_is_empty)]
    pub const fn len(self) -> u32 {
        self.hi - self.lo + 1
    }

    pub const fn contains(self, y: u32) -> bool {
        self.lo <= y && y <= self.hi
    }

    fn overlaps(self, other: Column) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl From<[u32; 2]> for Column {
    fn from([lo, hi]: [u32; 2]) -> Self {
        Column { lo, hi }
    }
}

impl From<Column> for [u32; 2] {
    fn from(c: Column) -> Self {
        [c.lo, c.hi]
    }
}

impl From<(u32, u32)> for Column {
    fn from((lo, hi): (u32, u32)) -> Self {
        Column { lo, hi }
    }
}

/// A connected, column-convex polyomino given as one row interval per column,
/// normalized so that its lowest cell sits on row 1.
///
/// Row-convexity and the permutomino property are not required; the oracle
/// and the permutation-pair decoder use this type for general candidates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnPolyomino {
    cols: Vec<Column>,
}

impl ColumnPolyomino {
    /// Builds a polyomino from raw intervals, shifting it down so that the
    /// minimal ordinate is 1.
    pub fn new<I, C>(cols: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = C>,
        C: Into<Column>,
    {
        let mut cols: Vec<Column> = cols.into_iter().map(Into::into).collect();
        if cols.is_empty() {
            return Err(GridError::Empty);
        }
        for (i, c) in cols.iter().enumerate() {
            if c.lo == 0 {
                return Err(GridError::ZeroOrdinate { column: i + 1 });
            }
            if c.lo > c.hi {
                return Err(GridError::InvertedInterval {
                    column: i + 1,
                    lo: c.lo,
                    hi: c.hi,
                });
            }
        }
        for (i, w) in cols.windows(2).enumerate() {
            if !w[0].overlaps(w[1]) {
                return Err(GridError::Disconnected { column: i + 1 });
            }
        }
        let shift = cols.iter().map(|c| c.lo).min().unwrap_or(1) - 1;
        if shift > 0 {
            for c in &mut cols {
                c.lo -= shift;
                c.hi -= shift;
            }
        }
        Ok(ColumnPolyomino { cols })
    }

    /// Wraps intervals already known to be connected and normalized.
    pub(crate) fn from_normalized(cols: Vec<Column>) -> Self {
        debug_assert!(ColumnPolyomino::new(cols.clone()).map(|p| p.cols) == Ok(cols.clone()));
        ColumnPolyomino { cols }
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn width(&self) -> u32 {
        self.cols.len() as u32
    }

    pub fn height(&self) -> u32 {
        self.cols.iter().map(|c| c.hi).max().unwrap_or(0)
    }

    pub fn area(&self) -> u64 {
        self.cols.iter().map(|c| u64::from(c.len())).sum()
    }

    pub fn semi_perimeter(&self) -> u64 {
        self.boundary_word().len() as u64 / 2
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        x >= 1 && (x as usize) <= self.cols.len() && self.cols[x as usize - 1].contains(y)
    }

    /// Leftmost and rightmost occupied column of each row, indexed by `row - 1`.
    /// Rows with a gap report their extreme columns; see [`is_convex`](Self::is_convex).
    pub fn row_extents(&self) -> Vec<(u32, u32)> {
        let mut ext = vec![(u32::MAX, 0u32); self.height() as usize];
        for (i, c) in self.cols.iter().enumerate() {
            let x = i as u32 + 1;
            for y in c.lo..=c.hi {
                let e = &mut ext[y as usize - 1];
                e.0 = e.0.min(x);
                e.1 = e.1.max(x);
            }
        }
        ext
    }

    /// True iff every row of cells is an interval. Columns are intervals by
    /// construction.
    pub fn is_convex(&self) -> bool {
        let ext = self.row_extents();
        ext.iter().enumerate().all(|(r, &(a, b))| {
            let y = r as u32 + 1;
            (a..=b).all(|x| self.cols[x as usize - 1].contains(y))
        })
    }

    /// True iff the bounding box is square and every abscissa (ordinate) in
    /// `[1, n+1]` carries exactly one vertical (horizontal) side of the
    /// boundary.
    pub fn is_permutomino(&self) -> bool {
        let n = self.width();
        if self.height() != n {
            return false;
        }
        let mut vertical = vec![0u32; n as usize + 2];
        let mut horizontal = vec![0u32; n as usize + 2];
        for side in self.boundary_word().sides() {
            let slot = match side.step {
                Step::N | Step::S => &mut vertical[side.start.x as usize],
                Step::E | Step::W => &mut horizontal[side.start.y as usize],
            };
            *slot += 1;
        }
        (1..=n as usize + 1).all(|i| vertical[i] == 1 && horizontal[i] == 1)
    }

    pub fn boundary_word(&self) -> BoundaryWord {
        BoundaryWord::of_columns(&self.cols)
    }
}

impl fmt::Display for ColumnPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.cols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", c.lo, c.hi)?;
        }
        f.write_str("]")
    }
}

/// Free-function form of [`ColumnPolyomino::is_convex`].
pub fn is_convex(p: &ColumnPolyomino) -> bool {
    p.is_convex()
}

/// Free-function form of [`ColumnPolyomino::is_permutomino`].
pub fn is_permutomino(p: &ColumnPolyomino) -> bool {
    p.is_permutomino()
}

/// Generating-tree class of a convex permutomino.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    /// Rightmost column spans the full height (U1 and U2).
    B,
    /// Rightmost column touches exactly one of the top and bottom rows.
    R,
    /// Rightmost column touches neither.
    G,
}

impl Class {
    pub fn letter(self) -> char {
        match self {
            Class::B => 'B',
            Class::R => 'R',
            Class::G => 'G',
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Which boundary a class-R rightmost column touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// U1 holds, U2 fails.
    Top,
    /// U2 holds, U1 fails.
    Bottom,
}

/// Node label `(k)_class` of the generating tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub k: u32,
    pub class: Class,
    /// Set only for class R.
    #[serde(skip)]
    pub side: Option<Side>,
}

impl Label {
    pub const fn b(k: u32) -> Self {
        Label { k, class: Class::B, side: None }
    }

    pub const fn r(k: u32, side: Side) -> Self {
        Label { k, class: Class::R, side: Some(side) }
    }

    pub const fn g(k: u32) -> Self {
        Label { k, class: Class::G, side: None }
    }

    /// The `(k, class)` pair the succession rule depends on.
    pub const fn key(self) -> (u32, Class) {
        (self.k, self.class)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})_{}", self.k, self.class.letter().to_ascii_lowercase())
    }
}

/// A convex permutomino of size `n`: `n` columns, `n` rows, row- and
/// column-convex, with exactly one vertical side on each abscissa and one
/// horizontal side on each ordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutomino {
    poly: ColumnPolyomino,
}

impl Permutomino {
    pub fn new<I, C>(cols: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = C>,
        C: Into<Column>,
    {
        Permutomino::try_from(ColumnPolyomino::new(cols)?)
    }

    pub fn single_cell() -> Self {
        Permutomino {
            poly: ColumnPolyomino::from_normalized(vec![Column::new(1, 1)]),
        }
    }

    /// Skips validation; callers guarantee the permutomino invariants.
    pub(crate) fn from_columns_unchecked(cols: Vec<Column>) -> Self {
        let poly = ColumnPolyomino::from_normalized(cols);
        debug_assert!(poly.is_convex() && poly.is_permutomino(), "invalid permutomino {poly}");
        Permutomino { poly }
    }

    pub fn size(&self) -> u32 {
        self.poly.width()
    }

    pub fn columns(&self) -> &[Column] {
        self.poly.columns()
    }

    pub fn as_polyomino(&self) -> &ColumnPolyomino {
        &self.poly
    }

    pub fn rightmost(&self) -> Column {
        *self.poly.columns().last().expect("permutomino has at least one column")
    }

    /// Number of cells in the rightmost column.
    pub fn degree(&self) -> u32 {
        self.rightmost().len()
    }

    /// U1: the rightmost column reaches the top row.
    pub fn touches_top(&self) -> bool {
        self.rightmost().hi == self.size()
    }

    /// U2: the rightmost column reaches the bottom row.
    pub fn touches_bottom(&self) -> bool {
        self.rightmost().lo == 1
    }

    pub fn label(&self) -> Label {
        let k = self.degree();
        match (self.touches_top(), self.touches_bottom()) {
            (true, true) => Label::b(k),
            (true, false) => Label::r(k, Side::Top),
            (false, true) => Label::r(k, Side::Bottom),
            (false, false) => Label::g(k),
        }
    }

    pub fn boundary_word(&self) -> BoundaryWord {
        self.poly.boundary_word()
    }

    pub fn corner_report(&self) -> CornerReport {
        self.boundary_word()
            .corner_report()
            .expect("permutomino boundary is a simple closed word")
    }
}

impl TryFrom<ColumnPolyomino> for Permutomino {
    type Error = GridError;

    fn try_from(poly: ColumnPolyomino) -> Result<Self, GridError> {
        if !poly.is_convex() {
            return Err(GridError::NotConvex);
        }
        if !poly.is_permutomino() {
            return Err(GridError::NotPermutomino);
        }
        Ok(Permutomino { poly })
    }
}

impl fmt::Display for Permutomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Cell count of the rightmost column.
pub fn degree(p: &Permutomino) -> u32 {
    p.degree()
}

pub fn classify(p: &Permutomino) -> Label {
    p.label()
}

pub fn boundary_word(p: &Permutomino) -> BoundaryWord {
    p.boundary_word()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cols: &[(u32, u32)]) -> ColumnPolyomino {
        ColumnPolyomino::new(cols.iter().copied()).unwrap()
    }

    #[test]
    fn convexity_examples() {
        assert!(poly(&[(1, 1)]).is_convex());
        assert!(poly(&[(1, 2), (1, 1)]).is_convex());
        assert!(!poly(&[(1, 3), (1, 1), (1, 3)]).is_convex());
    }

    #[test]
    fn permutomino_examples() {
        assert!(poly(&[(1, 1)]).is_permutomino());
        assert!(poly(&[(1, 2), (1, 1)]).is_permutomino());
        // the 2x2 square has only two horizontal side levels out of three
        assert!(!poly(&[(1, 2), (1, 2)]).is_permutomino());
        // not square
        assert!(!poly(&[(1, 1), (1, 1)]).is_permutomino());
    }

    #[test]
    fn constructor_normalizes_and_rejects() {
        let p = poly(&[(3, 4), (3, 3)]);
        assert_eq!(p.columns(), &[Column::new(1, 2), Column::new(1, 1)]);
        assert_eq!(ColumnPolyomino::new(Vec::<(u32, u32)>::new()), Err(GridError::Empty));
        assert_eq!(
            ColumnPolyomino::new([(1, 1), (2, 2)]),
            Err(GridError::Disconnected { column: 1 })
        );
        assert!(matches!(
            ColumnPolyomino::new([(2, 1)]),
            Err(GridError::InvertedInterval { .. })
        ));
        assert_eq!(Permutomino::new([(1, 2), (1, 2)]), Err(GridError::NotPermutomino));
        assert_eq!(Permutomino::new([(1, 3), (1, 1), (1, 3)]), Err(GridError::NotConvex));
    }

    #[test]
    fn labels() {
        assert_eq!(Permutomino::single_cell().label(), Label::b(1));
        let l = Permutomino::new([(1, 2), (1, 1)]).unwrap();
        assert_eq!(l.degree(), 1);
        assert_eq!(l.label(), Label::r(1, Side::Bottom));
        assert_eq!(l.label().to_string(), "(1)_r");
        let g = Permutomino::new([(1, 3), (2, 3), (2, 2)]).unwrap();
        assert_eq!(g.label(), Label::g(1));
    }
}
