//! Clockwise boundary words and their salient / reentrant corners.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::{Column, GridError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
    S,
    W,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::N => (0, 1),
            Step::E => (1, 0),
            Step::S => (0, -1),
            Step::W => (-1, 0),
        }
    }

    pub fn opposite(self) -> Step {
        match self {
            Step::N => Step::S,
            Step::E => Step::W,
            Step::S => Step::N,
            Step::W => Step::E,
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Step::N | Step::S)
    }

    pub fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
            Step::S => 'S',
            Step::W => 'W',
        }
    }

    /// Accepts `O` (ovest) as a synonym for `W`.
    pub fn from_letter(c: char) -> Option<Step> {
        match c.to_ascii_uppercase() {
            'N' => Some(Step::N),
            'E' => Some(Step::E),
            'S' => Some(Step::S),
            'W' | 'O' => Some(Step::W),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn step(self, s: Step) -> Point {
        let (dx, dy) = s.delta();
        Point::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Reentrant corner symbols: `EN`, `SE`, `WS`, `NW`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReentrantKind {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl ReentrantKind {
    pub fn symbol(self) -> char {
        match self {
            ReentrantKind::Alpha => 'α',
            ReentrantKind::Beta => 'β',
            ReentrantKind::Gamma => 'γ',
            ReentrantKind::Delta => 'δ',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReentrantKind::Alpha => "alpha",
            ReentrantKind::Beta => "beta",
            ReentrantKind::Gamma => "gamma",
            ReentrantKind::Delta => "delta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CornerKind {
    /// `NE`, `ES`, `SW`, `WN`.
    Salient,
    Reentrant(ReentrantKind),
}

impl CornerKind {
    /// Classifies the turn `first` then `second` of a clockwise word; `None`
    /// for straight continuation, `Err` for a backtrack.
    #[allow(clippy::result_unit_err)]
    pub fn of_turn(first: Step, second: Step) -> Result<Option<CornerKind>, ()> {
        use Step::*;
        Ok(match (first, second) {
            (N, E) | (E, S) | (S, W) | (W, N) => Some(CornerKind::Salient),
            (E, N) => Some(CornerKind::Reentrant(ReentrantKind::Alpha)),
            (S, E) => Some(CornerKind::Reentrant(ReentrantKind::Beta)),
            (W, S) => Some(CornerKind::Reentrant(ReentrantKind::Gamma)),
            (N, W) => Some(CornerKind::Reentrant(ReentrantKind::Delta)),
            (a, b) if a == b => None,
            _ => return Err(()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Corner {
    /// Lattice point where the two steps meet.
    pub at: Point,
    /// Index of the second step of the pair in the word.
    pub index: usize,
    pub kind: CornerKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CornerReport {
    pub salient: Vec<Corner>,
    pub reentrant: Vec<Corner>,
}

impl CornerReport {
    /// `|salient| - |reentrant|`, which is 4 for every simple closed
    /// clockwise boundary.
    pub fn turning_number(&self) -> i64 {
        self.salient.len() as i64 - self.reentrant.len() as i64
    }

    /// Reentrant corner with the largest abscissa. Unique for convex
    /// permutominoes.
    pub fn rightmost_reentrant(&self) -> Option<&Corner> {
        self.reentrant.iter().max_by_key(|c| c.at.x)
    }
}

/// Maximal straight run of the boundary (a side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub start: Point,
    pub step: Step,
    pub len: usize,
}

/// A closed clockwise boundary path over `{N, E, S, W}` with its start point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryWord {
    start: Point,
    steps: Vec<Step>,
}

impl BoundaryWord {
    /// Validates closure, absence of back-tracks and simplicity.
    pub fn new(start: Point, steps: Vec<Step>) -> Result<Self, GridError> {
        if steps.is_empty() {
            return Err(GridError::EmptyWord);
        }
        let len = steps.len();
        for i in 0..len {
            if steps[(i + 1) % len] == steps[i].opposite() {
                return Err(GridError::Backtrack { position: i });
            }
        }
        let w = BoundaryWord { start, steps };
        let mut seen = HashSet::with_capacity(len);
        let mut end = start;
        for p in w.points().skip(1) {
            if !seen.insert(p) {
                if p == start && seen.len() == len {
                    end = p;
                    continue;
                }
                return Err(GridError::SelfIntersecting { x: p.x, y: p.y });
            }
            end = p;
        }
        if end != start {
            return Err(GridError::NotClosed);
        }
        if w.twice_signed_area() > 0 {
            return Err(GridError::CounterClockwise);
        }
        Ok(w)
    }

    /// Boundary of a connected column-convex polyomino, starting at the
    /// leftmost lattice point of minimal ordinate and moving clockwise.
    pub(crate) fn of_columns(cols: &[Column]) -> BoundaryWord {
        let n = cols.len();
        let mut steps = Vec::new();
        let push = |s: Step, k: u32, steps: &mut Vec<Step>| steps.extend(std::iter::repeat_n(s, k as usize));
        // left side, then the upper contour left to right
        push(Step::N, cols[0].len(), &mut steps);
        for j in 0..n {
            push(Step::E, 1, &mut steps);
            if j + 1 < n {
                let (a, b) = (cols[j].hi, cols[j + 1].hi);
                if b > a {
                    push(Step::N, b - a, &mut steps);
                } else {
                    push(Step::S, a - b, &mut steps);
                }
            }
        }
        push(Step::S, cols[n - 1].len(), &mut steps);
        // lower contour right to left; remember where the canonical start is
        let min_lo = cols.iter().map(|c| c.lo).min().unwrap_or(1);
        let first = cols.iter().position(|c| c.lo == min_lo).unwrap_or(0);
        let mut start_index = 0;
        for j in (0..n).rev() {
            push(Step::W, 1, &mut steps);
            if j == first {
                start_index = steps.len();
            }
            if j > 0 {
                let (a, b) = (cols[j].lo, cols[j - 1].lo);
                if b > a {
                    push(Step::N, b - a, &mut steps);
                } else {
                    push(Step::S, a - b, &mut steps);
                }
            }
        }
        let start_index = start_index % steps.len();
        steps.rotate_left(start_index);
        BoundaryWord {
            start: Point::new(first as i64 + 1, i64::from(min_lo)),
            steps,
        }
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Lattice points visited, from the start through the final return to it.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().scan(self.start, |p, &s| {
            *p = p.step(s);
            Some(*p)
        }))
    }

    /// Shoelace sum; negative for clockwise paths.
    pub fn twice_signed_area(&self) -> i64 {
        let pts: Vec<Point> = self.points().collect();
        pts.windows(2).map(|w| w[0].x * w[1].y - w[1].x * w[0].y).sum()
    }

    /// Maximal straight runs, cyclically merged across the start.
    pub fn sides(&self) -> Vec<Run> {
        let pts: Vec<Point> = self.points().collect();
        let len = self.steps.len();
        // begin at a turn so no run wraps around
        let offset = (0..len)
            .find(|&i| self.steps[i] != self.steps[(i + len - 1) % len])
            .unwrap_or(0);
        let mut sides: Vec<Run> = Vec::new();
        for i in (0..len).map(|i| (i + offset) % len) {
            let s = self.steps[i];
            match sides.last_mut() {
                Some(side) if side.step == s => side.len += 1,
                _ => sides.push(Run { start: pts[i], step: s, len: 1 }),
            }
        }
        sides
    }

    /// Turning points in boundary order starting from the start point, which
    /// is always a corner for words produced from polyominoes.
    pub fn vertices(&self) -> Vec<Point> {
        let pts: Vec<Point> = self.points().collect();
        let len = self.steps.len();
        (0..len)
            .filter(|&i| self.steps[i] != self.steps[(i + len - 1) % len])
            .map(|i| pts[i])
            .collect()
    }

    /// Classifies every cyclically adjacent pair of steps.
    pub fn corner_report(&self) -> Result<CornerReport, GridError> {
        let pts: Vec<Point> = self.points().collect();
        let len = self.steps.len();
        let mut report = CornerReport::default();
        for i in 0..len {
            let j = (i + 1) % len;
            let kind = CornerKind::of_turn(self.steps[i], self.steps[j])
                .map_err(|()| GridError::Backtrack { position: i })?;
            if let Some(kind) = kind {
                let corner = Corner { at: pts[j], index: j, kind };
                match kind {
                    CornerKind::Salient => report.salient.push(corner),
                    CornerKind::Reentrant(_) => report.reentrant.push(corner),
                }
            }
        }
        Ok(report)
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for BoundaryWord {
    type Err = GridError;

    /// Parses a word anchored at the origin.
    fn from_str(s: &str) -> Result<Self, GridError> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Step::from_letter(c).ok_or(GridError::BadStep(c)))
            .collect::<Result<Vec<_>, _>>()?;
        BoundaryWord::new(Point::default(), steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::ColumnPolyomino;

    fn word(cols: &[(u32, u32)]) -> BoundaryWord {
        ColumnPolyomino::new(cols.iter().copied()).unwrap().boundary_word()
    }

    #[test]
    fn unit_square() {
        let w = word(&[(1, 1)]);
        assert_eq!(w.to_string(), "NESW");
        assert_eq!(w.start(), Point::new(1, 1));
        let r = w.corner_report().unwrap();
        assert_eq!((r.salient.len(), r.reentrant.len()), (4, 0));
    }

    #[test]
    fn l_tromino() {
        let w = word(&[(1, 2), (1, 1)]);
        assert_eq!(w.to_string(), "NNESESWW");
        let r = w.corner_report().unwrap();
        assert_eq!(r.salient.len(), 5);
        assert_eq!(r.reentrant.len(), 1);
        assert_eq!(r.reentrant[0].kind, CornerKind::Reentrant(ReentrantKind::Beta));
        assert_eq!(r.reentrant[0].at, Point::new(2, 2));
    }

    #[test]
    fn start_is_leftmost_of_minimal_ordinate() {
        // lowest cell is in column 2
        let w = word(&[(2, 3), (1, 3), (2, 2)]);
        assert_eq!(w.start(), Point::new(2, 1));
        assert_eq!(w.steps()[0], Step::N);
        assert_eq!(*w.steps().last().unwrap(), Step::W);
        assert_eq!(w.points().last(), Some(w.start()));
    }

    #[test]
    fn parse_validates() {
        assert!("NESW".parse::<BoundaryWord>().is_ok());
        assert_eq!("NOSE".parse::<BoundaryWord>(), Err(GridError::CounterClockwise));
        assert_eq!(
            "NSEW".parse::<BoundaryWord>(),
            Err(GridError::Backtrack { position: 0 })
        );
        assert_eq!("NEEN".parse::<BoundaryWord>(), Err(GridError::NotClosed));
        assert!(matches!("X".parse::<BoundaryWord>(), Err(GridError::BadStep('X'))));
        // figure-eight through the origin
        assert!(matches!(
            "NESWSWNE".parse::<BoundaryWord>(),
            Err(GridError::SelfIntersecting { .. })
        ));
    }

    #[test]
    fn corner_report_rejects_backtrack() {
        let w = BoundaryWord { start: Point::default(), steps: vec![Step::N, Step::S] };
        assert!(w.corner_report().is_err());
    }

    #[test]
    fn sides_merge_across_start() {
        let w = word(&[(1, 2), (1, 1)]);
        let sides = w.sides();
        assert_eq!(sides.len(), 6);
        assert_eq!(sides.iter().map(|s| s.len).sum::<usize>(), 8);
        assert_eq!(w.vertices().len(), 6);
        assert_eq!(w.twice_signed_area(), -6);
    }
}
