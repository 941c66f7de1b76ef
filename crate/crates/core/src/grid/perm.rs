//! Permutation views of a convex permutomino: the two vertex permutations of
//! `[n+1]` and the reentrant-point permutation of `[n-1]`.

use std::collections::HashSet;

use thiserror::Error;

use super::boundary::{CornerKind, Point, ReentrantKind};
use super::{Column, ColumnPolyomino, GridError, Permutomino};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermPairError {
    #[error("permutations have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("{0:?} is not a permutation of [1, n+1]")]
    NotPermutation(Vec<u32>),
    #[error("pi1 and pi2 agree at {0}")]
    NotPointwiseDistinct(u32),
    /// The alternating walk closes before visiting every vertex: the vertex
    /// set describes several closed curves.
    #[error("vertices split into several closed curves (first has {visited} of {total} vertices)")]
    Disconnected { visited: usize, total: usize },
    #[error("the boundary intersects itself at {0}")]
    SelfIntersecting(Point),
    /// The walk is a simple curve, but its first vertex is not the leftmost
    /// vertex of minimal ordinate, so the pair is the swapped encoding.
    #[error("the boundary runs counter-clockwise from the first vertex")]
    CounterClockwise,
    #[error("the enclosed polyomino is not convex")]
    NotConvex,
}

/// The two permutations read off the odd- and even-indexed boundary vertices.
/// `pi1[x - 1]` is the ordinate of the odd vertex on abscissa `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermPair {
    pub pi1: Vec<u32>,
    pub pi2: Vec<u32>,
}

fn check_permutation(p: &[u32]) -> Result<(), PermPairError> {
    let m = p.len();
    let mut seen = vec![false; m + 1];
    for &v in p {
        if v == 0 || v as usize > m || std::mem::replace(&mut seen[v as usize], true) {
            return Err(PermPairError::NotPermutation(p.to_vec()));
        }
    }
    Ok(())
}

fn inverse(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    inv
}

impl PermPair {
    pub fn new(pi1: Vec<u32>, pi2: Vec<u32>) -> Result<Self, PermPairError> {
        if pi1.len() != pi2.len() {
            return Err(PermPairError::LengthMismatch(pi1.len(), pi2.len()));
        }
        check_permutation(&pi1)?;
        check_permutation(&pi2)?;
        if let Some(i) = pi1.iter().zip(&pi2).position(|(a, b)| a == b) {
            return Err(PermPairError::NotPointwiseDistinct(i as u32 + 1));
        }
        Ok(PermPair { pi1, pi2 })
    }

    /// `n + 1`, the number of abscissas.
    pub fn len(&self) -> usize {
        self.pi1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi1.is_empty()
    }

    /// Reads the pair off the boundary of `p`, walking clockwise from the
    /// leftmost vertex of minimal ordinate.
    pub fn of_permutomino(p: &Permutomino) -> PermPair {
        let m = p.size() as usize + 1;
        let mut pi1 = vec![0; m];
        let mut pi2 = vec![0; m];
        for (i, v) in p.boundary_word().vertices().into_iter().enumerate() {
            let slot = if i % 2 == 0 { &mut pi1 } else { &mut pi2 };
            slot[v.x as usize - 1] = v.y as u32;
        }
        PermPair { pi1, pi2 }
    }
}

/// Decodes a pair of pointwise-distinct permutations into the convex
/// permutomino whose boundary vertices they describe.
///
/// Vertices alternate between the two sets: a vertical side joins the odd and
/// even vertex on one abscissa, a horizontal side joins the even and odd
/// vertex on one ordinate.
pub fn from_permutations(pp: &PermPair) -> Result<Permutomino, PermPairError> {
    let PermPair { pi1, pi2 } = PermPair::new(pp.pi1.clone(), pp.pi2.clone())?;
    let m = pi1.len();
    let inv1 = inverse(&pi1);

    let start = Point::new(i64::from(inv1[0]), 1);
    let mut vertices = Vec::with_capacity(2 * m);
    let mut p = start;
    loop {
        vertices.push(p);
        let x = p.x as usize;
        let q = Point::new(p.x, i64::from(pi2[x - 1]));
        vertices.push(q);
        p = Point::new(i64::from(inv1[q.y as usize - 1]), q.y);
        if p == start {
            break;
        }
    }
    if vertices.len() != 2 * m {
        return Err(PermPairError::Disconnected { visited: vertices.len(), total: 2 * m });
    }

    // simplicity: no lattice point of the unit-step walk is visited twice
    let mut seen = HashSet::new();
    let mut twice_area = 0i64;
    for (i, &a) in vertices.iter().enumerate() {
        let b = vertices[(i + 1) % vertices.len()];
        twice_area += a.x * b.y - b.x * a.y;
        let (dx, dy) = ((b.x - a.x).signum(), (b.y - a.y).signum());
        let mut c = a;
        while c != b {
            if !seen.insert(c) {
                return Err(PermPairError::SelfIntersecting(c));
            }
            c = Point::new(c.x + dx, c.y + dy);
        }
    }
    if twice_area > 0 {
        return Err(PermPairError::CounterClockwise);
    }

    // each column must be crossed by exactly two horizontal sides
    let mut crossings: Vec<Vec<u32>> = vec![Vec::new(); m - 1];
    for pair in vertices[1..].chunks(2) {
        let (a, b) = match pair {
            [a, b] => (*a, *b),
            [a] => (*a, vertices[0]),
            _ => unreachable!(),
        };
        let (x0, x1) = (a.x.min(b.x), a.x.max(b.x));
        for x in x0..x1 {
            crossings[x as usize - 1].push(a.y as u32);
        }
    }
    let mut cols = Vec::with_capacity(m - 1);
    for mut c in crossings {
        if c.len() != 2 {
            return Err(PermPairError::NotConvex);
        }
        c.sort_unstable();
        cols.push(Column::new(c[0], c[1] - 1));
    }
    let poly = ColumnPolyomino::new(cols).map_err(|_| PermPairError::NotConvex)?;
    Permutomino::try_from(poly).map_err(|e| match e {
        GridError::NotConvex => PermPairError::NotConvex,
        other => unreachable!("simple orthogonal polygon on permutation vertices: {other}"),
    })
}

/// Reentrant points of a convex permutomino of size `n >= 2`, ordered by
/// abscissa. Each lies strictly inside the bounding box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReentrantPermutation {
    pub points: Vec<(Point, ReentrantKind)>,
}

impl ReentrantPermutation {
    pub fn of_permutomino(p: &Permutomino) -> Self {
        let mut points: Vec<(Point, ReentrantKind)> = p
            .corner_report()
            .reentrant
            .into_iter()
            .map(|c| match c.kind {
                CornerKind::Reentrant(k) => (c.at, k),
                CornerKind::Salient => unreachable!(),
            })
            .collect();
        points.sort_by_key(|(pt, _)| (pt.x, pt.y));
        ReentrantPermutation { points }
    }

    /// Dimension of the matrix, `n - 1`.
    pub fn dim(&self) -> usize {
        self.points.len()
    }

    /// `sigma[i] = y - 1` for the point on abscissa `i + 2`, if the points
    /// form a permutation matrix of `[n-1]` on the interior lattice lines.
    pub fn sigma(&self) -> Option<Vec<u32>> {
        let d = self.points.len() as i64;
        let mut sigma = Vec::with_capacity(self.points.len());
        let mut rows = vec![false; self.points.len()];
        for (i, (pt, _)) in self.points.iter().enumerate() {
            if pt.x != i as i64 + 2 || pt.y < 2 || pt.y > d + 1 {
                return None;
            }
            let r = (pt.y - 2) as usize;
            if std::mem::replace(&mut rows[r], true) {
                return None;
            }
            sigma.push(pt.y as u32 - 1);
        }
        Some(sigma)
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.sigma().is_some()
    }

    pub fn symbols(&self) -> impl Iterator<Item = ReentrantKind> + '_ {
        self.points.iter().map(|&(_, k)| k)
    }
}

impl Permutomino {
    pub fn vertex_permutations(&self) -> PermPair {
        PermPair::of_permutomino(self)
    }

    pub fn reentrant_matrix(&self) -> ReentrantPermutation {
        ReentrantPermutation::of_permutomino(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_pair() {
        let p = Permutomino::single_cell();
        let pp = p.vertex_permutations();
        assert_eq!(pp, PermPair { pi1: vec![1, 2], pi2: vec![2, 1] });
        assert_eq!(from_permutations(&pp).unwrap(), p);
    }

    #[test]
    fn l_tromino_pair() {
        let p = Permutomino::new([(1, 2), (1, 1)]).unwrap();
        let pp = p.vertex_permutations();
        // vertices (1,1) (1,3) (2,3) (2,2) (3,2) (3,1)
        assert_eq!(pp.pi1, vec![1, 3, 2]);
        assert_eq!(pp.pi2, vec![3, 2, 1]);
        assert_eq!(from_permutations(&pp).unwrap(), p);
    }

    #[test]
    fn two_squares_are_disconnected() {
        let pp = PermPair::new(vec![1, 2, 3, 4], vec![2, 1, 4, 3]).unwrap();
        assert_eq!(
            from_permutations(&pp),
            Err(PermPairError::Disconnected { visited: 4, total: 8 })
        );
    }

    #[test]
    fn swapped_pair_is_rejected() {
        let pp = PermPair::new(vec![2, 1], vec![1, 2]).unwrap();
        assert_eq!(from_permutations(&pp), Err(PermPairError::CounterClockwise));
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(
            PermPair::new(vec![1, 2], vec![1, 2]),
            Err(PermPairError::NotPointwiseDistinct(1))
        );
        assert!(matches!(
            PermPair::new(vec![1, 1], vec![2, 2]),
            Err(PermPairError::NotPermutation(_))
        ));
        assert_eq!(
            PermPair::new(vec![1, 2], vec![2, 1, 3]),
            Err(PermPairError::LengthMismatch(2, 3))
        );
    }

    #[test]
    fn reentrant_matrix_small() {
        assert_eq!(Permutomino::single_cell().reentrant_matrix().dim(), 0);
        assert_eq!(Permutomino::single_cell().reentrant_matrix().sigma(), Some(vec![]));
        let m = Permutomino::new([(1, 2), (1, 1)]).unwrap().reentrant_matrix();
        assert_eq!(m.sigma(), Some(vec![1]));
        assert_eq!(m.symbols().collect::<Vec<_>>(), vec![ReentrantKind::Beta]);
    }
}
