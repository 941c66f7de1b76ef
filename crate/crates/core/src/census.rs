//! Label census of the generating tree: iterate the succession rule
//!
//! ```text
//! (1)_b
//! (k)_b -> (1)_r (1)_r ... (k)_r (k)_r (k+1)_b (k+1)_b
//! (k)_r -> (1)_r (1)_g ... (k)_r (k)_g (k+1)_r
//! (k)_g -> (1)_g (1)_g ... (k)_g (k)_g
//! ```
//!
//! on label multiplicities instead of objects.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::grid::{Class, Label};

/// Multiplicity of each `(k, class)` label on one level of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelCensus {
    level: u32,
    counts: BTreeMap<(u32, Class), BigUint>,
}

/// Per-class totals of one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTotals {
    pub b: BigUint,
    pub r: BigUint,
    pub g: BigUint,
}

impl ClassTotals {
    pub fn total(&self) -> BigUint {
        &self.b + &self.r + &self.g
    }
}

impl LabelCensus {
    /// Level 1: the single cell, `(1)_b`.
    pub fn root() -> Self {
        let mut counts = BTreeMap::new();
        counts.insert((1, Class::B), BigUint::from(1u32));
        LabelCensus { level: 1, counts }
    }

    pub fn at_level(n: u32) -> Self {
        assert!(n >= 1, "levels start at 1");
        let mut c = LabelCensus::root();
        for _ in 1..n {
            c = c.step();
        }
        c
    }

    /// Censuses for levels `1..=n`.
    pub fn levels(n: u32) -> Vec<LabelCensus> {
        let mut out: Vec<LabelCensus> = Vec::with_capacity(n as usize);
        if n == 0 {
            return out;
        }
        out.push(LabelCensus::root());
        for _ in 1..n {
            let next = out.last().map(LabelCensus::step).unwrap();
            out.push(next);
        }
        out
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn get(&self, k: u32, class: Class) -> BigUint {
        self.counts.get(&(k, class)).cloned().unwrap_or_default()
    }

    pub fn count_of(&self, label: Label) -> BigUint {
        self.get(label.k, label.class)
    }

    /// Nonzero entries in `(k, class)` order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, Class, &BigUint)> {
        self.counts.iter().map(|(&(k, c), v)| (k, c, v))
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn by_class(&self) -> ClassTotals {
        let mut t = ClassTotals { b: BigUint::zero(), r: BigUint::zero(), g: BigUint::zero() };
        for (&(_, class), v) in &self.counts {
            match class {
                Class::B => t.b += v,
                Class::R => t.r += v,
                Class::G => t.g += v,
            }
        }
        t
    }

    fn max_degree(&self) -> u32 {
        self.counts.keys().map(|&(k, _)| k).max().unwrap_or(0)
    }

    /// Applies every production once.
    pub fn step(&self) -> LabelCensus {
        let kmax = self.max_degree() as usize;
        let at = |k: usize, c: Class| self.counts.get(&(k as u32, c));
        // suffix sums: a (k) label feeds every (j) with j <= k
        let mut suffix_b = vec![BigUint::zero(); kmax + 2];
        let mut suffix_r = vec![BigUint::zero(); kmax + 2];
        let mut suffix_g = vec![BigUint::zero(); kmax + 2];
        for k in (1..=kmax).rev() {
            suffix_b[k] = &suffix_b[k + 1] + at(k, Class::B).cloned().unwrap_or_default();
            suffix_r[k] = &suffix_r[k + 1] + at(k, Class::R).cloned().unwrap_or_default();
            suffix_g[k] = &suffix_g[k + 1] + at(k, Class::G).cloned().unwrap_or_default();
        }

        let mut counts = BTreeMap::new();
        let mut put = |k: usize, c: Class, v: BigUint| {
            if !v.is_zero() {
                counts.insert((k as u32, c), v);
            }
        };
        for j in 1..=kmax + 1 {
            let mut b = BigUint::zero();
            let mut r = BigUint::zero();
            let mut g = BigUint::zero();
            if j <= kmax {
                r += &suffix_b[j] * 2u32 + &suffix_r[j];
                g += &suffix_r[j] + &suffix_g[j] * 2u32;
            }
            if j >= 2 {
                if let Some(m) = at(j - 1, Class::B) {
                    b += m * 2u32;
                }
                if let Some(m) = at(j - 1, Class::R) {
                    r += m;
                }
            }
            put(j, Class::B, b);
            put(j, Class::R, r);
            put(j, Class::G, g);
        }
        LabelCensus { level: self.level + 1, counts }
    }

    /// Rows `level, k, class, count`, tab separated, with a header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("level\tk\tclass\tcount\n");
        for (k, class, v) in self.iter() {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", self.level, k, class, v);
        }
        out
    }
}

/// Number of nodes on level `n` of the generating tree.
pub fn count(n: u32) -> BigUint {
    LabelCensus::at_level(n).total()
}

pub fn census_by_class(n: u32) -> ClassTotals {
    LabelCensus::at_level(n).by_class()
}

/// `count(1..=n)` in one pass.
pub fn counts_up_to(n: u32) -> Vec<BigUint> {
    LabelCensus::levels(n).iter().map(LabelCensus::total).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Applies the productions label by label.
    fn naive_step(c: &LabelCensus) -> BTreeMap<(u32, Class), BigUint> {
        let mut out: BTreeMap<(u32, Class), BigUint> = BTreeMap::new();
        let mut add = |k: u32, cl: Class, v: &BigUint| *out.entry((k, cl)).or_default() += v;
        for (k, class, m) in c.iter() {
            match class {
                Class::B => {
                    for j in 1..=k {
                        add(j, Class::R, m);
                        add(j, Class::R, m);
                    }
                    add(k + 1, Class::B, m);
                    add(k + 1, Class::B, m);
                }
                Class::R => {
                    for j in 1..=k {
                        add(j, Class::R, m);
                        add(j, Class::G, m);
                    }
                    add(k + 1, Class::R, m);
                }
                Class::G => {
                    for j in 1..=k {
                        add(j, Class::G, m);
                        add(j, Class::G, m);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn level_two() {
        let c = LabelCensus::root().step();
        assert_eq!(c.level(), 2);
        let entries: Vec<_> = c.iter().map(|(k, cl, v)| (k, cl, v.clone())).collect();
        assert_eq!(entries, vec![(1, Class::R, big(2)), (2, Class::B, big(2))]);
    }

    #[test]
    fn level_three_split() {
        let t = census_by_class(3);
        assert_eq!((t.b, t.r, t.g), (big(4), big(12), big(2)));
        let c = LabelCensus::at_level(3);
        assert_eq!(c.get(1, Class::R), big(6));
        assert_eq!(c.get(2, Class::R), big(6));
        assert_eq!(c.get(1, Class::G), big(2));
        assert_eq!(c.get(3, Class::B), big(4));
    }

    #[test]
    fn suffix_sum_step_matches_naive() {
        let mut c = LabelCensus::root();
        for _ in 0..15 {
            let expected = naive_step(&c);
            c = c.step();
            assert_eq!(c.counts, expected, "level {}", c.level());
        }
    }

    #[test]
    fn sequence() {
        let got: Vec<BigUint> = counts_up_to(7);
        let want: Vec<BigUint> = [1u64, 4, 18, 84, 394, 1836, 8468].into_iter().map(big).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn tsv_layout() {
        assert_eq!(
            LabelCensus::at_level(2).to_tsv(),
            "level\tk\tclass\tcount\n2\t1\tR\t2\n2\t2\tB\t2\n"
        );
    }
}
