use std::fmt::Write;
use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TruncatedSeries;

type Poly = Vec<BigRational>;

fn poly_trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out: Poly = (0..a.len().max(b.len()))
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    poly_trim(&mut out);
    out
}

fn poly_neg(a: &[BigRational]) -> Poly {
    a.iter().map(|x| -x).collect()
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

/// Series in `t` whose coefficients are polynomials in `s`, known exactly up
/// to `t^order`. Entry `n` holds the `s`-coefficients of `t^n`, lowest degree
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Poly>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries { coeffs: vec![Vec::new(); order + 1] }
    }

    /// `c s^i t^j`.
    pub fn monomial(c: BigRational, i: usize, j: usize, order: usize) -> Self {
        let mut out = BivariateSeries::zero(order);
        out.add_term(j, i, c);
        out
    }

    /// `s^i t^j` with unit coefficient.
    pub fn st(i: usize, j: usize, order: usize) -> Self {
        BivariateSeries::monomial(BigRational::one(), i, j, order)
    }

    /// A series in `t` alone, constant in `s`.
    pub fn from_univariate(u: &TruncatedSeries) -> Self {
        let mut coeffs: Vec<Poly> = u.coeffs().iter().map(|c| vec![c.clone()]).collect();
        coeffs.iter_mut().for_each(poly_trim);
        BivariateSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Adds `c s^k t^n`; ignored past the order.
    pub fn add_term(&mut self, n: usize, k: usize, c: BigRational) {
        if n > self.order() {
            return;
        }
        let p = &mut self.coeffs[n];
        if p.len() <= k {
            p.resize(k + 1, BigRational::zero());
        }
        p[k] += c;
        poly_trim(p);
    }

    /// Coefficient of `s^k t^n`.
    pub fn coeff(&self, n: usize, k: usize) -> BigRational {
        self.coeffs.get(n).and_then(|p| p.get(k)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `s`-polynomial of `t^n`, lowest degree first, without trailing zeros.
    pub fn poly(&self, n: usize) -> &[BigRational] {
        &self.coeffs[n]
    }

    /// Every nonzero `(n, k, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.coeffs.iter().enumerate().flat_map(|(n, p)| {
            p.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (n, k, c))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Vec::is_empty)
    }

    /// Largest `s`-degree appearing at `t^n`, if any term does.
    pub fn s_degree(&self, n: usize) -> Option<usize> {
        self.coeffs[n].len().checked_sub(1)
    }

    /// Specializes `s = 1`.
    pub fn at_s_one(&self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|p| p.iter().sum()).collect(), self.order())
    }

    /// Substitutes a series in `t` for `s`; each coefficient of the result is
    /// a finite sum since the `s`-degree at every `t^n` is finite.
    pub fn substitute_s(&self, s: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(s.order(), self.order(), "series orders differ");
        let order = self.order();
        let max_deg = (0..=order).filter_map(|n| self.s_degree(n)).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_deg + 1);
        powers.push(TruncatedSeries::one(order));
        for d in 1..=max_deg {
            let next = &powers[d - 1] * s;
            powers.push(next);
        }
        let mut out = TruncatedSeries::zero(order);
        for (n, k, c) in self.terms() {
            out = &out + &powers[k].shift_up(n).scale(c);
        }
        out
    }

    /// `n<TAB>c0,c1,...` lines, one per power of `t`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (n, p) in self.coeffs.iter().enumerate() {
            let cs: Vec<String> = p.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{n}\t{}", if cs.is_empty() { "0".to_string() } else { cs.join(",") });
        }
        out
    }

    fn check_order(&self, rhs: &BivariateSeries) {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_order(rhs);
        BivariateSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| poly_add(a, b)).collect() }
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_order(rhs);
        BivariateSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| poly_add(a, &poly_neg(b))).collect(),
        }
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.check_order(rhs);
        let len = self.coeffs.len();
        let mut out = vec![Vec::new(); len];
        for i in 0..len {
            if self.coeffs[i].is_empty() {
                continue;
            }
            for j in 0..len - i {
                if !rhs.coeffs[j].is_empty() {
                    out[i + j] = poly_add(&out[i + j], &poly_mul(&self.coeffs[i], &rhs.coeffs[j]));
                }
            }
        }
        BivariateSeries { coeffs: out }
    }
}
