//! Exact truncated power series and the generating functions of convex
//! permutominoes.
//!
//! `B`, `R` and `G` count permutominoes of classes B, R and G by degree (`s`)
//! and size (`t`); `F = B + R + G`. The univariate closed forms are
//!
//! ```text
//! B(1,t) = t / (1 - 2t)
//! R(1,t) = 1 / sqrt(1 - 4t) - 1 / (1 - 2t)
//! G(1,t) = (1 - 7t + 14t^2 - 4t^3) / ((1 - 2t)(1 - 4t)^2) - (1 - 3t) / (1 - 4t)^(3/2)
//! F(1,t) = 2t(1 - 3t) / (1 - 4t)^2 - t / (1 - 4t)^(3/2)
//! ```
//!
//! and the bivariate series obtained from the label census satisfy, with the
//! `(1 - s)` denominators cleared,
//!
//! ```text
//! R(s,t) (1 - s + s^2 t) = 2 s t (B(1,t) - B(s,t)) + s t R(1,t)
//! G(s,t) (1 - s + 2 s t) = s t (R(1,t) - R(s,t)) + 2 s t G(1,t)
//! ```

mod bivariate;
mod truncated;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use bivariate::BivariateSeries;
pub use truncated::TruncatedSeries;

use crate::census::LabelCensus;
use crate::grid::Class;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has a zero constant term")]
    ZeroConstant,
    #[error("square root needs constant term 1")]
    SqrtNeedsUnitConstant,
    #[error("series is not divisible by t^{0}")]
    NotDivisibleByT(usize),
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn poly(coeffs: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(coeffs, order)
}

fn inv(coeffs: &[i64], order: usize) -> TruncatedSeries {
    poly(coeffs, order).inverse().expect("unit constant term")
}

/// `sqrt(1 - 4t)` to order `n`.
pub fn sqrt_1m4t(n: usize) -> TruncatedSeries {
    poly(&[1, -4], n).sqrt().expect("constant term is 1")
}

/// `(1 - 4t)^(-3/2)` to order `n`.
fn inv_1m4t_three_halves(n: usize) -> TruncatedSeries {
    &sqrt_1m4t(n).inverse().expect("unit") * &inv(&[1, -4], n)
}

pub fn series_b1(n: usize) -> TruncatedSeries {
    &poly(&[0, 1], n) * &inv(&[1, -2], n)
}

pub fn series_r1(n: usize) -> TruncatedSeries {
    &sqrt_1m4t(n).inverse().expect("unit") - &inv(&[1, -2], n)
}

/// Class-G series `G(1,t)` (written `N(1,t)` in some sources).
pub fn series_n1(n: usize) -> TruncatedSeries {
    let rational = &poly(&[1, -7, 14, -4], n) * &(&inv(&[1, -2], n) * &inv(&[1, -4], n).pow(2));
    &rational - &(&poly(&[1, -3], n) * &inv_1m4t_three_halves(n))
}

pub fn series_f1(n: usize) -> TruncatedSeries {
    let rational = &poly(&[0, 2, -6], n) * &inv(&[1, -4], n).pow(2);
    &rational - &(&poly(&[0, 1], n) * &inv_1m4t_three_halves(n))
}

/// Directed-convex permutominoes: `(1 - sqrt(1-4t)) / (2 sqrt(1-4t))`.
pub fn series_directed(n: usize) -> TruncatedSeries {
    let s = sqrt_1m4t(n);
    (&poly(&[1], n) - &s).div(&s.scale(&q(2))).expect("unit constant term")
}

/// Root `s0 = (1 - sqrt(1-4t)) / (2t)` of the kernel `1 - s + t s^2`.
pub fn kernel_root_s0(n: usize) -> TruncatedSeries {
    let num = &poly(&[1], n + 1) - &sqrt_1m4t(n + 1);
    num.shift_down(1).expect("1 - sqrt(1-4t) vanishes at t = 0").scale(&BigRational::new(1.into(), 2.into()))
}

/// `1 - s0 + t s0^2`, which must vanish.
pub fn check_kernel(n: usize) -> TruncatedSeries {
    let s0 = kernel_root_s0(n);
    &(&poly(&[1], n) - &s0) + &(&s0 * &s0).shift_up(1)
}

/// Root `s1 = 1 / (1 - 2t)` of the kernel `1 - s + 2 s t`.
pub fn kernel_root_s1(n: usize) -> TruncatedSeries {
    inv(&[1, -2], n)
}

/// `1 - s1 + 2 t s1`, which must vanish.
pub fn check_kernel_s1(n: usize) -> TruncatedSeries {
    let s1 = kernel_root_s1(n);
    &(&poly(&[1], n) - &s1) + &s1.shift_up(1).scale(&q(2))
}

/// Truncations of `B(s,t)`, `R(s,t)`, `G(s,t)` read off label censuses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSeries {
    pub b: BivariateSeries,
    pub r: BivariateSeries,
    pub g: BivariateSeries,
}

impl ClassSeries {
    pub fn order(&self) -> usize {
        self.b.order()
    }

    pub fn total(&self) -> BivariateSeries {
        &(&self.b + &self.r) + &self.g
    }
}

/// Coefficient of `s^k t^n` in each series is the census count of `(k)` of
/// that class at level `n`. `levels` must be consecutive from level 1.
pub fn census_to_bivariate(levels: &[LabelCensus]) -> ClassSeries {
    let order = levels.len();
    let mut out = ClassSeries {
        b: BivariateSeries::zero(order),
        r: BivariateSeries::zero(order),
        g: BivariateSeries::zero(order),
    };
    for (i, c) in levels.iter().enumerate() {
        assert_eq!(c.level() as usize, i + 1, "levels must start at 1 and be consecutive");
        for (k, class, v) in c.iter() {
            let target = match class {
                Class::B => &mut out.b,
                Class::R => &mut out.r,
                Class::G => &mut out.g,
            };
            target.add_term(i + 1, k as usize, BigRational::from_integer(BigInt::from(v.clone())));
        }
    }
    out
}

/// Class series from the census through order `n`.
pub fn census_series(n: usize) -> ClassSeries {
    census_to_bivariate(&LabelCensus::levels(n as u32))
}

/// Nonzero coefficients left over after moving every term of an identity to
/// one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub name: &'static str,
    pub order: usize,
    /// `(t power, s power, coefficient)`.
    pub nonzero: Vec<(usize, usize, BigRational)>,
}

impl Residual {
    pub fn of_bivariate(name: &'static str, r: &BivariateSeries) -> Self {
        Residual {
            name,
            order: r.order(),
            nonzero: r.terms().map(|(n, k, c)| (n, k, c.clone())).collect(),
        }
    }

    pub fn of_univariate(name: &'static str, r: &TruncatedSeries) -> Self {
        Residual {
            name,
            order: r.order(),
            nonzero: r
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| (n, 0, c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero.is_empty()
    }

    /// Largest absolute coefficient, zero when the identity holds.
    pub fn max_abs(&self) -> BigRational {
        self.nonzero.iter().map(|(_, _, c)| c.abs()).max().unwrap_or_else(BigRational::zero)
    }
}

/// Residuals of the two functional equations, denominators cleared.
pub fn functional_equation_residuals(cs: &ClassSeries) -> (Residual, Residual) {
    let order = cs.order();
    let st = |i, j| BivariateSeries::st(i, j, order);
    let one = st(0, 0);
    let b1 = BivariateSeries::from_univariate(&cs.b.at_s_one());
    let r1 = BivariateSeries::from_univariate(&cs.r.at_s_one());
    let g1 = BivariateSeries::from_univariate(&cs.g.at_s_one());
    let two = |x: &BivariateSeries| x + x;

    // R (1 - s + s^2 t) - 2 s t (B1 - B) - s t R1
    let kernel_r = &(&one - &st(1, 0)) + &st(2, 1);
    let lhs_r = &cs.r * &kernel_r;
    let rhs_r = &(&two(&st(1, 1)) * &(&b1 - &cs.b)) + &(&st(1, 1) * &r1);
    let res_r = &lhs_r - &rhs_r;

    // G (1 - s + 2 s t) - s t (R1 - R) - 2 s t G1
    let kernel_g = &(&one - &st(1, 0)) + &two(&st(1, 1));
    let lhs_g = &cs.g * &kernel_g;
    let rhs_g = &(&st(1, 1) * &(&r1 - &cs.r)) + &(&two(&st(1, 1)) * &g1);
    let res_g = &lhs_g - &rhs_g;

    (
        Residual::of_bivariate("R(s,t) equation", &res_r),
        Residual::of_bivariate("G(s,t) equation", &res_g),
    )
}

/// Census-derived truncations checked against both functional equations.
pub fn check_functional_equations(n: usize) -> (Residual, Residual) {
    functional_equation_residuals(&census_series(n))
}

/// The kernel-method eliminations: at `s = s0` the `R` equation leaves
/// `2 (B1 - B(s0,t)) + R1 = 0`; at `s = s1` the `G` equation leaves
/// `(R1 - R(s1,t)) + 2 G1 = 0`.
pub fn kernel_substitution_residuals(cs: &ClassSeries) -> (Residual, Residual) {
    let order = cs.order();
    let s0 = kernel_root_s0(order);
    let s1 = kernel_root_s1(order);
    let b1 = cs.b.at_s_one();
    let r1 = cs.r.at_s_one();
    let g1 = cs.g.at_s_one();
    let two = q(2);
    let at_s0 = &(&b1 - &cs.b.substitute_s(&s0)).scale(&two) + &r1;
    let at_s1 = &(&r1 - &cs.r.substitute_s(&s1)) + &g1.scale(&two);
    (
        Residual::of_univariate("R equation at s0", &at_s0),
        Residual::of_univariate("G equation at s1", &at_s1),
    )
}
