use std::fmt::{self, Write};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SeriesError;

/// Power series in `t` known exactly up to `t^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms so that exactly `order + 1`
    /// coefficients remain.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(vec![BigRational::one()], order)
    }

    /// `c t^k`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Polynomial with integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        TruncatedSeries::new(
            coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncation");
        TruncatedSeries::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `t^k`, dropping terms past the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k.min(self.coeffs.len())];
        coeffs.extend(self.coeffs.iter().take(self.coeffs.len().saturating_sub(k)).cloned());
        TruncatedSeries { coeffs }
    }

    /// Divides by `t^k`; the result has order `order - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByT(k));
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstant);
        }
        let inv0 = a0.recip();
        let mut b: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &b[n - k];
            }
            b.push(-acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Square root with constant term 1; needs constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtNeedsUnitConstant);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut s: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        s.push(BigRational::one());
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &s[k] * &s[n - k];
            }
            s.push(acc / &two);
        }
        Ok(TruncatedSeries { coeffs: s })
    }

    pub fn div(&self, rhs: &TruncatedSeries) -> Result<Self, SeriesError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(TruncatedSeries::one(self.order()), |acc, _| &acc * self)
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// `n<TAB>coefficient` lines, from `t^0`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "{n}\t{c}");
        }
        out
    }

    fn check_order(&self, rhs: &TruncatedSeries) {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_order(rhs);
        let len = self.coeffs.len();
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs[..len - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_2t = TruncatedSeries::from_ints(&[1, -2], 5);
        assert_eq!(ints(&one_minus_2t.inverse().unwrap()), vec![1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn errors() {
        let t = TruncatedSeries::from_ints(&[0, 1], 3);
        assert_eq!(t.inverse(), Err(SeriesError::ZeroConstant));
        assert_eq!(t.sqrt(), Err(SeriesError::SqrtNeedsUnitConstant));
        assert_eq!(TruncatedSeries::from_ints(&[4], 3).sqrt(), Err(SeriesError::SqrtNeedsUnitConstant));
        assert_eq!(t.shift_down(2), Err(SeriesError::NotDivisibleByT(2)));
        assert_eq!(ints(&t.shift_down(1).unwrap()), vec![1, 0, 0]);
    }

    #[test]
    fn shifts_and_display() {
        let s = TruncatedSeries::from_ints(&[1, 2, 3], 3);
        assert_eq!(ints(&s.shift_up(2)), vec![0, 0, 1, 2]);
        assert_eq!(s.to_string(), "1 + 2*t + 3*t^2 + O(t^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(t^2)");
        assert_eq!(s.to_tsv(), "0\t1\n1\t2\n2\t3\n3\t0\n");
    }

    #[test]
    fn rational_coefficients() {
        let s = TruncatedSeries::from_ints(&[2, 1], 3);
        let inv = s.inverse().unwrap();
        assert!(inv.integer_coeffs().is_none());
        assert!((&inv * &s) == TruncatedSeries::one(3));
    }
}
