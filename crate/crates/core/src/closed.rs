//! Closed-form counts, evaluated exactly.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial as binom;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binom(BigUint::from(n), BigUint::from(k))
}

pub fn central_binomial(n: u64) -> BigUint {
    binomial(2 * n, n)
}

/// `4^e` as an exact rational; `e` may be negative.
fn pow4(e: i64) -> BigRational {
    let p = BigInt::from(4u32).pow(e.unsigned_abs());
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn into_natural(q: BigRational, what: &str) -> BigUint {
    assert!(q.is_integer(), "{what} is not an integer: {q}");
    assert!(!q.is_negative(), "{what} is negative: {q}");
    q.to_integer().to_biguint().expect("non-negative")
}

/// Convex permutominoes of size `n >= 1`:
/// `2 (n+3) 4^(n-2) - (n/2) C(2n, n)`.
pub fn closed_f(n: u32) -> BigUint {
    assert!(n >= 1, "size starts at 1");
    let n64 = u64::from(n);
    let left = BigRational::from_integer(BigInt::from(2 * (n64 + 3))) * pow4(i64::from(n) - 2);
    let right = BigRational::new(BigInt::from(n64), BigInt::from(2u32))
        * BigRational::from_integer(BigInt::from(central_binomial(n64)));
    into_natural(left - right, "closed_f")
}

/// Convex polyominoes of semi-perimeter `m + 2`: `c_0 = 1`, `c_1 = 2`, and for
/// `m = j + 2`, `(2j + 11) 4^j - 4 (2j + 1) C(2j, j)`.
pub fn closed_convex_polyominoes(m: u32) -> BigUint {
    match m {
        0 => BigUint::one(),
        1 => BigUint::from(2u32),
        _ => {
            let j = u64::from(m - 2);
            let a = BigInt::from(2 * j + 11) * BigInt::from(4u32).pow(j);
            let b = BigInt::from(4 * (2 * j + 1)) * BigInt::from(central_binomial(j));
            (a - b).to_biguint().expect("positive for all j")
        }
    }
}

/// Class-B (stack) permutominoes of size `n`: `[t^n] t/(1-2t) = 2^(n-1)`.
pub fn closed_stack(n: u32) -> BigUint {
    assert!(n >= 1, "size starts at 1");
    BigUint::from(2u32).pow(n - 1)
}

/// Directed-convex permutominoes of size `n`: `C(2n, n) / 2`.
pub fn closed_directed(n: u32) -> BigUint {
    assert!(n >= 1, "size starts at 1");
    central_binomial(u64::from(n)) / 2u32
}

pub fn catalan(n: u32) -> BigUint {
    central_binomial(u64::from(n)) / (u64::from(n) + 1)
}

pub mod diagnostic {
    //! Formulas kept for inspection only; nothing here is used to check
    //! counts.

    use num_bigint::BigInt;
    use num_traits::Pow;

    use super::binomial;

    /// The triple sum
    /// `sum_{s=0}^{n-2} sum_{t=0}^{s} sum_{x=0}^{t} C(n-2,t)^2 C(n-2,x+s-t)
    ///  - (n-1) C(2(n-2), n-2) + 4^(n-2)`
    /// as commonly quoted for `f_(n+1)`. It does not reproduce the convex
    /// permutomino counts beyond `n = 3` and is returned verbatim.
    pub fn triple_sum(n: u32) -> BigInt {
        assert!(n >= 2, "defined for n >= 2");
        let m = u64::from(n - 2);
        let mut sum = BigInt::from(0u32);
        for s in 0..=m {
            for t in 0..=s {
                let bt = BigInt::from(binomial(m, t));
                let sq = &bt * &bt;
                for x in 0..=t {
                    sum += &sq * BigInt::from(binomial(m, x + s - t));
                }
            }
        }
        sum - BigInt::from(n - 1) * BigInt::from(binomial(2 * m, m)) + BigInt::from(4u32).pow(m)
    }
}

/// `closed_f(n)` as `u64` when it fits; convenience for small sizes.
pub fn closed_f_u64(n: u32) -> Option<u64> {
    closed_f(n).to_u64()
}

#[cfg(test)]
mod tests {
    use super::diagnostic::triple_sum;
    use super::*;

    fn u(v: &BigUint) -> u64 {
        v.to_u64().unwrap()
    }

    #[test]
    fn f_small() {
        let got: Vec<u64> = (1..=7).map(|n| u(&closed_f(n))).collect();
        assert_eq!(got, vec![1, 4, 18, 84, 394, 1836, 8468]);
        assert_eq!(closed_f_u64(2), Some(4));
    }

    #[test]
    fn convex_polyominoes() {
        let got: Vec<u64> = (0..8).map(|m| u(&closed_convex_polyominoes(m))).collect();
        assert_eq!(got, vec![1, 2, 7, 28, 120, 528, 2344, 10416]);
    }

    #[test]
    fn corollaries() {
        assert_eq!((1..=4).map(|n| u(&closed_directed(n))).collect::<Vec<_>>(), vec![1, 3, 10, 35]);
        assert_eq!((1..=4).map(|n| u(&closed_stack(n))).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
        assert_eq!((0..=5).map(|n| u(&catalan(n))).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn triple_sum_values() {
        let got: Vec<BigInt> = (2..=4).map(triple_sum).collect();
        assert_eq!(got, vec![BigInt::from(1), BigInt::from(4), BigInt::from(30)]);
    }
}
