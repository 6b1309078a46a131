//! Exact arithmetic kernel: binomial sums, primality, integer matrices and
//! high-precision base-2 logarithms of rationals.

mod log2;
mod matrix;
mod prime;

pub use log2::{log2_approx, log2_of, parse_decimal, render_decimal, render_log2_minus, RationalSqrt};
pub use matrix::{bareiss_det, gram_det, hnf, HermiteForm, IntMatrix};
pub use prime::{is_prime, next_prime};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// `sum_{i=0}^{r} C(n, i)`, exactly.
pub fn binom_sum(n: u64, r: u64) -> Result<BigUint> {
    if r > n {
        return Err(Error::InvalidArgument(format!(
            "binomial sum radius {r} exceeds length {n}"
        )));
    }
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    for i in 0..r {
        term = term * (n - i) / (i + 1);
        sum += &term;
    }
    Ok(sum)
}

/// Bit lengths of the partial sums `V(n, r)` for `r = 0..=upto`.
///
/// `bits[r]` is the number of binary digits of `V(n, r)`, so
/// `V(n, r) < 2^e` holds exactly when `e >= bits[r]`.
pub fn binom_sum_bit_lengths(n: u64, upto: u64) -> Result<Vec<u64>> {
    if upto > n {
        return Err(Error::InvalidArgument(format!(
            "binomial sum radius {upto} exceeds length {n}"
        )));
    }
    let mut out = Vec::with_capacity(upto as usize + 1);
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    out.push(1);
    for i in 0..upto {
        term = term * (n - i) / (i + 1);
        sum += &term;
        out.push(sum.bits());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn binom(n: u64, k: u64) -> BigUint {
        // Pascal row, independent of the multiplicative recurrence.
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row[k as usize].clone()
    }

    #[test]
    fn binom_sum_examples() {
        assert_eq!(binom_sum(4, 4).unwrap(), BigUint::from(16u32));
        assert_eq!(binom_sum(24, 5).unwrap(), BigUint::from(55455u32));
        let big = binom_sum(4096, 1023).unwrap();
        // floor(log2) of the exact sum; the entropy estimate 3323 is only an upper bound
        assert_eq!(big.bits() - 1, 3315);
        assert!(binom_sum(3, 4).is_err());
    }

    #[test]
    fn binom_sum_matches_pascal() {
        for n in 0..30u64 {
            for r in 0..=n {
                let expect: BigUint = (0..=r).map(|i| binom(n, i)).sum();
                assert_eq!(binom_sum(n, r).unwrap(), expect, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn full_sum_is_power_of_two() {
        for n in 0..=64u64 {
            assert_eq!(binom_sum(n, n).unwrap(), BigUint::one() << n);
        }
    }

    #[test]
    fn bit_lengths_agree_with_sums() {
        let bits = binom_sum_bit_lengths(40, 40).unwrap();
        for r in 0..=40u64 {
            assert_eq!(bits[r as usize], binom_sum(40, r).unwrap().bits());
        }
    }
}
