use num_bigint::BigUint;

use super::code::{CodeSpec, CodeStatus};
use crate::error::{Error, Result};
use crate::exactnum::{binom_sum, binom_sum_bit_lengths};

/// `V(n, d-1) < 2^(n-k+1)`: a binary `[n, k, d]` code exists.
pub fn gv_exists(n: usize, k: usize, d: usize) -> bool {
    if d == 0 || d > n || k > n + 1 {
        return false;
    }
    let v = binom_sum(n as u64, d as u64 - 1).expect("d <= n");
    v.bits() <= (n + 1 - k) as u64
}

/// Largest `k` with [`gv_exists`], or 0 if there is none.
pub fn gv_max_k(n: usize, d: usize) -> Result<usize> {
    if d == 0 || d > n {
        return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got n={n}, d={d}")));
    }
    let bits = binom_sum(n as u64, d as u64 - 1)?.bits() as usize;
    Ok(k_from_bits(n, bits))
}

fn k_from_bits(n: usize, bits: usize) -> usize {
    // V < 2^(n-k+1)  <=>  bits <= n-k+1
    (n + 1).saturating_sub(bits).min(n)
}

/// Precomputed GV dimensions for one length, for every distance.
#[derive(Clone, Debug)]
pub struct GvProfile {
    n: usize,
    bits: Vec<u64>,
}

impl GvProfile {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("length must be positive".into()));
        }
        Ok(GvProfile {
            n,
            bits: binom_sum_bit_lengths(n as u64, n as u64 - 1)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_k(&self, d: usize) -> usize {
        if d == 0 || d > self.n {
            return 0;
        }
        k_from_bits(self.n, self.bits[d - 1] as usize)
    }
}

/// `[8t, floor((6 log2 3 - 8) t), 2t]`, the family whose existence the GV
/// inequality guarantees.
///
/// `floor(6t log2 3)` is one less than the bit length of `3^(6t)`.
pub fn lemma62_params(t: usize) -> Result<CodeSpec> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let floor_log = BigUint::from(3u32).pow(6 * t as u32).bits() as usize - 1;
    let k = floor_log - 8 * t;
    let (n, d) = (8 * t, 2 * t);
    let status = if gv_exists(n, k, d) {
        CodeStatus::GvExists
    } else {
        CodeStatus::Hypothetical
    };
    CodeSpec::binary(n, k, d, status)
}
