use num_bigint::BigInt;
use num_rational::BigRational;

use crate::codes::CodeSpec;
use crate::craig::{LogDensity, Provenance};
use crate::error::{Error, Result};
use crate::exactnum::{is_prime, RationalSqrt};

/// Center density `((p+1)/12)^(p-1) / p^((p-5)/6)` of the Mordell-Weil
/// lattice of dimension `2p-2`, for primes `p = 5 mod 6`.
pub fn mordell_weil_density(p: u64) -> Result<LogDensity> {
    if !is_prime(p) || p % 6 != 5 {
        return Err(Error::Domain(format!("need a prime p = 5 mod 6, got {p}")));
    }
    let e = 2 * (p - 1) as u32;
    let num = BigInt::from(p + 1).pow(e);
    let den = BigInt::from(12).pow(e) * BigInt::from(p).pow(((p - 5) / 3) as u32);
    Ok(LogDensity::new(
        RationalSqrt::new(BigRational::new(num, den))?,
        Provenance::FormulaOnly,
    ))
}

/// Construction A: `delta = min(sqrt d, 2)^n / 2^(2n-k)`.
pub fn construction_a_density(c: &CodeSpec) -> Result<LogDensity> {
    if c.q != 2 {
        return Err(Error::Field(format!("Construction A needs a binary code, got GF({})", c.q)));
    }
    let num = BigInt::from(c.d.min(4)).pow(c.n as u32);
    let den = BigInt::from(1) << (2 * (2 * c.n - c.k));
    Ok(LogDensity::new(
        RationalSqrt::new(BigRational::new(num, den))?,
        Provenance::FormulaOnly,
    ))
}
