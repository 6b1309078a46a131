//! Analogous Craig lattices `A_n^(m,l)`: polynomials of degree at most `n`
//! vanishing at 1 whose first `m-1` derivatives at 1 are divisible by `l`.
//!
//! Vectors are coefficient lists `[a_0, ..., a_n]` of `f = sum a_j x^j`.

mod lattice;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use lattice::{parse_basis, write_basis, IntegerLattice};

use crate::error::{Error, Result};
use crate::exactnum::{gram_det, hnf, is_prime, log2_of, next_prime, IntMatrix, RationalSqrt};

/// Largest ambient dimension for which explicit bases are built.
pub const BASIS_AMBIENT_CAP: usize = 512;

/// Largest modulus accepted by [`verify_section`].
pub const SECTION_CAP: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `2m < n`.
    Strict,
    /// `n <= 2m <= n + 1`, admitted by the parity-extension variant.
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CraigParams {
    n: usize,
    m: usize,
    l: u64,
}

impl CraigParams {
    pub fn new(n: usize, m: usize, l: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parameter("rank n must be at least 1".into()));
        }
        if m < 1 {
            return Err(Error::Parameter("m must be at least 1".into()));
        }
        if m > 1 && 2 * m > n + 1 {
            return Err(Error::Parameter(format!(
                "m={m} too large for n={n}: need 2m <= n+1"
            )));
        }
        if l < n as u64 + 1 {
            return Err(Error::Parameter(format!("l={l} must be at least n+1={}", n + 1)));
        }
        Ok(CraigParams { n, m, l })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn regime(&self) -> Regime {
        if self.m == 1 || 2 * self.m < self.n {
            Regime::Strict
        } else {
            Regime::Extended
        }
    }

    pub fn l_is_prime(&self) -> bool {
        is_prime(self.l)
    }

    /// Guaranteed minimum norm `2m`; withheld for composite `l` when `m > 1`.
    pub fn norm_bound(&self) -> Option<u64> {
        (self.m == 1 || self.l_is_prime()).then_some(2 * self.m as u64)
    }

    /// `Vol^2 = l^(2(m-1)) (n+1)`.
    pub fn vol_sq(&self) -> BigInt {
        BigInt::from(self.l).pow(2 * (self.m as u32 - 1)) * BigInt::from(self.n + 1)
    }
}

impl fmt::Display for CraigParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}^({},{})", self.n, self.m, self.l)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Bare lattice, minimum norm `2m`.
    Plain,
    /// Preimage of a code, minimum norm `8m`.
    Lifted,
    /// Closed-form value with no lattice behind it here.
    FormulaOnly,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Plain => "plain",
            Provenance::Lifted => "lifted",
            Provenance::FormulaOnly => "formula-only",
        }
    }
}

/// A center density (or density bound) held exactly as `sqrt(delta^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogDensity {
    pub delta_sq: RationalSqrt,
    pub provenance: Provenance,
}

impl LogDensity {
    pub fn new(delta_sq: RationalSqrt, provenance: Provenance) -> Self {
        LogDensity {
            delta_sq,
            provenance,
        }
    }

    /// `log2(delta)` with `digits` decimals.
    pub fn render(&self, digits: usize) -> String {
        log2_of(&self.delta_sq, digits)
    }

    pub fn log2_approx(&self) -> f64 {
        self.delta_sq.log2_approx()
    }
}

impl fmt::Display for LogDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(4))
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// Coefficients of `(x-1)^j` padded to length `len`.
fn x_minus_one_pow(j: usize, len: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); len];
    for (i, c) in row.iter_mut().enumerate().take(j + 1) {
        let b = binom(j, i);
        *c = if (j - i) % 2 == 0 { b } else { -b };
    }
    row
}

fn craig_rows(p: &CraigParams) -> Vec<Vec<BigInt>> {
    let len = p.n + 1;
    if p.m == 1 {
        // (x-1) x^j: the root lattice A_n in its usual difference basis
        return (0..p.n)
            .map(|j| {
                let mut row = vec![BigInt::zero(); len];
                row[j] = -BigInt::one();
                row[j + 1] = BigInt::one();
                row
            })
            .collect();
    }
    let l = BigInt::from(p.l);
    let mut rows: Vec<Vec<BigInt>> = (p.m..=p.n).rev().map(|j| x_minus_one_pow(j, len)).collect();
    for j in (1..p.m).rev() {
        rows.push(x_minus_one_pow(j, len).into_iter().map(|c| c * &l).collect());
    }
    rows
}

/// Basis of `A_n^(m,l)` in `Z^(n+1)`: `(x-1)^n, ..., (x-1)^m`, then
/// `l(x-1)^(m-1), ..., l(x-1)`. For `m = 1` the basis `(x-1)x^j` is used.
pub fn craig_basis(p: &CraigParams) -> Result<IntegerLattice> {
    if p.n + 1 > BASIS_AMBIENT_CAP {
        return Err(Error::capacity(
            "ambient dimension",
            (p.n + 1) as u64,
            BASIS_AMBIENT_CAP as u64,
        ));
    }
    let basis = IntMatrix::from_rows(craig_rows(p))?;
    Ok(IntegerLattice::with_volume(basis, p.vol_sq()))
}

/// Derivative test: `f(1) = 0` and `f^(i)(1) = 0 mod l` for `i = 1..m-1`.
pub fn membership(p: &CraigParams, f: &[BigInt]) -> Result<bool> {
    if f.len() != p.n + 1 {
        return Err(Error::InvalidArgument(format!(
            "vector has length {}, expected {}",
            f.len(),
            p.n + 1
        )));
    }
    if p.m > 1 && !p.l_is_prime() {
        return Err(Error::Parameter(format!(
            "membership criterion needs prime l, got {}",
            p.l
        )));
    }
    let l = BigInt::from(p.l);
    for i in 0..p.m {
        // f^(i)(1) = sum_j a_j * j! / (j-i)!
        let mut deriv = BigInt::zero();
        let mut falling = BigInt::zero();
        for (j, a) in f.iter().enumerate() {
            if j == i {
                falling = (1..=i).map(BigInt::from).product();
            } else if j > i {
                falling = falling * j / (j - i);
            }
            if j >= i && !a.is_zero() {
                deriv += a * &falling;
            }
        }
        let ok = if i == 0 {
            deriv.is_zero()
        } else {
            (deriv % &l).is_zero()
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn valuation(mut x: u64, q: u64) -> u64 {
    let mut v = 0;
    while x % q == 0 {
        x /= q;
        v += 1;
    }
    v
}

// Only 2 and the primes of m can divide the numerator, so the fraction is
// reduced from small valuations; a generic gcd is very slow at n in the
// thousands.
fn reduce_density_ratio(p: &CraigParams, mut num: BigInt, mut den: BigInt) -> BigRational {
    let shift = num.trailing_zeros().unwrap_or(0).min(den.trailing_zeros().unwrap_or(0));
    num >>= shift;
    den >>= shift;
    let mut rest = p.m as u64;
    let mut q = 2;
    while rest > 1 {
        if q * q > rest {
            q = rest;
        }
        if rest % q == 0 {
            let vq = valuation(rest, q);
            rest /= q.pow(vq as u32);
            if q != 2 {
                let in_num = vq * p.n as u64;
                let in_den = 2 * (p.m as u64 - 1) * valuation(p.l, q) + valuation(p.n as u64 + 1, q);
                let c = in_num.min(in_den) as u32;
                if c > 0 {
                    let f = BigInt::from(q).pow(c);
                    num /= &f;
                    den /= &f;
                }
            }
        }
        q += 1;
    }
    BigRational::new_raw(num, den)
}

/// `delta^2 = 2^(2k-n) m^n / (l^(2(m-1)) (n+1))`.
///
/// With `k = 0` this is the bare lattice bound `(sqrt(2m)/2)^n / Vol`; for
/// `k > 0` it assumes a supporting `[n+1, k, >= 8m]` code.
pub fn center_density_lb(p: &CraigParams, k: usize) -> LogDensity {
    let num = BigInt::from(p.m).pow(p.n as u32) << (2 * k);
    let den = p.vol_sq() << p.n;
    let delta_sq = RationalSqrt::new(reduce_density_ratio(p, num, den)).expect("positive");
    let provenance = if k == 0 { Provenance::Plain } else { Provenance::Lifted };
    LogDensity::new(delta_sq, provenance)
}

/// `m` nearest to `n / (2 ln n)` (halves round up), clamped so that `2m < n`
/// where possible, and `l` the least prime at least `n+1`.
pub fn choose_params(n: usize) -> Result<CraigParams> {
    if n < 2 {
        return Err(Error::Parameter(format!("dimension {n} below 2")));
    }
    let x = n as f64 / (2.0 * (n as f64).ln());
    let hi = n.div_ceil(2).saturating_sub(1).max(1);
    let m = ((x + 0.5).floor() as usize).clamp(1, hi);
    CraigParams::new(n, m, next_prime(n as u64 + 1))
}

/// The density bound `m^(n/2) / (2^(m-1+n/2) n^(m-1) (n+1)^(1/2))` at
/// [`choose_params`]. This is a bound on the packing density itself.
pub fn density_floor(n: usize) -> Result<LogDensity> {
    let p = choose_params(n)?;
    let m = p.m as u32;
    let num = BigInt::from(p.m).pow(n as u32);
    let den = (BigInt::one() << (2 * (m as usize - 1) + n))
        * BigInt::from(n).pow(2 * (m - 1))
        * BigInt::from(n + 1);
    Ok(LogDensity::new(
        RationalSqrt::new(BigRational::new(num, den))?,
        Provenance::FormulaOnly,
    ))
}

/// Checks that `A_n^(m,l)` is the section of `A_(l-1)^(m,l)` on which the
/// last `l-n-1` coordinates vanish.
pub fn verify_section(p: &CraigParams) -> Result<bool> {
    if !p.l_is_prime() {
        return Err(Error::Parameter(format!("l={} is not prime", p.l)));
    }
    if p.l > SECTION_CAP {
        return Err(Error::capacity("section modulus", p.l, SECTION_CAP));
    }
    let big_n = (p.l - 1) as usize;
    let big = CraigParams::new(big_n, p.m, p.l)?;
    let small = craig_basis(p)?;
    let big_lat = craig_basis(&big)?;

    // every padded generator is a member of the larger lattice
    for row in small.basis().row_vecs() {
        let mut padded = row;
        padded.resize(big_n + 1, BigInt::zero());
        if !membership(&big, &padded)? {
            return Ok(false);
        }
    }

    // the section itself, from an HNF with the trailing coordinates first
    let tail = big_n - p.n;
    let order: Vec<usize> = (p.n + 1..=big_n).chain(0..=p.n).collect();
    let b = big_lat.basis();
    let permuted = IntMatrix::from_rows(
        (0..b.rows())
            .map(|i| order.iter().map(|&c| b[(i, c)].clone()).collect())
            .collect(),
    )?;
    let h = hnf(&permuted)?;
    let section: Vec<Vec<BigInt>> = h
        .pivots
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c >= tail)
        .map(|(r, _)| h.h.row(r)[tail..].to_vec())
        .collect();
    if section.len() != p.n {
        return Ok(false);
    }
    Ok(gram_det(&IntMatrix::from_rows(section)?) == *small.vol_sq())
}
