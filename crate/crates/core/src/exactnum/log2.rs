use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A positive real stored exactly through its square, `sqrt(square)`.
///
/// Every center density in this crate has this shape, so `square` holds the
/// exact value of `delta^2` in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSqrt {
    square: BigRational,
}

impl RationalSqrt {
    pub fn new(square: BigRational) -> Result<Self> {
        if !square.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "square must be positive, got {square}"
            )));
        }
        Ok(RationalSqrt { square })
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Self::new(BigRational::new(num.into(), den))
    }

    pub fn square(&self) -> &BigRational {
        &self.square
    }

    pub fn numerator(&self) -> &BigInt {
        self.square.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.square.denom()
    }

    /// Product of the underlying square roots.
    pub fn mul(&self, other: &RationalSqrt) -> RationalSqrt {
        RationalSqrt {
            square: &self.square * &other.square,
        }
    }

    /// Multiply the value by `2^e` (so the square by `4^e`).
    pub fn mul_pow2(&self, e: i64) -> RationalSqrt {
        let shift = BigInt::one() << (2 * e.unsigned_abs()) as usize;
        let square = if e >= 0 {
            &self.square * BigRational::from_integer(shift)
        } else {
            &self.square / BigRational::from_integer(shift)
        };
        RationalSqrt { square }
    }

    pub fn log2(&self, digits: usize) -> String {
        log2_of(self, digits)
    }

    pub fn log2_approx(&self) -> f64 {
        log2_approx(self)
    }
}

impl PartialOrd for RationalSqrt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalSqrt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.square.cmp(&other.square)
    }
}

impl fmt::Debug for RationalSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.square)
    }
}

/// `log2(v) = log2(sqrt(q)) = log2(q) / 2`, rendered with `digits` decimals,
/// correctly rounded (half to even).
pub fn log2_of(v: &RationalSqrt, digits: usize) -> String {
    render_log2_minus(v, &BigRational::zero(), digits)
}

/// Renders `log2(v) - offset`, correctly rounded to `digits` decimals.
///
/// Used for margins against decimal record values, which are exact rationals.
pub fn render_log2_minus(v: &RationalSqrt, offset: &BigRational, digits: usize) -> String {
    let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
    if let Some(e) = exact_log2(&v.square) {
        let exact = BigRational::new(BigInt::from(e), BigInt::from(2)) - offset;
        return render_decimal(&exact, digits);
    }
    let mut frac_bits = 256usize;
    loop {
        let (lo, hi) = log2_interval(&v.square, frac_bits);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let lo = (lo * &half - offset) * &scale;
        let hi = (hi * &half - offset) * &scale;
        let a = round_half_even(&lo);
        if a == round_half_even(&hi) && !is_half_integer(&lo) && !is_half_integer(&hi) {
            return format_scaled(&a, digits);
        }
        frac_bits *= 2;
    }
}

/// Floating-point estimate of `log2(v)` for ranking and display only.
pub fn log2_approx(v: &RationalSqrt) -> f64 {
    let (lo, hi) = log2_interval(&v.square, 64);
    let mid = (lo + hi) / BigRational::from_integer(BigInt::from(4));
    ratio_to_f64(&mid)
}

/// Exact decimal rendering of a rational, rounded half to even.
pub fn render_decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
    format_scaled(&round_half_even(&(x * scale)), digits)
}

/// Parse a plain decimal string such as "-12.3456" into an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let ok = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if (int.is_empty() && frac.is_empty()) || !ok(int) || !ok(frac) {
        return Err(Error::InvalidArgument(format!("not a decimal number: {s:?}")));
    }
    let digits = format!("{int}{frac}");
    let mut num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().expect("validated digits")
    };
    if neg {
        num = -num;
    }
    Ok(BigRational::new(num, BigInt::from(10u32).pow(frac.len() as u32)))
}

fn ratio_to_f64(x: &BigRational) -> f64 {
    let n = x.numer().to_f64().unwrap_or(f64::NAN);
    let d = x.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() {
        n / d
    } else {
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        (x.numer() >> shift as usize).to_f64().unwrap_or(0.0)
            / (x.denom() >> shift as usize).to_f64().unwrap_or(1.0)
    }
}

/// `Some(e)` when `q = 2^e` exactly.
fn exact_log2(q: &BigRational) -> Option<i64> {
    let n = q.numer().magnitude();
    let d = q.denom().magnitude();
    let pow2 = |x: &BigUint| x.count_ones() == 1;
    (pow2(n) && pow2(d)).then(|| n.bits() as i64 - d.bits() as i64)
}

/// Rational interval `[lo, hi]` containing `log2(q)`, of width `2^-(frac_bits - 2)`.
///
/// The exponent comes from bit lengths; the mantissa bits come from repeated
/// squaring in fixed point with 64 guard bits.
fn log2_interval(q: &BigRational, frac_bits: usize) -> (BigRational, BigRational) {
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    let mut e = num.bits() as i64 - den.bits() as i64;
    let prec = frac_bits + 64;
    // x = q / 2^e in fixed point with `prec` fractional bits, normalised to [1, 2)
    let mut x = shifted_quotient(num, den, prec as i64 - e);
    let one = BigUint::one() << prec;
    let two = BigUint::one() << (prec + 1);
    if x < one {
        e -= 1;
        x <<= 1usize;
    } else if x >= two {
        e += 1;
        x >>= 1usize;
    }
    let mut frac = BigUint::zero();
    for _ in 0..frac_bits {
        x = (&x * &x) >> prec;
        frac <<= 1usize;
        if x >= two {
            x >>= 1usize;
            frac += 1u32;
        }
    }
    let denom = BigInt::one() << frac_bits;
    let base = BigRational::from_integer(BigInt::from(e))
        + BigRational::new(BigInt::from_biguint(Sign::Plus, frac), denom.clone());
    let slack = BigRational::new(BigInt::from(4), denom);
    (&base - &slack, &base + &slack)
}

/// `floor(a * 2^shift / b)` for possibly negative shift.
fn shifted_quotient(a: &BigUint, b: &BigUint, shift: i64) -> BigUint {
    if shift >= 0 {
        (a << shift as usize) / b
    } else {
        a / (b << (-shift) as usize)
    }
}

fn round_half_even(x: &BigRational) -> BigInt {
    let fl = x.floor().to_integer();
    let rem = x - BigRational::from_integer(fl.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    match rem.cmp(&half) {
        Ordering::Less => fl,
        Ordering::Greater => fl + 1,
        Ordering::Equal => {
            if fl.is_even() {
                fl
            } else {
                fl + 1
            }
        }
    }
}

fn is_half_integer(x: &BigRational) -> bool {
    x.denom() == &BigInt::from(2)
}

fn format_scaled(v: &BigInt, digits: usize) -> String {
    let neg = v.is_negative();
    let s = v.abs().to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}
