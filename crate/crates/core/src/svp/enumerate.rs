use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::lll::{default_quality, lll_reduce, ReducedBasis};
use crate::craig::IntegerLattice;
use crate::error::{Error, Result};

/// Largest rank handled by exact enumeration unless a cap is given.
pub const ENUM_RANK_CAP: usize = 40;

// Ranks at or above this split the top coordinate across threads.
const PARALLEL_RANK: usize = 12;

/// A shortest nonzero vector. The witness is normalised so its first nonzero
/// entry is positive and is the lexicographically smallest among vectors of
/// minimal norm, which makes the result independent of the basis given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVector {
    pub norm: BigInt,
    pub witness: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Holds { min_norm: BigInt },
    Violated { witness: Vec<BigInt>, norm: BigInt },
}

impl Certificate {
    pub fn holds(&self) -> bool {
        matches!(self, Certificate::Holds { .. })
    }
}

pub fn shortest_vector(lat: &IntegerLattice) -> Result<ShortVector> {
    shortest_vector_with_cap(lat, ENUM_RANK_CAP)
}

pub fn shortest_vector_with_cap(lat: &IntegerLattice, cap: usize) -> Result<ShortVector> {
    if lat.rank() > cap {
        return Err(Error::capacity("enumeration rank", lat.rank() as u64, cap as u64));
    }
    let red = lll_reduce(lat, &default_quality())?;
    Ok(enumerate_shortest(&red))
}

/// Holds iff every nonzero vector has squared norm at least `bound`.
pub fn verify_min_norm(lat: &IntegerLattice, bound: &BigInt) -> Result<Certificate> {
    let sv = shortest_vector(lat)?;
    Ok(if sv.norm >= *bound {
        Certificate::Holds { min_norm: sv.norm }
    } else {
        Certificate::Violated {
            witness: sv.witness,
            norm: sv.norm,
        }
    })
}

/// Fincke–Pohst enumeration over a reduced basis.
///
/// With `d_i` the leading Gram determinants and `lam[j][i] = d_i mu[j][i]`,
/// the `i`-th projected term of `sum x_j b_j` is
/// `(d_i x_i + sum_{j>i} lam[j][i] x_j)^2 / (d_i d_{i-1})`. Scaling by the lcm
/// of the denominators keeps every comparison in integers.
pub fn enumerate_shortest(red: &ReducedBasis) -> ShortVector {
    let n = red.rank();
    let d = red.gram_dets();
    let lam = red.lambdas();
    let mut scale = BigInt::from(1);
    for i in 1..=n {
        scale = scale.lcm(&(&d[i] * &d[i - 1]));
    }
    let weights: Vec<BigInt> = std::iter::once(BigInt::zero())
        .chain((1..=n).map(|i| &scale / (&d[i] * &d[i - 1])))
        .collect();
    let rows = red.basis.row_vecs();

    let mut best = rows
        .iter()
        .map(|r| ShortVector {
            norm: r.iter().map(|x| x * x).sum(),
            witness: canonical(r.clone()),
        })
        .min_by(|a, b| key(a).cmp(&key(b)))
        .expect("rank is positive");

    let ctx = Ctx {
        n,
        d,
        lam,
        weights: &weights,
        scale: &scale,
        rows: &rows,
    };
    if n >= PARALLEL_RANK {
        let bound = &best.norm * &scale;
        let c = BigInt::zero();
        let (lo, hi) = ctx.range(n, &c, &bound, true);
        let tops: Vec<BigInt> = num_iter(lo, hi).collect();
        let found = tops
            .into_par_iter()
            .filter_map(|xn| {
                let mut local = best.clone();
                let mut x = vec![BigInt::zero(); n + 1];
                let val = &d[n] * &xn;
                let part = &val * &val * &weights[n];
                x[n] = xn;
                ctx.descend(n - 1, &mut x, part, &mut local);
                Some(local)
            })
            .min_by(|a, b| key(a).cmp(&key(b)));
        if let Some(f) = found {
            if key(&f) < key(&best) {
                best = f;
            }
        }
    } else {
        let mut x = vec![BigInt::zero(); n + 1];
        ctx.descend(n, &mut x, BigInt::zero(), &mut best);
    }
    best
}

fn key(s: &ShortVector) -> (&BigInt, &[BigInt]) {
    (&s.norm, &s.witness)
}

fn canonical(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut v {
            *x = -&*x;
        }
    }
    v
}

fn num_iter(lo: BigInt, hi: BigInt) -> impl Iterator<Item = BigInt> {
    let mut cur = lo;
    std::iter::from_fn(move || {
        (cur <= hi).then(|| {
            let out = cur.clone();
            cur += 1;
            out
        })
    })
}

struct Ctx<'a> {
    n: usize,
    d: &'a [BigInt],
    lam: &'a [Vec<BigInt>],
    weights: &'a [BigInt],
    scale: &'a BigInt,
    rows: &'a [Vec<BigInt>],
}

impl Ctx<'_> {
    /// Integer `x_i` with `(d_i x_i + c)^2 w_i <= budget`, only `x_i >= 0`
    /// when `nonneg` (all higher coordinates zero, fixing the sign).
    fn range(&self, i: usize, c: &BigInt, budget: &BigInt, nonneg: bool) -> (BigInt, BigInt) {
        let s = (budget / &self.weights[i]).sqrt();
        let di = &self.d[i];
        let lo = -(&s + c).div_floor(di);
        let hi = (&s - c).div_floor(di);
        let lo = if nonneg && lo.is_negative() { BigInt::zero() } else { lo };
        (lo, hi)
    }

    // `x` is 1-indexed; coordinates above `i` are fixed.
    fn descend(&self, i: usize, x: &mut Vec<BigInt>, partial: BigInt, best: &mut ShortVector) {
        if i == 0 {
            if x[1..].iter().all(Zero::is_zero) {
                return;
            }
            let norm = &partial / self.scale;
            if norm > best.norm {
                return;
            }
            let mut v = vec![BigInt::zero(); self.rows[0].len()];
            for (j, xj) in x[1..].iter().enumerate() {
                if !xj.is_zero() {
                    for (vc, bc) in v.iter_mut().zip(&self.rows[j]) {
                        *vc += xj * bc;
                    }
                }
            }
            let cand = ShortVector {
                norm,
                witness: canonical(v),
            };
            if key(&cand) < key(best) {
                *best = cand;
            }
            return;
        }
        let c: BigInt = (i + 1..=self.n).map(|j| &self.lam[j][i] * &x[j]).sum();
        let nonneg = x[i + 1..].iter().all(Zero::is_zero);
        let budget = &best.norm * self.scale - &partial;
        if budget.is_negative() {
            return;
        }
        let (lo, hi) = self.range(i, &c, &budget, nonneg);
        for xi in num_iter(lo, hi) {
            let val = &self.d[i] * &xi + &c;
            let part = &partial + &val * &val * &self.weights[i];
            if part > &best.norm * self.scale {
                continue;
            }
            x[i] = xi;
            self.descend(i - 1, x, part, best);
        }
        x[i] = BigInt::zero();
    }
}
