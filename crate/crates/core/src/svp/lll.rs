use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::craig::IntegerLattice;
use crate::error::{Error, Result};
use crate::exactnum::IntMatrix;

/// LLL-reduced basis with its exact Gram–Schmidt data.
///
/// Internally the Gram–Schmidt coefficients are kept in integral form:
/// `d[i]` is the Gram determinant of the first `i` rows and
/// `lam[i][j] = d[j] * mu[i][j]`, both 1-indexed with `d[0] = 1`.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    pub basis: IntMatrix,
    /// Squared Gram–Schmidt norms `|b_i*|^2`.
    pub gso_norms: Vec<BigRational>,
    pub quality: BigRational,
    d: Vec<BigInt>,
    lam: Vec<Vec<BigInt>>,
}

impl ReducedBasis {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// `mu[i][j]` for `j < i`, 0-indexed.
    pub fn mu(&self, i: usize, j: usize) -> BigRational {
        assert!(j < i && i < self.rank());
        BigRational::new(self.lam[i + 1][j + 1].clone(), self.d[j + 1].clone())
    }

    pub(crate) fn gram_dets(&self) -> &[BigInt] {
        &self.d
    }

    pub(crate) fn lambdas(&self) -> &[Vec<BigInt>] {
        &self.lam
    }
}

pub fn default_quality() -> BigRational {
    BigRational::new(99.into(), 100.into())
}

/// LLL reduction of a lattice basis with exact integer arithmetic.
pub fn lll_reduce(lat: &IntegerLattice, quality: &BigRational) -> Result<ReducedBasis> {
    lll_reduce_matrix(lat.basis(), quality)
}

/// LLL reduction of the rows of `basis`, which must be independent.
pub fn lll_reduce_matrix(basis: &IntMatrix, quality: &BigRational) -> Result<ReducedBasis> {
    let quarter = BigRational::new(1.into(), 4.into());
    if *quality <= quarter || *quality >= BigRational::one() {
        return Err(Error::InvalidArgument(format!(
            "reduction quality must lie in (1/4, 1), got {quality}"
        )));
    }
    let (p, q) = (quality.numer().clone(), quality.denom().clone());
    let n = basis.rows();
    let mut st = State {
        b: basis.row_vecs(),
        d: vec![BigInt::zero(); n + 1],
        lam: vec![vec![BigInt::zero(); n + 1]; n + 1],
    };
    st.d[0] = BigInt::one();
    if n > 0 {
        st.d[1] = dot(&st.b[0], &st.b[0]);
        if st.d[1].is_zero() {
            return Err(dependent());
        }
    }
    let mut k = 2;
    let mut kmax = 1;
    while k <= n {
        if k > kmax {
            kmax = k;
            st.extend_gso(k)?;
        }
        st.reduce(k, k - 1);
        let lhs = &q * (&st.d[k] * &st.d[k - 2] + &st.lam[k][k - 1] * &st.lam[k][k - 1]);
        let rhs = &p * &st.d[k - 1] * &st.d[k - 1];
        if lhs < rhs {
            st.swap(k, kmax);
            k = (k - 1).max(2);
            continue;
        }
        for l in (1..k - 1).rev() {
            st.reduce(k, l);
        }
        k += 1;
    }
    let gso_norms = (1..=n)
        .map(|i| BigRational::new(st.d[i].clone(), st.d[i - 1].clone()))
        .collect();
    Ok(ReducedBasis {
        basis: IntMatrix::from_rows(st.b)?,
        gso_norms,
        quality: quality.clone(),
        d: st.d,
        lam: st.lam,
    })
}

fn dependent() -> Error {
    Error::Rank("basis rows are linearly dependent".into())
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct State {
    b: Vec<Vec<BigInt>>,
    d: Vec<BigInt>,
    lam: Vec<Vec<BigInt>>,
}

impl State {
    fn extend_gso(&mut self, k: usize) -> Result<()> {
        for j in 1..=k {
            let mut u = dot(&self.b[k - 1], &self.b[j - 1]);
            for i in 1..j {
                u = (&self.d[i] * &u - &self.lam[k][i] * &self.lam[j][i]) / &self.d[i - 1];
            }
            if j < k {
                self.lam[k][j] = u;
            } else if u.is_zero() {
                return Err(dependent());
            } else {
                self.d[k] = u;
            }
        }
        Ok(())
    }

    fn reduce(&mut self, k: usize, l: usize) {
        let two = BigInt::from(2);
        if &two * self.lam[k][l].abs() <= self.d[l] {
            return;
        }
        let r = (&two * &self.lam[k][l] + &self.d[l]).div_floor(&(&two * &self.d[l]));
        let (lo, hi) = self.b.split_at_mut(k - 1);
        for (x, y) in hi[0].iter_mut().zip(&lo[l - 1]) {
            *x -= &r * y;
        }
        let dl = &r * &self.d[l];
        self.lam[k][l] -= dl;
        for i in 1..l {
            let t = &r * &self.lam[l][i];
            self.lam[k][i] -= t;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        self.b.swap(k - 1, k - 2);
        for j in 1..k - 1 {
            let t = std::mem::take(&mut self.lam[k][j]);
            self.lam[k][j] = std::mem::replace(&mut self.lam[k - 1][j], t);
        }
        let lm = self.lam[k][k - 1].clone();
        let bb = (&self.d[k - 2] * &self.d[k] + &lm * &lm) / &self.d[k - 1];
        for i in k + 1..=kmax {
            let t = self.lam[i][k].clone();
            self.lam[i][k] = (&self.d[k] * &self.lam[i][k - 1] - &lm * &t) / &self.d[k - 1];
            self.lam[i][k - 1] = (&bb * &t + &lm * &self.lam[i][k]) / &self.d[k];
        }
        self.d[k - 1] = bb;
    }
}
