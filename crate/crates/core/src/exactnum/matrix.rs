use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "matrix must be non-empty, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[dst] += factor * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * factor;
            self.data[dst * self.cols + c] += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for x in self.row_mut(i) {
            *x = -std::mem::take(x);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product, skipping zero entries of `self`.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * &rhs[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        Ok(out)
    }

    /// `B * B^T`
    pub fn gram(&self) -> IntMatrix {
        let mut g = IntMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = dot(self.row(i), self.row(j));
                g[(j, i)] = v.clone();
                g[(i, j)] = v;
            }
        }
        g
    }

    /// Select rows by index into a new matrix.
    pub fn select_rows(&self, idx: &[usize]) -> Result<IntMatrix> {
        IntMatrix::from_rows(idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Fraction-free (Bareiss) determinant of a square matrix.
pub fn bareiss_det(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::InvalidArgument(format!(
            "determinant of non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// `det(B B^T)`: the squared covolume of the lattice spanned by the rows.
/// Returns zero when the rows are dependent.
pub fn gram_det(b: &IntMatrix) -> BigInt {
    bareiss_det(&b.gram()).expect("gram matrix is square")
}

/// Row-style Hermite normal form `H = U * M`.
///
/// The first `rank` rows of `h` are the echelon basis with positive pivots;
/// entries above each pivot lie in `[0, pivot)`. Remaining rows are zero.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    /// The nonzero rows of `h`.
    pub fn basis(&self) -> IntMatrix {
        self.h
            .select_rows(&(0..self.rank).collect::<Vec<_>>())
            .expect("rank is positive")
    }

    /// Integer coordinates `x` with `x * basis() == v`, if `v` lies in the
    /// row lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.h.cols() {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank);
        for (r, &c) in self.pivots.iter().enumerate() {
            if rest[..c].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (q, rem) = rest[c].div_rem(&self.h[(r, c)]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, h) in rest.iter_mut().zip(self.h.row(r)) {
                    *x -= &q * h;
                }
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }
}

/// Hermite normal form of the row lattice of `m`, with unimodular `u`.
///
/// Rows of `m` may be dependent (any generating set is accepted); only the
/// zero matrix is rejected.
pub fn hnf(m: &IntMatrix) -> Result<HermiteForm> {
    let rows = m.rows;
    let cols = m.cols;
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    let mut pivots = Vec::new();

    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // smallest nonzero magnitude at or below row r becomes the pivot
            let best = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = best else { break };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                let neg = -q;
                h.add_row_multiple(i, r, &neg);
                u.add_row_multiple(i, r, &neg);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                let neg = -q;
                h.add_row_multiple(i, r, &neg);
                u.add_row_multiple(i, r, &neg);
            }
        }
        pivots.push(c);
        r += 1;
    }

    if r == 0 {
        return Err(Error::Rank("zero matrix has no lattice basis".into()));
    }
    Ok(HermiteForm {
        h,
        u,
        rank: r,
        pivots,
    })
}
