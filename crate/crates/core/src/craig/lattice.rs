use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{gram_det, hnf, HermiteForm, IntMatrix};

/// Integer lattice given by an independent row basis, with its squared
/// covolume (the Gram determinant) cached.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    basis: IntMatrix,
    vol_sq: BigInt,
}

impl IntegerLattice {
    pub fn new(basis: IntMatrix) -> Result<Self> {
        if basis.rows() > basis.cols() {
            return Err(Error::Rank(format!(
                "{} rows cannot be independent in dimension {}",
                basis.rows(),
                basis.cols()
            )));
        }
        let vol_sq = gram_det(&basis);
        if vol_sq.is_zero() {
            return Err(Error::Rank("basis rows are linearly dependent".into()));
        }
        Ok(IntegerLattice { basis, vol_sq })
    }

    /// Trusts a volume known from theory. Debug builds re-check it when cheap.
    pub(crate) fn with_volume(basis: IntMatrix, vol_sq: BigInt) -> Self {
        debug_assert!(basis.rows() > 40 || gram_det(&basis) == vol_sq);
        IntegerLattice { basis, vol_sq }
    }

    /// Lattice spanned by an arbitrary generating set, reduced to an HNF basis.
    pub fn from_generators(gens: &IntMatrix) -> Result<Self> {
        Self::new(hnf(gens)?.basis())
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// `det(B B^T)`, the squared volume.
    pub fn vol_sq(&self) -> &BigInt {
        &self.vol_sq
    }

    pub fn hermite(&self) -> HermiteForm {
        hnf(&self.basis).expect("basis is nonzero")
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.hermite().contains(v)
    }
}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegerLattice")
            .field("rank", &self.rank())
            .field("ambient_dim", &self.ambient_dim())
            .field("vol_sq", &self.vol_sq.to_string())
            .finish()
    }
}

/// Serialise in the text basis format: `"N r"` then `r` rows of `N` integers.
pub fn write_basis(lat: &IntegerLattice) -> String {
    let b = lat.basis();
    let mut out = format!("{} {}\n", b.cols(), b.rows());
    for i in 0..b.rows() {
        let row: Vec<String> = b.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the text basis format. Blank lines and `#` comments are skipped.
pub fn parse_basis(text: &str) -> Result<IntegerLattice> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing \"N r\" header".into(),
    })?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            line: hl,
            msg: format!("bad header {header:?}"),
        })?;
    let [n, r] = dims[..] else {
        return Err(Error::Parse {
            line: hl,
            msg: "header must be \"N r\"".into(),
        });
    };
    if n == 0 || r == 0 {
        return Err(Error::Parse {
            line: hl,
            msg: "dimensions must be positive".into(),
        });
    }
    let mut rows = Vec::with_capacity(r);
    for (ln, line) in lines {
        if rows.len() == r {
            return Err(Error::Parse {
                line: ln,
                msg: format!("more than {r} rows"),
            });
        }
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|t| t.parse::<BigInt>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: ln,
                msg: "non-integer entry".into(),
            })?;
        if row.len() != n {
            return Err(Error::Parse {
                line: ln,
                msg: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != r {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {r} rows, found {}", rows.len()),
        });
    }
    IntegerLattice::new(IntMatrix::from_rows(rows)?)
}
