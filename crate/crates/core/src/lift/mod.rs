//! Lifting binary codes into analogous Craig lattices, and the density
//! pipelines built on it.
//!
//! Reducing `A_n^(m,l)` mod 2 (for odd `l`) maps it onto the even-weight
//! `[n+1, n, 2]` code. The preimage of a `[n+1, k, >= 8m]` subcode has index
//! `2^(n-k)` and minimum norm at least `8m`: its vectors either lie in
//! `2 A_n^(m,l)` or have at least `8m` odd coordinates.

mod pipelines;
mod reference;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use pipelines::{
    conditional_eval, craig_8x_m, improve_craig_8x, mw_beater_search, pipeline_24n,
    sweep_dimension, ConditionalVerdict, VerdictStatus,
};
pub use reference::{construction_a_density, mordell_weil_density};

use crate::codes::{extend_parity, CodeSpec, LinearCode};
use crate::craig::{
    center_density_lb, craig_basis, membership, CraigParams, IntegerLattice, LogDensity,
    BASIS_AMBIENT_CAP,
};
use crate::error::{Error, Result};
use crate::exactnum::{hnf, IntMatrix};

/// A lattice obtained from `A_n^(m,l)`, possibly through a code, with its
/// guaranteed density.
#[derive(Clone, Debug)]
pub struct LiftResult {
    /// Present when an explicit basis was built.
    pub lattice: Option<IntegerLattice>,
    pub params: CraigParams,
    /// The code as supplied (length `n` or `n+1`); `None` for a bare lattice.
    pub code: Option<CodeSpec>,
    pub density: LogDensity,
    /// `8m` for a lift, `2m` for the bare lattice.
    pub min_norm_guarantee: u64,
    /// Code dimension stated in the literature for this construction, when
    /// it differs in derivation from the one used.
    pub stated_k: Option<usize>,
}

impl LiftResult {
    pub fn k(&self) -> usize {
        self.code.map_or(0, |c| c.k)
    }
}

fn check_odd_l(p: &CraigParams) -> Result<()> {
    if p.l() % 2 == 0 {
        return Err(Error::Parameter(format!("reduction mod 2 needs odd l, got {}", p.l())));
    }
    Ok(())
}

fn is_member(p: &CraigParams, v: &[BigInt]) -> Result<bool> {
    if p.m() == 1 || p.l_is_prime() {
        membership(p, v)
    } else {
        Ok(craig_basis(p)?.contains(v))
    }
}

/// Coordinatewise reduction mod 2 of a lattice vector.
pub fn reduce_mod2(p: &CraigParams, v: &[BigInt]) -> Result<Vec<u8>> {
    check_odd_l(p)?;
    if !is_member(p, v)? {
        return Err(Error::Membership);
    }
    Ok(v.iter().map(|x| u8::from(x.is_odd())).collect())
}

/// Solves `x B = t` over GF(2) for a fixed row set `B`.
struct Gf2Solver {
    /// Echelon rows paired with the combination of original rows giving them.
    echelon: Vec<(usize, Vec<u8>, Vec<u8>)>,
    rows: usize,
}

impl Gf2Solver {
    fn new(b: &[Vec<u8>]) -> Self {
        let r = b.len();
        let cols = b.first().map_or(0, Vec::len);
        let mut work: Vec<(Vec<u8>, Vec<u8>)> = b
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut c = vec![0u8; r];
                c[i] = 1;
                (row.clone(), c)
            })
            .collect();
        let mut echelon = Vec::new();
        for col in 0..cols {
            let Some(pos) = work.iter().position(|(row, _)| row[col] == 1) else {
                continue;
            };
            let (prow, pcomb) = work.swap_remove(pos);
            for (row, comb) in &mut work {
                if row[col] == 1 {
                    xor_into(row, &prow);
                    xor_into(comb, &pcomb);
                }
            }
            echelon.push((col, prow, pcomb));
        }
        Gf2Solver { echelon, rows: r }
    }

    fn rank(&self) -> usize {
        self.echelon.len()
    }

    fn solve(&self, target: &[u8]) -> Option<Vec<u8>> {
        let mut t = target.to_vec();
        let mut x = vec![0u8; self.rows];
        for (col, row, comb) in &self.echelon {
            if t[*col] == 1 {
                xor_into(&mut t, row);
                xor_into(&mut x, comb);
            }
        }
        t.iter().all(|&b| b == 0).then_some(x)
    }
}

fn xor_into(a: &mut [u8], b: &[u8]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn check_binary(code: &LinearCode) -> Result<()> {
    if !code.is_binary() {
        return Err(Error::Field(format!(
            "lifting needs a binary code, got GF({})",
            code.field().q()
        )));
    }
    Ok(())
}

fn check_even(code: &LinearCode) -> Result<()> {
    for (i, row) in code.generator().iter().enumerate() {
        if row.iter().filter(|&&b| b == 1).count() % 2 == 1 {
            return Err(Error::Subcode(format!("generator row {i} has odd weight")));
        }
    }
    Ok(())
}

/// `{v in A_n^(m,l) : v mod 2 in V}` for a length-`n+1` subcode `V` of the
/// even-weight code, with no condition on the distance of `V`.
///
/// Writing `v = x B` for the Craig basis `B`, the condition is on `x mod 2`
/// alone, so the lattice is `HNF([X; 2I]) B` with `X` the coefficient words
/// of the generators of `V`.
pub fn preimage(p: &CraigParams, code: &LinearCode) -> Result<IntegerLattice> {
    check_odd_l(p)?;
    check_binary(code)?;
    let n = p.n();
    if code.n() != n + 1 {
        return Err(Error::InvalidArgument(format!(
            "code length {} must be n+1 = {}",
            code.n(),
            n + 1
        )));
    }
    check_even(code)?;
    let base = craig_basis(p)?;
    let b = base.basis();
    let b2: Vec<Vec<u8>> = b
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|x| u8::from(x.is_odd())).collect())
        .collect();
    let solver = Gf2Solver::new(&b2);
    debug_assert_eq!(solver.rank(), n);
    let mut gens: Vec<Vec<BigInt>> = Vec::with_capacity(code.k() + n);
    for row in code.generator() {
        let x = solver
            .solve(row)
            .ok_or_else(|| Error::Subcode("generator outside the image of reduction".into()))?;
        gens.push(x.into_iter().map(BigInt::from).collect());
    }
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::from(2);
        gens.push(e);
    }
    let h = hnf(&IntMatrix::from_rows(gens)?)?;
    let coeffs = h.basis();
    let index_log2 = (0..n).filter(|&i| !coeffs[(i, i)].is_one()).count();
    let basis = coeffs.mul(b)?;
    Ok(IntegerLattice::with_volume(basis, base.vol_sq() << (2 * index_log2)))
}

fn check_distance(p: &CraigParams, d: usize) -> Result<()> {
    let need = 8 * p.m();
    if d < need {
        return Err(Error::Distance {
            required: need,
            actual: d,
        });
    }
    Ok(())
}

fn check_norm_bound(p: &CraigParams) -> Result<()> {
    if p.norm_bound().is_none() {
        return Err(Error::Parameter(format!(
            "the norm guarantee needs prime l, got {}",
            p.l()
        )));
    }
    Ok(())
}

/// Lift of a `[n+1, k, >= 8m]` subcode of the even-weight code.
pub fn lift_sublattice(p: &CraigParams, code: &LinearCode) -> Result<LiftResult> {
    check_odd_l(p)?;
    check_norm_bound(p)?;
    check_binary(code)?;
    if code.n() != p.n() + 1 {
        return Err(Error::InvalidArgument(format!(
            "code length {} must be n+1 = {}",
            code.n(),
            p.n() + 1
        )));
    }
    check_even(code)?;
    check_distance(p, code.d())?;
    let lattice = if p.n() < BASIS_AMBIENT_CAP {
        Some(preimage(p, code)?)
    } else {
        None
    };
    Ok(LiftResult {
        lattice,
        params: *p,
        code: Some(*code.spec()),
        density: center_density_lb(p, code.k()),
        min_norm_guarantee: 8 * p.m() as u64,
        stated_k: None,
    })
}

/// Lift of a `[n, k, >= 8m]` code through its parity extension.
pub fn lift_with_length_n_code(p: &CraigParams, code: &LinearCode) -> Result<LiftResult> {
    check_binary(code)?;
    if code.n() != p.n() {
        return Err(Error::InvalidArgument(format!(
            "code length {} must be n = {}",
            code.n(),
            p.n()
        )));
    }
    check_distance(p, code.d())?;
    let ext = extend_parity(code)?;
    let mut res = lift_sublattice(p, &ext)?;
    res.code = Some(*code.spec());
    Ok(res)
}

/// Density of a lift through a code known only by its parameters.
///
/// Length `n` codes are taken through their parity extension; a length
/// `n+1` code must have even distance to sit inside the even-weight code.
pub fn lift_code_spec(p: &CraigParams, spec: &CodeSpec) -> Result<LiftResult> {
    check_odd_l(p)?;
    check_norm_bound(p)?;
    if spec.q != 2 {
        return Err(Error::Field(format!("lifting needs a binary code, got GF({})", spec.q)));
    }
    let n = p.n();
    if spec.n == n + 1 && spec.d % 2 == 1 {
        return Err(Error::Subcode(format!("{spec} has odd distance")));
    }
    if spec.n != n && spec.n != n + 1 {
        return Err(Error::InvalidArgument(format!(
            "code length {} must be n or n+1 for n = {n}",
            spec.n
        )));
    }
    check_distance(p, spec.d)?;
    Ok(LiftResult {
        lattice: None,
        params: *p,
        code: Some(*spec),
        density: center_density_lb(p, spec.k),
        min_norm_guarantee: 8 * p.m() as u64,
        stated_k: None,
    })
}

/// The bare lattice as a [`LiftResult`] with no code.
pub fn bare(p: &CraigParams) -> Result<LiftResult> {
    let lattice = if p.n() < BASIS_AMBIENT_CAP {
        Some(craig_basis(p)?)
    } else {
        None
    };
    Ok(LiftResult {
        lattice,
        params: *p,
        code: None,
        density: center_density_lb(p, 0),
        min_norm_guarantee: 2 * p.m() as u64,
        stated_k: None,
    })
}
