use std::cmp::Ordering;

use rayon::prelude::*;

use super::{lift_code_spec, lift_with_length_n_code, mordell_weil_density, LiftResult};
use crate::codes::{
    concatenate, gv_exists, gv_max_k, repetition, simplex_7_3_4, zero_pad, CodeSpec, CodeStatus,
    CodeTable, GvProfile,
};
use crate::craig::{center_density_lb, choose_params, CraigParams, LogDensity};
use crate::error::{Error, Result};
use crate::exactnum::{is_prime, next_prime};

/// `m` nearest to `n / (2 ln(n+1))`, halves rounded up.
pub fn craig_8x_m(n: usize) -> usize {
    let x = n as f64 / (2.0 * ((n + 1) as f64).ln());
    ((x + 0.5).floor() as usize).max(1)
}

/// Craig lattice `A_(p-1)^(m,p)` lifted through the concatenation of the
/// `[n/7, 1, n/7]` repetition code over GF(8) with the `[7,3,4]` code, padded
/// to length `n = p-1`. The density is exactly 8 times that of the bare
/// lattice.
pub fn improve_craig_8x(p: u64) -> Result<LiftResult> {
    if !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not prime")));
    }
    if p < 1223 {
        return Err(Error::Regime(format!(
            "p={p}: the concatenated code is only guaranteed long enough for p >= 1223"
        )));
    }
    let n = (p - 1) as usize;
    let params = CraigParams::new(n, craig_8x_m(n), p)?;
    let outer = repetition(n / 7, 8)?;
    let code = concatenate(&outer, &simplex_7_3_4())?;
    let code = zero_pad(&code, n - code.n())?;
    lift_with_length_n_code(&params, &code)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    /// A code with the required parameters is known to exist.
    Realized,
    /// Not known, and not excluded by the table.
    Open,
    /// The required distance exceeds a tabulated upper bound.
    Refuted,
}

impl VerdictStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictStatus::Realized => "realized",
            VerdictStatus::Open => "open",
            VerdictStatus::Refuted => "refuted-by-table",
        }
    }
}

/// What a lift through a code of given parameters would achieve.
#[derive(Clone, Debug)]
pub struct ConditionalVerdict {
    pub required: CodeSpec,
    pub achieved_density: LogDensity,
    pub target_density: Option<LogDensity>,
    pub status: VerdictStatus,
}

impl ConditionalVerdict {
    /// True when the achieved density exceeds the target.
    pub fn beats_target(&self) -> Option<bool> {
        self.target_density
            .as_ref()
            .map(|t| self.achieved_density.delta_sq > t.delta_sq)
    }
}

/// Evaluates a lift through a hypothetical `[n or n+1, k, d]` code.
///
/// Realized when `k = 1`, when the GV inequality holds, or when the table
/// has a code at least as good; refuted when the table bounds the distance
/// below `d`; open otherwise.
pub fn conditional_eval(
    p: &CraigParams,
    required: &CodeSpec,
    table: &CodeTable,
    target: Option<LogDensity>,
) -> Result<ConditionalVerdict> {
    if required.q != 2 {
        return Err(Error::Field(format!("needs a binary code, got GF({})", required.q)));
    }
    let (n, k, d) = (required.n, required.k, required.d);
    if n != p.n() && n != p.n() + 1 {
        return Err(Error::InvalidArgument(format!(
            "code length {n} must be n or n+1 for n = {}",
            p.n()
        )));
    }
    if d < 8 * p.m() {
        return Err(Error::Inapplicable(format!(
            "distance {d} is below 8m = {}",
            8 * p.m()
        )));
    }
    let known = table.best_known(2, n, k).is_some_and(|s| s.d >= d);
    let status = if k == 1 || gv_exists(n, k, d) || known {
        VerdictStatus::Realized
    } else if table.upper_bound(2, n, k).is_some_and(|u| u < d) {
        VerdictStatus::Refuted
    } else {
        VerdictStatus::Open
    };
    Ok(ConditionalVerdict {
        required: *required,
        achieved_density: center_density_lb(p, k),
        target_density: target,
        status,
    })
}

/// Lift in dimension `2p-2` through a GV code `[2p-2, k, (p-1)/2]` into
/// `A_(2p-2)^(floor((p-1)/16), l)` with `l` the least prime `>= 2p`; it beats
/// the Mordell-Weil lattice of the same dimension for `1667 <= p <= 2039`.
///
/// `k` is the exact GV maximum; `stated_k` carries `floor(0.3776 (p-1))`.
pub fn mw_beater_search(p: u64) -> Result<LiftResult> {
    if !is_prime(p) || p % 6 != 5 {
        return Err(Error::Domain(format!("need a prime p = 5 mod 6, got {p}")));
    }
    if !(1667..=2039).contains(&p) {
        return Err(Error::Regime(format!("p={p} outside 1667..=2039")));
    }
    let n = (2 * p - 2) as usize;
    let d = ((p - 1) / 2) as usize;
    let params = CraigParams::new(n, ((p - 1) / 16) as usize, next_prime(2 * p))?;
    let k = gv_max_k(n, d)?;
    let code = CodeSpec::binary(n, k, d, CodeStatus::GvExists)?;
    let mut res = lift_code_spec(&params, &code)?;
    res.stated_k = Some((3776 * (p as usize - 1)) / 10000);
    let mw = mordell_weil_density(p)?;
    if res.density.delta_sq <= mw.delta_sq {
        return Err(Error::Regime(format!("no improvement over Mordell-Weil at p={p}")));
    }
    Ok(res)
}

/// Lift in dimension `N = 24t` through a GV code `[24t, k, 6t]` into
/// `A_N^(floor(3t/4), l)` with `l` the least prime `>= N+1`.
///
/// `k` is the exact GV maximum; `stated_k` carries `floor(4.5312 t)`.
pub fn pipeline_24n(big_n: usize) -> Result<LiftResult> {
    if big_n % 24 != 0 {
        return Err(Error::Parameter(format!("{big_n} is not a multiple of 24")));
    }
    if !(4104..=8640).contains(&big_n) {
        return Err(Error::Regime(format!("{big_n} outside 4104..=8640")));
    }
    let t = big_n / 24;
    let m = 3 * t / 4;
    debug_assert!(8 * m <= 6 * t);
    let params = CraigParams::new(big_n, m, next_prime(big_n as u64 + 1))?;
    let k = gv_max_k(big_n, 6 * t)?;
    let code = CodeSpec::binary(big_n, k, 6 * t, CodeStatus::GvExists)?;
    let mut res = lift_code_spec(&params, &code)?;
    res.stated_k = Some(45312 * t / 10000);
    Ok(res)
}

struct Candidate {
    approx: f64,
    res: LiftResult,
}

// Higher density first, then smaller m, then smaller k.
fn rank(a: &Candidate, b: &Candidate) -> Ordering {
    let by_density = if (a.approx - b.approx).abs() > 1e-6 {
        a.approx.total_cmp(&b.approx)
    } else {
        a.res.density.delta_sq.cmp(&b.res.density.delta_sq)
    };
    by_density
        .then_with(|| b.res.params.m().cmp(&a.res.params.m()))
        .then_with(|| b.res.k().cmp(&a.res.k()))
}

/// Best lift or bare lattice in dimension `n` over `1 <= m <= 2 m0`, with
/// `m0` from [`choose_params`] and `l` the least prime `>= n+1`.
///
/// For each `m` with `8m <= n` the code dimension is the larger of the GV
/// maximum and the best tabulated `[n, k, >= 8m]` code.
pub fn sweep_dimension(n: usize, table: &CodeTable) -> Result<LiftResult> {
    if n < 8 {
        return Err(Error::Parameter(format!("sweep needs n >= 8, got {n}")));
    }
    let m0 = choose_params(n)?.m();
    let l = next_prime(n as u64 + 1);
    let profile = GvProfile::new(n)?;
    let best = (1..=2 * m0)
        .into_par_iter()
        .filter_map(|m| CraigParams::new(n, m, l).ok())
        .flat_map_iter(|p| {
            let mut out = vec![];
            out.push(LiftResult {
                lattice: None,
                params: p,
                code: None,
                density: center_density_lb(&p, 0),
                min_norm_guarantee: 2 * p.m() as u64,
                stated_k: None,
            });
            let d = 8 * p.m();
            if d <= n {
                let k = profile.max_k(d).max(table.max_k(2, n, d).unwrap_or(0));
                if k >= 1 {
                    let status = if table.max_k(2, n, d).is_some_and(|t| t >= k) {
                        CodeStatus::TableKnown
                    } else {
                        CodeStatus::GvExists
                    };
                    if let Ok(spec) = CodeSpec::binary(n, k, d, status) {
                        out.extend(lift_code_spec(&p, &spec).ok());
                    }
                }
            }
            out.into_iter().map(|res| Candidate {
                approx: res.density.log2_approx(),
                res,
            })
        })
        .max_by(rank)
        .expect("m = 1 always yields a candidate");
    Ok(best.res)
}
