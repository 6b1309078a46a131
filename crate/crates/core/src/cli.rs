//! Command-line front end. [`run`] maps argv to a report on `out` and an
//! exit status: 0 on success, 2 on validation errors, 3 on capacity errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::codes::{gv_exists, gv_max_k, parse_generator, CodeSpec, CodeStatus, CodeTable};
use crate::craig::{center_density_lb, craig_basis, parse_basis, write_basis, CraigParams};
use crate::error::{Error, Result};
use crate::exactnum::parse_decimal;
use crate::lift::{
    conditional_eval, lift_code_spec, lift_sublattice, lift_with_length_n_code, mordell_weil_density,
    mw_beater_search, pipeline_24n, sweep_dimension, LiftResult,
};
use crate::records::{emit_table_with, RecordTable};
use crate::svp::{shortest_vector, verify_min_norm, Certificate};

/// Environment variable holding the default number of decimals.
pub const PRECISION_ENV: &str = "CRAIGLAT_PRECISION";

/// Code dimensions stated in the literature for the large GV codes.
const STATED_GV_K: [(usize, usize, usize); 4] =
    [(4096, 1024, 772), (4098, 1024, 773), (4104, 1026, 774), (4124, 1031, 778)];

#[derive(Parser, Debug)]
#[command(name = "craiglat", version, about = "Analogous Craig lattices, code lifts and density bounds")]
struct Cli {
    /// Decimals for every log2 value.
    #[arg(long, global = true, env = PRECISION_ENV, default_value_t = 4)]
    precision: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone, Copy)]
struct Lattice {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    l: u64,
}

impl Lattice {
    fn params(&self) -> Result<CraigParams> {
        CraigParams::new(self.n, self.m, self.l)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Write the basis of A_n^(m,l).
    Construct {
        #[command(flatten)]
        lat: Lattice,
        /// Basis file to write; standard output when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Density bound of A_n^(m,l) lifted through a k-dimensional code, or the
    /// Gram determinant of a basis file.
    Density {
        #[arg(long, required_unless_present = "basis")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, requires = "n")]
        l: Option<u64>,
        #[arg(long, default_value_t = 0, conflicts_with = "basis")]
        k: usize,
        #[arg(long, conflicts_with_all = ["n", "m", "l"])]
        basis: Option<PathBuf>,
    },
    /// Lift A_n^(m,l) through a generator file or a code with stated [k, d].
    Lift {
        #[command(flatten)]
        lat: Lattice,
        #[arg(long, conflicts_with_all = ["k", "d"])]
        code: Option<PathBuf>,
        #[arg(long, requires = "d")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        d: Option<usize>,
        /// Basis file for the lifted lattice, when one is built.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact Gilbert-Varshamov code dimension.
    Gv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Also test existence of this dimension.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exact minimum norm of a basis file, or a certificate for a bound.
    Verify {
        #[arg(long)]
        basis: PathBuf,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Recompute a reference table.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
        id: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Best construction in one dimension.
    Sweep {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        codes: Option<PathBuf>,
    },
    /// Lift beating the Mordell-Weil lattice in dimension 2p-2.
    Mwbeat {
        #[arg(long)]
        p: u64,
    },
    /// Lift in dimension 24t.
    Pipeline24 {
        #[arg(long)]
        dim: usize,
    },
    /// What a code with given parameters would achieve.
    Conditional {
        #[command(flatten)]
        lat: Lattice,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// Code length; n+1 when absent.
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        codes: Option<PathBuf>,
        /// Compare against the best record in dimension n.
        #[arg(long)]
        against_records: bool,
    },
    /// Compare a value, or a lift's density, with the best known record.
    Compare {
        #[arg(long)]
        dim: usize,
        #[arg(long, conflicts_with_all = ["m", "l"])]
        value: Option<String>,
        #[arg(long, requires = "l")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        l: Option<u64>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        records: Option<PathBuf>,
    },
}

/// Runs one command line (program name first) and returns the exit status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn code_table(path: &Option<PathBuf>) -> Result<CodeTable> {
    match path {
        Some(p) => CodeTable::parse(&read(p)?),
        None => Ok(CodeTable::builtin()),
    }
}

fn report(res: &LiftResult, digits: usize) -> String {
    let mut s = format!("params {}\n", res.params);
    match res.code {
        Some(c) => s += &format!("code {c}\n"),
        None => s += "code none\n",
    }
    s += &format!("log2_delta {}\n", res.density.render(digits));
    s += &format!("provenance {}\n", res.density.provenance.as_str());
    s += &format!("guarantee min_norm >= {}\n", res.min_norm_guarantee);
    if let Some(k) = res.stated_k {
        let stated = center_density_lb(&res.params, k);
        s += &format!("stated_k {k} log2_delta {}\n", stated.render(digits));
    }
    if let Some(best) = RecordTable::builtin().best(res.params.n()) {
        let c = RecordTable::builtin().compare_with(res.params.n(), &res.density, digits);
        if let Ok(c) = c {
            s += &format!("reference {} ({}) {} by {}\n", best.log2_delta, best.name, c.verdict.as_str(), c.margin);
        }
    }
    s
}

fn execute(cli: &Cli) -> Result<String> {
    let digits = cli.precision;
    match &cli.cmd {
        Cmd::Construct { lat, output } => {
            let basis = craig_basis(&lat.params()?)?;
            let text = write_basis(&basis);
            match output {
                Some(path) => {
                    write(path, &text)?;
                    Ok(format!(
                        "wrote {} ({} rows)\ngram_det {}\n",
                        path.display(),
                        basis.rank(),
                        basis.vol_sq()
                    ))
                }
                None => Ok(text),
            }
        }
        Cmd::Density { basis: Some(path), .. } => {
            let lat = parse_basis(&read(path)?)?;
            Ok(format!("rank {}\nambient {}\ngram_det {}\n", lat.rank(), lat.ambient_dim(), lat.vol_sq()))
        }
        Cmd::Density { n, m, l, k, .. } => {
            let n = n.expect("clap requires n");
            let (m, l) = match (m, l) {
                (Some(m), Some(l)) => (*m, *l),
                _ => {
                    let p = crate::craig::choose_params(n)?;
                    (m.unwrap_or(p.m()), l.unwrap_or(p.l()))
                }
            };
            let p = CraigParams::new(n, m, l)?;
            let d = center_density_lb(&p, *k);
            let mut s = format!("params {p}\ngram_det {}\nk {k}\nlog2_delta {}\n", p.vol_sq(), d.render(digits));
            match p.norm_bound() {
                Some(b) if *k == 0 => s += &format!("guarantee min_norm >= {b}\n"),
                Some(b) => s += &format!("guarantee min_norm >= {} given a [n+1,{k},>={}] code\n", 4 * b, 4 * b),
                None => s += "guarantee none (l composite)\n",
            }
            Ok(s)
        }
        Cmd::Lift { lat, code, k, d, output } => {
            let p = lat.params()?;
            let res = match (code, k, d) {
                (Some(path), _, _) => {
                    let c = parse_generator(&read(path)?)?;
                    if c.n() == p.n() {
                        lift_with_length_n_code(&p, &c)?
                    } else {
                        lift_sublattice(&p, &c)?
                    }
                }
                (None, Some(k), Some(d)) => {
                    let status = if gv_exists(p.n(), *k, *d) { CodeStatus::GvExists } else { CodeStatus::Hypothetical };
                    lift_code_spec(&p, &CodeSpec::binary(p.n(), *k, *d, status)?)?
                }
                _ => return Err(Error::InvalidArgument("lift needs --code or both --k and --d".into())),
            };
            let mut s = report(&res, digits);
            if let (Some(path), Some(l)) = (output, &res.lattice) {
                write(path, &write_basis(l))?;
                s += &format!("wrote {}\ngram_det {}\n", path.display(), l.vol_sq());
            }
            Ok(s)
        }
        Cmd::Gv { n, d, k } => {
            let max = gv_max_k(*n, *d)?;
            let mut s = format!("n {n} d {d}\ngv_max_k {max}\n");
            if let Some(&(_, _, stated)) = STATED_GV_K.iter().find(|(a, b, _)| a == n && b == d) {
                s += &format!("stated_k {stated} ({})\n", if gv_exists(*n, stated, *d) { "exists" } else { "not guaranteed" });
            }
            if let Some(k) = k {
                s += &format!("gv_exists k={k} {}\n", gv_exists(*n, *k, *d));
            }
            Ok(s)
        }
        Cmd::Verify { basis, bound } => {
            let lat = parse_basis(&read(basis)?)?;
            let mut s = format!("rank {}\ngram_det {}\n", lat.rank(), lat.vol_sq());
            match bound {
                Some(b) => match verify_min_norm(&lat, &BigInt::from(*b))? {
                    Certificate::Holds { min_norm } => {
                        s += &format!("certificate holds: min_norm {min_norm} >= {b}\n")
                    }
                    Certificate::Violated { witness, norm } => {
                        let w: Vec<String> = witness.iter().map(ToString::to_string).collect();
                        s += &format!("certificate violated: norm {norm} < {b}\nwitness {}\n", w.join(" "))
                    }
                },
                None => {
                    let v = shortest_vector(&lat)?;
                    let w: Vec<String> = v.witness.iter().map(ToString::to_string).collect();
                    s += &format!("min_norm {}\nwitness {}\n", v.norm, w.join(" "));
                }
            }
            Ok(s)
        }
        Cmd::Table { id, format } => {
            let r = emit_table_with(*id, digits)?;
            Ok(match format {
                Format::Text => r.render_text(),
                Format::Csv => r.render_csv(),
            })
        }
        Cmd::Sweep { dim, codes } => Ok(report(&sweep_dimension(*dim, &code_table(codes)?)?, digits)),
        Cmd::Mwbeat { p } => {
            let res = mw_beater_search(*p)?;
            let mw = mordell_weil_density(*p)?;
            Ok(format!("{}mordell_weil log2_delta {}\n", report(&res, digits), mw.render(digits)))
        }
        Cmd::Pipeline24 { dim } => Ok(report(&pipeline_24n(*dim)?, digits)),
        Cmd::Conditional { lat, k, d, len, codes, against_records } => {
            let p = lat.params()?;
            let spec = CodeSpec::binary(len.unwrap_or(p.n() + 1), *k, *d, CodeStatus::Hypothetical)?;
            let v = conditional_eval(&p, &spec, &code_table(codes)?, None)?;
            let mut s = format!(
                "params {p}\nrequired {}\nlog2_delta {}\nstatus {}\n",
                v.required,
                v.achieved_density.render(digits),
                v.status.as_str()
            );
            if *against_records {
                let c = RecordTable::builtin().compare_with(p.n(), &v.achieved_density, digits)?;
                s += &format!("reference {c}\n");
            }
            Ok(s)
        }
        Cmd::Compare { dim, value, m, l, k, records } => {
            let table = match records {
                Some(p) => RecordTable::parse(&read(p)?)?,
                None => RecordTable::builtin(),
            };
            let c = match (value, m, l) {
                (Some(v), _, _) => table.compare_log2_with(*dim, &parse_decimal(v)?, digits)?,
                (None, Some(m), Some(l)) => {
                    let d = center_density_lb(&CraigParams::new(*dim, *m, *l)?, *k);
                    table.compare_with(*dim, &d, digits)?
                }
                _ => return Err(Error::InvalidArgument("compare needs --value or --m and --l".into())),
            };
            Ok(format!(
                "dim {dim}\nrecord {} ({}, {})\nverdict {}\nmargin {}\n",
                c.record.log2_delta,
                c.record.name,
                c.record.source,
                c.verdict.as_str(),
                c.margin
            ))
        }
    }
}
