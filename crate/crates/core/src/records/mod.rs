//! Known center-density records, comparison against them, and reproduction
//! reports for the shipped reference tables.

mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use report::{emit_table, emit_table_with, Factor8Check, Report, ReportRow, AGREE_TOLERANCE};

use crate::codes::{line_of, parse_err};
use crate::craig::LogDensity;
use crate::error::{Error, Result};
use crate::exactnum::{parse_decimal, render_decimal, render_log2_minus};

const BUILTIN: &str = include_str!("../../data/records.csv");

/// Decimals used to decide a verdict, whatever the display precision.
const VERDICT_DIGITS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecordKind {
    Record,
    StatedClaim,
    Hypothetical,
}

impl RecordKind {
    pub fn token(&self) -> &'static str {
        match self {
            RecordKind::Record => "record",
            RecordKind::StatedClaim => "paper-claim",
            RecordKind::Hypothetical => "hypothetical",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "record" => Some(RecordKind::Record),
            "paper-claim" => Some(RecordKind::StatedClaim),
            "hypothetical" => Some(RecordKind::Hypothetical),
            _ => None,
        }
    }
}

/// One known `log2` center density. The decimal is kept verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordEntry {
    pub dim: usize,
    pub log2_delta: String,
    pub value: BigRational,
    pub name: String,
    pub source: String,
    pub kind: RecordKind,
}

impl RecordEntry {
    pub fn new(dim: usize, log2_delta: &str, name: &str, source: &str, kind: RecordKind) -> Result<Self> {
        if dim < 1 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        Ok(RecordEntry {
            dim,
            log2_delta: log2_delta.trim().to_string(),
            value: parse_decimal(log2_delta)?,
            name: name.to_string(),
            source: source.to_string(),
            kind,
        })
    }
}

/// Records keyed by dimension.
#[derive(Clone, Debug, Default)]
pub struct RecordTable {
    entries: BTreeMap<usize, Vec<RecordEntry>>,
}

impl RecordTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The records shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("builtin records parse")
    }

    pub fn ingest(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Parse CSV with header `dim,log2_delta,name,source,kind`. An empty
    /// input is an empty table.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = RecordTable::new();
        if text.trim().is_empty() {
            return Ok(table);
        }
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header = rdr.headers().map_err(|e| parse_err(1, e))?.clone();
        if header.iter().collect::<Vec<_>>() != ["dim", "log2_delta", "name", "source", "kind"] {
            return Err(Error::Parse {
                line: 1,
                msg: "header must be dim,log2_delta,name,source,kind".into(),
            });
        }
        for rec in rdr.records() {
            let rec = rec.map_err(|e| {
                let line = e.position().map_or(0, |p| line_of(text, p));
                parse_err(line, e)
            })?;
            let line = rec.position().map_or(0, |p| line_of(text, p));
            let at = |msg: String| Error::Parse { line, msg };
            let dim: usize = rec[0]
                .parse()
                .map_err(|_| at(format!("dimension {:?} is not a number", &rec[0])))?;
            let kind = RecordKind::from_token(&rec[4])
                .ok_or_else(|| at(format!("unknown kind {:?}", &rec[4])))?;
            let entry = RecordEntry::new(dim, &rec[1], &rec[2], &rec[3], kind)
                .map_err(|e| at(e.to_string()))?;
            table.insert(entry).map_err(|e| at(e.to_string()))?;
        }
        Ok(table)
    }

    /// Adds an entry; a second entry with the same `(dim, name)` is rejected.
    pub fn insert(&mut self, entry: RecordEntry) -> Result<()> {
        let slot = self.entries.entry(entry.dim).or_default();
        if slot.iter().any(|e| e.name == entry.name) {
            return Err(Error::InvalidArgument(format!(
                "duplicate record ({}, {})",
                entry.dim, entry.name
            )));
        }
        slot.push(entry);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &RecordEntry> {
        self.entries.values().flatten()
    }

    pub fn get(&self, dim: usize) -> &[RecordEntry] {
        self.entries.get(&dim).map_or(&[], Vec::as_slice)
    }

    pub fn find(&self, dim: usize, name: &str) -> Option<&RecordEntry> {
        self.get(dim).iter().find(|e| e.name == name)
    }

    /// Highest entry of kind `record` at `dim`.
    pub fn best(&self, dim: usize) -> Option<&RecordEntry> {
        self.get(dim)
            .iter()
            .filter(|e| e.kind == RecordKind::Record)
            .max_by(|a, b| a.value.cmp(&b.value))
    }

    /// Compares a density against the best record, margin to 4 decimals.
    pub fn compare(&self, dim: usize, candidate: &LogDensity) -> Result<Comparison> {
        self.compare_with(dim, candidate, VERDICT_DIGITS)
    }

    /// As [`compare`](Self::compare) with the margin shown to `digits`
    /// decimals; the verdict is always taken at 4 decimals.
    pub fn compare_with(&self, dim: usize, candidate: &LogDensity, digits: usize) -> Result<Comparison> {
        let best = self.best(dim).ok_or(Error::Lookup(dim))?;
        let at4 = render_log2_minus(&candidate.delta_sq, &best.value, VERDICT_DIGITS);
        Ok(Comparison {
            verdict: Verdict::from_margin(&parse_decimal(&at4)?),
            margin: render_log2_minus(&candidate.delta_sq, &best.value, digits),
            record: best.clone(),
        })
    }

    /// Compares a decimal `log2` value against the best record.
    pub fn compare_log2(&self, dim: usize, candidate: &BigRational) -> Result<Comparison> {
        self.compare_log2_with(dim, candidate, VERDICT_DIGITS)
    }

    pub fn compare_log2_with(&self, dim: usize, candidate: &BigRational, digits: usize) -> Result<Comparison> {
        let best = self.best(dim).ok_or(Error::Lookup(dim))?;
        let diff = candidate - &best.value;
        Ok(Comparison {
            verdict: Verdict::from_margin(&parse_decimal(&render_decimal(&diff, VERDICT_DIGITS))?),
            margin: render_decimal(&diff, digits),
            record: best.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Beats,
    Ties,
    Below,
}

impl Verdict {
    fn from_margin(m: &BigRational) -> Self {
        if m.is_zero() {
            Verdict::Ties
        } else if m.is_positive() {
            Verdict::Beats
        } else {
            Verdict::Below
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Beats => "beats",
            Verdict::Ties => "ties",
            Verdict::Below => "below",
        }
    }
}

/// Outcome of a comparison; `margin` is candidate minus record in `log2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    pub margin: String,
    pub record: RecordEntry,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} ({}) by {}",
            self.verdict.as_str(),
            self.record.log2_delta,
            self.record.name,
            self.margin
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::craig::{center_density_lb, CraigParams};
    use crate::lift::mordell_weil_density;
    use proptest::prelude::*;

    const HEADER: &str = "dim,log2_delta,name,source,kind\n";

    fn dec(s: &str) -> BigRational {
        parse_decimal(s).unwrap()
    }

    #[test]
    fn ingest_rows() {
        let t = RecordTable::parse(&format!(
            "{HEADER}4096,11527,Mordell-Weil,Shioda,record\n86,34.2075,Shimada,Shimada,record\n"
        ))
        .unwrap();
        assert_eq!(t.len(), 2);
        let e = &t.get(4096)[0];
        assert_eq!(e.log2_delta, "11527");
        assert_eq!(e.value, dec("11527"));
        assert_eq!(e.kind, RecordKind::Record);
        assert_eq!(t.get(86)[0].value, dec("34.2075"));
    }

    #[test]
    fn empty_inputs() {
        assert!(RecordTable::parse("").unwrap().is_empty());
        assert!(RecordTable::parse(HEADER).unwrap().is_empty());
    }

    #[test]
    fn bad_rows_report_their_line() {
        let dup = format!("{HEADER}10,1,a,s,record\n\n10,2,a,s,record\n");
        assert!(matches!(RecordTable::parse(&dup), Err(Error::Parse { line: 4, .. })));
        let bad = [
            "10,1,a,s,record\n0,1,a,s,record\n",
            "10,1,a,s,record\n11,x,a,s,record\n",
            "10,1,a,s,record\n11,1e3,a,s,record\n",
            "10,1,a,s,record\n11,1,a,s,best\n",
            "10,1,a,s,record\n11,1,a\n",
        ];
        for body in bad {
            let r = RecordTable::parse(&format!("{HEADER}{body}"));
            assert!(matches!(r, Err(Error::Parse { line: 3, .. })), "{body:?}: {r:?}");
        }
        assert!(matches!(
            RecordTable::parse("dim,value\n1,2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn builtin_records() {
        let t = RecordTable::builtin();
        assert!(t.len() > 60);
        assert_eq!(t.best(52).unwrap().name, "Mordell-Weil");
        assert_eq!(t.best(60).unwrap().log2_delta, "19.04");
        // the claim entry never counts
        assert_eq!(t.best(160).unwrap().name, "Minkowski-Hlawka");
        assert_eq!(t.find(160, "Analogous-Craig").unwrap().kind, RecordKind::StatedClaim);
    }

    #[test]
    fn compare_examples() {
        let t = RecordTable::builtin();
        let c = t.compare_log2(4096, &dec("11529")).unwrap();
        assert_eq!((c.verdict, c.margin.as_str()), (Verdict::Beats, "2.0000"));
        let c = t.compare_log2(96, &dec("47.9003")).unwrap();
        assert_eq!(c.verdict, Verdict::Below);
        assert_eq!(c.record.log2_delta, "52.078");
        assert_eq!(c.margin, "-4.1777");
        assert!(matches!(t.compare_log2(97, &dec("1")), Err(Error::Lookup(97))));
    }

    #[test]
    fn mordell_weil_ties_itself() {
        let mw = mordell_weil_density(53).unwrap();
        let mut t = RecordTable::new();
        t.insert(RecordEntry::new(104, &mw.render(4), "MW", "self", RecordKind::Record).unwrap())
            .unwrap();
        let c = t.compare(104, &mw).unwrap();
        assert_eq!(c.verdict, Verdict::Ties, "{c}");
        // the shipped decimal is 0.0041 above the closed form
        let c = RecordTable::builtin().compare(104, &mw).unwrap();
        assert_eq!((c.verdict, c.margin.as_str()), (Verdict::Below, "-0.0041"));
    }

    #[test]
    fn hypothetical_entries_are_not_records() {
        let mut t = RecordTable::new();
        t.insert(RecordEntry::new(8, "5", "h", "s", RecordKind::Hypothetical).unwrap()).unwrap();
        assert!(matches!(t.compare_log2(8, &dec("1")), Err(Error::Lookup(8))));
        t.insert(RecordEntry::new(8, "-3", "E8", "s", RecordKind::Record).unwrap()).unwrap();
        let c = t.compare_log2(8, &dec("-3")).unwrap();
        assert_eq!((c.verdict, c.record.name.as_str()), (Verdict::Ties, "E8"));
    }

    #[test]
    fn lattice_density_comparison() {
        let mut t = RecordTable::new();
        t.insert(RecordEntry::new(52, "10.4578", "MW", "s", RecordKind::Record).unwrap()).unwrap();
        let lifted = center_density_lb(&CraigParams::new(52, 6, 53).unwrap(), 1);
        let c = t.compare(52, &lifted).unwrap();
        assert_eq!(c.verdict, Verdict::Beats);
        assert_eq!(c.margin, "0.2477");
    }

    proptest! {
        #[test]
        fn verdict_ignores_display_precision(num in -10_000_000i64..10_000_000, den in 1i64..100_000, digits in 4usize..12) {
            let t = RecordTable::builtin();
            let x = BigRational::new(num.into(), den.into()) + dec("52.078");
            let a = t.compare_log2(96, &x).unwrap();
            let b = t.compare_log2_with(96, &x, digits).unwrap();
            prop_assert_eq!(a.verdict, b.verdict);
        }
    }
}
