use std::collections::BTreeMap;
use std::path::Path;

use super::code::{CodeSpec, CodeStatus};
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/codes.csv");

/// Table of code parameters: best known codes, upper bounds on the distance,
/// and hypothetical codes, keyed by `(q, n, k)`.
#[derive(Clone, Debug, Default)]
pub struct CodeTable {
    entries: BTreeMap<(u32, usize, usize), Vec<CodeSpec>>,
}

impl CodeTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The table shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("builtin code table parses")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Parse CSV with header `q,n,k,d,status`. An empty input is an empty table.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = CodeTable::new();
        if text.trim().is_empty() {
            return Ok(table);
        }
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header = rdr.headers().map_err(|e| parse_err(1, e))?.clone();
        if header.iter().collect::<Vec<_>>() != ["q", "n", "k", "d", "status"] {
            return Err(Error::Parse {
                line: 1,
                msg: "header must be q,n,k,d,status".into(),
            });
        }
        for rec in rdr.records() {
            let rec = rec.map_err(|e| {
                let line = e.position().map_or(0, |p| line_of(text, p));
                parse_err(line, e)
            })?;
            let line = rec.position().map_or(0, |p| line_of(text, p));
            let num = |i: usize| -> Result<usize> {
                rec[i].parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("field {:?} is not a number", &rec[i]),
                })
            };
            let status = CodeStatus::from_token(&rec[4]).ok_or_else(|| Error::Parse {
                line,
                msg: format!("unknown status {:?}", &rec[4]),
            })?;
            let spec = CodeSpec::new(num(0)? as u32, num(1)?, num(2)?, num(3)?, status)
                .map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            table.insert(spec);
        }
        Ok(table)
    }

    pub fn insert(&mut self, spec: CodeSpec) {
        self.entries.entry((spec.q, spec.n, spec.k)).or_default().push(spec);
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CodeSpec> {
        self.entries.values().flatten()
    }

    /// Rows stored under exactly `(q, n, k)`.
    pub fn get(&self, q: u32, n: usize, k: usize) -> &[CodeSpec] {
        self.entries.get(&(q, n, k)).map_or(&[], Vec::as_slice)
    }

    /// Best distance of a known `[n, k]_q` code, derived from table rows by
    /// shortening, taking subcodes and zero padding.
    ///
    /// `[n', k', d']` yields `[n, k, d']` whenever `max(0, n'-n) <= k'-k`.
    pub fn best_known(&self, q: u32, n: usize, k: usize) -> Option<CodeSpec> {
        self.iter()
            .filter(|s| s.q == q && s.status.is_realized() && s.k >= k)
            .filter(|s| s.n.saturating_sub(n) <= s.k - k)
            .filter(|s| s.d <= n)
            .max_by_key(|s| (s.d, std::cmp::Reverse(s.status)))
            .map(|s| CodeSpec {
                q,
                n,
                k,
                d: s.d,
                status: s.status,
            })
    }

    /// Smallest recorded upper bound on the distance of an `[n, k]_q` code.
    ///
    /// A bound at `(n', k')` applies when `max(0, n-n') <= k-k'`, since such
    /// a code would shorten and pad to an `[n', k']` code.
    pub fn upper_bound(&self, q: u32, n: usize, k: usize) -> Option<usize> {
        self.iter()
            .filter(|s| s.q == q && s.status == CodeStatus::Bounded && k >= s.k)
            .filter(|s| n.saturating_sub(s.n) <= k - s.k)
            .map(|s| s.d)
            .min()
    }

    /// Largest dimension of a known length-`n` code with distance at least `d`.
    pub fn max_k(&self, q: u32, n: usize, d: usize) -> Option<usize> {
        self.iter()
            .filter(|s| s.q == q && s.status.is_realized() && s.d >= d)
            .filter_map(|s| {
                let k = s.k.checked_sub(s.n.saturating_sub(n))?;
                (k >= 1).then_some(k)
            })
            .max()
    }
}

// csv positions a record at the blank and comment lines that precede it.
pub(crate) fn line_of(text: &str, pos: &csv::Position) -> usize {
    let start = (pos.byte() as usize).min(text.len());
    let mut line = text[..start].matches('\n').count() + 1;
    for l in text[start..].lines() {
        let t = l.trim();
        if !t.is_empty() && !t.starts_with('#') {
            break;
        }
        line += 1;
    }
    line
}

pub(crate) fn parse_err(line: usize, e: csv::Error) -> Error {
    Error::Parse {
        line,
        msg: e.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let t = CodeTable::parse("q,n,k,d,status\n2,68,8,32,table\n").unwrap();
        let s = t.get(2, 68, 8)[0];
        assert_eq!((s.n, s.k, s.d, s.status), (68, 8, 32, CodeStatus::TableKnown));

        assert!(CodeTable::parse("").unwrap().is_empty());

        let t = CodeTable::parse("q,n,k,d,status\n2,140,69,32,hypothetical\n").unwrap();
        assert_eq!(t.get(2, 140, 69)[0].status, CodeStatus::Hypothetical);
    }

    #[test]
    fn malformed_rows_name_their_line() {
        let bad = "q,n,k,d,status\n2,68,8,32,table\n2,68,x,32,table\n";
        assert!(matches!(CodeTable::parse(bad), Err(Error::Parse { line: 3, .. })));
        let bad = "q,n,k,d,status\n2,68,8,32,table\n\n2,68,8,32,maybe\n";
        assert!(matches!(CodeTable::parse(bad), Err(Error::Parse { line: 4, .. })));
        let bad = "q,n,k,d,status\n# note\n\n2,68,8,32,maybe\n";
        assert!(matches!(CodeTable::parse(bad), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(
            CodeTable::parse("n,k,d\n1,1,1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            CodeTable::parse("q,n,k,d,status\n3,8,4,4,table\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn derived_lookups() {
        let t = CodeTable::parse(
            "q,n,k,d,status\n2,16,5,8,constructed\n2,128,59,32,upper\n2,128,43,32,table\n",
        )
        .unwrap();
        // subcode and padding
        assert_eq!(t.best_known(2, 20, 3).unwrap().d, 8);
        // shortening by two
        assert_eq!(t.best_known(2, 14, 3).unwrap().d, 8);
        assert_eq!(t.best_known(2, 14, 4), None);
        assert_eq!(t.max_k(2, 14, 8), Some(3));
        assert_eq!(t.max_k(2, 16, 8), Some(5));
        assert_eq!(t.max_k(2, 128, 32), Some(43));
        assert_eq!(t.upper_bound(2, 128, 59), Some(32));
        assert_eq!(t.upper_bound(2, 128, 60), Some(32));
        assert_eq!(t.upper_bound(2, 129, 60), Some(32));
        assert_eq!(t.upper_bound(2, 129, 59), None);
        assert_eq!(t.upper_bound(2, 128, 58), None);
    }

    #[test]
    fn builtin_table_loads() {
        let t = CodeTable::builtin();
        assert!(t.len() > 20);
        assert_eq!(t.best_known(2, 68, 8).unwrap().d, 32);
        assert_eq!(t.upper_bound(2, 128, 59), Some(32));
        assert_eq!(t.best_known(4, 169, 24).unwrap().d, 85);
    }
}
