use std::fmt;

use rayon::prelude::*;

use super::gf::Gf;
use crate::error::{Error, Result};

/// Largest number of codewords enumerated for an exact minimum distance.
pub const ENUMERATION_CAP: u64 = 1 << 26;

/// How much is known about a code with given parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeStatus {
    /// A generator matrix is in hand.
    Constructed,
    /// Listed in a table of best known codes.
    TableKnown,
    /// Guaranteed by the Gilbert-Varshamov inequality.
    GvExists,
    /// Assumed, not known to exist.
    Hypothetical,
    /// Table row giving an upper bound on the achievable distance.
    Bounded,
}

impl CodeStatus {
    pub fn token(&self) -> &'static str {
        match self {
            CodeStatus::Constructed => "constructed",
            CodeStatus::TableKnown => "table",
            CodeStatus::GvExists => "gv",
            CodeStatus::Hypothetical => "hypothetical",
            CodeStatus::Bounded => "upper",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        Some(match s.trim() {
            "constructed" => CodeStatus::Constructed,
            "table" | "table-known" => CodeStatus::TableKnown,
            "gv" | "gv-exists" => CodeStatus::GvExists,
            "hypothetical" => CodeStatus::Hypothetical,
            "upper" => CodeStatus::Bounded,
            _ => return None,
        })
    }

    /// True for codes known to exist.
    pub fn is_realized(&self) -> bool {
        matches!(
            self,
            CodeStatus::Constructed | CodeStatus::TableKnown | CodeStatus::GvExists
        )
    }
}

/// Parameters `[n, k, d]_q` of a linear code, with what is known about it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub status: CodeStatus,
}

impl CodeSpec {
    pub fn new(q: u32, n: usize, k: usize, d: usize, status: CodeStatus) -> Result<Self> {
        Gf::new(q)?;
        if k < 1 || k > n {
            return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got [{n},{k},{d}]")));
        }
        if d < 1 || d > n {
            return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got [{n},{k},{d}]")));
        }
        Ok(CodeSpec { q, n, k, d, status })
    }

    pub fn binary(n: usize, k: usize, d: usize, status: CodeStatus) -> Result<Self> {
        Self::new(2, n, k, d, status)
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)?;
        if self.q != 2 {
            write!(f, "_{}", self.q)?;
        }
        Ok(())
    }
}

/// Linear code with an explicit generator matrix over `GF(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    spec: CodeSpec,
    field: Gf,
    generator: Vec<Vec<u8>>,
    exact: bool,
}

impl LinearCode {
    /// Builds the code and enumerates its exact minimum distance.
    pub fn new(q: u32, generator: Vec<Vec<u8>>) -> Result<Self> {
        let field = Gf::new(q)?;
        check_generator(&field, &generator)?;
        let d = min_distance_of(&field, &generator)?;
        let spec = CodeSpec::new(q, generator[0].len(), generator.len(), d, CodeStatus::Constructed)?;
        Ok(LinearCode {
            spec,
            field,
            generator,
            exact: true,
        })
    }

    /// Builds the code with a proven lower bound `d` on its distance.
    ///
    /// The bound is checked by enumeration whenever that fits the cap.
    pub fn with_distance_bound(q: u32, generator: Vec<Vec<u8>>, d: usize) -> Result<Self> {
        let field = Gf::new(q)?;
        check_generator(&field, &generator)?;
        let k = generator.len() as u64;
        if codeword_count(&field, k).is_some_and(|c| c <= ENUMERATION_CAP) {
            let code = Self::new(q, generator)?;
            if code.d() < d {
                return Err(Error::Distance {
                    required: d,
                    actual: code.d(),
                });
            }
            return Ok(code);
        }
        let spec = CodeSpec::new(q, generator[0].len(), generator.len(), d, CodeStatus::Constructed)?;
        Ok(LinearCode {
            spec,
            field,
            generator,
            exact: false,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn field(&self) -> Gf {
        self.field
    }

    pub fn generator(&self) -> &[Vec<u8>] {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn k(&self) -> usize {
        self.spec.k
    }

    /// Minimum distance: exact when [`Self::distance_is_exact`], else a lower bound.
    pub fn d(&self) -> usize {
        self.spec.d
    }

    pub fn distance_is_exact(&self) -> bool {
        self.exact
    }

    pub fn is_binary(&self) -> bool {
        self.field.q() == 2
    }

    /// Exact minimum distance by enumerating all `q^k` codewords.
    pub fn min_distance(&self) -> Result<usize> {
        min_distance_of(&self.field, &self.generator)
    }

    /// Every codeword, in no particular order. Subject to the enumeration cap.
    pub fn codewords(&self) -> Result<Vec<Vec<u8>>> {
        let count = codeword_count(&self.field, self.k() as u64)
            .filter(|&c| c <= ENUMERATION_CAP)
            .ok_or_else(|| Error::capacity("codewords", u128::MAX, ENUMERATION_CAP))?;
        let q = self.field.q() as u8;
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0u8; self.k()];
        loop {
            out.push(self.encode(&digits));
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Ok(out);
                }
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// `msg * G`.
    pub fn encode(&self, msg: &[u8]) -> Vec<u8> {
        let mut w = vec![0u8; self.n()];
        for (c, row) in msg.iter().zip(&self.generator) {
            if *c == 0 {
                continue;
            }
            for (x, &g) in w.iter_mut().zip(row) {
                *x ^= self.field.mul(*c, g);
            }
        }
        w
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

fn check_generator(field: &Gf, g: &[Vec<u8>]) -> Result<()> {
    let n = g.first().map_or(0, Vec::len);
    if g.is_empty() || n == 0 {
        return Err(Error::InvalidArgument("empty generator matrix".into()));
    }
    if g.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("ragged generator matrix".into()));
    }
    if g.iter().flatten().any(|&x| !field.contains(x)) {
        return Err(Error::Field(format!("entry outside GF({})", field.q())));
    }
    let r = rank(field, g);
    if r != g.len() {
        return Err(Error::Rank(format!("generator has rank {r}, expected {}", g.len())));
    }
    Ok(())
}

fn codeword_count(field: &Gf, k: u64) -> Option<u64> {
    let bits = k.checked_mul(field.degree() as u64)?;
    (bits < 64).then(|| 1u64 << bits)
}

/// Reduced row echelon form over `GF(q)`; returns the pivot columns.
pub(crate) fn row_reduce(field: &Gf, rows: &mut Vec<Vec<u8>>) -> Vec<usize> {
    let n = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(p, r);
        let inv = field.inv(rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let (src, dst) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, &s) in dst.iter_mut().zip(src.iter()) {
                    *d ^= field.mul(f, s);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(field: &Gf, rows: &[Vec<u8>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(field, &mut m).len()
}

fn min_distance_of(field: &Gf, g: &[Vec<u8>]) -> Result<usize> {
    let k = g.len() as u64;
    match codeword_count(field, k) {
        Some(c) if c <= ENUMERATION_CAP => {}
        _ => {
            let actual = 1u128
                .checked_shl((k * field.degree() as u64) as u32)
                .unwrap_or(u128::MAX);
            return Err(Error::capacity("codewords", actual, ENUMERATION_CAP));
        }
    }
    Ok(if field.q() == 2 {
        binary_min_weight(g)
    } else {
        qary_min_weight(field, g)
    })
}

fn pack(row: &[u8]) -> Vec<u64> {
    let mut w = vec![0u64; row.len().div_ceil(64)];
    for (i, &b) in row.iter().enumerate() {
        if b == 1 {
            w[i / 64] |= 1 << (i % 64);
        }
    }
    w
}

/// Gray-code walk over all nonzero codewords, split over the top rows.
fn binary_min_weight(g: &[Vec<u8>]) -> usize {
    let rows: Vec<Vec<u64>> = g.iter().map(|r| pack(r)).collect();
    let k = rows.len();
    let top = if k > 18 { 6.min(k) } else { 0 };
    let low = k - top;
    let words = rows[0].len();
    (0u64..1 << top)
        .into_par_iter()
        .map(|prefix| {
            let mut cw = vec![0u64; words];
            for t in 0..top {
                if prefix >> t & 1 == 1 {
                    xor_into(&mut cw, &rows[low + t]);
                }
            }
            let weight = |cw: &[u64]| cw.iter().map(|x| x.count_ones() as usize).sum::<usize>();
            let mut best = if prefix == 0 { usize::MAX } else { weight(&cw) };
            for i in 1u64..1 << low {
                xor_into(&mut cw, &rows[i.trailing_zeros() as usize]);
                best = best.min(weight(&cw));
            }
            best
        })
        .min()
        .unwrap_or(usize::MAX)
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn qary_min_weight(field: &Gf, g: &[Vec<u8>]) -> usize {
    let q = field.q() as u8;
    let n = g[0].len();
    // multiples[i][c] = c * row_i
    let multiples: Vec<Vec<Vec<u8>>> = g
        .iter()
        .map(|row| (0..q).map(|c| row.iter().map(|&x| field.mul(c, x)).collect()).collect())
        .collect();
    let mut digits = vec![0u8; g.len()];
    let mut cw = vec![0u8; n];
    let mut best = usize::MAX;
    loop {
        let mut i = 0;
        loop {
            if i == digits.len() {
                return best;
            }
            let old = digits[i];
            let new = (old + 1) % q;
            for (x, (a, b)) in cw.iter_mut().zip(multiples[i][old as usize].iter().zip(&multiples[i][new as usize])) {
                *x ^= a ^ b;
            }
            digits[i] = new;
            if new != 0 {
                break;
            }
            i += 1;
        }
        best = best.min(cw.iter().filter(|&&x| x != 0).count());
    }
}

/// `[n, 1, n]_q` with the all-ones generator.
pub fn repetition(n: usize, q: u32) -> Result<LinearCode> {
    if n == 0 {
        return Err(Error::InvalidArgument("length must be positive".into()));
    }
    LinearCode::new(q, vec![vec![1; n]])
}

/// The `[7,3,4]` simplex code (dual of the Hamming code).
pub fn simplex_7_3_4() -> LinearCode {
    LinearCode::new(
        2,
        vec![
            vec![1, 0, 0, 1, 1, 0, 1],
            vec![0, 1, 0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 1],
        ],
    )
    .expect("valid generator")
}

/// The `[8,4,4]` extended Hamming code.
pub fn extended_hamming_8_4_4() -> LinearCode {
    LinearCode::new(
        2,
        vec![
            vec![1, 0, 0, 0, 0, 1, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 0, 1],
            vec![0, 0, 0, 1, 1, 1, 1, 0],
        ],
    )
    .expect("valid generator")
}

/// The `[3,2,2]` single parity-check code.
pub fn parity_3_2_2() -> LinearCode {
    LinearCode::new(2, vec![vec![1, 0, 1], vec![0, 1, 1]]).expect("valid generator")
}

/// First-order Reed-Muller code `[2^r, r+1, 2^(r-1)]`.
pub fn reed_muller_1(r: u32) -> Result<LinearCode> {
    if !(1..=16).contains(&r) {
        return Err(Error::InvalidArgument(format!("Reed-Muller order r={r} out of range")));
    }
    let n = 1usize << r;
    let mut g = vec![vec![1u8; n]];
    for b in 0..r {
        g.push((0..n).map(|x| (x >> b & 1) as u8).collect());
    }
    LinearCode::new(2, g)
}

/// Appends an overall parity column to a binary code.
pub fn extend_parity(c: &LinearCode) -> Result<LinearCode> {
    if !c.is_binary() {
        return Err(Error::Field(format!(
            "parity extension needs a binary code, got GF({})",
            c.field.q()
        )));
    }
    let g: Vec<Vec<u8>> = c
        .generator
        .iter()
        .map(|r| {
            let mut r = r.clone();
            let p = r.iter().fold(0, |a, &b| a ^ b);
            r.push(p);
            r
        })
        .collect();
    let d = c.d() + c.d() % 2;
    LinearCode::with_distance_bound(2, g, d)
}

/// Appends `extra` zero coordinates.
pub fn zero_pad(c: &LinearCode, extra: usize) -> Result<LinearCode> {
    let g: Vec<Vec<u8>> = c
        .generator
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(r.len() + extra, 0);
            r
        })
        .collect();
    if c.exact {
        LinearCode::new(c.field.q(), g)
    } else {
        LinearCode::with_distance_bound(c.field.q(), g, c.d())
    }
}

/// Shortens at the given coordinates: keeps the codewords vanishing there and
/// deletes those coordinates.
pub fn shorten(c: &LinearCode, positions: &[usize]) -> Result<LinearCode> {
    let n = c.n();
    if positions.iter().any(|&p| p >= n) {
        return Err(Error::InvalidArgument("shortening position out of range".into()));
    }
    let mut pos = positions.to_vec();
    pos.sort_unstable();
    pos.dedup();
    // reorder so the shortened coordinates lead, then take the rows whose
    // pivots lie past them
    let order: Vec<usize> = pos.iter().copied().chain((0..n).filter(|i| !pos.contains(i))).collect();
    let mut rows: Vec<Vec<u8>> = c
        .generator
        .iter()
        .map(|r| order.iter().map(|&i| r[i]).collect())
        .collect();
    let pivots = row_reduce(&c.field, &mut rows);
    let kept: Vec<Vec<u8>> = rows
        .into_iter()
        .zip(pivots)
        .filter(|&(_, p)| p >= pos.len())
        .map(|(r, _)| r[pos.len()..].to_vec())
        .collect();
    if kept.is_empty() {
        return Err(Error::InvalidArgument("shortened code is trivial".into()));
    }
    if c.exact {
        LinearCode::new(c.field.q(), kept)
    } else {
        LinearCode::with_distance_bound(c.field.q(), kept, c.d())
    }
}

/// Parameters of the concatenation of an outer code over `GF(2^b)` with a
/// binary inner `[n_i, b, d_i]` code.
pub fn concatenate_spec(outer: &CodeSpec, inner: &CodeSpec) -> Result<CodeSpec> {
    let b = Gf::new(outer.q)?.degree() as usize;
    if inner.q != 2 {
        return Err(Error::Composition(format!("inner code must be binary, got q={}", inner.q)));
    }
    if inner.k != b {
        return Err(Error::Composition(format!(
            "inner dimension {} must equal {b} for an outer code over GF({})",
            inner.k, outer.q
        )));
    }
    let status = outer.status.max(inner.status);
    CodeSpec::binary(outer.n * inner.n, outer.k * b, outer.d * inner.d, status)
}

/// Concatenated generator: each outer row times each power `x^j` of the field
/// generator, every symbol replaced by its inner encoding.
pub fn concatenate(outer: &LinearCode, inner: &LinearCode) -> Result<LinearCode> {
    let spec = concatenate_spec(outer.spec(), inner.spec())?;
    let field = outer.field;
    let b = field.degree() as usize;
    let encode_symbol = |s: u8| -> Vec<u8> {
        let mut w = vec![0u8; inner.n()];
        for t in 0..b {
            if s >> t & 1 == 1 {
                for (x, &y) in w.iter_mut().zip(&inner.generator[t]) {
                    *x ^= y;
                }
            }
        }
        w
    };
    let mut g = Vec::with_capacity(spec.k);
    for row in &outer.generator {
        for j in 0..b {
            let alpha = 1u8 << j;
            g.push(row.iter().flat_map(|&s| encode_symbol(field.mul(alpha, s))).collect());
        }
    }
    LinearCode::with_distance_bound(2, g, spec.d)
}

/// Parse the generator format: `"q n k"` then `k` rows of `n` symbols.
pub fn parse_generator(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };
    let (hl, header) = lines.next().ok_or_else(|| bad(1, "missing \"q n k\" header"))?;
    let h: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad(hl, "non-numeric header"))?;
    let [q, n, k] = h[..] else {
        return Err(bad(hl, "header must be \"q n k\""));
    };
    let mut rows = Vec::with_capacity(k);
    for (ln, line) in lines {
        let row: Vec<u8> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(ln, "non-numeric symbol"))?;
        if row.len() != n {
            return Err(bad(ln, &format!("expected {n} symbols, found {}", row.len())));
        }
        if row.iter().any(|&s| s as usize >= q) {
            return Err(bad(ln, &format!("symbol outside 0..{q}")));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(bad(text.lines().count().max(1), &format!("expected {k} rows, found {}", rows.len())));
    }
    LinearCode::new(q as u32, rows)
}

pub fn write_generator(c: &LinearCode) -> String {
    let mut out = format!("{} {} {}\n", c.field.q(), c.n(), c.k());
    for r in &c.generator {
        let s: Vec<String> = r.iter().map(ToString::to_string).collect();
        out.push_str(&s.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn weight(w: &[u8]) -> usize {
        w.iter().filter(|&&x| x != 0).count()
    }

    fn brute_min_distance(c: &LinearCode) -> usize {
        c.codewords().unwrap().iter().map(|w| weight(w)).filter(|&w| w > 0).min().unwrap()
    }

    #[test]
    fn canned_codes() {
        assert_eq!(simplex_7_3_4().d(), 4);
        assert_eq!(extended_hamming_8_4_4().d(), 4);
        assert_eq!(parity_3_2_2().d(), 2);
        assert_eq!(repetition(5, 2).unwrap().d(), 5);
        let rm = reed_muller_1(4).unwrap();
        assert_eq!((rm.n(), rm.k(), rm.d()), (16, 5, 8));
    }

    #[test]
    fn repetition_examples() {
        assert_eq!(repetition(52, 2).unwrap().spec().to_string(), "[52,1,52]");
        assert_eq!(repetition(1, 2).unwrap().spec().to_string(), "[1,1,1]");
        assert_eq!(repetition(4, 8).unwrap().spec().to_string(), "[4,1,4]_8");
    }

    #[test]
    fn extend_parity_examples() {
        let e = extend_parity(&simplex_7_3_4()).unwrap();
        assert_eq!(e.spec().to_string(), "[8,3,4]");
        let e = extend_parity(&repetition(52, 2).unwrap()).unwrap();
        assert_eq!(e.spec().to_string(), "[53,1,52]");
        let e = extend_parity(&repetition(1, 2).unwrap()).unwrap();
        assert_eq!(e.spec().to_string(), "[2,1,2]");
        assert!(matches!(extend_parity(&repetition(3, 4).unwrap()), Err(Error::Field(_))));
    }

    #[test]
    fn concatenation_examples() {
        let s = concatenate_spec(
            &CodeSpec::new(4, 169, 24, 96, CodeStatus::TableKnown).unwrap(),
            parity_3_2_2().spec(),
        )
        .unwrap();
        assert_eq!((s.n, s.k, s.d), (507, 48, 192));

        let c = concatenate(&repetition(4, 8).unwrap(), &simplex_7_3_4()).unwrap();
        assert_eq!(c.spec().to_string(), "[28,3,16]");
        assert!(c.distance_is_exact());

        let outer = CodeSpec::binary(10, 4, 3, CodeStatus::Constructed).unwrap();
        let id = repetition(1, 2).unwrap();
        assert_eq!(concatenate_spec(&outer, id.spec()).unwrap().to_string(), "[10,4,3]");

        assert!(matches!(
            concatenate_spec(&CodeSpec::new(8, 4, 1, 4, CodeStatus::Constructed).unwrap(), parity_3_2_2().spec()),
            Err(Error::Composition(_))
        ));
    }

    #[test]
    fn concatenated_distance_meets_product() {
        let f4 = vec![vec![1, 0, 1, 1, 2], vec![0, 1, 1, 2, 1]];
        let outer4 = LinearCode::new(4, f4).unwrap();
        let c = concatenate(&outer4, &parity_3_2_2()).unwrap();
        assert!(c.d() >= outer4.d() * 2);
        assert_eq!(c.d(), brute_min_distance(&c));

        let outer8 = LinearCode::new(8, vec![vec![1, 1, 1, 1, 1, 1], vec![0, 1, 2, 3, 4, 5]]).unwrap();
        let c = concatenate(&outer8, &simplex_7_3_4()).unwrap();
        assert_eq!((c.n(), c.k()), (42, 6));
        assert!(c.d() >= outer8.d() * 4);
    }

    #[test]
    fn shortened_reed_muller() {
        let c = shorten(&reed_muller_1(4).unwrap(), &[0, 1]).unwrap();
        assert_eq!(c.spec().to_string(), "[14,3,8]");
    }

    #[test]
    fn generator_file_roundtrip() {
        let c = simplex_7_3_4();
        let text = write_generator(&c);
        assert!(text.starts_with("2 7 3\n"));
        assert_eq!(parse_generator(&text).unwrap(), c);
        assert!(matches!(parse_generator("2 3 1\n1 2 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_generator("2 3 2\n1 1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_generator("2 3 2\n1 1 0\n1 1 0\n"), Err(Error::Rank(_))));
    }

    #[test]
    fn capacity_enforced() {
        let g: Vec<Vec<u8>> = (0..27).map(|i| (0..30).map(|j| (i == j) as u8).collect()).collect();
        assert!(matches!(LinearCode::new(2, g), Err(Error::Capacity { .. })));
        let g: Vec<Vec<u8>> = (0..9).map(|i| (0..12).map(|j| (i == j) as u8).collect()).collect();
        assert!(matches!(LinearCode::new(8, g), Err(Error::Capacity { .. })));
    }

    #[test]
    fn split_enumeration_matches_plain() {
        // k = 20 takes the parallel prefix split
        let mut g: Vec<Vec<u8>> = reed_muller_1(5).unwrap().generator().to_vec();
        for i in 0..14 {
            let mut r = vec![0u8; 32];
            r[i] = 1;
            r[i + 7] = 1;
            r[i + 13] = 1;
            g.push(r);
        }
        row_reduce(&Gf::binary(), &mut g);
        let code = LinearCode::new(2, g).unwrap();
        assert!(code.k() > 18);
        assert_eq!(code.d(), brute_min_distance(&code));
    }

    fn binary_generator() -> impl Strategy<Value = Vec<Vec<u8>>> {
        (1usize..5, 4usize..12).prop_flat_map(|(k, n)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, n), k)
        })
    }

    proptest! {
        #[test]
        fn parity_extension_is_even(g in binary_generator()) {
            prop_assume!(rank(&Gf::binary(), &g) == g.len());
            let c = LinearCode::new(2, g).unwrap();
            let e = extend_parity(&c).unwrap();
            for w in e.codewords().unwrap() {
                prop_assert_eq!(weight(&w) % 2, 0);
            }
            prop_assert_eq!(e.d(), c.d() + c.d() % 2);
        }

        #[test]
        fn enumeration_matches_brute_force(g in binary_generator()) {
            prop_assume!(rank(&Gf::binary(), &g) == g.len());
            let c = LinearCode::new(2, g).unwrap();
            prop_assert_eq!(c.d(), brute_min_distance(&c));
        }

        #[test]
        fn qary_enumeration_matches_brute_force(
            q in prop::sample::select(vec![4u32, 8]),
            g in proptest::collection::vec(proptest::collection::vec(0u8..8, 6), 1..3),
        ) {
            let g: Vec<Vec<u8>> = g.into_iter().map(|r| r.into_iter().map(|x| x % q as u8).collect()).collect();
            prop_assume!(rank(&Gf::new(q).unwrap(), &g) == g.len());
            let c = LinearCode::new(q, g).unwrap();
            prop_assert_eq!(c.d(), brute_min_distance(&c));
        }
    }
}
