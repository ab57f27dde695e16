//! Line-oriented text formats.
//!
//! ```text
//! # delta-matroid                # matroid           # GF(2) matrix   # rank table
//! n 3                           ground plain 2      gf2 2            ranktable 1
//! feasible 1 -2 -3              basis 1             0 1              : 0
//! feasible -1 2 -3              basis 2             1 0              1: 1
//!                                                                    -1: -1
//! ```
//!
//! `-i` stands for `ī`. Blank lines and `#` comments are ignored.

use std::collections::BTreeMap;
use std::fmt;

use deltamat::ground::{enumerate_admissible, AdmissibleSet};
use deltamat::matroid::Gf2SymMatrix;
use deltamat::{DeltaMatroid, Error, Ground, Matroid, RankTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "parse error: {}", self.message)
        } else {
            write!(f, "parse error: line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
pub enum InputDocument {
    DeltaMatroid(DeltaMatroid),
    Matroid(Matroid),
    Gf2(Gf2SymMatrix),
    RankTable(RankTable),
}

impl InputDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDocument::DeltaMatroid(_) => "delta-matroid",
            InputDocument::Matroid(_) => "matroid",
            InputDocument::Gf2(_) => "gf2-matrix",
            InputDocument::RankTable(_) => "rank-table",
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Content lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap().trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_int<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T, ParseError> {
    tok.parse().map_err(|_| err(line, format!("expected an integer, found `{tok}`")))
}

fn describe(e: Error) -> String {
    match e {
        Error::Inadmissible(i) => format!("inadmissible set (contains both {i} and -{i})"),
        other => other.to_string(),
    }
}

/// Parses a signed set such as `1 -2 3` (commas also separate).
pub fn parse_set(n: usize, text: &str) -> Result<AdmissibleSet, String> {
    let elems = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| format!("expected an integer, found `{t}`")))
        .collect::<Result<Vec<_>, _>>()?;
    AdmissibleSet::from_signed(n, &elems).map_err(describe)
}

pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    let mut it = lines(text);
    let Some((ln, header)) = it.next() else {
        return Err(err(0, "empty document"));
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    match toks.as_slice() {
        ["n", k] => parse_dm(parse_int(ln, k)?, it).map(InputDocument::DeltaMatroid),
        ["ground", kind, k] => {
            let size: usize = parse_int(ln, k)?;
            let ground = match *kind {
                "plain" => Ground::Plain(size),
                "signed" => Ground::Signed(size),
                other => return Err(err(ln, format!("unknown ground kind `{other}`"))),
            };
            parse_matroid(ground, it).map(InputDocument::Matroid)
        }
        ["gf2", k] => parse_gf2(parse_int(ln, k)?, it).map(InputDocument::Gf2),
        ["ranktable", k] => parse_table(parse_int(ln, k)?, it).map(InputDocument::RankTable),
        _ => Err(err(ln, format!("unrecognized header `{header}`"))),
    }
}

fn guard(line: usize, n: usize) -> Result<(), ParseError> {
    if n > deltamat::ground::MAX_GROUND {
        return Err(err(line, format!("ground size {n} exceeds {}", deltamat::ground::MAX_GROUND)));
    }
    Ok(())
}

fn parse_dm<'a>(n: usize, rest: impl Iterator<Item = (usize, &'a str)>) -> Result<DeltaMatroid, ParseError> {
    guard(1, n)?;
    let mut family = Vec::new();
    let mut last = 1;
    for (ln, l) in rest {
        last = ln;
        let body = l
            .strip_prefix("feasible")
            .filter(|b| b.is_empty() || b.starts_with(char::is_whitespace))
            .ok_or_else(|| err(ln, format!("expected `feasible ...`, found `{l}`")))?;
        let s = parse_set(n, body).map_err(|m| err(ln, m))?;
        if s.len() != n {
            return Err(err(ln, format!("feasible set has {} elements, expected {n}", s.len())));
        }
        family.push(s);
    }
    DeltaMatroid::new(n, family).map_err(|e| err(last, describe(e)))
}

fn parse_matroid<'a>(ground: Ground, rest: impl Iterator<Item = (usize, &'a str)>) -> Result<Matroid, ParseError> {
    if ground.size() > 32 {
        return Err(err(1, "ground set too large"));
    }
    let mut bases = Vec::new();
    let mut last = 1;
    for (ln, l) in rest {
        last = ln;
        let body = l
            .strip_prefix("basis")
            .filter(|b| b.is_empty() || b.starts_with(char::is_whitespace))
            .ok_or_else(|| err(ln, format!("expected `basis ...`, found `{l}`")))?;
        let mut mask = 0u64;
        for t in body.split_whitespace() {
            let label: i64 = parse_int(ln, t)?;
            let bit = ground.bit(label).map_err(|e| err(ln, describe(e)))?;
            if mask & 1 << bit != 0 {
                return Err(err(ln, format!("element {label} repeated")));
            }
            mask |= 1 << bit;
        }
        bases.push(mask);
    }
    Matroid::new(ground, bases).map_err(|e| err(last, describe(e)))
}

fn parse_gf2<'a>(n: usize, rest: impl Iterator<Item = (usize, &'a str)>) -> Result<Gf2SymMatrix, ParseError> {
    guard(1, n)?;
    let mut rows = Vec::new();
    let mut last = 1;
    for (ln, l) in rest {
        last = ln;
        let row: Vec<u8> = l
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(err(ln, format!("expected 0 or 1, found `{c}`"))),
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(err(ln, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(err(last, format!("matrix has {} rows, expected {n}", rows.len())));
    }
    Gf2SymMatrix::new(rows).map_err(|e| err(0, describe(e)))
}

fn parse_table<'a>(n: usize, rest: impl Iterator<Item = (usize, &'a str)>) -> Result<RankTable, ParseError> {
    guard(1, n)?;
    if n > deltamat::ground::guard_limit() {
        return Err(err(1, format!("ground size {n} exceeds the guard limit {}", deltamat::ground::guard_limit())));
    }
    let mut values: BTreeMap<AdmissibleSet, i64> = BTreeMap::new();
    let mut last = 1;
    for (ln, l) in rest {
        last = ln;
        let (set, value) = l.rsplit_once(':').ok_or_else(|| err(ln, "expected `<set>: <value>`"))?;
        let s = parse_set(n, set).map_err(|m| err(ln, m))?;
        let v: i64 = parse_int(ln, value.trim())?;
        if values.insert(s, v).is_some() {
            return Err(err(ln, format!("set {{{s}}} listed twice")));
        }
    }
    let all = enumerate_admissible(n).map_err(|e| err(0, describe(e)))?;
    if let Some(missing) = all.iter().find(|s| !values.contains_key(s)) {
        return Err(err(last, format!("no value for set {{{missing}}}")));
    }
    let canonical: Vec<i64> = all.iter().map(|s| values[s]).collect();
    RankTable::from_canonical(n, &canonical).map_err(|e| err(0, describe(e)))
}

pub fn serialize_dm(d: &DeltaMatroid) -> String {
    let mut out = format!("n {}\n", d.ground_size());
    for b in d.feasible() {
        push_line(&mut out, "feasible", &b.to_string());
    }
    out
}

fn push_line(out: &mut String, key: &str, body: &str) {
    out.push_str(key);
    if !body.is_empty() {
        out.push(' ');
        out.push_str(body);
    }
    out.push('\n');
}

pub fn serialize_matroid(m: &Matroid) -> String {
    let mut out = match m.ground() {
        Ground::Plain(k) => format!("ground plain {k}\n"),
        Ground::Signed(n) => format!("ground signed {n}\n"),
        Ground::Window(s) => format!("# window {s}\nground signed {}\n", s.ground_size()),
    };
    for &b in m.bases() {
        let labels: Vec<String> = m.labels(b).iter().map(|l| l.to_string()).collect();
        push_line(&mut out, "basis", &labels.join(" "));
    }
    out
}

pub fn serialize_gf2(a: &Gf2SymMatrix) -> String {
    let n = a.size();
    let mut out = format!("gf2 {n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| a.entry(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn serialize_table(t: &RankTable) -> String {
    let mut out = format!("ranktable {}\n", t.ground_size());
    for (s, v) in t.iter() {
        out.push_str(&format!("{s}: {v}\n"));
    }
    out
}

pub fn serialize(doc: &InputDocument) -> String {
    match doc {
        InputDocument::DeltaMatroid(d) => serialize_dm(d),
        InputDocument::Matroid(m) => serialize_matroid(m),
        InputDocument::Gf2(a) => serialize_gf2(a),
        InputDocument::RankTable(t) => serialize_table(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dm_examples() {
        let d = parse("n 1\nfeasible 1\n").unwrap();
        assert_eq!(d, InputDocument::DeltaMatroid(DeltaMatroid::from_signed(1, &[&[1]]).unwrap()));
        let e = parse("n 1\nfeasible 1 -1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.to_string().contains("inadmissible set"), "{e}");
        let dex = parse("# Dex\nn 3\nfeasible -1 -2 3\nfeasible 1 -2 -3\nfeasible -1 2 -3\n").unwrap();
        assert_eq!(serialize(&dex), "n 3\nfeasible 1 -2 -3\nfeasible -1 2 -3\nfeasible -1 -2 3\n");
    }

    #[test]
    fn empty_sets_round_trip() {
        let text = "n 0\nfeasible\n";
        assert_eq!(serialize(&parse(text).unwrap()), text);
        let m = "ground plain 1\nbasis\n";
        assert_eq!(serialize(&parse(m).unwrap()), m);
    }

    #[test]
    fn other_kinds_round_trip() {
        for text in [
            "ground plain 2\nbasis 1\nbasis 2\n",
            "ground signed 2\nbasis 1 -2\nbasis -1 2\nbasis 1 -1\nbasis 2 -2\n",
            "gf2 2\n0 1\n1 0\n",
            "ranktable 1\n: 0\n1: 1\n-1: -1\n",
        ] {
            let doc = parse(text).unwrap();
            assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
        }
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        assert_eq!(parse("n 2\nfeasible 1\n").unwrap_err().line, 2);
        assert_eq!(parse("gf2 2\n0 1\n0 2\n").unwrap_err().line, 3);
        assert_eq!(parse("ranktable 1\n: 0\n1: 1\n").unwrap_err().line, 3);
        assert_eq!(parse("ground plain 2\nbasis 3\n").unwrap_err().line, 2);
        assert_eq!(parse("hello\n").unwrap_err().line, 1);
        assert!(parse("gf2 2\n0 1\n0 0\n").unwrap_err().to_string().contains("not symmetric"));
    }
}
