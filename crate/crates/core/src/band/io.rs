//! Line-oriented text formats.
//!
//! ```text
//! PKB 1                      (APKB 1 for anti-banded matrices)
//! n <n> k <k> mode <exact|float>
//! corner_1n <value>
//! corner_n1 <value>
//! diag <offset> <v1> ... <v_{n-|offset|}>     k lines, offsets ascending
//! ```
//!
//! An `APKB` body is the `PKB` body of the column-reversed image `M = N·R`:
//! `corner_1n` holds `N(1,1)`, `corner_n1` holds `N(n,n)`, and `diag e` lists the
//! anti-diagonal `N(i, n + 1 - i - e)` by ascending row.
//!
//! Dense matrices are written as `DENSE 1`, `n <rows> <cols>`, then one row per line;
//! vectors as `VEC 1`, `n <n>`, then the values. Lines starting with `#` and blank
//! lines are ignored on input. Output always uses single spaces and `\n`.

use std::fmt::{Display, Write as _};

use crate::error::{Error, Result};
use crate::scalar::{Entry, Rational, ScalarMode};

use super::{AntiPeriodicBandMatrix, DenseMatrix, PeriodicBandMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandKind {
    Periodic,
    Anti,
}

impl BandKind {
    fn magic(self) -> &'static str {
        match self {
            BandKind::Periodic => "PKB",
            BandKind::Anti => "APKB",
        }
    }
}

/// A band matrix in whichever entry type its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyBand {
    Exact(PeriodicBandMatrix<Rational>),
    Float(PeriodicBandMatrix<f64>),
}

/// A parsed `PKB`/`APKB` document. For anti-banded files `matrix` is the
/// periodic image `N·R`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandFile {
    pub kind: BandKind,
    pub matrix: AnyBand,
}

impl BandFile {
    pub fn n(&self) -> usize {
        match &self.matrix {
            AnyBand::Exact(m) => m.n(),
            AnyBand::Float(m) => m.n(),
        }
    }

    pub fn to_text(&self) -> String {
        match &self.matrix {
            AnyBand::Exact(m) => write_band(self.kind, m),
            AnyBand::Float(m) => write_band(self.kind, m),
        }
    }
}

/// Significant lines with their 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((idx + 1, trimmed))
        }
    })
}

struct Cursor<'a, I: Iterator<Item = (usize, &'a str)>> {
    lines: I,
    last_line: usize,
}

impl<'a, I: Iterator<Item = (usize, &'a str)>> Cursor<'a, I> {
    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.lines.next() {
            Some((no, line)) => {
                self.last_line = no;
                Ok((no, line.split_whitespace().collect()))
            }
            None => Err(Error::format(self.last_line + 1, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn finish(mut self) -> Result<()> {
        match self.lines.next() {
            Some((no, _)) => Err(Error::format(no, "unexpected trailing content")),
            None => Ok(()),
        }
    }
}

fn cursor(text: &str) -> Cursor<'_, impl Iterator<Item = (usize, &str)>> {
    Cursor { lines: significant_lines(text), last_line: 0 }
}

fn parse_count(line: usize, token: &str) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::format(line, format!("expected a count, found {token:?}")));
    }
    token.parse().map_err(|_| Error::format(line, format!("count out of range: {token:?}")))
}

fn parse_value<T: Entry>(line: usize, token: &str) -> Result<T> {
    T::parse_literal(token).map_err(|e| Error::format(line, e.to_string()))
}

fn expect_keyword(line: usize, tokens: &[&str], keyword: &str, arity: usize) -> Result<()> {
    if tokens.first() != Some(&keyword) || tokens.len() != arity + 1 {
        return Err(Error::format(line, format!("expected `{keyword}` followed by {arity} field(s)")));
    }
    Ok(())
}

/// Parses a `PKB 1` or `APKB 1` document.
pub fn read_band(text: &str) -> Result<BandFile> {
    let mut cur = cursor(text);
    let (line, header) = cur.next("header")?;
    let kind = match header.as_slice() {
        ["PKB", "1"] => BandKind::Periodic,
        ["APKB", "1"] => BandKind::Anti,
        _ => return Err(Error::format(line, "expected header `PKB 1` or `APKB 1`")),
    };
    let (line, shape) = cur.next("shape line")?;
    let (n, k, exact) = match shape.as_slice() {
        ["n", n, "k", k, "mode", mode] => {
            let exact = match *mode {
                "exact" => true,
                "float" => false,
                other => return Err(Error::format(line, format!("unknown mode {other:?}"))),
            };
            (parse_count(line, n)?, parse_count(line, k)?, exact)
        }
        _ => return Err(Error::format(line, "expected `n <n> k <k> mode <exact|float>`")),
    };
    crate::band::check_bandwidth(n, k).map_err(|e| Error::format(line, e.to_string()))?;
    let matrix = if exact {
        AnyBand::Exact(read_band_body(&mut cur, n, k, ScalarMode::ExactLambda)?)
    } else {
        AnyBand::Float(read_band_body(&mut cur, n, k, ScalarMode::float())?)
    };
    cur.finish()?;
    Ok(BandFile { kind, matrix })
}

fn read_band_body<'a, T: Entry, I: Iterator<Item = (usize, &'a str)>>(
    cur: &mut Cursor<'a, I>,
    n: usize,
    k: usize,
    mode: ScalarMode,
) -> Result<PeriodicBandMatrix<T>> {
    let (line, c1) = cur.next("corner_1n")?;
    expect_keyword(line, &c1, "corner_1n", 1)?;
    let corner_1n = parse_value(line, c1[1])?;
    let (line, c2) = cur.next("corner_n1")?;
    expect_keyword(line, &c2, "corner_n1", 1)?;
    let corner_n1 = parse_value(line, c2[1])?;
    let h = (k - 1) / 2;
    let mut diagonals = Vec::with_capacity(k);
    for idx in 0..k {
        let offset = idx as isize - h as isize;
        let (line, tokens) = cur.next("diag line")?;
        if tokens.len() < 2 || tokens[0] != "diag" {
            return Err(Error::format(line, "expected `diag <offset> <values...>`"));
        }
        let found: isize = tokens[1].parse().map_err(|_| Error::format(line, format!("bad offset {:?}", tokens[1])))?;
        if found != offset {
            return Err(Error::format(line, format!("expected diag {offset}, found diag {found}")));
        }
        let expected = n - idx.abs_diff(h);
        if tokens.len() - 2 != expected {
            return Err(Error::format(
                line,
                Error::LengthMismatch { offset, expected, found: tokens.len() - 2 }.to_string(),
            ));
        }
        diagonals.push(tokens[2..].iter().map(|t| parse_value(line, t)).collect::<Result<Vec<T>>>()?);
    }
    PeriodicBandMatrix::new(n, k, diagonals, corner_1n, corner_n1, mode)
}

fn join<T: Display>(values: &[T]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").expect("writing to a String");
    }
    out
}

/// Serializes the periodic storage of `m` under the given header kind.
pub fn write_band<T: Entry>(kind: BandKind, m: &PeriodicBandMatrix<T>) -> String {
    let h = m.half_bandwidth() as isize;
    let mut out = String::new();
    writeln!(out, "{} 1", kind.magic()).unwrap();
    writeln!(out, "n {} k {} mode {}", m.n(), m.k(), m.mode().tag()).unwrap();
    writeln!(out, "corner_1n {}", m.corner_1n()).unwrap();
    writeln!(out, "corner_n1 {}", m.corner_n1()).unwrap();
    for offset in -h..=h {
        writeln!(out, "diag {offset} {}", join(m.diagonal(offset))).unwrap();
    }
    out
}

pub fn write_pkb<T: Entry>(m: &PeriodicBandMatrix<T>) -> String {
    write_band(BandKind::Periodic, m)
}

pub fn write_apkb<T: Entry>(m: &AntiPeriodicBandMatrix<T>) -> String {
    write_band(BandKind::Anti, m.as_periodic())
}

pub fn write_dense<T: Display>(rows: usize, cols: usize, entries: &[T]) -> String {
    let mut out = String::new();
    writeln!(out, "DENSE 1").unwrap();
    writeln!(out, "n {rows} {cols}").unwrap();
    for r in 0..rows {
        writeln!(out, "{}", join(&entries[r * cols..(r + 1) * cols])).unwrap();
    }
    out
}

pub fn write_dense_matrix<T: Entry>(d: &DenseMatrix<T>) -> String {
    write_dense(d.rows(), d.cols(), d.entries())
}

pub fn read_dense<T: Entry>(text: &str) -> Result<DenseMatrix<T>> {
    let mut cur = cursor(text);
    let (line, header) = cur.next("header")?;
    if header != ["DENSE", "1"] {
        return Err(Error::format(line, "expected header `DENSE 1`"));
    }
    let (line, shape) = cur.next("shape line")?;
    let (rows, cols) = match shape.as_slice() {
        ["n", r, c] => (parse_count(line, r)?, parse_count(line, c)?),
        _ => return Err(Error::format(line, "expected `n <rows> <cols>`")),
    };
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line, tokens) = cur.next("matrix row")?;
        if tokens.len() != cols {
            return Err(Error::format(line, format!("expected {cols} values, found {}", tokens.len())));
        }
        for t in tokens {
            entries.push(parse_value(line, t)?);
        }
    }
    cur.finish()?;
    DenseMatrix::new(rows, cols, entries)
}

pub fn write_vec<T: Display>(values: &[T]) -> String {
    format!("VEC 1\nn {}\n{}\n", values.len(), join(values))
}

/// Values may be spread over any number of lines.
pub fn read_vec<T: Entry>(text: &str) -> Result<Vec<T>> {
    let mut lines = significant_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::format(1, "empty input"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["VEC", "1"] {
        return Err(Error::format(line, "expected header `VEC 1`"));
    }
    let (line, shape) = lines.next().ok_or_else(|| Error::format(line + 1, "expected `n <n>`"))?;
    let n = match shape.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", n] => parse_count(line, n)?,
        _ => return Err(Error::format(line, "expected `n <n>`")),
    };
    let mut values = Vec::with_capacity(n);
    let mut last = line;
    for (line, content) in lines {
        last = line;
        for token in content.split_whitespace() {
            if values.len() == n {
                return Err(Error::format(line, format!("more than {n} values")));
            }
            values.push(parse_value(line, token)?);
        }
    }
    if values.len() != n {
        return Err(Error::format(last, format!("expected {n} values, found {}", values.len())));
    }
    Ok(values)
}
