//! Matrix text formats.
//!
//! Integer matrices: a header line `n m` followed by n rows of m signed
//! decimal integers (any whitespace layout).
//!
//! Polynomial matrices: the leading token `poly`, a header line `n m`, a
//! line `s p`, then n*m entry lines in row-major order. Each entry line is a
//! list of bracketed terms `[coefficient, e1, ..., es]`; a line with no
//! terms is the zero polynomial. Lines starting with `#` are comments.

use num_bigint::BigInt;
use std::str::FromStr;

pub enum MatrixFile {
    Int {
        n: usize,
        m: usize,
        entries: Vec<BigInt>,
    },
    Poly {
        n: usize,
        m: usize,
        s: usize,
        p: usize,
        entries: Vec<Vec<(BigInt, Vec<usize>)>>,
    },
}

pub fn parse_matrix(text: &str) -> Result<MatrixFile, String> {
    let first = text.split_whitespace().next().ok_or("empty matrix file")?;
    if first == "poly" {
        parse_poly(text)
    } else {
        parse_int(text)
    }
}

fn parse_int(text: &str) -> Result<MatrixFile, String> {
    let mut tokens = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace);
    let n: usize = next_num(&mut tokens, "row count")?;
    let m: usize = next_num(&mut tokens, "column count")?;
    if n == 0 || m == 0 {
        return Err("matrix dimensions must be positive".into());
    }
    let mut entries = Vec::with_capacity(n * m);
    for i in 0..n * m {
        let tok = tokens.next().ok_or_else(|| format!("expected {} entries, found {i}", n * m))?;
        let v = BigInt::from_str(tok).map_err(|_| format!("bad integer entry '{tok}'"))?;
        entries.push(v);
    }
    if let Some(extra) = tokens.next() {
        return Err(format!("trailing token '{extra}' after {} entries", n * m));
    }
    Ok(MatrixFile::Int { n, m, entries })
}

fn next_num<'a, I, T>(tokens: &mut I, what: &str) -> Result<T, String>
where
    I: Iterator<Item = &'a str>,
    T: FromStr,
{
    let tok = tokens.next().ok_or_else(|| format!("missing {what}"))?;
    tok.parse().map_err(|_| format!("bad {what} '{tok}'"))
}

fn parse_poly(text: &str) -> Result<MatrixFile, String> {
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let head = lines.next().ok_or("empty polynomial file")?;
    if head.trim() != "poly" {
        return Err("polynomial files start with a line containing only 'poly'".into());
    }
    let dims = lines.next().ok_or("missing 'n m' line")?;
    let mut it = dims.split_whitespace();
    let n: usize = next_num(&mut it, "row count")?;
    let m: usize = next_num(&mut it, "column count")?;
    let shape = lines.next().ok_or("missing 's p' line")?;
    let mut it = shape.split_whitespace();
    let s: usize = next_num(&mut it, "variable count")?;
    let p: usize = next_num(&mut it, "degree cap")?;
    if n == 0 || m == 0 || s == 0 {
        return Err("polynomial matrices need n, m, s >= 1".into());
    }
    let mut entries = Vec::with_capacity(n * m);
    for idx in 0..n * m {
        let line = lines.next().ok_or_else(|| format!("expected {} entry lines, found {idx}", n * m))?;
        entries.push(parse_terms(line, s, p)?);
    }
    Ok(MatrixFile::Poly { n, m, s, p, entries })
}

fn parse_terms(line: &str, s: usize, p: usize) -> Result<Vec<(BigInt, Vec<usize>)>, String> {
    let mut terms = Vec::new();
    let mut rest = line;
    while let Some(open) = rest.find('[') {
        let close = rest[open..]
            .find(']')
            .map(|c| open + c)
            .ok_or_else(|| format!("unclosed '[' in entry line '{line}'"))?;
        let inner = &rest[open + 1..close];
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != s + 1 {
            return Err(format!(
                "term '[{inner}]' has {} fields, expected coefficient plus {s} exponents",
                parts.len()
            ));
        }
        let coeff =
            BigInt::from_str(parts[0]).map_err(|_| format!("bad coefficient '{}'", parts[0]))?;
        let mut exps = Vec::with_capacity(s);
        for e in &parts[1..] {
            let v: usize = e.parse().map_err(|_| format!("bad exponent '{e}'"))?;
            if v > p {
                return Err(format!("exponent {v} exceeds the declared degree cap {p}"));
            }
            exps.push(v);
        }
        terms.push((coeff, exps));
        rest = &rest[close + 1..];
    }
    Ok(terms)
}
