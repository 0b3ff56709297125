//! Plain-text algebra and matrix files.
//!
//! ```text
//! # J2
//! field rational
//! dim 3
//! names 1 x y
//! c 1 1 1 1
//! c 2 3 1 1
//! ```
//!
//! `c i j k v` sets the coefficient of `e_k` in `e_i e_j` (1-based); entries
//! not listed are zero. Matrix files hold one row per line, entries separated
//! by spaces or commas, using the same scalar syntax.

use std::fmt::Write as _;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_algebra_file(text: &str) -> Result<Algebra> {
    let mut field: Option<Field> = None;
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut entries: Vec<(usize, [usize; 3], String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let (key, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match key {
            "field" => {
                if field.is_some() {
                    return Err(parse_err(line, "field given twice"));
                }
                field = Some(rest.parse::<Field>().map_err(|e| match e {
                    Error::Char2Field => Error::Char2Field,
                    other => parse_err(line, other.to_string()),
                })?);
            }
            "dim" => {
                if dim.is_some() {
                    return Err(parse_err(line, "dim given twice"));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad dimension `{rest}`")))?;
                if n == 0 {
                    return Err(parse_err(line, "dimension must be positive"));
                }
                dim = Some(n);
            }
            "names" => {
                names = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            "c" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 4 {
                    return Err(parse_err(line, "expected `c i j k value`"));
                }
                let mut ijk = [0usize; 3];
                for (slot, p) in ijk.iter_mut().zip(&parts[..3]) {
                    *slot = p
                        .parse()
                        .map_err(|_| parse_err(line, format!("bad index `{p}`")))?;
                }
                entries.push((line, ijk, parts[3].to_string()));
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let last = text.lines().count().max(1);
    let field = field.ok_or_else(|| parse_err(last, "missing `field` line"))?;
    let n = dim.ok_or_else(|| parse_err(last, "missing `dim` line"))?;
    let mut tensor = vec![field.zero(); n * n * n];
    let mut seen = vec![false; n * n * n];
    for (line, [i, j, k], value) in entries {
        if [i, j, k].iter().any(|&x| x == 0 || x > n) {
            return Err(parse_err(line, format!("index out of range 1..={n}")));
        }
        let pos = ((i - 1) * n + (j - 1)) * n + (k - 1);
        if seen[pos] {
            return Err(Error::DuplicateEntry { line, i, j, k });
        }
        seen[pos] = true;
        tensor[pos] = field
            .parse_scalar(&value)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }
    let a = Algebra::new(field, n, tensor)?;
    match names {
        Some(names) if names.len() != n => Err(parse_err(
            last,
            format!("{} names for dimension {n}", names.len()),
        )),
        Some(names) => a.with_names(&names),
        None => Ok(a),
    }
}

/// Serializes nonzero entries in index order.
pub fn write_algebra_file(a: &Algebra) -> String {
    let n = a.dim();
    let mut out = format!("field {}\ndim {n}\n", a.field());
    if let Some(names) = a.names() {
        let _ = writeln!(out, "names {}", names.join(" "));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = a.constant(i, j, k);
                if !c.is_zero() {
                    let _ = writeln!(out, "c {} {} {} {c}", i + 1, j + 1, k + 1);
                }
            }
        }
    }
    out
}

pub fn parse_matrix_file(text: &str, field: Field) -> Result<Matrix> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let row = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                field
                    .parse_scalar(s)
                    .map_err(|e| parse_err(idx + 1, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first().map(Vec::len) {
            if row.len() != first {
                return Err(parse_err(idx + 1, format!("expected {first} entries")));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(1, "empty matrix"));
    }
    Matrix::from_rows(field, rows)
}

pub fn write_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Nonzero products `e_i e_j` with `i <= j` (all pairs when
/// non-commutative), separated by `; `.
pub fn table_summary(a: &Algebra) -> String {
    let n = a.dim();
    let comm = a.is_commutative();
    let mut parts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if comm && j < i {
                continue;
            }
            let p = a.basis_product(i, j);
            if !p.is_zero() {
                parts.push(format!("{}{} = {p}", a.basis_name(i), a.basis_name(j)));
            }
        }
    }
    if parts.is_empty() {
        "zero multiplication".into()
    } else {
        parts.join("; ")
    }
}
