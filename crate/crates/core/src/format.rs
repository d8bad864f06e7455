//! Plain-text matrix files.
//!
//! ```text
//! uwm n=2 w=2 L=12 vars=0
//! z0 z0
//! z0 z6
//! ```
//!
//! Entry tokens are `0`, `z<k>` for `ζ_L^k` with `0 ≤ k < L`, and `z<k>x<e>`
//! for `ζ_L^k · x^e` with a signed exponent `e`. Blank lines and lines starting
//! with `#` are ignored.

use crate::arith::UnitEntry;
use crate::error::{Error, Result};
use crate::matrix::UnitMatrix;

pub fn entry_token(e: UnitEntry) -> String {
    match e {
        UnitEntry::Zero => "0".to_string(),
        UnitEntry::Unit { root, var_exp: 0 } => format!("z{root}"),
        UnitEntry::Unit { root, var_exp } => format!("z{root}x{var_exp}"),
    }
}

pub fn serialize_matrix(w: &UnitMatrix) -> String {
    let mut out = format!(
        "uwm n={} w={} L={} vars={}\n",
        w.n(),
        w.weight(),
        w.order(),
        w.vars()
    );
    out.push_str(&w.to_string());
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_token(tok: &str, line: usize, column: usize, order: u32) -> Result<UnitEntry> {
    if tok == "0" {
        return Ok(UnitEntry::Zero);
    }
    let body = tok
        .strip_prefix('z')
        .ok_or_else(|| syntax(line, column, format!("bad entry token {tok:?}")))?;
    let (root, exp) = match body.split_once('x') {
        Some((r, e)) => (r, Some(e)),
        None => (body, None),
    };
    let root: u32 = root
        .parse()
        .map_err(|_| syntax(line, column, format!("bad root index in {tok:?}")))?;
    if root >= order {
        return Err(syntax(
            line,
            column,
            format!("root index {root} outside 0..{order}"),
        ));
    }
    let var_exp = match exp {
        None => 0,
        Some(e) => e
            .parse::<i32>()
            .map_err(|_| syntax(line, column, format!("bad exponent in {tok:?}")))?,
    };
    Ok(UnitEntry::Unit { root, var_exp })
}

fn header_field<'a>(
    fields: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    line: usize,
) -> Result<(usize, u64)> {
    let (col, field) = fields
        .next()
        .ok_or_else(|| syntax(line, 1, format!("header is missing {key}=")))?;
    let value = field
        .strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .ok_or_else(|| {
            syntax(
                line,
                col,
                format!("expected {key}=<value>, found {field:?}"),
            )
        })?;
    let parsed = value
        .parse()
        .map_err(|_| syntax(line, col + key.len() + 1, format!("bad value for {key}")))?;
    Ok((col, parsed))
}

/// Tokens with their 1-based starting column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
}

/// Parses a matrix file. Malformed text yields [`Error::Syntax`] with a
/// position; well-formed text whose rows or columns have the wrong number of
/// nonzero entries yields [`Error::InvalidMatrix`].
pub fn parse_matrix(text: &str) -> Result<UnitMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| syntax(1, 1, "empty input"))?;
    let mut fields = tokens(header);
    match fields.next() {
        Some((_, "uwm")) => {}
        Some((c, other)) => {
            return Err(syntax(hline, c, format!("expected 'uwm', found {other:?}")))
        }
        None => return Err(syntax(hline, 1, "empty header")),
    }
    let (_, n) = header_field(&mut fields, "n", hline)?;
    let (_, w) = header_field(&mut fields, "w", hline)?;
    let (lcol, order) = header_field(&mut fields, "L", hline)?;
    let (vcol, vars) = header_field(&mut fields, "vars", hline)?;
    if let Some((c, extra)) = fields.next() {
        return Err(syntax(
            hline,
            c,
            format!("unexpected header field {extra:?}"),
        ));
    }
    if n == 0 {
        return Err(syntax(hline, 1, "n must be positive"));
    }
    if order == 0 || order > u32::MAX as u64 {
        return Err(syntax(hline, lcol, "L must be a positive 32-bit integer"));
    }
    if vars > 1 {
        return Err(syntax(hline, vcol, "vars must be 0 or 1"));
    }
    let n = n as usize;
    let order = order as u32;

    let mut rows = Vec::with_capacity(n);
    for (lineno, line) in lines {
        if rows.len() == n {
            return Err(syntax(lineno, 1, format!("more than {n} rows")));
        }
        let row = tokens(line)
            .map(|(c, t)| parse_token(t, lineno, c, order))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(syntax(
                lineno,
                1,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        if vars == 0 {
            if let Some(pos) = row.iter().position(|e| !e.is_ground()) {
                let col = tokens(line).nth(pos).map_or(1, |(c, _)| c);
                return Err(syntax(lineno, col, "x used with vars=0"));
            }
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(syntax(
            text.lines().count().max(1),
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    UnitMatrix::new(w as usize, order, vars as u8, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{block_b2, block_uw65, XValue};

    #[test]
    fn serialize_b2() {
        assert_eq!(
            serialize_matrix(&block_b2()),
            "uwm n=2 w=2 L=12 vars=0\nz0 z0\nz0 z6\n"
        );
    }

    #[test]
    fn round_trip_symbolic() {
        let w = block_uw65(XValue::Formal);
        let text = serialize_matrix(&w);
        assert!(text.contains("x-1"));
        assert_eq!(parse_matrix(&text).unwrap(), w);
    }

    #[test]
    fn count_mismatch_is_invariant_error() {
        let text = "uwm n=2 w=2 L=12 vars=0\nz0 0\nz0 z6\n";
        assert!(matches!(parse_matrix(text), Err(Error::InvalidMatrix(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let text = "uwm n=2 w=2 L=12 vars=0\nz0 q1\nz0 z6\n";
        assert_eq!(
            parse_matrix(text),
            Err(Error::Syntax {
                line: 2,
                column: 4,
                message: "bad entry token \"q1\"".into()
            })
        );
        let text = "uwm n=2 w=2 L=12 vars=0\nz0 z12\nz0 z6\n";
        assert!(matches!(
            parse_matrix(text),
            Err(Error::Syntax {
                line: 2,
                column: 4,
                ..
            })
        ));
        let text = "uwm n=2 w=2 L=12\n";
        assert!(matches!(
            parse_matrix(text),
            Err(Error::Syntax { line: 1, .. })
        ));
        let text = "uwm n=2 w=2 L=12 vars=0\nz0 z0x1\nz0 z6\n";
        assert!(matches!(
            parse_matrix(text),
            Err(Error::Syntax {
                line: 2,
                column: 4,
                ..
            })
        ));
        let text = "uwm n=2 w=2 L=12 vars=0\nz0 z0\n";
        assert!(matches!(parse_matrix(text), Err(Error::Syntax { .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# b2\nuwm n=2 w=2 L=12 vars=0\n\nz0 z0\n# second row\nz0 z6\n";
        assert_eq!(parse_matrix(text).unwrap(), block_b2());
    }
}
