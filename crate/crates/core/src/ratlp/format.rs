//! Text format for linear programs:
//!
//! ```text
//! # comment
//! lp max 2 3
//! obj 1 2 3
//! rhs 4 5
//! row 1 0 1/2
//! row -1 2 0
//! ```

use std::fmt::Write as _;

use super::matrix::RationalMatrix;
use super::program::{LinearProgram, Sense};
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_count(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("malformed {what}")))
}

pub(crate) fn parse_rationals<'a>(
    line: usize,
    toks: impl Iterator<Item = &'a str>,
    expected: usize,
) -> Result<Vec<Rational>> {
    let vals = toks
        .map(|t| parse_rational(t).map_err(|_| Error::parse(line, format!("malformed rational {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != expected {
        return Err(Error::parse(
            line,
            format!("expected {expected} values, found {}", vals.len()),
        ));
    }
    Ok(vals)
}

pub fn parse_lp(text: &str) -> Result<LinearProgram> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| Error::parse(0, "empty LP file"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("lp") {
        return Err(Error::parse(ln, "expected `lp <max|min> <m> <n>`"));
    }
    let sense = match toks.next() {
        Some("max") => Sense::Maximize,
        Some("min") => Sense::Minimize,
        _ => return Err(Error::parse(ln, "sense must be `max` or `min`")),
    };
    let m = parse_count(ln, toks.next(), "row count")?;
    let n = parse_count(ln, toks.next(), "column count")?;
    if toks.next().is_some() {
        return Err(Error::parse(ln, "trailing tokens in header"));
    }

    let mut keyed = |key: &str, len: usize| -> Result<Vec<Rational>> {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("missing `{key}` line")))?;
        let mut toks = line.split_whitespace();
        if toks.next() != Some(key) {
            return Err(Error::parse(ln, format!("expected `{key}` line")));
        }
        parse_rationals(ln, toks, len)
    };
    let objective = keyed("obj", n)?;
    let rhs = keyed("rhs", m)?;
    let rows = (0..m).map(|_| keyed("row", n)).collect::<Result<Vec<_>>>()?;
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "unexpected content after the last row"));
    }
    let matrix = if m == 0 {
        RationalMatrix::zeros(0, n)
    } else {
        RationalMatrix::from_rows(rows)?
    };
    LinearProgram::new(sense, objective, matrix, rhs)
}

pub fn format_lp(lp: &LinearProgram) -> String {
    let keyed = |out: &mut String, key: &str, xs: &[Rational]| {
        out.push_str(key);
        for x in xs {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    };
    let mut out = format!(
        "lp {} {} {}\n",
        lp.sense(),
        lp.num_constraints(),
        lp.num_vars()
    );
    keyed(&mut out, "obj", lp.objective());
    keyed(&mut out, "rhs", lp.rhs());
    for i in 0..lp.num_constraints() {
        keyed(&mut out, "row", lp.matrix().row(i));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlp::rational::{rat, ratio};

    #[test]
    fn parse_and_format() {
        let text = "# sample\nlp max 2 2\nobj 1 2\nrhs 4 6/4\n\nrow 1 0\nrow -1/2 3\n";
        let lp = parse_lp(text).unwrap();
        assert_eq!(lp.sense(), Sense::Maximize);
        assert_eq!(lp.rhs(), &[rat(4), ratio(3, 2)]);
        assert_eq!(lp.matrix()[(1, 0)], ratio(-1, 2));
        let out = format_lp(&lp);
        assert_eq!(out, "lp max 2 2\nobj 1 2\nrhs 4 3/2\nrow 1 0\nrow -1/2 3\n");
        assert_eq!(parse_lp(&out).unwrap(), lp);
    }

    #[test]
    fn parse_errors() {
        let bad = [
            "",
            "lp foo 1 1\nobj 1\nrhs 1\nrow 1",
            "lp max 1 1\nobj 1 2\nrhs 1\nrow 1",
            "lp max 1 1\nobj 1\nrhs 1",
            "lp max 1 1\nobj 1\nrhs 1\nrow 1\nrow 2",
            "lp max 1 1\nobj 1\nrhs 1/0\nrow 1",
            "lp max 1 1\nrhs 1\nobj 1\nrow 1",
        ];
        for t in bad {
            assert!(matches!(parse_lp(t), Err(Error::Parse { .. })), "{t:?}");
        }
    }

    #[test]
    fn error_reports_line() {
        let err = parse_lp("lp max 1 1\n# c\nobj x\nrhs 1\nrow 1").unwrap_err();
        assert_eq!(err, Error::parse(3, "malformed rational \"x\""));
    }
}
