//! Text formats: polynomials, recurrence files and loop files.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use skolem_core::skolem::{LinearLoop, LrsSpec};
use skolem_core::{Error, IntPolynomial};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Line number (1-based) for file formats, 0 for single-line input.
    pub line: usize,
    /// Character offset (0-based) within the line.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}, column {}: {}", self.line, self.position + 1, self.message)
        } else {
            write!(f, "column {}: {}", self.position + 1, self.message)
        }
    }
}

/// Failure to read an input file.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Spec(Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError { line: 0, position, message: message.into() }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { chars: src.chars().enumerate().collect(), at: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.at
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        (self.at > start).then(|| self.chars[start..self.at].iter().map(|&(_, c)| c).collect())
    }

    fn done(&mut self) -> bool {
        self.skip_ws();
        self.at >= self.chars.len()
    }

    fn rest(&self) -> &'a str {
        self.src
    }
}

fn parse_list(c: &mut Cursor<'_>) -> Result<IntPolynomial, ParseError> {
    let mut high_to_low: Vec<BigInt> = Vec::new();
    if c.eat(']') {
        return Err(err(c.pos() - 1, "empty coefficient list"));
    }
    loop {
        let neg = if c.eat('-') {
            true
        } else {
            c.eat('+');
            false
        };
        let Some(d) = c.digits() else {
            return Err(err(c.pos(), "expected an integer coefficient"));
        };
        let v: BigInt = d.parse().expect("digit string");
        high_to_low.push(if neg { -v } else { v });
        if c.eat(',') {
            continue;
        }
        if c.eat(']') {
            break;
        }
        return Err(err(c.pos(), "expected ',' or ']'"));
    }
    if !c.done() {
        return Err(err(c.pos(), "trailing input after ']'"));
    }
    high_to_low.reverse();
    Ok(IntPolynomial::new(high_to_low))
}

fn parse_human(c: &mut Cursor<'_>) -> Result<IntPolynomial, ParseError> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        c.skip_ws();
        let start = c.pos();
        let neg = if c.eat('-') {
            true
        } else if c.eat('+') {
            false
        } else if first {
            false
        } else {
            return Err(err(start, "expected '+' or '-'"));
        };
        first = false;
        let coef = c.digits();
        let has_x = {
            if coef.is_some() {
                c.eat('*');
            }
            c.eat('x')
        };
        if coef.is_none() && !has_x {
            return Err(err(c.pos(), "expected a coefficient or 'x'"));
        }
        let mut exp = 0usize;
        if has_x {
            exp = 1;
            if c.eat('^') {
                let at = c.pos();
                let Some(e) = c.digits() else {
                    c.skip_ws();
                    return Err(err(c.pos().max(at), "expected an exponent after '^'"));
                };
                exp = e.parse().map_err(|_| err(at, "exponent too large"))?;
            }
        }
        let mut v: BigInt = coef.map(|d| d.parse().expect("digit string")).unwrap_or_else(|| BigInt::from(1));
        if neg {
            v = -v;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += v;
        if c.done() {
            break;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Either human form (`x^2 - x - 1`) or a high-to-low list (`[1,-1,-1]`).
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial, ParseError> {
    let normalized = text.replace('\u{2212}', "-");
    let mut c = Cursor::new(&normalized);
    if c.done() {
        return Err(err(0, "empty polynomial"));
    }
    let _ = c.rest();
    if c.eat('[') {
        parse_list(&mut c)
    } else {
        parse_human(&mut c)
    }
}

/// Canonical text form, accepted back by [`parse_polynomial`].
pub fn render_polynomial(f: &IntPolynomial) -> String {
    f.to_string()
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_ints(body: &str, line: usize, offset: usize) -> Result<Vec<BigInt>, ParseError> {
    let mut out = Vec::new();
    let mut col = offset;
    for tok in body.split_inclusive(char::is_whitespace) {
        let t = tok.trim();
        if !t.is_empty() {
            let lead = tok.len() - tok.trim_start().len();
            out.push(t.parse::<BigInt>().map_err(|_| ParseError {
                line,
                position: col + lead,
                message: format!("invalid integer '{t}'"),
            })?);
        }
        col += tok.chars().count();
    }
    Ok(out)
}

/// `key: values` lines with `#` comments.
fn keyed_lines(text: &str) -> Result<Vec<(usize, String, String, usize)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(ParseError { line: i + 1, position: 0, message: "expected 'key: values'".into() });
        };
        let key = line[..colon].trim().to_string();
        out.push((i + 1, key, line[colon + 1..].to_string(), line[..=colon].chars().count()));
    }
    Ok(out)
}

/// `rec: a_{d-1} ... a_0` and `init: X_0 ... X_{d-1}`.
pub fn parse_lrs(text: &str) -> Result<LrsSpec, InputError> {
    let mut rec = None;
    let mut init = None;
    let mut last_line = 1;
    for (line, key, body, offset) in keyed_lines(text)? {
        last_line = line;
        let slot = match key.as_str() {
            "rec" => &mut rec,
            "init" => &mut init,
            other => {
                return Err(ParseError { line, position: 0, message: format!("unknown key '{other}'") }.into());
            }
        };
        if slot.is_some() {
            return Err(ParseError { line, position: 0, message: format!("duplicate '{key}' line") }.into());
        }
        *slot = Some(parse_ints(&body, line, offset)?);
    }
    let missing = |k: &str| ParseError { line: last_line, position: 0, message: format!("missing '{k}:' line") };
    let rec = rec.ok_or_else(|| missing("rec"))?;
    let init = init.ok_or_else(|| missing("init"))?;
    LrsSpec::new(rec, init).map_err(InputError::Spec)
}

pub fn parse_lrs_file(path: &std::path::Path) -> Result<LrsSpec, InputError> {
    parse_lrs(&read(path)?)
}

/// `A: r11 r12; r21 r22`, `b: ...`, `w: ...`.
pub fn parse_loop(text: &str) -> Result<LinearLoop, InputError> {
    let (mut a, mut b, mut w) = (None, None, None);
    let mut last_line = 1;
    for (line, key, body, offset) in keyed_lines(text)? {
        last_line = line;
        match key.as_str() {
            "A" => {
                let mut rows = Vec::new();
                let mut col = offset;
                for row in body.split(';') {
                    rows.push(parse_ints(row, line, col)?);
                    col += row.chars().count() + 1;
                }
                a = Some(rows);
            }
            "b" => b = Some(parse_ints(&body, line, offset)?),
            "w" => w = Some(parse_ints(&body, line, offset)?),
            other => {
                return Err(ParseError { line, position: 0, message: format!("unknown key '{other}'") }.into());
            }
        }
    }
    let missing = |k: &str| ParseError { line: last_line, position: 0, message: format!("missing '{k}:' line") };
    LinearLoop::new(a.ok_or_else(|| missing("A"))?, b.ok_or_else(|| missing("b"))?, w.ok_or_else(|| missing("w"))?)
        .map_err(InputError::Spec)
}

pub fn parse_loop_file(path: &std::path::Path) -> Result<LinearLoop, InputError> {
    parse_loop(&read(path)?)
}

/// A polynomial file: one polynomial, `#` comments allowed.
pub fn parse_polynomial_file(path: &std::path::Path) -> Result<IntPolynomial, InputError> {
    let text = read(path)?;
    let body: Vec<&str> = text.lines().map(strip_comment).filter(|l| !l.trim().is_empty()).collect();
    Ok(parse_polynomial(&body.join(" "))?)
}

fn read(path: &std::path::Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })
}
