//! The poset expression language.
//!
//! ```text
//! expr := boolean(INT) | butterfly(INT) | chain(INT) | polygon(INT) | cubical(INT)
//!       | subspace(INT, INT) | sigma_star(expr) | sigma(expr) | dual(expr)
//!       | ksum(INT, expr) | boxsum(expr, expr, ...) | segre(expr, expr) | load(PATH)
//! ```
//!
//! Whitespace between tokens is ignored. `PATH` is either a bare run of
//! characters without whitespace, `,` or `)`, or a double-quoted string with
//! `\"` and `\\` escapes.

use std::fmt;
use std::ops::Range;
use std::path::PathBuf;

use eposet::constructors::*;
use eposet::{GradedPoset, PosetError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Boolean(usize),
    Butterfly(usize),
    Chain(usize),
    Polygon(usize),
    Cubical(usize),
    Subspace(usize, usize),
    SigmaStar(Box<PosetExpr>),
    Sigma(Box<PosetExpr>),
    Dual(Box<PosetExpr>),
    KSum(usize, Box<PosetExpr>),
    /// at least two operands
    BoxSum(Vec<PosetExpr>),
    Segre(Box<PosetExpr>, Box<PosetExpr>),
    Load(PathBuf),
}

/// A node with the byte range it was parsed from. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct PosetExpr {
    pub kind: ExprKind,
    pub span: Range<usize>,
}

impl PartialEq for PosetExpr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for PosetExpr {}

impl From<ExprKind> for PosetExpr {
    fn from(kind: ExprKind) -> Self {
        PosetExpr { kind, span: 0..0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: expected {}", fmt_expected(.expected))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
}

fn fmt_expected(expected: &[String]) -> String {
    match expected {
        [one] => one.clone(),
        many => format!("one of {}", many.join(", ")),
    }
}

const NAMES: [&str; 13] = [
    "boolean",
    "butterfly",
    "chain",
    "polygon",
    "cubical",
    "subspace",
    "sigma_star",
    "sigma",
    "dual",
    "ksum",
    "boxsum",
    "segre",
    "load",
];

pub fn parse(text: &str) -> Result<PosetExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.src.len() {
        return Err(p.error(&["end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError { offset: self.pos, expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    fn ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn punct(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("\"{}\"", c as char)]))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["INT"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| ParseError { offset: start, expected: vec!["INT that fits in usize".into()] })
    }

    fn boxed(&mut self) -> Result<Box<PosetExpr>, ParseError> {
        self.expr().map(Box::new)
    }

    fn expr(&mut self) -> Result<PosetExpr, ParseError> {
        self.ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|&c| c.is_ascii_lowercase() || c == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if !NAMES.contains(&name) {
            self.pos = start;
            return Err(self.error(&NAMES));
        }
        self.punct(b'(')?;
        use ExprKind::*;
        let kind = match name {
            "boolean" => Boolean(self.int()?),
            "butterfly" => Butterfly(self.int()?),
            "chain" => Chain(self.int()?),
            "polygon" => Polygon(self.int()?),
            "cubical" => Cubical(self.int()?),
            "subspace" => {
                let n = self.int()?;
                self.punct(b',')?;
                Subspace(n, self.int()?)
            }
            "sigma_star" => SigmaStar(self.boxed()?),
            "sigma" => Sigma(self.boxed()?),
            "dual" => Dual(self.boxed()?),
            "ksum" => {
                let k = self.int()?;
                self.punct(b',')?;
                KSum(k, self.boxed()?)
            }
            "boxsum" => {
                let mut parts = vec![self.expr()?];
                self.punct(b',')?;
                parts.push(self.expr()?);
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                BoxSum(parts)
            }
            "segre" => {
                let a = self.boxed()?;
                self.punct(b',')?;
                Segre(a, self.boxed()?)
            }
            "load" => Load(self.path()?),
            _ => unreachable!("name checked against NAMES"),
        };
        self.punct(b')')?;
        Ok(PosetExpr { kind, span: start..self.pos })
    }

    fn path(&mut self) -> Result<PathBuf, ParseError> {
        if self.peek() == Some(b'"') {
            self.pos += 1;
            let mut bytes = Vec::new();
            loop {
                match self.src.get(self.pos) {
                    None => return Err(self.error(&["\"\\\"\""])),
                    Some(b'"') => break,
                    Some(b'\\') if matches!(self.src.get(self.pos + 1), Some(b'"' | b'\\')) => {
                        bytes.push(self.src[self.pos + 1]);
                        self.pos += 2;
                    }
                    Some(&c) => {
                        bytes.push(c);
                        self.pos += 1;
                    }
                }
            }
            self.pos += 1;
            // input is a &str and escapes only touch ASCII
            return Ok(PathBuf::from(String::from_utf8(bytes).expect("utf-8 preserved")));
        }
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|&c| !c.is_ascii_whitespace() && c != b')' && c != b',') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["PATH"]));
        }
        Ok(PathBuf::from(std::str::from_utf8(&self.src[start..self.pos]).expect("split at ASCII")))
    }
}

impl fmt::Display for PosetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        match &self.kind {
            Boolean(n) => write!(f, "boolean({n})"),
            Butterfly(n) => write!(f, "butterfly({n})"),
            Chain(n) => write!(f, "chain({n})"),
            Polygon(q) => write!(f, "polygon({q})"),
            Cubical(n) => write!(f, "cubical({n})"),
            Subspace(n, q) => write!(f, "subspace({n}, {q})"),
            SigmaStar(e) => write!(f, "sigma_star({e})"),
            Sigma(e) => write!(f, "sigma({e})"),
            Dual(e) => write!(f, "dual({e})"),
            KSum(k, e) => write!(f, "ksum({k}, {e})"),
            BoxSum(parts) => {
                f.write_str("boxsum(")?;
                for (i, e) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str(")")
            }
            Segre(a, b) => write!(f, "segre({a}, {b})"),
            Load(path) => {
                let s = path.to_string_lossy();
                let bare = !s.is_empty()
                    && !s.starts_with('"')
                    && !s.chars().any(|c| c.is_ascii_whitespace() || c == ')' || c == ',');
                if bare {
                    write!(f, "load({s})")
                } else {
                    write!(f, "load(\"{}\")", s.replace('\\', "\\\\").replace('"', "\\\""))
                }
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum EvalCause {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

/// A constructor failure together with the subexpression that caused it.
#[derive(Debug, Error)]
#[error("in `{expr}` at bytes {}..{}: {cause}", .span.start, .span.end)]
pub struct EvalError {
    pub span: Range<usize>,
    pub expr: String,
    #[source]
    pub cause: EvalCause,
}

impl PosetExpr {
    pub fn eval(&self) -> Result<GradedPoset, EvalError> {
        use ExprKind::*;
        let here = |r: Result<GradedPoset, PosetError>| {
            r.map_err(|e| EvalError { span: self.span.clone(), expr: self.to_string(), cause: e.into() })
        };
        match &self.kind {
            Boolean(n) => here(boolean(*n)),
            Butterfly(n) => here(butterfly(*n)),
            Chain(n) => here(chain(*n)),
            Polygon(q) => here(polygon(*q)),
            Cubical(n) => here(cubical(*n)),
            Subspace(n, q) => here(subspace_lattice(*n, *q)),
            SigmaStar(e) => here(dual_suspension(&e.eval()?)),
            Sigma(e) => here(suspension(&e.eval()?)),
            Dual(e) => Ok(e.eval()?.dual()),
            KSum(k, e) => here(k_summation(&e.eval()?, *k)),
            BoxSum(parts) => {
                let posets = parts.iter().map(PosetExpr::eval).collect::<Result<Vec<_>, _>>()?;
                here(box_sum(&posets))
            }
            Segre(a, b) => here(rank_product(&a.eval()?, &b.eval()?)),
            Load(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| EvalError {
                    span: self.span.clone(),
                    expr: self.to_string(),
                    cause: EvalCause::Io { path: path.clone(), source },
                })?;
                here(eposet::io::from_json(&text))
            }
        }
    }
}
