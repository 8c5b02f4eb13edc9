//! Textual shape grammar.
//!
//! ```text
//! shifted:delta(N)\delta(K)
//! rect(M,N)\delta(K)          M rows of length N
//! rect(M,N)\almostsq(K)
//! straight:[λ...]\[μ...]
//! shifted:[λ...]\[μ...]
//! ```
//!
//! Whitespace is ignored and the truncation may be omitted.

use std::fmt;
use std::str::FromStr;

use trunctab_core::shape::{almost_square, Kind, Partition, TruncatedShape};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeSpec {
    ShiftedStaircase { n: usize, k: usize },
    RectStaircase { rows: usize, cols: usize, k: usize },
    RectAlmostSquare { rows: usize, cols: usize, k: usize },
    Explicit { kind: Kind, outer: Vec<usize>, trunc: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad shape spec: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// `name(a,b,...)` with exactly `arity` arguments.
fn call(s: &str, name: &str, arity: usize) -> Result<Option<Vec<usize>>, ParseError> {
    let Some(rest) = s.strip_prefix(name).and_then(|r| r.strip_prefix('(')) else {
        return Ok(None);
    };
    let Some(inner) = rest.strip_suffix(')') else {
        return err(format!("missing ')' in {s:?}"));
    };
    let args = numbers(inner)?;
    if args.len() != arity {
        return err(format!("{name} takes {arity} argument(s), got {}", args.len()));
    }
    Ok(Some(args))
}

fn numbers(s: &str) -> Result<Vec<usize>, ParseError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.parse().map_err(|_| ParseError(format!("not a number: {x:?}")))).collect()
}

fn list(s: &str) -> Result<Vec<usize>, ParseError> {
    match s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        Some(inner) => numbers(inner),
        None => err(format!("expected [..], got {s:?}")),
    }
}

impl FromStr for ShapeSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, tail) = match s.split_once('\\') {
            Some((h, t)) => (h, Some(t)),
            None => (s.as_str(), None),
        };
        if let Some(body) = head.strip_prefix("shifted:") {
            if let Some([n]) = call(body, "delta", 1)?.as_deref() {
                let k = match tail {
                    None => 0,
                    Some(t) => match call(t, "delta", 1)?.as_deref() {
                        Some([k]) => *k,
                        _ => return err(format!("expected delta(K) after delta(N), got {t:?}")),
                    },
                };
                return Ok(ShapeSpec::ShiftedStaircase { n: *n, k });
            }
            let trunc = tail.map(list).transpose()?.unwrap_or_default();
            return Ok(ShapeSpec::Explicit { kind: Kind::Shifted, outer: list(body)?, trunc });
        }
        if let Some(body) = head.strip_prefix("straight:") {
            let trunc = tail.map(list).transpose()?.unwrap_or_default();
            return Ok(ShapeSpec::Explicit { kind: Kind::Straight, outer: list(body)?, trunc });
        }
        if let Some([rows, cols]) = call(head, "rect", 2)?.as_deref() {
            let (rows, cols) = (*rows, *cols);
            let Some(t) = tail else {
                return Ok(ShapeSpec::RectStaircase { rows, cols, k: 0 });
            };
            if let Some([k]) = call(t, "delta", 1)?.as_deref() {
                return Ok(ShapeSpec::RectStaircase { rows, cols, k: *k });
            }
            if let Some([k]) = call(t, "almostsq", 1)?.as_deref() {
                return Ok(ShapeSpec::RectAlmostSquare { rows, cols, k: *k });
            }
            return err(format!("expected delta(K) or almostsq(K), got {t:?}"));
        }
        err(format!("unrecognized shape {s:?}"))
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeSpec::ShiftedStaircase { n, k } => write!(f, "shifted:delta({n})\\delta({k})"),
            ShapeSpec::RectStaircase { rows, cols, k } => write!(f, "rect({rows},{cols})\\delta({k})"),
            ShapeSpec::RectAlmostSquare { rows, cols, k } => write!(f, "rect({rows},{cols})\\almostsq({k})"),
            ShapeSpec::Explicit { kind, outer, trunc } => {
                f.write_str(match kind {
                    Kind::Straight => "straight:",
                    Kind::Shifted => "shifted:",
                })?;
                write_list(f, outer)?;
                f.write_str("\\")?;
                write_list(f, trunc)
            }
        }
    }
}

impl ShapeSpec {
    pub fn to_shape(&self) -> trunctab_core::Result<TruncatedShape> {
        match *self {
            ShapeSpec::ShiftedStaircase { n, k } => TruncatedShape::shifted_staircase(n, k),
            ShapeSpec::RectStaircase { rows, cols, k } => TruncatedShape::rect_minus_staircase(rows, cols, k),
            ShapeSpec::RectAlmostSquare { rows, cols, k } => {
                TruncatedShape::new(Partition::rectangle(rows, cols), almost_square(k), Kind::Straight)
            }
            ShapeSpec::Explicit { kind, ref outer, ref trunc } => {
                TruncatedShape::new(Partition::new(outer.iter().copied())?, Partition::new(trunc.iter().copied())?, kind)
            }
        }
    }
}
