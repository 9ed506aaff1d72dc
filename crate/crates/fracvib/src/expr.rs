//! Expression language for frequency-dependent order profiles.
//!
//! Profiles such as `1.10 + 1.89*abs(sin(w))` are parsed into an immutable
//! tree with a single free variable `w`, the angular frequency. Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := number | 'w' | '(' expr ')' | func '(' expr ')' | '-' factor
//! func   := abs | sin | cos | exp
//! ```
//!
//! Operators are left associative, angles are radians, absolute value is
//! spelled `abs(...)`, and there is no implicit multiplication. Numeric
//! literals are doubles with an optional exponent part.
//!
//! Evaluation is a pure function of `w`; parsed trees are immutable and can
//! be shared freely across threads.

use std::fmt;

use thiserror::Error;

/// The four built-in unary functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryFn {
    Abs,
    Sin,
    Cos,
    Exp,
}

impl UnaryFn {
    fn name(self) -> &'static str {
        match self {
            UnaryFn::Abs => "abs",
            UnaryFn::Sin => "sin",
            UnaryFn::Cos => "cos",
            UnaryFn::Exp => "exp",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        match name {
            "abs" => Some(UnaryFn::Abs),
            "sin" => Some(UnaryFn::Sin),
            "cos" => Some(UnaryFn::Cos),
            "exp" => Some(UnaryFn::Exp),
            _ => None,
        }
    }

    fn apply(self, x: f64) -> f64 {
        match self {
            UnaryFn::Abs => x.abs(),
            UnaryFn::Sin => x.sin(),
            UnaryFn::Cos => x.cos(),
            UnaryFn::Exp => x.exp(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Num(f64),
    /// The free variable `w`.
    Omega,
    Neg(Box<Node>),
    Call(UnaryFn, Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
}

/// A parsed order-profile expression in the variable `w`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileExpr {
    root: Node,
}

/// Parse failure, with the byte position where it happened.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("unknown identifier `{name}` at byte {position} (only w, abs, sin, cos, exp)")]
    UnknownIdentifier { position: usize, name: String },
}

/// Evaluation failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EvalError {
    /// Division by zero or overflow somewhere inside the expression.
    #[error("expression produced a non-finite value")]
    NonFiniteResult,
}

/// Parse `text` into an expression tree.
pub fn parse(text: &str) -> Result<ProfileExpr, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        end: text.len(),
    };
    let root = parser.expr()?;
    parser.expect_end()?;
    Ok(ProfileExpr { root })
}

impl ProfileExpr {
    /// Evaluate at `w = omega`. Every intermediate value must be finite.
    pub fn eval(&self, omega: f64) -> Result<f64, EvalError> {
        eval_node(&self.root, omega)
    }
}

fn eval_node(node: &Node, w: f64) -> Result<f64, EvalError> {
    let v = match node {
        Node::Num(v) => *v,
        Node::Omega => w,
        Node::Neg(x) => -eval_node(x, w)?,
        Node::Call(f, x) => f.apply(eval_node(x, w)?),
        Node::Add(a, b) => eval_node(a, w)? + eval_node(b, w)?,
        Node::Sub(a, b) => eval_node(a, w)? - eval_node(b, w)?,
        Node::Mul(a, b) => eval_node(a, w)? * eval_node(b, w)?,
        Node::Div(a, b) => eval_node(a, w)? / eval_node(b, w)?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFiniteResult)
    }
}

// ---------------------------------------------------------------------------
// Canonical printer. `parse(e.to_string())` reproduces a tree that evaluates
// bit-identically to `e`: parentheses are emitted exactly where the grouping
// differs from what left-associative reparsing would produce.
// ---------------------------------------------------------------------------

fn prec(node: &Node) -> u8 {
    match node {
        Node::Add(..) | Node::Sub(..) => 1,
        Node::Mul(..) | Node::Div(..) => 2,
        Node::Neg(_) => 3,
        Node::Num(_) | Node::Omega | Node::Call(..) => 4,
    }
}

fn write_node(f: &mut fmt::Formatter<'_>, node: &Node, min_prec: u8) -> fmt::Result {
    let p = prec(node);
    if p < min_prec {
        write!(f, "(")?;
    }
    match node {
        Node::Num(v) => write!(f, "{v}")?,
        Node::Omega => write!(f, "w")?,
        Node::Neg(x) => {
            write!(f, "-")?;
            write_node(f, x, 3)?;
        }
        Node::Call(func, x) => {
            write!(f, "{}(", func.name())?;
            write_node(f, x, 0)?;
            write!(f, ")")?;
        }
        Node::Add(a, b) => {
            write_node(f, a, 1)?;
            write!(f, " + ")?;
            write_node(f, b, 2)?;
        }
        Node::Sub(a, b) => {
            write_node(f, a, 1)?;
            write!(f, " - ")?;
            write_node(f, b, 2)?;
        }
        Node::Mul(a, b) => {
            write_node(f, a, 2)?;
            write!(f, "*")?;
            write_node(f, b, 3)?;
        }
        Node::Div(a, b) => {
            write_node(f, a, 2)?;
            write!(f, "/")?;
            write_node(f, b, 3)?;
        }
    }
    if p < min_prec {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for ProfileExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(f, &self.root, 0)
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(ParseError::Syntax {
                            position: i,
                            expected: vec!["digit after decimal point"],
                            found: found_at(text, i),
                        });
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j >= bytes.len() || !bytes[j].is_ascii_digit() {
                        return Err(ParseError::Syntax {
                            position: j,
                            expected: vec!["exponent digits"],
                            found: found_at(text, j),
                        });
                    }
                    i = j;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let lit = &text[start..i];
                let value: f64 = lit.parse().map_err(|_| ParseError::Syntax {
                    position: start,
                    expected: vec!["numeric literal"],
                    found: lit.to_string(),
                })?;
                out.push((start, Tok::Num(value)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(ParseError::Syntax {
                    position: i,
                    expected: vec!["number", "identifier", "operator", "`(`", "`)`"],
                    found: found_at(text, i),
                });
            }
        }
    }
    Ok(out)
}

fn found_at(text: &str, pos: usize) -> String {
    match text[pos..].chars().next() {
        Some(c) => format!("`{c}`"),
        None => "end of input".into(),
    }
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

const FACTOR_EXPECTED: &[&str] = &["number", "`w`", "function name", "`(`", "`-`"];

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.tokens.get(self.pos)
    }

    fn syntax(&self, expected: &[&'static str]) -> ParseError {
        match self.peek() {
            Some((p, t)) => ParseError::Syntax {
                position: *p,
                expected: expected.to_vec(),
                found: t.describe(),
            },
            None => ParseError::Syntax {
                position: self.end,
                expected: expected.to_vec(),
                found: "end of input".into(),
            },
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.syntax(&["`+`", "`-`", "`*`", "`/`", "end of input"]))
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some((_, Tok::RParen)) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.syntax(&["`)`"])),
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut node = self.term()?;
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.pos += 1;
                    node = Node::Add(Box::new(node), Box::new(self.term()?));
                }
                Some((_, Tok::Minus)) => {
                    self.pos += 1;
                    node = Node::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut node = self.factor()?;
        loop {
            match self.peek() {
                Some((_, Tok::Star)) => {
                    self.pos += 1;
                    node = Node::Mul(Box::new(node), Box::new(self.factor()?));
                }
                Some((_, Tok::Slash)) => {
                    self.pos += 1;
                    node = Node::Div(Box::new(node), Box::new(self.factor()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn factor(&mut self) -> Result<Node, ParseError> {
        match self.peek() {
            Some((_, Tok::Num(v))) => {
                let v = *v;
                self.pos += 1;
                Ok(Node::Num(v))
            }
            Some((_, Tok::Minus)) => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.factor()?)))
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some((p, Tok::Ident(name))) => {
                let p = *p;
                let name = name.clone();
                self.pos += 1;
                if name == "w" {
                    return Ok(Node::Omega);
                }
                match UnaryFn::from_name(&name) {
                    Some(func) => {
                        match self.peek() {
                            Some((_, Tok::LParen)) => self.pos += 1,
                            _ => return Err(self.syntax(&["`(`"])),
                        }
                        let arg = self.expr()?;
                        self.expect_rparen()?;
                        Ok(Node::Call(func, Box::new(arg)))
                    }
                    None => Err(ParseError::UnknownIdentifier { position: p, name }),
                }
            }
            _ => Err(self.syntax(FACTOR_EXPECTED)),
        }
    }
}
