//! Operator expressions: parsing and evaluation.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ['^' posint] | '-' factor
//! primary := rational | 't' posint | 'd' posint | '(' expr ')'
//! rational := int ['/' posint]
//! ```
//!
//! `^` binds tighter than unary minus, which binds tighter than `*`. `*` is
//! operator composition and is left-associative. When a symbol prefix is
//! configured (e.g. `x`), atoms `x1..xn` are accepted as well; they are only
//! meaningful for [`Expr::eval_symbol`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::constructions::JetMap;
use crate::degree::Degree;
use crate::error::Error;
use crate::multi_index::MultiIndex;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::symbols::SymbolElem;
use crate::weyl::DiffOp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigRational),
    /// `t_i`, 1-based.
    Var(usize),
    /// `d_i`, 1-based.
    Deriv(usize),
    /// `xi_i`, 1-based.
    Xi(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A syntax error at a 1-based byte offset.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unexpected { expected: Vec<String>, found: String },
    ZeroIndex,
    BadExponent(String),
    ZeroDenominator,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::Unexpected { expected, found } => {
                if expected.len() == 1 {
                    write!(f, "expected {}; found {found}", expected[0])
                } else {
                    write!(f, "expected one of {}; found {found}", expected.join(", "))
                }
            }
            ParseErrorKind::ZeroIndex => f.write_str("variable index must be at least 1"),
            ParseErrorKind::BadExponent(e) => write!(f, "exponent must be a positive integer, got {e}"),
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String, Option<usize>),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(i) => format!("number `{i}`"),
            Tok::Ident(name, Some(i)) => format!("`{name}{i}`"),
            Tok::Ident(name, None) => format!("`{name}`"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = input[start..i].parse().expect("digits");
            out.push((start + 1, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            let name = input[start..i].to_string();
            let dstart = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index = if dstart == i {
                None
            } else {
                match input[dstart..i].parse::<usize>() {
                    Ok(0) => {
                        return Err(ParseError {
                            offset: dstart + 1,
                            kind: ParseErrorKind::ZeroIndex,
                        })
                    }
                    Ok(v) => Some(v),
                    Err(_) => {
                        return Err(ParseError {
                            offset: dstart + 1,
                            kind: ParseErrorKind::Unexpected {
                                expected: vec!["a variable index".into()],
                                found: format!("`{}`", &input[dstart..i]),
                            },
                        })
                    }
                }
            };
            out.push((start + 1, Tok::Ident(name, index)));
        } else if b"+-*^()/".contains(&c) {
            out.push((i + 1, Tok::Sym(c as char)));
            i += 1;
        } else {
            let ch = input[i..].chars().next().expect("char boundary");
            return Err(ParseError {
                offset: i + 1,
                kind: ParseErrorKind::Unexpected {
                    expected: vec!["an operator expression".into()],
                    found: format!("character '{ch}'"),
                },
            });
        }
    }
    out.push((input.len() + 1, Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    xi_prefix: Option<&'a str>,
    depth: usize,
    // whether the factor just parsed may still take a `^`
    pow_open: bool,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<String>) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind: ParseErrorKind::Unexpected {
                expected,
                found: self.peek().describe(),
            },
        }
    }

    fn operand_expected(&self) -> Vec<String> {
        let mut v: Vec<String> = vec![
            "'('".into(),
            "'-'".into(),
            "number".into(),
            "t<i>".into(),
            "d<i>".into(),
        ];
        if let Some(p) = self.xi_prefix {
            v.push(format!("{p}<i>"));
        }
        v
    }

    fn continuation_expected(&self) -> Vec<String> {
        let mut v: Vec<String> = vec!["'+'".into(), "'-'".into(), "'*'".into()];
        if self.pow_open {
            v.push("'^'".into());
        }
        v.push(if self.depth > 0 {
            "')'".into()
        } else {
            "end of input".into()
        });
        v
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while let Tok::Sym('*') = self.peek() {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if let Tok::Sym('-') = self.peek() {
            self.bump();
            let inner = self.factor()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        let base = self.primary()?;
        if let Tok::Sym('^') = self.peek() {
            self.bump();
            let offset = self.offset();
            let e = match self.peek().clone() {
                Tok::Int(v) => {
                    self.bump();
                    match u32::try_from(&v) {
                        Ok(e) if e > 0 => e,
                        _ => {
                            return Err(ParseError {
                                offset,
                                kind: ParseErrorKind::BadExponent(v.to_string()),
                            })
                        }
                    }
                }
                _ => return Err(self.unexpected(vec!["positive integer exponent".into()])),
            };
            self.pow_open = false;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        self.pow_open = true;
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                if let Tok::Sym('/') = self.peek() {
                    self.bump();
                    let doff = self.offset();
                    match self.peek().clone() {
                        Tok::Int(den) => {
                            self.bump();
                            if den.is_zero() {
                                return Err(ParseError {
                                    offset: doff,
                                    kind: ParseErrorKind::ZeroDenominator,
                                });
                            }
                            Ok(Expr::Num(BigRational::new(num, den)))
                        }
                        _ => Err(self.unexpected(vec!["denominator".into()])),
                    }
                } else {
                    Ok(Expr::Num(BigRational::from_integer(num)))
                }
            }
            Tok::Ident(name, index) => {
                let kind = match name.as_str() {
                    "t" => Some(Expr::Var as fn(usize) -> Expr),
                    "d" => Some(Expr::Deriv as fn(usize) -> Expr),
                    other if Some(other) == self.xi_prefix => Some(Expr::Xi as fn(usize) -> Expr),
                    _ => None,
                };
                match (kind, index) {
                    (Some(make), Some(i)) => {
                        self.bump();
                        Ok(make(i))
                    }
                    (Some(_), None) => Err(ParseError {
                        offset: offset + name.len(),
                        kind: ParseErrorKind::Unexpected {
                            expected: vec!["a variable index".into()],
                            found: self.toks[self.pos + 1].1.describe(),
                        },
                    }),
                    (None, _) => Err(self.unexpected(self.operand_expected())),
                }
            }
            Tok::Sym('(') => {
                self.bump();
                self.depth += 1;
                let inner = self.expr()?;
                if let Tok::Sym(')') = self.peek() {
                    self.bump();
                    self.depth -= 1;
                    Ok(inner)
                } else {
                    Err(self.unexpected(self.continuation_expected()))
                }
            }
            _ => Err(self.unexpected(self.operand_expected())),
        }
    }
}

/// Parses an operator expression over `t<i>` and `d<i>`.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    parse_with(input, None)
}

/// Parses with optional symbol atoms `<prefix><i>`.
pub fn parse_with(input: &str, xi_prefix: Option<&str>) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(input)?,
        pos: 0,
        xi_prefix,
        depth: 0,
        pow_open: false,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(p.continuation_expected()));
    }
    Ok(e)
}

fn to_scalar<S: Scalar>(r: &BigRational) -> S {
    S::from_bigint(r.numer()) / S::from_bigint(r.denom())
}

/// The evaluated polynomial is not a polynomial (it has derivative terms).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("expected a polynomial, found an operator of order {0}")]
pub struct NotAPolynomial(pub Degree);

impl Expr {
    /// Largest `t`/`d`/`xi` index, 0 if none.
    pub fn max_index(&self) -> usize {
        match self {
            Expr::Num(_) => 0,
            Expr::Var(i) | Expr::Deriv(i) | Expr::Xi(i) => *i,
            Expr::Neg(e) | Expr::Pow(e, _) => e.max_index(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.max_index().max(b.max_index()),
        }
    }

    pub fn has_xi(&self) -> bool {
        match self {
            Expr::Xi(_) => true,
            Expr::Num(_) | Expr::Var(_) | Expr::Deriv(_) => false,
            Expr::Neg(e) | Expr::Pow(e, _) => e.has_xi(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.has_xi() || b.has_xi(),
        }
    }

    pub fn has_deriv(&self) -> bool {
        match self {
            Expr::Deriv(_) => true,
            Expr::Num(_) | Expr::Var(_) | Expr::Xi(_) => false,
            Expr::Neg(e) | Expr::Pow(e, _) => e.has_deriv(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.has_deriv() || b.has_deriv(),
        }
    }

    /// Evaluates to a normal-form operator in `n` variables; `*` composes.
    ///
    /// # Panics
    ///
    /// If `n < self.max_index()` or the expression contains symbol atoms.
    pub fn eval_op<S: Scalar>(&self, n: usize) -> DiffOp<S> {
        match self {
            Expr::Num(r) => DiffOp::from_poly(Poly::constant(n, to_scalar(r))),
            Expr::Var(i) => DiffOp::coordinate(n, *i).expect("index checked by caller"),
            Expr::Deriv(i) => DiffOp::partial(n, *i).expect("index checked by caller"),
            Expr::Xi(_) => panic!("symbol atom in operator expression"),
            Expr::Neg(e) => e.eval_op::<S>(n).neg(),
            Expr::Add(a, b) => &a.eval_op::<S>(n) + &b.eval_op(n),
            Expr::Sub(a, b) => &a.eval_op::<S>(n) - &b.eval_op(n),
            Expr::Mul(a, b) => &a.eval_op::<S>(n) * &b.eval_op(n),
            Expr::Pow(e, k) => e.eval_op::<S>(n).pow(*k),
        }
    }

    /// Evaluates to a polynomial; any surviving derivative term is an error.
    pub fn eval_poly<S: Scalar>(&self, n: usize) -> Result<Poly<S>, NotAPolynomial> {
        let op = self.eval_op::<S>(n);
        match op.syntactic_order() {
            Degree::NegInf => Ok(Poly::zero(n)),
            Degree::Finite(0) => Ok(op.coeff(&MultiIndex::zero(n))),
            other => Err(NotAPolynomial(other)),
        }
    }

    /// Evaluates `t`/`xi` expressions commutatively and splits the result
    /// into a homogeneous symbol. `d` atoms are not allowed.
    pub fn eval_symbol<S: Scalar>(&self, n: usize) -> Result<SymbolElem<S>, Error> {
        SymbolElem::from_combined(n, &self.eval_combined(n))
    }

    fn eval_combined<S: Scalar>(&self, n: usize) -> Poly<S> {
        let m = 2 * n;
        match self {
            Expr::Num(r) => Poly::constant(m, to_scalar(r)),
            Expr::Var(i) => Poly::var(m, *i).expect("index checked by caller"),
            Expr::Xi(i) => Poly::var(m, n + *i).expect("index checked by caller"),
            Expr::Deriv(_) => panic!("derivative atom in symbol expression"),
            Expr::Neg(e) => -e.eval_combined::<S>(n),
            Expr::Add(a, b) => a.eval_combined::<S>(n) + b.eval_combined(n),
            Expr::Sub(a, b) => a.eval_combined::<S>(n) - b.eval_combined(n),
            Expr::Mul(a, b) => a.eval_combined::<S>(n) * b.eval_combined(n),
            Expr::Pow(e, k) => e.eval_combined::<S>(n).pow(*k),
        }
    }
}

/// Reads the jet-map text format: one `i_1,...,i_n -> <polynomial>` entry
/// per line. Blank lines and lines starting with `#` are skipped, missing
/// basis monomials map to zero. The variable count is taken from `vars` or
/// else from the entries.
pub fn parse_jet_map<S: Scalar>(text: &str, k: usize, vars: Option<usize>) -> Result<JetMap<S>, Error> {
    let mut raw = Vec::new();
    let mut n_seen: Option<usize> = None;
    let mut max_var = 0;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| Error::JetMap(format!("line {lineno}: missing `->`")))?;
        let exps = lhs
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::JetMap(format!("line {lineno}: malformed multi-index `{}`", lhs.trim())))?;
        match n_seen {
            None => n_seen = Some(exps.len()),
            Some(n) if n != exps.len() => {
                return Err(Error::JetMap(format!(
                    "line {lineno}: multi-index has {} entries, expected {n}",
                    exps.len()
                )))
            }
            _ => {}
        }
        let e = parse(rhs).map_err(|e| Error::JetMap(format!("line {lineno}: {e}")))?;
        max_var = max_var.max(e.max_index());
        raw.push((lineno, MultiIndex::new(exps), e));
    }
    let n = match (vars, n_seen) {
        (Some(v), Some(s)) if v != s => {
            return Err(Error::JetMap(format!(
                "multi-indices have {s} entries but {v} variables were requested"
            )))
        }
        (Some(v), _) => v,
        (None, Some(s)) => s,
        (None, None) => return Err(Error::JetMap("no entries; variable count unknown".into())),
    };
    if max_var > n {
        return Err(Error::JetMap(format!(
            "value uses t{max_var} but there are only {n} variables"
        )));
    }
    let mut entries = Vec::with_capacity(raw.len());
    for (lineno, m, e) in raw {
        let p = e
            .eval_poly::<S>(n)
            .map_err(|err| Error::JetMap(format!("line {lineno}: {err}")))?;
        entries.push((m, p));
    }
    JetMap::new(n, k, entries)
}

/// Shorthand: parse and evaluate an operator, inferring `n` from the input.
pub fn parse_op<S: Scalar>(input: &str) -> Result<DiffOp<S>, ParseError> {
    let e = parse(input)?;
    Ok(e.eval_op(e.max_index().max(1)))
}
