//! Text expressions for algebra elements and classical polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-'? factor ('*' factor)*
//! factor := atom ('^' '-'? uint)?
//! atom   := rational | 'q' | gen | '(' expr ')'
//! gen    := ('x' | 'y') '[' uint ',' uint ']'
//! rational := uint ('/' uint)?
//! ```
//!
//! Whitespace is ignored. Negative exponents are accepted only on `q` and
//! on rational literals. The canonical printed forms of [`AlgebraElement`]
//! and [`CPoly`] parse back to equal values.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraElement, Gen, QAlgebra};
use crate::coeff::{pow_rational, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::poisson::CPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Generator family: `x` for the quantum algebra, `y` for the classical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Quantum,
    Classical,
}

impl Mode {
    fn letter(self) -> char {
        match self {
            Mode::Quantum => 'x',
            Mode::Classical => 'y',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Q,
    Gen {
        row: usize,
        col: usize,
    },
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    /// Factors in the order written.
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Group(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(r) => write!(f, "{r}"),
            Expr::Q => f.write_str("q"),
            Expr::Gen { row, col } => write!(f, "g[{row},{col}]"),
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Sum(a, b) => write!(f, "{a} + {b}"),
            Expr::Difference(a, b) => write!(f, "{a} - {b}"),
            Expr::Product(fs) => {
                for (idx, e) in fs.iter().enumerate() {
                    if idx > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            Expr::Power(b, e) => write!(f, "{b}^{e}"),
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.describe_here();
            self.err(self.pos, format!("expected '{}', found {found}", c as char))
        }
    }

    fn describe_here(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".into(),
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.describe_here();
            return self.err(start, format!("expected a number, found {found}"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small_uint(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let v = self.uint()?;
        match usize::try_from(v) {
            Ok(v) => Ok(v),
            Err(_) => self.err(start, "number too large"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let negate = self.eat(b'-');
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        let prod = if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        };
        Ok(if negate {
            Expr::Neg(Box::new(prod))
        } else {
            prod
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if !self.eat(b'^') {
            return Ok(atom);
        }
        let at = self.pos;
        let negative = self.eat(b'-');
        let e = self.small_uint()? as i64;
        if negative && e != 0 {
            let invertible = match &atom {
                Expr::Q => true,
                Expr::Rational(r) => !r.is_zero(),
                _ => false,
            };
            if !invertible {
                return self.err(
                    at,
                    "negative exponent is only allowed on q or a nonzero number",
                );
            }
        }
        Ok(Expr::Power(Box::new(atom), if negative { -e } else { e }))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                if self.eat(b'/') {
                    let den_at = self.pos;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return self.err(den_at, "zero denominator");
                    }
                    Ok(Expr::Rational(Rational::new(num, den)))
                } else {
                    Ok(Expr::Rational(Rational::from_integer(num)))
                }
            }
            Some(b'q') => {
                self.pos += 1;
                if self.mode == Mode::Classical {
                    return self.err(start, "q is not allowed in classical mode");
                }
                Ok(Expr::Q)
            }
            Some(c @ (b'x' | b'y')) => {
                self.pos += 1;
                if c as char != self.mode.letter() {
                    return self.err(
                        start,
                        format!(
                            "generator '{}' used in {} mode (expected '{}')",
                            c as char,
                            match self.mode {
                                Mode::Quantum => "quantum",
                                Mode::Classical => "classical",
                            },
                            self.mode.letter()
                        ),
                    );
                }
                self.expect(b'[')?;
                let row = self.small_uint()?;
                self.expect(b',')?;
                let col = self.small_uint()?;
                self.expect(b']')?;
                if row == 0 || col == 0 || row > self.n || col > self.n {
                    return self.err(
                        start,
                        format!("index ({row},{col}) out of range for n = {}", self.n),
                    );
                }
                Ok(Expr::Gen { row, col })
            }
            _ => {
                let found = self.describe_here();
                self.err(start, format!("unexpected {found}"))
            }
        }
    }
}

/// Parses `text` for ambient size `n`.
pub fn parse(text: &str, n: usize, mode: Mode) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
        mode,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        let found = p.describe_here();
        return p.err(p.pos, format!("unexpected {found} after expression"));
    }
    Ok(e)
}

/// Evaluated expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Quantum(AlgebraElement),
    Classical(CPoly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Quantum(e) => write!(f, "{e}"),
            Value::Classical(p) => write!(f, "{p}"),
        }
    }
}

/// Evaluates in the quantum algebra; products are reduced in written order.
pub fn eval_quantum(alg: &QAlgebra, ast: &Expr) -> Result<AlgebraElement> {
    Ok(match ast {
        Expr::Rational(r) => alg.scalar(LaurentPoly::constant(r.clone())),
        Expr::Q => alg.scalar(LaurentPoly::q()),
        Expr::Gen { row, col } => alg.gen(*row, *col)?,
        Expr::Neg(e) => -&eval_quantum(alg, e)?,
        Expr::Sum(a, b) => eval_quantum(alg, a)?.try_add(&eval_quantum(alg, b)?)?,
        Expr::Difference(a, b) => eval_quantum(alg, a)?.try_sub(&eval_quantum(alg, b)?)?,
        Expr::Product(fs) => {
            let values = fs
                .iter()
                .map(|f| eval_quantum(alg, f))
                .collect::<Result<Vec<_>>>()?;
            alg.product(&values)?
        }
        Expr::Power(base, e) => match (&**base, *e) {
            (Expr::Q, e) => alg.scalar(LaurentPoly::q_pow(e as i32)),
            (Expr::Rational(r), e) => alg.scalar(LaurentPoly::constant(pow_rational(r, e as i32))),
            (_, e) if e < 0 => return Err(Error::NegativeExponent(e)),
            (b, e) => alg.pow(&eval_quantum(alg, b)?, e as u32)?,
        },
        Expr::Group(e) => eval_quantum(alg, e)?,
    })
}

/// Evaluates as a commutative polynomial in `y[i,j]`.
pub fn eval_classical(n: usize, ast: &Expr) -> Result<CPoly> {
    Ok(match ast {
        Expr::Rational(r) => CPoly::constant(n, r.clone()),
        Expr::Q => {
            return Err(ParseError {
                position: 0,
                message: "q is not allowed in classical mode".into(),
            }
            .into())
        }
        Expr::Gen { row, col } => CPoly::var(n, *row, *col)?,
        Expr::Neg(e) => eval_classical(n, e)?.scale(&-Rational::one()),
        Expr::Sum(a, b) => eval_classical(n, a)?.try_add(&eval_classical(n, b)?)?,
        Expr::Difference(a, b) => eval_classical(n, a)?.try_sub(&eval_classical(n, b)?)?,
        Expr::Product(fs) => fs
            .iter()
            .try_fold(CPoly::constant(n, Rational::one()), |acc, f| {
                acc.try_mul(&eval_classical(n, f)?)
            })?,
        Expr::Power(base, e) => match (&**base, *e) {
            (Expr::Rational(r), e) => CPoly::constant(n, pow_rational(r, e as i32)),
            (_, e) if e < 0 => return Err(Error::NegativeExponent(e)),
            (b, e) => {
                let v = eval_classical(n, b)?;
                (0..e).try_fold(CPoly::constant(n, Rational::one()), |acc, _| {
                    acc.try_mul(&v)
                })?
            }
        },
        Expr::Group(e) => eval_classical(n, e)?,
    })
}

/// Evaluates in the family selected by `mode`.
pub fn eval_expr(ast: &Expr, mode: Mode, alg: &QAlgebra) -> Result<Value> {
    match mode {
        Mode::Quantum => Ok(Value::Quantum(eval_quantum(alg, ast)?)),
        Mode::Classical => Ok(Value::Classical(eval_classical(alg.n(), ast)?)),
    }
}

/// Parses and evaluates a quantum expression.
pub fn parse_element(alg: &QAlgebra, text: &str) -> Result<AlgebraElement> {
    eval_quantum(alg, &parse(text, alg.n(), Mode::Quantum)?)
}

/// Parses and evaluates a classical expression.
pub fn parse_cpoly(n: usize, text: &str) -> Result<CPoly> {
    eval_classical(n, &parse(text, n, Mode::Classical)?)
}

/// Canonical text of a single generator word, e.g. `x[1,2]*x[2,1]`.
pub fn format_word(word: &[Gen]) -> String {
    word.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join("*")
}
