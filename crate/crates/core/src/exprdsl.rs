//! A small language for scalar functions of `x, y, z, m, v, w`.
//!
//! Precedence, tightest first:
//!
//! | level | operators            | associativity |
//! |-------|----------------------|---------------|
//! | 1     | `^` (integer literal exponent, optional sign) | right |
//! | 2     | unary `-`            | prefix        |
//! | 3     | `*` `/`              | left          |
//! | 4     | `+` `-`              | left          |
//!
//! Atoms are numeric literals (`3`, `0.25`), variables, parenthesized
//! expressions and calls `exp(..)`, `log(..)`, `sin(..)`, `cos(..)`.
//! A chain `a^2^3` folds the exponents at parse time, giving `a^8`.
//! `-z^2` means `-(z^2)`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    M,
    V,
    W,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::X, Var::Y, Var::Z, Var::M, Var::V, Var::W];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::M => "m",
            Var::V => "v",
            Var::W => "w",
        }
    }

    fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Log,
    Sin,
    Cos,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sin => "sin",
            Func::Cos => "cos",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        [Func::Exp, Func::Log, Func::Sin, Func::Cos].into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Lit(f64),
    Var(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: expected one of {expected:?}, found {found}")]
    Syntax { offset: usize, expected: Vec<String>, found: String },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("log of non-positive argument {0}")]
    Domain(f64),
}

/// Variable bindings; unset slots are unbound.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Env {
    slots: [Option<f64>; 6],
}

impl Env {
    pub fn new() -> Self {
        Env::default()
    }

    pub fn with(mut self, v: Var, value: f64) -> Self {
        self.slots[v.slot()] = Some(value);
        self
    }

    pub fn set(&mut self, v: Var, value: f64) {
        self.slots[v.slot()] = Some(value);
    }

    pub fn get(&self, v: Var) -> Option<f64> {
        self.slots[v.slot()]
    }

    /// Binds `x, y, z`.
    pub fn xyz(x: f64, y: f64, z: f64) -> Self {
        Env::new().with(Var::X, x).with(Var::Y, y).with(Var::Z, z)
    }
}

impl Expr {
    pub fn eval(&self, env: &Env) -> Result<f64, ExprError> {
        Ok(match self {
            Expr::Lit(c) => *c,
            Expr::Var(v) => env.get(*v).ok_or_else(|| ExprError::UnboundVariable(v.name().into()))?,
            Expr::Neg(e) => -e.eval(env)?,
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(env)?, b.eval(env)?);
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a / b,
                }
            }
            Expr::Pow(e, n) => e.eval(env)?.powi(*n),
            Expr::Call(f, e) => {
                let a = e.eval(env)?;
                match f {
                    Func::Exp => a.exp(),
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Log => {
                        if a <= 0.0 || a.is_nan() {
                            return Err(ExprError::Domain(a));
                        }
                        a.ln()
                    }
                }
            }
        })
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Expr::Lit(_) => {}
            Expr::Var(v) => {
                out.insert(*v);
            }
            Expr::Neg(e) | Expr::Pow(e, _) | Expr::Call(_, e) => e.collect_vars(out),
            Expr::Bin(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Lit(_) | Expr::Var(_) | Expr::Call(..) => 5,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
            if parens {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            Expr::Lit(c) => write!(f, "{c}"),
            Expr::Var(v) => f.write_str(v.name()),
            Expr::Neg(e) => {
                f.write_str("-")?;
                wrap(f, e, e.prec() < 3)
            }
            Expr::Bin(op, a, b) => {
                let p = self.prec();
                wrap(f, a, a.prec() < p)?;
                f.write_str(match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                    BinOp::Div => "/",
                })?;
                wrap(f, b, b.prec() <= p)
            }
            Expr::Pow(e, n) => {
                wrap(f, e, e.prec() <= 4)?;
                write!(f, "^{n}")
            }
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

const OPERAND: &[&str] = &["number", "variable", "function", "(", "-"];

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&mut self, expected: &[&str]) -> ExprError {
        self.skip_ws();
        let found = match self.src.get(self.pos) {
            None => "end of input".to_string(),
            Some(&c) => format!("{:?}", c as char),
        };
        ExprError::Syntax {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            let op = if c == b'+' { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            let op = if c == b'*' { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    /// `['-'] int ('^' exponent)?`, folded right to left.
    fn exponent(&mut self) -> Result<i32, ExprError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits_end = self.pos;
        if start == digits_end || self.src.get(self.pos) == Some(&b'.') {
            self.pos = start;
            return Err(self.error(&["integer exponent"]));
        }
        let text = std::str::from_utf8(&self.src[start..digits_end]).expect("ascii digits");
        let mut n: i64 = text.parse().map_err(|_| {
            self.pos = start;
            self.error(&["integer exponent"])
        })?;
        if neg {
            n = -n;
        }
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.exponent()?;
            n = if e < 0 {
                self.pos = at;
                return Err(self.error(&["non-negative folded exponent"]));
            } else {
                n.checked_pow(e as u32).ok_or_else(|| {
                    self.pos = at;
                    self.error(&["smaller exponent"])
                })?
            };
        }
        i32::try_from(n).map_err(|_| {
            self.pos = start;
            self.error(&["smaller exponent"])
        })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error(&[")", "operator"]));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if let Some(v) = Var::from_name(word) {
                    return Ok(Expr::Var(v));
                }
                if let Some(func) = Func::from_name(word) {
                    if self.peek() != Some(b'(') {
                        return Err(self.error(&["("]));
                    }
                    self.pos += 1;
                    let arg = self.expr()?;
                    if self.peek() != Some(b')') {
                        return Err(self.error(&[")", "operator"]));
                    }
                    self.pos += 1;
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                self.pos = start;
                Err(self.error(&["number", "x", "y", "z", "m", "v", "w", "exp", "log", "sin", "cos", "(", "-"]))
            }
            _ => Err(self.error(OPERAND)),
        }
    }

    fn number(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        let mut digits = 0;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
            digits += 1;
        }
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
                digits += 1;
            }
        }
        if digits == 0 {
            self.pos = start;
            return Err(self.error(&["number"]));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(Expr::Lit(text.parse().expect("digits with optional point parse as f64")))
    }
}

/// Central-difference partial derivative with one Richardson step.
pub fn partial(e: &Expr, env: &Env, var: Var, h: f64) -> Result<f64, ExprError> {
    let x0 = env.get(var).ok_or_else(|| ExprError::UnboundVariable(var.name().into()))?;
    let d = |h: f64| -> Result<f64, ExprError> {
        let (mut a, mut b) = (*env, *env);
        a.set(var, x0 + h);
        b.set(var, x0 - h);
        Ok((e.eval(&a)? - e.eval(&b)?) / (2.0 * h))
    };
    let (d1, d2) = (d(h)?, d(h / 2.0)?);
    Ok((4.0 * d2 - d1) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(src: &str, env: Env) -> f64 {
        parse(src).unwrap().eval(&env).unwrap()
    }

    #[test]
    fn parses_basic_shapes() {
        let e = parse("exp(z)-1").unwrap();
        assert_eq!(
            e,
            Expr::Bin(BinOp::Sub, Box::new(Expr::Call(Func::Exp, Box::new(Expr::Var(Var::Z)))), Box::new(Expr::Lit(1.0)))
        );
        assert_eq!(ev("z^2", Env::new().with(Var::Z, 3.0)), 9.0);
        assert_eq!(ev("3*(1-exp(-z))", Env::new().with(Var::Z, 0.0)), 0.0);
        assert_eq!(ev("x*z", Env::xyz(2.0, 0.0, 5.0)), 10.0);
    }

    #[test]
    fn precedence_and_associativity() {
        let z = Env::new().with(Var::Z, 3.0);
        assert_eq!(ev("-z^2", z), -9.0);
        assert_eq!(ev("2^3^2", z), 512.0);
        assert_eq!(ev("8/4/2", z), 1.0);
        assert_eq!(ev("8-4-2", z), 2.0);
        assert_eq!(ev("2*z^-1", z), 2.0 / 3.0);
        assert_eq!(ev("(-z)^2", z), 9.0);
        assert_eq!(ev("--z", z), 3.0);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse("exp(") {
            Err(ExprError::Syntax { offset, expected, .. }) => {
                assert_eq!(offset, 4);
                assert!(expected.contains(&"(".to_string()));
            }
            other => panic!("{other:?}"),
        }
        for (src, at) in [("z^0.5", 2), ("1+", 2), ("(z", 2), ("q", 0), ("exp z", 4), ("z z", 2), ("z^", 2)] {
            match parse(src) {
                Err(ExprError::Syntax { offset, .. }) => assert_eq!(offset, at, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
    }

    #[test]
    fn eval_errors() {
        let e = parse("log(z)").unwrap();
        assert!(matches!(e.eval(&Env::new().with(Var::Z, -1.0)), Err(ExprError::Domain(_))));
        assert!(matches!(e.eval(&Env::new()), Err(ExprError::UnboundVariable(_))));
    }

    #[test]
    fn free_variables() {
        assert_eq!(parse("exp(z)-1").unwrap().free_vars(), [Var::Z].into());
        assert_eq!(parse("x^2+z").unwrap().free_vars(), [Var::X, Var::Z].into());
        assert!(parse("1").unwrap().free_vars().is_empty());
    }

    #[test]
    fn printing_is_canonical() {
        for (src, out) in [
            ("exp(z) - 1", "exp(z)-1"),
            ("(z)", "z"),
            ("a", ""),
            ("-(x+y)", "-(x+y)"),
            ("x-(y-z)", "x-(y-z)"),
            ("(x-y)-z", "x-y-z"),
            ("(-z)^2", "(-z)^2"),
            ("(z^2)^3", "(z^2)^3"),
            ("0.5*z", "0.5*z"),
        ] {
            if out.is_empty() {
                assert!(parse(src).is_err());
                continue;
            }
            let e = parse(src).unwrap();
            assert_eq!(e.to_string(), out);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn derivative_helper() {
        let env = Env::new().with(Var::Z, 0.7);
        let d = partial(&parse("z^3").unwrap(), &env, Var::Z, 1e-3).unwrap();
        assert!((d - 3.0 * 0.49).abs() < 1e-6);
        let d = partial(&parse("exp(2*z)").unwrap(), &env, Var::Z, 1e-3).unwrap();
        assert!((d - 2.0 * (1.4f64).exp()).abs() < 1e-6);
    }
}
