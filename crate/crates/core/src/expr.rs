//! Truncated Taylor arithmetic and a small expression language over one
//! variable `u`, used for gluing seeds.
//!
//! Grammar (right-associative `^`, unary minus binds looser than `^`):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' unary)?
//! atom  := number | 'u' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//! func  := sqrt | exp | ln | sin | cos | sinh | cosh
//! ```

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Highest derivative order carried by a [`Jet`].
pub const JET_ORDER: usize = 8;
const N: usize = JET_ORDER + 1;

/// Taylor coefficients `f(x0 + h) = Σ c[k] h^k`, truncated at `JET_ORDER`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet(pub [f64; N]);

impl Jet {
    pub fn constant(c: f64) -> Self {
        let mut a = [0.0; N];
        a[0] = c;
        Jet(a)
    }

    /// The independent variable at `x0`.
    pub fn variable(x0: f64) -> Self {
        let mut a = [0.0; N];
        a[0] = x0;
        a[1] = 1.0;
        Jet(a)
    }

    pub fn value(&self) -> f64 {
        self.0[0]
    }

    /// `k`-th derivative at the expansion point.
    pub fn derivative(&self, k: usize) -> f64 {
        let fact: f64 = (1..=k).map(|i| i as f64).product();
        self.0[k] * fact
    }

    pub fn sqrt(self) -> Self {
        let a = self.0;
        let mut c = [0.0; N];
        c[0] = a[0].sqrt();
        for k in 1..N {
            let s: f64 = (1..k).map(|j| c[j] * c[k - j]).sum();
            c[k] = (a[k] - s) / (2.0 * c[0]);
        }
        Jet(c)
    }

    pub fn exp(self) -> Self {
        let a = self.0;
        let mut c = [0.0; N];
        c[0] = a[0].exp();
        for k in 1..N {
            let s: f64 = (1..=k).map(|j| j as f64 * a[j] * c[k - j]).sum();
            c[k] = s / k as f64;
        }
        Jet(c)
    }

    pub fn ln(self) -> Self {
        let a = self.0;
        let mut c = [0.0; N];
        c[0] = a[0].ln();
        for k in 1..N {
            let s: f64 = (1..k).map(|j| j as f64 * c[j] * a[k - j]).sum();
            c[k] = (a[k] - s / k as f64) / a[0];
        }
        Jet(c)
    }

    pub fn sin_cos(self) -> (Self, Self) {
        let a = self.0;
        let mut s = [0.0; N];
        let mut c = [0.0; N];
        (s[0], c[0]) = a[0].sin_cos();
        for k in 1..N {
            let mut ss = 0.0;
            let mut cc = 0.0;
            for j in 1..=k {
                ss += j as f64 * a[j] * c[k - j];
                cc += j as f64 * a[j] * s[k - j];
            }
            s[k] = ss / k as f64;
            c[k] = -cc / k as f64;
        }
        (Jet(s), Jet(c))
    }

    pub fn sinh_cosh(self) -> (Self, Self) {
        let e = self.exp();
        let em = (-self).exp();
        ((e - em) * 0.5, (e + em) * 0.5)
    }

    pub fn recip(self) -> Self {
        Jet::constant(1.0) / self
    }

    pub fn powi(self, n: i32) -> Self {
        let mut out = Jet::constant(1.0);
        for _ in 0..n.unsigned_abs() {
            out = out * self;
        }
        if n < 0 {
            out.recip()
        } else {
            out
        }
    }

    pub fn powf(self, p: f64) -> Self {
        if p.fract() == 0.0 && p.abs() <= 64.0 {
            self.powi(p as i32)
        } else {
            (self.ln() * p).exp()
        }
    }

    /// Composition `g(self)` where `g` has Taylor coefficients `outer` at `self.value()`.
    pub fn compose(self, outer: &Jet) -> Self {
        let mut h = self;
        h.0[0] = 0.0;
        let mut power = Jet::constant(1.0);
        let mut out = Jet::constant(0.0);
        for k in 0..N {
            out = out + power * outer.0[k];
            power = power * h;
        }
        out
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet(self.0.map(|c| -c))
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet(std::array::from_fn(|k| (0..=k).map(|j| self.0[j] * o.0[k - j]).sum()))
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, s: f64) -> Jet {
        Jet(self.0.map(|c| c * s))
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, b: Jet) -> Jet {
        let mut c = [0.0; N];
        for k in 0..N {
            let s: f64 = (1..=k).map(|j| b.0[j] * c[k - j]).sum();
            c[k] = (self.0[k] - s) / b.0[0];
        }
        Jet(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Sinh,
    Cosh,
}

impl Func {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sqrt" => Func::Sqrt,
            "exp" => Func::Exp,
            "ln" | "log" => Func::Ln,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
        }
    }

    fn apply(self, x: Jet) -> Jet {
        match self {
            Func::Sqrt => x.sqrt(),
            Func::Exp => x.exp(),
            Func::Ln => x.ln(),
            Func::Sin => x.sin_cos().0,
            Func::Cos => x.sin_cos().1,
            Func::Sinh => x.sinh_cosh().0,
            Func::Cosh => x.sinh_cosh().1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Expr(format!("unexpected trailing input in `{src}`")));
        }
        Ok(e)
    }

    pub fn eval_jet(&self, x: Jet) -> Jet {
        match self {
            Expr::Const(c) => Jet::constant(*c),
            Expr::Var => x,
            Expr::Neg(a) => -a.eval_jet(x),
            Expr::Add(a, b) => a.eval_jet(x) + b.eval_jet(x),
            Expr::Sub(a, b) => a.eval_jet(x) - b.eval_jet(x),
            Expr::Mul(a, b) => a.eval_jet(x) * b.eval_jet(x),
            Expr::Div(a, b) => a.eval_jet(x) / b.eval_jet(x),
            Expr::Pow(a, b) => {
                let base = a.eval_jet(x);
                match b.as_const() {
                    Some(p) => base.powf(p),
                    None => (base.ln() * b.eval_jet(x)).exp(),
                }
            }
            Expr::Call(f, a) => f.apply(a.eval_jet(x)),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_jet(Jet::constant(x)).value()
    }

    /// Replaces the variable by `inner`.
    pub fn substitute(&self, inner: &Expr) -> Expr {
        let b = |e: &Expr| Box::new(e.substitute(inner));
        match self {
            Expr::Const(c) => Expr::Const(*c),
            Expr::Var => inner.clone(),
            Expr::Neg(a) => Expr::Neg(b(a)),
            Expr::Add(x, y) => Expr::Add(b(x), b(y)),
            Expr::Sub(x, y) => Expr::Sub(b(x), b(y)),
            Expr::Mul(x, y) => Expr::Mul(b(x), b(y)),
            Expr::Div(x, y) => Expr::Div(b(x), b(y)),
            Expr::Pow(x, y) => Expr::Pow(b(x), b(y)),
            Expr::Call(f, a) => Expr::Call(*f, b(a)),
        }
    }

    fn as_const(&self) -> Option<f64> {
        match self {
            Expr::Const(c) => Some(*c),
            Expr::Neg(a) => a.as_const().map(|c| -c),
            _ => None,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var => write!(f, "u"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, b) => write!(f, "({a} ^ {b})"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // exponent part
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v = text
                .parse::<f64>()
                .map_err(|_| Error::Expr(format!("bad number `{text}`")))?;
            out.push(Tok::Num(v));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Expr(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Expr(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.peek_op() == Some('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Expr("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(Expr::Const(v)),
            Tok::Op('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "u" | "s" => Ok(Expr::Var),
                "pi" => Ok(Expr::Const(std::f64::consts::PI)),
                "e" => Ok(Expr::Const(std::f64::consts::E)),
                _ => {
                    let f = Func::from_name(&name)
                        .ok_or_else(|| Error::Expr(format!("unknown identifier `{name}`")))?;
                    self.expect('(')?;
                    let arg = self.expr()?;
                    self.expect(')')?;
                    Ok(Expr::Call(f, Box::new(arg)))
                }
            },
            Tok::Op(c) => Err(Error::Expr(format!("unexpected `{c}`"))),
        }
    }
}
