//! Tokenizer and recursive-descent parser for the expression language.
//!
//! Precedence from loosest to tightest: `+ -`, `* /`, unary `-`, `^`.
//! Binary operators associate to the left; `^` takes an integer exponent.

use num_bigint::BigInt;
use tanreg_core::algebra::TowerSpec;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    /// The function-field variable.
    X,
    Trans(usize),
    Alpha,
    Eps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Atom(Atom),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    D(Box<Expr>),
    Pair(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^(){},".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            return Err(CliError::Syntax {
                pos: i,
                msg: format!("unexpected character `{ch}`"),
            });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    tower: &'a TowerSpec,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> CliError {
        CliError::Syntax {
            pos: self.pos(),
            msg: format!("expected {wanted}, found {}", describe(self.peek())),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                BinOp::Mul
            } else if self.eat('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let parens = self.eat('(');
        let negative = self.eat('-');
        let pos = self.pos();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(CliError::Syntax {
                pos,
                msg: "expected an integer exponent".into(),
            });
        };
        self.at += 1;
        let n: i64 = i64::try_from(n)
            .ok()
            .filter(|n| *n <= u32::MAX as i64)
            .ok_or_else(|| CliError::Syntax {
                pos,
                msg: "exponent too large".into(),
            })?;
        if parens {
            self.expect(')')?;
        }
        if *self.peek() == Tok::Sym('^') {
            return Err(CliError::Syntax {
                pos: self.pos(),
                msg: "chained exponents need parentheses".into(),
            });
        }
        Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek() {
            Tok::End => return Err(self.unexpected("an operand")),
            Tok::Sym(c) if !"({".contains(*c) => return Err(self.unexpected("an operand")),
            _ => {}
        }
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('{') => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect('}')?;
                Ok(Expr::Pair(Box::new(a), Box::new(b)))
            }
            Tok::Ident(name) if name == "d" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Expr::D(Box::new(e)))
            }
            Tok::Ident(name) => self.resolve(&name, pos),
            _ => unreachable!("checked above"),
        }
    }

    fn lookup(&self, name: &str) -> Option<Atom> {
        let t = self.tower;
        if name == t.variable() {
            Some(Atom::X)
        } else if name == "eps" {
            Some(Atom::Eps)
        } else if t.algebraic_name() == Some(name) {
            Some(Atom::Alpha)
        } else {
            t.transcendentals()
                .iter()
                .position(|s| s == name)
                .map(Atom::Trans)
        }
    }

    fn resolve(&self, name: &str, pos: usize) -> Result<Expr> {
        if let Some(a) = self.lookup(name) {
            return Ok(Expr::Atom(a));
        }
        // `dx`, `dt1`: shorthand for d(x), d(t1)
        if let Some(a) = name.strip_prefix('d').and_then(|rest| self.lookup(rest)) {
            if a != Atom::Eps {
                return Ok(Expr::D(Box::new(Expr::Atom(a))));
            }
        }
        Err(CliError::UnknownSymbol {
            name: name.to_string(),
            pos,
        })
    }
}

/// Parses one expression over the names of `tower`.
pub fn parse_expression(src: &str, tower: &TowerSpec) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
        tower,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn tower() -> Arc<TowerSpec> {
        TowerSpec::transcendental(&["t"]).unwrap()
    }

    fn p(s: &str) -> Result<Expr> {
        parse_expression(s, &tower())
    }

    fn int(n: i64) -> Box<Expr> {
        Box::new(Expr::Int(n.into()))
    }

    fn x() -> Box<Expr> {
        Box::new(Expr::Atom(Atom::X))
    }

    #[test]
    fn precedence() {
        // (x^2 - 2)/x
        let num = Expr::Bin(BinOp::Sub, Box::new(Expr::Pow(x(), 2)), int(2));
        assert_eq!(
            p("(x^2 - 2)/x").unwrap(),
            Expr::Bin(BinOp::Div, Box::new(num), x())
        );
        // -x^2 is -(x^2)
        assert_eq!(p("-x^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(x(), 2))));
        // left associativity
        let ab = Expr::Bin(BinOp::Sub, int(1), int(2));
        assert_eq!(
            p("1 - 2 - 3").unwrap(),
            Expr::Bin(BinOp::Sub, Box::new(ab), int(3))
        );
        let ab = Expr::Bin(BinOp::Div, int(1), int(2));
        assert_eq!(
            p("1/2*x").unwrap(),
            Expr::Bin(BinOp::Mul, Box::new(ab), x())
        );
    }

    #[test]
    fn differentials_and_pairs() {
        let e = p("t*d(x)/x + d(t)").unwrap();
        let Expr::Bin(BinOp::Add, lhs, rhs) = e else {
            panic!("sum expected")
        };
        assert_eq!(*rhs, Expr::D(Box::new(Expr::Atom(Atom::Trans(0)))));
        assert!(matches!(*lhs, Expr::Bin(BinOp::Div, _, _)));
        assert_eq!(p("dx").unwrap(), Expr::D(x()));
        assert_eq!(p("dt").unwrap(), p("d(t)").unwrap());
        assert!(matches!(p("{1 + eps*t, x}").unwrap(), Expr::Pair(_, _)));
    }

    #[test]
    fn exponents() {
        assert_eq!(p("x^-2").unwrap(), Expr::Pow(x(), -2));
        assert_eq!(p("x^(-2)").unwrap(), Expr::Pow(x(), -2));
        assert!(p("x^2^3").is_err());
        assert!(p("x^t").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            p("x + y"),
            Err(CliError::UnknownSymbol {
                name: "y".into(),
                pos: 4
            })
        );
        assert!(matches!(p("x +"), Err(CliError::Syntax { pos: 3, .. })));
        assert!(matches!(p("(x"), Err(CliError::Syntax { pos: 2, .. })));
        assert!(matches!(p("x $ 1"), Err(CliError::Syntax { pos: 2, .. })));
        assert!(matches!(p("x x"), Err(CliError::Syntax { pos: 2, .. })));
        assert!(matches!(p("deps"), Err(CliError::UnknownSymbol { .. })));
        assert!(matches!(p(""), Err(CliError::Syntax { pos: 0, .. })));
    }
}
