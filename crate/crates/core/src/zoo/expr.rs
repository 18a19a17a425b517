//! Arithmetic expressions over a carrier.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := ["-"] atom
//! atom   := IDENT | INT | "(" expr ")"
//! ```
//!
//! `0` and `1` parse to [`Expr::Zero`] and [`Expr::One`]; `a - b` parses to
//! `Add(a, Neg(b))`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::term::{Carrier, Sym};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(Sym),
    IntLit(u64),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    One,
    Zero,
}

impl Expr {
    pub fn add(l: Expr, r: Expr) -> Expr {
        Expr::Add(Box::new(l), Box::new(r))
    }

    pub fn mul(l: Expr, r: Expr) -> Expr {
        Expr::Mul(Box::new(l), Box::new(r))
    }

    pub fn neg(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    /// Number of leaves and operators.
    pub fn size(&self) -> usize {
        match self {
            Expr::Var(_) | Expr::IntLit(_) | Expr::One | Expr::Zero => 1,
            Expr::Neg(e) => 1 + e.size(),
            Expr::Add(l, r) | Expr::Mul(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Evaluate in any structure given by the five operations.
    pub fn eval<V: Clone>(&self, ops: &dyn Interp<V>, env: &dyn Fn(&Sym) -> V) -> V {
        match self {
            Expr::Var(s) => env(s),
            Expr::IntLit(n) => ops.int(*n as i64),
            Expr::One => ops.int(1),
            Expr::Zero => ops.int(0),
            Expr::Neg(e) => ops.neg(&e.eval(ops, env)),
            Expr::Add(l, r) => ops.add(&l.eval(ops, env), &r.eval(ops, env)),
            Expr::Mul(l, r) => ops.mul(&l.eval(ops, env), &r.eval(ops, env)),
        }
    }
}

/// Operations an [`Expr`] can be evaluated with.
pub trait Interp<V> {
    fn int(&self, n: i64) -> V;
    fn add(&self, a: &V, b: &V) -> V;
    fn mul(&self, a: &V, b: &V) -> V;
    fn neg(&self, a: &V) -> V;
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(s) => f.write_str(s.name()),
            Expr::IntLit(n) => write!(f, "{n}"),
            Expr::One => f.write_str("1"),
            Expr::Zero => f.write_str("0"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(l, r) => write!(f, "({l} + {r})"),
            Expr::Mul(l, r) => write!(f, "({l} * {r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(s)));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Int(s)));
        } else if "+-*()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            it.next();
        } else {
            return Err(Error::Syntax {
                pos,
                expected: vec!["a token".into()],
                found: format!("`{c}`"),
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    carrier: &'a Carrier,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let (pos, tok) = &self.toks[self.at];
        Err(Error::Syntax {
            pos: *pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.at += 1;
                    acc = Expr::add(acc, self.term()?);
                }
                Tok::Sym('-') => {
                    self.at += 1;
                    acc = Expr::add(acc, Expr::neg(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek() == &Tok::Sym('*') {
            self.at += 1;
            acc = Expr::mul(acc, self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == &Tok::Sym('-') {
            self.at += 1;
            return Ok(Expr::neg(self.atom()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.peek().clone();
        match tok {
            Tok::Ident(name) => {
                self.at += 1;
                Ok(Expr::Var(self.carrier.sym(&name)?.clone()))
            }
            Tok::Int(digits) => {
                let n: u64 = match digits.parse() {
                    Ok(n) => n,
                    Err(_) => return self.fail(&["an integer that fits in 64 bits"]),
                };
                self.at += 1;
                Ok(match n {
                    0 => Expr::Zero,
                    1 => Expr::One,
                    n => Expr::IntLit(n),
                })
            }
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != &Tok::Sym(')') {
                    return self.fail(&["`)`", "an operator"]);
                }
                self.at += 1;
                Ok(e)
            }
            _ => self.fail(&["an identifier", "an integer", "`(`"]),
        }
    }
}

/// Parse `src`, resolving identifiers against `carrier`.
pub fn parse_expr(src: &str, carrier: &Carrier) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        carrier,
    };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return p.fail(&["an operator", "end of input"]);
    }
    Ok(e)
}

/// The distinct identifiers of `src`, sorted.
pub fn identifiers(src: &str) -> Result<Vec<String>> {
    let names: BTreeSet<String> = lex(src)?
        .into_iter()
        .filter_map(|(_, t)| match t {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect();
    Ok(names.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs() -> Carrier {
        Carrier::new(["a", "b", "c", "d", "x", "y"]).unwrap()
    }

    fn v(name: &str) -> Expr {
        Expr::Var(xs().sym(name).unwrap().clone())
    }

    #[test]
    fn product_of_sums() {
        assert_eq!(
            parse_expr("(a+b)*(c+d)", &xs()).unwrap(),
            Expr::mul(Expr::add(v("a"), v("b")), Expr::add(v("c"), v("d")))
        );
    }

    #[test]
    fn subtraction_desugars() {
        assert_eq!(parse_expr("a - a", &xs()).unwrap(), Expr::add(v("a"), Expr::neg(v("a"))));
    }

    #[test]
    fn integer_literals() {
        assert_eq!(
            parse_expr("2*(x+y)", &xs()).unwrap(),
            Expr::mul(Expr::IntLit(2), Expr::add(v("x"), v("y")))
        );
        assert_eq!(parse_expr("0 + 1", &xs()).unwrap(), Expr::add(Expr::Zero, Expr::One));
    }

    #[test]
    fn precedence() {
        // -a*b + c parses as ((-a)*b) + c
        assert_eq!(
            parse_expr("-a*b+c", &xs()).unwrap(),
            Expr::add(Expr::mul(Expr::neg(v("a")), v("b")), v("c"))
        );
        assert_eq!(
            parse_expr("a-b-c", &xs()).unwrap(),
            Expr::add(Expr::add(v("a"), Expr::neg(v("b"))), Expr::neg(v("c")))
        );
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_expr("a + * b", &xs()) {
            Err(Error::Syntax { pos, found, .. }) => {
                assert_eq!(pos, 4);
                assert_eq!(found, "`*`");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("(a + b", &xs()), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_expr("a b", &xs()), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expr("a % b", &xs()), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn unknown_identifier() {
        assert_eq!(parse_expr("a + q", &xs()), Err(Error::UnknownGenerator("q".into())));
    }

    #[test]
    fn identifiers_are_sorted_and_distinct() {
        assert_eq!(identifiers("y*x + x*b").unwrap(), ["b", "x", "y"]);
    }
}
