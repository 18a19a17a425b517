use std::fmt;

use crate::error::{Error, Result};

/// A full binary bracketing of `1..=n`, leaves in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Leaf(usize),
    Node(Box<Route>, Box<Route>),
}

impl Route {
    pub fn node(l: Route, r: Route) -> Route {
        Route::Node(Box::new(l), Box::new(r))
    }

    /// First and last leaf.
    pub fn span(&self) -> (usize, usize) {
        match self {
            Route::Leaf(k) => (*k, *k),
            Route::Node(l, r) => (l.span().0, r.span().1),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Route::Leaf(k) => vec![*k],
            Route::Node(l, r) => {
                let mut v = l.leaves();
                v.extend(r.leaves());
                v
            }
        }
    }

    /// `(1,(2,(⋯,n)))`.
    pub fn right_nested(lo: usize, hi: usize) -> Route {
        if lo == hi {
            Route::Leaf(lo)
        } else {
            Route::node(Route::Leaf(lo), Route::right_nested(lo + 1, hi))
        }
    }

    /// Every bracketing of `lo..=hi`, in order of the top split.
    pub fn all(lo: usize, hi: usize) -> Vec<Route> {
        if lo == hi {
            return vec![Route::Leaf(lo)];
        }
        let mut out = Vec::new();
        for m in lo..hi {
            for l in Route::all(lo, m) {
                for r in Route::all(m + 1, hi) {
                    out.push(Route::node(l.clone(), r));
                }
            }
        }
        out
    }

    /// Parse `((1,2),3)`; leaves must be exactly `1..=n`.
    pub fn parse(src: &str, n: usize) -> Result<Route> {
        let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let route = parse_route(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Route(format!("trailing input at {pos}")));
        }
        let leaves = route.leaves();
        if leaves != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Route(format!(
                "leaves {leaves:?} are not 1..={n} in order"
            )));
        }
        Ok(route)
    }
}

fn parse_route(chars: &[char], pos: &mut usize) -> Result<Route> {
    match chars.get(*pos) {
        Some('(') => {
            *pos += 1;
            let l = parse_route(chars, pos)?;
            expect(chars, pos, ',')?;
            let r = parse_route(chars, pos)?;
            expect(chars, pos, ')')?;
            Ok(Route::node(l, r))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let digits: String = chars[start..*pos].iter().collect();
            digits
                .parse()
                .map(Route::Leaf)
                .map_err(|_| Error::Route(format!("bad index `{digits}`")))
        }
        Some(c) => Err(Error::Route(format!("unexpected `{c}` at {pos}"))),
        None => Err(Error::Route("unexpected end of input".into())),
    }
}

fn expect(chars: &[char], pos: &mut usize, want: char) -> Result<()> {
    if chars.get(*pos) == Some(&want) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::Route(format!("expected `{want}` at {pos}")))
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Leaf(k) => write!(f, "{k}"),
            Route::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}
