//! Equational theories presented as composites of zoo monads, and
//! normalization of expressions by evaluation in the composite.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monad::{Monad, MonadRef, Sets};
use crate::series::{compose_series, DistributiveSeries, Route};
use crate::term::{Constant, Term};
use crate::zoo::expr::Expr;
use crate::zoo::laws::*;
use crate::zoo::Zoo;

/// Rings as `FreeAbelianGroup ∘ Pointed ∘ NonunitalSemigroup`, outermost first.
pub fn ring3_series() -> DistributiveSeries<Sets> {
    let monads = vec![Zoo::FreeAbelianGroup.arc(), Zoo::Pointed.arc(), Zoo::NonunitalSemigroup.arc()];
    let laws = vec![
        ((2, 1), law_point_embed(Zoo::FreeAbelianGroup).unwrap().arc()),
        ((3, 1), law_mult_over_add(Commutativity::Noncomm).arc()),
        ((3, 2), law_unit_absorb(Commutativity::Noncomm).arc()),
    ];
    DistributiveSeries::new("ring3", monads, laws).expect("ring laws match their monads")
}

/// Rigs as `AdjoinZero ∘ NonunitalCommSemigroup ∘ Pointed ∘ NonunitalSemigroup`.
pub fn rig_series() -> DistributiveSeries<Sets> {
    let monads = vec![
        Zoo::AdjoinZero.arc(),
        Zoo::NonunitalCommSemigroup.arc(),
        Zoo::Pointed.arc(),
        Zoo::NonunitalSemigroup.arc(),
    ];
    let laws = vec![
        ((2, 1), law_add_zero().arc()),
        ((3, 1), law_point_zero().arc()),
        ((3, 2), law_point_embed(Zoo::NonunitalCommSemigroup).unwrap().arc()),
        ((4, 1), law_zero_absorb().arc()),
        ((4, 2), law_mult_over_sum().arc()),
        ((4, 3), law_unit_absorb(Commutativity::Noncomm).arc()),
    ];
    DistributiveSeries::new("rig", monads, laws).expect("rig laws match their monads")
}

/// The laws of the ring and rig series, labelled by series and index pair.
pub fn registered_laws() -> Vec<(String, ZooLaw)> {
    let ring = [
        ((2, 1), law_point_embed(Zoo::FreeAbelianGroup).unwrap()),
        ((3, 1), law_mult_over_add(Commutativity::Noncomm)),
        ((3, 2), law_unit_absorb(Commutativity::Noncomm)),
    ];
    let rig = [
        ((2, 1), law_add_zero()),
        ((3, 1), law_point_zero()),
        ((3, 2), law_point_embed(Zoo::NonunitalCommSemigroup).unwrap()),
        ((4, 1), law_zero_absorb()),
        ((4, 2), law_mult_over_sum()),
        ((4, 3), law_unit_absorb(Commutativity::Noncomm)),
    ];
    ring.into_iter()
        .map(|((i, j), l)| (format!("ring3({i},{j})"), l))
        .chain(rig.into_iter().map(|((i, j), l)| (format!("rig({i},{j})"), l)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    /// Monoids: `Pointed ∘ NonunitalSemigroup`.
    Monoid,
    /// Commutative monoids: `Pointed ∘ NonunitalCommSemigroup`.
    CMonoid,
    /// Commutative rings: `FreeAbelianGroup ∘ FreeCommMonoid`.
    Ring2,
    /// Rings, from [`ring3_series`].
    Ring3,
    /// Rigs, from [`rig_series`].
    Rig,
}

impl Theory {
    pub const ALL: [Theory; 5] = [Theory::Monoid, Theory::CMonoid, Theory::Ring2, Theory::Ring3, Theory::Rig];

    pub fn id(self) -> &'static str {
        match self {
            Theory::Monoid => "monoid",
            Theory::CMonoid => "cmonoid",
            Theory::Ring2 => "ring2",
            Theory::Ring3 => "ring3",
            Theory::Rig => "rig",
        }
    }

    pub fn series(self) -> DistributiveSeries<Sets> {
        let pair = |name: &str, outer: Zoo, inner: Zoo, law: ZooLaw| {
            DistributiveSeries::new(name, vec![outer.arc(), inner.arc()], [((2, 1), law.arc())])
                .expect("law matches its monads")
        };
        match self {
            Theory::Monoid => pair(
                "monoid",
                Zoo::Pointed,
                Zoo::NonunitalSemigroup,
                law_unit_absorb(Commutativity::Noncomm),
            ),
            Theory::CMonoid => pair(
                "cmonoid",
                Zoo::Pointed,
                Zoo::NonunitalCommSemigroup,
                law_unit_absorb(Commutativity::Comm),
            ),
            Theory::Ring2 => pair(
                "ring2",
                Zoo::FreeAbelianGroup,
                Zoo::FreeCommMonoid,
                law_mult_over_add(Commutativity::Comm),
            ),
            Theory::Ring3 => ring3_series(),
            Theory::Rig => rig_series(),
        }
    }

    /// Layers of the composite, outermost first.
    pub fn layers(self) -> Vec<Zoo> {
        match self {
            Theory::Monoid => vec![Zoo::Pointed, Zoo::NonunitalSemigroup],
            Theory::CMonoid => vec![Zoo::Pointed, Zoo::NonunitalCommSemigroup],
            Theory::Ring2 => vec![Zoo::FreeAbelianGroup, Zoo::FreeCommMonoid],
            Theory::Ring3 => vec![Zoo::FreeAbelianGroup, Zoo::Pointed, Zoo::NonunitalSemigroup],
            Theory::Rig => vec![
                Zoo::AdjoinZero,
                Zoo::NonunitalCommSemigroup,
                Zoo::Pointed,
                Zoo::NonunitalSemigroup,
            ],
        }
    }

    /// The composite monad, right-nested.
    pub fn monad(self) -> MonadRef<Sets> {
        let series = self.series();
        compose_series(&series, &Route::right_nested(1, series.len())).expect("route covers the series")
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theory {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theory::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| format!("unknown theory `{s}`"))
    }
}

struct Evaluator {
    theory: Theory,
    layers: Vec<Zoo>,
    monad: MonadRef<Sets>,
}

impl Evaluator {
    fn position(&self, z: Zoo) -> Option<usize> {
        self.layers.iter().position(|l| *l == z)
    }

    fn unsupported<T>(&self, node: &str) -> Result<T> {
        Err(Error::UnsupportedNode {
            theory: self.theory.id().into(),
            node: node.into(),
        })
    }

    /// Interpret `w ∈ L_p(M X)` as an element of `M X`.
    fn embed(&self, p: usize, w: Term) -> Result<Term> {
        let below = &self.layers[p + 1..];
        let eta_below = |y: &Term| Ok(below.iter().rev().fold(y.clone(), |acc, l| l.unit(&acc)));
        let mut v = self.layers[p].map(&w, &eta_below)?;
        for l in self.layers[..p].iter().rev() {
            v = l.unit(&v);
        }
        self.monad.mult(&v)
    }

    fn sum_layer(&self) -> Option<(usize, Zoo)> {
        [Zoo::FreeAbelianGroup, Zoo::NonunitalCommSemigroup]
            .into_iter()
            .find_map(|z| self.position(z).map(|p| (p, z)))
            .filter(|_| !matches!(self.theory, Theory::CMonoid))
    }

    fn sum(&self, node: &str, entries: Vec<(Term, i64)>) -> Result<Term> {
        match self.sum_layer() {
            Some((p, Zoo::FreeAbelianGroup)) => self.embed(p, Term::comb(entries)),
            Some((p, _)) if entries.iter().all(|(_, c)| *c > 0) => {
                self.embed(p, Term::bag(entries.into_iter().map(|(t, c)| (t, c as u64))))
            }
            _ => self.unsupported(node),
        }
    }

    fn product(&self, factors: Vec<Term>) -> Result<Term> {
        let p = match self.theory {
            Theory::Ring2 => 1,
            _ => self.layers.len() - 1,
        };
        let w = match self.layers[p] {
            Zoo::NonunitalSemigroup | Zoo::FreeMonoid => Term::Seq(factors),
            _ => Term::bag(factors.into_iter().map(|f| (f, 1))),
        };
        self.embed(p, w)
    }

    fn one(&self) -> Result<Term> {
        match self.position(Zoo::Pointed) {
            Some(p) => self.embed(p, Term::Const(Constant::Unit)),
            None => self.product(vec![]),
        }
    }

    fn zero(&self) -> Result<Term> {
        if let Some(p) = self.position(Zoo::AdjoinZero) {
            return self.embed(p, Term::Const(Constant::Zero));
        }
        match self.sum_layer() {
            Some((p, Zoo::FreeAbelianGroup)) => self.embed(p, Term::comb([])),
            _ => self.unsupported("Zero"),
        }
    }

    fn eval(&self, e: &Expr) -> Result<Term> {
        match e {
            Expr::Var(s) => Ok(self.monad.unit(&Term::Gen(s.clone()))),
            Expr::One => self.one(),
            Expr::Zero => self.zero(),
            Expr::IntLit(0) => self.zero(),
            Expr::IntLit(1) => self.one(),
            Expr::IntLit(n) => {
                let one = self.one()?;
                let n = i64::try_from(*n).map_err(|_| Error::UnsupportedNode {
                    theory: self.theory.id().into(),
                    node: format!("IntLit {n}"),
                })?;
                self.sum("IntLit", vec![(one, n)])
            }
            Expr::Add(l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                self.sum("Add", vec![(a, 1), (b, 1)])
            }
            Expr::Neg(x) => {
                if !matches!(self.sum_layer(), Some((_, Zoo::FreeAbelianGroup))) {
                    return self.unsupported("Neg");
                }
                let a = self.eval(x)?;
                self.sum("Neg", vec![(a, -1)])
            }
            Expr::Mul(l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                self.product(vec![a, b])
            }
        }
    }
}

/// Evaluate `e` in the free algebra of `theory`: variables enter through the
/// composite unit, each operation builds a one-layer term and the composite
/// multiplication flattens it.
pub fn normalize_expr(theory: Theory, e: &Expr) -> Result<Term> {
    let ev = Evaluator {
        theory,
        layers: theory.layers(),
        monad: theory.monad(),
    };
    ev.eval(e)
}

/// Render a normal form of `theory` as `a*c + 2*b - c`.
pub fn pretty(theory: Theory, t: &Term) -> String {
    match theory {
        Theory::Monoid | Theory::CMonoid => monomial(t),
        Theory::Ring2 | Theory::Ring3 => match t {
            Term::Comb(v) => polynomial(v.iter().map(|(m, c)| (m, *c))),
            other => other.to_string(),
        },
        Theory::Rig => match t {
            Term::Const(Constant::Zero) => "0".into(),
            Term::Inj(inner) => match inner.as_ref() {
                Term::Bag(v) => polynomial(v.iter().map(|(m, c)| (m, *c as i64))),
                other => other.to_string(),
            },
            other => other.to_string(),
        },
    }
}

fn monomial(t: &Term) -> String {
    match t {
        Term::Const(Constant::Unit) => "1".into(),
        Term::Inj(x) => monomial(x),
        Term::Gen(s) => s.name().into(),
        Term::Seq(v) if v.is_empty() => "1".into(),
        Term::Seq(v) => v.iter().map(monomial).collect::<Vec<_>>().join("*"),
        Term::Bag(v) if v.is_empty() => "1".into(),
        Term::Bag(v) => v
            .iter()
            .flat_map(|(x, m)| std::iter::repeat(monomial(x)).take(*m as usize))
            .collect::<Vec<_>>()
            .join("*"),
        other => other.to_string(),
    }
}

fn polynomial<'a>(entries: impl Iterator<Item = (&'a Term, i64)>) -> String {
    let mut out = String::new();
    for (k, (m, c)) in entries.enumerate() {
        let mono = monomial(m);
        let mag = c.unsigned_abs();
        let body = match (mono.as_str(), mag) {
            ("1", _) => mag.to_string(),
            (_, 1) => mono,
            _ => format!("{mag}*{mono}"),
        };
        match (k, c < 0) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Carrier;
    use crate::zoo::parse_expr;

    fn norm(theory: Theory, src: &str) -> String {
        let x = Carrier::generators(4);
        let e = parse_expr(src, &x).unwrap();
        pretty(theory, &normalize_expr(theory, &e).unwrap())
    }

    #[test]
    fn ring3_examples() {
        assert_eq!(norm(Theory::Ring3, "(a+b)*(c+d)"), "a*c + a*d + b*c + b*d");
        assert_eq!(norm(Theory::Ring3, "a - a"), "0");
        assert_eq!(norm(Theory::Ring3, "b*a - 2*a*b + 1"), "1 - 2*a*b + b*a");
        assert_eq!(norm(Theory::Ring3, "3 - 1 - 1 - 1"), "0");
        assert_eq!(norm(Theory::Ring3, "(1 + a)*(1 - a)"), "1 - a*a");
    }

    #[test]
    fn ring2_is_commutative() {
        assert_eq!(norm(Theory::Ring2, "(a+b)*(c+d)"), "a*c + a*d + b*c + b*d");
        assert_eq!(norm(Theory::Ring2, "a*b - b*a"), "0");
        // multisets compare entrywise, so {a, b} sorts before {a^2}
        assert_eq!(norm(Theory::Ring2, "(a+b)*(a+b)"), "2*a*b + a*a + b*b");
    }

    #[test]
    fn rig_examples() {
        assert_eq!(norm(Theory::Rig, "a*0 + b"), "b");
        assert_eq!(norm(Theory::Rig, "0 + 0"), "0");
        assert_eq!(norm(Theory::Rig, "(a+1)*(a+1)"), "1 + 2*a + a*a");
        assert!(matches!(
            normalize_expr(Theory::Rig, &Expr::neg(Expr::One)),
            Err(Error::UnsupportedNode { .. })
        ));
    }

    #[test]
    fn monoid_examples() {
        assert_eq!(norm(Theory::Monoid, "a*1*b"), "a*b");
        assert_eq!(norm(Theory::Monoid, "1*1"), "1");
        assert_eq!(norm(Theory::CMonoid, "b*a*b"), "a*b*b");
        assert!(matches!(
            normalize_expr(Theory::Monoid, &Expr::add(Expr::One, Expr::One)),
            Err(Error::UnsupportedNode { .. })
        ));
        assert!(matches!(
            normalize_expr(Theory::CMonoid, &Expr::Zero),
            Err(Error::UnsupportedNode { .. })
        ));
    }

    #[test]
    fn ring3_normal_form_shape() {
        let x = Carrier::generators(2);
        let e = parse_expr("a*b + 1", &x).unwrap();
        let t = normalize_expr(Theory::Ring3, &e).unwrap();
        let (a, b) = (x.gen("a").unwrap(), x.gen("b").unwrap());
        assert_eq!(
            t,
            Term::comb([
                (Term::Const(Constant::Unit), 1),
                (Term::inj(Term::Seq(vec![a, b])), 1)
            ])
        );
    }
}
