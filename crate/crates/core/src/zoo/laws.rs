//! The distributive laws between zoo monads.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monad::{DistLaw, LawRef, MonadRef, Sets};
use crate::term::{Constant, Term};
use crate::zoo::Zoo;

/// Which products a multiplication layer forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Commutativity {
    Comm,
    Noncomm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    /// Products of sums to sums of products.
    MultOverAdd,
    /// Delete adjoined units from a product.
    UnitAbsorb,
    /// A product with a zero factor is zero.
    ZeroAbsorb,
    /// The adjoined unit becomes a one-term sum.
    PointEmbed,
    /// Delete zero summands.
    AddZero,
    /// Reorder the two adjoined constants.
    PointZero,
}

/// A distributive law `λ : S T ⇒ T S` between two zoo monads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooLaw {
    kind: LawKind,
    outer: Zoo,
    inner: Zoo,
}

impl ZooLaw {
    pub fn new(kind: LawKind, outer: Zoo, inner: Zoo) -> Result<Self> {
        use Zoo::*;
        let ok = match kind {
            LawKind::MultOverAdd => {
                matches!(outer, FreeMonoid | NonunitalSemigroup | FreeCommMonoid | NonunitalCommSemigroup)
                    && matches!(inner, FreeAbelianGroup | NonunitalCommSemigroup)
            }
            LawKind::UnitAbsorb => {
                matches!(outer, NonunitalSemigroup | NonunitalCommSemigroup) && inner == Pointed
            }
            LawKind::ZeroAbsorb => {
                matches!(outer, NonunitalSemigroup | NonunitalCommSemigroup) && inner == AdjoinZero
            }
            LawKind::PointEmbed => {
                outer == Pointed && matches!(inner, FreeAbelianGroup | NonunitalCommSemigroup)
            }
            LawKind::AddZero => outer == NonunitalCommSemigroup && inner == AdjoinZero,
            LawKind::PointZero => outer == Pointed && inner == AdjoinZero,
        };
        if ok {
            Ok(ZooLaw { kind, outer, inner })
        } else {
            Err(Error::shape(
                format!("{kind:?}"),
                format!("no such law of {outer} over {inner}"),
            ))
        }
    }

    pub fn kind(&self) -> LawKind {
        self.kind
    }

    pub fn arc(self) -> LawRef<Sets> {
        Arc::new(self)
    }

    /// Factors of a product layer, with multiplicities expanded.
    fn factors<'a>(&self, t: &'a Term) -> Result<Vec<&'a Term>> {
        match (self.outer, t) {
            (Zoo::FreeMonoid, Term::Seq(v)) => Ok(v.iter().collect()),
            (Zoo::NonunitalSemigroup, Term::Seq(v)) if !v.is_empty() => Ok(v.iter().collect()),
            (Zoo::FreeCommMonoid, Term::Bag(v)) => Ok(expand(v)),
            (Zoo::NonunitalCommSemigroup, Term::Bag(v)) if !v.is_empty() => Ok(expand(v)),
            (z, other) => Err(Error::shape(z.id(), format!("expected a product, found `{other}`"))),
        }
    }

    /// Rebuild a product layer from factors.
    fn product(&self, factors: Vec<Term>) -> Term {
        match self.outer {
            Zoo::FreeMonoid | Zoo::NonunitalSemigroup => Term::Seq(factors),
            _ => Term::bag(factors.into_iter().map(|f| (f, 1))),
        }
    }

    /// Summands of a sum layer with their (integer) coefficients.
    fn summands<'a>(&self, t: &'a Term) -> Result<Vec<(&'a Term, i64)>> {
        match (self.inner, t) {
            (Zoo::FreeAbelianGroup, Term::Comb(v)) => Ok(v.iter().map(|(s, c)| (s, *c)).collect()),
            (Zoo::NonunitalCommSemigroup, Term::Bag(v)) if !v.is_empty() => {
                Ok(v.iter().map(|(s, m)| (s, *m as i64)).collect())
            }
            (z, other) => Err(Error::shape(z.id(), format!("expected a sum, found `{other}`"))),
        }
    }

    fn sum(&self, entries: Vec<(Term, i64)>) -> Term {
        match self.inner {
            Zoo::FreeAbelianGroup => Term::comb(entries),
            _ => Term::bag(entries.into_iter().map(|(t, c)| (t, c as u64))),
        }
    }

    fn mult_over_add(&self, t: &Term) -> Result<Term> {
        let factors = self.factors(t)?;
        let sums = factors
            .iter()
            .map(|f| self.summands(f))
            .collect::<Result<Vec<_>>>()?;
        // row-major: the leftmost factor is the outermost loop
        let mut acc: Vec<(Vec<Term>, i64)> = vec![(Vec::new(), 1)];
        for sum in &sums {
            let mut next = Vec::with_capacity(acc.len() * sum.len());
            for (word, coeff) in &acc {
                for (s, c) in sum {
                    let mut w = word.clone();
                    w.push((*s).clone());
                    next.push((w, coeff * c));
                }
            }
            acc = next;
        }
        Ok(self.sum(acc.into_iter().map(|(w, c)| (self.product(w), c)).collect()))
    }

    fn adjoined<'a>(&self, t: &'a Term, k: Constant) -> Result<Option<&'a Term>> {
        match t {
            Term::Const(c) if *c == k => Ok(None),
            Term::Inj(y) => Ok(Some(y)),
            other => Err(Error::shape(
                self.inner.id(),
                format!("expected `{k}` or an injection, found `{other}`"),
            )),
        }
    }
}

fn expand(v: &[(Term, u64)]) -> Vec<&Term> {
    v.iter()
        .flat_map(|(t, m)| std::iter::repeat(t).take(*m as usize))
        .collect()
}

impl DistLaw<Sets> for ZooLaw {
    fn name(&self) -> String {
        let tag = match self.kind {
            LawKind::MultOverAdd => "mult-over-add",
            LawKind::UnitAbsorb => "unit-absorb",
            LawKind::ZeroAbsorb => "zero-absorb",
            LawKind::PointEmbed => "point-embed",
            LawKind::AddZero => "add-zero",
            LawKind::PointZero => "point-zero",
        };
        format!("{tag}({}/{})", self.outer, self.inner)
    }

    fn outer(&self) -> MonadRef<Sets> {
        self.outer.arc()
    }

    fn inner(&self) -> MonadRef<Sets> {
        self.inner.arc()
    }

    fn apply(&self, t: &Term) -> Result<Term> {
        match self.kind {
            LawKind::MultOverAdd => self.mult_over_add(t),
            LawKind::UnitAbsorb => {
                let mut kept = Vec::new();
                for f in self.factors(t)? {
                    if let Some(y) = self.adjoined(f, Constant::Unit)? {
                        kept.push(y.clone());
                    }
                }
                if kept.is_empty() {
                    Ok(Term::Const(Constant::Unit))
                } else {
                    Ok(Term::inj(self.product(kept)))
                }
            }
            LawKind::ZeroAbsorb => {
                let mut kept = Vec::new();
                for f in self.factors(t)? {
                    match self.adjoined(f, Constant::Zero)? {
                        Some(y) => kept.push(y.clone()),
                        None => return Ok(Term::Const(Constant::Zero)),
                    }
                }
                Ok(Term::inj(self.product(kept)))
            }
            LawKind::PointEmbed => match t {
                Term::Const(Constant::Unit) => Ok(self.sum(vec![(t.clone(), 1)])),
                Term::Inj(s) => {
                    let entries = self
                        .summands(s)?
                        .into_iter()
                        .map(|(y, c)| (Term::inj(y.clone()), c))
                        .collect();
                    Ok(self.sum(entries))
                }
                other => Err(Error::shape("Pointed", format!("unexpected `{other}`"))),
            },
            LawKind::AddZero => {
                let Term::Bag(v) = t else {
                    return Err(Error::shape(self.outer.id(), format!("expected a sum, found `{t}`")));
                };
                if v.is_empty() {
                    return Err(Error::shape(self.outer.id(), "empty sum"));
                }
                let mut kept = Vec::new();
                for (s, m) in v {
                    if let Some(y) = self.adjoined(s, Constant::Zero)? {
                        kept.push((y.clone(), *m));
                    }
                }
                if kept.is_empty() {
                    Ok(Term::Const(Constant::Zero))
                } else {
                    Ok(Term::inj(Term::bag(kept)))
                }
            }
            LawKind::PointZero => match t {
                Term::Const(Constant::Unit) => Ok(Term::inj(t.clone())),
                Term::Inj(inner) => match inner.as_ref() {
                    Term::Const(Constant::Zero) => Ok(Term::Const(Constant::Zero)),
                    Term::Inj(_) => Ok(t.clone()),
                    other => Err(Error::shape("AdjoinZero", format!("unexpected `{other}`"))),
                },
                other => Err(Error::shape("Pointed", format!("unexpected `{other}`"))),
            },
        }
    }
}

/// `(a+b)(c+d) ↦ ac+ad+bc+bd` over the free abelian group; commutative
/// products give the free commutative ring, noncommutative (nonunital) ones
/// the multiplication layer of the three-monad ring series.
pub fn law_mult_over_add(theory: Commutativity) -> ZooLaw {
    let outer = match theory {
        Commutativity::Comm => Zoo::FreeCommMonoid,
        Commutativity::Noncomm => Zoo::NonunitalSemigroup,
    };
    ZooLaw::new(LawKind::MultOverAdd, outer, Zoo::FreeAbelianGroup).unwrap()
}

/// Products distributing over nonunital commutative sums (rigs).
pub fn law_mult_over_sum() -> ZooLaw {
    ZooLaw::new(LawKind::MultOverAdd, Zoo::NonunitalSemigroup, Zoo::NonunitalCommSemigroup).unwrap()
}

/// The adjoined point acts as a unit for the product.
pub fn law_unit_absorb(theory: Commutativity) -> ZooLaw {
    let outer = match theory {
        Commutativity::Comm => Zoo::NonunitalCommSemigroup,
        Commutativity::Noncomm => Zoo::NonunitalSemigroup,
    };
    ZooLaw::new(LawKind::UnitAbsorb, outer, Zoo::Pointed).unwrap()
}

pub fn law_zero_absorb() -> ZooLaw {
    ZooLaw::new(LawKind::ZeroAbsorb, Zoo::NonunitalSemigroup, Zoo::AdjoinZero).unwrap()
}

/// The point embeds into sums: into integer combinations (`additive = FreeAbelianGroup`)
/// or into nonunital commutative sums.
pub fn law_point_embed(additive: Zoo) -> Result<ZooLaw> {
    ZooLaw::new(LawKind::PointEmbed, Zoo::Pointed, additive)
}

/// Zero summands vanish: `x + 0 = x`.
pub fn law_add_zero() -> ZooLaw {
    ZooLaw::new(LawKind::AddZero, Zoo::NonunitalCommSemigroup, Zoo::AdjoinZero).unwrap()
}

pub fn law_point_zero() -> ZooLaw {
    ZooLaw::new(LawKind::PointZero, Zoo::Pointed, Zoo::AdjoinZero).unwrap()
}

/// A law given by an arbitrary function, for negative controls.
pub struct AdHocLaw {
    pub name: String,
    pub outer: MonadRef<Sets>,
    pub inner: MonadRef<Sets>,
    pub f: Arc<dyn Fn(&Term) -> Result<Term> + Send + Sync>,
}

impl DistLaw<Sets> for AdHocLaw {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn outer(&self) -> MonadRef<Sets> {
        self.outer.clone()
    }

    fn inner(&self) -> MonadRef<Sets> {
        self.inner.clone()
    }

    fn apply(&self, t: &Term) -> Result<Term> {
        (self.f)(t)
    }
}

/// The identity "transform" posed as a law of `FreeMonoid` over `FreeAbelianGroup`.
pub fn identity_pseudo_law() -> AdHocLaw {
    AdHocLaw {
        name: "identity(FreeMonoid/FreeAbelianGroup)".into(),
        outer: Zoo::FreeMonoid.arc(),
        inner: Zoo::FreeAbelianGroup.arc(),
        f: Arc::new(|t| Ok(t.clone())),
    }
}

/// Sums over `X ⊔ {0}` all sent to `0`.
pub fn everything_to_zero_law() -> AdHocLaw {
    AdHocLaw {
        name: "to-zero(NonunitalCommSemigroup/AdjoinZero)".into(),
        outer: Zoo::NonunitalCommSemigroup.arc(),
        inner: Zoo::AdjoinZero.arc(),
        f: Arc::new(|_| Ok(Term::Const(Constant::Zero))),
    }
}
