use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monad::{Monad, MonadRef, Sets};
use crate::term::{check_ceiling, Carrier, Constant, Term};

/// The concrete monads on finite carriers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Zoo {
    FreeMonoid,
    NonunitalSemigroup,
    FreeCommMonoid,
    NonunitalCommSemigroup,
    FreeAbelianGroup,
    /// `Y ↦ Y ⊔ {1}`.
    Pointed,
    /// `Y ↦ Y ⊔ {0}`.
    AdjoinZero,
    Identity,
}

impl Zoo {
    /// The seven monads of the examples (the identity monad excluded).
    pub const ALL: [Zoo; 7] = [
        Zoo::FreeMonoid,
        Zoo::NonunitalSemigroup,
        Zoo::FreeCommMonoid,
        Zoo::NonunitalCommSemigroup,
        Zoo::FreeAbelianGroup,
        Zoo::Pointed,
        Zoo::AdjoinZero,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Zoo::FreeMonoid => "FreeMonoid",
            Zoo::NonunitalSemigroup => "NonunitalSemigroup",
            Zoo::FreeCommMonoid => "FreeCommMonoid",
            Zoo::NonunitalCommSemigroup => "NonunitalCommSemigroup",
            Zoo::FreeAbelianGroup => "FreeAbelianGroup",
            Zoo::Pointed => "Pointed",
            Zoo::AdjoinZero => "AdjoinZero",
            Zoo::Identity => "Identity",
        }
    }

    pub fn arc(self) -> MonadRef<Sets> {
        Arc::new(self)
    }

    /// Enumerate `M(X)` for a generator carrier.
    pub fn enumerate(self, carrier: &Carrier, bound: usize) -> Result<Vec<Term>> {
        if bound == 0 {
            return Err(Error::InvalidBound);
        }
        self.apply(&carrier.terms(), bound)
    }

    fn nonempty(self) -> bool {
        matches!(self, Zoo::NonunitalSemigroup | Zoo::NonunitalCommSemigroup)
    }

    fn constant(self) -> Option<Constant> {
        match self {
            Zoo::Pointed => Some(Constant::Unit),
            Zoo::AdjoinZero => Some(Constant::Zero),
            _ => None,
        }
    }

    fn mismatch(self, detail: impl Into<String>) -> Error {
        Error::shape(self.id(), detail)
    }

    fn seq<'a>(self, t: &'a Term) -> Result<&'a [Term]> {
        match t {
            Term::Seq(v) if self.nonempty() && v.is_empty() => Err(self.mismatch("empty word")),
            Term::Seq(v) => Ok(v),
            other => Err(self.mismatch(format!("expected a word, found `{other}`"))),
        }
    }

    fn bag<'a>(self, t: &'a Term) -> Result<&'a [(Term, u64)]> {
        match t {
            Term::Bag(v) if self.nonempty() && v.is_empty() => Err(self.mismatch("empty multiset")),
            Term::Bag(v) => Ok(v),
            other => Err(self.mismatch(format!("expected a multiset, found `{other}`"))),
        }
    }

    fn comb(self, t: &Term) -> Result<&[(Term, i64)]> {
        match t {
            Term::Comb(v) => Ok(v),
            other => Err(self.mismatch(format!("expected a combination, found `{other}`"))),
        }
    }
}

impl fmt::Display for Zoo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Zoo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let all = Zoo::ALL.iter().copied().chain([Zoo::Identity]);
        for z in all {
            if z.id().eq_ignore_ascii_case(s) {
                return Ok(z);
            }
        }
        match s {
            "Pointed-1" | "pointed-1" => Ok(Zoo::Pointed),
            "Adjoin-0" | "adjoin-0" => Ok(Zoo::AdjoinZero),
            _ => Err(format!("unknown monad `{s}`")),
        }
    }
}

impl Monad<Sets> for Zoo {
    fn name(&self) -> String {
        self.id().to_string()
    }

    fn unit(&self, x: &Term) -> Term {
        match self {
            Zoo::FreeMonoid | Zoo::NonunitalSemigroup => Term::Seq(vec![x.clone()]),
            Zoo::FreeCommMonoid | Zoo::NonunitalCommSemigroup => Term::Bag(vec![(x.clone(), 1)]),
            Zoo::FreeAbelianGroup => Term::Comb(vec![(x.clone(), 1)]),
            Zoo::Pointed | Zoo::AdjoinZero => Term::inj(x.clone()),
            Zoo::Identity => x.clone(),
        }
    }

    fn mult(&self, tt: &Term) -> Result<Term> {
        let z = *self;
        match z {
            Zoo::FreeMonoid | Zoo::NonunitalSemigroup => {
                let mut out = Vec::new();
                for inner in z.seq(tt)? {
                    out.extend_from_slice(z.seq(inner)?);
                }
                Ok(Term::Seq(out))
            }
            Zoo::FreeCommMonoid | Zoo::NonunitalCommSemigroup => {
                let mut acc: BTreeMap<Term, u64> = BTreeMap::new();
                for (inner, m) in z.bag(tt)? {
                    for (y, k) in z.bag(inner)? {
                        *acc.entry(y.clone()).or_insert(0) += m * k;
                    }
                }
                Ok(Term::Bag(acc.into_iter().collect()))
            }
            Zoo::FreeAbelianGroup => {
                let mut entries = Vec::new();
                for (inner, c) in z.comb(tt)? {
                    for (y, k) in z.comb(inner)? {
                        entries.push((y.clone(), c * k));
                    }
                }
                Ok(Term::comb(entries))
            }
            Zoo::Pointed | Zoo::AdjoinZero => {
                let k = z.constant().unwrap();
                match tt {
                    Term::Const(c) if *c == k => Ok(tt.clone()),
                    Term::Inj(inner) => match inner.as_ref() {
                        Term::Const(c) if *c == k => Ok(Term::Const(k)),
                        Term::Inj(_) => Ok(inner.as_ref().clone()),
                        other => Err(z.mismatch(format!("expected an injection, found `{other}`"))),
                    },
                    other => Err(z.mismatch(format!("expected `{k}` or an injection, found `{other}`"))),
                }
            }
            Zoo::Identity => Ok(tt.clone()),
        }
    }

    fn map(&self, t: &Term, f: &dyn Fn(&Term) -> Result<Term>) -> Result<Term> {
        let z = *self;
        match z {
            Zoo::FreeMonoid | Zoo::NonunitalSemigroup => {
                Ok(Term::Seq(z.seq(t)?.iter().map(f).collect::<Result<_>>()?))
            }
            Zoo::FreeCommMonoid | Zoo::NonunitalCommSemigroup => {
                let mapped = z
                    .bag(t)?
                    .iter()
                    .map(|(y, m)| f(y).map(|fy| (fy, *m)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Term::bag(mapped))
            }
            Zoo::FreeAbelianGroup => {
                let mapped = z
                    .comb(t)?
                    .iter()
                    .map(|(y, c)| f(y).map(|fy| (fy, *c)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Term::comb(mapped))
            }
            Zoo::Pointed | Zoo::AdjoinZero => {
                let k = z.constant().unwrap();
                match t {
                    Term::Const(c) if *c == k => Ok(t.clone()),
                    Term::Inj(y) => Ok(Term::inj(f(y)?)),
                    other => Err(z.mismatch(format!("expected `{k}` or an injection, found `{other}`"))),
                }
            }
            Zoo::Identity => f(t),
        }
    }

    fn apply(&self, base: &Vec<Term>, bound: usize) -> Result<Vec<Term>> {
        let weights: Vec<usize> = base.iter().map(|t| t.size().max(1)).collect();
        let mut out: Vec<Term> = Vec::new();
        match self {
            Zoo::FreeMonoid | Zoo::NonunitalSemigroup => {
                let mut stack = Vec::new();
                words(base, &weights, bound, &mut stack, &mut out)?;
                if self.nonempty() {
                    out.retain(|t| !matches!(t, Term::Seq(v) if v.is_empty()));
                }
            }
            Zoo::FreeCommMonoid | Zoo::NonunitalCommSemigroup => {
                let mut counts = Vec::new();
                counted(&weights, bound, 0, &mut counts, false, &mut |cs| {
                    out.push(Term::bag(
                        cs.iter().enumerate().map(|(k, c)| (base[k].clone(), *c as u64)),
                    ));
                    check_ceiling(out.len())
                })?;
                if self.nonempty() {
                    out.retain(|t| !matches!(t, Term::Bag(v) if v.is_empty()));
                }
            }
            Zoo::FreeAbelianGroup => {
                let mut counts = Vec::new();
                counted(&weights, bound, 0, &mut counts, true, &mut |cs| {
                    out.push(Term::comb(
                        cs.iter().enumerate().map(|(k, c)| (base[k].clone(), *c)),
                    ));
                    check_ceiling(out.len())
                })?;
            }
            Zoo::Pointed | Zoo::AdjoinZero => {
                out.extend(
                    base.iter()
                        .filter(|t| t.size() <= bound)
                        .map(|t| Term::inj(t.clone())),
                );
                out.push(Term::Const(self.constant().unwrap()));
                check_ceiling(out.len())?;
            }
            Zoo::Identity => out.extend(base.iter().filter(|t| t.size() <= bound).cloned()),
        }
        out.sort_by_key(Term::size);
        Ok(out)
    }
}

/// All words over `base` of total weight at most `budget`, in prefix order.
fn words(
    base: &[Term],
    weights: &[usize],
    budget: usize,
    stack: &mut Vec<Term>,
    out: &mut Vec<Term>,
) -> Result<()> {
    out.push(Term::Seq(stack.clone()));
    check_ceiling(out.len())?;
    for (k, t) in base.iter().enumerate() {
        if weights[k] <= budget {
            stack.push(t.clone());
            words(base, weights, budget - weights[k], stack, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Every assignment of a count to each base element with `Σ |count|·weight`
/// at most `budget`. Counts run 0, 1, 2, ... or, when `signed`, 0, 1, -1, 2, -2, ...
fn counted(
    weights: &[usize],
    budget: usize,
    k: usize,
    counts: &mut Vec<i64>,
    signed: bool,
    emit: &mut dyn FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if k == weights.len() {
        return emit(counts);
    }
    let max = (budget / weights[k]) as i64;
    let mut options = vec![0i64];
    for c in 1..=max {
        options.push(c);
        if signed {
            options.push(-c);
        }
    }
    for c in options {
        counts.push(c);
        let used = c.unsigned_abs() as usize * weights[k];
        counted(weights, budget - used, k + 1, counts, signed, emit)?;
        counts.pop();
    }
    Ok(())
}

/// The free monoid with a multiplication that drops the last letter of the
/// flattened word. Fails the unit laws; used as a negative control.
pub struct DropLastMonoid;

impl Monad<Sets> for DropLastMonoid {
    fn name(&self) -> String {
        "DropLastMonoid".into()
    }

    fn unit(&self, x: &Term) -> Term {
        Zoo::FreeMonoid.unit(x)
    }

    fn mult(&self, tt: &Term) -> Result<Term> {
        let mut flat = Zoo::FreeMonoid.mult(tt)?;
        if let Term::Seq(v) = &mut flat {
            v.pop();
        }
        Ok(flat)
    }

    fn map(&self, t: &Term, f: &dyn Fn(&Term) -> Result<Term>) -> Result<Term> {
        Zoo::FreeMonoid.map(t, f)
    }

    fn apply(&self, base: &Vec<Term>, bound: usize) -> Result<Vec<Term>> {
        Zoo::FreeMonoid.apply(base, bound)
    }
}
