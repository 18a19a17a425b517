//! The term universe: finite generator carriers and normal-form terms.
//!
//! A [`Term`] carries no monad tag of its own. The monad that reads it decides
//! which layer is which, so the same tree can be an element of `M(Y)` for an
//! opaque `Y` or of a fully nested composite `T_1 ⋯ T_n(X)`. Adjoined constants
//! are always paired with explicit [`Term::Inj`] wrappers on the other summand,
//! which keeps the layers unambiguous when several pointed monads are stacked.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on the number of terms any single enumeration may produce.
pub const DEFAULT_CEILING: usize = 1_000_000;

static CEILING: AtomicUsize = AtomicUsize::new(DEFAULT_CEILING);

/// Current enumeration ceiling.
pub fn enumeration_ceiling() -> usize {
    CEILING.load(AtomicOrdering::Relaxed)
}

/// Replace the enumeration ceiling (process wide).
pub fn set_enumeration_ceiling(ceiling: usize) {
    CEILING.store(ceiling.max(1), AtomicOrdering::Relaxed);
}

pub(crate) fn check_ceiling(count: usize) -> Result<()> {
    let ceiling = enumeration_ceiling();
    if count > ceiling {
        Err(Error::BoundTooLarge { ceiling })
    } else {
        Ok(())
    }
}

/// A generator of a carrier. Ordered by its position in the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sym {
    rank: u32,
    name: Arc<str>,
}

impl Sym {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl Ord for Sym {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.name.cmp(&other.name))
    }
}

impl PartialOrd for Sym {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered finite set of generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    syms: Vec<Sym>,
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut syms: Vec<Sym> = Vec::new();
        for (rank, name) in names.into_iter().enumerate() {
            let name = name.as_ref();
            if syms.iter().any(|s| s.name() == name) {
                return Err(Error::DuplicateGenerator(name.to_string()));
            }
            syms.push(Sym {
                rank: rank as u32,
                name: Arc::from(name),
            });
        }
        Ok(Carrier { syms })
    }

    /// `k` generators named `a`, `b`, `c`, ... (then `g26`, `g27`, ...).
    pub fn generators(k: usize) -> Self {
        let names = (0..k).map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("g{i}")
            }
        });
        Carrier::new(names).expect("generated names are distinct")
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn syms(&self) -> &[Sym] {
        &self.syms
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.syms.iter().map(|s| s.name())
    }

    pub fn sym(&self, name: &str) -> Result<&Sym> {
        self.syms
            .iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The generator `name` as a bare term.
    pub fn gen(&self, name: &str) -> Result<Term> {
        self.sym(name).map(|s| Term::Gen(s.clone()))
    }

    /// All generators as terms, in carrier order.
    pub fn terms(&self) -> Vec<Term> {
        self.syms.iter().cloned().map(Term::Gen).collect()
    }

    pub fn contains(&self, t: &Term) -> bool {
        matches!(t, Term::Gen(s) if self.syms.contains(s))
    }
}

/// Adjoined constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constant {
    /// The adjoined point of the pointed-set monad (a multiplicative unit).
    Unit,
    /// The adjoined zero.
    Zero,
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constant::Unit => f.write_str("1"),
            Constant::Zero => f.write_str("0"),
        }
    }
}

/// A normal-form term. Bags and combinations are kept sorted with positive
/// multiplicities and nonzero coefficients respectively.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(Constant),
    Gen(Sym),
    /// Left injection into `Y ⊔ {c}`.
    Inj(Box<Term>),
    /// A word (free monoid or nonunital semigroup).
    Seq(Vec<Term>),
    /// A multiset (free commutative monoid or its nonunital part).
    Bag(Vec<(Term, u64)>),
    /// An integer combination (free abelian group).
    Comb(Vec<(Term, i64)>),
}

impl Term {
    pub fn inj(t: Term) -> Term {
        Term::Inj(Box::new(t))
    }

    /// Sort and merge bag entries, dropping zero multiplicities.
    pub fn bag<I: IntoIterator<Item = (Term, u64)>>(entries: I) -> Term {
        let mut acc: BTreeMap<Term, u64> = BTreeMap::new();
        for (t, m) in entries {
            if m > 0 {
                *acc.entry(t).or_insert(0) += m;
            }
        }
        Term::Bag(acc.into_iter().collect())
    }

    /// Sort and merge combination entries, dropping zero coefficients.
    pub fn comb<I: IntoIterator<Item = (Term, i64)>>(entries: I) -> Term {
        let mut acc: BTreeMap<Term, i64> = BTreeMap::new();
        for (t, c) in entries {
            *acc.entry(t).or_insert(0) += c;
        }
        Term::Comb(acc.into_iter().filter(|(_, c)| *c != 0).collect())
    }

    /// Term size: generator occurrences plus adjoined constants, with bag
    /// multiplicities and absolute coefficients counted. A nested entry of
    /// size zero (an empty word or the zero combination) still weighs one so
    /// that every bounded enumeration is finite.
    pub fn size(&self) -> usize {
        fn weight(t: &Term) -> usize {
            t.size().max(1)
        }
        match self {
            Term::Const(_) | Term::Gen(_) => 1,
            Term::Inj(t) => t.size(),
            Term::Seq(v) => v.iter().map(weight).sum(),
            Term::Bag(v) => v.iter().map(|(t, m)| weight(t) * *m as usize).sum(),
            Term::Comb(v) => v
                .iter()
                .map(|(t, c)| weight(t) * c.unsigned_abs() as usize)
                .sum(),
        }
    }

    /// Number of generator occurrences only.
    pub fn generator_count(&self) -> usize {
        match self {
            Term::Const(_) => 0,
            Term::Gen(_) => 1,
            Term::Inj(t) => t.generator_count(),
            Term::Seq(v) => v.iter().map(Term::generator_count).sum(),
            Term::Bag(v) => v
                .iter()
                .map(|(t, m)| t.generator_count() * *m as usize)
                .sum(),
            Term::Comb(v) => v
                .iter()
                .map(|(t, c)| t.generator_count() * c.unsigned_abs() as usize)
                .sum(),
        }
    }

    /// Apply `f` to every generator leaf, renormalizing bags and combinations.
    pub fn rename(&self, f: &dyn Fn(&Sym) -> Term) -> Term {
        match self {
            Term::Const(c) => Term::Const(*c),
            Term::Gen(s) => f(s),
            Term::Inj(t) => Term::inj(t.rename(f)),
            Term::Seq(v) => Term::Seq(v.iter().map(|t| t.rename(f)).collect()),
            Term::Bag(v) => Term::bag(v.iter().map(|(t, m)| (t.rename(f), *m))),
            Term::Comb(v) => Term::comb(v.iter().map(|(t, c)| (t.rename(f), *c))),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => write!(f, "{c}"),
            Term::Gen(s) => f.write_str(s.name()),
            Term::Inj(t) => write!(f, "{t}"),
            Term::Seq(v) => {
                f.write_str("[")?;
                for (k, t) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str("]")
            }
            Term::Bag(v) => {
                f.write_str("{")?;
                for (k, (t, m)) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    if *m == 1 {
                        write!(f, "{t}")?;
                    } else {
                        write!(f, "{t}^{m}")?;
                    }
                }
                f.write_str("}")
            }
            Term::Comb(v) => {
                if v.is_empty() {
                    return f.write_str("<0>");
                }
                f.write_str("<")?;
                for (k, (t, c)) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    if *c == 1 {
                        write!(f, "{t}")?;
                    } else {
                        write!(f, "{c}.{t}")?;
                    }
                }
                f.write_str(">")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_rejects_duplicates() {
        assert_eq!(
            Carrier::new(["a", "b", "a"]),
            Err(Error::DuplicateGenerator("a".into()))
        );
    }

    #[test]
    fn carrier_order_drives_term_order() {
        let x = Carrier::new(["z", "a"]).unwrap();
        let z = x.gen("z").unwrap();
        let a = x.gen("a").unwrap();
        assert!(z < a);
        assert_eq!(
            Term::bag([(a.clone(), 1), (z.clone(), 2)]),
            Term::Bag(vec![(z, 2), (a, 1)])
        );
    }

    #[test]
    fn comb_drops_cancelled_entries() {
        let x = Carrier::generators(2);
        let a = x.gen("a").unwrap();
        let b = x.gen("b").unwrap();
        let t = Term::comb([(a.clone(), 2), (b.clone(), 1), (a, -2)]);
        assert_eq!(t, Term::Comb(vec![(b, 1)]));
    }

    #[test]
    fn size_counts_constants_and_coefficients() {
        let x = Carrier::generators(2);
        let a = x.gen("a").unwrap();
        assert_eq!(Term::Const(Constant::Unit).size(), 1);
        assert_eq!(Term::comb([(a.clone(), -3)]).size(), 3);
        assert_eq!(Term::Seq(vec![]).size(), 0);
        assert_eq!(Term::Seq(vec![Term::Seq(vec![]), a.clone()]).size(), 2);
        assert_eq!(Term::inj(Term::Seq(vec![a.clone(), a])).size(), 2);
    }

    #[test]
    fn unknown_generator() {
        let x = Carrier::generators(1);
        assert_eq!(x.gen("q"), Err(Error::UnknownGenerator("q".into())));
    }
}
