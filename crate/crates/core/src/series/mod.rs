//! Distributive series: `n` monads with a law for every ordered pair.
//!
//! Indexing follows the composite `T_1 T_2 ⋯ T_n` with `T_1` outermost. For
//! `i > j` the law `λ_ij : T_i T_j ⇒ T_j T_i` moves the outer `T_i` inside.

mod algebra;
mod check;
mod compose;
mod route;

use std::collections::BTreeMap;

pub use algebra::{lift_to_algebras, recombine, split_composite_algebra, Algebra, LiftedAlgebra};
pub use check::{check_distlaw, check_yang_baxter, validate_series};
pub use compose::{
    check_route_independence, compose_pair, compose_series, derive_block_law, BlockLaw, Composite,
    DEFAULT_ROUTE_LIMIT,
};
pub use route::Route;

use crate::error::{Error, Result};
use crate::monad::{LawRef, MonadRef, Universe};

pub struct DistributiveSeries<U: Universe> {
    name: String,
    monads: Vec<MonadRef<U>>,
    laws: BTreeMap<(usize, usize), LawRef<U>>,
}

impl<U: Universe> Clone for DistributiveSeries<U> {
    fn clone(&self) -> Self {
        DistributiveSeries {
            name: self.name.clone(),
            monads: self.monads.clone(),
            laws: self.laws.clone(),
        }
    }
}

impl<U: Universe> DistributiveSeries<U> {
    /// `monads[0]` is `T_1`. `laws` must contain `(i, j)` for every `n ≥ i > j ≥ 1`,
    /// with `λ_ij` of `T_i` (outer) over `T_j` (inner).
    pub fn new<I>(name: impl Into<String>, monads: Vec<MonadRef<U>>, laws: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), LawRef<U>)>,
    {
        let n = monads.len();
        let mut map = BTreeMap::new();
        for ((i, j), law) in laws {
            if !(n >= i && i > j && j >= 1) {
                return Err(Error::IndexOrder { i, j, k: 0, n });
            }
            let (outer, inner) = (law.outer().name(), law.inner().name());
            if outer != monads[i - 1].name() || inner != monads[j - 1].name() {
                return Err(Error::shape(
                    law.name(),
                    format!(
                        "law ({i}, {j}) acts on {outer}/{inner}, expected {}/{}",
                        monads[i - 1].name(),
                        monads[j - 1].name()
                    ),
                ));
            }
            map.insert((i, j), law);
        }
        for i in 1..=n {
            for j in 1..i {
                if !map.contains_key(&(i, j)) {
                    return Err(Error::MissingLaw(i, j));
                }
            }
        }
        Ok(DistributiveSeries {
            name: name.into(),
            monads,
            laws: map,
        })
    }

    /// Build a series from the opposite indexing, where `S_1 ⋯ S_n` composes with
    /// `S_n` outermost and `laws` holds `(k, l)` for `k < l`, a law
    /// `S_k S_l ⇒ S_l S_k`. The result has `T_i = S_{n+1-i}`.
    pub fn from_reversed<I>(name: impl Into<String>, monads: Vec<MonadRef<U>>, laws: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), LawRef<U>)>,
    {
        let n = monads.len();
        let flip = |k: usize| n + 1 - k;
        let mut laws_t = Vec::new();
        for ((k, l), law) in laws {
            if !(1 <= k && k < l && l <= n) {
                return Err(Error::IndexOrder { i: k, j: l, k: 0, n });
            }
            laws_t.push(((flip(k), flip(l)), law));
        }
        let mut monads_t = monads;
        monads_t.reverse();
        Self::new(name, monads_t, laws_t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.monads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monads.is_empty()
    }

    pub fn monads(&self) -> &[MonadRef<U>] {
        &self.monads
    }

    /// `T_i`, 1-based.
    pub fn monad(&self, i: usize) -> Result<&MonadRef<U>> {
        self.monads
            .get(i.wrapping_sub(1))
            .ok_or(Error::SplitOutOfRange { split: i, n: self.len() })
    }

    /// `λ_ij` for `i > j`.
    pub fn law(&self, i: usize, j: usize) -> Result<&LawRef<U>> {
        self.laws.get(&(i, j)).ok_or(Error::MissingLaw(i, j))
    }

    /// Laws in `(i, j)` order.
    pub fn laws(&self) -> impl Iterator<Item = ((usize, usize), &LawRef<U>)> {
        self.laws.iter().map(|(k, v)| (*k, v))
    }

    /// Triples `i > j > k`, lexicographically.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for k in 1..=n {
            for j in k + 1..=n {
                for i in j + 1..=n {
                    out.push((i, j, k));
                }
            }
        }
        out.sort();
        out
    }

    /// The contiguous sub-series `T_lo ⋯ T_hi`, renumbered from 1.
    pub fn slice(&self, lo: usize, hi: usize) -> Result<Self> {
        if !(1 <= lo && lo <= hi && hi <= self.len()) {
            return Err(Error::SplitOutOfRange { split: lo, n: self.len() });
        }
        let monads = self.monads[lo - 1..hi].to_vec();
        let laws = self
            .laws
            .iter()
            .filter(|((i, j), _)| *j >= lo && *i <= hi)
            .map(|((i, j), l)| ((i - lo + 1, j - lo + 1), l.clone()));
        Self::new(format!("{}[{lo}..{hi}]", self.name), monads, laws)
    }

    /// The same series with `λ_ij` replaced.
    pub fn with_law(&self, i: usize, j: usize, law: LawRef<U>) -> Result<Self> {
        let laws = self
            .laws
            .iter()
            .map(|(k, l)| (*k, if *k == (i, j) { law.clone() } else { l.clone() }));
        Self::new(self.name.clone(), self.monads.clone(), laws)
    }
}
