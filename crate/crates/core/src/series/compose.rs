use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monad::{apply_stack, diagram, CheckEntry, CheckReport, DistLaw, LawRef, Monad, MonadRef, Universe};

use super::{DistributiveSeries, Route};

/// Route comparison refuses longer series unless the caller raises the limit.
pub const DEFAULT_ROUTE_LIMIT: usize = 4;

/// The composite monad `T S` of a law `λ : S T ⇒ T S`.
/// `μ = T μ^S ∘ μ^T S S ∘ T λ S` and `η = η^T η^S`.
pub struct Composite<U: Universe> {
    top: MonadRef<U>,
    bottom: MonadRef<U>,
    law: LawRef<U>,
}

impl<U: Universe> Composite<U> {
    pub fn top(&self) -> &MonadRef<U> {
        &self.top
    }

    pub fn bottom(&self) -> &MonadRef<U> {
        &self.bottom
    }
}

/// `T S` where `law : S T ⇒ T S`. `outer` and `inner` are the monads `S` and `T`.
pub fn compose_pair<U: Universe>(outer: MonadRef<U>, inner: MonadRef<U>, law: LawRef<U>) -> MonadRef<U> {
    Arc::new(Composite {
        top: inner,
        bottom: outer,
        law,
    })
}

impl<U: Universe> Monad<U> for Composite<U> {
    fn name(&self) -> String {
        format!("({} {})", self.top.name(), self.bottom.name())
    }

    fn unit(&self, x: &U::Elem) -> U::Elem {
        self.top.unit(&self.bottom.unit(x))
    }

    fn mult(&self, tsts: &U::Elem) -> Result<U::Elem> {
        let ttss = self.top.map(tsts, &|sts| self.law.apply(sts))?;
        let tss = self.top.mult(&ttss)?;
        self.top.map(&tss, &|ss| self.bottom.mult(ss))
    }

    fn map(&self, t: &U::Elem, f: &dyn Fn(&U::Elem) -> Result<U::Elem>) -> Result<U::Elem> {
        self.top.map(t, &|s| self.bottom.map(s, f))
    }

    fn apply(&self, obj: &U::Obj, bound: usize) -> Result<U::Obj> {
        apply_stack(&[&self.top, &self.bottom], obj, bound)
    }
}

/// The law `(T_{i+1} ⋯ T_n)(T_1 ⋯ T_i) ⇒ (T_1 ⋯ T_i)(T_{i+1} ⋯ T_n)`, built from
/// adjacent swaps: each `T_b` with `b ≤ i`, in increasing order, is moved
/// leftward past `T_n, …, T_{i+1}` by `λ_{ab}` applied under the layers above it.
pub struct BlockLaw<U: Universe> {
    series: DistributiveSeries<U>,
    split: usize,
}

impl<U: Universe> BlockLaw<U> {
    pub fn split(&self) -> usize {
        self.split
    }
}

fn at_depth<U: Universe>(
    stack: &[MonadRef<U>],
    depth: usize,
    e: &U::Elem,
    f: &dyn Fn(&U::Elem) -> Result<U::Elem>,
) -> Result<U::Elem> {
    if depth == 0 {
        f(e)
    } else {
        stack[0].map(e, &|x| at_depth(&stack[1..], depth - 1, x, f))
    }
}

impl<U: Universe> DistLaw<U> for BlockLaw<U> {
    fn name(&self) -> String {
        format!("block({}|{})", self.series.name(), self.split)
    }

    fn outer(&self) -> MonadRef<U> {
        let n = self.series.len();
        canonical(&self.series, self.split + 1, n)
    }

    fn inner(&self) -> MonadRef<U> {
        canonical(&self.series, 1, self.split)
    }

    fn apply(&self, e: &U::Elem) -> Result<U::Elem> {
        let n = self.series.len();
        let i = self.split;
        let mut order: Vec<usize> = (i + 1..=n).chain(1..=i).collect();
        let mut cur = e.clone();
        for b in 1..=i {
            let mut pos = order.iter().position(|&x| x == b).expect("b is in the stack");
            while pos > 0 && order[pos - 1] > i {
                let a = order[pos - 1];
                let law = self.series.law(a, b)?;
                let stack: Vec<MonadRef<U>> = order
                    .iter()
                    .map(|&k| self.series.monad(k).cloned())
                    .collect::<Result<_>>()?;
                cur = at_depth(&stack, pos - 1, &cur, &|x| law.apply(x))?;
                order.swap(pos - 1, pos);
                pos -= 1;
            }
        }
        Ok(cur)
    }
}

fn canonical<U: Universe>(series: &DistributiveSeries<U>, lo: usize, hi: usize) -> MonadRef<U> {
    let sub = series.slice(lo, hi).expect("block bounds are in range");
    let n = sub.len();
    compose_series(&sub, &Route::right_nested(1, n)).expect("right-nested route is valid")
}

/// The block law at `split` (`1 ≤ split < n`). A two-monad series returns its
/// stored law.
pub fn derive_block_law<U: Universe>(series: &DistributiveSeries<U>, split: usize) -> Result<LawRef<U>> {
    let n = series.len();
    if !(1 <= split && split < n) {
        return Err(Error::SplitOutOfRange { split, n });
    }
    if n == 2 {
        return series.law(2, 1).cloned();
    }
    Ok(Arc::new(BlockLaw {
        series: series.clone(),
        split,
    }))
}

/// The monad on `T_1 ⋯ T_n` obtained by composing pairs along `route`.
pub fn compose_series<U: Universe>(series: &DistributiveSeries<U>, route: &Route) -> Result<MonadRef<U>> {
    let (lo, hi) = route.span();
    if route.leaves() != (1..=series.len()).collect::<Vec<_>>() {
        return Err(Error::Route(format!("{route} does not cover 1..={}", series.len())));
    }
    compose_range(series, route, lo, hi)
}

fn compose_range<U: Universe>(
    series: &DistributiveSeries<U>,
    route: &Route,
    lo: usize,
    hi: usize,
) -> Result<MonadRef<U>> {
    match route {
        Route::Leaf(k) => series.monad(*k).cloned(),
        Route::Node(l, r) => {
            let (_, m) = l.span();
            let top = compose_range(series, l, lo, m)?;
            let bottom = compose_range(series, r, m + 1, hi)?;
            let sub = series.slice(lo, hi)?;
            let law = derive_block_law(&sub, m - lo + 1)?;
            Ok(compose_pair(bottom, top, law))
        }
    }
}

/// Compare the multiplication of every route against the first on all of
/// `(T_1 ⋯ T_n)(T_1 ⋯ T_n)(X)` within `bound`; units are compared on `X`.
pub fn check_route_independence<U: Universe>(
    series: &DistributiveSeries<U>,
    obj: &U::Obj,
    bound: usize,
    limit: usize,
) -> Result<CheckReport> {
    let n = series.len();
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    if n == 0 {
        return Ok(CheckReport::new());
    }
    let routes = Route::all(1, n);
    if n > limit {
        return Err(Error::RouteLimit {
            routes: routes.len(),
            limit,
        });
    }
    let monads: Vec<MonadRef<U>> = routes
        .iter()
        .map(|r| compose_series(series, r))
        .collect::<Result<_>>()?;
    let layers: Vec<&MonadRef<U>> = series.monads().iter().chain(series.monads()).collect();
    let inputs = U::elems(&apply_stack(&layers, obj, bound)?);
    let xs = U::elems(obj);
    let mut report = CheckReport::new();
    if routes.len() == 1 {
        report.push(CheckEntry {
            id: format!("route[{}]", routes[0]),
            checked: 0,
            failed: 0,
            witnesses: vec![],
        });
        return Ok(report);
    }
    let reference = &monads[0];
    for (route, m) in routes.iter().zip(&monads).skip(1) {
        let id = format!("route[{route}]");
        let mut entry = diagram(&id, &inputs, |e| (reference.mult(e), m.mult(e)));
        let units = diagram(&id, &xs, |x| (Ok(reference.unit(x)), Ok(m.unit(x))));
        crate::monad::merge_into(&mut entry, units);
        report.push(entry);
    }
    Ok(report)
}
