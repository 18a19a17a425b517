use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monad::{apply_stack, diagram, CheckReport, DistLaw, ElemFn, LawRef, MonadRef, Universe};

/// An algebra `θ : S(A) → A` on a finite carrier.
pub struct Algebra<U: Universe> {
    pub monad: MonadRef<U>,
    pub carrier: U::Obj,
    pub action: ElemFn<U>,
}

impl<U: Universe> Clone for Algebra<U> {
    fn clone(&self) -> Self {
        Algebra {
            monad: self.monad.clone(),
            carrier: self.carrier.clone(),
            action: self.action.clone(),
        }
    }
}

impl<U: Universe> Algebra<U> {
    pub fn new(monad: MonadRef<U>, carrier: U::Obj, action: ElemFn<U>) -> Self {
        Algebra { monad, carrier, action }
    }

    /// The free algebra `S(X)` with `θ = μ`, restricted to `bound`.
    pub fn free(monad: MonadRef<U>, obj: &U::Obj, bound: usize) -> Result<Self> {
        let carrier = monad.apply(obj, bound)?;
        let m = monad.clone();
        Ok(Algebra {
            monad,
            carrier,
            action: Arc::new(move |e| m.mult(e)),
        })
    }

    pub fn act(&self, e: &U::Elem) -> Result<U::Elem> {
        (self.action)(e)
    }

    /// The action as an explicit table on `S(A)` within `bound`.
    pub fn table(&self, bound: usize) -> Result<Vec<(U::Elem, U::Elem)>> {
        U::elems(&self.monad.apply(&self.carrier, bound)?)
            .into_iter()
            .map(|e| self.act(&e).map(|v| (e, v)))
            .collect()
    }

    /// `θ ∘ η = id` on `A` and `θ ∘ μ = θ ∘ S θ` on `S S(A)`.
    pub fn check(&self, bound: usize) -> Result<CheckReport> {
        let s = &self.monad;
        let mut report = CheckReport::new();
        let a = U::elems(&self.carrier);
        report.push(diagram("algebra-unit", &a, |x| (self.act(&s.unit(x)), Ok(x.clone()))));
        let ssa = U::elems(&apply_stack(&[s, s], &self.carrier, bound)?);
        report.push(diagram("algebra-mult", &ssa, |u| {
            let left = s.mult(u).and_then(|v| self.act(&v));
            let right = s.map(u, &|x| self.act(x)).and_then(|v| self.act(&v));
            (left, right)
        }));
        Ok(report)
    }
}

/// The `S`-algebra on `T(A)` together with the checks performed on it.
pub struct LiftedAlgebra<U: Universe> {
    pub algebra: Algebra<U>,
    pub report: CheckReport,
}

/// Lift `T` along `λ : S T ⇒ T S`: the action on `T(A)` is `T θ ∘ λ_A`. The
/// report covers the algebra laws of the result and that `η^T_A` and `μ^T_A`
/// commute with the actions.
pub fn lift_to_algebras<U: Universe>(
    law: &LawRef<U>,
    alg: &Algebra<U>,
    bound: usize,
) -> Result<LiftedAlgebra<U>> {
    let base = alg.check(bound)?;
    if let Some(w) = base.witnesses().next() {
        return Err(Error::NotAnAlgebra(w.to_string()));
    }
    let s = law.outer();
    let t = law.inner();
    let lam_owned = law.clone();
    let theta = alg.action.clone();
    let t_for_action = t.clone();
    let action: ElemFn<U> = Arc::new(move |u| {
        let v = lam_owned.apply(u)?;
        t_for_action.map(&v, &|x| theta(x))
    });
    let lifted = Algebra {
        monad: s.clone(),
        carrier: t.apply(&alg.carrier, bound)?,
        action,
    };
    let mut report = lifted.check(bound)?;

    let sa = U::elems(&apply_stack(&[&s], &alg.carrier, bound)?);
    report.push(diagram("unit-morphism", &sa, |u| {
        let left = alg.act(u).map(|a| t.unit(&a));
        let right = s.map(u, &|x| Ok(t.unit(x))).and_then(|v| lifted.act(&v));
        (left, right)
    }));

    // the lifted action on T T(A) is T θ' ∘ λ
    let stta = U::elems(&apply_stack(&[&s, &t, &t], &alg.carrier, bound)?);
    report.push(diagram("mult-morphism", &stta, |u| {
        let left = law
            .apply(u)
            .and_then(|v| t.map(&v, &|x| lifted.act(x)))
            .and_then(|v| t.mult(&v));
        let right = s.map(u, &|x| t.mult(x)).and_then(|v| lifted.act(&v));
        (left, right)
    }));
    Ok(LiftedAlgebra { algebra: lifted, report })
}

/// Split an algebra `ξ : T S(A) → A` of the composite into
/// `θ = ξ ∘ η^T S` (an `S`-algebra) and `τ = ξ ∘ T η^S` (a `T`-algebra).
pub fn split_composite_algebra<U: Universe>(
    law: &dyn DistLaw<U>,
    xi: &Algebra<U>,
) -> (Algebra<U>, Algebra<U>) {
    let s = law.outer();
    let t = law.inner();
    let (xi1, t1) = (xi.action.clone(), t.clone());
    let theta: ElemFn<U> = Arc::new(move |e| xi1(&t1.unit(e)));
    let (xi2, t2, s2) = (xi.action.clone(), t.clone(), s.clone());
    let tau: ElemFn<U> = Arc::new(move |e| {
        let v = t2.map(e, &|x| Ok(s2.unit(x)))?;
        xi2(&v)
    });
    (
        Algebra::new(s, xi.carrier.clone(), theta),
        Algebra::new(t, xi.carrier.clone(), tau),
    )
}

/// `ξ = τ ∘ T θ`, the inverse of [`split_composite_algebra`].
pub fn recombine<U: Universe>(composite: MonadRef<U>, theta: &Algebra<U>, tau: &Algebra<U>) -> Algebra<U> {
    let (th, ta, t) = (theta.action.clone(), tau.action.clone(), tau.monad.clone());
    let action: ElemFn<U> = Arc::new(move |e| {
        let v = t.map(e, &|x| th(x))?;
        ta(&v)
    });
    Algebra::new(composite, theta.carrier.clone(), action)
}
