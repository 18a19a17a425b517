use crate::error::{Error, Result};
use crate::monad::{
    apply_stack, check_monad_laws, diagram, merge_into, CheckEntry, CheckReport, DistLaw, Universe,
};

use super::DistributiveSeries;

/// The four coherence diagrams of a distributive law `λ : S T ⇒ T S`, plus a
/// naturality spot check against the universe's sample maps.
///
/// * `outer-unit`: `λ ∘ η^S T = T η^S` on `T(X)`
/// * `outer-mult`: `λ ∘ μ^S T = T μ^S ∘ λ S ∘ S λ` on `S S T(X)`
/// * `inner-unit`: `λ ∘ S η^T = η^T S` on `S(X)`
/// * `inner-mult`: `λ ∘ S μ^T = μ^T S ∘ T λ ∘ λ T` on `S T T(X)`
pub fn check_distlaw<U: Universe>(
    law: &dyn DistLaw<U>,
    obj: &U::Obj,
    bound: usize,
) -> Result<CheckReport> {
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let s = law.outer();
    let t = law.inner();
    let lam = |e: &U::Elem| law.apply(e);
    let mut report = CheckReport::new();

    let tx = U::elems(&apply_stack(&[&t], obj, bound)?);
    report.push(diagram("outer-unit", &tx, |e| {
        (lam(&s.unit(e)), t.map(e, &|x| Ok(s.unit(x))))
    }));

    let sstx = U::elems(&apply_stack(&[&s, &s, &t], obj, bound)?);
    report.push(diagram("outer-mult", &sstx, |e| {
        let left = s.mult(e).and_then(|v| lam(&v));
        let right = s
            .map(e, &lam)
            .and_then(|v| lam(&v))
            .and_then(|v| t.map(&v, &|x| s.mult(x)));
        (left, right)
    }));

    let sx = U::elems(&apply_stack(&[&s], obj, bound)?);
    report.push(diagram("inner-unit", &sx, |e| {
        (s.map(e, &|x| Ok(t.unit(x))).and_then(|v| lam(&v)), Ok(t.unit(e)))
    }));

    let sttx = U::elems(&apply_stack(&[&s, &t, &t], obj, bound)?);
    report.push(diagram("inner-mult", &sttx, |e| {
        let left = s.map(e, &|x| t.mult(x)).and_then(|v| lam(&v));
        let right = lam(e)
            .and_then(|v| t.map(&v, &lam))
            .and_then(|v| t.mult(&v));
        (left, right)
    }));

    let mut natural = CheckEntry {
        id: "natural".into(),
        checked: 0,
        failed: 0,
        witnesses: vec![],
    };
    for sample in U::naturality_samples() {
        let f = &sample.map;
        let inputs = U::elems(&apply_stack(&[&s, &t], &sample.domain, bound)?);
        let e = diagram(&format!("natural[{}]", sample.label), &inputs, |e| {
            let left = s
                .map(e, &|x| t.map(x, &|y| f(y)))
                .and_then(|v| lam(&v));
            let right = lam(e).and_then(|v| t.map(&v, &|x| s.map(x, &|y| f(y))));
            (left, right)
        });
        merge_into(&mut natural, e);
    }
    report.push(natural);
    Ok(report)
}

/// Both paths around the hexagon `T_i T_j T_k ⇒ T_k T_j T_i` for `i > j > k`.
pub fn check_yang_baxter<U: Universe>(
    series: &DistributiveSeries<U>,
    i: usize,
    j: usize,
    k: usize,
    obj: &U::Obj,
    bound: usize,
) -> Result<CheckReport> {
    let n = series.len();
    if !(n >= i && i > j && j > k && k >= 1) {
        return Err(Error::IndexOrder { i, j, k, n });
    }
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let (ti, tj, tk) = (series.monad(i)?, series.monad(j)?, series.monad(k)?);
    let (lij, lik, ljk) = (series.law(i, j)?, series.law(i, k)?, series.law(j, k)?);
    let inputs = U::elems(&apply_stack(&[ti, tj, tk], obj, bound)?);
    let id = format!("yang-baxter({i},{j},{k})");
    let entry = diagram(&id, &inputs, |e| {
        let top = lij
            .apply(e)
            .and_then(|v| tj.map(&v, &|x| lik.apply(x)))
            .and_then(|v| ljk.apply(&v));
        let bottom = ti
            .map(e, &|x| ljk.apply(x))
            .and_then(|v| lik.apply(&v))
            .and_then(|v| tk.map(&v, &|x| lij.apply(x)));
        (top, bottom)
    });
    let mut report = CheckReport::new();
    report.push(entry);
    Ok(report)
}

/// Monad laws for every `T_i`, the distributive-law diagrams for every pair and
/// the hexagon for every triple, in that order.
pub fn validate_series<U: Universe>(
    series: &DistributiveSeries<U>,
    obj: &U::Obj,
    bound: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    for (idx, m) in series.monads().iter().enumerate() {
        let r = check_monad_laws(m, obj, bound)?;
        report.extend(r.scoped(&format!("monad[{}:{}]", idx + 1, m.name())));
    }
    for ((i, j), law) in series.laws() {
        let r = check_distlaw(law.as_ref(), obj, bound)?;
        report.extend(r.scoped(&format!("law({i},{j}):{}", law.name())));
    }
    for (i, j, k) in series.triples() {
        report.extend(check_yang_baxter(series, i, j, k, obj, bound)?);
    }
    Ok(report)
}
