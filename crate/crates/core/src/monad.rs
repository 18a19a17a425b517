//! Executable monads, distributive laws and bounded law checking.
//!
//! Everything here is generic over a [`Universe`]: the pair of an element type
//! and an object type (a finite set of elements) that monads act on. Terms over
//! generator carriers live in [`Sets`]; globular cells live in
//! [`crate::globular::Globs`].

use std::collections::BTreeSet;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::term::{Carrier, Term};

/// Maximum number of witnesses retained per report entry.
pub const MAX_WITNESSES: usize = 8;

pub trait Universe: Send + Sync + 'static {
    type Elem: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;
    type Obj: Clone + Send + Sync;

    fn elems(obj: &Self::Obj) -> Vec<Self::Elem>;

    /// Sample morphisms used to spot-check naturality. Empty by default.
    fn naturality_samples() -> Vec<Sample<Self>>
    where
        Self: Sized,
    {
        Vec::new()
    }
}

pub type ElemFn<U> = Arc<dyn Fn(&<U as Universe>::Elem) -> Result<<U as Universe>::Elem> + Send + Sync>;

/// A morphism out of a small object, for naturality spot checks.
pub struct Sample<U: Universe> {
    pub label: String,
    pub domain: U::Obj,
    pub map: ElemFn<U>,
}

/// A monad on the objects of `U`.
///
/// `map`, `unit` and `mult` act on one layer: their arguments are elements of
/// `M(Y)`, `Y` and `M(M(Y))` for an arbitrary, opaque `Y`.
pub trait Monad<U: Universe>: Send + Sync {
    fn name(&self) -> String;
    fn unit(&self, x: &U::Elem) -> U::Elem;
    fn mult(&self, tt: &U::Elem) -> Result<U::Elem>;
    fn map(&self, t: &U::Elem, f: &dyn Fn(&U::Elem) -> Result<U::Elem>) -> Result<U::Elem>;
    /// The bounded image `M(obj)`.
    fn apply(&self, obj: &U::Obj, bound: usize) -> Result<U::Obj>;
}

pub type MonadRef<U> = Arc<dyn Monad<U>>;

/// A distributive law `λ : S T ⇒ T S` of `S` (outer) over `T` (inner).
pub trait DistLaw<U: Universe>: Send + Sync {
    fn name(&self) -> String;
    /// `S`.
    fn outer(&self) -> MonadRef<U>;
    /// `T`.
    fn inner(&self) -> MonadRef<U>;
    /// The component at an opaque object: `S(T(Z)) → T(S(Z))`.
    fn apply(&self, t: &U::Elem) -> Result<U::Elem>;
}

pub type LawRef<U> = Arc<dyn DistLaw<U>>;

/// Terms over generator carriers.
pub struct Sets;

impl Universe for Sets {
    type Elem = Term;
    type Obj = Vec<Term>;

    fn elems(obj: &Vec<Term>) -> Vec<Term> {
        obj.clone()
    }

    /// Every function between carriers of size at most three.
    fn naturality_samples() -> Vec<Sample<Sets>> {
        let mut out = Vec::new();
        for dom_size in 1..=3usize {
            let dom = Carrier::new((1..=dom_size).map(|k| format!("x{k}"))).unwrap();
            for cod_size in 1..=3usize {
                let cod = Carrier::new((1..=cod_size).map(|k| format!("y{k}"))).unwrap();
                let total = cod_size.pow(dom_size as u32);
                for code in 0..total {
                    let mut images = Vec::with_capacity(dom_size);
                    let mut c = code;
                    for _ in 0..dom_size {
                        images.push(cod.terms()[c % cod_size].clone());
                        c /= cod_size;
                    }
                    let label = format!(
                        "{}->{}",
                        dom.names().collect::<Vec<_>>().join(""),
                        images.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("")
                    );
                    let domain = dom.clone();
                    let map: ElemFn<Sets> = Arc::new(move |t: &Term| match t {
                        Term::Gen(s) if domain.contains(t) => Ok(images[s.rank() as usize].clone()),
                        other => Err(Error::shape("carrier map", format!("`{other}` is not a generator"))),
                    });
                    out.push(Sample {
                        label,
                        domain: dom.terms(),
                        map,
                    });
                }
            }
        }
        out
    }
}

/// One failing instance of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub diagram: String,
    pub input: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}: {} vs {}", self.diagram, self.input, self.left, self.right)
    }
}

/// The outcome of one class of diagram instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub id: String,
    pub checked: usize,
    pub failed: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckEntry {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn checked(&self) -> usize {
        self.entries.iter().map(|e| e.checked).sum()
    }

    pub fn failed(&self) -> usize {
        self.entries.iter().map(|e| e.failed).sum()
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &Witness> {
        self.entries.iter().flat_map(|e| e.witnesses.iter())
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Prefix every entry id with `scope`.
    pub fn scoped(mut self, scope: &str) -> Self {
        for e in &mut self.entries {
            e.id = format!("{scope}/{}", e.id);
        }
        self
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn render<E: fmt::Display>(r: &Result<E>) -> String {
    match r {
        Ok(e) => e.to_string(),
        Err(err) => format!("error: {err}"),
    }
}

/// Evaluate both legs of a diagram on every input, in parallel, keeping input
/// order in the witness list.
pub fn diagram<E, F>(id: &str, inputs: &[E], legs: F) -> CheckEntry
where
    E: Clone + Eq + fmt::Display + Send + Sync,
    F: Fn(&E) -> (Result<E>, Result<E>) + Sync,
{
    let results: Vec<Option<Witness>> = inputs
        .par_iter()
        .map(|x| {
            let (l, r) = legs(x);
            let agree = matches!((&l, &r), (Ok(a), Ok(b)) if a == b);
            if agree {
                None
            } else {
                Some(Witness {
                    diagram: id.to_string(),
                    input: x.to_string(),
                    left: render(&l),
                    right: render(&r),
                })
            }
        })
        .collect();
    let failed = results.iter().filter(|w| w.is_some()).count();
    CheckEntry {
        id: id.to_string(),
        checked: inputs.len(),
        failed,
        witnesses: results.into_iter().flatten().take(MAX_WITNESSES).collect(),
    }
}

/// Iterate `apply` for each monad, innermost last: `ms[0](ms[1](⋯(obj)))`.
pub fn apply_stack<U: Universe>(ms: &[&MonadRef<U>], obj: &U::Obj, bound: usize) -> Result<U::Obj> {
    let mut cur = obj.clone();
    for m in ms.iter().rev() {
        cur = m.apply(&cur, bound)?;
    }
    Ok(cur)
}

/// Unit and associativity laws on every enumerated element within `bound`.
pub fn check_monad_laws<U: Universe>(m: &MonadRef<U>, obj: &U::Obj, bound: usize) -> Result<CheckReport> {
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let mx = U::elems(&apply_stack(&[m], obj, bound)?);
    let mmmx = U::elems(&apply_stack(&[m, m, m], obj, bound)?);
    let mut report = CheckReport::new();
    report.push(diagram("unit-left", &mx, |t| (m.mult(&m.unit(t)), Ok(t.clone()))));
    report.push(diagram("unit-right", &mx, |t| {
        (m.map(t, &|x| Ok(m.unit(x))).and_then(|u| m.mult(&u)), Ok(t.clone()))
    }));
    report.push(diagram("assoc", &mmmx, |u| {
        let left = m.map(u, &|x| m.mult(x)).and_then(|v| m.mult(&v));
        let right = m.mult(u).and_then(|v| m.mult(&v));
        (left, right)
    }));
    Ok(report)
}

/// Naturality of unit and multiplication against [`Universe::naturality_samples`].
pub fn check_monad_naturality<U: Universe>(m: &MonadRef<U>, bound: usize) -> Result<CheckReport> {
    let mut unit_entry = CheckEntry { id: "natural-unit".into(), checked: 0, failed: 0, witnesses: vec![] };
    let mut mult_entry = CheckEntry { id: "natural-mult".into(), checked: 0, failed: 0, witnesses: vec![] };
    for sample in U::naturality_samples() {
        let f = &sample.map;
        let xs = U::elems(&sample.domain);
        let e = diagram(&format!("natural-unit[{}]", sample.label), &xs, |x| {
            (m.map(&m.unit(x), &|y| f(y)), f(x).map(|y| m.unit(&y)))
        });
        merge_into(&mut unit_entry, e);
        let mmd = U::elems(&apply_stack(&[m, m], &sample.domain, bound)?);
        let e = diagram(&format!("natural-mult[{}]", sample.label), &mmd, |u| {
            let left = m.mult(u).and_then(|v| m.map(&v, &|y| f(y)));
            let right = m
                .map(u, &|inner| m.map(inner, &|y| f(y)))
                .and_then(|v| m.mult(&v));
            (left, right)
        });
        merge_into(&mut mult_entry, e);
    }
    let mut report = CheckReport::new();
    report.push(unit_entry);
    report.push(mult_entry);
    Ok(report)
}

pub(crate) fn merge_into(acc: &mut CheckEntry, e: CheckEntry) {
    acc.checked += e.checked;
    acc.failed += e.failed;
    let room = MAX_WITNESSES.saturating_sub(acc.witnesses.len());
    acc.witnesses.extend(e.witnesses.into_iter().take(room));
}

/// Elements of an object, deduplicated and sorted. Useful when comparing
/// enumerations as sets.
pub fn elem_set<U: Universe>(obj: &U::Obj) -> BTreeSet<U::Elem> {
    U::elems(obj).into_iter().collect()
}
