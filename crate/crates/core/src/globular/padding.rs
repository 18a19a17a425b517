//! A candidate law in the reverse direction, `T_0 T_1 ⇒ T_1 T_0` on
//! 2-globular sets: a row of columns is made rectangular by padding the
//! shorter columns with identity 2-cells at the top, then transposed.
//!
//! No such law exists. [`check_padding_candidate`] evaluates the four
//! coherence diagrams and reports where this candidate breaks.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monad::{apply_stack, diagram, CheckReport, MonadRef};

use super::cell::{Cell, Complex, Globs, Side};
use super::monads::Compose;
use super::GlobularSet;

/// The padding candidate over a 2-globular set whose base identities are
/// supplied as designated 2-cells.
pub struct PaddingCandidate {
    /// base 1-cell → identity 2-cell
    identities: BTreeMap<Cell, Cell>,
}

/// Which composition monads sit between the law and the base set, outermost
/// first: `[]` is the base set itself, `[1]` is `T_1(G)`, and so on.
pub type Layers = [usize];

impl PaddingCandidate {
    /// `identities` maps 1-cell names to the names of 2-cells standing in for
    /// their identities.
    pub fn new(g: &GlobularSet, identities: &[(&str, &str)]) -> Result<Self> {
        if g.n() != 2 {
            return Err(Error::Dimension(format!("padding needs a 2-globular set, got n = {}", g.n())));
        }
        let mut map = BTreeMap::new();
        for (f, id) in identities {
            let fc = g.cell(1, f).ok_or_else(|| Error::Format(format!("no 1-cell `{f}`")))?;
            let ic = g.cell(2, id).ok_or_else(|| Error::Format(format!("no 2-cell `{id}`")))?;
            if ic.src(1)? != fc || ic.tgt(1)? != fc {
                return Err(Error::Format(format!("`{id}` is not an endo-2-cell on `{f}`")));
            }
            map.insert(fc, ic);
        }
        Ok(PaddingCandidate { identities: map })
    }

    /// The identity 2-cell on the 1-cell `x` of `layers(G)`.
    fn pad(&self, layers: &Layers, x: &Cell) -> Result<Cell> {
        match layers.first() {
            None => self
                .identities
                .get(x)
                .cloned()
                .ok_or_else(|| Error::Format(format!("no designated identity on `{x}`"))),
            Some(1) => Ok(Cell::empty(2, 1, x.clone())),
            Some(0) => match x {
                Cell::Str { entries, anchor, .. } => {
                    let entries = entries
                        .iter()
                        .map(|e| self.pad(&layers[1..], e))
                        .collect::<Result<_>>()?;
                    Ok(Cell::Str {
                        dim: 2,
                        along: 0,
                        entries,
                        anchor: anchor.clone(),
                    })
                }
                other => Err(Error::shape("T0", format!("expected a row, found {other}"))),
            },
            Some(l) => Err(Error::Dimension(format!("no layer {l} in a 2-globular set"))),
        }
    }

    /// The component at `layers(G)`: `T_0 T_1 Z → T_1 T_0 Z`.
    pub fn apply(&self, layers: &Layers, c: &Cell) -> Result<Cell> {
        if c.dim() < 2 {
            return Ok(c.clone());
        }
        let Cell::Str {
            along: 0,
            entries: cols,
            anchor,
            ..
        } = c
        else {
            return Err(Error::shape("T0", format!("expected a row, found {c}")));
        };
        if cols.is_empty() {
            let o = anchor.as_deref().ok_or_else(|| Error::shape("T0", "empty row without anchor"))?;
            return Ok(Cell::string(1, vec![Cell::empty(2, 0, o.clone())]));
        }
        let mut grid = Vec::with_capacity(cols.len());
        let mut bottoms = Vec::with_capacity(cols.len());
        for col in cols {
            match col {
                Cell::Str { along: 1, entries, .. } => {
                    grid.push(entries.clone());
                    bottoms.push(col.boundary(Side::Src, 1)?);
                }
                other => return Err(Error::shape("T1", format!("expected a column, found {other}"))),
            }
        }
        let height = grid.iter().map(Vec::len).max().unwrap_or(0);
        if height == 0 {
            return Ok(Cell::empty(2, 1, Cell::string(0, bottoms)));
        }
        for (col, x) in grid.iter_mut().zip(&bottoms) {
            let missing = height - col.len();
            if missing > 0 {
                let pad = self.pad(layers, x)?;
                let mut padded = vec![pad; missing];
                padded.append(col);
                *col = padded;
            }
        }
        let rows = (0..height)
            .map(|r| Cell::string(0, grid.iter().map(|col| col[r].clone()).collect()))
            .collect();
        Ok(Cell::string(1, rows))
    }
}

/// The four coherence diagrams for the padding candidate, with `S = T_0`
/// outer and `T = T_1` inner, on the free composites of `g` within `bound`.
pub fn check_padding_candidate(cand: &PaddingCandidate, g: &GlobularSet, bound: usize) -> Result<CheckReport> {
    let s: MonadRef<Globs> = Compose { n: 2, i: 0 }.arc();
    let t: MonadRef<Globs> = Compose { n: 2, i: 1 }.arc();
    let base: Complex = g.complex();
    let top = |c: &Cell| cand.apply(&[], c);
    let mut report = CheckReport::new();

    let tx = apply_stack(&[&t], &base, bound)?.all();
    report.push(diagram("outer-unit", &tx, |e| {
        (top(&s.unit(e)), t.map(e, &|x| Ok(s.unit(x))))
    }));

    let sstx = apply_stack(&[&s, &s, &t], &base, bound)?.all();
    report.push(diagram("outer-mult", &sstx, |e| {
        let left = s.mult(e).and_then(|v| top(&v));
        let right = s
            .map(e, &top)
            .and_then(|v| cand.apply(&[0], &v))
            .and_then(|v| t.map(&v, &|x| s.mult(x)));
        (left, right)
    }));

    let sx = apply_stack(&[&s], &base, bound)?.all();
    report.push(diagram("inner-unit", &sx, |e| {
        (s.map(e, &|x| Ok(t.unit(x))).and_then(|v| top(&v)), Ok(t.unit(e)))
    }));

    let sttx = apply_stack(&[&s, &t, &t], &base, bound)?.all();
    report.push(diagram("inner-mult", &sttx, |e| {
        let left = s.map(e, &|x| t.mult(x)).and_then(|v| top(&v));
        let right = cand
            .apply(&[1], e)
            .and_then(|v| t.map(&v, &top))
            .and_then(|v| t.mult(&v));
        (left, right)
    }));
    Ok(report)
}
