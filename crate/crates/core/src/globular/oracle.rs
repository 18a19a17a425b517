//! Free n-category cell counts by closing the generating cells under formal
//! identities and composites, without the string enumerator of [`super::Compose`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::term::check_ceiling;

use super::cell::Cell;
use super::GlobularSet;

/// A closed cell together with its iterated boundaries, computed by the formal
/// rules for generators, identities and composites.
#[derive(Clone, Debug)]
struct Item {
    nf: Cell,
    /// `src[d]`, `tgt[d]` for `d < dim`.
    src: Vec<Cell>,
    tgt: Vec<Cell>,
}

/// Wrap a base cell of dimension `m` in singleton strings along `m-1, …, 0`.
fn generator(c: &Cell) -> Cell {
    (0..c.dim()).rev().fold(c.clone(), |acc, l| Cell::string(l, vec![acc]))
}

/// The identity `(m+1)`-cell on a normal-form `m`-cell.
fn identity(x: &Cell) -> Cell {
    match x {
        Cell::Base { dim, .. } => Cell::empty(dim + 1, *dim, x.clone()),
        Cell::Str {
            dim,
            along,
            entries,
            anchor,
        } => Cell::Str {
            dim: dim + 1,
            along: *along,
            entries: entries.iter().map(identity).collect(),
            anchor: anchor.clone(),
        },
    }
}

/// `x ∘_i y` on normal forms whose outermost layer is `along = l`.
fn compose(x: &Cell, y: &Cell, i: usize) -> Result<Cell> {
    match (x, y) {
        (
            Cell::Str {
                dim,
                along,
                entries: ex,
                anchor: ax,
            },
            Cell::Str {
                along: along_y,
                entries: ey,
                ..
            },
        ) if along == along_y => {
            let l = *along;
            if i == l {
                if ex.is_empty() {
                    return Ok(y.clone());
                }
                if ey.is_empty() {
                    return Ok(x.clone());
                }
                let mut entries = ex.clone();
                entries.extend(ey.iter().cloned());
                Ok(Cell::string(l, entries))
            } else if i > l {
                if ex.len() != ey.len() {
                    return Err(Error::Composability(format!(
                        "{x} and {y} have layers of different length"
                    )));
                }
                if ex.is_empty() {
                    return Ok(Cell::Str {
                        dim: *dim,
                        along: l,
                        entries: vec![],
                        anchor: ax.clone(),
                    });
                }
                let entries = ex
                    .iter()
                    .zip(ey)
                    .map(|(a, b)| compose(a, b, i))
                    .collect::<Result<_>>()?;
                Ok(Cell::string(l, entries))
            } else {
                Err(Error::Composability(format!("layer {l} lies above composition {i}")))
            }
        }
        _ => Err(Error::Composability(format!("cannot compose {x} and {y} along {i}"))),
    }
}

fn layer_lengths_within(c: &Cell, bound: usize) -> bool {
    match c {
        Cell::Base { .. } => true,
        Cell::Str { entries, .. } => {
            entries.len() <= bound && entries.iter().all(|e| layer_lengths_within(e, bound))
        }
    }
}

/// Cells of the free strict `n`-category on `g` whose strings all have length
/// at most `bound`, counted per dimension.
///
/// Cells of each dimension are generated from the generators of that dimension
/// and identities on the cells one dimension down, then closed under every
/// composite `x ∘_i y` whose boundaries match.
pub fn brute_force_oracle(g: &GlobularSet, bound: usize) -> Result<Vec<usize>> {
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let base = g.complex();
    let n = g.n();
    let mut dims: Vec<Vec<Item>> = Vec::new();
    for m in 0..=n {
        let mut found: BTreeMap<Cell, Item> = BTreeMap::new();
        let mut frontier: Vec<Item> = Vec::new();
        let add = |item: Item, found: &mut BTreeMap<Cell, Item>, frontier: &mut Vec<Item>| -> Result<()> {
            if layer_lengths_within(&item.nf, bound) && !found.contains_key(&item.nf) {
                found.insert(item.nf.clone(), item.clone());
                frontier.push(item);
                check_ceiling(found.len())?;
            }
            Ok(())
        };
        for c in &base.cells[m] {
            let (src, tgt) = if m == 0 {
                (vec![], vec![])
            } else {
                let (s, t) = match c {
                    Cell::Base { bd: Some(bd), .. } => (&bd.0, &bd.1),
                    _ => unreachable!("base cells above dimension 0 have boundaries"),
                };
                let lookup = |b: &Cell| -> Item {
                    dims[m - 1]
                        .iter()
                        .find(|it| it.nf == generator(b))
                        .cloned()
                        .expect("generators of lower dimension were closed first")
                };
                let (si, ti) = (lookup(s), lookup(t));
                let mut src = si.src.clone();
                src.push(si.nf.clone());
                let mut tgt = ti.tgt.clone();
                tgt.push(ti.nf.clone());
                (src, tgt)
            };
            add(Item { nf: generator(c), src, tgt }, &mut found, &mut frontier)?;
        }
        if m > 0 {
            for x in &dims[m - 1] {
                let mut src = x.src.clone();
                src.push(x.nf.clone());
                let mut tgt = x.tgt.clone();
                tgt.push(x.nf.clone());
                add(Item { nf: identity(&x.nf), src, tgt }, &mut found, &mut frontier)?;
            }
        }
        // close under composites
        while let Some(x) = frontier.pop() {
            let others: Vec<Item> = found.values().cloned().collect();
            for y in &others {
                for i in 0..m {
                    for (a, b) in [(&x, y), (y, &x)] {
                        if a.tgt[i] != b.src[i] {
                            continue;
                        }
                        let nf = compose(&a.nf, &b.nf, i)?;
                        let mut src = Vec::with_capacity(m);
                        let mut tgt = Vec::with_capacity(m);
                        for d in 0..m {
                            if d <= i {
                                src.push(a.src[d].clone());
                                tgt.push(b.tgt[d].clone());
                            } else {
                                src.push(compose(&a.src[d], &b.src[d], i)?);
                                tgt.push(compose(&a.tgt[d], &b.tgt[d], i)?);
                            }
                        }
                        add(Item { nf, src, tgt }, &mut found, &mut frontier)?;
                    }
                }
            }
        }
        dims.push(found.into_values().collect());
    }
    Ok(dims.iter().map(Vec::len).collect())
}
