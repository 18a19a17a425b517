use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monad::{diagram, CheckReport, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Src,
    Tgt,
}

/// A cell of a finite globular set or of a free composition built on one.
///
/// A string along `i` of `m`-cells is an `m`-cell; an empty string carries the
/// `i`-cell it is the identity on.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Base {
        dim: usize,
        index: usize,
        name: Arc<str>,
        /// Source and target, absent in dimension 0.
        bd: Option<Arc<(Cell, Cell)>>,
    },
    Str {
        dim: usize,
        along: usize,
        entries: Vec<Cell>,
        anchor: Option<Box<Cell>>,
    },
}

impl Cell {
    pub fn dim(&self) -> usize {
        match self {
            Cell::Base { dim, .. } | Cell::Str { dim, .. } => *dim,
        }
    }

    /// A nonempty string along `along`. Panics on an empty list.
    pub fn string(along: usize, entries: Vec<Cell>) -> Cell {
        let dim = entries[0].dim();
        Cell::Str {
            dim,
            along,
            entries,
            anchor: None,
        }
    }

    /// The empty string along `along` in dimension `dim`, on `anchor`.
    pub fn empty(dim: usize, along: usize, anchor: Cell) -> Cell {
        Cell::Str {
            dim,
            along,
            entries: Vec::new(),
            anchor: Some(Box::new(anchor)),
        }
    }

    /// Iterated source or target in dimension `d < dim`.
    pub fn boundary(&self, side: Side, d: usize) -> Result<Cell> {
        let m = self.dim();
        if d >= m {
            return Err(Error::Dimension(format!(
                "boundary in dimension {d} of the {m}-cell {self}"
            )));
        }
        match self {
            Cell::Base { bd, .. } => {
                let bd = bd.as_ref().expect("positive-dimensional base cells have boundaries");
                let next = match side {
                    Side::Src => &bd.0,
                    Side::Tgt => &bd.1,
                };
                if d + 1 == m {
                    Ok(next.clone())
                } else {
                    next.boundary(side, d)
                }
            }
            Cell::Str {
                along,
                entries,
                anchor,
                ..
            } => {
                if d > *along {
                    let entries = entries
                        .iter()
                        .map(|e| e.boundary(side, d))
                        .collect::<Result<_>>()?;
                    return Ok(Cell::Str {
                        dim: d,
                        along: *along,
                        entries,
                        anchor: anchor.clone(),
                    });
                }
                let end = match (entries.first(), entries.last(), anchor) {
                    (Some(first), _, _) if side == Side::Src => first,
                    (_, Some(last), _) => last,
                    (None, None, Some(a)) => a.as_ref(),
                    _ => {
                        return Err(Error::shape(
                            "cell",
                            format!("empty string without anchor in {self}"),
                        ))
                    }
                };
                if end.dim() == d {
                    Ok(end.clone())
                } else {
                    end.boundary(side, d)
                }
            }
        }
    }

    pub fn src(&self, d: usize) -> Result<Cell> {
        self.boundary(Side::Src, d)
    }

    pub fn tgt(&self, d: usize) -> Result<Cell> {
        self.boundary(Side::Tgt, d)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Base { name, .. } => f.write_str(name),
            Cell::Str { entries, anchor, .. } if entries.is_empty() => match anchor {
                Some(a) => write!(f, "ε({a})"),
                None => f.write_str("ε(?)"),
            },
            Cell::Str { entries, .. } => {
                f.write_str("[")?;
                for (k, e) in entries.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Cells of dimensions `0..=n`, each dimension in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub n: usize,
    pub cells: Vec<Vec<Cell>>,
}

impl Complex {
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn all(&self) -> Vec<Cell> {
        self.cells.iter().flatten().cloned().collect()
    }

    /// Globularity of every cell of dimension at least 2, and closure of the
    /// boundaries of every cell.
    pub fn validate(&self) -> CheckReport {
        let high: Vec<Cell> = self.cells.iter().skip(2).flatten().cloned().collect();
        let globular = |c: &Cell, outer: Side| -> (Result<Cell>, Result<Cell>) {
            let m = c.dim();
            let left = c.src(m - 1).and_then(|b| b.boundary(outer, m - 2));
            let right = c.tgt(m - 1).and_then(|b| b.boundary(outer, m - 2));
            (left, right)
        };
        let mut report = CheckReport::new();
        report.push(diagram("globular-src", &high, |c| globular(c, Side::Src)));
        report.push(diagram("globular-tgt", &high, |c| globular(c, Side::Tgt)));
        let positive: Vec<Cell> = self.cells.iter().skip(1).flatten().cloned().collect();
        report.push(diagram("boundary-closed", &positive, |c| {
            let m = c.dim();
            let inside = [Side::Src, Side::Tgt].iter().all(|s| {
                c.boundary(*s, m - 1)
                    .map(|b| self.cells[m - 1].contains(&b))
                    .unwrap_or(false)
            });
            let left = if inside {
                Ok(c.clone())
            } else {
                Err(Error::Dimension("a boundary lies outside the complex".into()))
            };
            (left, Ok(c.clone()))
        }));
        report
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.counts())
    }
}

/// Cells of finite globular sets, for the generic checkers.
pub struct Globs;

impl Universe for Globs {
    type Elem = Cell;
    type Obj = Complex;

    fn elems(obj: &Complex) -> Vec<Cell> {
        obj.all()
    }
}
