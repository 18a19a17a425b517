//! Finite globular sets and the free strict n-category on them.
//!
//! For each `0 ≤ i < n` the monad [`Compose`]`{ i }` freely forms composites
//! along `i`-cells, and interchange gives a distributive law between any two
//! of them. The composite `T_0 T_1 ⋯ T_{n-1}` is computed by [`free_ncat`] and
//! cross-checked by the closure in [`brute_force_oracle`].

mod cell;
mod monads;
mod oracle;
mod padding;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use cell::{Cell, Complex, Globs, Side};
pub use monads::{free_ncat, globular_series, Compose, Interchange};
pub use oracle::brute_force_oracle;
pub use padding::{check_padding_candidate, PaddingCandidate};

use crate::error::{Error, Result};
use crate::monad::{diagram, CheckReport};

/// A finite `n`-globular set. `src[d][k]` is the index in dimension `d` of the
/// source of cell `k` of dimension `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobularSet {
    n: usize,
    names: Vec<Vec<String>>,
    src: Vec<Vec<usize>>,
    tgt: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GsetFile {
    n: usize,
    cells: Vec<Vec<String>>,
    src: Vec<BTreeMap<String, String>>,
    tgt: Vec<BTreeMap<String, String>>,
}

impl GlobularSet {
    /// Build from names, checking only the format (see [`validate_globular`]).
    pub fn from_names<S: AsRef<str>>(
        n: usize,
        cells: &[Vec<S>],
        src: &[Vec<(S, S)>],
        tgt: &[Vec<(S, S)>],
    ) -> Result<Self> {
        let owned = |v: &[Vec<(S, S)>]| -> Vec<BTreeMap<String, String>> {
            v.iter()
                .map(|m| {
                    m.iter()
                        .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
                        .collect()
                })
                .collect()
        };
        let file = GsetFile {
            n,
            cells: cells
                .iter()
                .map(|d| d.iter().map(|s| s.as_ref().to_string()).collect())
                .collect(),
            src: owned(src),
            tgt: owned(tgt),
        };
        Self::from_file(file)
    }

    fn from_file(f: GsetFile) -> Result<Self> {
        let n = f.n;
        if f.cells.len() != n + 1 {
            return Err(Error::Format(format!(
                "expected {} cell lists, found {}",
                n + 1,
                f.cells.len()
            )));
        }
        if f.src.len() != n || f.tgt.len() != n {
            return Err(Error::Format(format!("expected {n} source and target maps")));
        }
        for (d, names) in f.cells.iter().enumerate() {
            for (k, name) in names.iter().enumerate() {
                if names[..k].contains(name) {
                    return Err(Error::Format(format!("duplicate name `{name}` in dimension {d}")));
                }
            }
        }
        let resolve = |maps: &[BTreeMap<String, String>], which: &str| -> Result<Vec<Vec<usize>>> {
            let mut out = Vec::new();
            for d in 0..n {
                let (upper, lower) = (&f.cells[d + 1], &f.cells[d]);
                let map = &maps[d];
                if let Some(extra) = map.keys().find(|k| !upper.contains(k)) {
                    return Err(Error::Format(format!(
                        "{which} map {d} mentions `{extra}`, not a cell of dimension {}",
                        d + 1
                    )));
                }
                let mut idx = Vec::with_capacity(upper.len());
                for name in upper {
                    let b = map.get(name).ok_or_else(|| {
                        Error::Format(format!("{which} of `{name}` is missing"))
                    })?;
                    let k = lower.iter().position(|x| x == b).ok_or_else(|| {
                        Error::Format(format!("{which} of `{name}` is `{b}`, not a cell of dimension {d}"))
                    })?;
                    idx.push(k);
                }
                out.push(idx);
            }
            Ok(out)
        };
        Ok(GlobularSet {
            n,
            src: resolve(&f.src, "source")?,
            tgt: resolve(&f.tgt, "target")?,
            names: f.cells,
        })
    }

    /// Parse the JSON file format, rejecting non-globular input.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GsetFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let g = Self::from_file(file)?;
        let report = validate_globular(&g);
        if let Some(w) = report.witnesses().next() {
            return Err(Error::Globularity {
                cell: w.input.clone(),
                detail: format!("{}: {} vs {}", w.diagram, w.left, w.right),
            });
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        let maps = |m: &[Vec<usize>]| -> Vec<BTreeMap<String, String>> {
            (0..self.n)
                .map(|d| {
                    self.names[d + 1]
                        .iter()
                        .zip(&m[d])
                        .map(|(a, b)| (a.clone(), self.names[d][*b].clone()))
                        .collect()
                })
                .collect()
        };
        let file = GsetFile {
            n: self.n,
            cells: self.names.clone(),
            src: maps(&self.src),
            tgt: maps(&self.tgt),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self, d: usize) -> &[String] {
        &self.names[d]
    }

    pub fn total_cells(&self) -> usize {
        self.names.iter().map(Vec::len).sum()
    }

    /// The cells as a [`Complex`] of base cells.
    pub fn complex(&self) -> Complex {
        let mut cells: Vec<Vec<Cell>> = Vec::new();
        for d in 0..=self.n {
            let layer = self.names[d]
                .iter()
                .enumerate()
                .map(|(k, name)| Cell::Base {
                    dim: d,
                    index: k,
                    name: Arc::from(name.as_str()),
                    bd: (d > 0).then(|| {
                        Arc::new((
                            cells[d - 1][self.src[d - 1][k]].clone(),
                            cells[d - 1][self.tgt[d - 1][k]].clone(),
                        ))
                    }),
                })
                .collect();
            cells.push(layer);
        }
        Complex { n: self.n, cells }
    }

    /// The base cell `name` of dimension `d`.
    pub fn cell(&self, d: usize, name: &str) -> Option<Cell> {
        let k = self.names.get(d)?.iter().position(|x| x == name)?;
        Some(self.complex().cells[d][k].clone())
    }
}

/// `ss = st` and `ts = tt` on every cell of dimension at least 2. Witness
/// inputs are cell names.
pub fn validate_globular(g: &GlobularSet) -> CheckReport {
    let mut report = CheckReport::new();
    for m in 2..=g.n {
        let here = &g.names[m];
        let legs = |name: &String, outer: &[Vec<usize>]| {
            let k = here.iter().position(|x| x == name).expect("name is in this dimension");
            let via_src = outer[m - 2][g.src[m - 1][k]];
            let via_tgt = outer[m - 2][g.tgt[m - 1][k]];
            (
                Ok(g.names[m - 2][via_src].clone()),
                Ok(g.names[m - 2][via_tgt].clone()),
            )
        };
        let mut e = diagram("ss=st", here, |c| legs(c, &g.src));
        e.id = format!("ss=st[{m}]");
        report.push(e);
        let mut e = diagram("ts=tt", here, |c| legs(c, &g.tgt));
        e.id = format!("ts=tt[{m}]");
        report.push(e);
    }
    report
}

/// Build a globular set from literal tables, for tests.
#[cfg(test)]
pub(crate) fn fixture(n: usize, cells: &[&[&str]], src: &[&[(&str, &str)]], tgt: &[&[(&str, &str)]]) -> GlobularSet {
    let cells: Vec<Vec<&str>> = cells.iter().map(|d| d.to_vec()).collect();
    let src: Vec<Vec<(&str, &str)>> = src.iter().map(|d| d.to_vec()).collect();
    let tgt: Vec<Vec<(&str, &str)>> = tgt.iter().map(|d| d.to_vec()).collect();
    GlobularSet::from_names(n, &cells, &src, &tgt).unwrap()
}
