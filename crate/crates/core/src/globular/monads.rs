use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monad::{apply_stack, DistLaw, LawRef, Monad, MonadRef};
use crate::series::DistributiveSeries;
use crate::term::check_ceiling;

use super::cell::{Cell, Complex, Globs};
use super::GlobularSet;

/// Free composition along `i`-cells on `n`-globular sets. Cells of dimension
/// at most `i` are left alone; above `i`, cells become strings of
/// `i`-composable cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Compose {
    pub n: usize,
    pub i: usize,
}

impl Compose {
    pub fn arc(self) -> MonadRef<Globs> {
        Arc::new(self)
    }

    fn strings<'a>(&self, c: &'a Cell) -> Result<(&'a [Cell], Option<&'a Cell>)> {
        match c {
            Cell::Str {
                along,
                entries,
                anchor,
                ..
            } if *along == self.i => Ok((entries, anchor.as_deref())),
            other => Err(Error::shape(
                self.name(),
                format!("expected a string along {}, found {other}", self.i),
            )),
        }
    }
}

impl Monad<Globs> for Compose {
    fn name(&self) -> String {
        format!("T{}", self.i)
    }

    fn unit(&self, x: &Cell) -> Cell {
        if x.dim() > self.i {
            Cell::string(self.i, vec![x.clone()])
        } else {
            x.clone()
        }
    }

    fn mult(&self, tt: &Cell) -> Result<Cell> {
        if tt.dim() <= self.i {
            return Ok(tt.clone());
        }
        let (outer, _) = self.strings(tt)?;
        if outer.is_empty() {
            return Ok(tt.clone());
        }
        let mut flat = Vec::new();
        let mut first_anchor = None;
        for inner in outer {
            let (entries, a) = self.strings(inner)?;
            flat.extend_from_slice(entries);
            if first_anchor.is_none() {
                first_anchor = a;
            }
        }
        Ok(if flat.is_empty() {
            let a = first_anchor.ok_or_else(|| Error::shape(self.name(), "empty string without anchor"))?;
            Cell::empty(tt.dim(), self.i, a.clone())
        } else {
            Cell::string(self.i, flat)
        })
    }

    fn map(&self, t: &Cell, f: &dyn Fn(&Cell) -> Result<Cell>) -> Result<Cell> {
        if t.dim() <= self.i {
            return f(t);
        }
        let (entries, anchor) = self.strings(t)?;
        Ok(Cell::Str {
            dim: t.dim(),
            along: self.i,
            entries: entries.iter().map(f).collect::<Result<_>>()?,
            anchor: anchor.map(|a| f(a).map(Box::new)).transpose()?,
        })
    }

    /// Strings of length at most `bound`, identities included.
    fn apply(&self, obj: &Complex, bound: usize) -> Result<Complex> {
        let i = self.i;
        let mut cells = Vec::with_capacity(obj.cells.len());
        for (m, layer) in obj.cells.iter().enumerate() {
            if m <= i {
                cells.push(layer.clone());
                continue;
            }
            let mut out: Vec<Cell> = obj.cells[i]
                .iter()
                .map(|a| Cell::empty(m, i, a.clone()))
                .collect();
            let ends: Vec<(Cell, Cell)> = layer
                .iter()
                .map(|c| Ok((c.src(i)?, c.tgt(i)?)))
                .collect::<Result<_>>()?;
            let mut stack: Vec<usize> = Vec::new();
            composable(i, layer, &ends, bound, &mut stack, &mut out)?;
            cells.push(out);
        }
        Ok(Complex { n: obj.n, cells })
    }
}

/// Depth-first extension of `stack` by cells whose source matches the current
/// target, emitting every nonempty string.
fn composable(
    i: usize,
    layer: &[Cell],
    ends: &[(Cell, Cell)],
    bound: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Cell>,
) -> Result<()> {
    if stack.len() == bound {
        return Ok(());
    }
    for k in 0..layer.len() {
        let fits = match stack.last() {
            None => true,
            Some(&prev) => ends[prev].1 == ends[k].0,
        };
        if fits {
            stack.push(k);
            out.push(Cell::string(i, stack.iter().map(|&x| layer[x].clone()).collect()));
            check_ceiling(out.len())?;
            composable(i, layer, ends, bound, stack, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Interchange `λ : T_i T_j ⇒ T_j T_i` for `i > j`: a string along `i` of
/// strings along `j` is a grid, and the law transposes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interchange {
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl Interchange {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if !(n > i && i > j) {
            return Err(Error::IndexOrder { i, j, k: 0, n });
        }
        Ok(Interchange { n, i, j })
    }

    pub fn arc(self) -> LawRef<Globs> {
        Arc::new(self)
    }
}

impl DistLaw<Globs> for Interchange {
    fn name(&self) -> String {
        format!("interchange({},{})", self.i, self.j)
    }

    fn outer(&self) -> MonadRef<Globs> {
        Compose { n: self.n, i: self.i }.arc()
    }

    fn inner(&self) -> MonadRef<Globs> {
        Compose { n: self.n, i: self.j }.arc()
    }

    fn apply(&self, c: &Cell) -> Result<Cell> {
        let (i, j) = (self.i, self.j);
        let m = c.dim();
        if m <= i {
            return Ok(c.clone());
        }
        let ti = Compose { n: self.n, i };
        let tj = Compose { n: self.n, i: j };
        let (rows, anchor) = ti.strings(c)?;
        if rows.is_empty() {
            // identity on an i-cell, itself a string along j of i-cells
            let a = anchor.ok_or_else(|| Error::shape(self.name(), "empty string without anchor"))?;
            let (parts, z) = tj.strings(a)?;
            if parts.is_empty() {
                let z = z.ok_or_else(|| Error::shape(self.name(), "empty string without anchor"))?;
                return Ok(Cell::empty(m, j, z.clone()));
            }
            let cols = parts.iter().map(|p| Cell::empty(m, i, p.clone())).collect();
            return Ok(Cell::string(j, cols));
        }
        let mut grid = Vec::with_capacity(rows.len());
        for r in rows {
            grid.push(tj.strings(r)?);
        }
        let lengths: Vec<usize> = grid.iter().map(|(e, _)| e.len()).collect();
        if lengths.iter().any(|l| *l != lengths[0]) {
            return Err(Error::RaggedGrid { lengths });
        }
        let l = lengths[0];
        if l == 0 {
            let z = grid[0]
                .1
                .ok_or_else(|| Error::shape(self.name(), "empty string without anchor"))?;
            return Ok(Cell::empty(m, j, z.clone()));
        }
        let cols = (0..l)
            .map(|col| Cell::string(i, grid.iter().map(|(e, _)| e[col].clone()).collect()))
            .collect();
        Ok(Cell::string(j, cols))
    }
}

/// The series `T_0, T_1, …, T_{n-1}` (numbered 1 to n, `T_0` outermost) with
/// interchange laws.
pub fn globular_series(n: usize) -> Result<DistributiveSeries<Globs>> {
    let monads = (0..n).map(|i| Compose { n, i }.arc()).collect();
    let mut laws = Vec::new();
    for a in 1..=n {
        for b in 1..a {
            laws.push(((a, b), Interchange::new(n, a - 1, b - 1)?.arc()));
        }
    }
    DistributiveSeries::new(format!("globular{n}"), monads, laws)
}

/// `T_0 T_1 ⋯ T_{n-1}(G)` with every string of length at most `bound`.
pub fn free_ncat(g: &GlobularSet, bound: usize) -> Result<Complex> {
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let n = g.n();
    let monads: Vec<MonadRef<Globs>> = (0..n).map(|i| Compose { n, i }.arc()).collect();
    let refs: Vec<&MonadRef<Globs>> = monads.iter().collect();
    let out = apply_stack(&refs, &g.complex(), bound)?;
    check_ceiling(out.cells.iter().map(Vec::len).sum())?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::globular::fixture;
    use crate::monad::check_monad_laws;
    use crate::series::{check_distlaw, check_yang_baxter};

    /// `f : x → y`, `g : y → y`.
    fn graph() -> GlobularSet {
        fixture(1, &[&["x", "y"], &["f", "g"]], &[&[("f", "x"), ("g", "y")]], &[&[("f", "y"), ("g", "y")]])
    }

    /// A 2×2 grid of 2-cells: `α : f ⇒ g`, `γ : g ⇒ h` over `x → y`, and
    /// `β : k ⇒ l`, `δ : l ⇒ m` over `y → z`.
    fn grid() -> GlobularSet {
        fixture(
            2,
            &[&["x", "y", "z"], &["f", "g", "h", "k", "l", "m"], &["alpha", "beta", "gamma", "delta"]],
            &[
                &[("f", "x"), ("g", "x"), ("h", "x"), ("k", "y"), ("l", "y"), ("m", "y")],
                &[("alpha", "f"), ("gamma", "g"), ("beta", "k"), ("delta", "l")],
            ],
            &[
                &[("f", "y"), ("g", "y"), ("h", "y"), ("k", "z"), ("l", "z"), ("m", "z")],
                &[("alpha", "g"), ("gamma", "h"), ("beta", "l"), ("delta", "m")],
            ],
        )
    }

    fn names(cells: &[Cell]) -> Vec<String> {
        let mut v: Vec<String> = cells.iter().map(Cell::to_string).collect();
        v.sort();
        v
    }

    #[test]
    fn paths_of_length_two() {
        let out = Compose { n: 1, i: 0 }.apply(&graph().complex(), 2).unwrap();
        assert_eq!(out.cells[0].len(), 2);
        assert_eq!(names(&out.cells[1]), ["[f,g]", "[f]", "[g,g]", "[g]", "ε(x)", "ε(y)"]);
        assert!(out.validate().passed());
    }

    #[test]
    fn bound_one_gives_singletons_and_identities() {
        let g = grid();
        let out = Compose { n: 2, i: 0 }.apply(&g.complex(), 1).unwrap();
        assert_eq!(out.counts(), vec![3, 6 + 3, 4 + 3]);
        assert!(out.validate().passed());
    }

    #[test]
    fn vertical_composition_leaves_low_dimensions() {
        let g = grid();
        let base = g.complex();
        let out = Compose { n: 2, i: 1 }.apply(&base, 2).unwrap();
        assert_eq!(out.cells[0], base.cells[0]);
        assert_eq!(out.cells[1], base.cells[1]);
        assert!(out.cells[2].contains(&Cell::string(1, vec![g.cell(2, "alpha").unwrap(), g.cell(2, "gamma").unwrap()])));
        assert!(out.validate().passed());
    }

    #[test]
    fn mult_flattens() {
        let g = graph();
        let (f, gg) = (g.cell(1, "f").unwrap(), g.cell(1, "g").unwrap());
        let t = Compose { n: 1, i: 0 };
        let s = |v: Vec<Cell>| Cell::string(0, v);
        let nested = s(vec![s(vec![f.clone()]), s(vec![gg.clone()])]);
        assert_eq!(t.mult(&nested).unwrap(), s(vec![f.clone(), gg.clone()]));
        let three = s(vec![s(vec![f.clone(), gg.clone()]), s(vec![gg.clone()])]);
        assert_eq!(t.mult(&three).unwrap(), s(vec![f, gg.clone(), gg]));
        let x = g.cell(0, "x").unwrap();
        let id = Cell::empty(1, 0, x.clone());
        assert_eq!(t.mult(&id).unwrap(), id);
        let only_ids = s(vec![Cell::empty(1, 0, x.clone())]);
        assert_eq!(t.mult(&only_ids).unwrap(), id);
    }

    #[test]
    fn compose_monads_obey_laws() {
        let g = grid();
        for i in 0..2 {
            let m = Compose { n: 2, i }.arc();
            assert!(check_monad_laws(&m, &g.complex(), 2).unwrap().passed(), "T{i}");
        }
    }

    #[test]
    fn free_ncat_is_globular() {
        let out = free_ncat(&grid(), 2).unwrap();
        assert!(out.validate().passed());
    }

    #[test]
    fn interchange_transposes_a_square() {
        let g = grid();
        let c = |n: &str| g.cell(2, n).unwrap();
        let column_of_rows = Cell::string(
            1,
            vec![
                Cell::string(0, vec![c("alpha"), c("beta")]),
                Cell::string(0, vec![c("gamma"), c("delta")]),
            ],
        );
        let row_of_columns = Cell::string(
            0,
            vec![
                Cell::string(1, vec![c("alpha"), c("gamma")]),
                Cell::string(1, vec![c("beta"), c("delta")]),
            ],
        );
        let law = Interchange::new(2, 1, 0).unwrap();
        assert_eq!(law.apply(&column_of_rows).unwrap(), row_of_columns);
        let single = Cell::string(1, vec![Cell::string(0, vec![c("alpha")])]);
        assert_eq!(
            law.apply(&single).unwrap(),
            Cell::string(0, vec![Cell::string(1, vec![c("alpha")])])
        );
    }

    #[test]
    fn interchange_rejects_ragged_grids() {
        let g = grid();
        let c = |n: &str| g.cell(2, n).unwrap();
        let ragged = Cell::string(
            1,
            vec![Cell::string(0, vec![c("alpha"), c("beta")]), Cell::string(0, vec![c("gamma")])],
        );
        let law = Interchange::new(2, 1, 0).unwrap();
        assert_eq!(law.apply(&ragged), Err(Error::RaggedGrid { lengths: vec![2, 1] }));
    }

    #[test]
    fn interchange_on_degenerate_grids() {
        let g = grid();
        let law = Interchange::new(2, 1, 0).unwrap();
        let (f, k) = (g.cell(1, "f").unwrap(), g.cell(1, "k").unwrap());
        // height zero: the identity on a composite 1-cell
        let flat = Cell::empty(2, 1, Cell::string(0, vec![f.clone(), k.clone()]));
        assert_eq!(
            law.apply(&flat).unwrap(),
            Cell::string(0, vec![Cell::empty(2, 1, f), Cell::empty(2, 1, k)])
        );
        // width zero: a column of identities on one object
        let x = g.cell(0, "x").unwrap();
        let thin = Cell::string(1, vec![Cell::empty(2, 0, x.clone()), Cell::empty(2, 0, x.clone())]);
        assert_eq!(law.apply(&thin).unwrap(), Cell::empty(2, 0, x));
    }

    #[test]
    fn interchange_index_order() {
        assert!(Interchange::new(2, 0, 1).is_err());
        assert!(Interchange::new(2, 2, 1).is_err());
    }

    #[test]
    fn interchange_is_a_distributive_law() {
        let law = Interchange::new(2, 1, 0).unwrap();
        let r = check_distlaw(&law, &grid().complex(), 2).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses().next());
    }

    #[test]
    fn three_dimensional_hexagon() {
        let g = fixture(
            3,
            &[&["x", "y"], &["f", "g"], &["alpha"], &["Gamma"]],
            &[&[("f", "x"), ("g", "x")], &[("alpha", "f")], &[("Gamma", "alpha")]],
            &[&[("f", "y"), ("g", "y")], &[("alpha", "g")], &[("Gamma", "alpha")]],
        );
        let series = globular_series(3).unwrap();
        assert_eq!(series.triples(), vec![(3, 2, 1)]);
        let r = check_yang_baxter(&series, 3, 2, 1, &g.complex(), 2).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses().next());
    }
}
