//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use distseries::globular::GlobularSet;
use distseries::term::{Carrier, Constant, Sym, Term};
use distseries::zoo::{Expr, Interp};
use rand::Rng;

pub fn gset(n: usize, cells: &[&[&str]], src: &[&[(&str, &str)]], tgt: &[&[(&str, &str)]]) -> GlobularSet {
    let cells: Vec<Vec<&str>> = cells.iter().map(|d| d.to_vec()).collect();
    let src: Vec<Vec<(&str, &str)>> = src.iter().map(|d| d.to_vec()).collect();
    let tgt: Vec<Vec<(&str, &str)>> = tgt.iter().map(|d| d.to_vec()).collect();
    GlobularSet::from_names(n, &cells, &src, &tgt).expect("fixture is well formed")
}

/// A single object, viewed as an `n`-globular set.
pub fn point(n: usize) -> GlobularSet {
    let mut cells: Vec<&[&str]> = vec![&["x"]];
    let mut maps: Vec<&[(&str, &str)]> = Vec::new();
    for _ in 0..n {
        cells.push(&[]);
        maps.push(&[]);
    }
    gset(n, &cells, &maps, &maps)
}

/// `f : x → y`.
pub fn one_arrow() -> GlobularSet {
    gset(1, &[&["x", "y"], &["f"]], &[&[("f", "x")]], &[&[("f", "y")]])
}

/// `f : x → y`, `g : y → y`.
pub fn arrow_and_loop() -> GlobularSet {
    gset(
        1,
        &[&["x", "y"], &["f", "g"]],
        &[&[("f", "x"), ("g", "y")]],
        &[&[("f", "y"), ("g", "y")]],
    )
}

/// `f, g : x → y` and `α : f ⇒ g`.
pub fn single_two_cell() -> GlobularSet {
    gset(
        2,
        &[&["x", "y"], &["f", "g"], &["alpha"]],
        &[&[("f", "x"), ("g", "x")], &[("alpha", "f")]],
        &[&[("f", "y"), ("g", "y")], &[("alpha", "g")]],
    )
}

/// `f, g : x → y` and two parallel 2-cells `α, β : f ⇒ g`.
pub fn parallel_pair() -> GlobularSet {
    gset(
        2,
        &[&["x", "y"], &["f", "g"], &["alpha", "beta"]],
        &[&[("f", "x"), ("g", "x")], &[("alpha", "f"), ("beta", "f")]],
        &[&[("f", "y"), ("g", "y")], &[("alpha", "g"), ("beta", "g")]],
    )
}

/// `f : x → x` with endo-2-cells `α` and `id_f` on `f`.
pub fn loop_with_identity() -> GlobularSet {
    gset(
        2,
        &[&["x"], &["f"], &["alpha", "id_f"]],
        &[&[("f", "x")], &[("alpha", "f"), ("id_f", "f")]],
        &[&[("f", "x")], &[("alpha", "f"), ("id_f", "f")]],
    )
}

/// `f : x → y`, `g : y → y` and `γ : g ⇒ g`.
pub fn whiskerable() -> GlobularSet {
    gset(
        2,
        &[&["x", "y"], &["f", "g"], &["gamma"]],
        &[&[("f", "x"), ("g", "y")], &[("gamma", "g")]],
        &[&[("f", "y"), ("g", "y")], &[("gamma", "g")]],
    )
}

/// `f : x → x`, `α : f ⇒ f`, `Γ : α ⇛ α`.
pub fn three_loop() -> GlobularSet {
    gset(
        3,
        &[&["x"], &["f"], &["alpha"], &["Gamma"]],
        &[&[("f", "x")], &[("alpha", "f")], &[("Gamma", "alpha")]],
        &[&[("f", "x")], &[("alpha", "f")], &[("Gamma", "alpha")]],
    )
}

pub type Mat = [[i64; 2]; 2];

/// The ring of 2×2 integer matrices.
pub struct Matrices;

impl Interp<Mat> for Matrices {
    fn int(&self, n: i64) -> Mat {
        [[n, 0], [0, n]]
    }
    fn add(&self, a: &Mat, b: &Mat) -> Mat {
        [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
    }
    fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let mut out = [[0; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        out
    }
    fn neg(&self, a: &Mat) -> Mat {
        [[-a[0][0], -a[0][1]], [-a[1][0], -a[1][1]]]
    }
}

pub fn random_matrix(rng: &mut impl Rng) -> Mat {
    let mut e = || rng.gen_range(-3..=3);
    [[e(), e()], [e(), e()]]
}

/// Evaluate a ring normal form `Σ c·w` (words over generators, `1` for the
/// empty word) in the matrix ring, written independently of the normalizer.
pub fn eval_ring3_normal_form(nf: &Term, env: &dyn Fn(&Sym) -> Mat) -> Mat {
    let m = Matrices;
    let Term::Comb(entries) = nf else {
        panic!("ring normal form is a combination, got {nf}")
    };
    let mut total = m.int(0);
    for (mono, c) in entries {
        let value = match mono {
            Term::Const(Constant::Unit) => m.int(1),
            Term::Inj(w) => match w.as_ref() {
                Term::Seq(letters) => letters.iter().fold(m.int(1), |acc, l| match l {
                    Term::Gen(s) => m.mul(&acc, &env(s)),
                    other => panic!("letter {other} is not a generator"),
                }),
                other => panic!("monomial {other} is not a word"),
            },
            other => panic!("unexpected monomial {other}"),
        };
        let scaled = m.mul(&m.int(*c), &value);
        total = m.add(&total, &scaled);
    }
    total
}

/// Sort every word of a ring normal form into a multiset.
pub fn abelianize(nf: &Term) -> Term {
    let Term::Comb(entries) = nf else {
        panic!("ring normal form is a combination, got {nf}")
    };
    Term::comb(entries.iter().map(|(mono, c)| {
        let letters: Vec<Term> = match mono {
            Term::Const(Constant::Unit) => vec![],
            Term::Inj(w) => match w.as_ref() {
                Term::Seq(v) => v.clone(),
                other => panic!("monomial {other} is not a word"),
            },
            other => panic!("unexpected monomial {other}"),
        };
        (Term::bag(letters.into_iter().map(|l| (l, 1))), *c)
    }))
}

/// A random ring expression of exactly `size` nodes over `vars`.
pub fn random_expr(rng: &mut impl Rng, vars: &Carrier, size: usize) -> Expr {
    match size {
        0 | 1 => leaf(rng, vars),
        2 => Expr::neg(leaf(rng, vars)),
        _ => match rng.gen_range(0..5) {
            0 => Expr::neg(random_expr(rng, vars, size - 1)),
            k => {
                let left = rng.gen_range(1..size - 1);
                let (l, r) = (random_expr(rng, vars, left), random_expr(rng, vars, size - 1 - left));
                if k % 2 == 0 {
                    Expr::add(l, r)
                } else {
                    Expr::mul(l, r)
                }
            }
        },
    }
}

fn leaf(rng: &mut impl Rng, vars: &Carrier) -> Expr {
    match rng.gen_range(0..10) {
        0 => Expr::One,
        1 => Expr::Zero,
        2 => Expr::IntLit(rng.gen_range(2..=3)),
        _ => Expr::Var(vars.syms()[rng.gen_range(0..vars.len())].clone()),
    }
}

/// 200 expressions over one to three variables with at most six nodes.
pub fn expression_corpus(seed: u64) -> Vec<(Carrier, Expr)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..200)
        .map(|_| {
            let k = rng.gen_range(1..=3);
            let vars = Carrier::generators(k);
            let size = rng.gen_range(1..=6);
            let e = random_expr(&mut rng, &vars, size);
            (vars, e)
        })
        .collect()
}
