mod common;

use distseries::globular::{
    brute_force_oracle, free_ncat, Cell, Compose, GlobularSet, Globs, Interchange,
};
use distseries::monad::apply_stack;
use distseries::series::check_distlaw;
use distseries::term::{Carrier, Constant, Sym, Term};
use distseries::zoo::{normalize_expr, parse_expr, pretty, Expr, Interp, Theory, Zoo};
use distseries::{DistLaw, Monad, MonadRef, Universe};
use proptest::prelude::*;

use common::{eval_ring3_normal_form, gset, Mat, Matrices};

fn zoo() -> impl Strategy<Value = Zoo> {
    prop::sample::select(Zoo::ALL.to_vec())
}

fn expr(vars: usize, allow_neg: bool) -> impl Strategy<Value = Expr> {
    let x = Carrier::generators(vars);
    let syms: Vec<Sym> = x.syms().to_vec();
    let leaf = prop_oneof![
        4 => prop::sample::select(syms).prop_map(Expr::Var),
        1 => Just(Expr::One),
        1 => Just(Expr::Zero),
        1 => (2u64..=3).prop_map(Expr::IntLit),
    ];
    leaf.prop_recursive(3, 7, 2, move |inner| {
        let bin = prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::add(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::mul(l, r)),
        ];
        if allow_neg {
            prop_oneof![3 => bin, 1 => inner.prop_map(Expr::neg)].boxed()
        } else {
            bin.boxed()
        }
    })
}

fn matrix() -> impl Strategy<Value = Mat> {
    prop::array::uniform2(prop::array::uniform2(-3i64..=3))
}

/// Non-negative 2×2 matrices: a noncommutative rig.
struct NatMatrices;

impl Interp<Mat> for NatMatrices {
    fn int(&self, n: i64) -> Mat {
        Matrices.int(n)
    }
    fn add(&self, a: &Mat, b: &Mat) -> Mat {
        Matrices.add(a, b)
    }
    fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        Matrices.mul(a, b)
    }
    fn neg(&self, _: &Mat) -> Mat {
        unreachable!("rig expressions have no negation")
    }
}

/// `0`, or a positive sum of monomials, each `1` or a word.
fn eval_rig_normal_form(nf: &Term, env: &dyn Fn(&Sym) -> Mat) -> Mat {
    let m = Matrices;
    match nf {
        Term::Const(Constant::Zero) => m.int(0),
        Term::Inj(sum) => {
            let Term::Bag(entries) = sum.as_ref() else { panic!("{nf}") };
            entries.iter().fold(m.int(0), |acc, (mono, k)| {
                let value = match mono {
                    Term::Const(Constant::Unit) => m.int(1),
                    Term::Inj(w) => match w.as_ref() {
                        Term::Seq(v) => v.iter().fold(m.int(1), |p, l| match l {
                            Term::Gen(s) => m.mul(&p, &env(s)),
                            other => panic!("{other}"),
                        }),
                        other => panic!("{other}"),
                    },
                    other => panic!("{other}"),
                };
                m.add(&acc, &m.mul(&m.int(*k as i64), &value))
            })
        }
        other => panic!("rig normal form expected, got {other}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unit_then_mult_is_identity(z in zoo(), pick in any::<prop::sample::Index>()) {
        let x = Carrier::generators(2).terms();
        let terms = z.apply(&x, 3).unwrap();
        let t = &terms[pick.index(terms.len())];
        prop_assert_eq!(&z.mult(&z.unit(t)).unwrap(), t);
        prop_assert_eq!(&z.mult(&z.map(t, &|y| Ok(z.unit(y))).unwrap()).unwrap(), t);
    }

    #[test]
    fn enumeration_grows_with_the_bound(z in zoo(), b1 in 1usize..3, extra in 0usize..2) {
        let x = Carrier::generators(2);
        let small = z.enumerate(&x, b1).unwrap();
        let large = z.enumerate(&x, b1 + extra).unwrap();
        prop_assert!(small.iter().all(|t| large.contains(t)));
        prop_assert!(small.iter().all(|t| t.size() <= b1));
    }

    #[test]
    fn canonical_forms_are_stable(z in zoo(), pick in any::<prop::sample::Index>()) {
        // re-normalizing a normal form changes nothing
        let x = Carrier::generators(2).terms();
        let terms = z.apply(&x, 3).unwrap();
        let t = &terms[pick.index(terms.len())];
        let again = match t {
            Term::Bag(v) => Term::bag(v.iter().cloned().rev()),
            Term::Comb(v) => Term::comb(v.iter().cloned().rev()),
            other => other.clone(),
        };
        prop_assert_eq!(&again, t);
    }

    #[test]
    fn ring3_normalization_is_sound(e in expr(3, true), vals in prop::array::uniform3(matrix())) {
        let nf = normalize_expr(Theory::Ring3, &e).unwrap();
        let env = |s: &Sym| vals[s.rank() as usize];
        prop_assert_eq!(e.eval(&Matrices, &env), eval_ring3_normal_form(&nf, &env));
    }

    #[test]
    fn rig_normalization_is_sound(e in expr(3, false), vals in prop::array::uniform3(prop::array::uniform2(prop::array::uniform2(0i64..=3)))) {
        let nf = normalize_expr(Theory::Rig, &e).unwrap();
        let env = |s: &Sym| vals[s.rank() as usize];
        prop_assert_eq!(e.eval(&NatMatrices, &env), eval_rig_normal_form(&nf, &env));
    }

    #[test]
    fn pretty_printing_round_trips(e in expr(3, true)) {
        let x = Carrier::generators(3);
        for theory in [Theory::Ring3, Theory::Ring2] {
            let nf = normalize_expr(theory, &e).unwrap();
            let text = pretty(theory, &nf);
            let reparsed = parse_expr(&text, &x).unwrap();
            prop_assert_eq!(normalize_expr(theory, &reparsed).unwrap(), nf, "{}", text);
        }
    }

    #[test]
    fn rig_rejects_negation(e in expr(2, false)) {
        prop_assert!(normalize_expr(Theory::Rig, &Expr::neg(e)).is_err());
    }
}

/// A random 2-globular set with at most six cells: objects, 1-cells between
/// them, and 2-cells between parallel 1-cells.
fn small_two_globular() -> impl Strategy<Value = GlobularSet> {
    (1usize..=2, 1usize..=2)
        .prop_flat_map(|(objects, arrows)| {
            let ends = prop::collection::vec((0..objects, 0..objects), arrows);
            (Just(objects), ends, 0usize..=(6 - objects - arrows).min(2))
        })
        .prop_flat_map(|(objects, ends, twos)| {
            let picks = prop::collection::vec((0..ends.len(), any::<prop::sample::Index>()), twos);
            (Just(objects), Just(ends), picks)
        })
        .prop_map(|(objects, ends, picks)| {
            let obj: Vec<String> = (0..objects).map(|k| format!("x{k}")).collect();
            let arr: Vec<String> = (0..ends.len()).map(|k| format!("f{k}")).collect();
            let two: Vec<String> = (0..picks.len()).map(|k| format!("a{k}")).collect();
            let mut src1 = Vec::new();
            let mut tgt1 = Vec::new();
            for (k, (s, t)) in ends.iter().enumerate() {
                src1.push((arr[k].as_str(), obj[*s].as_str()));
                tgt1.push((arr[k].as_str(), obj[*t].as_str()));
            }
            let mut src2 = Vec::new();
            let mut tgt2 = Vec::new();
            for (k, (s, pick)) in picks.iter().enumerate() {
                let parallel: Vec<usize> = (0..ends.len()).filter(|m| ends[*m] == ends[*s]).collect();
                let t = parallel[pick.index(parallel.len())];
                src2.push((two[k].as_str(), arr[*s].as_str()));
                tgt2.push((two[k].as_str(), arr[t].as_str()));
            }
            let o: Vec<&str> = obj.iter().map(String::as_str).collect();
            let a: Vec<&str> = arr.iter().map(String::as_str).collect();
            let t: Vec<&str> = two.iter().map(String::as_str).collect();
            gset(2, &[&o, &a, &t], &[&src1, &src2], &[&tgt1, &tgt2])
        })
}

/// Row of columns back to column of rows, written directly.
fn untranspose(c: &Cell) -> Cell {
    match c {
        Cell::Str { along: 0, entries, .. } if !entries.is_empty() => {
            let cols: Vec<&Vec<Cell>> = entries
                .iter()
                .map(|col| match col {
                    Cell::Str { along: 1, entries, .. } => entries,
                    other => panic!("not a column: {other}"),
                })
                .collect();
            let h = cols[0].len();
            Cell::string(1, (0..h).map(|r| Cell::string(0, cols.iter().map(|col| col[r].clone()).collect())).collect())
        }
        other => other.clone(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_monads_produce_globular_sets(g in small_two_globular(), i in 0usize..2) {
        let out = Compose { n: 2, i }.apply(&g.complex(), 2).unwrap();
        prop_assert!(out.validate().passed());
    }

    #[test]
    fn free_two_category_matches_the_oracle(g in small_two_globular()) {
        prop_assert_eq!(free_ncat(&g, 2).unwrap().counts(), brute_force_oracle(&g, 2).unwrap());
    }

    #[test]
    fn interchange_is_a_law_on_small_sets(g in small_two_globular()) {
        let law = Interchange::new(2, 1, 0).unwrap();
        let r = check_distlaw(&law, &g.complex(), 2).unwrap();
        prop_assert!(r.passed(), "{:?}", r.witnesses().next());
    }

    #[test]
    fn transposing_twice_restores_the_grid(g in small_two_globular()) {
        let law = Interchange::new(2, 1, 0).unwrap();
        let t1: MonadRef<Globs> = Compose { n: 2, i: 1 }.arc();
        let t0: MonadRef<Globs> = Compose { n: 2, i: 0 }.arc();
        let grids = Globs::elems(&apply_stack(&[&t1, &t0], &g.complex(), 2).unwrap());
        for c in grids.iter().filter(|c| c.dim() == 2) {
            let nondegenerate = matches!(c, Cell::Str { entries, .. } if !entries.is_empty()
                && entries.iter().all(|r| matches!(r, Cell::Str { entries, .. } if !entries.is_empty())));
            if nondegenerate {
                prop_assert_eq!(&untranspose(&law.apply(c).unwrap()), c);
            }
        }
    }
}
