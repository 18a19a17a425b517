use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use distseries::globular::{brute_force_oracle, free_ncat, GlobularSet};
use distseries::monad::{apply_stack, check_monad_laws, diagram};
use distseries::series::{
    check_distlaw, check_route_independence, check_yang_baxter, compose_series, validate_series, DEFAULT_ROUTE_LIMIT,
};
use distseries::term::set_enumeration_ceiling;
use distseries::zoo::{
    everything_to_zero_law, identifiers, identity_pseudo_law, law_mult_over_add, law_unit_absorb, normalize_expr,
    parse_expr, pretty, registered_laws, Commutativity, DropLastMonoid, Theory, Zoo,
};
use distseries::{Carrier, CheckReport, Error, LawRef, MonadRef, Route, Sets, Term};

mod report;

use report::{render, Outcome};

/// Check distributive laws and composite monads on finite carriers, and build
/// free strict n-categories from globular-set files.
#[derive(Parser)]
#[command(name = "distseries", version)]
struct Cli {
    /// Abort enumerations larger than this many terms.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    ceiling: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CarrierArgs {
    /// Use the generators a, b, c, ... (this many).
    #[arg(long, conflicts_with = "names")]
    generators: Option<usize>,

    /// Use these generator names, comma separated.
    #[arg(long, value_delimiter = ',')]
    names: Option<Vec<String>>,
}

impl CarrierArgs {
    fn carrier(&self, default: usize) -> Result<Carrier, Error> {
        match (&self.names, self.generators) {
            (Some(names), _) => Carrier::new(names.iter().map(String::as_str)),
            (None, Some(k)) => Ok(Carrier::generators(k)),
            (None, None) => Ok(Carrier::generators(default)),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Monad laws for a zoo monad (or `all`), on terms up to `--bound` (default 3).
    Laws {
        #[arg(long, default_value = "all")]
        monad: String,
        #[command(flatten)]
        carrier: CarrierArgs,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// The four coherence diagrams and naturality for a registered law (or `all`).
    Distlaw {
        #[arg(long, default_value = "all")]
        law: String,
        #[command(flatten)]
        carrier: CarrierArgs,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// The hexagon for every triple of a series, or for `--triple i,j,k`.
    YangBaxter {
        #[arg(long)]
        theory: Theory,
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<usize>>,
        #[command(flatten)]
        carrier: CarrierArgs,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Monad laws, distributive laws and hexagons of a whole series.
    Series {
        #[arg(long)]
        theory: Theory,
        #[command(flatten)]
        carrier: CarrierArgs,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Compare the composite monad along every bracketing, or one `--route`
    /// such as `((1,2),3)` against the right-nested one.
    Routes {
        #[arg(long)]
        theory: Theory,
        #[arg(long)]
        route: Option<String>,
        #[command(flatten)]
        carrier: CarrierArgs,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Print the normal form of an expression. Without a carrier option the
    /// generators are the expression's identifiers, sorted.
    Normalize {
        #[arg(long)]
        theory: Theory,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        carrier: CarrierArgs,
    },
    /// Cell counts of the free n-category on a globular-set file, strings up
    /// to `--bound` (default 2).
    Ncat {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[arg(long)]
        compare_oracle: bool,
    },
    /// Compare the free n-category against the closure oracle.
    OracleCompare {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
}

fn monad_by_id(id: &str) -> Result<MonadRef<Sets>, String> {
    if id.eq_ignore_ascii_case("DropLastMonoid") {
        return Ok(Arc::new(DropLastMonoid));
    }
    id.parse::<Zoo>().map(Zoo::arc)
}

/// Registered laws, the commutative variants and the negative controls.
fn laws_by_label(label: &str) -> Result<Vec<(String, LawRef<Sets>)>, String> {
    let mut all: Vec<(String, LawRef<Sets>)> = registered_laws().into_iter().map(|(l, law)| (l, law.arc())).collect();
    all.push(("ring2(2,1)".into(), law_mult_over_add(Commutativity::Comm).arc()));
    all.push(("cmonoid(2,1)".into(), law_unit_absorb(Commutativity::Comm).arc()));
    if label == "all" {
        return Ok(all);
    }
    all.push(("identity-pseudo".into(), Arc::new(identity_pseudo_law())));
    all.push(("to-zero".into(), Arc::new(everything_to_zero_law())));
    let labels: Vec<String> = all.iter().map(|(l, _)| l.clone()).collect();
    all.into_iter()
        .find(|(l, _)| l == label)
        .map(|found| vec![found])
        .ok_or_else(|| format!("unknown law `{label}`; known: all, {}", labels.join(", ")))
}

fn load(path: &PathBuf) -> Result<GlobularSet, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::Usage(format!("cannot read {}: {e}", path.display())))?;
    GlobularSet::from_json(&text).map_err(|e| Outcome::Usage(format!("{}: {e}", path.display())))
}

fn counts_lines(out: &mut Vec<String>, label: &str, counts: &[usize]) {
    for (d, c) in counts.iter().enumerate() {
        out.push(format!("{label}dim {d}: {c}"));
    }
}

fn run(cmd: Command) -> Result<Outcome, Outcome> {
    let engine = |e: Error| match e {
        Error::BoundTooLarge { .. } | Error::InvalidBound | Error::UnknownGenerator(_) | Error::DuplicateGenerator(_) => {
            Outcome::Usage(e.to_string())
        }
        other => Outcome::Failed(vec![format!("error: {other}")]),
    };
    match cmd {
        Command::Laws { monad, carrier, bound } => {
            let x = carrier.carrier(2).map_err(engine)?.terms();
            let monads: Vec<MonadRef<Sets>> = if monad == "all" {
                Zoo::ALL.iter().map(|z| z.arc()).collect()
            } else {
                vec![monad_by_id(&monad).map_err(Outcome::Usage)?]
            };
            let mut report = CheckReport::new();
            for m in monads {
                report.extend(check_monad_laws(&m, &x, bound).map_err(engine)?.scoped(&m.name()));
            }
            Ok(render(&report, None))
        }
        Command::Distlaw { law, carrier, bound } => {
            let x = carrier.carrier(2).map_err(engine)?.terms();
            let mut report = CheckReport::new();
            for (label, l) in laws_by_label(&law).map_err(Outcome::Usage)? {
                report.extend(check_distlaw(l.as_ref(), &x, bound).map_err(engine)?.scoped(&label));
            }
            Ok(render(&report, None))
        }
        Command::YangBaxter { theory, triple, carrier, bound } => {
            let series = theory.series();
            let x = carrier.carrier(1).map_err(engine)?.terms();
            let triples = match triple {
                Some(t) if t.len() == 3 => vec![(t[0], t[1], t[2])],
                Some(_) => return Err(Outcome::Usage("--triple takes three indices, like 3,2,1".into())),
                None => series.triples(),
            };
            let mut report = CheckReport::new();
            for (i, j, k) in triples {
                report.extend(check_yang_baxter(&series, i, j, k, &x, bound).map_err(|e| match e {
                    Error::IndexOrder { .. } => Outcome::Usage(e.to_string()),
                    other => engine(other),
                })?);
            }
            Ok(render(&report, None))
        }
        Command::Series { theory, carrier, bound } => {
            let series = theory.series();
            let x = carrier.carrier(1).map_err(engine)?.terms();
            let report = validate_series(&series, &x, bound).map_err(engine)?;
            let summary = format!(
                "{} monads, {} laws, {} YB triples",
                series.len(),
                series.laws().count(),
                series.triples().len()
            );
            Ok(render(&report, Some(&summary)))
        }
        Command::Routes { theory, route, carrier, bound } => {
            let series = theory.series();
            let x = carrier.carrier(1).map_err(engine)?.terms();
            let report = match route {
                None => check_route_independence(&series, &x, bound, DEFAULT_ROUTE_LIMIT).map_err(engine)?,
                Some(spec) => {
                    let n = series.len();
                    let r = Route::parse(&spec, n).map_err(|e| Outcome::Usage(e.to_string()))?;
                    let reference = compose_series(&series, &Route::right_nested(1, n)).map_err(engine)?;
                    let m = compose_series(&series, &r).map_err(engine)?;
                    let layers: Vec<&MonadRef<Sets>> = series.monads().iter().chain(series.monads()).collect();
                    let inputs: Vec<Term> = apply_stack(&layers, &x, bound).map_err(engine)?;
                    let mut report = CheckReport::new();
                    report.push(diagram(&format!("route[{r}]"), &inputs, |e| (reference.mult(e), m.mult(e))));
                    report
                }
            };
            Ok(render(&report, None))
        }
        Command::Normalize { theory, expr, carrier } => {
            let x = if carrier.names.is_none() && carrier.generators.is_none() {
                let names = identifiers(&expr).map_err(|e| Outcome::Failed(vec![format!("error: {e}")]))?;
                Carrier::new(names.iter().map(String::as_str)).map_err(engine)?
            } else {
                carrier.carrier(0).map_err(engine)?
            };
            let parsed = parse_expr(&expr, &x).map_err(|e| Outcome::Failed(vec![format!("error: {e}")]))?;
            let nf = normalize_expr(theory, &parsed).map_err(|e| Outcome::Failed(vec![format!("error: {e}")]))?;
            Ok(Outcome::Passed(vec![pretty(theory, &nf)]))
        }
        Command::Ncat { input, bound, compare_oracle } => {
            let g = load(&input)?;
            let counts = free_ncat(&g, bound).map_err(engine)?.counts();
            let mut lines = Vec::new();
            counts_lines(&mut lines, "", &counts);
            if !compare_oracle {
                return Ok(Outcome::Passed(lines));
            }
            let oracle = brute_force_oracle(&g, bound).map_err(engine)?;
            oracle_verdict(lines, &counts, &oracle)
        }
        Command::OracleCompare { input, bound } => {
            let g = load(&input)?;
            let counts = free_ncat(&g, bound).map_err(engine)?.counts();
            let oracle = brute_force_oracle(&g, bound).map_err(engine)?;
            let mut lines = Vec::new();
            counts_lines(&mut lines, "ncat ", &counts);
            counts_lines(&mut lines, "oracle ", &oracle);
            oracle_verdict(lines, &counts, &oracle)
        }
    }
}

fn oracle_verdict(mut lines: Vec<String>, ours: &[usize], oracle: &[usize]) -> Result<Outcome, Outcome> {
    if ours == oracle {
        lines.push("ORACLE MATCH".into());
        Ok(Outcome::Passed(lines))
    } else {
        lines.push(format!("ORACLE MISMATCH: ncat {ours:?}, oracle {oracle:?}"));
        Ok(Outcome::Failed(lines))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_enumeration_ceiling(cli.ceiling);
    let outcome = run(cli.command).unwrap_or_else(|o| o);
    outcome.emit()
}
