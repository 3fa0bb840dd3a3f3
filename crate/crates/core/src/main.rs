use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use drinfeld::appendix::{appendix_report, expected_report, json_diff, r_lambda_checks};
use drinfeld::double::{canonical_r_and_v, drinfeld_double, verify_quasitriangular, verify_ribbon};
use drinfeld::hopf::{verify_hopf, CheckList, VerificationReport};
use drinfeld::io;
use drinfeld::lattice::{block_data, enumerate_triples, DEFAULT_LATTICE_BUDGET};
use drinfeld::quotient::{build_quotient, quotient_checks};
use drinfeld::{Error, Field};

#[derive(Parser)]
#[command(name = "drinfeld", version, about = "Doubles of finite group schemes, their quotients and braided subcategories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Candidate budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_BUDGET)]
    budget: u128,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(clap::Args)]
struct GroupArgs {
    /// Group description or emitted group scheme.
    #[arg(long)]
    group: PathBuf,
    /// q, p7, F7, 7, p2^2, ...
    #[arg(long)]
    field: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group scheme and emit it as JSON.
    Build(GroupArgs),
    /// Check the Hopf axioms of a group scheme, a Hopf algebra or a triple's quotient.
    Verify {
        #[arg(long, conflicts_with_all = ["hopf", "triple"])]
        group: Option<PathBuf>,
        #[arg(long, conflicts_with = "triple")]
        hopf: Option<PathBuf>,
        #[arg(long)]
        triple: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
    /// The Drinfeld double with its R-matrix, ribbon element and checks.
    Double(GroupArgs),
    /// The quotient pair of a triple.
    Quotient {
        #[arg(long)]
        triple: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// All triples with flags, the Hasse diagram and the meet table.
    Lattice(GroupArgs),
    /// All triples with flags and the Hasse diagram.
    Enumerate(GroupArgs),
    /// Block data of a triple over a constant group.
    Blocks {
        #[arg(long)]
        triple: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
    /// Reproduce the 𝔾_{a,1} ⊆ 𝔾_{a,2} tables for a prime and diff them.
    Appendix {
        #[arg(long)]
        p: u32,
        /// Expected report; defaults to the committed one.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

enum Failure {
    Verify(String),
    Schema(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Schema(m) => Failure::Schema(m),
            Error::BudgetExceeded(_) | Error::FieldTooLargeForEnumeration { .. } | Error::NoInvertibleSectionFound => {
                Failure::Budget(e.to_string())
            }
            other => Failure::Verify(other.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn read_json(path: &Path) -> Run<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))
}

fn parse_field(s: &Option<String>) -> Run<Option<Field>> {
    Ok(s.as_deref().map(Field::parse).transpose()?)
}

fn load_group(a: &GroupArgs) -> Run<drinfeld::group::GroupScheme> {
    Ok(io::read_group(&read_json(&a.group)?, parse_field(&a.field)?.as_ref())?)
}

fn load_triple(path: &Path, field: &Option<String>) -> Run<(drinfeld::group::GroupScheme, drinfeld::quotient::Triple)> {
    let base = path.parent().unwrap_or(Path::new("."));
    Ok(io::read_triple_file(&read_json(path)?, parse_field(field)?.as_ref(), base)?)
}

fn first_report_failure(r: &VerificationReport) -> Option<String> {
    r.failures().first().map(|c| format!("{}: {}", c.axiom, c.witness.clone().unwrap_or_default()))
}

fn first_check_failure(c: &CheckList) -> Option<String> {
    c.first_failure().map(|c| format!("{}: {}", c.axiom, c.witness.clone().unwrap_or_default()))
}

/// Output text plus the first failing check, if any.
struct Outcome {
    json: Value,
    text: String,
    dot: Option<String>,
    failure: Option<String>,
}

fn run(cli: &Cli) -> Run<Outcome> {
    let budget = cli.budget;
    match &cli.command {
        Command::Build(a) => {
            let g = load_group(a)?;
            let v = io::group_to_json(&g);
            let text = format!("group scheme of order {} over {}\nk[G] basis: {}\n", g.order(), g.field().name(), g.kg.labels().join(" "));
            Ok(Outcome { json: v, text, dot: None, failure: None })
        }
        Command::Verify { group, hopf, triple, field } => {
            if let Some(t) = triple {
                let (g, t) = load_triple(t, field)?;
                let dbl = drinfeld_double(&g)?;
                let qp = build_quotient(&g, &t)?;
                let checks = quotient_checks(&g, &dbl, &qp)?;
                let failure = first_check_failure(&checks);
                let json = json!({ "schema_version": drinfeld::SCHEMA_VERSION, "kind": "verification", "checks": io::checks_to_json(&checks) });
                return Ok(Outcome { json, text: checks.render(), dot: None, failure });
            }
            let algebras = match (group, hopf) {
                (Some(p), _) => {
                    let g = io::read_group(&read_json(p)?, parse_field(field)?.as_ref())?;
                    vec![("k[G]", g.kg.clone()), ("O(G)", g.og.clone())]
                }
                (None, Some(p)) => vec![("H", io::read_hopf(&read_json(p)?)?)],
                (None, None) => return Err(Failure::Schema("verify needs --group, --hopf or --triple".into())),
            };
            let mut json = json!({ "schema_version": drinfeld::SCHEMA_VERSION, "kind": "verification" });
            let mut text = String::new();
            let mut failure = None;
            for (name, h) in &algebras {
                let r = verify_hopf(h);
                json[*name] = io::report_to_json(&r);
                text.push_str(&format!("{name} (dim {})\n{}", h.dim(), r.render()));
                if failure.is_none() {
                    failure = first_report_failure(&r).map(|w| format!("{name}: {w}"));
                }
            }
            Ok(Outcome { json, text, dot: None, failure })
        }
        Command::Double(a) => {
            let g = load_group(a)?;
            let dbl = drinfeld_double(&g)?;
            let q = canonical_r_and_v(&g, &dbl);
            let hopf = verify_hopf(&dbl.d);
            let mut braid = verify_quasitriangular(&q);
            braid.checks.extend(verify_ribbon(&q)?.checks);
            let json = io::double_to_json(&g, &dbl, &q, &hopf)?;
            let failure = first_report_failure(&hopf).or_else(|| first_check_failure(&braid));
            let text = format!("D(G) of dimension {}\n{}{}", dbl.d.dim(), hopf.render(), braid.render());
            Ok(Outcome { json, text, dot: None, failure })
        }
        Command::Quotient { triple, field } => {
            let (g, t) = load_triple(triple, field)?;
            let dbl = drinfeld_double(&g)?;
            let qp = build_quotient(&g, &t)?;
            let checks = quotient_checks(&g, &dbl, &qp)?;
            let failure = first_check_failure(&checks);
            let text = format!("D(K,H,B) of dimension {}\n{}", qp.d.dim(), checks.render());
            Ok(Outcome { json: io::quotient_to_json(&g, &qp, &checks), text, dot: None, failure })
        }
        Command::Lattice(a) | Command::Enumerate(a) => {
            let g = load_group(a)?;
            let lat = enumerate_triples(&g, budget)?;
            let meets = matches!(cli.command, Command::Lattice(_));
            let json = io::lattice_to_json(&g, &lat, meets)?;
            let mut text = format!("{} triples, {} covering edges\n", lat.nodes.len(), lat.edges.len());
            let mut failure = None;
            for (i, n) in lat.nodes.iter().enumerate() {
                let fl = n.flags;
                text.push_str(&format!(
                    "n{i} {} FPdim {} centralizer n{} sym={} nondeg={} lagr={} triangular={} factorizable={}\n",
                    lat.node_label(&g, i),
                    n.fp_dimension,
                    n.centralizer,
                    fl.symmetric,
                    fl.nondegenerate,
                    fl.lagrangian,
                    fl.triangular,
                    fl.factorizable
                ));
                if failure.is_none() && !fl.agree() {
                    failure = Some(format!("n{i}: subgroup predicates disagree with the R-matrix tests"));
                }
            }
            Ok(Outcome { json, text, dot: Some(lat.to_dot(&g)), failure })
        }
        Command::Blocks { triple, field } => {
            let (g, t) = load_triple(triple, field)?;
            let qp = build_quotient(&g, &t)?;
            let blocks = block_data(&g, &qp)?;
            let mut text = String::new();
            let mut failure = None;
            for b in &blocks {
                text.push_str(&format!(
                    "class of {} (size {}): FPdim {}\n{}",
                    g.kg.labels()[b.representative],
                    b.conjugacy_class.len(),
                    b.block_fp_dimension,
                    b.checks.render()
                ));
                failure = failure.or_else(|| first_check_failure(&b.checks));
            }
            let total: usize = blocks.iter().map(|b| b.block_fp_dimension).sum();
            text.push_str(&format!("total {total}, |K|[G:H] = {}\n", t.fp_dim(&g)));
            if failure.is_none() && total != t.fp_dim(&g) {
                failure = Some(format!("block dimensions sum to {total}, not {}", t.fp_dim(&g)));
            }
            Ok(Outcome { json: io::blocks_to_json(&g, &t, &blocks), text, dot: None, failure })
        }
        Command::Appendix { p, expected } => {
            let (report, mut checks) = appendix_report(*p)?;
            let f = Field::prime(*p)?;
            for lam in f.elements().expect("finite field") {
                let rc = r_lambda_checks(*p, &lam)?;
                checks.checks.extend(rc.quotient.checks);
                checks.checks.extend(rc.on_dual.checks);
            }
            let exp = match expected {
                Some(path) => read_json(path)?,
                None => expected_report(*p).ok_or_else(|| Failure::Schema(format!("no committed report for p = {p}")))?,
            };
            let diff = json_diff(&exp, &report);
            let mut text = checks.render();
            text.push_str(&format!("{} differences from the expected report\n", diff.len()));
            for d in &diff {
                text.push_str(&format!("  {d}\n"));
            }
            let failure = diff.first().map(|d| format!("report differs at {d}")).or_else(|| first_check_failure(&checks));
            Ok(Outcome { json: report, text, dot: None, failure })
        }
    }
}

fn emit(cli: &Cli, s: &str) -> Run<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, s).map_err(|e| Failure::Schema(format!("{}: {e}", p.display()))),
        None => {
            print!("{s}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| {
        let body = match cli.format {
            Format::Json => serde_json::to_string_pretty(&o.json).expect("serializable") + "\n",
            Format::Text => o.text.clone(),
            Format::Dot => o.dot.clone().ok_or_else(|| Failure::Schema("--format dot applies to lattice and enumerate".into()))?,
        };
        emit(&cli, &body)?;
        Ok(o.failure)
    });
    match result {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(w)) => {
            eprintln!("verification failed: {w}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(w)) => {
            eprintln!("verification failed: {w}");
            ExitCode::from(1)
        }
        Err(Failure::Schema(w)) => {
            eprintln!("schema error: {w}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(w)) => {
            eprintln!("budget exhausted: {w}");
            ExitCode::from(3)
        }
    }
}
