use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use level4::formulas::{albanese_inequality, betti_tables, closed_forms, Parameter, GENUS_BOUND};
use level4::h1::{act, dim_h1, reduce, Generator, H1Space, ModuleExpression};
use level4::oracle::{abelianization, subgroup_presentation, SUBGROUP_BOUND, SUBGROUP_HARD_BOUND};
use level4::psi::{psi_cover, Cover};
use level4::rep::{cohen_suciu_membership, constituent_dimension, constituent_multiplicities, torsion_points, IrrepLabel};
use level4::verify::{run_suite, SUITES};
use level4::Error;

#[derive(Parser)]
#[command(name = "level4", version, about = "Computations with the level-4 braid group B_n[4]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Seed for randomized checks (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of H_1(B_n[4]; Q).
    Dim {
        #[arg(long)]
        n: usize,
    },
    /// The canonical basis.
    Basis {
        #[arg(long)]
        n: usize,
    },
    /// Reduce a module expression, e.g. "T(2,3)*t(1,2) - (1-T(1,3))*t(1,2)".
    Reduce {
        #[arg(long)]
        n: usize,
        expr: String,
    },
    /// Apply a generator (s3, S3, T(1,2) or a braid word) to an expression.
    Act {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        generator: String,
        expr: String,
    },
    /// Matrix of a generator in the canonical basis (columns are images).
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        generator: String,
    },
    /// Detection maps; every cover unless --cover is given.
    Psi {
        #[arg(long)]
        n: usize,
        /// base, (i,inf) or (i,j)
        #[arg(long)]
        cover: Option<String>,
        expr: String,
    },
    /// Multiplicities of the five constituents.
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Characters occurring at least d times, with their components.
    Torsion {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Abelianization of B_n[4] from a presentation.
    Oracle {
        #[arg(long)]
        n: usize,
        /// Raise the strand limit (up to 5).
        #[arg(long)]
        bound: Option<usize>,
        /// Also print generator count and elementary divisors.
        #[arg(long)]
        details: bool,
    },
    /// Closed forms for genus g or n strands; with neither, Betti tables and the Albanese scan.
    Formulas {
        #[arg(long, conflicts_with = "n")]
        g: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        /// Largest genus in the Albanese scan.
        #[arg(long, default_value_t = GENUS_BOUND as u64)]
        bound: u64,
    },
    /// Run a check suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
    Checks(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::Invalid(_)
            | Error::IndexOutOfRange { .. }
            | Error::BoundExceeded { .. }
            | Error::UnknownSuite(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn need(cond: bool, msg: &str) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Usage(msg.to_string()))
    }
}

fn run(cmd: &Command, seed: u64) -> Result<Value, Failure> {
    Ok(match cmd {
        Command::Dim { n } => {
            need(*n >= 1, "--n must be at least 1")?;
            json!({"n": n, "dim": dim_h1(*n)})
        }
        Command::Basis { n } => {
            need(*n >= 1, "--n must be at least 1")?;
            let sp = H1Space::shared(*n);
            let basis: Vec<String> = sp.basis().iter().map(|s| s.to_string()).collect();
            json!({"n": n, "dim": sp.dim(), "basis": basis})
        }
        Command::Reduce { n, expr } => {
            let e = ModuleExpression::parse(*n, expr)?;
            json!({"n": n, "input": expr, "result": reduce(&e).to_json()})
        }
        Command::Act { n, generator, expr } => {
            let g = Generator::parse(*n, generator)?;
            let v = reduce(&ModuleExpression::parse(*n, expr)?);
            json!({"n": n, "generator": generator, "input": expr, "result": act(&g, &v)?.to_json()})
        }
        Command::Matrix { n, generator } => {
            let g = Generator::parse(*n, generator)?;
            let sp = H1Space::shared(*n);
            let m = sp.generator_matrix(&g)?;
            let basis: Vec<String> = sp.basis().iter().map(|s| s.to_string()).collect();
            json!({"n": n, "generator": generator, "basis": basis, "matrix": m.to_dense_strings()})
        }
        Command::Psi { n, cover, expr } => {
            let v = reduce(&ModuleExpression::parse(*n, expr)?);
            let covers = match cover {
                Some(c) => {
                    let c = Cover::parse(c)?;
                    c.validate(*n)?;
                    vec![c]
                }
                None => Cover::all(*n),
            };
            let images = covers.into_iter().map(|c| psi_cover(c, &v).map(|p| p.to_json())).collect::<Result<Vec<_>, _>>()?;
            json!({"n": n, "input": expr, "images": images})
        }
        Command::Decompose { n } => {
            need(*n >= 2, "--n must be at least 2")?;
            let sp = H1Space::shared(*n);
            let mults = constituent_multiplicities(sp.as_ref())?;
            let rows: Vec<Value> = IrrepLabel::constituents()
                .iter()
                .zip(&mults)
                .map(|(l, m)| {
                    let dim = constituent_dimension(l, *n).ok().map(|d| d.to_string());
                    json!({"label": l.to_string(), "multiplicity": m, "dimension": dim})
                })
                .collect();
            json!({"n": n, "dim": sp.dim(), "constituents": rows})
        }
        Command::Torsion { n, d } => {
            need(*n >= 2, "--n must be at least 2")?;
            let points = torsion_points(*n, *d)?;
            let mut rows = Vec::new();
            for p in &points {
                let comps: Vec<String> = cohen_suciu_membership(p)?.iter().map(|c| c.to_string()).collect();
                rows.push(json!({"subset": p.to_string(), "components": comps}));
            }
            json!({"n": n, "d": d, "count": points.len(), "points": rows})
        }
        Command::Oracle { n, bound, details } => {
            let limit = bound.unwrap_or(SUBGROUP_BOUND);
            need(limit <= SUBGROUP_HARD_BOUND, "--bound may not exceed 5")?;
            need(*n >= 1 && *n <= limit, &format!("--n must be between 1 and {limit}"))?;
            if *n > SUBGROUP_BOUND {
                eprintln!("building the index-{} subgroup presentation", 1u64 << (n * (n - 1) / 2));
            }
            let ab = abelianization(&subgroup_presentation(*n, *n > SUBGROUP_BOUND)?);
            let mut v = json!({"rank": ab.free_rank, "odd_torsion": ab.odd_torsion()});
            if *details {
                let divisors: Vec<String> = ab.elementary_divisors.iter().map(|d| d.to_string()).collect();
                v["generators"] = json!(ab.generators);
                v["elementary_divisors"] = json!(divisors);
            }
            v
        }
        Command::Formulas { g, n, bound } => match (g, n) {
            (Some(g), _) => {
                let mut v = json!({"closed_forms": closed_forms(Parameter::Genus(*g))?.to_json()});
                if *g >= 2 {
                    v["albanese"] = albanese_inequality(*g)?.to_json();
                }
                v
            }
            (None, Some(n)) => json!({"closed_forms": closed_forms(Parameter::Strands(*n))?.to_json()}),
            (None, None) => {
                need(*bound >= 2, "--bound must be at least 2")?;
                let scan = (2..=*bound).map(|g| albanese_inequality(g).map(|r| r.to_json())).collect::<Result<Vec<_>, _>>()?;
                json!({"betti": betti_tables().to_json(), "albanese": scan})
            }
        },
        Command::Verify { suite, n } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Error::UnknownSuite(suite.clone()).into());
            }
            eprintln!("running suite {suite} at n = {n}");
            let r = run_suite(suite, *n, seed)?;
            let v = r.to_json();
            if !r.passed() {
                return Err(Failure::Checks(v));
            }
            v
        }
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(k, x)| flatten(&join(&k.to_string()), x, out)),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{v}\n"),
        Format::Csv => {
            let mut rows = Vec::new();
            flatten("", v, &mut rows);
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["key", "value"]).expect("in-memory write");
            for (k, x) in rows {
                w.write_record([k, x]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8")
        }
    }
}

fn emit(text: &str, out: &Option<String>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match run(&cli.command, cli.common.seed) {
        Ok(v) => (v, 0),
        Err(Failure::Checks(v)) => (v, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&render(&value, cli.common.format), &cli.common.out) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
