//! Command-line frontend. Every command prints one JSON report with sorted
//! keys; identical arguments give byte-identical output.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ctld::algebra::{check_associativity_exhaustive, check_associativity_sampled, check_involution, verify_tl_d_relations, Algebra};
use ctld::cellular::{verify_cell_datum, CellIndex, Cellular};
use ctld::compose::{loop_census, LoopRule};
use ctld::diagram::Diagram;
use ctld::enumerate::{check_counts, dimension_formula, enum_diagrams, DEFAULT_BUDGET};
use ctld::rep::{gram, gram_lemmas, is_quasi_hereditary, quotient_quasi_hereditary, simple_modules};
use ctld::scalars::{make_field, parse_parameters, Field};
use ctld::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ctld", version, about = "Exact computations in cyclotomic Temperley-Lieb algebras of type D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long)]
    m: u8,
    #[arg(long)]
    n: u8,
    /// `Q`, `Q(zeta_M)`, `GF(p)` or `GF(p^r)`; defaults to `Q(zeta_m)`.
    #[arg(long)]
    field: Option<String>,
    /// Loop parameters delta_0..delta_{m-1} as field literals; defaults to 1,0,...,0.
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, value_enum, default_value_t = Rule::Formula)]
    rule: Rule,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rule {
    Formula,
    Relations,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Relations,
    Associativity,
    Involution,
    Counts,
    Celldatum,
    Gramlemmas,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension and type I / type II split.
    Dim {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        n: u8,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census by class and number of arcs; optionally every diagram as NDJSON.
    Enumerate {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        n: u8,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        out: Option<PathBuf>,
        /// One diagram JSON object per line.
        #[arg(long)]
        ndjson: Option<PathBuf>,
    },
    /// Product of two diagrams given as JSON files (upper first).
    Multiply {
        #[command(flatten)]
        common: Common,
        upper: PathBuf,
        lower: PathBuf,
    },
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        /// Check every triple instead of sampling (associativity only).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Cell indices with the sizes of their row sets; `--full` adds every
    /// cellular basis element.
    Cellbasis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        full: bool,
    },
    Gram {
        #[command(flatten)]
        common: Common,
        /// A single cell index such as `(1,[2,2])+` or `half1-`; all when omitted.
        #[arg(long)]
        lambda: Option<String>,
    },
    Simples {
        #[command(flatten)]
        common: Common,
    },
    Qh {
        #[command(flatten)]
        common: Common,
    },
    QhQuotient {
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Failed(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Report {
    body: Value,
    passed: bool,
    out: Option<PathBuf>,
}

fn done(body: Value, out: &Option<PathBuf>) -> Result<Report, Failure> {
    Ok(Report {
        body,
        passed: true,
        out: out.clone(),
    })
}

fn context(c: &Common) -> Result<Algebra, Failure> {
    let spec = c.field.clone().unwrap_or_else(|| format!("Q(zeta_{})", c.m));
    let field: Field = make_field(spec.parse()?)?;
    let delta = c.delta.clone().unwrap_or_else(|| {
        let mut v = vec!["0"; c.m as usize];
        if let Some(first) = v.first_mut() {
            *first = "1";
        }
        v.join(",")
    });
    let params = parse_parameters(&field, &delta, c.m as usize)?;
    let rule = match c.rule {
        Rule::Formula => LoopRule::Formula,
        Rule::Relations => LoopRule::Relations,
    };
    Ok(Algebra::new(field, params, c.n)?.with_rule(rule))
}

fn cellular(c: &Common) -> Result<Cellular, Failure> {
    let alg = context(c)?;
    let requested = dimension_formula(alg.m() as u32, alg.n() as u32);
    if requested > c.budget {
        return Err(Error::BudgetExceeded {
            requested,
            budget: c.budget,
        }
        .into());
    }
    Ok(Cellular::new(alg)?)
}

fn header(alg: &Algebra) -> Value {
    json!({
        "m": alg.m(),
        "n": alg.n(),
        "field": alg.field().spec().to_string(),
        "delta": alg.params().deltas().iter().map(|d| alg.field().scalar_to_json(d)).collect::<Vec<_>>(),
    })
}

fn with_header(alg: &Algebra, mut body: Value) -> Value {
    if let (Value::Object(h), Value::Object(b)) = (header(alg), &mut body) {
        for (k, v) in h {
            b.insert(k, v);
        }
    }
    body
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_lambda(cel: &Cellular, s: &str) -> Result<CellIndex, Failure> {
    let l: CellIndex = s.parse()?;
    if !cel.lambdas().contains(&l) {
        return Err(Failure::Usage(format!("{s} is not a cell index for these (m, n)")));
    }
    Ok(l)
}

fn require_seed(seed: Option<u64>) -> Result<u64, Failure> {
    seed.ok_or_else(|| Failure::Usage("this suite is randomized and needs --seed".into()))
}

fn verify(common: &Common, suite: Suite, seed: Option<u64>, samples: Option<usize>, exhaustive: bool) -> Result<Report, Failure> {
    let alg = context(common)?;
    let (body, passed) = match suite {
        Suite::Relations => {
            if alg.m() != 1 {
                return Err(Failure::Usage("the relations suite runs at m = 1".into()));
            }
            let checks = verify_tl_d_relations(alg.field(), alg.params().delta(0), alg.n())?;
            let passed = checks.iter().all(|c| c.passed);
            let list: Vec<Value> = checks.iter().map(|c| json!({"relation": c.relation, "passed": c.passed})).collect();
            (json!({"checks": list}), passed)
        }
        Suite::Associativity => {
            let basis = enum_diagrams(alg.m(), alg.n(), common.budget)?.diagrams;
            let r = if exhaustive {
                check_associativity_exhaustive(&alg, &basis)?
            } else {
                check_associativity_sampled(&alg, &basis, samples.unwrap_or(500), require_seed(seed)?)?
            };
            (serde_json::to_value(&r).expect("serializable"), r.passed())
        }
        Suite::Involution => {
            let basis = enum_diagrams(alg.m(), alg.n(), common.budget)?.diagrams;
            let r = check_involution(&alg, &basis, samples.unwrap_or(200), require_seed(seed)?)?;
            (serde_json::to_value(&r).expect("serializable"), r.passed())
        }
        Suite::Counts => {
            let checks = check_counts(alg.m(), alg.n(), common.budget)?;
            let passed = checks.iter().all(|c| c.passed);
            (json!({"checks": serde_json::to_value(&checks).expect("serializable")}), passed)
        }
        Suite::Celldatum => {
            let seed = require_seed(seed)?;
            let cel = Cellular::new(alg.clone())?;
            let r = verify_cell_datum(&cel, samples.unwrap_or(200), seed, common.budget)?;
            (serde_json::to_value(&r).expect("serializable"), r.passed())
        }
        Suite::Gramlemmas => {
            let cel = Cellular::new(alg.clone())?;
            let checks = gram_lemmas(&cel)?;
            let passed = checks.iter().all(|c| c.passed);
            (json!({"checks": serde_json::to_value(&checks).expect("serializable")}), passed)
        }
    };
    let mut body = with_header(&alg, body);
    body["suite"] = json!(format!("{suite:?}").to_lowercase());
    body["passed"] = json!(passed);
    if let Some(s) = samples {
        body["samples"] = json!(s);
    }
    if let Some(s) = seed {
        body["seed"] = json!(s);
    }
    Ok(Report {
        body,
        passed,
        out: common.out.clone(),
    })
}

fn execute(cmd: Command) -> Result<Report, Failure> {
    match cmd {
        Command::Dim { m, n, budget, out } => {
            let c = enum_diagrams(m, n, budget)?.census;
            done(json!({"total": c.total, "typeI": c.type_i, "typeII": c.type_ii}), &out)
        }
        Command::Enumerate { m, n, budget, out, ndjson } => {
            let en = enum_diagrams(m, n, budget)?;
            if let Some(path) = ndjson {
                let mut text = String::new();
                for d in &en.diagrams {
                    text.push_str(&d.to_json().to_string());
                    text.push('\n');
                }
                fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let mut body = serde_json::to_value(&en.census).expect("serializable");
            body["m"] = json!(m);
            body["n"] = json!(n);
            done(body, &out)
        }
        Command::Multiply { common, upper, lower } => {
            let alg = context(&common)?;
            let g1 = Diagram::from_json(&read_json(&upper)?)?;
            let g2 = Diagram::from_json(&read_json(&lower)?)?;
            let (c, d) = alg.multiply(&g1, &g2)?;
            let census = loop_census(&g1, &g2)?;
            let loops: Vec<Value> = census.loops.iter().map(|l| json!(l)).collect();
            let body = json!({
                "scalar": alg.field().scalar_to_json(&c),
                "diagram": d.to_json(),
                "loops": loops,
            });
            done(with_header(&alg, body), &common.out)
        }
        Command::Verify { common, suite, seed, samples, exhaustive } => verify(&common, suite, seed, samples, exhaustive),
        Command::Cellbasis { common, lambda, full } => {
            let cel = cellular(&common)?;
            let alg = cel.algebra();
            let selected = match lambda {
                Some(s) => vec![parse_lambda(&cel, &s)?],
                None => cel.lambdas().to_vec(),
            };
            let mut cells = Vec::new();
            for l in &selected {
                let size = cel.m_set(l).len();
                let mut entry = json!({"lambda": l.to_string(), "rows": size});
                if full {
                    let mut elements = Vec::new();
                    for s in 0..size {
                        for t in 0..size {
                            let x = cel.cell_basis_element(l, s, t)?;
                            elements.push(json!({"s": s, "t": t, "element": alg.to_json(&x)}));
                        }
                    }
                    entry["elements"] = Value::Array(elements);
                }
                cells.push(entry);
            }
            let total: usize = selected.iter().map(|l| cel.m_set(l).len().pow(2)).sum();
            done(with_header(alg, json!({"cells": cells, "total": total})), &common.out)
        }
        Command::Gram { common, lambda } => {
            let cel = cellular(&common)?;
            let alg = cel.algebra();
            let f = alg.field();
            let selected = match lambda {
                Some(s) => vec![parse_lambda(&cel, &s)?],
                None => cel.lambdas().to_vec(),
            };
            let mut grams = Vec::new();
            for l in &selected {
                let g = gram(&cel, l)?;
                let rows: Vec<Vec<Value>> = (0..g.matrix.rows())
                    .map(|i| g.matrix.row(i).iter().map(|v| f.scalar_to_json(v)).collect())
                    .collect();
                grams.push(json!({"lambda": l.to_string(), "rank": g.matrix.rank(f), "matrix": rows}));
            }
            done(with_header(alg, json!({"grams": grams})), &common.out)
        }
        Command::Simples { common } => {
            let cel = cellular(&common)?;
            let r = simple_modules(&cel)?;
            let passed = r.agree;
            let body = with_header(cel.algebra(), serde_json::to_value(&r).expect("serializable"));
            Ok(Report {
                body,
                passed,
                out: common.out.clone(),
            })
        }
        Command::Qh { common } => {
            let cel = cellular(&common)?;
            let r = is_quasi_hereditary(&cel)?;
            let passed = r.agree;
            let body = with_header(cel.algebra(), serde_json::to_value(&r).expect("serializable"));
            Ok(Report {
                body,
                passed,
                out: common.out.clone(),
            })
        }
        Command::QhQuotient { common } => {
            let cel = cellular(&common)?;
            let r = quotient_quasi_hereditary(&cel)?;
            let passed = r.agree;
            let body = with_header(cel.algebra(), serde_json::to_value(&r).expect("serializable"));
            Ok(Report {
                body,
                passed,
                out: common.out.clone(),
            })
        }
    }
}

/// Run with the given arguments (program name first), writing the report
/// to `stdout` or the `--out` file and diagnostics to `stderr`. Returns the
/// exit code.
pub fn run_with<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(report) => {
            let text = format!("{}\n", report.body);
            let written = match &report.out {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            if report.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            EXIT_FAILED
        }
    }
}

pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}
