use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tornheim::quadrature::QuadratureConfig;
use tornheim::tornheim::{
    tornheim_analytic, tornheim_direct, tornheim_huard, tornheim_integer, tornheim_symmetric,
    tornheim_symmetric_bernoulli, tornheim_two_int, ParamTriple, Parity, TripleKind,
};
use tornheim::verify::{self, Suite, VerifyConfig, DEFAULT_PREC, DEFAULT_TOL, MAX_PREC};
use tornheim::{Error, EvalResult};

const PREC_ENV: &str = "TORNHEIM_PREC";
const MAX_TABLE_WEIGHT: usize = 16;

#[derive(Parser)]
#[command(
    name = "tornheim",
    version,
    about = "Evaluate and verify Tornheim double series"
)]
struct Cli {
    /// Working digits (1-15); TORNHEIM_PREC overrides this flag.
    #[arg(long, global = true, default_value_t = DEFAULT_PREC)]
    prec: u32,

    /// Term budget for direct summation.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_terms: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate T(a, b, c).
    Eval {
        #[arg(allow_hyphen_values = true)]
        a: f64,
        #[arg(allow_hyphen_values = true)]
        b: f64,
        #[arg(allow_hyphen_values = true)]
        c: f64,
        #[arg(long, value_enum, default_value_t = EvalMethod::Auto)]
        method: EvalMethod,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the identity-verification sweep.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Base absolute tolerance.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Format of standard output.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate T(n1, n2, n3) over positive integers of the given weights.
    Table {
        from: usize,
        to: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalMethod {
    Auto,
    Direct,
    Analytic,
    Integer,
    Huard,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotConverged { .. } | Error::TermBudget { .. } => 1,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

fn config(cli: &Cli) -> Result<VerifyConfig, Fail> {
    let prec = match std::env::var(PREC_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Fail(2, format!("{PREC_ENV} = '{s}' is not an integer")))?,
        Err(_) => cli.prec,
    };
    if !(1..=MAX_PREC).contains(&prec) {
        return Err(Fail(2, format!("prec = {prec} must lie in 1..={MAX_PREC}")));
    }
    Ok(VerifyConfig::new(prec, DEFAULT_TOL, cli.max_terms)?)
}

fn as_uint(x: f64, what: &str) -> Result<usize, Fail> {
    if x >= 0.0 && x == x.round() && x < 1e6 {
        Ok(x as usize)
    } else {
        Err(Fail(
            2,
            format!("{what} = {x} must be a non-negative integer for this method"),
        ))
    }
}

fn eval(
    a: f64,
    b: f64,
    c: f64,
    method: EvalMethod,
    cfg: &VerifyConfig,
) -> Result<EvalResult, Fail> {
    let t = ParamTriple::new(a, b, c);
    let quad = cfg.quadrature();
    let direct = cfg.direct();
    let integer = |quad: &QuadratureConfig| -> Result<EvalResult, Fail> {
        let (n1, n2, n3) = (as_uint(a, "a")?, as_uint(b, "b")?, as_uint(c, "c")?);
        Ok(tornheim_integer(n1, n2, n3, quad)?)
    };
    match method {
        EvalMethod::Direct => Ok(tornheim_direct(&t, &direct)?),
        EvalMethod::Integer => integer(&quad),
        EvalMethod::Huard => {
            let (n1, n2, n3) = (as_uint(a, "a")?, as_uint(b, "b")?, as_uint(c, "c")?);
            Ok(tornheim_huard(n1 as u32, n2 as u32, n3 as u32)?)
        }
        EvalMethod::Analytic => {
            if t.kind == TripleKind::TwoIntOneReal {
                let (n1, n2) = (as_uint(a, "a")?, as_uint(b, "b")?);
                Ok(tornheim_two_int(n1 as u32, n2 as u32, c, &quad)?)
            } else {
                Ok(tornheim_analytic(a, b, c, &quad)?)
            }
        }
        EvalMethod::Auto => {
            t.check_gate()?;
            if t.kind == TripleKind::AllInt && a >= 1.0 && b >= 1.0 && c >= 1.0 {
                integer(&quad)
            } else {
                Ok(tornheim_direct(&t, &direct)?)
            }
        }
    }
}

fn eval_json(r: &EvalResult) -> serde_json::Value {
    json!({
        "value": r.value,
        "err": r.err,
        "method": r.method.to_string(),
        "estimate": r.estimate,
    })
}

fn cmd_eval(
    a: f64,
    b: f64,
    c: f64,
    method: EvalMethod,
    format: Format,
    cfg: &VerifyConfig,
) -> Result<(), Fail> {
    let r = eval(a, b, c, method, cfg)?;
    match format {
        Format::Text => {
            println!("T({a}, {b}, {c}) = {:.17e}", r.value);
            println!("err    = {:.3e} ({:?})", r.err, r.estimate);
            println!("method = {}", r.method);
        }
        Format::Json => {
            let mut v = eval_json(&r);
            v["triple"] = json!([a, b, c]);
            println!("{v}");
        }
    }
    Ok(())
}

fn cmd_verify(
    suite: &str,
    tol: f64,
    out: Option<&PathBuf>,
    format: Format,
    cfg: &VerifyConfig,
) -> Result<(), Fail> {
    let suite: Suite = suite.parse()?;
    let cfg = VerifyConfig::new(cfg.prec, tol, cfg.max_terms)?;
    let report = verify::run(suite, &cfg);
    let json = serde_json::to_string_pretty(&report).map_err(|e| Fail(2, e.to_string()))?;
    if let Some(path) = out {
        fs::write(path, &json)
            .map_err(|e| Fail(2, format!("cannot write {}: {e}", path.display())))?;
    }
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{json}"),
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Fail(
            1,
            format!("{} checks failed", report.count(verify::Status::Fail)),
        ))
    }
}

struct Row {
    triple: [usize; 3],
    result: EvalResult,
    alternates: Vec<(&'static str, f64)>,
}

fn table_rows(from: usize, to: usize, cfg: &VerifyConfig) -> Result<Vec<Row>, Fail> {
    let quad = cfg.quadrature();
    let mut rows = Vec::new();
    for w in from..=to {
        for a in 1..w - 1 {
            for b in a..w - a {
                let c = w - a - b;
                let result = tornheim_integer(a, b, c, &quad)?;
                let mut alternates = Vec::new();
                let mut alt = |name, r: tornheim::Result<EvalResult>| {
                    if let Ok(r) = r {
                        alternates.push((name, r.value));
                    }
                };
                if w % 2 == 1 {
                    alt("huard", tornheim_huard(a as u32, b as u32, c as u32));
                }
                if a == b && b == c {
                    let n = (a / 2) as u32;
                    if a % 2 == 0 {
                        alt("sym-even", tornheim_symmetric(n, Parity::Even));
                        alt("sym-even-bernoulli", tornheim_symmetric_bernoulli(n));
                    } else {
                        alt("sym-odd", tornheim_symmetric(n, Parity::Odd));
                    }
                }
                rows.push(Row {
                    triple: [a, b, c],
                    result,
                    alternates,
                });
            }
        }
    }
    Ok(rows)
}

fn cmd_table(
    from: usize,
    to: Option<usize>,
    format: Format,
    cfg: &VerifyConfig,
) -> Result<(), Fail> {
    let to = to.unwrap_or(from);
    if from < 3 || to < from || to > MAX_TABLE_WEIGHT {
        return Err(Fail(
            2,
            format!(
                "weight range {from}..={to} must satisfy 3 <= from <= to <= {MAX_TABLE_WEIGHT}"
            ),
        ));
    }
    let rows = table_rows(from, to, cfg)?;
    match format {
        Format::Text => {
            for r in &rows {
                let [a, b, c] = r.triple;
                let alts: Vec<String> = r
                    .alternates
                    .iter()
                    .map(|(name, v)| format!("{name} {v:.16e}"))
                    .collect();
                println!(
                    "{:>2}  T({a},{b},{c}) = {:.16e}  err {:.1e}  {}{}",
                    a + b + c,
                    r.result.value,
                    r.result.err,
                    r.result.method,
                    if alts.is_empty() {
                        String::new()
                    } else {
                        format!("  [{}]", alts.join(", "))
                    }
                );
            }
        }
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|r| {
                    let mut o = eval_json(&r.result);
                    o["triple"] = json!(r.triple);
                    o["weight"] = json!(r.triple.iter().sum::<usize>());
                    o["alternates"] = r
                        .alternates
                        .iter()
                        .map(|(n, v)| (n.to_string(), json!(v)))
                        .collect::<serde_json::Map<_, _>>()
                        .into();
                    o
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&v).map_err(|e| Fail(2, e.to_string()))?
            );
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Fail> {
    let cfg = config(cli)?;
    match &cli.command {
        Command::Eval {
            a,
            b,
            c,
            method,
            format,
        } => cmd_eval(*a, *b, *c, *method, *format, &cfg),
        Command::Verify {
            suite,
            tol,
            out,
            format,
        } => cmd_verify(suite, *tol, out.as_ref(), *format, &cfg),
        Command::Table { from, to, format } => cmd_table(*from, *to, *format, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
