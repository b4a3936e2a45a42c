use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sturmian::export::{bseq_csv, sweep_csv, sweep_json};
use sturmian::farey::atlas_json;
use sturmian::verify::{self, VerifyConfig, VerifyReport};
use sturmian::{
    b_direct, b_parity, b_recurrence, char_prefix, distinct_factor_sets, eigen_multiplicity,
    factor_set, farey_intervals, gram_matrix, multiplicity_sweep, Error, Factor, Slope,
};

/// Exact computations on characteristic Sturmian words.
///
/// Slopes are written `quad:a,b,c,d` for (a + b*sqrt(d))/c, `rat:p/q[:guard]`,
/// `golden` or `invsqrt3`.
#[derive(Parser)]
#[command(name = "sturmian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Prefix of the characteristic word.
    Word {
        #[arg(long)]
        slope: Slope,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        length: u64,
    },
    /// All factors of length n with heights and palindrome flags.
    Factors {
        #[arg(long)]
        slope: Slope,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Check that the height sum of F_n has the parity of n for n = 1..=nmax.
    Parity {
        #[arg(long)]
        slope: Slope,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
    },
    /// B(k) for k = 1..=kmax from the recurrence, with the parity prediction.
    Bseq {
        #[arg(long)]
        slope: Slope,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
        /// Cross-check every row against the direct count and the parity rule.
        #[arg(long)]
        check: bool,
    },
    /// Multiplicity of lambda as an eigenvalue of the Gram matrix of F_n.
    Gram {
        #[arg(long)]
        slope: Slope,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
    },
    /// Eigenvalue multiplicity m(n) for n = 1..=nmax.
    SweepM {
        #[arg(long)]
        slope: Slope,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        lambda: i64,
    },
    /// Factor sets of one representative per Farey interval of order n.
    Atlas {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Only report the number of intervals and of distinct factor sets.
        #[arg(long)]
        count: bool,
    },
    /// Run the whole invariant suite.
    Verify {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Smaller sizes, for a smoke test.
        #[arg(long)]
        quick: bool,
    },
}

enum Failure {
    Library(Error),
    Check(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Rendered output plus whether every requested check held.
struct Output {
    body: String,
    ok: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, ok: true }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize") + "\n"
}

fn to_usize(v: u64) -> Result<usize, Failure> {
    usize::try_from(v).map_err(|_| Failure::Library(Error::Overflow))
}

fn word(slope: &Slope, length: u64, format: Format) -> Result<Output, Failure> {
    let bits = char_prefix(slope, to_usize(length)?)?;
    let text: String = bits.iter().map(|b| char::from(b'0' + b)).collect();
    Ok(Output::ok(match format {
        Format::Text => text + "\n",
        Format::Csv => {
            let mut out = String::from("i,c\n");
            for (i, b) in bits.iter().enumerate() {
                writeln!(out, "{i},{b}").unwrap();
            }
            out
        }
        Format::Json => pretty(&json!({"slope": slope.to_string(), "length": length, "word": text})),
    }))
}

fn factors(slope: &Slope, n: u64, format: Format) -> Result<Output, Failure> {
    let fs = factor_set(slope, to_usize(n)?)?;
    Ok(Output::ok(match format {
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { ',' } else { ' ' };
            let mut out = if format == Format::Csv {
                String::from("factor,height,palindrome\n")
            } else {
                String::new()
            };
            for w in fs.factors() {
                writeln!(out, "{w}{sep}{}{sep}{}", w.height(), u8::from(w.is_palindrome())).unwrap();
            }
            if format == Format::Text {
                writeln!(out, "height sum {}", fs.height_sum()).unwrap();
            }
            out
        }
        Format::Json => pretty(&json!({
            "n": n,
            "slope": slope.to_string(),
            "height_sum": fs.height_sum(),
            "factors": fs.factors().iter().map(|w| json!({
                "factor": w.to_string(),
                "height": w.height(),
                "palindrome": w.is_palindrome(),
            })).collect::<Vec<_>>(),
        })),
    }))
}

fn parity(slope: &Slope, nmax: u64, format: Format) -> Result<Output, Failure> {
    let mut rows = Vec::new();
    for n in 1..=nmax {
        let sum = factor_set(slope, to_usize(n)?)?.height_sum();
        rows.push((n, sum, sum % 2 == n % 2));
    }
    let passed = rows.iter().filter(|r| r.2).count();
    let ok = passed == rows.len();
    let body = match format {
        Format::Text => {
            let mut out = String::new();
            for (n, sum, _) in rows.iter().filter(|r| !r.2) {
                writeln!(out, "FAIL slope={slope} n={n} height_sum={sum} expected parity {}", n % 2)
                    .unwrap();
            }
            writeln!(out, "{passed}/{} pass", rows.len()).unwrap();
            out
        }
        Format::Csv => {
            let mut out = String::from("n,height_sum,pass\n");
            for (n, sum, pass) in &rows {
                writeln!(out, "{n},{sum},{}", u8::from(*pass)).unwrap();
            }
            out
        }
        Format::Json => pretty(&json!({
            "slope": slope.to_string(),
            "nmax": nmax,
            "passed": passed,
            "total": rows.len(),
            "failures": rows.iter().filter(|r| !r.2).map(|r| r.0).collect::<Vec<_>>(),
        })),
    };
    Ok(Output { body, ok })
}

fn bseq(slope: &Slope, kmax: u64, check: bool, format: Format) -> Result<Output, Failure> {
    let records = b_recurrence(slope, kmax)?;
    let parity = (1..=kmax)
        .map(|k| b_parity(slope, k))
        .collect::<Result<Vec<u8>, Error>>()?;
    let mut ok = true;
    let mut report = String::new();
    if check {
        for (r, &p) in records.iter().zip(&parity) {
            let direct = b_direct(slope, r.k)?;
            if direct != r.value {
                writeln!(report, "FAIL slope={slope} k={} expected={direct} actual={} (recurrence, case {})", r.k, r.value, r.case).unwrap();
                ok = false;
                break;
            }
            if u64::from(p) != direct % 2 {
                writeln!(report, "FAIL slope={slope} k={} expected={} actual={p} (parity)", r.k, direct % 2).unwrap();
                ok = false;
                break;
            }
        }
    }
    let body = match format {
        Format::Text | Format::Csv => bseq_csv(&records, &parity),
        Format::Json => pretty(&json!({
            "slope": slope.to_string(),
            "records": records.iter().zip(&parity).map(|(r, p)| json!({
                "k": r.k,
                "B": r.value,
                "case": r.case.to_string(),
                "parity_predicted": p,
            })).collect::<Vec<_>>(),
        })),
    };
    if check && ok {
        eprintln!("checked {kmax} rows against direct count and parity");
    }
    eprint!("{report}");
    Ok(Output { body, ok })
}

fn gram(slope: &Slope, n: u64, lambda: i64, format: Format) -> Result<Output, Failure> {
    let g = gram_matrix(&factor_set(slope, to_usize(n)?)?);
    let m = eigen_multiplicity(&g, lambda);
    Ok(Output::ok(match format {
        Format::Text => format!("{m}\n"),
        Format::Csv => format!("n,lambda,m\n{n},{lambda},{m}\n"),
        Format::Json => pretty(&json!({
            "slope": slope.to_string(), "n": n, "lambda": lambda, "multiplicity": m,
        })),
    }))
}

fn sweep(slope: &Slope, nmax: u64, lambda: i64, format: Format) -> Result<Output, Failure> {
    let values = multiplicity_sweep(slope, to_usize(nmax)?, lambda)?;
    Ok(Output::ok(match format {
        Format::Text | Format::Csv => sweep_csv(&values),
        Format::Json => pretty(&sweep_json(slope, lambda, &values)),
    }))
}

fn atlas(n: u64, count: bool, format: Format) -> Result<Output, Failure> {
    let n = to_usize(n)?;
    if count {
        let intervals = farey_intervals(n).len();
        let distinct = distinct_factor_sets(n)?;
        return Ok(Output::ok(match format {
            Format::Text => format!("{intervals} intervals, {distinct} distinct factor sets\n"),
            Format::Csv => format!("n,intervals,distinct\n{n},{intervals},{distinct}\n"),
            Format::Json => pretty(&json!({"n": n, "intervals": intervals, "distinct": distinct})),
        }));
    }
    if format == Format::Json {
        return Ok(Output::ok(pretty(&atlas_json(n)?)));
    }
    let mut out = if format == Format::Csv {
        String::from("lo,hi,rep,factors\n")
    } else {
        String::new()
    };
    for iv in farey_intervals(n) {
        let fs = factor_set(&iv.rep, n)?;
        let words: Vec<String> = fs.factors().iter().map(Factor::to_string).collect();
        match format {
            Format::Csv => writeln!(out, "{},{},{},{}", iv.lo, iv.hi, iv.mediant(), words.join(" ")),
            _ => writeln!(out, "({}, {}) rep {}: {}", iv.lo, iv.hi, iv.mediant(), words.join(" ")),
        }
        .unwrap();
    }
    Ok(Output::ok(out))
}

fn verify_json(report: &VerifyReport) -> serde_json::Value {
    json!({
        "seed": report.seed,
        "corpus": report.corpus,
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "cases": c.cases,
            "passed": c.passed(),
            "failure": c.failure.as_ref().map(|f| json!({
                "slope": f.slope, "at": f.at, "expected": f.expected, "actual": f.actual,
            })),
            "note": c.note,
        })).collect::<Vec<_>>(),
    })
}

fn run_verify(seed: u64, quick: bool, format: Format) -> Output {
    let config = VerifyConfig {
        seed,
        ..if quick { VerifyConfig::quick() } else { VerifyConfig::default() }
    };
    let report = verify::run(&config);
    let body = match format {
        Format::Json => pretty(&verify_json(&report)),
        Format::Text | Format::Csv => format!("{report}\n"),
    };
    Output { body, ok: report.passed() }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Word { slope, length } => word(slope, *length, f),
        Command::Factors { slope, n } => factors(slope, *n, f),
        Command::Parity { slope, nmax } => parity(slope, *nmax, f),
        Command::Bseq { slope, kmax, check } => bseq(slope, *kmax, *check, f),
        Command::Gram { slope, n, lambda } => gram(slope, *n, *lambda, f),
        Command::SweepM { slope, nmax, lambda } => sweep(slope, *nmax, *lambda, f),
        Command::Atlas { n, count } => atlas(*n, *count, f),
        Command::Verify { seed, quick } => Ok(run_verify(*seed, *quick, f)),
    }
}

fn emit(cli: &Cli, body: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(&cli).and_then(|out| {
        emit(&cli, &out.body)?;
        if out.ok {
            Ok(())
        } else {
            Err(Failure::Check("verification failed".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Library(e @ Error::GuardViolation { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
