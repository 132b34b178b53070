//! Single-binary front end: parse a distance matrix, run one or all
//! recognizers and emit a JSON or human-readable verdict. Also exposes the
//! fixture generator and the O(m^3) scaling benchmark.
//!
//! Exit codes: 0 = accepted, 1 = rejected, 2 = input or validation error.

use clap::{Parser, ValueEnum};
use metric_core::error::MatrixError;
use metric_core::generators::{gen_weighted, unit_hypercube_matrix, GenFamily, GeneratorSpec};
use metric_core::matrix::{classify, skeleton, DistanceMatrix};
use metric_core::matrix_io::{parse_matrix, MatrixFormat};
use metric_core::rational::{parse_rat, rat_int, Tolerance};
use metric_core::recognize::{cubici0_conditions, recognize, Family, Recognizer, Verdict};
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "metric-recognizer",
    about = "Decide whether a distance matrix is realized by a weighted hypercube, Petersen graph or tree",
    long_about = None
)]
struct Cli {
    /// Input matrix file; reads stdin when omitted or "-"
    input: Option<PathBuf>,

    /// Graph family to test; `auto` runs every family applicable to the order
    #[arg(long, value_enum, default_value_t = FamilyArg::Auto)]
    family: FamilyArg,

    /// Comparison mode: exact rational or absolute-tolerance float mode
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,

    /// Absolute tolerance for float mode, as a rational or decimal (default 1e-9)
    #[arg(long)]
    eps: Option<String>,

    /// Input encoding
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Output style
    #[arg(long, value_enum, default_value_t = OutputArg::Json)]
    output: OutputArg,

    /// Run the scaling benchmark (classify + hypercube conditions) and exit
    #[arg(long)]
    bench: bool,

    /// Benchmark matrix orders; powers of two up to 1024
    #[arg(long, num_args = 1..)]
    sizes: Vec<usize>,

    /// Benchmark repetitions per size (minimum time is reported)
    #[arg(long, default_value_t = 3)]
    reps: usize,

    /// Generate a fixture pair instead of recognizing:
    /// hypercube(N) | petersen | tree(M) | q3-with-useless(T)
    #[arg(long, value_name = "FAMILY")]
    gen: Option<String>,

    /// Seed for the fixture generator
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Output directory for generated fixtures
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Hypercube,
    Q3,
    Petersen,
    Tree,
    Auto,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Human,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let code = if let Some(family) = &cli.gen {
        run_gen(&cli, family)
    } else if cli.bench {
        run_bench(&cli)
    } else {
        run_check(&cli)
    };
    match code {
        Ok(code) => code,
        Err(err) => {
            err.emit(cli.output);
            ExitCode::from(2)
        }
    }
}

/// Error destined for the user, rendered as JSON or a message line.
struct CliError {
    kind: &'static str,
    message: String,
    condition: Option<&'static str>,
    witness: Vec<usize>,
    values: Vec<String>,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
            condition: None,
            witness: Vec::new(),
            values: Vec::new(),
        }
    }

    fn emit(&self, output: OutputArg) {
        match output {
            OutputArg::Json => {
                let mut obj = json!({"kind": self.kind, "message": self.message});
                if let Some(cond) = self.condition {
                    obj["condition"] = json!(cond);
                }
                if !self.witness.is_empty() {
                    obj["witness"] = json!(self.witness);
                }
                if !self.values.is_empty() {
                    obj["values"] = json!(self.values);
                }
                println!("{}", serde_json::to_string_pretty(&json!({"error": obj})).unwrap());
            }
            OutputArg::Human => {
                eprintln!("error ({}): {}", self.kind, self.message);
            }
        }
    }
}

fn configure_threads() {
    let Ok(raw) = std::env::var("METRIC_RECOGNIZER_THREADS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(0) => metric_core::set_force_sequential(true),
        Ok(_k) => {
            #[cfg(feature = "parallel")]
            {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(_k).build_global();
            }
        }
        Err(_) => eprintln!("warning: ignoring unparseable METRIC_RECOGNIZER_THREADS={raw}"),
    }
}

fn tolerance_from(cli: &Cli) -> Result<Tolerance, CliError> {
    match cli.mode {
        ModeArg::Exact => {
            if cli.eps.is_some() {
                return Err(CliError::new("usage", "--eps requires --mode float"));
            }
            Ok(Tolerance::exact())
        }
        ModeArg::Float => {
            let token = cli.eps.as_deref().unwrap_or("1e-9");
            let eps = parse_rat(token)
                .map_err(|e| CliError::new("usage", format!("invalid --eps: {e}")))?;
            if eps <= rat_int(0) {
                return Err(CliError::new("usage", "--eps must be positive"));
            }
            Ok(Tolerance::absolute(eps))
        }
    }
}

fn read_input(cli: &Cli) -> Result<String, CliError> {
    match &cli.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io", format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::new("io", format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn load_matrix(cli: &Cli) -> Result<DistanceMatrix, CliError> {
    let tol = tolerance_from(cli)?;
    let text = read_input(cli)?;
    let format = match cli.format {
        FormatArg::Text => MatrixFormat::Text,
        FormatArg::Csv => MatrixFormat::Csv,
        FormatArg::Json => MatrixFormat::Json,
    };
    let pre = parse_matrix(&text, format)
        .map_err(|e| CliError::new("parse", e.to_string()))?;
    pre.validate_with(tol).map_err(|e| match e {
        MatrixError::TriangleViolation {
            i,
            k,
            j,
            ref d_ij,
            ref d_ik,
            ref d_kj,
        } => CliError {
            kind: "validation",
            message: e.to_string(),
            condition: Some("triangle"),
            witness: vec![i, k, j],
            values: vec![d_ij.clone(), d_ik.clone(), d_kj.clone()],
        },
        other => CliError::new("validation", other.to_string()),
    })
}

fn print_verdict_human(v: &Verdict) {
    println!("family: {}", v.family.as_str());
    for entry in &v.trail {
        println!(
            "  [{}] {} - {}",
            if entry.passed { "pass" } else { "fail" },
            entry.condition,
            entry.detail
        );
    }
    if v.accepted {
        let mut extras = Vec::new();
        if let Some(n) = v.n {
            extras.push(format!("n={n}"));
        }
        if let Some(r) = v.r {
            extras.push(format!("r={r}"));
        }
        println!("ACCEPTED {}", extras.join(" "));
    } else if let Some(rej) = &v.rejection {
        println!(
            "REJECTED condition={} witness={:?} values={:?}",
            rej.condition, rej.witness, rej.values
        );
    }
}

fn run_check(cli: &Cli) -> Result<ExitCode, CliError> {
    let d = load_matrix(cli)?;
    let m = d.order();

    let single = |which: Recognizer| -> Result<Verdict, CliError> {
        recognize(&d, which).map_err(|e| CliError::new("recognize", e.to_string()))
    };

    let verdicts: Vec<Verdict> = match cli.family {
        FamilyArg::Hypercube => vec![single(Recognizer::HypercubeCount)?],
        FamilyArg::Q3 => vec![single(Recognizer::Q3General)?],
        FamilyArg::Petersen => vec![single(Recognizer::Petersen)?],
        FamilyArg::Tree => vec![single(Recognizer::Tree)?],
        FamilyArg::Auto => {
            let mut out = Vec::new();
            out.push(if m.is_power_of_two() {
                single(Recognizer::HypercubeCount)?
            } else {
                Verdict::inapplicable(Family::HypercubeAllUseful, m, "a power of two")
            });
            out.push(if m == 8 {
                single(Recognizer::Q3General)?
            } else {
                Verdict::inapplicable(Family::Q3General, m, "8")
            });
            out.push(if m == 10 {
                single(Recognizer::Petersen)?
            } else {
                Verdict::inapplicable(Family::Petersen, m, "10")
            });
            out.push(single(Recognizer::Tree)?);
            out
        }
    };

    match cli.output {
        OutputArg::Json => {
            let payload = if verdicts.len() == 1 {
                verdicts[0].to_json()
            } else {
                json!(verdicts.iter().map(Verdict::to_json).collect::<Vec<_>>())
            };
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        OutputArg::Human => {
            for v in &verdicts {
                print_verdict_human(v);
            }
        }
    }
    let accepted = verdicts.iter().any(|v| v.accepted);
    Ok(ExitCode::from(if accepted { 0 } else { 1 }))
}

fn run_bench(cli: &Cli) -> Result<ExitCode, CliError> {
    let sizes = if cli.sizes.is_empty() {
        vec![64, 128, 256, 512]
    } else {
        cli.sizes.clone()
    };
    for &m in &sizes {
        if !m.is_power_of_two() || !(2..=1024).contains(&m) {
            return Err(CliError::new(
                "usage",
                format!("bench sizes must be powers of two in 2..=1024, got {m}"),
            ));
        }
    }
    let reps = cli.reps.max(1);

    let mut rows = Vec::new();
    let mut points = Vec::new();
    for &m in &sizes {
        let n = m.trailing_zeros();
        let d = unit_hypercube_matrix(n)
            .map_err(|e| CliError::new("bench", e.to_string()))?;
        let mut best = f64::INFINITY;
        let mut accepted = false;
        for _ in 0..reps {
            let start = Instant::now();
            let c = classify(&d);
            let skel = skeleton(&d, &c);
            accepted = cubici0_conditions(&d, &c, &skel).is_ok();
            best = best.min(start.elapsed().as_secs_f64());
        }
        let seconds = best.max(1e-9);
        points.push((m as f64, seconds));
        rows.push((m, seconds, accepted));
    }
    let slope = loglog_slope(&points);

    match cli.output {
        OutputArg::Json => {
            let payload = json!({
                "sizes": rows
                    .iter()
                    .map(|&(m, seconds, accepted)| json!({
                        "m": m, "seconds": seconds, "accepted": accepted,
                    }))
                    .collect::<Vec<_>>(),
                "reps": reps,
                "slope": slope,
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        OutputArg::Human => {
            println!("{:>6}  {:>12}  accepted", "m", "seconds");
            for (m, seconds, accepted) in &rows {
                println!("{m:>6}  {seconds:>12.6}  {}", if *accepted { "yes" } else { "no" });
            }
            println!("log-log slope: {slope:.3}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Least-squares slope of ln(t) against ln(m).
fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    if n < 2.0 {
        return f64::NAN;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Parses `hypercube(3)`, `petersen`, `tree(8)` or `q3-with-useless(2)`.
fn parse_gen_family(text: &str) -> Result<(GenFamily, String), CliError> {
    let text = text.trim();
    let bad = || CliError::new("usage", format!("unknown generator family `{text}`"));
    if text == "petersen" {
        return Ok((GenFamily::Petersen, "petersen".into()));
    }
    let (name, arg) = match text.split_once('(') {
        Some((name, rest)) => {
            let arg = rest.strip_suffix(')').ok_or_else(bad)?;
            (name.trim(), arg.trim())
        }
        None => return Err(bad()),
    };
    let value: usize = arg.parse().map_err(|_| bad())?;
    match name {
        "hypercube" => Ok((
            GenFamily::Hypercube(value as u32),
            format!("hypercube{value}"),
        )),
        "tree" => Ok((GenFamily::Tree(value), format!("tree{value}"))),
        "q3-with-useless" => Ok((GenFamily::Q3WithUseless(value), format!("q3u{value}"))),
        _ => Err(bad()),
    }
}

fn run_gen(cli: &Cli, family: &str) -> Result<ExitCode, CliError> {
    let (family, stem) = parse_gen_family(family)?;
    let spec = match family {
        GenFamily::Hypercube(n) => GeneratorSpec::hypercube(n, cli.seed),
        GenFamily::Petersen => GeneratorSpec::petersen(cli.seed),
        GenFamily::Tree(m) => GeneratorSpec::tree(m, cli.seed),
        GenFamily::Q3WithUseless(t) => GeneratorSpec::q3_with_useless(t, cli.seed),
    };
    let (_, d) = gen_weighted(&spec).map_err(|e| CliError::new("gen", e.to_string()))?;
    let recognizer = match family {
        GenFamily::Hypercube(_) => Recognizer::HypercubeCount,
        GenFamily::Petersen => Recognizer::Petersen,
        GenFamily::Tree(_) => Recognizer::Tree,
        GenFamily::Q3WithUseless(_) => Recognizer::Q3General,
    };
    let verdict =
        recognize(&d, recognizer).map_err(|e| CliError::new("gen", e.to_string()))?;

    std::fs::create_dir_all(&cli.out)
        .map_err(|e| CliError::new("io", format!("cannot create {}: {e}", cli.out.display())))?;
    let name = format!("{stem}-s{}", cli.seed);
    let matrix_path = cli.out.join(format!("{name}.matrix.txt"));
    let verdict_path = cli.out.join(format!("{name}.expected.json"));
    std::fs::write(&matrix_path, d.to_text())
        .map_err(|e| CliError::new("io", format!("cannot write {}: {e}", matrix_path.display())))?;
    std::fs::write(
        &verdict_path,
        format!("{}\n", serde_json::to_string_pretty(&verdict.to_json()).unwrap()),
    )
    .map_err(|e| CliError::new("io", format!("cannot write {}: {e}", verdict_path.display())))?;
    println!("{}", matrix_path.display());
    println!("{}", verdict_path.display());
    Ok(ExitCode::SUCCESS)
}
