use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qdyson::dyson::{eval_corollary, eval_inductive, eval_recursive, Composition};
use qdyson::oracle::{brute_d, VerificationReport};
use qdyson::sweep::{self, Identity, Parallelism, SweepParams, Tally};
use qdyson::{Error, QLaurentPoly};

const SCHEMA: u32 = 1;

/// `println!` that tolerates a closed stdout (e.g. piped into `head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "qdyson", version, about = "Exact q-Dyson style constant terms")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Worker threads for sweeps.
    #[arg(long, env = "QDYSON_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    Inductive,
    Corollary,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::Inductive => "inductive",
            Method::Corollary => "corollary",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate D_{v,v+}(a) by the closed-form recursion.
    Eval {
        #[arg(long, value_parser = parse_seq::<u32>, allow_hyphen_values = true)]
        v: Seq<u32>,
        #[arg(long, value_parser = parse_seq::<u32>)]
        a: Seq<u32>,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// Compute D_{v,lambda}(a) by full expansion.
    Oracle {
        #[arg(long, value_parser = parse_seq::<i32>, allow_hyphen_values = true)]
        v: Seq<i32>,
        /// Weakly decreasing; defaults to the sorted parts of v.
        #[arg(long, value_parser = parse_seq::<u32>)]
        lambda: Option<Seq<u32>>,
        #[arg(long, value_parser = parse_seq::<u32>)]
        a: Seq<u32>,
    },
    /// Check one identity over a range of instances.
    Verify {
        identity: String,
        #[command(flatten)]
        ranges: Ranges,
    },
    /// Cross-check the recursion against the oracle over a box of instances.
    Sweep {
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        #[arg(long, default_value_t = 2)]
        vmax: u32,
        #[arg(long, default_value_t = 2)]
        amax: u32,
    },
    /// Wall time of the oracle against the evaluators.
    Bench {
        #[arg(long, value_parser = parse_seq::<u32>)]
        v: Option<Seq<u32>>,
        #[arg(long, value_parser = parse_seq::<u32>)]
        a: Option<Seq<u32>>,
        /// Repetitions per instance; the minimum is reported.
        #[arg(long, default_value_t = 1)]
        reps: u32,
    },
}

#[derive(Args)]
struct Ranges {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, value_parser = parse_seq::<u32>)]
    a: Option<Seq<u32>>,
    #[arg(long, value_parser = parse_seq::<u32>)]
    v: Option<Seq<u32>>,
    #[arg(long)]
    amax: Option<u32>,
    #[arg(long)]
    vmax: Option<u32>,
    #[arg(long)]
    rmax: Option<u32>,
    #[arg(long)]
    imax: Option<u32>,
    #[arg(long)]
    jmax: Option<u32>,
    /// Bound on |a| (section6).
    #[arg(long)]
    size_max: Option<u32>,
}

impl From<Ranges> for SweepParams {
    fn from(r: Ranges) -> Self {
        SweepParams {
            n: r.n,
            nmax: r.nmax,
            a: r.a.map(|s| s.0),
            v: r.v.map(|s| s.0),
            amax: r.amax,
            vmax: r.vmax,
            rmax: r.rmax,
            imax: r.imax,
            jmax: r.jmax,
            size_max: r.size_max,
        }
    }
}

#[derive(Clone, Debug)]
struct Seq<T>(Vec<T>);

fn parse_seq<T: FromStr>(s: &str) -> Result<Seq<T>, String> {
    if s.trim().is_empty() {
        return Ok(Seq(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| format!("{p:?} is not a valid integer")))
        .collect::<Result<_, _>>()
        .map(Seq)
}

/// A failed command: message for stderr and process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonPolynomial { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output;
    let result = sweep::with_threads(cli.threads, move || run(cli.command, output))
        .map_err(Failure::from)
        .and_then(|r| r);
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, output: Output) -> Result<u8, Failure> {
    match command {
        Command::Eval { v, a, method } => cmd_eval(v.0, a.0, method, output),
        Command::Oracle { v, lambda, a } => cmd_oracle(v.0, lambda.map(|l| l.0), a.0, output),
        Command::Verify { identity, ranges } => {
            let id = Identity::from_str(&identity)?;
            cmd_verify(id, ranges.into(), output)
        }
        Command::Sweep { nmax, vmax, amax } => cmd_sweep(nmax, vmax, amax, output),
        Command::Bench { v, a, reps } => cmd_bench(v.map(|s| s.0), a.map(|s| s.0), reps.max(1), output),
    }
}

fn check_lengths(v: usize, a: usize) -> Result<(), Failure> {
    if v != a {
        return Err(invalid(format!("v has {v} parts but a has {a}")));
    }
    if a == 0 {
        return Err(invalid("a must be non-empty"));
    }
    Ok(())
}

fn print_poly(command: &str, input: Value, p: &QLaurentPoly, output: Output) {
    match output {
        Output::Text => out!("{p}"),
        Output::Json => {
            let mut doc = json!({ "schema": SCHEMA, "command": command });
            merge(&mut doc, input);
            merge(&mut doc, json!({ "result": p, "text": p.to_string() }));
            out!("{doc}");
        }
    }
}

fn merge(doc: &mut Value, extra: Value) {
    if let (Value::Object(d), Value::Object(e)) = (doc, extra) {
        d.extend(e);
    }
}

fn cmd_eval(v: Vec<u32>, a: Vec<u32>, method: Method, output: Output) -> Result<u8, Failure> {
    check_lengths(v.len(), a.len())?;
    let (vc, ac) = (Composition::new(v.clone()), Composition::new(a.clone()));
    let p = match method {
        Method::Recursive => eval_recursive(&vc, &ac)?,
        Method::Inductive => eval_inductive(&vc, &ac)?,
        Method::Corollary => eval_corollary(&vc, &ac)?,
    };
    print_poly("eval", json!({ "v": v, "a": a, "method": method.name() }), &p, output);
    Ok(0)
}

fn cmd_oracle(v: Vec<i32>, lambda: Option<Vec<u32>>, a: Vec<u32>, output: Output) -> Result<u8, Failure> {
    check_lengths(v.len(), a.len())?;
    let lambda = match lambda {
        Some(l) => l,
        None => {
            if v.iter().any(|&x| x < 0) {
                return Err(invalid("lambda must be given when v has negative parts"));
            }
            let mut l: Vec<u32> = v.iter().map(|&x| x as u32).filter(|&x| x > 0).collect();
            l.sort_unstable_by(|x, y| y.cmp(x));
            l
        }
    };
    let p = brute_d(&v, &lambda, &a)?;
    print_poly("oracle", json!({ "v": v, "lambda": lambda, "a": a }), &p, output);
    Ok(0)
}

fn report_line(r: &VerificationReport) -> String {
    let status = serde_json::to_value(r.status).expect("serialisable");
    let mut line = format!("{} {} {}", status.as_str().unwrap_or("?"), r.identity, r.instance);
    if let Some(w) = &r.witness {
        line.push_str(&format!(" witness={w}"));
    }
    line
}

fn cmd_verify(id: Identity, params: SweepParams, output: Output) -> Result<u8, Failure> {
    let reports = sweep::run(id, &params, Parallelism::Parallel)?;
    let tally = Tally::of(&reports);
    match output {
        Output::Text => {
            for r in &reports {
                out!("{}", report_line(r));
            }
            out!("{} pass, {} fail, {} degenerate", tally.pass, tally.fail, tally.degenerate);
        }
        Output::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "command": "verify",
                "identity": id.name(),
                "summary": tally,
                "reports": reports,
            });
            out!("{doc}");
        }
    }
    Ok(if tally.fail > 0 { 1 } else { 0 })
}

fn cmd_sweep(nmax: usize, vmax: u32, amax: u32, output: Output) -> Result<u8, Failure> {
    if nmax == 0 || amax == 0 {
        return Err(invalid("nmax and amax must be at least 1"));
    }
    let params = SweepParams {
        nmax: Some(nmax),
        vmax: Some(vmax),
        amax: Some(amax),
        ..Default::default()
    };
    let reports = sweep::run(Identity::Theorem, &params, Parallelism::Parallel)?;
    let mismatches = reports.iter().filter(|r| !r.passed()).count();
    match output {
        Output::Text => {
            for r in reports.iter().filter(|r| !r.passed()) {
                out!("{}", report_line(r));
            }
            out!("{mismatches} mismatches / {} instances", reports.len());
        }
        Output::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "command": "sweep",
                "ranges": { "nmax": nmax, "vmax": vmax, "amax": amax },
                "instances": reports.len(),
                "mismatches": mismatches,
                "reports": reports,
            });
            out!("{doc}");
        }
    }
    Ok(if mismatches > 0 { 1 } else { 0 })
}

fn time<R>(reps: u32, mut f: impl FnMut() -> R) -> (R, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..reps {
        let t = Instant::now();
        out = Some(f());
        best = best.min(t.elapsed());
    }
    (out.expect("reps >= 1"), best)
}

fn cmd_bench(v: Option<Vec<u32>>, a: Option<Vec<u32>>, reps: u32, output: Output) -> Result<u8, Failure> {
    let instances: Vec<(Vec<u32>, Vec<u32>)> = match (v, a) {
        (Some(v), Some(a)) => vec![(v, a)],
        (None, None) => vec![
            (vec![1, 1], vec![2, 2]),
            (vec![2, 1, 0], vec![2, 2, 2]),
            (vec![2, 2, 2], vec![2, 2, 2]),
            (vec![2, 2, 2], vec![3, 3, 3]),
        ],
        _ => return Err(invalid("bench needs both --v and --a, or neither")),
    };
    let mut rows = Vec::new();
    for (v, a) in instances {
        check_lengths(v.len(), a.len())?;
        let (vc, ac) = (Composition::new(v.clone()), Composition::new(a.clone()));
        let vi: Vec<i32> = v.iter().map(|&x| x as i32).collect();
        let (oracle, t_oracle) = time(reps, || brute_d(&vi, &vc.partition(), &a));
        let (rec, t_rec) = time(reps, || eval_recursive(&vc, &ac));
        let (ind, t_ind) = time(reps, || eval_inductive(&vc, &ac));
        let (oracle, rec, ind) = (oracle?, rec?, ind?);
        let agree = oracle == rec && rec == ind;
        rows.push(json!({
            "v": v,
            "a": a,
            "oracle_ms": ms(t_oracle),
            "recursive_ms": ms(t_rec),
            "inductive_ms": ms(t_ind),
            "agree": agree,
        }));
    }
    match output {
        Output::Text => {
            out!("{:<12} {:<12} {:>12} {:>12} {:>12}  agree", "v", "a", "oracle ms", "recursive ms", "inductive ms");
            for r in &rows {
                out!(
                    "{:<12} {:<12} {:>12.3} {:>12.3} {:>12.3}  {}",
                    seq_text(&r["v"]),
                    seq_text(&r["a"]),
                    r["oracle_ms"].as_f64().unwrap_or(0.0),
                    r["recursive_ms"].as_f64().unwrap_or(0.0),
                    r["inductive_ms"].as_f64().unwrap_or(0.0),
                    r["agree"]
                );
            }
        }
        Output::Json => out!("{}", json!({ "schema": SCHEMA, "command": "bench", "rows": rows })),
    }
    let all_agree = rows.iter().all(|r| r["agree"] == Value::Bool(true));
    Ok(if all_agree { 0 } else { 1 })
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn seq_text(v: &Value) -> String {
    v.as_array()
        .map(|xs| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .unwrap_or_default()
}
