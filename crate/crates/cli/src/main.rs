use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use csmcalc::probability;
use csmcalc_cli::bench::bench;
use csmcalc_cli::fixtures;
use csmcalc_cli::run::{
    self, load_input, parse_class, stress, to_json, to_text, with_timeout, Algorithm, RunConfig,
    Saturation,
};
use csmcalc_cli::CliError;
use num_bigint::BigInt;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "csmcalc",
    version,
    about = "Segre, CSM and Milnor classes of subschemes of P^n over GF(p)"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GlobalArgs {
    /// Reduce all coefficients modulo this prime instead of the file's.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Root seed; random when omitted, always echoed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Algorithm::Auto)]
    algorithm: Algorithm,
    /// Degenerate draws tolerated per projective degree before giving up.
    #[arg(long, global = true, default_value_t = 3)]
    retries: usize,
    #[arg(long, global = true, value_enum, default_value_t = Saturation::Deterministic)]
    saturation: Saturation,
    /// Compute every projective degree instead of filling in known ones.
    #[arg(long, global = true)]
    verify: bool,
    #[arg(long, global = true)]
    json: bool,
    #[arg(long = "timeout-s", global = true)]
    timeout_s: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// CSM class, Euler characteristic and linear-section profile.
    Csm { input: String },
    /// Segre class of V(I).
    Segre { input: String },
    /// Euler characteristic and profile.
    Euler { input: String },
    /// Projective degrees of the map given by the generators.
    Projdeg {
        input: String,
        /// Use the partial derivatives of the single generator.
        #[arg(long)]
        gradient: bool,
    },
    /// Time every algorithm on a set of fixtures.
    Bench {
        /// Fixture names or files; the runtime set when empty.
        fixtures: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "hybrid,incl-excl,direct")]
        algorithms: Vec<Algorithm>,
    },
    /// Repeat a randomized computation and count wrong answers.
    Stress {
        input: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Expected class as comma-separated coefficients, ascending in h.
        #[arg(long, allow_hyphen_values = true)]
        expected: Option<String>,
    },
    /// Success-probability bounds for random scalars drawn from a set of size `set_size`.
    Probbound {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        codim: u32,
        #[arg(long = "set-size")]
        set_size: BigInt,
    },
    /// List the bundled fixtures.
    Fixtures,
}

fn config(g: &GlobalArgs) -> RunConfig {
    RunConfig {
        algorithm: g.algorithm,
        seed: g.seed.unwrap_or_else(run::entropy_seed),
        retries: g.retries,
        saturation: g.saturation,
        verify: g.verify,
        json: g.json,
        timeout: g.timeout_s.map(Duration::from_secs),
        gradient: false,
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    let mut out = String::new();
    let g = &cli.global;
    let mut cfg = config(g);
    match cli.command {
        Command::Csm { input } | Command::Euler { input } => {
            let input = load_input(&input, g.prime)?;
            let c = cfg.clone();
            let r = with_timeout(cfg.timeout, move || run::run(&c, &input))?;
            out = render(&cfg, &r);
        }
        Command::Segre { input } => {
            cfg.algorithm = Algorithm::SegreOnly;
            let input = load_input(&input, g.prime)?;
            let c = cfg.clone();
            let r = with_timeout(cfg.timeout, move || run::run(&c, &input))?;
            out = render(&cfg, &r);
        }
        Command::Projdeg { input, gradient } => {
            cfg.algorithm = Algorithm::ProjdegOnly;
            cfg.gradient = gradient;
            let input = load_input(&input, g.prime)?;
            let c = cfg.clone();
            let r = with_timeout(cfg.timeout, move || run::run(&c, &input))?;
            out = render(&cfg, &r);
        }
        Command::Bench {
            fixtures: names,
            algorithms,
        } => {
            let names: Vec<String> = if names.is_empty() {
                fixtures::RUNTIME_SET
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            } else {
                names
            };
            let exe = std::env::current_exe().unwrap_or_else(|_| PathBuf::from("csmcalc"));
            let timeout = cfg.timeout.unwrap_or(Duration::from_secs(600));
            let table = bench(&exe, &names, &algorithms, &cfg, g.prime, timeout);
            if cfg.json {
                writeln!(out, "{}", table.to_json()).unwrap();
            } else {
                out = table.render_text();
            }
        }
        Command::Stress {
            input,
            trials,
            expected,
        } => {
            let input = load_input(&input, g.prime)?;
            let expected = expected.map(|e| parse_class(&e, input.n())).transpose()?;
            let c = cfg.clone();
            let r = with_timeout(cfg.timeout, move || stress(&input, trials, expected, &c))?;
            if cfg.json {
                writeln!(
                    out,
                    "{}",
                    json!({"prime": r.prime, "trials": r.trials, "failures": r.failures,
                           "expected": run::class_json(&r.expected), "seed": cfg.seed})
                )
                .unwrap();
            } else {
                writeln!(
                    out,
                    "prime {}  trials {}  failures {}  expected {}",
                    r.prime, r.trials, r.failures, r.expected
                )
                .unwrap();
            }
        }
        Command::Probbound {
            n,
            m,
            d,
            codim,
            set_size,
        } => {
            if set_size < BigInt::from(1) {
                return Err(CliError::Usage("--set-size must be positive".into()));
            }
            let b = probability::probability_bound(n, m, d, codim, &set_size);
            if cfg.json {
                let per: Vec<_> = b
                    .per_degree
                    .iter()
                    .map(|r| json!({"exact": r.to_string(), "approx": probability::to_decimal(r, 6)}))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({"D": b.degree_bound.to_string(), "per_degree": per,
                           "segre": {"exact": b.segre.to_string(), "approx": probability::to_decimal(&b.segre, 6)}})
                ).unwrap();
            } else {
                writeln!(out, "D         {}", b.degree_bound).unwrap();
                for (i, r) in b.per_degree.iter().enumerate() {
                    writeln!(out, "g_{i:<8}{}  ({r})", probability::to_decimal(r, 6)).unwrap();
                }
                writeln!(
                    out,
                    "segre     {}  ({})",
                    probability::to_decimal(&b.segre, 6),
                    b.segre
                )
                .unwrap();
            }
        }
        Command::Fixtures => {
            for name in fixtures::names() {
                writeln!(out, "{name}").unwrap();
            }
        }
    }
    Ok(out)
}

fn render(cfg: &RunConfig, r: &run::RunResult) -> String {
    if cfg.json {
        format!("{}\n", to_json(r))
    } else {
        to_text(r)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(out) => {
            // a closed pipe (`| head`) is not an error
            match std::io::stdout().lock().write_all(out.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
