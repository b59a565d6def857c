use std::hash::{BuildHasher, Hasher};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use csmcalc::charclass::{
    self, compute_csm, projective_degrees, segre_class, ClassReport, CsmAlgorithm, Settings,
};
use csmcalc::{ChowClass, Ideal, Polynomial, ProjectiveDegrees, SaturationMode, SeededRng};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::fixtures;
use crate::parse::{parse_ideal_file, SchemeInput};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    #[default]
    Auto,
    Direct,
    Hybrid,
    InclExcl,
    Smooth,
    SegreOnly,
    ProjdegOnly,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Direct => "direct",
            Algorithm::Hybrid => "hybrid",
            Algorithm::InclExcl => "incl-excl",
            Algorithm::Smooth => "smooth",
            Algorithm::SegreOnly => "segre-only",
            Algorithm::ProjdegOnly => "projdeg-only",
        }
    }

    fn csm(self) -> Option<CsmAlgorithm> {
        match self {
            Algorithm::Auto => Some(CsmAlgorithm::Auto),
            Algorithm::Direct => Some(CsmAlgorithm::Direct),
            Algorithm::Hybrid => Some(CsmAlgorithm::Hybrid),
            Algorithm::InclExcl => Some(CsmAlgorithm::InclusionExclusion),
            Algorithm::Smooth => Some(CsmAlgorithm::Smooth),
            Algorithm::SegreOnly | Algorithm::ProjdegOnly => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Saturation {
    #[default]
    Deterministic,
    Generic,
}

impl From<Saturation> for SaturationMode {
    fn from(s: Saturation) -> Self {
        match s {
            Saturation::Deterministic => SaturationMode::Deterministic,
            Saturation::Generic => SaturationMode::GenericLinear,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub retries: usize,
    pub saturation: Saturation,
    pub verify: bool,
    pub json: bool,
    pub timeout: Option<Duration>,
    /// Use the gradient ideal of the single generator (projective degrees only).
    pub gradient: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algorithm: Algorithm::Auto,
            seed: entropy_seed(),
            retries: 3,
            saturation: Saturation::default(),
            verify: false,
            json: false,
            timeout: None,
            gradient: false,
        }
    }
}

impl RunConfig {
    pub fn settings(&self) -> Settings {
        Settings {
            retries: self.retries,
            verify: self.verify,
            saturation: self.saturation.into(),
            parallel: true,
            ..Settings::default()
        }
    }

    pub fn rng(&self) -> SeededRng {
        SeededRng::new(self.seed)
    }
}

pub fn entropy_seed() -> u64 {
    std::collections::hash_map::RandomState::new()
        .build_hasher()
        .finish()
}

/// Reads a file, or a bundled fixture when no such file exists.
pub fn load_input(spec: &str, prime: Option<u64>) -> Result<SchemeInput, CliError> {
    let path = std::path::Path::new(spec);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{spec}: {e}")))?;
        return parse_ideal_file(&text, prime);
    }
    match fixtures::fixture(spec) {
        Some(text) => parse_ideal_file(text, prime),
        None => Err(CliError::UnknownInput(spec.to_string())),
    }
}

/// What a command produced.
#[derive(Clone, Debug)]
pub enum Output {
    Classes(Box<ClassReport>),
    Segre(ChowClass),
    Degrees(ProjectiveDegrees),
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub output: Output,
    pub algorithm: String,
    pub seed: u64,
    pub ms: f64,
}

/// The ideal of partial derivatives of a single generator.
pub fn gradient_ideal(ideal: &Ideal) -> Result<Ideal, CliError> {
    let [f] = ideal.generators() else {
        return Err(CliError::Usage(
            "--gradient needs exactly one generator".into(),
        ));
    };
    let ring = ideal.ring();
    let grad: Vec<Polynomial> = (0..ring.ngens())
        .map(|j| f.partial_derivative(j))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    Ok(Ideal::new(ring, grad)?)
}

/// Runs one computation on the calling thread.
pub fn run(config: &RunConfig, input: &SchemeInput) -> Result<RunResult, CliError> {
    let settings = config.settings();
    let rng = config.rng();
    let start = Instant::now();
    let ideal = if config.gradient {
        gradient_ideal(&input.ideal)?
    } else {
        input.ideal.clone()
    };
    let output = match config.algorithm.csm() {
        Some(algorithm) => {
            if algorithm == CsmAlgorithm::InclusionExclusion
                && ideal.len() > charclass::INCLUSION_EXCLUSION_WARN_GENERATORS
            {
                eprintln!(
                    "warning: inclusion-exclusion over {} generators needs {} terms",
                    ideal.len(),
                    (1u64 << ideal.len()) - 1
                );
            }
            Output::Classes(Box::new(compute_csm(&ideal, algorithm, &settings, &rng)?))
        }
        None if config.algorithm == Algorithm::SegreOnly => {
            Output::Segre(segre_class(&ideal, &settings, &rng)?)
        }
        None => Output::Degrees(projective_degrees(&ideal, &settings, &rng)?),
    };
    let algorithm = match &output {
        Output::Classes(r) => r.method.to_string(),
        _ => config.algorithm.name().to_string(),
    };
    Ok(RunResult {
        output,
        algorithm,
        seed: config.seed,
        ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs `job` on a worker thread and gives up after `timeout`.
pub fn with_timeout<T, F>(timeout: Option<Duration>, job: F) -> Result<T, CliError>
where
    T: Send + 'static,
    F: FnOnce() -> Result<T, CliError> + Send + 'static,
{
    let Some(limit) = timeout else { return job() };
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(job());
    });
    match rx.recv_timeout(limit) {
        Ok(r) => r,
        Err(_) => Err(CliError::Timeout(limit.as_secs())),
    }
}

pub fn class_json(c: &ChowClass) -> Value {
    match c.to_i64s() {
        Some(v) => json!(v),
        None => Value::Array(
            c.coeffs()
                .iter()
                .map(|x| Value::String(x.to_string()))
                .collect(),
        ),
    }
}

pub fn to_json(r: &RunResult) -> Value {
    let mut obj = serde_json::Map::new();
    match &r.output {
        Output::Classes(rep) => {
            obj.insert("csm".into(), class_json(&rep.csm));
            obj.insert(
                "euler".into(),
                rep.euler
                    .to_string()
                    .parse::<i64>()
                    .map(Value::from)
                    .unwrap_or_else(|_| Value::String(rep.euler.to_string())),
            );
            obj.insert(
                "profile".into(),
                rep.profile.to_i64s().map(|v| json!(v)).unwrap_or_else(|| {
                    json!(rep
                        .profile
                        .values
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>())
                }),
            );
            for (key, c) in [
                ("segre", &rep.segre),
                ("cfj", &rep.cfj),
                ("milnor", &rep.milnor),
            ] {
                if let Some(c) = c {
                    obj.insert(key.into(), class_json(c));
                }
            }
        }
        Output::Segre(s) => {
            obj.insert("segre".into(), class_json(s));
        }
        Output::Degrees(pd) => {
            obj.insert("projdeg".into(), json!(pd.g));
        }
    }
    obj.insert("algorithm".into(), json!(r.algorithm));
    obj.insert("seed".into(), json!(r.seed));
    obj.insert("ms".into(), json!(r.ms));
    Value::Object(obj)
}

pub fn to_text(r: &RunResult) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<10}{v}\n"));
    match &r.output {
        Output::Classes(rep) => {
            line("csm", rep.csm.to_string());
            line("euler", rep.euler.to_string());
            let prof: Vec<String> = rep.profile.values.iter().map(|x| x.to_string()).collect();
            line("profile", format!("({})", prof.join(", ")));
            for (key, c) in [
                ("segre", &rep.segre),
                ("cfj", &rep.cfj),
                ("milnor", &rep.milnor),
            ] {
                if let Some(c) = c {
                    line(key, c.to_string());
                }
            }
        }
        Output::Segre(s) => line("segre", s.to_string()),
        Output::Degrees(pd) => {
            let g: Vec<String> = pd.g.iter().map(|x| x.to_string()).collect();
            line("projdeg", format!("({})", g.join(", ")));
        }
    }
    line("algorithm", r.algorithm.clone());
    line("seed", r.seed.to_string());
    line("time", format!("{:.1} ms", r.ms));
    out
}

/// Parses `a0,a1,...` into a class on `P^n`.
pub fn parse_class(text: &str, n: usize) -> Result<ChowClass, CliError> {
    let coeffs = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("bad coefficient `{s}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != n + 1 {
        return Err(CliError::Usage(format!(
            "expected {} coefficients, got {}",
            n + 1,
            coeffs.len()
        )));
    }
    Ok(ChowClass::from_coeffs(n, coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StressResult {
    pub trials: usize,
    pub failures: usize,
    pub expected: ChowClass,
    pub prime: u32,
}

/// Repeats a Segre (or CSM) computation with independent seeds and counts
/// results differing from `expected`. Without `expected`, a verified run
/// under the root seed provides it.
pub fn stress(
    input: &SchemeInput,
    trials: usize,
    expected: Option<ChowClass>,
    config: &RunConfig,
) -> Result<StressResult, CliError> {
    let settings = config.settings();
    let root = config.rng();
    let compute = |rng: &SeededRng, settings: &Settings| -> Result<ChowClass, CliError> {
        Ok(
            match config
                .algorithm
                .csm()
                .filter(|_| config.algorithm != Algorithm::Auto)
            {
                Some(a) => compute_csm(&input.ideal, a, settings, rng)?.csm,
                None => segre_class(&input.ideal, settings, rng)?,
            },
        )
    };
    let expected = match expected {
        Some(e) => e,
        None => compute(
            &root,
            &Settings {
                verify: true,
                ..settings
            },
        )?,
    };
    let mut failures = 0;
    for t in 0..trials {
        let rng = root.derive(t as u64 + 1);
        match compute(&rng, &settings) {
            Ok(c) if c == expected => {}
            Ok(_) | Err(CliError::Core(csmcalc::Error::RetriesExhausted(_))) => failures += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(StressResult {
        trials,
        failures,
        expected,
        prime: input.ring().field().modulus(),
    })
}
