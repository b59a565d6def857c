//! Timing table over fixtures and algorithms. Each cell runs in a child
//! process so that a timed-out cell can be killed.

use std::io::Read;
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::run::{Algorithm, RunConfig};

#[derive(Clone, Debug, PartialEq)]
pub enum CellOutcome {
    Done { ms: f64, csm: Value },
    TimedOut,
    Failed(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub fixture: String,
    pub cells: Vec<CellOutcome>,
}

impl BenchRow {
    /// True when every finished cell produced the same class.
    pub fn agreement(&self) -> bool {
        let mut done = self.cells.iter().filter_map(|c| match c {
            CellOutcome::Done { csm, .. } => Some(csm),
            _ => None,
        });
        match done.next() {
            Some(first) => done.all(|c| c == first),
            None => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchTable {
    pub algorithms: Vec<Algorithm>,
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn disagreements(&self) -> usize {
        self.rows.iter().filter(|r| !r.agreement()).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{:<12}", "fixture");
        for a in &self.algorithms {
            out.push_str(&format!("{:>14}", a.name()));
        }
        out.push_str(&format!("{:>8}\n", "agree"));
        for row in &self.rows {
            out.push_str(&format!("{:<12}", row.fixture));
            for c in &row.cells {
                let s = match c {
                    CellOutcome::Done { ms, .. } => format!("{ms:.1}"),
                    CellOutcome::TimedOut => "-".to_string(),
                    CellOutcome::Failed(_) => "n/a".to_string(),
                };
                out.push_str(&format!("{s:>14}"));
            }
            out.push_str(&format!(
                "{:>8}\n",
                if row.agreement() { "yes" } else { "NO" }
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<Value> = self
                    .algorithms
                    .iter()
                    .zip(&r.cells)
                    .map(|(a, c)| match c {
                        CellOutcome::Done { ms, csm } => {
                            json!({"algorithm": a.name(), "ms": ms, "csm": csm})
                        }
                        CellOutcome::TimedOut => {
                            json!({"algorithm": a.name(), "ms": null, "timeout": true})
                        }
                        CellOutcome::Failed(e) => {
                            json!({"algorithm": a.name(), "ms": null, "error": e})
                        }
                    })
                    .collect();
                json!({"fixture": r.fixture, "cells": cells, "agreement": r.agreement()})
            })
            .collect();
        json!({"rows": rows, "disagreements": self.disagreements()})
    }
}

fn run_cell(
    exe: &Path,
    fixture: &str,
    algorithm: Algorithm,
    config: &RunConfig,
    prime: Option<u64>,
    timeout: Duration,
) -> CellOutcome {
    let mut cmd = Command::new(exe);
    cmd.args(["csm", fixture, "--json", "--algorithm", algorithm.name()])
        .args([
            "--seed",
            &config.seed.to_string(),
            "--retries",
            &config.retries.to_string(),
        ])
        .args([
            "--saturation",
            match config.saturation {
                crate::run::Saturation::Deterministic => "deterministic",
                crate::run::Saturation::Generic => "generic",
            },
        ])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if config.verify {
        cmd.arg("--verify");
    }
    if let Some(p) = prime {
        cmd.args(["--prime", &p.to_string()]);
    }
    let mut child = match cmd.spawn() {
        Ok(c) => c,
        Err(e) => return CellOutcome::Failed(e.to_string()),
    };
    let deadline = Instant::now() + timeout;
    let status = loop {
        match child.try_wait() {
            Ok(Some(s)) => break s,
            Ok(None) if Instant::now() >= deadline => {
                let _ = child.kill();
                let _ = child.wait();
                return CellOutcome::TimedOut;
            }
            Ok(None) => std::thread::sleep(Duration::from_millis(10)),
            Err(e) => return CellOutcome::Failed(e.to_string()),
        }
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    if let Some(mut s) = child.stdout.take() {
        let _ = s.read_to_string(&mut stdout);
    }
    if let Some(mut s) = child.stderr.take() {
        let _ = s.read_to_string(&mut stderr);
    }
    if !status.success() {
        return CellOutcome::Failed(stderr.trim().to_string());
    }
    match serde_json::from_str::<Value>(&stdout) {
        Ok(v) => CellOutcome::Done {
            ms: v["ms"].as_f64().unwrap_or(0.0),
            csm: v["csm"].clone(),
        },
        Err(e) => CellOutcome::Failed(e.to_string()),
    }
}

/// One row per fixture, one cell per algorithm, run sequentially. `exe` is
/// the `csmcalc` binary; `prime` overrides the fixtures' moduli.
pub fn bench(
    exe: &Path,
    fixtures: &[String],
    algorithms: &[Algorithm],
    config: &RunConfig,
    prime: Option<u64>,
    timeout: Duration,
) -> BenchTable {
    let rows = fixtures
        .iter()
        .map(|f| BenchRow {
            fixture: f.clone(),
            cells: algorithms
                .iter()
                .map(|&a| run_cell(exe, f, a, config, prime, timeout))
                .collect(),
        })
        .collect();
    BenchTable {
        algorithms: algorithms.to_vec(),
        rows,
    }
}
