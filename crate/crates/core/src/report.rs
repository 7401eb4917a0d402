//! Machine-readable results of the axiom and isomorphism checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    /// Input name to coordinates as `p/q` strings; scalars are one-element lists.
    pub inputs: BTreeMap<String, Vec<String>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub name: String,
    pub trials: usize,
    pub passes: usize,
    pub counterexample: Option<Counterexample>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.passes == self.trials
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub phi: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub trials: usize,
    pub generator: String,
    pub axioms: Vec<LawResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(LawResult::passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub phi: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub trials: usize,
    pub generator: String,
    pub checks: Vec<LawResult>,
}

impl IsoReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(LawResult::passed)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[LawResult]) -> fmt::Result {
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in rows {
        let status = if r.passed() { "pass" } else { "FAIL" };
        writeln!(f, "  {:<width$}  {:>5}/{:<5}  {status}", r.name, r.passes, r.trials)?;
        if let Some(c) = &r.counterexample {
            let inputs: Vec<String> = c
                .inputs
                .iter()
                .map(|(name, v)| format!("{name}=({})", v.join(", ")))
                .collect();
            writeln!(f, "      trial {}: {} -- {}", c.trial, inputs.join(" "), c.detail)?;
        }
    }
    Ok(())
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vector space axioms for R^{}_{} via {}", self.n, self.k, self.phi)?;
        writeln!(f, "  seed {}, {}", self.seed, self.generator)?;
        write_rows(f, &self.axioms)
    }
}

impl fmt::Display for IsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "isomorphism R^{}_{} -> R^{} via {}", self.n, self.k, self.k, self.phi)?;
        writeln!(f, "  seed {}, {}", self.seed, self.generator)?;
        write_rows(f, &self.checks)
    }
}
