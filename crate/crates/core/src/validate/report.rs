use std::fmt::Write as _;

use serde::Serialize;

use super::family::FamilyParams;
use super::ClaimId;

/// Counterexamples kept per report.
pub const COUNTEREXAMPLE_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Position of the instance in the family stream.
    pub index: usize,
    pub instance: String,
    pub solver: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub params: FamilyParams,
    pub instances_checked: usize,
    /// Instances that hit a capacity bound; never counted as verdicts.
    pub skipped: usize,
    pub failures: usize,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable summary table.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let verdict = match self.verdict {
            Verdict::Holds => "holds",
            Verdict::Fails => "FAILS",
        };
        let _ = writeln!(out, "{:<18} {}", "claim", self.claim);
        let _ = writeln!(out, "{:<18} {}", "variant", self.params.variant);
        let _ = writeln!(out, "{:<18} {}", "verdict", verdict);
        let _ = writeln!(out, "{:<18} {}", "checked", self.instances_checked);
        let _ = writeln!(out, "{:<18} {}", "skipped", self.skipped);
        let _ = writeln!(out, "{:<18} {}", "failures", self.failures);
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(out, "{:<18} {ms} ms", "wall time");
        }
        for c in &self.counterexamples {
            let _ = writeln!(out, "#{:<6} {}", c.index, c.instance);
            let _ = writeln!(out, "        solver: {}", c.solver);
            let _ = writeln!(out, "        oracle: {}", c.oracle);
        }
        out
    }
}
