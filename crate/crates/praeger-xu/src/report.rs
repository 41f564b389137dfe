//! Machine-readable verification records.

use serde::Serialize;

use crate::formulas::{cost_formula, det_formula, dist_formula};
use crate::graph::PxParams;

/// How a claim was checked.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Witness,
    Bruteforce,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Budget,
}

/// One verified claim: what was checked, how, with what outcome.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub method: Method,
    pub value: serde_json::Value,
    pub witness: Vec<String>,
    pub elapsed_ms: u128,
    pub status: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line of newline-delimited JSON.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Summary object appended after the per-claim lines.
pub fn summary(reports: &[VerificationReport]) -> serde_json::Value {
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let over_budget = reports
        .iter()
        .filter(|r| r.status == Status::Budget)
        .count();
    serde_json::json!({
        "summary": {
            "claims": reports.len(),
            "pass": passed,
            "fail": failed,
            "budget": over_budget,
        }
    })
}

/// The three closed-form parameter values for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct ParamsReport {
    pub n: usize,
    pub k: usize,
    pub det: Option<u64>,
    pub dist: Option<u64>,
    pub cost: Option<u64>,
}

pub fn params_report(params: PxParams) -> ParamsReport {
    ParamsReport {
        n: params.n(),
        k: params.k(),
        det: det_formula(params).value(),
        dist: dist_formula(params).value(),
        cost: cost_formula(params).value(),
    }
}

/// A witness export: the defining vertices plus an optional verified
/// flag; colorings carry their classes, interchange queries carry the
/// swapping element.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub kind: String,
    pub n: usize,
    pub k: usize,
    pub vertices: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}
