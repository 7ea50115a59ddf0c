//! Per-cost case accounting and report serialization.

use serde::{Deserialize, Serialize};

/// How many cases each elimination step resolved at one cost level.
///
/// `all_subcases_*` count extension sub-cases, so they can exceed the
/// number of parent cases that reached that step; `all_subcases_parents`
/// counts the parents themselves. For every cost,
/// `does_not_dominate + forbidden_broadcast + has_broadcast +
/// inductive_argument + necessary_has_broadcast +
/// necessary_inductive + all_subcases_parents == total_cases`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCounts {
    pub total_cases: u64,
    pub does_not_dominate: u64,
    pub forbidden_broadcast: u64,
    pub has_broadcast: u64,
    pub inductive_argument: u64,
    pub necessary_has_broadcast: u64,
    pub necessary_inductive: u64,
    pub all_subcases_has_broadcast: u64,
    pub all_subcases_inductive: u64,
    pub all_subcases_parents: u64,
}

impl StepCounts {
    pub fn add(&mut self, other: &StepCounts) {
        self.total_cases += other.total_cases;
        self.does_not_dominate += other.does_not_dominate;
        self.forbidden_broadcast += other.forbidden_broadcast;
        self.has_broadcast += other.has_broadcast;
        self.inductive_argument += other.inductive_argument;
        self.necessary_has_broadcast += other.necessary_has_broadcast;
        self.necessary_inductive += other.necessary_inductive;
        self.all_subcases_has_broadcast += other.all_subcases_has_broadcast;
        self.all_subcases_inductive += other.all_subcases_inductive;
        self.all_subcases_parents += other.all_subcases_parents;
    }

    /// Every case lands in exactly one primary row.
    pub fn is_balanced(&self) -> bool {
        self.does_not_dominate
            + self.forbidden_broadcast
            + self.has_broadcast
            + self.inductive_argument
            + self.necessary_has_broadcast
            + self.necessary_inductive
            + self.all_subcases_parents
            == self.total_cases
    }
}

/// Step labels in published table row order (without the parents row,
/// which the published tables leave implicit).
pub const STEP_LABELS: [&str; 9] = [
    "total_cases",
    "does_not_dominate",
    "forbidden_broadcast",
    "has_broadcast",
    "inductive_argument",
    "necessary_broadcast+has_broadcast",
    "necessary_broadcast+inductive_argument",
    "all_subcases+has_broadcast",
    "all_subcases+inductive_argument",
];

impl StepCounts {
    pub fn row(&self, label: &str) -> u64 {
        match label {
            "total_cases" => self.total_cases,
            "does_not_dominate" => self.does_not_dominate,
            "forbidden_broadcast" => self.forbidden_broadcast,
            "has_broadcast" => self.has_broadcast,
            "inductive_argument" => self.inductive_argument,
            "necessary_broadcast+has_broadcast" => self.necessary_has_broadcast,
            "necessary_broadcast+inductive_argument" => self.necessary_inductive,
            "all_subcases+has_broadcast" => self.all_subcases_has_broadcast,
            "all_subcases+inductive_argument" => self.all_subcases_inductive,
            _ => panic!("unknown step label {label}"),
        }
    }
}

/// A case that survived every elimination step, failing the proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub cost: u32,
    /// Row-major active-region strengths of the surviving case.
    pub strengths: Vec<u8>,
}

/// Per-cost counts for a proof run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    /// `(cost, counts)` for every cost in `[s, t]`, ascending.
    pub costs: Vec<(u32, StepCounts)>,
    pub verdict: bool,
    pub survivor: Option<Survivor>,
}

impl CaseReport {
    pub fn empty(s: u32, t: u32) -> CaseReport {
        CaseReport {
            costs: (s..=t).map(|c| (c, StepCounts::default())).collect(),
            verdict: true,
            survivor: None,
        }
    }

    pub fn counts_for(&self, cost: u32) -> Option<&StepCounts> {
        self.costs
            .iter()
            .find(|(c, _)| *c == cost)
            .map(|(_, counts)| counts)
    }

    pub fn counts_for_mut(&mut self, cost: u32) -> &mut StepCounts {
        let ix = self
            .costs
            .iter()
            .position(|(c, _)| *c == cost)
            .expect("cost within [s, t]");
        &mut self.costs[ix].1
    }

    /// CSV with rows as steps and one column per cost, mirroring the
    /// published table layout. All-zero step rows are suppressed unless
    /// `full` is set; `total_cases` always appears.
    pub fn to_csv(&self, full: bool) -> String {
        let mut out = String::from("step");
        for (cost, _) in &self.costs {
            out.push_str(&format!(",cost_{cost}"));
        }
        out.push('\n');
        for label in STEP_LABELS {
            let values: Vec<u64> = self.costs.iter().map(|(_, c)| c.row(label)).collect();
            if !full && label != "total_cases" && values.iter().all(|&v| v == 0) {
                continue;
            }
            out.push_str(label);
            for v in values {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_suppresses_zero_rows() {
        let mut report = CaseReport::empty(2, 3);
        let counts = report.counts_for_mut(2);
        counts.total_cases = 54;
        counts.does_not_dominate = 48;
        let csv = report.to_csv(false);
        assert!(csv.starts_with("step,cost_2,cost_3\n"));
        assert!(csv.contains("total_cases,54,0"));
        assert!(csv.contains("does_not_dominate,48,0"));
        assert!(!csv.contains("forbidden_broadcast"));
        let full = report.to_csv(true);
        assert!(full.contains("forbidden_broadcast,0,0"));
    }

    #[test]
    fn balance_check() {
        let mut c = StepCounts {
            total_cases: 10,
            does_not_dominate: 7,
            forbidden_broadcast: 1,
            all_subcases_parents: 2,
            all_subcases_has_broadcast: 5,
            ..Default::default()
        };
        assert!(c.is_balanced());
        c.total_cases = 11;
        assert!(!c.is_balanced());
    }
}
