use serde::{Deserialize, Serialize};

/// How many witnesses a checker collects per rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessPolicy {
    /// The lexicographically first witness of each violated rule.
    #[default]
    First,
    /// Every witness.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub witness: Vec<usize>,
}

/// Outcome of an exhaustive check. `passed` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn pass() -> Self {
        AxiomReport {
            passed: true,
            violations: Vec::new(),
        }
    }

    pub fn from_violations(violations: Vec<Violation>) -> Self {
        AxiomReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
        self.passed = self.violations.is_empty();
    }
}

/// Collects violations under a [`WitnessPolicy`], keeping at most one per
/// rule in `First` mode. Callers enumerate tuples in lexicographic order, so
/// the retained witness is the minimal one.
#[derive(Debug)]
pub(crate) struct Collector {
    policy: WitnessPolicy,
    violations: Vec<Violation>,
}

impl Collector {
    pub(crate) fn new(policy: WitnessPolicy) -> Self {
        Collector {
            policy,
            violations: Vec::new(),
        }
    }

    /// Whether another witness for `rule` would still be recorded.
    pub(crate) fn wants(&self, rule: &str) -> bool {
        self.policy == WitnessPolicy::All || !self.violations.iter().any(|v| v.rule == rule)
    }

    pub(crate) fn record(&mut self, rule: &str, witness: Vec<usize>) {
        if self.wants(rule) {
            self.violations.push(Violation {
                rule: rule.to_string(),
                witness,
            });
        }
    }

    pub(crate) fn finish(self) -> AxiomReport {
        AxiomReport::from_violations(self.violations)
    }
}
