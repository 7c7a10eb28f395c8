use std::fmt;

/// One axiom instance and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    pub chain: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<AxiomCheck>,
}

impl SuiteReport {
    pub fn push(&mut self, axiom: &str, chain: impl Into<String>, pass: bool) {
        self.checks.push(AxiomCheck { axiom: axiom.to_string(), chain: chain.into(), pass });
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Number of checks recorded for one axiom.
    pub fn count(&self, axiom: &str) -> usize {
        self.checks.iter().filter(|c| c.axiom == axiom).count()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} [{}]: {}", c.axiom, c.chain, if c.pass { "pass" } else { "fail" })?;
        }
        Ok(())
    }
}
