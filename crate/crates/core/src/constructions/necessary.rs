use std::fmt;

use crate::model::ProblemSpec;

/// One necessary condition and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    /// The condition as stated, e.g. `m | v`.
    pub statement: String,
    /// The condition's negation, shown when it fails.
    pub violation: String,
    /// Concrete values, e.g. `4 | 8`.
    pub detail: String,
    pub holds: bool,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            write!(f, "ok    {} ({})", self.statement, self.detail)
        } else {
            write!(f, "FAIL  {} ({})", self.violation, self.detail)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub spec: ProblemSpec,
    pub conditions: Vec<Condition>,
}

impl FeasibilityReport {
    /// All necessary conditions hold. Existence is not implied.
    pub fn met(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn first_violation(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| !c.holds)
    }
}

/// Checks `r > 0 ⇒ m | v`, `s > 0 ⇒ n | v` and `r + s = v − 1`.
pub fn check_necessary(spec: &ProblemSpec) -> FeasibilityReport {
    let ProblemSpec { v, m, n, r, s } = *spec;
    let divides = |len: usize, count: usize, sym: &str, cnt: &str| Condition {
        statement: format!("{cnt} > 0 ⇒ {sym} | v"),
        violation: format!("{sym} ∤ v"),
        detail: if count == 0 {
            format!("{cnt}=0")
        } else {
            format!("{len} {} {v}", if v % len == 0 { "|" } else { "∤" })
        },
        holds: count == 0 || v % len == 0,
    };
    FeasibilityReport {
        spec: *spec,
        conditions: vec![
            divides(m, r, "m", "r"),
            divides(n, s, "n", "s"),
            Condition {
                statement: "r+s = v−1".into(),
                violation: "r+s ≠ v−1".into(),
                detail: format!("{r}+{s} {} {}", if r + s + 1 == v { "=" } else { "≠" }, v - 1),
                holds: r + s + 1 == v,
            },
        ],
    }
}
