//! Per-degree verification reports.

/// One compared pair of values, indexed by degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check<T> {
    pub k: usize,
    /// Extra coordinates of the check beyond the degree, e.g. `a=2`.
    pub note: Option<String>,
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Check<T> {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Outcome of checking an identity degree by degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport<T> {
    pub identity: &'static str,
    pub checks: Vec<Check<T>>,
}

impl<T: PartialEq> IdentityReport<T> {
    pub fn new(identity: &'static str) -> Self {
        IdentityReport {
            identity,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, k: usize, lhs: T, rhs: T) {
        self.checks.push(Check {
            k,
            note: None,
            lhs,
            rhs,
        });
    }

    pub fn push_noted(&mut self, k: usize, note: String, lhs: T, rhs: T) {
        self.checks.push(Check {
            k,
            note: Some(note),
            lhs,
            rhs,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check<T>> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn map<U>(self, f: impl Fn(T) -> U) -> IdentityReport<U> {
        IdentityReport {
            identity: self.identity,
            checks: self
                .checks
                .into_iter()
                .map(|c| Check {
                    k: c.k,
                    note: c.note,
                    lhs: f(c.lhs),
                    rhs: f(c.rhs),
                })
                .collect(),
        }
    }
}
