//! Node budgets for the exponential solvers.
//!
//! A budget bounds the number of search-tree nodes a single solver call
//! may expand.  Running out is reported as an explicit error, distinct
//! from a proven "no solution"; callers quarantine such graphs instead
//! of treating them as decided.

use thiserror::Error;

/// Environment variable consulted for the default node budget.
pub const BUDGET_ENV: &str = "PACKNUM_BUDGET";

/// Default node budget per solver call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("solver node budget of {limit} exhausted")]
pub struct BudgetExceeded {
    pub limit: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit }
    }

    pub fn unlimited() -> Self {
        Self { limit: u64::MAX }
    }

    /// Reads `PACKNUM_BUDGET` or falls back to [`DEFAULT_BUDGET`].
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Self::new(limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            limit: self.limit,
            used: 0,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

pub(crate) struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meter_trips_at_limit() {
        let mut m = Budget::new(2).meter();
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert_eq!(m.tick(), Err(BudgetExceeded { limit: 2 }));
    }
}
