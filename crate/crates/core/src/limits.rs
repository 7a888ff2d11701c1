//! Enumeration budget shared by every brute-force operation.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ENUM: u64 = 1 << 22;

/// Caps the number of subsets or search nodes any single operation may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_enum: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum: DEFAULT_MAX_ENUM,
        }
    }
}

impl Limits {
    pub fn new(max_enum: u64) -> Result<Self> {
        if max_enum == 0 {
            return Err(Error::InvalidArgument("max_enum must be at least 1".into()));
        }
        Ok(Limits { max_enum })
    }

    /// Fails unless all `2^bits` subsets of a `bits`-element set fit in the budget.
    pub fn check_subsets(&self, bits: usize) -> Result<u64> {
        if bits >= 63 || (1u64 << bits) > self.max_enum {
            return Err(Error::BudgetExceeded {
                limit: self.max_enum,
            });
        }
        Ok(1u64 << bits)
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            used: 0,
            limit: self.max_enum,
        }
    }
}

/// Incremental counter for searches whose size is not known up front.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
}

impl Meter {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_budget() {
        let l = Limits::new(16).unwrap();
        assert_eq!(l.check_subsets(4).unwrap(), 16);
        assert!(matches!(
            l.check_subsets(5),
            Err(Error::BudgetExceeded { limit: 16 })
        ));
        assert!(Limits::default().check_subsets(64).is_err());
        assert!(Limits::new(0).is_err());
    }

    #[test]
    fn meter_trips_after_limit() {
        let mut m = Limits::new(2).unwrap().meter();
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(m.tick().is_err());
    }
}
