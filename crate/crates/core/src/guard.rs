//! Size limits for anything that enumerates codewords or ambient groups.

use std::sync::RwLock;

use crate::algebra::AmbientParams;
use crate::error::{Error, Result};

/// Enumeration limits. The library targets desk-scale codes, so every
/// operation that materialises a set checks one of these first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    /// Largest binary length `alpha + 2*beta` a code may have.
    pub max_length: usize,
    /// Largest `log2 |C|` that may be enumerated.
    pub max_log_size: usize,
    /// Largest binary length for which the whole ambient group is scanned.
    pub max_oracle_length: usize,
    /// Largest binary length accepted by the exhaustive search.
    pub max_search_length: usize,
}

impl Guard {
    pub const DEFAULT: Guard = Guard {
        max_length: 32,
        max_log_size: 24,
        max_oracle_length: 24,
        max_search_length: 10,
    };

    /// The process-wide guard.
    pub fn current() -> Guard {
        *CURRENT.read().unwrap_or_else(|e| e.into_inner())
    }

    /// Replaces the process-wide guard.
    pub fn install(guard: Guard) {
        *CURRENT.write().unwrap_or_else(|e| e.into_inner()) = guard;
    }

    pub fn check_length(&self, ambient: AmbientParams) -> Result<()> {
        if ambient.length() > self.max_length {
            return Err(Error::GuardExceeded(format!(
                "binary length {} of ambient {} exceeds the limit {}",
                ambient.length(),
                ambient,
                self.max_length
            )));
        }
        Ok(())
    }

    pub fn check_log_size(&self, log_size: usize) -> Result<()> {
        if log_size > self.max_log_size {
            return Err(Error::GuardExceeded(format!(
                "code would have 2^{log_size} codewords, limit is 2^{}",
                self.max_log_size
            )));
        }
        Ok(())
    }

    pub fn check_oracle(&self, ambient: AmbientParams) -> Result<()> {
        if ambient.length() > self.max_oracle_length {
            return Err(Error::GuardExceeded(format!(
                "scanning the ambient {} means 2^{} vectors, limit is 2^{}",
                ambient,
                ambient.length(),
                self.max_oracle_length
            )));
        }
        Ok(())
    }

    pub fn check_search(&self, ambient: AmbientParams) -> Result<()> {
        if ambient.length() > self.max_search_length {
            return Err(Error::GuardExceeded(format!(
                "search over ambient {} (length {}) exceeds the search limit {}",
                ambient,
                ambient.length(),
                self.max_search_length
            )));
        }
        Ok(())
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard::DEFAULT
    }
}

static CURRENT: RwLock<Guard> = RwLock::new(Guard::DEFAULT);
