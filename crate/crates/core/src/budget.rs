//! Resource caps for the exponential searches.

use std::env;

pub const TRAVERSAL_CAP_VAR: &str = "FREEBRAID_TRAVERSAL_CAP";
pub const BRUHAT_CAP_VAR: &str = "FREEBRAID_BRUHAT_MAX_LENGTH";
pub const MEMORY_CAP_VAR: &str = "FREEBRAID_MAX_ELEMENTS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of words (or factorizations) visited by one
    /// reduced-word-graph traversal.
    pub traversal_cap: usize,
    /// Largest length for which a Bruhat lower set is computed.
    pub bruhat_max_length: usize,
    /// Maximum number of elements held by one enumeration.
    pub max_elements: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            traversal_cap: 5_000_000,
            bruhat_max_length: 20,
            max_elements: 20_000_000,
        }
    }
}

impl Budgets {
    /// Defaults, overridden by `FREEBRAID_TRAVERSAL_CAP`,
    /// `FREEBRAID_BRUHAT_MAX_LENGTH` and `FREEBRAID_MAX_ELEMENTS` when set to
    /// a valid integer.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        let read = |name: &str| {
            env::var(name)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
        };
        if let Some(v) = read(TRAVERSAL_CAP_VAR) {
            b.traversal_cap = v;
        }
        if let Some(v) = read(BRUHAT_CAP_VAR) {
            b.bruhat_max_length = v;
        }
        if let Some(v) = read(MEMORY_CAP_VAR) {
            b.max_elements = v;
        }
        b
    }
}
