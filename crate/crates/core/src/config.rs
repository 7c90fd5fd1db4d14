use serde::{Deserialize, Serialize};

/// Limits and execution options for the exact cycle searches.
///
/// Caps bound the exponential searches. Exceeding one is an error, never a
/// silent approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Largest graph `enumerate_cycles` will walk.
    pub enumeration_cap: usize,
    /// Largest block the heaviest-cycle search will explore.
    pub search_cap: usize,
    /// Run per-edge searches on the rayon pool. Results are identical either way.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            enumeration_cap: 12,
            search_cap: 15,
            parallel: true,
        }
    }
}

impl SearchConfig {
    pub fn sequential(self) -> Self {
        SearchConfig {
            parallel: false,
            ..self
        }
    }
}
