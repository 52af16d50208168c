//! Capacity limits for exponential-time routines.

/// Default cap on `|E|` for routines that scan all subsets of `E`.
pub const DEFAULT_SUBSET_CAP: usize = 24;

/// Default cap on the number of edges accepted by the Tutte oracle.
pub const DEFAULT_TUTTE_CAP: usize = 12;

/// Environment variable overriding [`DEFAULT_SUBSET_CAP`].
pub const SUBSET_CAP_ENV: &str = "HYTREX_MAX_E";

/// The subset-enumeration cap, honouring `HYTREX_MAX_E` when it parses.
/// Values above 63 are clamped since subsets are stored as 64-bit masks.
pub fn subset_cap() -> usize {
    std::env::var(SUBSET_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_SUBSET_CAP)
        .min(63)
}
