//! Command-line front end for the monoreg library: input loading, the
//! randomized verification suites, and the fixed golden checks.

pub mod golden;
pub mod input;
pub mod suites;

pub use suites::{SuiteParams, VerificationRun};

/// Default RNG seed when neither `--seed` nor `MC_SEED` is given.
pub const DEFAULT_SEED: u64 = 1729;

/// Resolves the seed: explicit flag, then the `MC_SEED` environment
/// variable, then the default.
pub fn resolve_seed(flag: Option<u64>) -> u64 {
    if let Some(s) = flag {
        return s;
    }
    if let Ok(v) = std::env::var("MC_SEED") {
        if let Ok(s) = v.parse() {
            return s;
        }
    }
    DEFAULT_SEED
}
