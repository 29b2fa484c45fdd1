//! Runtime configuration: defaults, environment overrides, CLI overrides.
//!
//! Precedence is flags over environment (prefix `GROTHWITT_`) over defaults.
//! The merge with flags happens in the CLI layer; this module only knows
//! defaults and the environment.

/// Knobs shared by the library entry points and the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Series truncation order N for Lambda(Q) computations.
    pub trunc: usize,
    /// Enumeration budget in field elements for point counting and sums.
    pub enum_budget: u64,
    /// Trial budget for randomized independence witnesses.
    pub trials: u32,
    /// Seed for every deterministic random stream.
    pub seed: u64,
    /// Horizon for ghost-component scans (zero sets, diagnostics).
    pub horizon: u64,
    /// Largest extension degree tried by the two-curves isogeny search.
    pub m_max: u32,
    /// Working precision in bits for character-sum numerics.
    pub bits: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            trunc: 64,
            enum_budget: 1_000_000,
            trials: 100,
            seed: 0,
            horizon: 50,
            m_max: 120,
            bits: 128,
        }
    }
}

impl Config {
    /// Defaults overridden by any `GROTHWITT_*` environment variables.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        fn read<T: std::str::FromStr>(name: &str, into: &mut T) {
            if let Ok(s) = std::env::var(name) {
                if let Ok(v) = s.trim().parse::<T>() {
                    *into = v;
                }
            }
        }
        read("GROTHWITT_TRUNC", &mut cfg.trunc);
        read("GROTHWITT_BUDGET", &mut cfg.enum_budget);
        read("GROTHWITT_TRIALS", &mut cfg.trials);
        read("GROTHWITT_SEED", &mut cfg.seed);
        read("GROTHWITT_HORIZON", &mut cfg.horizon);
        read("GROTHWITT_MMAX", &mut cfg.m_max);
        read("GROTHWITT_BITS", &mut cfg.bits);
        cfg
    }
}
