//! Runtime configuration, loaded from TOML.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};

/// Environment variable naming a config file that overrides the default.
pub const CONFIG_ENV: &str = "BRAIDLAB_CONFIG";

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Braid index used when a command needs one and none is given.
    pub n: usize,
    pub master_seed: u64,
    /// Largest `n` for which all simple elements may be enumerated.
    pub enumeration_cap: usize,
    /// Largest `n` for brute-force minimal conjugators.
    pub brute_force_cap: usize,
    pub vertex_budget: usize,
    pub handle_budget: u64,
    /// `uniform` or `markov:β`.
    pub distribution: String,
    pub output_dir: PathBuf,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            n: 8,
            master_seed: 2024,
            enumeration_cap: 7,
            brute_force_cap: 8,
            vertex_budget: 100_000,
            handle_budget: crate::word_problem::DEFAULT_HANDLE_BUDGET,
            distribution: "uniform".into(),
            output_dir: PathBuf::from("."),
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    /// The file named by an explicit path, else by `BRAIDLAB_CONFIG`, else defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self> {
        if let Some(p) = explicit {
            return Self::load(p);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(p) => Self::load(Path::new(&p)),
            None => Ok(Self::default()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidArgument("n must be at least 2".into()));
        }
        if self.enumeration_cap == 0
            || self.brute_force_cap == 0
            || self.vertex_budget == 0
            || self.handle_budget == 0
        {
            return Err(Error::InvalidArgument(
                "caps and budgets must be positive".into(),
            ));
        }
        self.distribution
            .parse::<crate::protocols::Distribution>()
            .map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_partial_files() {
        let c = Config::from_toml("n = 6\nmaster_seed = 9\ndistribution = \"markov:4\"").unwrap();
        assert_eq!((c.n, c.master_seed), (6, 9));
        assert_eq!(c.vertex_budget, Config::default().vertex_budget);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(Config::from_toml("n = 1").is_err());
        assert!(Config::from_toml("vertex_budget = 0").is_err());
        assert!(Config::from_toml("colour = 3").is_err());
        assert!(Config::from_toml("distribution = \"zipf\"").is_err());
    }
}
