//! Run configuration, read from flat `key = value` text (TOML syntax).

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::chow::BlowupModel;
use crate::exact::fp::is_prime;

use super::ReportError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Field for the sampling checks.
    pub prime: u64,
    /// Number of sampled charts; 0 turns sampling off.
    pub trials: u64,
    pub seed: Option<u64>,
    /// Cap on rejection-sampling trials for a random general pair.
    pub trial_budget: u64,
    /// Extra cubic pair to check, in the pair input format.
    pub input: Option<PathBuf>,
    pub ambient_degree: Option<i64>,
    pub kappa: Option<i64>,
    /// Degree of both blown-up curves.
    pub curve_degree: Option<i64>,
    pub curve_genus: Option<i64>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: 101,
            trials: 0,
            seed: None,
            trial_budget: 200,
            input: None,
            ambient_degree: None,
            kappa: None,
            curve_degree: None,
            curve_genus: None,
            output: None,
            format: Format::Text,
            strict: false,
        }
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ReportError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| ReportError::Config(e.message().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads a config file; relative input paths are taken from the
    /// file's directory.
    pub fn load(path: &Path) -> Result<Self, ReportError> {
        let text = std::fs::read_to_string(path).map_err(|e| ReportError::Config(format!("{}: {e}", path.display())))?;
        let mut cfg = RunConfig::parse(&text)?;
        if let (Some(input), Some(dir)) = (&cfg.input, path.parent()) {
            if input.is_relative() {
                cfg.input = Some(dir.join(input));
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ReportError> {
        if self.trials > 0 {
            if self.seed.is_none() {
                return Err(ReportError::Config("sampling needs a seed".into()));
            }
            if !is_prime(self.prime) || self.prime < 3 {
                return Err(ReportError::Config(format!("prime = {} is not an odd prime", self.prime)));
            }
        }
        self.model().map(|_| ())
    }

    pub fn model(&self) -> Result<BlowupModel, ReportError> {
        let d = BlowupModel::default();
        let curve = (
            self.curve_degree.unwrap_or(d.curves[0].0),
            self.curve_genus.unwrap_or(d.curves[0].1),
        );
        BlowupModel::new(
            self.ambient_degree.unwrap_or(d.ambient_degree),
            self.kappa.unwrap_or(d.kappa),
            vec![curve, curve],
            true,
        )
        .map_err(|e| ReportError::Config(format!("model: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_flat_keys() {
        let cfg = RunConfig::parse("# run\nprime = 13\ntrials = 100\nseed = 5\ncurve_degree = 2\nformat = \"structured\"\n").unwrap();
        assert_eq!((cfg.prime, cfg.trials, cfg.seed), (13, 100, Some(5)));
        assert_eq!(cfg.format, Format::Structured);
        assert_eq!(cfg.model().unwrap().curves, vec![(2, 0), (2, 0)]);
        assert_eq!(RunConfig::parse("").unwrap(), RunConfig::default());
    }

    #[test]
    fn rejects_bad_configs() {
        for text in ["trials = 10", "trials = 10\nseed = 1\nprime = 15", "colour = 3", "prime = \"x\"", "curve_degree = 0"] {
            assert!(matches!(RunConfig::parse(text), Err(ReportError::Config(_))), "{text}");
        }
    }
}
