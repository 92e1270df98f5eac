//! Flat `key = value` suite configuration.
//!
//! Blank lines and lines starting with `#` are skipped. Lists are
//! comma-separated; complex numbers are written `0.5+10i`, `-1.5`, `2i`.

use num_complex::Complex64;
use std::path::Path;
use std::str::FromStr;

use super::Group;
use crate::error::{LerchError, Result};
use crate::lerch::StrategyConfig;

/// Everything a suite run can be tuned by.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub groups: Vec<Group>,
    /// Replaces every per-check tolerance when set.
    pub tolerance: Option<f64>,
    pub strategy: StrategyConfig,
    pub timings: bool,
    pub fe_points: usize,
    pub hecke_s: Vec<Complex64>,
    pub hecke_m_max: u32,
    pub hecke_points: usize,
    pub algebra_m_max: u32,
    pub algebra_points: usize,
    pub trials: usize,
    pub adjoint_m_max: u32,
    pub grid_order: usize,
    pub sup_samples: usize,
    pub stencil_h: f64,
    pub diff_s: Vec<Complex64>,
    pub diff_points: usize,
    pub eigen_s: Vec<Complex64>,
    pub eigen_points: usize,
    pub char_s: Vec<Complex64>,
    pub char_n: i64,
    pub milnor_s: Vec<Complex64>,
    pub milnor_m_max: u32,
    pub zeta_op_s: Complex64,
    pub zeta_op_terms: u32,
    pub zeta_op_points: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let c = |re, im| Complex64::new(re, im);
        SuiteConfig {
            seed: 42,
            groups: Group::ALL.to_vec(),
            tolerance: None,
            strategy: StrategyConfig::default(),
            timings: true,
            fe_points: 100,
            hecke_s: vec![c(3.0, 0.0), c(2.0, 0.0), c(0.5, 0.0), c(0.5, 10.0)],
            hecke_m_max: 16,
            hecke_points: 50,
            algebra_m_max: 6,
            algebra_points: 10,
            trials: 20,
            adjoint_m_max: 8,
            grid_order: 16,
            sup_samples: 100,
            stencil_h: 1e-4,
            diff_s: vec![c(2.5, 0.0), c(1.7, 0.0), c(0.5, 0.0)],
            diff_points: 20,
            eigen_s: vec![c(2.0, 0.0), c(0.5, 0.0), c(0.5, 10.0), c(-1.5, 0.0), c(0.3, 2.0)],
            eigen_points: 20,
            char_s: vec![c(2.0, 0.0), c(0.7, 0.0)],
            char_n: 32,
            milnor_s: vec![c(0.5, 3.0), c(-1.5, 0.0), c(2.5, 0.0)],
            milnor_m_max: 12,
            zeta_op_s: c(3.0, 0.0),
            zeta_op_terms: 200,
            zeta_op_points: 10,
        }
    }
}

fn bad(key: &str, value: &str, what: &str) -> LerchError {
    LerchError::Config(format!("{key} = '{value}': {what}"))
}

fn num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| bad(key, value, "not a valid number"))
}

fn positive<T: FromStr + PartialOrd + Default>(key: &str, value: &str) -> Result<T> {
    let v: T = num(key, value)?;
    if v > T::default() {
        Ok(v)
    } else {
        Err(bad(key, value, "must be positive"))
    }
}

/// Parses `3`, `-1.5`, `0.5+10i`, `0.5-10i`, `2i`, `-i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || LerchError::Config(format!("'{text}' is not a complex number"));
    if t.is_empty() {
        return Err(err());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(t.parse().map_err(|_| err())?, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(i, ch)| (ch == '+' || ch == '-') && !matches!(body.as_bytes()[i - 1], b'e' | b'E'))
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        v => v.parse().map_err(|_| err())?,
    };
    Ok(Complex64::new(re.parse().map_err(|_| err())?, im))
}

fn complex_list(key: &str, value: &str) -> Result<Vec<Complex64>> {
    let items: Vec<Complex64> = value.split(',').map(parse_complex).collect::<Result<_>>()?;
    if items.is_empty() {
        return Err(bad(key, value, "empty list"));
    }
    Ok(items)
}

fn boolean(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(bad(key, value, "expected true or false")),
    }
}

impl SuiteConfig {
    /// Parses config text on top of the defaults, then applies `LERCHLAB_TOL`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = SuiteConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(LerchError::Config(format!("line {}: expected key = value, got '{line}'", lineno + 1)));
            };
            cfg.set(key.trim(), value.trim())?;
        }
        cfg.apply_env()?;
        Ok(cfg)
    }

    /// Reads and parses a config file.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LerchError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Defaults plus `LERCHLAB_TOL`.
    pub fn from_env() -> Result<Self> {
        let mut cfg = SuiteConfig::default();
        cfg.apply_env()?;
        Ok(cfg)
    }

    fn apply_env(&mut self) -> Result<()> {
        let env = StrategyConfig::from_env()?;
        if std::env::var_os("LERCHLAB_TOL").is_some() {
            self.strategy.target_tol = env.target_tol;
        }
        self.strategy.validate()
    }

    /// Sets one key.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "seed" => self.seed = num(key, value)?,
            "groups" => {
                self.groups = value
                    .split(',')
                    .map(str::trim)
                    .filter(|g| !g.is_empty())
                    .map(Group::from_str)
                    .collect::<Result<_>>()?
            }
            "tolerance" => {
                let t: f64 = num(key, value)?;
                if !(t >= 0.0) {
                    return Err(bad(key, value, "must be non-negative"));
                }
                self.tolerance = Some(t);
            }
            "target_tol" => self.strategy.target_tol = positive(key, value)?,
            "sigma_hi" => self.strategy.sigma_hi = num(key, value)?,
            "sigma_lo" => self.strategy.sigma_lo = num(key, value)?,
            "max_terms" => self.strategy.max_terms = num(key, value)?,
            "timings" => self.timings = boolean(key, value)?,
            "fe_points" => self.fe_points = positive(key, value)?,
            "hecke_s" => self.hecke_s = complex_list(key, value)?,
            "hecke_m_max" => self.hecke_m_max = positive(key, value)?,
            "hecke_points" => self.hecke_points = positive(key, value)?,
            "algebra_m_max" => self.algebra_m_max = positive(key, value)?,
            "algebra_points" => self.algebra_points = positive(key, value)?,
            "trials" => self.trials = positive(key, value)?,
            "adjoint_m_max" => self.adjoint_m_max = positive(key, value)?,
            "grid_order" => self.grid_order = positive(key, value)?,
            "sup_samples" => self.sup_samples = positive(key, value)?,
            "stencil_h" => self.stencil_h = positive(key, value)?,
            "diff_s" => self.diff_s = complex_list(key, value)?,
            "diff_points" => self.diff_points = positive(key, value)?,
            "eigen_s" => self.eigen_s = complex_list(key, value)?,
            "eigen_points" => self.eigen_points = positive(key, value)?,
            "char_s" => self.char_s = complex_list(key, value)?,
            "char_n" => self.char_n = positive(key, value)?,
            "milnor_s" => self.milnor_s = complex_list(key, value)?,
            "milnor_m_max" => self.milnor_m_max = positive(key, value)?,
            "zeta_op_s" => self.zeta_op_s = parse_complex(value)?,
            "zeta_op_terms" => self.zeta_op_terms = positive(key, value)?,
            "zeta_op_points" => self.zeta_op_points = positive(key, value)?,
            other => return Err(LerchError::Config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_file_spells_out_the_defaults() {
        if std::env::var_os("LERCHLAB_TOL").is_some() {
            return;
        }
        let cfg = SuiteConfig::parse(include_str!("../../../../lerchlab.example.cfg")).unwrap();
        assert_eq!(cfg, SuiteConfig::default());
    }

    #[test]
    fn complex_literals() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("3").unwrap(), c(3.0, 0.0));
        assert_eq!(parse_complex("-1.5").unwrap(), c(-1.5, 0.0));
        assert_eq!(parse_complex("0.5+10i").unwrap(), c(0.5, 10.0));
        assert_eq!(parse_complex("0.5 - 10i").unwrap(), c(0.5, -10.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), c(1e-3, 20.0));
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn parses_flat_file() {
        let cfg = SuiteConfig::parse("# comment\nseed = 7\n\ngroups = adjoint, milnor_baseline\nhecke_s = 2, 0.5+10i\n").unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.groups, vec![Group::Adjoint, Group::MilnorBaseline]);
        assert_eq!(cfg.hecke_s.len(), 2);
        assert_eq!(cfg.trials, 20);
    }

    #[test]
    fn empty_group_list_is_allowed() {
        assert!(SuiteConfig::parse("groups =").unwrap().groups.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SuiteConfig::parse("seed").is_err());
        assert!(SuiteConfig::parse("nonsense = 1").is_err());
        assert!(SuiteConfig::parse("trials = 0").is_err());
        assert!(SuiteConfig::parse("groups = hecke").is_err());
        assert!(SuiteConfig::parse("tolerance = -1").is_err());
    }

    #[test]
    fn default_seed_is_42() {
        assert_eq!(SuiteConfig::default().seed, 42);
    }
}
