use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;

use super::HarnessError;
use crate::howemod::Flavor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlavorChoice {
    Sym,
    Skew,
    Both,
}

impl FlavorChoice {
    pub fn flavors(self) -> &'static [Flavor] {
        match self {
            FlavorChoice::Sym => &[Flavor::Sym],
            FlavorChoice::Skew => &[Flavor::Skew],
            FlavorChoice::Both => &Flavor::BOTH,
        }
    }
}

/// Bounds and knobs shared by every suite. `n` and `m` are upper bounds;
/// suites sweep from their smallest meaningful value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub n: usize,
    pub m: usize,
    pub n_max: u32,
    pub box_radius: i64,
    pub mu_max: usize,
    pub seed: u64,
    pub jobs: Option<usize>,
    pub report: Option<PathBuf>,
    pub flavor: FlavorChoice,
    /// Test hook: flips the sign of `E` on every tensor factor after the first.
    pub corrupt_coproduct: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            n: 4,
            m: 3,
            n_max: 5,
            box_radius: 3,
            mu_max: 5,
            seed: 1729,
            jobs: None,
            report: None,
            flavor: FlavorChoice::Both,
            corrupt_coproduct: false,
        }
    }
}

fn parse_int<T: TryFrom<i128>>(key: &str, value: &str, min: i128) -> Result<T, HarnessError> {
    let bad = |why: &str| HarnessError::InvalidValue {
        key: key.to_string(),
        value: value.to_string(),
        why: why.to_string(),
    };
    let v: i128 = value.trim().parse().map_err(|_| bad("not an integer"))?;
    if v < min {
        return Err(bad(&format!("must be at least {min}")));
    }
    T::try_from(v).map_err(|_| bad("out of range"))
}

impl Config {
    /// Sets one key, using the flag spelling (`N-max`, `box-radius`, ...).
    /// Underscores are accepted in place of dashes.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), HarnessError> {
        match key.trim().replace('_', "-").as_str() {
            "n" => self.n = parse_int(key, value, 1)?,
            "m" => self.m = parse_int(key, value, 1)?,
            "N-max" => self.n_max = parse_int(key, value, 0)?,
            "box-radius" => self.box_radius = parse_int(key, value, 0)?,
            "mu-max" => self.mu_max = parse_int(key, value, 0)?,
            "seed" => self.seed = parse_int(key, value, 0)?,
            "jobs" => self.jobs = Some(parse_int(key, value, 1)?),
            "report" => self.report = Some(PathBuf::from(value.trim())),
            "flavor" => {
                self.flavor = FlavorChoice::from_str(value.trim(), true).map_err(|why| {
                    HarnessError::InvalidValue {
                        key: key.to_string(),
                        value: value.to_string(),
                        why,
                    }
                })?
            }
            "corrupt-coproduct" => {
                self.corrupt_coproduct =
                    value
                        .trim()
                        .parse()
                        .map_err(|_| HarnessError::InvalidValue {
                            key: key.to_string(),
                            value: value.to_string(),
                            why: "expected true or false".into(),
                        })?
            }
            _ => return Err(HarnessError::UnknownKey(key.to_string())),
        }
        Ok(())
    }

    /// Applies `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_file_contents(&mut self, path: &str, text: &str) -> Result<(), HarnessError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| HarnessError::ConfigSyntax {
                    path: path.to_string(),
                    line: i + 1,
                })?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), HarnessError> {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Read {
            path: shown.clone(),
            source,
        })?;
        self.apply_file_contents(&shown, &text)
    }

    /// The parameters that determine a report. `jobs` and `report` are left
    /// out so the output does not depend on them.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "n": self.n,
            "m": self.m,
            "N_max": self.n_max,
            "box_radius": self.box_radius,
            "mu_max": self.mu_max,
            "seed": self.seed,
            "flavor": self.flavor,
        });
        if self.corrupt_coproduct {
            v["corrupt_coproduct"] = true.into();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides_defaults() {
        let mut c = Config::default();
        c.apply_file_contents(
            "cfg",
            "# bounds\nn = 3\nN-max=2\nflavor = skew  # only skew\n\nmu_max = 4\n",
        )
        .unwrap();
        assert_eq!(
            (c.n, c.n_max, c.mu_max, c.flavor),
            (3, 2, 4, FlavorChoice::Skew)
        );
        assert_eq!(c.m, 3);
    }

    #[test]
    fn rejects_bad_values() {
        let mut c = Config::default();
        assert!(matches!(
            c.set("N-max", "-1"),
            Err(HarnessError::InvalidValue { .. })
        ));
        assert!(matches!(
            c.set("jobs", "0"),
            Err(HarnessError::InvalidValue { .. })
        ));
        assert!(matches!(
            c.set("flavor", "both-ish"),
            Err(HarnessError::InvalidValue { .. })
        ));
        assert!(matches!(
            c.set("colour", "1"),
            Err(HarnessError::UnknownKey(_))
        ));
        assert!(matches!(
            c.apply_file_contents("cfg", "n 3"),
            Err(HarnessError::ConfigSyntax { line: 1, .. })
        ));
        assert_eq!(c, Config::default());
    }
}
