//! Suite orchestration for the `qhowe` binary: configuration, running the
//! named verification suites, and report output.
//!
//! Exit codes: 0 when every case passes, 1 on any failing case, 2 on a
//! usage or configuration error.

mod cli;
mod config;

use std::fmt;

use clap::ValueEnum;
use serde::Serialize;
use thiserror::Error;

use crate::abraid::{calibrate_dl, check_affine_relations};
use crate::howemod::{Coproduct, HoweModule};
use crate::kdim::{check_dims, DimsConfig};
use crate::mvlattice::{check_mv, MvConfig};
use crate::qlaurent::check_qidentities;
use crate::report::{Case, Report};
use crate::rickard::check_braid_in;
use crate::skewsym::check_dumbbell;

pub use cli::{run_cli, Cli};
pub use config::{Config, FlavorChoice};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid value {value:?} for {key}: {why}")]
    InvalidValue {
        key: String,
        value: String,
        why: String,
    },
    #[error("unknown config key {0:?}")]
    UnknownKey(String),
    #[error("{path}:{line}: expected `key = value`")]
    ConfigSyntax { path: String, line: usize },
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write report to {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot build thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Qidentities,
    Relations,
    Braid,
    Affine,
    Mv,
    Dims,
    Dumbbell,
    All,
}

impl Suite {
    /// Every suite that `all` runs, in order.
    pub const EACH: [Suite; 7] = [
        Suite::Qidentities,
        Suite::Relations,
        Suite::Braid,
        Suite::Affine,
        Suite::Mv,
        Suite::Dims,
        Suite::Dumbbell,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Qidentities => "qidentities",
            Suite::Relations => "relations",
            Suite::Braid => "braid",
            Suite::Affine => "affine",
            Suite::Mv => "mv",
            Suite::Dims => "dims",
            Suite::Dumbbell => "dumbbell",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn prefixed(prefix: &str, r: Report) -> impl Iterator<Item = Case> + '_ {
    r.cases.into_iter().map(move |mut c| {
        c.name = format!("{prefix}/{}", c.name);
        c
    })
}

fn coproduct(cfg: &Config) -> Coproduct {
    if cfg.corrupt_coproduct {
        Coproduct::Corrupted
    } else {
        Coproduct::Standard
    }
}

fn run_one(suite: Suite, cfg: &Config) -> Report {
    let mut report = Report::new(suite.as_str(), cfg.to_json());
    match suite {
        Suite::Qidentities => report.extend(check_qidentities(10, 10).cases),
        Suite::Relations | Suite::Braid => {
            let n_min = if suite == Suite::Braid { 3 } else { 2 };
            for n in n_min..=cfg.n {
                for m in 1..=cfg.m {
                    for &f in cfg.flavor.flavors() {
                        let module = HoweModule::new(f, n, m).with_coproduct(coproduct(cfg));
                        let sub = if suite == Suite::Braid {
                            check_braid_in(&module, cfg.n_max)
                        } else {
                            module.check_relations(cfg.n_max)
                        };
                        report.extend(prefixed(&format!("n={n},m={m},{f}"), sub));
                    }
                }
            }
        }
        Suite::Affine => {
            for n in 2..=cfg.n {
                match calibrate_dl(n) {
                    Ok(p) => {
                        report.push(Case::pass(
                            format!("n={n}/calibrate"),
                            p.to_json().to_string(),
                        ));
                        report.extend(prefixed(
                            &format!("n={n}"),
                            check_affine_relations(n, cfg.box_radius, &p),
                        ));
                    }
                    Err(e) => report.push(Case::fail(format!("n={n}/calibrate"), e.to_string())),
                }
            }
        }
        Suite::Mv => {
            let mv = MvConfig {
                m_max: cfg.m,
                mu_max: cfg.mu_max,
                seed: cfg.seed,
                ..MvConfig::default()
            };
            report.extend(check_mv(&mv).cases);
        }
        Suite::Dims => {
            let dims = DimsConfig {
                n_max: cfg.n,
                m_max: cfg.m,
                total_max: cfg.n_max as usize,
                basis_total_max: cfg.n_max as usize,
                ..DimsConfig::default()
            };
            report.extend(check_dims(&dims).cases);
        }
        Suite::Dumbbell => report.extend(check_dumbbell(cfg.n, cfg.m, coproduct(cfg)).cases),
        Suite::All => {
            for s in Suite::EACH {
                report.absorb(run_one(s, cfg));
            }
        }
    }
    report
}

/// Runs `suite` under `cfg`, on a pool of `cfg.jobs` threads when set.
pub fn run_suite(suite: Suite, cfg: &Config) -> Result<Report, HarnessError> {
    match cfg.jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(j).build()?;
            Ok(pool.install(|| run_one(suite, cfg)))
        }
        None => Ok(run_one(suite, cfg)),
    }
}

/// 0 when the report has no failures, 1 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    if report.all_passed() {
        0
    } else {
        1
    }
}
