use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

use super::{exit_code, run_suite, Config, FlavorChoice, HarnessError, Suite};
use crate::report::Report;

/// Exact verification suites for quantum Howe duality, braid operators and
/// lattice charts.
#[derive(Debug, Parser)]
#[command(name = "qhowe", version)]
pub struct Cli {
    /// Suite to run
    #[arg(value_enum)]
    pub suite: Suite,
    /// File of `key = value` lines using the flag names; flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Largest number of tensor positions (rank of gl_n)
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    /// Largest number of tensor factors
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    /// Largest total weight |k|
    #[arg(long = "N-max", allow_negative_numbers = true)]
    pub n_max: Option<i64>,
    /// Exponent bound for the affine monomials
    #[arg(long = "box-radius", allow_negative_numbers = true)]
    pub box_radius: Option<i64>,
    /// Largest |mu| in the chart suite
    #[arg(long = "mu-max", allow_negative_numbers = true)]
    pub mu_max: Option<i64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads
    #[arg(long, allow_negative_numbers = true)]
    pub jobs: Option<i64>,
    /// Where to write the JSON report (stdout when absent)
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub flavor: Option<FlavorChoice>,
    #[arg(long, hide = true)]
    pub corrupt_coproduct: bool,
}

impl Cli {
    /// Defaults, then the config file, then flags.
    pub fn to_config(&self) -> Result<Config, HarnessError> {
        let mut cfg = Config::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let ints = [
            ("n", self.n),
            ("m", self.m),
            ("N-max", self.n_max),
            ("box-radius", self.box_radius),
            ("mu-max", self.mu_max),
            ("jobs", self.jobs),
        ];
        for (k, v) in ints {
            if let Some(v) = v {
                cfg.set(k, &v.to_string())?;
            }
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(r) = &self.report {
            cfg.report = Some(r.clone());
        }
        if let Some(f) = self.flavor {
            cfg.flavor = f;
        }
        cfg.corrupt_coproduct |= self.corrupt_coproduct;
        Ok(cfg)
    }
}

fn summarize(report: &Report) {
    let mut groups: Vec<(String, usize, usize)> = Vec::new();
    for c in &report.cases {
        let g = if report.suite == "all" {
            c.name.split('/').next().unwrap_or("").to_string()
        } else {
            report.suite.clone()
        };
        match groups.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += 1;
                last.2 += usize::from(!c.passed());
            }
            _ => groups.push((g, 1, usize::from(!c.passed()))),
        }
    }
    for (g, n, f) in groups {
        eprintln!("{g}: {n} cases, {f} failures");
    }
    for c in report.failed_cases().take(20) {
        eprintln!("FAIL {}: {}", c.name, c.detail);
    }
}

fn run(cli: &Cli) -> Result<i32, HarnessError> {
    let cfg = cli.to_config()?;
    let report = run_suite(cli.suite, &cfg)?;
    let json = report.to_json();
    match &cfg.report {
        Some(path) => std::fs::write(path, json + "\n").map_err(|source| HarnessError::Write {
            path: path.display().to_string(),
            source,
        })?,
        None => println!("{json}"),
    }
    summarize(&report);
    Ok(exit_code(&report))
}

/// Parses `args` (program name first), runs the suite and returns the
/// process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(
            run_cli([
                "qhowe",
                "relations",
                "--n",
                "2",
                "--m",
                "1",
                "--N-max",
                "-1"
            ]),
            2
        );
        assert_eq!(run_cli(["qhowe", "nonsense"]), 2);
        assert_eq!(run_cli(["qhowe", "mv", "--jobs", "0"]), 2);
        assert_eq!(
            run_cli(["qhowe", "mv", "--config", "/nonexistent/qhowe.cfg"]),
            2
        );
    }

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("qhowe-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "n = 2\nm = 2\nseed = 5\n").unwrap();
        let cli = Cli::try_parse_from([
            "qhowe",
            "dims",
            "--config",
            path.to_str().unwrap(),
            "--m",
            "1",
        ])
        .unwrap();
        let cfg = cli.to_config().unwrap();
        assert_eq!((cfg.n, cfg.m, cfg.seed), (2, 1, 5));
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn writes_report_file() {
        let dir = std::env::temp_dir().join(format!("qhowe-report-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("r.json");
        let code = run_cli([
            "qhowe",
            "braid",
            "--n",
            "3",
            "--m",
            "1",
            "--N-max",
            "4",
            "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let r: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(r.suite, "braid");
        assert!(r
            .cases
            .iter()
            .any(|c| c.name.starts_with("n=3,m=1,sym/braid/")));
        std::fs::remove_dir_all(dir).unwrap();
    }
}
