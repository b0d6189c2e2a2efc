//! Acceptance run: one line per criterion, exit status 1 if any fails.

use std::time::{Duration, Instant};

use qhowe::abraid::{calibrate_dl, check_affine_relations};
use qhowe::harness::run_cli;
use qhowe::howemod::{check_relations, Coproduct, Flavor};
use qhowe::kdim::{check_dims, count_fixed_points, DimsConfig};
use qhowe::mvlattice::{check_mv, MvConfig};
use qhowe::qlaurent::{check_qidentities, qint, RatFun};
use qhowe::report::Report;
use qhowe::rickard::check_braid;
use qhowe::skewsym::{check_dumbbell, ef_block};

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    cases: usize,
    problems: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            cases: 0,
            problems: Vec::new(),
        }
    }

    fn absorb(&mut self, r: &Report) {
        self.cases += r.cases.len();
        self.problems.extend(
            r.failed_cases()
                .map(|c| format!("{}/{}: {}", r.suite, c.name, c.detail)),
        );
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        self.cases += 1;
        if !ok {
            self.problems.push(what.into());
        }
    }

    fn require_kinds(&mut self, r: &Report, kinds: &[&str]) {
        for k in kinds {
            let present = r
                .cases
                .iter()
                .any(|c| c.name.split('/').any(|part| part == *k));
            self.require(present, format!("{}: no `{k}` cases", r.suite));
        }
    }
}

fn qidentities() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(&check_qidentities(10, 10));
    o
}

fn relations() -> Outcome {
    let mut o = Outcome::new();
    for f in Flavor::BOTH {
        for n in 2..=4 {
            for m in 1..=3 {
                let r = check_relations(n, m, 5, f);
                if n == 3 && m == 2 {
                    o.require_kinds(
                        &r,
                        &[
                            "ef", "commute", "square-e", "square-f", "divided", "serre-e",
                            "serre-f",
                        ],
                    );
                }
                o.absorb(&r);
            }
        }
    }
    o
}

fn braid() -> Outcome {
    let mut o = Outcome::new();
    for f in Flavor::BOTH {
        for m in 1..=2 {
            let r = check_braid(3, m, 4, f);
            o.require_kinds(&r, &["braid", "invertible", "T", "Tprime"]);
            o.absorb(&r);
        }
        let r = check_braid(4, 1, 3, f);
        o.require_kinds(&r, &["commute"]);
        o.absorb(&r);
    }
    o
}

fn affine() -> Outcome {
    let mut o = Outcome::new();
    for n in 2..=4 {
        match calibrate_dl(n) {
            Ok(p) => {
                let r = check_affine_relations(n, 3, &p);
                let mut kinds = vec![
                    "phi-commute",
                    "t-phi-commute",
                    "t-phi-conj",
                    "quadratic",
                    "inverse",
                ];
                if n >= 3 {
                    kinds.push("braid");
                }
                if n >= 4 {
                    kinds.push("commute");
                }
                o.require_kinds(&r, &kinds);
                o.absorb(&r);
            }
            Err(e) => o.require(false, format!("calibration for n={n}: {e}")),
        }
    }
    o
}

fn mv() -> Outcome {
    let mut o = Outcome::new();
    let r = check_mv(&MvConfig::default());
    o.require_kinds(&r, &["chart", "free-count", "perp"]);
    o.absorb(&r);
    o
}

fn dims() -> Outcome {
    let mut o = Outcome::new();
    o.require(
        count_fixed_points(2, 2) == 3,
        "count_fixed_points(2, 2) != 3",
    );
    o.absorb(&check_dims(&DimsConfig::default()));
    o
}

fn dumbbell() -> Outcome {
    let mut o = Outcome::new();
    let r = check_dumbbell(4, 3, Coproduct::Standard);
    o.require_kinds(&r, &["dumbbell", "involution"]);
    o.absorb(&r);
    let sym = ef_block(Flavor::Sym, 2, 1, 1, Coproduct::Standard);
    let skew = ef_block(Flavor::Skew, 2, 1, 1, Coproduct::Standard);
    match (sym, skew) {
        (Ok(s), Ok(k)) => {
            o.require(
                s.rows() == [vec![RatFun::from(qint(2))]],
                "n=2, m=1: B_sym != [2]",
            );
            o.require(k.is_zero(), "n=2, m=1: B_skew != 0");
        }
        _ => o.require(false, "n=2, m=1 blocks failed to build"),
    }
    o
}

fn schema_problems(text: &str) -> Vec<String> {
    let v: serde_json::Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return vec![format!("report is not JSON: {e}")],
    };
    let mut bad = Vec::new();
    if !v["suite"].is_string() {
        bad.push("suite is not a string".to_string());
    }
    if !v["params"].is_object() {
        bad.push("params is not an object".to_string());
    }
    let Some(cases) = v["cases"].as_array() else {
        bad.push("cases is not an array".to_string());
        return bad;
    };
    let mut fails = 0;
    for c in cases {
        let ok = c.as_object().is_some_and(|o| o.len() == 3)
            && c["name"].is_string()
            && c["detail"].is_string()
            && matches!(c["status"].as_str(), Some("pass" | "fail"));
        if !ok {
            bad.push(format!("malformed case {c}"));
            break;
        }
        fails += usize::from(c["status"] == "fail");
    }
    if v["failures"].as_u64() != Some(fails as u64) {
        bad.push(format!(
            "failures = {} but {fails} cases failed",
            v["failures"]
        ));
    }
    bad
}

fn harness() -> Outcome {
    let mut o = Outcome::new();
    let dir = std::env::temp_dir().join(format!("qhowe-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let (first, second, broken) = (path("all-1.json"), path("all-2.json"), path("broken.json"));

    o.require(
        run_cli(["qhowe", "all", "--report", &first]) == 0,
        "`all` with defaults did not exit 0",
    );
    o.require(
        run_cli(["qhowe", "all", "--jobs", "1", "--report", &second]) == 0,
        "`all --jobs 1` did not exit 0",
    );
    let a = std::fs::read_to_string(&first).unwrap_or_default();
    let b = std::fs::read_to_string(&second).unwrap_or_default();
    o.require(!a.is_empty() && a == b, "reports differ between runs");
    for p in schema_problems(&a) {
        o.require(false, p);
    }
    o.require(
        run_cli([
            "qhowe",
            "relations",
            "--corrupt-coproduct",
            "--report",
            &broken,
        ]) == 1,
        "corrupted coproduct did not exit 1",
    );
    let broken_report = std::fs::read_to_string(&broken).unwrap_or_default();
    o.require(
        schema_problems(&broken_report).is_empty(),
        "corrupted run wrote a malformed report",
    );
    o.require(
        run_cli([
            "qhowe",
            "relations",
            "--n",
            "2",
            "--m",
            "1",
            "--N-max",
            "-1",
        ]) == 2,
        "negative N-max did not exit 2",
    );
    let _ = std::fs::remove_dir_all(&dir);
    o
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("quantum identities", Duration::from_secs(1), qidentities),
        ("Howe relations", Duration::from_secs(120), relations),
        ("braid operators", Duration::from_secs(120), braid),
        ("affine braid groupoid", Duration::from_secs(60), affine),
        ("lattice chart", Duration::from_secs(60), mv),
        ("dimensions", Duration::from_secs(10), dims),
        ("dumbbell", Duration::from_secs(60), dumbbell),
        ("harness", Duration::from_secs(600), harness),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut o = run();
        let elapsed = start.elapsed();
        if elapsed > *budget {
            o.problems
                .push(format!("took {elapsed:.2?}, budget {budget:?}"));
        }
        let verdict = if o.problems.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {}: {verdict} {name} ({} checks, {elapsed:.2?})",
            i + 1,
            o.cases
        );
        for p in o.problems.iter().take(10) {
            println!("    {p}");
        }
        failed += usize::from(!o.problems.is_empty());
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
