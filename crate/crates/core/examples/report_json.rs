//! Running a suite through the harness and printing its JSON report.

use qhowe::harness::{exit_code, run_suite, Config, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = Config {
        n: 2,
        m: 2,
        n_max: 2,
        ..Config::default()
    };
    let report = run_suite(Suite::Dumbbell, &cfg)?;
    println!("{}", report.to_json());
    println!("exit code would be {}", exit_code(&report));
    Ok(())
}
