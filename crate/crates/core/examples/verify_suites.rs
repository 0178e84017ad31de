//! Running the verification suites from code and summarizing their reports.

use en_models::suites::{run_suite, SuiteOptions, SUITES};

fn main() -> en_models::Result<()> {
    let opts = SuiteOptions { samples: 200, ..SuiteOptions::default() };
    for name in SUITES {
        let report = run_suite(name, &opts)?;
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        println!("{name:<22} {:>3} checks  {:>8.1} ms  failing: {failed:?}", report.checks.len(), report.wall_ms);
    }
    Ok(())
}
