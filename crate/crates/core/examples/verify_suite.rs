//! Runs the invariant suite that backs `pondkit verify` and lists the
//! tightest and loosest margins.

use ponderomotive::cli::verify::run_suite;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let report = run_suite(seed);
    let mut checks = report.checks.clone();
    checks.sort_by(|a, b| {
        let margin = |c: &ponderomotive::cli::report::Check| if c.tolerance > 0.0 { c.worst / c.tolerance } else { c.worst };
        margin(b).total_cmp(&margin(a))
    });
    for c in &checks {
        println!("{:<4} {:<11} {:<42} worst {:>10.3e}  tol {:>8.1e}", if c.pass { "ok" } else { "FAIL" }, c.module, c.name, c.worst, c.tolerance);
    }
    println!("seed {seed}: {} of {} invariants hold", checks.iter().filter(|c| c.pass).count(), checks.len());
}
