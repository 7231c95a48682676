//! Drives a scenario file through the same code path as
//! `pondkit trajectory`, printing the report and the first CSV rows.
//!
//! cargo run --example scenario_run -- examples/scenarios/flat_top_rest.scn

use ponderomotive::cli::report::trajectory_csv;
use ponderomotive::cli::scenario::Scenario;
use ponderomotive::cli::trajectory_report;

fn main() -> ponderomotive::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scenarios/flat_top_rest.scn").to_string());
    let scenario = Scenario::parse(&std::fs::read_to_string(&path)?)?;
    let (report, traj) = trajectory_report(&scenario)?;
    print!("{}", report.to_text());
    for line in trajectory_csv(&traj).lines().take(4) {
        println!("{line}");
    }
    Ok(())
}
