//! Run a verification campaign programmatically and consume the
//! machine-readable reports.
//!
//! ```bash
//! cargo run -p praeger-xu --release --example verification_campaign
//! ```

use praeger_xu::campaign::{run_campaign, CheckKind, Config};
use praeger_xu::report::summary;

fn main() -> praeger_xu::Result<()> {
    // A small grid with a couple of claim families; the `px verify`
    // subcommand wires the same machinery to the command line.
    let cfg = Config {
        n_max: 5,
        k_max: 3,
        checks: vec![CheckKind::Params, CheckKind::Twins, CheckKind::Relations],
        workers: Some(2),
        ..Config::default()
    };

    let reports = run_campaign(&cfg)?;
    for report in &reports {
        println!("{}", report.to_json_line());
    }
    println!("{}", summary(&reports));

    let all_pass = reports.iter().all(|r| r.passed());
    println!("\n{} claims, all passing: {all_pass}", reports.len());
    Ok(())
}
