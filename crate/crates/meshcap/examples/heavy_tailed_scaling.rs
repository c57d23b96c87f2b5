//! Pareto-distributed session rates under both scheduling disciplines. The
//! sample maximum grows like n^(1/alpha), so the single-phase exponent drops
//! below 1/2 while the optimal two-phase split claws most of it back.
//!
//! Run with: cargo run --example heavy_tailed_scaling

use meshcap::harness::{parse_config, run_experiment};
use meshcap::scaling::BoundScheme;

fn main() {
    let alpha = 5.0;
    let base = "sizes = 3,6,9,12\nreplications = 15\nbase_packets = 40\nalpha = 5\n";
    let conv = parse_config(&format!("{base}scheme = heavy-tailed/conventional\n"))
        .expect("static config parses");
    let part = parse_config(&format!("{base}scheme = heavy-tailed/two-phase\n"))
        .expect("static config parses");

    println!("Pareto(alpha = {alpha}) rates, sizes 3..12, 15 replications");
    println!("{:>14} {:>14} {:>14}", "scheme", "fitted slope", "theory");
    for (name, cfg, bound) in [
        ("conventional", conv, BoundScheme::HeavyTailedConventional { alpha }),
        ("two-phase", part, BoundScheme::HeavyTailedPartitioned { alpha }),
    ] {
        let report = run_experiment(&cfg).expect("experiment runs");
        let fit = report.fit.expect("four sizes fit");
        println!("{:>14} {:>14.4} {:>14.4}", name, fit.slope, bound.exponent());
    }
    println!();
    println!("Theory exponents: 1/2 - 1/alpha single-phase versus");
    println!("(alpha^2 + 2 alpha - 4) / (2 alpha^2 + 2 alpha) with the optimal");
    println!("high-rate group size m = round(n^(alpha / (alpha + 2))).");
}
