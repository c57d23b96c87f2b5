//! Homogeneous traffic on growing square grids: every node sources one
//! equal-rate session, and aggregate throughput should track n^(1/2).
//!
//! Run with: cargo run --example homogeneous_scaling

use meshcap::harness::{emit_summary, parse_config, run_experiment};

fn main() {
    let config = parse_config(
        "sizes = 3,6,9,12\n\
         scheme = homogeneous/conventional\n\
         replications = 10\n\
         base_packets = 50\n",
    )
    .expect("static config parses");
    let report = run_experiment(&config).expect("experiment runs");
    print!("{}", emit_summary(&report));
    println!();
    println!("The fitted slope approaches the 0.5 theory exponent as sizes and");
    println!("replications grow; see the acceptance suite for the gated version.");
}
