//! How the two-phase planner splits a heavy-tailed rate draw: every strategy
//! separates the heaviest m sessions into their own phase, and the predicted
//! throughput total / (sqrt(n-m) * lambda_(n-m) + sqrt(m) * lambda_max)
//! explains which m wins.
//!
//! Run with: cargo run --example partition_planning

use meshcap::partition::{plan_partition, predicted_throughput, PartitionStrategy};
use meshcap::traffic::rates_heavy_tailed;

fn main() {
    let n = 400;
    let alpha = 2.5;
    let rates = rates_heavy_tailed(n, alpha, 42).expect("alpha > 1");
    let mut sorted = rates.lambdas.clone();
    sorted.sort_by(f64::total_cmp);
    println!(
        "n = {n}, Pareto(alpha = {alpha}) rates: max {:.2}, median {:.2}",
        sorted[n - 1],
        sorted[n / 2]
    );
    println!();

    println!("{:<28} {:>6} {:>12}", "strategy", "m", "predicted T");
    for (name, strategy) in [
        ("single outlier", PartitionStrategy::SingleOutlier),
        ("optimal for alpha", PartitionStrategy::OptimalHeavyTail { alpha }),
        ("fixed m = 50", PartitionStrategy::FixedM(50)),
        ("empirical sweep", PartitionStrategy::SweepEmpirical),
    ] {
        let plan = plan_partition(&rates, &strategy).expect("valid strategy");
        println!(
            "{:<28} {:>6} {:>12.4}",
            name,
            plan.m,
            predicted_throughput(&rates, plan.m)
        );
    }

    println!();
    println!("predicted throughput across the whole sweep:");
    println!("{:>6} {:>12}", "m", "predicted T");
    for m in [1usize, 5, 20, 50, 100, 200, 399] {
        println!("{:>6} {:>12.4}", m, predicted_throughput(&rates, m));
    }
    println!();
    let closed_form = (n as f64).powf(alpha / (alpha + 2.0));
    println!("closed-form optimum m = n^(alpha/(alpha+2)) = {closed_form:.1}");
}
