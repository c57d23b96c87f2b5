//! The scaling bounds rest on three facts about n iid Pareto(alpha) rates:
//! the maximum grows like n^(1/alpha) with a computable constant, the
//! (n-m)-th order statistic concentrates at (n/m)^(1/alpha), and the sample
//! mean settles at alpha/(alpha-1). Each Monte Carlo estimate is checked
//! against an independent closed form or quadrature.
//!
//! Run with: cargo run --example order_statistics

use meshcap::scaling::{
    mc_central_order, mc_inv_max, mc_mean_concentration, quadrature_inv_max,
};

fn main() {
    let alpha = 2.0;

    let mc = mc_inv_max(50_000, alpha, 400, 7);
    let quad = quadrature_inv_max(alpha);
    // At alpha = 2 the integral collapses to Gamma(1 + 1/2) = sqrt(pi)/2.
    let exact = std::f64::consts::PI.sqrt() / 2.0;
    println!("extreme value constant E[n^(1/a) / max lambda], alpha = {alpha}:");
    println!("  monte carlo {mc:.4}  quadrature {quad:.4}  closed form {exact:.4}");

    let report = mc_central_order(50_000, 224, alpha, 300, 7).expect("1 <= m < n");
    println!();
    println!("central order statistic lambda_(n-m) at m = sqrt(n):");
    println!(
        "  normalized mean {:.4} (should be near 1), centering a_n = {:.4}",
        report.normalized_mean, report.a_n
    );

    let (grand, var_big) = mc_mean_concentration(10_000, 3.0, 150, 7);
    let (_, var_small) = mc_mean_concentration(100, 3.0, 150, 7);
    println!();
    println!("sample-mean concentration, alpha = 3 (mean -> alpha/(alpha-1) = 1.5):");
    println!("  grand mean {grand:.4}; variance of per-rep means {var_big:.2e} at n = 10^4");
    println!("  versus {var_small:.2e} at n = 10^2 (concentrates as n grows)");
}
