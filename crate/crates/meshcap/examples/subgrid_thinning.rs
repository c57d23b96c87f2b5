//! Thin a grid down to m active endpoints (all nodes keep relaying) and the
//! sustained throughput still scales like sqrt(m), because m uniformly
//! sampled nodes blanket the 3x3 tiles once m is large enough.
//!
//! Run with: cargo run --example subgrid_thinning

use meshcap::partition::{cell_coverage, subgrid_throughput_check};
use meshcap::Grid;

fn main() {
    let grid = Grid::square(18, 1.0).expect("18x18 grid");
    let n = grid.n();

    println!("tile coverage by m uniformly sampled endpoints ({n} nodes, 36 tiles):");
    println!("{:>6} {:>12} {:>12}", "m", "measured", "1-e^(-9m/n)");
    for m in [10usize, 40, 90, 160, 240] {
        let covered = cell_coverage(&grid, m, 2000, 5);
        let asymptotic = 1.0 - (-9.0 * m as f64 / n as f64).exp();
        println!("{:>6} {:>12.4} {:>12.4}", m, covered, asymptotic);
    }
    println!();

    let fractions = [16.0 / 324.0, 64.0 / 324.0, 144.0 / 324.0];
    let seeds = [1u64, 2, 3];
    let fit = subgrid_throughput_check(&grid, &fractions, &seeds, 40).expect("three sizes fit");
    println!(
        "throughput vs subset size (m = 16, 64, 144): slope {:.3} (sqrt law = 0.5)",
        fit.slope
    );
}
