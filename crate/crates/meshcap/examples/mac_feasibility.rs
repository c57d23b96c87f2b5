//! The 9-slot spatial-reuse schedule keeps concurrent transmitters three
//! cells apart. With path loss steeper than distance^-2 the interference sum
//! converges, so a fixed SINR threshold stays feasible on arbitrarily large
//! grids; at gamma = 2 it keeps decaying instead.
//!
//! Run with: cargo run --example mac_feasibility

use meshcap::phy::{feasible_beta, min_sinr_over_frame, PhyParams, ReceiverRule, SlotSchedule};
use meshcap::Grid;

fn main() {
    let nine = Grid::square(9, 1.0).expect("9x9 grid");
    let schedule = SlotSchedule::for_grid(&nine);
    let sizes: Vec<usize> = (1..=9).map(|l| schedule.nodes_with_label(l).len()).collect();
    println!("9x9 grid: per-label active-set sizes {sizes:?} (n/9 = 9 each)");
    println!();

    println!("worst-case single-hop SINR with every scheduled node transmitting:");
    println!("{:>6} {:>8} {:>16} {:>16}", "L", "n", "gamma = 4", "gamma = 2");
    for l in [6usize, 12, 18, 30, 60] {
        let grid = Grid::square(l, 1.0).expect("grid");
        let schedule = SlotSchedule::for_grid(&grid);
        let steep = PhyParams { gamma: 4.0, ..PhyParams::default() };
        let shallow = PhyParams { gamma: 2.0, ..PhyParams::default() };
        let beta4 = feasible_beta(&grid, &schedule, &steep);
        let sinr2 = min_sinr_over_frame(&grid, &schedule, &shallow, &ReceiverRule::WorstCase);
        println!("{:>6} {:>8} {:>16.6} {:>16.6}", l, l * l, beta4, sinr2);
    }
    println!();
    println!("The gamma = 4 column flattens out (a positive threshold is");
    println!("certifiable at any size); the gamma = 2 column never stops falling.");
}
