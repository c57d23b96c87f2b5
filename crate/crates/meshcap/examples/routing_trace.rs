//! Follow a single packet hop by hop. Each transmission lands in the slot
//! where its holder's label is active, so every hop satisfies
//! slot = 9 * frame + label(holder) with 1-based slot numbering.
//!
//! Run with: cargo run --example routing_trace

use meshcap::engine::{run_phase, trace_to_csv, EnginePolicy, TxEvent};
use meshcap::grid::GridSpec;
use meshcap::phy::{PhyParams, SlotSchedule, FRAME_LEN};
use meshcap::traffic::Session;
use meshcap::Grid;

fn main() {
    let grid = Grid::new(GridSpec { rows: 1, cols: 8, spacing: 1.0 }).expect("1x8 line");
    let schedule = SlotSchedule::for_grid(&grid);
    let src = grid.node_at(1, 1);
    let dst = grid.node_at(1, 8);
    let session = Session {
        id: 0,
        src,
        dst,
        path: grid.xy_route(src, dst),
        packets: 1,
    };

    let mut trace: Vec<TxEvent> = Vec::new();
    let result = run_phase(
        &grid,
        &schedule,
        std::slice::from_ref(&session),
        &EnginePolicy::default(),
        &PhyParams::default(),
        &mut trace,
    )
    .expect("single packet finishes");

    println!("one packet across a 1x8 line, {} hops:", session.path.hops());
    println!("{:>6} {:>6} {:>6} {:>6} {:>6}", "slot", "tx", "rx", "frame", "label");
    for e in &trace {
        let label = schedule.label(e.tx);
        let slot1 = e.slot + 1;
        assert_eq!(slot1 % FRAME_LEN, u64::from(label) % FRAME_LEN);
        println!(
            "{:>6} {:>6} {:>6} {:>6} {:>6}",
            slot1,
            e.tx.0,
            e.rx.0,
            (slot1 - u64::from(label)) / FRAME_LEN,
            label
        );
    }
    println!();
    println!("delivered in {} slots; CSV form:", result.slots_elapsed);
    print!("{}", trace_to_csv(&trace));
}
