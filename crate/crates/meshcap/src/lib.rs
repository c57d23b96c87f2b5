//! Packet-level simulator and scaling analysis for square-grid wireless mesh
//! fabrics.
//!
//! The crate answers one question end to end: how does aggregate throughput
//! grow with the node count n when every node runs a fixed-rate radio, relays
//! traffic for its neighbors, and the workload mix ranges from perfectly
//! uniform to heavy-tailed? It simulates complete packet workloads slot by
//! slot and compares the measured completion-time throughput against
//! closed-form lower bounds.
//!
//! Module map:
//!
//! - [`grid`]: square lattice geometry, node indexing, X-Y (column-first)
//!   shortest-path routing.
//! - [`phy`]: SINR arithmetic and the 9-slot spatial-reuse TDMA schedule that
//!   keeps concurrent transmitters three cells apart.
//! - [`traffic`]: destination pairings (fixed-point-free permutations), rate
//!   vectors (homogeneous, one-dissimilar, heavy-tailed Pareto), and the
//!   conversion from rates to per-session packet workloads.
//! - [`engine`]: the slot-stepped store-and-forward simulator. Sessions whose
//!   workload finishes early transmit dummy padding until the slowest session
//!   in the phase completes, so a phase runs at the pace of its largest
//!   demand; only real packets count toward throughput.
//! - [`partition`]: two-phase scheduling. Splits sessions into a low-rate and
//!   a high-rate group served back to back, which beats the single-phase
//!   schedule whenever a few sessions dominate the load. Also provides node
//!   thinning and tile-coverage diagnostics for subsampled grids.
//! - [`scaling`]: log-log regression, box/CI statistics, closed-form bound
//!   exponents, and Monte Carlo checks of the order-statistics facts the
//!   bounds rest on.
//! - [`harness`]: config parsing, the seeded multi-size experiment runner,
//!   CSV emission, and the `meshcap` CLI.
//!
//! Every random draw flows through explicit u64 seeds, so any experiment,
//! down to individual CSV bytes, reproduces exactly; worker-thread count
//! (`MESHCAP_THREADS`) never changes results. The `examples/` directory holds
//! one runnable walkthrough per capability.

pub mod engine;
pub mod grid;
pub mod harness;
pub mod partition;
pub mod phy;
pub mod scaling;
pub mod traffic;

pub use engine::{EnginePolicy, PhaseResult, Scheme, SimReport, SinrMode, TxEvent};
pub use grid::{Coord, Grid, GridSpec, NodeId, Path};
pub use harness::ExperimentConfig;
pub use partition::{PartitionPlan, PartitionStrategy};
pub use phy::{PhyParams, SlotSchedule};
pub use scaling::{BoundScheme, BoxStats, Ci95, ScalingFit};
pub use traffic::{Pairing, RateVector, Session};
