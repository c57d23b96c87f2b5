//! Radio layer: line-of-sight path loss, SINR evaluation, and the 9-slot
//! spatial-reuse TDMA schedule.
//!
//! Every node carries one radio and transmits at fixed power. The channel is
//! pure distance decay: received power falls off as d^-gamma. Interference
//! from concurrent transmitters adds incoherently, so a transmission from `tx`
//! to `rx` succeeds when
//!
//! ```text
//! P d(tx,rx)^-gamma / (N0 + sum_k P d(k,rx)^-gamma) >= beta
//! ```
//!
//! with `k` ranging over the other concurrent transmitters.
//!
//! The schedule colors the grid by position modulo 3 in each dimension, which
//! yields 9 labels; slot `s` activates label `(s mod 9) + 1`. Two nodes with
//! the same label are at least 3 lattice steps apart in some dimension, so
//! simultaneous transmitters keep their mutual interference bounded. For decay
//! exponents gamma > 2 the aggregate interference stays bounded as the grid
//! grows, which is what makes a grid-size-independent SINR threshold feasible.

use crate::grid::{Grid, NodeId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PhyError {
    #[error("distance must be positive, got {0}")]
    NonPositiveDistance(f64),
    #[error("invalid radio parameters: {0}")]
    BadParams(&'static str),
}

/// Radio constants shared by every node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhyParams {
    /// Transmit power, linear units.
    pub power: f64,
    /// Noise floor, same units as `power`.
    pub noise: f64,
    /// SINR threshold for successful decoding.
    pub beta: f64,
    /// Path-loss exponent.
    pub gamma: f64,
}

impl Default for PhyParams {
    fn default() -> Self {
        PhyParams { power: 1e6, noise: 1.0, beta: 1.0, gamma: 4.0 }
    }
}

impl PhyParams {
    pub fn validate(&self) -> Result<(), PhyError> {
        if !(self.power > 0.0) {
            return Err(PhyError::BadParams("power must be positive"));
        }
        if !(self.noise > 0.0) {
            return Err(PhyError::BadParams("noise must be positive"));
        }
        if !(self.beta > 0.0) {
            return Err(PhyError::BadParams("beta must be positive"));
        }
        if !(self.gamma > 0.0) {
            return Err(PhyError::BadParams("gamma must be positive"));
        }
        Ok(())
    }
}

/// Received-power attenuation at the given distance: d^-gamma.
pub fn channel_power_gain(distance: f64, params: &PhyParams) -> Result<f64, PhyError> {
    if !(distance > 0.0) {
        return Err(PhyError::NonPositiveDistance(distance));
    }
    Ok(distance.powf(-params.gamma))
}

/// SINR at `rx` for a transmission from `tx`, with `concurrent` listing all
/// simultaneous transmitters. `tx` and `rx` are skipped in the interference
/// sum, so `concurrent` may or may not include `tx` itself.
pub fn sinr(grid: &Grid, tx: NodeId, rx: NodeId, concurrent: &[NodeId], params: &PhyParams) -> f64 {
    debug_assert!(tx != rx, "transmitter and receiver must differ");
    let signal = params.power * grid.distance(tx, rx).powf(-params.gamma);
    let mut interference = 0.0;
    for &k in concurrent {
        if k == tx || k == rx {
            continue;
        }
        interference += params.power * grid.distance(k, rx).powf(-params.gamma);
    }
    signal / (params.noise + interference)
}

/// Periodic 9-slot transmission schedule for one grid.
///
/// Labels are 1..=9; `label = 3 ((row-1) mod 3) + ((col-1) mod 3) + 1`. Within
/// any aligned 3x3 cell the labels are a permutation of 1..=9, and lattice
/// neighbors never share a label.
#[derive(Debug, Clone)]
pub struct SlotSchedule {
    labels: Vec<u8>,
    by_label: [Vec<NodeId>; 9],
}

/// Slots per schedule frame.
pub const FRAME_LEN: u64 = 9;

impl SlotSchedule {
    pub fn for_grid(grid: &Grid) -> Self {
        let mut labels = Vec::with_capacity(grid.n());
        let mut by_label: [Vec<NodeId>; 9] = Default::default();
        for id in 0..grid.n() {
            let c = grid.coord(NodeId(id));
            let label = 3 * ((c.row - 1) % 3) + ((c.col - 1) % 3) + 1;
            labels.push(label as u8);
            by_label[label - 1].push(NodeId(id));
        }
        SlotSchedule { labels, by_label }
    }

    /// Label of a node, in 1..=9.
    pub fn label(&self, node: NodeId) -> u8 {
        self.labels[node.0]
    }

    /// Label active during a 0-based slot: `(slot mod 9) + 1`.
    pub fn active_label(slot: u64) -> u8 {
        (slot % FRAME_LEN) as u8 + 1
    }

    /// Nodes allowed to transmit during the given 0-based slot, ascending by
    /// id. The nine active sets partition the grid.
    pub fn active_set(&self, slot: u64) -> &[NodeId] {
        &self.by_label[(slot % FRAME_LEN) as usize]
    }

    /// Nodes carrying the given label.
    pub fn nodes_with_label(&self, label: u8) -> &[NodeId] {
        assert!((1..=9).contains(&label), "label {label} out of range");
        &self.by_label[label as usize - 1]
    }
}

/// How `min_sinr_over_frame` picks the receiver for each scheduled
/// transmitter.
pub enum ReceiverRule {
    /// Evaluate every lattice neighbor and keep the worst.
    WorstCase,
    /// Evaluate only the given tx -> rx assignments; transmitters absent from
    /// the map still interfere but are not themselves evaluated.
    Fixed(std::collections::BTreeMap<NodeId, NodeId>),
}

/// Worst SINR seen across one whole frame when, in every slot, every node of
/// the active label transmits to a lattice neighbor chosen by `rule`.
///
/// Returns +inf if the rule evaluates no transmission at all.
pub fn min_sinr_over_frame(
    grid: &Grid,
    schedule: &SlotSchedule,
    params: &PhyParams,
    rule: &ReceiverRule,
) -> f64 {
    let mut worst = f64::INFINITY;
    for slot in 0..FRAME_LEN {
        let active = schedule.active_set(slot);
        for &tx in active {
            match rule {
                ReceiverRule::WorstCase => {
                    for rx in grid.neighbors(tx) {
                        worst = worst.min(sinr(grid, tx, rx, active, params));
                    }
                }
                ReceiverRule::Fixed(map) => {
                    if let Some(&rx) = map.get(&tx) {
                        assert_eq!(grid.manhattan(tx, rx), 1, "receiver must be a neighbor");
                        worst = worst.min(sinr(grid, tx, rx, active, params));
                    }
                }
            }
        }
    }
    worst
}

/// Largest SINR threshold this grid certifies: with every scheduled node
/// transmitting, any single-hop transmission still meets this SINR. Running
/// the engine with `beta` at or below this value makes per-transmission SINR
/// checks redundant.
///
/// Requires `gamma > 2`; slower decay lets interference grow without bound on
/// large grids, so no fixed positive threshold is certifiable.
pub fn feasible_beta(grid: &Grid, schedule: &SlotSchedule, params: &PhyParams) -> f64 {
    assert!(
        params.gamma > 2.0,
        "feasible_beta requires gamma > 2, got {}",
        params.gamma
    );
    min_sinr_over_frame(grid, schedule, params, &ReceiverRule::WorstCase)
}
