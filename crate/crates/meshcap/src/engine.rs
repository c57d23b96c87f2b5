//! Slot-by-slot packet simulation.
//!
//! The model is backlogged: every session's packets sit in its source queue at
//! slot 0, and the run ends the moment the last packet reaches its
//! destination. In each slot, every node whose schedule label is active and
//! whose queue is nonempty forwards exactly one packet (FIFO head) one hop
//! along that packet's X-Y route. Throughput is measured as packets delivered
//! per slot over the whole run, which for fixed volumes is a completion-time
//! measurement.
//!
//! Because lattice neighbors never share a schedule label, a node receives at
//! most one packet per slot and never both sends and receives in one slot, so
//! slots can be applied atomically in node order without ordering artifacts.
//! The engine is strictly deterministic: no RNG, no hash-order iteration.
//!
//! SINR handling is a policy choice. `AssumedSuccess` trusts the schedule
//! (appropriate when the threshold beta has been certified against
//! `phy::feasible_beta`); `Verified` recomputes SINR for every concurrent
//! transmission and retries failures in the next frame.

use crate::grid::{Grid, NodeId};
use crate::phy::{self, PhyParams, SlotSchedule, FRAME_LEN};
use crate::traffic::Session;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EngineError {
    #[error("simulation did not complete within {max_slots} slots ({remaining} packets still in flight)")]
    NonTermination { max_slots: u64, remaining: u64 },
    #[error("report spans zero slots, throughput is undefined")]
    ZeroSlots,
}

/// Whether per-transmission SINR checks run during simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SinrMode {
    /// Trust the schedule; every scheduled transmission succeeds. Valid when
    /// beta has been certified at or below `phy::feasible_beta` for the grid.
    #[default]
    AssumedSuccess,
    /// Evaluate SINR against the actual concurrent transmitter set; a
    /// transmission below beta stays queued and is retried next frame.
    Verified,
}

/// Queue service order. Packets are served oldest-arrival first; arrivals in
/// the same slot are ordered by ascending session id (which at slot 0 means
/// source enqueue order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QueueDiscipline {
    #[default]
    Fifo,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnginePolicy {
    pub sinr_mode: SinrMode,
    pub queue_discipline: QueueDiscipline,
    /// Safety cap; exceeding it is reported as non-termination.
    pub max_slots: u64,
}

impl Default for EnginePolicy {
    fn default() -> Self {
        EnginePolicy {
            sinr_mode: SinrMode::AssumedSuccess,
            queue_discipline: QueueDiscipline::Fifo,
            max_slots: 1_000_000_000,
        }
    }
}

/// One successful transmission: in `slot`, node `tx` forwarded packet number
/// `packet` of session `session` to node `rx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TxEvent {
    pub slot: u64,
    pub tx: NodeId,
    pub rx: NodeId,
    pub session: usize,
    pub packet: u64,
}

/// Receiver of the engine's transmission stream.
pub trait TraceSink {
    fn record(&mut self, event: TxEvent);
}

/// Discards all events; the zero-cost default.
pub struct NoTrace;

impl TraceSink for NoTrace {
    #[inline]
    fn record(&mut self, _event: TxEvent) {}
}

impl TraceSink for Vec<TxEvent> {
    fn record(&mut self, event: TxEvent) {
        self.push(event);
    }
}

/// CSV rendering of a trace, one `slot,tx,rx,session,packet` row per event.
pub fn trace_to_csv(events: &[TxEvent]) -> String {
    let mut out = String::from("slot,tx,rx,session,packet\n");
    for e in events {
        out.push_str(&format!("{},{},{},{},{}\n", e.slot, e.tx, e.rx, e.session, e.packet));
    }
    out
}

/// Outcome of one simulation phase. Per-session vectors are aligned with the
/// session slice passed to `run_phase`; `session_ids` records the global ids
/// in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseResult {
    /// Total slots consumed: the 0-based slot of the last delivery, plus one.
    pub slots_elapsed: u64,
    pub session_ids: Vec<usize>,
    pub delivered: Vec<u64>,
    /// Slots elapsed when each session finished (same convention as
    /// `slots_elapsed`, whose value is the maximum of this vector).
    pub completion_slot: Vec<u64>,
    /// Verified mode only: number of SINR-failed transmission attempts that
    /// were retried. Always 0 in AssumedSuccess mode.
    pub dropped: u64,
}

impl PhaseResult {
    pub fn total_delivered(&self) -> u64 {
        self.delivered.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Conventional,
    TwoPhase,
}

/// Aggregate of one simulated run (one phase for conventional scheduling, two
/// for the partitioned scheme).
#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub scheme: Scheme,
    pub total_packets: u64,
    pub total_slots: u64,
    /// Packets per slot; always `total_packets / total_slots`.
    pub throughput: f64,
    pub phases: Vec<PhaseResult>,
}

impl SimReport {
    /// Builds a report from completed phases, enforcing the throughput
    /// identity. A zero-slot aggregate has no defined throughput.
    pub fn from_phases(scheme: Scheme, phases: Vec<PhaseResult>) -> Result<Self, EngineError> {
        let total_packets: u64 = phases.iter().map(|p| p.total_delivered()).sum();
        let total_slots: u64 = phases.iter().map(|p| p.slots_elapsed).sum();
        if total_slots == 0 {
            return Err(EngineError::ZeroSlots);
        }
        Ok(SimReport {
            scheme,
            total_packets,
            total_slots,
            throughput: total_packets as f64 / total_slots as f64,
            phases,
        })
    }
}

/// Delivered packets per elapsed slot, recomputed from the report's phases.
/// Only real deliveries count; idle slots still count as elapsed time.
pub fn throughput_of(report: &SimReport) -> Result<f64, EngineError> {
    let packets: u64 = report.phases.iter().map(|p| p.total_delivered()).sum();
    let slots: u64 = report.phases.iter().map(|p| p.slots_elapsed).sum();
    if slots == 0 {
        return Err(EngineError::ZeroSlots);
    }
    Ok(packets as f64 / slots as f64)
}

#[derive(Clone, Copy)]
struct Packet {
    session: u32,
    seq: u32,
    /// Index into the session's path: the packet currently sits at
    /// `path.nodes()[pos]`.
    pos: u32,
}

/// Runs the slotted simulation until every real packet of every listed
/// session is delivered. All listed sessions inject at slot 0; every grid
/// node relays.
///
/// Sessions are padded to the phase's largest workload: a source whose real
/// packets run out keeps sending dummy packets along its own path, so the
/// phase behaves like one in which every session carries the maximum demand.
/// Dummies occupy transmission slots and relay queues like any packet but are
/// discarded at the destination; only real packets count, and the phase ends
/// at the last real delivery. With equal workloads (and in single-session
/// phases) the padding is inert.
pub fn run_phase(
    grid: &Grid,
    schedule: &SlotSchedule,
    sessions: &[Session],
    policy: &EnginePolicy,
    params: &PhyParams,
    trace: &mut impl TraceSink,
) -> Result<PhaseResult, EngineError> {
    assert!(policy.max_slots > 0, "max_slots must be positive");
    for s in sessions {
        assert!(s.packets > 0, "session {} has an empty workload", s.id);
        assert!(grid.contains(s.src) && grid.contains(s.dst), "session off-grid");
    }

    let session_ids: Vec<usize> = sessions.iter().map(|s| s.id).collect();
    let mut delivered = vec![0u64; sessions.len()];
    let mut completion = vec![0u64; sessions.len()];
    let mut dropped = 0u64;

    let pad = sessions.iter().map(|s| s.packets).max().unwrap_or(0);
    assert!(pad <= u32::MAX as u64, "workload too large for packet sequencing");

    let mut queues: Vec<VecDeque<Packet>> = vec![VecDeque::new(); grid.n()];
    let mut busy_per_label = [0u32; FRAME_LEN as usize];
    // Real packets outstanding; dummy padding (seq >= session workload) is
    // never counted here.
    let mut remaining: u64 = 0;
    // Slot-0 backlog, enqueued in ascending session order (the FIFO
    // tie-break; sources are distinct so order only matters at this instant).
    // Each source holds `pad` packets, the first `packets` of them real.
    for (idx, s) in sessions.iter().enumerate() {
        let q = &mut queues[s.src.0];
        if q.is_empty() {
            busy_per_label[(schedule.label(s.src) - 1) as usize] += 1;
        }
        for seq in 0..pad {
            q.push_back(Packet { session: idx as u32, seq: seq as u32, pos: 0 });
        }
        remaining += s.packets;
    }

    if remaining == 0 {
        return Ok(PhaseResult {
            slots_elapsed: 0,
            session_ids,
            delivered,
            completion_slot: completion,
            dropped,
        });
    }

    // Scratch buffers for Verified mode, reused across slots.
    let mut planned: Vec<(NodeId, NodeId)> = Vec::new();
    let mut concurrent: Vec<NodeId> = Vec::new();

    let mut slot: u64 = 0;
    loop {
        if slot >= policy.max_slots {
            return Err(EngineError::NonTermination { max_slots: policy.max_slots, remaining });
        }
        let li = (slot % FRAME_LEN) as usize;
        if busy_per_label[li] > 0 {
            match policy.sinr_mode {
                SinrMode::AssumedSuccess => {
                    for &node in schedule.active_set(slot) {
                        if queues[node.0].front().is_some() {
                            forward(
                                node, slot, li, sessions, schedule, &mut queues,
                                &mut busy_per_label, &mut delivered, &mut completion,
                                &mut remaining, trace,
                            );
                        }
                    }
                }
                SinrMode::Verified => {
                    // Every busy active node radiates this slot, including
                    // those whose own transmission then fails the check.
                    planned.clear();
                    concurrent.clear();
                    for &node in schedule.active_set(slot) {
                        if let Some(p) = queues[node.0].front() {
                            let path = sessions[p.session as usize].path.nodes();
                            planned.push((node, path[p.pos as usize + 1]));
                            concurrent.push(node);
                        }
                    }
                    for &(node, rx) in &planned {
                        if phy::sinr(grid, node, rx, &concurrent, params) >= params.beta {
                            forward(
                                node, slot, li, sessions, schedule, &mut queues,
                                &mut busy_per_label, &mut delivered, &mut completion,
                                &mut remaining, trace,
                            );
                        } else {
                            dropped += 1;
                        }
                    }
                }
            }
        }
        slot += 1;
        if remaining == 0 {
            return Ok(PhaseResult {
                slots_elapsed: slot,
                session_ids,
                delivered,
                completion_slot: completion,
                dropped,
            });
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn forward(
    node: NodeId,
    slot: u64,
    label_idx: usize,
    sessions: &[Session],
    schedule: &SlotSchedule,
    queues: &mut [VecDeque<Packet>],
    busy_per_label: &mut [u32; FRAME_LEN as usize],
    delivered: &mut [u64],
    completion: &mut [u64],
    remaining: &mut u64,
    trace: &mut impl TraceSink,
) {
    let p = queues[node.0].pop_front().expect("forward on empty queue");
    if queues[node.0].is_empty() {
        busy_per_label[label_idx] -= 1;
    }
    let sess = &sessions[p.session as usize];
    let path = sess.path.nodes();
    let next = path[p.pos as usize + 1];
    trace.record(TxEvent { slot, tx: node, rx: next, session: sess.id, packet: p.seq as u64 });
    if p.pos as usize + 2 == path.len() {
        // Dummy padding (seq past the real workload) is dropped on arrival.
        if (p.seq as u64) < sess.packets {
            delivered[p.session as usize] += 1;
            *remaining -= 1;
            if delivered[p.session as usize] == sess.packets {
                completion[p.session as usize] = slot + 1;
            }
        }
    } else {
        let nq = &mut queues[next.0];
        if nq.is_empty() {
            busy_per_label[(schedule.label(next) - 1) as usize] += 1;
        }
        nq.push_back(Packet { pos: p.pos + 1, ..p });
    }
}

/// Single-phase run with all sessions injecting concurrently. Sessions that
/// finish early keep the air busy with dummy padding (see `run_phase`); only
/// real packets count toward throughput, so heterogeneous demands drag the
/// whole run down to the pace of the largest one.
pub fn run_conventional(
    grid: &Grid,
    schedule: &SlotSchedule,
    sessions: &[Session],
    policy: &EnginePolicy,
    params: &PhyParams,
) -> Result<SimReport, EngineError> {
    let phase = run_phase(grid, schedule, sessions, policy, params, &mut NoTrace)?;
    SimReport::from_phases(Scheme::Conventional, vec![phase])
}
