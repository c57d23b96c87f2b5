//! Traffic generation: who talks to whom, at what relative rate, and how many
//! packets that means.
//!
//! Every node sources exactly one session whose destination is chosen by a
//! uniform random derangement (no node talks to itself). Rate vectors come in
//! three flavors: all-equal, all-equal-but-one (one session n^g times hotter),
//! and i.i.d. Pareto with tail index alpha (CDF 1 - x^-alpha on x >= 1).
//! Workloads convert relative rates into integer packet counts by scaling a
//! base volume and rounding up.

use crate::grid::{Grid, NodeId, Path};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TrafficError {
    #[error("need at least two nodes to form sessions, got {0}")]
    TooFewNodes(usize),
    #[error("dissimilar-rate exponent must lie in (0, 1), got {0}")]
    BadGExponent(f64),
    #[error("tail index must exceed 1 for finite mean rates, got {0}")]
    BadAlpha(f64),
}

/// Destination assignment: a permutation of the node set with no fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    dest: Vec<usize>,
}

impl Pairing {
    pub fn n(&self) -> usize {
        self.dest.len()
    }

    pub fn dest_of(&self, src: NodeId) -> NodeId {
        NodeId(self.dest[src.0])
    }

    /// (src, dst) pairs in ascending source order.
    pub fn pairs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.dest.iter().enumerate().map(|(s, &d)| (NodeId(s), NodeId(d)))
    }
}

/// Uniform random derangement of `n` nodes: whole permutations are resampled
/// until none maps a node to itself, which leaves the distribution uniform
/// over derangements. Deterministic for a given seed.
pub fn sample_pairing(n: usize, seed: u64) -> Result<Pairing, TrafficError> {
    if n < 2 {
        return Err(TrafficError::TooFewNodes(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        perm.shuffle(&mut rng);
        if perm.iter().enumerate().all(|(i, &d)| i != d) {
            return Ok(Pairing { dest: perm });
        }
    }
}

/// Which rate model produced a vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RateKind {
    Homogeneous,
    OneDissimilar { g_exponent: f64 },
    HeavyTailed { alpha: f64 },
}

/// Per-session relative demand rates.
///
/// `eta` is a recorded scale factor for the whole vector. It is kept symbolic
/// (always 1) because throughput slopes and partition choices are invariant to
/// uniform rescaling; nothing downstream consumes it numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct RateVector {
    pub kind: RateKind,
    pub lambdas: Vec<f64>,
    pub eta: f64,
}

impl RateVector {
    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    pub fn total(&self) -> f64 {
        self.lambdas.iter().sum()
    }
}

/// All sessions demand the same unit rate.
pub fn rates_homogeneous(n: usize) -> RateVector {
    RateVector { kind: RateKind::Homogeneous, lambdas: vec![1.0; n], eta: 1.0 }
}

/// Unit rates except the last session, which demands n^g_exponent.
pub fn rates_one_dissimilar(n: usize, g_exponent: f64) -> Result<RateVector, TrafficError> {
    if n < 2 {
        return Err(TrafficError::TooFewNodes(n));
    }
    if !(g_exponent > 0.0 && g_exponent < 1.0) {
        return Err(TrafficError::BadGExponent(g_exponent));
    }
    let mut lambdas = vec![1.0; n];
    lambdas[n - 1] = (n as f64).powf(g_exponent);
    Ok(RateVector { kind: RateKind::OneDissimilar { g_exponent }, lambdas, eta: 1.0 })
}

/// i.i.d. Pareto rates via inverse-CDF sampling: lambda = U^(-1/alpha) with U
/// uniform on (0, 1], so every rate is at least 1. Requires alpha > 1 (finite
/// mean). Deterministic for a given seed.
pub fn rates_heavy_tailed(n: usize, alpha: f64, seed: u64) -> Result<RateVector, TrafficError> {
    if n < 2 {
        return Err(TrafficError::TooFewNodes(n));
    }
    if !(alpha > 1.0) {
        return Err(TrafficError::BadAlpha(alpha));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inv = -1.0 / alpha;
    let lambdas = (0..n)
        .map(|_| {
            let u: f64 = 1.0 - rng.random::<f64>();
            u.powf(inv)
        })
        .collect();
    Ok(RateVector { kind: RateKind::HeavyTailed { alpha }, lambdas, eta: 1.0 })
}

/// Integer packet volumes: packets[i] = ceil(base_packets * lambdas[i]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Workload {
    pub packets: Vec<u64>,
}

impl Workload {
    pub fn from_rates(rates: &RateVector, base_packets: u64) -> Self {
        assert!(base_packets >= 1, "base_packets must be at least 1");
        let packets = rates
            .lambdas
            .iter()
            .map(|&l| (base_packets as f64 * l).ceil() as u64)
            .collect();
        Workload { packets }
    }

    pub fn total(&self) -> u64 {
        self.packets.iter().sum()
    }
}

/// One unicast flow: a source, its deranged destination, the X-Y route between
/// them, and a packet volume.
#[derive(Debug, Clone, PartialEq)]
pub struct Session {
    pub id: usize,
    pub src: NodeId,
    pub dst: NodeId,
    pub path: Path,
    pub packets: u64,
}

/// One session per node: session i sources at node i, sinks at pairing(i),
/// routes by X-Y, and carries ceil(base_packets * lambdas[i]) packets.
pub fn build_sessions(
    grid: &Grid,
    pairing: &Pairing,
    rates: &RateVector,
    base_packets: u64,
) -> Vec<Session> {
    assert_eq!(pairing.n(), grid.n(), "pairing does not cover the grid");
    assert_eq!(rates.n(), grid.n(), "rate vector does not cover the grid");
    let workload = Workload::from_rates(rates, base_packets);
    pairing
        .pairs()
        .enumerate()
        .map(|(id, (src, dst))| Session {
            id,
            src,
            dst,
            path: grid.xy_route(src, dst),
            packets: workload.packets[id],
        })
        .collect()
}
