//! Grid geometry: node indexing, neighbor sets, X-Y routes, pair distances.
//!
//! Nodes sit on a rows x cols lattice with uniform spacing. Coordinates are
//! 1-based `(row, col)`; node ids are 0-based row-major integers. Routes follow
//! X-Y dimension order: the column offset is walked first, then the row offset,
//! so every route is an L-shaped (or straight) path of exactly Manhattan-many
//! hops.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("grid must have at least one row and one column")]
    Empty,
    #[error("node spacing must be positive, got {0}")]
    BadSpacing(f64),
    #[error("grid has fewer than two nodes, no ordered pairs exist")]
    NoPairs,
}

/// Shape and physical scale of a rectangular grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub rows: usize,
    pub cols: usize,
    /// Distance between lattice neighbors, in arbitrary length units.
    pub spacing: f64,
}

/// 1-based lattice coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coord {
    pub row: usize,
    pub col: usize,
}

/// Dense 0-based node index; row-major over the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl std::fmt::Display for NodeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A hop-by-hop route. Consecutive nodes are always lattice neighbors and no
/// node repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    nodes: Vec<NodeId>,
}

impl Path {
    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    /// Number of transmissions needed to move one packet along the path.
    pub fn hops(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn src(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn dst(&self) -> NodeId {
        *self.nodes.last().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    spec: GridSpec,
}

impl Grid {
    pub fn new(spec: GridSpec) -> Result<Self, GridError> {
        if spec.rows == 0 || spec.cols == 0 {
            return Err(GridError::Empty);
        }
        if !(spec.spacing > 0.0) {
            return Err(GridError::BadSpacing(spec.spacing));
        }
        Ok(Grid { spec })
    }

    /// Convenience constructor for the common square case.
    pub fn square(side: usize, spacing: f64) -> Result<Self, GridError> {
        Grid::new(GridSpec { rows: side, cols: side, spacing })
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.spec.rows
    }

    pub fn cols(&self) -> usize {
        self.spec.cols
    }

    pub fn spacing(&self) -> f64 {
        self.spec.spacing
    }

    /// Total node count.
    pub fn n(&self) -> usize {
        self.spec.rows * self.spec.cols
    }

    pub fn contains(&self, node: NodeId) -> bool {
        node.0 < self.n()
    }

    pub fn coord(&self, node: NodeId) -> Coord {
        assert!(self.contains(node), "node {} out of range", node);
        Coord {
            row: node.0 / self.spec.cols + 1,
            col: node.0 % self.spec.cols + 1,
        }
    }

    pub fn node(&self, coord: Coord) -> NodeId {
        assert!(
            (1..=self.spec.rows).contains(&coord.row) && (1..=self.spec.cols).contains(&coord.col),
            "coordinate ({}, {}) out of range",
            coord.row,
            coord.col
        );
        NodeId((coord.row - 1) * self.spec.cols + (coord.col - 1))
    }

    pub fn node_at(&self, row: usize, col: usize) -> NodeId {
        self.node(Coord { row, col })
    }

    /// Euclidean distance between two nodes in spacing units.
    pub fn distance(&self, a: NodeId, b: NodeId) -> f64 {
        let ca = self.coord(a);
        let cb = self.coord(b);
        let dr = ca.row.abs_diff(cb.row) as f64;
        let dc = ca.col.abs_diff(cb.col) as f64;
        (dr * dr + dc * dc).sqrt() * self.spec.spacing
    }

    pub fn manhattan(&self, a: NodeId, b: NodeId) -> usize {
        let ca = self.coord(a);
        let cb = self.coord(b);
        ca.row.abs_diff(cb.row) + ca.col.abs_diff(cb.col)
    }

    /// Lattice neighbors (up to four), ascending by id.
    pub fn neighbors(&self, node: NodeId) -> Vec<NodeId> {
        let c = self.coord(node);
        let mut out = Vec::with_capacity(4);
        if c.row > 1 {
            out.push(self.node_at(c.row - 1, c.col));
        }
        if c.col > 1 {
            out.push(self.node_at(c.row, c.col - 1));
        }
        if c.col < self.spec.cols {
            out.push(self.node_at(c.row, c.col + 1));
        }
        if c.row < self.spec.rows {
            out.push(self.node_at(c.row + 1, c.col));
        }
        out
    }

    /// X-Y route from `src` to `dst`: all column moves, then all row moves.
    /// `src == dst` yields a single-node path with zero hops.
    pub fn xy_route(&self, src: NodeId, dst: NodeId) -> Path {
        let a = self.coord(src);
        let b = self.coord(dst);
        let mut nodes = Vec::with_capacity(self.manhattan(src, dst) + 1);
        nodes.push(src);
        let mut col = a.col;
        while col != b.col {
            col = if b.col > col { col + 1 } else { col - 1 };
            nodes.push(self.node_at(a.row, col));
        }
        let mut row = a.row;
        while row != b.row {
            row = if b.row > row { row + 1 } else { row - 1 };
            nodes.push(self.node_at(row, b.col));
        }
        Path { nodes }
    }

    /// Exact mean hop count of X-Y routes over all ordered pairs of distinct
    /// nodes. For an LxL grid this evaluates to 2L/3.
    ///
    /// Closed form: along one dimension of length L the mean absolute offset
    /// over all L^2 ordered (not necessarily distinct) index pairs is
    /// (L^2 - 1)/(3L). Offsets in the two dimensions are independent and
    /// self-pairs contribute zero hops, so restricting to distinct pairs only
    /// rescales by n^2/(n^2 - n).
    pub fn mean_pair_hops(&self) -> Result<f64, GridError> {
        let n = self.n() as f64;
        if self.n() < 2 {
            return Err(GridError::NoPairs);
        }
        let dim_mean = |l: f64| (l * l - 1.0) / (3.0 * l);
        let all_pairs = dim_mean(self.spec.rows as f64) + dim_mean(self.spec.cols as f64);
        Ok(all_pairs * n / (n - 1.0))
    }
}
