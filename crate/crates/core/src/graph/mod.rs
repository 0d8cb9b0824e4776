//! Undirected simple graphs in compressed adjacency form.

mod generate;
mod io;
mod metrics;

pub use generate::{generate_balanced_binary_tree, generate_dense, generate_ngon};
pub use io::{load_edge_list, load_edge_list_file};
pub use metrics::{compute_metrics, connected_components, eccentricity, GraphMetrics};

use crate::error::{Error, Result};

pub type NodeId = usize;

/// An immutable undirected simple graph over nodes `0..node_count`.
///
/// Neighbor lists are sorted, free of duplicates and self-loops, and
/// symmetric. Storage is CSR: `offsets[v]..offsets[v + 1]` indexes the
/// neighbors of `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("nodes", &self.node_count())
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops and repeated edges (in
    /// either orientation) are dropped.
    pub fn from_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (NodeId, NodeId)>,
    ) -> Result<Self> {
        check_node_count(node_count)?;
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); node_count];
        for (u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {node_count} nodes"
                )));
            }
            if u == v {
                continue;
            }
            lists[u].push(v as u32);
            lists[v].push(u as u32);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists(lists))
    }

    /// Trusted constructor for generators that already emit sorted, symmetric
    /// adjacency.
    pub(crate) fn from_sorted_lists(lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let total = lists.iter().map(Vec::len).sum();
        let mut targets = Vec::with_capacity(total);
        offsets.push(0);
        for list in lists {
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    /// Builds from a per-node degree and a neighbor generator, avoiding the
    /// intermediate per-node vectors. Used for the complete graph.
    pub(crate) fn from_fn(
        node_count: usize,
        degree: impl Fn(usize) -> usize,
        mut fill: impl FnMut(usize, &mut Vec<u32>),
    ) -> Self {
        let mut offsets = Vec::with_capacity(node_count + 1);
        let total = (0..node_count).map(&degree).sum();
        let mut targets = Vec::with_capacity(total);
        offsets.push(0);
        for v in 0..node_count {
            fill(v, &mut targets);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbor ids of `v` in their compact storage type.
    pub fn neighbor_slice(&self, v: NodeId) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: NodeId) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.neighbor_slice(v).iter().map(|&u| u as NodeId)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbor_slice(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes().flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nodes().map(|v| self.degree(v)).collect()
    }

    /// Checks the structural invariants: symmetric, sorted, no loops, no
    /// duplicates, ids in range.
    pub fn validate(&self) -> Result<()> {
        let n = self.node_count();
        for v in self.nodes() {
            let ns = self.neighbor_slice(v);
            if !ns.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::ContractViolation(format!(
                    "neighbors of {v} are not strictly increasing"
                )));
            }
            for &u in ns {
                let u = u as usize;
                if u >= n || u == v || !self.has_edge(u, v) {
                    return Err(Error::ContractViolation(format!(
                        "bad adjacency entry {v} -> {u}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn check_node_count(n: usize) -> Result<()> {
    if n > u32::MAX as usize {
        return Err(Error::invalid(format!(
            "{n} nodes exceeds the u32 id space"
        )));
    }
    Ok(())
}
