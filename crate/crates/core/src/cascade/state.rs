use super::SeedAssignment;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

const NONE: u32 = 0;

/// Mutable state of one cascade run.
///
/// Besides the owner of every node, the state keeps, for each node, how many
/// of its neighbors each player owns (the `e_i` of the activation rule), so a
/// step costs `O(|V| * players)` plus the degree of the newly influenced
/// nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct CascadeState {
    players: usize,
    timestep: usize,
    /// 0 for uninfluenced, otherwise player index + 1.
    owner: Vec<u32>,
    activated_at: Vec<u32>,
    /// Row-major `node * players + player`.
    neighbor_counts: Vec<u32>,
    influenced_neighbors: Vec<u32>,
    sizes: Vec<usize>,
}

impl CascadeState {
    /// State at timestep 0 from a resolved seed assignment.
    pub fn new(g: &Graph, assignment: &SeedAssignment) -> Result<Self> {
        let mut owners = vec![None; g.node_count()];
        for (i, set) in assignment.initial.iter().enumerate() {
            for &v in set {
                if v >= g.node_count() {
                    return Err(Error::invalid(format!("seed node {v} out of range")));
                }
                if owners[v].is_some() {
                    return Err(Error::ContractViolation(format!(
                        "node {v} appears in two initial sets"
                    )));
                }
                owners[v] = Some(i);
            }
        }
        Self::from_owners(g, &owners, assignment.player_count())
    }

    /// State at timestep 0 from an explicit owner per node.
    pub fn from_owners(g: &Graph, owners: &[Option<usize>], players: usize) -> Result<Self> {
        if owners.len() != g.node_count() {
            return Err(Error::invalid(
                "owner vector length differs from node count",
            ));
        }
        if players == 0 {
            return Err(Error::invalid("at least one player is required"));
        }
        let n = g.node_count();
        let mut state = CascadeState {
            players,
            timestep: 0,
            owner: vec![NONE; n],
            activated_at: vec![0; n],
            neighbor_counts: vec![0; n * players],
            influenced_neighbors: vec![0; n],
            sizes: vec![0; players],
        };
        for (v, o) in owners.iter().enumerate() {
            if let Some(i) = *o {
                if i >= players {
                    return Err(Error::invalid(format!(
                        "owner {i} of node {v} out of range"
                    )));
                }
                state.claim(g, v, i);
            }
        }
        Ok(state)
    }

    fn claim(&mut self, g: &Graph, v: NodeId, player: usize) {
        debug_assert_eq!(self.owner[v], NONE, "ownership is permanent");
        self.owner[v] = player as u32 + 1;
        self.activated_at[v] = self.timestep as u32;
        self.sizes[player] += 1;
        for &u in g.neighbor_slice(v) {
            let u = u as usize;
            self.neighbor_counts[u * self.players + player] += 1;
            self.influenced_neighbors[u] += 1;
        }
    }

    /// Advances to the next timestep and assigns the given activations there.
    pub(crate) fn commit(&mut self, g: &Graph, activations: &[(NodeId, usize)]) {
        self.timestep += 1;
        for &(v, player) in activations {
            self.claim(g, v, player);
        }
    }

    pub(crate) fn skip_timestep(&mut self) {
        self.timestep += 1;
    }

    pub fn player_count(&self) -> usize {
        self.players
    }

    pub fn node_count(&self) -> usize {
        self.owner.len()
    }

    pub fn timestep(&self) -> usize {
        self.timestep
    }

    /// Owning player (0-based) of `v`, if influenced.
    pub fn owner(&self, v: NodeId) -> Option<usize> {
        match self.owner[v] {
            NONE => None,
            o => Some(o as usize - 1),
        }
    }

    pub fn is_influenced(&self, v: NodeId) -> bool {
        self.owner[v] != NONE
    }

    /// Timestep at which `v` joined its owner's set; 0 for seeds.
    pub fn activated_at(&self, v: NodeId) -> Option<usize> {
        self.is_influenced(v).then(|| self.activated_at[v] as usize)
    }

    /// Per-player count of influenced neighbors of `v`.
    pub fn neighbor_counts(&self, v: NodeId) -> &[u32] {
        &self.neighbor_counts[v * self.players..(v + 1) * self.players]
    }

    pub fn influenced_neighbors(&self, v: NodeId) -> usize {
        self.influenced_neighbors[v] as usize
    }

    /// `|A_i^j|` for every player at the current timestep.
    pub fn influenced_counts(&self) -> &[usize] {
        &self.sizes
    }

    pub fn uninfluenced_count(&self) -> usize {
        self.node_count() - self.sizes.iter().sum::<usize>()
    }

    /// Members of `A_i^j`, sorted.
    pub fn influenced_set(&self, player: usize) -> Vec<NodeId> {
        (0..self.node_count())
            .filter(|&v| self.owner(v) == Some(player))
            .collect()
    }

    /// Uninfluenced nodes with at least one influenced neighbor.
    pub fn frontier(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count())
            .filter(move |&v| !self.is_influenced(v) && self.influenced_neighbors[v] > 0)
    }
}
