use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Graph, NodeId};
use crate::error::{Error, Result};

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub nodes: usize,
    pub edges: usize,
    /// `2|E| / |V|`.
    pub average_degree: f64,
    /// Largest eccentricity inside the largest connected component.
    pub diameter: usize,
    /// Set when the diameter comes from a sample of BFS roots and is only a
    /// lower bound.
    pub approximate: bool,
    #[serde(rename = "connected")]
    pub is_connected: bool,
}

/// Eccentricity of `source` within its component, plus one node at that
/// distance. `dist` and `queue` are scratch space reused across calls.
fn bfs_far(
    g: &Graph,
    source: NodeId,
    dist: &mut Vec<u32>,
    queue: &mut VecDeque<u32>,
) -> (usize, NodeId) {
    dist.clear();
    dist.resize(g.node_count(), UNSEEN);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source as u32);
    let mut far = (0, source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize];
        if d as usize > far.0 {
            far = (d as usize, v as usize);
        }
        for &u in g.neighbor_slice(v as usize) {
            if dist[u as usize] == UNSEEN {
                dist[u as usize] = d + 1;
                queue.push_back(u);
            }
        }
    }
    far
}

pub fn eccentricity(g: &Graph, source: NodeId) -> usize {
    bfs_far(g, source, &mut Vec::new(), &mut VecDeque::new()).0
}

/// Component label per node; labels are numbered by smallest member id.
pub fn connected_components(g: &Graph) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; g.node_count()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in g.nodes() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if label[u] == usize::MAX {
                    label[u] = count;
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Average degree and diameter of the largest connected component.
///
/// With `exact` every node of the component is used as a BFS root. Otherwise
/// `max(100, ceil(sqrt(|V|)))` roots are taken evenly spaced (by id) through
/// the component, followed by one extra BFS from the farthest node seen from
/// the first root; the result is then a lower bound and flagged
/// `approximate`. When the sample would cover the whole component the exact
/// answer is returned.
pub fn compute_metrics(g: &Graph, exact: bool) -> Result<GraphMetrics> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::invalid("metrics of an empty graph are undefined"));
    }
    let (label, count) = connected_components(g);
    let mut sizes = vec![0usize; count];
    for &l in &label {
        sizes[l] += 1;
    }
    // Ties go to the lowest label, i.e. the component with the smallest id.
    let largest = (0..count)
        .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
        .unwrap();
    let members: Vec<NodeId> = g.nodes().filter(|&v| label[v] == largest).collect();

    let sample = 100usize.max((n as f64).sqrt().ceil() as usize);
    let approximate = !exact && sample < members.len();
    let diameter = if approximate {
        let step = members.len() as f64 / sample as f64;
        let roots: Vec<NodeId> = (0..sample)
            .map(|i| members[(i as f64 * step) as usize])
            .collect();
        let (_, far) = bfs_far(g, roots[0], &mut Vec::new(), &mut VecDeque::new());
        let sampled = max_eccentricity(g, &roots);
        sampled.max(eccentricity(g, far))
    } else {
        max_eccentricity(g, &members)
    };

    Ok(GraphMetrics {
        nodes: n,
        edges: g.edge_count(),
        average_degree: 2.0 * g.edge_count() as f64 / n as f64,
        diameter,
        approximate,
        is_connected: count == 1,
    })
}

fn max_eccentricity(g: &Graph, roots: &[NodeId]) -> usize {
    roots
        .par_iter()
        .map_init(
            || (Vec::new(), VecDeque::new()),
            |(dist, queue), &r| bfs_far(g, r, dist, queue).0,
        )
        .max()
        .unwrap_or(0)
}
