use super::Graph;
use crate::error::{Error, Result};

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn generate_ngon(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("an n-gon needs n >= 3, got {n}")));
    }
    super::check_node_count(n)?;
    let lists = (0..n)
        .map(|v| {
            let prev = ((v + n - 1) % n) as u32;
            let next = ((v + 1) % n) as u32;
            let mut l = vec![prev, next];
            l.sort_unstable();
            l.dedup();
            l
        })
        .collect();
    Ok(Graph::from_sorted_lists(lists))
}

/// Complete binary tree in level order: node `i` has children `2i + 1` and
/// `2i + 2` when those ids exist.
pub fn generate_balanced_binary_tree(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("a tree needs at least one node"));
    }
    super::check_node_count(n)?;
    let lists = (0..n)
        .map(|v| {
            let mut l = Vec::with_capacity(3);
            if v > 0 {
                l.push(((v - 1) / 2) as u32);
            }
            for child in [2 * v + 1, 2 * v + 2] {
                if child < n {
                    l.push(child as u32);
                }
            }
            l
        })
        .collect();
    Ok(Graph::from_sorted_lists(lists))
}

/// Complete graph `K_n`.
pub fn generate_dense(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("a complete graph needs at least one node"));
    }
    super::check_node_count(n)?;
    Ok(Graph::from_fn(
        n,
        |_| n - 1,
        |v, out| out.extend((0..n as u32).filter(|&u| u as usize != v)),
    ))
}
