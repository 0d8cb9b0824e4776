use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

/// Reads a whitespace-separated edge list (`u v` per line).
///
/// Blank lines and lines starting with `#` are skipped. Self-loops and
/// repeated edges are dropped. Without `remap` the original ids are kept and
/// the graph spans `0..=max_id`; with `remap` ids are renumbered densely in
/// order of first appearance.
pub fn load_edge_list(reader: impl BufRead, remap: bool) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut max_id: Option<u64> = None;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 2 node ids, found {} tokens", tokens.len()),
            });
        }
        let u = parse_id(tokens[0], lineno)?;
        let v = parse_id(tokens[1], lineno)?;
        max_id = max_id.max(Some(u.max(v)));
        if remap {
            let next = ids.len();
            let u = *ids.entry(u).or_insert(next);
            let next = ids.len();
            let v = *ids.entry(v).or_insert(next);
            edges.push((u, v));
        } else {
            edges.push((to_index(u, lineno)?, to_index(v, lineno)?));
        }
    }

    let node_count = if remap {
        ids.len()
    } else {
        max_id.map_or(0, |m| m as usize + 1)
    };
    Graph::from_edges(node_count, edges)
}

pub fn load_edge_list_file(path: impl AsRef<Path>, remap: bool) -> Result<Graph> {
    let file = File::open(path)?;
    load_edge_list(BufReader::new(file), remap)
}

fn parse_id(token: &str, line: usize) -> Result<u64> {
    match token.parse::<u64>() {
        Ok(id) => Ok(id),
        Err(_) if token.parse::<i64>().is_ok() => Err(Error::Parse {
            line,
            message: format!("negative node id {token}"),
        }),
        Err(_) => Err(Error::Parse {
            line,
            message: format!("node id {token:?} is not an integer"),
        }),
    }
}

fn to_index(id: u64, line: usize) -> Result<usize> {
    if id >= u32::MAX as u64 {
        return Err(Error::Parse {
            line,
            message: format!("node id {id} too large; pass remap to renumber"),
        });
    }
    Ok(id as usize)
}
