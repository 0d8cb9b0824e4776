//! Flag value types. Each parses from and prints back to its command-line
//! spelling, which is also how it is stored in run manifests.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use cascadia::experiments::Topology;
use cascadia::graph::{load_edge_list_file, Graph};
use cascadia::Player;
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GraphSource {
    Generated(Topology, usize),
    EdgeList(PathBuf),
}

impl GraphSource {
    pub fn load(&self, remap: bool) -> Result<Graph, Failure> {
        match self {
            GraphSource::Generated(t, n) => Ok(t.generate(*n)?),
            GraphSource::EdgeList(path) => {
                load_edge_list_file(path, remap).map_err(|e| match Failure::from(e) {
                    Failure::Io(msg) => Failure::Io(format!("{}: {msg}", path.display())),
                    usage => usage,
                })
            }
        }
    }
}

impl FromStr for GraphSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        const VALID: &str = "valid graph sources: ngon:N, tree:N, dense:N, edgelist:PATH";
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("missing ':' in {s:?}; {VALID}"))?;
        if kind == "edgelist" {
            if arg.is_empty() {
                return Err(format!("edgelist needs a path; {VALID}"));
            }
            return Ok(GraphSource::EdgeList(PathBuf::from(arg)));
        }
        let topology: Topology = kind
            .parse()
            .map_err(|_| format!("unknown topology {kind:?}; {VALID}"))?;
        let n = arg
            .parse::<usize>()
            .map_err(|_| format!("node count {arg:?} is not a non-negative integer"))?;
        Ok(GraphSource::Generated(topology, n))
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Generated(t, n) => write!(f, "{t}:{n}"),
            GraphSource::EdgeList(p) => write!(f, "edgelist:{}", p.display()),
        }
    }
}

impl From<GraphSource> for String {
    fn from(g: GraphSource) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for GraphSource {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

/// `budget=B,score=S`
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct PlayerSpec(pub Player);

impl FromStr for PlayerSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (mut budget, mut score) = (None, None);
        for part in s.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value in {part:?}"))?;
            match key.trim() {
                "budget" => {
                    budget = Some(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|e| format!("budget: {e}"))?,
                    )
                }
                "score" => {
                    score = Some(
                        value
                            .trim()
                            .parse::<f64>()
                            .map_err(|e| format!("score: {e}"))?,
                    )
                }
                other => return Err(format!("unknown player field {other:?}")),
            }
        }
        let (Some(budget), Some(score)) = (budget, score) else {
            return Err("a player needs budget=B,score=S".into());
        };
        Player::new(budget, score)
            .map(PlayerSpec)
            .map_err(|e| e.to_string())
    }
}

impl fmt::Display for PlayerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "budget={},score={}", self.0.budget, self.0.product_score)
    }
}

impl From<PlayerSpec> for String {
    fn from(p: PlayerSpec) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for PlayerSpec {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

/// `start:stop:step` (inclusive) or a comma-separated list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Sizes(pub Vec<usize>);

impl FromStr for Sizes {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{t:?} is not a non-negative integer"))
        };
        let sizes: Vec<usize> = if s.contains(':') {
            let parts: Vec<&str> = s.split(':').collect();
            let [start, stop, step] = parts[..] else {
                return Err(format!("expected start:stop:step, got {s:?}"));
            };
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step == 0 {
                return Err("step must be positive".into());
            }
            if stop < start {
                return Err(format!("empty range {s:?}"));
            }
            (start..=stop).step_by(step).collect()
        } else {
            s.split(',').map(num).collect::<Result<_, _>>()?
        };
        if sizes.is_empty() {
            return Err("no sizes given".into());
        }
        if sizes.contains(&0) {
            return Err("size 0 is not a valid graph size".into());
        }
        Ok(Sizes(sizes))
    }
}

impl fmt::Display for Sizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl From<Sizes> for String {
    fn from(s: Sizes) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Sizes {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

/// A fixed master seed, or `random` to draw one from the OS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum SeedArg {
    Fixed(u64),
    Random,
}

pub const DEFAULT_SEED: u64 = 42;

impl Default for SeedArg {
    fn default() -> Self {
        SeedArg::Fixed(DEFAULT_SEED)
    }
}

impl SeedArg {
    pub fn resolve(self) -> u64 {
        match self {
            SeedArg::Fixed(s) => s,
            SeedArg::Random => rand::random(),
        }
    }
}

impl FromStr for SeedArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            return Ok(SeedArg::Random);
        }
        s.parse().map(SeedArg::Fixed).map_err(|_| {
            format!("seed must be an unsigned 64-bit integer or \"random\", got {s:?}")
        })
    }
}

impl fmt::Display for SeedArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedArg::Fixed(s) => write!(f, "{s}"),
            SeedArg::Random => f.write_str("random"),
        }
    }
}

impl From<SeedArg> for String {
    fn from(s: SeedArg) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for SeedArg {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}
