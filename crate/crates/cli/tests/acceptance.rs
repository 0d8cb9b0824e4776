//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every tolerance is pinned below.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use cascadia::analysis::momentum_inequality_check_second;
use cascadia::experiments::{
    exhaustive_reduction_oracle, run_product_vs_budget, ExperimentConfig, SweepResult, Topology,
    BUDGET, PRODUCT,
};
use cascadia::graph::generate_dense;
use cascadia::rng::{stream, StreamRng};
use cascadia::{
    cascade_step, dense_first_step_probability, dense_probability_bounds,
    find_dominant_strategy_equilibrium, find_pure_nash, momentum_inequality_check,
    node_activation_distribution, AsymmetricWeightedCascade, CascadeState, Competitor,
    DenseNetworkConfig, GameMatrix, Graph, Player, SeedAssignment,
};
use rand::Rng;

const MASTER_SEED: u64 = 20_240_601;

const FIDELITY_SAMPLES: usize = 100_000;
const FIDELITY_TOL: f64 = 0.01;
const ORACLE_FORMULA_TOL: f64 = 1e-12;
const NORMALIZATION_INSTANCES: usize = 10_000;
const NORMALIZATION_SLACK: f64 = 1e-12;
const SYMMETRY_EXACT_TOL: f64 = 1e-12;
const SYMMETRY_TRIALS: usize = 10_000;
const SYMMETRY_MC_TOL: f64 = 0.01;
const BOUNDS_LOWER: f64 = 0.01571;
const BOUNDS_UPPER: f64 = 0.02128;
// The quoted bounds are truncated, not rounded, to five decimals.
const BOUNDS_REPORTED_DIGITS_TOL: f64 = 1e-5;
const SWEEP_SEED: u64 = 42;
const SWEEP_TRIALS: usize = 10;
const R_SQUARED_MIN: f64 = 0.95;
const MOMENTUM_TRIPLES: usize = 100_000;
const REDUCTION_MAX_NODES: usize = 8;
const REDUCTION_EXHAUSTIVE_UP_TO: usize = 6;
const REDUCTION_RANDOM_PER_SIZE: usize = 400;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("formula fidelity (Monte Carlo oracle)", formula_fidelity),
        ("probability normalization", normalization),
        ("dense-network symmetry", dense_symmetry),
        ("bounds containment", bounds_containment),
        ("qualitative sweep orderings + linearity", sweeps),
        ("momentum inequality", momentum),
        ("stored matrix equilibria", stored_matrix),
        ("reduction vs dominating-set brute force", reduction),
        ("sweep determinism across thread counts", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name} [{secs:.1}s]: {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criterion/criteria failed");
        ExitCode::FAILURE
    }
}

fn random_graph(n: usize, p: f64, rng: &mut StreamRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_score(rng: &mut StreamRng) -> f64 {
    if rng.random_bool(0.1) {
        0.0
    } else {
        rng.random_range(0.05..=1.0)
    }
}

fn random_owners(n: usize, players: usize, rng: &mut StreamRng) -> Vec<Option<usize>> {
    (0..n)
        .map(|_| rng.random_bool(0.4).then(|| rng.random_range(0..players)))
        .collect()
}

/// Activation probabilities written directly from the model definition:
/// q_i = p_i / P * e_i / E * (1 - (1 - 1/deg)^E), P summed over adjacent players.
fn formula_oracle(g: &Graph, owners: &[Option<usize>], scores: &[f64], v: usize) -> Vec<f64> {
    let mut e = vec![0u32; scores.len()];
    for u in g.neighbors(v) {
        if let Some(i) = owners[u] {
            e[i] += 1;
        }
    }
    let total: u32 = e.iter().sum();
    let p_total: f64 = (0..scores.len())
        .filter(|&i| e[i] > 0)
        .map(|i| scores[i])
        .sum();
    if total == 0 || p_total == 0.0 {
        return vec![0.0; scores.len()];
    }
    let reach = 1.0 - (1.0 - 1.0 / g.degree(v) as f64).powi(total as i32);
    (0..scores.len())
        .map(|i| scores[i] / p_total * e[i] as f64 / total as f64 * reach)
        .collect()
}

fn formula_fidelity() -> Check {
    let mut rng = stream(MASTER_SEED, &[1]);
    let mut instances = 0;
    let mut worst_mc = 0.0f64;
    for n in 2..=6 {
        for _ in 0..8 {
            let g = random_graph(n, 0.6, &mut rng);
            let k = rng.random_range(1..=2);
            let scores: Vec<f64> = (0..k).map(|_| random_score(&mut rng)).collect();
            let players: Vec<Player> = scores.iter().map(|&s| Player::new(1, s).unwrap()).collect();
            let owners = random_owners(n, k, &mut rng);
            let state = CascadeState::from_owners(&g, &owners, k).map_err(|e| e.to_string())?;
            let open: Vec<usize> = (0..n).filter(|&v| owners[v].is_none()).collect();
            if open.is_empty() {
                continue;
            }
            instances += 1;
            let mut expected = Vec::new();
            for &v in &open {
                let dist = node_activation_distribution(&g, &state, v, &players)
                    .map_err(|e| e.to_string())?;
                let oracle = formula_oracle(&g, &owners, &scores, v);
                for (a, b) in dist.activation.iter().zip(&oracle) {
                    ensure((a - b).abs() <= ORACLE_FORMULA_TOL, || {
                        format!("node {v} on {n} nodes: engine {a} vs formula {b}")
                    })?;
                }
                let mut row = dist.activation.clone();
                row.push(dist.stay());
                expected.push(row);
            }
            let mut counts = vec![vec![0usize; k + 1]; open.len()];
            for _ in 0..FIDELITY_SAMPLES {
                let mut s = state.clone();
                cascade_step(&g, &mut s, &players, &AsymmetricWeightedCascade, &mut rng)
                    .map_err(|e| e.to_string())?;
                for (j, &v) in open.iter().enumerate() {
                    counts[j][s.owner(v).unwrap_or(k)] += 1;
                }
            }
            for (j, &v) in open.iter().enumerate() {
                for o in 0..=k {
                    let freq = counts[j][o] as f64 / FIDELITY_SAMPLES as f64;
                    let diff = (freq - expected[j][o]).abs();
                    worst_mc = worst_mc.max(diff);
                    ensure(diff <= FIDELITY_TOL, || {
                        format!(
                            "node {v} outcome {o}: empirical {freq} vs exact {}",
                            expected[j][o]
                        )
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "{instances} instances x {FIDELITY_SAMPLES} steps, worst deviation {worst_mc:.4} (tol {FIDELITY_TOL})"
    ))
}

fn normalization() -> Check {
    let mut rng = stream(MASTER_SEED, &[2]);
    let mut nodes_checked = 0usize;
    for _ in 0..NORMALIZATION_INSTANCES {
        let n = rng.random_range(1..=16);
        let g = random_graph(n, rng.random_range(0.1..=1.0), &mut rng);
        let k = rng.random_range(1..=4);
        let players: Vec<Player> = (0..k)
            .map(|_| Player::new(1, random_score(&mut rng)).unwrap())
            .collect();
        let owners = random_owners(n, k, &mut rng);
        let state = CascadeState::from_owners(&g, &owners, k).map_err(|e| e.to_string())?;
        for v in (0..n).filter(|&v| owners[v].is_none()) {
            let dist =
                node_activation_distribution(&g, &state, v, &players).map_err(|e| e.to_string())?;
            let sum: f64 = dist.activation.iter().sum();
            ensure(dist.activation.iter().all(|&q| q >= 0.0), || {
                format!("negative probability {:?}", dist.activation)
            })?;
            ensure(sum <= 1.0 + NORMALIZATION_SLACK, || {
                format!("sum {sum} exceeds 1")
            })?;
            nodes_checked += 1;
        }
    }
    Ok(format!(
        "{NORMALIZATION_INSTANCES} instances, {nodes_checked} node distributions"
    ))
}

fn dense_symmetry() -> Check {
    let n = 1000;
    let (b1, b2) = (n / 50, n / 10);
    let players = [Player::new(b1, 1.0).unwrap(), Player::new(b2, 0.2).unwrap()];
    let cfg = DenseNetworkConfig::with_budgets(n, b1 as f64, b2 as f64, 1.0, 0.2)
        .map_err(|e| e.to_string())?;
    let q1 = dense_first_step_probability(&cfg, Competitor::First).map_err(|e| e.to_string())?;
    let q2 = dense_first_step_probability(&cfg, Competitor::Second).map_err(|e| e.to_string())?;
    ensure((q1 - q2).abs() <= SYMMETRY_EXACT_TOL, || {
        format!("closed forms {q1} vs {q2}")
    })?;

    let g = generate_dense(n).map_err(|e| e.to_string())?;
    let seeds = vec![(0..b1).collect(), (b1..b1 + b2).collect()];
    let assignment = SeedAssignment::disjoint(seeds).map_err(|e| e.to_string())?;
    let state = CascadeState::new(&g, &assignment).map_err(|e| e.to_string())?;
    let engine =
        node_activation_distribution(&g, &state, n - 1, &players).map_err(|e| e.to_string())?;
    for (got, want) in engine.activation.iter().zip([q1, q2]) {
        ensure((got - want).abs() <= SYMMETRY_EXACT_TOL, || {
            format!("engine {got} vs closed form {want}")
        })?;
    }

    let mut rng = stream(MASTER_SEED, &[3]);
    let open = n - b1 - b2;
    let mut joined = [0usize; 2];
    for _ in 0..SYMMETRY_TRIALS {
        let mut s = state.clone();
        cascade_step(&g, &mut s, &players, &AsymmetricWeightedCascade, &mut rng)
            .map_err(|e| e.to_string())?;
        let counts = s.influenced_counts();
        joined[0] += counts[0] - b1;
        joined[1] += counts[1] - b2;
    }
    let draws = (open * SYMMETRY_TRIALS) as f64;
    let (r1, r2) = (joined[0] as f64 / draws, joined[1] as f64 / draws);
    ensure((r1 - r2).abs() <= SYMMETRY_MC_TOL, || {
        format!("rates {r1} vs {r2}")
    })?;
    ensure(
        (r1 - q1).abs() <= SYMMETRY_MC_TOL && (r2 - q2).abs() <= SYMMETRY_MC_TOL,
        || format!("rates ({r1}, {r2}) far from closed form {q1}"),
    )?;
    Ok(format!(
        "closed form {q1:.12} for both; Monte Carlo rates {r1:.5} / {r2:.5} over {SYMMETRY_TRIALS} trials"
    ))
}

fn bounds_containment() -> Check {
    let (c, m, p1, p2) = (0.02, 5.0, 1.0, 0.2);
    // Oracle: the bounds written out for these parameters.
    let exponent = (m + 1.0) * c;
    let mut checked = 0;
    for (who, share, score) in [
        (Competitor::First, 1.0 / (m + 1.0), p1 / (p1 + p2)),
        (Competitor::Second, m / (m + 1.0), p2 / (p1 + p2)),
    ] {
        let b = dense_probability_bounds(c, m, p1, p2, who).map_err(|e| e.to_string())?;
        let lower = score * share * (1.0 - (-exponent).exp());
        let upper = score * share * (1.0 - 4f64.powf(-exponent));
        ensure(
            (b.lower - lower).abs() <= 1e-15 && (b.upper - upper).abs() <= 1e-15,
            || format!("bounds {b:?} vs oracle [{lower}, {upper}]"),
        )?;
        ensure(
            (b.lower - BOUNDS_LOWER).abs() <= BOUNDS_REPORTED_DIGITS_TOL
                && (b.upper - BOUNDS_UPPER).abs() <= BOUNDS_REPORTED_DIGITS_TOL,
            || format!("bounds {b:?} not near [{BOUNDS_LOWER}, {BOUNDS_UPPER}]"),
        )?;
        for n in (1000..=100_000).step_by(1000) {
            let cfg =
                DenseNetworkConfig::proportional(n, c, m, p1, p2).map_err(|e| e.to_string())?;
            let q = dense_first_step_probability(&cfg, who).map_err(|e| e.to_string())?;
            ensure(b.lower <= q && q <= b.upper, || {
                format!("n={n} {who:?}: {q} outside [{}, {}]", b.lower, b.upper)
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} (n, player) values inside [{BOUNDS_LOWER}, {BOUNDS_UPPER}]"
    ))
}

fn sweep_for(topology: Topology) -> Result<SweepResult, String> {
    let cfg = ExperimentConfig {
        master_seed: SWEEP_SEED,
        trials_per_point: SWEEP_TRIALS,
        sizes: (500..=4500).step_by(500).collect(),
        topology,
        step_cap: None,
    };
    run_product_vs_budget(&cfg).map_err(|e| e.to_string())
}

fn gap(r: &SweepResult, size: usize) -> f64 {
    r.mean(size, BUDGET).unwrap() - r.mean(size, PRODUCT).unwrap()
}

fn sweeps() -> Check {
    let ngon = sweep_for(Topology::Ngon)?;
    let tree = sweep_for(Topology::Tree)?;
    let dense = sweep_for(Topology::Dense)?;
    let mut failures = Vec::new();
    for size in (500..=4500).step_by(500) {
        if gap(&dense, size) >= 0.0 {
            failures.push(format!("dense {size}: product does not lead"));
        }
        if gap(&ngon, size) <= 0.0 {
            failures.push(format!("ngon {size}: budget does not lead"));
        }
        if gap(&tree, size) < 0.0 {
            failures.push(format!("tree {size}: budget behind product"));
        }
        if gap(&tree, size) >= gap(&ngon, size) {
            failures.push(format!(
                "size {size}: tree gap {:.1} not below ngon gap {:.1}",
                gap(&tree, size),
                gap(&ngon, size)
            ));
        }
    }
    if gap(&ngon, 4500) <= gap(&ngon, 500) {
        failures.push("ngon gap does not grow from 500 to 4500".into());
    }
    let mut r2 = Vec::new();
    for (name, r) in [("ngon", &ngon), ("tree", &tree), ("dense", &dense)] {
        for fit in r.fits().map_err(|e| e.to_string())? {
            if fit.fit.r_squared < R_SQUARED_MIN {
                failures.push(format!(
                    "{name}/{}: r^2 {:.4}",
                    fit.player, fit.fit.r_squared
                ));
            }
            r2.push(format!("{name}/{} {:.4}", fit.player, fit.fit.r_squared));
        }
    }
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    let margin = (500..=4500)
        .step_by(500)
        .map(|s| gap(&ngon, s) - gap(&tree, s))
        .fold(f64::INFINITY, f64::min);
    Ok(format!(
        "orderings hold at all sizes (min ngon-tree gap margin {margin:.1}); r^2: {}",
        r2.join(", ")
    ))
}

fn momentum() -> Check {
    let mut rng = stream(MASTER_SEED, &[7]);
    for _ in 0..MOMENTUM_TRIPLES {
        let b1 = rng.random_range(1..10_000) as f64;
        let b2 = b1 + rng.random_range(1..100_000) as f64;
        let x = rng.random_range(1..100_000) as f64;
        let first = momentum_inequality_check(b1, b2, x).map_err(|e| e.to_string())?;
        let second = momentum_inequality_check_second(b1, b2, x).map_err(|e| e.to_string())?;
        ensure(first && second, || {
            format!("fails at b1={b1}, b2={b2}, x={x}")
        })?;
    }
    Ok(format!("{MOMENTUM_TRIPLES} triples, both forms hold"))
}

fn fixture_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/collaboration_matrix.json")
}

/// All cells where each payoff is a (weak) best reply to the other strategy.
fn brute_force_nash(m: &GameMatrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let row_ok = (0..m.rows()).all(|r2| m.cells[r2][c][0] <= m.cells[r][c][0]);
            let col_ok = (0..m.cols()).all(|c2| m.cells[r][c2][1] <= m.cells[r][c][1]);
            if row_ok && col_ok {
                out.push((r, c));
            }
        }
    }
    out
}

fn stored_matrix() -> Check {
    let m = GameMatrix::load(fixture_path()).map_err(|e| e.to_string())?;
    ensure(find_dominant_strategy_equilibrium(&m).is_none(), || {
        "found a dominant-strategy equilibrium".into()
    })?;
    let ne = find_pure_nash(&m);
    ensure(ne == vec![(2, 1)], || format!("pure equilibria {ne:?}"))?;
    ensure(brute_force_nash(&m) == ne, || {
        "brute force disagrees".into()
    })?;
    ensure(m.cells[2][1] == [3415.0, 5222.0], || {
        "unexpected equilibrium cell".into()
    })?;

    let out = Command::new(env!("CARGO_BIN_EXE_cascadia"))
        .args(["game-matrix", "--analyze-only", "--matrix-file"])
        .arg(fixture_path())
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("cli exit {:?}", out.status)
    })?;
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(report["dominant_strategy_equilibrium"].is_null(), || {
        "cli dominant".into()
    })?;
    let pure = report["pure_nash"].as_array().cloned().unwrap_or_default();
    ensure(
        pure.len() == 1 && pure[0]["row"] == 2 && pure[0]["col"] == 1,
        || format!("cli pure equilibria {pure:?}"),
    )?;
    Ok("no dominant-strategy equilibrium; unique pure equilibrium (highest-degree, degree-discount)".into())
}

fn dominating_set_exists(g: &Graph, k: usize) -> bool {
    let n = g.node_count();
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(1u32 << v, |m, u| m | (1 << u)))
        .collect();
    let full = (1u32 << n) - 1;
    (0u32..=full).any(|s| {
        s.count_ones() as usize <= k
            && (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .fold(0, |m, v| m | closed[v])
                == full
    })
}

fn is_connected(g: &Graph) -> bool {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn reduction() -> Check {
    let mut corpus = Vec::new();
    for n in 1..=REDUCTION_EXHAUSTIVE_UP_TO {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            if is_connected(&g) {
                corpus.push(g);
            }
        }
    }
    let mut rng = stream(MASTER_SEED, &[9]);
    for n in REDUCTION_EXHAUSTIVE_UP_TO + 1..=REDUCTION_MAX_NODES {
        let mut found = 0;
        while found < REDUCTION_RANDOM_PER_SIZE {
            let g = random_graph(n, rng.random_range(0.2..0.7), &mut rng);
            if is_connected(&g) {
                corpus.push(g);
                found += 1;
            }
        }
    }
    let mut yes = 0;
    for g in &corpus {
        for k in 1..=3 {
            let got = exhaustive_reduction_oracle(g, k).map_err(|e| e.to_string())?;
            let want = dominating_set_exists(g, k);
            ensure(got == want, || {
                format!(
                    "k={k} on {:?}: reduction {got}, dominating set {want}",
                    g.edges().collect::<Vec<_>>()
                )
            })?;
            yes += usize::from(got);
        }
    }
    Ok(format!(
        "{} connected graphs x k in 1..=3 agree ({yes} yes-instances)",
        corpus.len()
    ))
}

fn run_sweep_cli(
    threads: &str,
    dir: &Path,
    topology: &str,
    sizes: &str,
) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cascadia"))
        .args([
            "--threads",
            threads,
            "sweep",
            "--topology",
            topology,
            "--sizes",
            sizes,
        ])
        .args(["--trials", "10", "--seed", "7", "--out-dir"])
        .arg(dir)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("sweep failed: {}", String::from_utf8_lossy(&out.stderr))
    })?;
    let mut bytes = std::fs::read(dir.join("trials.csv")).map_err(|e| e.to_string())?;
    bytes.extend(std::fs::read(dir.join("aggregate.csv")).map_err(|e| e.to_string())?);
    Ok(bytes)
}

fn determinism() -> Check {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut compared = 0;
    for (topology, sizes) in [("ngon", "500:2500:500"), ("dense", "200:1000:200")] {
        let runs: Vec<Vec<u8>> = [("1", "a"), ("8", "b"), ("1", "c")]
            .iter()
            .map(|(threads, sub)| {
                run_sweep_cli(
                    threads,
                    &tmp.path().join(topology).join(sub),
                    topology,
                    sizes,
                )
            })
            .collect::<Result<_, _>>()?;
        ensure(runs[0] == runs[1], || {
            format!("{topology}: --threads 1 and 8 differ")
        })?;
        ensure(runs[0] == runs[2], || {
            format!("{topology}: repeated run differs")
        })?;
        compared += runs[0].len();
    }
    Ok(format!(
        "byte-identical CSV across thread counts and reruns ({compared} bytes)"
    ))
}
