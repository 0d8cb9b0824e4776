use std::path::Path;

use cascadia::rng::stream;
use cascadia::{find_dominant_strategy_equilibrium, find_pure_nash, GameMatrix};
use rand::Rng;

fn fixture() -> GameMatrix {
    GameMatrix::load(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/collaboration_matrix.json"))
        .unwrap()
}

/// Every profile, checked against every unilateral deviation.
fn nash_oracle(m: &GameMatrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let stable_row = (0..m.rows()).all(|d| m.cells[d][c][0] <= m.cells[r][c][0]);
            let stable_col = (0..m.cols()).all(|d| m.cells[r][d][1] <= m.cells[r][c][1]);
            if stable_row && stable_col {
                out.push((r, c));
            }
        }
    }
    out
}

/// Lowest-index strategy that is a weak best reply to every opposing strategy.
fn dominant_oracle(m: &GameMatrix) -> Option<(usize, usize)> {
    let row = (0..m.rows()).find(|&r| {
        (0..m.cols()).all(|c| (0..m.rows()).all(|d| m.cells[d][c][0] <= m.cells[r][c][0]))
    })?;
    let col = (0..m.cols()).find(|&c| {
        (0..m.rows()).all(|r| (0..m.cols()).all(|d| m.cells[r][d][1] <= m.cells[r][c][1]))
    })?;
    Some((row, col))
}

#[test]
fn fixture_matches_published_cells() {
    let m = fixture();
    assert_eq!(m.rows(), 3);
    assert_eq!(m.cols(), 3);
    assert_eq!(
        m.row_strategies,
        ["single-discount", "degree-discount", "highest-degree"]
    );
    assert_eq!(m.cells[0][0], [3380.0, 5237.0]);
    assert_eq!(m.cells[2][2], [3680.0, 4940.0]);
    // The second company leads in every cell.
    assert!(m.cells.iter().flatten().all(|[a, b]| b > a));
}

#[test]
fn fixture_equilibria() {
    let m = fixture();
    assert_eq!(find_dominant_strategy_equilibrium(&m), None);
    assert_eq!(find_pure_nash(&m), vec![(2, 1)]);
}

#[test]
fn detectors_agree_with_brute_force_on_random_games() {
    let mut rng = stream(11, &[]);
    let mut with_ne = 0;
    for _ in 0..1000 {
        // Small payoff range so ties and dominance both show up.
        let cells: Vec<Vec<[f64; 2]>> = (0..3)
            .map(|_| {
                (0..3)
                    .map(|_| [rng.random_range(0..5) as f64, rng.random_range(0..5) as f64])
                    .collect()
            })
            .collect();
        let m = GameMatrix::from_cells(cells).unwrap();
        let ne = find_pure_nash(&m);
        assert_eq!(ne, nash_oracle(&m));
        let dom = find_dominant_strategy_equilibrium(&m);
        assert_eq!(dom, dominant_oracle(&m));
        if let Some(p) = dom {
            assert!(
                ne.contains(&p),
                "dominant profile {p:?} must be an equilibrium"
            );
        }
        with_ne += usize::from(!ne.is_empty());
    }
    assert!(with_ne > 0);
}

#[test]
fn single_profile_is_both_equilibria() {
    let m = GameMatrix::from_cells(vec![vec![[1.0, 2.0]]]).unwrap();
    assert_eq!(find_dominant_strategy_equilibrium(&m), Some((0, 0)));
    assert_eq!(find_pure_nash(&m), vec![(0, 0)]);
}

#[test]
fn json_round_trip_preserves_fixture() {
    let m = fixture();
    assert_eq!(GameMatrix::from_json(&m.to_json()).unwrap(), m);
}
