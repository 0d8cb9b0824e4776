//! Pure-strategy equilibria of two-player payoff matrices.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bimatrix game: `cells[r][c] = [row player's payoff, column player's payoff]`.
///
/// The JSON layout is
/// `{"row_strategies": [...], "col_strategies": [...], "cells": [[[p1, p2], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameMatrix {
    pub row_strategies: Vec<String>,
    pub col_strategies: Vec<String>,
    pub cells: Vec<Vec<[f64; 2]>>,
}

impl GameMatrix {
    pub fn new(
        row_strategies: Vec<String>,
        col_strategies: Vec<String>,
        cells: Vec<Vec<[f64; 2]>>,
    ) -> Result<Self> {
        let m = GameMatrix {
            row_strategies,
            col_strategies,
            cells,
        };
        m.validate()?;
        Ok(m)
    }

    /// Unlabeled matrix with strategies named by 1-based index.
    pub fn from_cells(cells: Vec<Vec<[f64; 2]>>) -> Result<Self> {
        let rows = cells.len();
        let cols = cells.first().map_or(0, Vec::len);
        let names = |k: usize| (1..=k).map(|i| format!("s{i}")).collect();
        Self::new(names(rows), names(cols), cells)
    }

    pub fn validate(&self) -> Result<()> {
        if self.row_strategies.is_empty() || self.col_strategies.is_empty() {
            return Err(Error::invalid(
                "a game matrix needs at least one strategy per player",
            ));
        }
        if self.cells.len() != self.row_strategies.len() {
            return Err(Error::invalid(format!(
                "{} rows of cells for {} row strategies",
                self.cells.len(),
                self.row_strategies.len()
            )));
        }
        for (r, row) in self.cells.iter().enumerate() {
            if row.len() != self.col_strategies.len() {
                return Err(Error::invalid(format!(
                    "row {r} has {} cells, expected {}",
                    row.len(),
                    self.col_strategies.len()
                )));
            }
            if row.iter().flatten().any(|x| !x.is_finite()) {
                return Err(Error::invalid(format!("row {r} holds a non-finite payoff")));
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.col_strategies.len()
    }

    pub fn row_payoff(&self, r: usize, c: usize) -> f64 {
        self.cells[r][c][0]
    }

    pub fn col_payoff(&self, r: usize, c: usize) -> f64 {
        self.cells[r][c][1]
    }

    /// Whether row `r` is a best response to column `c` (ties count).
    pub fn is_row_best_response(&self, r: usize, c: usize) -> bool {
        (0..self.rows()).all(|other| self.row_payoff(r, c) >= self.row_payoff(other, c))
    }

    pub fn is_col_best_response(&self, r: usize, c: usize) -> bool {
        (0..self.cols()).all(|other| self.col_payoff(r, c) >= self.col_payoff(r, other))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: GameMatrix = serde_json::from_str(text)?;
        m.validate()?;
        Ok(m)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix serializes")
    }
}

/// Profile in which each player's strategy is a (weak) best response to every
/// strategy of the opponent. When several strategies qualify for a player,
/// the lowest index is reported.
pub fn find_dominant_strategy_equilibrium(m: &GameMatrix) -> Option<(usize, usize)> {
    let row = (0..m.rows()).find(|&r| (0..m.cols()).all(|c| m.is_row_best_response(r, c)))?;
    let col = (0..m.cols()).find(|&c| (0..m.rows()).all(|r| m.is_col_best_response(r, c)))?;
    Some((row, col))
}

/// Every cell where both strategies are mutual (weak) best responses, in
/// row-major order.
pub fn find_pure_nash(m: &GameMatrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if m.is_row_best_response(r, c) && m.is_col_best_response(r, c) {
                out.push((r, c));
            }
        }
    }
    out
}
