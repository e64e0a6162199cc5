//! Three reference 2x2x2 games, built in code. The same games ship as JSON
//! under `fixtures/` for the CLI.

use crate::game::Game;
use crate::rational::{int, Rational};

fn build(names: [&str; 3], rows: [[i64; 3]; 8]) -> Game {
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| int(v)).collect())
        .collect();
    Game::new(3, rows)
        .and_then(|g| g.with_players(names.iter().map(|s| s.to_string()).collect()))
        .expect("fixture tables are well formed")
}

/// No player can influence their own payoff; the game has no Berge
/// equilibrium of any kind, while every profile is a Nash equilibrium.
pub fn no_influence() -> Game {
    build(
        ["A", "B", "C"],
        [
            [2, 1, 0], // A1 B1 C1
            [1, 2, 0], // A1 B1 C2
            [1, 1, 1], // A1 B2 C1
            [0, 2, 1], // A1 B2 C2
            [2, 0, 1], // A2 B1 C1
            [1, 1, 1], // A2 B1 C2
            [1, 0, 2], // A2 B2 C1
            [0, 1, 2], // A2 B2 C2
        ],
    )
}

/// Unique completely mixed Berge equilibrium at (1/2, 1/3, 3/5).
pub fn unique_mixed() -> Game {
    build(
        ["A", "B", "C"],
        [
            [7, 5, 2],
            [1, 1, -3],
            [4, 2, 0],
            [8, 4, 0],
            [3, 7, -4],
            [9, 3, 6],
            [6, 1, 6],
            [2, 3, -9],
        ],
    )
}

/// Two sportsmen (F, S) and their trainer (T). One pure Berge equilibrium
/// plus three mixed-type families.
pub fn sportsmen_trainer() -> Game {
    build(
        ["F", "S", "T"],
        [
            [2, 2, 2], // F1 S1 T1
            [1, 1, 1], // F1 S1 T2
            [2, 3, 2], // F1 S2 T1
            [1, 4, 3], // F1 S2 T2
            [3, 2, 2], // F2 S1 T1
            [4, 1, 3], // F2 S1 T2
            [3, 3, 2], // F2 S2 T1
            [4, 4, 2], // F2 S2 T2
        ],
    )
}
