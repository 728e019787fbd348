//! Human-readable boards and Graphviz output.

use std::fmt::Write as _;

use pfhanoi_core::hanoi;
use pfhanoi_core::parking::ParkingOutcome;
use pfhanoi_core::search::OpeningEdge;
use pfhanoi_core::{HanoiState, PreferenceVector};

/// Draws pegs `0..=n` left to right, each disk as a token of width
/// `2d + 1` centred on its peg, smallest disk on top.
pub fn board(state: &HanoiState) -> String {
    let n = state.n();
    let width = 2 * n + 3;
    let stacks: Vec<Vec<u32>> = (0..=n as u32)
        .map(|peg| state.disks_on(peg).collect())
        .collect();
    let height = stacks.iter().map(Vec::len).max().unwrap_or(0) + 1;

    let mut lines = Vec::with_capacity(height + 2);
    for row in 0..height {
        let mut line = String::new();
        for stack in &stacks {
            // stacks are listed top first; align them to the bottom row
            let offset = height - stack.len();
            let cell = if row >= offset {
                disk_token(stack[row - offset])
            } else {
                "|".to_string()
            };
            let _ = write!(line, "{cell:^width$}");
        }
        lines.push(line.trim_end().to_string());
    }
    lines.push("-".repeat(width * (n + 1)));
    let mut labels = String::new();
    for peg in 0..=n {
        let _ = write!(labels, "{:^width$}", format!("peg {peg}"));
    }
    lines.push(labels.trim_end().to_string());
    lines.join("\n")
}

fn disk_token(disk: u32) -> String {
    let side = "=".repeat(disk as usize);
    format!("{side}{disk}{side}")
}

pub fn parking_table(alpha: &PreferenceVector, outcome: &ParkingOutcome) -> String {
    let mut out = String::from("car  pref  spot  bumped");
    match outcome {
        ParkingOutcome::Parked(p) => {
            for (i, (&pref, (&spot, &k))) in alpha
                .as_slice()
                .iter()
                .zip(p.assignment().iter().zip(p.displacements()))
                .enumerate()
            {
                let _ = write!(out, "\n{:<4} {:<5} {:<5} {}", i + 1, pref, spot, k);
            }
            let _ = write!(
                out,
                "\ndisplacement {}, lucky cars {}",
                p.total_displacement(),
                p.lucky_count()
            );
        }
        ParkingOutcome::Failed { car } => {
            let _ = write!(
                out,
                "\ncar {car} (prefers spot {}) finds no free spot",
                alpha.preference(*car)
            );
        }
    }
    out
}

/// Graphviz digraph of the opening moves, ideal states drawn with a double
/// border.
pub fn opening_dot(n: usize, edges: &[OpeningEdge]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph opening_n{n} {{");
    out.push_str("  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n");
    let mut ideal: Vec<&HanoiState> = edges
        .iter()
        .map(|e| &e.to)
        .filter(|s| hanoi::is_ideal_state(s))
        .collect();
    ideal.sort();
    ideal.dedup();
    for s in ideal {
        let _ = writeln!(out, "  \"{s}\" [peripheries=2];");
    }
    for e in edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"disk {} {}->{}\"];",
            e.from, e.to, e.mv.disk, e.mv.from, e.mv.to
        );
    }
    out.push('}');
    out
}
