//! Text and JSON encodings.
//!
//! Vectors are written as comma-separated integers (`3,1,1,3,2`) or as JSON
//! arrays; both are accepted on input. Preference vectors are 1-indexed,
//! states 0-indexed. Exact counts are JSON strings so that no consumer
//! rounds them through a float.

use pfhanoi_core::bijection::{BijectionRecord, BijectionReport};
use pfhanoi_core::enumeration::{CountReport, Statistic};
use pfhanoi_core::search::{OptimalityReport, Strategy};
use pfhanoi_core::{HanoiMove, HanoiState, ParkingOutcome, PreferenceVector};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty vector")]
    Empty,
    #[error("entry {position} ({token:?}) is not a non-negative integer")]
    BadInteger { position: usize, token: String },
}

/// Parses `"3,1,1,3,2"` or `"[3, 1, 1, 3, 2]"`.
pub fn parse_vector(text: &str) -> Result<Vec<u32>, ParseError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    inner
        .split(',')
        .enumerate()
        .map(|(i, token)| {
            let token = token.trim();
            token.parse().map_err(|_| ParseError::BadInteger {
                position: i + 1,
                token: token.to_string(),
            })
        })
        .collect()
}

pub fn csv(items: &[u32]) -> String {
    items
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub assignment: Option<Vec<u32>>,
    pub displacements: Option<Vec<u32>>,
    pub total_displacement: Option<u64>,
    pub lucky_count: Option<usize>,
    pub failed_car: Option<usize>,
}

impl From<&ParkingOutcome> for OutcomeJson {
    fn from(outcome: &ParkingOutcome) -> Self {
        match outcome {
            ParkingOutcome::Parked(p) => Self {
                assignment: Some(p.assignment().to_vec()),
                displacements: Some(p.displacements().to_vec()),
                total_displacement: Some(p.total_displacement()),
                lucky_count: Some(p.lucky_count()),
                failed_car: None,
            },
            ParkingOutcome::Failed { car } => Self {
                assignment: None,
                displacements: None,
                total_displacement: None,
                lucky_count: None,
                failed_car: Some(*car),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveJson {
    pub disk: u32,
    pub from: u32,
    pub to: u32,
}

impl From<HanoiMove> for MoveJson {
    fn from(m: HanoiMove) -> Self {
        Self {
            disk: m.disk,
            from: m.from,
            to: m.to,
        }
    }
}

impl From<MoveJson> for HanoiMove {
    fn from(m: MoveJson) -> Self {
        HanoiMove::new(m.disk, m.from, m.to)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyJson {
    pub n: usize,
    pub moves: Vec<MoveJson>,
    /// Move number after which the game is in an ideal state.
    pub ideal_after_move: Option<usize>,
    pub ideal_state: Option<Vec<u32>>,
}

impl From<&Strategy> for StrategyJson {
    fn from(s: &Strategy) -> Self {
        let ideal_after_move = s.ideal_moves().first().copied();
        Self {
            n: s.states()[0].n(),
            moves: s.moves().iter().map(|&m| m.into()).collect(),
            ideal_after_move,
            ideal_state: ideal_after_move.map(|i| s.states()[i].pegs().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRecordJson {
    pub n: usize,
    pub ideal: Vec<u32>,
    pub pf: Vec<u32>,
    pub j: u32,
}

impl From<&BijectionRecord> for BijectionRecordJson {
    fn from(r: &BijectionRecord) -> Self {
        Self {
            n: r.n,
            ideal: r.ideal.pegs().to_vec(),
            pf: r.pf.as_slice().to_vec(),
            j: r.j,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReportJson {
    pub n: usize,
    /// `all_pf`, `pf_by_displacement` or `ideal_states`.
    pub statistic: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    pub closed_form: String,
    pub brute_force: Option<String>,
    pub method: Option<String>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

impl From<&CountReport> for CountReportJson {
    fn from(r: &CountReport) -> Self {
        let (statistic, d) = match r.statistic {
            Statistic::AllParkingFunctions => ("all_pf", None),
            Statistic::Displacement(d) => ("pf_by_displacement", Some(d)),
            Statistic::IdealStates => ("ideal_states", None),
        };
        Self {
            n: r.n,
            statistic: statistic.to_string(),
            d,
            closed_form: r.closed_form.to_string(),
            brute_force: r.brute_force.as_ref().map(ToString::to_string),
            method: r.method.map(|m| m.to_string()),
            matches: r.matches(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsJson {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityReportJson {
    pub n: usize,
    pub ideal_count: usize,
    pub min_win_moves: u32,
    pub ideal_at_level: Option<u32>,
    pub flags: FlagsJson,
    pub shortest_wins: String,
    pub wins_through_ideal: String,
    pub states_searched: usize,
}

impl From<&OptimalityReport> for OptimalityReportJson {
    fn from(r: &OptimalityReport) -> Self {
        Self {
            n: r.n,
            ideal_count: r.ideal_count,
            min_win_moves: r.min_win_moves,
            ideal_at_level: r.ideal_at_level,
            flags: FlagsJson {
                a: r.flags.a,
                b: r.flags.b,
                c: r.flags.c,
            },
            shortest_wins: r.shortest_wins.to_string(),
            wins_through_ideal: r.wins_through_ideal.to_string(),
            states_searched: r.states_searched,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReportJson {
    pub n: usize,
    pub ideal_count: usize,
    pub pf_count: usize,
    pub lah_count: String,
    pub injective: bool,
    pub image_matches: bool,
    pub ideal_round_trip: bool,
    pub pf_round_trip: bool,
    pub sizes_match: bool,
}

impl From<&BijectionReport> for BijectionReportJson {
    fn from(r: &BijectionReport) -> Self {
        Self {
            n: r.n,
            ideal_count: r.ideal_count,
            pf_count: r.pf_count,
            lah_count: r.lah_count.to_string(),
            injective: r.injective,
            image_matches: r.image_matches,
            ideal_round_trip: r.ideal_round_trip,
            pf_round_trip: r.pf_round_trip,
            sizes_match: r.sizes_match,
        }
    }
}

/// JSON array form of a preference vector.
pub fn preferences_json(alpha: &PreferenceVector) -> serde_json::Value {
    serde_json::json!(alpha.as_slice())
}

/// JSON array form of a state.
pub fn state_json(state: &HanoiState) -> serde_json::Value {
    serde_json::json!(state.pegs())
}
