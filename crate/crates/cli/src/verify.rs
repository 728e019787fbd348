//! The full verification battery for one `n`: closed-form counts against
//! brute force, the bijection against both enumerated sets, and (for
//! `n >= 2`) the shortest-win analysis of the game.

use pfhanoi_core::bijection::{self, BijectionReport};
use pfhanoi_core::enumeration::{self, CountReport, EnumerationBudget};
use pfhanoi_core::search::{self, OptimalityReport, SearchBudget};
use pfhanoi_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

use crate::format::{BijectionReportJson, CountReportJson, OptimalityReportJson};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub n: usize,
    pub counts: Vec<CountReport>,
    pub bijection: BijectionReport,
    pub hanoi: Option<OptimalityReport>,
    pub mismatches: Vec<Mismatch>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "passed": self.passed(),
            "counts": self.counts.iter().map(CountReportJson::from).collect::<Vec<_>>(),
            "bijection": BijectionReportJson::from(&self.bijection),
            "hanoi": self.hanoi.as_ref().map(OptimalityReportJson::from),
            "mismatches": self.mismatches,
        })
    }
}

fn expect(mismatches: &mut Vec<Mismatch>, check: &str, expected: Value, actual: Value) {
    if expected != actual {
        mismatches.push(Mismatch {
            check: check.to_string(),
            expected,
            actual,
        });
    }
}

pub fn run(
    n: usize,
    enumeration_budget: EnumerationBudget,
    search_budget: SearchBudget,
) -> Result<Verification, Error> {
    let bijection = bijection::verify_bijection(n, enumeration_budget)?;
    let hanoi = if n >= 2 {
        Some(search::optimal_strategies_through_ideal(n, search_budget)?)
    } else {
        None
    };
    let counts = enumeration::brute_force_counts(n, enumeration_budget);

    let mut mismatches = Vec::new();
    for report in &counts {
        let check = format!("count {}", report.statistic);
        match &report.brute_force {
            Some(brute) => expect(
                &mut mismatches,
                &check,
                json!(report.closed_form.to_string()),
                json!(brute.to_string()),
            ),
            None => {
                return Err(Error::BudgetExceeded {
                    what: "brute-force count",
                    n,
                    required: n as u128,
                    budget: enumeration_budget.max_pf_n as u128,
                })
            }
        }
    }

    for (check, ok) in [
        ("bijection injective", bijection.injective),
        ("bijection image", bijection.image_matches),
        ("bijection ideal round trip", bijection.ideal_round_trip),
        ("bijection pf round trip", bijection.pf_round_trip),
        ("bijection sizes", bijection.sizes_match),
    ] {
        expect(&mut mismatches, check, json!(true), json!(ok));
    }

    if let Some(h) = &hanoi {
        expect(
            &mut mismatches,
            "min win moves",
            json!(2 * n + 3),
            json!(h.min_win_moves),
        );
        expect(
            &mut mismatches,
            "ideal at level",
            json!(n + 1),
            json!(h.ideal_at_level),
        );
        expect(
            &mut mismatches,
            "ideal distance to end",
            json!([n + 2]),
            json!(h.ideal_distances_to_end),
        );
        expect(
            &mut mismatches,
            "every shortest win through one ideal state",
            json!(h.shortest_wins.to_string()),
            json!(h.wins_through_ideal.to_string()),
        );
        for (check, ok) in [
            ("flag a", h.flags.a),
            ("flag b", h.flags.b),
            ("flag c", h.flags.c),
        ] {
            expect(&mut mismatches, check, json!(true), json!(ok));
        }
    }

    Ok(Verification {
        n,
        counts,
        bijection,
        hanoi,
        mismatches,
    })
}
