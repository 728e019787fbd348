use crate::hanoi::{HanoiMove, IdealViolation, MoveViolation};
use crate::parking::DisplacementOneViolation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("preference vector is empty")]
    EmptyPreferences,

    #[error("car {car} prefers spot {spot}, outside 1..={n}")]
    PreferenceOutOfRange { car: usize, spot: u32, n: usize },

    #[error("the game needs n >= 2, i.e. at least three disks and pegs (got n = {n})")]
    TooFewDisks { n: usize },

    #[error("disk {disk} is on peg {peg}, outside 0..={n}")]
    PegOutOfRange { disk: usize, peg: u32, n: usize },

    #[error("illegal move ({mv}): {reason}")]
    IllegalMove {
        mv: HanoiMove,
        reason: MoveViolation,
    },

    #[error("not a parking function: car {failed_car} cannot park")]
    NotAParkingFunction { failed_car: usize },

    #[error("not an ideal state: {0}")]
    NotIdeal(IdealViolation),

    #[error("not a displacement-one parking function: {0}")]
    NotDisplacementOne(DisplacementOneViolation),

    #[error("{what} for n = {n} needs {required} items, over the budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        n: usize,
        required: u128,
        budget: u128,
    },

    #[error("no closed form is known for parking functions of length {n} with displacement {d}")]
    NoClosedForm { n: usize, d: u64 },
}

impl Error {
    /// True for errors caused by an input outside the data type's domain
    /// (bad lengths, entries out of range) rather than by a set-membership
    /// or budget failure.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::EmptyPreferences
                | Error::PreferenceOutOfRange { .. }
                | Error::TooFewDisks { .. }
                | Error::PegOutOfRange { .. }
        )
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
