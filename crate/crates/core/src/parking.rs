//! Cars parking on a one-way street.
//!
//! Car `i` drives to its preferred spot `a_i` and takes the first free spot
//! at or after it. A preference vector is a parking function when every car
//! finds a spot. The displacement of a car is how far past its preferred
//! spot it parked; the displacement of a parking function is the sum over
//! all cars.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Preferences `(a_1, ..., a_n)` of `n` cars for `n` spots, 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreferenceVector(Vec<u32>);

impl PreferenceVector {
    /// Validates that the vector is non-empty and every entry lies in `1..=n`.
    pub fn new(prefs: Vec<u32>) -> Result<Self> {
        let n = prefs.len();
        if n == 0 {
            return Err(Error::EmptyPreferences);
        }
        if let Some((i, &spot)) = prefs
            .iter()
            .enumerate()
            .find(|&(_, &a)| a == 0 || a as usize > n)
        {
            return Err(Error::PreferenceOutOfRange {
                car: i + 1,
                spot,
                n,
            });
        }
        Ok(Self(prefs))
    }

    pub(crate) fn from_valid(prefs: Vec<u32>) -> Self {
        debug_assert!(Self::new(prefs.clone()).is_ok());
        Self(prefs)
    }

    /// Number of cars, which is also the number of spots.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Preferred spot of car `car` (1-indexed).
    pub fn preference(&self, car: usize) -> u32 {
        self.0[car - 1]
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.n() + 1];
        self.0
            .iter()
            .all(|&a| !core::mem::replace(&mut seen[a as usize], true))
    }
}

impl fmt::Display for PreferenceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.0)
    }
}

pub(crate) fn write_comma_separated(f: &mut fmt::Formatter<'_>, items: &[u32]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Where every car parked, for a preference vector under which all cars park.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parking {
    assignment: Vec<u32>,
    displacements: Vec<u32>,
    total_displacement: u64,
    lucky_count: usize,
}

impl Parking {
    /// Spot taken by each car, 1-indexed; a permutation of `1..=n`.
    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// `k_i`: how many spots past its preference car `i` parked.
    pub fn displacements(&self) -> &[u32] {
        &self.displacements
    }

    pub fn total_displacement(&self) -> u64 {
        self.total_displacement
    }

    /// Cars that parked in their preferred spot.
    pub fn lucky_count(&self) -> usize {
        self.lucky_count
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParkingOutcome {
    Parked(Parking),
    /// Car `car` (1-indexed) found no free spot at or after its preference.
    /// Simulation stops at the first such car.
    Failed {
        car: usize,
    },
}

impl ParkingOutcome {
    pub fn parked(&self) -> Option<&Parking> {
        match self {
            ParkingOutcome::Parked(p) => Some(p),
            ParkingOutcome::Failed { .. } => None,
        }
    }

    pub fn failed_car(&self) -> Option<usize> {
        match self {
            ParkingOutcome::Parked(_) => None,
            ParkingOutcome::Failed { car } => Some(*car),
        }
    }
}

/// Runs the parking process for cars `1..=n` in order.
pub fn park(alpha: &PreferenceVector) -> ParkingOutcome {
    let n = alpha.n();
    // occupied[s] for spots 1..=n; index 0 unused
    let mut occupied = vec![false; n + 1];
    let mut assignment = Vec::with_capacity(n);
    for (i, &pref) in alpha.as_slice().iter().enumerate() {
        let mut spot = pref as usize;
        while spot <= n && occupied[spot] {
            spot += 1;
        }
        if spot > n {
            return ParkingOutcome::Failed { car: i + 1 };
        }
        occupied[spot] = true;
        assignment.push(spot as u32);
    }

    let displacements: Vec<u32> = assignment
        .iter()
        .zip(alpha.as_slice())
        .map(|(&spot, &pref)| spot - pref)
        .collect();
    let total_displacement = displacements.iter().map(|&k| u64::from(k)).sum();
    let lucky_count = displacements.iter().filter(|&&k| k == 0).count();
    ParkingOutcome::Parked(Parking {
        assignment,
        displacements,
        total_displacement,
        lucky_count,
    })
}

/// The order-free test: sorted ascending, the `i`-th smallest preference is
/// at most `i`.
pub fn satisfies_sorted_criterion(alpha: &PreferenceVector) -> bool {
    let mut sorted = alpha.as_slice().to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &a)| a as usize <= i + 1)
}

pub fn is_parking_function(alpha: &PreferenceVector) -> bool {
    let parks = park(alpha).parked().is_some();
    debug_assert_eq!(parks, satisfies_sorted_criterion(alpha), "alpha = {alpha}");
    parks
}

/// `d(alpha)`, the total displacement. Only defined for parking functions.
pub fn displacement(alpha: &PreferenceVector) -> Result<u64> {
    match park(alpha) {
        ParkingOutcome::Parked(p) => Ok(p.total_displacement),
        ParkingOutcome::Failed { car } => Err(Error::NotAParkingFunction { failed_car: car }),
    }
}

/// Which structural condition for displacement one a vector breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisplacementOneViolation {
    /// Condition (1): no spot `j` in `1..n` is preferred by exactly two cars.
    NoDoubledPreference,
    /// Condition (2): with `j` preferred twice, the other `n - 2` cars must
    /// prefer exactly the spots `[n] \ {j, j+1}`, one each. `spot` is the
    /// first spot whose count is wrong.
    RemainderMismatch { j: u32, spot: u32 },
}

impl DisplacementOneViolation {
    pub fn condition(&self) -> u8 {
        match self {
            DisplacementOneViolation::NoDoubledPreference => 1,
            DisplacementOneViolation::RemainderMismatch { .. } => 2,
        }
    }
}

impl fmt::Display for DisplacementOneViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DisplacementOneViolation::NoDoubledPreference => f.write_str(
                "displacement-one condition (1) fails: no spot j in 1..n-1 is preferred by exactly two cars",
            ),
            DisplacementOneViolation::RemainderMismatch { j, spot } => write!(
                f,
                "displacement-one condition (2) fails: with j = {j}, the other cars must prefer \
                 each spot except {j} and {} exactly once, but spot {spot} disagrees",
                j + 1
            ),
        }
    }
}

/// The doubled preference `j` and the two cars `k < k'` (1-indexed) that
/// share it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisplacementOneWitness {
    pub j: u32,
    pub cars: (usize, usize),
}

/// Decides displacement one from the shape of the vector alone:
/// exactly one value `j < n` occurs exactly twice and the rest are exactly
/// `[n] \ {j, j+1}`. No parking is simulated.
pub fn characterize_displacement_one(
    alpha: &PreferenceVector,
) -> core::result::Result<DisplacementOneWitness, DisplacementOneViolation> {
    let n = alpha.n();
    let prefs = alpha.as_slice();
    let mut counts = vec![0usize; n + 2];
    for &a in prefs {
        counts[a as usize] += 1;
    }

    let j = (1..n)
        .find(|&v| counts[v] == 2)
        .ok_or(DisplacementOneViolation::NoDoubledPreference)?;

    if let Some(spot) = (1..=n).filter(|&v| v != j).find(|&v| {
        let expected = if v == j + 1 { 0 } else { 1 };
        counts[v] != expected
    }) {
        return Err(DisplacementOneViolation::RemainderMismatch {
            j: j as u32,
            spot: spot as u32,
        });
    }

    let mut cars = prefs
        .iter()
        .enumerate()
        .filter(|&(_, &a)| a as usize == j)
        .map(|(i, _)| i + 1);
    let k = cars.next().expect("j occurs twice");
    let k_prime = cars.next().expect("j occurs twice");
    Ok(DisplacementOneWitness {
        j: j as u32,
        cars: (k, k_prime),
    })
}

pub fn is_displacement_one_characterized(alpha: &PreferenceVector) -> bool {
    characterize_displacement_one(alpha).is_ok()
}
