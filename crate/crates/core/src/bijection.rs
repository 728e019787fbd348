//! The map from ideal states to displacement-one parking functions and its
//! inverse.
//!
//! Given an ideal state `(x_0, ..., x_{n-1}, 0)` whose doubled interior peg
//! is `j`, the parking function is `a_{i+1} = x_i + 1` when `x_i > j` and
//! `a_{i+1} = x_i` otherwise. Pegs above `j` shift up by one, which opens
//! the gap at `j + 1` that the second car preferring `j` falls into. The
//! inverse shifts everything above `j + 1` back down.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::enumeration::{self, EnumerationBudget};
use crate::hanoi::{self, HanoiState};
use crate::parking::{self, PreferenceVector};
use crate::{Error, Result};

pub fn th_to_pf(x: &HanoiState) -> Result<PreferenceVector> {
    let j = hanoi::ideal_witness(x)
        .map_err(Error::NotIdeal)?
        .doubled_peg;
    let n = x.n();
    let prefs = x.pegs()[..n]
        .iter()
        .map(|&peg| if peg > j { peg + 1 } else { peg })
        .collect();
    Ok(PreferenceVector::from_valid(prefs))
}

pub fn pf_to_th(alpha: &PreferenceVector) -> Result<HanoiState> {
    let j = parking::characterize_displacement_one(alpha)
        .map_err(Error::NotDisplacementOne)?
        .j;
    let mut pegs: Vec<u32> = alpha
        .as_slice()
        .iter()
        .map(|&a| if a > j + 1 { a - 1 } else { a })
        .collect();
    pegs.push(0);
    Ok(HanoiState::from_valid(pegs))
}

/// A matched pair under the map, with the shared doubled value `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionRecord {
    pub n: usize,
    pub ideal: HanoiState,
    pub pf: PreferenceVector,
    pub j: u32,
}

impl BijectionRecord {
    pub fn from_ideal(ideal: HanoiState) -> Result<Self> {
        let pf = th_to_pf(&ideal)?;
        let j = hanoi::ideal_witness(&ideal)
            .map_err(Error::NotIdeal)?
            .doubled_peg;
        Ok(Self {
            n: ideal.n(),
            ideal,
            pf,
            j,
        })
    }

    pub fn from_pf(pf: PreferenceVector) -> Result<Self> {
        let ideal = pf_to_th(&pf)?;
        Self::from_ideal(ideal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub ideal_count: usize,
    /// Size of the displacement-one set found by simulating all of `[n]^n`.
    pub pf_count: usize,
    pub lah_count: BigUint,
    pub injective: bool,
    /// The image of the ideal states equals the simulated displacement-one set.
    pub image_matches: bool,
    /// `pf_to_th(th_to_pf(x)) = x` for every ideal `x`.
    pub ideal_round_trip: bool,
    /// `th_to_pf(pf_to_th(a)) = a` for every displacement-one `a`.
    pub pf_round_trip: bool,
    pub sizes_match: bool,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.image_matches
            && self.ideal_round_trip
            && self.pf_round_trip
            && self.sizes_match
    }
}

/// Checks the map against independently enumerated sets: constructive ideal
/// states on one side, simulation-filtered parking functions on the other.
/// For `n = 1` both sides are empty and the check passes vacuously.
pub fn verify_bijection(n: usize, budget: EnumerationBudget) -> Result<BijectionReport> {
    let ideal = enumeration::ideal_states(n, budget)?;
    let pf_one: Vec<PreferenceVector> =
        enumeration::enumerate_pf_displacement(n, 1, budget)?.collect();

    let mut image: Vec<Option<PreferenceVector>> = ideal.iter().map(|x| th_to_pf(x).ok()).collect();
    let ideal_round_trip = ideal
        .iter()
        .zip(&image)
        .all(|(x, a)| a.as_ref().and_then(|a| pf_to_th(a).ok()).as_ref() == Some(x));
    let pf_round_trip = pf_one
        .iter()
        .all(|a| pf_to_th(a).and_then(|x| th_to_pf(&x)).as_ref() == Ok(a));

    image.sort_unstable();
    let image_len = image.len();
    image.dedup();
    let injective = image.len() == image_len && image.iter().all(Option::is_some);
    let image: Vec<PreferenceVector> = image.into_iter().flatten().collect();
    let image_matches = image == pf_one;

    let lah_count = enumeration::lah_count(n);
    let sizes_match =
        BigUint::from(ideal.len()) == lah_count && BigUint::from(pf_one.len()) == lah_count;

    Ok(BijectionReport {
        n,
        ideal_count: ideal.len(),
        pf_count: pf_one.len(),
        lah_count,
        injective,
        image_matches,
        ideal_round_trip,
        pf_round_trip,
        sizes_match,
    })
}
