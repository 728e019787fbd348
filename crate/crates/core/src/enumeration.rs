//! Exhaustive and constructive enumerators, closed-form counts, and the
//! harness comparing the two.
//!
//! Exhaustive enumerators scan every vector in `[n]^n` (or `{0..n}^(n+1)`)
//! and filter; they are streamed so callers can count without holding the
//! whole space. Everything is emitted in lexicographic order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::hanoi::{self, HanoiState};
use crate::parking::{self, ParkingOutcome, PreferenceVector};
use crate::util::for_each_permutation;
use crate::{Error, Result};

/// Largest `n` for which ideal states are counted by filtering the whole
/// `{0..n}^(n+1)` cube; above it the constructive enumerator is used.
pub const IDEAL_FILTER_MAX_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest `n` whose `n^n` preference vectors may be scanned.
    pub max_pf_n: usize,
    /// Largest `n` whose ideal states may be materialized.
    pub max_ideal_n: usize,
}

impl EnumerationBudget {
    pub fn with_max_n(max_pf_n: usize) -> Self {
        Self {
            max_pf_n,
            max_ideal_n: max_pf_n + 1,
        }
    }

    fn check_pf(&self, n: usize) -> Result<()> {
        if n > self.max_pf_n {
            return Err(Error::BudgetExceeded {
                what: "preference-vector scan",
                n,
                required: (n as u128).saturating_pow(n as u32),
                budget: (self.max_pf_n as u128).saturating_pow(self.max_pf_n as u32),
            });
        }
        Ok(())
    }

    fn check_ideal(&self, n: usize) -> Result<()> {
        if n > self.max_ideal_n {
            let lah = |n: usize| lah_count(n).try_into().unwrap_or(u128::MAX);
            return Err(Error::BudgetExceeded {
                what: "ideal-state enumeration",
                n,
                required: lah(n),
                budget: lah(self.max_ideal_n),
            });
        }
        Ok(())
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::with_max_n(7)
    }
}

/// Every tuple in `{lo..=hi}^len`, lexicographically.
#[derive(Clone, Debug)]
pub struct Tuples {
    next: Option<Vec<u32>>,
    lo: u32,
    hi: u32,
}

impl Tuples {
    pub fn new(len: usize, lo: u32, hi: u32) -> Self {
        Self {
            next: (lo <= hi).then(|| vec![lo; len]),
            lo,
            hi,
        }
    }
}

impl Iterator for Tuples {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // odometer step from the right
        if let Some(pos) = succ.iter().rposition(|&d| d < self.hi) {
            succ[pos] += 1;
            succ[pos + 1..].fill(self.lo);
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// All `n^n` preference vectors of length `n`.
pub fn preference_vectors(n: usize) -> impl Iterator<Item = PreferenceVector> {
    // empty for n = 0 since lo > hi
    Tuples::new(n, 1, n as u32).map(PreferenceVector::from_valid)
}

/// Parking functions of length `n` in lexicographic order, found by
/// simulating every vector in `[n]^n`.
pub fn enumerate_pf(
    n: usize,
    budget: EnumerationBudget,
) -> Result<impl Iterator<Item = PreferenceVector>> {
    budget.check_pf(n)?;
    Ok(preference_vectors(n).filter(parking::is_parking_function))
}

/// Parking functions of length `n` with displacement exactly `d`, by
/// exhaustive filtering. Empty for `d > n(n-1)/2`.
pub fn enumerate_pf_displacement(
    n: usize,
    d: u64,
    budget: EnumerationBudget,
) -> Result<impl Iterator<Item = PreferenceVector>> {
    budget.check_pf(n)?;
    Ok(preference_vectors(n).filter(move |alpha| {
        matches!(parking::park(alpha), ParkingOutcome::Parked(p) if p.total_displacement() == d)
    }))
}

/// Number of parking functions of length `n` at each displacement
/// `0..=n(n-1)/2`.
pub fn displacement_distribution(n: usize, budget: EnumerationBudget) -> Result<Vec<u64>> {
    budget.check_pf(n)?;
    let max = n * n.saturating_sub(1) / 2;
    let mut counts = vec![0u64; max + 1];
    for alpha in preference_vectors(n) {
        if let ParkingOutcome::Parked(p) = parking::park(&alpha) {
            counts[p.total_displacement() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Builds the displacement-one parking functions directly: a doubled
/// preference `j < n` placed at two positions, and the spots
/// `[n] \ {j, j+1}` permuted over the rest. Sorted lexicographically.
pub fn construct_displacement_one(n: usize) -> Vec<PreferenceVector> {
    let mut out = Vec::new();
    let n32 = n as u32;
    for j in 1..n32 {
        let mut spots: Vec<u32> = (1..=n32).filter(|&s| s != j && s != j + 1).collect();
        for k in 0..n {
            for k_prime in k + 1..n {
                for_each_permutation(&mut spots, |perm| {
                    let mut prefs = vec![j; n];
                    let others = (0..n).filter(|&i| i != k && i != k_prime);
                    for (i, &s) in others.zip(perm) {
                        prefs[i] = s;
                    }
                    out.push(PreferenceVector::from_valid(prefs));
                });
            }
        }
    }
    out.sort_unstable();
    out
}

/// Ideal states of the `(n+1) x (n+1)` game, lexicographic. There are none
/// for `n < 2`, where no game is defined.
pub fn ideal_states(n: usize, budget: EnumerationBudget) -> Result<Vec<HanoiState>> {
    budget.check_ideal(n)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    hanoi::enumerate_ideal_states(n)
}

/// Ideal states found by testing every vector in `{0..n}^(n+1)`.
pub fn filter_ideal_states(n: usize) -> Result<impl Iterator<Item = HanoiState>> {
    if n < 2 {
        return Err(Error::TooFewDisks { n });
    }
    Ok(Tuples::new(n + 1, 0, n as u32)
        .map(HanoiState::from_valid)
        .filter(hanoi::is_ideal_state))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n!(n-1)/2`, the common size of the displacement-one parking functions
/// of length `n` and the ideal states of the `(n+1) x (n+1)` game (OEIS
/// A001286). Zero for `n <= 1`.
pub fn lah_count(n: usize) -> BigUint {
    if n < 2 {
        return BigUint::zero();
    }
    factorial(n) * (n as u64 - 1) / 2u8
}

/// `(n+1)^(n-1)`, the number of parking functions of length `n`.
pub fn cayley_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::from(n as u64 + 1).pow(n as u32 - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statistic {
    AllParkingFunctions,
    Displacement(u64),
    IdealStates,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::AllParkingFunctions => f.write_str("all_pf"),
            Statistic::Displacement(d) => write!(f, "pf_by_displacement({d})"),
            Statistic::IdealStates => f.write_str("ideal_states"),
        }
    }
}

/// Closed-form count of `statistic` at `n`. Displacement has one for
/// `d = 0` (permutations), `d = 1` (Lah), the all-ones maximum
/// `n(n-1)/2`, and anything beyond it.
pub fn closed_form(n: usize, statistic: Statistic) -> Result<BigUint> {
    match statistic {
        Statistic::AllParkingFunctions => Ok(cayley_count(n)),
        Statistic::IdealStates => Ok(lah_count(n)),
        Statistic::Displacement(d) => {
            let max = (n * n.saturating_sub(1) / 2) as u64;
            match d {
                0 => Ok(factorial(n)),
                1 => Ok(lah_count(n)),
                d if d == max => Ok(BigUint::one()),
                d if d > max => Ok(BigUint::zero()),
                d => Err(Error::NoClosedForm { n, d }),
            }
        }
    }
}

/// How the brute-force side of a [`CountReport`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// Filtering the full vector space.
    Exhaustive,
    /// Counting the constructive enumerator's output.
    Constructive,
    /// `n < 2`, where the set is empty by convention.
    Vacuous,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Exhaustive => "exhaustive",
            CountMethod::Constructive => "constructive",
            CountMethod::Vacuous => "vacuous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub statistic: Statistic,
    pub closed_form: BigUint,
    /// Absent when the count is over budget.
    pub brute_force: Option<BigUint>,
    pub method: Option<CountMethod>,
}

impl CountReport {
    /// `None` when there is no brute-force count to compare.
    pub fn matches(&self) -> Option<bool> {
        self.brute_force.as_ref().map(|b| *b == self.closed_form)
    }
}

fn count_statistic(
    n: usize,
    statistic: Statistic,
    budget: EnumerationBudget,
) -> Result<(BigUint, CountMethod)> {
    let exhaustive = |count: usize| Ok((BigUint::from(count), CountMethod::Exhaustive));
    match statistic {
        Statistic::AllParkingFunctions => exhaustive(enumerate_pf(n, budget)?.count()),
        Statistic::Displacement(d) => exhaustive(enumerate_pf_displacement(n, d, budget)?.count()),
        Statistic::IdealStates if n < 2 => Ok((BigUint::zero(), CountMethod::Vacuous)),
        Statistic::IdealStates if n <= IDEAL_FILTER_MAX_N => {
            exhaustive(filter_ideal_states(n)?.count())
        }
        Statistic::IdealStates => Ok((
            BigUint::from(ideal_states(n, budget)?.len()),
            CountMethod::Constructive,
        )),
    }
}

/// Compares one statistic's closed form with a brute-force count. An
/// over-budget count yields a report without the brute-force side.
pub fn count_report(
    n: usize,
    statistic: Statistic,
    budget: EnumerationBudget,
) -> Result<CountReport> {
    let closed_form = closed_form(n, statistic)?;
    let (brute_force, method) = match count_statistic(n, statistic, budget) {
        Ok((count, method)) => (Some(count), Some(method)),
        Err(e) if e.is_budget() => (None, None),
        Err(e) => return Err(e),
    };
    Ok(CountReport {
        n,
        statistic,
        closed_form,
        brute_force,
        method,
    })
}

/// Reports for all parking functions, displacement one, and ideal states.
pub fn brute_force_counts(n: usize, budget: EnumerationBudget) -> Vec<CountReport> {
    [
        Statistic::AllParkingFunctions,
        Statistic::Displacement(1),
        Statistic::IdealStates,
    ]
    .into_iter()
    .map(|s| count_report(n, s, budget).expect("these statistics have closed forms"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<alloc::string::String> {
        items.into_iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn tuples_in_order() {
        let all: Vec<Vec<u32>> = Tuples::new(2, 1, 2).collect();
        assert_eq!(all, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(Tuples::new(3, 0, 3).count(), 64);
        assert_eq!(Tuples::new(0, 1, 1).count(), 1);
    }

    #[test]
    fn small_pf_lists() {
        let b = EnumerationBudget::default();
        assert_eq!(strings(enumerate_pf(1, b).unwrap()), ["1"]);
        assert_eq!(strings(enumerate_pf(2, b).unwrap()), ["1,1", "1,2", "2,1"]);
        assert_eq!(enumerate_pf(3, b).unwrap().count(), 16);
    }

    #[test]
    fn displacement_filters_for_n3() {
        let b = EnumerationBudget::default();
        assert_eq!(
            strings(enumerate_pf_displacement(3, 0, b).unwrap()),
            ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]
        );
        let d1 = strings(enumerate_pf_displacement(3, 1, b).unwrap());
        assert_eq!(d1.len(), 6);
        assert!(d1.contains(&"2,2,1".into()) && d1.contains(&"1,3,1".into()));
        let d3 = strings(enumerate_pf_displacement(3, 3, b).unwrap());
        assert!(d3.contains(&"1,1,1".into()));
        assert_eq!(enumerate_pf_displacement(3, 4, b).unwrap().count(), 0);
        assert_eq!(enumerate_pf_displacement(3, 99, b).unwrap().count(), 0);
    }

    #[test]
    fn unique_displacement_one_for_n2() {
        let b = EnumerationBudget::default();
        assert_eq!(
            strings(enumerate_pf_displacement(2, 1, b).unwrap()),
            ["1,1"]
        );
        assert_eq!(strings(construct_displacement_one(2)), ["1,1"]);
        assert!(construct_displacement_one(1).is_empty());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(lah_count(3), BigUint::from(6u8));
        assert_eq!(lah_count(1), BigUint::zero());
        assert_eq!(lah_count(5), BigUint::from(240u16));
        assert_eq!(cayley_count(1), BigUint::one());
        assert_eq!(cayley_count(3), BigUint::from(16u8));
        assert_eq!(cayley_count(5), BigUint::from(1296u16));
        // well past u64
        assert_eq!(lah_count(25).to_string(), "186134520519971831808000000");
        assert_eq!(
            closed_form(4, Statistic::Displacement(2)),
            Err(Error::NoClosedForm { n: 4, d: 2 })
        );
    }

    #[test]
    fn report_for_n3() {
        let reports = brute_force_counts(3, EnumerationBudget::default());
        let counts: Vec<_> = reports
            .iter()
            .map(|r| (r.closed_form.clone(), r.brute_force.clone().unwrap()))
            .collect();
        assert_eq!(
            counts,
            vec![
                (16u8.into(), 16u8.into()),
                (6u8.into(), 6u8.into()),
                (6u8.into(), 6u8.into())
            ]
        );
        assert!(reports.iter().all(|r| r.matches() == Some(true)));
    }

    #[test]
    fn report_for_n1_is_vacuous_on_the_hanoi_side() {
        let reports = brute_force_counts(1, EnumerationBudget::default());
        let brute: Vec<BigUint> = reports
            .iter()
            .map(|r| r.brute_force.clone().unwrap())
            .collect();
        assert_eq!(brute, vec![1u8.into(), 0u8.into(), 0u8.into()]);
        assert_eq!(reports[2].method, Some(CountMethod::Vacuous));
    }

    #[test]
    fn over_budget_reports_are_partial() {
        let reports = brute_force_counts(5, EnumerationBudget::with_max_n(4));
        assert_eq!(reports[0].brute_force, None);
        assert_eq!(reports[0].matches(), None);
        assert_eq!(reports[1].brute_force, None);
        assert_eq!(reports[2].brute_force, Some(240u16.into()));
        assert_eq!(reports[2].method, Some(CountMethod::Constructive));
        assert!(enumerate_pf(8, EnumerationBudget::default()).is_err());
    }

    #[test]
    fn n4_displacement_one_count() {
        let r = count_report(4, Statistic::Displacement(1), EnumerationBudget::default()).unwrap();
        assert_eq!(r.brute_force, Some(36u8.into()));
    }
}
