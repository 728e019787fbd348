//! States and moves of the `(n+1) x (n+1)` Tower of Hanoi.
//!
//! Disks `0..=n` are labelled by increasing size and pegs `0..=n` from left
//! to right; peg 0 is the source, peg `n` the destination, and pegs
//! `1..n` are interior. A state is the vector `x = (x_0, ..., x_n)` with
//! `x_i` the peg holding disk `i`. Disks sharing a peg are always stacked
//! smallest on top, so the vector determines the position completely.
//!
//! An ideal state has disk `n` alone on the source, the destination empty,
//! and the other `n` disks spread over the `n - 1` interior pegs with every
//! interior peg used (so exactly one holds two disks). Note that the two
//! disks sharing a peg may be any two of `0..n`, disk 0 included: `(1,2,1,0)`
//! is ideal.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::util::for_each_permutation;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HanoiState(Vec<u32>);

impl HanoiState {
    /// Accepts `x_0, ..., x_n` with `n >= 2` and every peg in `0..=n`.
    pub fn new(pegs: Vec<u32>) -> Result<Self> {
        if pegs.len() < 3 {
            return Err(Error::TooFewDisks {
                n: pegs.len().saturating_sub(1),
            });
        }
        let n = pegs.len() - 1;
        if let Some((disk, &peg)) = pegs.iter().enumerate().find(|&(_, &p)| p as usize > n) {
            return Err(Error::PegOutOfRange { disk, peg, n });
        }
        Ok(Self(pegs))
    }

    pub(crate) fn from_valid(pegs: Vec<u32>) -> Self {
        debug_assert!(Self::new(pegs.clone()).is_ok());
        Self(pegs)
    }

    /// Label of the largest disk (and of the destination peg).
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn pegs(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn peg_of(&self, disk: usize) -> u32 {
        self.0[disk]
    }

    /// Smallest disk on `peg`, if any.
    pub fn top_of(&self, peg: u32) -> Option<u32> {
        self.0.iter().position(|&p| p == peg).map(|d| d as u32)
    }

    /// Disks on `peg`, top first.
    pub fn disks_on(&self, peg: u32) -> impl Iterator<Item = u32> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(move |&(_, &p)| p == peg)
            .map(|(d, _)| d as u32)
    }

    /// Smallest disk on each peg, indexed by peg.
    fn tops(&self) -> Vec<Option<u32>> {
        let mut tops = vec![None; self.0.len()];
        for (disk, &peg) in self.0.iter().enumerate().rev() {
            tops[peg as usize] = Some(disk as u32);
        }
        tops
    }
}

impl fmt::Display for HanoiState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parking::write_comma_separated(f, &self.0)
    }
}

/// All disks on the source peg.
pub fn starting_state(n: usize) -> Result<HanoiState> {
    HanoiState::new(vec![0; n + 1])
}

/// All disks on the destination peg.
pub fn ending_state(n: usize) -> Result<HanoiState> {
    HanoiState::new(vec![n as u32; n + 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HanoiMove {
    pub disk: u32,
    pub from: u32,
    pub to: u32,
}

impl HanoiMove {
    pub fn new(disk: u32, from: u32, to: u32) -> Self {
        Self { disk, from, to }
    }

    pub fn reversed(self) -> Self {
        Self {
            disk: self.disk,
            from: self.to,
            to: self.from,
        }
    }
}

impl fmt::Display for HanoiMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "disk {}: peg {} -> peg {}",
            self.disk, self.from, self.to
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveViolation {
    SamePeg,
    OutOfRange,
    DiskNotOnPeg,
    NotTopDisk,
    OntoSmallerDisk { top: u32 },
}

impl fmt::Display for MoveViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveViolation::SamePeg => f.write_str("source and target peg coincide"),
            MoveViolation::OutOfRange => f.write_str("disk or peg label out of range"),
            MoveViolation::DiskNotOnPeg => f.write_str("the disk is not on the source peg"),
            MoveViolation::NotTopDisk => f.write_str("the disk is not on top of its peg"),
            MoveViolation::OntoSmallerDisk { top } => {
                write!(f, "the target peg has smaller disk {top} on top")
            }
        }
    }
}

fn check_move(s: &HanoiState, m: HanoiMove) -> core::result::Result<(), MoveViolation> {
    let n = s.n() as u32;
    if m.disk > n || m.from > n || m.to > n {
        return Err(MoveViolation::OutOfRange);
    }
    if m.from == m.to {
        return Err(MoveViolation::SamePeg);
    }
    if s.peg_of(m.disk as usize) != m.from {
        return Err(MoveViolation::DiskNotOnPeg);
    }
    if s.top_of(m.from) != Some(m.disk) {
        return Err(MoveViolation::NotTopDisk);
    }
    match s.top_of(m.to) {
        Some(top) if top < m.disk => Err(MoveViolation::OntoSmallerDisk { top }),
        _ => Ok(()),
    }
}

pub fn is_legal(s: &HanoiState, m: HanoiMove) -> bool {
    check_move(s, m).is_ok()
}

/// Every legal move in `s`, ordered by disk and then target peg.
pub fn legal_moves(s: &HanoiState) -> Vec<HanoiMove> {
    let tops = s.tops();
    let mut moves = Vec::new();
    let mut movable: Vec<(u32, u32)> = tops
        .iter()
        .enumerate()
        .filter_map(|(peg, top)| top.map(|d| (d, peg as u32)))
        .collect();
    movable.sort_unstable();
    for (disk, from) in movable {
        for (to, top) in tops.iter().enumerate() {
            let to = to as u32;
            if to != from && top.is_none_or(|t| t > disk) {
                moves.push(HanoiMove { disk, from, to });
            }
        }
    }
    moves
}

pub fn apply_move(s: &HanoiState, m: HanoiMove) -> Result<HanoiState> {
    check_move(s, m).map_err(|reason| Error::IllegalMove { mv: m, reason })?;
    let mut pegs = s.0.clone();
    pegs[m.disk as usize] = m.to;
    Ok(HanoiState(pegs))
}

/// Which ideal-state condition a state breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealViolation {
    /// Condition (0): the largest disk is not on the source peg.
    LargestDiskNotOnSource { peg: u32 },
    /// Condition (1): no interior peg holds exactly two of the disks `0..n`.
    NoDoubledInteriorPeg,
    /// Condition (2): with peg `j` doubled, the remaining disks must occupy
    /// each other interior peg exactly once. `peg` is the first peg whose
    /// count is wrong.
    RemainderMismatch { j: u32, peg: u32 },
}

impl IdealViolation {
    pub fn condition(&self) -> u8 {
        match self {
            IdealViolation::LargestDiskNotOnSource { .. } => 0,
            IdealViolation::NoDoubledInteriorPeg => 1,
            IdealViolation::RemainderMismatch { .. } => 2,
        }
    }
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IdealViolation::LargestDiskNotOnSource { peg } => write!(
                f,
                "ideal-state condition (0) fails: the largest disk is on peg {peg}, not the source peg 0"
            ),
            IdealViolation::NoDoubledInteriorPeg => f.write_str(
                "ideal-state condition (1) fails: no interior peg holds exactly two of the smaller disks",
            ),
            IdealViolation::RemainderMismatch { j, peg } => write!(
                f,
                "ideal-state condition (2) fails: with peg {j} doubled, every other interior peg \
                 needs exactly one disk and no other peg any, but peg {peg} disagrees"
            ),
        }
    }
}

/// Decomposition of an ideal state: the doubled interior peg `j`, the two
/// disks `k < k'` on it, and the peg of every remaining disk below `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealStateWitness {
    pub doubled_peg: u32,
    pub doubled_disks: (u32, u32),
    /// `(disk, peg)` for the other `n - 2` disks below `n`, by disk.
    pub singletons: Vec<(u32, u32)>,
}

impl IdealStateWitness {
    pub fn to_state(&self, n: usize) -> HanoiState {
        let mut pegs = vec![0; n + 1];
        pegs[self.doubled_disks.0 as usize] = self.doubled_peg;
        pegs[self.doubled_disks.1 as usize] = self.doubled_peg;
        for &(disk, peg) in &self.singletons {
            pegs[disk as usize] = peg;
        }
        HanoiState(pegs)
    }
}

/// Checks the three vector conditions for an ideal state:
/// (0) `x_n = 0`; (1) some interior peg `j` occurs exactly twice among
/// `x_0..x_{n-1}`; (2) the other entries are exactly the interior pegs other
/// than `j`, once each.
pub fn ideal_witness(s: &HanoiState) -> core::result::Result<IdealStateWitness, IdealViolation> {
    let n = s.n();
    let x = s.pegs();
    if x[n] != 0 {
        return Err(IdealViolation::LargestDiskNotOnSource { peg: x[n] });
    }
    let mut counts = vec![0usize; n + 1];
    for &p in &x[..n] {
        counts[p as usize] += 1;
    }
    let j = (1..n)
        .find(|&p| counts[p] == 2)
        .ok_or(IdealViolation::NoDoubledInteriorPeg)?;
    if let Some(peg) = (0..=n).filter(|&p| p != j).find(|&p| {
        let expected = usize::from((1..n).contains(&p));
        counts[p] != expected
    }) {
        return Err(IdealViolation::RemainderMismatch {
            j: j as u32,
            peg: peg as u32,
        });
    }

    let j = j as u32;
    let mut doubled = x[..n].iter().enumerate().filter(|&(_, &p)| p == j);
    let k = doubled.next().expect("j occurs twice").0 as u32;
    let k_prime = doubled.next().expect("j occurs twice").0 as u32;
    let singletons = x[..n]
        .iter()
        .enumerate()
        .filter(|&(_, &p)| p != j)
        .map(|(d, &p)| (d as u32, p))
        .collect();
    Ok(IdealStateWitness {
        doubled_peg: j,
        doubled_disks: (k, k_prime),
        singletons,
    })
}

pub fn is_ideal_state(s: &HanoiState) -> bool {
    ideal_witness(s).is_ok()
}

/// Builds every ideal state from its witness (pick the doubled peg, the pair
/// of disks on it, then a bijection from the other disks to the other
/// interior pegs) and returns them in lexicographic order.
pub fn enumerate_ideal_states(n: usize) -> Result<Vec<HanoiState>> {
    if n < 2 {
        return Err(Error::TooFewDisks { n });
    }
    let n32 = n as u32;
    let mut states = Vec::new();
    for j in 1..n32 {
        for k in 0..n32 {
            for k_prime in k + 1..n32 {
                let rest: Vec<u32> = (0..n32).filter(|&d| d != k && d != k_prime).collect();
                let mut pegs: Vec<u32> = (1..n32).filter(|&p| p != j).collect();
                for_each_permutation(&mut pegs, |perm| {
                    let witness = IdealStateWitness {
                        doubled_peg: j,
                        doubled_disks: (k, k_prime),
                        singletons: rest.iter().copied().zip(perm.iter().copied()).collect(),
                    };
                    states.push(witness.to_state(n));
                });
            }
        }
    }
    states.sort_unstable();
    Ok(states)
}
