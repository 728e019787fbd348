//! Parking functions with the displacement statistic, ideal states of the
//! `(n+1) x (n+1)` Tower of Hanoi, and the explicit bijection between
//! displacement-one parking functions and ideal states.
//!
//! Both sets have `n!(n-1)/2` elements (the Lah numbers, OEIS A001286).
//! Everything here is pure and allocation-only, so the crate is `no_std`.
//! Text/JSON encodings and the command-line driver live in the `pfhanoi`
//! crate.
//!
//! Conventions:
//!
//! - cars and spots are 1-indexed, as in `(3,1,1,3,2)`;
//! - disks and pegs are 0-indexed; a state `x = (x_0, ..., x_n)` lists the
//!   peg holding each disk, and stacking order on a peg is implied by disk
//!   size.
//!
//! ```
//! use pfhanoi_core::{bijection, hanoi::HanoiState, parking};
//!
//! let ideal = HanoiState::new(vec![2, 2, 1, 0]).unwrap();
//! let pf = bijection::th_to_pf(&ideal).unwrap();
//! assert_eq!(pf.as_slice(), &[2, 2, 1]);
//! assert_eq!(parking::displacement(&pf), Ok(1));
//! assert_eq!(bijection::pf_to_th(&pf).unwrap(), ideal);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bijection;
pub mod enumeration;
mod error;
pub mod hanoi;
pub mod parking;
pub mod search;
mod util;

pub use error::Error;
pub use hanoi::{HanoiMove, HanoiState};
pub use parking::{ParkingOutcome, PreferenceVector};

pub type Result<T, E = Error> = core::result::Result<T, E>;
