//! Text and JSON formats, terminal rendering, the verification battery,
//! and the `pfhanoi` command line, on top of [`pfhanoi_core`].

pub mod cli;
pub mod format;
pub mod render;
pub mod verify;
