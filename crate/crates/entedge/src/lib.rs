//! File formats, timing, the benchmark harness and the command-line tool
//! around [`entedge_core`].

pub mod bench;
pub mod cli;
pub mod csv;
pub mod pgm;
pub mod run;

pub use entedge_core as core;
