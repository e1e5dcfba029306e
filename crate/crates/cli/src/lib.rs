//! Command-line front end for `exradii-core`: output formats, a parallel
//! brute-force scan and the `exradii` subcommands.

pub mod cli;
pub mod format;
pub mod scan;

pub use cli::run;
pub use format::Format;
pub use scan::ParallelScan;
