//! Command-line workbench for the `deltamat` library.

pub mod acceptance;
pub mod cli;
pub mod fixtures;
pub mod format;
pub mod random;
pub mod scan;

pub use cli::run;
