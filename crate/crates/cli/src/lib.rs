//! Command-line front end for the `oseq` library.

pub mod app;
pub mod format;
pub mod table;
