//! File formats, the Kostka disk cache, golden reference tables and the
//! command-line front end for `statcheck-core`.

pub mod cache;
pub mod cli;
pub mod config;
pub mod golden;
pub mod model;
pub mod report;
pub mod tables;
