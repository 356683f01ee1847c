//! Std companion to `tracecode-core`: multi-threaded enumeration, the text and
//! JSON file formats, and the `tracecode` command-line front end.

pub mod cli;
pub mod formats;
pub mod parallel;

pub use tracecode_core as core;
