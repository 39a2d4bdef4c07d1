//! Command-line and file-format layer over [`mcdm_core`].
//!
//! * [`input`] reads delimiter-separated rating files and names configs.
//! * [`report`] renders ranking and consistency reports as text tables,
//!   JSON and CSV.
//! * [`cli`] wires both into the `rank`, `validate` and `export-plotdata`
//!   commands.

pub mod cli;
pub mod input;
pub mod report;

pub use input::{load_reviews, parse_names_config, LoadConfig, LoadError};
