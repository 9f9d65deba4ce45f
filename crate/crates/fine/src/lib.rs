//! File formats, persistence, parallel execution and the verification
//! harness around `fine-core`, plus the subcommands of the `fine` binary.

pub mod commands;
pub mod format;
pub mod journal;
pub mod parallel;
pub mod results;
pub mod verify;
