//! Std companion to the `dualhahn` core: floating-point limit verification,
//! table rendering (CSV/JSON), and the command implementations behind the
//! `dualhahn` binary.

pub mod commands;
pub mod limits;
pub mod output;
