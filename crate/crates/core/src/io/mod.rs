//! File formats: APX and TGF for frameworks, QDIMACS for two-block QBFs and
//! DIMACS for MINSAT formulas.

mod apx;
mod dimacs;
mod tgf;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::Framework;

pub use apx::{emit_apx, parse_apx};
pub use dimacs::{dimacs_target, dimacs_var_name, emit_dimacs, emit_qdimacs, parse_dimacs, parse_qdimacs};
pub use tgf::parse_tgf;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FrameworkFormat {
    #[default]
    Apx,
    Tgf,
}

impl FrameworkFormat {
    pub fn parse(self, text: &str) -> Result<Framework> {
        match self {
            FrameworkFormat::Apx => parse_apx(text),
            FrameworkFormat::Tgf => parse_tgf(text),
        }
    }
}

impl fmt::Display for FrameworkFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameworkFormat::Apx => "apx",
            FrameworkFormat::Tgf => "tgf",
        })
    }
}

impl FromStr for FrameworkFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(FrameworkFormat::Apx),
            "tgf" => Ok(FrameworkFormat::Tgf),
            _ => Err(Error::usage(format!("unknown framework format {s}"))),
        }
    }
}
