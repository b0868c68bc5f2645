use alloc::vec::Vec;
use core::fmt;

use crate::gauss::{CrossingId, ParseError, Violation};
use crate::mutation::BlockViolation;
use crate::transform::R3Site;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Parse(ParseError),
    InvalidCode(Vec<Violation>),
    UnknownCrossing(CrossingId),
    PositionOutOfRange { position: usize, len: usize },
    /// R1 deletion on a crossing whose two passages are not cyclically adjacent.
    NotAKink(CrossingId),
    /// R2 deletion on a pair that is not a bigon.
    NotABigon(CrossingId, CrossingId),
    NotAnR3Site(R3Site),
    InvalidBlocks(Vec<BlockViolation>),
    /// Vassiliev invariants are indexed from 1.
    ZeroOrder,
    FamilyIndex { base: &'static str, n: u32 },
    InvalidLink(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(e) => write!(f, "{e}"),
            Error::InvalidCode(violations) => {
                write!(f, "invalid Gauss code:")?;
                for v in violations {
                    write!(f, " {v};")?;
                }
                Ok(())
            }
            Error::UnknownCrossing(c) => write!(f, "crossing {c} does not occur in the code"),
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} out of range for a code of length {len}")
            }
            Error::NotAKink(c) => {
                write!(f, "crossing {c} is not an R1 kink (its passages are not adjacent)")
            }
            Error::NotABigon(a, b) => write!(f, "crossings {a} and {b} do not form an R2 bigon"),
            Error::NotAnR3Site(site) => write!(f, "no oriented R3 pattern at {site}"),
            Error::InvalidBlocks(violations) => {
                write!(f, "invalid block pair:")?;
                for v in violations {
                    write!(f, " {v};")?;
                }
                Ok(())
            }
            Error::ZeroOrder => write!(f, "Vassiliev order must be at least 1"),
            Error::FamilyIndex { base, n } => {
                write!(f, "{base} family has no member with n = {n}")
            }
            Error::InvalidLink(why) => write!(f, "invalid link: {why}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
