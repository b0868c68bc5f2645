//! Invariants of virtual knots computed on signed Gauss codes.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; IO, file formats and the command line live
//! in the `vkt` crate.
//!
//! The central quantity is the per-crossing weight of a Gauss code, computed
//! three ways:
//!
//! * [`linkdiag`]: smooth the crossing, order the two components by the dot
//!   on the incoming under-strand, take `lk_over - lk_under`;
//! * [`linkdiag::chord_weight`]: signed count of chords crossing the chord;
//! * [`labeling`]: integer arc labels, `(label before over) - (label after under)`.
//!
//! [`invariants`] turns weights into Laurent polynomials, [`transform`] holds
//! Reidemeister moves and other rewrites, [`mutation`] holds Conway mutation on
//! tangle blocks.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod gauss;
pub mod invariants;
pub mod labeling;
pub mod linkdiag;
pub mod mutation;
pub mod sample;
pub mod transform;

pub use error::{Error, Result};
pub use gauss::{CrossingId, GaussCode, GaussEntry, Parity, Passage, Sign};
pub use invariants::{LaurentPoly, VassilievValue};
pub use linkdiag::OrderedTwoComponentLink;
pub use mutation::{BlockPair, BlockRange, MutationKind};
