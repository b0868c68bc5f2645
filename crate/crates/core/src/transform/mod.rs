//! Rewrites of Gauss codes: symmetries, crossing changes, twists, Reidemeister
//! moves, random move walks and the mutant families.

pub mod family;
pub mod reidemeister;
pub mod walk;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gauss::{CrossingId, GaussCode, GaussEntry};

pub use family::{family, FamilyBase, FamilyMember};
pub use reidemeister::{
    apply_move, find_bigons, find_kinks, r1_delete, r1_insert, r2_delete, r2_insert, r3_apply, r3_pattern_valid,
    r3_sites, KinkOrder, Move, MoveKind, MoveParseError, R2Orientation, R3Site,
};
pub use walk::{greedy_simplify, random_move_walk, replay, trial_seed, MoveMix, RandomWalkConfig, WalkOutcome};

/// Switch every crossing: passages complemented, signs negated.
pub fn mirror(code: &GaussCode) -> GaussCode {
    code.entries()
        .iter()
        .map(|e| GaussEntry { crossing: e.crossing.clone(), passage: e.passage.complement(), sign: -e.sign })
        .collect()
}

/// Traverse the knot backwards.
pub fn reverse(code: &GaussCode) -> GaussCode {
    code.entries().iter().rev().cloned().collect()
}

/// Open `b` at `cut_b` and splice it into `a` before entry `cut_a`. Crossings
/// of `b` whose names clash with `a` are renamed.
pub fn connected_sum(a: &GaussCode, b: &GaussCode, cut_a: usize, cut_b: usize) -> Result<GaussCode> {
    a.ensure_valid()?;
    b.ensure_valid()?;
    if cut_a > a.len() {
        return Err(Error::PositionOutOfRange { position: cut_a, len: a.len() });
    }
    if cut_b > b.len() {
        return Err(Error::PositionOutOfRange { position: cut_b, len: b.len() });
    }
    let taken: BTreeSet<&CrossingId> = a.entries().iter().chain(b.entries()).map(|e| &e.crossing).collect();
    let clashes: Vec<CrossingId> = b.crossings().into_iter().filter(|c| a.contains(c)).collect();
    let mut rename: BTreeMap<CrossingId, CrossingId> = BTreeMap::new();
    let mut next = 1u32;
    for c in clashes {
        loop {
            let candidate = CrossingId::from(next);
            next += 1;
            if !taken.contains(&candidate) {
                rename.insert(c, candidate);
                break;
            }
        }
    }
    let opened = b.rotated(cut_b).relabeled(|c| rename.get(c).cloned().unwrap_or_else(|| c.clone()));
    let mut entries = a.entries()[..cut_a].to_vec();
    entries.extend(opened.into_entries());
    entries.extend_from_slice(&a.entries()[cut_a..]);
    Ok(GaussCode::new(entries))
}

/// Switch one crossing: at both occurrences complement the passage and negate the sign.
pub fn crossing_change(code: &GaussCode, crossing: &CrossingId) -> Result<GaussCode> {
    code.chord(crossing)?;
    Ok(code
        .entries()
        .iter()
        .map(|e| {
            if &e.crossing == crossing {
                GaussEntry { crossing: e.crossing.clone(), passage: e.passage.complement(), sign: -e.sign }
            } else {
                e.clone()
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub code: GaussCode,
    /// The three new crossings, outermost first.
    pub crossings: [CrossingId; 3],
    /// Positions of the replaced crossing's two entries in the input.
    pub replaced: [usize; 2],
}

/// Replace a crossing `C` by three nested crossings of the same sign: with
/// `P` the passage at position `p` of `C`, position `p` becomes
/// `c1(P) c2(P') c3(P)` and the other occurrence becomes `c3(P') c2(P) c1(P')`.
pub fn twist_replace(code: &GaussCode, crossing: &CrossingId) -> Result<Twist> {
    let chord = code.chord(crossing)?;
    let [c1, c2, c3]: [CrossingId; 3] = code.fresh_ids(3).try_into().expect("three fresh ids");
    let (p, q) = (chord.over.min(chord.under), chord.over.max(chord.under));
    let s = chord.sign;
    let mut entries = Vec::with_capacity(code.len() + 4);
    for (i, e) in code.entries().iter().enumerate() {
        if i == p || i == q {
            let pp = e.passage;
            let pq = pp.complement();
            let run = if i == p {
                [(&c1, pp), (&c2, pq), (&c3, pp)]
            } else {
                [(&c3, pp), (&c2, pq), (&c1, pp)]
            };
            entries.extend(run.into_iter().map(|(c, pass)| GaussEntry::new(c.clone(), pass, s)));
        } else {
            entries.push(e.clone());
        }
    }
    Ok(Twist { code: GaussCode::new(entries), crossings: [c1, c2, c3], replaced: [p, q] })
}
