//! Tangle blocks and positive Conway mutation.
//!
//! A tangle met twice by the knot shows up in the Gauss code as two
//! contiguous blocks. Every crossing inside the blocks is a *homebody* (both
//! entries in one block) or a *traveler* (one entry in each).
//!
//! Both positive mutations exchange the contents of the two blocks. A
//! positive reflection also switches every passage inside them; a positive
//! rotation leaves the moved entries as they are.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gauss::{CrossingId, GaussCode, GaussEntry};
use crate::invariants::{affine_index_polynomial, LaurentPoly};
use crate::labeling;

/// Cyclic range of `len` positions starting at `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockRange {
    pub start: usize,
    pub len: usize,
}

impl BlockRange {
    pub fn new(start: usize, len: usize) -> Self {
        BlockRange { start, len }
    }

    /// Inclusive cyclic range `first..=last` of a code of length `n`.
    pub fn inclusive(first: usize, last: usize, n: usize) -> Self {
        BlockRange { start: first, len: (last + n - first) % n + 1 }
    }

    pub fn positions(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.start;
        (0..self.len).map(move |k| (start + k) % n)
    }

    pub fn last(&self, n: usize) -> usize {
        (self.start + self.len + n - 1) % n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockPair {
    pub first: BlockRange,
    pub second: BlockRange,
}

impl BlockPair {
    pub fn new(first: BlockRange, second: BlockRange) -> Self {
        BlockPair { first, second }
    }

    pub fn swapped(&self) -> Self {
        BlockPair { first: self.second, second: self.first }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MutationKind {
    PositiveReflection,
    PositiveRotation,
}

impl MutationKind {
    pub const ALL: [MutationKind; 2] = [MutationKind::PositiveReflection, MutationKind::PositiveRotation];

    pub fn name(self) -> &'static str {
        match self {
            MutationKind::PositiveReflection => "reflection",
            MutationKind::PositiveRotation => "rotation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockViolation {
    OutOfRange { block: BlockRange },
    Overlap,
    Leak { crossing: CrossingId },
}

impl fmt::Display for BlockViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockViolation::OutOfRange { block } => {
                write!(f, "block starting at {} with length {} is out of range", block.start, block.len)
            }
            BlockViolation::Overlap => write!(f, "blocks overlap"),
            BlockViolation::Leak { crossing } => {
                write!(f, "crossing {crossing} occurs both inside and outside the blocks")
            }
        }
    }
}

/// Empty when the pair is a valid tangle decomposition of `code`.
pub fn validate_blocks(code: &GaussCode, pair: &BlockPair) -> Vec<BlockViolation> {
    let n = code.len();
    let mut out = Vec::new();
    for block in [pair.first, pair.second] {
        let fits = if n == 0 { block.len == 0 } else { block.start < n && block.len <= n };
        if !fits {
            out.push(BlockViolation::OutOfRange { block });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let mut inside = alloc::vec![false; n];
    for block in [pair.first, pair.second] {
        for p in block.positions(n) {
            if inside[p] {
                out.push(BlockViolation::Overlap);
                return out;
            }
            inside[p] = true;
        }
    }
    let mut count: BTreeMap<&CrossingId, (usize, usize)> = BTreeMap::new();
    for (i, e) in code.entries().iter().enumerate() {
        let slot = count.entry(&e.crossing).or_default();
        if inside[i] {
            slot.0 += 1;
        } else {
            slot.1 += 1;
        }
    }
    let mut leaks: Vec<&CrossingId> = Vec::new();
    for e in code.entries() {
        let (i, o) = count[&e.crossing];
        if i > 0 && o > 0 && !leaks.contains(&&e.crossing) {
            leaks.push(&e.crossing);
        }
    }
    out.extend(leaks.into_iter().map(|c| BlockViolation::Leak { crossing: c.clone() }));
    out
}

fn ensure_blocks(code: &GaussCode, pair: &BlockPair) -> Result<()> {
    code.ensure_valid()?;
    let v = validate_blocks(code, pair);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidBlocks(v))
    }
}

/// Every valid pair of nonempty blocks, each shorter than the code, listed
/// once up to exchanging the blocks.
pub fn enumerate_block_pairs(code: &GaussCode) -> Result<Vec<BlockPair>> {
    code.ensure_valid()?;
    let n = code.len();
    let mut out = Vec::new();
    for s1 in 0..n {
        for l1 in 1..n {
            let first = BlockRange::new(s1, l1);
            for gap in 0..n - l1 {
                let s2 = (s1 + l1 + gap) % n;
                for l2 in 1..=(n - l1 - gap) {
                    let second = BlockRange::new(s2, l2);
                    if (s2, l2) < (s1, l1) {
                        continue;
                    }
                    let pair = BlockPair::new(first, second);
                    if validate_blocks(code, &pair).is_empty() {
                        out.push(pair);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Result of a mutation together with the blocks the moved contents occupy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutant {
    pub code: GaussCode,
    /// `first` now holds the former second block, `second` the former first.
    pub image: BlockPair,
}

/// Exchange the blocks, transforming each moved entry with `f`.
fn exchange(code: &GaussCode, pair: &BlockPair, f: impl Fn(&GaussEntry) -> GaussEntry) -> Result<Mutant> {
    ensure_blocks(code, pair)?;
    let n = code.len();
    if n == 0 {
        return Ok(Mutant { code: code.clone(), image: *pair });
    }
    let a = pair.first.start;
    let rotated = code.rotated(a);
    let e = rotated.entries();
    let l1 = pair.first.len;
    let l2 = pair.second.len;
    let b = (pair.second.start + n - a) % n;
    let b = if l2 == 0 { b.max(l1) } else { b };
    let mut out: Vec<GaussEntry> = Vec::with_capacity(n);
    out.extend(e[b..b + l2].iter().map(&f));
    out.extend_from_slice(&e[l1..b]);
    out.extend(e[..l1].iter().map(&f));
    out.extend_from_slice(&e[b + l2..]);
    let mid = b - l1;
    let mut entries = alloc::vec![out[0].clone(); n];
    for (i, x) in out.into_iter().enumerate() {
        entries[(i + a) % n] = x;
    }
    let image = BlockPair::new(BlockRange::new(a, l2), BlockRange::new((a + l2 + mid) % n, l1));
    Ok(Mutant { code: GaussCode::new(entries), image })
}

pub fn reflect(code: &GaussCode, pair: &BlockPair) -> Result<Mutant> {
    exchange(code, pair, GaussEntry::flipped)
}

pub fn rotate(code: &GaussCode, pair: &BlockPair) -> Result<Mutant> {
    exchange(code, pair, GaussEntry::clone)
}

pub fn mutate(code: &GaussCode, pair: &BlockPair, kind: MutationKind) -> Result<Mutant> {
    match kind {
        MutationKind::PositiveReflection => reflect(code, pair),
        MutationKind::PositiveRotation => rotate(code, pair),
    }
}

pub fn mutate_reflection(code: &GaussCode, pair: &BlockPair) -> Result<GaussCode> {
    Ok(reflect(code, pair)?.code)
}

pub fn mutate_rotation(code: &GaussCode, pair: &BlockPair) -> Result<GaussCode> {
    Ok(rotate(code, pair)?.code)
}

/// Sum of arc-label increments across a block.
pub fn block_label_change(code: &GaussCode, block: &BlockRange) -> i64 {
    let n = code.len();
    block.positions(n).map(|i| labeling::increment(&code.entries()[i])).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectionRow {
    pub kind: MutationKind,
    pub mutant: GaussCode,
    pub before: LaurentPoly,
    pub after: LaurentPoly,
    pub detected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationReport {
    pub rows: Vec<DetectionRow>,
}

impl MutationReport {
    pub fn row(&self, kind: MutationKind) -> &DetectionRow {
        self.rows.iter().find(|r| r.kind == kind).expect("both kinds are reported")
    }
}

pub fn mutation_detection_report(code: &GaussCode, pair: &BlockPair) -> Result<MutationReport> {
    ensure_blocks(code, pair)?;
    let before = affine_index_polynomial(code)?;
    let mut rows = Vec::new();
    for kind in MutationKind::ALL {
        let mutant = mutate(code, pair, kind)?.code;
        let after = affine_index_polynomial(&mutant)?;
        let detected = after != before;
        rows.push(DetectionRow { kind, mutant, before: before.clone(), after, detected });
    }
    Ok(MutationReport { rows })
}
