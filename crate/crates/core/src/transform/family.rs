//! The mutant pairs K1/MK1, K2/MK2 and the families obtained by twisting one
//! designated crossing.

use alloc::string::String;

use crate::error::{Error, Result};
use crate::gauss::{CrossingId, GaussCode};
use crate::mutation::{BlockPair, BlockRange};

use super::twist_replace;

pub const K1_TEXT: &str = include_str!("../../../../fixtures/k1.gauss");
pub const MK1_TEXT: &str = include_str!("../../../../fixtures/mk1.gauss");
pub const K2_TEXT: &str = include_str!("../../../../fixtures/k2.gauss");
pub const MK2_TEXT: &str = include_str!("../../../../fixtures/mk2.gauss");

/// Drop `#` comment lines from fixture text.
pub fn strip_comments(text: &str) -> String {
    let mut out = String::new();
    for line in text.lines().filter(|l| !l.trim_start().starts_with('#')) {
        out.push_str(line);
        out.push('\n');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyBase {
    K1,
    MK1,
    K2,
    MK2,
}

impl FamilyBase {
    pub const ALL: [FamilyBase; 4] = [FamilyBase::K1, FamilyBase::MK1, FamilyBase::K2, FamilyBase::MK2];

    pub fn name(self) -> &'static str {
        match self {
            FamilyBase::K1 => "K1",
            FamilyBase::MK1 => "MK1",
            FamilyBase::K2 => "K2",
            FamilyBase::MK2 => "MK2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        FamilyBase::ALL.into_iter().find(|b| b.name().eq_ignore_ascii_case(name))
    }

    fn text(self) -> &'static str {
        match self {
            FamilyBase::K1 => K1_TEXT,
            FamilyBase::MK1 => MK1_TEXT,
            FamilyBase::K2 => K2_TEXT,
            FamilyBase::MK2 => MK2_TEXT,
        }
    }

    /// Number of twists in the base diagram (1 or 2).
    pub fn base_n(self) -> u32 {
        match self {
            FamilyBase::K1 | FamilyBase::MK1 => 1,
            FamilyBase::K2 | FamilyBase::MK2 => 2,
        }
    }

    pub fn code(self) -> GaussCode {
        strip_comments(self.text()).parse().expect("bundled fixture parses")
    }

    pub fn blocks(self) -> BlockPair {
        let (a, b) = match self {
            FamilyBase::K1 | FamilyBase::MK1 => ((0, 3), (5, 3)),
            FamilyBase::K2 => ((0, 3), (5, 1)),
            FamilyBase::MK2 => ((0, 1), (3, 3)),
        };
        BlockPair::new(BlockRange::new(a.0, a.1), BlockRange::new(b.0, b.1))
    }

    pub fn twist_crossing(self) -> CrossingId {
        match self {
            FamilyBase::K1 | FamilyBase::MK1 => CrossingId::from("C1"),
            FamilyBase::K2 | FamilyBase::MK2 => CrossingId::from("C2"),
        }
    }

    /// The other member of the mutant pair.
    pub fn partner(self) -> Self {
        match self {
            FamilyBase::K1 => FamilyBase::MK1,
            FamilyBase::MK1 => FamilyBase::K1,
            FamilyBase::K2 => FamilyBase::MK2,
            FamilyBase::MK2 => FamilyBase::K2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub base: FamilyBase,
    pub n: u32,
    pub code: GaussCode,
    /// The mutation blocks carried along through the twists.
    pub blocks: BlockPair,
    pub twist_crossing: CrossingId,
}

/// Move a block through a twist that replaced the entries at `p` and `q`
/// with three entries each.
fn transport(block: BlockRange, p: usize, q: usize) -> BlockRange {
    let grow = |i: usize| if i == p || i == q { 3 } else { 1 };
    let start = (0..block.start).map(grow).sum();
    let len = (block.start..block.start + block.len).map(grow).sum();
    BlockRange::new(start, len)
}

/// Twist the designated crossing until the twist region has `n` crossings.
pub fn family(base: FamilyBase, n: u32) -> Result<FamilyMember> {
    let b = base.base_n();
    if n < b || !(n - b).is_multiple_of(2) {
        return Err(Error::FamilyIndex { base: base.name(), n });
    }
    let mut member = FamilyMember {
        base,
        n: b,
        code: base.code(),
        blocks: base.blocks(),
        twist_crossing: base.twist_crossing(),
    };
    while member.n < n {
        let len = member.code.len();
        let t = twist_replace(&member.code, &member.twist_crossing)?;
        let [p, q] = t.replaced;
        let unwrap = |r: BlockRange| {
            if r.start + r.len > len {
                None
            } else {
                Some(transport(r, p, q))
            }
        };
        member.blocks = BlockPair::new(
            unwrap(member.blocks.first).expect("bundled blocks do not wrap"),
            unwrap(member.blocks.second).expect("bundled blocks do not wrap"),
        );
        member.code = t.code;
        member.twist_crossing = t.crossings[0].clone();
        member.n += 2;
    }
    Ok(member)
}
