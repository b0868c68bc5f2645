//! Reidemeister moves on Gauss codes.
//!
//! * R1: a crossing whose two entries are cyclically adjacent.
//! * R2: two crossings of opposite sign whose Over entries are adjacent and
//!   whose Under entries are adjacent, in either relative order.
//! * R3: three crossings occupying three disjoint adjacent pairs of positions;
//!   the move swaps each pair.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::gauss::{CrossingId, GaussCode, GaussEntry, Passage, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
}

/// Order of the two entries of an inserted kink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KinkOrder {
    OverFirst,
    UnderFirst,
}

/// Whether the second pair of an inserted bigon repeats or reverses the
/// crossing order of the first pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum R2Orientation {
    Same,
    Reversed,
}

fn check_gap(code: &GaussCode, position: usize) -> Result<()> {
    if position > code.len() {
        Err(Error::PositionOutOfRange { position, len: code.len() })
    } else {
        Ok(())
    }
}

/// Insert a fresh kink before entry `position` (`position == len` appends).
pub fn r1_insert(code: &GaussCode, position: usize, sign: Sign, order: KinkOrder) -> Result<GaussCode> {
    code.ensure_valid()?;
    check_gap(code, position)?;
    let c = code.fresh_ids(1).remove(0);
    let (a, b) = match order {
        KinkOrder::OverFirst => (Passage::Over, Passage::Under),
        KinkOrder::UnderFirst => (Passage::Under, Passage::Over),
    };
    let mut entries = code.entries().to_vec();
    entries.insert(position, GaussEntry::new(c.clone(), b, sign));
    entries.insert(position, GaussEntry::new(c, a, sign));
    Ok(GaussCode::new(entries))
}

fn adjacent(i: usize, j: usize, n: usize) -> bool {
    n > 1 && ((i + 1) % n == j || (j + 1) % n == i)
}

pub fn r1_delete(code: &GaussCode, crossing: &CrossingId) -> Result<GaussCode> {
    let ch = code.chord(crossing)?;
    if !adjacent(ch.over, ch.under, code.len()) {
        return Err(Error::NotAKink(crossing.clone()));
    }
    Ok(code.entries().iter().filter(|e| &e.crossing != crossing).cloned().collect())
}

/// Crossings removable by `r1_delete`, in order of first appearance.
pub fn find_kinks(code: &GaussCode) -> Result<Vec<CrossingId>> {
    let n = code.len();
    Ok(code.chords()?.into_iter().filter(|c| adjacent(c.over, c.under, n)).map(|c| c.id).collect())
}

/// Insert a bigon between two fresh crossings `c1` (sign `sign`) and `c2`
/// (sign `-sign`). Before entry `pos_a` goes `c1 c2`, both with passage
/// `passage`; before entry `pos_b` goes the complementary pair, in the same
/// or reversed order. At a shared gap the `pos_a` pair comes first.
pub fn r2_insert(
    code: &GaussCode,
    pos_a: usize,
    pos_b: usize,
    sign: Sign,
    passage: Passage,
    orientation: R2Orientation,
) -> Result<GaussCode> {
    code.ensure_valid()?;
    check_gap(code, pos_a)?;
    check_gap(code, pos_b)?;
    let ids = code.fresh_ids(2);
    let (c1, c2) = (&ids[0], &ids[1]);
    let first = [GaussEntry::new(c1.clone(), passage, sign), GaussEntry::new(c2.clone(), passage, -sign)];
    let mut second = [
        GaussEntry::new(c1.clone(), passage.complement(), sign),
        GaussEntry::new(c2.clone(), passage.complement(), -sign),
    ];
    if orientation == R2Orientation::Reversed {
        second.swap(0, 1);
    }
    let mut entries = Vec::with_capacity(code.len() + 4);
    for i in 0..=code.len() {
        if i == pos_a {
            entries.extend_from_slice(&first);
        }
        if i == pos_b {
            entries.extend_from_slice(&second);
        }
        if let Some(e) = code.entries().get(i) {
            entries.push(e.clone());
        }
    }
    Ok(GaussCode::new(entries))
}

fn is_bigon(code: &GaussCode, a: &CrossingId, b: &CrossingId) -> Result<bool> {
    if a == b {
        return Ok(false);
    }
    let (x, y) = (code.chord(a)?, code.chord(b)?);
    let n = code.len();
    Ok(x.sign != y.sign && adjacent(x.over, y.over, n) && adjacent(x.under, y.under, n))
}

pub fn r2_delete(code: &GaussCode, c1: &CrossingId, c2: &CrossingId) -> Result<GaussCode> {
    if !is_bigon(code, c1, c2)? {
        return Err(Error::NotABigon(c1.clone(), c2.clone()));
    }
    Ok(code.entries().iter().filter(|e| &e.crossing != c1 && &e.crossing != c2).cloned().collect())
}

/// Pairs removable by `r2_delete`, each listed once with the crossing whose
/// Over entry comes first.
pub fn find_bigons(code: &GaussCode) -> Result<Vec<(CrossingId, CrossingId)>> {
    code.ensure_valid()?;
    let n = code.len();
    let e = code.entries();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if i == j || e[i].passage != Passage::Over || e[j].passage != Passage::Over {
            continue;
        }
        let (a, b) = (&e[i].crossing, &e[j].crossing);
        if a != b && is_bigon(code, a, b)? {
            let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
            if seen.insert(key) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// Three disjoint adjacent pairs `(p, p+1)` of positions, identified by their
/// first positions in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct R3Site {
    pub pairs: [usize; 3],
}

impl R3Site {
    pub fn new(mut pairs: [usize; 3]) -> Self {
        pairs.sort_unstable();
        R3Site { pairs }
    }
}

impl fmt::Display for R3Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.pairs[0], self.pairs[1], self.pairs[2])
    }
}

/// Oriented R3 predicate. The pair whose entries are both Over belongs to the
/// top strand `T`, both Under to the bottom strand `B`, mixed to the middle
/// strand `M`; the chords are `TM`, `TB`, `MB`. With `o_T` (resp. `o_M`,
/// `o_B`) true when `TM` (resp. `TM`, `TB`) is met first along that strand,
/// the site is valid iff
/// `s_TM s_TB = (-1)^(o_M + o_B)` and `s_TB s_MB = (-1)^(o_T + o_M)`.
pub fn r3_pattern_valid(o_t: bool, o_m: bool, o_b: bool, s_tm: Sign, s_tb: Sign, s_mb: Sign) -> bool {
    let par = |a: bool, b: bool| if a ^ b { -1 } else { 1 };
    s_tm.value() * s_tb.value() == par(o_m, o_b) && s_tb.value() * s_mb.value() == par(o_t, o_m)
}

fn classify_site(code: &GaussCode, site: &R3Site) -> Option<bool> {
    let n = code.len();
    let e = code.entries();
    let [a, b, c] = site.pairs;
    if n < 6 || c >= n {
        return None;
    }
    let cells: [usize; 6] = [a, (a + 1) % n, b, (b + 1) % n, c, (c + 1) % n];
    let distinct: BTreeSet<usize> = cells.iter().copied().collect();
    if distinct.len() != 6 {
        return None;
    }
    let pair = |k: usize| (&e[cells[2 * k]], &e[cells[2 * k + 1]]);
    let mut top = None;
    let mut mid = None;
    let mut bot = None;
    for k in 0..3 {
        let (x, y) = pair(k);
        if x.crossing == y.crossing {
            return None;
        }
        match (x.passage, y.passage) {
            (Passage::Over, Passage::Over) => top = Some(k),
            (Passage::Under, Passage::Under) => bot = Some(k),
            _ => mid = Some(k),
        }
    }
    let (t, m, bt) = (pair(top?), pair(mid?), pair(bot?));
    let t_ids = [&t.0.crossing, &t.1.crossing];
    let m_ids = [&m.0.crossing, &m.1.crossing];
    let b_ids = [&bt.0.crossing, &bt.1.crossing];
    // TM is shared by the T and M pairs; it must be the Under entry in M.
    let m_under = if m.0.passage == Passage::Under { m.0 } else { m.1 };
    let m_over = if m.0.passage == Passage::Over { m.0 } else { m.1 };
    let tm = &m_under.crossing;
    let mb = &m_over.crossing;
    if !t_ids.contains(&tm) || !b_ids.contains(&mb) {
        return None;
    }
    let tb = if t_ids[0] == tm { t_ids[1] } else { t_ids[0] };
    if !b_ids.contains(&tb) || tb == mb || tb == tm {
        return None;
    }
    let sign_of = |id: &CrossingId| e.iter().find(|x| &x.crossing == id).map(|x| x.sign);
    let o_t = t_ids[0] == tm;
    let o_m = m_ids[0] == tm;
    let o_b = b_ids[0] == tb;
    Some(r3_pattern_valid(o_t, o_m, o_b, sign_of(tm)?, sign_of(tb)?, sign_of(mb)?))
}

pub fn r3_apply(code: &GaussCode, site: &R3Site) -> Result<GaussCode> {
    code.ensure_valid()?;
    if classify_site(code, site) != Some(true) {
        return Err(Error::NotAnR3Site(*site));
    }
    let n = code.len();
    let mut entries = code.entries().to_vec();
    for &p in &site.pairs {
        entries.swap(p, (p + 1) % n);
    }
    Ok(GaussCode::new(entries))
}

/// All valid R3 sites, sorted.
pub fn r3_sites(code: &GaussCode) -> Result<Vec<R3Site>> {
    code.ensure_valid()?;
    let n = code.len();
    if n < 6 {
        return Ok(Vec::new());
    }
    let e = code.entries();
    let ids = |i: usize| -> (&CrossingId, &CrossingId) { (&e[i].crossing, &e[(i + 1) % n].crossing) };
    let shares = |i: usize, c: &CrossingId| {
        let (x, y) = ids(i);
        x == c || y == c
    };
    let mut found = BTreeSet::new();
    for i in 0..n {
        let (a, b) = ids(i);
        if a == b {
            continue;
        }
        for j in 0..n {
            if j == i || !shares(j, a) || shares(j, b) {
                continue;
            }
            let (x, y) = ids(j);
            let c = if x == a { y } else { x };
            for k in 0..n {
                if k != i && k != j && shares(k, b) && shares(k, c) {
                    let site = R3Site::new([i, j, k]);
                    if classify_site(code, &site) == Some(true) {
                        found.insert(site);
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// One replayable move.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    R1Insert { position: usize, sign: Sign, order: KinkOrder },
    R1Delete { crossing: CrossingId },
    R2Insert { pos_a: usize, pos_b: usize, sign: Sign, passage: Passage, orientation: R2Orientation },
    R2Delete { first: CrossingId, second: CrossingId },
    R3(R3Site),
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Insert { .. } => MoveKind::R1Insert,
            Move::R1Delete { .. } => MoveKind::R1Delete,
            Move::R2Insert { .. } => MoveKind::R2Insert,
            Move::R2Delete { .. } => MoveKind::R2Delete,
            Move::R3(_) => MoveKind::R3,
        }
    }
}

pub fn apply_move(code: &GaussCode, mv: &Move) -> Result<GaussCode> {
    match mv {
        Move::R1Insert { position, sign, order } => r1_insert(code, *position, *sign, *order),
        Move::R1Delete { crossing } => r1_delete(code, crossing),
        Move::R2Insert { pos_a, pos_b, sign, passage, orientation } => {
            r2_insert(code, *pos_a, *pos_b, *sign, *passage, *orientation)
        }
        Move::R2Delete { first, second } => r2_delete(code, first, second),
        Move::R3(site) => r3_apply(code, site),
    }
}

/// `r1+ 3 + ou`, `r1- c`, `r2+ 0 4 - over reversed`, `r2- a b`, `r3 0 3 7`.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::R1Insert { position, sign, order } => {
                let o = match order {
                    KinkOrder::OverFirst => "ou",
                    KinkOrder::UnderFirst => "uo",
                };
                write!(f, "r1+ {position} {} {o}", sign.symbol())
            }
            Move::R1Delete { crossing } => write!(f, "r1- {crossing}"),
            Move::R2Insert { pos_a, pos_b, sign, passage, orientation } => {
                let p = match passage {
                    Passage::Over => "over",
                    Passage::Under => "under",
                };
                let o = match orientation {
                    R2Orientation::Same => "same",
                    R2Orientation::Reversed => "reversed",
                };
                write!(f, "r2+ {pos_a} {pos_b} {} {p} {o}", sign.symbol())
            }
            Move::R2Delete { first, second } => write!(f, "r2- {first} {second}"),
            Move::R3(site) => write!(f, "r3 {site}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveParseError(pub String);

impl fmt::Display for MoveParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed move: {:?}", self.0)
    }
}

impl core::error::Error for MoveParseError {}

impl FromStr for Move {
    type Err = MoveParseError;

    fn from_str(s: &str) -> core::result::Result<Self, MoveParseError> {
        let bad = || MoveParseError(s.to_string());
        let words: Vec<&str> = s.split_whitespace().collect();
        let num = |w: &str| w.parse::<usize>().map_err(|_| bad());
        let sign = |w: &str| match w {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(bad()),
        };
        let crossing = |w: &str| {
            if CrossingId::is_valid_name(w) {
                Ok(CrossingId::from(w))
            } else {
                Err(bad())
            }
        };
        match words.as_slice() {
            ["r1+", p, s, o] => Ok(Move::R1Insert {
                position: num(p)?,
                sign: sign(s)?,
                order: match *o {
                    "ou" => KinkOrder::OverFirst,
                    "uo" => KinkOrder::UnderFirst,
                    _ => return Err(bad()),
                },
            }),
            ["r1-", c] => Ok(Move::R1Delete { crossing: crossing(c)? }),
            ["r2+", a, b, s, p, o] => Ok(Move::R2Insert {
                pos_a: num(a)?,
                pos_b: num(b)?,
                sign: sign(s)?,
                passage: match *p {
                    "over" => Passage::Over,
                    "under" => Passage::Under,
                    _ => return Err(bad()),
                },
                orientation: match *o {
                    "same" => R2Orientation::Same,
                    "reversed" => R2Orientation::Reversed,
                    _ => return Err(bad()),
                },
            }),
            ["r2-", a, b] => Ok(Move::R2Delete { first: crossing(a)?, second: crossing(b)? }),
            ["r3", i, j, k] => Ok(Move::R3(R3Site::new([num(i)?, num(j)?, num(k)?]))),
            _ => Err(bad()),
        }
    }
}
