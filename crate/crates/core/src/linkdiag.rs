//! Oriented smoothing of a crossing, virtual linking numbers and the chord
//! form of the wriggle number.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gauss::{strictly_between, CrossingId, GaussCode, GaussEntry, Passage};

/// Two-component link with a designated first component.
///
/// `first` is the component carrying the dot on the incoming under-strand of
/// the smoothed crossing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderedTwoComponentLink {
    pub first: Vec<GaussEntry>,
    pub second: Vec<GaussEntry>,
}

impl OrderedTwoComponentLink {
    pub fn new(first: Vec<GaussEntry>, second: Vec<GaussEntry>) -> Self {
        OrderedTwoComponentLink { first, second }
    }

    /// Checks occurrence counts, complementary passages and equal signs
    /// across the union of the two components.
    pub fn validate(&self) -> Result<()> {
        let mut seen: BTreeMap<&CrossingId, Vec<&GaussEntry>> = BTreeMap::new();
        for e in self.first.iter().chain(&self.second) {
            seen.entry(&e.crossing).or_default().push(e);
        }
        for occ in seen.values() {
            if occ.len() != 2 {
                return Err(Error::InvalidLink("a crossing does not occur exactly twice"));
            }
            if occ[0].passage == occ[1].passage {
                return Err(Error::InvalidLink("a crossing has two equal passages"));
            }
            if occ[0].sign != occ[1].sign {
                return Err(Error::InvalidLink("a crossing has mismatched signs"));
            }
        }
        Ok(())
    }

    /// Crossings with one occurrence in each component.
    pub fn linking_crossings(&self) -> BTreeSet<CrossingId> {
        let a: BTreeSet<&CrossingId> = self.first.iter().map(|e| &e.crossing).collect();
        self.second
            .iter()
            .filter(|e| a.contains(&e.crossing))
            .map(|e| e.crossing.clone())
            .collect()
    }

    fn lk_with(&self, passage: Passage) -> i64 {
        let linking = self.linking_crossings();
        self.first
            .iter()
            .filter(|e| e.passage == passage && linking.contains(&e.crossing))
            .map(|e| e.sign.value())
            .sum()
    }

    pub fn lk_over(&self) -> i64 {
        self.lk_with(Passage::Over)
    }

    pub fn lk_under(&self) -> i64 {
        self.lk_with(Passage::Under)
    }

    pub fn wriggle_number(&self) -> i64 {
        self.lk_over() - self.lk_under()
    }

    pub fn swap_order(&self) -> Self {
        OrderedTwoComponentLink { first: self.second.clone(), second: self.first.clone() }
    }
}

/// Smooth `crossing`: the first component is the cyclic run of entries
/// strictly after its Over passage and strictly before its Under passage.
pub fn smooth(code: &GaussCode, crossing: &CrossingId) -> Result<OrderedTwoComponentLink> {
    let chord = code.chord(crossing)?;
    let n = code.len();
    let run = |from: usize, to: usize| -> Vec<GaussEntry> {
        let mut out = Vec::new();
        let mut i = (from + 1) % n;
        while i != to {
            out.push(code.entries()[i].clone());
            i = (i + 1) % n;
        }
        out
    };
    Ok(OrderedTwoComponentLink { first: run(chord.over, chord.under), second: run(chord.under, chord.over) })
}

pub fn lk_over(link: &OrderedTwoComponentLink) -> i64 {
    link.lk_over()
}

pub fn lk_under(link: &OrderedTwoComponentLink) -> i64 {
    link.lk_under()
}

pub fn wriggle_number(link: &OrderedTwoComponentLink) -> i64 {
    link.wriggle_number()
}

pub fn swap_order(link: &OrderedTwoComponentLink) -> OrderedTwoComponentLink {
    link.swap_order()
}

/// Chords crossing a distinguished chord, split by the sign of the intersection.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChordIntersections {
    pub positive: BTreeSet<CrossingId>,
    pub negative: BTreeSet<CrossingId>,
}

/// Classify the chords interleaving `crossing`. A chord is positive when its
/// Over endpoint lies on the arc running from the Over to the Under endpoint
/// of `crossing`, negative when its Under endpoint does.
pub fn chord_intersections(code: &GaussCode, crossing: &CrossingId) -> Result<ChordIntersections> {
    let chords = code.chords()?;
    let c = chords
        .iter()
        .find(|ch| &ch.id == crossing)
        .ok_or_else(|| Error::UnknownCrossing(crossing.clone()))?;
    let n = code.len();
    let mut out = ChordIntersections::default();
    for d in chords.iter().filter(|d| &d.id != crossing) {
        let over_in = strictly_between(c.over, c.under, d.over, n);
        let under_in = strictly_between(c.over, c.under, d.under, n);
        match (over_in, under_in) {
            (true, false) => {
                out.positive.insert(d.id.clone());
            }
            (false, true) => {
                out.negative.insert(d.id.clone());
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Signed intersection count: `sum(sign over P) - sum(sign over N)`.
pub fn chord_weight(code: &GaussCode, crossing: &CrossingId) -> Result<i64> {
    let sets = chord_intersections(code, crossing)?;
    let signs: BTreeMap<CrossingId, i64> =
        code.chords()?.into_iter().map(|ch| (ch.id, ch.sign.value())).collect();
    let p: i64 = sets.positive.iter().map(|id| signs[id]).sum();
    let q: i64 = sets.negative.iter().map(|id| signs[id]).sum();
    Ok(p - q)
}
