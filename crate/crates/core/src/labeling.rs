//! Integer arc labels and the algebraic crossing weight.
//!
//! An arc is the gap between two consecutive entries. Travelling along the
//! code the label changes at every passage by
//!
//! | entry | change |
//! |-------|--------|
//! | `O+`  | -1     |
//! | `U+`  | +1     |
//! | `O-`  | +1     |
//! | `U-`  | -1     |

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::Result;
use crate::gauss::{CrossingId, GaussCode, GaussEntry, Parity, Passage, Sign};

pub type CrossingWeightTable = BTreeMap<CrossingId, i64>;

pub fn increment(entry: &GaussEntry) -> i64 {
    match (entry.passage, entry.sign) {
        (Passage::Over, Sign::Plus) | (Passage::Under, Sign::Minus) => -1,
        (Passage::Under, Sign::Plus) | (Passage::Over, Sign::Minus) => 1,
    }
}

/// `labels[i]` is the label of the arc right after entry `i`; the arc before
/// entry 0 carries `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcLabels {
    pub offset: i64,
    pub labels: Vec<i64>,
}

impl ArcLabels {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn after(&self, i: usize) -> i64 {
        self.labels[i]
    }

    pub fn before(&self, i: usize) -> i64 {
        if i == 0 {
            self.offset
        } else {
            self.labels[i - 1]
        }
    }

    /// Labels closed up: the arc after the last entry is the arc before entry 0.
    pub fn closes_up(&self) -> bool {
        self.labels.last().is_none_or(|&l| l == self.offset)
    }

    pub fn shifted(&self, by: i64) -> ArcLabels {
        ArcLabels { offset: self.offset + by, labels: self.labels.iter().map(|l| l + by).collect() }
    }

    /// `Some(k)` when `other` equals `self` shifted by `k`.
    pub fn constant_shift_to(&self, other: &ArcLabels) -> Option<i64> {
        if self.labels.len() != other.labels.len() {
            return None;
        }
        let k = other.offset - self.offset;
        self.labels.iter().zip(&other.labels).all(|(a, b)| b - a == k).then_some(k)
    }
}

pub fn label_arcs(code: &GaussCode, start_label: i64) -> Result<ArcLabels> {
    code.ensure_valid()?;
    let mut label = start_label;
    let labels = code
        .entries()
        .iter()
        .map(|e| {
            label += increment(e);
            label
        })
        .collect();
    Ok(ArcLabels { offset: start_label, labels })
}

/// Each arc is labelled by the sum of signs of the crossings that, on a full
/// trip starting from that arc, are met as an over-passage first.
pub fn cheng_labels(code: &GaussCode) -> Result<ArcLabels> {
    code.ensure_valid()?;
    let n = code.len();
    let entries = code.entries();
    let from_arc = |start: usize| -> i64 {
        let mut met: BTreeSet<&CrossingId> = BTreeSet::new();
        let mut total = 0;
        for k in 0..n {
            let e = &entries[(start + k) % n];
            if met.insert(&e.crossing) && e.passage == Passage::Over {
                total += e.sign.value();
            }
        }
        total
    };
    let offset = from_arc(0);
    let labels = (0..n).map(|i| from_arc((i + 1) % n.max(1))).collect();
    Ok(ArcLabels { offset, labels })
}

/// Label of the arc entering the over-passage minus label of the arc leaving
/// the under-passage.
pub fn algebraic_weight(code: &GaussCode, crossing: &CrossingId) -> Result<i64> {
    let chord = code.chord(crossing)?;
    let labels = label_arcs(code, 0)?;
    Ok(labels.before(chord.over) - labels.after(chord.under))
}

pub fn weight_table(code: &GaussCode) -> Result<CrossingWeightTable> {
    let labels = label_arcs(code, 0)?;
    Ok(code
        .chords()?
        .into_iter()
        .map(|ch| {
            let w = labels.before(ch.over) - labels.after(ch.under);
            (ch.id, w)
        })
        .collect())
}

pub fn has_classical_labeling(code: &GaussCode, crossing: &CrossingId) -> Result<bool> {
    Ok(algebraic_weight(code, crossing)? == 0)
}

/// Every crossing is odd or has nonzero weight; vacuously true for the unknot.
pub fn is_pure_virtual(code: &GaussCode) -> Result<bool> {
    let weights = weight_table(code)?;
    Ok(code
        .chords()?
        .iter()
        .all(|ch| ch.parity() == Parity::Odd || weights[&ch.id] != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> GaussCode {
        s.parse().unwrap()
    }

    fn id(s: &str) -> CrossingId {
        CrossingId::from(s)
    }

    const TREFOIL: &str = "O1+U2+O3-U1+O2+U3-";

    #[test]
    fn labels_of_the_trefoil() {
        let l = label_arcs(&code(TREFOIL), 0).unwrap();
        assert_eq!(l.labels, [-1, 0, 1, 2, 1, 0]);
        assert!(l.closes_up());
        assert_eq!(label_arcs(&code(""), 0).unwrap(), ArcLabels { offset: 0, labels: Vec::new() });
        assert_eq!(label_arcs(&code("O1+U1+"), 5).unwrap().labels, [4, 5]);
    }

    #[test]
    fn trefoil_weights() {
        let c = code(TREFOIL);
        assert_eq!(algebraic_weight(&c, &id("1")).unwrap(), -2);
        assert_eq!(algebraic_weight(&c, &id("2")).unwrap(), 2);
        assert_eq!(algebraic_weight(&c, &id("3")).unwrap(), 0);
        let t = weight_table(&c).unwrap();
        assert_eq!(t.values().copied().collect::<Vec<_>>(), [-2, 2, 0]);
        assert_eq!(weight_table(&code("O1+U1+")).unwrap()[&id("1")], 0);
    }

    #[test]
    fn classical_labeling_and_pure_virtual() {
        assert!(has_classical_labeling(&code(TREFOIL), &id("3")).unwrap());
        assert!(!has_classical_labeling(&code("O1+O2+U1+U2+"), &id("1")).unwrap());
        assert!(is_pure_virtual(&code("O1+O2+U1+U2+")).unwrap());
        assert!(!is_pure_virtual(&code(TREFOIL)).unwrap());
        assert!(is_pure_virtual(&code("")).unwrap());
    }

    #[test]
    fn cheng_labels_of_small_codes() {
        let kink = cheng_labels(&code("O1+U1+")).unwrap();
        assert_eq!(kink.offset, 1);
        assert_eq!(kink.labels, [0, 1]);
        for s in ["O1+U1+", "O1+O2+U1+U2+", TREFOIL] {
            let c = code(s);
            let a = label_arcs(&c, 0).unwrap();
            assert!(a.constant_shift_to(&cheng_labels(&c).unwrap()).is_some(), "{s}");
        }
    }

    #[test]
    fn unknown_crossing_is_rejected() {
        assert!(algebraic_weight(&code("O1+U1+"), &id("x")).is_err());
    }
}
