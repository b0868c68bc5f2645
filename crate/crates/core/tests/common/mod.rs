#![allow(dead_code)]

use proptest::prelude::*;
use vkt_core::{GaussCode, GaussEntry, Passage, Sign};

/// Codes with up to `max` crossings: a shuffled arrangement of chord endpoints
/// with independent signs and orientations.
pub fn code_strategy(max: usize) -> impl Strategy<Value = GaussCode> {
    (0..=max).prop_flat_map(|k| {
        let slots: Vec<usize> = (0..2 * k).collect();
        (Just(slots).prop_shuffle(), prop::collection::vec(any::<(bool, bool)>(), k)).prop_map(move |(order, bits)| {
            order
                .into_iter()
                .map(|slot| {
                    let c = slot / 2;
                    let (negative, flip) = bits[c];
                    let over = (slot % 2 == 0) != flip;
                    GaussEntry::new(
                        (c + 1) as u32,
                        if over { Passage::Over } else { Passage::Under },
                        if negative { Sign::Minus } else { Sign::Plus },
                    )
                })
                .collect()
        })
    })
}

pub fn code(s: &str) -> GaussCode {
    s.parse().unwrap()
}
