//! Generators of Gauss codes for fuzzing and exhaustive checks.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gauss::{CrossingId, GaussCode, GaussEntry, Passage, Sign};
use crate::mutation::{BlockPair, BlockRange};
use crate::transform::{r3_pattern_valid, R3Site};

fn sign(rng: &mut impl Rng) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn chord_entries(id: u32, s: Sign) -> [GaussEntry; 2] {
    [GaussEntry::new(id, Passage::Over, s), GaussEntry::new(id, Passage::Under, s)]
}

/// Uniformly shuffled code with crossings `1..=crossings` and random signs.
pub fn random_code(rng: &mut impl Rng, crossings: usize) -> GaussCode {
    let mut entries: Vec<GaussEntry> =
        (1..=crossings as u32).flat_map(|c| chord_entries(c, sign(rng))).collect();
    entries.shuffle(rng);
    GaussCode::new(entries)
}

/// Random code together with a valid pair of nonempty blocks. The blocks hold
/// homebodies of their own and travelers shared between them; the remaining
/// crossings sit outside. The whole code is rotated by a random amount, so
/// blocks may wrap.
pub fn random_code_with_blocks(rng: &mut impl Rng, max_crossings: usize) -> (GaussCode, BlockPair) {
    let max = max_crossings.max(1);
    loop {
        let total = rng.gen_range(1..=max);
        let mut next = 1u32;
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let travelers = rng.gen_range(0..=total);
        let rest = total - travelers;
        let home1 = rng.gen_range(0..=rest);
        let home2 = rng.gen_range(0..=rest - home1);
        let outside = rest - home1 - home2;
        let mut b1 = Vec::new();
        let mut b2 = Vec::new();
        for _ in 0..travelers {
            let [o, u] = chord_entries(fresh(), sign(rng));
            if rng.gen() {
                b1.push(o);
                b2.push(u);
            } else {
                b1.push(u);
                b2.push(o);
            }
        }
        for _ in 0..home1 {
            b1.extend(chord_entries(fresh(), sign(rng)));
        }
        for _ in 0..home2 {
            b2.extend(chord_entries(fresh(), sign(rng)));
        }
        if b1.is_empty() || b2.is_empty() {
            continue;
        }
        b1.shuffle(rng);
        b2.shuffle(rng);
        let mut out: Vec<GaussEntry> = Vec::new();
        for _ in 0..outside {
            out.extend(chord_entries(fresh(), sign(rng)));
        }
        out.shuffle(rng);
        let split = rng.gen_range(0..=out.len());
        let (mid, tail) = out.split_at(split);
        let (l1, l2) = (b1.len(), b2.len());
        let mut entries = b1;
        entries.extend_from_slice(mid);
        entries.extend(b2);
        entries.extend_from_slice(tail);
        let n = entries.len();
        let shift = rng.gen_range(0..n);
        let code = GaussCode::new(entries).rotated(shift);
        let at = |p: usize| (p + n - shift) % n;
        let pair = BlockPair::new(BlockRange::new(at(0), l1), BlockRange::new(at(l1 + mid.len()), l2));
        let pair = if rng.gen() { pair.swapped() } else { pair };
        return (code, pair);
    }
}

/// Random code containing a valid R3 site on three fresh crossings, with
/// `extra` further random crossings around it. Returns the code and the site.
pub fn random_code_with_r3(rng: &mut impl Rng, extra: usize) -> (GaussCode, R3Site) {
    let base = random_code(rng, extra);
    let (tm, tb, mb): (CrossingId, CrossingId, CrossingId) = {
        let ids = base.fresh_ids(3);
        (ids[0].clone(), ids[1].clone(), ids[2].clone())
    };
    let (o_t, o_m, o_b) = (rng.gen::<bool>(), rng.gen::<bool>(), rng.gen::<bool>());
    let s_tm = sign(rng);
    let flip = |s: Sign, odd: bool| if odd { -s } else { s };
    let s_tb = flip(s_tm, o_m ^ o_b);
    let s_mb = flip(s_tb, o_t ^ o_m);
    debug_assert!(r3_pattern_valid(o_t, o_m, o_b, s_tm, s_tb, s_mb));
    let ordered = |first: GaussEntry, second: GaussEntry, keep: bool| {
        if keep {
            [first, second]
        } else {
            [second, first]
        }
    };
    let e = |id: &CrossingId, p: Passage, s: Sign| GaussEntry::new(id.clone(), p, s);
    let mut pairs = [ordered(e(&tm, Passage::Over, s_tm), e(&tb, Passage::Over, s_tb), o_t),
        ordered(e(&tm, Passage::Under, s_tm), e(&mb, Passage::Over, s_mb), o_m),
        ordered(e(&tb, Passage::Under, s_tb), e(&mb, Passage::Under, s_mb), o_b)];
    pairs.shuffle(rng);
    let n = base.len();
    let mut gaps: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=n)).collect();
    gaps.sort_unstable();
    let mut entries = Vec::with_capacity(n + 6);
    let mut starts = Vec::with_capacity(3);
    let mut k = 0;
    for i in 0..=n {
        while k < 3 && gaps[k] == i {
            starts.push(entries.len());
            entries.extend(pairs[k].clone());
            k += 1;
        }
        if let Some(x) = base.entries().get(i) {
            entries.push(x.clone());
        }
    }
    let code = GaussCode::new(entries);
    let total = code.len();
    let shift = rng.gen_range(0..total);
    let at = |p: usize| (p + total - shift) % total;
    let site = R3Site::new([at(starts[0]), at(starts[1]), at(starts[2])]);
    (code.rotated(shift), site)
}

/// Every valid code with exactly `crossings` crossings whose names appear in
/// the order `1, 2, ...`: all chord matchings, orientations and signs.
pub fn enumerate_codes(crossings: usize) -> Vec<GaussCode> {
    let n = 2 * crossings;
    let mut matchings = Vec::new();
    let mut slots = vec![0u32; n];
    fn place(slots: &mut [u32], next: u32, out: &mut Vec<Vec<u32>>) {
        let Some(first) = slots.iter().position(|&s| s == 0) else {
            out.push(slots.to_vec());
            return;
        };
        slots[first] = next;
        for j in first + 1..slots.len() {
            if slots[j] == 0 {
                slots[j] = next;
                place(slots, next + 1, out);
                slots[j] = 0;
            }
        }
        slots[first] = 0;
    }
    place(&mut slots, 1, &mut matchings);
    let mut out = Vec::new();
    for m in &matchings {
        for orient in 0u32..(1 << crossings) {
            for signs in 0u32..(1 << crossings) {
                let mut seen = vec![false; crossings + 1];
                let entries = m
                    .iter()
                    .map(|&c| {
                        let bit = 1 << (c - 1);
                        let s = if signs & bit == 0 { Sign::Plus } else { Sign::Minus };
                        let first_is_over = orient & bit == 0;
                        let is_first = !seen[c as usize];
                        seen[c as usize] = true;
                        let p = if is_first == first_is_over { Passage::Over } else { Passage::Under };
                        GaussEntry::new(c, p, s)
                    })
                    .collect();
                out.push(GaussCode::new(entries));
            }
        }
    }
    out
}
