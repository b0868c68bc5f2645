//! Seeded random walks through Reidemeister moves.

use alloc::vec::Vec;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::reidemeister::{
    apply_move, find_bigons, find_kinks, r3_sites, KinkOrder, Move, MoveKind, R2Orientation,
};
use crate::error::Result;
use crate::gauss::{GaussCode, Passage, Sign};

/// Relative weight of each move kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveMix {
    pub r1_insert: u32,
    pub r1_delete: u32,
    pub r2_insert: u32,
    pub r2_delete: u32,
    pub r3: u32,
}

impl Default for MoveMix {
    fn default() -> Self {
        MoveMix { r1_insert: 2, r1_delete: 2, r2_insert: 3, r2_delete: 3, r3: 4 }
    }
}

impl MoveMix {
    pub fn weight(&self, kind: MoveKind) -> u32 {
        match kind {
            MoveKind::R1Insert => self.r1_insert,
            MoveKind::R1Delete => self.r1_delete,
            MoveKind::R2Insert => self.r2_insert,
            MoveKind::R2Delete => self.r2_delete,
            MoveKind::R3 => self.r3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomWalkConfig {
    pub steps: usize,
    pub seed: u64,
    pub move_mix: MoveMix,
    pub max_crossings: usize,
}

impl Default for RandomWalkConfig {
    fn default() -> Self {
        RandomWalkConfig { steps: 20, seed: 0, move_mix: MoveMix::default(), max_crossings: 24 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkOutcome {
    pub code: GaussCode,
    pub log: Vec<Move>,
    /// Set when no move applied before `steps` were taken.
    pub stopped_early: bool,
}

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Deterministic in `(code, config)`. Insertions are favoured early in the
/// walk and deletions late; R3 weight is constant.
pub fn random_move_walk(code: &GaussCode, config: &RandomWalkConfig) -> Result<WalkOutcome> {
    code.ensure_valid()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut current = code.clone();
    let mut log = Vec::with_capacity(config.steps);
    let steps = config.steps as u64;
    for i in 0..config.steps as u64 {
        let count = current.crossing_count();
        let kinks = find_kinks(&current)?;
        let bigons = find_bigons(&current)?;
        let sites = r3_sites(&current)?;
        let mix = &config.move_mix;
        let early = steps - i;
        let late = i + 1;
        let candidates = [
            (MoveKind::R1Insert, count < config.max_crossings, early),
            (MoveKind::R1Delete, !kinks.is_empty(), late),
            (MoveKind::R2Insert, count + 2 <= config.max_crossings, early),
            (MoveKind::R2Delete, !bigons.is_empty(), late),
            (MoveKind::R3, !sites.is_empty(), steps),
        ];
        let weights: Vec<u64> = candidates
            .iter()
            .map(|&(k, ok, scale)| if ok { u64::from(mix.weight(k)) * scale } else { 0 })
            .collect();
        let Ok(dist) = WeightedIndex::new(&weights) else {
            return Ok(WalkOutcome { code: current, log, stopped_early: true });
        };
        let n = current.len();
        let mv = match candidates[dist.sample(&mut rng)].0 {
            MoveKind::R1Insert => Move::R1Insert {
                position: rng.gen_range(0..=n),
                sign: random_sign(&mut rng),
                order: if rng.gen() { KinkOrder::OverFirst } else { KinkOrder::UnderFirst },
            },
            MoveKind::R1Delete => Move::R1Delete { crossing: kinks[rng.gen_range(0..kinks.len())].clone() },
            MoveKind::R2Insert => Move::R2Insert {
                pos_a: rng.gen_range(0..=n),
                pos_b: rng.gen_range(0..=n),
                sign: random_sign(&mut rng),
                passage: if rng.gen() { Passage::Over } else { Passage::Under },
                orientation: if rng.gen() { R2Orientation::Same } else { R2Orientation::Reversed },
            },
            MoveKind::R2Delete => {
                let (a, b) = bigons[rng.gen_range(0..bigons.len())].clone();
                Move::R2Delete { first: a, second: b }
            }
            MoveKind::R3 => Move::R3(sites[rng.gen_range(0..sites.len())]),
        };
        current = apply_move(&current, &mv)?;
        log.push(mv);
    }
    Ok(WalkOutcome { code: current, log, stopped_early: false })
}

/// Apply a move log in order.
pub fn replay(code: &GaussCode, log: &[Move]) -> Result<GaussCode> {
    log.iter().try_fold(code.clone(), |c, mv| apply_move(&c, mv))
}

/// Delete kinks and bigons until none remain.
pub fn greedy_simplify(code: &GaussCode) -> Result<GaussCode> {
    let mut current = code.clone();
    loop {
        if let Some(c) = find_kinks(&current)?.first() {
            current = super::reidemeister::r1_delete(&current, c)?;
        } else if let Some((a, b)) = find_bigons(&current)?.first() {
            current = super::reidemeister::r2_delete(&current, a, b)?;
        } else {
            return Ok(current);
        }
    }
}

/// Seed of trial `index` under master seed `master`.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng.next_u64()
}
