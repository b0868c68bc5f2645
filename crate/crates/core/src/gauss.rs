//! Signed Gauss codes: parsing, validation, parity and writhe.
//!
//! A code is stored linearly; position 0 is an arbitrary basepoint and every
//! quantity computed from a code is independent of it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Passage {
    Over,
    Under,
}

impl Passage {
    pub fn complement(self) -> Self {
        match self {
            Passage::Over => Passage::Under,
            Passage::Under => Passage::Over,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Passage::Over => 'O',
            Passage::Under => 'U',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Opaque crossing name. The text format restricts names to ASCII
/// alphanumerics; nothing else depends on their content.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingId(String);

impl CrossingId {
    pub fn new(name: impl Into<String>) -> Self {
        CrossingId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_valid_name(name: &str) -> bool {
        !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric())
    }
}

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for CrossingId {
    fn from(s: &str) -> Self {
        CrossingId(s.to_string())
    }
}

impl From<u32> for CrossingId {
    fn from(n: u32) -> Self {
        CrossingId(n.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussEntry {
    pub crossing: CrossingId,
    pub passage: Passage,
    pub sign: Sign,
}

impl GaussEntry {
    pub fn new(crossing: impl Into<CrossingId>, passage: Passage, sign: Sign) -> Self {
        GaussEntry { crossing: crossing.into(), passage, sign }
    }

    /// Same crossing with the over/under role exchanged.
    pub fn flipped(&self) -> Self {
        GaussEntry { passage: self.passage.complement(), ..self.clone() }
    }
}

impl fmt::Display for GaussEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.passage.letter(), self.crossing, self.sign.symbol())
    }
}

/// A crossing together with the positions of its two passages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chord {
    pub id: CrossingId,
    pub over: usize,
    pub under: usize,
    pub sign: Sign,
}

impl Chord {
    pub fn parity(&self) -> Parity {
        let gap = self.over.abs_diff(self.under) - 1;
        if gap.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Is `pos` strictly inside the cyclic interval running forward from `from` to `to`?
pub(crate) fn strictly_between(from: usize, to: usize, pos: usize, n: usize) -> bool {
    let span = (to + n - from) % n;
    let off = (pos + n - from) % n;
    off != 0 && off < span
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussCode {
    entries: Vec<GaussEntry>,
}

impl GaussCode {
    pub fn new(entries: Vec<GaussEntry>) -> Self {
        GaussCode { entries }
    }

    pub fn empty() -> Self {
        GaussCode::default()
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_gauss(text)
    }

    pub fn entries(&self) -> &[GaussEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<GaussEntry> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct crossings in order of first appearance.
    pub fn crossings(&self) -> Vec<CrossingId> {
        let mut seen = BTreeSet::new();
        self.entries
            .iter()
            .filter(|e| seen.insert(&e.crossing))
            .map(|e| e.crossing.clone())
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn contains(&self, crossing: &CrossingId) -> bool {
        self.entries.iter().any(|e| &e.crossing == crossing)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut seen: BTreeMap<&CrossingId, Vec<&GaussEntry>> = BTreeMap::new();
        let mut order = Vec::new();
        for e in &self.entries {
            let slot = seen.entry(&e.crossing).or_default();
            if slot.is_empty() {
                order.push(&e.crossing);
            }
            slot.push(e);
        }
        let mut violations = Vec::new();
        for id in order {
            let occ = &seen[id];
            if occ.len() != 2 {
                violations.push(Violation::OccurrenceCount { crossing: id.clone(), count: occ.len() });
                continue;
            }
            if occ[0].passage == occ[1].passage {
                violations.push(Violation::RepeatedPassage {
                    crossing: id.clone(),
                    passage: occ[0].passage,
                });
            }
            if occ[0].sign != occ[1].sign {
                violations.push(Violation::SignMismatch { crossing: id.clone() });
            }
        }
        ValidationReport { violations }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidCode(report.violations))
        }
    }

    /// One chord per crossing, in order of first appearance. Fails on invalid codes.
    pub fn chords(&self) -> Result<Vec<Chord>> {
        self.ensure_valid()?;
        let mut index: BTreeMap<&CrossingId, usize> = BTreeMap::new();
        let mut chords: Vec<Chord> = Vec::with_capacity(self.crossing_count());
        for (i, e) in self.entries.iter().enumerate() {
            let k = *index.entry(&e.crossing).or_insert_with(|| {
                chords.push(Chord { id: e.crossing.clone(), over: 0, under: 0, sign: e.sign });
                chords.len() - 1
            });
            match e.passage {
                Passage::Over => chords[k].over = i,
                Passage::Under => chords[k].under = i,
            }
        }
        Ok(chords)
    }

    pub fn chord(&self, crossing: &CrossingId) -> Result<Chord> {
        self.ensure_valid()?;
        let mut chord = Chord { id: crossing.clone(), over: 0, under: 0, sign: Sign::Plus };
        let mut found = false;
        for (i, e) in self.entries.iter().enumerate() {
            if &e.crossing == crossing {
                found = true;
                chord.sign = e.sign;
                match e.passage {
                    Passage::Over => chord.over = i,
                    Passage::Under => chord.under = i,
                }
            }
        }
        if found {
            Ok(chord)
        } else {
            Err(Error::UnknownCrossing(crossing.clone()))
        }
    }

    pub fn writhe(&self) -> Result<i64> {
        Ok(self.chords()?.iter().map(|c| c.sign.value()).sum())
    }

    pub fn parity(&self, crossing: &CrossingId) -> Result<Parity> {
        Ok(self.chord(crossing)?.parity())
    }

    pub fn odd_writhe(&self) -> Result<i64> {
        Ok(self
            .chords()?
            .iter()
            .filter(|c| c.parity() == Parity::Odd)
            .map(|c| c.sign.value())
            .sum())
    }

    /// True when every crossing is odd; vacuously true for the unknot.
    pub fn is_odd_virtual(&self) -> Result<bool> {
        Ok(self.chords()?.iter().all(|c| c.parity() == Parity::Odd))
    }

    pub fn rotated(&self, k: usize) -> GaussCode {
        let mut entries = self.entries.clone();
        if !entries.is_empty() {
            let k = k % entries.len();
            entries.rotate_left(k);
        }
        GaussCode { entries }
    }

    pub fn relabeled(&self, f: impl Fn(&CrossingId) -> CrossingId) -> GaussCode {
        GaussCode {
            entries: self
                .entries
                .iter()
                .map(|e| GaussEntry { crossing: f(&e.crossing), ..e.clone() })
                .collect(),
        }
    }

    /// Least representative over rotations and first-appearance relabelings;
    /// crossings are renamed `1, 2, ...`.
    pub fn canonical_form(&self) -> Result<GaussCode> {
        self.ensure_valid()?;
        let n = self.entries.len();
        let mut best: Option<Vec<(u32, Passage, Sign)>> = None;
        for r in 0..n.max(1) {
            let mut names: BTreeMap<&CrossingId, u32> = BTreeMap::new();
            let key: Vec<(u32, Passage, Sign)> = (0..n)
                .map(|i| {
                    let e = &self.entries[(i + r) % n];
                    let next = names.len() as u32 + 1;
                    let label = *names.entry(&e.crossing).or_insert(next);
                    (label, e.passage, e.sign)
                })
                .collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        let entries = best
            .unwrap_or_default()
            .into_iter()
            .map(|(label, passage, sign)| GaussEntry::new(label, passage, sign))
            .collect();
        Ok(GaussCode { entries })
    }

    /// `count` names not used by this code: the smallest unused positive integers.
    pub fn fresh_ids(&self, count: usize) -> Vec<CrossingId> {
        let used: BTreeSet<&str> = self.entries.iter().map(|e| e.crossing.as_str()).collect();
        (1u32..)
            .map(CrossingId::from)
            .filter(|id| !used.contains(id.as_str()))
            .take(count)
            .collect()
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_gauss(s)
    }
}

impl FromIterator<GaussEntry> for GaussCode {
    fn from_iter<I: IntoIterator<Item = GaussEntry>>(iter: I) -> Self {
        GaussCode { entries: iter.into_iter().collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OccurrenceCount { crossing: CrossingId, count: usize },
    RepeatedPassage { crossing: CrossingId, passage: Passage },
    SignMismatch { crossing: CrossingId },
}

impl Violation {
    pub fn crossing(&self) -> &CrossingId {
        match self {
            Violation::OccurrenceCount { crossing, .. }
            | Violation::RepeatedPassage { crossing, .. }
            | Violation::SignMismatch { crossing } => crossing,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OccurrenceCount { crossing, count } => {
                write!(f, "crossing {crossing} occurs {count} times (expected 2)")
            }
            Violation::RepeatedPassage { crossing, passage } => {
                let word = match passage {
                    Passage::Over => "Over",
                    Passage::Under => "Under",
                };
                write!(f, "crossing {crossing} has two {word} passages")
            }
            Violation::SignMismatch { crossing } => write!(f, "crossing {crossing} sign mismatch"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    ExpectedPassage(char),
    ExpectedLabel,
    ExpectedSign,
}

/// Lexical error at a byte offset of the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::ExpectedPassage(c) => {
                write!(f, "position {}: expected 'O' or 'U', found {c:?}", self.position)
            }
            ParseErrorKind::ExpectedLabel => {
                write!(f, "position {}: expected a crossing label", self.position)
            }
            ParseErrorKind::ExpectedSign => {
                write!(f, "position {}: expected '+' or '-'", self.position)
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// Parse the text form `O1+U2+O3-...`. Whitespace and commas between entries
/// are ignored and passage letters are case-insensitive. The two-occurrence
/// rules are not checked here; see [`GaussCode::validate`].
pub fn parse_gauss(text: &str) -> Result<GaussCode, ParseError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut entries = Vec::new();
    loop {
        while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
            i += 1;
        }
        if i == bytes.len() {
            break;
        }
        let passage = match bytes[i] {
            b'O' | b'o' => Passage::Over,
            b'U' | b'u' => Passage::Under,
            _ => {
                let c = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError { position: i, kind: ParseErrorKind::ExpectedPassage(c) });
            }
        };
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
            i += 1;
        }
        if i == start {
            return Err(ParseError { position: i, kind: ParseErrorKind::ExpectedLabel });
        }
        let label = &text[start..i];
        let sign = match bytes.get(i) {
            Some(b'+') => Sign::Plus,
            Some(b'-') => Sign::Minus,
            _ => return Err(ParseError { position: i, kind: ParseErrorKind::ExpectedSign }),
        };
        i += 1;
        entries.push(GaussEntry::new(label, passage, sign));
    }
    Ok(GaussCode { entries })
}
