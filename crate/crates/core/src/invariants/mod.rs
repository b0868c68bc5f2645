//! Polynomial invariants built from crossing weights.
//!
//! `W_K(t) = sum over crossings of sign(c) t^weight(c) - writhe(K)`.
//!
//! [`wriggle_polynomial`], [`affine_index_polynomial`] and
//! [`chord_polynomial`] compute the same polynomial from three unrelated
//! weight engines; [`definitions_agree`] compares them.

mod laurent;
pub mod series;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

pub use laurent::{
    poly_add, poly_eval_at_one, poly_invert_variable, poly_neg, poly_scale, poly_to_text, LaurentPoly,
    PolyParseError,
};

use crate::error::{Error, Result};
use crate::gauss::{Chord, CrossingId, GaussCode, Parity};
use crate::labeling;
use crate::linkdiag;

fn assemble(chords: &[Chord], weights: impl Fn(&Chord) -> Result<i64>, subtract_writhe: bool) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    let mut writhe = 0i64;
    for ch in chords {
        let s = ch.sign.value();
        p.add_term(weights(ch)?, BigInt::from(s));
        writhe += s;
    }
    if subtract_writhe {
        p.add_term(0, BigInt::from(-writhe));
    }
    Ok(p)
}

/// Weights from smoothing each crossing and taking `lk_over - lk_under`.
pub fn wriggle_polynomial(code: &GaussCode) -> Result<LaurentPoly> {
    let chords = code.chords()?;
    assemble(&chords, |ch| Ok(linkdiag::smooth(code, &ch.id)?.wriggle_number()), true)
}

/// Weights from integer arc labels.
pub fn affine_index_polynomial(code: &GaussCode) -> Result<LaurentPoly> {
    let chords = code.chords()?;
    let table = labeling::weight_table(code)?;
    assemble(&chords, |ch| Ok(table[&ch.id]), true)
}

/// Weights from signed chord intersections.
pub fn chord_polynomial(code: &GaussCode) -> Result<LaurentPoly> {
    let chords = code.chords()?;
    assemble(&chords, |ch| linkdiag::chord_weight(code, &ch.id), true)
}

/// Sum over odd crossings only, with no writhe term.
pub fn odd_wriggle_polynomial(code: &GaussCode) -> Result<LaurentPoly> {
    let odd: Vec<Chord> = code.chords()?.into_iter().filter(|c| c.parity() == Parity::Odd).collect();
    let table = labeling::weight_table(code)?;
    assemble(&odd, |ch| Ok(table[&ch.id]), false)
}

/// Exact rational value of a Vassiliev invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VassilievValue(pub BigRational);

impl VassilievValue {
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn from_integer(n: i64) -> Self {
        VassilievValue(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for VassilievValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// `v_n(K) = (1/n!) sum sign(c) weight(c)^n`.
pub fn vassiliev(code: &GaussCode, n: u32) -> Result<VassilievValue> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let table = labeling::weight_table(code)?;
    let mut sum = BigInt::zero();
    for ch in code.chords()? {
        let w = BigInt::from(table[&ch.id]);
        sum += Pow::pow(w, n) * ch.sign.value();
    }
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    Ok(VassilievValue(BigRational::new(sum, factorial)))
}

/// The `x^n` coefficient of `W_K(e^x)`.
pub fn vassiliev_from_series(code: &GaussCode, n: u32) -> Result<VassilievValue> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let p = affine_index_polynomial(code)?;
    Ok(VassilievValue(series::series_coefficient(&p, n as usize)))
}

/// The first crossing where the three weight engines disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub crossing: CrossingId,
    pub smoothing: i64,
    pub labels: i64,
    pub chords: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementReport {
    pub wriggle: LaurentPoly,
    pub affine_index: LaurentPoly,
    pub chord: LaurentPoly,
    pub discrepancy: Option<Discrepancy>,
}

impl AgreementReport {
    pub fn agree(&self) -> bool {
        self.discrepancy.is_none() && self.wriggle == self.affine_index && self.affine_index == self.chord
    }
}

impl fmt::Display for AgreementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.agree() {
            return write!(f, "all engines agree: {}", self.wriggle);
        }
        write!(
            f,
            "engines disagree: smoothing {} / labels {} / chords {}",
            self.wriggle, self.affine_index, self.chord
        )?;
        if let Some(d) = &self.discrepancy {
            write!(
                f,
                "; crossing {} weights smoothing={} labels={} chords={}",
                d.crossing, d.smoothing, d.labels, d.chords
            )?;
        }
        Ok(())
    }
}

pub fn definitions_agree(code: &GaussCode) -> Result<AgreementReport> {
    let table = labeling::weight_table(code)?;
    let mut discrepancy = None;
    for ch in code.chords()? {
        let smoothing = linkdiag::smooth(code, &ch.id)?.wriggle_number();
        let labels = table[&ch.id];
        let chords = linkdiag::chord_weight(code, &ch.id)?;
        if smoothing != labels || labels != chords {
            discrepancy = Some(Discrepancy { crossing: ch.id, smoothing, labels, chords });
            break;
        }
    }
    Ok(AgreementReport {
        wriggle: wriggle_polynomial(code)?,
        affine_index: affine_index_polynomial(code)?,
        chord: chord_polynomial(code)?,
        discrepancy,
    })
}
