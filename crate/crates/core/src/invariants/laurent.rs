use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `t` with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(coefficient: impl Into<BigInt>, exponent: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coefficient.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

pub fn poly_add(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p + q
}

pub fn poly_neg(p: &LaurentPoly) -> LaurentPoly {
    -p
}

pub fn poly_scale(p: &LaurentPoly, k: &BigInt) -> LaurentPoly {
    p.scale(k)
}

pub fn poly_invert_variable(p: &LaurentPoly) -> LaurentPoly {
    p.invert_variable()
}

pub fn poly_eval_at_one(p: &LaurentPoly) -> BigInt {
    p.eval_at_one()
}

/// Ascending exponents, e.g. `t^-1 - 2 + t`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn poly_to_text(p: &LaurentPoly) -> String {
    alloc::format!("{p}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyParseError {
    pub position: usize,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed polynomial at position {}", self.position)
    }
}

impl core::error::Error for PolyParseError {}

/// Accepts sums of terms `c`, `ct`, `ct^e`, `ct^{e}` in any order, with
/// optional `*` between coefficient and `t`. Whitespace is ignored.
impl FromStr for LaurentPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, PolyParseError> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let end = s.len();
        let at = |k: usize| chars.get(k).map(|&(_, c)| c);
        let pos = |k: usize| chars.get(k).map_or(end, |&(p, _)| p);
        let digits = |k: &mut usize| -> Option<BigInt> {
            let start = *k;
            while at(*k).is_some_and(|c| c.is_ascii_digit()) {
                *k += 1;
            }
            (start < *k).then(|| chars[start..*k].iter().map(|&(_, c)| c).collect::<String>().parse().unwrap())
        };
        let mut k = 0;
        let mut out = LaurentPoly::zero();
        if chars.len() == 1 && at(0) == Some('0') {
            return Ok(out);
        }
        if chars.is_empty() {
            return Err(PolyParseError { position: 0 });
        }
        let mut first = true;
        while k < chars.len() {
            let negative = match at(k) {
                Some('+') => {
                    k += 1;
                    false
                }
                Some('-') => {
                    k += 1;
                    true
                }
                _ if first => false,
                _ => return Err(PolyParseError { position: pos(k) }),
            };
            first = false;
            let coef = digits(&mut k);
            if coef.is_some() && at(k) == Some('*') {
                k += 1;
            }
            let exponent = if at(k) == Some('t') {
                k += 1;
                if at(k) == Some('^') {
                    k += 1;
                    let braced = at(k) == Some('{');
                    if braced {
                        k += 1;
                    }
                    let neg = at(k) == Some('-');
                    if neg {
                        k += 1;
                    }
                    let e = digits(&mut k).ok_or(PolyParseError { position: pos(k) })?;
                    if braced {
                        if at(k) != Some('}') {
                            return Err(PolyParseError { position: pos(k) });
                        }
                        k += 1;
                    }
                    let e: i64 = i64::try_from(e).map_err(|_| PolyParseError { position: pos(k) })?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else if coef.is_none() {
                return Err(PolyParseError { position: pos(k) });
            } else {
                0
            };
            let c = coef.unwrap_or_else(BigInt::one);
            out.add_term(exponent, if negative { -c } else { c });
        }
        Ok(out)
    }
}
