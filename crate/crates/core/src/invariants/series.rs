//! Truncated power series in `x` with rational coefficients, used to expand
//! a Laurent polynomial at `t = e^x`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;

type Series = Vec<BigRational>;

fn exp_series(order: usize, negate: bool) -> Series {
    let mut out = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    for k in 0..=order {
        if k > 0 {
            term /= BigRational::from_integer(BigInt::from(k));
        }
        let t = if negate && k % 2 == 1 { -term.clone() } else { term.clone() };
        out.push(t);
    }
    out
}

fn mul_truncated(a: &Series, b: &Series, order: usize) -> Series {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn pow_truncated(base: &Series, mut e: u64, order: usize) -> Series {
    let mut result = vec![BigRational::zero(); order + 1];
    result[0] = BigRational::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = mul_truncated(&result, &b, order);
        }
        b = mul_truncated(&b, &b, order);
        e >>= 1;
    }
    result
}

/// Coefficients of `x^0 .. x^order` in `p(e^x)`.
pub fn expand_at_exp(p: &LaurentPoly, order: usize) -> Vec<BigRational> {
    let up = exp_series(order, false);
    let down = exp_series(order, true);
    let mut total = vec![BigRational::zero(); order + 1];
    for (e, c) in p.terms() {
        let s = if e >= 0 {
            pow_truncated(&up, e as u64, order)
        } else {
            pow_truncated(&down, e.unsigned_abs(), order)
        };
        let c = BigRational::from_integer(c.clone());
        for (acc, v) in total.iter_mut().zip(s) {
            *acc += &c * v;
        }
    }
    total
}

/// Coefficient of `x^n` in `p(e^x)`.
pub fn series_coefficient(p: &LaurentPoly, n: usize) -> BigRational {
    expand_at_exp(p, n).pop().unwrap_or_else(BigRational::zero)
}
