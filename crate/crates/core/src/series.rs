//! Exact truncated generating functions for both families.
//!
//! Family B is counted by `prod_{k allowed} 1/(1 - q^k)`. Family A is counted
//! by `prod_i (sum_{v<p} q^{i*M*v}) / (1 - q^{i*p})`: every allowed
//! multiplicity of part `i` is `M*v + g` with `g` a multiple of `p`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{classify_part, Family, PartClass, Params};

pub const DEFAULT_SERIES_CAP: u64 = 2000;

/// A power series in `q` truncated after `q^order`, with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `1 - q^k` in place.
    pub fn mul_one_minus(&mut self, k: usize) {
        if k == 0 || k > self.order() {
            return;
        }
        for n in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] -= &lo[n - k];
        }
    }

    /// Multiplies by `1/(1 - q^k)` in place.
    pub fn div_one_minus(&mut self, k: usize) {
        if k == 0 || k > self.order() {
            return;
        }
        for n in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - k];
        }
    }

    /// Multiplies by `sum_{e in exponents} q^e`.
    pub fn mul_sparse(&mut self, exponents: &[usize]) {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for &e in exponents.iter().filter(|&&e| e <= order) {
            for (dst, src) in out[e..].iter_mut().zip(&self.coeffs) {
                *dst += src;
            }
        }
        self.coeffs = out;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub order: u64,
    pub coeffs: Vec<BigUint>,
}

impl SeriesCoefficients {
    fn from_series(s: TruncatedSeries) -> Self {
        let order = s.order() as u64;
        let coeffs = s
            .coeffs
            .into_iter()
            .map(|c| {
                let (sign, mag) = c.into_parts();
                assert!(sign != Sign::Minus, "family series has a negative coefficient");
                mag
            })
            .collect();
        SeriesCoefficients { order, coeffs }
    }
}

/// `[[n, count], ...]` as JSON; numbers are written exactly, whatever their size.
pub fn count_rows_json<T: std::fmt::Display>(counts: &[T]) -> String {
    let rows: Vec<String> = counts
        .iter()
        .enumerate()
        .map(|(n, c)| format!("[{n},{c}]"))
        .collect();
    format!("[{}]", rows.join(","))
}

/// One `n,count` line per coefficient.
pub fn count_rows_csv<T: std::fmt::Display>(counts: &[T]) -> String {
    counts
        .iter()
        .enumerate()
        .map(|(n, c)| format!("{n},{c}\n"))
        .collect()
}

fn check_cap(order: u64, cap: u64) -> Result<usize> {
    if order > cap {
        return Err(Error::CapExceeded {
            what: "series order",
            value: order,
            cap,
        });
    }
    usize::try_from(order).map_err(|_| Error::Overflow("series order"))
}

pub fn b_side_series(ps: &Params, order: u64, cap: u64) -> Result<SeriesCoefficients> {
    let order = check_cap(order, cap)?;
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        if classify_part(ps, k as u64) != PartClass::Forbidden {
            s.div_one_minus(k);
        }
    }
    Ok(SeriesCoefficients::from_series(s))
}

pub fn a_side_series(ps: &Params, order: u64, cap: u64) -> Result<SeriesCoefficients> {
    let order = check_cap(order, cap)?;
    let (p, block) = (ps.p() as usize, ps.block() as usize);
    let mut s = TruncatedSeries::one(order);
    for i in 1..=order {
        let numerator: Vec<usize> = (0..p)
            .map(|v| i.saturating_mul(block).saturating_mul(v))
            .take_while(|&e| e <= order)
            .collect();
        if numerator.len() > 1 {
            s.mul_sparse(&numerator);
        }
        s.div_one_minus(i.saturating_mul(p));
    }
    Ok(SeriesCoefficients::from_series(s))
}

pub fn family_series(ps: &Params, family: Family, order: u64, cap: u64) -> Result<SeriesCoefficients> {
    match family {
        Family::A => a_side_series(ps, order, cap),
        Family::B => b_side_series(ps, order, cap),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeriesComparison {
    pub equal: bool,
    pub first_mismatch: Option<u64>,
}

pub fn compare_series(ps: &Params, order: u64, cap: u64) -> Result<SeriesComparison> {
    let a = a_side_series(ps, order, cap)?;
    let b = b_side_series(ps, order, cap)?;
    let first_mismatch = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .position(|(x, y)| x != y)
        .map(|i| i as u64);
    Ok(SeriesComparison {
        equal: first_mismatch.is_none(),
        first_mismatch,
    })
}
