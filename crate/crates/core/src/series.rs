//! Truncated formal power series with exact integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

/// `sum c_i x^i` for `i <= degree`; everything above `degree` is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The zero series truncated at `degree`.
    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); degree + 1] }
    }

    /// Series with the given leading coefficients, padded or cut to `degree`.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, degree: usize) -> Self {
        coeffs.resize(degree + 1, BigInt::zero());
        Self { coeffs }
    }

    /// Polynomial from small integer coefficients.
    pub fn polynomial(coeffs: &[i64], degree: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), degree)
    }

    /// Truncation degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i` (zero above the truncation degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// All coefficients `c_0..c_degree`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as naturals; `None` if any is negative.
    pub fn natural_coeffs(&self) -> Option<Vec<BigUint>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_negative() { None } else { c.to_biguint() })
            .collect()
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::polynomial(&[1], self.degree());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let degree = self.degree().min(rhs.degree());
        Series { coeffs: (0..=degree).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let degree = self.degree().min(rhs.degree());
        Series { coeffs: (0..=degree).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let degree = self.degree().min(rhs.degree());
        let mut out = vec![BigInt::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(degree + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(degree + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

/// Iterates `a <- step(a)` from `start` until two consecutive iterates agree.
/// Each step of a contracting map fixes at least one more coefficient, so
/// `degree + 2` rounds always suffice.
fn fixed_point(start: Series, step: impl Fn(&Series) -> Series) -> Series {
    let mut a = start;
    for _ in 0..a.degree() + 2 {
        let next = step(&a);
        if next == a {
            return a;
        }
        a = next;
    }
    a
}

/// Solution of `A = 1 + (x - x^2) A^3` through `x^degree`.
pub fn series_102(degree: usize) -> Series {
    let one = Series::polynomial(&[1], degree);
    let x_minus_x2 = Series::polynomial(&[0, 1, -1], degree);
    fixed_point(one.clone(), |a| &one + &(&x_minus_x2 * &a.pow(3)))
}

/// Large Schröder generating function from `R = 1 + x R + x R^2`.
pub fn schroder_series(degree: usize) -> Series {
    let one = Series::polynomial(&[1], degree);
    let x = Series::polynomial(&[0, 1], degree);
    fixed_point(one.clone(), |r| &(&one + &(&x * r)) + &(&x * &(r * r)))
}
