//! Truncated formal power series with exact rational coefficients.
//!
//! A series holds `order` coefficients (powers 0 through `order - 1`);
//! binary operations truncate to the shorter operand. All arithmetic is
//! exact — no floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalPowerSeries {
    coeffs: Vec<BigRational>,
}

impl FormalPowerSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series holds at least one coefficient"
        );
        FormalPowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigRational::zero(); order.max(1)])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The monomial x.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order.max(2));
        s.coeffs[1] = BigRational::one();
        s.truncate(order.max(1))
    }

    /// Polynomial from integer coefficients, padded with zeros to `order`.
    pub fn from_int_poly(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order.max(coeffs.len()).max(1));
        for (i, &c) in coeffs.iter().enumerate() {
            s.coeffs[i] = BigRational::from_integer(BigInt::from(c));
        }
        s.truncate(order.max(1))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.max(1);
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order);
        while coeffs.len() < order {
            coeffs.push(BigRational::zero());
        }
        FormalPowerSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by x^k (shifts coefficients up, truncating).
    pub fn mul_xk(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.order()];
        if k < self.order() {
            coeffs[k..].clone_from_slice(&self.coeffs[..self.order() - k]);
        }
        Self::new(coeffs)
    }

    /// Division by x^k; the first k coefficients must vanish. The result
    /// is k coefficients shorter (the tail is unknown, not zero).
    pub fn div_xk(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::InternalMismatch(format!(
                "series is not divisible by x^{k}"
            )));
        }
        let mut coeffs: Vec<BigRational> = self.coeffs[k.min(self.order())..].to_vec();
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Ok(Self::new(coeffs))
    }

    /// Exact quotient; the divisor needs a nonzero constant term.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.coeffs[0].is_zero() {
            return Err(Error::DivisionByZeroConstantTerm);
        }
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order];
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for k in 0..n {
                acc -= &out[k] * &rhs.coeffs[n - k];
            }
            out[n] = acc / &rhs.coeffs[0];
        }
        Ok(Self::new(out))
    }

    /// Square root with positive constant term, by Newton iteration that
    /// doubles the correct order each round, seeded with the exact rational
    /// square root of the constant term.
    pub fn sqrt(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() || c0.is_negative() {
            return Err(Error::NonSquareConstantTerm);
        }
        let seed = rational_sqrt(c0).ok_or(Error::NonSquareConstantTerm)?;
        let target = self.order();
        let mut y = FormalPowerSeries::new(vec![seed]);
        let mut correct = 1usize;
        while correct < target {
            correct = (correct * 2).min(target);
            let y_ext = y.truncate(correct);
            let a = self.truncate(correct);
            let q = a.div(&y_ext)?;
            y = (&y_ext + &q).scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
        }
        Ok(y)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// All coefficients are nonnegative integers.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// The coefficients as nonnegative integers; `None` if any coefficient
    /// is fractional or negative.
    pub fn integer_coeffs(&self) -> Option<Vec<BigUint>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    c.to_integer().to_biguint()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(format_rational(c)))
                .collect(),
        )
    }
}

fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Exact square root of a nonnegative rational, when it is a perfect
/// square.
fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    let num = c.numer().to_biguint()?;
    let den = c.denom().to_biguint()?;
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &sn * &sn == num && &sd * &sd == den {
        Some(BigRational::new(sn.into(), sd.into()))
    } else {
        None
    }
}

impl Add for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn add(self, rhs: Self) -> FormalPowerSeries {
        let order = self.order().min(rhs.order());
        FormalPowerSeries::new(
            (0..order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Sub for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn sub(self, rhs: Self) -> FormalPowerSeries {
        let order = self.order().min(rhs.order());
        FormalPowerSeries::new(
            (0..order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Mul for &FormalPowerSeries {
    type Output = FormalPowerSeries;

    fn mul(self, rhs: Self) -> FormalPowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order];
        for i in 0..order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        FormalPowerSeries::new(out)
    }
}

impl fmt::Display for FormalPowerSeries {
    /// Prints `c0 + c1*x + c2*x^2 + ...`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rational(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
