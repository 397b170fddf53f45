//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` carries the coefficients of `x^0 .. x^N`. Binary
//! operations require both operands to have the same order; there is no
//! silent coercion.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

impl Series {
    /// Builds a series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series has at least a constant term.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_integers<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `x`, which collapses to `0` at order 0.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, or an error when `i` exceeds the order.
    pub fn get(&self, i: usize) -> Result<&BigRational> {
        self.coeffs.get(i).ok_or(Error::OutOfOrder {
            index: i,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<BigRational> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &BigRational) -> Series {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `x^s`, dropping what falls past the order.
    pub fn shift(&self, s: usize) -> Series {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + s > self.order() {
                break;
            }
            out.coeffs[i + s] = c.clone();
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        if self.is_integral() && other.is_integral() {
            let a: Vec<&BigInt> = self.coeffs.iter().map(|c| c.numer()).collect();
            let b: Vec<&BigInt> = other.coeffs.iter().map(|c| c.numer()).collect();
            return Ok(Self::from_integers(convolve_int(&a, &b)));
        }
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs })
    }

    /// `self^e` by binary exponentiation; `e = 0` gives the constant 1.
    pub fn pow(&self, mut e: u32) -> Series {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    /// `self(x^d)` truncated to the same order.
    pub fn substitute_power(&self, d: usize) -> Result<Series> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "substitute_power needs d >= 1".into(),
            ));
        }
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * d > n {
                break;
            }
            out.coeffs[i * d] = c.clone();
        }
        Ok(out)
    }

    /// `exp(self)` for a series with zero constant term, via `E' = a' E`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        // weighted[j] = j * a_j
        let weighted: Vec<BigRational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| a * BigInt::from(j))
            .collect();
        let mut out = vec![BigRational::one()];
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=m {
                if !weighted[j].is_zero() {
                    acc += &weighted[j] * &out[m - j];
                }
            }
            out.push(acc / BigInt::from(m));
        }
        Ok(Self { coeffs: out })
    }

    /// Returns the coefficients as integers, failing on the first fraction.
    pub fn to_integers(&self, what: &'static str) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral {
                        what,
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Like [`Series::to_integers`], additionally rejecting negative values.
    pub fn to_counts(&self, what: &'static str) -> Result<Vec<BigInt>> {
        let ints = self.to_integers(what)?;
        if let Some((index, v)) = ints.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(Error::Negative {
                what,
                index,
                value: v.to_string(),
            });
        }
        Ok(ints)
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval_float(&self, x0: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x0 + rational_to_f64(c))
    }

    /// Horner evaluation of the formal derivative.
    pub fn derivative_eval_float(&self, x0: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (i, c)| acc * x0 + i as f64 * rational_to_f64(c))
    }
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// Truncated integer convolution of two equal-length coefficient slices.
pub(crate) fn convolve_int<A, B>(a: &[A], b: &[B]) -> Vec<BigInt>
where
    A: std::borrow::Borrow<BigInt>,
    B: std::borrow::Borrow<BigInt>,
{
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, ai) in a.iter().take(n).enumerate() {
        let ai = ai.borrow();
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b[..n - i].iter().enumerate() {
            let bj = bj.borrow();
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Right-hand side of an equation `y = exp(F(x, y))`.
///
/// `exponent_coeff(partial, n)` returns `[x^n] F` where `partial` holds
/// `y_0 .. y_{n-1}` as a series of order `n - 1`. Reading past that order is
/// a dependency violation.
pub trait SeriesEquation {
    fn exponent_coeff(&self, partial: &Series, n: usize) -> Result<BigRational>;
}

impl<F> SeriesEquation for F
where
    F: Fn(&Series, usize) -> Result<BigRational>,
{
    fn exponent_coeff(&self, partial: &Series, n: usize) -> Result<BigRational> {
        self(partial, n)
    }
}

/// Solves `y = exp(F(x, y))` with `y(0) = 1` coefficient by coefficient,
/// using `n y_n = sum_{j=1..n} j F_j y_{n-j}` (the logarithmic derivative).
pub fn log_derivative_recurrence<E: SeriesEquation + ?Sized>(
    equation: &E,
    order: usize,
) -> Result<Series> {
    let mut y = vec![BigRational::one()];
    let mut weighted: Vec<BigRational> = vec![BigRational::zero()];
    for n in 1..=order {
        let partial = Series::from_coeffs(y.clone());
        let f_n = equation
            .exponent_coeff(&partial, n)
            .map_err(|e| match e {
                Error::OutOfOrder { index, order } => Error::DependencyViolation {
                    index: n,
                    detail: format!("read coefficient {index} of a solution known to order {order}"),
                },
                other => other,
            })?;
        weighted.push(f_n * BigInt::from(n));
        let mut acc = BigRational::zero();
        for j in 1..=n {
            if !weighted[j].is_zero() {
                acc += &weighted[j] * &y[n - j];
            }
        }
        y.push(acc / BigInt::from(n));
    }
    Ok(Series::from_coeffs(y))
}
