//! Universal coefficients `c_m` of `xi_p = sum_{m >= 1} c_m p^{-m}`.
//!
//! Each `c_m` is a finite rational combination of `e^{-n}`:
//!
//! `c_m = sum_mu 1/n e^{-n} prod_{i : n_i > 0} (sigma_i - n)^{n_i - 1} (sigma*_i - n) / prod_i i^{n_i} n_i!`
//!
//! over partitions `mu` with all parts `>= 2` and `|mu| - l(mu) = m - 1`,
//! where `n = |mu| + 1`, `n_i` is the multiplicity of `i` in `mu`,
//! `sigma_i = sum_{d | i} d n_d` and `sigma*_i = sigma_i - i n_i`.
//!
//! Subtracting one from each part of `mu` gives a partition `lambda` of
//! `m - 1`, which is how the sum is enumerated. Reading the sum instead over
//! `lambda |- m` with the divisor sums taken on `lambda` and the factors
//! `(sigma_i - (1 + |lambda| + l(lambda)))` gives `3/8 e^{-5}` in `c_3`
//! rather than `1/8 e^{-5}`, and disagrees with the numerical `xi_p`; only
//! the form above is exposed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::{Partition, Partitions};

/// Partitions of `total` into parts `>= 2`.
pub fn partitions_with_min_part_2(total: u32) -> Partitions {
    Partitions::with_min_part(total, 2)
}

/// `c_m` as a map `n -> coefficient of e^{-n}`; zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalConstant {
    pub m: u32,
    pub terms: BTreeMap<u32, BigRational>,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Contribution of one partition `mu` (parts `>= 2`), as `(n, coefficient)`.
fn mu_term(mu: &Partition) -> (u32, BigRational) {
    let n = mu.size() as i64 + 1;
    let mut num = BigInt::one();
    let mut den = BigInt::from(n);
    for i in 2..=mu.largest_part() {
        let ni = mu.multiplicity(i);
        if ni == 0 {
            continue;
        }
        let sigma = mu.divisor_weight(i) as i64;
        let sigma_star = mu.proper_divisor_weight(i) as i64;
        num *= num_traits::pow(BigInt::from(sigma - n), (ni - 1) as usize);
        num *= sigma_star - n;
        den *= num_traits::pow(BigInt::from(i), ni as usize) * factorial(ni);
    }
    (n as u32, BigRational::new(num, den))
}

/// Exact `c_m`, `m >= 1`.
pub fn universal_c(m: u32) -> UniversalConstant {
    assert!(m >= 1, "universal constants start at m = 1");
    let mut terms: BTreeMap<u32, BigRational> = BTreeMap::new();
    for lambda in Partitions::new(m - 1) {
        let (n, coeff) = mu_term(&lambda.shifted(1));
        *terms.entry(n).or_insert_with(BigRational::zero) += coeff;
    }
    terms.retain(|_, c| !c.is_zero());
    UniversalConstant { m, terms }
}

// digits carried by the fixed-point evaluation
const SCALE_DIGITS: u32 = 120;

fn ten_pow(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// `e^{-1}` scaled by `10^SCALE_DIGITS`, truncated.
fn inv_e_fixed() -> BigInt {
    let guard = 10;
    let unit = ten_pow(SCALE_DIGITS + guard);
    let mut term = unit.clone();
    let mut acc = BigInt::zero();
    let mut j = 0u32;
    while !term.is_zero() {
        if j.is_multiple_of(2) {
            acc += &term;
        } else {
            acc -= &term;
        }
        j += 1;
        term /= j;
    }
    acc / ten_pow(guard)
}

impl UniversalConstant {
    /// Value scaled by `10^SCALE_DIGITS`.
    fn fixed(&self) -> BigInt {
        let unit = ten_pow(SCALE_DIGITS);
        let inv_e = inv_e_fixed();
        let mut power = unit.clone();
        let mut last = 0u32;
        let mut acc = BigInt::zero();
        for (&n, coeff) in &self.terms {
            while last < n {
                power = power * &inv_e / &unit;
                last += 1;
            }
            acc += &power * coeff.numer() / coeff.denom();
        }
        acc
    }

    pub fn value(&self) -> f64 {
        // correctly rounded through the decimal expansion
        self.decimal(40).parse().expect("decimal expansion")
    }

    /// Decimal expansion rounded to `digits` places.
    pub fn decimal(&self, digits: u32) -> String {
        assert!(digits < SCALE_DIGITS - 10);
        let v = self.fixed();
        let (q, r) = v.abs().div_rem(&ten_pow(SCALE_DIGITS - digits));
        let half = ten_pow(SCALE_DIGITS - digits) / 2;
        let q = if r >= half { q + 1 } else { q };
        let s = q.to_string();
        let s = format!("{:0>width$}", s, width = digits as usize + 1);
        let (int, frac) = s.split_at(s.len() - digits as usize);
        let sign = if v.is_negative() { "-" } else { "" };
        format!("{sign}{int}.{frac}")
    }

    /// Closed form such as `1/8*exp(-5) - 1/3*exp(-4)`, largest `n` first.
    pub fn closed_form(&self) -> String {
        let mut out = String::new();
        for (i, (n, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&format!("exp(-{n})"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `sum_{m <= m_max} c_m / p^m`.
pub fn xi_from_expansion(p: u32, m_max: u32) -> f64 {
    assert!(p >= 1);
    let pf = f64::from(p);
    (1..=m_max)
        .map(|m| universal_c(m).value() / pf.powi(m as i32))
        .sum()
}
