//! Unlabelled (unoriented) 2-trees for odd `k`.
//!
//! For odd `k` the `k - 1` free edges of a page polygon can be oriented away
//! from the root edge, so the only reversal-symmetric edge-rooted structures
//! are sets of symmetric pages and of mirror-image page pairs. Their series is
//!
//! `s(x) = exp(sum_i 1/(2i) (2 x^i B^h(x^{2i}) + x^{2i} B^{k-1}(x^{2i}) - x^{2i} B^h(x^{4i})))`
//!
//! with `h = (k - 1) / 2`, and the unoriented series is `(a_o(x) + s(x)) / 2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bseries::{exact_div, BTable};
use crate::error::{Error, Result};
use crate::oriented::oriented_series;
use crate::series::Series;

fn require_odd(table: &BTable) -> Result<u32> {
    let k = table.params().k();
    if k.is_multiple_of(2) || k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k = {k} is even; use the even-k routines for this family"
        )));
    }
    Ok(k)
}

/// `2 x B^h(x^2) + x^2 B^{k-1}(x^2) - x^2 B^h(x^4)`; its coefficients are
/// the `omega_n` of the divisor-sum recurrence.
fn symmetric_kernel(table: &BTable) -> Result<Series> {
    let k = require_odd(table)?;
    let h = (k - 1) / 2;
    let half = table.convolution_power(h);
    let two = BigRational::from_integer(BigInt::from(2));
    let s1 = half.substitute_power(2)?.shift(1).scale(&two);
    let s2 = table.convolution_power(k - 1).substitute_power(2)?.shift(2);
    let s3 = half.substitute_power(4)?.shift(2);
    s1.add(&s2)?.sub(&s3)
}

/// Series of reversal-symmetric edge-rooted structures (odd `k`).
pub fn symmetric_series(table: &BTable) -> Result<Series> {
    let kernel = symmetric_kernel(table)?;
    let order = table.order();
    let mut exponent = Series::zero(order);
    for i in 1..=order {
        let term = kernel
            .substitute_power(i)?
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(2 * i)));
        exponent = exponent.add(&term)?;
    }
    let s = exponent.exp()?;
    s.to_counts("symmetric edge-rooted 2-trees")?;
    Ok(s)
}

/// Unlabelled 2-trees for odd `k`, `(a_o(x) + s(x)) / 2`.
pub fn odd_series(table: &BTable) -> Result<Series> {
    require_odd(table)?;
    let oriented = oriented_series(table)?;
    let sym = symmetric_series(table)?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let series = oriented.add(&sym)?.scale(&half);
    series.to_counts("unlabelled 2-trees")?;
    Ok(series)
}

/// `omega_n = 2 b^{(h)}_{(n-1)/2} + b^{(k-1)}_{(n-2)/2} - b^{(h)}_{(n-2)/4}`.
pub fn odd_omega(table: &BTable, n: usize) -> Result<BigInt> {
    let k = require_odd(table)?;
    let h = (k - 1) / 2;
    let n = n as i64;
    Ok(table.frac_coeff(h, n - 1, 2) * 2 + table.frac_coeff(k - 1, n - 2, 2)
        - table.frac_coeff(h, n - 2, 4))
}

/// Same sequence as [`odd_series`] through the divisor-sum recurrence
///
/// `a_n = 1/(2n) sum_{j=1..n} (sum_{l | j} l omega_l) (a_{n-j} - a_{o,n-j}/2) + a_{o,n}/2`.
pub fn odd_recurrence(table: &BTable, oriented: &[BigInt]) -> Result<Vec<BigInt>> {
    require_odd(table)?;
    let order = table.order();
    assert!(oriented.len() > order, "oriented counts must cover the table order");
    let omega: Vec<BigInt> = (0..=order)
        .map(|n| if n == 0 { Ok(BigInt::zero()) } else { odd_omega(table, n) })
        .collect::<Result<_>>()?;
    let divisor_sums: Vec<BigInt> = (0..=order)
        .map(|j| {
            (1..=j)
                .filter(|l| j % l == 0)
                .map(|l| &omega[l] * l)
                .sum()
        })
        .collect();
    let mut a = vec![BigInt::from(1)];
    for n in 1..=order {
        // 4n a_n = sum_j D_j (2 a_{n-j} - a_{o,n-j}) + 2n a_{o,n}
        let mut acc = &oriented[n] * (2 * n);
        for j in 1..=n {
            acc += &divisor_sums[j] * (&a[n - j] * 2 - &oriented[n - j]);
        }
        a.push(exact_div(acc, 4 * n, "unlabelled 2-trees (recurrence)", n)?);
    }
    Ok(a)
}
