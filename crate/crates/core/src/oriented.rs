//! Unlabelled oriented 2-trees.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bseries::BTable;
use crate::error::Result;
use crate::series::Series;

/// Euler's totient by trial factorization.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1);
    let mut n = d;
    let mut phi = d;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            while n.is_multiple_of(f) {
                n /= f;
            }
            phi -= phi / f;
        }
        f += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Generating series of unlabelled oriented 2-trees,
///
/// `b(x) + x/k sum_{d | k, d > 1} phi(d) b^{k/d}(x^d) - (k-1)/k x b^k(x)`,
///
/// i.e. edge-rooted plus polygon-rooted minus polygon-and-edge-rooted
/// structures. Every coefficient is checked to be a non-negative integer.
pub fn oriented_series(table: &BTable) -> Result<Series> {
    let k = table.params().k();
    let order = table.order();
    let kq = BigRational::from_integer(BigInt::from(k));

    let mut cyclic = Series::zero(order);
    for d in (2..=k).filter(|d| k.is_multiple_of(*d)) {
        let term = table
            .convolution_power(k / d)
            .substitute_power(d as usize)?
            .scale(&BigRational::from_integer(BigInt::from(euler_phi(u64::from(d)))));
        cyclic = cyclic.add(&term)?;
    }
    let cyclic = cyclic.shift(1).scale(&kq.recip());

    let pointed = table
        .convolution_power(k)
        .shift(1)
        .scale(&(BigRational::from_integer(BigInt::from(k - 1)) / &kq));

    let series = table.series().add(&cyclic)?.sub(&pointed)?;
    series.to_counts("oriented 2-trees")?;
    Ok(series)
}

/// Coefficients of [`oriented_series`] as integers.
pub fn oriented_counts(table: &BTable) -> Result<Vec<BigInt>> {
    oriented_series(table)?.to_counts("oriented 2-trees")
}
