//! Closed-form labelled counts and fixed-point counts under relabelling.
//!
//! All labelled families return 1 for `n = 0` (empty structure) and `n = 1`
//! (single polygon).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::bseries::{exact_div, GonalParams};
use crate::error::{Error, Result};
use crate::partition::{Partition, Partitions};

/// Cycle type `1^{n_1} 2^{n_2} ...` of a permutation of the polygons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType(Partition);

impl CycleType {
    /// `multiplicities[i - 1] = n_i`.
    pub fn new(multiplicities: Vec<u32>) -> Self {
        Self(Partition::from_multiplicities(multiplicities))
    }

    pub fn identity(n: u32) -> Self {
        Self::new(vec![n])
    }

    pub fn single_cycle(n: u32) -> Self {
        assert!(n > 0);
        let mut mult = vec![0; n as usize];
        mult[n as usize - 1] = 1;
        Self::new(mult)
    }

    /// Number of permuted polygons, `sum i n_i`.
    pub fn weight(&self) -> u64 {
        self.0.size()
    }

    /// `prod_i i^{n_i} n_i!`, the centralizer order.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (idx, &m) in self.0.multiplicities().iter().enumerate() {
            let i = BigInt::from(idx + 1);
            z *= Pow::pow(&i, m);
            for f in 2..=m {
                z *= f;
            }
        }
        z
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        Self(p)
    }
}

/// `(1 + p s)^e` with `p = k - 1`.
fn affine_pow(params: GonalParams, s: u64, e: u32) -> BigInt {
    let base = BigInt::from(params.p()) * s + 1u32;
    Pow::pow(&base, e)
}

/// Labelled 2-trees rooted at an oriented edge: `m^{n-1}`.
pub fn labelled_rooted(params: GonalParams, n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    Pow::pow(&params.edges(n), (n - 1) as u32)
}

/// Oriented-edge-rooted labelled structures fixed by a relabelling of cycle
/// type `t`: `prod_i (1 + p sigma_i)^{n_i - 1} (1 + p sigma*_i)`, where
/// `sigma_i = sum_{d | i} d n_d` and `sigma*_i` omits `d = i`. Factors with
/// `n_i = 0` are 1.
pub fn fixed_point_count(params: GonalParams, t: &CycleType) -> BigInt {
    let mut total = BigInt::one();
    for (idx, &n_i) in t.0.multiplicities().iter().enumerate() {
        if n_i == 0 {
            continue;
        }
        let i = idx + 1;
        total *= affine_pow(params, t.0.divisor_weight(i), n_i - 1);
        total *= affine_pow(params, t.0.proper_divisor_weight(i), 1);
    }
    total
}

/// Labelled oriented 2-trees: `m^{n-2}` for `n >= 2`.
pub fn labelled_oriented(params: GonalParams, n: u64) -> BigInt {
    if n < 2 {
        return BigInt::one();
    }
    Pow::pow(&params.edges(n), (n - 2) as u32)
}

/// Labelled (unoriented) 2-trees. Odd `k`: `(m^{n-2} + 1) / 2`; even `k`:
/// `(m^{n-2} + (n + 1)^{n-2}) / 2`, the second term counting the
/// reversal-symmetric structures built from edge-labelled trees.
pub fn labelled_unoriented(params: GonalParams, n: u64) -> Result<BigInt> {
    if n < 2 {
        return Ok(BigInt::one());
    }
    let oriented = labelled_oriented(params, n);
    let symmetric = if params.is_even() {
        Pow::pow(&BigInt::from(n + 1), (n - 2) as u32)
    } else {
        BigInt::one()
    };
    exact_div(oriented + symmetric, 2, "labelled 2-trees", n as usize)
}

/// `b_n` by orbit counting: the average over cycle types of the fixed-point
/// counts, weighted by class size.
pub fn burnside_b(params: GonalParams, n: u32) -> Result<BigInt> {
    let mut acc = BigRational::zero();
    for partition in Partitions::new(n) {
        let t = CycleType::from(partition);
        acc += BigRational::new(fixed_point_count(params, &t), t.centralizer_order());
    }
    if !acc.is_integer() {
        return Err(Error::NonIntegral {
            what: "orbit count",
            index: n as usize,
            value: acc.to_string(),
        });
    }
    Ok(acc.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(k: u32) -> GonalParams {
        GonalParams::new(k).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rooted_examples() {
        assert_eq!(labelled_rooted(k(3), 2), big(5));
        assert_eq!(labelled_rooted(k(4), 3), big(100));
        for kk in 2..8 {
            assert_eq!(labelled_rooted(k(kk), 1), big(1));
            assert_eq!(labelled_rooted(k(kk), 0), big(1));
        }
        assert_eq!(labelled_rooted(k(5), 2), big(9));
    }

    #[test]
    fn fixed_point_examples() {
        for kk in 2..7 {
            for n in 1..7 {
                assert_eq!(
                    fixed_point_count(k(kk), &CycleType::identity(n)),
                    labelled_rooted(k(kk), n as u64)
                );
                assert_eq!(fixed_point_count(k(kk), &CycleType::single_cycle(n)), big(1));
            }
        }
        assert_eq!(fixed_point_count(k(3), &CycleType::new(vec![0, 1])), big(1));
    }

    #[test]
    fn oriented_examples() {
        assert_eq!(labelled_oriented(k(3), 3), big(7));
        assert_eq!(labelled_oriented(k(5), 2), big(1));
        for kk in 2..7 {
            for n in 2..8u64 {
                assert_eq!(
                    labelled_rooted(k(kk), n),
                    k(kk).edges(n) * labelled_oriented(k(kk), n)
                );
            }
        }
    }

    #[test]
    fn unoriented_examples() {
        assert_eq!(labelled_unoriented(k(3), 2).unwrap(), big(1));
        assert_eq!(labelled_unoriented(k(4), 2).unwrap(), big(1));
        assert_eq!(labelled_unoriented(k(4), 3).unwrap(), big(7));
        assert_eq!(labelled_unoriented(k(6), 0).unwrap(), big(1));
        assert_eq!(labelled_unoriented(k(6), 1).unwrap(), big(1));
    }

    #[test]
    fn unoriented_bounds() {
        for kk in 2..9 {
            for n in 2..12u64 {
                let a = labelled_unoriented(k(kk), n).unwrap();
                let ao = labelled_oriented(k(kk), n);
                assert!(a <= ao);
                let residue = &a * 2 - &ao;
                assert!(residue >= BigInt::zero());
                if kk % 2 == 0 {
                    assert_eq!(residue, Pow::pow(&big(n as i64 + 1), (n - 2) as u32));
                }
            }
        }
    }

    #[test]
    fn orbit_count_examples() {
        assert_eq!(burnside_b(k(3), 2).unwrap(), big(3));
        assert_eq!(burnside_b(k(3), 3).unwrap(), big(10));
        for kk in 2..7 {
            assert_eq!(burnside_b(k(kk), 1).unwrap(), big(1));
            assert_eq!(burnside_b(k(kk), 0).unwrap(), big(1));
        }
    }

    #[test]
    fn centralizer_orders() {
        // class sizes n! / z sum to n!
        for n in 1..8u32 {
            let total: BigRational = Partitions::new(n)
                .map(|p| BigRational::new(BigInt::one(), CycleType::from(p).centralizer_order()))
                .sum();
            assert_eq!(total, BigRational::one());
        }
    }
}
