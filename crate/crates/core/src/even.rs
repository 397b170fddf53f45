//! Unlabelled 2-trees for even `k`.
//!
//! With an even number of sides a page polygon has an edge opposite the root
//! edge whose orientation is ambiguous, so the reversal-symmetric edge-rooted
//! structures no longer split into pages independently. They are counted
//! through a triangular system over the number of polygons:
//!
//! * `pi_n`: totally symmetric pages, `beta_n`: sets of them;
//! * `P_M,n`: mixed pages (symmetric pages with a crossed symmetry);
//! * `P_AL,n`: unordered pairs `{s, reversed s}` of alternated pages;
//! * `alpha_n`: all reversal-symmetric edge-rooted structures.
//!
//! At each `n` the evaluation order is `pi, beta, P_M, P_AL, omega, alpha`;
//! indices that are fractional or negative read as zero.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bseries::{exact_div, BTable, GonalParams};
use crate::error::{Error, Result};
use crate::oriented::oriented_counts;
use crate::series::convolve_int;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenSymTables {
    pub params: GonalParams,
    pub order: usize,
    pub pi: Vec<BigInt>,
    pub beta: Vec<BigInt>,
    pub p_m: Vec<BigInt>,
    pub p_al: Vec<BigInt>,
    /// `omega[0]` is unused and kept at zero.
    pub omega: Vec<BigInt>,
    pub alpha: Vec<BigInt>,
    pub alpha_sq: Vec<BigInt>,
}

fn require_even(table: &BTable) -> Result<u32> {
    let k = table.params().k();
    if k % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "k = {k} is odd; use the odd-k routines for this family"
        )));
    }
    Ok(k)
}

/// Value at a half index `n / 2`, zero when `n` is odd.
fn at_half(v: &[BigInt], n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        v[n / 2].clone()
    } else {
        BigInt::zero()
    }
}

/// `sum_{i + j = n - 1, i even} b^{((k-2)/2)}_{i/2} c_j`.
fn page_sum(table: &BTable, inner: &[BigInt], n: usize) -> BigInt {
    let k = table.params().k();
    let sides = table.power((k - 2) / 2);
    let mut acc = BigInt::zero();
    for i in (0..n).step_by(2) {
        acc += &sides[i / 2] * &inner[n - 1 - i];
    }
    acc
}

fn check_count(v: &BigInt, what: &'static str, index: usize) -> Result<()> {
    if v.is_negative() {
        return Err(Error::Negative {
            what,
            index,
            value: v.to_string(),
        });
    }
    Ok(())
}

/// Totally symmetric pages `pi` and structures `beta`, with
/// `pi_n = sum_{i + j = n-1, i even} b^{((k-2)/2)}_{i/2} beta_j` and
/// `n beta_n = sum_{j < n} beta_j sum_{d | n-j} d pi_d`.
pub fn totally_symmetric(table: &BTable) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    require_even(table)?;
    let order = table.order();
    let mut pi = vec![BigInt::zero()];
    let mut beta = vec![BigInt::one()];
    for n in 1..=order {
        pi.push(page_sum(table, &beta, n));
        let mut acc = BigInt::zero();
        for j in 0..n {
            let m = n - j;
            let ds: BigInt = (1..=m).filter(|d| m % d == 0).map(|d| &pi[d] * d).sum();
            acc += &beta[j] * ds;
        }
        beta.push(exact_div(acc, n, "totally symmetric structures", n)?);
    }
    Ok((pi, beta))
}

/// Fills the whole symmetric system up to the table order.
pub fn symmetric_system(table: &BTable) -> Result<EvenSymTables> {
    let k = require_even(table)?;
    let order = table.order();
    let (pi, beta) = totally_symmetric(table)?;
    let full = table.power(k - 1);

    let mut p_m = vec![BigInt::zero()];
    let mut p_al = vec![BigInt::zero()];
    let mut omega = vec![BigInt::zero()];
    let mut alpha = vec![BigInt::one()];
    // running divisor sums D_i = sum_{d | i} d omega_d
    let mut divisor_sums = vec![BigInt::zero(); order + 1];

    for n in 1..=order {
        let pm = page_sum(table, &alpha, n) - &pi[n];
        check_count(&pm, "mixed pages", n)?;

        let pal = if n % 2 == 0 {
            let raw = &full[(n - 2) / 2] - at_half(&pi, n) - at_half(&p_m, n);
            exact_div(raw, 2, "alternated page pairs", n)?
        } else {
            BigInt::zero()
        };
        check_count(&pal, "alternated page pairs", n)?;

        let w = &pi[n] + &pal + &pm;
        let contribution = &w * n;
        for multiple in (n..=order).step_by(n) {
            divisor_sums[multiple] += &contribution;
        }
        p_m.push(pm);
        p_al.push(pal);
        omega.push(w);

        let mut acc = BigInt::zero();
        for i in 1..=n {
            acc += &divisor_sums[i] * &alpha[n - i];
        }
        alpha.push(exact_div(acc, n, "symmetric edge-rooted structures", n)?);
    }

    let alpha_sq = convolve_int(&alpha, &alpha);
    Ok(EvenSymTables {
        params: table.params(),
        order,
        pi,
        beta,
        p_m,
        p_al,
        omega,
        alpha,
        alpha_sq,
    })
}

/// Unlabelled edge-rooted 2-trees, `(b_n + alpha_n) / 2`.
pub fn edge_rooted_counts(table: &BTable, sym: &EvenSymTables) -> Result<Vec<BigInt>> {
    require_even(table)?;
    table
        .b()
        .iter()
        .zip(&sym.alpha)
        .enumerate()
        .map(|(n, (b, a))| exact_div(b + a, 2, "edge-rooted 2-trees", n))
        .collect()
}

/// Unlabelled 2-trees for even `k`:
///
/// `a_n = a_{o,n}/2 + alpha_n/2 + b^{(k/2)}_{(n-1)/2}/4 - 1/4 sum_{i+j=n-1} alpha^{(2)}_i b^{((k-2)/2)}_{j/2}`.
///
/// The last two terms are the polygon-rooted symmetric structures with a
/// vertex-vertex axis and the edge-in-polygon-rooted ones.
pub fn even_series(table: &BTable) -> Result<Vec<BigInt>> {
    require_even(table)?;
    let sym = symmetric_system(table)?;
    let oriented = oriented_counts(table)?;
    even_from_parts(table, &sym, &oriented)
}

pub(crate) fn even_from_parts(
    table: &BTable,
    sym: &EvenSymTables,
    oriented: &[BigInt],
) -> Result<Vec<BigInt>> {
    let k = table.params().k();
    (0..=table.order())
        .map(|n| {
            let vertex_axis = table.frac_coeff(k / 2, n as i64 - 1, 2);
            let edge_axis = if n == 0 {
                BigInt::zero()
            } else {
                page_sum(table, &sym.alpha_sq, n)
            };
            let four_a = &oriented[n] * 2 + &sym.alpha[n] * 2 + vertex_axis - edge_axis;
            let a = exact_div(four_a, 4, "unlabelled 2-trees", n)?;
            check_count(&a, "unlabelled 2-trees", n)?;
            Ok(a)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(k: u32, order: usize) -> BTable {
        BTable::compute(GonalParams::new(k).unwrap(), order).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn totally_symmetric_squares() {
        let (pi, beta) = totally_symmetric(&table(4, 4)).unwrap();
        assert_eq!(pi[0], BigInt::zero());
        assert_eq!(pi[1], BigInt::one());
        assert_eq!(beta[1], BigInt::one());
        assert_eq!(pi[2], BigInt::one());
        assert_eq!(beta[0], BigInt::one());
    }

    #[test]
    fn symmetric_squares() {
        let t = table(4, 6);
        let sym = symmetric_system(&t).unwrap();
        assert_eq!(sym.alpha[1], BigInt::one());
        assert_eq!(sym.alpha[2], BigInt::from(2));
        let edge = edge_rooted_counts(&t, &sym).unwrap();
        assert_eq!(edge[1], BigInt::one());
        assert_eq!(edge[2], BigInt::from(3));
        let t6 = table(6, 3);
        let sym6 = symmetric_system(&t6).unwrap();
        assert_eq!(edge_rooted_counts(&t6, &sym6).unwrap()[1], BigInt::one());
    }

    #[test]
    fn table_invariants() {
        for k in [2, 4, 6, 8] {
            let t = table(k, 16);
            let sym = symmetric_system(&t).unwrap();
            assert_eq!(sym.alpha_sq, convolve_int(&sym.alpha, &sym.alpha));
            for n in 0..=16 {
                if n % 2 == 1 {
                    assert!(sym.p_al[n].is_zero());
                }
                assert!(sym.pi[n] <= sym.omega[n] || n == 0);
                assert!(sym.alpha[n] <= t.b()[n]);
                assert!(((&t.b()[n] + &sym.alpha[n]) % 2u32).is_zero());
                if n > 0 {
                    assert_eq!(sym.omega[n], &sym.pi[n] + &sym.p_al[n] + &sym.p_m[n]);
                }
            }
            assert!(sym.p_m[0].is_zero());
        }
    }

    #[test]
    fn square_counts() {
        let a = even_series(&table(4, 6)).unwrap();
        assert_eq!(a, ints(&[1, 1, 1, 3, 8, 32, 141]));
    }

    #[test]
    fn hexagon_count() {
        let a = even_series(&table(6, 5)).unwrap();
        assert_eq!(a[5], BigInt::from(103));
    }

    #[test]
    fn free_trees_when_k_is_two() {
        let a = even_series(&table(2, 12)).unwrap();
        assert_eq!(a, ints(&[1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301]));
    }

    #[test]
    fn odd_k_is_rejected() {
        assert!(matches!(
            even_series(&table(5, 3)),
            Err(Error::InvalidParameter(_))
        ));
    }
}
