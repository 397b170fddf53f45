//! The series `b(x)` of unlabelled 2-trees rooted at an oriented edge, and
//! its convolution powers.
//!
//! `b` is the unique solution of `b(x) = exp(sum_i x^i b^{k-1}(x^i) / i)`.
//! Writing `g(x) = x b^{k-1}(x)` and `c_n = sum_{m | n} m g_m`, the
//! logarithmic derivative gives `n b_n = sum_{j=1..n} c_j b_{n-j}`, and
//! `g_n` only needs `b` below `n`, so the solve is one pass in `O(k N^2)`
//! integer operations.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::Series;

/// Polygon size `k >= 2`; `k = 2` degenerates to ordinary trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GonalParams {
    k: u32,
}

impl GonalParams {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
        Ok(Self { k })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// `p = k - 1`, the number of free edges on a page polygon.
    pub fn p(self) -> u32 {
        self.k - 1
    }

    pub fn is_even(self) -> bool {
        self.k.is_multiple_of(2)
    }

    /// Edge count `m(n) = (k - 1) n + 1` of a 2-tree with `n` polygons.
    pub fn edges(self, n: u64) -> BigInt {
        BigInt::from(self.p()) * n + 1u32
    }
}

/// Divides exactly or reports which coefficient came out fractional.
pub(crate) fn exact_div(num: BigInt, den: impl Into<BigInt>, what: &'static str, index: usize) -> Result<BigInt> {
    let den = den.into();
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegral {
            what,
            index,
            value: format!("{num}/{den}"),
        });
    }
    Ok(q)
}

/// `b^j` from `b` (with `b_0 = 1`) by the power recurrence
/// `n f_n = sum_{i=1..n} ((j + 1) i - n) b_i f_{n-i}`.
fn power_of_normalized(b: &[BigInt], j: u32) -> Result<Vec<BigInt>> {
    let mut f = Vec::with_capacity(b.len());
    f.push(BigInt::one());
    let jp1 = i64::from(j) + 1;
    for n in 1..b.len() {
        let mut acc = BigInt::zero();
        for i in 1..=n {
            if b[i].is_zero() || f[n - i].is_zero() {
                continue;
            }
            let w = jp1 * i as i64 - n as i64;
            if w != 0 {
                acc += &b[i] * &f[n - i] * w;
            }
        }
        f.push(exact_div(acc, n, "power of b", n)?);
    }
    Ok(f)
}

/// `b_0 .. b_N` together with a write-once cache of powers `b^{(j)}`.
pub struct BTable {
    params: GonalParams,
    b: Vec<BigInt>,
    series: Series,
    powers: RwLock<HashMap<u32, Arc<Vec<BigInt>>>>,
}

impl std::fmt::Debug for BTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BTable")
            .field("k", &self.params.k())
            .field("order", &self.order())
            .finish_non_exhaustive()
    }
}

impl BTable {
    /// Solves for `b_0 .. b_order`.
    pub fn compute(params: GonalParams, order: usize) -> Result<Self> {
        let p = params.p();
        let jp1 = i64::from(p) + 1;
        let mut b: Vec<BigInt> = vec![BigInt::one()];
        // f = b^p, grown one coefficient behind b
        let mut f: Vec<BigInt> = Vec::with_capacity(order + 1);
        // c_n = sum_{m | n} m f_{m-1}
        let mut c: Vec<BigInt> = vec![BigInt::zero(); order + 1];
        for n in 1..=order {
            let m = n - 1;
            if m == 0 {
                f.push(BigInt::one());
            } else {
                let mut acc = BigInt::zero();
                for i in 1..=m {
                    let w = jp1 * i as i64 - m as i64;
                    if w != 0 {
                        acc += &b[i] * &f[m - i] * w;
                    }
                }
                f.push(exact_div(acc, m, "power of b", m)?);
            }
            // g_n = f_{n-1} now known; feed every multiple of n
            let contribution = &f[n - 1] * n;
            for multiple in (n..=order).step_by(n) {
                c[multiple] += &contribution;
            }
            let mut acc = BigInt::zero();
            for j in 1..=n {
                acc += &c[j] * &b[n - j];
            }
            b.push(exact_div(acc, n, "b", n)?);
        }
        let table = Self::from_parts(params, b);
        if order >= 1 && p != 1 {
            // finish f to the full order and seed the cache with b^p
            let mut full = f;
            let mut acc = BigInt::zero();
            let m = order;
            for i in 1..=m {
                let w = jp1 * i as i64 - m as i64;
                if w != 0 {
                    acc += &table.b[i] * &full[m - i] * w;
                }
            }
            full.push(exact_div(acc, m, "power of b", m)?);
            table.insert_power(p, full);
        }
        Ok(table)
    }

    /// Wraps already known coefficients (e.g. loaded from a cache).
    pub fn from_coefficients(params: GonalParams, b: Vec<BigInt>) -> Result<Self> {
        if b.first() != Some(&BigInt::one()) {
            return Err(Error::InvalidParameter("b_0 must be 1".into()));
        }
        Ok(Self::from_parts(params, b))
    }

    fn from_parts(params: GonalParams, b: Vec<BigInt>) -> Self {
        let series = Series::from_integers(b.iter().cloned());
        let table = Self {
            params,
            b,
            series,
            powers: RwLock::new(HashMap::new()),
        };
        table.insert_power(0, {
            let mut one = vec![BigInt::zero(); table.b.len()];
            one[0] = BigInt::one();
            one
        });
        table.insert_power(1, table.b.clone());
        table
    }

    fn insert_power(&self, j: u32, values: Vec<BigInt>) -> Arc<Vec<BigInt>> {
        let mut guard = self.powers.write().expect("power cache poisoned");
        guard.entry(j).or_insert_with(|| Arc::new(values)).clone()
    }

    pub fn params(&self) -> GonalParams {
        self.params
    }

    pub fn order(&self) -> usize {
        self.b.len() - 1
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    /// Copy of the table cut down to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a table by truncation");
        Self::from_parts(self.params, self.b[..=order].to_vec())
    }

    /// Coefficients of `b^j`, memoized.
    pub fn power(&self, j: u32) -> Arc<Vec<BigInt>> {
        if let Some(hit) = self.powers.read().expect("power cache poisoned").get(&j) {
            return hit.clone();
        }
        let values = power_of_normalized(&self.b, j)
            .expect("powers of an integral series with unit constant term are integral");
        self.insert_power(j, values)
    }

    /// `b^{(j)}` as a series.
    pub fn convolution_power(&self, j: u32) -> Series {
        Series::from_integers(self.power(j).iter().cloned())
    }

    /// `b^{(j)}_r` for `r = num / den`, zero when `r` is negative or not an
    /// integer.
    pub fn frac_coeff(&self, j: u32, num: i64, den: i64) -> BigInt {
        assert!(den > 0);
        if num < 0 || num % den != 0 {
            return BigInt::zero();
        }
        let idx = (num / den) as usize;
        let power = self.power(j);
        assert!(
            idx < power.len(),
            "index {idx} beyond table order {}",
            self.order()
        );
        power[idx].clone()
    }
}

/// Independent route through the explicit tuple recurrence
/// `b_n = 1/n sum_j sum_alpha (|alpha| + 1) b_alpha1 ... b_alpha_{k-1} b_{n-j}`
/// over `(k-1)`-tuples `alpha` with `|alpha| + 1` dividing `j`.
///
/// Exponential in `k` through the tuple enumeration; meant for tests and
/// verification only.
pub fn recurrence_crosscheck(params: GonalParams, order: usize) -> Result<Vec<BigInt>> {
    let arity = params.p() as usize;
    let mut b: Vec<BigInt> = vec![BigInt::one()];
    // tuple_sums[s] = sum over (k-1)-tuples with |alpha| = s of prod b_alpha_i
    let mut tuple_sums: Vec<BigInt> = Vec::new();
    for n in 1..=order {
        // |alpha| can reach n - 1 now that b_{n-1} is known
        let s = n - 1;
        tuple_sums.push(sum_over_tuples(&b, arity, s));
        let mut acc = BigInt::zero();
        for j in 1..=n {
            for d in (1..=j).filter(|d| j % d == 0) {
                acc += &tuple_sums[d - 1] * d * &b[n - j];
            }
        }
        b.push(exact_div(acc, n, "b (tuple recurrence)", n)?);
    }
    Ok(b)
}

fn sum_over_tuples(b: &[BigInt], arity: usize, total: usize) -> BigInt {
    fn go(b: &[BigInt], slots: usize, remaining: usize, prefix: &BigInt, acc: &mut BigInt) {
        if slots == 1 {
            *acc += prefix * &b[remaining];
            return;
        }
        for first in 0..=remaining {
            let next = prefix * &b[first];
            go(b, slots - 1, remaining - first, &next, acc);
        }
    }
    let mut acc = BigInt::zero();
    go(b, arity, total, &BigInt::one(), &mut acc);
    acc
}
