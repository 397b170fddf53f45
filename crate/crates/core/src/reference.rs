//! Published reference values shipped with the crate.
//!
//! The CSV files under `data/` are transcriptions of the published tables;
//! they are used by the verification routines and by the test suites.

use num_bigint::BigInt;
use serde::Serialize;

pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");
pub const TABLE2_CSV: &str = include_str!("../data/table2.csv");
pub const UNIVERSAL_CSV: &str = include_str!("../data/universal.csv");

/// Local b-files of `b_n` for `k = 2..=6`, as `(k, A-number, contents)`.
/// The rooted-tree file (`k = 2`) has offset 0 with `a(0) = 0`, so there
/// `b_n` is the term of index `n + 1`.
pub const OEIS_FIXTURES: [(u32, &str, &str); 5] = [
    (2, "A000081", include_str!("../data/oeis/b000081.txt")),
    (3, "A005750", include_str!("../data/oeis/b005750.txt")),
    (4, "A052751", include_str!("../data/oeis/b052751.txt")),
    (5, "A052773", include_str!("../data/oeis/b052773.txt")),
    (6, "A052781", include_str!("../data/oeis/b052781.txt")),
];

/// Index shift between `b_n` and the b-file index for fixture `k`.
pub fn oeis_index_shift(k: u32) -> i64 {
    i64::from(k == 2)
}

/// Unlabelled counts `a_n` for `k = 2..=12`, `n = 0..=20`.
pub fn unlabelled_table() -> Vec<(u32, Vec<BigInt>)> {
    let mut lines = TABLE1_CSV.lines();
    let header = lines.next().expect("header");
    let ks: Vec<u32> = header
        .split(',')
        .skip(1)
        .map(|h| h.trim_start_matches('k').parse().expect("k column"))
        .collect();
    let mut columns: Vec<Vec<BigInt>> = vec![Vec::new(); ks.len()];
    for line in lines.filter(|l| !l.is_empty()) {
        for (col, cell) in line.split(',').skip(1).enumerate() {
            columns[col].push(cell.parse().expect("integer cell"));
        }
    }
    ks.into_iter().zip(columns).collect()
}

pub fn unlabelled_row(k: u32) -> Option<Vec<BigInt>> {
    unlabelled_table()
        .into_iter()
        .find(|(kk, _)| *kk == k)
        .map(|(_, v)| v)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub p: u32,
    pub xi: f64,
    pub alpha: f64,
    pub alpha_bar: f64,
    pub beta: f64,
}

pub fn asymptotic_table() -> Vec<AsymptoticRow> {
    TABLE2_CSV
        .lines()
        .skip(1)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            AsymptoticRow {
                p: f[0].parse().expect("p"),
                xi: f[1].parse().expect("xi"),
                alpha: f[2].parse().expect("alpha"),
                alpha_bar: f[3].parse().expect("alpha_bar"),
                beta: f[4].parse().expect("beta"),
            }
        })
        .collect()
}

pub fn asymptotic_row(p: u32) -> Option<AsymptoticRow> {
    asymptotic_table().into_iter().find(|r| r.p == p)
}

/// `(m, closed form, 20-digit decimal string)` for the first universal
/// constants.
pub fn universal_constants() -> Vec<(u32, String, String)> {
    UNIVERSAL_CSV
        .lines()
        .skip(1)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            (f[0].parse().expect("m"), f[1].to_string(), f[2].to_string())
        })
        .collect()
}
