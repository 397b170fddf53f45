use num_bigint::BigInt;

use kgonal::{bfile, cache, reference, unlabelled_counts, BTable, GonalParams};

const FIXTURES: [(u32, &str); 5] = [
    (2, include_str!("../data/oeis/b000081.txt")),
    (3, include_str!("../data/oeis/b005750.txt")),
    (4, include_str!("../data/oeis/b052751.txt")),
    (5, include_str!("../data/oeis/b052773.txt")),
    (6, include_str!("../data/oeis/b052781.txt")),
];

#[test]
fn b_matches_every_fixture_term() {
    for (k, text) in FIXTURES {
        let f = bfile::parse(text).unwrap();
        let shift = i64::from(k == 2);
        let order = f.terms.len() - 1 - shift as usize;
        let t = BTable::compute(GonalParams::new(k).unwrap(), order).unwrap();
        for (n, b) in t.b().iter().enumerate() {
            assert_eq!(f.get(n as i64 + shift), Some(b), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn table1_goldens() {
    let table = reference::unlabelled_table();
    let ks: Vec<u32> = table.iter().map(|(k, _)| *k).collect();
    assert_eq!(ks, (2..=12).collect::<Vec<_>>());
    for (k, expected) in table {
        let got = unlabelled_counts(&BTable::compute(GonalParams::new(k).unwrap(), 20).unwrap()).unwrap();
        assert_eq!(got, expected, "k = {k}");
    }
    assert_eq!(reference::unlabelled_row(4).unwrap()[20], "50478955083341".parse::<BigInt>().unwrap());
}

#[test]
fn cached_tables_give_identical_counts() {
    let dir = tempfile::tempdir().unwrap();
    let params = GonalParams::new(6).unwrap();
    let (fresh, _) = cache::load_or_compute(Some(dir.path()), params, 25).unwrap();
    let (cached, status) = cache::load_or_compute(Some(dir.path()), params, 25).unwrap();
    assert_eq!(status, cache::CacheStatus::Hit);
    assert_eq!(unlabelled_counts(&fresh).unwrap(), unlabelled_counts(&cached).unwrap());
}
