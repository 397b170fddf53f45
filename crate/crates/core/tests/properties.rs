use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use kgonal::asymptotics::{self, OmegaEvaluator};
use kgonal::even::symmetric_system;
use kgonal::labelled::burnside_b;
use kgonal::odd::{odd_recurrence, odd_series};
use kgonal::oriented::oriented_counts;
use kgonal::{family_counts, recurrence_crosscheck, unlabelled_counts, BTable, Family, GonalParams};

fn table(k: u32, order: usize) -> BTable {
    BTable::compute(GonalParams::new(k).unwrap(), order).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn b_routes_agree(k in 2u32..=8, order in 0usize..=12) {
        let t = table(k, order);
        prop_assert_eq!(recurrence_crosscheck(t.params(), order).unwrap(), t.b().to_vec());
    }

    #[test]
    fn orbit_counting_agrees(k in 2u32..=8, n in 0u32..=10) {
        let t = table(k, n as usize);
        prop_assert_eq!(burnside_b(t.params(), n).unwrap(), t.b()[n as usize].clone());
    }

    #[test]
    fn odd_routes_agree(h in 1u32..=5, order in 0usize..=20) {
        let t = table(2 * h + 1, order);
        let series = odd_series(&t).unwrap().to_counts("a").unwrap();
        let rec = odd_recurrence(&t, &oriented_counts(&t).unwrap()).unwrap();
        prop_assert_eq!(series, rec);
    }

    #[test]
    fn unlabelled_bounds(k in 2u32..=12, order in 0usize..=18) {
        let t = table(k, order);
        let a = unlabelled_counts(&t).unwrap();
        let ao = oriented_counts(&t).unwrap();
        let e = family_counts(&t, Family::EdgeRootedUnlabelled).unwrap();
        for n in 0..=order {
            prop_assert!(!a[n].is_negative());
            let twice: BigInt = &a[n] * 2;
            prop_assert!(twice >= ao[n] && a[n] <= ao[n]);
            prop_assert!(e[n] <= t.b()[n] && &e[n] * 2 >= t.b()[n]);
        }
    }

    #[test]
    fn even_tables(h in 1u32..=5, order in 0usize..=16) {
        let t = table(2 * h, order);
        let sym = symmetric_system(&t).unwrap();
        for n in 0..=order {
            prop_assert!(sym.alpha[n] <= t.b()[n]);
            prop_assert!(((&t.b()[n] + &sym.alpha[n]) % 2u32).is_zero());
            if n % 2 == 1 {
                prop_assert!(sym.p_al[n].is_zero());
            }
            for v in [&sym.pi[n], &sym.beta[n], &sym.p_m[n], &sym.p_al[n], &sym.omega[n]] {
                prop_assert!(!v.is_negative());
            }
        }
    }

    #[test]
    fn truncation_is_consistent(k in 2u32..=9, order in 1usize..=30, cut in 0usize..=30) {
        let cut = cut.min(order);
        let t = table(k, order);
        let small = table(k, cut);
        prop_assert_eq!(&t.b()[..=cut], small.b());
        prop_assert_eq!(&unlabelled_counts(&t).unwrap()[..=cut], &unlabelled_counts(&small).unwrap()[..]);
    }
}

#[test]
fn singularity_ordering_and_stability() {
    let mut previous = f64::INFINITY;
    for p in 1..=11 {
        let t = table(p + 1, 500);
        let w = OmegaEvaluator::new(&t);
        let tol = 1e-13;
        let sol = asymptotics::solve_xi(&w, tol).unwrap();
        let (lo, hi) = asymptotics::xi_bounds(p);
        assert!(lo <= sol.xi && sol.xi <= hi);
        assert!(sol.xi < previous, "xi decreases with p");
        previous = sol.xi;
        assert!(sol.residual < 1e-12);

        let half = OmegaEvaluator::new(&t.truncated(250));
        let sol_half = asymptotics::solve_xi(&half, tol).unwrap();
        assert!((sol.xi - sol_half.xi).abs() < 10.0 * tol, "p = {p}");

        let report = asymptotics::constants(&w, sol, None).unwrap();
        let b_at = w.b_at(sol.xi);
        // the missing tail sum_{n > N} alpha n^{-3/2} is about 2 alpha / sqrt(N)
        let gap = report.tau0 - b_at;
        let tail = 2.0 * report.alpha / 500f64.sqrt();
        assert!(gap > 0.0 && (gap - tail).abs() < 0.01 * tail, "p = {p}: gap {gap}, tail {tail}");
        assert_eq!(report.beta, 1.0 / report.xi);
    }
}

#[test]
fn labelled_families() {
    let t = table(3, 6);
    let rooted = family_counts(&t, Family::LabelledRooted).unwrap();
    let oriented = family_counts(&t, Family::LabelledOriented).unwrap();
    let plain = family_counts(&t, Family::Labelled).unwrap();
    for n in 2..=6 {
        // one root edge among the m = 2n + 1 edges, oriented two ways
        let m = BigInt::from(2 * n + 1);
        assert_eq!(&rooted[n], &(&oriented[n] * &m));
        assert!(&plain[n] * 2 >= oriented[n]);
    }
}

#[test]
fn edge_rooted_matches_oracle_orbits() {
    for k in 2..=6 {
        let t = table(k, 5);
        let edge = family_counts(&t, Family::EdgeRootedUnlabelled).unwrap();
        let mut e = kgonal::oracle::Enumerator::new(k);
        for n in 0..=5 {
            let all = e.structures(n);
            let fixed = all.iter().filter(|s| s.reversal() == **s).count();
            // orbits of the reversal on oriented-edge-rooted structures
            assert_eq!(edge[n], BigInt::from((all.len() + fixed) / 2), "k = {k}, n = {n}");
        }
    }
}
