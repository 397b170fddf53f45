//! `kgonal verify`: every check compares two independent routes and is
//! reported on its own line.

use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;

use kgonal::asymptotics::{self, OmegaEvaluator};
use kgonal::cache::{self, CacheStatus};
use kgonal::even::symmetric_system;
use kgonal::labelled::burnside_b;
use kgonal::odd::{odd_recurrence, odd_series, symmetric_series};
use kgonal::oracle::Enumerator;
use kgonal::oriented::oriented_counts;
use kgonal::{bfile, reference, universal};
use kgonal::{recurrence_crosscheck, unlabelled_counts, BTable, GonalParams};

pub struct Report {
    lines: Vec<(bool, String, String)>,
    notes: Vec<String>,
    seconds: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|(ok, _, _)| *ok)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for note in &self.notes {
            s.push_str(&format!("note {note}\n"));
        }
        for (ok, name, detail) in &self.lines {
            if *ok {
                s.push_str(&format!("PASS {name}\n"));
            } else {
                s.push_str(&format!("FAIL {name}: {detail}\n"));
            }
        }
        let failed = self.lines.iter().filter(|(ok, _, _)| !ok).count();
        s.push_str(&format!(
            "{} checks, {} failed, {:.1} s\n",
            self.lines.len(),
            failed,
            self.seconds
        ));
        s
    }

    fn record(&mut self, name: impl Into<String>, result: Result<(), String>) {
        let (ok, detail) = match result {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.lines.push((ok, name.into(), detail));
    }
}

fn first_difference(a: &[BigInt], b: &[BigInt]) -> Result<(), String> {
    if a.len() != b.len() {
        return Err(format!("lengths {} and {}", a.len(), b.len()));
    }
    match a.iter().zip(b).position(|(x, y)| x != y) {
        None => Ok(()),
        Some(n) => Err(format!("n = {n}: {} vs {}", a[n], b[n])),
    }
}

fn table(cache_dir: Option<&Path>, k: u32, order: usize, report: &mut Report) -> Result<BTable, String> {
    let params = GonalParams::new(k).map_err(|e| e.to_string())?;
    let (t, status) = cache::load_or_compute(cache_dir, params, order).map_err(|e| e.to_string())?;
    if let CacheStatus::Rejected(reason) = status {
        report
            .notes
            .push(format!("cache entry for k = {k} rejected ({reason}); recomputed"));
    }
    Ok(t)
}

pub fn run(cache_dir: Option<&Path>, full: bool, oracle: bool) -> Report {
    let start = Instant::now();
    let mut r = Report {
        lines: Vec::new(),
        notes: Vec::new(),
        seconds: 0.0,
    };
    let order = if full { 30 } else { 20 };

    // cached (or freshly computed) tables must equal a direct computation
    let mut tables = Vec::new();
    for k in 2..=12 {
        match table(cache_dir, k, order, &mut r) {
            Ok(t) => tables.push(t),
            Err(e) => {
                r.record(format!("b table k = {k}"), Err(e));
                r.seconds = start.elapsed().as_secs_f64();
                return r;
            }
        }
    }
    if cache_dir.is_some() {
        for t in &tables {
            let direct = BTable::compute(t.params(), t.order()).map_err(|e| e.to_string());
            let result = direct.and_then(|d| first_difference(d.b(), t.b()));
            r.record(format!("cache k = {}", t.params().k()), result);
        }
    }

    let cross_order = if full { 12 } else { 10 };
    for t in tables.iter().filter(|t| t.params().k() <= 8) {
        let k = t.params().k();
        let result = recurrence_crosscheck(t.params(), cross_order)
            .map_err(|e| e.to_string())
            .and_then(|slow| first_difference(&slow, &t.b()[..=cross_order]));
        r.record(format!("b series vs tuple recurrence, k = {k}"), result);

        let result = (0..=cross_order as u32).try_for_each(|n| {
            let orbits = burnside_b(t.params(), n).map_err(|e| e.to_string())?;
            if orbits == t.b()[n as usize] {
                Ok(())
            } else {
                Err(format!("n = {n}: {orbits} vs {}", t.b()[n as usize]))
            }
        });
        r.record(format!("b series vs orbit counting, k = {k}"), result);
    }

    for t in tables.iter().filter(|t| t.params().k() % 2 == 1) {
        let k = t.params().k();
        let result = (|| {
            let series = odd_series(t)
                .and_then(|s| s.to_counts("unlabelled"))
                .map_err(|e| e.to_string())?;
            let oriented = oriented_counts(t).map_err(|e| e.to_string())?;
            let rec = odd_recurrence(t, &oriented).map_err(|e| e.to_string())?;
            first_difference(&series, &rec)
        })();
        r.record(format!("odd series vs divisor recurrence, k = {k}"), result);
    }

    let golden = reference::unlabelled_table();
    for (t, (k, expected)) in tables.iter().zip(&golden) {
        let result = unlabelled_counts(&t.truncated(20))
            .map_err(|e| e.to_string())
            .and_then(|a| first_difference(&a, expected));
        r.record(format!("published unlabelled counts, k = {k}"), result);
    }

    for (k, name, text) in reference::OEIS_FIXTURES {
        let result = bfile::parse(text).map_err(|e| e.to_string()).and_then(|f| {
            let shift = reference::oeis_index_shift(k);
            let t = &tables[(k - 2) as usize];
            (0..20).try_for_each(|n| match f.get(n as i64 + shift) {
                Some(v) if v == &t.b()[n] => Ok(()),
                other => Err(format!("n = {n}: {other:?} vs {}", t.b()[n])),
            })
        });
        r.record(format!("b-file {name}, k = {k}"), result);
    }

    for (m, closed, _) in reference::universal_constants() {
        let got = universal::universal_c(m).closed_form();
        let result = if got == closed {
            Ok(())
        } else {
            Err(format!("{got} vs {closed}"))
        };
        r.record(format!("universal constant c_{m} closed form"), result);
    }

    if oracle {
        let n_max = if full { 6 } else { 4 };
        for k in 3..=6 {
            let t = &tables[(k - 2) as usize];
            let result = (|| {
                let symmetric = if k % 2 == 0 {
                    symmetric_system(t).map_err(|e| e.to_string())?.alpha
                } else {
                    symmetric_series(t)
                        .and_then(|s| s.to_counts("symmetric"))
                        .map_err(|e| e.to_string())?
                };
                let mut e = Enumerator::new(k);
                for n in 0..=n_max {
                    let all = e.structures(n);
                    if BigInt::from(all.len()) != t.b()[n] {
                        return Err(format!("n = {n}: {} structures vs b_n = {}", all.len(), t.b()[n]));
                    }
                    let fixed = all.iter().filter(|s| s.reversal() == **s).count();
                    if BigInt::from(fixed) != symmetric[n] {
                        return Err(format!("n = {n}: {fixed} symmetric vs {}", symmetric[n]));
                    }
                    if !all.iter().all(|s| s.reversal().reversal() == *s) {
                        return Err(format!("n = {n}: reversal is not an involution"));
                    }
                }
                Ok(())
            })();
            r.record(format!("brute-force enumeration, k = {k}, n <= {n_max}"), result);
        }
    }

    if full {
        for row in reference::asymptotic_table() {
            let result = (|| {
                let t = table(cache_dir, row.p + 1, 500, &mut r)?;
                let w = OmegaEvaluator::new(&t);
                let sol = asymptotics::solve_xi(&w, 1e-15).map_err(|e| e.to_string())?;
                if (sol.xi - row.xi).abs() < 1e-9 && (1.0 / sol.xi - row.beta).abs() < 1e-9 {
                    Ok(())
                } else {
                    Err(format!("xi {} vs {}", sol.xi, row.xi))
                }
            })();
            r.record(format!("singularity, p = {}", row.p), result);
        }
    }

    r.seconds = start.elapsed().as_secs_f64();
    r
}
