//! Counting sequences by family, with parity dispatch for the unlabelled
//! families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::bseries::{exact_div, BTable, GonalParams};
use crate::error::{Error, Result};
use crate::even::{edge_rooted_counts, even_series, symmetric_system};
use crate::labelled::{labelled_oriented, labelled_rooted, labelled_unoriented};
use crate::odd::{odd_series, symmetric_series};
use crate::oriented::oriented_counts;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Unlabelled, rooted at an oriented edge.
    B,
    LabelledRooted,
    LabelledOriented,
    Labelled,
    UnlabelledOriented,
    Unlabelled,
    EdgeRootedUnlabelled,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::B,
        Family::LabelledRooted,
        Family::LabelledOriented,
        Family::Labelled,
        Family::UnlabelledOriented,
        Family::Unlabelled,
        Family::EdgeRootedUnlabelled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::B => "b",
            Family::LabelledRooted => "labelled-rooted",
            Family::LabelledOriented => "labelled-oriented",
            Family::Labelled => "labelled",
            Family::UnlabelledOriented => "unlabelled-oriented",
            Family::Unlabelled => "unlabelled",
            Family::EdgeRootedUnlabelled => "edge-rooted-unlabelled",
        }
    }

    pub fn is_labelled(self) -> bool {
        matches!(
            self,
            Family::LabelledRooted | Family::LabelledOriented | Family::Labelled
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// Unlabelled 2-trees `a_0 .. a_order`.
pub fn unlabelled_counts(table: &BTable) -> Result<Vec<BigInt>> {
    if table.params().is_even() {
        even_series(table)
    } else {
        odd_series(table)?.to_counts("unlabelled 2-trees")
    }
}

/// Unlabelled 2-trees rooted at an unoriented edge, `(b_n + s_n) / 2` with
/// `s_n` the reversal-symmetric edge-rooted structures.
pub fn edge_rooted_unlabelled(table: &BTable) -> Result<Vec<BigInt>> {
    if table.params().is_even() {
        let sym = symmetric_system(table)?;
        return edge_rooted_counts(table, &sym);
    }
    let s = symmetric_series(table)?.to_counts("symmetric edge-rooted 2-trees")?;
    table
        .b()
        .iter()
        .zip(&s)
        .enumerate()
        .map(|(n, (b, s))| exact_div(b + s, 2, "edge-rooted 2-trees", n))
        .collect()
}

/// Coefficients `0 ..= order` of a labelled family (closed forms, no `b`
/// table needed).
pub fn labelled_counts(params: GonalParams, family: Family, order: usize) -> Result<Vec<BigInt>> {
    let ns = 0..=order as u64;
    match family {
        Family::LabelledRooted => Ok(ns.map(|n| labelled_rooted(params, n)).collect()),
        Family::LabelledOriented => Ok(ns.map(|n| labelled_oriented(params, n)).collect()),
        Family::Labelled => ns.map(|n| labelled_unoriented(params, n)).collect(),
        other => Err(Error::InvalidParameter(format!("{other} is not a labelled family"))),
    }
}

/// Coefficients `0 ..= table.order()` of `family`.
pub fn family_counts(table: &BTable, family: Family) -> Result<Vec<BigInt>> {
    match family {
        Family::B => Ok(table.b().to_vec()),
        Family::LabelledRooted | Family::LabelledOriented | Family::Labelled => {
            labelled_counts(table.params(), family, table.order())
        }
        Family::UnlabelledOriented => oriented_counts(table),
        Family::Unlabelled => unlabelled_counts(table),
        Family::EdgeRootedUnlabelled => edge_rooted_unlabelled(table),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(k: u32, order: usize) -> BTable {
        BTable::compute(GonalParams::new(k).unwrap(), order).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("trees".parse::<Family>().is_err());
    }

    #[test]
    fn dispatch() {
        let a3 = family_counts(&table(3, 6), Family::Unlabelled).unwrap();
        assert_eq!(a3[6], BigInt::from(39));
        let a4 = family_counts(&table(4, 6), Family::Unlabelled).unwrap();
        assert_eq!(a4[6], BigInt::from(141));
        let l = family_counts(&table(5, 2), Family::LabelledRooted).unwrap();
        assert_eq!(l[2], BigInt::from(9));
    }

    #[test]
    fn odd_edge_rooted() {
        // k = 3, n = 2: the three oriented structures collapse to two
        let e = edge_rooted_unlabelled(&table(3, 4)).unwrap();
        assert_eq!(e[1], BigInt::from(1));
        assert_eq!(e[2], BigInt::from(2));
    }
}
