//! Exact and asymptotic enumeration of k-gonal 2-trees: graphs built from
//! `k`-sided polygons glued edge to edge without cycles of polygons.
//!
//! The central object is the table of `b_n`, the unlabelled structures
//! rooted at an oriented edge ([`BTable`]). Oriented, unoriented and
//! edge-rooted counts are derived from it, labelled counts have closed
//! forms, and [`asymptotics`] locates the dominant singularity.

pub mod asymptotics;
pub mod bfile;
pub mod bseries;
pub mod cache;
pub mod error;
pub mod even;
pub mod families;
pub mod labelled;
pub mod odd;
pub mod oracle;
pub mod oriented;
pub mod partition;
pub mod reference;
pub mod series;
pub mod universal;

pub use bseries::{recurrence_crosscheck, BTable, GonalParams};
pub use error::{Error, Result};
pub use families::{family_counts, labelled_counts, unlabelled_counts, Family};
pub use series::Series;
