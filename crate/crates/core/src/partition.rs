//! Integer partitions in multiplicity form.

use serde::Serialize;

/// A partition stored as multiplicities: `mult[i - 1]` is the number of parts
/// equal to `i`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    mult: Vec<u32>,
}

impl Partition {
    pub fn from_multiplicities(mut mult: Vec<u32>) -> Self {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        Self { mult }
    }

    pub fn from_parts(parts: &[u32]) -> Self {
        let mut mult = Vec::new();
        for &part in parts {
            assert!(part > 0, "parts are positive");
            let i = part as usize;
            if mult.len() < i {
                mult.resize(i, 0);
            }
            mult[i - 1] += 1;
        }
        Self::from_multiplicities(mult)
    }

    /// Number of parts equal to `i` (zero for `i = 0` or past the largest part).
    pub fn multiplicity(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.mult.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn largest_part(&self) -> usize {
        self.mult.len()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u64 + 1) * u64::from(m))
            .sum()
    }

    /// Number of parts.
    pub fn length(&self) -> u64 {
        self.mult.iter().map(|&m| u64::from(m)).sum()
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &m) in self.mult.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i as u32 + 1, m as usize));
        }
        out
    }

    /// `sum_{d | i} d n_d`.
    pub fn divisor_weight(&self, i: usize) -> u64 {
        (1..=i)
            .filter(|d| i.is_multiple_of(*d))
            .map(|d| d as u64 * u64::from(self.multiplicity(d)))
            .sum()
    }

    /// `sum_{d | i, d < i} d n_d`.
    pub fn proper_divisor_weight(&self, i: usize) -> u64 {
        self.divisor_weight(i) - i as u64 * u64::from(self.multiplicity(i))
    }

    /// Adds `shift` to every part.
    pub fn shifted(&self, shift: u32) -> Self {
        let parts: Vec<u32> = self.parts().into_iter().map(|p| p + shift).collect();
        Self::from_parts(&parts)
    }
}

/// All partitions of `total` into parts of size at least `min_part`, each
/// produced once, in reverse lexicographic order of their part lists.
pub struct Partitions {
    min_part: u32,
    // current parts in non-increasing order; None once exhausted
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(total: u32) -> Self {
        Self::with_min_part(total, 1)
    }

    pub fn with_min_part(total: u32, min_part: u32) -> Self {
        assert!(min_part >= 1);
        let current = if total == 0 {
            Some(Vec::new())
        } else if total >= min_part {
            Some(vec![total])
        } else {
            None
        };
        Self { min_part, current }
    }

    /// Next partition after `parts` in reverse lexicographic order: lower
    /// the rightmost part that can be lowered, then refill the tail with the
    /// largest admissible parts.
    fn advance(&self, parts: &[u32]) -> Option<Vec<u32>> {
        let min = self.min_part;
        let mut parts = parts.to_vec();
        let mut tail: u32 = 0;
        while let Some(last) = parts.pop() {
            tail += last;
            for v in (min..last).rev() {
                let rest = tail - v;
                if splittable(rest, min, v) {
                    parts.push(v);
                    fill(&mut parts, rest, min, v);
                    return Some(parts);
                }
            }
        }
        None
    }
}

/// Whether `total` splits into parts within `[min, max]`.
fn splittable(total: u32, min: u32, max: u32) -> bool {
    if total == 0 {
        return true;
    }
    if total < min || max < min {
        return false;
    }
    let count = total.div_ceil(max);
    count * min <= total
}

fn fill(parts: &mut Vec<u32>, mut rest: u32, min: u32, mut max: u32) {
    while rest > 0 {
        let w = (min..=max.min(rest))
            .rev()
            .find(|&w| splittable(rest - w, min, w))
            .expect("caller checked splittability");
        parts.push(w);
        rest -= w;
        max = w;
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = self.advance(&parts);
        Some(Partition::from_parts(&parts))
    }
}
