//! Brute-force enumeration of small oriented-edge-rooted 2-trees.
//!
//! A structure is a multiset of pages; a page is the polygon on the root
//! edge together with the `k - 1` structures glued on its other edges, in
//! the order met when walking around the polygon from the head of the root
//! edge. Multisets are kept sorted by their serialized form (shorter first,
//! then lexicographic), so two structures are isomorphic exactly when their
//! serializations are equal.
//!
//! Reversing the root edge walks the polygon the other way round and flips
//! the orientation of every glued edge: the child tuple is reversed and each
//! child is reversed recursively. For even `k` the middle slot (the edge
//! opposite the root) stays in place.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Structure {
    pages: Vec<Page>,
    code: String,
    size: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Page {
    children: Vec<Structure>,
    code: String,
    size: usize,
}

fn canonical_cmp(a: &str, b: &str) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Structure {
    pub fn new(mut pages: Vec<Page>) -> Self {
        pages.sort_by(|a, b| canonical_cmp(&a.code, &b.code));
        let mut code = String::from("[");
        for page in &pages {
            code.push_str(&page.code);
        }
        code.push(']');
        let size = pages.iter().map(|p| p.size).sum();
        Self { pages, code, size }
    }

    pub fn empty() -> Self {
        Self::new(Vec::new())
    }

    pub fn pages(&self) -> &[Page] {
        &self.pages
    }

    /// Number of polygons.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn encoding(&self) -> &str {
        &self.code
    }

    /// The same structure seen from the reversed root edge.
    pub fn reversal(&self) -> Structure {
        Structure::new(self.pages.iter().map(Page::reversal).collect())
    }
}

impl Page {
    pub fn new(children: Vec<Structure>) -> Self {
        let mut code = String::from("<");
        for child in &children {
            code.push_str(&child.code);
        }
        code.push('>');
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        Self {
            children,
            code,
            size,
        }
    }

    pub fn children(&self) -> &[Structure] {
        &self.children
    }

    pub fn reversal(&self) -> Page {
        Page::new(self.children.iter().rev().map(Structure::reversal).collect())
    }
}

impl fmt::Debug for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

impl fmt::Debug for Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

/// Bottom-up enumerator; structures of every size up to the largest
/// requested one are kept.
pub struct Enumerator {
    arity: usize,
    by_size: Vec<Vec<Structure>>,
}

impl Enumerator {
    pub fn new(k: u32) -> Self {
        assert!(k >= 2);
        Self {
            arity: (k - 1) as usize,
            by_size: vec![vec![Structure::empty()]],
        }
    }

    /// All pages with exactly `size` polygons.
    fn pages_of_size(&self, size: usize) -> Vec<Page> {
        let mut out = Vec::new();
        let mut slots: Vec<&Structure> = Vec::with_capacity(self.arity);
        self.fill_slots(size - 1, &mut slots, &mut out);
        out
    }

    fn fill_slots<'a>(&'a self, remaining: usize, slots: &mut Vec<&'a Structure>, out: &mut Vec<Page>) {
        if slots.len() + 1 == self.arity {
            for s in &self.by_size[remaining] {
                slots.push(s);
                out.push(Page::new(slots.iter().map(|&s| s.clone()).collect()));
                slots.pop();
            }
            return;
        }
        for first in 0..=remaining {
            for s in &self.by_size[first] {
                slots.push(s);
                self.fill_slots(remaining - first, slots, out);
                slots.pop();
            }
        }
    }

    fn extend_to(&mut self, n: usize) {
        while self.by_size.len() <= n {
            let target = self.by_size.len();
            let mut pages: Vec<Page> = (1..=target).flat_map(|s| self.pages_of_size(s)).collect();
            pages.sort_by(|a, b| canonical_cmp(&a.code, &b.code));
            let mut found = Vec::new();
            let mut chosen = Vec::new();
            choose_pages(&pages, 0, target, &mut chosen, &mut found);
            self.by_size.push(found);
        }
    }

    /// All pairwise non-isomorphic structures with `n` polygons.
    pub fn structures(&mut self, n: usize) -> &[Structure] {
        self.extend_to(n);
        &self.by_size[n]
    }
}

/// Multisets of pages (non-decreasing indices) with total size `remaining`.
fn choose_pages(pages: &[Page], start: usize, remaining: usize, chosen: &mut Vec<Page>, out: &mut Vec<Structure>) {
    if remaining == 0 {
        out.push(Structure::new(chosen.clone()));
        return;
    }
    for (idx, page) in pages.iter().enumerate().skip(start) {
        if page.size <= remaining {
            chosen.push(page.clone());
            choose_pages(pages, idx, remaining - page.size, chosen, out);
            chosen.pop();
        }
    }
}

pub fn enumerate_b(k: u32, n: usize) -> Vec<Structure> {
    Enumerator::new(k).structures(n).to_vec()
}

/// Structures isomorphic to their own reversal.
pub fn count_tau_fixed(k: u32, n: usize) -> usize {
    Enumerator::new(k)
        .structures(n)
        .iter()
        .filter(|s| s.reversal() == **s)
        .count()
}
