//! Exhaustive enumeration by genus over the semigroup tree.
//!
//! The root is the naturals. The children of `H` are `H \ {x}` for every
//! minimal generator `x > frobenius(H)`, in ascending order of `x`. Every
//! semigroup of genus `g` sits at depth `g` exactly once.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_GENUS_CAP: u64 = 25;

/// Children of `h` in the tree, ordered by the removed generator.
pub fn children(h: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let f = h.frobenius();
    h.minimal_generators()
        .iter()
        .filter(|&&x| x as i64 > f)
        .map(|&x| remove_generator(h, x))
        .collect()
}

/// `h \ {x}` for a minimal generator `x` above the Frobenius number.
///
/// Minimal generators of the child lie in `msg(h) \ {x}`, `x + msg(h)` and
/// `{3x}`; only the new candidates need a decomposition test.
fn remove_generator(h: &NumericalSemigroup, x: u64) -> NumericalSemigroup {
    let width = x as usize + 1;
    let mut gaps = BitSet::new(width);
    for g in h.gaps() {
        gaps.insert(g as usize);
    }
    gaps.insert(x as usize);
    let member = |n: u64| n > x || ((n as usize) < width && !gaps.contains(n as usize));

    let old = h.minimal_generators();
    let mut gens: Vec<u64> = old.iter().copied().filter(|&g| g != x).collect();
    let candidates = old.iter().map(|&s| x + s).chain(std::iter::once(3 * x));
    let mut fresh: Vec<u64> = candidates
        .filter(|&y| !(1..=y / 2).any(|a| member(a) && member(y - a)))
        .collect();
    gens.append(&mut fresh);
    gens.sort_unstable();
    gens.dedup();
    NumericalSemigroup::from_parts(gaps, h.genus() + 1, gens)
}

/// Depth-first stream of all descendants of a root at a fixed genus.
pub struct GenusIter {
    stack: Vec<NumericalSemigroup>,
    target: u64,
}

impl GenusIter {
    /// Descendants of `root` with genus exactly `target` (`root` itself
    /// when its genus matches).
    pub fn from_root(root: NumericalSemigroup, target: u64) -> Self {
        let stack = if root.genus() <= target {
            vec![root]
        } else {
            Vec::new()
        };
        GenusIter { stack, target }
    }
}

impl Iterator for GenusIter {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        while let Some(h) = self.stack.pop() {
            if h.genus() == self.target {
                return Some(h);
            }
            let mut kids = children(&h);
            kids.reverse();
            self.stack.extend(kids);
        }
        None
    }
}

/// Every semigroup of genus `g`, each exactly once, in a reproducible order.
pub fn enumerate_by_genus(g: u64) -> Result<GenusIter> {
    enumerate_by_genus_with_cap(g, DEFAULT_GENUS_CAP)
}

pub fn enumerate_by_genus_with_cap(g: u64, cap: u64) -> Result<GenusIter> {
    if g > cap {
        return Err(Error::CapExceeded { genus: g, cap });
    }
    Ok(GenusIter::from_root(NumericalSemigroup::naturals(), g))
}

/// Number of semigroups of genus `g`.
pub fn count_by_genus(g: u64) -> Result<usize> {
    Ok(enumerate_by_genus(g)?.count())
}
