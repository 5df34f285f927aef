//! Canonical representation of a numerical semigroup.
//!
//! A semigroup is stored as its gap set: a bitset over `0..conductor` in which
//! bit `k` is set iff `k` is a gap. Every integer at or above the conductor is
//! an element. Minimal generators are derived once at construction.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::gcd_all;
use crate::bitset::BitSet;
use crate::error::{precondition, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gaps: BitSet,
    genus: u64,
    min_gens: Vec<u64>,
}

impl NumericalSemigroup {
    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            gaps: BitSet::new(0),
            genus: 0,
            min_gens: vec![1],
        }
    }

    /// Smallest additive semigroup containing `gens`.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&z) = gens.iter().find(|&&g| g == 0) {
            return Err(Error::ZeroGenerator(z));
        }
        let d = gcd_all(gens.iter().copied());
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0] as usize;

        // Sieve until `m` consecutive members appear; everything after is in.
        let mut member = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < m {
            n += 1;
            let is_in = sorted
                .iter()
                .any(|&g| g as usize <= n && member[n - g as usize]);
            member.push(is_in);
            run = if is_in { run + 1 } else { 0 };
        }
        let conductor = n + 1 - m;
        let gaps = BitSet::from_indices(conductor, (1..conductor).filter(|&k| !member[k]));
        Ok(Self::from_gap_bits(gaps))
    }

    /// Builds the semigroup whose gap set is exactly `gaps`, checking closure.
    pub fn from_gaps<I: IntoIterator<Item = u64>>(gaps: I) -> Result<Self> {
        let set: BTreeSet<u64> = gaps.into_iter().collect();
        if set.contains(&0) {
            return Err(precondition("0 cannot be a gap"));
        }
        let conductor = set.last().map_or(0, |&f| f as usize + 1);
        let bits = BitSet::from_indices(conductor, set.iter().map(|&g| g as usize));
        if let Some((a, b)) = closure_witness(&bits) {
            return Err(Error::NotASemigroup { a, b });
        }
        Ok(Self::from_gap_bits(bits))
    }

    /// Builds from a bitset already known to be closed.
    pub(crate) fn from_gap_bits(gaps: BitSet) -> Self {
        let genus = gaps.count() as u64;
        let conductor = gaps.max().map_or(0, |f| f + 1);
        let gaps = if conductor == gaps.len() {
            gaps
        } else {
            BitSet::from_indices(conductor, gaps.iter())
        };
        let min_gens = minimal_generators(&gaps);
        NumericalSemigroup {
            gaps,
            genus,
            min_gens,
        }
    }

    pub(crate) fn from_parts(gaps: BitSet, genus: u64, min_gens: Vec<u64>) -> Self {
        NumericalSemigroup {
            gaps,
            genus,
            min_gens,
        }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Largest gap, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.gaps.len() as i64 - 1
    }

    /// Least `c` such that every `n >= c` is an element.
    pub fn conductor(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        self.min_gens[0]
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.min_gens
    }

    #[inline]
    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor() || !self.gaps.contains(n as usize)
    }

    #[inline]
    pub fn is_gap(&self, n: u64) -> bool {
        !self.contains(n)
    }

    pub fn gaps(&self) -> impl Iterator<Item = u64> + '_ {
        self.gaps.iter().map(|g| g as u64)
    }

    pub fn gap_list(&self) -> Vec<u64> {
        self.gaps().collect()
    }

    /// Elements in ascending order, starting at `m_0 = 0`. Infinite.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        (0u64..).filter(move |&n| self.contains(n))
    }

    /// `m_i`, the `i`-th element with `m_0 = 0`.
    pub fn element_at(&self, i: u64) -> u64 {
        let c = self.conductor();
        let below = c - self.genus;
        if i >= below {
            // m_i = c + (i - below) = i + genus
            return i + self.genus;
        }
        self.elements().nth(i as usize).expect("elements are infinite")
    }

    /// Number of gaps divisible by `n`.
    pub fn gamma_n(&self, n: u64) -> u64 {
        assert!(n >= 1, "modulus must be positive");
        self.gaps().filter(|g| g % n == 0).count() as u64
    }

    /// Canonical text form, `gaps:` followed by the ascending gap list.
    pub fn to_spec(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("gaps:")?;
        let mut first = true;
        for g in self.gaps() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup(<")?;
        for (k, g) in self.min_gens.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">, {self})")
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.genus
            .cmp(&other.genus)
            .then_with(|| self.gaps().cmp(other.gaps()))
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `gens:4,7` or `gaps:1,2,3,5`. Lists must be strictly ascending,
/// comma separated, without whitespace.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing `gens:` or `gaps:` prefix in {s:?}")))?;
        let values = parse_ascending(body)?;
        match kind {
            "gens" => Self::from_generators(&values),
            "gaps" => Self::from_gaps(values),
            other => Err(Error::Parse(format!("unknown prefix {other:?}"))),
        }
    }
}

fn parse_ascending(body: &str) -> Result<Vec<u64>> {
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out: Vec<u64> = Vec::new();
    for tok in body.split(',') {
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad integer {tok:?}")));
        }
        let v: u64 = tok
            .parse()
            .map_err(|e| Error::Parse(format!("bad integer {tok:?}: {e}")))?;
        if out.last().is_some_and(|&p| p >= v) {
            return Err(Error::Parse(format!(
                "list must be strictly ascending, {v} follows {}",
                out.last().unwrap()
            )));
        }
        out.push(v);
    }
    Ok(out)
}

/// First pair of non-gaps `a <= b` whose sum is a gap, scanning `a` then `b`
/// in ascending order.
fn closure_witness(gaps: &BitSet) -> Option<(u64, u64)> {
    let c = gaps.len();
    for a in 1..c {
        if gaps.contains(a) {
            continue;
        }
        for b in a..c - a {
            if !gaps.contains(b) && gaps.contains(a + b) {
                return Some((a as u64, b as u64));
            }
        }
    }
    None
}

/// Minimal generators all lie below `conductor + multiplicity`.
fn minimal_generators(gaps: &BitSet) -> Vec<u64> {
    let c = gaps.len();
    let member = |n: usize| n >= c || !gaps.contains(n);
    let m = (1..).find(|&n| member(n)).unwrap();
    let mut gens = vec![m as u64];
    for x in m + 1..c + m {
        if member(x) && !(m..=x / 2).any(|a| member(a) && member(x - a)) {
            gens.push(x as u64);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    #[test]
    fn naturals_from_one() {
        let h = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(h.genus(), 0);
        assert_eq!(h.frobenius(), -1);
        assert_eq!(h.conductor(), 0);
        assert_eq!(h.minimal_generators(), &[1]);
        assert_eq!(h, NumericalSemigroup::naturals());
        assert_eq!(h.to_string(), "gaps:");
    }

    #[test]
    fn two_three() {
        let h = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(h.gap_list(), vec![1]);
        assert_eq!(h.genus(), 1);
        assert_eq!(h.frobenius(), 1);
    }

    #[test]
    fn four_seven() {
        let h = NumericalSemigroup::from_generators(&[4, 7]).unwrap();
        assert_eq!(h.gap_list(), vec![1, 2, 3, 5, 6, 9, 10, 13, 17]);
        assert_eq!(h.genus(), 9);
        assert_eq!(h.frobenius(), 17);
        assert_eq!(h.minimal_generators(), &[4, 7]);
    }

    #[test]
    fn generator_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::GcdNotOne(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::ZeroGenerator(0))
        );
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let h = NumericalSemigroup::from_generators(&[6, 4, 17, 8, 4]).unwrap();
        assert_eq!(h.minimal_generators(), &[4, 6, 17]);
        assert_eq!(h.genus(), 10);
    }

    #[test]
    fn gaps_constructor() {
        assert_eq!(sg("gaps:1").minimal_generators(), &[2, 3]);
        let b = NumericalSemigroup::from_gaps(
            (1..=12).chain([19, 21, 24, 25]),
        )
        .unwrap();
        assert_eq!(b.genus(), 16);
        assert_eq!(b.frobenius(), 25);
        assert_eq!(
            NumericalSemigroup::from_gaps([1, 4]),
            Err(Error::NotASemigroup { a: 2, b: 2 })
        );
        assert!(NumericalSemigroup::from_gaps([0, 1]).is_err());
    }

    #[test]
    fn element_indexing() {
        let h = sg("gens:4,7");
        assert_eq!(h.element_at(0), 0);
        assert_eq!(h.element_at(1), 4);
        assert_eq!(h.element_at(3), 8);
        let listed: Vec<u64> = h.elements().take(30).collect();
        for (i, &m) in listed.iter().enumerate() {
            assert_eq!(h.element_at(i as u64), m);
        }
        assert_eq!(NumericalSemigroup::naturals().element_at(5), 5);
    }

    #[test]
    fn gamma_n_counts() {
        let h = sg("gens:4,7");
        assert_eq!(h.gamma_n(1), h.genus());
        assert_eq!(h.gamma_n(2), 3);
        assert_eq!(sg("gens:2,11").gamma_n(2), 0);
    }

    #[test]
    fn parse_and_print() {
        let h = sg("gens:4,7");
        assert_eq!(h.to_string(), "gaps:1,2,3,5,6,9,10,13,17");
        assert_eq!(sg(&h.to_string()), h);
        for bad in ["4,7", "gens:7,4", "gens:4, 7", "gens:4,,7", "gens:4,4", "foo:1", "gaps:a"] {
            assert!(bad.parse::<NumericalSemigroup>().is_err(), "{bad}");
        }
        assert_eq!(sg("gaps:"), NumericalSemigroup::naturals());
    }
}
