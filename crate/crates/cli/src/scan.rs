//! Exhaustive scans over a genus range, optionally sharded across threads.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use sgp_core::classify::{symmetry_profile, type_verdict, SymmetryKind};
use sgp_core::enumerate::GenusIter;
use sgp_core::obstruction::{gap_sum_profile, lemma_4_1_1, Lemma411Verdict};
use sgp_core::{enumerate_by_genus_with_cap, NumericalSemigroup, Result};

/// Depth at which the tree is cut into independent subtrees for sharding.
const SHARD_DEPTH: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    BcFail { n: u64 },
    Type { n: u64, gamma: u64 },
    Symmetric,
    QuasiSymmetric,
    Lemma411,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPredicate(pub String);

impl fmt::Display for UnknownPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown predicate {:?} (expected bc_fail, type:N,gamma, symmetric, quasi_symmetric or lemma411)",
            self.0
        )
    }
}

impl std::error::Error for UnknownPredicate {}

impl Predicate {
    /// Parses a predicate name; `n` is the gap-sum order used by `bc_fail`.
    pub fn parse(s: &str, n: u64) -> std::result::Result<Predicate, UnknownPredicate> {
        let unknown = || UnknownPredicate(s.to_string());
        match s {
            "bc_fail" => Ok(Predicate::BcFail { n }),
            "symmetric" => Ok(Predicate::Symmetric),
            "quasi_symmetric" => Ok(Predicate::QuasiSymmetric),
            "lemma411" => Ok(Predicate::Lemma411),
            _ => {
                let rest = s.strip_prefix("type:").ok_or_else(unknown)?;
                let (a, b) = rest.split_once(',').ok_or_else(unknown)?;
                let n = u64::from_str(a).map_err(|_| unknown())?;
                let gamma = u64::from_str(b).map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                Ok(Predicate::Type { n, gamma })
            }
        }
    }

    pub fn matches(&self, h: &NumericalSemigroup) -> bool {
        match *self {
            Predicate::BcFail { n } => gap_sum_profile(h, n).is_ok_and(|p| !p.passes_bc),
            Predicate::Type { n, gamma } => type_verdict(h, n, gamma).is_type,
            Predicate::Symmetric => {
                symmetry_profile(h).is_ok_and(|p| p.kind == SymmetryKind::Symmetric)
            }
            Predicate::QuasiSymmetric => {
                symmetry_profile(h).is_ok_and(|p| p.kind == SymmetryKind::QuasiSymmetric)
            }
            Predicate::Lemma411 => {
                lemma_4_1_1(h).is_ok_and(|r| r.verdict == Lemma411Verdict::NotWeierstrass)
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::BcFail { .. } => f.write_str("bc_fail"),
            Predicate::Type { n, gamma } => write!(f, "type:{n},{gamma}"),
            Predicate::Symmetric => f.write_str("symmetric"),
            Predicate::QuasiSymmetric => f.write_str("quasi_symmetric"),
            Predicate::Lemma411 => f.write_str("lemma411"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    /// Sorted by genus, then gap set.
    pub matches: Vec<NumericalSemigroup>,
    pub scanned: u64,
}

/// Every semigroup with genus in `lo..=hi` satisfying `pred`. With `jobs > 1`
/// each genus is split into the subtrees below depth [`SHARD_DEPTH`].
pub fn scan(lo: u64, hi: u64, pred: Predicate, jobs: usize, cap: u64) -> Result<ScanReport> {
    // validates the range against the cap before any work
    enumerate_by_genus_with_cap(hi, cap)?;
    let mut matches = Vec::new();
    let mut scanned = 0u64;
    for g in lo..=hi {
        let (found, count) = if jobs <= 1 {
            scan_serial(g, pred, cap)?
        } else {
            scan_parallel(g, pred, jobs, cap)?
        };
        matches.extend(found);
        scanned += count;
    }
    matches.sort();
    Ok(ScanReport { matches, scanned })
}

fn scan_serial(g: u64, pred: Predicate, cap: u64) -> Result<(Vec<NumericalSemigroup>, u64)> {
    let mut found = Vec::new();
    let mut count = 0;
    for h in enumerate_by_genus_with_cap(g, cap)? {
        count += 1;
        if pred.matches(&h) {
            found.push(h);
        }
    }
    Ok((found, count))
}

fn scan_parallel(
    g: u64,
    pred: Predicate,
    jobs: usize,
    cap: u64,
) -> Result<(Vec<NumericalSemigroup>, u64)> {
    let roots: Vec<NumericalSemigroup> = enumerate_by_genus_with_cap(g.min(SHARD_DEPTH), cap)?.collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let per_root: Vec<(Vec<NumericalSemigroup>, u64)> = pool.install(|| {
        roots
            .into_par_iter()
            .map(|root| {
                let mut found = Vec::new();
                let mut count = 0;
                for h in GenusIter::from_root(root, g) {
                    count += 1;
                    if pred.matches(&h) {
                        found.push(h);
                    }
                }
                (found, count)
            })
            .collect()
    });
    let count = per_root.iter().map(|(_, c)| c).sum();
    Ok((per_root.into_iter().flat_map(|(f, _)| f).collect(), count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_parsing() {
        assert_eq!(Predicate::parse("bc_fail", 3), Ok(Predicate::BcFail { n: 3 }));
        assert_eq!(
            Predicate::parse("type:2,1", 2),
            Ok(Predicate::Type { n: 2, gamma: 1 })
        );
        assert!(Predicate::parse("type:2", 2).is_err());
        assert!(Predicate::parse("type:0,1", 2).is_err());
        assert!(Predicate::parse("hyperelliptic", 2).is_err());
    }

    #[test]
    fn genus_two_symmetric() {
        let r = scan(2, 2, Predicate::Symmetric, 1, 25).unwrap();
        assert_eq!(r.scanned, 2);
        assert_eq!(r.matches, vec!["gens:2,5".parse().unwrap()]);
    }

    #[test]
    fn sharding_agrees_with_serial() {
        for pred in [Predicate::QuasiSymmetric, Predicate::Type { n: 2, gamma: 1 }] {
            let a = scan(0, 11, pred, 1, 25).unwrap();
            let b = scan(0, 11, pred, 4, 25).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn cap_applies() {
        assert!(scan(0, 10, Predicate::Symmetric, 1, 9).is_err());
    }
}
