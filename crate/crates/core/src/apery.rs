//! Apéry data of a semigroup relative to one of its positive elements.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// For each residue `i = 1..m-1`, `s[i-1]` is the least element congruent to
/// `i` mod `m` and `e[i-1] = (s_i - i) / m`, the number of gaps in that class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperyProfile {
    pub modulus: u64,
    pub s: Vec<u64>,
    pub e: Vec<u64>,
}

impl AperyProfile {
    pub fn new(h: &NumericalSemigroup, m: u64) -> Result<Self> {
        if m == 0 || !h.contains(m) {
            return Err(Error::NotAnElement(m));
        }
        let s: Vec<u64> = (1..m)
            .map(|i| {
                (0u64..)
                    .map(|k| i + k * m)
                    .find(|&x| h.contains(x))
                    .expect("cofinite")
            })
            .collect();
        let e = s
            .iter()
            .zip(1..)
            .map(|(&si, i)| (si - i) / m)
            .collect();
        Ok(AperyProfile { modulus: m, s, e })
    }

    /// `e_i` for `i` in `0..m`, with `e_0 = 0`.
    pub fn e_at(&self, i: u64) -> u64 {
        if i == 0 {
            0
        } else {
            self.e[(i - 1) as usize]
        }
    }

    pub fn sum_e(&self) -> u64 {
        self.e.iter().sum()
    }

    /// `e_i + e_j >= e_{i+j}` when `i+j < m`, `e_i + e_j >= e_{i+j-m} - 1`
    /// when `i+j > m`. Returns the first failing pair.
    pub fn subadditivity_violation(&self) -> Option<(u64, u64)> {
        let m = self.modulus;
        for i in 1..m {
            for j in i..m {
                let lhs = (self.e_at(i) + self.e_at(j)) as i64;
                let ok = match (i + j).cmp(&m) {
                    std::cmp::Ordering::Less => lhs >= self.e_at(i + j) as i64,
                    std::cmp::Ordering::Greater => lhs >= self.e_at(i + j - m) as i64 - 1,
                    std::cmp::Ordering::Equal => true,
                };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

pub fn apery_profile(h: &NumericalSemigroup, m: u64) -> Result<AperyProfile> {
    AperyProfile::new(h, m)
}
