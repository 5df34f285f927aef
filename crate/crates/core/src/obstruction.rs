//! Sums of gaps and the arithmetic obstructions built on them.
//!
//! `G_n` is the set of sums of `n` gaps, repetition allowed. A Weierstrass
//! semigroup of genus `g` satisfies `#G_n <= (2n−1)(g−1)`.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::classify::symmetry_profile;
use crate::error::{precondition, Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `G_n` as a bitset of width `n·ℓ_g + 1`.
pub fn gap_sums(h: &NumericalSemigroup, n: u64) -> BitSet {
    let l = h.frobenius().max(0) as usize;
    let width = n as usize * l + 1;
    let gaps = BitSet::from_indices(width, h.gaps().map(|x| x as usize));
    let mut acc = gaps.clone();
    for _ in 1..n {
        acc = acc.sumset(&gaps, width);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapSumProfile {
    pub n: u64,
    pub sums: Vec<u64>,
    pub cardinality: u64,
    pub bc_bound: u64,
    pub passes_bc: bool,
    /// `#G_2 − (ℓ_g − 1) − g`, only for `n = 2` and `ℓ_g <= 2g − 2`.
    pub lambda: Option<i64>,
}

pub fn gap_sum_profile(h: &NumericalSemigroup, n: u64) -> Result<GapSumProfile> {
    let g = h.genus();
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if n < 2 {
        return Err(precondition(format!("n must be at least 2, got {n}")));
    }
    let sums: Vec<u64> = gap_sums(h, n).iter().map(|x| x as u64).collect();
    let cardinality = sums.len() as u64;
    let bc_bound = (2 * n - 1) * (g - 1);
    let lambda = (n == 2 && h.frobenius() <= 2 * g as i64 - 2).then(|| lambda_of(h, cardinality));
    Ok(GapSumProfile {
        n,
        sums,
        cardinality,
        bc_bound,
        passes_bc: cardinality <= bc_bound,
        lambda,
    })
}

fn lambda_of(h: &NumericalSemigroup, g2: u64) -> i64 {
    g2 as i64 - (h.frobenius() - 1) - h.genus() as i64
}

/// Where `#G_2` departs from `(ℓ_g − 1) + g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaExplanation {
    /// Sums `x > ℓ_g` of two gaps with `x − ℓ_g` not a gap, descending.
    pub extra_sums: Vec<u64>,
    /// Values in `2..=ℓ_g` that are not sums of two gaps.
    pub missing_low: Vec<u64>,
    pub lambda: i64,
}

pub fn explain_lambda(h: &NumericalSemigroup) -> Result<LambdaExplanation> {
    let g = h.genus();
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    let l = h.frobenius() as u64;
    let g2 = gap_sums(h, 2);
    let mut extra_sums: Vec<u64> = g2
        .iter()
        .map(|x| x as u64)
        .filter(|&x| x > l && !h.is_gap(x - l))
        .collect();
    extra_sums.reverse();
    let missing_low = (2..=l).filter(|&x| !g2.contains(x as usize)).collect();
    Ok(LambdaExplanation {
        extra_sums,
        missing_low,
        lambda: lambda_of(h, g2.count() as u64),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjecturedGn {
    pub set: Vec<u64>,
    /// `ℓ_g <= 2g − 2`, the regime in which equality is conjectured.
    pub conjecture_applies: bool,
    pub is_subset_of_actual: bool,
    pub is_equal: bool,
}

/// `{n, …, (n−1)ℓ_g} ∪ {(n−1)ℓ_k + ℓ_j}` compared with the actual `G_n`.
pub fn conjectured_gn(h: &NumericalSemigroup, n: u64) -> Result<ConjecturedGn> {
    if n < 2 {
        return Err(precondition(format!("n must be at least 2, got {n}")));
    }
    let g = h.genus();
    let l = h.frobenius().max(0) as u64;
    let actual = gap_sums(h, n);
    let mut set = BitSet::new(actual.len());
    if g > 0 {
        for x in n..=(n - 1) * l {
            set.insert(x as usize);
        }
    }
    let gaps = h.gap_list();
    for &lk in &gaps {
        for &lj in &gaps {
            set.insert(((n - 1) * lk + lj) as usize);
        }
    }
    Ok(ConjecturedGn {
        conjecture_applies: g > 0 && l + 2 <= 2 * g,
        is_subset_of_actual: set.is_subset(&actual),
        is_equal: set == actual,
        set: set.iter().map(|x| x as u64).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma411Verdict {
    NotWeierstrass,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub u: usize,
    pub v: usize,
    /// `2ℓ_g − h_u − h_v`.
    pub value: u64,
    pub is_gap: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma411Report {
    pub verdict: Lemma411Verdict,
    pub i: u64,
    /// `h_1 > … > h_{i−1}`.
    pub h: Vec<u64>,
    /// `h_1 + h_{i−1} > 2h_2`.
    pub spread: bool,
    pub pairs: Vec<PairCheck>,
    pub lambda: i64,
    pub passes_bc: bool,
    /// False when the verdict is `not_weierstrass` but the direct count
    /// does not show `#G_2` above the bound with `Λ >= 2i − 2`.
    pub consistent: bool,
}

/// The pairwise gap test for `ℓ_g = 2g − 2i + 1`, `i >= 4`.
pub fn lemma_4_1_1(h: &NumericalSemigroup) -> Result<Lemma411Report> {
    let p = symmetry_profile(h)?;
    let l = h.frobenius() as u64;
    if l % 2 == 0 {
        return Err(Error::WrongShape(format!("Frobenius number {l} is even")));
    }
    if p.i < 4 {
        return Err(Error::WrongShape(format!("i = {} is below 4", p.i)));
    }
    if p.irregular {
        return Err(Error::WrongShape(format!(
            "{} gaps in ({}, {l}), expected {}",
            p.exceptional_gaps.len(),
            h.genus() - p.i,
            p.i - 1
        )));
    }
    let hs = &p.exceptional_gaps;
    let k = hs.len();
    let spread = hs[0] + hs[k - 1] > 2 * hs[1];
    let pairs: Vec<PairCheck> = (1..=k)
        .map(|v| (1, v))
        .chain((2..=k).map(|v| (2, v)))
        .map(|(u, v)| {
            let value = 2 * l - hs[u - 1] - hs[v - 1];
            PairCheck {
                u,
                v,
                value,
                is_gap: h.is_gap(value),
            }
        })
        .collect();
    let verdict = if spread && pairs.iter().all(|c| c.is_gap) {
        Lemma411Verdict::NotWeierstrass
    } else {
        Lemma411Verdict::Inconclusive
    };
    let profile = gap_sum_profile(h, 2)?;
    let lambda = lambda_of(h, profile.cardinality);
    let consistent = verdict == Lemma411Verdict::Inconclusive
        || (!profile.passes_bc && lambda >= 2 * p.i as i64 - 2);
    Ok(Lemma411Report {
        verdict,
        i: p.i,
        h: hs.clone(),
        spread,
        pairs,
        lambda,
        passes_bc: profile.passes_bc,
        consistent,
    })
}
