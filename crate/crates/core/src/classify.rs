//! Type-(N, γ) classification, symmetry data and the projection to the
//! quotient semigroup.
//!
//! `H` is of type `(N, γ)` when
//!
//! * (a) exactly `γ` of the multiples `N, 2N, …, 2γN` lie in `H`,
//! * (b) `m_γ = 2Nγ`,
//! * (c) `(2γ+1)N ∈ H`.
//!
//! At `γ = 0`, (a) and (b) are vacuous and the type reduces to `N ∈ H`.

use serde::Serialize;

use crate::arith::{gcd_all, is_prime};
use crate::bounds::{hypothesis5, rho1, rho3};
use crate::error::{precondition, Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeVerdict {
    #[serde(rename = "N")]
    pub n: u64,
    pub gamma: u64,
    pub cond_a: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub is_type: bool,
    #[serde(rename = "gamma_N")]
    pub gamma_n: u64,
}

/// Evaluates the three conditions independently.
pub fn type_verdict(h: &NumericalSemigroup, n: u64, gamma: u64) -> TypeVerdict {
    assert!(n >= 1, "N must be positive");
    let multiples = (1..=2 * gamma).filter(|&k| h.contains(k * n)).count() as u64;
    let cond_a = multiples == gamma;
    let cond_b = h.element_at(gamma) == 2 * n * gamma;
    let cond_c = h.contains((2 * gamma + 1) * n);
    TypeVerdict {
        n,
        gamma,
        cond_a,
        cond_b,
        cond_c,
        is_type: cond_a && cond_b && cond_c,
        gamma_n: h.gamma_n(n),
    }
}

/// Checks `(2γ+i)N ∈ H` for all `i ≥ 1`, `2Nγ ∈ H` and `γ = γ_N(H)`.
/// Requires (a) and (c).
pub fn tail_structure(h: &NumericalSemigroup, n: u64, gamma: u64) -> Result<bool> {
    let v = type_verdict(h, n, gamma);
    if !(v.cond_a && v.cond_c) {
        return Err(precondition(format!(
            "tail_structure needs conditions (a) and (c) for ({n}, {gamma})"
        )));
    }
    let c = h.conductor();
    let tail = (2 * gamma + 1..)
        .map(|k| k * n)
        .take_while(|&x| x <= c)
        .all(|x| h.contains(x));
    Ok(tail && h.contains(2 * n * gamma) && v.gamma_n == gamma)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GammaFit {
    pub gamma_n: u64,
    pub cond_a: bool,
    pub cond_c: bool,
    pub two_n_gamma_in_h: bool,
}

/// `γ_N` together with conditions (a), (c) and `2Nγ_N ∈ H` at that `γ`.
/// All three flags are true for every semigroup.
pub fn natural_gamma_fit(h: &NumericalSemigroup, n: u64) -> GammaFit {
    let gamma = h.gamma_n(n);
    let v = type_verdict(h, n, gamma);
    GammaFit {
        gamma_n: gamma,
        cond_a: v.cond_a,
        cond_c: v.cond_c,
        two_n_gamma_in_h: h.contains(2 * n * gamma),
    }
}

/// `2(γ+r)M > (2γ+r)N`: no semigroup is of both type `(N,γ)` and `(M,γ+r)`.
pub fn exclusive_types(n: u64, gamma: u64, m: u64, r: u64) -> Result<bool> {
    if r == 0 {
        return Err(precondition("exclusive_types needs r >= 1"));
    }
    Ok(2 * (gamma + r) * m > (2 * gamma + r) * n)
}

/// Whether every element not divisible by `N` is at least `2Nγ_N + 1`.
/// When it is, `H` must be of type `(N, γ_N)`; a failure of that is a
/// [`Error::Contradiction`].
pub fn is_type_by_tail(h: &NumericalSemigroup, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(precondition("N must be positive"));
    }
    let gamma = h.gamma_n(n);
    let floor = 2 * n * gamma + 1;
    let limit = h.conductor() + n;
    let hyp = (1..=limit).all(|x| !h.contains(x) || x % n == 0 || x >= floor);
    if hyp {
        assert_type(h, n, gamma)?;
    }
    Ok(hyp)
}

/// Whether `g > N²γ_N − N + 1`; when it holds, the type `(N, γ_N)` is
/// asserted.
pub fn is_type_by_genus(h: &NumericalSemigroup, n: u64) -> Result<bool> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let gamma = h.gamma_n(n);
    let hyp = h.genus() as i64 > rho1(2 * gamma as i64, n as i64, gamma as i64);
    if hyp {
        assert_type(h, n, gamma)?;
    }
    Ok(hyp)
}

fn assert_type(h: &NumericalSemigroup, n: u64, gamma: u64) -> Result<()> {
    if type_verdict(h, n, gamma).is_type {
        Ok(())
    } else {
        Err(Error::Contradiction(format!("{h} is not of type ({n}, {gamma})")))
    }
}

/// `gcd(m_1, …, m_{A−γ})` with `γ = γ_N`, asserted to equal `N`.
pub fn leading_gcd(h: &NumericalSemigroup, n: u64, a: u64) -> Result<u64> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let gamma = h.gamma_n(n);
    if !type_verdict(h, n, gamma).is_type {
        return Err(precondition(format!("{h} is not of type ({n}, {gamma})")));
    }
    if a < gamma + 1 {
        return Err(precondition(format!("A = {a} must be at least γ + 1 = {}", gamma + 1)));
    }
    let bound = rho1(a as i64, n as i64, gamma as i64);
    if h.genus() as i64 <= bound {
        return Err(precondition(format!("genus {} must exceed {bound}", h.genus())));
    }
    let d = gcd_all((1..=a - gamma).map(|i| h.element_at(i)));
    if d != n {
        return Err(Error::Contradiction(format!(
            "gcd(m_1..m_{}) = {d}, expected {n} for {h}",
            a - gamma
        )));
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryKind {
    Symmetric,
    QuasiSymmetric,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryProfile {
    pub kind: SymmetryKind,
    pub i: u64,
    /// Gaps strictly between `g − i` and the Frobenius number, descending.
    pub exceptional_gaps: Vec<u64>,
    /// `g − i`, present only when the Frobenius number is even.
    pub middle_gap: Option<u64>,
    /// Set when `exceptional_gaps` does not have exactly `i − 1` entries.
    pub irregular: bool,
    /// Every `r` in `0..=ℓ` such that both `r` and `ℓ − r` are gaps.
    pub s1_exceptions: Vec<u64>,
}

pub fn symmetry_profile(h: &NumericalSemigroup) -> Result<SymmetryProfile> {
    let g = h.genus();
    if g == 0 {
        return Err(Error::GenusZero);
    }
    let l = h.frobenius() as u64;
    let i = if l % 2 == 1 { (2 * g + 1 - l) / 2 } else { (2 * g - l) / 2 };
    let kind = match 2 * g - l {
        1 => SymmetryKind::Symmetric,
        2 => SymmetryKind::QuasiSymmetric,
        _ => SymmetryKind::General,
    };
    let mut exceptional_gaps: Vec<u64> = h.gaps().filter(|&x| x > g - i && x < l).collect();
    exceptional_gaps.reverse();
    let irregular = exceptional_gaps.len() as u64 != i - 1;
    let s1_exceptions: Vec<u64> = (0..=l).filter(|&r| h.is_gap(r) && h.is_gap(l - r)).collect();
    if kind == SymmetryKind::Symmetric && !s1_exceptions.is_empty() {
        return Err(Error::Contradiction(format!("{h} is symmetric but r <-> ℓ - r is not a gap pairing")));
    }
    Ok(SymmetryProfile {
        kind,
        i,
        exceptional_gaps,
        middle_gap: (l % 2 == 0).then_some(g - i),
        irregular,
        s1_exceptions,
    })
}

/// Smallest `A` in `[2γ+2, 2γ+2+⌊γ/(N−1)⌋]` with [`hypothesis5`] and
/// `m_{A−γ} = AN`, if any. Requires `g > ρ₃(N,γ)`.
pub fn arithmetic_cover_witness(h: &NumericalSemigroup, n: u64, gamma: u64) -> Result<Option<u64>> {
    if !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let r3 = rho3(n as i64, gamma as i64);
    if h.genus() as i64 <= r3 {
        return Err(precondition(format!("genus {} must exceed rho3 = {r3}", h.genus())));
    }
    let lo = 2 * gamma + 2;
    let hi = lo + gamma / (n - 1);
    for a in lo..=hi {
        if hypothesis5(a as i64, n as i64, gamma as i64)? && h.element_at(a - gamma) == a * n {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

pub fn arithmetic_cover_criterion(h: &NumericalSemigroup, n: u64, gamma: u64) -> Result<bool> {
    Ok(arithmetic_cover_witness(h, n, gamma)?.is_some())
}

/// `{m_i/N : 1 <= i <= γ} ∪ [2γ, ∞)` for `H` of type `(N, γ)`.
pub fn project_by_n(h: &NumericalSemigroup, n: u64, gamma: u64) -> Result<NumericalSemigroup> {
    if n == 0 || !type_verdict(h, n, gamma).is_type {
        return Err(precondition(format!("{h} is not of type ({n}, {gamma})")));
    }
    let mut head = Vec::with_capacity(gamma as usize);
    for i in 1..=gamma {
        let value = h.element_at(i);
        if value % n != 0 {
            return Err(Error::NonDivisibleElement { index: i, value, n });
        }
        head.push(value / n);
    }
    let gaps = (1..2 * gamma).filter(|x| !head.contains(x));
    let p = NumericalSemigroup::from_gaps(gaps)
        .map_err(|e| Error::Contradiction(format!("projection of {h} is not a semigroup: {e}")))?;
    if p.genus() != gamma {
        return Err(Error::Contradiction(format!(
            "projection of {h} has genus {}, expected {gamma}",
            p.genus()
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    #[test]
    fn verdict_examples() {
        let hyper = sg("gens:2,13");
        assert!(type_verdict(&hyper, 2, 0).is_type);

        let v = type_verdict(&sg("gens:4,6,17"), 2, 1);
        assert!(v.cond_a && v.cond_b && v.cond_c && v.is_type);

        let v = type_verdict(&sg("gens:4,7"), 2, 1);
        assert!(!v.is_type);
        assert!(!v.cond_c);
    }

    #[test]
    fn verdict_json_key_order() {
        let v = type_verdict(&sg("gens:4,6,17"), 2, 1);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"N":2,"gamma":1,"cond_a":true,"cond_b":true,"cond_c":true,"is_type":true,"gamma_N":1}"#
        );
    }

    #[test]
    fn tail_examples() {
        assert_eq!(tail_structure(&sg("gens:4,6,17"), 2, 1), Ok(true));
        assert_eq!(tail_structure(&NumericalSemigroup::naturals(), 3, 0), Ok(true));
        assert_eq!(tail_structure(&sg("gens:2,5"), 2, 0), Ok(true));
        assert!(tail_structure(&sg("gens:4,7"), 2, 1).is_err());
    }

    #[test]
    fn gamma_fit_examples() {
        let f = natural_gamma_fit(&sg("gens:4,7"), 2);
        assert_eq!(f.gamma_n, 3);
        assert!(f.cond_a && f.cond_c && f.two_n_gamma_in_h);
        let f = natural_gamma_fit(&sg("gens:2,3"), 5);
        assert_eq!(f.gamma_n, 0);
        assert!(f.cond_a && f.cond_c && f.two_n_gamma_in_h);
        assert_eq!(natural_gamma_fit(&sg("gens:3,5"), 3).gamma_n, 0);
    }

    #[test]
    fn exclusive_examples() {
        assert_eq!(exclusive_types(2, 1, 2, 1), Ok(true));
        assert_eq!(exclusive_types(100, 0, 1, 1), Ok(false));
        assert!(exclusive_types(2, 1, 2, 0).is_err());
    }

    #[test]
    fn by_tail_and_genus() {
        assert_eq!(is_type_by_tail(&sg("gens:4,6,17"), 2), Ok(true));
        assert_eq!(is_type_by_tail(&sg("gens:4,7"), 2), Ok(false));
        assert_eq!(is_type_by_tail(&NumericalSemigroup::naturals(), 3), Ok(true));

        assert_eq!(is_type_by_genus(&sg("gens:2,21"), 2), Ok(true));
        assert_eq!(is_type_by_genus(&sg("gens:4,6,17"), 2), Ok(true));
        assert_eq!(is_type_by_genus(&sg("gens:4,7"), 2), Ok(false));
        assert_eq!(is_type_by_genus(&sg("gens:4,7"), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn leading_gcd_examples() {
        let h = sg("gens:4,6,17");
        assert_eq!(leading_gcd(&h, 2, 3), Ok(2));
        assert_eq!(leading_gcd(&h, 2, 4), Ok(2));
        for g in 3..10 {
            let hyper = NumericalSemigroup::from_generators(&[2, 2 * g + 1]).unwrap();
            assert_eq!(leading_gcd(&hyper, 2, 2), Ok(2));
        }
        // rho1(10, 2, 1) = 11 exceeds the genus
        assert!(leading_gcd(&h, 2, 10).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let p = symmetry_profile(&sg("gens:2,5")).unwrap();
        assert_eq!(p.kind, SymmetryKind::Symmetric);
        assert_eq!(p.i, 1);
        assert!(p.exceptional_gaps.is_empty());
        assert!(p.s1_exceptions.is_empty());

        let b = sg("gaps:1,2,3,4,5,6,7,8,9,10,11,12,19,21,24,25");
        let p = symmetry_profile(&b).unwrap();
        assert_eq!(p.kind, SymmetryKind::General);
        assert_eq!(p.i, 4);
        assert_eq!(p.exceptional_gaps, vec![24, 21, 19]);
        assert!(!p.irregular);
        assert_eq!(p.middle_gap, None);

        let p = symmetry_profile(&sg("gens:3,4,5")).unwrap();
        assert_eq!(p.kind, SymmetryKind::QuasiSymmetric);
        assert_eq!(p.i, 1);
        assert_eq!(p.middle_gap, Some(1));
        assert_eq!(p.s1_exceptions, vec![1]);

        assert_eq!(symmetry_profile(&NumericalSemigroup::naturals()), Err(Error::GenusZero));
    }

    #[test]
    fn cover_criterion_examples() {
        assert_eq!(arithmetic_cover_witness(&sg("gens:4,6,17"), 2, 1), Ok(Some(4)));
        assert_eq!(arithmetic_cover_witness(&sg("gens:2,21"), 2, 0), Ok(Some(2)));
        assert_eq!(arithmetic_cover_criterion(&sg("gens:3,17"), 2, 1), Ok(false));
        assert!(arithmetic_cover_criterion(&sg("gens:4,7"), 2, 1).is_err());
    }

    #[test]
    fn projection_examples() {
        let p = project_by_n(&sg("gens:4,6,17"), 2, 1).unwrap();
        assert_eq!(p, sg("gens:2,3"));
        assert_eq!(project_by_n(&sg("gens:2,21"), 2, 0), Ok(NumericalSemigroup::naturals()));
        assert!(project_by_n(&sg("gens:4,7"), 2, 1).is_err());
    }
}
