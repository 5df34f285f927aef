//! Explicit constructions, each returned with the properties it is supposed
//! to have and whether they were observed.
//!
//! A constructor that produces a semigroup violating one of its claims fails
//! with [`Error::ClaimFailed`]; a [`FamilyResult`] therefore always has every
//! claim holding. Facts that are reported but not promised go to
//! `diagnostics`.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

use crate::arith::{gcd, is_prime};
use crate::bounds::{coprime_lower_bound, hypothesis5, jenkins_bound, rho1, rho3};
use crate::classify::{project_by_n, type_verdict};
use crate::error::{precondition, Error, Result};
use crate::obstruction::{gap_sum_profile, lemma_4_1_1, Lemma411Verdict};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "buchweitz_gen")]
    BuchweitzGen,
    #[serde(rename = "cover_h1")]
    CoverH1,
    #[serde(rename = "cover_h2")]
    CoverH2,
    #[serde(rename = "superelliptic_i")]
    SuperellipticI,
    #[serde(rename = "superelliptic_ii")]
    SuperellipticII,
    #[serde(rename = "superelliptic_iii")]
    SuperellipticIII,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyResult {
    pub semigroup: NumericalSemigroup,
    pub family: Family,
    pub params: BTreeMap<String, i64>,
    pub claims: Vec<Claim>,
    pub diagnostics: BTreeMap<String, String>,
}

struct Builder {
    family: Family,
    params: BTreeMap<String, i64>,
    claims: Vec<Claim>,
    diagnostics: BTreeMap<String, String>,
}

impl Builder {
    fn new(family: Family, params: &[(&str, i64)]) -> Self {
        Builder {
            family,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            claims: Vec::new(),
            diagnostics: BTreeMap::new(),
        }
    }

    fn claim<T: PartialEq + Display>(&mut self, name: &str, expected: T, observed: T) {
        self.claims.push(Claim {
            name: name.to_string(),
            holds: expected == observed,
            expected: expected.to_string(),
            observed: observed.to_string(),
        });
    }

    fn note(&mut self, name: &str, value: impl Display) {
        self.diagnostics.insert(name.to_string(), value.to_string());
    }

    fn finish(self, semigroup: NumericalSemigroup) -> Result<FamilyResult> {
        let failed: Vec<String> = self
            .claims
            .iter()
            .filter(|c| !c.holds)
            .map(|c| format!("{} (expected {}, observed {})", c.name, c.expected, c.observed))
            .collect();
        if !failed.is_empty() {
            return Err(Error::ClaimFailed(format!("{semigroup}: {}", failed.join("; "))));
        }
        Ok(FamilyResult {
            semigroup,
            family: self.family,
            params: self.params,
            claims: self.claims,
            diagnostics: self.diagnostics,
        })
    }
}

fn require_prime(n: u64) -> Result<()> {
    if is_prime(n) {
        Ok(())
    } else {
        Err(Error::NotPrime(n))
    }
}

/// Gaps `{1..g−i} ∪ {h₁ − (a+2k) : k = 0..i−3} ∪ {h₁, 2g−2i+1}` with
/// `2h₁ = 3g + 2a + i − 10`. `a` defaults to `2i − 5`.
pub fn buchweitz_family(g: u64, i: u64, a: Option<u64>) -> Result<FamilyResult> {
    if i < 4 {
        return Err(Error::RangeViolation(format!("i = {i} must be at least 4")));
    }
    let a = a.unwrap_or(2 * i - 5);
    let twice_h1 = 3 * g + 2 * a + i - 10;
    if twice_h1 % 2 != 0 {
        return Err(Error::ParityViolation(format!("3g + 2a + i - 10 = {twice_h1} is odd")));
    }
    if a + 6 <= 2 * i {
        return Err(Error::RangeViolation(format!("a = {a} must exceed 2i - 6 = {}", 2 * i - 6)));
    }
    if g + 10 < 2 * a + 5 * i {
        return Err(Error::RangeViolation(format!(
            "g = {g} must be at least 2a - 10 + 5i = {}",
            2 * a + 5 * i - 10
        )));
    }
    let h1 = twice_h1 / 2;
    let mut gaps: Vec<u64> = (1..=g - i).collect();
    gaps.extend((0..=i - 3).map(|k| h1 - (a + 2 * k)));
    gaps.push(h1);
    gaps.push(2 * g - 2 * i + 1);
    gaps.sort_unstable();
    gaps.dedup();
    let h = NumericalSemigroup::from_gaps(gaps)?;

    let mut b = Builder::new(
        Family::BuchweitzGen,
        &[("g", g as i64), ("i", i as i64), ("a", a as i64), ("h1", h1 as i64)],
    );
    b.claim("genus", g, h.genus());
    b.claim("frobenius", 2 * g as i64 - 2 * i as i64 + 1, h.frobenius());
    let verdict = lemma_4_1_1(&h).map(|r| r.verdict);
    b.claim(
        "lemma_4_1_1",
        "not_weierstrass".to_string(),
        match &verdict {
            Ok(Lemma411Verdict::NotWeierstrass) => "not_weierstrass".to_string(),
            Ok(Lemma411Verdict::Inconclusive) => "inconclusive".to_string(),
            Err(e) => e.name().to_string(),
        },
    );
    if h.genus() >= 2 {
        let p = gap_sum_profile(&h, 2)?;
        b.note("g2_cardinality", p.cardinality);
        b.note("bc_bound", p.bc_bound);
        b.note("passes_bc", p.passes_bc);
        if let Some(l) = p.lambda {
            b.note("lambda", l);
        }
    }
    b.finish(h)
}

/// The `N`-fold cover family over `h̃` of genus `γ`:
/// `H₁ = NH̃ ∪ {2g−f−r : r <= g−1, r ∉ NH̃}`, and `H₂ = H₁ \ {⌊(2g−f)/2⌋}`
/// when `N <= 2u <= f + N` where `g = λN + u`.
pub fn cover_family(htilde: &NumericalSemigroup, n: u64, g: u64, f: u64) -> Result<FamilyResult> {
    require_prime(n)?;
    let gamma = htilde.genus();
    let r3 = rho3(n as i64, gamma as i64);
    if g as i64 <= r3 {
        return Err(precondition(format!("g = {g} must exceed rho3({n}, {gamma}) = {r3}")));
    }
    let (lambda, u) = (g / n, g % n);
    if u > 0 && f > u {
        return Err(precondition(format!("f = {f} must be at most u = {u}")));
    }
    if u == 0 && f >= n {
        return Err(precondition(format!("f = {f} must be below N = {n} when u = 0")));
    }
    if (2 * g).checked_sub(f).is_none_or(|x| x % n == 0) {
        return Err(precondition(format!("2g - f = {} must not be divisible by N = {n}", 2 * g - f)));
    }
    if f == 0 {
        return Err(precondition("f must be positive"));
    }

    let top = 2 * g - f;
    let in_nh = |x: i64| x >= 0 && x as u64 % n == 0 && htilde.contains(x as u64 / n);
    let in_h1 = |x: u64| x > top || in_nh(x as i64) || (x + g > top && !in_nh(top as i64 - x as i64));
    let second = n <= 2 * u && 2 * u <= f + n;
    let e = top / 2;
    let gaps: Vec<u64> = (1..=top)
        .filter(|&x| !in_h1(x) || (second && x == e))
        .collect();
    let h = NumericalSemigroup::from_gaps(gaps)?;

    let family = if second { Family::CoverH2 } else { Family::CoverH1 };
    let mut b = Builder::new(
        family,
        &[
            ("N", n as i64),
            ("g", g as i64),
            ("f", f as i64),
            ("gamma", gamma as i64),
            ("lambda", lambda as i64),
            ("u", u as i64),
        ],
    );
    if second {
        b.note("removed", e);
    }
    b.note("htilde", htilde);
    b.claim("genus", g, h.genus());
    b.claim("frobenius", top as i64, h.frobenius());
    b.claim("is_type", true, type_verdict(&h, n, gamma).is_type);
    let projected = project_by_n(&h, n, gamma)
        .map(|p| p.to_string())
        .unwrap_or_else(|e| e.name().to_string());
    b.claim("projection", htilde.to_string(), projected);

    // U and V are counted on H₁ whichever branch is built
    let big_u = (1..=2 * g).filter(|&x| in_h1(x) && (x == 2 * g || x % n == 0)).count() as i64;
    let big_v = (1..2 * g).filter(|&x| in_h1(x) && x % n != 0).count() as i64;
    let (l, gm, gi) = (lambda as i64, gamma as i64, g as i64);
    let u_table = if u == 0 {
        Some(2 * l - gm)
    } else if 2 * u < n {
        Some(2 * l + 1 - gm)
    } else if 2 * u > n {
        Some(2 * l + 2 - gm)
    } else {
        None
    };
    let v_table = if u == 0 {
        gi - 1 - (l - 1 - gm) - l
    } else if (2 * u) < f + n {
        gi - 1 - (l - gm) - l
    } else {
        gi - 1 - (l - gm) - (l + 1)
    };
    b.note("U", big_u);
    b.note("V", big_v);
    match u_table {
        Some(t) => b.claim("U", t, big_u),
        None => b.claim("U", "defined".to_string(), "2u = N".to_string()),
    }
    b.claim("V", v_table, big_v);
    b.claim("U+V", gi + second as i64, big_u + big_v);
    b.finish(h)
}

/// `⟨2N, L, (2γ+1)N⟩` with `L = (2g − 2γN)/(N−1) + 1`.
pub fn superelliptic_i(n: u64, gamma: u64, g: u64) -> Result<FamilyResult> {
    require_prime(n)?;
    let (ni, gm, gi) = (n as i64, gamma as i64, g as i64);
    let excess = gi - ni * gm;
    if excess < 0 || excess % (ni - 1) != 0 {
        return Err(precondition(format!("g - Nγ = {excess} must be a nonnegative multiple of N - 1")));
    }
    let l = (2 * excess / (ni - 1) + 1) as u64;
    if gcd(l, 2 * n) != 1 {
        return Err(precondition(format!("L = {l} is not coprime to 2N = {}", 2 * n)));
    }
    let i2 = (gi - (2 * ni - 1) * gm) / (ni - 1);
    if i2 < 1 {
        return Err(precondition(format!("i2 = {i2} must be at least 1")));
    }
    let h = NumericalSemigroup::from_generators(&[2 * n, l, (2 * gamma + 1) * n])?;

    let mut b = Builder::new(
        Family::SuperellipticI,
        &[("N", ni), ("gamma", gm), ("g", gi), ("L", l as i64), ("i2", i2)],
    );
    b.claim("genus", g, h.genus());
    let least_coprime = h.elements().find(|&x| gcd(x, n) == 1).expect("cofinite");
    b.claim("coprime_lower_bound", coprime_lower_bound(&h, n)?, least_coprime as i64);
    b.claim("coprime_lower_bound_at_L", l, least_coprime);
    b.note("gamma_N", h.gamma_n(n));

    // g = rho1(A, N, γ) solved for A
    let step = ni * (ni - 1) / 2;
    let rest = gi - ni * gm + ni - 1;
    if rest % step == 0 && rest / step >= 2 * gm {
        let a = rest / step;
        debug_assert_eq!(rho1(a, ni, gm), gi);
        b.params.insert("A".to_string(), a);
        b.claim("L", a * ni - 1, l as i64);
        let m = h.element_at((a - gm) as u64);
        b.claim("m_(A-gamma)<=AN-1", true, m as i64 <= a * ni - 1);
    }
    b.finish(h)
}

/// `⟨2N, 2Nγ + 2N − 1⟩`, of genus `ρ₃(N,γ)`.
pub fn superelliptic_ii(n: u64, gamma: u64) -> Result<FamilyResult> {
    require_prime(n)?;
    let i1 = 2 * n * gamma + 2 * n - 1;
    let h = NumericalSemigroup::from_generators(&[2 * n, i1])?;
    let (ni, gm) = (n as i64, gamma as i64);
    let mut b = Builder::new(Family::SuperellipticII, &[("N", ni), ("gamma", gm), ("i1", i1 as i64)]);
    b.claim("genus", rho3(ni, gm), h.genus() as i64);
    b.claim("jenkins_equality", jenkins_bound(2 * n, i1)?, h.genus() as i64);
    b.claim("is_type", false, type_verdict(&h, n, gamma).is_type);

    // m_{A−γ} = AN over 2γ <= A < 4γ + 4 − 2/N
    let (mut holds, mut fails) = (Vec::new(), Vec::new());
    let mut a = 2 * gamma;
    while a * n + 2 < (4 * gamma + 4) * n {
        if h.element_at(a - gamma) == a * n {
            holds.push(a);
        } else {
            fails.push(a);
        }
        a += 1;
    }
    b.note("m_(A-gamma)=AN holds for A", format!("{holds:?}"));
    b.note("m_(A-gamma)=AN fails for A", format!("{fails:?}"));
    b.finish(h)
}

/// `⟨rt, i₁⟩` with `r = AN/t − A + γ + 1` and `i₁ = 2g/(rt − 1) + 1`.
pub fn superelliptic_iii(n: u64, gamma: u64, a: u64, t: u64, g: u64) -> Result<FamilyResult> {
    require_prime(n)?;
    if a < 2 * gamma + 1 {
        return Err(precondition(format!("A = {a} must be at least 2γ + 1 = {}", 2 * gamma + 1)));
    }
    if t < 2 || t > 2 * n - 1 || t == n {
        return Err(precondition(format!("t = {t} must lie in [2, 2N-1] and differ from N = {n}")));
    }
    if a % t != 0 {
        return Err(precondition(format!("t = {t} must divide A = {a}")));
    }
    let (ai, ni, gm, gi) = (a as i64, n as i64, gamma as i64, g as i64);
    let first = ai * ni * (ai * (ni - 2) + 2 * gm + 3);
    let second = ai * (ni - 1) * (ni - 2) + (3 * ni - 2) * gm + 3 * (ni - 1);
    if 2 * gi <= first || gi <= second {
        return Err(precondition(format!(
            "g = {g} must satisfy 2g > {first} and g > {second}"
        )));
    }
    let r = a * n / t + gamma + 1 - a;
    let rt = r * t;
    if rt < 2 || (2 * g) % (rt - 1) != 0 {
        return Err(precondition(format!("rt - 1 = {} must divide 2g = {}", rt.saturating_sub(1), 2 * g)));
    }
    let i1 = 2 * g / (rt - 1) + 1;
    if gcd(rt, i1) != 1 {
        return Err(precondition(format!("rt = {rt} and i1 = {i1} are not coprime")));
    }
    let h = NumericalSemigroup::from_generators(&[rt, i1])?;

    let mut b = Builder::new(
        Family::SuperellipticIII,
        &[
            ("N", ni),
            ("gamma", gm),
            ("A", ai),
            ("t", t as i64),
            ("g", gi),
            ("r", r as i64),
            ("i1", i1 as i64),
        ],
    );
    b.claim("genus", g, h.genus());
    b.claim("m_(A-gamma)", a * n, h.element_at(a - gamma));
    b.claim("hypothesis5", false, hypothesis5(ai, ni, gm)?);
    b.claim("is_type", false, type_verdict(&h, n, gamma).is_type);
    b.finish(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    fn buchweitz() -> NumericalSemigroup {
        sg("gaps:1,2,3,4,5,6,7,8,9,10,11,12,19,21,24,25")
    }

    #[test]
    fn buchweitz_examples() {
        let r = buchweitz_family(16, 4, None).unwrap();
        assert_eq!(r.semigroup, buchweitz());
        assert_eq!(r.family, Family::BuchweitzGen);
        assert!(r.claims.iter().all(|c| c.holds));
        assert_eq!(r.diagnostics["passes_bc"], "false");

        let r = buchweitz_family(18, 4, None).unwrap();
        assert_eq!(r.params["h1"], 27);
        assert_eq!(r.semigroup, sg("gaps:1,2,3,4,5,6,7,8,9,10,11,12,13,14,22,24,27,29"));
        // lemma verdict holds, yet #G_2 meets the bound exactly
        assert_eq!(r.diagnostics["passes_bc"], "true");
        assert_eq!(r.diagnostics["lambda"], "5");

        assert!(matches!(buchweitz_family(15, 4, None), Err(Error::ParityViolation(_))));
        assert!(matches!(buchweitz_family(16, 3, None), Err(Error::RangeViolation(_))));
        assert!(matches!(buchweitz_family(14, 4, None), Err(Error::RangeViolation(_))));
    }

    #[test]
    fn cover_examples() {
        let r = cover_family(&buchweitz(), 2, 100, 1).unwrap();
        assert_eq!(r.family, Family::CoverH1);
        assert_eq!(r.semigroup.genus(), 100);
        assert_eq!(r.semigroup.frobenius(), 199);

        let r = cover_family(&sg("gens:2,3"), 2, 20, 1).unwrap();
        assert_eq!(r.family, Family::CoverH1);
        assert_eq!(project_by_n(&r.semigroup, 2, 1), Ok(sg("gens:2,3")));

        let r = cover_family(&sg("gens:2,3"), 3, 26, 2).unwrap();
        assert_eq!(r.family, Family::CoverH2);
        assert_eq!(r.semigroup.frobenius(), 50);

        assert!(matches!(cover_family(&buchweitz(), 2, 100, 0), Err(Error::PreconditionViolated(_))));
        assert!(matches!(cover_family(&sg("gens:2,3"), 4, 100, 1), Err(Error::NotPrime(4))));
        assert!(cover_family(&sg("gens:2,3"), 2, 9, 1).is_err());
    }

    #[test]
    fn superelliptic_i_examples() {
        let r = superelliptic_i(2, 1, 10).unwrap();
        assert_eq!(r.semigroup, sg("gens:4,6,17"));
        assert_eq!(r.params["L"], 17);

        let r = superelliptic_i(2, 0, 5).unwrap();
        assert_eq!(r.semigroup, sg("gens:2,11"));

        let r = superelliptic_i(2, 1, 5).unwrap();
        assert_eq!((r.params["L"], r.params["A"]), (7, 4));

        assert!(superelliptic_i(3, 1, 4).is_err());
    }

    #[test]
    fn superelliptic_ii_examples() {
        let r = superelliptic_ii(2, 1).unwrap();
        assert_eq!(r.semigroup, sg("gens:4,7"));
        assert_eq!(r.semigroup.genus(), 9);
        assert!(r.diagnostics["m_(A-gamma)=AN holds for A"].contains('4'));

        let r = superelliptic_ii(3, 1).unwrap();
        assert_eq!(r.semigroup, sg("gens:6,11"));
        assert_eq!(r.semigroup.genus(), 25);
    }

    #[test]
    fn superelliptic_iii_examples() {
        let r = superelliptic_iii(2, 1, 3, 3, 16).unwrap();
        assert_eq!(r.semigroup, sg("gens:3,17"));
        assert_eq!((r.params["r"], r.params["i1"]), (1, 17));

        assert!(matches!(superelliptic_iii(2, 1, 3, 3, 15), Err(Error::PreconditionViolated(_))));
        assert!(matches!(superelliptic_iii(2, 1, 4, 2, 40), Err(Error::PreconditionViolated(_))));
    }
}
