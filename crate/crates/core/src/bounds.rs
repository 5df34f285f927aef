//! Closed-form genus bounds and the arithmetic hypotheses that accompany them.
//!
//! All values are exact integers. Functions that only make sense on part of
//! their domain return [`Error::PreconditionViolated`] outside it instead of
//! clamping.

use serde::Serialize;

use crate::arith::{ceil_div, gcd};
use crate::error::{precondition, Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `ρ₁(A,N,γ) = A(N−1)N/2 + Nγ − N + 1`.
pub fn rho1(a: i64, n: i64, gamma: i64) -> i64 {
    // N(N-1) is even, so the halving is exact
    a * (n * (n - 1) / 2) + n * gamma - n + 1
}

/// `ρ₂(N,γ) = N(2N−1)γ − (N−1)(N+2)`.
pub fn rho2(n: i64, gamma: i64) -> i64 {
    n * (2 * n - 1) * gamma - (n - 1) * (n + 2)
}

/// `ρ₃(N,γ) = (2N−1)(Nγ + N − 1)`.
pub fn rho3(n: i64, gamma: i64) -> i64 {
    (2 * n - 1) * (n * gamma + n - 1)
}

/// `ρ₄(A,u,N,γ) = (N−u−1)[(A−γ−1)(N+u) − 2(Nγ+N−1)]/2 + ρ₃(N,γ)`.
///
/// The halved product is checked for parity rather than floored.
pub fn rho4(a: i64, u: i64, n: i64, gamma: i64) -> Result<i64> {
    let num = (n - u - 1) * ((a - gamma - 1) * (n + u) - 2 * (n * gamma + n - 1));
    if num % 2 != 0 {
        return Err(Error::NonIntegerRho4(num));
    }
    Ok(num / 2 + rho3(n, gamma))
}

/// `ρ₅(N,γ) = 2Nγ + (N−1)²`.
pub fn rho5(n: i64, gamma: i64) -> i64 {
    2 * n * gamma + (n - 1) * (n - 1)
}

/// Castelnuovo's number for a nondegenerate degree-`d` curve in `P^r`.
pub fn castelnuovo_c(d: i64, r: i64) -> Result<i64> {
    if r < 2 {
        return Err(precondition(format!("castelnuovo_c needs r >= 2, got {r}")));
    }
    if d < 1 {
        return Err(precondition(format!("castelnuovo_c needs d >= 1, got {d}")));
    }
    let m = (d - 1) / (r - 1);
    let eps = d - 1 - m * (r - 1);
    Ok(m * (m - 1) / 2 * (r - 1) + m * eps)
}

/// Genus bound for a field that is the compositum of two subfields of
/// degrees `n1`, `n2` and genera `g1`, `g2`.
pub fn compositum_bound(n1: i64, g1: i64, n2: i64, g2: i64) -> i64 {
    (n1 - 1) * (n2 - 1) + n1 * g1 + n2 * g2
}

/// Least integer `≥ (2g − 2Nγ_N)/(N−1) + 1`; no element coprime to `N` lies
/// below it. The statement is re-checked on every coprime element up to
/// `conductor + N`, and a failure is reported as [`Error::Contradiction`].
pub fn coprime_lower_bound(h: &NumericalSemigroup, n: u64) -> Result<i64> {
    if n < 2 {
        return Err(precondition(format!("coprime_lower_bound needs N >= 2, got {n}")));
    }
    let g = h.genus() as i64;
    let gn = h.gamma_n(n) as i64;
    let ni = n as i64;
    let bound = ceil_div(2 * g - 2 * ni * gn, ni - 1) + 1;
    let limit = h.conductor() + n;
    if let Some(x) = (1..=limit).find(|&x| h.contains(x) && gcd(x, n) == 1 && (x as i64) < bound) {
        return Err(Error::Contradiction(format!(
            "element {x} of {h} is coprime to {n} but below {bound}"
        )));
    }
    Ok(bound)
}

/// `floor((m−1)(n−1)/2)` for coprime `0 < m < n`.
pub fn jenkins_bound(m: u64, n: u64) -> Result<i64> {
    if m == 0 || m >= n {
        return Err(precondition(format!("jenkins_bound needs 0 < m < n, got ({m}, {n})")));
    }
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    Ok(((m - 1) * (n - 1) / 2) as i64)
}

/// Whether `genus(h) <= jenkins_bound(m, n)` for non-gaps `m`, `n` of `h`.
pub fn jenkins_holds(h: &NumericalSemigroup, m: u64, n: u64) -> Result<bool> {
    let bound = jenkins_bound(m, n)?;
    if !h.contains(m) || !h.contains(n) {
        return Err(precondition(format!("{m} and {n} must both be elements of {h}")));
    }
    Ok(h.genus() as i64 <= bound)
}

/// `u(A) = floor((Nγ + N − 1)/(A − γ − 1))`.
pub fn u_of_a(a: i64, n: i64, gamma: i64) -> Result<i64> {
    let den = a - gamma - 1;
    if den == 0 {
        return Err(Error::DegenerateDenominator);
    }
    if den < 0 {
        return Err(precondition(format!("u(A) needs A >= γ + 2, got A={a}, γ={gamma}")));
    }
    Ok((n * gamma + n - 1).div_euclid(den))
}

/// `A ≢ 0 (mod t)` for every `2 <= t <= AN/(A−γ)` with `t ≠ N`.
pub fn hypothesis5(a: i64, n: i64, gamma: i64) -> Result<bool> {
    if a - gamma <= 0 {
        return Err(precondition(format!("hypothesis5 needs A > γ, got A={a}, γ={gamma}")));
    }
    let top = (a * n).div_euclid(a - gamma);
    Ok((2..=top).filter(|&t| t != n).all(|t| a % t != 0))
}

/// Strict inequality `(N−1)h < g − Nγ + N − 1`.
pub fn total_ramification_threshold(h: i64, n: i64, gamma: i64, g: i64) -> bool {
    (n - 1) * h < g - n * gamma + n - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    Rho1,
    Rho2,
    Rho3,
    Rho4,
    Rho5,
    CastelnuovoC,
    Compositum,
    CoprimeLower,
    Jenkins,
}

impl BoundName {
    pub const ALL: [BoundName; 9] = [
        BoundName::Rho1,
        BoundName::Rho2,
        BoundName::Rho3,
        BoundName::Rho4,
        BoundName::Rho5,
        BoundName::CastelnuovoC,
        BoundName::Compositum,
        BoundName::CoprimeLower,
        BoundName::Jenkins,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Rho1 => "rho1",
            BoundName::Rho2 => "rho2",
            BoundName::Rho3 => "rho3",
            BoundName::Rho4 => "rho4",
            BoundName::Rho5 => "rho5",
            BoundName::CastelnuovoC => "castelnuovo_c",
            BoundName::Compositum => "compositum",
            BoundName::CoprimeLower => "coprime_lower",
            BoundName::Jenkins => "jenkins",
        }
    }

    fn arity(self) -> usize {
        match self {
            BoundName::Rho1 => 3,
            BoundName::Rho2 | BoundName::Rho3 | BoundName::Rho5 => 2,
            BoundName::Rho4 | BoundName::Compositum => 4,
            BoundName::CastelnuovoC | BoundName::Jenkins => 2,
            BoundName::CoprimeLower => 1,
        }
    }
}

impl std::str::FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bound {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: BoundName,
    pub arguments: Vec<i64>,
    pub value: i64,
    pub hypothesis_met: Option<bool>,
}

impl BoundReport {
    /// Evaluates a named bound. `coprime_lower` takes `[N]` plus the semigroup;
    /// the others ignore `semigroup`.
    pub fn evaluate(
        name: BoundName,
        args: &[i64],
        semigroup: Option<&NumericalSemigroup>,
    ) -> Result<BoundReport> {
        if args.len() != name.arity() {
            return Err(precondition(format!(
                "{} takes {} arguments, got {}",
                name.as_str(),
                name.arity(),
                args.len()
            )));
        }
        let nonneg = |x: i64| -> Result<u64> {
            u64::try_from(x).map_err(|_| precondition(format!("argument {x} must be nonnegative")))
        };
        let mut hypothesis_met = None;
        let value = match name {
            BoundName::Rho1 => rho1(args[0], args[1], args[2]),
            BoundName::Rho2 => rho2(args[0], args[1]),
            BoundName::Rho3 => rho3(args[0], args[1]),
            BoundName::Rho4 => rho4(args[0], args[1], args[2], args[3])?,
            BoundName::Rho5 => rho5(args[0], args[1]),
            BoundName::CastelnuovoC => castelnuovo_c(args[0], args[1])?,
            BoundName::Compositum => compositum_bound(args[0], args[1], args[2], args[3]),
            BoundName::Jenkins => {
                let (m, n) = (nonneg(args[0])?, nonneg(args[1])?);
                if let Some(h) = semigroup {
                    hypothesis_met = Some(jenkins_holds(h, m, n)?);
                }
                jenkins_bound(m, n)?
            }
            BoundName::CoprimeLower => {
                let h = semigroup
                    .ok_or_else(|| precondition("coprime_lower needs a semigroup"))?;
                let v = coprime_lower_bound(h, nonneg(args[0])?)?;
                hypothesis_met = Some(true);
                v
            }
        };
        Ok(BoundReport {
            name,
            arguments: args.to_vec(),
            value,
            hypothesis_met,
        })
    }
}
