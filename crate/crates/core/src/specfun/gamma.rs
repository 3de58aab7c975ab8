//! Gamma, log-gamma and digamma on the real line.

use crate::dd::Dd;
use crate::error::{domain, Error, Result};
use crate::real::Real;

use super::bernoulli::bernoulli_dd;
use super::{sin_pi, LN_2PI_DD};

/// Stirling series is used once the argument is at least this large.
const STIRLING_MIN: f64 = 25.0;

/// `ln Γ(x)` for `x > 0` in double-double.
pub(crate) fn ln_gamma_dd(x: f64) -> Dd {
    // x + k is formed exactly; accumulating y += 1 would round
    let mut shift = Dd::ONE;
    let mut k = 0.0;
    while x + k < STIRLING_MIN {
        shift *= Dd::sum(x, k);
        k += 1.0;
    }
    let yd = Dd::sum(x, k);
    let ly = yd.ln();
    let mut s = (yd - 0.5) * ly - yd + LN_2PI_DD * 0.5;
    let inv = Dd::ONE / yd;
    let inv2 = inv * inv;
    let mut p = inv;
    for k in 1..=20usize {
        let c = bernoulli_dd(2 * k) / ((2 * k * (2 * k - 1)) as f64);
        let t = c * p;
        s += t;
        if t.hi.abs() < 1e-34 * s.hi.abs().max(1.0) {
            break;
        }
        p *= inv2;
    }
    if shift.hi != 1.0 || shift.lo != 0.0 {
        s -= shift.ln();
    }
    s
}

/// `ψ(x)` for `x > 0` in double-double.
pub(crate) fn digamma_dd(x: f64) -> Dd {
    let mut acc = Dd::ZERO;
    let mut k = 0.0;
    while x + k < STIRLING_MIN {
        acc -= Dd::ONE / Dd::sum(x, k);
        k += 1.0;
    }
    let yd = Dd::sum(x, k);
    let inv = Dd::ONE / yd;
    let inv2 = inv * inv;
    let mut s = yd.ln() - inv * 0.5;
    let mut p = inv2;
    for k in 1..=20usize {
        let t = bernoulli_dd(2 * k) / ((2 * k) as f64) * p;
        s -= t;
        if t.hi.abs() < 1e-34 * s.hi.abs().max(1.0) {
            break;
        }
        p *= inv2;
    }
    s + acc
}

/// `ln Γ(q)` for `q > 0`.
pub fn log_gamma(q: f64) -> Result<Real> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(domain("log_gamma", format!("q = {q} must be positive")));
    }
    let v = ln_gamma_dd(q);
    Ok(Real::from_dd(v, 1e-30 * v.hi.abs().max(1.0)))
}

/// `ψ(q) = d/dq ln Γ(q)` for `q > 0`.
pub fn digamma(q: f64) -> Result<Real> {
    if !(q > 0.0) || !q.is_finite() {
        return Err(domain("digamma", format!("q = {q} must be positive")));
    }
    let v = digamma_dd(q);
    Ok(Real::from_dd(v, 1e-30 * v.hi.abs().max(1.0) + 1e-30 / q))
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// `Γ(x)` for real `x`, using reflection below 1/2.
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            func: "gamma",
            at: x,
        });
    }
    if x >= 0.5 {
        Ok(ln_gamma_dd(x).exp().to_f64())
    } else {
        // Γ(x) Γ(1-x) = π / sin(πx)
        let g1 = ln_gamma_dd(1.0 - x).exp().to_f64();
        Ok(std::f64::consts::PI / (sin_pi(x) * g1))
    }
}

/// `1/Γ(x)`, which is entire; zero at the non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        (-ln_gamma_dd(x)).exp().to_f64()
    } else {
        let g1 = ln_gamma_dd(1.0 - x).exp().to_f64();
        sin_pi(x) * g1 / std::f64::consts::PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EULER: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn classical_values() {
        assert!(log_gamma(1.0).unwrap().value.abs() < 1e-30);
        assert!(log_gamma(2.0).unwrap().value.abs() < 1e-17);
        let half = 0.5 * std::f64::consts::PI.ln();
        assert!((log_gamma(0.5).unwrap().value - half).abs() < 1e-16);
        assert!((digamma(1.0).unwrap().value + EULER).abs() < 1e-16);
        let d_half = -EULER - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(0.5).unwrap().value - d_half).abs() < 1e-15);
        assert!((digamma(2.0).unwrap().value - (1.0 - EULER)).abs() < 1e-16);
    }

    #[test]
    fn reference_values() {
        // ln Γ(0.1), ln Γ(7.3), ψ(0.3), Γ(-1.5) at 30 digits
        let lg01 = 2.252_712_651_734_206;
        let lg73 = 7.147_892_523_022_248;
        let dg03 = -3.502_524_222_200_133;
        assert!((log_gamma(0.1).unwrap().value - lg01).abs() < 4e-16);
        assert!((log_gamma(7.3).unwrap().value - lg73).abs() < 1e-15);
        assert!((digamma(0.3).unwrap().value - dg03).abs() < 1e-15);
        let gm15 = 2.363_271_801_207_355;
        assert!((gamma(-1.5).unwrap() - gm15).abs() < 1e-15);
        assert_eq!(rgamma(0.0), 0.0);
        assert_eq!(rgamma(-3.0), 0.0);
    }

    #[test]
    fn domain_errors() {
        assert!(log_gamma(0.0).is_err());
        assert!(digamma(-1.0).is_err());
        assert!(gamma(-2.0).is_err());
    }

    proptest! {
        #[test]
        fn recurrences(x in 0.01f64..40.0) {
            let a = log_gamma(x + 1.0).unwrap().value;
            let b = log_gamma(x).unwrap().value + x.ln();
            prop_assert!((a - b).abs() < 1e-14 * (1.0 + a.abs()));
            let c = digamma(x + 1.0).unwrap().value;
            let d = digamma(x).unwrap().value + 1.0 / x;
            prop_assert!((c - d).abs() < 1e-14 * (1.0 + c.abs()));
        }
    }
}
