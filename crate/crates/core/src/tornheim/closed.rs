//! Closed forms at integer arguments: Huard's odd-weight reduction,
//! Tornheim's classical evaluations and the fully symmetric sums.

use num::rational::BigRational;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::dd::Dd;
use crate::error::{domain, Error, Result};
use crate::real::{ErrorKind, EvalResult, Method, Real};
use crate::specfun::{bernoulli_rational, binomial_big, factorial_big, rational_to_dd};

use super::{zeta_int_dd, ParamTriple};

/// Which of Tornheim's classical evaluations to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classic {
    /// `T(1,1,a-2) = (a-1)ζ(a) - Σ_{i=2}^{a-2} ζ(i)ζ(a-i)`
    OneOne,
    /// `T(a-2,1,1) = T(1,1,a-2)/2 + ζ(a)`
    TwoOneOne,
    /// `T(1,0,a-1) = T(1,1,a-2)/2`
    OneZero,
    /// Residual of `2T(a-2,1,1) - T(1,1,a-2) = 2ζ(a)` with both sums taken
    /// from their own formulas.
    Relation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

fn closed(v: Dd, scale: f64, method: Method) -> EvalResult {
    EvalResult::new(
        Real::from_dd(v, 1e-28 * scale.max(v.hi.abs())),
        method,
        ErrorKind::Rigorous,
    )
}

/// Mirror-image canonical order: smaller first index first.
fn canonical(t: [i64; 3]) -> [i64; 3] {
    if t[0] <= t[1] {
        t
    } else {
        [t[1], t[0], t[2]]
    }
}

/// One step of `T(a,b,c) = T(a,b-1,c+1) + T(a-1,b,c+1)`, with terms
/// identified under `T(a,b,c) = T(b,a,c)` and merged. Sums with a zero in
/// the first two places are returned unchanged.
pub fn tornheim_reduce(a: i64, b: i64, c: i64) -> Vec<(i64, [i64; 3])> {
    if a <= 0 || b <= 0 {
        return vec![(1, canonical([a, b, c]))];
    }
    let mut out: Vec<(i64, [i64; 3])> = Vec::new();
    for t in [[a, b - 1, c + 1], [a - 1, b, c + 1]] {
        let t = canonical(t);
        match out.iter_mut().find(|(_, u)| *u == t) {
            Some((k, _)) => *k += 1,
            None => out.push((1, t)),
        }
    }
    out
}

/// `C(n, k)` for integer `n ≥ -1` and `k ≥ 0`.
fn binom(n: i64, k: i64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let mut r: i128 = 1;
    for j in 0..k {
        r = r * (n - j) as i128 / (j + 1) as i128;
    }
    r as f64
}

fn t_i0_dd(i: i64, n: i64) -> Dd {
    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
    let mut s = Dd::ZERO;
    for j in 0..=(n - i - 1) / 2 {
        s += zeta_int_dd(2 * j) * zeta_int_dd(n - 2 * j) * (sign * binom(n - 2 * j - 1, i - 1));
    }
    for j in 0..=i / 2 {
        s += zeta_int_dd(2 * j) * zeta_int_dd(n - 2 * j) * (sign * binom(n - 2 * j - 1, n - i - 1));
    }
    s + zeta_int_dd(n) * -0.5
}

/// `T(i, 0, N-i)` for odd `N > 1` and `1 ≤ i ≤ N-2`.
pub fn tornheim_t_i0(i: u32, n: u32) -> Result<EvalResult> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(domain(
            "tornheim_t_i0",
            format!("N = {n} must be odd and greater than 1"),
        ));
    }
    if i < 1 || i > n - 2 {
        return Err(domain(
            "tornheim_t_i0",
            format!("i = {i} must lie in 1..=N-2"),
        ));
    }
    Ok(closed(
        t_i0_dd(i as i64, n as i64),
        1.0,
        Method::HuardOddWeight,
    ))
}

fn one_one_dd(a: i64) -> Dd {
    let mut s = zeta_int_dd(a) * (a - 1) as f64;
    for i in 2..=a - 2 {
        s -= zeta_int_dd(i) * zeta_int_dd(a - i);
    }
    s
}

/// Tornheim's evaluations in terms of `ζ` at integers, for `a ≥ 3`.
pub fn tornheim_classics(which: Classic, a: u32) -> Result<EvalResult> {
    if a < 3 {
        return Err(domain(
            "tornheim_classics",
            format!("a = {a} must be at least 3"),
        ));
    }
    let a = a as i64;
    let t11 = one_one_dd(a);
    let za = zeta_int_dd(a);
    let v = match which {
        Classic::OneOne => t11,
        Classic::TwoOneOne => t11 * 0.5 + za,
        Classic::OneZero => t11 * 0.5,
        Classic::Relation => {
            let t211 = t11 * 0.5 + za;
            t211 * 2.0 - one_one_dd(a) - za * 2.0
        }
    };
    Ok(closed(v, za.hi * a as f64, Method::TornheimClassic))
}

/// `T(i, 0, N-i)` where a closed form is available: odd `N`, `i = 1`, or
/// `T(2,0,2)`.
fn huard_aux(i: i64, n: i64) -> Result<Dd> {
    if n % 2 == 1 {
        Ok(t_i0_dd(i, n))
    } else if i == 1 {
        Ok(one_one_dd(n) * 0.5)
    } else if n == 4 && i == 2 {
        // elem00 at (2,1,1) with T(2,1,1) = T(1,1,2)/2 + ζ(4)
        Ok(zeta_int_dd(4) - one_one_dd(4) * 0.5)
    } else {
        Err(Error::Unsupported(format!(
            "T({i}, 0, {}) at even weight {n} has no closed form here",
            n - i
        )))
    }
}

/// `T(a,b,c) = Σ_{i≤a} C(a+b-i-1, a-i) T(i,0,N-i) + Σ_{i≤b} C(a+b-i-1, b-i) T(i,0,N-i)`.
///
/// Every odd weight is covered; at even weight only sums whose auxiliary
/// terms are `T(1,0,N-1)` or `T(2,0,2)` are.
pub fn tornheim_huard(a: u32, b: u32, c: u32) -> Result<EvalResult> {
    if a == 0 && b == 0 {
        return Err(domain("tornheim_huard", "n1 and n2 cannot both be zero"));
    }
    ParamTriple::ints(a as i64, b as i64, c as i64).check_gate()?;
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let n = a + b + c;
    let mut s = Dd::ZERO;
    for i in 1..=a {
        s += huard_aux(i, n)? * binom(a + b - i - 1, a - i);
    }
    for i in 1..=b {
        s += huard_aux(i, n)? * binom(a + b - i - 1, b - i);
    }
    let scale = binom(a + b, a.min(b)) * zeta_int_dd(2).hi * zeta_int_dd(n).hi;
    Ok(closed(s, scale, Method::HuardOddWeight))
}

/// `T(2n,2n,2n)` or `T(2n+1,2n+1,2n+1)` from the `ζ`-product sums.
pub fn tornheim_symmetric(n: u32, parity: Parity) -> Result<EvalResult> {
    if n == 0 {
        return Err(domain("tornheim_symmetric", "n must be at least 1"));
    }
    let n = n as i64;
    let mut s = Dd::ZERO;
    let v = match parity {
        Parity::Even => {
            for i in 0..=n {
                s += zeta_int_dd(2 * i)
                    * zeta_int_dd(6 * n - 2 * i)
                    * binom(4 * n - 2 * i - 1, 2 * n - 1);
            }
            (s * 4.0 / 3.0, Method::SubbaraoEven)
        }
        Parity::Odd => {
            for i in 0..=n {
                s += zeta_int_dd(2 * i)
                    * zeta_int_dd(6 * n - 2 * i + 3)
                    * binom(4 * n - 2 * i + 1, 2 * n);
            }
            (s * -4.0, Method::HuardOddSym)
        }
    };
    let scale = binom(4 * n + 1, 2 * n) * 4.0;
    Ok(closed(v.0, scale, v.1))
}

/// `T(2n,2n,2n) = (-1)^n (2π)^{6n}/3 · Σ_k C(4n-2k-1, 2n-1) B_{2k} B_{6n-2k} / ((2k)! (6n-2k)!)`,
/// with the sum formed exactly.
pub fn tornheim_symmetric_bernoulli(n: u32) -> Result<EvalResult> {
    if n == 0 {
        return Err(domain(
            "tornheim_symmetric_bernoulli",
            "n must be at least 1",
        ));
    }
    let n = n as usize;
    let mut s = BigRational::zero();
    for k in 0..=n {
        let num = BigRational::from_integer(binomial_big(4 * n - 2 * k - 1, 2 * n - 1))
            * bernoulli_rational(2 * k)
            * bernoulli_rational(6 * n - 2 * k);
        let den = factorial_big(2 * k) * factorial_big(6 * n - 2 * k);
        s += num / BigRational::from_integer(den);
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let v = rational_to_dd(&s) * (Dd::PI * 2.0).powi(6 * n as u32) * (sign / 3.0);
    Ok(closed(v, v.hi.abs(), Method::SubbaraoEven))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tornheim::{tornheim_direct, DirectConfig};
    use std::f64::consts::PI;

    fn direct(a: i64, b: i64, c: i64) -> f64 {
        tornheim_direct(&ParamTriple::ints(a, b, c), &DirectConfig::default())
            .unwrap()
            .value
    }

    fn z(n: i64) -> f64 {
        zeta_int_dd(n).to_f64()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(tornheim_reduce(1, 1, 2), vec![(2, [0, 1, 3])]);
        assert_eq!(tornheim_reduce(2, 2, 1), vec![(2, [1, 2, 2])]);
        assert_eq!(
            tornheim_reduce(3, 1, 2),
            vec![(1, [0, 3, 3]), (1, [1, 2, 3])]
        );
        assert_eq!(tornheim_reduce(0, 1, 3), vec![(1, [0, 1, 3])]);
        assert_eq!(tornheim_reduce(4, 0, 3), vec![(1, [0, 4, 3])]);
    }

    #[test]
    fn reduce_preserves_value() {
        for &(a, b, c) in &[(1, 1, 2), (2, 2, 1), (3, 1, 2), (2, 3, 1), (2, 2, 2)] {
            let lhs = direct(a, b, c);
            let rhs: f64 = tornheim_reduce(a, b, c)
                .iter()
                .map(|(k, t)| *k as f64 * direct(t[0], t[1], t[2]))
                .sum();
            assert!((lhs - rhs).abs() < 1e-11, "({a},{b},{c})");
        }
    }

    #[test]
    fn t_i0_values() {
        let v = tornheim_t_i0(1, 3).unwrap().value;
        assert!((v - z(3)).abs() < 1e-15);
        for n in [5u32, 7, 9] {
            for i in 1..=n - 2 {
                let v = tornheim_t_i0(i, n).unwrap().value;
                let d = direct(i as i64, 0, (n - i) as i64);
                assert!((v - d).abs() < 1e-10, "T({i},0,{})", n - i);
            }
        }
        assert!(tornheim_t_i0(1, 4).is_err());
        assert!(tornheim_t_i0(4, 5).is_err());
        assert!(tornheim_t_i0(0, 5).is_err());
    }

    #[test]
    fn huard_matches_direct() {
        let v = tornheim_huard(0, 1, 3).unwrap().value;
        assert!((v - z(4) / 4.0).abs() < 1e-15);
        for w in [3i64, 5, 7] {
            for a in 0..=w {
                for b in 0..=w - a {
                    let c = w - a - b;
                    let p = ParamTriple::ints(a, b, c);
                    if p.check_gate().is_err() || a + b == 0 {
                        assert!(tornheim_huard(a as u32, b as u32, c as u32).is_err());
                        continue;
                    }
                    let h = tornheim_huard(a as u32, b as u32, c as u32).unwrap().value;
                    assert!((h - direct(a, b, c)).abs() < 1e-10, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn huard_even_weight() {
        let v = tornheim_huard(1, 1, 2).unwrap().value;
        assert!((v - z(4) / 2.0).abs() < 1e-15);
        let v = tornheim_huard(2, 1, 1).unwrap().value;
        assert!((v - direct(2, 1, 1)).abs() < 1e-12);
        assert!(matches!(
            tornheim_huard(2, 2, 2),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn classics() {
        let t112 = tornheim_classics(Classic::OneOne, 4).unwrap().value;
        assert!((t112 - z(4) / 2.0).abs() < 1e-15);
        let t211 = tornheim_classics(Classic::TwoOneOne, 4).unwrap().value;
        assert!((t211 - (t112 / 2.0 + z(4))).abs() < 1e-15);
        assert!((t211 - direct(2, 1, 1)).abs() < 1e-12);
        for a in 3..=9 {
            let r = tornheim_classics(Classic::Relation, a).unwrap().value;
            assert!(r.abs() < 1e-15, "a={a}");
            let v = tornheim_classics(Classic::OneZero, a).unwrap().value;
            assert!((v - direct(1, 0, a as i64 - 1)).abs() < 1e-11, "a={a}");
        }
        assert!(tornheim_classics(Classic::OneOne, 2).is_err());
    }

    #[test]
    fn symmetric_sums() {
        let e = tornheim_symmetric(1, Parity::Even).unwrap().value;
        let b = tornheim_symmetric_bernoulli(1).unwrap().value;
        assert!((e - PI.powi(6) / 2835.0).abs() < 1e-15);
        assert!((e - b).abs() < 1e-15);
        assert!((e - direct(2, 2, 2)).abs() < 1e-12);
        for n in 2..=4 {
            let e = tornheim_symmetric(n, Parity::Even).unwrap().value;
            let b = tornheim_symmetric_bernoulli(n).unwrap().value;
            assert!(
                (e - b).abs() < 1e-15 * e.abs().max(1e-300),
                "n={n}: {e} {b}"
            );
        }
        let o = tornheim_symmetric(1, Parity::Odd).unwrap().value;
        assert!((o - direct(3, 3, 3)).abs() < 1e-12);
        let o2 = tornheim_symmetric(2, Parity::Odd).unwrap().value;
        assert!((o2 - direct(5, 5, 5)).abs() < 1e-14);
    }
}
