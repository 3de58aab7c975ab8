//! Bernoulli numbers, Bernoulli polynomials and harmonic numbers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use std::sync::{Mutex, OnceLock};

use crate::dd::Dd;
use crate::real::Real;

/// Largest index kept in the Bernoulli cache.
pub const BERNOULLI_CACHE_MAX: usize = 256;

fn cache() -> &'static Mutex<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

pub(crate) fn binomial_big(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub(crate) fn factorial_big(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn compute_next(known: &[BigRational]) -> BigRational {
    let n = known.len();
    if n > 1 && n % 2 == 1 {
        return BigRational::zero();
    }
    // B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k
    let mut s = BigRational::zero();
    for (k, bk) in known.iter().enumerate() {
        if bk.is_zero() {
            continue;
        }
        s += BigRational::from_integer(binomial_big(n + 1, k)) * bk;
    }
    -s / BigRational::from_integer(BigInt::from(n + 1))
}

/// Exact Bernoulli number `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli_rational(n: usize) -> BigRational {
    let mut c = cache().lock().unwrap_or_else(|e| e.into_inner());
    if n < c.len() {
        return c[n].clone();
    }
    if n > BERNOULLI_CACHE_MAX {
        let mut local = c.clone();
        while local.len() <= n {
            let b = compute_next(&local);
            local.push(b);
        }
        return local[n].clone();
    }
    while c.len() <= n {
        let b = compute_next(&c);
        c.push(b);
    }
    c[n].clone()
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rational_to_dd(r: &BigRational) -> Dd {
    let hi = rational_to_f64(r);
    if !hi.is_finite() || hi == 0.0 {
        return Dd::from(hi);
    }
    let h = BigRational::from_float(hi).expect("finite");
    let lo = rational_to_f64(&(r - h));
    Dd::new(hi, lo)
}

/// `B_n` as a `Real`; exact whenever the rational is representable.
pub fn bernoulli_number(n: usize) -> Real {
    let r = bernoulli_rational(n);
    let v = rational_to_dd(&r);
    Real::new(v.to_f64(), v.lo.abs())
}

pub(crate) fn bernoulli_dd(n: usize) -> Dd {
    if n <= POLY_TABLE_MAX {
        // the leading coefficient C(n,n) B_n
        poly_table()[n][n]
    } else {
        rational_to_dd(&bernoulli_rational(n))
    }
}

const POLY_TABLE_MAX: usize = 64;

fn poly_coeffs_exact(n: usize) -> Vec<Dd> {
    (0..=n)
        .map(|k| {
            let c = BigRational::from_integer(binomial_big(n, k)) * bernoulli_rational(k);
            rational_to_dd(&c)
        })
        .collect()
}

fn poly_table() -> &'static Vec<Vec<Dd>> {
    static TABLE: OnceLock<Vec<Vec<Dd>>> = OnceLock::new();
    TABLE.get_or_init(|| (0..=POLY_TABLE_MAX).map(poly_coeffs_exact).collect())
}

pub(crate) fn bernoulli_poly_dd(n: usize, q: Dd) -> Dd {
    // Horner on sum_k C(n,k) B_k q^{n-k}
    let horner = |coeffs: &[Dd]| coeffs.iter().fold(Dd::ZERO, |acc, c| acc * q + *c);
    if n <= POLY_TABLE_MAX {
        horner(&poly_table()[n])
    } else {
        horner(&poly_coeffs_exact(n))
    }
}

/// `B_n(q)` evaluated in double-double and rounded.
pub fn bernoulli_poly(n: usize, q: f64) -> Real {
    let v = bernoulli_poly_dd(n, Dd::from(q));
    let scale = q.abs().max(1.0).powi(n as i32) * bernoulli_scale(n);
    Real::new(
        v.to_f64(),
        0.5 * f64::EPSILON * v.to_f64().abs() + 1e-30 * scale,
    )
}

fn bernoulli_scale(n: usize) -> f64 {
    (0..=n)
        .map(|k| rational_to_f64(&bernoulli_rational(k)).abs())
        .fold(1.0, f64::max)
        * 2f64.powi(n as i32)
}

/// `B_n(q)` where the caller also has `1 - q` accurately; uses the
/// reflection `B_n(1-q) = (-1)^n B_n(q)` to evaluate at the smaller argument.
pub(crate) fn bernoulli_poly_pair(n: usize, q: f64, qc: f64) -> f64 {
    if q <= 0.5 {
        bernoulli_poly_dd(n, Dd::from(q)).to_f64()
    } else {
        let v = bernoulli_poly_dd(n, Dd::from(qc)).to_f64();
        if n.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }
}

pub fn harmonic_rational(n: usize) -> BigRational {
    let mut s = BigRational::zero();
    for k in 1..=n {
        s += BigRational::new(BigInt::one(), BigInt::from(k));
    }
    s
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> Real {
    let v = rational_to_dd(&harmonic_rational(n));
    Real::new(v.to_f64(), v.lo.abs())
}

/// `h_n = H_{n-1}`, so `h_1 = 0`.
pub fn h(n: usize) -> Real {
    assert!(n >= 1, "h(n) needs n >= 1");
    harmonic(n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli_rational(0), rat(1, 1));
        assert_eq!(bernoulli_rational(1), rat(-1, 2));
        assert_eq!(bernoulli_rational(2), rat(1, 6));
        assert_eq!(bernoulli_rational(3), rat(0, 1));
        assert_eq!(bernoulli_rational(4), rat(-1, 30));
        assert_eq!(bernoulli_rational(12), rat(-691, 2730));
        assert_eq!(bernoulli_rational(20), rat(-174611, 330));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for n in (3..60).step_by(2) {
            assert!(bernoulli_rational(n).is_zero());
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0).value, 0.0);
        assert_eq!(h(1).value, 0.0);
        assert_eq!(h(3).value, 1.5);
        assert_eq!(harmonic_rational(4), rat(25, 12));
    }

    #[test]
    fn low_degree_polynomials() {
        for &q in &[0.0, 0.1, 0.25, 0.5, 0.9] {
            assert!((bernoulli_poly(1, q).value - (q - 0.5)).abs() < 1e-16);
            let b2 = q * q - q + 1.0 / 6.0;
            assert!((bernoulli_poly(2, q).value - b2).abs() < 1e-16);
        }
        assert_eq!(bernoulli_poly(2, 0.0).value, 1.0 / 6.0);
    }

    proptest! {
        #[test]
        fn reflection(n in 0usize..14, q in 0.0f64..1.0) {
            let a = bernoulli_poly(n, 1.0 - q).value;
            let b = bernoulli_poly(n, q).value;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((a - sign * b).abs() < 1e-12);
        }

        #[test]
        fn unit_step_difference(n in 1usize..12, q in -2.0f64..2.0) {
            let lhs = bernoulli_poly(n, q + 1.0).value - bernoulli_poly(n, q).value;
            let rhs = n as f64 * q.powi(n as i32 - 1);
            prop_assert!((lhs - rhs).abs() < 1e-11 * (1.0 + rhs.abs()));
        }
    }
}
