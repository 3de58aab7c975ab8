//! Riemann and Hurwitz zeta functions with their first two derivatives in
//! the first argument, by Euler–Maclaurin summation in double-double.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::dd::Dd;
use crate::error::{domain, Error, Result};
use crate::real::Real;

use super::bernoulli::{bernoulli_dd, bernoulli_rational, rational_to_f64};
use super::gamma::ln_gamma_dd;
use super::sin_pi;

const MAX_CORRECTIONS: usize = 40;

/// `ζ(z,q)`, `∂_z ζ(z,q)` and `∂²_z ζ(z,q)` with an error estimate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ZetaJet {
    pub v: Dd,
    pub d1: Dd,
    pub d2: Dd,
    pub err: f64,
}

fn inv_factorial_2k(k: usize) -> Dd {
    static TABLE: OnceLock<Vec<Dd>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut v = Vec::with_capacity(MAX_CORRECTIONS + 1);
        let mut f = Dd::ONE;
        v.push(Dd::ONE);
        for j in 1..=MAX_CORRECTIONS {
            f = f / (((2 * j - 1) * (2 * j)) as f64);
            v.push(bernoulli_dd(2 * j) * f);
        }
        v
    });
    t[k]
}

/// Euler–Maclaurin evaluation for any `q > 0` and `z != 1`.
///
/// `want` selects how many derivatives are needed (0, 1 or 2); the unused
/// ones are returned as zero.
pub(crate) fn hurwitz_jet(z: f64, q: f64, want: u8) -> ZetaJet {
    let n_direct = (20.0 + z.abs() - q).ceil().max(0.0) as usize;
    let zd = Dd::from(z);
    let mut v = Dd::ZERO;
    let mut d1 = Dd::ZERO;
    let mut d2 = Dd::ZERO;
    let mut mag = 0.0f64;
    for n in 0..n_direct {
        let x = Dd::sum(n as f64, q);
        let l = x.ln();
        let t = (-(l * zd)).exp();
        mag = mag.max(t.hi.abs());
        v += t;
        if want >= 1 {
            let tl = t * l;
            d1 -= tl;
            if want >= 2 {
                d2 += tl * l;
            }
        }
    }

    let x = Dd::sum(n_direct as f64, q);
    let l = x.ln();
    let xz = (-(l * zd)).exp();
    let zm1 = zd - 1.0;
    let u = xz * x;
    let f = u / zm1;
    v += f + xz * 0.5;
    mag = mag.max(f.hi.abs());
    if want >= 1 {
        let r = Dd::ONE / zm1;
        d1 += -(l * f) - f * r - l * xz * 0.5;
        if want >= 2 {
            d2 += l * l * f + l * f * r * 2.0 + f * r * r * 2.0 + l * l * xz * 0.5;
        }
    }

    // Bernoulli corrections c_k P_k x^{-z-2k+1}, P_k = z(z+1)...(z+2k-2)
    let inv_x2 = Dd::ONE / (x * x);
    let mut e = xz / x;
    let mut p = zd;
    let mut p1 = Dd::ONE;
    let mut p2 = Dd::ZERO;
    let mut last = f64::INFINITY;
    let mut tail_err = 0.0;
    for k in 1..=MAX_CORRECTIONS {
        if k > 1 {
            for w in [z + (2 * k - 3) as f64, z + (2 * k - 2) as f64] {
                let wd = Dd::from(w);
                p2 = p2 * wd + p1 * 2.0;
                p1 = p1 * wd + p;
                p *= wd;
            }
            e *= inv_x2;
        }
        let c = inv_factorial_2k(k) * e;
        let t = c * p;
        v += t;
        if want >= 1 {
            d1 += c * (p1 - l * p);
            if want >= 2 {
                d2 += c * (p2 - l * p1 * 2.0 + l * l * p);
            }
        }
        let size = t.hi.abs() + (c * p1).hi.abs() * if want >= 1 { 1.0 } else { 0.0 };
        if size <= 1e-33 * (v.hi.abs() + mag) || (size == 0.0 && p.hi == 0.0) {
            tail_err = size;
            break;
        }
        if size > last && k > 4 {
            tail_err = size;
            break;
        }
        last = size;
        tail_err = size;
    }
    let err = tail_err + 1e-31 * mag * (1.0 + l.hi.abs()).powi(want as i32);
    ZetaJet { v, d1, d2, err }
}

fn check_hurwitz_args(func: &'static str, z: f64, q: f64) -> Result<()> {
    if z == 1.0 {
        return Err(Error::Pole { func, at: 1.0 });
    }
    if !(q > 0.0 && q <= 1.0) {
        return Err(domain(func, format!("q = {q} must lie in (0, 1]")));
    }
    if !z.is_finite() {
        return Err(domain(func, format!("z = {z} must be finite")));
    }
    Ok(())
}

/// Hurwitz zeta `ζ(z,q)` for `z != 1` and `q ∈ (0,1]`.
pub fn hurwitz_zeta(z: f64, q: f64) -> Result<Real> {
    check_hurwitz_args("hurwitz_zeta", z, q)?;
    let j = hurwitz_jet(z, q, 0);
    Ok(Real::from_dd(j.v, j.err))
}

/// `∂ζ(z,q)/∂z` for `z != 1` and `q ∈ (0,1]`.
pub fn hurwitz_zeta_zderiv(z: f64, q: f64) -> Result<Real> {
    check_hurwitz_args("hurwitz_zeta_zderiv", z, q)?;
    let j = hurwitz_jet(z, q, 1);
    Ok(Real::from_dd(j.d1, j.err))
}

/// `ζ(z,q)` for any `q > 0`; used for the tails of direct sums.
pub(crate) fn hurwitz_any_dd(z: f64, q: f64) -> Dd {
    hurwitz_jet(z, q, 0).v
}

pub(crate) fn hurwitz_any_d1_dd(z: f64, q: f64) -> Dd {
    hurwitz_jet(z, q, 1).d1
}

type JetCache = Mutex<HashMap<u64, (Dd, Dd, Dd, f64)>>;

fn riemann_cache() -> &'static JetCache {
    static CACHE: OnceLock<JetCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn riemann_jet(s: f64) -> (Dd, Dd, Dd, f64) {
    let key = s.to_bits();
    if let Some(hit) = riemann_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&key)
    {
        return *hit;
    }
    let j = hurwitz_jet(s, 1.0, 2);
    let out = (j.v, j.d1, j.d2, j.err);
    riemann_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(key, out);
    out
}

/// Riemann zeta `ζ(s)` for `s > 1`.
pub fn riemann_zeta(s: f64) -> Result<Real> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain("riemann_zeta", format!("s = {s} must exceed 1")));
    }
    if s == s.round() && (s as u64).is_multiple_of(2) && s <= 60.0 {
        let k = s as usize / 2;
        let v = zeta_even_dd(k);
        return Ok(Real::from_dd(v, 1e-31 * v.hi));
    }
    let (v, _, _, e) = riemann_jet(s);
    Ok(Real::from_dd(v, e))
}

/// `ζ(2k) = (-1)^{k+1} (2π)^{2k} B_{2k} / (2 (2k)!)`.
pub(crate) fn zeta_even_dd(k: usize) -> Dd {
    if k == 0 {
        return Dd::from(-0.5);
    }
    let two_pi = Dd::PI * 2.0;
    let mut f = Dd::ONE;
    for j in 1..=2 * k {
        f = f * (j as f64);
    }
    let b = bernoulli_dd(2 * k);
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    two_pi.powi(2 * k as u32) * b / (f * 2.0) * sign
}

/// `ζ'(s)` (order 1) or `ζ''(s)` (order 2) for `s > 1`.
pub fn riemann_zeta_deriv(s: f64, order: u8) -> Result<Real> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain(
            "riemann_zeta_deriv",
            format!("s = {s} must exceed 1"),
        ));
    }
    let (_, d1, d2, e) = riemann_jet(s);
    match order {
        1 => Ok(Real::from_dd(d1, e)),
        2 => Ok(Real::from_dd(d2, e)),
        _ => Err(domain(
            "riemann_zeta_deriv",
            format!("order {order} must be 1 or 2"),
        )),
    }
}

/// `ζ(s)` for any real `s != 1`. Negative arguments go through the
/// functional equation, which keeps full relative accuracy.
pub(crate) fn zeta_any(s: f64) -> f64 {
    if s == 1.0 {
        return f64::INFINITY;
    }
    if s == s.round() && s <= 0.0 {
        // ζ(0) = -1/2, ζ(-n) = -B_{n+1}/(n+1)
        if s == 0.0 {
            return -0.5;
        }
        let n = (-s) as usize;
        let b = rational_to_f64(&bernoulli_rational(n + 1));
        return -b / (n + 1) as f64;
    }
    if s >= 0.0 {
        if s == s.round() && (s as u64).is_multiple_of(2) && s <= 60.0 {
            return zeta_even_dd(s as usize / 2).to_f64();
        }
        return riemann_jet(s).0.to_f64();
    }
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    let t = 1.0 - s;
    let log_mag = (Dd::LN2 * s + Dd::PI.ln() * (s - 1.0) + ln_gamma_dd(t)).exp();
    log_mag.to_f64() * sin_pi(s / 2.0) * zeta_any(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bernoulli::bernoulli_poly;
    use crate::specfun::gamma::log_gamma;
    use proptest::prelude::*;

    #[test]
    fn riemann_values() {
        let pi = std::f64::consts::PI;
        assert!((riemann_zeta(2.0).unwrap().value - pi * pi / 6.0).abs() < 2e-16);
        assert!((riemann_zeta(6.0).unwrap().value - pi.powi(6) / 945.0).abs() < 4e-16);
        let z3 = 1.202_056_903_159_594_2;
        assert!((riemann_zeta(3.0).unwrap().value - z3).abs() < 2e-16);
        assert!(riemann_zeta(1.0).is_err());
    }

    #[test]
    fn even_values_agree_with_series() {
        for k in 1..=10 {
            let s = 2.0 * k as f64;
            let via_em = hurwitz_jet(s, 1.0, 0).v;
            let via_b = zeta_even_dd(k);
            assert!((via_em - via_b).abs().to_f64() < 1e-30, "k={k}");
        }
    }

    #[test]
    fn derivative_values() {
        let d1 = -0.937_548_254_315_843_8;
        let d2 = 1.989_280_234_298_901;
        let d14 = -0.068_911_265_896_125_38;
        assert!((riemann_zeta_deriv(2.0, 1).unwrap().value - d1).abs() < 2e-16);
        assert!((riemann_zeta_deriv(2.0, 2).unwrap().value - d2).abs() < 4e-16);
        assert!((riemann_zeta_deriv(4.0, 1).unwrap().value - d14).abs() < 1e-17);
        assert!(riemann_zeta_deriv(2.0, 3).is_err());
    }

    #[test]
    fn hurwitz_reference_points() {
        // ζ(-0.5, 0.5) and ∂ζ(-1, 0.25) at 30 digits
        let a = 0.060_888_465_580_594_92;
        let b = 0.093_567_868_970_261_06;
        assert!((hurwitz_zeta(-0.5, 0.5).unwrap().value - a).abs() < 1e-16);
        assert!((hurwitz_zeta_zderiv(-1.0, 0.25).unwrap().value - b).abs() < 1e-16);
        assert!(hurwitz_zeta(1.0, 0.5).is_err());
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
        assert!(hurwitz_zeta(2.0, 1.5).is_err());
    }

    #[test]
    fn negative_integers_give_bernoulli() {
        for k in 1..=8usize {
            for &q in &[0.1, 0.3, 0.7, 1.0] {
                let z = hurwitz_zeta(1.0 - k as f64, q).unwrap().value;
                let b = bernoulli_poly(k, q).value / k as f64;
                assert!((z + b).abs() < 1e-15, "k={k} q={q}");
            }
        }
    }

    #[test]
    fn lerch() {
        let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
        for i in 1..=20 {
            let q = i as f64 / 20.0;
            let lhs = hurwitz_zeta_zderiv(0.0, q).unwrap().value;
            let rhs = log_gamma(q).unwrap().value - half_ln_2pi;
            assert!((lhs - rhs).abs() < 1e-15, "q={q}");
        }
    }

    #[test]
    fn negative_riemann_arguments() {
        assert!((zeta_any(-1.0) + 1.0 / 12.0).abs() < 1e-17);
        assert_eq!(zeta_any(-2.0), 0.0);
        assert!((zeta_any(0.0) + 0.5).abs() < 1e-17);
        // ζ(-2.5) at 30 digits
        let v = 0.008_516_928_777_850_331;
        assert!((zeta_any(-2.5) - v).abs() < 1e-17);
        // continuous across the functional-equation switch
        let direct = hurwitz_jet(-0.3, 1.0, 0).v.to_f64();
        assert!((zeta_any(-0.3) - direct).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn derivative_matches_finite_difference(z in -6.0f64..6.0, q in 0.05f64..1.0) {
            prop_assume!((z - 1.0).abs() > 0.2);
            for &delta in &[1e-4, 1e-5] {
                let fp = hurwitz_jet(z + delta, q, 0).v;
                let fm = hurwitz_jet(z - delta, q, 0).v;
                let fd = ((fp - fm) / (2.0 * delta)).to_f64();
                let d = hurwitz_zeta_zderiv(z, q).unwrap().value;
                let scale = 1.0 + d.abs() + hurwitz_jet(z, q, 2).d2.to_f64().abs();
                prop_assert!((fd - d).abs() < 50.0 * delta * delta * scale * (1.0 + z.abs()).powi(2),
                    "z={} q={} fd={} d={}", z, q, fd, d);
            }
        }
    }
}
