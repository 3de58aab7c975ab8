//! The Bernoulli functions `A_k(q) = k ζ'(1-k, q)` and the balanced
//! negapolygammas `ψ^(-m)(q) = (A_m(q) - H_{m-1} B_m(q)) / m!`.

use crate::dd::Dd;
use crate::error::{domain, Result};
use crate::real::Real;
use crate::specfun::{
    bernoulli_poly_dd, h, harmonic_rational, hurwitz_jet, hurwitz_zeta_zderiv, rational_to_dd,
};

/// Order `m ≥ 1` of `ψ^(-m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NegaPolyOrder(usize);

impl NegaPolyOrder {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(domain("NegaPolyOrder", "order must be at least 1"));
        }
        Ok(Self(m))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// `A_k(q) = k ζ'(1-k, q)` for `k ≥ 1`, `q ∈ (0,1]`.
pub fn bernoulli_a(k: usize, q: f64) -> Result<Real> {
    if k == 0 {
        return Err(domain("bernoulli_a", "k must be at least 1"));
    }
    Ok(hurwitz_zeta_zderiv(1.0 - k as f64, q)?.scale(k as f64))
}

fn inv_factorial(m: usize) -> f64 {
    (1..=m).fold(1.0, |acc, i| acc / i as f64)
}

/// Balanced negapolygamma `ψ^(-m)(q)` for `m ≥ 1`, `q ∈ (0,1)`.
pub fn negapolygamma(m: usize, q: f64) -> Result<Real> {
    NegaPolyOrder::new(m)?;
    if !(q > 0.0 && q < 1.0) {
        return Err(domain(
            "negapolygamma",
            format!("q = {q} must lie in (0, 1)"),
        ));
    }
    let a = bernoulli_a(m, q)?;
    let hb = rational_to_dd(&harmonic_rational(m - 1)) * bernoulli_poly_dd(m, Dd::from(q));
    let diff = Dd::from(a.value) - hb;
    let f = inv_factorial(m);
    let err = (a.err + 2.0 * f64::EPSILON * f64::EPSILON * hb.hi.abs()) * f
        + 0.5 * f64::EPSILON * (diff.hi * f).abs();
    Ok(Real::new(diff.to_f64() * f, err))
}

/// `ψ^(-m)(q)` as a plain double, for integrands. Accepts any `q > 0`.
pub(crate) fn negapolygamma_f64(m: usize, q: f64) -> f64 {
    let a = hurwitz_jet(1.0 - m as f64, q, 1).d1 * (m as f64);
    let hb = rational_to_dd(&harmonic_rational(m - 1)) * bernoulli_poly_dd(m, Dd::from(q));
    ((a - hb) * inv_factorial(m)).to_f64()
}

/// `A_k(q)` as a plain double, for integrands.
pub(crate) fn bernoulli_a_f64(k: usize, q: f64) -> f64 {
    (hurwitz_jet(1.0 - k as f64, q, 1).d1 * (k as f64)).to_f64()
}

/// Residual `|(ψ^(-m)(q+δ) - ψ^(-m)(q-δ)) / 2δ - ψ^(-m+1)(q)|` for the
/// derivative ladder, with `δ = 1e-5`.
pub fn negapolygamma_derivative_check(m: usize, q: f64) -> Result<f64> {
    negapolygamma_derivative_check_step(m, q, 1e-5)
}

/// [`negapolygamma_derivative_check`] with an explicit step.
pub fn negapolygamma_derivative_check_step(m: usize, q: f64, delta: f64) -> Result<f64> {
    if m < 2 {
        return Err(domain(
            "negapolygamma_derivative_check",
            "m must be at least 2",
        ));
    }
    let fd =
        (negapolygamma(m, q + delta)?.value - negapolygamma(m, q - delta)?.value) / (2.0 * delta);
    Ok((fd - negapolygamma(m - 1, q)?.value).abs())
}

/// `A_m(q) - m! ψ^(-m)(q) - h_m B_m(q)`, which vanishes identically.
pub fn relation_residual(m: usize, q: f64) -> Result<f64> {
    let a = bernoulli_a(m, q)?.value;
    let fact = (1..=m).fold(1.0, |acc, i| acc * i as f64);
    let b = bernoulli_poly_dd(m, Dd::from(q)).to_f64();
    Ok((a - fact * negapolygamma(m, q)?.value - h(m).value * b).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{bernoulli_poly, log_gamma, ZETA_PRIME_0};
    use proptest::prelude::*;

    fn gauss_legendre_01(f: impl Fn(f64) -> f64) -> f64 {
        // composite 5-point rule on 64 panels; callers substitute q = t^4 to
        // flatten the q^k ln q behaviour at the origin
        let x = [
            0.0,
            0.538_469_310_105_683_1,
            -0.538_469_310_105_683_1,
            0.906_179_845_938_664,
            -0.906_179_845_938_664,
        ];
        let w = [
            0.568_888_888_888_888_9,
            0.478_628_670_499_366_5,
            0.478_628_670_499_366_5,
            0.236_926_885_056_189_1,
            0.236_926_885_056_189_1,
        ];
        let panels = 64;
        let hw = 0.5 / panels as f64;
        let mut s = 0.0;
        for p in 0..panels {
            let mid = (2 * p + 1) as f64 * hw;
            for i in 0..5 {
                s += w[i] * hw * f(mid + hw * x[i]);
            }
        }
        s
    }

    #[test]
    fn a1_is_lerch() {
        for &q in &[0.1, 0.25, 0.5, 0.8, 1.0] {
            let a = bernoulli_a(1, q).unwrap().value;
            let lg = log_gamma(q).unwrap().value;
            assert!((a - (lg + ZETA_PRIME_0)).abs() < 1e-15, "q={q}");
        }
        assert!((bernoulli_a(1, 1.0).unwrap().value - ZETA_PRIME_0).abs() < 1e-16);
    }

    #[test]
    fn a2_at_half() {
        // ζ'(-1, 1/2) = -ln 2 / 24 - ζ'(-1) / 2
        let zp_m1 = -0.165_421_143_700_450_94;
        let expect = 2.0 * (-std::f64::consts::LN_2 / 24.0 - zp_m1 / 2.0);
        assert!((bernoulli_a(2, 0.5).unwrap().value - expect).abs() < 1e-16);
    }

    #[test]
    fn first_order_is_shifted_log_gamma() {
        for &q in &[0.05, 0.3, 0.7] {
            let v = negapolygamma(1, q).unwrap().value;
            let lg = log_gamma(q).unwrap().value;
            assert!((v - lg - ZETA_PRIME_0).abs() < 1e-15);
        }
    }

    #[test]
    fn second_order_composition() {
        let q = 0.25;
        let expect = 0.5 * (bernoulli_a(2, q).unwrap().value - bernoulli_poly(2, q).value);
        assert!((negapolygamma(2, q).unwrap().value - expect).abs() < 1e-16);
    }

    #[test]
    fn balanced_integrals_vanish() {
        for m in 2..=8 {
            let i =
                gauss_legendre_01(|t| 4.0 * t.powi(3) * negapolygamma(m, t.powi(4)).unwrap().value);
            assert!(i.abs() < 1e-13, "m={m}: {i}");
        }
    }

    #[test]
    fn log_gamma_integral_vanishes() {
        let i = gauss_legendre_01(|t| 4.0 * t.powi(3) * negapolygamma(1, t.powi(4)).unwrap().value);
        assert!(i.abs() < 1e-11, "{i}");
    }

    #[test]
    fn balanced_endpoints_agree() {
        let eps = 1e-10;
        for m in 2..=8 {
            let a = negapolygamma(m, eps).unwrap().value;
            let b = negapolygamma(m, 1.0 - eps).unwrap().value;
            assert!((a - b).abs() < 1e-8, "m={m}");
        }
    }

    #[test]
    fn derivative_ladder() {
        assert!(negapolygamma_derivative_check(2, 0.5).unwrap() <= 1e-8);
        assert!(negapolygamma_derivative_check(3, 0.3).unwrap() <= 1e-8);
        assert!(negapolygamma_derivative_check_step(2, 0.9, 1e-4).unwrap() <= 1e-6);
        for m in 2..=6 {
            for &q in &[0.2, 0.45, 0.7] {
                assert!(negapolygamma_derivative_check(m, q).unwrap() <= 1e-8);
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(negapolygamma(0, 0.5).is_err());
        assert!(negapolygamma(1, 0.0).is_err());
        assert!(negapolygamma(1, 1.0).is_err());
        assert!(bernoulli_a(0, 0.5).is_err());
        assert!(negapolygamma_derivative_check(1, 0.5).is_err());
    }

    #[test]
    fn plain_double_paths_agree() {
        for m in 1..=6 {
            let q = 0.37;
            assert!((negapolygamma_f64(m, q) - negapolygamma(m, q).unwrap().value).abs() < 1e-16);
            assert!((bernoulli_a_f64(m, q) - bernoulli_a(m, q).unwrap().value).abs() < 1e-15);
        }
    }

    proptest! {
        #[test]
        fn relation_holds(m in 1usize..9, q in 0.001f64..0.999) {
            prop_assert!(relation_residual(m, q).unwrap() < 1e-14);
        }
    }
}
