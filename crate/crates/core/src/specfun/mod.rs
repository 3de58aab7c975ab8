//! Scalar special functions: gamma family, Riemann and Hurwitz zeta with
//! derivatives, Bernoulli numbers and polynomials, harmonic numbers and the
//! named constants used throughout the crate.

mod bernoulli;
mod gamma;
mod zeta;

pub use bernoulli::{
    bernoulli_number, bernoulli_poly, bernoulli_rational, h, harmonic, harmonic_rational,
    rational_to_f64, BERNOULLI_CACHE_MAX,
};
pub use gamma::{digamma, gamma, log_gamma, rgamma};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_zderiv, riemann_zeta, riemann_zeta_deriv};

pub(crate) use bernoulli::{
    bernoulli_dd, bernoulli_poly_dd, bernoulli_poly_pair, binomial_big, factorial_big,
    rational_to_dd,
};
pub(crate) use gamma::{digamma_dd, ln_gamma_dd};
pub(crate) use zeta::{
    hurwitz_any_d1_dd, hurwitz_any_dd, hurwitz_jet, riemann_jet, zeta_any, zeta_even_dd,
};

use crate::dd::Dd;
use std::f64::consts::PI;

pub(crate) const LN_2PI_DD: Dd = Dd::new(1.837_877_066_409_345_6, -7.756_588_316_134_483e-17);
pub(crate) const EULER_DD: Dd = Dd::new(0.577_215_664_901_532_9, -4.942_915_152_430_645e-18);

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// `ln 2π`.
pub const LN_2PI: f64 = 1.837_877_066_409_345_6;
/// `ζ'(0) = -ln √(2π)`.
pub const ZETA_PRIME_0: f64 = -0.918_938_533_204_672_8;

/// `A = γ + ln 2π`.
pub fn const_a() -> f64 {
    (EULER_DD + LN_2PI_DD).to_f64()
}

/// `A₊ = A² + π²/4`.
pub fn const_a_plus() -> f64 {
    let a = EULER_DD + LN_2PI_DD;
    (a * a + Dd::PI * Dd::PI * 0.25).to_f64()
}

/// `A₋ = A² - π²/4`.
pub fn const_a_minus() -> f64 {
    let a = EULER_DD + LN_2PI_DD;
    (a * a - Dd::PI * Dd::PI * 0.25).to_f64()
}

/// `sin(πx)`, exact at integers and half-integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == -0.5 {
        return -1.0;
    }
    // r in (-1, 1); fold into [-1/2, 1/2] where sin is well conditioned
    let s = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * s).sin()
}

/// `cos(πx)`, exact at integers and half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constants() {
        let a = 2.415_092_731_310_878_5;
        assert!((const_a() - a).abs() < 1e-16);
        assert!((const_a_plus() - (a * a + PI * PI / 4.0)).abs() < 1e-14);
        assert!((const_a_minus() - (a * a - PI * PI / 4.0)).abs() < 1e-14);
        assert_eq!(ZETA_PRIME_0, -0.5 * LN_2PI);
        assert!((LN_2PI - (2.0 * PI).ln()).abs() < 5e-16);
    }

    #[test]
    fn trig_at_special_points() {
        assert_eq!(sin_pi(3.0), 0.0);
        assert_eq!(sin_pi(2.5), 1.0);
        assert_eq!(sin_pi(-0.5), -1.0);
        assert_eq!(cos_pi(1.5), 0.0);
        assert_eq!(cos_pi(2.0), 1.0);
        assert_eq!(cos_pi(-3.0), -1.0);
    }

    proptest! {
        #[test]
        fn trig_matches_std(x in -20.0f64..20.0) {
            prop_assert!((sin_pi(x) - (PI * x).sin()).abs() < 1e-13);
            prop_assert!((cos_pi(x) - (PI * x).cos()).abs() < 1e-13);
        }
    }
}
