//! Identity checks that report both sides rather than asserting: the small
//! weight table in terms of `K, K*, Z, Z*, U`, the reduction of `K_{m,n}` for
//! odd `m`, and `T(a,0,c)` against the multiple zeta value.

use serde::{Deserialize, Serialize};

use crate::dd::Dd;
use crate::error::{domain, Result};
use crate::polygamma_neg::negapolygamma_f64;
use crate::quadrature::{
    integral_k, integral_kstar, integral_n, integral_u, integral_z, integral_zstar, integrate_01,
    QuadratureConfig,
};
use crate::real::Real;
use crate::specfun::{
    bernoulli_dd, bernoulli_poly_pair, digamma_dd, hurwitz_any_dd, riemann_jet, EULER_DD, LN_2PI_DD,
};

use super::{tornheim_direct, zeta_int_dd, DirectConfig, ParamTriple};

use std::f64::consts::{LN_2, PI};

/// Two independently computed sides of an identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    /// Combined error estimate of both sides.
    pub err: f64,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: Real, rhs: Real) -> Self {
        Self {
            name: name.into(),
            lhs: lhs.value,
            rhs: rhs.value,
            residual: (lhs.value - rhs.value).abs(),
            err: lhs.err + rhs.err,
        }
    }
}

/// Identities for the sums of weight 3, 4 and 5 with integer arguments,
/// left sides by direct summation and right sides from quadrature:
///
/// ```text
/// T(1,1,1) = 4Z₁₁ + 12Z*₁₁ - ζ(3) + L(A²/3 - π²/6 - 4Aζ'(2)/π² + 2ζ''(2)/π²)
/// T(1,1,2) = -4π²U₁₂ - π⁴/90 - ζ(3) ln 2
/// T(1,2,1) = -4π²(U₁₂ + 2U₂₁)
/// T(1,1,3) = -8π²(K*₁₃ + 2Z₁₃ + 2Z*₁₃ + 4Z*₃₁) - ζ(5) + W
/// T(1,2,2) = π²ζ(3)/6 - 3ζ(5)/2
/// T(1,3,1) = -8π²(K*₁₃ + 2Z₃₁ + 2Z*₁₃ + 4Z*₃₁) + π²ζ(3)/6 - 2ζ(5) + W
/// T(2,2,1) = 32π²Z₂₂ + π²ζ(3)/3 - 3ζ(5)
///            + L(-π²A²/45 - π⁴/180 + 4Aζ'(4)/π² - 2ζ''(4)/π²)
/// W = L(π²A²/45 - π²A/30 - π⁴/90 - 4Aζ'(4)/π² + 3ζ'(4)/π² + 2ζ''(4)/π²)
/// ```
///
/// with `L = ln 2π` and `A = γ + ln 2π`. Also checks
/// `U₁₂ = -π²/240 - ln 2 ζ(3)/(4π²)`.
pub fn weight_table_check(
    direct: &DirectConfig,
    quad: &QuadratureConfig,
) -> Result<Vec<IdentityCheck>> {
    let t = |a, b, c| tornheim_direct(&ParamTriple::ints(a, b, c), direct).map(|r| r.real());
    let z = |m, n| integral_z(m, n, quad).map(|r| r.real());
    let zs = |m, n| integral_zstar(m, n, quad).map(|r| r.real());
    let u = |m, n| integral_u(m, n, quad).map(|r| r.real());

    let l = LN_2PI_DD.to_f64();
    let a = (EULER_DD + LN_2PI_DD).to_f64();
    let pi2 = PI * PI;
    let pi4 = pi2 * pi2;
    let z3 = zeta_int_dd(3).to_f64();
    let z5 = zeta_int_dd(5).to_f64();
    let (_, d1_2, d2_2, _) = riemann_jet(2.0);
    let (_, d1_4, d2_4, _) = riemann_jet(4.0);
    let (d1_2, d2_2, d1_4, d2_4) = (d1_2.to_f64(), d2_2.to_f64(), d1_4.to_f64(), d2_4.to_f64());

    let mut out = Vec::new();

    let c111 = l * (a * a / 3.0 - pi2 / 6.0 - 4.0 * a * d1_2 / pi2 + 2.0 * d2_2 / pi2);
    let rhs = z(1, 1)? * 4.0 + zs(1, 1)? * 12.0 + (c111 - z3);
    out.push(IdentityCheck::new("T(1,1,1)", t(1, 1, 1)?, rhs));

    let u12 = u(1, 2)?;
    let rhs = u12 * (-4.0 * pi2) - (pi4 / 90.0 + z3 * LN_2);
    out.push(IdentityCheck::new("T(1,1,2)", t(1, 1, 2)?, rhs));
    let u12_closed = Real::exact(-pi2 / 240.0 - LN_2 * z3 / (4.0 * pi2));
    out.push(IdentityCheck::new("U(1,2)", u12, u12_closed));

    let rhs = (u12 + u(2, 1)? * 2.0) * (-4.0 * pi2);
    out.push(IdentityCheck::new("T(1,2,1)", t(1, 2, 1)?, rhs));

    let w = l
        * (pi2 * a * a / 45.0 - pi2 * a / 30.0 - pi4 / 90.0 - 4.0 * d1_4 * a / pi2
            + 3.0 * d1_4 / pi2
            + 2.0 * d2_4 / pi2);
    let ks13 = integral_kstar(1, 3, quad)?.real();
    let (z13, z31, zs13, zs31) = (z(1, 3)?, z(3, 1)?, zs(1, 3)?, zs(3, 1)?);
    let rhs = (ks13 + z13 * 2.0 + zs13 * 2.0 + zs31 * 4.0) * (-8.0 * pi2) + (w - z5);
    out.push(IdentityCheck::new("T(1,1,3)", t(1, 1, 3)?, rhs));

    let rhs = Real::exact(pi2 / 6.0 * z3 - 1.5 * z5);
    out.push(IdentityCheck::new("T(1,2,2)", t(1, 2, 2)?, rhs));

    let rhs = (ks13 + z31 * 2.0 + zs13 * 2.0 + zs31 * 4.0) * (-8.0 * pi2)
        + (pi2 / 6.0 * z3 - 2.0 * z5 + w);
    out.push(IdentityCheck::new("T(1,3,1)", t(1, 3, 1)?, rhs));

    let c221 = l * (-pi2 * a * a / 45.0 - pi4 / 180.0 + 4.0 * d1_4 * a / pi2 - 2.0 * d2_4 / pi2);
    let rhs = z(2, 2)? * (32.0 * pi2) + (pi2 / 3.0 * z3 - 3.0 * z5 + c221);
    out.push(IdentityCheck::new("T(2,2,1)", t(2, 2, 1)?, rhs));

    Ok(out)
}

/// For odd `m ≥ 3`, with `K_{n,m} = ∫ ψ^(-n) B_m ln Γ`:
///
/// ```text
/// K_{n,m} = -m K_{n+1,m-1} + ln √(2π) (N_{n,m} + m N_{n+1,m-1})
///           - ∫₀¹ B_m(q) ψ(q) ψ^(-n-1)(q) dq
/// ```
pub fn k_reduction_check(m: usize, n: usize, cfg: &QuadratureConfig) -> Result<IdentityCheck> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(domain(
            "k_reduction_check",
            format!("m = {m} must be odd and at least 3"),
        ));
    }
    if n == 0 {
        return Err(domain("k_reduction_check", "n must be positive"));
    }
    let lhs = integral_k(n, m, cfg)?.real();
    let tail = integrate_01(
        |q, qc| {
            bernoulli_poly_pair(m, q, qc) * digamma_dd(q).to_f64() * negapolygamma_f64(n + 1, q)
        },
        cfg,
    )?
    .real();
    let half_l = (LN_2PI_DD * 0.5).to_f64();
    let rhs = integral_k(n + 1, m - 1, cfg)?.real() * -(m as f64)
        + (integral_n(n, m)?.real() + integral_n(n + 1, m - 1)?.real() * m as f64) * half_l
        - tail;
    Ok(IdentityCheck::new(
        format!("K({n},{m}) reduction"),
        lhs,
        rhs,
    ))
}

const MZV_CUT: usize = 2000;

/// `T(a,0,c)` by direct summation against `Σ_{n>k≥1} n^-c k^-a`, the latter
/// summed over `k ≤ 2000` with inner sums `ζ(c,k+1) = ζ(c) - H_k^{(c)}`
/// and an Euler–Maclaurin tail in `k`.
pub fn mzv_check(a: u32, c: u32, direct: &DirectConfig) -> Result<IdentityCheck> {
    if a < 1 || c < 2 {
        return Err(domain("mzv_check", "need a ≥ 1 and c ≥ 2"));
    }
    let lhs = tornheim_direct(&ParamTriple::ints(a as i64, 0, c as i64), direct)?.real();

    let (af, cf) = (a as f64, c as f64);
    let mut inner = zeta_int_dd(c as i64);
    let mut sum = Dd::ZERO;
    for k in 1..=MZV_CUT {
        let kd = Dd::from(k as f64);
        inner -= Dd::ONE / kd.powi(c);
        sum += inner / kd.powi(a);
    }
    // Σ_{k>K} k^-a ζ(c,k+1), ζ(c,k+1) ~ k^{1-c}/(c-1) - k^-c/2 + Σ_j B_{2j} (c)_{2j-1}/(2j)! k^{1-c-2j}
    let q = (MZV_CUT + 1) as f64;
    let mut tail = hurwitz_any_dd(af + cf - 1.0, q) / (cf - 1.0) - hurwitz_any_dd(af + cf, q) * 0.5;
    let mut poch = 1.0;
    let mut fact = 1.0;
    for j in 1..=8usize {
        let r = 2 * j - 1;
        poch *= if j == 1 {
            cf
        } else {
            (cf + r as f64 - 2.0) * (cf + r as f64 - 1.0)
        };
        fact *= (2 * j - 1) as f64 * (2 * j) as f64;
        tail += bernoulli_dd(2 * j) * hurwitz_any_dd(af + cf + r as f64, q) * (poch / fact);
    }
    let v = sum + tail;
    let rhs = Real::from_dd(v, 1e-25 * v.hi.abs());
    Ok(IdentityCheck::new(format!("T({a},0,{c})"), lhs, rhs))
}
