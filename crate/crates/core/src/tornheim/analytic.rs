//! Identities for real parameters: the Fourier series of `ζ̄`, the
//! trigonometric relations between `T` and the `I`, `J` integrals, the
//! explicit formula for non-integer `a, b, c`, and the two-integer case.

use num::Complex;
use serde::{Deserialize, Serialize};

use crate::dd::Dd;
use crate::error::{domain, Result};
use crate::polygamma_neg::bernoulli_a_f64;
use crate::quadrature::{integral_i, integral_j, integrate_01, QuadratureConfig};
use crate::real::{ErrorKind, EvalResult, Method};
use crate::specfun::{bernoulli_poly_pair, cos_pi, hurwitz_jet, sin_pi};

use super::{tornheim_direct, DirectConfig, ParamTriple, TrigWeights};

use std::f64::consts::PI;

/// `ζ̄(z,q) = ζ(1-z, q)`.
fn zbar(z: f64, q: f64) -> f64 {
    hurwitz_jet(1.0 - z, q, 0).v.to_f64()
}

/// Both sides of `ζ̄₊(z,q) = 2 f_c(z) C(z,q)` and `ζ̄₋(z,q) = 2 f_s(z) S(z,q)`,
/// where `C`, `S` are the cosine and sine series `Σ cos|sin(2πnq) / n^z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourierResiduals {
    pub cos_series: f64,
    pub cos_zeta: f64,
    pub cos_residual: f64,
    pub sin_series: f64,
    pub sin_zeta: f64,
    pub sin_residual: f64,
}

const EULER_DIFFS: usize = 10;

/// `Σ_{n≥1} e^{2πinq} n^-z`: a partial sum, then Euler's transformation
/// `Σ_{m≥0} w^m f(M+m) = Σ_j Δ^j f(M) w^j / (1-w)^{j+1}` for the rest.
fn trig_series(z: f64, q: f64) -> Complex<f64> {
    let w = Complex::new(cos_pi(2.0 * q), sin_pi(2.0 * q));
    let one_minus_w = Complex::new(1.0, 0.0) - w;
    let gap = one_minus_w.norm();
    let n = 1000usize.max((4.0 * (z + EULER_DIFFS as f64) / gap).ceil() as usize);

    let (mut re, mut im) = (Dd::ZERO, Dd::ZERO);
    for k in 1..=n {
        let x = 2.0 * (k as f64 * q).fract();
        let f = Dd::from(k as f64).powf(-z);
        re += f * cos_pi(x);
        im += f * sin_pi(x);
    }

    let m = n + 1;
    let mut diffs: Vec<Dd> = (0..=EULER_DIFFS)
        .map(|i| Dd::from((m + i) as f64).powf(-z))
        .collect();
    let mut tail = Complex::new(0.0, 0.0);
    let mut ratio = Complex::new(1.0, 0.0) / one_minus_w;
    for _ in 0..=EULER_DIFFS {
        tail += ratio * diffs[0].to_f64();
        for i in 0..diffs.len() - 1 {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        diffs.pop();
        ratio = ratio * w / one_minus_w;
    }
    let x = 2.0 * (m as f64 * q).fract();
    let wm = Complex::new(cos_pi(x), sin_pi(x));
    Complex::new(re.to_f64(), im.to_f64()) + wm * tail
}

/// Residuals of the cosine and sine forms of the Fourier series of `ζ̄`.
pub fn fourier_identity_check(z: f64, q: f64) -> Result<FourierResiduals> {
    if !(z > 1.0) || !z.is_finite() {
        return Err(domain(
            "fourier_identity_check",
            format!("z = {z} must exceed 1"),
        ));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(domain(
            "fourier_identity_check",
            format!("q = {q} must lie in (0, 1)"),
        ));
    }
    let s = trig_series(z, q);
    let tw = TrigWeights::at(z);
    let cos_series = 2.0 * tw.f_c * s.re;
    let sin_series = 2.0 * tw.f_s * s.im;
    let cos_zeta = zbar(z, q) + zbar(z, 1.0 - q);
    let sin_zeta = zbar(z, q) - zbar(z, 1.0 - q);
    Ok(FourierResiduals {
        cos_series,
        cos_zeta,
        cos_residual: (cos_series - cos_zeta).abs(),
        sin_series,
        sin_zeta,
        sin_residual: (sin_series - sin_zeta).abs(),
    })
}

/// Both sides of
/// `f_c(a) f_c(b) f_c(c) T^sym = I + J^sym` and
/// `f_s(a) f_s(b) f_c(c) T^nsym = I - J^nsym`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prop31Residuals {
    pub sym_lhs: f64,
    pub sym_rhs: f64,
    pub sym_residual: f64,
    pub nsym_lhs: f64,
    pub nsym_rhs: f64,
    pub nsym_residual: f64,
    /// Combined error estimate of the two sides.
    pub err: f64,
}

/// Checks the trigonometric relations with `T` by direct summation and
/// `I`, `J` by quadrature.
pub fn prop31_check(
    a: f64,
    b: f64,
    c: f64,
    direct: &DirectConfig,
    quad: &QuadratureConfig,
) -> Result<Prop31Residuals> {
    let t = |x, y, z| tornheim_direct(&ParamTriple::new(x, y, z), direct).map(|r| r.real());
    let (tabc, tbca, tcab) = (t(a, b, c)?, t(b, c, a)?, t(c, a, b)?);
    let j = |x, y, z| integral_j(x, y, z, quad).map(|r| r.real());
    let (jabc, jbca, jcab) = (j(a, b, c)?, j(b, c, a)?, j(c, a, b)?);
    let i = integral_i(a, b, c, quad)?.real();

    let (wa, wb, wc) = (TrigWeights::at(a), TrigWeights::at(b), TrigWeights::at(c));
    let sym_lhs = (tabc + tbca + tcab) * (wa.f_c * wb.f_c * wc.f_c);
    let sym_rhs = i + jabc + jbca + jcab;
    let nsym_lhs = (tbca + tcab - tabc) * (wa.f_s * wb.f_s * wc.f_c);
    let nsym_rhs = i - (jbca + jcab - jabc);
    Ok(Prop31Residuals {
        sym_lhs: sym_lhs.value,
        sym_rhs: sym_rhs.value,
        sym_residual: (sym_lhs.value - sym_rhs.value).abs(),
        nsym_lhs: nsym_lhs.value,
        nsym_rhs: nsym_rhs.value,
        nsym_residual: (nsym_lhs.value - nsym_rhs.value).abs(),
        err: sym_lhs.err + sym_rhs.err + nsym_lhs.err + nsym_rhs.err,
    })
}

/// Parameters closer than this to an integer are rejected by
/// [`tornheim_analytic`].
pub const INTEGER_GUARD: f64 = 1e-3;

fn near_integer(x: f64) -> bool {
    (x - x.round()).abs() < INTEGER_GUARD * (1.0 - 1e-9)
}

/// `T(a,b,c) = 4λ(a)λ(b)λ(c) sin(πc/2) [cos(π(a-b)/2)(J(c,a,b) + J(c,b,a))
///   - cos(π(a+b)/2)(I(a,b,c) + J(a,b,c))]` for non-integer parameters.
pub fn tornheim_analytic(a: f64, b: f64, c: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    for (name, x) in [("a", a), ("b", b), ("c", c)] {
        if near_integer(x) {
            return Err(domain(
                "tornheim_analytic",
                format!("{name} = {x} is within {INTEGER_GUARD:e} of an integer"),
            ));
        }
    }
    ParamTriple::new(a, b, c).check_gate()?;
    let j = |x, y, z| integral_j(x, y, z, cfg).map(|r| r.real());
    let i = integral_i(a, b, c, cfg)?.real();
    let inner = (j(c, a, b)? + j(c, b, a)?) * cos_pi((a - b) / 2.0)
        - (i + j(a, b, c)?) * cos_pi((a + b) / 2.0);
    let pre = 4.0
        * TrigWeights::at(a).lambda
        * TrigWeights::at(b).lambda
        * TrigWeights::at(c).lambda
        * sin_pi(c / 2.0);
    Ok(EvalResult::new(
        inner * pre,
        Method::AnalyticIJ,
        ErrorKind::Heuristic,
    ))
}

/// `T(n1, n2, c)` for positive integers `n1, n2` and non-integer `c`, from
/// integrals of `B_n`, `A_n` against `ζ̄(c,q)` and `ζ̄₊(c,q)`.
pub fn tornheim_two_int(n1: u32, n2: u32, c: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    if n1 == 0 || n2 == 0 {
        return Err(domain("tornheim_two_int", "n1 and n2 must be positive"));
    }
    if c == c.round() || !c.is_finite() {
        return Err(domain(
            "tornheim_two_int",
            format!("c = {c} must not be an integer"),
        ));
    }
    ParamTriple::new(n1 as f64, n2 as f64, c).check_gate()?;
    // the even index goes first
    let (n1, n2) = if n1 % 2 == 1 && n2.is_multiple_of(2) {
        (n2 as usize, n1 as usize)
    } else {
        (n1 as usize, n2 as usize)
    };
    let zp = |q: f64, qc: f64| zbar(c, q) + zbar(c, qc);
    let b = |n, q, qc| bernoulli_poly_pair(n, q, qc);
    let a = |n, q: f64| bernoulli_a_f64(n, q);
    let quad = |f: &dyn Fn(f64, f64) -> f64| integrate_01(f, cfg).map(|r| r.real());

    let fact = |n: usize| (1..=n).fold(1.0, |acc, i| acc * i as f64);
    let pre = (2.0 * PI).powi((n1 + n2) as i32) / (4.0 * fact(n1) * fact(n2)) * (2.0 * PI).powf(c)
        / (crate::specfun::gamma(c)? * cos_pi(c / 2.0));
    let pi2 = PI * PI;

    let body = match (n1 % 2, n2 % 2) {
        (0, 0) | (1, 1) => {
            let bb = quad(&|q, qc| b(n1, q, qc) * b(n2, q, qc) * zbar(c, q))?;
            let aa = quad(&|q, qc| a(n1, q) * a(n2, q) * zp(q, qc))?;
            let aar = quad(&|q, qc| a(n1, q) * a(n2, qc) * zp(q, qc))?;
            let e = ((n1 + n2) / 2) % 2;
            let sign = if e == 0 { 1.0 } else { -1.0 };
            if n1 % 2 == 0 {
                (bb - aa / pi2 + aar / pi2) * sign
            } else {
                (bb - aa / pi2 - aar / pi2) * sign
            }
        }
        _ => {
            let ba = quad(&|q, qc| b(n1, q, qc) * a(n2, q) * zp(q, qc))?;
            let ab = quad(&|q, qc| a(n1, q) * b(n2, q, qc) * zp(q, qc))?;
            let e = (n1 + n2).div_ceil(2) % 2;
            let sign = if e == 0 { 1.0 } else { -1.0 };
            (ba + ab) / PI * sign
        }
    };
    Ok(EvalResult::new(
        body * pre,
        Method::TwoIntLimit,
        ErrorKind::Heuristic,
    ))
}
