//! Named integrals over (0,1): closed forms where they are known, and
//! quadrature for everything, memoized per configuration.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{integrate_01, QuadratureConfig};
use crate::dd::Dd;
use crate::error::{domain, Error, Result};
use crate::polygamma_neg::negapolygamma_f64;
use crate::real::{ErrorKind, EvalResult, Method, Real};
use crate::specfun::{
    bernoulli_poly_pair, cos_pi, hurwitz_jet, ln_gamma_dd, riemann_jet, sin_pi, EULER_DD, LN_2PI_DD,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IntegralFamily {
    I,
    J,
    N,
    M,
    Mstar,
    K,
    Kstar,
    Z,
    Zstar,
    U,
    TwoZetaSame,
    TwoZetaReflected,
}

impl IntegralFamily {
    fn arity(self) -> usize {
        match self {
            Self::I | Self::J => 3,
            _ => 2,
        }
    }

    fn integer_indices(self) -> bool {
        !matches!(
            self,
            Self::I | Self::J | Self::TwoZetaSame | Self::TwoZetaReflected
        )
    }
}

impl fmt::Display for IntegralFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::I => "I",
            Self::J => "J",
            Self::N => "N",
            Self::M => "M",
            Self::Mstar => "M*",
            Self::K => "K",
            Self::Kstar => "K*",
            Self::Z => "Z",
            Self::Zstar => "Z*",
            Self::U => "U",
            Self::TwoZetaSame => "two-zeta",
            Self::TwoZetaReflected => "two-zeta-reflected",
        };
        f.write_str(s)
    }
}

/// A member of one of the integral families, e.g. `N(1,2)` or `I(2,2,2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegralId {
    pub family: IntegralFamily,
    pub indices: Vec<f64>,
}

impl IntegralId {
    pub fn new(family: IntegralFamily, indices: &[f64]) -> Result<Self> {
        if indices.len() != family.arity() {
            return Err(domain(
                "IntegralId",
                format!(
                    "{family} takes {} indices, got {}",
                    family.arity(),
                    indices.len()
                ),
            ));
        }
        if family.integer_indices() && indices.iter().any(|&x| !(x >= 1.0 && x == x.round())) {
            return Err(domain(
                "IntegralId",
                format!("{family} needs positive integer indices"),
            ));
        }
        Ok(Self {
            family,
            indices: indices.to_vec(),
        })
    }

    fn int(&self, i: usize) -> usize {
        self.indices[i] as usize
    }

    /// Closed form where one exists, quadrature otherwise.
    pub fn evaluate(&self, cfg: &QuadratureConfig) -> Result<EvalResult> {
        let x = &self.indices;
        match self.family {
            IntegralFamily::N => integral_n(self.int(0), self.int(1)),
            IntegralFamily::M => integral_m(self.int(0), self.int(1)),
            IntegralFamily::Mstar => integral_mstar(self.int(0), self.int(1)),
            IntegralFamily::TwoZetaSame => two_zeta_integral(x[0], x[1], false),
            IntegralFamily::TwoZetaReflected => two_zeta_integral(x[0], x[1], true),
            _ => self.quadrature(cfg),
        }
    }

    /// Always by quadrature.
    pub fn quadrature(&self, cfg: &QuadratureConfig) -> Result<EvalResult> {
        let key = format!(
            "{self}|{:x}|{}|{:x}",
            cfg.target_tol.to_bits(),
            cfg.max_levels,
            cfg.endpoint_clip.to_bits()
        );
        if let Some(hit) = cache().lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return Ok(*hit);
        }
        let x = self.indices.clone();
        let (m, n) = (x[0] as usize, x.get(1).copied().unwrap_or(0.0) as usize);
        let r = match self.family {
            IntegralFamily::I => {
                check_zbar_args("integral_i", &x)?;
                integrate_01(|q, _| zbar(x[0], q) * zbar(x[1], q) * zbar(x[2], q), cfg)
            }
            IntegralFamily::J => {
                check_zbar_args("integral_j", &x)?;
                integrate_01(|q, qc| zbar(x[0], q) * zbar(x[1], q) * zbar(x[2], qc), cfg)
            }
            IntegralFamily::N => integrate_01(
                |q, qc| negapolygamma_f64(m, q) * bernoulli_poly_pair(n, q, qc),
                cfg,
            ),
            IntegralFamily::M => integrate_01(
                |q, _| negapolygamma_f64(m, q) * negapolygamma_f64(n, q),
                cfg,
            ),
            IntegralFamily::Mstar => integrate_01(
                |q, qc| negapolygamma_f64(m, q) * negapolygamma_f64(n, qc),
                cfg,
            ),
            IntegralFamily::K => integrate_01(
                |q, qc| negapolygamma_f64(m, q) * bernoulli_poly_pair(n, q, qc) * ln_gamma(q),
                cfg,
            ),
            IntegralFamily::Kstar => integrate_01(
                |q, qc| negapolygamma_f64(m, qc) * bernoulli_poly_pair(n, q, qc) * ln_gamma(q),
                cfg,
            ),
            IntegralFamily::Z => integrate_01(
                |q, _| negapolygamma_f64(m, q) * negapolygamma_f64(n, q) * ln_gamma(q),
                cfg,
            ),
            IntegralFamily::Zstar => integrate_01(
                |q, qc| negapolygamma_f64(m, q) * negapolygamma_f64(n, qc) * ln_gamma(q),
                cfg,
            ),
            IntegralFamily::U => integrate_01(
                |q, qc| negapolygamma_f64(m, q) * bernoulli_poly_pair(n, q, qc) * ln_sin_pi(q, qc),
                cfg,
            ),
            IntegralFamily::TwoZetaSame | IntegralFamily::TwoZetaReflected => {
                check_two_zeta(x[0], x[1])?;
                let refl = self.family == IntegralFamily::TwoZetaReflected;
                integrate_01(
                    |q, qc| zbar(x[0], q) * zbar(x[1], if refl { qc } else { q }),
                    cfg,
                )
            }
        }?;
        cache()
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert(key, r);
        Ok(r)
    }
}

impl fmt::Display for IntegralId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|x| format!("{x}")).collect();
        write!(f, "{}({})", self.family, parts.join(","))
    }
}

fn cache() -> &'static Mutex<HashMap<String, EvalResult>> {
    static CACHE: OnceLock<Mutex<HashMap<String, EvalResult>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `ζ̄(a,q) = ζ(1-a,q)`.
fn zbar(a: f64, q: f64) -> f64 {
    hurwitz_jet(1.0 - a, q, 0).v.to_f64()
}

fn ln_gamma(q: f64) -> f64 {
    ln_gamma_dd(q).to_f64()
}

fn ln_sin_pi(q: f64, qc: f64) -> f64 {
    sin_pi(q.min(qc)).ln()
}

fn check_zbar_args(func: &'static str, x: &[f64]) -> Result<()> {
    for &a in x {
        if a == 0.0 {
            return Err(Error::Pole { func, at: a });
        }
        if !a.is_finite() {
            return Err(domain(func, format!("parameter {a} must be finite")));
        }
    }
    Ok(())
}

fn check_two_zeta(a: f64, b: f64) -> Result<()> {
    if !(a > 1.0 && b > 1.0) || !a.is_finite() || !b.is_finite() {
        return Err(domain(
            "two_zeta_integral",
            format!("a = {a}, b = {b} must exceed 1"),
        ));
    }
    Ok(())
}

fn id(family: IntegralFamily, x: &[f64]) -> IntegralId {
    IntegralId {
        family,
        indices: x.to_vec(),
    }
}

fn check_orders(func: &'static str, m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(domain(func, "indices must be at least 1"));
    }
    Ok(())
}

/// `I(a,b,c) = ∫₀¹ ζ̄(a,q) ζ̄(b,q) ζ̄(c,q) dq`.
pub fn integral_i(a: f64, b: f64, c: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    id(IntegralFamily::I, &[a, b, c]).quadrature(cfg)
}

/// `J(a,b,c) = ∫₀¹ ζ̄(a,q) ζ̄(b,q) ζ̄(c,1-q) dq`.
pub fn integral_j(a: f64, b: f64, c: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    id(IntegralFamily::J, &[a, b, c]).quadrature(cfg)
}

struct Jet {
    v: Dd,
    d1: Dd,
    d2: Dd,
    err: f64,
}

fn jet(s: usize) -> Jet {
    let (v, d1, d2, err) = riemann_jet(s as f64);
    Jet { v, d1, d2, err }
}

fn a_dd() -> Dd {
    EULER_DD + LN_2PI_DD
}

fn closed(v: Dd, err: f64) -> EvalResult {
    let err = err + 1e-30 * v.hi.abs() + 0.5 * f64::EPSILON * v.hi.abs();
    EvalResult::new(
        Real::from_dd(v, err),
        Method::ClosedForm,
        ErrorKind::Rigorous,
    )
}

fn two_pi_pow(s: usize) -> Dd {
    (Dd::PI * 2.0).powi(s as u32)
}

/// `N_{m,n} = ∫₀¹ ψ^(-m)(q) B_n(q) dq` in closed form.
pub fn integral_n(m: usize, n: usize) -> Result<EvalResult> {
    check_orders("integral_n", m, n)?;
    let s = m + n;
    let z = jet(s);
    let nf = (1..=n).fold(Dd::ONE, |acc, i| acc * i as f64);
    let half = (n as f64 - m as f64) / 2.0;
    let inner = Dd::PI * 0.5 * z.v * sin_pi(half) - (a_dd() * z.v - z.d1) * cos_pi(half);
    let scale = nf * 2.0 / two_pi_pow(s);
    Ok(closed(scale * inner, scale.hi.abs() * 4.0 * z.err))
}

/// `N_{m,n}` by quadrature.
pub fn integral_n_quad(m: usize, n: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_n", m, n)?;
    id(IntegralFamily::N, &[m as f64, n as f64]).quadrature(cfg)
}

/// `M_{k,k'} = ∫₀¹ ψ^(-k)(q) ψ^(-k')(q) dq` in closed form.
pub fn integral_m(k: usize, kp: usize) -> Result<EvalResult> {
    check_orders("integral_m", k, kp)?;
    let s = k + kp;
    let z = jet(s);
    let a = a_dd();
    let a_plus = a * a + Dd::PI * Dd::PI * 0.25;
    let c = cos_pi((k as f64 - kp as f64) / 2.0);
    let inner = a_plus * z.v - a * z.d1 * 2.0 + z.d2;
    let scale = Dd::from(2.0) / two_pi_pow(s);
    Ok(closed(scale * inner * c, scale.hi * 20.0 * z.err))
}

/// `M_{k,k'}` by quadrature.
pub fn integral_m_quad(k: usize, kp: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_m", k, kp)?;
    id(IntegralFamily::M, &[k as f64, kp as f64]).quadrature(cfg)
}

/// `M*_{k,k'} = ∫₀¹ ψ^(-k)(q) ψ^(-k')(1-q) dq` in closed form.
pub fn integral_mstar(k: usize, kp: usize) -> Result<EvalResult> {
    check_orders("integral_mstar", k, kp)?;
    let s = k + kp;
    let z = jet(s);
    let a = a_dd();
    let a_minus = a * a - Dd::PI * Dd::PI * 0.25;
    let half = s as f64 / 2.0;
    let inner = (a_minus * z.v - a * z.d1 * 2.0 + z.d2) * cos_pi(half)
        + Dd::PI * (a * z.v - z.d1) * sin_pi(half);
    let scale = Dd::from(2.0) / two_pi_pow(s);
    Ok(closed(scale * inner, scale.hi * 20.0 * z.err))
}

/// `M*_{k,k'}` by quadrature.
pub fn integral_mstar_quad(k: usize, kp: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_mstar", k, kp)?;
    id(IntegralFamily::Mstar, &[k as f64, kp as f64]).quadrature(cfg)
}

/// `K_{m,n} = ∫₀¹ ψ^(-m)(q) B_n(q) ln Γ(q) dq`.
pub fn integral_k(m: usize, n: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_k", m, n)?;
    id(IntegralFamily::K, &[m as f64, n as f64]).quadrature(cfg)
}

/// `K*_{m,n} = ∫₀¹ ψ^(-m)(1-q) B_n(q) ln Γ(q) dq`.
pub fn integral_kstar(m: usize, n: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_kstar", m, n)?;
    id(IntegralFamily::Kstar, &[m as f64, n as f64]).quadrature(cfg)
}

/// `Z_{m,n} = ∫₀¹ ψ^(-m)(q) ψ^(-n)(q) ln Γ(q) dq`.
pub fn integral_z(m: usize, n: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_z", m, n)?;
    id(IntegralFamily::Z, &[m as f64, n as f64]).quadrature(cfg)
}

/// `Z*_{m,n} = ∫₀¹ ψ^(-m)(q) ψ^(-n)(1-q) ln Γ(q) dq`.
pub fn integral_zstar(m: usize, n: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_zstar", m, n)?;
    id(IntegralFamily::Zstar, &[m as f64, n as f64]).quadrature(cfg)
}

/// `U_{m,n} = ∫₀¹ ψ^(-m)(q) B_n(q) ln sin(πq) dq`.
pub fn integral_u(m: usize, n: usize, cfg: &QuadratureConfig) -> Result<EvalResult> {
    check_orders("integral_u", m, n)?;
    id(IntegralFamily::U, &[m as f64, n as f64]).quadrature(cfg)
}

/// `∫₀¹ ζ̄(a,q) ζ̄(b,q) dq`, or with `ζ̄(b,1-q)` when `reflected`, for
/// `a, b > 1`: `2Γ(a)Γ(b) ζ(a+b) cos(π(a∓b)/2) / (2π)^{a+b}`.
pub fn two_zeta_integral(a: f64, b: f64, reflected: bool) -> Result<EvalResult> {
    check_two_zeta(a, b)?;
    let s = a + b;
    let (z, _, _, zerr) = riemann_jet(s);
    let lg = ln_gamma_dd(a) + ln_gamma_dd(b) - (Dd::PI * 2.0).ln() * s;
    let scale = lg.exp() * 2.0;
    let c = cos_pi(if reflected { s } else { a - b } / 2.0);
    let v = scale * z * c;
    let err = scale.hi.abs() * zerr + 1e-28 * v.hi.abs() + 2.0 * f64::EPSILON * scale.hi.abs();
    Ok(EvalResult::new(
        Real::from_dd(v, err),
        Method::ClosedForm,
        ErrorKind::Rigorous,
    ))
}

/// [`two_zeta_integral`] by quadrature.
pub fn two_zeta_integral_quad(
    a: f64,
    b: f64,
    reflected: bool,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    let family = if reflected {
        IntegralFamily::TwoZetaReflected
    } else {
        IntegralFamily::TwoZetaSame
    };
    id(family, &[a, b]).quadrature(cfg)
}

/// Moments `L_k = ∫₀¹ ln^k Γ(q) dq` for `k = 1, 2, 3`, with the known
/// closed forms of the first two.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LogGammaMoments {
    pub l1: EvalResult,
    pub l1_closed: f64,
    pub l2: EvalResult,
    pub l2_closed: f64,
    pub l3: EvalResult,
}

impl LogGammaMoments {
    pub fn l1_residual(&self) -> f64 {
        (self.l1.value - self.l1_closed).abs()
    }

    pub fn l2_residual(&self) -> f64 {
        (self.l2.value - self.l2_closed).abs()
    }
}

/// Integrates the first three powers of `ln Γ` and compares the first two
/// with `L₁ = ln √(2π)` and
/// `L₂ = γ²/12 + π²/48 + γL₁/3 + 4L₁²/3 - Aζ'(2)/π² + ζ''(2)/(2π²)`.
pub fn loggamma_moments_check(cfg: &QuadratureConfig) -> Result<LogGammaMoments> {
    let l1 = integrate_01(|q, _| ln_gamma(q), cfg)?;
    let l2 = integrate_01(|q, _| ln_gamma(q).powi(2), cfg)?;
    let l3 = integrate_01(|q, _| ln_gamma(q).powi(3), cfg)?;
    let g = EULER_DD;
    let l1c = LN_2PI_DD * 0.5;
    let (_, d1, d2, _) = riemann_jet(2.0);
    let pi2 = Dd::PI * Dd::PI;
    let l2c = g * g / 12.0 + pi2 / 48.0 + g * l1c / 3.0 + l1c * l1c * (4.0 / 3.0)
        - a_dd() * d1 / pi2
        + d2 / (pi2 * 2.0);
    Ok(LogGammaMoments {
        l1,
        l1_closed: l1c.to_f64(),
        l2,
        l2_closed: l2c.to_f64(),
        l3,
    })
}
