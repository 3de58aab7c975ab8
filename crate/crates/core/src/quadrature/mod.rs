//! Tanh-sinh quadrature on (0,1) and the catalog of integrals built on it.

mod catalog;

pub use catalog::{
    integral_i, integral_j, integral_k, integral_kstar, integral_m, integral_m_quad,
    integral_mstar, integral_mstar_quad, integral_n, integral_n_quad, integral_u, integral_z,
    integral_zstar, loggamma_moments_check, two_zeta_integral, two_zeta_integral_quad,
    IntegralFamily, IntegralId, LogGammaMoments,
};

use crate::dd::Dd;
use crate::error::{domain, Error, Result};
use crate::real::{ErrorKind, EvalResult, Method, Real};
use std::f64::consts::PI;

/// Tolerances for [`integrate_01`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute tolerance on the difference of successive levels.
    pub target_tol: f64,
    pub max_levels: usize,
    /// Nodes closer than this to either endpoint are dropped.
    pub endpoint_clip: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            target_tol: 1e-12,
            max_levels: 10,
            endpoint_clip: 1e-30,
        }
    }
}

impl QuadratureConfig {
    pub fn new(target_tol: f64, max_levels: usize, endpoint_clip: f64) -> Result<Self> {
        if !(target_tol > 0.0) {
            return Err(domain("QuadratureConfig", "target_tol must be positive"));
        }
        if max_levels == 0 {
            return Err(domain("QuadratureConfig", "max_levels must be positive"));
        }
        if !(endpoint_clip > 0.0 && endpoint_clip <= 1e-6) {
            return Err(domain(
                "QuadratureConfig",
                "endpoint_clip must lie in (0, 1e-6]",
            ));
        }
        Ok(Self {
            target_tol,
            max_levels,
            endpoint_clip,
        })
    }

    /// Default configuration with a different tolerance.
    pub fn with_tol(target_tol: f64) -> Self {
        Self {
            target_tol,
            ..Self::default()
        }
    }
}

const H0: f64 = 0.5;
const MIN_LEVELS: usize = 3;

/// `q`, `1-q` and the weight `dq/dt` at abscissa `t`.
fn node(t: f64) -> (f64, f64, f64) {
    let u = PI * t.sinh();
    let q = 1.0 / (1.0 + (-u).exp());
    let qc = 1.0 / (1.0 + u.exp());
    (q, qc, PI * t.cosh() * q * qc)
}

/// `∫₀¹ f dq` by tanh-sinh. The integrand receives `(q, 1-q)`, both accurate
/// near either endpoint.
pub fn integrate_01<F>(f: F, cfg: &QuadratureConfig) -> Result<EvalResult>
where
    F: Fn(f64, f64) -> f64,
{
    let t_max = ((1.0 / cfg.endpoint_clip).ln() / PI).asinh();
    let mut sum = Dd::ZERO;
    let mut abs_sum = 0.0;
    let eval = |t: f64, sum: &mut Dd, abs_sum: &mut f64| -> Result<()> {
        let (q, qc, w) = node(t);
        if q.min(qc) < cfg.endpoint_clip {
            return Ok(());
        }
        let v = f(q, qc);
        if !v.is_finite() {
            return Err(domain(
                "integrate_01",
                format!("integrand not finite at q = {q:e}"),
            ));
        }
        *sum += w * v;
        *abs_sum += (w * v).abs();
        Ok(())
    };

    let n0 = (t_max / H0).floor() as i64;
    for k in -n0..=n0 {
        eval(k as f64 * H0, &mut sum, &mut abs_sum)?;
    }
    let mut h = H0;
    let mut prev = (sum * h).to_f64();
    let mut diff = f64::INFINITY;
    for level in 1..=cfg.max_levels {
        h *= 0.5;
        let n = (t_max / h).floor() as i64;
        let mut k = -n + if n % 2 == 0 { 1 } else { 0 };
        while k <= n {
            eval(k as f64 * h, &mut sum, &mut abs_sum)?;
            k += 2;
        }
        let cur = (sum * h).to_f64();
        diff = (cur - prev).abs();
        let floor = 8.0 * f64::EPSILON * abs_sum * h;
        if level >= MIN_LEVELS.min(cfg.max_levels) && (diff <= cfg.target_tol || diff <= floor) {
            let err = diff.max(floor);
            return Ok(EvalResult::new(
                Real::new(cur, err),
                Method::Quadrature,
                ErrorKind::Heuristic,
            ));
        }
        prev = cur;
    }
    Err(Error::NotConverged {
        best: prev,
        diff,
        levels: cfg.max_levels,
    })
}
