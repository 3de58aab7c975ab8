//! Integer arguments through the parity assembly: `T(n1,n2,n3)` is a
//! combination of integrals `R_j`, which reduce to integrals `Q_j` of
//! Bernoulli polynomials and negapolygammas, which in turn reduce to the
//! catalog integrals `K, K*, Z, Z*, N, M, M*`.
//!
//! ```text
//! Q1 = ∫ B B B    Q2 = ∫ B B ψ    Q3 = ∫ ψ ψ B    Q4 = ∫ ψ ψ̃ B
//! Q5 = ∫ ψ ψ ψ    Q6 = ∫ ψ ψ ψ̃
//! ```
//! where `ψ = ψ^(-n)(q)` and `ψ̃ = ψ^(-n)(1-q)` in the matching slot.

use std::collections::HashMap;

use crate::bernoulli_algebra::integral_bbb_real;
use crate::dd::Dd;
use crate::error::{domain, Result};
use crate::polygamma_neg::{bernoulli_a_f64, negapolygamma_f64};
use crate::quadrature::{
    integral_k, integral_kstar, integral_m, integral_mstar, integral_n, integral_z, integral_zstar,
    integrate_01, QuadratureConfig,
};
use crate::real::{ErrorKind, EvalResult, Method, Real};
use crate::specfun::{
    bernoulli_dd, bernoulli_poly_pair, cos_pi, h, riemann_jet, sin_pi, EULER_DD, LN_2PI_DD,
    ZETA_PRIME_0,
};

use std::f64::consts::PI;

fn check_family(func: &'static str, j: u8, n: [usize; 3]) -> Result<()> {
    if !(1..=6).contains(&j) {
        return Err(domain(func, format!("family {j} must lie in 1..=6")));
    }
    if n.contains(&0) {
        return Err(domain(func, "indices must be positive"));
    }
    Ok(())
}

fn fact(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

fn sign(odd: bool) -> f64 {
    if odd {
        -1.0
    } else {
        1.0
    }
}

/// `Q2(n1,n2,n3) = ∫₀¹ B_{n1} B_{n2} ψ^(-n3) dq` in closed form:
/// `2(-1)^{n3} Σ_k [n1 C(n2,2k) + n2 C(n1,2k)] (n1+n2-2k-1)! (-1)^k B_{2k} / (2π)^{α-2k}
///   · {π/2 sin(πα/2) ζ(α-2k) - cos(πα/2) [A ζ(α-2k) - ζ'(α-2k)]}`.
pub fn q2_closed(n1: usize, n2: usize, n3: usize) -> Result<EvalResult> {
    check_family("q2_closed", 2, [n1, n2, n3])?;
    let alpha = n1 + n2 + n3;
    let a = EULER_DD + LN_2PI_DD;
    let (s, c) = (sin_pi(alpha as f64 / 2.0), cos_pi(alpha as f64 / 2.0));
    let mut sum = Dd::ZERO;
    let mut err = 0.0;
    for k in 0..=(n1 / 2).max(n2 / 2) {
        let (z, d1, _, ze) = riemann_jet((alpha - 2 * k) as f64);
        let t = (Dd::PI * 0.5 * z * s - (a * z - d1) * c) * coef(n1, n2, k, alpha);
        err += t.hi.abs() * 1e-30 + ze * coef(n1, n2, k, alpha).hi.abs() * 4.0;
        sum += t;
    }
    let v = sum * (2.0 * sign(n3 % 2 == 1));
    Ok(EvalResult::new(
        Real::from_dd(v, 2.0 * err),
        Method::ClosedForm,
        ErrorKind::Rigorous,
    ))
}

/// `[n1 C(n2,2k) + n2 C(n1,2k)] (n1+n2-2k-1)! (-1)^k B_{2k} / (2π)^{α-2k}`.
fn coef(n1: usize, n2: usize, k: usize, alpha: usize) -> Dd {
    let binom = |n: usize, r: usize| -> f64 {
        if r > n {
            0.0
        } else {
            (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as f64
        }
    };
    let c = n1 as f64 * binom(n2, 2 * k) + n2 as f64 * binom(n1, 2 * k);
    let f = (1..n1 + n2 - 2 * k).fold(Dd::ONE, |acc, i| acc * i as f64);
    bernoulli_dd(2 * k) * f * (c * sign(k % 2 == 1)) / (Dd::PI * 2.0).powi((alpha - 2 * k) as u32)
}

/// [`q2_closed`] for odd `α = 2N+1`, where the cosine terms drop out:
/// `π(-1)^{N+n3} Σ_k [..] ζ(α-2k)`.
pub fn q2_closed_alpha_odd(n1: usize, n2: usize, n3: usize) -> Result<EvalResult> {
    check_family("q2_closed_alpha_odd", 2, [n1, n2, n3])?;
    let alpha = n1 + n2 + n3;
    if alpha.is_multiple_of(2) {
        return Err(domain(
            "q2_closed_alpha_odd",
            format!("α = {alpha} must be odd"),
        ));
    }
    let mut sum = Dd::ZERO;
    let mut err = 0.0;
    for k in 0..=(n1 / 2).max(n2 / 2) {
        let (z, _, _, ze) = riemann_jet((alpha - 2 * k) as f64);
        let cf = coef(n1, n2, k, alpha);
        sum += z * cf;
        err += ze * cf.hi.abs() + 1e-30 * (z * cf).hi.abs();
    }
    let v = sum * Dd::PI * sign(((alpha - 1) / 2 + n3) % 2 == 1);
    Ok(EvalResult::new(
        Real::from_dd(v, 4.0 * err),
        Method::ClosedForm,
        ErrorKind::Rigorous,
    ))
}

struct QMachine<'a> {
    cfg: &'a QuadratureConfig,
    memo: HashMap<(u8, usize, usize, usize), Real>,
}

impl<'a> QMachine<'a> {
    fn new(cfg: &'a QuadratureConfig) -> Self {
        Self {
            cfg,
            memo: HashMap::new(),
        }
    }

    fn q(&mut self, j: u8, n1: usize, n2: usize, n3: usize) -> Result<Real> {
        if let Some(r) = self.memo.get(&(j, n1, n2, n3)) {
            return Ok(*r);
        }
        let zp0 = ZETA_PRIME_0;
        let cfg = self.cfg;
        let n3f = (n3 + 1) as f64;
        let r = match j {
            1 => integral_bbb_real(n1, n2, n3),
            2 => q2_closed(n1, n2, n3)?.real(),
            3 if n1 > 1 && n2 > 1 => {
                (-self.q(3, n1 - 1, n2, n3 + 1)? - self.q(3, n1, n2 - 1, n3 + 1)?) / n3f
            }
            3 => {
                let m = n1.max(n2);
                integral_k(m, n3, cfg)?.real() + integral_n(m, n3)?.real() * zp0
            }
            4 if n1 > 1 && n2 > 1 => {
                (self.q(4, n1, n2 - 1, n3 + 1)? - self.q(4, n1 - 1, n2, n3 + 1)?) / n3f
            }
            4 => {
                let m = n1.max(n2);
                let base = integral_kstar(m, n3, cfg)?.real()
                    + integral_n(m, n3)?.real() * (zp0 * sign(n3 % 2 == 1));
                if n1 == 1 {
                    base
                } else {
                    base * sign(n3 % 2 == 1)
                }
            }
            5 if n1 > 1 && n2 > 1 => {
                -self.q(5, n1 - 1, n2, n3 + 1)? - self.q(5, n1, n2 - 1, n3 + 1)?
            }
            5 => {
                let m = n1.max(n2);
                integral_z(m, n3, cfg)?.real() + integral_m(m, n3)?.real() * zp0
            }
            6 if n1 > 1 && n2 > 1 => {
                self.q(6, n1 - 1, n2, n3 + 1)? + self.q(6, n1, n2 - 1, n3 + 1)?
            }
            6 => {
                let m = n1.max(n2);
                integral_zstar(m, n3, cfg)?.real() + integral_mstar(m, n3)?.real() * zp0
            }
            _ => unreachable!(),
        };
        self.memo.insert((j, n1, n2, n3), r);
        Ok(r)
    }

    fn r(&mut self, j: u8, n1: usize, n2: usize, n3: usize) -> Result<Real> {
        let (h1, h2, h3) = (h(n1).value, h(n2).value, h(n3).value);
        let (f1, f2, f3) = (fact(n1), fact(n2), fact(n3));
        let q2 = |a, b, c| q2_closed(a, b, c).map(|r| r.real());
        let q1 = integral_bbb_real(n1, n2, n3);
        let s = |odd: bool| sign(odd);
        let v = match j {
            1 => q1,
            2 => (q2(n1, n2, n3)? * f3 + q1 * h3) / PI,
            3 => {
                (self.q(3, n1, n2, n3)? * (f1 * f2)
                    + q2(n1, n3, n2)? * (f2 * h1)
                    + q2(n2, n3, n1)? * (f1 * h2)
                    + q1 * (h1 * h2))
                    / (PI * PI)
            }
            4 => {
                (self.q(4, n1, n2, n3)? * (f1 * f2)
                    + q2(n2, n3, n1)? * (s(n2 % 2 == 1) * f1 * h2)
                    + q2(n1, n3, n2)? * (s((n1 + n3) % 2 == 1) * f2 * h1)
                    + q1 * (s(n2 % 2 == 1) * h1 * h2))
                    / (PI * PI)
            }
            5 => {
                (self.q(5, n1, n2, n3)? * (f1 * f2 * f3)
                    + self.q(3, n1, n2, n3)? * (f1 * f2 * h3)
                    + self.q(3, n1, n3, n2)? * (f1 * f3 * h2)
                    + self.q(3, n2, n3, n1)? * (f2 * f3 * h1)
                    + q2(n2, n3, n1)? * (f1 * h2 * h3)
                    + q2(n1, n3, n2)? * (f2 * h1 * h3)
                    + q2(n1, n2, n3)? * (f3 * h1 * h2)
                    + q1 * (h1 * h2 * h3))
                    / (PI * PI * PI)
            }
            6 => {
                let e3 = s(n3 % 2 == 1);
                (self.q(6, n1, n2, n3)? * (f1 * f2 * f3)
                    + self.q(3, n1, n2, n3)? * (e3 * f1 * f2 * h3)
                    + self.q(4, n1, n3, n2)? * (f1 * f3 * h2)
                    + self.q(4, n2, n3, n1)? * (f2 * f3 * h1)
                    + q2(n2, n3, n1)? * (e3 * f1 * h2 * h3)
                    + q2(n1, n3, n2)? * (e3 * f2 * h1 * h3)
                    + q2(n1, n2, n3)? * (s((n1 + n2) % 2 == 1) * f3 * h1 * h2)
                    + q1 * (e3 * h1 * h2 * h3))
                    / (PI * PI * PI)
            }
            _ => unreachable!(),
        };
        Ok(v)
    }

    /// `T_R(n1,n2,n3)` for `n1` even or `n1, n2` of equal parity.
    fn t_r(&mut self, n1: usize, n2: usize, n3: usize) -> Result<Real> {
        let (e1, e2, e3) = (n1.is_multiple_of(2), n2.is_multiple_of(2), n3.is_multiple_of(2));
        let r = match (e1, e2, e3) {
            (true, true, true) => {
                self.r(1, n1, n2, n3)? * -0.5 + self.r(3, n1, n2, n3)? - self.r(4, n1, n2, n3)?
            }
            (true, true, false) => {
                -self.r(2, n1, n2, n3)? + self.r(5, n1, n2, n3)? + self.r(6, n1, n2, n3)?
                    - self.r(6, n3, n1, n2)?
                    - self.r(6, n3, n2, n1)?
            }
            (true, false, true) => -self.r(2, n3, n1, n2)? - self.r(2, n3, n2, n1)?,
            (true, false, false) => {
                self.r(3, n3, n1, n2)?
                    + self.r(3, n3, n2, n1)?
                    + self.r(4, n1, n3, n2)?
                    + self.r(4, n2, n3, n1)?
            }
            (false, false, true) => {
                self.r(1, n1, n2, n3)? * -0.5 + self.r(3, n1, n2, n3)? + self.r(4, n1, n2, n3)?
            }
            (false, false, false) => {
                -self.r(2, n1, n2, n3)?
                    + self.r(5, n1, n2, n3)?
                    + self.r(6, n1, n2, n3)?
                    + self.r(6, n3, n1, n2)?
                    + self.r(6, n3, n2, n1)?
            }
            (false, true, _) => unreachable!("odd/even order is normalized by the caller"),
        };
        Ok(r)
    }
}

/// `Q_j(n1,n2,n3)` through the recurrences and the catalog integrals
/// (`Q1` exactly, `Q2` in closed form).
pub fn q_integral(
    j: u8,
    n1: usize,
    n2: usize,
    n3: usize,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    check_family("q_integral", j, [n1, n2, n3])?;
    let v = QMachine::new(cfg).q(j, n1, n2, n3)?;
    let (method, kind) = if j <= 2 {
        (Method::ClosedForm, ErrorKind::Rigorous)
    } else {
        (Method::Quadrature, ErrorKind::Heuristic)
    };
    Ok(EvalResult::new(v, method, kind))
}

/// `Q_j(n1,n2,n3)` by quadrature of its definition.
pub fn q_integral_quad(
    j: u8,
    n1: usize,
    n2: usize,
    n3: usize,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    check_family("q_integral_quad", j, [n1, n2, n3])?;
    let b = |n, q, qc| bernoulli_poly_pair(n, q, qc);
    let p = |n, x| negapolygamma_f64(n, x);
    match j {
        1 => integrate_01(|q, qc| b(n1, q, qc) * b(n2, q, qc) * b(n3, q, qc), cfg),
        2 => integrate_01(|q, qc| b(n1, q, qc) * b(n2, q, qc) * p(n3, q), cfg),
        3 => integrate_01(|q, qc| p(n1, q) * p(n2, q) * b(n3, q, qc), cfg),
        4 => integrate_01(|q, qc| p(n1, q) * p(n2, qc) * b(n3, q, qc), cfg),
        5 => integrate_01(|q, _| p(n1, q) * p(n2, q) * p(n3, q), cfg),
        _ => integrate_01(|q, qc| p(n1, q) * p(n2, q) * p(n3, qc), cfg),
    }
}

/// Both sides of the integration-by-parts recurrence for `Q_j`, `j = 3..6`,
/// every integral by quadrature of its definition:
///
/// ```text
/// (n3+1) Q3(n1,n2,n3) = -Q3(n1-1,n2,n3+1) - Q3(n1,n2-1,n3+1)
/// (n3+1) Q4(n1,n2,n3) = -Q4(n1-1,n2,n3+1) + Q4(n1,n2-1,n3+1)
///        Q5(n1,n2,n3) = -Q5(n1-1,n2,n3+1) - Q5(n1,n2-1,n3+1)
///        Q6(n1,n2,n3) =  Q6(n1-1,n2,n3+1) + Q6(n1,n2-1,n3+1)
/// ```
pub fn q_recurrence_sides(
    j: u8,
    n1: usize,
    n2: usize,
    n3: usize,
    cfg: &QuadratureConfig,
) -> Result<(Real, Real)> {
    if !(3..=6).contains(&j) {
        return Err(domain(
            "q_recurrence_sides",
            format!("family {j} must lie in 3..=6"),
        ));
    }
    if n1 < 2 || n2 < 2 || n3 == 0 {
        return Err(domain("q_recurrence_sides", "need n1, n2 ≥ 2 and n3 ≥ 1"));
    }
    let q = |a, b, c| q_integral_quad(j, a, b, c, cfg).map(|r| r.real());
    let lhs = q(n1, n2, n3)?;
    let (x, y) = (q(n1 - 1, n2, n3 + 1)?, q(n1, n2 - 1, n3 + 1)?);
    let k = (n3 + 1) as f64;
    Ok(match j {
        3 => (lhs * k, -x - y),
        4 => (lhs * k, y - x),
        5 => (lhs, -x - y),
        _ => (lhs, x + y),
    })
}

/// `R_j(n1,n2,n3)` from the `Q_j` through `A_n = n! ψ^(-n) + h_n B_n`.
pub fn r_integral(
    j: u8,
    n1: usize,
    n2: usize,
    n3: usize,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    check_family("r_integral", j, [n1, n2, n3])?;
    let v = QMachine::new(cfg).r(j, n1, n2, n3)?;
    let kind = if j == 1 {
        ErrorKind::Rigorous
    } else {
        ErrorKind::Heuristic
    };
    Ok(EvalResult::new(v, Method::Quadrature, kind))
}

/// `R_j(n1,n2,n3)` by quadrature of its definition:
///
/// ```text
/// R1 = ∫ B B B          R2 = ∫ B B A / π
/// R3 = ∫ A A B / π²     R4 = ∫ A Ã B / π²
/// R5 = ∫ A A A / π³     R6 = ∫ A A Ã / π³
/// ```
pub fn r_integral_quad(
    j: u8,
    n1: usize,
    n2: usize,
    n3: usize,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    check_family("r_integral_quad", j, [n1, n2, n3])?;
    let b = |n, q, qc| bernoulli_poly_pair(n, q, qc);
    let a = |n, x| bernoulli_a_f64(n, x);
    let pi2 = PI * PI;
    let pi3 = pi2 * PI;
    match j {
        1 => integrate_01(|q, qc| b(n1, q, qc) * b(n2, q, qc) * b(n3, q, qc), cfg),
        2 => integrate_01(|q, qc| b(n1, q, qc) * b(n2, q, qc) * a(n3, q) / PI, cfg),
        3 => integrate_01(|q, qc| a(n1, q) * a(n2, q) * b(n3, q, qc) / pi2, cfg),
        4 => integrate_01(|q, qc| a(n1, q) * a(n2, qc) * b(n3, q, qc) / pi2, cfg),
        5 => integrate_01(|q, _| a(n1, q) * a(n2, q) * a(n3, q) / pi3, cfg),
        _ => integrate_01(|q, qc| a(n1, q) * a(n2, q) * a(n3, qc) / pi3, cfg),
    }
}

/// `p(n) = (-1)^{n/2}` for even `n`, `(-1)^{(n+1)/2}` for odd `n`.
fn p_sign(n: usize) -> f64 {
    let e = if n.is_multiple_of(2) { n / 2 } else { n.div_ceil(2) };
    sign(e % 2 == 1)
}

/// `T(n1,n2,n3) = p(α) (2π)^α / (2 n1! n2! n3!) · T_R(n1,n2,n3)` for
/// positive integers, `α = n1+n2+n3`.
pub fn tornheim_integer(
    n1: usize,
    n2: usize,
    n3: usize,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    if n1 == 0 || n2 == 0 || n3 == 0 {
        return Err(domain("tornheim_integer", "n1, n2, n3 must be positive"));
    }
    // odd/even is sent to even/odd; equal parities are sorted so that the
    // two orders share one computation
    let (n1, n2) = if (n1 % 2 == 1 && n2.is_multiple_of(2)) || (n1 % 2 == n2 % 2 && n1 > n2) {
        (n2, n1)
    } else {
        (n1, n2)
    };
    let alpha = n1 + n2 + n3;
    let tr = QMachine::new(cfg).t_r(n1, n2, n3)?;
    let pre =
        p_sign(alpha) * (2.0 * PI).powi(alpha as i32) / (2.0 * fact(n1) * fact(n2) * fact(n3));
    Ok(EvalResult::new(
        tr * pre,
        Method::IntegerAssembly,
        ErrorKind::Heuristic,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli_algebra::integral_bbb;
    use crate::tornheim::{tornheim_direct, DirectConfig, ParamTriple};
    use num::rational::BigRational;
    use num::BigInt;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::with_tol(1e-14)
    }

    fn z(s: f64) -> f64 {
        crate::specfun::riemann_zeta(s).unwrap().value
    }

    fn direct(a: usize, b: usize, c: usize) -> f64 {
        tornheim_direct(
            &ParamTriple::ints(a as i64, b as i64, c as i64),
            &DirectConfig::default(),
        )
        .unwrap()
        .value
    }

    #[test]
    fn q1_exact() {
        let want = BigRational::new(BigInt::from(1), BigInt::from(180));
        assert_eq!(integral_bbb(1, 1, 2), want);
        let v = q_integral(1, 1, 1, 2, &cfg()).unwrap().value;
        assert_eq!(v, 1.0 / 180.0);
    }

    #[test]
    fn q2_closed_vs_quadrature() {
        for t in [(2, 2, 1), (1, 1, 1), (2, 2, 3), (3, 1, 2), (1, 4, 2)] {
            let c = q2_closed(t.0, t.1, t.2).unwrap().value;
            let q = q_integral_quad(2, t.0, t.1, t.2, &cfg()).unwrap().value;
            assert!((c - q).abs() <= 1e-10, "{t:?}: {c} vs {q}");
        }
        for t in [(2, 2, 1), (1, 1, 1), (3, 2, 2)] {
            let c = q2_closed(t.0, t.1, t.2).unwrap().value;
            let o = q2_closed_alpha_odd(t.0, t.1, t.2).unwrap().value;
            assert!((c - o).abs() <= 1e-16, "{t:?}");
        }
        assert!(q2_closed_alpha_odd(1, 1, 2).is_err());
    }

    #[test]
    fn bases_match_definitions() {
        for j in 3..=6u8 {
            for t in [(1, 2, 1), (1, 1, 2), (2, 1, 3), (1, 3, 1)] {
                let a = q_integral(j, t.0, t.1, t.2, &cfg()).unwrap().value;
                let b = q_integral_quad(j, t.0, t.1, t.2, &cfg()).unwrap().value;
                assert!((a - b).abs() <= 1e-12, "Q{j}{t:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn recursion_matches_definitions() {
        for j in 3..=6u8 {
            for t in [(2, 2, 2), (2, 3, 1), (3, 2, 1)] {
                let a = q_integral(j, t.0, t.1, t.2, &cfg()).unwrap().value;
                let b = q_integral_quad(j, t.0, t.1, t.2, &cfg()).unwrap().value;
                assert!((a - b).abs() <= 1e-12, "Q{j}{t:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn recurrences_by_quadrature() {
        for j in 3..=6u8 {
            for t in [(2, 2, 2), (2, 3, 1)] {
                let (l, r) = q_recurrence_sides(j, t.0, t.1, t.2, &cfg()).unwrap();
                assert!((l.value - r.value).abs() <= 1e-12, "Q{j}{t:?}");
            }
        }
        assert!(q_recurrence_sides(3, 1, 2, 2, &cfg()).is_err());
    }

    #[test]
    fn r_from_q_matches_definitions() {
        for t in [(1, 1, 2), (2, 2, 1), (2, 1, 3)] {
            for j in 1..=6u8 {
                let a = r_integral(j, t.0, t.1, t.2, &cfg()).unwrap().value;
                let b = r_integral_quad(j, t.0, t.1, t.2, &cfg()).unwrap().value;
                assert!((a - b).abs() <= 1e-11, "R{j}{t:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn r4_antisymmetric_for_odd_n3() {
        let x = r_integral(4, 1, 2, 3, &cfg()).unwrap().value;
        let y = r_integral(4, 2, 1, 3, &cfg()).unwrap().value;
        assert!((x + y).abs() < 1e-13);
        let x = r_integral(4, 1, 1, 3, &cfg()).unwrap().value;
        assert!(x.abs() < 1e-13);
    }

    #[test]
    fn reference_values() {
        let pi2 = PI * PI;
        let cases = [
            ((1, 1, 2), z(4.0) / 2.0),
            ((2, 1, 2), pi2 / 6.0 * z(3.0) - 1.5 * z(5.0)),
            ((2, 3, 2), -pi2 / 6.0 * z(5.0) + 2.0 * z(7.0)),
            (
                (4, 3, 2),
                pi2 * pi2 / 90.0 * z(5.0) + pi2 / 6.0 * z(7.0) - 2.5 * z(9.0),
            ),
        ];
        for ((a, b, c), want) in cases {
            let v = tornheim_integer(a, b, c, &cfg()).unwrap();
            assert!(
                (v.value - want).abs() <= 1e-9,
                "T({a},{b},{c}): {v} vs {want}"
            );
        }
    }

    #[test]
    fn agrees_with_direct_up_to_weight_7() {
        for w in 3..=7 {
            for a in 1..w {
                for b in 1..w - a {
                    let c = w - a - b;
                    let v = tornheim_integer(a, b, c, &cfg()).unwrap().value;
                    let d = direct(a, b, c);
                    assert!((v - d).abs() <= 1e-8, "T({a},{b},{c}): {v} vs {d}");
                }
            }
        }
    }

    #[test]
    fn exact_symmetry() {
        for t in [(1, 2, 2), (2, 3, 1), (3, 5, 1), (4, 2, 1)] {
            let x = tornheim_integer(t.0, t.1, t.2, &cfg()).unwrap();
            let y = tornheim_integer(t.1, t.0, t.2, &cfg()).unwrap();
            assert_eq!(x.value, y.value);
        }
    }
}
