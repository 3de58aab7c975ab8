//! Direct summation with asymptotic tails.
//!
//! The triangle `n + m ≤ S` is summed term by term. Rows `n < S` are
//! finished with an Euler–Maclaurin tail in `m`, and the rows `n ≥ S` are
//! replaced by the large-`n` expansion of `F(n) = Σ_m m^-b (n+m)^-c`.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::real::{ErrorKind, EvalResult, Method, Real};
use crate::specfun::{
    bernoulli_dd, digamma_dd, gamma, harmonic, hurwitz_any_d1_dd, hurwitz_any_dd, rgamma, zeta_any,
};

use super::ParamTriple;

/// Tolerance and work budget for [`tornheim_direct`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectConfig {
    pub tol: f64,
    /// Maximum number of explicitly summed terms.
    pub max_terms: u64,
}

impl Default for DirectConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_terms: 2_000_000,
        }
    }
}

const S0: usize = 128;
const EM_ORDER: usize = 10;
const ASYM_TERMS: usize = 40;

/// `T(a,b,c)` inside the convergence region, comparing cutoffs `S` and
/// `S/2` for the error estimate.
pub fn tornheim_direct(p: &ParamTriple, cfg: &DirectConfig) -> Result<EvalResult> {
    p.check_gate()?;
    let (a, b, c) = (p.a, p.b, p.c);
    let mut s = S0;
    let needed = term_count(s) + term_count(s / 2);
    if needed > cfg.max_terms {
        return Err(Error::TermBudget {
            needed,
            budget: cfg.max_terms,
        });
    }
    let mut coarse = cutoff_sum(a, b, c, s / 2);
    loop {
        let fine = cutoff_sum(a, b, c, s);
        let v = fine.to_f64();
        let diff = (fine - coarse).to_f64().abs();
        let floor = 64.0 * f64::EPSILON * v.abs();
        if diff <= cfg.tol.max(floor) {
            return Ok(EvalResult::new(
                Real::new(v, diff + floor),
                Method::DirectSum,
                ErrorKind::Heuristic,
            ));
        }
        let needed = term_count(2 * s);
        if needed > cfg.max_terms {
            return Err(Error::TermBudget {
                needed,
                budget: cfg.max_terms,
            });
        }
        coarse = fine;
        s *= 2;
    }
}

fn row_limit(s: usize, n: usize) -> (usize, usize) {
    let m0 = s - n + 1;
    (m0, m0.max(2 * n).max(16))
}

fn term_count(s: usize) -> u64 {
    let diag = (s * (s - 1) / 2) as u64;
    let rows: usize = (1..s)
        .map(|n| {
            let (m0, m) = row_limit(s, n);
            m - m0 + EM_ORDER
        })
        .sum();
    diag + rows as u64
}

fn cutoff_sum(a: f64, b: f64, c: f64, s: usize) -> Dd {
    let pw = |e: f64, len: usize| -> Vec<f64> {
        (0..=len)
            .map(|n| if n == 0 { 0.0 } else { (n as f64).powf(-e) })
            .collect()
    };
    let pa = pw(a, s);
    let pb = pw(b, 2 * s + 16);
    let pc = pw(c, 3 * s + 16);

    let mut tot = Dd::ZERO;
    for k in 2..=s {
        let mut g = Dd::ZERO;
        for n in 1..k {
            g += pa[n] * pb[k - n];
        }
        tot += g * pc[k];
    }
    for n in 1..s {
        let (m0, m_em) = row_limit(s, n);
        let mut row = Dd::ZERO;
        for m in m0..m_em {
            row += pb[m] * pc[n + m];
        }
        row += em_row_tail(n as f64, m_em as f64, b, c);
        tot += row * pa[n];
    }
    tot + asym_tail((s - 1) as f64, a, b, c)
}

/// `Σ_{m ≥ M} m^-b (m+n)^-c` for `M ≥ 2n`.
fn em_row_tail(n: f64, m: f64, b: f64, c: f64) -> Dd {
    // ∫_M^∞ by the binomial series in n/M
    let mut integ = Dd::ZERO;
    let mut binom = 1.0;
    let mut nk = 1.0;
    for k in 0..400 {
        let kf = k as f64;
        let t = binom * nk * m.powf(1.0 - b - c - kf) / (b + c + kf - 1.0);
        integ += t;
        if t.abs() <= 1e-19 * integ.hi.abs() {
            break;
        }
        binom *= (-c - kf) / (kf + 1.0);
        nk *= n;
    }

    // derivatives of u(x) = x^-b and v(x) = (x+n)^-c at M
    let r_max = 2 * EM_ORDER - 1;
    let mut u = vec![0.0; r_max + 1];
    let mut v = vec![0.0; r_max + 1];
    let (fb, fc) = (m.powf(-b), (m + n).powf(-c));
    u[0] = fb;
    v[0] = fc;
    for k in 1..=r_max {
        let kf = (k - 1) as f64;
        u[k] = u[k - 1] * (-b - kf) / m;
        v[k] = v[k - 1] * (-c - kf) / (m + n);
    }
    let mut s = integ + 0.5 * fb * fc;
    let mut fact = 1.0;
    for j in 1..=EM_ORDER {
        let r = 2 * j - 1;
        fact *= (2 * j - 1) as f64 * (2 * j) as f64;
        let mut d = 0.0;
        let mut binom = 1.0;
        for k in 0..=r {
            d += binom * u[k] * v[r - k];
            binom *= (r - k) as f64 / (k + 1) as f64;
        }
        s -= bernoulli_dd(2 * j) * (d / fact);
    }
    s
}

/// `Σ_{n > N} n^-a F(n)` from `F(n) ~ Σ_k C(-c,k) ζ(b-k) n^{-c-k}` plus the
/// Mellin pole term in `n^{1-b-c}`.
fn asym_tail(nn: f64, a: f64, b: f64, c: f64) -> Dd {
    let q = nn + 1.0;
    let pint = (b >= 1.0 && b == b.round()).then_some(b as usize);
    let mut s = Dd::ZERO;
    let mut binom = 1.0;
    for k in 0..ASYM_TERMS {
        let kf = k as f64;
        if pint != Some(k + 1) && binom != 0.0 {
            let t = hurwitz_any_dd(a + c + kf, q) * (binom * zeta_any(b - kf));
            s += t;
        }
        binom *= (-c - kf) / (kf + 1.0);
    }
    match pint {
        None => {
            let g = gamma(1.0 - b).unwrap_or(0.0) * gamma(b + c - 1.0).unwrap_or(0.0) * rgamma(c);
            s += hurwitz_any_dd(a + b + c - 1.0, q) * g;
        }
        Some(p) => {
            let rc = rgamma(c);
            if rc != 0.0 {
                let pf = p as f64;
                let fact: f64 = (1..p).map(|i| i as f64).product();
                let sign = if p % 2 == 1 { 1.0 } else { -1.0 };
                let kc = sign * gamma(pf + c - 1.0).unwrap_or(0.0) * rc / fact;
                let e = a + pf + c - 1.0;
                let h = harmonic(p - 1).value;
                let coef = Dd::from(h) - digamma_dd(pf + c - 1.0);
                s += (coef * hurwitz_any_dd(e, q) - hurwitz_any_d1_dd(e, q)) * kc;
            }
        }
    }
    s
}
