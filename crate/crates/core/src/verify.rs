//! The identity-verification sweep: every check computes two sides
//! independently and records the residual against a tolerance.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bernoulli_algebra::{cube_expand, integral_bb, integral_bbb, product_expand};
use crate::error::{domain, Error, Result};
use crate::polygamma_neg::{
    negapolygamma, negapolygamma_derivative_check, negapolygamma_f64, relation_residual,
};
use crate::quadrature::{
    integral_k, integral_kstar, integral_m, integral_m_quad, integral_mstar, integral_mstar_quad,
    integral_n, integral_n_quad, integral_u, integrate_01, loggamma_moments_check,
    two_zeta_integral, two_zeta_integral_quad, QuadratureConfig,
};
use crate::specfun::{
    bernoulli_poly, bernoulli_rational, hurwitz_zeta, hurwitz_zeta_zderiv, log_gamma,
    rational_to_f64, riemann_zeta, LN_2PI,
};
use crate::tornheim::{
    fourier_identity_check, k_reduction_check, mzv_check, prop31_check, q2_closed, q_integral_quad,
    q_recurrence_sides, r_integral, r_integral_quad, tornheim_analytic, tornheim_classics,
    tornheim_direct, tornheim_huard, tornheim_integer, tornheim_symmetric,
    tornheim_symmetric_bernoulli, tornheim_t_i0, tornheim_two_int, weight_table_check, Classic,
    DirectConfig, ParamTriple, Parity,
};

use std::f64::consts::{LN_2, PI};

/// Default base tolerance; each check's tolerance is a fixed multiple of it.
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_PREC: u32 = 14;
pub const MAX_PREC: u32 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Specfun,
    Bernoulli,
    Negapoly,
    Integrals,
    Tornheim,
    All,
}

impl Suite {
    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Specfun,
                Suite::Bernoulli,
                Suite::Negapoly,
                Suite::Integrals,
                Suite::Tornheim,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "specfun" => Suite::Specfun,
            "bernoulli" => Suite::Bernoulli,
            "negapoly" => Suite::Negapoly,
            "integrals" => Suite::Integrals,
            "tornheim" => Suite::Tornheim,
            "all" => Suite::All,
            _ => return Err(domain("Suite", format!("unknown suite '{s}'"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Specfun => "specfun",
            Suite::Bernoulli => "bernoulli",
            Suite::Negapoly => "negapoly",
            Suite::Integrals => "integrals",
            Suite::Tornheim => "tornheim",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub check_id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub status: Status,
    pub notes: String,
}

/// Precision settings shared by every check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Working digits, `1..=15`; sets the quadrature and direct-sum targets.
    pub prec: u32,
    pub tol: f64,
    pub max_terms: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            prec: DEFAULT_PREC,
            tol: DEFAULT_TOL,
            max_terms: DirectConfig::default().max_terms,
        }
    }
}

impl VerifyConfig {
    pub fn new(prec: u32, tol: f64, max_terms: u64) -> Result<Self> {
        if !(1..=MAX_PREC).contains(&prec) {
            return Err(domain(
                "VerifyConfig",
                format!("prec = {prec} must lie in 1..={MAX_PREC}"),
            ));
        }
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(domain("VerifyConfig", "tol must be positive"));
        }
        if max_terms == 0 {
            return Err(domain("VerifyConfig", "max_terms must be positive"));
        }
        Ok(Self {
            prec,
            tol,
            max_terms,
        })
    }

    fn target(&self) -> f64 {
        10f64.powi(-(self.prec as i32))
    }

    pub fn quadrature(&self) -> QuadratureConfig {
        QuadratureConfig::with_tol(self.target())
    }

    pub fn direct(&self) -> DirectConfig {
        DirectConfig {
            tol: self.target().max(1e-15),
            max_terms: self.max_terms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub suite: Suite,
    pub prec: u32,
    pub tol: f64,
    pub max_terms: u64,
    pub quadrature_tol: f64,
    pub direct_tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub header: ReportHeader,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn entry(&self, id: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.check_id == id)
    }

    /// One line per check and a closing tally.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&format!(
                "{:<7} {:<44} residual {:.3e} (tol {:.1e}){}\n",
                e.status,
                e.check_id,
                e.residual,
                e.tolerance,
                if e.notes.is_empty() {
                    String::new()
                } else {
                    format!("  {}", e.notes)
                }
            ));
        }
        s.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        ));
        s
    }
}

struct Sweep<'a> {
    cfg: &'a VerifyConfig,
    scale: f64,
    entries: Vec<ReportEntry>,
}

impl<'a> Sweep<'a> {
    fn check(&mut self, id: impl Into<String>, tol: f64, f: impl FnOnce() -> Result<(f64, f64)>) {
        self.check_noted(id, tol, "", f)
    }

    fn check_noted(
        &mut self,
        id: impl Into<String>,
        tol: f64,
        notes: &str,
        f: impl FnOnce() -> Result<(f64, f64)>,
    ) {
        let tolerance = tol * self.scale;
        let entry = match f() {
            Ok((lhs, rhs)) => {
                let residual = (lhs - rhs).abs();
                let status = if residual <= tolerance {
                    Status::Pass
                } else {
                    Status::Fail
                };
                ReportEntry {
                    check_id: id.into(),
                    lhs,
                    rhs,
                    residual,
                    tolerance,
                    status,
                    notes: notes.to_string(),
                }
            }
            Err(e) => {
                let status = match e {
                    Error::Unsupported(_) => Status::Skipped,
                    _ => Status::Fail,
                };
                ReportEntry {
                    check_id: id.into(),
                    lhs: f64::NAN,
                    rhs: f64::NAN,
                    residual: f64::NAN,
                    tolerance,
                    status,
                    notes: e.to_string(),
                }
            }
        };
        self.entries.push(entry);
    }
}

/// Runs every check in `suite`.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Report {
    let mut sw = Sweep {
        cfg,
        scale: cfg.tol,
        entries: Vec::new(),
    };
    for s in suite.members() {
        match s {
            Suite::Specfun => specfun_checks(&mut sw),
            Suite::Bernoulli => bernoulli_checks(&mut sw),
            Suite::Negapoly => negapoly_checks(&mut sw),
            Suite::Integrals => integral_checks(&mut sw),
            Suite::Tornheim => tornheim_checks(&mut sw),
            Suite::All => unreachable!(),
        }
    }
    let quad = cfg.quadrature();
    let direct = cfg.direct();
    Report {
        header: ReportHeader {
            suite,
            prec: cfg.prec,
            tol: cfg.tol,
            max_terms: cfg.max_terms,
            quadrature_tol: quad.target_tol,
            direct_tol: direct.tol,
        },
        entries: sw.entries,
    }
}

fn zeta(s: f64) -> f64 {
    riemann_zeta(s).map(|r| r.value).unwrap_or(f64::NAN)
}

fn specfun_checks(sw: &mut Sweep) {
    for n in 0..=5usize {
        for q in [0.1, 0.35, 0.5, 0.8, 1.0] {
            sw.check(format!("zetaber-{n}-{q}"), 1e-5, || {
                let lhs = hurwitz_zeta(-(n as f64), q)?.value;
                Ok((lhs, -bernoulli_poly(n + 1, q).value / (n + 1) as f64))
            });
        }
    }
    for q in [0.05, 0.25, 0.5, 0.75, 1.0] {
        sw.check(format!("lerch-{q}"), 1e-5, || {
            let lhs = hurwitz_zeta_zderiv(0.0, q)?.value;
            Ok((lhs, log_gamma(q)?.value - 0.5 * LN_2PI))
        });
    }
    sw.check("riemann-zeta-2", 1e-6, || Ok((zeta(2.0), PI * PI / 6.0)));
    sw.check("riemann-zeta-4", 1e-6, || {
        Ok((zeta(4.0), PI.powi(4) / 90.0))
    });
    sw.check("hurwitz-half", 1e-6, || {
        // ζ(s, 1/2) = (2^s - 1) ζ(s)
        Ok((
            hurwitz_zeta(3.5, 0.5)?.value,
            (2f64.powf(3.5) - 1.0) * zeta(3.5),
        ))
    });
}

fn bernoulli_checks(sw: &mut Sweep) {
    let quad = sw.cfg.quadrature();
    sw.check("q1-1-1-2", 0.0, || {
        Ok((rational_to_f64(&integral_bbb(1, 1, 2)), 1.0 / 180.0))
    });
    for (n1, n2) in [(1, 1), (2, 3), (4, 4), (3, 6)] {
        sw.check(format!("integral-bb-{n1}-{n2}"), 1e-4, || {
            let q = integrate_01(
                |x, _| bernoulli_poly(n1, x).value * bernoulli_poly(n2, x).value,
                &quad,
            )?;
            Ok((rational_to_f64(&integral_bb(n1, n2)), q.value))
        });
    }
    for (n1, n2, n3) in [(1, 1, 2), (2, 2, 2), (1, 2, 3), (3, 4, 5)] {
        sw.check(format!("integral-bbb-{n1}-{n2}-{n3}"), 1e-4, || {
            let q = integrate_01(
                |x, _| {
                    bernoulli_poly(n1, x).value
                        * bernoulli_poly(n2, x).value
                        * bernoulli_poly(n3, x).value
                },
                &quad,
            )?;
            Ok((rational_to_f64(&integral_bbb(n1, n2, n3)), q.value))
        });
    }
    for (n1, n2) in [(2, 3), (4, 4), (5, 2)] {
        let e = product_expand(n1, n2);
        for q in [0.2, 0.7] {
            sw.check(format!("product-expand-{n1}-{n2}-{q}"), 1e-5, || {
                Ok((
                    e.eval(q),
                    bernoulli_poly(n1, q).value * bernoulli_poly(n2, q).value,
                ))
            });
        }
    }
    for n in [1, 2, 3] {
        let e = cube_expand(n);
        sw.check(format!("cube-expand-{n}"), 1e-5, || {
            Ok((e.eval(0.3), bernoulli_poly(n, 0.3).value.powi(3)))
        });
    }
    sw.check("bernoulli-6", 0.0, || {
        Ok((rational_to_f64(&bernoulli_rational(6)), 1.0 / 42.0))
    });
}

fn negapoly_checks(sw: &mut Sweep) {
    let quad = sw.cfg.quadrature();
    for m in 1..=6usize {
        sw.check(format!("negapoly-balanced-{m}"), 1e-3, || {
            let r = integrate_01(|q, _| negapolygamma_f64(m, q), &quad)?;
            Ok((r.value, 0.0))
        });
    }
    for m in 2..=6usize {
        sw.check(format!("negapoly-endpoints-{m}"), 10.0, || {
            let e = 1e-10;
            Ok((negapolygamma(m, e)?.value, negapolygamma(m, 1.0 - e)?.value))
        });
    }
    for m in 2..=5usize {
        for q in [0.2, 0.5, 0.8] {
            sw.check(format!("negapoly-ladder-{m}-{q}"), 10.0, || {
                Ok((negapolygamma_derivative_check(m, q)?, 0.0))
            });
        }
    }
    for m in 1..=6usize {
        sw.check(format!("negapoly-relation-{m}"), 1e-4, || {
            Ok((relation_residual(m, 0.37)?, 0.0))
        });
    }
}

fn integral_checks(sw: &mut Sweep) {
    let quad = sw.cfg.quadrature();
    match loggamma_moments_check(&quad) {
        Ok(l) => {
            sw.check("eq-l1", 1e-3, || Ok((l.l1.value, l.l1_closed)));
            sw.check("eq-l2", 1.0, || Ok((l.l2.value, l.l2_closed)));
        }
        Err(e) => {
            let msg = e.to_string();
            sw.check("eq-l1", 1e-3, || Err(e.clone()));
            sw.check_noted("eq-l2", 1.0, &msg, || Err(e));
        }
    }
    for (a, b) in [(2.0, 2.0), (2.5, 3.5)] {
        for refl in [false, true] {
            let id = if refl { "twozeta1a" } else { "twozetaa" };
            sw.check(format!("{id}-{a}-{b}"), 0.1, || {
                Ok((
                    two_zeta_integral(a, b, refl)?.value,
                    two_zeta_integral_quad(a, b, refl, &quad)?.value,
                ))
            });
        }
    }
    for m in 1..=3 {
        for n in 1..=3 {
            sw.check(format!("eval-N-closed-vs-quad-{m}-{n}"), 0.1, || {
                Ok((integral_n(m, n)?.value, integral_n_quad(m, n, &quad)?.value))
            });
            sw.check(format!("eval-M-closed-vs-quad-{m}-{n}"), 0.1, || {
                Ok((integral_m(m, n)?.value, integral_m_quad(m, n, &quad)?.value))
            });
            sw.check(format!("eval-Mstar-closed-vs-quad-{m}-{n}"), 0.1, || {
                Ok((
                    integral_mstar(m, n)?.value,
                    integral_mstar_quad(m, n, &quad)?.value,
                ))
            });
        }
    }
    sw.check("eval-N-1-2-zeta3", 1e-4, || {
        Ok((integral_n(1, 2)?.value, zeta(3.0) / (4.0 * PI * PI)))
    });
    for (n1, n2, n3) in [(2, 2, 1), (1, 1, 1), (2, 2, 3)] {
        sw.check(format!("q2-explicit-{n1}-{n2}-{n3}"), 0.1, || {
            Ok((
                q2_closed(n1, n2, n3)?.value,
                q_integral_quad(2, n1, n2, n3, &quad)?.value,
            ))
        });
    }
    sw.check("K-plus-Kstar-1-2", 1.0, || {
        let lhs = integral_k(1, 2, &quad)?.value + integral_kstar(1, 2, &quad)?.value;
        let rhs = (zeta(4.0) / 2.0 + zeta(3.0) * LN_2PI + PI.powi(4) / 90.0) / (4.0 * PI * PI);
        Ok((lhs, rhs))
    });
    sw.check("U-1-2-closed", 1.0, || {
        let rhs = -PI * PI / 240.0 - LN_2 * zeta(3.0) / (4.0 * PI * PI);
        Ok((integral_u(1, 2, &quad)?.value, rhs))
    });
    for j in 3..=6u8 {
        for (n1, n2, n3) in [(2, 2, 2), (2, 3, 1)] {
            sw.check(format!("recq{j}-{n1}-{n2}-{n3}"), 10.0, || {
                let (l, r) = q_recurrence_sides(j, n1, n2, n3, &quad)?;
                Ok((l.value, r.value))
            });
        }
    }
    for j in 1..=6u8 {
        for (n1, n2, n3) in [(1, 1, 2), (2, 2, 1)] {
            sw.check(format!("rel-RQ{j}-{n1}-{n2}-{n3}"), 10.0, || {
                Ok((
                    r_integral(j, n1, n2, n3, &quad)?.value,
                    r_integral_quad(j, n1, n2, n3, &quad)?.value,
                ))
            });
        }
    }
    for (m, n, tol) in [(3, 1, 10.0), (3, 2, 10.0), (5, 1, 100.0)] {
        sw.check(format!("k-reduction-{m}-{n}"), tol, || {
            let c = k_reduction_check(m, n, &quad)?;
            Ok((c.lhs, c.rhs))
        });
    }
}

fn tornheim_checks(sw: &mut Sweep) {
    let quad = sw.cfg.quadrature();
    let dcfg = sw.cfg.direct();
    let direct = |a: f64, b: f64, c: f64| -> Result<f64> {
        Ok(tornheim_direct(&ParamTriple::new(a, b, c), &dcfg)?.value)
    };
    let integer = |a, b, c| -> Result<f64> { Ok(tornheim_integer(a, b, c, &quad)?.value) };
    let (z3, z4, z5, z7, z9) = (zeta(3.0), zeta(4.0), zeta(5.0), zeta(7.0), zeta(9.0));
    let pi2 = PI * PI;

    sw.check("direct-T111", 0.1, || {
        Ok((direct(1.0, 1.0, 1.0)?, 2.0 * z3))
    });
    sw.check("direct-T230", 0.1, || {
        Ok((direct(2.0, 3.0, 0.0)?, zeta(2.0) * z3))
    });
    sw.check("direct-T013", 0.1, || {
        Ok((direct(0.0, 1.0, 3.0)?, z4 / 4.0))
    });

    sw.check("thm-zagr-case5-T112", 10.0, || {
        Ok((integer(1, 1, 2)?, z4 / 2.0))
    });
    sw.check("T112-via-U12", 1.0, || {
        let u12 = -pi2 / 240.0 - LN_2 * z3 / (4.0 * pi2);
        Ok((
            integer(1, 1, 2)?,
            -4.0 * pi2 * u12 - z3 * LN_2 - pi2 * pi2 / 90.0,
        ))
    });
    let ex62 = [
        ((2, 1, 2), 3, pi2 / 6.0 * z3 - 1.5 * z5),
        ((2, 3, 2), 3, -pi2 / 6.0 * z5 + 2.0 * z7),
        (
            (4, 3, 2),
            3,
            pi2 * pi2 / 90.0 * z5 + pi2 / 6.0 * z7 - 2.5 * z9,
        ),
    ];
    for ((a, b, c), case, want) in ex62 {
        sw.check(format!("example-T{a}{b}{c}-direct"), 10.0, || {
            Ok((direct(a as f64, b as f64, c as f64)?, want))
        });
        sw.check(format!("thm-zagr-case{case}-T{a}{b}{c}"), 10.0, || {
            Ok((integer(a, b, c)?, want))
        });
    }

    let t222 = PI.powi(6) / 2835.0;
    sw.check("T-sym-even-1", 1.0, || {
        Ok((tornheim_symmetric(1, Parity::Even)?.value, t222))
    });
    sw.check("T-sym-even-2-1", 1.0, || {
        Ok((tornheim_symmetric_bernoulli(1)?.value, t222))
    });
    sw.check("T-sym-even-vs-even-2-2", 1e-3, || {
        Ok((
            tornheim_symmetric(2, Parity::Even)?.value,
            tornheim_symmetric_bernoulli(2)?.value,
        ))
    });
    sw.check("thm-zagr-case1-T222", 1.0, || Ok((integer(2, 2, 2)?, t222)));
    sw.check("direct-T222", 1.0, || Ok((direct(2.0, 2.0, 2.0)?, t222)));
    sw.check("T-sym-odd-1", 1.0, || {
        Ok((
            tornheim_symmetric(1, Parity::Odd)?.value,
            direct(3.0, 3.0, 3.0)?,
        ))
    });

    for (a, b, c) in [(1.5, 1.5, 1.5), (2.5, 1.5, 2.5), (1.5, 2.5, 3.5)] {
        sw.check(format!("analytic-ij-{a}-{b}-{c}"), 100.0, || {
            Ok((tornheim_analytic(a, b, c, &quad)?.value, direct(a, b, c)?))
        });
    }
    for (n1, n2, c) in [(2u32, 2u32, 2.5), (2, 1, 2.5), (1, 1, 2.5)] {
        sw.check(format!("two-int-{n1}-{n2}-{c}"), 100.0, || {
            Ok((
                tornheim_two_int(n1, n2, c, &quad)?.value,
                direct(n1 as f64, n2 as f64, c)?,
            ))
        });
    }

    match weight_table_check(&dcfg, &quad) {
        Ok(rows) => {
            for r in rows {
                let id = format!("weight-table-{}", r.name);
                sw.check(id, 100.0, || Ok((r.lhs, r.rhs)));
            }
        }
        Err(e) => sw.check("weight-table", 100.0, || Err(e)),
    }

    for (a, b, c) in [(2.0, 2.0, 2.0), (3.0, 1.0, 4.0), (1.5, 1.5, 2.5)] {
        match prop31_check(a, b, c, &dcfg, &quad) {
            Ok(r) => {
                sw.check(format!("prop31-sym-{a}-{b}-{c}"), 10.0, || {
                    Ok((r.sym_lhs, r.sym_rhs))
                });
                sw.check(format!("prop31-nsym-{a}-{b}-{c}"), 10.0, || {
                    Ok((r.nsym_lhs, r.nsym_rhs))
                });
            }
            Err(e) => sw.check(format!("prop31-{a}-{b}-{c}"), 10.0, || Err(e)),
        }
    }

    for w in [5u32, 7] {
        for a in 0..=w {
            for b in 0..=w - a {
                let c = w - a - b;
                if a + b == 0
                    || ParamTriple::ints(a as i64, b as i64, c as i64)
                        .check_gate()
                        .is_err()
                {
                    continue;
                }
                sw.check(format!("huard-{a}-{b}-{c}"), 0.1, || {
                    Ok((
                        tornheim_huard(a, b, c)?.value,
                        direct(a as f64, b as f64, c as f64)?,
                    ))
                });
            }
        }
    }
    for (i, n) in [(1u32, 5u32), (2, 5), (3, 7)] {
        sw.check(format!("T-i0-{i}-{n}"), 0.1, || {
            Ok((
                tornheim_t_i0(i, n)?.value,
                direct(i as f64, 0.0, (n - i) as f64)?,
            ))
        });
    }
    sw.check("classics-T211", 0.1, || {
        Ok((
            tornheim_classics(Classic::TwoOneOne, 4)?.value,
            direct(2.0, 1.0, 1.0)?,
        ))
    });
    sw.check("classics-relation-5", 1e-4, || {
        Ok((tornheim_classics(Classic::Relation, 5)?.value, 0.0))
    });
    for (a, c) in [(2u32, 3u32), (2, 2), (1, 3)] {
        sw.check(format!("mzv-{a}-{c}"), 0.1, || {
            let r = mzv_check(a, c, &dcfg)?;
            Ok((r.lhs, r.rhs))
        });
    }
    for (z, q) in [(2.5, 0.3), (3.0, 0.5), (2.0, 0.25)] {
        match fourier_identity_check(z, q) {
            Ok(r) => {
                sw.check(format!("fourier-cos-{z}-{q}"), 1.0, || {
                    Ok((r.cos_series, r.cos_zeta))
                });
                sw.check(format!("fourier-sin-{z}-{q}"), 1.0, || {
                    Ok((r.sin_series, r.sin_zeta))
                });
            }
            Err(e) => sw.check(format!("fourier-{z}-{q}"), 1.0, || Err(e)),
        }
    }
    for w in 3..=9usize {
        for a in 1..w - 1 {
            for b in 1..w - a {
                let c = w - a - b;
                sw.check(format!("integer-vs-direct-{a}-{b}-{c}"), 10.0, || {
                    Ok((integer(a, b, c)?, direct(a as f64, b as f64, c as f64)?))
                });
            }
        }
    }
}
