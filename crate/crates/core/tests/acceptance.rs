//! End-to-end acceptance criteria. Each test prints one summary line.
//! Reference constants were computed independently with mpmath at 30 digits.

use std::f64::consts::{LN_2 as LN2, PI};

use num::BigRational;
use tornheim::bernoulli_algebra::integral_bbb;
use tornheim::polygamma_neg::{negapolygamma, negapolygamma_derivative_check, relation_residual};
use tornheim::quadrature::{
    integral_m, integral_m_quad, integral_mstar, integral_mstar_quad, integral_n, integral_n_quad,
    integrate_01, loggamma_moments_check, two_zeta_integral, two_zeta_integral_quad,
    QuadratureConfig,
};
use tornheim::specfun::{bernoulli_poly, hurwitz_zeta, hurwitz_zeta_zderiv, log_gamma};
use tornheim::tornheim::{
    mzv_check, prop31_check, q2_closed, q_integral_quad, q_recurrence_sides, r_integral,
    r_integral_quad, tornheim_analytic, tornheim_direct, tornheim_huard, tornheim_integer,
    tornheim_symmetric, tornheim_symmetric_bernoulli, tornheim_two_int, weight_table_check,
    DirectConfig, ParamTriple, Parity,
};

const LN_2PI: f64 = 1.837_877_066_409_345_6;
const ZETA3: f64 = 1.202_056_903_159_594_2;
const HALF_ZETA4: f64 = 0.541_161_616_855_569_1;
const T212: f64 = 0.421_912_717_582_241_25;
const T232: f64 = 0.311_020_765_468_060_23;
const T432: f64 = 0.275_938_096_653_714_55;
const T222: f64 = 0.339_114_353_994_816_4;
const T333: f64 = 0.136_150_924_753_844_3;
const U12: f64 = -0.062_228_613_833_631_52;
const L1: f64 = 0.918_938_533_204_672_8;
const L2: f64 = 1.866_317_083_793_562;
const N12: f64 = 0.030_448_457_058_393_27;

struct Criterion {
    n: u32,
    rows: Vec<(String, f64, f64)>,
}

impl Criterion {
    fn new(n: u32) -> Self {
        Self {
            n,
            rows: Vec::new(),
        }
    }

    fn add(&mut self, name: impl Into<String>, residual: f64, tol: f64) {
        self.rows.push((name.into(), residual, tol));
    }

    fn pair(&mut self, name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) {
        self.add(name, (lhs - rhs).abs(), tol);
    }

    fn finish(self) {
        let failed: Vec<_> = self
            .rows
            .iter()
            .filter(|(_, r, t)| !(r <= t))
            .map(|(n, r, t)| format!("{n} ({r:.2e} > {t:.0e})"))
            .collect();
        let worst = self
            .rows
            .iter()
            .map(|(_, r, t)| r / t.max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max);
        if failed.is_empty() {
            println!(
                "criterion {}: PASS ({} checks, worst residual/tolerance {:.2e})",
                self.n,
                self.rows.len(),
                worst
            );
        } else {
            println!("criterion {}: FAIL {}", self.n, failed.join(", "));
            panic!("criterion {} failed", self.n);
        }
    }
}

fn quad() -> QuadratureConfig {
    QuadratureConfig::with_tol(1e-14)
}

fn direct(a: f64, b: f64, c: f64) -> f64 {
    tornheim_direct(&ParamTriple::new(a, b, c), &DirectConfig::default())
        .unwrap()
        .value
}

fn integer(a: usize, b: usize, c: usize) -> f64 {
    tornheim_integer(a, b, c, &quad()).unwrap().value
}

#[test]
fn criterion_01_t111_direct() {
    let mut c = Criterion::new(1);
    c.pair(
        "T(1,1,1) vs 2ζ(3)",
        direct(1.0, 1.0, 1.0),
        2.0 * ZETA3,
        1e-10,
    );
    c.finish();
}

#[test]
fn criterion_02_t112() {
    let mut c = Criterion::new(2);
    let t = integer(1, 1, 2);
    c.pair("integer T(1,1,2) vs ζ(4)/2", t, HALF_ZETA4, 1e-8);
    let via_u = -4.0 * PI * PI * U12 - ZETA3 * LN2 - PI.powi(4) / 90.0;
    c.pair("T(1,1,2) vs U12 form", t, via_u, 1e-9);
    c.finish();
}

#[test]
fn criterion_03_weight_five_to_nine_closed_forms() {
    let mut c = Criterion::new(3);
    for ((a, b, cc), want) in [((2, 1, 2), T212), ((2, 3, 2), T232), ((4, 3, 2), T432)] {
        c.pair(
            format!("direct T({a},{b},{cc})"),
            direct(a as f64, b as f64, cc as f64),
            want,
            1e-8,
        );
        c.pair(
            format!("integer T({a},{b},{cc})"),
            integer(a, b, cc),
            want,
            1e-8,
        );
    }
    c.finish();
}

#[test]
fn criterion_04_symmetric_sums() {
    let mut c = Criterion::new(4);
    let vals = [
        (
            "sym-even",
            tornheim_symmetric(1, Parity::Even).unwrap().value,
        ),
        (
            "sym-even-bernoulli",
            tornheim_symmetric_bernoulli(1).unwrap().value,
        ),
        ("integer", integer(2, 2, 2)),
        ("direct", direct(2.0, 2.0, 2.0)),
    ];
    for (i, (ni, vi)) in vals.iter().enumerate() {
        c.pair(format!("T(2,2,2) {ni} vs π⁶/2835"), *vi, T222, 1e-9);
        for (nj, vj) in &vals[i + 1..] {
            c.pair(format!("T(2,2,2) {ni} vs {nj}"), *vi, *vj, 1e-9);
        }
    }
    let odd = tornheim_symmetric(1, Parity::Odd).unwrap().value;
    c.pair(
        "T(3,3,3) sym-odd vs direct",
        odd,
        direct(3.0, 3.0, 3.0),
        1e-9,
    );
    c.pair("T(3,3,3) sym-odd vs reference", odd, T333, 1e-9);
    c.finish();
}

#[test]
fn criterion_05_analytic_real_parameters() {
    let mut c = Criterion::new(5);
    for (a, b, cc) in [(1.5, 1.5, 1.5), (2.5, 1.5, 2.5), (1.5, 2.5, 3.5)] {
        let v = tornheim_analytic(a, b, cc, &quad()).unwrap().value;
        c.pair(format!("T({a},{b},{cc})"), v, direct(a, b, cc), 1e-7);
    }
    c.finish();
}

#[test]
fn criterion_06_two_integer_parameters() {
    let mut c = Criterion::new(6);
    for (n1, n2, cc) in [(2u32, 2u32, 2.5), (2, 1, 2.5), (1, 1, 2.5)] {
        let v = tornheim_two_int(n1, n2, cc, &quad()).unwrap().value;
        c.pair(
            format!("T({n1},{n2},{cc})"),
            v,
            direct(n1 as f64, n2 as f64, cc),
            1e-7,
        );
    }
    c.finish();
}

#[test]
fn criterion_07_integral_closed_forms() {
    let mut c = Criterion::new(7);
    let q = quad();
    let l = loggamma_moments_check(&q).unwrap();
    c.pair("L1 quadrature", l.l1.value, L1, 1e-12);
    c.pair("L1 closed", l.l1_closed, L1, 1e-15);
    c.pair("L2 quadrature", l.l2.value, L2, 1e-9);
    c.pair("L2 closed", l.l2_closed, L2, 1e-12);
    for (a, b) in [(2.0, 2.0), (2.5, 3.5)] {
        for refl in [false, true] {
            c.pair(
                format!("two-zeta {a},{b} reflected={refl}"),
                two_zeta_integral(a, b, refl).unwrap().value,
                two_zeta_integral_quad(a, b, refl, &q).unwrap().value,
                1e-10,
            );
        }
    }
    for m in 1..=3 {
        for n in 1..=3 {
            c.pair(
                format!("N{m}{n}"),
                integral_n(m, n).unwrap().value,
                integral_n_quad(m, n, &q).unwrap().value,
                1e-10,
            );
            c.pair(
                format!("M{m}{n}"),
                integral_m(m, n).unwrap().value,
                integral_m_quad(m, n, &q).unwrap().value,
                1e-10,
            );
            c.pair(
                format!("M*{m}{n}"),
                integral_mstar(m, n).unwrap().value,
                integral_mstar_quad(m, n, &q).unwrap().value,
                1e-10,
            );
        }
    }
    c.pair(
        "N12 vs ζ(3)/4π²",
        integral_n(1, 2).unwrap().value,
        N12,
        1e-12,
    );
    for (n1, n2, n3) in [(2, 2, 1), (1, 1, 1), (2, 2, 3)] {
        c.pair(
            format!("Q2({n1},{n2},{n3})"),
            q2_closed(n1, n2, n3).unwrap().value,
            q_integral_quad(2, n1, n2, n3, &q).unwrap().value,
            1e-10,
        );
    }
    c.finish();
}

#[test]
fn criterion_08_q_machinery() {
    let mut c = Criterion::new(8);
    let q = quad();
    let exact = integral_bbb(1, 1, 2) == BigRational::new(1.into(), 180.into());
    c.add(
        "Q1(1,1,2) = 1/180 exactly",
        if exact { 0.0 } else { 1.0 },
        0.0,
    );
    let q1 = q_integral_quad(1, 1, 1, 2, &q).unwrap().value;
    c.pair("Q1(1,1,2) quadrature", q1, 1.0 / 180.0, 1e-12);
    for j in 3..=6u8 {
        for (n1, n2, n3) in [(2, 2, 2), (2, 3, 1)] {
            let (l, r) = q_recurrence_sides(j, n1, n2, n3, &q).unwrap();
            c.pair(format!("recq{j} ({n1},{n2},{n3})"), l.value, r.value, 1e-8);
        }
    }
    for j in 1..=6u8 {
        for (n1, n2, n3) in [(1, 1, 2), (2, 2, 1)] {
            c.pair(
                format!("R{j}({n1},{n2},{n3})"),
                r_integral(j, n1, n2, n3, &q).unwrap().value,
                r_integral_quad(j, n1, n2, n3, &q).unwrap().value,
                1e-8,
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_09_low_weight_identities() {
    let mut c = Criterion::new(9);
    let rows = weight_table_check(&DirectConfig::default(), &quad()).unwrap();
    for name in [
        "T(1,1,1)", "T(1,1,2)", "T(1,2,1)", "T(1,1,3)", "T(1,2,2)", "T(1,3,1)", "T(2,2,1)",
    ] {
        let r = rows
            .iter()
            .find(|r| r.name == name)
            .unwrap_or_else(|| panic!("missing row {name}"));
        c.add(name, r.residual, 1e-7);
    }
    c.finish();
}

#[test]
fn criterion_10_property_suites() {
    let mut c = Criterion::new(10);
    for n in 0..=5usize {
        for q in [0.1, 0.35, 0.5, 0.8, 1.0] {
            let lhs = hurwitz_zeta(-(n as f64), q).unwrap().value;
            let rhs = -bernoulli_poly(n + 1, q).value / (n + 1) as f64;
            c.pair(format!("zetaber n={n} q={q}"), lhs, rhs, 1e-14);
        }
    }
    for q in [0.05, 0.25, 0.5, 0.75, 1.0] {
        let lhs = hurwitz_zeta_zderiv(0.0, q).unwrap().value;
        let rhs = log_gamma(q).unwrap().value - 0.5 * LN_2PI;
        c.pair(format!("lerch q={q}"), lhs, rhs, 1e-14);
    }
    let qc = quad();
    for m in 2..=6usize {
        let i = integrate_01(
            |q, _| negapolygamma(m, q.min(1.0 - 1e-16)).unwrap().value,
            &qc,
        )
        .unwrap()
        .value;
        c.add(format!("balanced m={m}"), i.abs(), 1e-12);
        for q in [0.2, 0.5, 0.8] {
            c.add(
                format!("ladder m={m} q={q}"),
                negapolygamma_derivative_check(m, q).unwrap(),
                1e-8,
            );
        }
        c.add(
            format!("relation m={m}"),
            relation_residual(m, 0.37).unwrap(),
            1e-13,
        );
    }
    let dcfg = DirectConfig::default();
    for (a, b, cc) in [(2.0, 2.0, 2.0), (3.0, 1.0, 4.0), (1.5, 1.5, 2.5)] {
        let r = prop31_check(a, b, cc, &dcfg, &qc).unwrap();
        c.add(
            format!("trig relation sym ({a},{b},{cc})"),
            r.sym_residual,
            1e-8,
        );
        c.add(
            format!("trig relation nsym ({a},{b},{cc})"),
            r.nsym_residual,
            1e-8,
        );
    }
    for w in [5u32, 7] {
        for a in 0..=w {
            for b in 0..=w - a {
                let cc = w - a - b;
                let t = ParamTriple::ints(a as i64, b as i64, cc as i64);
                if a + b == 0 || t.check_gate().is_err() {
                    continue;
                }
                let h = tornheim_huard(a, b, cc).unwrap().value;
                c.pair(
                    format!("odd weight T({a},{b},{cc})"),
                    h,
                    direct(a as f64, b as f64, cc as f64),
                    1e-10,
                );
            }
        }
    }
    for (a, cc) in [(2, 3), (2, 2)] {
        c.add(
            format!("mzv ({a},{cc})"),
            mzv_check(a, cc, &dcfg).unwrap().residual,
            1e-10,
        );
    }
    c.finish();
}
