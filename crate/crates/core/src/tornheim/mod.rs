//! Evaluators of the Tornheim double series
//! `T(a,b,c) = Σ_{n,m≥1} n^-a m^-b (n+m)^-c`.

mod analytic;
mod checks;
mod closed;
mod direct;
mod integer;

pub use analytic::{
    fourier_identity_check, prop31_check, tornheim_analytic, tornheim_two_int, FourierResiduals,
    Prop31Residuals, INTEGER_GUARD,
};
pub use checks::{k_reduction_check, mzv_check, weight_table_check, IdentityCheck};
pub use closed::{
    tornheim_classics, tornheim_huard, tornheim_reduce, tornheim_symmetric,
    tornheim_symmetric_bernoulli, tornheim_t_i0, Classic, Parity,
};
pub use direct::{tornheim_direct, DirectConfig};
pub use integer::{
    q2_closed, q2_closed_alpha_odd, q_integral, q_integral_quad, q_recurrence_sides, r_integral,
    r_integral_quad, tornheim_integer,
};

use serde::{Deserialize, Serialize};

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::specfun::{cos_pi, gamma, ln_gamma_dd, riemann_jet, sin_pi, zeta_even_dd};

/// Which of the parameters are integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TripleKind {
    AllReal,
    TwoIntOneReal,
    AllInt,
}

/// Parameters `(a, b, c)` of a Tornheim sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamTriple {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub kind: TripleKind,
}

fn is_int(x: f64) -> bool {
    x == x.round() && x.is_finite()
}

impl ParamTriple {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        let kind = match (is_int(a), is_int(b), is_int(c)) {
            (true, true, true) => TripleKind::AllInt,
            (true, true, false) => TripleKind::TwoIntOneReal,
            _ => TripleKind::AllReal,
        };
        Self { a, b, c, kind }
    }

    pub fn ints(n1: i64, n2: i64, n3: i64) -> Self {
        Self::new(n1 as f64, n2 as f64, n3 as f64)
    }

    /// `w = a + b + c`.
    pub fn weight(&self) -> f64 {
        self.a + self.b + self.c
    }

    /// Parities `(n1 even, n2 even, n3 even)` for integer triples.
    pub fn parity_signature(&self) -> Option<[bool; 3]> {
        (self.kind == TripleKind::AllInt)
            .then(|| [self.a, self.b, self.c].map(|x| (x as i64).rem_euclid(2) == 0))
    }

    /// `T(b, a, c)`, equal in value by symmetry.
    pub fn swapped(&self) -> Self {
        Self::new(self.b, self.a, self.c)
    }

    /// The direct-summation region `a+c > 1`, `b+c > 1`, `a+b+c > 2`.
    pub fn check_gate(&self) -> Result<()> {
        let (a, b, c) = (self.a, self.b, self.c);
        let reason = if ![a, b, c].iter().all(|x| x.is_finite()) {
            Some("parameters must be finite")
        } else if !(a + c > 1.0) {
            Some("a + c must exceed 1")
        } else if !(b + c > 1.0) {
            Some("b + c must exceed 1")
        } else if !(a + b + c > 2.0) {
            Some("a + b + c must exceed 2")
        } else {
            None
        };
        match reason {
            Some(r) => Err(Error::ConvergenceGate { a, b, c, reason: r }),
            None => Ok(()),
        }
    }
}

impl std::fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T({}, {}, {})", self.a, self.b, self.c)
    }
}

/// `f_c(z) = 2Γ(z) cos(πz/2) / (2π)^z`, `f_s(z)` with sine, and
/// `λ(z) = Γ(1-z) / (2π)^{1-z}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrigWeights {
    pub f_c: f64,
    pub f_s: f64,
    pub lambda: f64,
}

impl TrigWeights {
    /// Weights at `z > 0`; `λ` is infinite at the positive integers.
    pub fn at(z: f64) -> Self {
        let amp = two_gamma_over_pow(z);
        let lambda = if is_int(z) && z >= 1.0 {
            f64::INFINITY
        } else {
            gamma(1.0 - z).unwrap_or(f64::INFINITY) / (2.0 * std::f64::consts::PI).powf(1.0 - z)
        };
        Self {
            f_c: amp * cos_pi(z / 2.0),
            f_s: amp * sin_pi(z / 2.0),
            lambda,
        }
    }
}

/// `2Γ(z) / (2π)^z` for `z > 0`.
fn two_gamma_over_pow(z: f64) -> f64 {
    ((ln_gamma_dd(z) - (Dd::PI * 2.0).ln() * z).exp() * 2.0).to_f64()
}

/// `ζ(n)` for `n = 0` or `n ≥ 2`, in double-double.
pub(crate) fn zeta_int_dd(n: i64) -> Dd {
    assert!(n == 0 || n >= 2, "zeta_int_dd({n})");
    if n % 2 == 0 {
        zeta_even_dd((n / 2) as usize)
    } else {
        riemann_jet(n as f64).0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn kinds_and_parity() {
        assert_eq!(ParamTriple::new(1.0, 2.0, 3.0).kind, TripleKind::AllInt);
        assert_eq!(
            ParamTriple::new(1.0, 2.0, 2.5).kind,
            TripleKind::TwoIntOneReal
        );
        assert_eq!(ParamTriple::new(1.5, 2.0, 3.0).kind, TripleKind::AllReal);
        assert_eq!(
            ParamTriple::ints(2, 1, 4).parity_signature(),
            Some([true, false, true])
        );
        assert_eq!(ParamTriple::new(1.5, 2.0, 3.0).parity_signature(), None);
        assert_eq!(ParamTriple::ints(4, 3, 2).weight(), 9.0);
    }

    #[test]
    fn gate() {
        assert!(ParamTriple::ints(0, 1, 3).check_gate().is_ok());
        assert!(ParamTriple::ints(2, 3, 0).check_gate().is_ok());
        assert!(ParamTriple::ints(1, 1, 0).check_gate().is_err());
        assert!(ParamTriple::ints(1, 0, 1).check_gate().is_err());
        assert!(ParamTriple::new(0.5, 0.5, 0.9).check_gate().is_err());
    }

    #[test]
    fn trig_weights() {
        for &z in &[1.5, 2.0, 2.5, 3.7] {
            let w = TrigWeights::at(z);
            let amp = 2.0 * crate::specfun::gamma(z).unwrap() / (2.0 * PI).powf(z);
            assert!((w.f_c.powi(2) + w.f_s.powi(2) - amp * amp).abs() < 1e-15);
        }
        assert!(TrigWeights::at(2.0).lambda.is_infinite());
        assert!(TrigWeights::at(2.5).lambda.is_finite());
        assert_eq!(TrigWeights::at(3.0).f_c, 0.0);
        assert_eq!(TrigWeights::at(2.0).f_s, 0.0);
    }

    #[test]
    fn integer_zeta() {
        assert_eq!(zeta_int_dd(0).to_f64(), -0.5);
        assert!((zeta_int_dd(2).to_f64() - PI * PI / 6.0).abs() < 1e-16);
        assert!((zeta_int_dd(3).to_f64() - 1.202_056_903_159_594_2).abs() < 1e-16);
    }
}
