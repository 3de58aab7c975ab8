//! Scalars carrying an absolute error bound, and the result type returned
//! by every evaluator.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::dd::Dd;

const ULP: f64 = f64::EPSILON;

/// An `f64` value together with a nonnegative absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Real {
    pub value: f64,
    pub err: f64,
}

impl Real {
    pub fn new(value: f64, err: f64) -> Self {
        Real {
            value,
            err: err.abs(),
        }
    }

    /// A value known to within rounding of the final conversion.
    pub fn exact(value: f64) -> Self {
        Real {
            value,
            err: 0.5 * ULP * value.abs(),
        }
    }

    pub fn from_dd(x: Dd, err: f64) -> Self {
        let value = x.to_f64();
        Real {
            value,
            err: err.abs() + 0.5 * ULP * value.abs(),
        }
    }

    pub fn abs_diff(self, other: f64) -> f64 {
        (self.value - other).abs()
    }

    pub fn scale(self, k: f64) -> Real {
        self * k
    }

    fn rounded(value: f64, err: f64) -> Real {
        Real {
            value,
            err: err + 0.5 * ULP * value.abs(),
        }
    }
}

impl From<f64> for Real {
    fn from(v: f64) -> Self {
        Real::exact(v)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.17e} ± {:.2e}", self.value, self.err)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            value: -self.value,
            err: self.err,
        }
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, rhs: Real) -> Real {
        Real::rounded(self.value + rhs.value, self.err + rhs.err)
    }
}

impl Sub for Real {
    type Output = Real;
    fn sub(self, rhs: Real) -> Real {
        Real::rounded(self.value - rhs.value, self.err + rhs.err)
    }
}

impl Mul for Real {
    type Output = Real;
    fn mul(self, rhs: Real) -> Real {
        let err = self.value.abs() * rhs.err + rhs.value.abs() * self.err + self.err * rhs.err;
        Real::rounded(self.value * rhs.value, err)
    }
}

impl Div for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        let v = self.value / rhs.value;
        let denom = (rhs.value.abs() - rhs.err).max(f64::MIN_POSITIVE);
        let err = (self.err + v.abs() * rhs.err) / denom;
        Real::rounded(v, err)
    }
}

impl Add<f64> for Real {
    type Output = Real;
    fn add(self, rhs: f64) -> Real {
        self + Real::exact(rhs)
    }
}

impl Sub<f64> for Real {
    type Output = Real;
    fn sub(self, rhs: f64) -> Real {
        self - Real::exact(rhs)
    }
}

impl Mul<f64> for Real {
    type Output = Real;
    fn mul(self, rhs: f64) -> Real {
        Real::rounded(self.value * rhs, self.err * rhs.abs())
    }
}

impl Div<f64> for Real {
    type Output = Real;
    fn div(self, rhs: f64) -> Real {
        Real::rounded(self.value / rhs, self.err / rhs.abs())
    }
}

/// How an evaluation was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    DirectSum,
    HuardOddWeight,
    SubbaraoEven,
    HuardOddSym,
    TornheimClassic,
    AnalyticIJ,
    TwoIntLimit,
    IntegerAssembly,
    MZVDirect,
    ClosedForm,
    Quadrature,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::DirectSum => "direct-sum",
            Method::HuardOddWeight => "huard-odd-weight",
            Method::SubbaraoEven => "subbarao-even",
            Method::HuardOddSym => "huard-odd-sym",
            Method::TornheimClassic => "tornheim-classic",
            Method::AnalyticIJ => "analytic-ij",
            Method::TwoIntLimit => "two-integer-limit",
            Method::IntegerAssembly => "integer-parity-assembly",
            Method::MZVDirect => "mzv-direct",
            Method::ClosedForm => "closed-form",
            Method::Quadrature => "quadrature",
        };
        f.write_str(s)
    }
}

/// Whether `err` is a proven bound or an estimate (level differences,
/// truncation heuristics).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ErrorKind {
    Rigorous,
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub err: f64,
    pub method: Method,
    pub estimate: ErrorKind,
}

impl EvalResult {
    pub fn new(value: Real, method: Method, estimate: ErrorKind) -> Self {
        EvalResult {
            value: value.value,
            err: value.err,
            method,
            estimate,
        }
    }

    pub fn real(&self) -> Real {
        Real::new(self.value, self.err)
    }
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.estimate {
            ErrorKind::Rigorous => "bound",
            ErrorKind::Heuristic => "estimate",
        };
        write!(
            f,
            "{:.17e} (err {:.2e} {}, {})",
            self.value, self.err, kind, self.method
        )
    }
}
