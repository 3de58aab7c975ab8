//! Exact algebra of Bernoulli polynomials: products expanded in the
//! Bernoulli basis, and integrals over (0,1) of products of two or three.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::dd::Dd;
use crate::real::Real;
use crate::specfun::{
    bernoulli_poly_dd, bernoulli_rational, binomial_big, factorial_big, rational_to_dd,
};

/// `Σ_j c_j B_j(q) + constant`, with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BernPolyExpansion {
    pub coeffs: BTreeMap<usize, BigRational>,
    pub constant: BigRational,
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn binom(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binomial_big(n, k))
}

fn fact(n: usize) -> BigRational {
    BigRational::from_integer(factorial_big(n))
}

fn sign(odd: bool) -> BigRational {
    if odd {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

impl BernPolyExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element `B_n(q)`.
    pub fn basis(n: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(n, BigRational::one());
        e
    }

    /// Adds `c B_j(q)`; `B_0 = 1` is folded into the constant.
    pub fn add_term(&mut self, j: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        if j == 0 {
            self.constant += c;
            return;
        }
        let entry = self.coeffs.entry(j).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (j, v) in &self.coeffs {
            out.add_term(*j, v * c);
        }
        out.constant = &self.constant * c;
        out
    }

    pub fn add(&mut self, other: &Self) {
        for (j, v) in &other.coeffs {
            self.add_term(*j, v.clone());
        }
        self.constant += &other.constant;
    }

    /// Multiplies by `B_n(q)` term by term with [`product_expand`].
    pub fn times_bernoulli(&self, n: usize) -> Self {
        let mut out = Self::zero();
        for (j, c) in &self.coeffs {
            out.add(&product_expand(*j, n).scaled(c));
        }
        if !self.constant.is_zero() {
            out.add_term(n, self.constant.clone());
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Value at `q`, evaluated in double-double.
    pub fn eval(&self, q: f64) -> f64 {
        let qd = Dd::from(q);
        let mut s = rational_to_dd(&self.constant);
        for (j, c) in &self.coeffs {
            s += rational_to_dd(c) * bernoulli_poly_dd(*j, qd);
        }
        s.to_f64()
    }

    /// `∫₀¹` of the expansion. Every `B_j` with `j ≥ 1` integrates to zero,
    /// so this is the constant term.
    pub fn integral(&self) -> &BigRational {
        &self.constant
    }
}

impl fmt::Display for BernPolyExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().rev() {
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "({})·B{}(q)", c.abs(), j)?;
            first = false;
        }
        if !self.constant.is_zero() || first {
            if !first {
                f.write_str(if self.constant.is_negative() {
                    " - "
                } else {
                    " + "
                })?;
                write!(f, "{}", self.constant.abs())?;
            } else {
                write!(f, "{}", self.constant)?;
            }
        }
        Ok(())
    }
}

/// `B_{n1}(q) B_{n2}(q)` in the Bernoulli basis.
///
/// Coefficient of `B_{n1+n2-2k}(q)` is
/// `[n1 C(n2,2k) + n2 C(n1,2k)] B_{2k} / (n1+n2-2k)` for
/// `k ≤ max(⌊n1/2⌋, ⌊n2/2⌋)`; the constant is
/// `(-1)^{n1+1} n1! n2! B_{n1+n2} / (n1+n2)!`.
pub fn product_expand(n1: usize, n2: usize) -> BernPolyExpansion {
    assert!(n1 >= 1 && n2 >= 1, "product_expand needs n1, n2 >= 1");
    let mut e = BernPolyExpansion::zero();
    let kmax = (n1 / 2).max(n2 / 2);
    for k in 0..=kmax {
        let w = int(n1) * binom(n2, 2 * k) + int(n2) * binom(n1, 2 * k);
        if w.is_zero() {
            continue;
        }
        let j = n1 + n2 - 2 * k;
        let c = w * bernoulli_rational(2 * k) / int(j);
        e.add_term(j, c);
    }
    e.constant += integral_bb(n1, n2);
    e
}

/// `B_n(q)³` in the Bernoulli basis, from the closed cube formula.
pub fn cube_expand(n: usize) -> BernPolyExpansion {
    assert!(n >= 1, "cube_expand needs n >= 1");
    let mut e = BernPolyExpansion::zero();
    for k in 0..=n / 2 {
        let outer = int(n) * binom(n, 2 * k) / int(n - k) * bernoulli_rational(2 * k);
        if outer.is_zero() {
            continue;
        }
        for j in 0..=n - k {
            let w = int(n) * binom(2 * n - 2 * k, 2 * j) + int(2 * (n - k)) * binom(n, 2 * j);
            let idx = 3 * n - 2 * k - 2 * j;
            let c = &outer * w * bernoulli_rational(2 * j) / int(idx);
            e.add_term(idx, c);
        }
    }
    let s = sign(n.is_multiple_of(2));
    let sq_const = bernoulli_rational(2 * n) / binom(2 * n, n);
    e.add_term(n, &s * sq_const);
    let nf = fact(n);
    let mut c = BigRational::zero();
    for k in 0..=n / 2 {
        c += binom(2 * n - 2 * k - 1, n - 1)
            * bernoulli_rational(2 * k)
            * bernoulli_rational(3 * n - 2 * k)
            / (fact(2 * k) * fact(3 * n - 2 * k));
    }
    e.constant += s * int(2) * &nf * &nf * &nf * c;
    e
}

/// `∫₀¹ B_{n1}(q) B_{n2}(q) dq = (-1)^{n1+1} n1! n2! B_{n1+n2} / (n1+n2)!`.
pub fn integral_bb(n1: usize, n2: usize) -> BigRational {
    assert!(n1 >= 1 && n2 >= 1, "integral_bb needs n1, n2 >= 1");
    sign(n1.is_multiple_of(2)) * fact(n1) * fact(n2) * bernoulli_rational(n1 + n2) / fact(n1 + n2)
}

/// `∫₀¹ B_{n1} B_{n2} B_{n3} dq` by the Carlitz closed form. The formula
/// treats `(n1, n2)` as the expanded pair; the value is symmetric anyway.
pub fn integral_bbb(n1: usize, n2: usize, n3: usize) -> BigRational {
    assert!(
        n1 >= 1 && n2 >= 1 && n3 >= 1,
        "integral_bbb needs indices >= 1"
    );
    let alpha = n1 + n2 + n3;
    let mut s = BigRational::zero();
    for k in 0..=(n1 + n2 - 1) / 2 {
        let w = int(n1) * binom(n2, 2 * k) + int(n2) * binom(n1, 2 * k);
        if w.is_zero() {
            continue;
        }
        s += w * fact(n1 + n2 - 2 * k - 1) / fact(alpha - 2 * k)
            * bernoulli_rational(2 * k)
            * bernoulli_rational(alpha - 2 * k);
    }
    sign(n3.is_multiple_of(2)) * fact(n3) * s
}

/// [`integral_bb`] as a `Real`.
pub fn integral_bb_real(n1: usize, n2: usize) -> Real {
    let d = rational_to_dd(&integral_bb(n1, n2));
    Real::new(d.to_f64(), d.lo.abs())
}

/// [`integral_bbb`] as a `Real`.
pub fn integral_bbb_real(n1: usize, n2: usize, n3: usize) -> Real {
    let d = rational_to_dd(&integral_bbb(n1, n2, n3));
    Real::new(d.to_f64(), d.lo.abs())
}
