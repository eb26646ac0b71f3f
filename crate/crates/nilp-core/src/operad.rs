//! Generating-function arithmetic for the operad dimension identities:
//! truncated power series over ℚ, the dual dimension recurrence, the
//! functional-equation check for Koszul duality and the small arity-4
//! dimension constants.

use crate::rational::{qi, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperadError {
    #[error("OrderMismatch: series have different truncation orders")]
    OrderMismatch,
}

/// Truncated univariate power series with zero constant term: coefficients
/// of `x^1 … x^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl FormalSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1);
        Self {
            order,
            coeffs: vec![Rational::zero(); order],
        }
    }

    /// Build from coefficients `c_1..c_k`, padded with zeros up to `order`.
    pub fn from_coeffs(order: usize, coeffs: &[Rational]) -> Self {
        assert!(coeffs.len() <= order, "too many coefficients for the order");
        let mut s = Self::zero(order);
        s.coeffs[..coeffs.len()].clone_from_slice(coeffs);
        s
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = qi(1);
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^d` for `1 ≤ d ≤ order`.
    pub fn coeff(&self, d: usize) -> &Rational {
        assert!((1..=self.order).contains(&d));
        &self.coeffs[d - 1]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `f(−x)` with an overall sign: `sign·f(sign·x)` specialised to the
    /// substitution needed by the functional equation.
    fn negate_argument(&self) -> Self {
        let mut out = self.clone();
        for (d, c) in out.coeffs.iter_mut().enumerate() {
            // the coefficient of x^{d+1} picks up (−1)^{d+1}
            if d % 2 == 0 && !c.is_zero() {
                *c = -c.clone();
            }
        }
        out
    }

    fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            if !c.is_zero() {
                *c = -c.clone();
            }
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let order = self.order;
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let da = i + 1;
            for (j, b) in other.coeffs.iter().enumerate() {
                let db = j + 1;
                if da + db > order {
                    break;
                }
                if !b.is_zero() {
                    out.coeffs[da + db - 1] += a * b;
                }
            }
        }
        out
    }
}

/// Coefficients of `f(g(x))` truncated at the common order. Both series
/// have zero constant term, so the composition is well defined degree by
/// degree.
pub fn series_compose(f: &FormalSeries, g: &FormalSeries) -> Result<FormalSeries, OperadError> {
    if f.order != g.order {
        return Err(OperadError::OrderMismatch);
    }
    let order = f.order;
    let mut out = FormalSeries::zero(order);
    // powers g^k contribute only to degrees ≥ k
    let mut power = g.clone();
    for k in 1..=order {
        let c = &f.coeffs[k - 1];
        if !c.is_zero() {
            for d in k..=order {
                let term = c * &power.coeffs[d - 1];
                if !term.is_zero() {
                    out.coeffs[d - 1] += term;
                }
            }
        }
        if k < order {
            power = power.mul(g);
        }
    }
    Ok(out)
}

/// The quadratic generating function `x + x²/2`, padded to the requested
/// truncation order (`N ≥ 2`).
pub fn gen_function_2nilp(order: usize) -> FormalSeries {
    assert!(order >= 2, "order must be at least 2");
    FormalSeries::from_coeffs(order, &[qi(1), crate::rational::q(1, 2)])
}

/// Dual operad dimensions `d_1 … d_kmax` from the split even/odd
/// recurrence with binomial weights; `d_1 = d_2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualDims {
    pub d: Vec<BigInt>,
}

pub fn dual_dims(kmax: usize) -> DualDims {
    assert!(kmax >= 2);
    let mut d: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    while d.len() < kmax {
        let m = d.len() + 1; // computing d_m
        let value = if m % 2 == 1 {
            let k = (m - 1) / 2;
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += binomial(m, i) * &d[i - 1] * &d[m - i - 1];
            }
            acc
        } else {
            let k = m / 2;
            let mut acc = BigInt::zero();
            for i in 1..k {
                acc += binomial(m, i) * &d[i - 1] * &d[m - i - 1];
            }
            // the middle term counts unordered halves once
            let middle = binomial(m, k) * &d[k - 1] * &d[k - 1];
            debug_assert!((&middle % BigInt::from(2)).is_zero());
            acc + middle / BigInt::from(2)
        };
        d.push(value);
    }
    DualDims { d }
}

/// Exact binomial coefficient via Pascal recursion.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The dual generating function `Σ d_k/k! x^k` at the given order.
pub fn series_from_dual_dims(dims: &DualDims, order: usize) -> FormalSeries {
    assert!(dims.d.len() >= order, "not enough dual dimensions for the order");
    let mut factorial = BigInt::one();
    let coeffs: Vec<Rational> = (1..=order)
        .map(|k| {
            factorial *= BigInt::from(k);
            Rational::new(dims.d[k - 1].clone(), factorial.clone())
        })
        .collect();
    FormalSeries::from_coeffs(order, &coeffs)
}

/// Koszul functional equation: `f(−fdual(−x)) = x` up to the truncation
/// order.
pub fn koszul_check(f: &FormalSeries, fdual: &FormalSeries, order: usize) -> Result<bool, OperadError> {
    if f.order < order || fdual.order < order {
        return Err(OperadError::OrderMismatch);
    }
    let truncate = |s: &FormalSeries| FormalSeries::from_coeffs(order, &s.coeffs[..order]);
    let inner = truncate(fdual).negate_argument().neg(); // −fdual(−x)
    let composed = series_compose(&truncate(f), &inner)?;
    Ok(composed == FormalSeries::x(order))
}

/// Σ₂-module generating a free operad: either a one-dimensional
/// representation (trivial or sign) or the regular representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    OneDimensional,
    Regular,
}

/// Arity-`n` dimension of the free binary operad on the generator: the
/// double factorial `(2n−3)!!` for a one-dimensional generator, and
/// `n!·Catalan(n−1)` for the regular representation.
pub fn free_operad_dims(generator: Generator, n: usize) -> BigInt {
    assert!(n >= 1);
    match generator {
        Generator::OneDimensional => double_factorial_odd(n),
        Generator::Regular => {
            let mut factorial = BigInt::one();
            for i in 2..=n {
                factorial *= BigInt::from(i);
            }
            let catalan = binomial(2 * (n - 1), n - 1) / BigInt::from(n);
            factorial * catalan
        }
    }
}

/// `(2n−3)!!` with the empty products at `n = 1, 2` equal to 1.
pub fn double_factorial_odd(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = 3i64;
    while k <= 2 * n as i64 - 3 {
        acc *= BigInt::from(k);
        k += 2;
    }
    acc
}

/// The three arity-4 dimension constants of the cubic operads: the free
/// quotient of the regular generator (24), the relation module of the
/// Jordan identity (4) and the Jordan quotient `15 − 4 = 11`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicOperadDims {
    pub asscubic4: usize,
    pub jordan_relation4: usize,
    pub jord4: usize,
}

use serde::Serialize;

pub fn cubic_operad_dims() -> CubicOperadDims {
    let gamma_one_dim_4 = 15usize;
    let jordan_relation4 = 4usize;
    CubicOperadDims {
        asscubic4: 24,
        jordan_relation4,
        jord4: gamma_one_dim_4 - jordan_relation4,
    }
}
