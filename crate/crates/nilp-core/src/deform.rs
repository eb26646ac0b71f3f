//! Linear deformations `μ₀ + tφ` inside the two-step nilpotent variety:
//! the three deformation conditions with an independent two-point
//! cross-check, extraction of the deformation cocycle from an algebra with
//! maximal characteristic sequence, the odd-dimensional normal-form family,
//! and membership in the quadratic variety itself.

use crate::cochain::AlternatingCochain;
use crate::cohomology::{delta_c_vanishes, delta_h_vanishes, delta_hc_vanishes};
use crate::lie::StructureTensor;
use crate::matrix::ExactMatrix;
use crate::rational::{qi, Rational};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeformError {
    #[error("BaseNot2Step: base algebra is not two-step nilpotent Lie")]
    BaseNot2Step,
    #[error("DimensionMismatch: direction cochain does not match the base")]
    DimensionMismatch,
    #[error("CharSeqMismatch: characteristic sequence is not maximal (got {got})")]
    CharSeqMismatch { got: String },
    #[error("IndexOutOfRange: family coefficient index ({i},{j},{k}) outside the printed ranges")]
    IndexOutOfRange { i: usize, j: usize, k: usize },
}

/// A base bracket, a skew direction and a parameter value.
#[derive(Debug, Clone)]
pub struct DeformationProblem {
    pub base: StructureTensor,
    pub direction: AlternatingCochain,
    pub parameter: Rational,
}

impl DeformationProblem {
    pub fn new(
        base: StructureTensor,
        direction: AlternatingCochain,
        parameter: Rational,
    ) -> Result<Self, DeformError> {
        if direction.degree() != 2 || direction.dim() != base.dim() {
            return Err(DeformError::DimensionMismatch);
        }
        Ok(Self {
            base,
            direction,
            parameter,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformationConditions {
    pub phi_square_zero: bool,
    pub delta_h_zero: bool,
    pub delta_c_zero: bool,
    pub stays_2step: bool,
}

/// `φ∘φ(X,Y,Z) = φ(φ(X,Y),Z)` vanishes on all basis triples.
pub fn phi_square_zero(phi: &AlternatingCochain) -> bool {
    let n = phi.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let inner = phi.eval_basis(&[i, j]);
            if inner.iter().all(Zero::is_zero) {
                continue;
            }
            for k in 0..n {
                let v = phi.eval_with_vector_at(&[0, k], 0, &inner);
                if v.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// All quadratic variety equations `Σ_l C_{ij}^l C_{lk}^s = 0` with the
/// anticommutative extension, i.e. every double product of basis vectors
/// vanishes. For a tensor satisfying Jacobi this is exactly `nilindex ≤ 2`.
pub fn variety_membership(g: &StructureTensor) -> bool {
    let n = g.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let bij = g.bracket_basis(i, j);
            if bij.iter().all(Zero::is_zero) {
                continue;
            }
            for k in 0..n {
                let v = g.bracket_vectors(&bij, &g.basis_vector(k));
                if v.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// The tensor `μ₀ + t·φ`, with no validity assumed.
pub fn linear_deformation(problem: &DeformationProblem) -> StructureTensor {
    let n = problem.base.dim();
    let mut out = StructureTensor::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut value = problem.base.bracket_basis(i, j);
            let phi_ij = problem.direction.eval_basis(&[i, j]);
            for (slot, c) in value.iter_mut().zip(phi_ij) {
                if !c.is_zero() {
                    *slot += &problem.parameter * c;
                }
            }
            out.set_bracket(i, j, value);
        }
    }
    out
}

/// Evaluate the three deformation conditions on the direction cochain:
/// `φ∘φ = 0`, `δ_H(φ) = 0`, `δ_C(φ) = 0`. `stays_2step` is their
/// conjunction, cross-checked against directly building `μ₀ + tφ` at
/// `t = 1, 2` and testing variety membership (a degree-2 polynomial
/// identity in `t` vanishes everywhere iff it vanishes at 0, 1, 2).
pub fn deformation_conditions(problem: &DeformationProblem) -> Result<DeformationConditions, DeformError> {
    let base = &problem.base;
    if !base.is_lie() || !matches!(base.nilindex(), Ok(p) if p <= 2) {
        return Err(DeformError::BaseNot2Step);
    }
    let phi = &problem.direction;
    let conditions = DeformationConditions {
        phi_square_zero: phi_square_zero(phi),
        delta_h_zero: delta_h_vanishes(base, phi),
        delta_c_zero: delta_c_vanishes(base, phi),
        stays_2step: false,
    };
    let stays = conditions.phi_square_zero && conditions.delta_h_zero && conditions.delta_c_zero;
    let direct = [qi(1), qi(2)].into_iter().all(|t| {
        let shifted = DeformationProblem {
            base: base.clone(),
            direction: phi.clone(),
            parameter: t,
        };
        variety_membership(&linear_deformation(&shifted))
    });
    assert_eq!(stays, direct, "condition formulas disagree with the direct two-point check");
    Ok(DeformationConditions {
        stays_2step: stays,
        ..conditions
    })
}

/// Result of normalising an algebra with maximal characteristic sequence:
/// a basis change `P` after which the tensor reads `μ₀ + φ` over the
/// standard model, and the extracted direction `φ`.
#[derive(Debug, Clone)]
pub struct MaximalDeformation {
    pub basis_change: ExactMatrix,
    pub phi: AlternatingCochain,
}

/// Normalise a two-step algebra of dimension `2p+1` with characteristic
/// sequence `(2,…,2,1)` — or `2p` with `(2,…,2,1,1)` — onto its model:
/// pick a characteristic vector `X₁`, build the Jordan pairs of `ad X₁`
/// from standard basis vectors, and read off `φ` as the leftover brackets
/// between pair-opening vectors. The cocycle conditions on `φ` are
/// verified before returning.
pub fn extract_deformation_maximal(
    g: &StructureTensor,
    samples: usize,
    seed: u64,
) -> Result<MaximalDeformation, DeformError> {
    let n = g.dim();
    if !g.is_lie() || !matches!(g.nilindex(), Ok(p) if p <= 2) {
        return Err(DeformError::BaseNot2Step);
    }
    let pair_count = (n - 1) / 2; // p for odd 2p+1, p−1 for even 2p
    let expected: Vec<usize> = {
        let mut parts = vec![2; pair_count];
        parts.extend(std::iter::repeat_n(1, n - 2 * pair_count));
        parts
    };
    let data = g
        .characteristic_data(samples, seed)
        .map_err(|_| DeformError::BaseNot2Step)?;
    if data.sequence.parts.parts() != expected.as_slice() {
        return Err(DeformError::CharSeqMismatch {
            got: data.sequence.to_string(),
        });
    }
    let x = data.witness;
    let ad_x = g.ad(&x);

    // complement of ker(ad X₁) from standard basis vectors, lexicographic
    let mut spanning: Vec<Vec<Rational>> = ad_x.nullspace_basis();
    let ker_dim = spanning.len();
    let mut openers: Vec<Vec<Rational>> = Vec::new();
    for i in 0..n {
        if openers.len() == pair_count {
            break;
        }
        let e = g.basis_vector(i);
        let mut candidate = spanning.clone();
        candidate.push(e.clone());
        for v in &openers {
            candidate.push(v.clone());
        }
        let rank = {
            let mut rows = candidate;
            crate::matrix::row_reduce(&mut rows, n).len()
        };
        if rank == ker_dim + openers.len() + 1 {
            openers.push(e);
        }
    }
    assert_eq!(openers.len(), pair_count, "complement construction failed");

    // new basis: X₁, then (opener, image) pairs, then completions of the kernel
    let mut columns: Vec<Vec<Rational>> = vec![x.clone()];
    for v in &openers {
        columns.push(v.clone());
        columns.push(ad_x.mul_vec(v));
    }
    let full_rank = |cols: &[Vec<Rational>]| {
        let mut rows = cols.to_vec();
        crate::matrix::row_reduce(&mut rows, n).len()
    };
    // remaining kernel directions: prefer standard basis vectors, fall back
    // to the computed kernel basis (a rotated kernel may contain none)
    let mut fill: Vec<Vec<Rational>> = (0..n).map(|i| g.basis_vector(i)).collect();
    fill.append(&mut spanning);
    for candidate in fill {
        if columns.len() == n {
            break;
        }
        if ad_x.mul_vec(&candidate).iter().any(|c| !c.is_zero()) {
            continue; // completions must live in the kernel
        }
        let mut attempt = columns.clone();
        attempt.push(candidate);
        if full_rank(&attempt) == attempt.len() {
            columns = attempt;
        }
    }
    assert_eq!(columns.len(), n, "kernel completion failed");

    let p_matrix = ExactMatrix::from_fn(n, n, |r, c| columns[c][r].clone());
    let transformed = g
        .change_basis(&p_matrix)
        .expect("columns form a basis by construction");

    // the model part must come out exactly, the rest is φ
    let model = if n % 2 == 1 {
        crate::lie::k_odd(pair_count)
    } else {
        crate::lie::k_even(pair_count + 1)
    };
    let mut phi = AlternatingCochain::zero(2, n);
    for (&(i, j), value) in transformed.brackets() {
        let mut residual = value.clone();
        let base_value = model.bracket_basis(i, j);
        for (slot, b) in residual.iter_mut().zip(&base_value) {
            *slot -= b;
        }
        if residual.iter().all(Zero::is_zero) {
            continue;
        }
        // leftover brackets live on pair-opening vectors (odd 0-based
        // indices) with values among the pair-closing coordinates
        assert!(
            i % 2 == 1 && j % 2 == 1,
            "unexpected residual bracket at ({i},{j})"
        );
        let allowed = |k: usize| {
            let closing = k >= 2 && k.is_multiple_of(2) && k < 2 * pair_count + 1;
            let trailing = n.is_multiple_of(2) && k == n - 1;
            closing || trailing
        };
        for (k, c) in residual.iter().enumerate() {
            assert!(c.is_zero() || allowed(k), "residual value outside the normal form");
        }
        phi.set_pair(i, j, residual);
    }

    // post-hoc cocycle verification
    assert!(phi_square_zero(&phi), "extracted direction fails φ∘φ = 0");
    assert!(delta_hc_vanishes(&model, &phi), "extracted direction is not a cocycle");
    Ok(MaximalDeformation {
        basis_change: p_matrix,
        phi,
    })
}

/// Coefficients `a^{2k+1}_{2i,2j}` of the odd-dimensional normal-form
/// family, keyed by the 1-based triple `(2i, 2j, 2k+1)`.
#[derive(Debug, Clone, Default)]
pub struct FamilyCoefficients {
    pub p: usize,
    pub a: BTreeMap<(usize, usize, usize), Rational>,
}

impl FamilyCoefficients {
    pub fn new(p: usize) -> Self {
        assert!(p >= 1);
        Self {
            p,
            a: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, i2: usize, j2: usize, k_odd: usize, value: Rational) {
        self.a.insert((i2, j2, k_odd), value);
    }
}

/// Build the family member with the given coefficients on top of the
/// odd model: `[X₁,X_{2i}] = X_{2i+1}` plus
/// `[X₂,X₄] = Σ_{k≥3} a X_{2k+1}`, `[X₂,X_{2i}] = Σ_{k≥2} a X_{2k+1}` for
/// `i ≥ 3`, and `[X_{2i},X_{2j}] = Σ_{k≥1} a X_{2k+1}` for `2 ≤ i < j`.
pub fn build_family_f(c: &FamilyCoefficients) -> Result<StructureTensor, DeformError> {
    let p = c.p;
    let n = 2 * p + 1;
    let mut tensor = crate::lie::k_odd(p);
    let mut values: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for (&(r, s, t), coeff) in &c.a {
        let bad = DeformError::IndexOutOfRange { i: r, j: s, k: t };
        // r = 2i < s = 2j even, t = 2k+1 odd and in range
        if r % 2 != 0 || s % 2 != 0 || t % 2 != 1 || r >= s || r < 2 || s > 2 * p || t > n {
            return Err(bad);
        }
        let k = (t - 1) / 2;
        let min_k = if r == 2 && s == 4 {
            3
        } else if r == 2 {
            2
        } else {
            1
        };
        if k < min_k || k > p {
            return Err(bad);
        }
        let entry = values
            .entry((r - 1, s - 1))
            .or_insert_with(|| vec![Rational::zero(); n]);
        entry[t - 1] += coeff;
    }
    for ((i, j), value) in values {
        tensor.set_bracket(i, j, value);
    }
    // every family member is a two-step Lie algebra: targets are central
    assert!(tensor.is_lie(), "family member fails Jacobi");
    assert!(
        matches!(tensor.nilindex(), Ok(q) if q <= 2),
        "family member is not two-step"
    );
    Ok(tensor)
}
