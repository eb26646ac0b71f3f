//! The mixed deformation complex of a two-step nilpotent Lie algebra and
//! the classical chain complex on the exterior algebra.
//!
//! Three degree-2 coboundary operators act on skew bilinear maps: the
//! Hochschild one `delta_h`, the Chevalley one `delta_c`, and the two-term
//! mixed operator `delta_hc` whose kernel cuts out both at once. The
//! trilinear values of these operators are not alternating in general, so
//! each comes in two forms: a pointwise evaluator `*_at` (the actual
//! operator, used for cocycle conditions and kernel matrices) and a
//! projection onto alternating 3-cochains by full antisymmetrisation.
//!
//! Cocycle spaces are computed from the pointwise operator: since the
//! input cochain is skew it suffices to impose the value on `(X_i, X_j, X_k)`
//! with `i < j` and `k` arbitrary, and the kernel of that matrix is `Z²`.
//! `B²` is the image of the coboundary of linear maps, `δf(X,Y) =
//! [fX,Y] + [X,fY] − f[X,Y]`.

use crate::cochain::{increasing_tuples, AlternatingCochain};
use crate::lie::StructureTensor;
use crate::matrix::ExactMatrix;
use crate::parallel;
use crate::rational::Rational;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("DimensionMismatch: cochain does not match the algebra")]
    DimensionMismatch,
    #[error("NotLie: Jacobi identity fails")]
    NotLie,
    #[error("Not2Step: algebra is not two-step nilpotent")]
    Not2Step,
    #[error("DegreeOutOfRange: chain degree must lie in 1..=dim")]
    DegreeOutOfRange,
}

fn check_degree2(g: &StructureTensor, phi: &AlternatingCochain) -> Result<(), CohomologyError> {
    if phi.degree() != 2 || phi.dim() != g.dim() {
        return Err(CohomologyError::DimensionMismatch);
    }
    Ok(())
}

// ---- pointwise operators ---------------------------------------------------

/// `δ_H(φ)(X_x, X_y, X_z) = μ(X,φ(Y,Z)) − φ(μ(X,Y),Z) + φ(X,μ(Y,Z)) − μ(φ(X,Y),Z)`.
pub fn delta_h_at(g: &StructureTensor, phi: &AlternatingCochain, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let ex = g.basis_vector(x);
    let ez = g.basis_vector(z);
    let mut out = g.bracket_vectors(&ex, &phi.eval_basis(&[y, z]));
    for (slot, v) in out.iter_mut().zip(phi.eval_with_vector_at(&[0, z], 0, &g.bracket_basis(x, y))) {
        *slot -= v;
    }
    for (slot, v) in out.iter_mut().zip(phi.eval_with_vector_at(&[x, 0], 1, &g.bracket_basis(y, z))) {
        *slot += v;
    }
    for (slot, v) in out.iter_mut().zip(g.bracket_vectors(&phi.eval_basis(&[x, y]), &ez)) {
        *slot -= v;
    }
    out
}

/// The six-term Chevalley operator: cyclic sum of `μ(φ(·,·),·) + φ(μ(·,·),·)`.
pub fn delta_c_at(g: &StructureTensor, phi: &AlternatingCochain, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); g.dim()];
    for &(a, b, c) in &[(x, y, z), (y, z, x), (z, x, y)] {
        let ec = g.basis_vector(c);
        for (slot, v) in out.iter_mut().zip(g.bracket_vectors(&phi.eval_basis(&[a, b]), &ec)) {
            *slot += v;
        }
        for (slot, v) in out.iter_mut().zip(phi.eval_with_vector_at(&[0, c], 0, &g.bracket_basis(a, b))) {
            *slot += v;
        }
    }
    out
}

/// The mixed two-term operator `δ_{H,C}(φ)(X,Y,Z) = φ(μ(X,Y),Z) + μ(φ(X,Y),Z)`.
pub fn delta_hc_at(g: &StructureTensor, phi: &AlternatingCochain, x: usize, y: usize, z: usize) -> Vec<Rational> {
    let ez = g.basis_vector(z);
    let mut out = phi.eval_with_vector_at(&[0, z], 0, &g.bracket_basis(x, y));
    for (slot, v) in out.iter_mut().zip(g.bracket_vectors(&phi.eval_basis(&[x, y]), &ez)) {
        *slot += v;
    }
    out
}

fn vanishes_pointwise(
    g: &StructureTensor,
    phi: &AlternatingCochain,
    op: impl Fn(&StructureTensor, &AlternatingCochain, usize, usize, usize) -> Vec<Rational>,
) -> bool {
    let n = g.dim();
    for x in 0..n {
        for y in (x + 1)..n {
            for z in 0..n {
                if op(g, phi, x, y, z).iter().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// `δ_H(φ) = 0` as a trilinear map. By skewness of `φ` it is enough to
/// test `x < y` with `z` arbitrary.
pub fn delta_h_vanishes(g: &StructureTensor, phi: &AlternatingCochain) -> bool {
    vanishes_pointwise(g, phi, delta_h_at)
}

pub fn delta_c_vanishes(g: &StructureTensor, phi: &AlternatingCochain) -> bool {
    vanishes_pointwise(g, phi, delta_c_at)
}

pub fn delta_hc_vanishes(g: &StructureTensor, phi: &AlternatingCochain) -> bool {
    vanishes_pointwise(g, phi, delta_hc_at)
}

// ---- alternating projections -----------------------------------------------

const S3: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
];

fn alternate3(
    g: &StructureTensor,
    phi: &AlternatingCochain,
    op: impl Fn(&StructureTensor, &AlternatingCochain, usize, usize, usize) -> Vec<Rational> + Sync,
) -> AlternatingCochain {
    let n = g.dim();
    let tuples = increasing_tuples(n, 3);
    let values: Vec<Vec<Rational>> = parallel::map_indexed(tuples.len(), 64, |t| {
        let tuple = &tuples[t];
        let mut acc = vec![Rational::zero(); n];
        for (perm, sign) in S3 {
            let args = [tuple[perm[0]], tuple[perm[1]], tuple[perm[2]]];
            let v = op(g, phi, args[0], args[1], args[2]);
            for (slot, x) in acc.iter_mut().zip(v) {
                if !x.is_zero() {
                    if sign > 0 {
                        *slot += x;
                    } else {
                        *slot -= x;
                    }
                }
            }
        }
        acc
    });
    let mut out = AlternatingCochain::zero(3, n);
    for (tuple, value) in tuples.into_iter().zip(values) {
        out.set(tuple, value);
    }
    out
}

/// Antisymmetrisation of [`delta_h_at`] as an alternating 3-cochain.
pub fn delta_h(g: &StructureTensor, phi: &AlternatingCochain) -> Result<AlternatingCochain, CohomologyError> {
    check_degree2(g, phi)?;
    Ok(alternate3(g, phi, delta_h_at))
}

/// Antisymmetrisation of [`delta_c_at`]; the Chevalley values are already
/// alternating for skew input so this is six times the pointwise value.
pub fn delta_c(g: &StructureTensor, phi: &AlternatingCochain) -> Result<AlternatingCochain, CohomologyError> {
    check_degree2(g, phi)?;
    Ok(alternate3(g, phi, delta_c_at))
}

/// Antisymmetrisation of [`delta_hc_at`] as an alternating 3-cochain.
pub fn delta_hc(g: &StructureTensor, phi: &AlternatingCochain) -> Result<AlternatingCochain, CohomologyError> {
    check_degree2(g, phi)?;
    Ok(alternate3(g, phi, delta_hc_at))
}

// ---- the general coboundary ------------------------------------------------

/// Pointwise value of the degree-`n` coboundary on basis indices `args`
/// (length `n+1`): the leading term `μ(X_1, ψ(X_2,…))` plus the printed
/// sum of `ψ` evaluated with one adjacent pair bracketed. The pair pattern
/// differs between even and odd `n`.
pub fn delta_hc_general_at(g: &StructureTensor, psi: &AlternatingCochain, args: &[usize]) -> Vec<Rational> {
    let n = psi.degree();
    assert_eq!(args.len(), n + 1, "argument tuple has wrong arity");
    let head = g.basis_vector(args[0]);
    let mut out = g.bracket_vectors(&head, &psi.eval_basis(&args[1..]));
    // 0-based positions of the bracketed pairs in the argument list
    let pairs: Vec<(usize, usize)> = if n.is_multiple_of(2) {
        (1..=n / 2).map(|i| (2 * i - 1, 2 * i)).collect()
    } else {
        (1..=(n - 1) / 2).map(|i| (2 * i, 2 * i + 1)).collect()
    };
    for (u, v) in pairs {
        let bracket = g.bracket_basis(args[u], args[v]);
        // ψ applied to the argument list with slots u,v merged at u
        let mut reduced: Vec<usize> = Vec::with_capacity(n);
        for (pos, &a) in args.iter().enumerate() {
            if pos != v {
                reduced.push(a);
            }
        }
        let merged_pos = u; // v > u, so u keeps its position
        for (slot, x) in out.iter_mut().zip(psi.eval_with_vector_at(&reduced, merged_pos, &bracket)) {
            *slot += x;
        }
    }
    out
}

/// The degree-`n` coboundary as an `(n+1)`-cochain, defined by evaluating
/// the printed formula on strictly increasing tuples (no symmetrisation:
/// the input is already alternating).
pub fn delta_hc_general(g: &StructureTensor, psi: &AlternatingCochain) -> Result<AlternatingCochain, CohomologyError> {
    if psi.dim() != g.dim() || psi.degree() < 1 {
        return Err(CohomologyError::DimensionMismatch);
    }
    let n = g.dim();
    let out_degree = psi.degree() + 1;
    let mut out = AlternatingCochain::zero(out_degree, n);
    if out_degree > n {
        return Ok(out);
    }
    let tuples = increasing_tuples(n, out_degree);
    let values: Vec<Vec<Rational>> =
        parallel::map_indexed(tuples.len(), 64, |t| delta_hc_general_at(g, psi, &tuples[t]));
    for (tuple, value) in tuples.into_iter().zip(values) {
        out.set(tuple, value);
    }
    Ok(out)
}

// ---- degree-1 coboundary and the cocycle/coboundary matrices ---------------

/// `δf(X,Y) = [fX, Y] + [X, fY] − f([X,Y])` for a linear map `f` given by
/// its coordinate matrix (`f(X_l)` is column `l`). Its image is `B²`.
pub fn delta1(g: &StructureTensor, f: &ExactMatrix) -> AlternatingCochain {
    let n = g.dim();
    assert_eq!((f.rows(), f.cols()), (n, n), "endomorphism has wrong shape");
    let mut out = AlternatingCochain::zero(2, n);
    for i in 0..n {
        let fi = f.col(i);
        for j in (i + 1)..n {
            let fj = f.col(j);
            let mut value = g.bracket_vectors(&fi, &g.basis_vector(j));
            for (slot, v) in value.iter_mut().zip(g.bracket_vectors(&g.basis_vector(i), &fj)) {
                *slot += v;
            }
            for (slot, v) in value.iter_mut().zip(f.mul_vec(&g.bracket_basis(i, j))) {
                *slot -= v;
            }
            out.set_pair(i, j, value);
        }
    }
    out
}

/// Index of the increasing pair `(i,j)` in lexicographic order.
fn pair_position(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // pairs (0,1),(0,2),…,(0,n−1),(1,2),…
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Matrix of the pointwise mixed operator on skew 2-cochains. Columns are
/// indexed by (pair, output coordinate); rows by (pair `i<j`, `k`, coordinate),
/// with all-zero rows dropped. `Z²` is its kernel, of dimension
/// `n·C(n,2) − rank`.
pub fn delta_hc_pointwise_matrix(g: &StructureTensor) -> ExactMatrix {
    let n = g.dim();
    let pairs = increasing_tuples(n, 2);
    let cols = pairs.len() * n;
    let blocks: Vec<Vec<Vec<Rational>>> = parallel::map_indexed(pairs.len(), 8, |p| {
        let (i, j) = (pairs[p][0], pairs[p][1]);
        let mut rows = Vec::new();
        let bij = g.bracket_basis(i, j);
        for k in 0..n {
            // block of n scalar rows: the vector equation at (X_i, X_j, X_k)
            let mut block: Vec<Vec<Rational>> = vec![vec![Rational::zero(); cols]; n];
            // φ(μ(X_i,X_j), X_k): unknown pairs (l,k) weighted by the bracket
            for (l, gamma) in bij.iter().enumerate() {
                if gamma.is_zero() || l == k {
                    continue;
                }
                let (a, b, sign) = if l < k { (l, k, 1) } else { (k, l, -1) };
                let base = pair_position(n, a, b) * n;
                for t in 0..n {
                    if sign > 0 {
                        block[t][base + t] += gamma;
                    } else {
                        block[t][base + t] -= gamma;
                    }
                }
            }
            // μ(φ(X_i,X_j), X_k): unknown (i,j) output coordinate u
            let base = pair_position(n, i, j) * n;
            for u in 0..n {
                let v = g.bracket_basis(u, k);
                for (t, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        block[t][base + u] += c;
                    }
                }
            }
            for row in block {
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        rows
    });
    let rows: Vec<Vec<Rational>> = blocks.into_iter().flatten().collect();
    if rows.is_empty() {
        ExactMatrix::zero(0, cols)
    } else {
        ExactMatrix::from_rows(rows)
    }
}

/// Matrix of [`delta1`] from endomorphisms (columns `(s,l) = s·n + l`) to
/// skew 2-cochain coordinates. `B²` is its rank; its kernel is `Der(g)`.
pub fn delta1_matrix(g: &StructureTensor) -> ExactMatrix {
    let n = g.dim();
    let col = |s: usize, l: usize| s * n + l;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let bij = g.bracket_basis(i, j);
            for t in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for s in 0..n {
                    let c_sj = g.bracket_basis(s, j);
                    if !c_sj[t].is_zero() {
                        row[col(s, i)] += &c_sj[t];
                    }
                    let c_is = g.bracket_basis(i, s);
                    if !c_is[t].is_zero() {
                        row[col(s, j)] += &c_is[t];
                    }
                }
                for (c, gamma) in bij.iter().enumerate() {
                    if !gamma.is_zero() {
                        row[col(t, c)] -= gamma;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        ExactMatrix::zero(0, n * n)
    } else {
        ExactMatrix::from_rows(rows)
    }
}

/// Exact dimensions of the degree-2 deformation cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    #[serde(rename = "dimZ2")]
    pub dim_z2: usize,
    #[serde(rename = "dimB2")]
    pub dim_b2: usize,
    #[serde(rename = "dimH2")]
    pub dim_h2: usize,
    #[serde(rename = "rigid")]
    pub rigid_in_2nilp: bool,
    /// Whether the input algebra is two-step nilpotent; the rigidity flag
    /// is only meaningful when it is.
    #[serde(skip)]
    pub two_step: bool,
}

pub fn cohomology_dims_hc(g: &StructureTensor) -> Result<CohomologyReport, CohomologyError> {
    if !g.is_lie() {
        return Err(CohomologyError::NotLie);
    }
    let n = g.dim();
    let cochain_dim = n * (n * (n - 1) / 2);
    let (z2_rank, dim_b2) = parallel::join(
        || delta_hc_pointwise_matrix(g).rank(),
        || delta1_matrix(g).rank(),
    );
    let dim_z2 = cochain_dim - z2_rank;
    assert!(dim_z2 >= dim_b2, "coboundaries must be cocycles");
    let two_step = matches!(g.nilindex(), Ok(p) if p <= 2);
    let dim_h2 = dim_z2 - dim_b2;
    Ok(CohomologyReport {
        dim_z2,
        dim_b2,
        dim_h2,
        rigid_in_2nilp: two_step && dim_h2 == 0,
        two_step,
    })
}

/// Outcome of the rigidity test: vanishing `H²` certifies an open orbit in
/// the two-step variety, anything else is inconclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum Rigidity {
    RigidIn2Nilp,
    Inconclusive { dim_h2: usize },
}

pub fn rigidity_certificate(g: &StructureTensor) -> Result<Rigidity, CohomologyError> {
    if !g.is_lie() {
        return Err(CohomologyError::NotLie);
    }
    match g.nilindex() {
        Ok(p) if p <= 2 => {}
        _ => return Err(CohomologyError::Not2Step),
    }
    let report = cohomology_dims_hc(g)?;
    Ok(if report.dim_h2 == 0 {
        Rigidity::RigidIn2Nilp
    } else {
        Rigidity::Inconclusive {
            dim_h2: report.dim_h2,
        }
    })
}

// ---- exterior-algebra chain complex -----------------------------------------

/// Element of `Λ^p g` in the wedge basis of increasing tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeChain {
    degree: usize,
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl WedgeChain {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Self {
            degree,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn set(&mut self, tuple: Vec<usize>, value: Rational) {
        assert_eq!(tuple.len(), self.degree);
        assert!(
            tuple.windows(2).all(|w| w[0] < w[1]) && tuple.iter().all(|&i| i < self.dim),
            "tuple must be strictly increasing and in range"
        );
        if value.is_zero() {
            self.coeffs.remove(&tuple);
        } else {
            self.coeffs.insert(tuple, value);
        }
    }

    pub fn basis_element(degree: usize, dim: usize, tuple: Vec<usize>) -> Self {
        let mut c = Self::zero(degree, dim);
        c.set(tuple, crate::rational::qi(1));
        c
    }

    pub fn coeff(&self, tuple: &[usize]) -> Rational {
        self.coeffs.get(tuple).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coeffs.iter()
    }

    fn add_scaled_wedge(&mut self, tuple: Vec<usize>, value: Rational) {
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(tuple).or_insert_with(Rational::zero);
        *entry += value;
        // drop cancelled entries lazily
    }

    fn normalise(&mut self) {
        self.coeffs.retain(|_, v| !v.is_zero());
    }
}

/// Boundary of a single wedge basis element, accumulated into `out`:
/// `∂(x_1∧…∧x_p) = Σ_{a<b} (−1)^{a+b+1} [x_a,x_b] ∧ x_1 ∧ … x̂_a … x̂_b … ∧ x_p`.
fn boundary_of_basis(g: &StructureTensor, tuple: &[usize], scale: &Rational, out: &mut WedgeChain) {
    let p = tuple.len();
    for u in 0..p {
        for v in (u + 1)..p {
            // (−1)^{a+b+1} with 1-based positions a = u+1, b = v+1
            let sign_positive = (u + v + 1) % 2 == 0;
            let bracket = g.bracket_basis(tuple[u], tuple[v]);
            let rest: Vec<usize> = tuple
                .iter()
                .enumerate()
                .filter(|&(pos, _)| pos != u && pos != v)
                .map(|(_, &x)| x)
                .collect();
            for (c, gamma) in bracket.iter().enumerate() {
                if gamma.is_zero() || rest.contains(&c) {
                    continue;
                }
                // insert c into the increasing rest, counting crossings
                let insert_at = rest.iter().take_while(|&&r| r < c).count();
                let mut wedge = rest.clone();
                wedge.insert(insert_at, c);
                let mut coeff = scale * gamma;
                let crossings = insert_at;
                if (crossings % 2 == 1) ^ !sign_positive {
                    coeff = -coeff;
                }
                out.add_scaled_wedge(wedge, coeff);
            }
        }
    }
}

/// The chain boundary `∂_p : Λ^p g → Λ^{p−1} g`; zero for `p ≤ 1`.
pub fn ce_boundary(g: &StructureTensor, p: usize, chain: &WedgeChain) -> Result<WedgeChain, CohomologyError> {
    if p < 1 || p > g.dim() {
        return Err(CohomologyError::DegreeOutOfRange);
    }
    if chain.degree != p || chain.dim != g.dim() {
        return Err(CohomologyError::DimensionMismatch);
    }
    let mut out = WedgeChain::zero(p.saturating_sub(1), g.dim());
    if p == 1 {
        return Ok(out);
    }
    for (tuple, coeff) in &chain.coeffs {
        boundary_of_basis(g, tuple, coeff, &mut out);
    }
    out.normalise();
    Ok(out)
}

/// Matrix of `∂_p` in the wedge bases (rows: `(p−1)`-tuples, cols: `p`-tuples).
pub fn ce_boundary_matrix(g: &StructureTensor, p: usize) -> ExactMatrix {
    let n = g.dim();
    assert!(p >= 1 && p <= n);
    let domain = increasing_tuples(n, p);
    let codomain = increasing_tuples(n, p - 1);
    let row_index: BTreeMap<&Vec<usize>, usize> =
        codomain.iter().enumerate().map(|(r, t)| (t, r)).collect();
    let mut m = ExactMatrix::zero(codomain.len(), domain.len());
    if p == 1 {
        return m;
    }
    for (c, tuple) in domain.iter().enumerate() {
        let mut out = WedgeChain::zero(p - 1, n);
        boundary_of_basis(g, tuple, &crate::rational::qi(1), &mut out);
        out.normalise();
        for (wedge, coeff) in out.support() {
            let r = row_index[wedge];
            *m.at_mut(r, c) = coeff.clone();
        }
    }
    m
}

/// Homology dimensions `m_0, …, m_n` of the exterior-algebra complex,
/// with `∂∘∂ = 0` verified along the way.
pub fn ce_homology_dims(g: &StructureTensor) -> Result<Vec<usize>, CohomologyError> {
    if !g.is_lie() {
        return Err(CohomologyError::NotLie);
    }
    let n = g.dim();
    let matrices: Vec<ExactMatrix> = parallel::map_indexed(n, 2, |p| ce_boundary_matrix(g, p + 1));
    // per-degree ranks and the square-to-zero compositions are independent
    let ranks: Vec<usize> = parallel::map_indexed(n, 2, |p| matrices[p].rank());
    let squares: Vec<bool> = parallel::map_indexed(n - 1, 2, |p| {
        matrices[p].mul(&matrices[p + 1]).is_zero()
    });
    assert!(
        squares.into_iter().all(|ok| ok),
        "boundary does not square to zero"
    );
    let rank = |p: usize| -> usize {
        if p >= 1 && p <= n {
            ranks[p - 1]
        } else {
            0
        }
    };
    let binom = |p: usize| increasing_tuples(n, p).len();
    Ok((0..=n)
        .map(|p| {
            let kernel = if p == 0 { 1 } else { binom(p) - rank(p) };
            kernel - rank(p + 1)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, free_two_step, heisenberg, k_odd};
    use crate::rational::qi;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn h3() -> StructureTensor {
        heisenberg(1)
    }

    fn phi_on(dim: usize, i: usize, j: usize, target: usize) -> AlternatingCochain {
        let mut phi = AlternatingCochain::zero(2, dim);
        let mut v = vec![Rational::zero(); dim];
        v[target] = qi(1);
        phi.set_pair(i, j, v);
        phi
    }

    #[test]
    fn delta_h_examples() {
        let g = abelian(4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let phi = AlternatingCochain::random(2, 4, &mut rng, 3);
        assert!(delta_h(&g, &phi).unwrap().is_zero());

        let g = h3();
        let phi = phi_on(3, 0, 1, 2); // φ(X1,X2)=X3
        assert!(delta_h(&g, &phi).unwrap().is_zero());
        assert!(delta_h_vanishes(&g, &phi));

        let phi = phi_on(3, 0, 1, 0); // φ(X1,X2)=X1
        // nonzero on arguments with a repeated index, e.g. (X1, X2, X2)
        let v = delta_h_at(&g, &phi, 0, 1, 1);
        assert!(v.iter().any(|x| !x.is_zero()));
        assert!(!delta_h_vanishes(&g, &phi));
    }

    #[test]
    fn delta_c_examples() {
        let g = h3();
        let phi = phi_on(3, 0, 1, 2);
        assert!(delta_c(&g, &phi).unwrap().is_zero());
        assert!(delta_c_vanishes(&g, &phi));

        // the Chevalley value is alternating in all three arguments
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let phi = AlternatingCochain::random(2, 3, &mut rng, 3);
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    let v = delta_c_at(&g, &phi, x, y, z);
                    let swapped_xy: Vec<Rational> =
                        delta_c_at(&g, &phi, y, x, z).iter().map(|c| -c.clone()).collect();
                    let swapped_yz: Vec<Rational> =
                        delta_c_at(&g, &phi, x, z, y).iter().map(|c| -c.clone()).collect();
                    assert_eq!(v, swapped_xy);
                    assert_eq!(v, swapped_yz);
                }
            }
        }
    }

    #[test]
    fn delta_hc_examples() {
        let g = h3();
        let phi = phi_on(3, 0, 1, 2);
        assert!(delta_hc(&g, &phi).unwrap().is_zero());
        assert!(delta_hc_vanishes(&g, &phi));

        // on the 5-dimensional model, φ(X2,X4) = X2 is not a cocycle
        let g = k_odd(2);
        let phi = phi_on(5, 1, 3, 1);
        let v = delta_hc_at(&g, &phi, 1, 3, 0);
        assert!(v.iter().any(|x| !x.is_zero()));
        assert!(!delta_hc(&g, &phi).unwrap().is_zero());
        assert!(!delta_hc_vanishes(&g, &phi));
    }

    #[test]
    fn general_coboundary_degree2_relabelling() {
        // the degree-2 general formula is the mixed operator up to a cyclic
        // relabelling: δ²ψ(X,Y,Z) = −δ_hc(ψ)(Y,Z,X) pointwise
        for g in [h3(), k_odd(2), k_odd(3), heisenberg(2)] {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let psi = AlternatingCochain::random(2, g.dim(), &mut rng, 3);
            for tuple in increasing_tuples(g.dim(), 3) {
                let (x, y, z) = (tuple[0], tuple[1], tuple[2]);
                let lhs = delta_hc_general_at(&g, &psi, &[x, y, z]);
                let rhs: Vec<Rational> = delta_hc_at(&g, &psi, y, z, x)
                    .iter()
                    .map(|c| -c.clone())
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn general_coboundary_misc() {
        // abelian base: everything vanishes in any degree
        let g = abelian(5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for degree in 1..=4 {
            let psi = AlternatingCochain::random(degree, 5, &mut rng, 3);
            assert!(delta_hc_general(&g, &psi).unwrap().is_zero());
        }
        // degree 1 on the identity map reproduces the bracket itself:
        // δψ(X_i, X_j) = μ(X_i, ψ(X_j)) = [X_i, X_j]
        let g = k_odd(2);
        let mut id = AlternatingCochain::zero(1, 5);
        for i in 0..5 {
            id.set(vec![i], g.basis_vector(i));
        }
        let d = delta_hc_general(&g, &id).unwrap();
        for tuple in increasing_tuples(5, 2) {
            assert_eq!(d.eval_basis(&tuple), g.bracket_basis(tuple[0], tuple[1]));
        }
    }

    #[test]
    fn delta1_on_identity_is_the_bracket() {
        let g = h3();
        let d = delta1(&g, &ExactMatrix::identity(3));
        for tuple in increasing_tuples(3, 2) {
            assert_eq!(d.eval_basis(&tuple), g.bracket_basis(tuple[0], tuple[1]));
        }
        let g = abelian(4);
        let mut f = ExactMatrix::identity(4);
        *f.at_mut(2, 0) = qi(5);
        assert!(delta1(&g, &f).is_zero());
    }

    #[test]
    fn b2_is_complement_of_derivations() {
        let g = k_odd(3);
        let n = g.dim();
        assert_eq!(delta1_matrix(&g).rank(), n * n - g.derivations_dim());
    }

    #[test]
    fn heisenberg_cocycle_matrix_rank() {
        // 9 unknowns, rank 6: dim Z² = 3
        let m = delta_hc_pointwise_matrix(&h3());
        assert_eq!(m.cols(), 9);
        assert_eq!(m.rank(), 6);
        assert_eq!(m.nullspace_basis().len(), 3);
    }

    #[test]
    fn cohomology_dims_small() {
        let r = cohomology_dims_hc(&h3()).unwrap();
        assert_eq!((r.dim_z2, r.dim_b2, r.dim_h2), (3, 3, 0));
        assert!(r.rigid_in_2nilp && r.two_step);

        let r = cohomology_dims_hc(&k_odd(2)).unwrap();
        assert_eq!(r.dim_h2, 0);
        assert!(r.rigid_in_2nilp);
    }

    #[test]
    fn rigidity_certificates() {
        assert_eq!(rigidity_certificate(&heisenberg(3)).unwrap(), Rigidity::RigidIn2Nilp);
        assert_eq!(rigidity_certificate(&k_odd(2)).unwrap(), Rigidity::RigidIn2Nilp);
        assert_eq!(
            rigidity_certificate(&crate::lie::filiform(4)),
            Err(CohomologyError::Not2Step)
        );
    }

    #[test]
    fn boundary_examples() {
        // free two-step on 2 generators: ∂₂(e1∧e2) = [e1,e2] = e3
        let g = free_two_step(2);
        let chain = WedgeChain::basis_element(2, 3, vec![0, 1]);
        let b = ce_boundary(&g, 2, &chain).unwrap();
        assert_eq!(b.coeff(&[2]), qi(1));
        assert_eq!(b.support().count(), 1);
        // ∂₃(e1∧e2∧e3) = 0 since the expansion repeats e3
        let chain = WedgeChain::basis_element(3, 3, vec![0, 1, 2]);
        assert!(ce_boundary(&g, 3, &chain).unwrap().is_zero());
        // abelian: every boundary vanishes
        let a = abelian(4);
        for p in 2..=4 {
            assert!(ce_boundary_matrix(&a, p).is_zero());
        }
        // degree bounds
        assert_eq!(
            ce_boundary(&g, 4, &WedgeChain::zero(4, 3)),
            Err(CohomologyError::DegreeOutOfRange)
        );
    }

    #[test]
    fn homology_dims_examples() {
        assert_eq!(ce_homology_dims(&free_two_step(2)).unwrap(), vec![1, 2, 2, 1]);
        // abelian: m_p = C(n, p)
        assert_eq!(ce_homology_dims(&abelian(4)).unwrap(), vec![1, 4, 6, 4, 1]);
    }
}
