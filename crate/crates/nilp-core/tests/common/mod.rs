//! Shared generators for the integration suites: seeded random two-step
//! and three-step nilpotent algebras, scrambled by unimodular basis
//! changes so the constructions do not stay in any normal form.

#![allow(dead_code)] // each test target compiles its own copy

use nilp_core::lie::{self, StructureTensor};
use nilp_core::matrix::ExactMatrix;
use nilp_core::rational::{qi, Rational};
use num_traits::Zero;
use rand::Rng;

/// Product of a lower and an upper unitriangular integer matrix: always
/// invertible, with small exact entries.
pub fn random_unimodular(n: usize, rng: &mut impl Rng) -> ExactMatrix {
    let mut lower = ExactMatrix::identity(n);
    let mut upper = ExactMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            *lower.at_mut(i, j) = qi(rng.gen_range(-2..=2));
            *upper.at_mut(j, i) = qi(rng.gen_range(-2..=2));
        }
    }
    lower.mul(&upper)
}

/// A few random unit shears: unimodular but sparse, so scrambled tensors
/// stay cheap to sweep exhaustively.
pub fn random_shears(n: usize, rng: &mut impl Rng) -> ExactMatrix {
    let mut p = ExactMatrix::identity(n);
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let mut shear = ExactMatrix::identity(n);
        *shear.at_mut(i, j) = qi(rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 });
        p = p.mul(&shear);
    }
    p
}

/// Random two-step nilpotent Lie algebra: generators bracket into a
/// central tail, then the basis is scrambled. May degenerate to abelian.
pub fn random_two_step(rng: &mut impl Rng) -> StructureTensor {
    let dim = rng.gen_range(4..=6);
    let targets = rng.gen_range(1..=2usize);
    let m = dim - targets;
    let mut g = StructureTensor::zero(dim);
    for i in 0..m {
        for j in (i + 1)..m {
            if rng.gen_bool(0.5) {
                let mut v = vec![Rational::zero(); dim];
                for slot in v.iter_mut().skip(m) {
                    *slot = qi(rng.gen_range(-2..=2));
                }
                g.set_bracket(i, j, v);
            }
        }
    }
    let p = random_shears(dim, rng);
    g.change_basis(&p).expect("shears are invertible")
}

/// Random Lie algebra of nilindex exactly 3: a length-3 chain summed with
/// an abelian block, scrambled.
pub fn random_three_step(rng: &mut impl Rng) -> StructureTensor {
    let chain = lie::filiform(4);
    let tail = lie::abelian(rng.gen_range(0..=2));
    let g = StructureTensor::direct_sum(&chain, &tail);
    let p = random_shears(g.dim(), rng);
    g.change_basis(&p).expect("shears are invertible")
}
