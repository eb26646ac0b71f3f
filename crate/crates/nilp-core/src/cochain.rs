//! Alternating multilinear maps `g^⊗n → g` in coordinates.
//!
//! Only strictly increasing index tuples are stored; evaluation on an
//! arbitrary tuple sorts the indices and applies the sign of the permutation,
//! and any repeated index evaluates to zero.

use crate::rational::{qi, Rational};
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCochain {
    degree: usize,
    dim: usize,
    /// increasing tuple → value vector of length `dim`; absent means zero
    coeffs: BTreeMap<Vec<usize>, Vec<Rational>>,
}

impl AlternatingCochain {
    pub fn zero(degree: usize, dim: usize) -> Self {
        assert!(degree >= 1);
        Self {
            degree,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Set the value on a strictly increasing tuple (0-based).
    pub fn set(&mut self, tuple: Vec<usize>, value: Vec<Rational>) {
        assert_eq!(tuple.len(), self.degree, "tuple has wrong arity");
        assert!(
            tuple.windows(2).all(|w| w[0] < w[1]) && tuple.iter().all(|&i| i < self.dim),
            "tuple must be strictly increasing and in range"
        );
        assert_eq!(value.len(), self.dim, "value has wrong length");
        if value.iter().all(Zero::is_zero) {
            self.coeffs.remove(&tuple);
        } else {
            self.coeffs.insert(tuple, value);
        }
    }

    /// Convenience for degree 2.
    pub fn set_pair(&mut self, i: usize, j: usize, value: Vec<Rational>) {
        self.set(vec![i, j], value);
    }

    pub fn support(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Rational>)> {
        self.coeffs.iter()
    }

    /// Value on basis vectors indexed by `tuple` (any order, repeats allowed).
    pub fn eval_basis(&self, tuple: &[usize]) -> Vec<Rational> {
        assert_eq!(tuple.len(), self.degree);
        let mut sorted: Vec<usize> = tuple.to_vec();
        // sorting network would be overkill: count inversions while sorting
        let mut sign = 1i64;
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return vec![Rational::zero(); self.dim];
        }
        match self.coeffs.get(&sorted) {
            None => vec![Rational::zero(); self.dim],
            Some(value) => {
                if sign > 0 {
                    value.clone()
                } else {
                    value.iter().map(|c| -c.clone()).collect()
                }
            }
        }
    }

    /// Multilinear evaluation where the argument at `pos` is a coefficient
    /// vector and all other arguments are basis vectors.
    pub fn eval_with_vector_at(&self, tuple: &[usize], pos: usize, vector: &[Rational]) -> Vec<Rational> {
        assert_eq!(tuple.len(), self.degree);
        assert_eq!(vector.len(), self.dim);
        let mut acc = vec![Rational::zero(); self.dim];
        let mut args = tuple.to_vec();
        for (k, c) in vector.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            args[pos] = k;
            let v = self.eval_basis(&args);
            for (slot, x) in acc.iter_mut().zip(v) {
                if !x.is_zero() {
                    *slot += c * x;
                }
            }
        }
        acc
    }

    /// Full multilinear evaluation on arbitrary coefficient vectors.
    pub fn eval_vectors(&self, args: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(args.len(), self.degree);
        let mut acc = vec![Rational::zero(); self.dim];
        let mut idx = vec![0usize; self.degree];
        self.eval_vectors_rec(args, 0, &mut idx, &qi(1), &mut acc);
        acc
    }

    fn eval_vectors_rec(
        &self,
        args: &[Vec<Rational>],
        depth: usize,
        idx: &mut Vec<usize>,
        scale: &Rational,
        acc: &mut [Rational],
    ) {
        if depth == self.degree {
            let v = self.eval_basis(idx);
            for (slot, x) in acc.iter_mut().zip(v) {
                if !x.is_zero() {
                    *slot += scale * x;
                }
            }
            return;
        }
        for (k, c) in args[depth].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx[depth] = k;
            let next = scale * c;
            self.eval_vectors_rec(args, depth + 1, idx, &next, acc);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (tuple, value) in &other.coeffs {
            let entry = out
                .coeffs
                .entry(tuple.clone())
                .or_insert_with(|| vec![Rational::zero(); self.dim]);
            for (slot, x) in entry.iter_mut().zip(value) {
                *slot += x;
            }
        }
        out.coeffs.retain(|_, v| v.iter().any(|x| !x.is_zero()));
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree, self.dim);
        }
        let mut out = self.clone();
        for value in out.coeffs.values_mut() {
            for x in value.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&qi(-1))
    }

    /// Random cochain with integer coefficients in `−bound..=bound`.
    pub fn random(degree: usize, dim: usize, rng: &mut impl Rng, bound: i64) -> Self {
        let mut out = Self::zero(degree, dim);
        let tuples = increasing_tuples(dim, degree);
        for tuple in tuples {
            let value: Vec<Rational> = (0..dim).map(|_| qi(rng.gen_range(-bound..=bound))).collect();
            out.set(tuple, value);
        }
        out
    }
}

/// All strictly increasing `k`-tuples from `0..n`, lexicographically.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut tuple: Vec<usize> = (0..k).collect();
    loop {
        out.push(tuple.clone());
        // advance
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if tuple[pos] < n - (k - pos) {
                tuple[pos] += 1;
                for q in (pos + 1)..k {
                    tuple[q] = tuple[q - 1] + 1;
                }
                break;
            }
        }
    }
}
