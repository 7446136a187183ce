//! Strong graph bundles `C_m ⊠^σ C_n` with a cycle base and a cycle fiber.
//!
//! Every edge of the base carries the identity except the edge from base
//! vertex `m - 1` back to `0`, which carries the fiber automorphism `σ`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Fiber automorphism applied on the wrap edge of the base cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automorphism {
    /// `j ↦ (j + shift) mod n`.
    CyclicShift(usize),
    /// Arbitrary automorphism of `C_n`, `j ↦ perm[j]`.
    Permutation(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleSpec {
    m: usize,
    n: usize,
    automorphism: Automorphism,
}

impl BundleSpec {
    /// Bundle twisted by a cyclic shift; the shift is reduced modulo `n`.
    pub fn shifted(m: usize, n: usize, shift: usize) -> Result<Self> {
        check_lengths(m, n)?;
        Ok(BundleSpec {
            m,
            n,
            automorphism: Automorphism::CyclicShift(shift % n),
        })
    }

    /// Bundle twisted by an explicit permutation, which must be an
    /// automorphism of `C_n`.
    pub fn permuted(m: usize, n: usize, perm: Vec<usize>) -> Result<Self> {
        check_lengths(m, n)?;
        if perm.len() != n {
            return Err(Error::PermutationLength {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotABijection(n));
            }
        }
        let preserves_edges = (0..n).all(|j| {
            let d = (perm[(j + 1) % n] + n - perm[j]) % n;
            d == 1 || d == n - 1
        });
        if !preserves_edges {
            return Err(Error::NotAnAutomorphism(n));
        }
        Ok(BundleSpec {
            m,
            n,
            automorphism: Automorphism::Permutation(perm),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn automorphism(&self) -> &Automorphism {
        &self.automorphism
    }

    fn apply(&self, j: usize) -> usize {
        match &self.automorphism {
            Automorphism::CyclicShift(shift) => (j + shift) % self.n,
            Automorphism::Permutation(perm) => perm[j],
        }
    }
}

fn check_lengths(m: usize, n: usize) -> Result<()> {
    for len in [m, n] {
        if len < 3 {
            return Err(Error::CycleTooShort(len));
        }
    }
    Ok(())
}

/// Position `(i, j)` of a bundle vertex: base index `i`, fiber index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coordinate {
    pub i: usize,
    pub j: usize,
}

impl Coordinate {
    pub fn new(i: usize, j: usize) -> Self {
        Coordinate { i, j }
    }

    pub fn index(self, n: usize) -> usize {
        self.i * n + self.j
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        Coordinate {
            i: index / n,
            j: index % n,
        }
    }
}

/// Builds `C_m ⊠^σ C_n`.
///
/// Fiber edges `(i, j) ~ (i, j ± 1)`, identity-twisted edges between fibers
/// `i` and `i + 1` for `i < m - 1`, and wrap edges
/// `(m - 1, u) ~ (0, σ(u + j'))` for `j' ∈ {-1, 0, 1}`.
pub fn make_bundle(spec: &BundleSpec) -> Result<Graph> {
    let (m, n) = (spec.m, spec.n);
    let idx = |i: usize, j: usize| Coordinate::new(i, j).index(n);
    let step = |j: usize, d: isize| (j as isize + d).rem_euclid(n as isize) as usize;
    let mut edges = Vec::with_capacity(4 * m * n);
    for i in 0..m {
        for j in 0..n {
            edges.push((idx(i, j), idx(i, step(j, 1))));
            for d in -1..=1 {
                let target = if i + 1 < m {
                    idx(i + 1, step(j, d))
                } else {
                    idx(0, spec.apply(step(j, d)))
                };
                edges.push((idx(i, j), target));
            }
        }
    }
    let coords = (0..m * n)
        .map(|v| {
            let c = Coordinate::from_index(v, n);
            (c.i, c.j)
        })
        .collect();
    Graph::from_edges(m * n, edges)?.with_coords(coords)
}
