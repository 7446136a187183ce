//! Vertex labelings and the L(2,1) check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{distance2_pairs, Graph};

/// Total map from vertex index to a nonnegative label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    labels: Vec<u32>,
}

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Self {
        Labeling { labels }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    /// Adds `offset` to every label.
    pub fn translated(&self, offset: u32) -> Labeling {
        Labeling::new(self.labels.iter().map(|&l| l + offset).collect())
    }

    /// Maps every label `l` to `top - l`. Labels above `top` saturate at 0.
    pub fn complemented(&self, top: u32) -> Labeling {
        Labeling::new(self.labels.iter().map(|&l| top.saturating_sub(l)).collect())
    }
}

impl From<Vec<u32>> for Labeling {
    fn from(labels: Vec<u32>) -> Self {
        Labeling::new(labels)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Adjacent vertices whose labels differ by less than 2.
    AdjacentGap,
    /// Vertices at distance 2 sharing a label.
    Distance2Equal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub pair: (usize, usize),
    pub kind: ViolationKind,
    pub labels: (u32, u32),
}

/// Every violated L(2,1) condition of `f` on `g`, sorted by vertex pair.
/// An empty result means `f` is an L(2,1)-labeling.
pub fn verify_l21(g: &Graph, f: &Labeling) -> Result<Vec<Violation>> {
    if f.len() != g.vertex_count() {
        return Err(Error::LabelingSize {
            expected: g.vertex_count(),
            got: f.len(),
        });
    }
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = (f.get(u), f.get(v));
        if a.abs_diff(b) < 2 {
            out.push(Violation {
                pair: (u, v),
                kind: ViolationKind::AdjacentGap,
                labels: (a, b),
            });
        }
    }
    for (u, v) in distance2_pairs(g) {
        let (a, b) = (f.get(u), f.get(v));
        if a == b {
            out.push(Violation {
                pair: (u, v),
                kind: ViolationKind::Distance2Equal,
                labels: (a, b),
            });
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Largest label minus smallest label.
pub fn span(f: &Labeling) -> Result<u32> {
    let max = f.labels.iter().max().ok_or(Error::EmptyLabeling)?;
    let min = f.labels.iter().min().ok_or(Error::EmptyLabeling)?;
    Ok(max - min)
}

/// Lays the labels out as an `m x n` matrix with `grid[i][j] = f(i * n + j)`.
pub fn grid_view(f: &Labeling, m: usize, n: usize) -> Result<Vec<Vec<u32>>> {
    if m.checked_mul(n) != Some(f.len()) || n == 0 {
        return Err(Error::GridSize {
            rows: m,
            cols: n,
            labels: f.len(),
        });
    }
    Ok(f.labels.chunks(n).map(<[u32]>::to_vec).collect())
}
