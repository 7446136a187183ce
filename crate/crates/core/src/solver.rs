//! Exact λ-numbers by backtracking, plus the degree-based lower bounds.
//!
//! The search is meant for small graphs. Computing λ is NP-hard in general,
//! so every run is bounded by a node and wall-clock budget.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{distance2_from, Graph};
use crate::labeling::Labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Justification {
    /// Three max-degree vertices, one adjacent to the other two: `Δ + 2`.
    Lemma1,
    /// Any edge plus a max-degree vertex: `Δ + 1`.
    Degree,
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u32,
    pub justification: Justification,
}

/// `Δ >= 2` and some vertex of degree `Δ` has at least two neighbors of
/// degree `Δ`.
pub fn lemma1_applies(g: &Graph) -> bool {
    let delta = g.max_degree();
    delta >= 2
        && (0..g.vertex_count()).any(|v| {
            g.degree(v) == delta
                && g.neighbors(v)
                    .iter()
                    .filter(|&&u| g.degree(u) == delta)
                    .nth(1)
                    .is_some()
        })
}

pub fn lower_bound(g: &Graph) -> Bound {
    let delta = g.max_degree() as u32;
    if lemma1_applies(g) {
        Bound {
            value: delta + 2,
            justification: Justification::Lemma1,
        }
    } else if delta > 0 {
        Bound {
            value: delta + 1,
            justification: Justification::Degree,
        }
    } else {
        Bound {
            value: 0,
            justification: Justification::Trivial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;
    pub const DEFAULT_SECS: u64 = 60;

    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        Budget {
            max_nodes,
            max_time,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Self::DEFAULT_NODES,
            max_time: Duration::from_secs(Self::DEFAULT_SECS),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    /// Budget ran out; `λ ∈ [lower, upper]`.
    Timeout {
        lower: u32,
        upper: u32,
    },
    /// Every span up to the caller's limit is infeasible; `λ >= lower`.
    AboveLimit {
        lower: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// λ when exact, otherwise `None`.
    pub lambda: Option<u32>,
    /// Optimal labeling when exact; best known (greedy) labeling on timeout.
    pub witness: Option<Labeling>,
    pub nodes_explored: u64,
    pub status: SolveStatus,
}

/// Fail-first order: descending degree, ties by vertex index.
pub fn default_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Minimum span of an L(2,1)-labeling of `g`.
///
/// Tries spans upward from [`lower_bound`]. Each span is decided by
/// depth-first search that always branches on the unlabeled vertex with the
/// fewest admissible labels, ties broken by [`default_order`].
pub fn solve_lambda(g: &Graph, max_span: Option<u32>, budget: Budget) -> Result<SolveResult> {
    solve(g, &default_order(g), true, max_span, budget)
}

/// Same as [`solve_lambda`] but labels vertices strictly in the given order.
pub fn solve_lambda_with_order(
    g: &Graph,
    order: &[usize],
    max_span: Option<u32>,
    budget: Budget,
) -> Result<SolveResult> {
    solve(g, order, false, max_span, budget)
}

fn solve(
    g: &Graph,
    order: &[usize],
    dynamic: bool,
    max_span: Option<u32>,
    budget: Budget,
) -> Result<SolveResult> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..g.vertex_count()).collect::<Vec<_>>() {
        return Err(Error::Parse("vertex order must be a permutation".into()));
    }

    let ctx = Context::new(g, order, dynamic);
    let deadline = Instant::now() + budget.max_time;
    let mut nodes = 0u64;
    let mut span = lower_bound(g).value;
    loop {
        if max_span.is_some_and(|limit| span > limit) {
            return Ok(SolveResult {
                lambda: None,
                witness: None,
                nodes_explored: nodes,
                status: SolveStatus::AboveLimit { lower: span },
            });
        }
        let mut search = Search::new(&ctx, span, budget.max_nodes.saturating_sub(nodes), deadline);
        let outcome = search.run();
        nodes += search.nodes;
        match outcome {
            Outcome::Found => {
                let witness = Labeling::new(search.labels);
                return Ok(SolveResult {
                    lambda: Some(span),
                    witness: Some(witness),
                    nodes_explored: nodes,
                    status: SolveStatus::Exact,
                });
            }
            Outcome::Exhausted => span += 1,
            Outcome::Aborted => {
                let greedy = greedy_labeling(g, order);
                let upper = greedy.labels().iter().copied().max().unwrap_or(0);
                return Ok(SolveResult {
                    lambda: None,
                    witness: Some(greedy),
                    nodes_explored: nodes,
                    status: SolveStatus::Timeout {
                        lower: span,
                        upper: upper.max(span),
                    },
                });
            }
        }
    }
}

/// First-fit labeling in the given order. Always valid, rarely optimal.
pub fn greedy_labeling(g: &Graph, order: &[usize]) -> Labeling {
    const UNSET: u32 = u32::MAX;
    let mut labels = vec![UNSET; g.vertex_count()];
    for &v in order {
        let d2 = distance2_from(g, v);
        let label = (0u32..)
            .find(|&c| {
                g.neighbors(v)
                    .iter()
                    .all(|&u| labels[u] == UNSET || labels[u].abs_diff(c) >= 2)
                    && d2.iter().all(|&w| labels[w] != c)
            })
            .expect("some label is always free");
        labels[v] = label;
    }
    Labeling::new(labels)
}

struct Context {
    order: Vec<usize>,
    dynamic: bool,
    neighbors: Vec<Vec<usize>>,
    distance2: Vec<Vec<usize>>,
}

impl Context {
    fn new(g: &Graph, order: &[usize], dynamic: bool) -> Self {
        Context {
            order: order.to_vec(),
            dynamic,
            neighbors: (0..g.vertex_count())
                .map(|v| g.neighbors(v).to_vec())
                .collect(),
            distance2: (0..g.vertex_count())
                .map(|v| distance2_from(g, v))
                .collect(),
        }
    }
}

enum Outcome {
    Found,
    Exhausted,
    Aborted,
}

const UNLABELED: u32 = u32::MAX;

/// Depth-first search for a labeling with labels in `0..=span`, keeping for
/// every vertex a count of how many labeled vertices forbid each label.
struct Search<'a> {
    ctx: &'a Context,
    span: u32,
    width: usize,
    labels: Vec<u32>,
    forbidden: Vec<u32>,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
}

impl<'a> Search<'a> {
    fn new(ctx: &'a Context, span: u32, node_limit: u64, deadline: Instant) -> Self {
        let n = ctx.neighbors.len();
        let width = span as usize + 1;
        Search {
            ctx,
            span,
            width,
            labels: vec![UNLABELED; n],
            forbidden: vec![0; n * width],
            nodes: 0,
            node_limit,
            deadline,
        }
    }

    fn run(&mut self) -> Outcome {
        self.descend(0)
    }

    fn descend(&mut self, depth: usize) -> Outcome {
        let Some(v) = self.pick(depth) else {
            return Outcome::Found;
        };
        // Reflecting every label l to span - l preserves validity.
        let top = if depth == 0 { self.span / 2 } else { self.span };
        for c in 0..=top {
            if self.forbidden[v * self.width + c as usize] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit
                || (self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline)
            {
                return Outcome::Aborted;
            }
            self.place(v, c, true);
            let outcome = if self.wiped_out(v) {
                Outcome::Exhausted
            } else {
                self.descend(depth + 1)
            };
            match outcome {
                Outcome::Exhausted => self.place(v, c, false),
                done => return done,
            }
        }
        Outcome::Exhausted
    }

    fn free_labels(&self, v: usize) -> usize {
        self.forbidden[v * self.width..(v + 1) * self.width]
            .iter()
            .filter(|&&x| x == 0)
            .count()
    }

    fn pick(&self, depth: usize) -> Option<usize> {
        if depth == self.ctx.order.len() {
            return None;
        }
        if !self.ctx.dynamic {
            return Some(self.ctx.order[depth]);
        }
        // `min_by_key` keeps the first minimum, so ties go to the earlier
        // vertex in the static order.
        self.ctx
            .order
            .iter()
            .copied()
            .filter(|&u| self.labels[u] == UNLABELED)
            .min_by_key(|&u| self.free_labels(u))
    }

    fn place(&mut self, v: usize, c: u32, set: bool) {
        let ctx = self.ctx;
        let lo = c.saturating_sub(1);
        let hi = (c + 1).min(self.span);
        for &u in &ctx.neighbors[v] {
            for x in lo..=hi {
                self.bump(u, x, set);
            }
        }
        for &w in &ctx.distance2[v] {
            self.bump(w, c, set);
        }
        self.labels[v] = if set { c } else { UNLABELED };
    }

    fn bump(&mut self, v: usize, c: u32, up: bool) {
        let slot = &mut self.forbidden[v * self.width + c as usize];
        if up {
            *slot += 1;
        } else {
            *slot -= 1;
        }
    }

    /// Some unlabeled vertex near `v` has no label left.
    fn wiped_out(&self, v: usize) -> bool {
        let ctx = self.ctx;
        ctx.neighbors[v]
            .iter()
            .chain(&ctx.distance2[v])
            .filter(|&&u| self.labels[u] == UNLABELED)
            .any(|&u| self.free_labels(u) == 0)
    }
}
