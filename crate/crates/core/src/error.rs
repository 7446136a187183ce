use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("path needs at least one vertex")]
    EmptyPath,
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{vertex_count}")]
    VertexOutOfRange {
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("coordinate list has {got} entries, graph has {expected} vertices")]
    CoordCount { expected: usize, got: usize },
    #[error("permutation must have length {expected}, got {got}")]
    PermutationLength { expected: usize, got: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("permutation is not an automorphism of C_{0}")]
    NotAnAutomorphism(usize),
    #[error("labeling has {got} labels, graph has {expected} vertices")]
    LabelingSize { expected: usize, got: usize },
    #[error("span of an empty labeling is undefined")]
    EmptyLabeling,
    #[error("grid of {rows}x{cols} does not match {labels} labels")]
    GridSize {
        rows: usize,
        cols: usize,
        labels: usize,
    },
    #[error("coordinate ({i}, {j}) outside {m}x{n}")]
    CoordinateOutOfRange {
        i: usize,
        j: usize,
        m: usize,
        n: usize,
    },
    #[error("shift {shift} must be below fiber length {n}")]
    ShiftOutOfRange { shift: usize, n: usize },
    #[error("unqualified shift: ({m}, {n}, {shift}) matches none of the closed-form labelings")]
    UnqualifiedShift { m: usize, n: usize, shift: usize },
    #[error("closed-form labeling failed verification with {0} violations")]
    VerificationFailed(usize),
    #[error("lower bound is {0}, expected 10")]
    LowerBoundMismatch(u32),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
