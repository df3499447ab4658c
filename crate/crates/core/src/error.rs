use thiserror::Error;

/// Library error type. Variants group into input/contract violations,
/// capability limits, and numerical failures; the CLI maps these groups
/// onto distinct exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("weight matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },

    #[error("digraph must have at least one vertex")]
    EmptyGraph,

    #[error("negative weight {value} at ({i}, {j}); weights must be non-negative")]
    NegativeWeight { i: usize, j: usize, value: f64 },

    #[error("non-finite weight at ({i}, {j})")]
    NonFiniteWeight { i: usize, j: usize },

    #[error("self-loop weight {value} at vertex {i}; simple digraphs have zero diagonal")]
    SelfLoop { i: usize, value: f64 },

    #[error("expected {expected} vertex labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("duplicate vertex label {label:?}")]
    DuplicateLabel { label: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({i}, {i}) would be a self-loop")]
    DiagonalEdge { i: usize },

    #[error("weight {value} at ({i}, {j}) outside [0, 1]; this measure requires unit-interval weights")]
    WeightOutOfRange { i: usize, j: usize, value: f64 },

    #[error("weight {value} at ({i}, {j}) is not binary; edge rankability requires weights in {{0, 1}}")]
    NonBinaryWeight { i: usize, j: usize, value: f64 },

    #[error("order is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },

    #[error("graph has {n} vertices; exhaustive search is capped at {max_n} (raise --max-n to override)")]
    TooManyVertices { n: usize, max_n: usize },

    #[error("QR iteration did not converge for a {n}x{n} matrix after {iterations} sweeps")]
    NonConvergence { n: usize, iterations: usize },

    #[error("eigenvalue {re}+{im}i has no conjugate partner within {tol}; eigensolver output is inconsistent")]
    ConjugateMismatch { re: f64, im: f64, tol: f64 },

    #[error("spectrum is empty")]
    EmptySpectrum,

    #[error("not a complete dominance graph")]
    NotDominance,

    #[error("invalid match outcome {value}; expected 0, 0.5, or 1")]
    InvalidOutcome { value: f64 },

    #[error("unknown entity {name:?} in round {round}")]
    UnknownEntity { name: String, round: u32 },

    #[error("vectors have mismatched lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least {needed} values for a correlation, got {got}")]
    TooFewValues { needed: usize, got: usize },

    #[error("constant vector has no rank variance; correlation is undefined")]
    ConstantVector,

    #[error("need at least {needed} rounds, found {got}")]
    TooFewRounds { needed: u32, got: u32 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("round {round}: drawn match between {a:?} and {b:?} is not representable with binary weights")]
    DrawInBinaryMode { round: u32, a: String, b: String },

    #[error("through_round {requested} outside 1..={max_round}")]
    RoundOutOfRange { requested: u32, max_round: u32 },

    #[error("series contains no matches")]
    EmptySeries,

    #[error("no decided matches; backward predictability is undefined")]
    NoDecidedMatches,
}

pub type Result<T> = std::result::Result<T, Error>;
