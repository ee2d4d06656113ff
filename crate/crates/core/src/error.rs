use thiserror::Error;

/// Errors produced by lattice construction, validation and the analysis kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("not a poset: the cover relation contains a cycle through element {element}")]
    NotAPoset { element: usize },

    #[error("not a lattice: elements {a} and {b} have no unique {kind}")]
    NotALattice { a: usize, b: usize, kind: BoundKind },

    #[error("not a bounded lattice: no {0} element exists")]
    NotBounded(BoundKind),

    #[error("element id {id} out of range (lattice has {n} elements)")]
    InvalidElement { id: usize, n: usize },

    #[error("budget exceeded: limit {limit}, reached {reached}")]
    BudgetExceeded { limit: usize, reached: usize },

    #[error("set {which} is not {direction} directed: witnesses {a}, {b}")]
    NotDirected {
        which: char,
        direction: &'static str,
        a: usize,
        b: usize,
    },

    #[error("A < B fails: a={a} is not strictly below b={b}")]
    NotSeparated { a: usize, b: usize },

    #[error("not an embedding: {reason}")]
    NotAnEmbedding { reason: String },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("function is not monotone on its domain: witness pair {lower:?} <= {upper:?}")]
    NotMonotoneOnDomain { lower: Vec<usize>, upper: Vec<usize> },

    #[error("not an antichain: elements {a} and {b} are comparable")]
    NotAnAntichain { a: usize, b: usize },

    #[error("ramsey precondition violated: need at least {required} elements, poset has {actual}")]
    TooSmall { required: usize, actual: usize },

    #[error("lattice must have at least 2 elements")]
    TrivialLattice,

    #[error("term {index} does not share the common skeleton")]
    SkeletonMismatch { index: usize },

    #[error("functions {i} and {j} are comparable, not an incomparable family")]
    FunctionsComparable { i: usize, j: usize },

    #[error("term uses the orthocomplement but the lattice carries none")]
    PerpUnavailable,

    #[error("invalid term: {0}")]
    InvalidTerm(String),

    #[error("orthocomplement involution fails at element {x}: perp(perp({x})) = {result}")]
    InvolutionFails { x: usize, result: usize },

    #[error("orthocomplement law fails at element {x}: x {op} perp(x) = {result}")]
    ComplementFails { x: usize, op: char, result: usize },

    #[error("orthocomplement is not antitone: {a} <= {b} but perp({b}) <= perp({a}) fails")]
    NotAntitone { a: usize, b: usize },

    #[error("horizontal sum requires summands with at least 3 elements")]
    DegenerateSummand,

    #[error("subset is not a sublattice candidate: {reason}")]
    NotASublatticeCandidate { reason: String },
}

/// Which bound (meet or join side) an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
    Bottom,
    Top,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "greatest lower bound"),
            BoundKind::Join => write!(f, "least upper bound"),
            BoundKind::Bottom => write!(f, "bottom"),
            BoundKind::Top => write!(f, "top"),
        }
    }
}

pub type Result<T> = std::result::Result<T, LatticeError>;
