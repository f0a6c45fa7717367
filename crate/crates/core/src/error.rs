use thiserror::Error;

/// Errors raised by graph construction and surgery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{family} requires n >= {min}, got {got}")]
    SizeOutOfRange {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("edge ({0}, {1}) not present in graph")]
    MissingEdge(usize, usize),
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("cannot identify a vertex with itself ({0})")]
    IdenticalVertices(usize),
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("edge list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
}

/// Errors raised by formula parsing, generation and the reduction pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),
    #[error("variable count {0} is not divisible by 3")]
    NotDivisibleByThree(usize),
}

/// Errors raised by the gadget forge and reduction assembly.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("pattern is not 2-connected")]
    NotTwoConnected,
    #[error("search budget exceeded after {0} nodes")]
    BudgetExceeded(u64),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("gadget archive is missing a verified {0}")]
    MissingGadget(String),
    #[error("gadget lacks a stored template coloring for {0}")]
    TemplateGap(String),
    #[error("graph has no good coloring")]
    NoGoodColoring,
    #[error("inconsistent output signals for variable {0}")]
    InconsistentSignals(usize),
    #[error("role {0} is not populated")]
    MissingRole(String),
    #[error("gadget mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
