//! Error type shared by all partcat operations.

use thiserror::Error;

/// Errors raised by partition construction, category operations and the
/// bounded closure engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartError {
    /// Blocks overlap, leave a gap, or reference an index out of range.
    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),
    /// An extra singleton point was placed in a block of size > 1.
    #[error("extra singleton in a block of size > 1 (point {0})")]
    ExtraSingletonInBlock(usize),
    /// Colors from more than one regime in a single partition or operation.
    #[error("mixed color regimes")]
    MixedRegime,
    /// Composition attempted with mismatched interface words.
    #[error("signature mismatch: lower word {0} vs upper word {1}")]
    SignatureMismatch(String, String),
    /// Linear combinations from different contexts N were mixed.
    #[error("context mismatch: N={0} vs N={1}")]
    ContextMismatch(u32, u32),
    /// A multi-index or dotted word has the wrong arity.
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    /// Partition of odd length where an even one is required.
    #[error("partition has odd length {0}")]
    OddLength(usize),
    /// Operation applied in the wrong color regime.
    #[error("wrong regime for this operation: {0}")]
    WrongRegime(&'static str),
    /// Unknown generator name.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    /// Bad parameter for a generator or operation.
    #[error("bad parameter: {0}")]
    BadParam(String),
    /// Parse error in the partition / linear-combination text format.
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    /// A generator does not fit within the closure point budget.
    #[error("budget too small: generator has {got} points, budget is {budget}")]
    BudgetTooSmall { got: usize, budget: usize },
    /// Two closures compared with different bounds.
    #[error("bound mismatch: (P={0},s={1}) vs (P={2},s={3})")]
    BoundMismatch(u32, u32, u32, u32),
    /// A color has no generator symbol assigned.
    #[error("no generator symbol assigned to color `{0}`")]
    MissingName(char),
    /// A block of size > 2 where the U-functor needs pairs and singletons.
    #[error("block of size {0} > 2 is outside the U-functor domain")]
    BlockTooLarge(usize),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, PartError>;
