use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element code {code} out of range for a field of order {q}")]
    ElementOutOfRange { code: u32, q: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
    #[error("subspaces are not complementary")]
    NotComplement,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("vectors do not form a basis of the subspace")]
    NotABasis,
    #[error("subspace basis is not in reduced row echelon form")]
    NonCanonical,
    #[error("vertex {vertex} out of range for {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid function: {0}")]
    InvalidFunction(String),
    #[error("enumeration of {requested} objects exceeds the budget of {budget}")]
    BudgetExceeded { requested: u128, budget: u64 },
    /// A construction step violated one of its own invariants. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
