use core::fmt;

use num_bigint::BigUint;

/// Errors reported by this crate's constructors and operations.
///
/// Every variant describes a rejected input; internal arithmetic
/// invariants are enforced with assertions instead, since their failure
/// would be a bug rather than caller error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A directed cycle must have at least one vertex.
    ZeroCycleLength,
    /// An edge endpoint or subset member does not name a vertex of the graph.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// Cycle decomposition requires out-degree and in-degree exactly one everywhere.
    NotPermutationGraph {
        vertex: usize,
        out_degree: usize,
        in_degree: usize,
    },
    /// Subset members must be distinct.
    DuplicateMember { member: usize },
    /// The two subsets of an edge test must have the same size.
    SubsetSizeMismatch { left: usize, right: usize },
    /// Subset size outside `1..=n`.
    SubsetSizeOutOfRange { d: usize, n: usize },
    /// Cycle length outside `1..=l`.
    CycleLengthOutOfRange { k: usize, l: usize },
    /// The divisibility conditions for a k-cycle fail at this (l, d, k).
    NoCycleExists { l: usize, d: usize, k: usize },
    /// Zero cannot be factorized.
    FactorizeZero,
    /// Residues are only defined for a positive modulus.
    ZeroModulus,
    /// A subset member is not a residue modulo `modulus`.
    MemberOutOfModulus { member: usize, modulus: usize },
    /// The empty subset has no orbit period.
    EmptySubset,
    /// Brute-force enumeration would visit more subsets than allowed.
    BudgetExceeded { subsets: BigUint, budget: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroCycleLength => {
                write!(f, "cycle length must be at least 1")
            }
            Error::VertexOutOfRange {
                vertex,
                vertex_count,
            } => {
                write!(
                    f,
                    "vertex {vertex} out of range for a graph on {vertex_count} vertices"
                )
            }
            Error::NotPermutationGraph {
                vertex,
                out_degree,
                in_degree,
            } => {
                write!(
                    f,
                    "not a permutation graph: vertex {vertex} has out-degree {out_degree} \
                     and in-degree {in_degree} (both must be 1)"
                )
            }
            Error::DuplicateMember { member } => {
                write!(f, "duplicate subset member {member}")
            }
            Error::SubsetSizeMismatch { left, right } => {
                write!(f, "subset sizes differ: {left} vs {right}")
            }
            Error::SubsetSizeOutOfRange { d, n } => {
                write!(f, "subset size d={d} out of range 1..={n}")
            }
            Error::CycleLengthOutOfRange { k, l } => {
                write!(f, "cycle length k={k} out of range 1..={l}")
            }
            Error::NoCycleExists { l, d, k } => {
                write!(
                    f,
                    "no {k}-cycle exists for l={l}, d={d}: requires k to divide l, \
                     l to divide d*k, and d < l unless k = 1"
                )
            }
            Error::FactorizeZero => write!(f, "cannot factorize 0"),
            Error::ZeroModulus => write!(f, "modulus must be at least 1"),
            Error::MemberOutOfModulus { member, modulus } => {
                write!(
                    f,
                    "subset member {member} is not a residue modulo {modulus}"
                )
            }
            Error::EmptySubset => write!(f, "the empty subset has no orbit period"),
            Error::BudgetExceeded { subsets, budget } => {
                write!(
                    f,
                    "instance too large for brute force: {subsets} subsets exceed budget {budget}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
