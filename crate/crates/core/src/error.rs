use thiserror::Error;

use crate::poset::Element;

/// Errors raised while building, querying or constructing posets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("element {element} is out of range for a poset with {count} elements")]
    UnknownElement { element: Element, count: usize },
    #[error("no element of rank 0")]
    NoMinimum,
    #[error("more than one element of rank 0: {0:?}")]
    MultipleMinima(Vec<Element>),
    #[error("more than one element of maximal rank: {0:?}")]
    MultipleMaxima(Vec<Element>),
    #[error("not graded: {0}")]
    NotGraded(String),
    #[error("element {0} is not connected to the rest of the poset")]
    DanglingElement(Element),
    #[error("poset would have {elements} elements; the limit is {limit}")]
    TooLarge { elements: usize, limit: usize },
    #[error("elements {x} and {y} do not satisfy {x} <= {y}")]
    NotComparable { x: Element, y: Element },
    #[error("interval [{0}, {0}] is a singleton")]
    SingletonInterval(Element),
    #[error("a polygon needs at least 2 vertices, got {0}")]
    DegenerateGon(usize),
    #[error("unsupported field: subspace lattices need a prime q and 1 <= n <= 4 (got n = {n}, q = {q})")]
    UnsupportedField { n: usize, q: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("rank {rank} is too small; at least {minimum} is required")]
    RankTooSmall { rank: usize, minimum: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid face incidence: {0}")]
    InvalidIncidence(String),
    #[error("malformed poset document: {0}")]
    Format(String),
}
