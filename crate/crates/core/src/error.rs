use thiserror::Error;

use crate::semigroup::ElementId;

/// Point of a carrier set acted on by a semigroup.
pub type PointId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry ({row},{col}) = {value} is out of range for order {order}")]
    OutOfRangeEntry { row: usize, col: usize, value: usize, order: usize },
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(ElementId, ElementId, ElementId),
    #[error("element {0} is not a two-sided identity")]
    BadIdentityHint(ElementId),
    #[error("element {id} is out of range for order {order}")]
    ElementOutOfRange { id: ElementId, order: usize },
    #[error("semigroup has no elements")]
    EmptySemigroup,

    #[error("idempotents do not form a semilattice")]
    NotSemilattice,
    #[error("element {0} is not idempotent")]
    NotIdempotent(ElementId),
    #[error("subset enumeration limited to order {limit}, got {order}")]
    TooLargeForSubsetScan { order: usize, limit: usize },
    #[error("subset {subset} is not a closed E-dense subsemigroup: {reason}")]
    BadSubsemigroup { subset: String, reason: String },

    #[error("point {point} is out of range for carrier of size {size}")]
    PointOutOfRange { point: PointId, size: usize },
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("action table has {rows} rows but the semigroup has order {order}")]
    ActionShape { rows: usize, order: usize },
    #[error("composition law fails for s={0}, t={1}, x={2}")]
    CompositionViolation(ElementId, ElementId, PointId),
    #[error("not cancellative: {0}*{1} = {0}*{2}")]
    NotCancellative(ElementId, PointId, PointId),
    #[error("not reflexive: no weak inverse of {0} acts on {0}*{1}")]
    NotReflexive(ElementId, PointId),
    #[error("total action is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociativeAction(ElementId, ElementId, PointId),
    #[error("Munn action is not well defined: s={s}, x={x}")]
    WellDefinednessViolation { s: ElementId, x: ElementId },
    #[error("acts are over different semigroups")]
    SemigroupMismatch,
    #[error("carrier of {size} points exceeds the isomorphism search bound {bound}")]
    CarrierTooLarge { size: usize, bound: usize },
    #[error("{0} is not a left ideal")]
    NotLeftIdeal(String),
    #[error("points {0} do not form a subact")]
    NotSubact(String),

    #[error("subsemigroup is not self-conjugate")]
    NotSelfConjugate,

    #[error("category is not associative at ({0}+{1})+{2}")]
    NotAssociative(usize, usize, usize),
    #[error("object {0} has no identity morphism")]
    MissingIdentity(usize),
    #[error("bad composability: {0}")]
    BadComposability(String),
    #[error("group action axiom violated: {0}")]
    ActionAxiomViolation(String),
    #[error("semigroup is not a group")]
    NotGroup,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("band size {0} is not supported")]
    UnsupportedBand(usize),
    #[error("enumeration supports order 1 to 3, got {0}")]
    OrderTooLarge(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 257")]
    PrimeTooLarge(u64),
    #[error("no decrypt key exists for {0}")]
    NoDecryptKey(ElementId),
    #[error("semigroup is not commutative and no biact was supplied")]
    NotCommutative,
    #[error("idempotents have no minimum element")]
    NoMinimumIdempotent,

    /// A theorem-backed cross-check disagreed; always an implementation bug.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
