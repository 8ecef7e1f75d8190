use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal `{0}`")]
    Rational(String),
    #[error("invalid point literal `{0}` (expected a rational or `inf`)")]
    Point(String),
    #[error("invalid divisor `{0}`: {1}")]
    Divisor(String, String),
    #[error("invalid curve spec: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// A coefficient (or a whole output window) beyond the known truncation was requested.
    #[error("truncation shortfall: exponent {requested} requested but the series is only known below {available}")]
    TruncationShortfall { requested: i64, available: i64 },
    #[error("series has no invertible leading coefficient")]
    NotInvertible,
    #[error("exact series has an infinite expansion here; truncate it first")]
    InfiniteExpansion,
    #[error("parameter change must have the form u + O(u^2)")]
    NotTangentPreserving,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("reduction basis is empty")]
    EmptyBasis,
    #[error("reduction basis element {0} is zero")]
    ZeroBasisElement(usize),
    #[error("leading coefficient `{0}` is not a unit of the coefficient ring")]
    NonUnitLeadingCoefficient(String),
    #[error("S-polynomial of a zero polynomial")]
    ZeroInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("unknown component `{0}`")]
    UnknownComponent(String),
    #[error("duplicate component label `{0}`")]
    DuplicateComponent(String),
    #[error("singularity {sing}: {reason}")]
    MalformedSingularity { sing: usize, reason: String },
    #[error("singularity {sing}: algebra span does not contain the constants")]
    MissingConstants { sing: usize },
    #[error("singularity {sing}: algebra span is not closed under multiplication (basis pair {i}, {j})")]
    NotSubalgebra { sing: usize, i: usize, j: usize },
    #[error("singularity {sing}: span misses the jet t^{degree} on branch {branch} although the conductor is {conductor}")]
    ConductorViolation {
        sing: usize,
        branch: usize,
        degree: usize,
        conductor: usize,
    },
    #[error("singularity {sing}: jet order {jet_order} is below the conductor {conductor}")]
    JetOrderTooSmall {
        sing: usize,
        jet_order: usize,
        conductor: usize,
    },
    #[error("curve is disconnected: component `{0}` is not linked to `{1}`")]
    Disconnected(String, String),
    #[error("branch or marked point {0} occurs twice")]
    PointClash(String),
    #[error("marked point {0} has zero tangent scalar")]
    ZeroTangent(usize),
    #[error("unknown zoo case `{0}`")]
    UnknownCase(String),
    #[error("no marked point `{0}`")]
    UnknownMarkedPoint(String),
    #[error("weights: {0}")]
    Weights(String),
    #[error("section f_{point}[-{order}] is not unique: h^1 of the base divisor is nonzero")]
    NotUnique { point: usize, order: u32 },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalFormError {
    #[error("genus must be at least 2, got {0}")]
    Genus(i64),
    #[error("m-max {m_max} must exceed the genus {genus}")]
    MMax { genus: i64, m_max: i64 },
    #[error("j-max must be non-negative, got {0}")]
    JMax(i64),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("recursion invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Genus2Error {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("relations do not have leading monomials h^2, hk, k^2: {0}")]
    LeadingMonomials(String),
    #[error("curve has arithmetic genus {0}, expected 2")]
    Genus(i64),
    #[error("marked point {0} is a Weierstrass point: h^1(2p) = {1}")]
    Weierstrass(usize, i64),
    #[error("presentation: {0}")]
    Presentation(String),
    #[error("c-system: {0}")]
    Elimination(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
