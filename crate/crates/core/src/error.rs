use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("delta({upper}, {lower}) is undefined: {lower} is not below {upper}")]
    DeltaUndefined { upper: usize, lower: usize },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation { axiom: String, witness: Vec<usize> },

    #[error("size cap exceeded: {what} needs {requested}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("subset is not closed under {op}: witness {witness:?}")]
    NotClosed {
        op: &'static str,
        witness: Vec<usize>,
    },

    #[error("not a filter: {0}")]
    NotAFilter(String),

    #[error("filter is not contained in the ambient filter")]
    NotSubfilter,

    #[error("no filter contains both arguments")]
    NoCommonFilter,

    #[error("no filter H satisfies H join G = F")]
    NoWitnessFilter,

    #[error("filter is not Boolean relative to its ambient filter")]
    NotBoolean,

    #[error("not a generating filter")]
    NotGFilter,

    #[error("no decomposition of element {0} over the filter")]
    NoDecomposition(usize),

    #[error("element {element} does not split over S1 x S2 ({found} candidate pairs)")]
    SplitFailure { element: usize, found: usize },

    #[error("automorphism is not inner: {x} is not similar to its image {image}")]
    NotInner { x: usize, image: usize },

    #[error("elements {0} and {1} are not similar")]
    NotSim(usize, usize),

    #[error("no member of the localization has l = {p} and k = {q}")]
    NoSuchPair { p: usize, q: usize },

    #[error("caret {0} ^ {1} is undefined")]
    CaretUndefined(usize, usize),

    #[error("element set does not present the algebra: {0} is not covered")]
    NotAPresentation(usize),

    #[error("pair <{0}, {1}> leaves the pair algebra under the homomorphism")]
    MembershipBroken(usize, usize),

    #[error("subset is not upward closed: {below} is a member but {above} is not")]
    NotUpwardClosed { below: usize, above: usize },

    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("{0}")]
    Invariant(String),

    #[error("schema error: {0}")]
    Schema(String),
}
