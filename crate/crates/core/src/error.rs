use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup must have at least one element")]
    EmptySemigroup,

    #[error("{what}: expected {expected} entries, found {found}")]
    TableShape {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{what}: index {index} out of range [0, {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("not associative: ({s}{t}){u} != {s}({t}{u})")]
    NotAssociative { s: usize, t: usize, u: usize },

    /// The partial action law fails on the triple `(a, s, t)`.
    #[error("partial action law violated at a={a}, s={s}, t={t}")]
    PaViolation { a: usize, s: usize, t: usize },

    #[error("subset is empty")]
    EmptySubset,

    #[error("partial act is not strong")]
    NotStrong,

    #[error("partial act is not partially defined")]
    NotPartiallyDefined,

    #[error("partial act is not unitary")]
    NotUnitary,

    #[error("triple is not a globalization (G1/G2 fail)")]
    NotAGlobalization,

    #[error("globalization is not generated by the embedded act")]
    NotAGenerated,

    #[error("embedding is not injective: {a} and {b} have the same image")]
    IotaNotInjective { a: usize, b: usize },

    #[error("acts are over different semigroups")]
    SemigroupMismatch,

    #[error("partial function is not in Hom_p(S, A)")]
    NotInHomP,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("search space {size} exceeds bound {bound}")]
    SearchSpaceTooLarge { size: u128, bound: u64 },

    /// Signals an implementation bug; never returned for valid input.
    #[error("internal well-definedness failure: {0}")]
    WellDefinednessFailure(&'static str),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionFailed(msg.into())
    }

    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotStrong
            | Error::NotPartiallyDefined
            | Error::NotUnitary
            | Error::NotAGlobalization
            | Error::NotAGenerated
            | Error::NotInHomP
            | Error::PreconditionFailed(_) => 2,
            Error::SearchSpaceTooLarge { .. } => 3,
            Error::WellDefinednessFailure(_) => 70,
            _ => 1,
        }
    }
}
