use core::fmt;

/// Errors raised by the algebraic routines in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A monomial ideal needs at least one variable.
    NoVariables,
    /// Two objects live in polynomial rings with different variable counts.
    DimensionMismatch { expected: usize, found: usize },
    /// The ideal is not primary to the maximal ideal, so the quotient is not Artinian.
    NotMPrimary,
    /// Irreducible components must have positive exponents.
    NonPositiveExponent,
    /// The quotient is larger than the configured dimension cap.
    DimensionCap { dim: usize, cap: usize },
    /// The modulus is not an odd prime.
    InvalidPrime(u64),
    /// Brute-force classification is restricted to small variable counts.
    TooManyVariables { nvars: usize, max: usize },
    /// The enumeration would exceed the cap and sampling was not allowed.
    CapExceeded { count: u64, cap: u64 },
    /// Components passed to a classifier do not form an irredundant decomposition.
    NotIrredundant,
    /// The number of components does not fit the operation.
    WrongType { expected: usize, found: usize },
    /// A linear system that must be solvable was not.
    Inconsistent(&'static str),
    /// Witness images violate `u_i f_j = u_j f_i (mod J)`.
    CongruenceFailure { i: usize, j: usize },
    /// The cover multiplication is not associative on a basis triple.
    AssociativityFailure { a: usize, b: usize, c: usize },
    /// A corpus specification could not be satisfied.
    InfeasibleCorpus { wanted: usize, found: usize },
    /// An argument outside the operation's domain.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NoVariables => write!(f, "monomial ideals need at least one variable"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "variable count mismatch: expected {expected}, found {found}")
            }
            Error::NotMPrimary => write!(f, "ideal is not primary to the maximal ideal"),
            Error::NonPositiveExponent => write!(f, "irreducible components need positive exponents"),
            Error::DimensionCap { dim, cap } => {
                write!(f, "quotient has dimension {dim}, above the cap {cap}")
            }
            Error::InvalidPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::TooManyVariables { nvars, max } => {
                write!(f, "{nvars} variables exceed the supported maximum {max}")
            }
            Error::CapExceeded { count, cap } => {
                write!(f, "enumeration needs more than {count} cases, cap is {cap}")
            }
            Error::NotIrredundant => write!(f, "components are not an irredundant decomposition"),
            Error::WrongType { expected, found } => {
                write!(f, "expected {expected} irreducible components, found {found}")
            }
            Error::Inconsistent(what) => write!(f, "inconsistent linear system: {what}"),
            Error::CongruenceFailure { i, j } => {
                write!(f, "images violate the compatibility congruence for pair ({i}, {j})")
            }
            Error::AssociativityFailure { a, b, c } => {
                write!(f, "cover multiplication is not associative on basis triple ({a}, {b}, {c})")
            }
            Error::InfeasibleCorpus { wanted, found } => {
                write!(f, "corpus specification infeasible: wanted {wanted}, generated {found}")
            }
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
