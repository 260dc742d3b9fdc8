use core::fmt;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors shared by all modules.
///
/// Degeneracies of the geometric constructions are ordinary values here, not
/// panics: callers such as the census and the verification drivers routinely
/// probe inputs that fall on an excluded locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Multiplicative inverse of zero.
    DivisionByZero,
    /// Modulus failed the primality check, or is 2 or 3, or exceeds 63 bits.
    BadModulus(u64),
    /// An argument was required to be an odd prime.
    NotOddPrime(u64),
    /// Homogeneous coordinates must not all vanish.
    ZeroVector,
    /// A projectivity matrix must be nonsingular.
    SingularMatrix,
    /// Proportional or otherwise degenerate inputs to a construction.
    Degenerate(&'static str),
    /// Evaluation at a pole of a rational expression.
    Pole(&'static str),
    /// The Pappus-Steiner map is undefined on the diagonal x = y.
    UndefinedOnDiagonal,
    /// Both r^2 - r + 1 = 0 and s^2 - s + 1 = 0: the Steiner points collapse.
    SteinerDegenerate,
    /// A Pappus-structure axiom failed.
    Structure(&'static str),
    /// Parameter value excluded by the operation's stated domain.
    ExcludedParameter(&'static str),
    /// Polynomial degree outside the supported range of an operation.
    UnsupportedDegree(usize),
    /// Period outside the supported range of a census operation.
    UnsupportedPeriod(u32),
    /// Requested work exceeds the configured budget.
    BudgetExceeded { needed: u64, budget: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BadModulus(p) => {
                write!(
                    f,
                    "modulus {p} is not a supported prime (need prime, 5 <= p < 2^63)"
                )
            }
            Error::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::ZeroVector => write!(f, "homogeneous coordinates must not all be zero"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::Degenerate(what) => write!(f, "degenerate input: {what}"),
            Error::Pole(what) => write!(f, "evaluation at a pole: {what}"),
            Error::UndefinedOnDiagonal => write!(f, "map undefined: x = y"),
            Error::SteinerDegenerate => {
                write!(
                    f,
                    "Steiner points undefined: r and s both satisfy z^2 - z + 1 = 0"
                )
            }
            Error::Structure(what) => write!(f, "not a Pappus structure: {what}"),
            Error::ExcludedParameter(what) => write!(f, "excluded parameter: {what}"),
            Error::UnsupportedDegree(d) => write!(f, "unsupported polynomial degree {d}"),
            Error::UnsupportedPeriod(n) => write!(f, "unsupported period {n}"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "work estimate {needed} exceeds budget {budget}")
            }
        }
    }
}

impl core::error::Error for Error {}
