use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Field degree outside `2..=16`.
    RejectsDegree(u32),
    /// Supplied polynomial does not have the requested degree.
    PolynomialDegree {
        m: u32,
        poly: u32,
    },
    RejectsReducible(u32),
    ZeroInverse,
    InvalidFamily(u32),
    ZeroCoefficient,
    /// A closed form that only exists for odd field degree.
    EvenDegree(u32),
    /// Closed forms are tabulated for `(a, b) != (0, 0)` only.
    ZeroPair,
    ZeroCode,
    TooLarge {
        what: &'static str,
        limit: u64,
        got: u64,
    },
    RankDeficient {
        rank: usize,
        k: usize,
    },
    RaggedRows,
    InconsistentDistribution(&'static str),
    OutOfScope(&'static str),
    /// `s` must be odd and greater than one.
    InvalidOrder(u32),
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RejectsDegree(m) => write!(f, "field degree {m} outside supported range 2..=16"),
            Error::PolynomialDegree { m, poly } => {
                write!(f, "polynomial {poly:#b} does not have degree {m}")
            }
            Error::RejectsReducible(p) => write!(f, "polynomial {p:#b} is reducible over GF(2)"),
            Error::ZeroInverse => f.write_str("zero has no multiplicative inverse"),
            Error::InvalidFamily(x) => write!(f, "unknown code family {x} (expected 1, 2 or 3)"),
            Error::ZeroCoefficient => f.write_str("linear coefficient must be nonzero"),
            Error::EvenDegree(m) => write!(f, "closed form requires odd m, got m = {m}"),
            Error::ZeroPair => f.write_str("closed forms are not tabulated for (a, b) = (0, 0)"),
            Error::ZeroCode => f.write_str("distribution has no nonzero weight"),
            Error::TooLarge { what, limit, got } => {
                write!(f, "{what} = {got} exceeds the enumeration guard {limit}")
            }
            Error::RankDeficient { rank, k } => {
                write!(f, "generator matrix has rank {rank} < k = {k}")
            }
            Error::RaggedRows => f.write_str("generator rows have differing lengths"),
            Error::InconsistentDistribution(why) => {
                write!(f, "inconsistent weight distribution: {why}")
            }
            Error::OutOfScope(why) => write!(f, "out of scope: {why}"),
            Error::InvalidOrder(s) => write!(f, "s = {s} must be odd and greater than 1"),
            Error::Overflow => f.write_str("integer overflow in exact arithmetic"),
        }
    }
}

impl core::error::Error for Error {}
