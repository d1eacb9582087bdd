use std::fmt;

/// Errors produced by configuration validation, network reduction and the
/// equilibrium/paradox machinery.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A network configuration violates the invariants of the requested mode
    /// (negative or non-finite parameters, zero delay in strict mode, or a
    /// zero total delay on the non-bridge links).
    InvalidConfig(String),
    /// A ratio of derived quantities evaluated to 0/0. The payload names the
    /// offending ratio. Only reachable in relaxed mode.
    ZeroOverZero(&'static str),
    /// The total demand must be strictly positive.
    InvalidDemand(f64),
    /// The five-role decomposition of a general network is malformed: a
    /// required role is missing, or role endpoints do not line up.
    Topology(String),
    /// The links assigned to one role do not chain head-to-tail into a
    /// single simple path.
    BrokenPath(String),
    /// The configuration does not match any supported symmetric pattern.
    NotSymmetric(String),
    /// Path flows handed to the Wardrop checker violate conservation or
    /// nonnegativity beyond round-off.
    InfeasibleFlows(String),
    /// The oracle failed to locate an equilibrium point. Cannot happen for
    /// strictly positive delay parameters; reported instead of panicking so
    /// the caller can surface diagnostics.
    NoKktPoint,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::ZeroOverZero(what) => {
                write!(f, "undefined ratio 0/0 while evaluating {what}")
            }
            Error::InvalidDemand(q) => write!(f, "total demand must be positive, got {q}"),
            Error::Topology(msg) => write!(f, "network topology error: {msg}"),
            Error::BrokenPath(msg) => write!(f, "broken path: {msg}"),
            Error::NotSymmetric(msg) => write!(f, "not a symmetric configuration: {msg}"),
            Error::InfeasibleFlows(msg) => write!(f, "infeasible flows: {msg}"),
            Error::NoKktPoint => write!(f, "oracle found no equilibrium point"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects demands that are not strictly positive (NaN included).
pub(crate) fn check_demand(q: f64) -> Result<()> {
    if q.is_nan() || q <= 0.0 {
        return Err(Error::InvalidDemand(q));
    }
    Ok(())
}
