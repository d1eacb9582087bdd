//! Extended real numbers: `f64` plus the two infinities, never NaN.
//!
//! Guard thresholds and interval endpoints are ratios of derived quantities.
//! When a delay parameter is allowed to be zero (relaxed mode) those ratios
//! can be `x/0`, which resolves to `+inf` or `-inf` depending on the sign of
//! `x`. The one genuinely undefined combination, `0/0`, is surfaced as
//! [`Error::ZeroOverZero`] instead of silently picking a convention.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A real number extended with `+inf` and `-inf`. NaN is excluded by
/// construction, so the usual total order applies.
#[derive(Clone, Copy, PartialEq)]
pub struct ExtendedReal(f64);

impl ExtendedReal {
    pub const POS_INF: ExtendedReal = ExtendedReal(f64::INFINITY);
    pub const NEG_INF: ExtendedReal = ExtendedReal(f64::NEG_INFINITY);

    pub fn new(value: f64) -> Self {
        assert!(!value.is_nan(), "ExtendedReal cannot hold NaN");
        ExtendedReal(value)
    }

    /// `num / den` with the division-by-zero convention. `what` names the
    /// ratio in the `0/0` error.
    pub fn ratio(num: f64, den: f64, what: &'static str) -> Result<Self> {
        if den == 0.0 && num == 0.0 {
            return Err(Error::ZeroOverZero(what));
        }
        // IEEE division already yields the correctly signed infinity for
        // x/0 with x != 0.
        Ok(ExtendedReal::new(num / den))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl From<f64> for ExtendedReal {
    fn from(value: f64) -> Self {
        ExtendedReal::new(value)
    }
}

impl Eq for ExtendedReal {}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        // total_cmp is safe here: NaN is unrepresentable.
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == f64::INFINITY {
            write!(f, "inf")
        } else if self.0 == f64::NEG_INFINITY {
            write!(f, "-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Debug for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
