//! Demand intervals with extended-real endpoints and open/closed ends.

use std::fmt;

use crate::xreal::ExtendedReal;

/// An interval of demands. Construction normalises anything that contains
/// no point to [`Interval::Empty`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    Empty,
    Range {
        lo: ExtendedReal,
        hi: ExtendedReal,
        lo_open: bool,
        hi_open: bool,
    },
}

impl Interval {
    pub fn new(lo: ExtendedReal, lo_open: bool, hi: ExtendedReal, hi_open: bool) -> Interval {
        if lo > hi || (lo == hi && (lo_open || hi_open || !lo.is_finite())) {
            return Interval::Empty;
        }
        Interval::Range {
            lo,
            hi,
            lo_open,
            hi_open,
        }
    }

    pub fn open(lo: f64, hi: f64) -> Interval {
        Interval::new(lo.into(), true, hi.into(), true)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Interval::Empty)
    }

    pub fn contains(&self, q: f64) -> bool {
        match *self {
            Interval::Empty => false,
            Interval::Range {
                lo,
                hi,
                lo_open,
                hi_open,
            } => {
                let qx = ExtendedReal::new(q);
                let above = if lo_open { qx > lo } else { qx >= lo };
                let below = if hi_open { qx < hi } else { qx <= hi };
                above && below
            }
        }
    }

    pub fn bounds(&self) -> Option<(ExtendedReal, ExtendedReal)> {
        match *self {
            Interval::Empty => None,
            Interval::Range { lo, hi, .. } => Some((lo, hi)),
        }
    }

    /// Unions a set of intervals, merging pieces that overlap or touch.
    /// Half-open pieces produced by adjacent cases abut exactly (one side
    /// closed), and `tol` additionally merges endpoints equal up to
    /// round-off: pieces are joined when `next.lo <= current.hi + tol_scaled`.
    pub fn union(intervals: &[Interval], tol: f64) -> Vec<Interval> {
        let mut ranges: Vec<(ExtendedReal, ExtendedReal, bool, bool)> = intervals
            .iter()
            .filter_map(|iv| match *iv {
                Interval::Empty => None,
                Interval::Range {
                    lo,
                    hi,
                    lo_open,
                    hi_open,
                } => Some((lo, hi, lo_open, hi_open)),
            })
            .collect();
        ranges.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

        let mut merged: Vec<(ExtendedReal, ExtendedReal, bool, bool)> = Vec::new();
        for (lo, hi, lo_open, hi_open) in ranges {
            if let Some(last) = merged.last_mut() {
                let touches = if lo < last.1 {
                    true
                } else if lo == last.1 {
                    // At an exact shared endpoint at least one side must be
                    // closed, otherwise the point itself is missing.
                    !(last.3 && lo_open)
                } else {
                    last.1.is_finite()
                        && lo.value() <= last.1.value() + tol * (1.0 + last.1.value().abs())
                };
                if touches {
                    if hi > last.1 {
                        last.1 = hi;
                        last.3 = hi_open;
                    } else if hi == last.1 && !hi_open {
                        last.3 = false;
                    }
                    continue;
                }
            }
            merged.push((lo, hi, lo_open, hi_open));
        }
        merged
            .into_iter()
            .map(|(lo, hi, lo_open, hi_open)| Interval::new(lo, lo_open, hi, hi_open))
            .collect()
    }

    /// Renders with a fixed number of decimals, e.g. `(0.93, 8.59)`.
    pub fn display_rounded(&self, decimals: usize) -> String {
        match *self {
            Interval::Empty => "empty".to_string(),
            Interval::Range {
                lo,
                hi,
                lo_open,
                hi_open,
            } => {
                let fmt_end = |x: ExtendedReal| {
                    if x.is_finite() {
                        format!("{:.*}", decimals, x.value())
                    } else {
                        x.to_string()
                    }
                };
                format!(
                    "{}{}, {}{}",
                    if lo_open { "(" } else { "[" },
                    fmt_end(lo),
                    fmt_end(hi),
                    if hi_open { ")" } else { "]" },
                )
            }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Interval::Empty => write!(f, "empty"),
            Interval::Range {
                lo,
                hi,
                lo_open,
                hi_open,
            } => write!(
                f,
                "{}{lo}, {hi}{}",
                if lo_open { "(" } else { "[" },
                if hi_open { ")" } else { "]" },
            ),
        }
    }
}
