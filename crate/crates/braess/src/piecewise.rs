//! Assembly of the piecewise-linear equilibrium travel-time function.
//!
//! Every guard threshold of the case analysis is a candidate breakpoint.
//! Each open gap between consecutive candidates is probed at its midpoint to
//! find the active case, the affine coefficients of that case are attached,
//! and neighbouring segments that resolved to the same case are merged away
//! (a threshold need not be an actual case change). The result is checked
//! for continuity across every surviving breakpoint.

use crate::config::{derive_quantities, DerivedQuantities, FourNodeConfig, Mode};
use crate::equilibrium::{
    base_case_affine, base_quantities, bridged_case_affine, equilibrium_base, equilibrium_bridged,
    CaseLabel, Guards,
};
use crate::error::{check_demand, Result};
use crate::xreal::ExtendedReal;

/// One affine piece of the equilibrium function on `(lo, hi]`; the last
/// segment has `hi = f64::INFINITY` when nothing was truncated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub intercept: f64,
    pub slope: f64,
    pub case: CaseLabel,
}

impl Segment {
    pub fn value_at(&self, q: f64) -> f64 {
        self.intercept + self.slope * q
    }
}

/// The equilibrium travel time as a piecewise-linear function of demand,
/// continuous and nondecreasing on its domain `(0, domain_end)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinearFn {
    pub segments: Vec<Segment>,
}

impl PiecewiseLinearFn {
    /// Interior breakpoints, in increasing order.
    pub fn breakpoints(&self) -> Vec<f64> {
        self.segments[..self.segments.len() - 1]
            .iter()
            .map(|s| s.hi)
            .collect()
    }

    /// Upper end of the represented domain; `f64::INFINITY` unless the
    /// function was truncated at a finite `q_max`.
    pub fn domain_end(&self) -> f64 {
        self.segments.last().map(|s| s.hi).unwrap_or(0.0)
    }

    /// Evaluates at `q`, or `None` outside `(0, domain_end]`.
    pub fn value_at(&self, q: f64) -> Option<f64> {
        if q.is_nan() || q <= 0.0 {
            return None;
        }
        self.segments
            .iter()
            .find(|s| q <= s.hi)
            .map(|s| s.value_at(q))
    }

    pub fn segment_at(&self, q: f64) -> Option<&Segment> {
        if q.is_nan() || q <= 0.0 {
            return None;
        }
        self.segments.iter().find(|s| q <= s.hi)
    }
}

/// Builds the equilibrium function for demands in `(0, q_max]`, for the
/// bridged network when `bridged` is set, the bridgeless one otherwise.
/// Pass `f64::INFINITY` as `q_max` for the complete function.
pub fn piecewise_equilibrium(
    cfg: &FourNodeConfig,
    bridged: bool,
    q_max: f64,
) -> Result<PiecewiseLinearFn> {
    check_demand(q_max)?;

    let mut d: Option<DerivedQuantities> = None;
    let mut candidates: Vec<ExtendedReal> = Vec::new();
    if bridged {
        let dq = derive_quantities(cfg, Mode::Relaxed)?;
        let g = Guards::new(&dq)?;
        candidates.extend([
            g.upper_cap,
            g.lower_cap,
            g.bridge_vs_upper,
            g.bridge_vs_lower,
            g.neg_bar,
            g.neg_hat,
            g.mu1,
            g.mu2,
        ]);
        // Demand at which the bridge-idle gate q*b1 >= gate flips.
        if dq.b1 != 0.0 {
            candidates.push(ExtendedReal::new(g.gate / dq.b1));
        }
        d = Some(dq);
    } else {
        let (gap, _) = base_quantities(cfg)?;
        candidates.push(ExtendedReal::ratio(
            gap,
            cfg.beta_sum([1, 2]),
            "alpha/beta12",
        )?);
        candidates.push(ExtendedReal::ratio(
            -gap,
            cfg.beta_sum([4, 5]),
            "-alpha/beta45",
        )?);
    }

    let mut breaks: Vec<f64> = candidates
        .into_iter()
        .filter(|t| t.is_finite())
        .map(|t| t.value())
        .filter(|&t| t > 0.0 && t < q_max)
        .collect();
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|b, a| (*b - *a).abs() <= 1e-12 * (1.0 + a.abs()));
    let truncated = q_max.is_finite();

    // Probe each gap's midpoint for the active case.
    let mut bounds = vec![0.0];
    bounds.extend_from_slice(&breaks);
    let mut segments: Vec<Segment> = Vec::new();
    for (i, &lo) in bounds.iter().enumerate() {
        let hi = bounds.get(i + 1).copied().unwrap_or(f64::INFINITY);
        let probe = if hi.is_finite() {
            0.5 * (lo + hi)
        } else if truncated {
            0.5 * (lo + q_max)
        } else {
            lo + 1.0
        };
        let sol = if bridged {
            equilibrium_bridged(cfg, probe)?
        } else {
            equilibrium_base(cfg, probe)?
        };
        let (intercept, slope) = match sol.case {
            CaseLabel::Base(c) => {
                let (gap, beta) = base_quantities(cfg)?;
                base_case_affine(cfg, gap, beta, c)
            }
            CaseLabel::Bridged(c) => bridged_case_affine(cfg, d.as_ref().unwrap(), c),
        };
        let seg_hi = if hi.is_finite() {
            hi
        } else if truncated {
            q_max
        } else {
            f64::INFINITY
        };
        // A candidate threshold that did not change the case is not a real
        // breakpoint; extend the previous segment instead.
        if let Some(last) = segments.last_mut() {
            if last.case == sol.case {
                last.hi = seg_hi;
                continue;
            }
        }
        segments.push(Segment {
            lo,
            hi: seg_hi,
            intercept,
            slope,
            case: sol.case,
        });
    }

    // Continuity across every surviving breakpoint.
    for w in segments.windows(2) {
        let (left, right) = (&w[0], &w[1]);
        let (a, b) = (left.value_at(left.hi), right.value_at(left.hi));
        assert!(
            (a - b).abs() <= 1e-9 * (1.0 + a.abs()),
            "equilibrium function discontinuous at q = {}: {} vs {} ({:?} / {:?})",
            left.hi,
            a,
            b,
            left.case,
            right.case,
        );
    }

    Ok(PiecewiseLinearFn { segments })
}
