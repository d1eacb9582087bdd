//! Exact detection of Braess' paradox and the pseudo-paradox.
//!
//! Adding the bridge link makes travel worse (`T_bridged > T_base`) only
//! while the base network splits its flow over both routes *and* the bridged
//! equilibrium keeps the bridge route busy — that is, the bridged case is
//! one of [`BridgedCase::AllUsed`], [`BridgedCase::BridgeOnly`],
//! [`BridgedCase::UpperVanishes`] or [`BridgedCase::LowerVanishes`]. Each of
//! those four patterns contributes one explicit demand interval, gated on
//! the positivity of its Braess number; the paradox region is exactly their
//! union.
//!
//! The *pseudo-paradox* is the weaker event `T_bridged = T_base` over a
//! whole interval of demands: the new link is pointless rather than harmful.

use crate::config::{derive_quantities, DerivedQuantities, FourNodeConfig, Mode};
use crate::equilibrium::{
    equilibrium_base, equilibrium_bridged, BaseCase, BridgedCase, CaseLabel, Guards,
};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::xreal::ExtendedReal;

/// Endpoint merge tolerance: abutting half-open pieces whose endpoints agree
/// up to this relative error are treated as contiguous.
const MERGE_TOL: f64 = 1e-12;

/// Outcome of comparing the two equilibria at one demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// The bridge strictly lowers the equilibrium travel time.
    Improvement,
    /// Braess' paradox: the bridge strictly raises the equilibrium travel
    /// time. Tagged with the active bridged-equilibrium case.
    Paradox(BridgedCase),
    /// The bridge leaves the equilibrium travel time unchanged.
    Equal,
}

impl Classification {
    pub fn is_paradox(&self) -> bool {
        matches!(self, Classification::Paradox(_))
    }
}

/// The paradox interval contributed by one bridged-equilibrium case,
/// together with its Braess-number gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseInterval {
    pub case: BridgedCase,
    /// Value of the Braess number gating this case.
    pub gate_value: f64,
    /// Whether the gate is open (`gate_value > 0`); the interval is empty
    /// otherwise.
    pub gate_open: bool,
    pub interval: Interval,
}

/// Sufficient conditions under which the bridge provably changes nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PseudoCondition {
    /// Demands small enough that both networks put everything on the lower
    /// route.
    LowerRouteOnly,
    /// Demands small enough that both networks put everything on the upper
    /// route.
    UpperRouteOnly,
    /// Demands large enough that the bridged equilibrium leaves the bridge
    /// idle while the base network splits.
    BridgeIdle,
    /// The bridge carries flow but its first Braess number vanishes, so the
    /// extra flow never shows up in the travel time.
    NeutralBridge,
}

impl PseudoCondition {
    pub fn describe(self) -> &'static str {
        match self {
            PseudoCondition::LowerRouteOnly => "all demand on the lower route in both networks",
            PseudoCondition::UpperRouteOnly => "all demand on the upper route in both networks",
            PseudoCondition::BridgeIdle => "bridge route idle at equilibrium",
            PseudoCondition::NeutralBridge => "bridge carries flow without changing times",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoInterval {
    pub condition: PseudoCondition,
    pub interval: Interval,
}

/// Full paradox analysis of one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ParadoxReport {
    pub quantities: DerivedQuantities,
    /// Per-case intervals in Braess-number order
    /// (`AllUsed`, `BridgeOnly`, `UpperVanishes`, `LowerVanishes`).
    pub by_case: [CaseInterval; 4],
    /// Union of the four case intervals: exactly the demands where the
    /// paradox occurs.
    pub region: Vec<Interval>,
    /// Demand intervals where the pseudo-paradox provably occurs.
    pub pseudo: Vec<PseudoInterval>,
}

impl ParadoxReport {
    pub fn region_contains(&self, q: f64) -> bool {
        self.region.iter().any(|iv| iv.contains(q))
    }

    pub fn pseudo_contains(&self, q: f64) -> bool {
        self.pseudo.iter().any(|p| p.interval.contains(q))
    }

    /// Pointwise comparison of the two equilibria at demand `q`.
    pub fn classification_at(&self, q: f64) -> Result<Classification> {
        classify(&self.quantities.cfg, self.quantities.mode, q)
    }
}

/// Collapses sub-round-off slivers (such as a half-open interval whose
/// bounds are the same quantity computed along two float paths) to Empty.
fn snap(interval: Interval) -> Interval {
    if let Some((lo, hi)) = interval.bounds() {
        if lo.is_finite()
            && hi.is_finite()
            && hi.value() - lo.value() <= MERGE_TOL * (1.0 + hi.value().abs())
        {
            return Interval::Empty;
        }
    }
    interval
}

/// Clamps a lower bound into the demand domain `q > 0`.
fn positive_lo(lo: ExtendedReal) -> ExtendedReal {
    lo.max(ExtendedReal::new(0.0))
}

/// The demand interval on which the paradox occurs with the bridged
/// equilibrium in the given case. Cases that cannot host a paradox
/// (`LowerOnly`, `UpperOnly`, `BridgeVanishes`) yield `Empty`.
pub fn paradox_interval(d: &DerivedQuantities, case: BridgedCase) -> Result<CaseInterval> {
    let g = Guards::new(d)?;
    let cfg = &d.cfg;
    let (gate_value, interval) = match case {
        BridgedCase::AllUsed => {
            let iv = if d.b1 > 0.0 {
                let lo = g.upper_cap.max(g.lower_cap).max(g.mu1).max(g.mu2);
                let hi = ExtendedReal::new(g.gate / d.b1);
                Interval::new(positive_lo(lo), true, hi, true)
            } else {
                Interval::Empty
            };
            (d.b1, iv)
        }
        BridgedCase::BridgeOnly => {
            let iv = if d.b2 > 0.0 {
                let floor = ExtendedReal::new(
                    (d.alpha_hat * cfg.beta_sum([4, 5]) + d.alpha_bar * cfg.beta_sum([1, 2]))
                        / d.b2,
                );
                let lo = g.upper_cap.max(g.lower_cap).max(floor);
                let hi = g.bridge_vs_upper.min(g.bridge_vs_lower);
                Interval::new(positive_lo(lo), true, hi, false)
            } else {
                Interval::Empty
            };
            (d.b2, iv)
        }
        BridgedCase::UpperVanishes => {
            let iv = if d.b3 > 0.0 {
                let floor = ExtendedReal::new(
                    (d.alpha_bar * cfg.beta_sum([4]) * d.beta
                        - d.alpha * cfg.beta_sum([1, 3, 4]) * cfg.beta_sum([4, 5]))
                        / d.b3,
                );
                let lo = g
                    .upper_cap
                    .max(g.lower_cap)
                    .max(g.bridge_vs_lower)
                    .max(g.neg_bar)
                    .max(floor);
                Interval::new(positive_lo(lo), true, g.mu1, false)
            } else {
                Interval::Empty
            };
            (d.b3, iv)
        }
        BridgedCase::LowerVanishes => {
            let iv = if d.b4 > 0.0 {
                let floor = ExtendedReal::new(
                    (d.alpha_hat * cfg.beta_sum([2]) * d.beta
                        + d.alpha * cfg.beta_sum([2, 3, 5]) * cfg.beta_sum([1, 2]))
                        / d.b4,
                );
                let lo = g
                    .upper_cap
                    .max(g.lower_cap)
                    .max(g.bridge_vs_upper)
                    .max(g.neg_hat)
                    .max(floor);
                Interval::new(positive_lo(lo), true, g.mu2, false)
            } else {
                Interval::Empty
            };
            (d.b4, iv)
        }
        BridgedCase::LowerOnly | BridgedCase::UpperOnly | BridgedCase::BridgeVanishes => {
            (f64::NAN, Interval::Empty)
        }
    };
    Ok(CaseInterval {
        case,
        gate_value,
        gate_open: gate_value > 0.0,
        interval: snap(interval),
    })
}

/// The four case intervals, their union, and the pseudo-paradox intervals.
pub fn paradox_region(cfg: &FourNodeConfig, mode: Mode) -> Result<ParadoxReport> {
    let d = derive_quantities(cfg, mode)?;
    let by_case = [
        paradox_interval(&d, BridgedCase::AllUsed)?,
        paradox_interval(&d, BridgedCase::BridgeOnly)?,
        paradox_interval(&d, BridgedCase::UpperVanishes)?,
        paradox_interval(&d, BridgedCase::LowerVanishes)?,
    ];
    let region = Interval::union(
        &by_case.iter().map(|c| c.interval).collect::<Vec<_>>(),
        MERGE_TOL,
    );
    let pseudo = pseudo_paradox_region(cfg, mode)?;
    Ok(ParadoxReport {
        quantities: d,
        by_case,
        region,
        pseudo,
    })
}

/// Demand intervals on which the pseudo-paradox provably occurs. The four
/// conditions are sufficient, not necessary; conditions yielding nothing
/// are dropped.
pub fn pseudo_paradox_region(cfg: &FourNodeConfig, mode: Mode) -> Result<Vec<PseudoInterval>> {
    let d = derive_quantities(cfg, mode)?;
    let g = Guards::new(&d)?;
    let zero = ExtendedReal::new(0.0);
    let mut out = Vec::new();

    // Both networks on the lower route alone.
    let iv = Interval::new(zero, true, g.lower_cap.min(g.neg_bar), false);
    if !iv.is_empty() {
        out.push(PseudoInterval {
            condition: PseudoCondition::LowerRouteOnly,
            interval: iv,
        });
    }

    // Both networks on the upper route alone.
    let iv = Interval::new(zero, true, g.upper_cap.min(g.neg_hat), false);
    if !iv.is_empty() {
        out.push(PseudoInterval {
            condition: PseudoCondition::UpperRouteOnly,
            interval: iv,
        });
    }

    // Split base network, idle bridge: q > max(caps) and q*b1 >= gate.
    let lo_split = positive_lo(g.upper_cap.max(g.lower_cap));
    let iv = if d.b1 > 0.0 {
        let s = g.gate / d.b1;
        if s > lo_split.value() {
            Interval::new(ExtendedReal::new(s), false, ExtendedReal::POS_INF, true)
        } else {
            Interval::new(lo_split, true, ExtendedReal::POS_INF, true)
        }
    } else if d.b1 == 0.0 {
        if g.gate <= 0.0 {
            Interval::new(lo_split, true, ExtendedReal::POS_INF, true)
        } else {
            Interval::Empty
        }
    } else {
        // q*b1 >= gate with b1 < 0 caps the demand from above.
        Interval::new(lo_split, true, ExtendedReal::new(g.gate / d.b1), false)
    };
    if !iv.is_empty() {
        out.push(PseudoInterval {
            condition: PseudoCondition::BridgeIdle,
            interval: iv,
        });
    }

    // Bridge in use but neutral: b1 = 0 with a strictly positive gate.
    if d.b1 == 0.0 && g.gate > 0.0 {
        let lo = positive_lo(g.upper_cap.max(g.lower_cap).max(g.mu1).max(g.mu2));
        let iv = Interval::new(lo, true, ExtendedReal::POS_INF, true);
        if !iv.is_empty() {
            out.push(PseudoInterval {
                condition: PseudoCondition::NeutralBridge,
                interval: iv,
            });
        }
    }

    Ok(out)
}

/// Compares the two equilibria at demand `q` with relative tolerance 1e-9.
pub fn classify(cfg: &FourNodeConfig, mode: Mode, q: f64) -> Result<Classification> {
    cfg.validate(mode)?;
    let base = equilibrium_base(cfg, q)?;
    let bridged = equilibrium_bridged(cfg, q)?;
    let tol = 1e-9 * (1.0 + base.travel_time.abs());
    let diff = bridged.travel_time - base.travel_time;
    if diff > tol {
        let CaseLabel::Bridged(case) = bridged.case else {
            unreachable!("bridged solver returned a base case label");
        };
        // The paradox can only happen with the base network split over both
        // routes and the bridge route active.
        debug_assert_eq!(base.case, CaseLabel::Base(BaseCase::BothUsed));
        debug_assert!(!matches!(
            case,
            BridgedCase::LowerOnly | BridgedCase::UpperOnly | BridgedCase::BridgeVanishes
        ));
        Ok(Classification::Paradox(case))
    } else if diff < -tol {
        Ok(Classification::Improvement)
    } else {
        Ok(Classification::Equal)
    }
}

/// Symmetric configuration patterns with closed-form paradox bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricPattern {
    /// Zero free-flow time on the `(a,b)`/`(c,d)` pair, mirrored middle
    /// links, and the bridge sharing their delay parameter.
    Classic,
    /// Mirrored pairs only: `alpha1 = alpha5`, `alpha2 = alpha4`,
    /// `beta1 = beta5`, `beta2 = beta4`; bridge parameters free.
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricReport {
    pub pattern: SymmetricPattern,
    /// Closed-form paradox interval; checked against the general machinery.
    pub region: Interval,
}

/// Detects a symmetric pattern and returns its closed-form paradox bounds,
/// asserting they agree with [`paradox_region`].
pub fn symmetric_analysis(cfg: &FourNodeConfig) -> Result<SymmetricReport> {
    let a = &cfg.alpha;
    let b = &cfg.beta;
    let near = |x: f64, y: f64| (x - y).abs() <= 1e-12 * (1.0 + x.abs().max(y.abs()));

    let classic = near(a[0], 0.0)
        && near(a[4], 0.0)
        && near(a[1], a[3])
        && near(b[0], b[4])
        && near(b[1], b[2])
        && near(b[2], b[3]);
    let extended = near(a[0], a[4]) && near(a[1], a[3]) && near(b[0], b[4]) && near(b[1], b[3]);

    let (pattern, region) = if classic {
        let delta = a[1] - a[2];
        let region = if b[0] > b[1] {
            Interval::open(
                2.0 * delta / (3.0 * b[0] + b[1]),
                2.0 * delta / (b[0] - b[1]),
            )
        } else {
            Interval::Empty
        };
        (SymmetricPattern::Classic, region)
    } else if extended {
        let delta = a[1] - (a[0] + a[2]);
        let region = if b[0] > b[1] {
            Interval::open(
                2.0 * delta / (3.0 * b[0] + 2.0 * b[2] - b[1]),
                2.0 * delta / (b[0] - b[1]),
            )
        } else {
            Interval::Empty
        };
        (SymmetricPattern::Extended, region)
    } else {
        return Err(Error::NotSymmetric(
            "expected mirrored link pairs (alpha1=alpha5, alpha2=alpha4, beta1=beta5, \
             beta2=beta4), optionally with zero end free-flow times and a bridge matching \
             the middle delays"
                .into(),
        ));
    };

    let general = paradox_region(cfg, Mode::Relaxed)?;
    match (&region, general.region.as_slice()) {
        (Interval::Empty, []) => {}
        (Interval::Range { lo, hi, .. }, [merged]) => {
            let (mlo, mhi) = merged.bounds().unwrap();
            assert!(
                (lo.value() - mlo.value()).abs() <= 1e-9 * (1.0 + lo.value().abs())
                    && (hi.value() - mhi.value()).abs() <= 1e-9 * (1.0 + hi.value().abs()),
                "closed-form symmetric bounds {region} disagree with general region {merged}",
            );
        }
        _ => panic!(
            "closed-form symmetric bounds {region} disagree with general region {:?}",
            general.region
        ),
    }

    Ok(SymmetricReport { pattern, region })
}
