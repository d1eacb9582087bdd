//! Closed-form Wardrop equilibria for the four-node network, with and
//! without the bridge.
//!
//! At equilibrium every route that carries flow has the same travel time and
//! no empty route is faster. For linear volume-delay functions the
//! equilibrium travel time is a piecewise-linear function of the total
//! demand `q`, with one affine piece per *support pattern* (the set of
//! routes carrying flow). The bridgeless network has three patterns, the
//! bridged network seven; each pattern comes with an explicit guard on `q`
//! built from the derived quantities.
//!
//! Guards are evaluated with exact floating-point comparisons, in a fixed
//! order, so that at a demand sitting exactly on a case boundary (where both
//! formulas agree by continuity) the earlier case wins deterministically.

use std::fmt;

use crate::config::{derive_quantities, DerivedQuantities, FourNodeConfig, Mode};
use crate::error::{check_demand, Result};
use crate::xreal::ExtendedReal;

/// Equilibrium support patterns of the bridgeless network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseCase {
    /// (a) Only the lower route `a-c-d` carries flow.
    LowerOnly,
    /// (b) Only the upper route `a-b-d` carries flow.
    UpperOnly,
    /// (c) Both routes carry flow.
    BothUsed,
}

impl BaseCase {
    pub fn letter(self) -> char {
        match self {
            BaseCase::LowerOnly => 'a',
            BaseCase::UpperOnly => 'b',
            BaseCase::BothUsed => 'c',
        }
    }
}

/// Equilibrium support patterns of the bridged network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BridgedCase {
    /// (a) Only the bridge route `a-b-c-d` carries flow.
    BridgeOnly,
    /// (b) Only the lower route carries flow.
    LowerOnly,
    /// (c) Only the upper route carries flow.
    UpperOnly,
    /// (d) The upper route alone is empty; lower and bridge routes share.
    UpperVanishes,
    /// (e) The lower route alone is empty; upper and bridge routes share.
    LowerVanishes,
    /// (f) The bridge route alone is empty; the bridge changes nothing.
    BridgeVanishes,
    /// (g) All three routes carry flow.
    AllUsed,
}

impl BridgedCase {
    pub const ALL: [BridgedCase; 7] = [
        BridgedCase::BridgeOnly,
        BridgedCase::LowerOnly,
        BridgedCase::UpperOnly,
        BridgedCase::UpperVanishes,
        BridgedCase::LowerVanishes,
        BridgedCase::BridgeVanishes,
        BridgedCase::AllUsed,
    ];

    pub fn letter(self) -> char {
        match self {
            BridgedCase::BridgeOnly => 'a',
            BridgedCase::LowerOnly => 'b',
            BridgedCase::UpperOnly => 'c',
            BridgedCase::UpperVanishes => 'd',
            BridgedCase::LowerVanishes => 'e',
            BridgedCase::BridgeVanishes => 'f',
            BridgedCase::AllUsed => 'g',
        }
    }
}

/// Case label of an equilibrium solution, tagged by network kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Base(BaseCase),
    Bridged(BridgedCase),
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Base(c) => write!(f, "N.{}", c.letter()),
            CaseLabel::Bridged(c) => write!(f, "N+.{}", c.letter()),
        }
    }
}

/// Flow on each of the three routes. `bridge` is zero in the bridgeless
/// network.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PathFlows {
    pub upper: f64,
    pub lower: f64,
    pub bridge: f64,
}

impl PathFlows {
    pub fn total(&self) -> f64 {
        self.upper + self.lower + self.bridge
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.upper, self.lower, self.bridge]
    }

    /// Link flows induced by the route flows.
    pub fn link_flows(&self) -> LinkFlows {
        LinkFlows {
            ab: self.upper + self.bridge,
            bd: self.upper,
            bc: self.bridge,
            ac: self.lower,
            cd: self.lower + self.bridge,
        }
    }
}

/// Flow on each of the five links.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LinkFlows {
    pub ab: f64,
    pub bd: f64,
    pub bc: f64,
    pub ac: f64,
    pub cd: f64,
}

/// A Wardrop equilibrium for a given demand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumSolution {
    /// Whether the bridge link took part in the computation.
    pub bridged: bool,
    pub case: CaseLabel,
    /// Common travel time of all routes carrying flow.
    pub travel_time: f64,
    pub path_flows: PathFlows,
    pub link_flows: LinkFlows,
}

impl EquilibriumSolution {
    fn new(bridged: bool, case: CaseLabel, travel_time: f64, path_flows: PathFlows) -> Self {
        EquilibriumSolution {
            bridged,
            case,
            travel_time,
            path_flows,
            link_flows: path_flows.link_flows(),
        }
    }
}

/// Guard thresholds shared by the case analysis and the interval bounds.
/// All are extended reals so relaxed-mode zero denominators resolve to
/// signed infinities.
pub(crate) struct Guards {
    /// alpha / beta12: largest demand the upper route can absorb alone.
    pub upper_cap: ExtendedReal,
    /// -alpha / beta45: largest demand the lower route can absorb alone.
    pub lower_cap: ExtendedReal,
    /// alpha_hat / beta35: bridge-route bound against the upper route.
    pub bridge_vs_upper: ExtendedReal,
    /// alpha_bar / beta13: bridge-route bound against the lower route.
    pub bridge_vs_lower: ExtendedReal,
    /// -alpha_bar / beta4.
    pub neg_bar: ExtendedReal,
    /// -alpha_hat / beta2.
    pub neg_hat: ExtendedReal,
    pub mu1: ExtendedReal,
    pub mu2: ExtendedReal,
    /// alpha_hat*beta14 + alpha_bar*beta25, the numerator in the
    /// bridge-idle gate `q*b1 >= gate`.
    pub gate: f64,
}

impl Guards {
    pub(crate) fn new(d: &DerivedQuantities) -> Result<Self> {
        let cfg = &d.cfg;
        Ok(Guards {
            upper_cap: ExtendedReal::ratio(d.alpha, cfg.beta_sum([1, 2]), "alpha/beta12")?,
            lower_cap: ExtendedReal::ratio(-d.alpha, cfg.beta_sum([4, 5]), "-alpha/beta45")?,
            bridge_vs_upper: ExtendedReal::ratio(
                d.alpha_hat,
                cfg.beta_sum([3, 5]),
                "alpha_hat/beta35",
            )?,
            bridge_vs_lower: ExtendedReal::ratio(
                d.alpha_bar,
                cfg.beta_sum([1, 3]),
                "alpha_bar/beta13",
            )?,
            neg_bar: ExtendedReal::ratio(-d.alpha_bar, cfg.beta_sum([4]), "-alpha_bar/beta4")?,
            neg_hat: ExtendedReal::ratio(-d.alpha_hat, cfg.beta_sum([2]), "-alpha_hat/beta2")?,
            mu1: d.mu1,
            mu2: d.mu2,
            gate: d.alpha_hat * cfg.beta_sum([1, 4]) + d.alpha_bar * cfg.beta_sum([2, 5]),
        })
    }
}

/// The two scalars the bridgeless analysis needs: the free-flow gap
/// `alpha45 - alpha12` and the total route delay `beta1+beta2+beta4+beta5`.
pub(crate) fn base_quantities(cfg: &FourNodeConfig) -> Result<(f64, f64)> {
    cfg.validate_base(Mode::Relaxed)?;
    let gap = cfg.alpha_sum([4, 5]) - cfg.alpha_sum([1, 2]);
    let beta = cfg.beta_sum([1, 2, 4, 5]);
    Ok((gap, beta))
}

/// Affine coefficients `(intercept, slope)` of the travel time in `q` for a
/// bridgeless equilibrium case. `gap` and `beta` come from
/// [`base_quantities`].
pub(crate) fn base_case_affine(
    cfg: &FourNodeConfig,
    gap: f64,
    beta: f64,
    case: BaseCase,
) -> (f64, f64) {
    match case {
        BaseCase::LowerOnly => (cfg.alpha_sum([4, 5]), cfg.beta_sum([4, 5])),
        BaseCase::UpperOnly => (cfg.alpha_sum([1, 2]), cfg.beta_sum([1, 2])),
        BaseCase::BothUsed => {
            let b12 = cfg.beta_sum([1, 2]);
            let b45 = cfg.beta_sum([4, 5]);
            (cfg.alpha_sum([1, 2]) + gap * b12 / beta, b45 * b12 / beta)
        }
    }
}

/// Affine coefficients `(intercept, slope)` of the travel time in `q` for a
/// bridged equilibrium case.
pub(crate) fn bridged_case_affine(
    cfg: &FourNodeConfig,
    d: &DerivedQuantities,
    case: BridgedCase,
) -> (f64, f64) {
    match case {
        BridgedCase::BridgeOnly => (cfg.alpha_sum([1, 3, 5]), cfg.beta_sum([1, 3, 5])),
        BridgedCase::LowerOnly => (cfg.alpha_sum([4, 5]), cfg.beta_sum([4, 5])),
        BridgedCase::UpperOnly => (cfg.alpha_sum([1, 2]), cfg.beta_sum([1, 2])),
        BridgedCase::UpperVanishes => {
            let b4 = cfg.beta_sum([4]);
            let b134 = cfg.beta_sum([1, 3, 4]);
            (
                cfg.alpha_sum([4, 5]) - d.alpha_bar * b4 / b134,
                cfg.beta_sum([4, 5]) - b4 * b4 / b134,
            )
        }
        BridgedCase::LowerVanishes => {
            let b2 = cfg.beta_sum([2]);
            let b235 = cfg.beta_sum([2, 3, 5]);
            (
                cfg.alpha_sum([1, 2]) - d.alpha_hat * b2 / b235,
                cfg.beta_sum([1, 2]) - b2 * b2 / b235,
            )
        }
        BridgedCase::BridgeVanishes => {
            let b12 = cfg.beta_sum([1, 2]);
            (
                cfg.alpha_sum([1, 2]) + d.alpha * b12 / d.beta,
                cfg.beta_sum([4, 5]) * b12 / d.beta,
            )
        }
        BridgedCase::AllUsed => {
            let b12 = cfg.beta_sum([1, 2]);
            let b45 = cfg.beta_sum([4, 5]);
            let b14 = cfg.beta_sum([1, 4]);
            let denom = cfg.beta_sum([3]) * d.beta + b14 * cfg.beta_sum([2, 5]);
            let g_intercept = (d.alpha_bar * d.beta - d.alpha * b14) / denom;
            (
                cfg.alpha_sum([1, 2]) + d.alpha * b12 / d.beta + d.b1 * g_intercept / d.beta,
                b45 * b12 / d.beta - d.b1 * d.b1 / (denom * d.beta),
            )
        }
    }
}

/// Wardrop equilibrium of the bridgeless network at demand `q`.
pub fn equilibrium_base(cfg: &FourNodeConfig, q: f64) -> Result<EquilibriumSolution> {
    check_demand(q)?;
    let (gap, beta) = base_quantities(cfg)?;

    let upper_cap = ExtendedReal::ratio(gap, cfg.beta_sum([1, 2]), "alpha/beta12")?;
    let lower_cap = ExtendedReal::ratio(-gap, cfg.beta_sum([4, 5]), "-alpha/beta45")?;
    let qx = ExtendedReal::new(q);

    let (case, flows) = if qx <= lower_cap {
        (
            BaseCase::LowerOnly,
            PathFlows {
                upper: 0.0,
                lower: q,
                bridge: 0.0,
            },
        )
    } else if qx <= upper_cap {
        (
            BaseCase::UpperOnly,
            PathFlows {
                upper: q,
                lower: 0.0,
                bridge: 0.0,
            },
        )
    } else {
        let h = (gap + q * cfg.beta_sum([4, 5])) / beta;
        (
            BaseCase::BothUsed,
            PathFlows {
                upper: h,
                lower: q - h,
                bridge: 0.0,
            },
        )
    };
    let (intercept, slope) = base_case_affine(cfg, gap, beta, case);
    Ok(EquilibriumSolution::new(
        false,
        CaseLabel::Base(case),
        intercept + slope * q,
        flows,
    ))
}

/// Wardrop equilibrium of the bridged network at demand `q`.
pub fn equilibrium_bridged(cfg: &FourNodeConfig, q: f64) -> Result<EquilibriumSolution> {
    check_demand(q)?;
    let d = derive_quantities(cfg, Mode::Relaxed)?;
    let case = select_bridged_case(&d, q)?;
    Ok(solution_for_bridged_case(&d, q, case))
}

/// Diagnostic helper: every bridged case whose guard admits `(cfg, q)`.
/// Away from case boundaries exactly one case is admissible; on a boundary
/// the adjacent cases agree on the travel time by continuity.
pub fn admissible_bridged_cases(cfg: &FourNodeConfig, q: f64) -> Result<Vec<BridgedCase>> {
    check_demand(q)?;
    let d = derive_quantities(cfg, Mode::Relaxed)?;
    let g = Guards::new(&d)?;
    Ok(BridgedCase::ALL
        .iter()
        .copied()
        .filter(|&case| bridged_guard_holds(&d, &g, q, case))
        .collect())
}

fn bridged_guard_holds(d: &DerivedQuantities, g: &Guards, q: f64, case: BridgedCase) -> bool {
    let qx = ExtendedReal::new(q);
    match case {
        BridgedCase::BridgeOnly => qx <= g.bridge_vs_upper.min(g.bridge_vs_lower),
        BridgedCase::LowerOnly => qx <= g.lower_cap.min(g.neg_bar),
        BridgedCase::UpperOnly => qx <= g.upper_cap.min(g.neg_hat),
        BridgedCase::UpperVanishes => qx > g.bridge_vs_lower.max(g.neg_bar) && qx <= g.mu1,
        BridgedCase::LowerVanishes => qx > g.bridge_vs_upper.max(g.neg_hat) && qx <= g.mu2,
        // Multiplying the gate through by q > 0 avoids dividing by q and
        // keeps b1 = 0 exact.
        BridgedCase::BridgeVanishes => qx > g.upper_cap.max(g.lower_cap) && q * d.b1 >= g.gate,
        BridgedCase::AllUsed => qx > g.mu1.max(g.mu2) && q * d.b1 < g.gate,
    }
}

fn select_bridged_case(d: &DerivedQuantities, q: f64) -> Result<BridgedCase> {
    let g = Guards::new(d)?;
    for case in BridgedCase::ALL {
        if bridged_guard_holds(d, &g, q, case) {
            return Ok(case);
        }
    }
    // The seven cases are exhaustive for any valid configuration; a miss is
    // an internal inconsistency, so dump every guard value for diagnosis.
    panic!(
        "no equilibrium case admits q = {q} (internal inconsistency)\n\
         config: {:?}\n\
         upper_cap = {}, lower_cap = {}, bridge_vs_upper = {}, bridge_vs_lower = {},\n\
         neg_bar = {}, neg_hat = {}, mu1 = {}, mu2 = {}, b1 = {}, gate = {}",
        d.cfg,
        g.upper_cap,
        g.lower_cap,
        g.bridge_vs_upper,
        g.bridge_vs_lower,
        g.neg_bar,
        g.neg_hat,
        g.mu1,
        g.mu2,
        d.b1,
        g.gate,
    );
}

fn solution_for_bridged_case(
    d: &DerivedQuantities,
    q: f64,
    case: BridgedCase,
) -> EquilibriumSolution {
    let cfg = &d.cfg;
    // Link flows are parameterised by f = flow on (a,b) and g = flow on
    // (b,c): upper route carries f - g, lower q - f, bridge g.
    let (f, g) = match case {
        BridgedCase::BridgeOnly => (q, q),
        BridgedCase::LowerOnly => (0.0, 0.0),
        BridgedCase::UpperOnly => (q, 0.0),
        BridgedCase::UpperVanishes => {
            let f = (d.alpha_bar + q * cfg.beta_sum([4])) / cfg.beta_sum([1, 3, 4]);
            (f, f)
        }
        BridgedCase::LowerVanishes => (
            q,
            (d.alpha_hat + q * cfg.beta_sum([2])) / cfg.beta_sum([2, 3, 5]),
        ),
        BridgedCase::BridgeVanishes => ((d.alpha + q * cfg.beta_sum([4, 5])) / d.beta, 0.0),
        BridgedCase::AllUsed => {
            let b14 = cfg.beta_sum([1, 4]);
            let denom = cfg.beta_sum([3]) * d.beta + b14 * cfg.beta_sum([2, 5]);
            let g = (d.alpha_bar * d.beta - d.alpha * b14 - q * d.b1) / denom;
            let f = (d.alpha + g * cfg.beta_sum([2, 5]) + q * cfg.beta_sum([4, 5])) / d.beta;
            (f, g)
        }
    };
    let flows = PathFlows {
        upper: f - g,
        lower: q - f,
        bridge: g,
    };
    let (intercept, slope) = bridged_case_affine(cfg, d, case);
    EquilibriumSolution::new(true, CaseLabel::Bridged(case), intercept + slope * q, flows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn reference_config() -> FourNodeConfig {
        FourNodeConfig::new([2.0, 36.0, 6.0, 40.0, 2.0], [30.0, 32.0, 3.0, 8.0, 19.0])
    }

    fn classic_config() -> FourNodeConfig {
        FourNodeConfig::new([0.0, 50.0, 10.0, 50.0, 0.0], [10.0, 1.0, 1.0, 1.0, 10.0])
    }

    #[test]
    fn base_light_demand_uses_upper_route_alone() {
        let sol = equilibrium_base(&reference_config(), 0.05).unwrap();
        assert_eq!(sol.case, CaseLabel::Base(BaseCase::UpperOnly));
        assert!((sol.travel_time - 41.1).abs() < 1e-12);
        assert_eq!(sol.path_flows.upper, 0.05);
    }

    #[test]
    fn base_heavy_demand_splits_between_routes() {
        let sol = equilibrium_base(&reference_config(), 1.0).unwrap();
        assert_eq!(sol.case, CaseLabel::Base(BaseCase::BothUsed));
        let expected = 3630.0 / 89.0 + 1674.0 / 89.0;
        assert!((sol.travel_time - expected).abs() < 1e-9);
        assert!((sol.travel_time - 59.60).abs() < 5e-3);
    }

    #[test]
    fn base_split_flows_match_hand_computation() {
        // Classic symmetric network at q = 6: an even split, both routes at
        // travel time 83.
        let sol = equilibrium_base(&classic_config(), 6.0).unwrap();
        assert_eq!(sol.case, CaseLabel::Base(BaseCase::BothUsed));
        assert!((sol.path_flows.upper - 3.0).abs() < 1e-12);
        assert!((sol.path_flows.lower - 3.0).abs() < 1e-12);
        assert!((sol.travel_time - 83.0).abs() < 1e-12);
    }

    #[test]
    fn base_boundary_demand_resolves_to_single_route_case() {
        // Exactly at alpha/beta12 the single-route guard still holds.
        let q = 4.0 / 62.0;
        let sol = equilibrium_base(&reference_config(), q).unwrap();
        assert_eq!(sol.case, CaseLabel::Base(BaseCase::UpperOnly));
    }

    #[test]
    fn nonpositive_demand_is_rejected() {
        assert!(matches!(
            equilibrium_base(&reference_config(), 0.0),
            Err(Error::InvalidDemand(_))
        ));
        assert!(matches!(
            equilibrium_bridged(&reference_config(), -1.0),
            Err(Error::InvalidDemand(_))
        ));
    }

    #[test]
    fn bridged_cases_of_reference_config() {
        let cfg = reference_config();

        let sol = equilibrium_bridged(&cfg, 0.5).unwrap();
        assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::BridgeOnly));
        assert!((sol.travel_time - 36.0).abs() < 1e-12);

        let sol = equilibrium_bridged(&cfg, 1.2).unwrap();
        assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::UpperVanishes));
        let expected = 1466.0 / 41.0 + 1043.0 / 41.0 * 1.2;
        assert!((sol.travel_time - expected).abs() < 1e-9);
        assert!((sol.travel_time - 66.28).abs() < 5e-3);

        let sol = equilibrium_bridged(&cfg, 5.0).unwrap();
        assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::AllUsed));
        let g = (2696.0 - 314.0 * 5.0) / 2205.0;
        let f = (4.0 + g * 51.0 + 5.0 * 27.0) / 89.0;
        assert!((sol.path_flows.bridge - g).abs() < 1e-12);
        assert!((sol.path_flows.upper - (f - g)).abs() < 1e-12);
        assert!(
            (sol.travel_time - (38.0 + (4.0 + 27.0 * 5.0) * 62.0 / 89.0 + g * 314.0 / 89.0)).abs()
                < 1e-9
        );

        let sol = equilibrium_bridged(&cfg, 10.0).unwrap();
        assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::BridgeVanishes));
        assert!((sol.travel_time - (3630.0 / 89.0 + 16740.0 / 89.0)).abs() < 1e-9);
        assert!((sol.travel_time - 228.9).abs() < 5e-2);
    }

    #[test]
    fn dominant_single_routes_absorb_light_demand() {
        // Lower route beats everything when lightly loaded: alpha < 0 and
        // alpha_bar < 0 keep case (b) open up to min(18/2, 14/1) = 9.
        let cfg = FourNodeConfig::new([10.0, 10.0, 5.0, 1.0, 1.0], [1.0; 5]);
        let sol = equilibrium_bridged(&cfg, 5.0).unwrap();
        assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::LowerOnly));
        assert_eq!(sol.travel_time, 2.0 + 2.0 * 5.0);
        assert_eq!(sol.path_flows.lower, 5.0);

        // Mirror image: the upper route dominates, case (c).
        let cfg = FourNodeConfig::new([1.0, 1.0, 5.0, 10.0, 10.0], [1.0; 5]);
        let sol = equilibrium_bridged(&cfg, 5.0).unwrap();
        assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::UpperOnly));
        assert_eq!(sol.travel_time, 2.0 + 2.0 * 5.0);
        assert_eq!(sol.path_flows.upper, 5.0);
    }

    #[test]
    fn mirrored_reference_config_empties_the_lower_route() {
        // Swapping the route legs (1<->5, 2<->4) exchanges the roles of the
        // upper and lower routes, so the mirrored network at q = 1.2 is in
        // case (e) with the same travel time the original had in case (d).
        let cfg = FourNodeConfig::new([2.0, 40.0, 6.0, 36.0, 2.0], [19.0, 8.0, 3.0, 32.0, 30.0]);
        let sol = equilibrium_bridged(&cfg, 1.2).unwrap();
        assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::LowerVanishes));
        let expected = 1466.0 / 41.0 + 1043.0 / 41.0 * 1.2;
        assert!((sol.travel_time - expected).abs() < 1e-9);
        assert_eq!(sol.path_flows.lower, 0.0);
        assert!(sol.path_flows.bridge > 0.0 && sol.path_flows.upper > 0.0);
    }

    #[test]
    fn all_ones_config_always_leaves_bridge_idle() {
        let cfg = FourNodeConfig::new([1.0; 5], [1.0; 5]);
        for q in [0.01, 0.5, 1.0, 7.3, 100.0] {
            let sol = equilibrium_bridged(&cfg, q).unwrap();
            assert_eq!(sol.case, CaseLabel::Bridged(BridgedCase::BridgeVanishes));
        }
    }

    #[test]
    fn flows_conserve_and_remain_nonnegative() {
        let cfg = reference_config();
        for q in [0.3, 0.97, 1.1, 2.0, 8.0, 9.0, 25.0] {
            let sol = equilibrium_bridged(&cfg, q).unwrap();
            assert!((sol.path_flows.total() - q).abs() < 1e-9 * (1.0 + q));
            for h in sol.path_flows.as_array() {
                assert!(h >= -1e-12 * (1.0 + q), "negative flow {h} at q={q}");
            }
            let lf = sol.link_flows;
            assert!(lf.ab >= lf.bc && lf.ab <= q + 1e-12 * (1.0 + q));
        }
    }

    #[test]
    fn case_labels_render_with_network_tag() {
        assert_eq!(CaseLabel::Base(BaseCase::BothUsed).to_string(), "N.c");
        assert_eq!(CaseLabel::Bridged(BridgedCase::AllUsed).to_string(), "N+.g");
    }
}
