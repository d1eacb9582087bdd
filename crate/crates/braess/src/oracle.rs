//! Independent equilibrium oracle used to validate the closed forms.
//!
//! A Wardrop equilibrium of a network with separable increasing link costs
//! is the minimizer of the Beckmann potential, the sum over links of the
//! integral of the cost function up to the link flow. For linear costs that
//! is a convex quadratic in the route flows, which this module minimizes by
//! two deliberately different methods:
//!
//! * exhaustive *active-set* enumeration: for each nonempty set of routes,
//!   solve the linear system that equalizes their travel times, then keep
//!   the unique candidate that is feasible and leaves no unused route
//!   faster;
//! * a derivative-free *grid* search: nested golden-section minimization of
//!   the potential over the flow polytope, used when zero delay parameters
//!   make the equal-time systems singular.
//!
//! Neither method shares a single formula with the case analysis in
//! [`crate::equilibrium`], which is the whole point.

use crate::config::{FourNodeConfig, Mode};
use crate::equilibrium::PathFlows;
use crate::error::{check_demand, Error, Result};

/// Which method produced an [`OracleSolution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMethod {
    ActiveSet,
    Grid,
}

/// An equilibrium located by the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSolution {
    pub path_flows: PathFlows,
    /// Common travel time of the used routes.
    pub travel_time: f64,
    /// Beckmann potential at the minimizer.
    pub potential: f64,
    /// Max of used-route time spread and unused-route deficit.
    pub kkt_residual: f64,
    pub method: OracleMethod,
}

/// Free-flow time of route `i` and the route-interaction matrix entry
/// `m[i][j]` = total delay of the links routes `i` and `j` share. Route
/// order: upper, lower, bridge.
fn route_costs(cfg: &FourNodeConfig) -> ([f64; 3], [[f64; 3]; 3]) {
    let c = [
        cfg.alpha_sum([1, 2]),
        cfg.alpha_sum([4, 5]),
        cfg.alpha_sum([1, 3, 5]),
    ];
    let b = &cfg.beta;
    let m = [
        [cfg.beta_sum([1, 2]), 0.0, b[0]],
        [0.0, cfg.beta_sum([4, 5]), b[4]],
        [b[0], b[4], cfg.beta_sum([1, 3, 5])],
    ];
    (c, m)
}

fn route_times(cfg: &FourNodeConfig, h: &[f64; 3]) -> [f64; 3] {
    let (c, m) = route_costs(cfg);
    let mut t = [0.0; 3];
    for i in 0..3 {
        t[i] = c[i] + (0..3).map(|j| m[i][j] * h[j]).sum::<f64>();
    }
    t
}

/// Beckmann potential of the route flows: sum over links of
/// `alpha*x + beta*x^2/2`.
pub fn beckmann_potential(cfg: &FourNodeConfig, flows: &PathFlows) -> f64 {
    let lf = flows.link_flows();
    let x = [lf.ab, lf.bd, lf.bc, lf.ac, lf.cd];
    x.iter()
        .zip(cfg.alpha.iter().zip(cfg.beta.iter()))
        .map(|(&xi, (&a, &b))| a * xi + 0.5 * b * xi * xi)
        .sum()
}

/// Total travel cost (flow-weighted time) of the route flows.
pub fn total_cost(cfg: &FourNodeConfig, flows: &PathFlows) -> f64 {
    let lf = flows.link_flows();
    let x = [lf.ab, lf.bd, lf.bc, lf.ac, lf.cd];
    x.iter()
        .zip(cfg.alpha.iter().zip(cfg.beta.iter()))
        .map(|(&xi, (&a, &b))| xi * (a + b * xi))
        .sum()
}

/// Gaussian elimination with partial pivoting on an `n x n` system, `n <= 3`.
/// Returns `None` when the matrix is numerically singular.
fn solve_dense(a: &mut [[f64; 4]], n: usize) -> Option<Vec<f64>> {
    let mut scale = 0.0_f64;
    for row in a.iter().take(n) {
        for v in row.iter().take(n) {
            scale = scale.max(v.abs());
        }
    }
    if scale == 0.0 {
        return None;
    }
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
            .unwrap();
        if a[pivot_row][k].abs() <= 1e-13 * scale {
            return None;
        }
        a.swap(k, pivot_row);
        let pivot = a[k];
        for row in a.iter_mut().take(n).skip(k + 1) {
            let factor = row[k] / pivot[k];
            for (dst, src) in row[k..=n].iter_mut().zip(&pivot[k..=n]) {
                *dst -= factor * src;
            }
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let acc: f64 = a[k][k + 1..n]
            .iter()
            .zip(&x[k + 1..n])
            .map(|(c, xi)| c * xi)
            .sum();
        x[k] = (a[k][n] - acc) / a[k][k];
    }
    Some(x)
}

fn flows_from_array(h: [f64; 3]) -> PathFlows {
    PathFlows {
        upper: h[0],
        lower: h[1],
        bridge: h[2],
    }
}

/// Used/unused residuals of a candidate flow pattern.
fn kkt_check(cfg: &FourNodeConfig, q: f64, h: &[f64; 3]) -> (f64, f64) {
    let t = route_times(cfg, h);
    let used_tol = 1e-6 * (1.0 + q);
    let mut t_used_min = f64::INFINITY;
    let mut t_used_max = f64::NEG_INFINITY;
    let mut t_unused_min = f64::INFINITY;
    for i in 0..3 {
        if h[i] > used_tol {
            t_used_min = t_used_min.min(t[i]);
            t_used_max = t_used_max.max(t[i]);
        } else {
            t_unused_min = t_unused_min.min(t[i]);
        }
    }
    if !t_used_min.is_finite() {
        // Demand below the threshold on every route: nothing to compare.
        return (0.0, 0.0);
    }
    let spread = t_used_max - t_used_min;
    let deficit = (t_used_min - t_unused_min).max(0.0);
    (spread, deficit)
}

/// Enumerates route supports in deterministic order (singletons, pairs,
/// full) and returns the unique KKT point. Requires strict mode.
pub fn solve_active_set(cfg: &FourNodeConfig, bridged: bool, q: f64) -> Result<OracleSolution> {
    check_demand(q)?;
    if bridged {
        cfg.validate(Mode::Strict)?;
    } else {
        cfg.validate_base(Mode::Strict)?;
    }
    let (c, m) = route_costs(cfg);
    let routes = if bridged { 3 } else { 2 };
    let feas_tol = 1e-12 * (1.0 + q);

    let mut supports: Vec<Vec<usize>> = Vec::new();
    for size in 1..=routes {
        for mask in 1u8..(1 << routes) {
            let members: Vec<usize> = (0..routes).filter(|i| mask & (1 << i) != 0).collect();
            if members.len() == size {
                supports.push(members);
            }
        }
    }

    for support in supports {
        let k = support.len();
        // Rows 0..k-1: equal times between consecutive used routes;
        // row k-1: total flow.
        let mut sys = [[0.0_f64; 4]; 3];
        for (row, pair) in support.windows(2).enumerate() {
            let (i, j) = (pair[0], pair[1]);
            for (col, &r) in support.iter().enumerate() {
                sys[row][col] = m[i][r] - m[j][r];
            }
            sys[row][k] = c[j] - c[i];
        }
        sys[k - 1][..k].fill(1.0);
        sys[k - 1][k] = q;

        let Some(sol) = solve_dense(&mut sys[..k], k) else {
            continue;
        };
        let mut h = [0.0_f64; 3];
        for (slot, &r) in support.iter().enumerate() {
            h[r] = sol[slot];
        }
        if h.iter().any(|&x| x < -feas_tol) {
            continue;
        }
        let t = route_times(cfg, &h);
        let t_eq = support.iter().map(|&r| t[r]).sum::<f64>() / k as f64;
        let opt_tol = 1e-9 * (1.0 + t_eq.abs());
        let unused_ok = (0..routes)
            .filter(|r| !support.contains(r))
            .all(|r| t[r] >= t_eq - opt_tol);
        if !unused_ok {
            continue;
        }
        let flows = flows_from_array(h);
        let (spread, deficit) = kkt_check(cfg, q, &h);
        return Ok(OracleSolution {
            path_flows: flows,
            travel_time: t_eq,
            potential: beckmann_potential(cfg, &flows),
            kkt_residual: spread.max(deficit),
            method: OracleMethod::ActiveSet,
        });
    }
    Err(Error::NoKktPoint)
}

/// Golden-section minimization of a unimodal function on `[lo, hi]`.
fn golden_min(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    0.5 * (a + b)
}

/// Derivative-free minimization of the potential over the flow polytope
/// `0 <= g <= f <= q` (with `g = 0` when the bridge is absent), followed by
/// an equal-time polish of the detected support when that system is regular.
pub fn solve_grid(cfg: &FourNodeConfig, bridged: bool, q: f64) -> Result<OracleSolution> {
    check_demand(q)?;
    if bridged {
        cfg.validate(Mode::Relaxed)?;
    } else {
        cfg.validate_base(Mode::Relaxed)?;
    }
    let flow_tol = 1e-10;
    let phi = |f: f64, g: f64| {
        beckmann_potential(
            cfg,
            &PathFlows {
                upper: f - g,
                lower: q - f,
                bridge: g,
            },
        )
    };

    let (f_star, g_star) = if bridged {
        let inner = |f: f64| golden_min(|g| phi(f, g), 0.0, f, flow_tol);
        let f_star = golden_min(|f| phi(f, inner(f)), 0.0, q, flow_tol);
        (f_star, inner(f_star))
    } else {
        (golden_min(|f| phi(f, 0.0), 0.0, q, flow_tol), 0.0)
    };

    let mut h = [f_star - g_star, q - f_star, g_star];
    // Snap search wiggle on the polytope boundary to exact zeros.
    let used_tol = 1e-6 * (1.0 + q);
    for x in &mut h {
        if *x < used_tol {
            *x = 0.0;
        }
    }
    let deficit = q - (h[0] + h[1] + h[2]);
    if let Some(largest) = h
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
    {
        h[largest] += deficit;
    }

    // Polish: equalize times on the detected support. With zero delay
    // parameters the system may be singular (route flows are then not
    // unique); keep the raw search result in that case.
    if let Some(polished) = polish_support(cfg, q, &h) {
        h = polished;
    }

    let t = route_times(cfg, &h);
    let routes = if bridged { 3 } else { 2 };
    let t_eq = (0..routes).map(|i| t[i]).fold(f64::INFINITY, f64::min);
    let flows = flows_from_array(h);
    let (spread, deficit) = kkt_check(cfg, q, &h);
    Ok(OracleSolution {
        path_flows: flows,
        travel_time: t_eq,
        potential: beckmann_potential(cfg, &flows),
        kkt_residual: spread.max(deficit),
        method: OracleMethod::Grid,
    })
}

fn polish_support(cfg: &FourNodeConfig, q: f64, h: &[f64; 3]) -> Option<[f64; 3]> {
    let (c, m) = route_costs(cfg);
    let support: Vec<usize> = (0..3).filter(|&i| h[i] > 0.0).collect();
    if support.is_empty() {
        return None;
    }
    let k = support.len();
    let mut sys = [[0.0_f64; 4]; 3];
    for (row, pair) in support.windows(2).enumerate() {
        let (i, j) = (pair[0], pair[1]);
        for (col, &r) in support.iter().enumerate() {
            sys[row][col] = m[i][r] - m[j][r];
        }
        sys[row][k] = c[j] - c[i];
    }
    sys[k - 1][..k].fill(1.0);
    sys[k - 1][k] = q;
    let sol = solve_dense(&mut sys[..k], k)?;
    let mut out = [0.0_f64; 3];
    for (slot, &r) in support.iter().enumerate() {
        if sol[slot] < 0.0 {
            return None;
        }
        out[r] = sol[slot];
    }
    // Accept the polish only if it does not increase the potential beyond
    // round-off; otherwise the detected support was wrong.
    let before = beckmann_potential(cfg, &flows_from_array(*h));
    let after = beckmann_potential(cfg, &flows_from_array(out));
    if after <= before + 1e-9 * (1.0 + before.abs()) {
        Some(out)
    } else {
        None
    }
}

/// Beckmann minimization: active-set enumeration for strict configurations,
/// grid search otherwise.
pub fn beckmann_solve(cfg: &FourNodeConfig, bridged: bool, q: f64) -> Result<OracleSolution> {
    let strict_ok = if bridged {
        cfg.validate(Mode::Strict).is_ok()
    } else {
        cfg.validate_base(Mode::Strict).is_ok()
    };
    if strict_ok {
        solve_active_set(cfg, bridged, q)
    } else {
        solve_grid(cfg, bridged, q)
    }
}

/// Result of checking the Wardrop conditions on a flow pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WardropCheck {
    pub passed: bool,
    /// Max of used-route time spread and unused-route deficit.
    pub residual: f64,
    /// Mean travel time over used routes.
    pub travel_time: f64,
    pub route_times: [f64; 3],
}

/// Checks the Wardrop conditions: used routes agree on travel time within
/// `tol` and no unused route is faster than that by more than `tol`.
/// Conservation and nonnegativity must hold to within round-off.
pub fn verify_wardrop(
    cfg: &FourNodeConfig,
    bridged: bool,
    q: f64,
    flows: &PathFlows,
    tol: f64,
) -> Result<WardropCheck> {
    check_demand(q)?;
    let feas_tol = 1e-12 * (1.0 + q);
    if !bridged && flows.bridge != 0.0 {
        return Err(Error::InfeasibleFlows(
            "bridge flow in a bridgeless network".into(),
        ));
    }
    if (flows.total() - q).abs() > feas_tol {
        return Err(Error::InfeasibleFlows(format!(
            "route flows sum to {} but demand is {q}",
            flows.total()
        )));
    }
    for (name, h) in [
        ("upper", flows.upper),
        ("lower", flows.lower),
        ("bridge", flows.bridge),
    ] {
        if h < -feas_tol {
            return Err(Error::InfeasibleFlows(format!(
                "{name} route flow is negative ({h})"
            )));
        }
    }

    let h = flows.as_array();
    let t = route_times(cfg, &h);
    let used_tol = 1e-9 * (1.0 + q);
    let routes = if bridged { 3 } else { 2 };
    let mut t_used_min = f64::INFINITY;
    let mut t_used_max = f64::NEG_INFINITY;
    let mut t_unused_min = f64::INFINITY;
    for i in 0..routes {
        if h[i] > used_tol {
            t_used_min = t_used_min.min(t[i]);
            t_used_max = t_used_max.max(t[i]);
        } else {
            t_unused_min = t_unused_min.min(t[i]);
        }
    }
    if !t_used_min.is_finite() {
        // Conservation forces at least one route above the threshold for any
        // reasonable demand; only vanishingly small q lands here.
        t_used_min = t.iter().take(routes).copied().fold(f64::INFINITY, f64::min);
        t_used_max = t_used_min;
        t_unused_min = f64::INFINITY;
    }
    let spread = t_used_max - t_used_min;
    let deficit = (t_used_min - t_unused_min).max(0.0);
    let residual = spread.max(deficit);
    Ok(WardropCheck {
        passed: residual <= tol,
        residual,
        travel_time: 0.5 * (t_used_min + t_used_max),
        route_times: t,
    })
}

/// Average travel time at the system optimum (minimum total cost over the
/// same polytope). Computed by reusing the Beckmann machinery on a
/// configuration with doubled delay parameters, whose potential equals the
/// original total cost.
pub fn system_optimal_average_time(cfg: &FourNodeConfig, bridged: bool, q: f64) -> Result<f64> {
    let mut doubled = *cfg;
    for b in &mut doubled.beta {
        *b *= 2.0;
    }
    let so = beckmann_solve(&doubled, bridged, q)?;
    Ok(total_cost(cfg, &so.path_flows) / q)
}

/// Empirical paradox intervals: classifies `samples` equally spaced demands
/// by comparing the two oracle travel times, then refines the endpoints of
/// each maximal paradox run by bisection.
pub fn scan_paradox(
    cfg: &FourNodeConfig,
    q_lo: f64,
    q_hi: f64,
    samples: usize,
) -> Result<Vec<(f64, f64)>> {
    check_demand(q_lo)?;
    if q_hi.is_nan() || q_hi <= q_lo {
        return Err(Error::InvalidDemand(q_hi));
    }
    if samples < 2 {
        return Err(Error::InvalidConfig(
            "scan requires at least two samples".into(),
        ));
    }

    let is_paradox = |q: f64| -> Result<bool> {
        let base = beckmann_solve(cfg, false, q)?;
        let bridged = beckmann_solve(cfg, true, q)?;
        Ok(bridged.travel_time - base.travel_time > 1e-7 * (1.0 + base.travel_time.abs()))
    };

    let step = (q_hi - q_lo) / (samples - 1) as f64;
    let qs: Vec<f64> = (0..samples).map(|i| q_lo + step * i as f64).collect();
    let mut flags = Vec::with_capacity(samples);
    for &q in &qs {
        flags.push(is_paradox(q)?);
    }

    let endpoint_tol = (q_hi - q_lo) / samples as f64 / 100.0;
    let refine = |mut outside: f64, mut inside: f64| -> Result<f64> {
        while (outside - inside).abs() > endpoint_tol {
            let mid = 0.5 * (outside + inside);
            if is_paradox(mid)? {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        Ok(0.5 * (outside + inside))
    };

    let mut runs = Vec::new();
    let mut i = 0;
    while i < samples {
        if !flags[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < samples && flags[i + 1] {
            i += 1;
        }
        let lo = if start == 0 {
            qs[0]
        } else {
            refine(qs[start - 1], qs[start])?
        };
        let hi = if i == samples - 1 {
            qs[samples - 1]
        } else {
            refine(qs[i + 1], qs[i])?
        };
        runs.push((lo, hi));
        i += 1;
    }
    Ok(runs)
}
