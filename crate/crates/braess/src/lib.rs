//! Wardrop equilibria and Braess-paradox detection for four-node road
//! networks with linear volume-delay functions.
//!
//! The network of interest routes a total demand `q` from an origin `a` to a
//! destination `d` over three routes: the upper route `a-b-d`, the lower
//! route `a-c-d`, and (optionally) the bridge route `a-b-c-d` through the
//! link `(b,c)`. Every link delays traffic linearly, `alpha + beta * flow`.
//! Adding the bridge can *increase* everybody's equilibrium travel time;
//! this crate computes exactly when.
//!
//! * [`reduction`] collapses larger networks (each canonical link replaced
//!   by a path, with optional fixed external traffic) to the four-node form;
//! * [`equilibrium`] evaluates the closed-form equilibrium case analysis and
//!   [`piecewise`] assembles the full piecewise-linear travel-time function
//!   of the demand;
//! * [`paradox`] produces the exact demand intervals where the paradox
//!   (`T_bridged > T_base`) and the pseudo-paradox (`T_bridged = T_base`)
//!   occur;
//! * [`oracle`] re-derives equilibria by minimizing the Beckmann potential
//!   with two independent numerical methods, for cross-validation.
//!
//! ```
//! use braess::{paradox_region, FourNodeConfig, Mode};
//!
//! // The textbook example: ten-minute roads into the hubs, a fast shortcut.
//! let cfg = FourNodeConfig::new(
//!     [0.0, 50.0, 10.0, 50.0, 0.0],
//!     [10.0, 1.0, 1.0, 1.0, 10.0],
//! );
//! let report = paradox_region(&cfg, Mode::Strict).unwrap();
//! assert_eq!(report.region[0].display_rounded(2), "(2.58, 8.89)");
//! ```

#![forbid(unsafe_code)]

pub mod config;
pub mod equilibrium;
pub mod interval;
pub mod oracle;
pub mod paradox;
pub mod piecewise;
pub mod reduction;
pub mod xreal;

mod error;

pub use config::{derive_quantities, DerivedQuantities, FourNodeConfig, Mode};
pub use equilibrium::{
    admissible_bridged_cases, equilibrium_base, equilibrium_bridged, BaseCase, BridgedCase,
    CaseLabel, EquilibriumSolution, LinkFlows, PathFlows,
};
pub use error::{Error, Result};
pub use interval::Interval;
pub use oracle::{
    beckmann_solve, scan_paradox, solve_active_set, solve_grid, verify_wardrop, OracleMethod,
    OracleSolution, WardropCheck,
};
pub use paradox::{
    classify, paradox_interval, paradox_region, pseudo_paradox_region, symmetric_analysis,
    CaseInterval, Classification, ParadoxReport, PseudoCondition, PseudoInterval, SymmetricPattern,
    SymmetricReport,
};
pub use piecewise::{piecewise_equilibrium, PiecewiseLinearFn, Segment};
pub use reduction::{
    absorb_external_flow, contract_path, reduce_network, GeneralNetwork, Link, Role,
};
pub use xreal::ExtendedReal;

// The guide chapters double as doc tests so their code stays compilable.
#[cfg(doctest)]
mod guide;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;
