//! The canonical four-node network and the scalar quantities derived from it.
//!
//! The network has origin `a`, destination `d` and intermediate nodes `b`
//! (top) and `c` (bottom). Its five links are indexed
//!
//! ```text
//!   1 = (a,b)   2 = (b,d)   3 = (b,c)   4 = (a,c)   5 = (c,d)
//! ```
//!
//! so the three origin-destination routes are the *upper* route `a-b-d`
//! (links 1,2), the *lower* route `a-c-d` (links 4,5) and the *bridge* route
//! `a-b-c-d` (links 1,3,5). Link 3 is the bridge itself. Every link has a
//! linear volume-delay function `alpha + beta * flow`.

use crate::error::{Error, Result};
use crate::xreal::ExtendedReal;

/// Validation mode for delay parameters.
///
/// Every closed form in this crate assumes each `beta[i] > 0`; that is
/// [`Mode::Strict`], the default. [`Mode::Relaxed`] admits `beta[i] = 0`,
/// in which case guard thresholds may evaluate to `+inf`/`-inf` and a few
/// degenerate configurations surface [`Error::ZeroOverZero`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Relaxed,
}

/// Free-flow travel times and delay parameters of the five links,
/// in link-index order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourNodeConfig {
    pub alpha: [f64; 5],
    pub beta: [f64; 5],
}

impl FourNodeConfig {
    pub fn new(alpha: [f64; 5], beta: [f64; 5]) -> Self {
        FourNodeConfig { alpha, beta }
    }

    /// Sum of `alpha` over a set of 1-based link indices, so that
    /// `alpha_sum([4, 5])` reads like the subscript notation `alpha45`.
    /// Every concatenated subscript in the formulas goes through this helper
    /// (and [`Self::beta_sum`]) to rule out transcription slips.
    pub fn alpha_sum<const K: usize>(&self, links: [usize; K]) -> f64 {
        links.iter().map(|&i| self.alpha[i - 1]).sum()
    }

    /// Sum of `beta` over 1-based link indices; see [`Self::alpha_sum`].
    pub fn beta_sum<const K: usize>(&self, links: [usize; K]) -> f64 {
        links.iter().map(|&i| self.beta[i - 1]).sum()
    }

    /// Checks the invariants for all five links.
    pub fn validate(&self, mode: Mode) -> Result<()> {
        self.validate_links(mode, &[1, 2, 3, 4, 5])
    }

    /// Checks the invariants for the bridgeless network, ignoring link 3.
    pub fn validate_base(&self, mode: Mode) -> Result<()> {
        self.validate_links(mode, &[1, 2, 4, 5])
    }

    fn validate_links(&self, mode: Mode, links: &[usize]) -> Result<()> {
        for &i in links {
            let (a, b) = (self.alpha[i - 1], self.beta[i - 1]);
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "link {i} has non-finite parameters ({a}, {b})"
                )));
            }
            if a < 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "free-flow travel time of link {i} is negative ({a})"
                )));
            }
            match mode {
                Mode::Strict if b <= 0.0 => {
                    return Err(Error::InvalidConfig(format!(
                        "delay parameter of link {i} must be positive in strict mode ({b})"
                    )));
                }
                Mode::Relaxed if b < 0.0 => {
                    return Err(Error::InvalidConfig(format!(
                        "delay parameter of link {i} is negative ({b})"
                    )));
                }
                _ => {}
            }
        }
        // Without delay on the four route links the equilibrium split
        // between the two routes is not determined.
        if self.beta_sum([1, 2, 4, 5]) <= 0.0 {
            return Err(Error::InvalidConfig(
                "total delay beta1+beta2+beta4+beta5 must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Scalar quantities derived from a [`FourNodeConfig`]; every guard,
/// threshold and interval bound in the crate is built from these.
///
/// * `alpha` is the free-flow gap between the two pure routes
///   (`alpha45 - alpha12`); its sign says which route wins at zero demand.
/// * `alpha_bar` (`alpha4 - alpha13`) and `alpha_hat` (`alpha2 - alpha35`)
///   compare each route against the bridge route on the leg where they
///   differ. The identity `alpha = alpha_bar - alpha_hat` holds exactly.
/// * `beta` is the total delay of the route links, `beta1+beta2+beta4+beta5`.
/// * `b1..b4` are the Braess numbers: polynomial combinations of the delay
///   parameters whose positivity gates each of the four paradox intervals.
/// * `mu1` / `mu2` are the largest demands at which the equilibrium can keep
///   the upper (respectively lower) route empty while the bridge carries
///   flow; they show up both as equilibrium-case bounds and as interval
///   endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedQuantities {
    pub cfg: FourNodeConfig,
    pub mode: Mode,
    pub alpha: f64,
    pub alpha_bar: f64,
    pub alpha_hat: f64,
    pub beta: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub b4: f64,
    pub mu1: ExtendedReal,
    pub mu2: ExtendedReal,
}

/// Computes all derived quantities, validating `cfg` for `mode` first.
pub fn derive_quantities(cfg: &FourNodeConfig, mode: Mode) -> Result<DerivedQuantities> {
    cfg.validate(mode)?;

    let alpha = cfg.alpha_sum([4, 5]) - cfg.alpha_sum([1, 2]);
    let alpha_bar = cfg.alpha_sum([4]) - cfg.alpha_sum([1, 3]);
    let alpha_hat = cfg.alpha_sum([2]) - cfg.alpha_sum([3, 5]);
    let beta = cfg.beta_sum([1, 2, 4, 5]);

    let b = &cfg.beta;
    let b1 = b[0] * b[4] - b[1] * b[3];
    let b2 = cfg.beta_sum([1, 3, 5]) * beta - cfg.beta_sum([1, 2]) * cfg.beta_sum([4, 5]);
    let b3 = cfg.beta_sum([4, 5]).powi(2) * cfg.beta_sum([1, 3, 4]) - b[3] * b[3] * beta;
    let b4 = cfg.beta_sum([1, 2]).powi(2) * cfg.beta_sum([2, 3, 5]) - b[1] * b[1] * beta;

    let mu1 = ExtendedReal::ratio(
        alpha_hat * cfg.beta_sum([1, 4]) - alpha * b[2],
        b[2] * cfg.beta_sum([4, 5]) + b[4] * cfg.beta_sum([1, 4]),
        "mu1",
    )?;
    let mu2 = ExtendedReal::ratio(
        alpha_bar * cfg.beta_sum([2, 5]) + alpha * b[2],
        b[0] * cfg.beta_sum([2, 5]) + b[2] * cfg.beta_sum([1, 2]),
        "mu2",
    )?;

    Ok(DerivedQuantities {
        cfg: *cfg,
        mode,
        alpha,
        alpha_bar,
        alpha_hat,
        beta,
        b1,
        b2,
        b3,
        b4,
        mu1,
        mu2,
    })
}

impl DerivedQuantities {
    pub fn compute(cfg: &FourNodeConfig, mode: Mode) -> Result<Self> {
        derive_quantities(cfg, mode)
    }

    /// The Braess number gating the paradox interval of the given bridged
    /// equilibrium case; see [`crate::paradox`].
    pub fn braess_number(&self, index: usize) -> f64 {
        match index {
            1 => self.b1,
            2 => self.b2,
            3 => self.b3,
            4 => self.b4,
            _ => panic!("Braess number index must be 1..=4, got {index}"),
        }
    }
}
