//! Shared fixtures and random generators for the integration suites.
#![allow(dead_code)] // each test binary uses a different subset

use braess::FourNodeConfig;
use rand::rngs::StdRng;
use rand::Rng;

/// The worked configuration used throughout the suites: a network whose
/// paradox region is the single interval (0.93, 8.59) at two decimals.
pub fn reference_config() -> FourNodeConfig {
    FourNodeConfig::new([2.0, 36.0, 6.0, 40.0, 2.0], [30.0, 32.0, 3.0, 8.0, 19.0])
}

/// Relaxed-mode configuration with zero delay on three links.
pub fn zero_delay_config() -> FourNodeConfig {
    FourNodeConfig::new([0.0, 15.0, 7.5, 15.0, 0.0], [0.01, 0.0, 0.0, 0.0, 0.01])
}

/// Strictly positive delays, free-flow times in [0, 60].
pub fn random_strict_config(rng: &mut StdRng) -> FourNodeConfig {
    let mut alpha = [0.0; 5];
    let mut beta = [0.0; 5];
    for i in 0..5 {
        alpha[i] = rng.random_range(0.0..60.0);
        beta[i] = (rng.random_range(0.05_f64.ln()..25.0_f64.ln())).exp();
    }
    FourNodeConfig::new(alpha, beta)
}

/// Zero end free-flow times, mirrored middle links, bridge delay equal to
/// the middle delay.
pub fn random_classic_config(rng: &mut StdRng) -> FourNodeConfig {
    let a2 = rng.random_range(0.0..60.0);
    let a3 = rng.random_range(0.0..60.0);
    let b1 = rng.random_range(0.1..20.0);
    let b2 = rng.random_range(0.1..20.0);
    FourNodeConfig::new([0.0, a2, a3, a2, 0.0], [b1, b2, b2, b2, b1])
}

/// Mirrored pairs with free bridge parameters; `force_slow_ends` caps
/// `beta1` at `beta2` so no paradox interval can exist.
pub fn random_extended_config(rng: &mut StdRng, force_slow_ends: bool) -> FourNodeConfig {
    let a1 = rng.random_range(0.0..30.0);
    let a2 = rng.random_range(0.0..60.0);
    let a3 = rng.random_range(0.0..30.0);
    let b2 = rng.random_range(0.1..20.0);
    let b1 = if force_slow_ends {
        rng.random_range(0.05..1.0) * b2
    } else {
        rng.random_range(0.1..20.0)
    };
    let b3 = rng.random_range(0.1..20.0);
    FourNodeConfig::new([a1, a2, a3, a2, a1], [b1, b2, b3, b2, b1])
}

/// Twin-route pattern: the two routes have identical leg parameters, so the
/// bridge can never pay off.
pub fn random_twin_route_config(rng: &mut StdRng) -> FourNodeConfig {
    let a1 = rng.random_range(0.0..30.0);
    let a2 = rng.random_range(0.0..30.0);
    let a3 = rng.random_range(0.0..30.0);
    let b1 = rng.random_range(0.1..20.0);
    let b2 = rng.random_range(0.1..20.0);
    let b3 = rng.random_range(0.1..20.0);
    FourNodeConfig::new([a1, a2, a3, a1, a2], [b1, b2, b3, b1, b2])
}

pub fn assert_close(actual: f64, expected: f64, tol: f64, what: &str) {
    assert!(
        (actual - expected).abs() <= tol,
        "{what}: {actual} vs {expected} (|diff| = {} > {tol})",
        (actual - expected).abs()
    );
}
