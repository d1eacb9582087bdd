//! Prints the equilibrium travel-time profile of the classic example
//! network and the demand ranges where the bridge helps, hurts, or does
//! nothing.
//!
//! Run with `cargo run --example demand_profile`.

use braess::{paradox_region, piecewise_equilibrium, FourNodeConfig, Mode};

fn main() {
    let cfg = FourNodeConfig::new([0.0, 50.0, 10.0, 50.0, 0.0], [10.0, 1.0, 1.0, 1.0, 10.0]);

    for (label, bridged) in [("base network", false), ("bridged network", true)] {
        println!("{label}:");
        let f = piecewise_equilibrium(&cfg, bridged, f64::INFINITY).unwrap();
        for seg in &f.segments {
            let hi = if seg.hi.is_finite() {
                format!("{:.4}", seg.hi)
            } else {
                "inf".to_string()
            };
            println!(
                "  q in ({:.4}, {hi}]: T = {:.4} + {:.4} q   [case {}]",
                seg.lo, seg.intercept, seg.slope, seg.case
            );
        }
    }

    let report = paradox_region(&cfg, Mode::Strict).unwrap();
    println!("paradox region:");
    for iv in &report.region {
        println!("  {}", iv.display_rounded(4));
    }
    println!("pseudo-paradox region:");
    for p in &report.pseudo {
        println!(
            "  {}  ({})",
            p.interval.display_rounded(4),
            p.condition.describe()
        );
    }
}
