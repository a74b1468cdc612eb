//! Exact convex geometry on weight sets: hull membership certificates,
//! quasi-opposite pairs, and the tameness hierarchy.
//!
//! ```bash
//! cargo run --example weight_geometry
//! ```

use dehn::corpus;
use dehn::rat::format_rational;
use dehn::weights::{
    compacting_functional, quasi_opposite_pairs, tameness_flags, zero_in_convex_hull,
    HullCertificate, WeightSet,
};

fn main() {
    for alg in [
        corpus::higher_sol(),
        corpus::abels_a4(),
        corpus::sl3_v10(),
        corpus::sol_lambda(&dehn::rat::ratio(3, 2)),
    ] {
        println!("=== {} ===", alg.name);
        let ws = WeightSet::from_algebra(&alg);
        for (i, w) in ws.weights.iter().enumerate() {
            println!(
                "  weight {w} (dim {}){}",
                ws.multiplicities[i],
                if ws.principal[i] { " principal" } else { "" }
            );
        }

        match zero_in_convex_hull(&ws.weights) {
            HullCertificate::Inside(coeffs) => {
                let parts: Vec<String> = coeffs.iter().map(format_rational).collect();
                println!(
                    "  zero is in the hull; convex coefficients ({})",
                    parts.join(", ")
                );
            }
            HullCertificate::Separated(l) => {
                let parts: Vec<String> = l.iter().map(format_rational).collect();
                println!("  zero separated by the functional ({})", parts.join(", "));
            }
        }

        let pairs = quasi_opposite_pairs(&ws.nonzero_weights()).unwrap();
        if pairs.is_empty() {
            println!("  no quasi-opposite pairs");
        }
        for (a, b) in &pairs {
            println!("  quasi-opposite pair {a}, {b}");
        }

        let na: Vec<String> = alg
            .fields
            .iter()
            .filter(|f| !f.kind.is_archimedean())
            .map(|f| f.id.clone())
            .collect();
        let flags = tameness_flags(&ws, &na);
        println!(
            "  tame={} two_tame={} stably_two_tame={} sol_obstruction={}",
            flags.tame, flags.two_tame, flags.stably_two_tame, flags.sol_obstruction
        );
        if let Some(l) = compacting_functional(&ws) {
            let parts: Vec<String> = l.iter().map(format_rational).collect();
            println!("  compacting functional ({})", parts.join(", "));
        }
        println!();
    }
}
