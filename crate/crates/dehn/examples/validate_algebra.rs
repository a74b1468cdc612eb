//! Validation example: what the axioms catch.
//!
//! ```bash
//! cargo run --example validate_algebra
//! ```

use dehn::corpus;
use dehn::lie::Weight;
use dehn::rat::rat;

fn main() {
    println!("=== Validating a correct algebra ===\n");
    let alg = corpus::abels_a4();
    let report = alg.validate();
    println!(
        "{}: {} basis elements, {} violations",
        alg.name,
        alg.dim(),
        report.len()
    );

    println!("\n=== Breaking the grading on purpose ===\n");
    let mut broken = corpus::heisenberg();
    // the bracket [X, Y] lands at weight 2; reweighting Z to 3 breaks it
    broken.basis[2].weight = Weight(vec![rat(3)]);
    for violation in broken.validate() {
        println!("  found: {violation}");
    }

    println!("\n=== Structural facts after validation ===\n");
    let alg = corpus::example_13dim();
    assert!(alg.validate().is_empty());
    let series = alg.descending_central_series();
    let dims: Vec<usize> = series.terms.iter().map(|t| t.dim()).collect();
    println!("{}: descending central series dims {:?}", alg.name, dims);
    match series.nilpotency_length {
        Some(s) => println!("nilpotent of length {s}"),
        None => println!(
            "not nilpotent; the series stabilizes at dimension {}",
            series.stable_term.dim()
        ),
    }
    println!(
        "degree-zero part has dimension {}",
        alg.degree_zero_subspace().dim()
    );
    println!("1-tame: {}", alg.is_1_tame().holds());
    for p in alg.principal_weights() {
        println!(
            "principal weight {} with multiplicity {}",
            p.weight, p.multiplicity
        );
    }
}
