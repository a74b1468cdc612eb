//! The blow-up central extension: construction, verification, and
//! serialization back into the algebra file format.
//!
//! ```bash
//! cargo run --example blow_up
//! ```

use dehn::blowup::{blow_up, is_relatively_perfect_degree_zero, verify_blow_up};
use dehn::corpus;
use dehn::rat::rat;

fn main() {
    println!("=== A one-dimensional gain ===\n");
    // abelian with opposite weights: the blow-up grows a central generator
    let alg = corpus::sol_lambda(&rat(1));
    let res = blow_up(&alg);
    println!(
        "{} (dim {}) -> {} (dim {}), kernel dim {}",
        alg.name,
        alg.dim(),
        res.blown_up.name,
        res.blown_up.dim(),
        res.kernel_dim
    );
    let x = res.blown_up.basis_vector(0);
    let y = res.blown_up.basis_vector(1);
    let z = res.blown_up.bracket_vectors(&x, &y);
    println!(
        "new bracket [u1, u2]' = {:?}",
        support_names(&res.blown_up, &z)
    );

    println!("\n=== Verification across the corpus ===\n");
    for alg in corpus::all_fixtures() {
        let res = blow_up(&alg);
        let check = verify_blow_up(&alg, &res);
        println!(
            "{:<18} kernel {}  perfect-in-degree-0 {}  checks {}",
            alg.name,
            res.kernel_dim,
            is_relatively_perfect_degree_zero(&alg),
            if check.all_ok() { "ok" } else { "FAILED" }
        );
        if let Some(note) = check.amalgam_note {
            println!("{:<18} note: {note}", "");
        }
    }

    println!("\n=== Round trip through the file format ===\n");
    let res = blow_up(&corpus::abels_2());
    let text = dehn::fileio::serialize_algebra(&res.blown_up);
    let back = dehn::fileio::parse_algebra(&text).unwrap();
    println!(
        "serialized {} ({} bytes), reparsed with {} violations",
        back.name,
        text.len(),
        back.validate().len()
    );
}

fn support_names(alg: &dehn::GradedLieAlgebra, v: &[dehn::Rational]) -> Vec<String> {
    use num_traits::Zero;
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{} {}", dehn::rat::format_rational(c), alg.basis[i].name))
        .collect()
}
