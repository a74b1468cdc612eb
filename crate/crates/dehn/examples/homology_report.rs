//! The degree-zero homology engine: boundary matrices, second homology,
//! the Killing module, their tame variants, and the boundary criterion
//! for central extensions.
//!
//! ```bash
//! cargo run --example homology_report
//! ```

use dehn::corpus;
use dehn::homology::{
    boundary_matrix, h2_degree_zero, h2_tame_degree_zero, killing_degree_zero, prop_six_check,
    wedge_basis,
};
use dehn::lie::Weight;
use dehn::rat::format_rational;

fn main() {
    println!("=== Boundary map on a graded component ===\n");
    let h = corpus::heisenberg();
    let deg = Weight(vec![dehn::rat::rat(2)]);
    let basis = wedge_basis(&h, 2, &deg, false);
    let d2 = boundary_matrix(&h, 2, &deg);
    println!(
        "{}: wedge pairs at degree {deg}: {:?}",
        h.name, basis.elements
    );
    println!("d2 entry: {}", format_rational(d2.get(0, 0)));

    println!("\n=== Degree-zero reports across fixtures ===\n");
    for alg in [
        corpus::abels_a4(),
        corpus::abels_2(),
        corpus::sl3_v11(),
        corpus::sol_lambda(&dehn::rat::rat(1)),
        corpus::sol_lambda(&dehn::rat::rat(2)),
    ] {
        let h2 = h2_degree_zero(&alg);
        let kill = killing_degree_zero(&alg);
        println!("{}:", alg.name);
        println!(
            "  (g^g)_0 = {}, (g^g^g)_0 = {}, Z2_0 = {}, B2_0 = {}, H2_0 = {}",
            h2.dim_lambda2_0, h2.dim_lambda3_0, h2.dim_z2_0, h2.dim_b2_0, h2.dim_h2_0
        );
        println!(
            "  Kill_0 = {} (sym2_0 = {}, image of T = {})",
            kill.dim_kill_0, kill.dim_sym2_0, kill.dim_t_image_0
        );
        let tame = h2_tame_degree_zero(&alg);
        println!(
            "  tame variant: (nz^nz)_0 = {}, (nz^nz^nz)_0 = {}, tame H2_0 = {}, tame Kill_0 = {}",
            tame.dim_lambda2_tame_0, tame.dim_lambda3_tame_0, tame.dim, kill.dim_kill_tame_0
        );
        println!();
    }

    println!("=== Central-extension criterion on the 13-dim fixture ===\n");
    let g = corpus::example_13dim();
    println!(
        "{}: tame degree-zero cycles all bound in the full complex: {}",
        g.name,
        prop_six_check(&g)
    );
    let e = g
        .graded_subalgebra("exponential-radical", &g.exponential_radical())
        .unwrap();
    println!(
        "its exponential radical alone: {} (H2_0 = {})",
        prop_six_check(&e),
        h2_degree_zero(&e).dim_h2_0
    );
    let tame = h2_tame_degree_zero(&e);
    for rep in &tame.representatives {
        let terms: Vec<String> = rep
            .iter()
            .map(|(tuple, c)| {
                let names: Vec<&str> = tuple.iter().map(|&i| e.basis[i].name.as_str()).collect();
                format!("{} {}", format_rational(c), names.join("^"))
            })
            .collect();
        println!("surviving tame class: {}", terms.join(" + "));
    }
}
