//! The nilpotent group law from the Campbell-Baker-Hausdorff series,
//! cross-checked against exact matrix exponentials.
//!
//! ```bash
//! cargo run --example group_law
//! ```

use dehn::bch::{
    bch_product, group_commutator, iterated_group_commutator, unipotent_matrix_oracle,
    verify_multicom,
};
use dehn::corpus;
use dehn::rat::{format_rational, rat};

fn show(alg: &dehn::GradedLieAlgebra, v: &[dehn::Rational]) -> String {
    use num_traits::Zero;
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{} {}", format_rational(c), alg.basis[i].name))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn main() {
    println!("=== log(exp X exp Y) in the Heisenberg algebra ===\n");
    let h = corpus::heisenberg();
    let x = h.basis_vector(0);
    let y = h.basis_vector(1);
    let z = bch_product(&h, &x, &y).unwrap();
    println!("X * Y = {}", show(&h, &z));
    let c = group_commutator(&h, &x, &y).unwrap();
    println!("((exp X, exp Y)) = exp({})", show(&h, &c));

    println!("\n=== Matrix oracle agreement ===\n");
    for (alg, rho) in corpus::matrix_realizations() {
        let x = alg.basis_vector(0);
        let y = alg.basis_vector(1);
        let lib = bch_product(&alg, &x, &y).unwrap();
        let oracle = unipotent_matrix_oracle(&rho(&x), &rho(&y));
        println!(
            "{:<12} series {} agrees with exp/log of matrices: {}",
            alg.name,
            show(&alg, &lib),
            rho(&lib) == oracle
        );
    }

    println!("\n=== Iterated commutators collapse to iterated brackets ===\n");
    let f = corpus::filiform_4();
    let tuple = vec![f.basis_vector(0), f.basis_vector(0), f.basis_vector(1)];
    let g = iterated_group_commutator(&f, &tuple).unwrap();
    println!(
        "{}: ((e1, e1, e2)) = exp({}), identity holds: {}",
        f.name,
        show(&f, &g),
        verify_multicom(&f, &tuple).unwrap()
    );

    println!("\n=== Exact rationals all the way ===\n");
    let a4 = corpus::abels_a4();
    let u = {
        let mut v = vec![rat(0); a4.dim()];
        v[0] = dehn::rat::ratio(1, 3);
        v[3] = dehn::rat::ratio(-5, 2);
        v
    };
    let w = {
        let mut v = vec![rat(0); a4.dim()];
        v[3] = dehn::rat::ratio(7, 4);
        v[5] = rat(2);
        v
    };
    println!(
        "{}: u * w = {}",
        a4.name,
        show(&a4, &bch_product(&a4, &u, &w).unwrap())
    );
}
