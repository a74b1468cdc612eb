//! Discrete Stokes integrals over Cayley loops of SOL-type groups, and
//! the exponential area lower bounds they certify.
//!
//! ```bash
//! cargo run --example stokes_lower_bounds
//! ```

use dehn::rat::{format_rational, rat, ratio};
use dehn::stokes::{
    gamma_integral_check, gamma_path, lower_bound_table, IntegrandVariant, NormModel, SolModel,
};

fn main() {
    println!("=== Real SOL with l1 = l2 = 2 ===\n");
    let model = SolModel::real(rat(2), rat(2)).unwrap();
    let path = gamma_path(&model, 1, 3);
    println!("loop at depth 1, n = 3 has {} edges", path.len());
    for n in 1..=6 {
        let r = gamma_integral_check(&model, 1, n, IntegrandVariant::Real).unwrap();
        println!(
            "n = {n}: integral norm {} (predicted {}, equal: {})",
            format_rational(&r.computed_norm),
            format_rational(&r.predicted_norm),
            r.equal
        );
    }

    println!("\ndeeper commutator loops integrate to the same value:");
    for k in 1..=4 {
        let r = gamma_integral_check(&model, k, 5, IntegrandVariant::Real).unwrap();
        println!(
            "k = {k}: length {} loop, integral {}",
            gamma_path(&model, k, 5).len(),
            format_rational(&r.computed_norm)
        );
    }

    println!("\narea lower bounds against radius-4 relators:");
    let table = lower_bound_table(&model, 1, 8, Some(4));
    println!(
        "triangle constant C({}) = {}",
        table.relator_radius,
        format_rational(&table.triangle_constant)
    );
    for row in &table.rows {
        println!(
            "n = {:>2}: |integral| = {:>6}  area >= {}",
            row.n,
            format_rational(&row.integral_norm),
            format_rational(&row.area_bound)
        );
    }

    println!("\n=== Ultrametric model: l1 = 1/3 over Q_3, l2 = 1/5 over Q_5 ===\n");
    let model = SolModel::new(
        NormModel::PAdic(3),
        NormModel::PAdic(5),
        ratio(1, 3),
        ratio(1, 5),
    )
    .unwrap();
    let table = lower_bound_table(&model, 2, 6, Some(3));
    for row in &table.rows {
        println!(
            "n = {}: |integral| = {}",
            row.n,
            format_rational(&row.integral_norm)
        );
    }
    if table.asymptotically_infinite_area {
        println!("unbounded ultrametric integrals: no bounded-relator presentation exists");
    }
}
