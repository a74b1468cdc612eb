//! End to end: classify every built-in algebra and print the full
//! analysis of one of them.
//!
//! ```bash
//! cargo run --example classify_corpus
//! ```

use dehn::classify::classify;
use dehn::corpus;
use dehn::report::analyze;

fn main() {
    println!("=== Verdicts across the corpus ===\n");
    for alg in corpus::all_fixtures() {
        let c = classify(&alg).unwrap();
        println!("{:<18} {}", alg.name, c.verdict);
        for j in &c.justification {
            println!("{:<18}   - {}", "", j.condition);
        }
    }

    println!("\n=== Full analysis of one fixture ===\n");
    let rep = analyze(&corpus::abels_2()).unwrap();
    print!("{}", rep.to_text());
}
