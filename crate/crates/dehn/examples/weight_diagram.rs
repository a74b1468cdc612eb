//! Weight diagrams as ASCII grids and SVG.
//!
//! ```bash
//! cargo run --example weight_diagram
//! cargo run --example weight_diagram -- out.svg   # also write an SVG
//! ```

use dehn::corpus;
use dehn::diagram::{render_diagram, DiagramFormat};

fn main() {
    for alg in [corpus::higher_sol(), corpus::abels_a4(), corpus::abels_2()] {
        let art = render_diagram(&alg, DiagramFormat::Ascii).unwrap();
        println!("{art}");
    }
    if let Some(path) = std::env::args().nth(1) {
        let svg = render_diagram(&corpus::abels_a4(), DiagramFormat::Svg).unwrap();
        std::fs::write(&path, svg).expect("write svg");
        println!("wrote {path}");
    }
}
