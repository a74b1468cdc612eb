//! Weight diagrams for one- and two-dimensional weight spaces.
//!
//! ASCII output mimics the grid layout used for such figures: principal
//! weights are starred, the zero weight is underlined, and multiplicity
//! shows as a `xN` suffix. SVG places points at rational coordinates
//! scaled into a fixed viewport.

use crate::lie::GradedLieAlgebra;
use crate::rat::{rat, Rational};
use crate::weights::WeightSet;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("weight diagrams are drawn for weight dimension 1 or 2, got {0}")]
    UnsupportedDimension(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramFormat {
    Ascii,
    Svg,
}

struct Mark {
    label: String,
    x: Rational,
    y: Rational,
    principal: bool,
    zero: bool,
}

fn marks(alg: &GradedLieAlgebra) -> Result<Vec<Mark>, DiagramError> {
    if alg.weight_dim == 0 || alg.weight_dim > 2 {
        return Err(DiagramError::UnsupportedDimension(alg.weight_dim));
    }
    let ws = WeightSet::from_algebra(alg);
    let mut out = Vec::new();
    for (i, w) in ws.weights.iter().enumerate() {
        let x = w.0[0].clone();
        let y = if alg.weight_dim == 2 {
            w.0[1].clone()
        } else {
            Rational::zero()
        };
        let mut label = format!(
            "({})",
            w.0.iter()
                .map(crate::rat::format_rational)
                .collect::<Vec<_>>()
                .join(",")
        );
        if ws.multiplicities[i] > 1 {
            label.push_str(&format!("x{}", ws.multiplicities[i]));
        }
        out.push(Mark {
            label,
            x,
            y,
            principal: ws.principal[i],
            zero: w.is_zero(),
        });
    }
    Ok(out)
}

/// Renders the weight configuration of a validated algebra.
pub fn render_diagram(
    alg: &GradedLieAlgebra,
    format: DiagramFormat,
) -> Result<String, DiagramError> {
    let marks = marks(alg)?;
    Ok(match format {
        DiagramFormat::Ascii => render_ascii(alg, &marks),
        DiagramFormat::Svg => render_svg(alg, &marks),
    })
}

fn decorate(m: &Mark) -> String {
    let mut label = m.label.clone();
    if m.principal {
        label = format!("*{label}*");
    }
    if m.zero {
        label = format!("_{label}_");
    }
    label
}

fn render_ascii(alg: &GradedLieAlgebra, marks: &[Mark]) -> String {
    // scale rational coordinates to integers on a common denominator
    let mut denom = num_bigint::BigInt::from(1);
    for m in marks {
        denom = num_integer::lcm(denom.clone(), m.x.denom().clone());
        denom = num_integer::lcm(denom.clone(), m.y.denom().clone());
    }
    let scale = Rational::from_integer(denom);
    let coords: Vec<(i64, i64)> = marks
        .iter()
        .map(|m| {
            let sx = (&m.x * &scale).numer().clone();
            let sy = (&m.y * &scale).numer().clone();
            (
                i64::try_from(sx).unwrap_or(0),
                i64::try_from(sy).unwrap_or(0),
            )
        })
        .collect();
    let min_x = coords.iter().map(|c| c.0).min().unwrap_or(0).min(0);
    let max_x = coords.iter().map(|c| c.0).max().unwrap_or(0).max(0);
    let min_y = coords.iter().map(|c| c.1).min().unwrap_or(0).min(0);
    let max_y = coords.iter().map(|c| c.1).max().unwrap_or(0).max(0);
    let col_width = marks
        .iter()
        .map(|m| decorate(m).len() + 2)
        .max()
        .unwrap_or(4);
    let mut out = format!("weight diagram of {}\n", alg.name);
    out.push_str("(*bold* = principal, _underlined_ = zero weight, '.' = origin)\n");
    let mut origin_marked = false;
    for row in (min_y..=max_y).rev() {
        let mut line = String::new();
        for col in min_x..=max_x {
            let cell = coords
                .iter()
                .position(|&(x, y)| x == col && y == row)
                .map(|i| decorate(&marks[i]));
            let cell = match cell {
                Some(c) => {
                    if col == 0 && row == 0 {
                        origin_marked = true;
                    }
                    c
                }
                None if col == 0 && row == 0 => {
                    origin_marked = true;
                    ".".to_string()
                }
                None => String::new(),
            };
            line.push_str(&format!("{cell:^col_width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    if !origin_marked {
        out.push_str("(origin outside the drawn range)\n");
    }
    out
}

fn render_svg(alg: &GradedLieAlgebra, marks: &[Mark]) -> String {
    let size = 420.0f64;
    let pad = 40.0f64;
    let to_f = |r: &Rational| -> f64 {
        let n: f64 = r.numer().to_string().parse().unwrap_or(0.0);
        let d: f64 = r.denom().to_string().parse().unwrap_or(1.0);
        n / d
    };
    let mut extent = rat(1);
    for m in marks {
        if m.x.abs() > extent {
            extent = m.x.abs();
        }
        if m.y.abs() > extent {
            extent = m.y.abs();
        }
    }
    let ext = to_f(&extent);
    let place = |v: f64| pad + (v + ext) / (2.0 * ext) * (size - 2.0 * pad);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!(
        "  <title>weight diagram of {}</title>\n",
        alg.name
    ));
    // axes through the origin
    let o = place(0.0);
    out.push_str(&format!(
        "  <line x1=\"{pad}\" y1=\"{o}\" x2=\"{}\" y2=\"{o}\" stroke=\"#ccc\"/>\n",
        size - pad
    ));
    out.push_str(&format!(
        "  <line x1=\"{o}\" y1=\"{pad}\" x2=\"{o}\" y2=\"{}\" stroke=\"#ccc\"/>\n",
        size - pad
    ));
    for m in marks {
        let cx = place(to_f(&m.x));
        let cy = size - place(to_f(&m.y));
        let r = if m.principal { 6.0 } else { 4.0 };
        let fill = if m.principal { "#000" } else { "#777" };
        out.push_str(&format!(
            "  <circle cx=\"{cx:.1}\" cy=\"{cy:.1}\" r=\"{r}\" fill=\"{fill}\"/>\n"
        ));
        let deco = if m.zero {
            " text-decoration=\"underline\""
        } else {
            ""
        };
        let weight = if m.principal {
            " font-weight=\"bold\""
        } else {
            ""
        };
        out.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\"{weight}{deco}>{}</text>\n",
            cx + 8.0,
            cy - 6.0,
            m.label
        ));
    }
    out.push_str("</svg>\n");
    out
}
