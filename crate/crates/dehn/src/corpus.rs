//! Built-in algebra fixtures.
//!
//! The corpus covers the range of behaviours the analyses distinguish:
//! SOL-type algebras over archimedean and `p`-adic fields, the
//! higher-rank diagonal examples, both Abels algebras, the three
//! semidirect products with the rank-two triangular group acting through
//! irreducible modules, a thirteen-dimensional algebra whose degree-zero
//! homology lives entirely off the nonzero-weight part, and two small
//! nilpotent algebras with exact unipotent matrix models.

use crate::lie::{BasisElement, FieldComponent, FieldKind, GradedLieAlgebra, Weight};
use crate::linalg::RationalMatrix;
use crate::rat::{rat, Rational};
use num_traits::Zero;

fn real_field() -> Vec<FieldComponent> {
    vec![FieldComponent {
        id: "R".to_string(),
        kind: FieldKind::Archimedean,
    }]
}

fn w(coords: &[i64]) -> Weight {
    Weight(coords.iter().map(|&c| rat(c)).collect())
}

fn basis(field: &str, items: &[(&str, Weight)]) -> Vec<BasisElement> {
    items
        .iter()
        .map(|(name, weight)| BasisElement {
            name: name.to_string(),
            field: field.to_string(),
            weight: weight.clone(),
        })
        .collect()
}

/// Heisenberg algebra with weights 1, 1, 2.
pub fn heisenberg() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "heisenberg",
        1,
        1,
        real_field(),
        basis("R", &[("X", w(&[1])), ("Y", w(&[1])), ("Z", w(&[2]))]),
    )
    .unwrap();
    alg.set_bracket("X", "Y", vec![("Z", rat(1))]).unwrap();
    alg
}

/// Filiform algebra of dimension 4: `[e1,e2] = e3`, `[e1,e3] = e4`.
pub fn filiform_4() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "filiform-4",
        1,
        1,
        real_field(),
        basis(
            "R",
            &[
                ("e1", w(&[1])),
                ("e2", w(&[1])),
                ("e3", w(&[2])),
                ("e4", w(&[3])),
            ],
        ),
    )
    .unwrap();
    alg.set_bracket("e1", "e2", vec![("e3", rat(1))]).unwrap();
    alg.set_bracket("e1", "e3", vec![("e4", rat(1))]).unwrap();
    alg
}

/// The 6-dimensional unipotent algebra of the rank-two group of
/// upper triangular 4x4 matrices with two free diagonal parameters:
/// strictly upper triangular matrices graded by the diagonal action.
pub fn abels_a4() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "abels-a4",
        2,
        2,
        real_field(),
        basis(
            "R",
            &[
                ("u12", w(&[-1, 0])),
                ("u13", w(&[0, -1])),
                ("u14", w(&[0, 0])),
                ("u23", w(&[1, -1])),
                ("u24", w(&[1, 0])),
                ("u34", w(&[0, 1])),
            ],
        ),
    )
    .unwrap();
    alg.set_bracket("u12", "u23", vec![("u13", rat(1))])
        .unwrap();
    alg.set_bracket("u12", "u24", vec![("u14", rat(1))])
        .unwrap();
    alg.set_bracket("u13", "u34", vec![("u14", rat(1))])
        .unwrap();
    alg.set_bracket("u23", "u34", vec![("u24", rat(1))])
        .unwrap();
    alg
}

/// The quotient of the free 3-nilpotent algebra on x1, x2, x3 by the
/// relations `[x_i, [x_i, x_j]] = 0`: eight-dimensional, with a
/// two-dimensional degree-zero part spanned by the surviving triple
/// brackets z1 = [x2,[x1,x3]] and z2 = [x3,[x1,x2]].
pub fn abels_2() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "abels-2",
        2,
        2,
        real_field(),
        basis(
            "R",
            &[
                ("x1", w(&[1, 0])),
                ("x2", w(&[0, 1])),
                ("x3", w(&[-1, -1])),
                ("y12", w(&[1, 1])),
                ("y13", w(&[0, -1])),
                ("y23", w(&[-1, 0])),
                ("z1", w(&[0, 0])),
                ("z2", w(&[0, 0])),
            ],
        ),
    )
    .unwrap();
    alg.set_bracket("x1", "x2", vec![("y12", rat(1))]).unwrap();
    alg.set_bracket("x1", "x3", vec![("y13", rat(1))]).unwrap();
    alg.set_bracket("x2", "x3", vec![("y23", rat(1))]).unwrap();
    // [x1, [x2, x3]] = [x2,[x1,x3]] - [x3,[x1,x2]] by the Jacobi identity
    alg.set_bracket("x1", "y23", vec![("z1", rat(1)), ("z2", rat(-1))])
        .unwrap();
    alg.set_bracket("x2", "y13", vec![("z1", rat(1))]).unwrap();
    alg.set_bracket("x3", "y12", vec![("z2", rat(1))]).unwrap();
    alg
}

/// Abelian rank-two fixture: three weights forming a triangle whose
/// center of gravity is the origin.
pub fn higher_sol() -> GradedLieAlgebra {
    GradedLieAlgebra::new(
        "higher-sol",
        2,
        2,
        real_field(),
        basis(
            "R",
            &[("u1", w(&[1, 0])), ("u2", w(&[0, 1])), ("u3", w(&[-1, -1]))],
        ),
    )
    .unwrap()
}

/// `R^2` with weights `1` and `-lambda`.
pub fn sol_lambda(lambda: &Rational) -> GradedLieAlgebra {
    assert!(lambda > &Rational::zero());
    GradedLieAlgebra::new(
        format!("sol-{}-{}", lambda.numer(), lambda.denom()),
        1,
        1,
        real_field(),
        vec![
            BasisElement {
                name: "u1".to_string(),
                field: "R".to_string(),
                weight: w(&[1]),
            },
            BasisElement {
                name: "u2".to_string(),
                field: "R".to_string(),
                weight: Weight(vec![-lambda.clone()]),
            },
        ],
    )
    .unwrap()
}

/// `Q_p x Q_q` with opposite weights: not compactly presentable.
pub fn sol_padic(p: u32, q: u32) -> GradedLieAlgebra {
    GradedLieAlgebra::new(
        format!("sol-padic-{p}-{q}"),
        1,
        1,
        vec![
            FieldComponent {
                id: format!("Q{p}"),
                kind: FieldKind::NonArchimedean(p),
            },
            FieldComponent {
                id: format!("Q{q}"),
                kind: FieldKind::NonArchimedean(q),
            },
        ],
        vec![
            BasisElement {
                name: "u1".to_string(),
                field: format!("Q{p}"),
                weight: w(&[1]),
            },
            BasisElement {
                name: "u2".to_string(),
                field: format!("Q{q}"),
                weight: w(&[-1]),
            },
        ],
    )
    .unwrap()
}

/// `R x Q_p` with opposite weights: exponential but compactly presented.
pub fn sol_real_padic(p: u32) -> GradedLieAlgebra {
    GradedLieAlgebra::new(
        format!("sol-real-padic-{p}"),
        1,
        1,
        vec![
            FieldComponent {
                id: "R".to_string(),
                kind: FieldKind::Archimedean,
            },
            FieldComponent {
                id: format!("Q{p}"),
                kind: FieldKind::NonArchimedean(p),
            },
        ],
        vec![
            BasisElement {
                name: "u1".to_string(),
                field: "R".to_string(),
                weight: w(&[1]),
            },
            BasisElement {
                name: "u2".to_string(),
                field: format!("Q{p}"),
                weight: w(&[-1]),
            },
        ],
    )
    .unwrap()
}

// Weight conventions for the rank-two triangular fixtures: the three
// diagonal characters are L1 = (1,1), L2 = (-1,1), L3 = (0,-2), summing
// to zero; negative roots r_ij = L_i - L_j grade the strictly lower
// triangular part acting on the module.

/// Standard 3-dimensional module under the lower triangular algebra.
pub fn sl3_v10() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "sl3-v10",
        2,
        2,
        real_field(),
        basis(
            "R",
            &[
                ("n21", w(&[-2, 0])),
                ("n31", w(&[-1, -3])),
                ("n32", w(&[1, -3])),
                ("m1", w(&[1, 1])),
                ("m2", w(&[-1, 1])),
                ("m3", w(&[0, -2])),
            ],
        ),
    )
    .unwrap();
    alg.set_bracket("n21", "n32", vec![("n31", rat(-1))])
        .unwrap();
    alg.set_bracket("n21", "m1", vec![("m2", rat(1))]).unwrap();
    alg.set_bracket("n31", "m1", vec![("m3", rat(1))]).unwrap();
    alg.set_bracket("n32", "m2", vec![("m3", rat(1))]).unwrap();
    alg
}

/// Symmetric square of the standard module (6-dimensional).
pub fn sl3_v20() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "sl3-v20",
        2,
        2,
        real_field(),
        basis(
            "R",
            &[
                ("n21", w(&[-2, 0])),
                ("n31", w(&[-1, -3])),
                ("n32", w(&[1, -3])),
                ("s11", w(&[2, 2])),
                ("s12", w(&[0, 2])),
                ("s13", w(&[1, -1])),
                ("s22", w(&[-2, 2])),
                ("s23", w(&[-1, -1])),
                ("s33", w(&[0, -4])),
            ],
        ),
    )
    .unwrap();
    alg.set_bracket("n21", "n32", vec![("n31", rat(-1))])
        .unwrap();
    alg.set_bracket("n21", "s11", vec![("s12", rat(2))])
        .unwrap();
    alg.set_bracket("n21", "s12", vec![("s22", rat(1))])
        .unwrap();
    alg.set_bracket("n21", "s13", vec![("s23", rat(1))])
        .unwrap();
    alg.set_bracket("n31", "s11", vec![("s13", rat(2))])
        .unwrap();
    alg.set_bracket("n31", "s12", vec![("s23", rat(1))])
        .unwrap();
    alg.set_bracket("n31", "s13", vec![("s33", rat(1))])
        .unwrap();
    alg.set_bracket("n32", "s22", vec![("s23", rat(2))])
        .unwrap();
    alg.set_bracket("n32", "s12", vec![("s13", rat(1))])
        .unwrap();
    alg.set_bracket("n32", "s23", vec![("s33", rat(1))])
        .unwrap();
    alg
}

/// Adjoint module (8-dimensional), whose invariant trace form makes the
/// degree-zero Killing module nonzero.
pub fn sl3_v11() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "sl3-v11",
        2,
        2,
        real_field(),
        basis(
            "R",
            &[
                ("n21", w(&[-2, 0])),
                ("n31", w(&[-1, -3])),
                ("n32", w(&[1, -3])),
                ("v12", w(&[2, 0])),
                ("v13", w(&[1, 3])),
                ("v23", w(&[-1, 3])),
                ("v21", w(&[-2, 0])),
                ("v31", w(&[-1, -3])),
                ("v32", w(&[1, -3])),
                ("h1", w(&[0, 0])),
                ("h2", w(&[0, 0])),
            ],
        ),
    )
    .unwrap();
    alg.set_bracket("n21", "n32", vec![("n31", rat(-1))])
        .unwrap();
    // adjoint action of E21
    alg.set_bracket("n21", "v12", vec![("h1", rat(-1))])
        .unwrap();
    alg.set_bracket("n21", "v13", vec![("v23", rat(1))])
        .unwrap();
    alg.set_bracket("n21", "v32", vec![("v31", rat(-1))])
        .unwrap();
    alg.set_bracket("n21", "h1", vec![("v21", rat(2))]).unwrap();
    alg.set_bracket("n21", "h2", vec![("v21", rat(-1))])
        .unwrap();
    // adjoint action of E31
    alg.set_bracket("n31", "v12", vec![("v32", rat(1))])
        .unwrap();
    alg.set_bracket("n31", "v13", vec![("h1", rat(-1)), ("h2", rat(-1))])
        .unwrap();
    alg.set_bracket("n31", "v23", vec![("v21", rat(-1))])
        .unwrap();
    alg.set_bracket("n31", "h1", vec![("v31", rat(1))]).unwrap();
    alg.set_bracket("n31", "h2", vec![("v31", rat(1))]).unwrap();
    // adjoint action of E32
    alg.set_bracket("n32", "v13", vec![("v12", rat(-1))])
        .unwrap();
    alg.set_bracket("n32", "v23", vec![("h2", rat(-1))])
        .unwrap();
    alg.set_bracket("n32", "v21", vec![("v31", rat(1))])
        .unwrap();
    alg.set_bracket("n32", "h1", vec![("v32", rat(-1))])
        .unwrap();
    alg.set_bracket("n32", "h2", vec![("v32", rat(2))]).unwrap();
    alg
}

/// Thirteen-dimensional algebra built from 6x6 matrices with two free
/// diagonal entries, modulo the central plane at positions (1,6), (2,6).
/// Its degree-zero 2-cycles supported on nonzero weights all bound in the
/// full complex even though the exponential radical alone has nontrivial
/// degree-zero homology.
pub fn example_13dim() -> GradedLieAlgebra {
    let mut alg = GradedLieAlgebra::new(
        "example-13dim",
        2,
        2,
        real_field(),
        basis(
            "R",
            &[
                ("n13", w(&[-1, 0])),
                ("n14", w(&[0, -1])),
                ("n15", w(&[0, 0])),
                ("n34", w(&[1, -1])),
                ("n35", w(&[1, 0])),
                ("n36", w(&[1, 0])),
                ("n45", w(&[0, 1])),
                ("n46", w(&[0, 1])),
                ("d3", w(&[0, 0])),
                ("d4", w(&[0, 0])),
                ("x12", w(&[0, 0])),
                ("x25", w(&[0, 0])),
                ("x56", w(&[0, 0])),
            ],
        ),
    )
    .unwrap();
    alg.set_bracket("x12", "x25", vec![("n15", rat(1))])
        .unwrap();
    alg.set_bracket("n13", "n34", vec![("n14", rat(1))])
        .unwrap();
    alg.set_bracket("n13", "n35", vec![("n15", rat(1))])
        .unwrap();
    alg.set_bracket("n14", "n45", vec![("n15", rat(1))])
        .unwrap();
    alg.set_bracket("n34", "n45", vec![("n35", rat(1))])
        .unwrap();
    alg.set_bracket("n34", "n46", vec![("n36", rat(1))])
        .unwrap();
    alg.set_bracket("n35", "x56", vec![("n36", rat(1))])
        .unwrap();
    alg.set_bracket("n45", "x56", vec![("n46", rat(1))])
        .unwrap();
    alg.set_bracket("d3", "n13", vec![("n13", rat(-1))])
        .unwrap();
    alg.set_bracket("d3", "n34", vec![("n34", rat(1))]).unwrap();
    alg.set_bracket("d3", "n35", vec![("n35", rat(1))]).unwrap();
    alg.set_bracket("d3", "n36", vec![("n36", rat(1))]).unwrap();
    alg.set_bracket("d4", "n14", vec![("n14", rat(-1))])
        .unwrap();
    alg.set_bracket("d4", "n34", vec![("n34", rat(-1))])
        .unwrap();
    alg.set_bracket("d4", "n45", vec![("n45", rat(1))]).unwrap();
    alg.set_bracket("d4", "n46", vec![("n46", rat(1))]).unwrap();
    alg
}

/// Every fixture, for corpus-wide property suites.
pub fn all_fixtures() -> Vec<GradedLieAlgebra> {
    vec![
        heisenberg(),
        filiform_4(),
        abels_a4(),
        abels_2(),
        higher_sol(),
        sol_lambda(&rat(1)),
        sol_lambda(&rat(2)),
        sol_padic(2, 3),
        sol_real_padic(2),
        sl3_v10(),
        sl3_v20(),
        sl3_v11(),
        example_13dim(),
    ]
}

/// Names accepted by `example:NAME` lookups, with one representative per
/// parametric family.
pub fn example_names() -> Vec<&'static str> {
    vec![
        "heisenberg",
        "filiform-4",
        "abels-a4",
        "abels-2",
        "higher-sol",
        "sol-1-1",
        "sol-2-1",
        "sol-padic",
        "sol-real-padic",
        "sl3-v10",
        "sl3-v20",
        "sl3-v11",
        "example-13dim",
    ]
}

/// Resolves an example name; `sol-P-Q` is the parametric family with
/// `lambda = P/Q`, and the `p`-adic variants accept `sol-padic:p,q` and
/// `sol-real-padic:p`.
pub fn by_name(name: &str) -> Option<GradedLieAlgebra> {
    match name {
        "heisenberg" => return Some(heisenberg()),
        "filiform-4" => return Some(filiform_4()),
        "abels-a4" => return Some(abels_a4()),
        "abels-2" => return Some(abels_2()),
        "higher-sol" => return Some(higher_sol()),
        "sol-padic" => return Some(sol_padic(2, 3)),
        "sol-real-padic" => return Some(sol_real_padic(2)),
        "sl3-v10" => return Some(sl3_v10()),
        "sl3-v20" => return Some(sl3_v20()),
        "sl3-v11" => return Some(sl3_v11()),
        "example-13dim" => return Some(example_13dim()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("sol-padic:") {
        let (p, q) = rest.split_once(',')?;
        return Some(sol_padic(p.trim().parse().ok()?, q.trim().parse().ok()?));
    }
    if let Some(rest) = name.strip_prefix("sol-real-padic:") {
        return Some(sol_real_padic(rest.trim().parse().ok()?));
    }
    if let Some(rest) = name.strip_prefix("sol-") {
        let (p, q) = rest.split_once('-')?;
        let num: i64 = p.parse().ok()?;
        let den: i64 = q.parse().ok()?;
        if num > 0 && den > 0 {
            return Some(sol_lambda(&crate::rat::ratio(num, den)));
        }
    }
    None
}

/// Fixtures carrying an exact strictly-upper-triangular matrix model,
/// with the linear realization map for oracle cross-checks.
#[allow(clippy::type_complexity)]
pub fn matrix_realizations() -> Vec<(GradedLieAlgebra, Box<dyn Fn(&[Rational]) -> RationalMatrix>)>
{
    fn from_entries(
        n: usize,
        entries: Vec<Vec<(usize, usize, Rational)>>,
    ) -> Box<dyn Fn(&[Rational]) -> RationalMatrix> {
        Box::new(move |coords: &[Rational]| {
            let mut m = RationalMatrix::zero(n, n);
            for (k, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, j, e) in &entries[k] {
                    let v = m.get(*i, *j) + c * e;
                    m.set(*i, *j, v);
                }
            }
            m
        })
    }
    vec![
        (
            heisenberg(),
            from_entries(
                3,
                vec![
                    vec![(0, 1, rat(1))],
                    vec![(1, 2, rat(1))],
                    vec![(0, 2, rat(1))],
                ],
            ),
        ),
        (
            filiform_4(),
            from_entries(
                4,
                vec![
                    vec![(0, 1, rat(1)), (1, 2, rat(1)), (2, 3, rat(1))],
                    vec![(0, 1, rat(1))],
                    vec![(0, 2, rat(-1))],
                    vec![(0, 3, rat(1))],
                ],
            ),
        ),
        (
            abels_a4(),
            from_entries(
                4,
                vec![
                    vec![(0, 1, rat(1))],
                    vec![(0, 2, rat(1))],
                    vec![(0, 3, rat(1))],
                    vec![(1, 2, rat(1))],
                    vec![(1, 3, rat(1))],
                    vec![(2, 3, rat(1))],
                ],
            ),
        ),
    ]
}
