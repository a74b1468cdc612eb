//! The blow-up central extension of a graded Lie algebra.
//!
//! The blown-up algebra keeps every nonzero-weight component and replaces
//! the degree-zero component by the degree-zero 2-chains modulo
//! 3-boundaries. The projection back to the input is a graded Lie algebra
//! homomorphism with central kernel of dimension `dim H2(g)_0`, which is
//! what [`verify_blow_up`] checks computationally.

use crate::homology::{boundary_matrix_between, h2_degree_zero, wedge_basis};
use crate::lie::{BasisElement, Combination, FieldComponent, FieldKind, GradedLieAlgebra, Weight};
use crate::linalg::{RationalMatrix, Subspace};
use crate::rat::Rational;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct BlowUpResult {
    pub blown_up: GradedLieAlgebra,
    /// Matrix of the projection: columns over the blow-up basis, rows
    /// over the input basis.
    pub tau: RationalMatrix,
    /// Basis of the kernel in blow-up coordinates (degree-zero vectors).
    pub kernel_basis: Vec<Vec<Rational>>,
    pub kernel_dim: usize,
}

/// Internal scaffolding shared by the construction and its checks.
struct DegreeZeroQuotient {
    /// Wedge pairs spanning the degree-zero 2-chains.
    pairs: Vec<Vec<usize>>,
    /// Image of d3 inside that space.
    boundary_space: Subspace,
    /// Representative chains for the quotient basis.
    reps: Vec<Vec<Rational>>,
}

fn degree_zero_quotient(alg: &GradedLieAlgebra) -> DegreeZeroQuotient {
    let zero = Weight::zero(alg.weight_dim);
    let b2 = wedge_basis(alg, 2, &zero, false);
    let b3 = wedge_basis(alg, 3, &zero, false);
    let d3 = boundary_matrix_between(alg, &b3, &b2);
    let cols: Vec<Vec<Rational>> = (0..b3.len())
        .map(|c| (0..d3.rows).map(|r| d3.get(r, c).clone()).collect())
        .collect();
    let boundary_space = Subspace::span(b2.len(), &cols);
    let full = Subspace::full(b2.len());
    let reps = full
        .quotient_representatives(&boundary_space)
        .expect("boundaries live in the chain space");
    DegreeZeroQuotient {
        pairs: b2.elements,
        boundary_space,
        reps,
    }
}

/// Coordinates of a degree-zero 2-chain in the quotient basis.
fn project_chain(q: &DegreeZeroQuotient, chain: &[Rational]) -> Vec<Rational> {
    // solve chain = sum c_i rep_i modulo boundary_space by augmenting the
    // boundary basis with the representatives
    let mut rows: Vec<Vec<Rational>> = q.boundary_space.basis().to_vec();
    let b_dim = rows.len();
    rows.extend(q.reps.iter().cloned());
    let m = RationalMatrix::from_rows(rows).transpose();
    let x = m
        .solve(chain)
        .expect("chain lies in the span of boundaries and representatives");
    x[b_dim..].to_vec()
}

/// The wedge `x ^ y` of two degree-zero coordinate vectors as a chain
/// over `q.pairs`.
fn wedge_chain(q: &DegreeZeroQuotient, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut chain = vec![Rational::zero(); q.pairs.len()];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() || i == j {
                continue;
            }
            let (a, b, sign) = if i < j {
                (i, j, Rational::one())
            } else {
                (j, i, -Rational::one())
            };
            let p = q
                .pairs
                .iter()
                .position(|t| t == &[a, b])
                .expect("degree-zero vectors wedge into the degree-zero component");
            chain[p] = &chain[p] + &(xi * yj * sign);
        }
    }
    chain
}

/// Builds the blow-up extension of a validated algebra.
pub fn blow_up(alg: &GradedLieAlgebra) -> BlowUpResult {
    let q = degree_zero_quotient(alg);
    let nonzero_idx: Vec<usize> = (0..alg.dim())
        .filter(|&i| !alg.basis[i].weight.is_zero())
        .collect();
    let q_dim = q.reps.len();
    let new_dim = nonzero_idx.len() + q_dim;

    // the degree-zero classes may mix field components; a single rational
    // component is the honest ground ring in that case
    let single_field = alg
        .basis
        .iter()
        .map(|b| &b.field)
        .collect::<std::collections::BTreeSet<_>>()
        .len()
        <= 1;
    let (fields, zero_field_id) = if single_field {
        let id = alg
            .basis
            .first()
            .map(|b| b.field.clone())
            .unwrap_or_else(|| {
                alg.fields
                    .first()
                    .map(|f| f.id.clone())
                    .unwrap_or("Q".into())
            });
        (alg.fields.clone(), id)
    } else {
        (
            vec![FieldComponent {
                id: "Q".to_string(),
                kind: FieldKind::Archimedean,
            }],
            "Q".to_string(),
        )
    };

    let mut basis = Vec::new();
    for &i in &nonzero_idx {
        basis.push(BasisElement {
            name: alg.basis[i].name.clone(),
            field: if single_field {
                alg.basis[i].field.clone()
            } else {
                zero_field_id.clone()
            },
            weight: alg.basis[i].weight.clone(),
        });
    }
    for k in 0..q_dim {
        basis.push(BasisElement {
            name: format!("z{k}"),
            field: zero_field_id.clone(),
            weight: Weight::zero(alg.weight_dim),
        });
    }

    let mut blown = GradedLieAlgebra::new(
        format!("{}~", alg.name),
        alg.weight_dim,
        alg.a_rank,
        fields,
        basis,
    )
    .expect("blow-up basis is well-formed");

    // old-index -> new-index for nonzero weights
    let pos_of: std::collections::BTreeMap<usize, usize> = nonzero_idx
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();

    // tau maps nonzero-weight vectors identically and each class z_k to
    // the bracket of its representative chain
    let mut tau = RationalMatrix::zero(alg.dim(), new_dim);
    for (new, &old) in nonzero_idx.iter().enumerate() {
        tau.set(old, new, Rational::one());
    }
    let tau_of_class: Vec<Vec<Rational>> = q
        .reps
        .iter()
        .map(|rep| {
            let mut v = vec![Rational::zero(); alg.dim()];
            for (p, c) in rep.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let pair = &q.pairs[p];
                for (k, bc) in alg.bracket_basis(pair[0], pair[1]) {
                    v[k] = &v[k] + &(c * &bc);
                }
            }
            v
        })
        .collect();
    for (k, v) in tau_of_class.iter().enumerate() {
        for (row, c) in v.iter().enumerate() {
            tau.set(row, nonzero_idx.len() + k, c.clone());
        }
    }

    // brackets between nonzero-weight generators
    for (a_pos, &i) in nonzero_idx.iter().enumerate() {
        for (b_pos, &j) in nonzero_idx.iter().enumerate().skip(a_pos + 1) {
            let sum = alg.basis[i].weight.add(&alg.basis[j].weight);
            let combo: Combination = if sum.is_zero() {
                // lands in the quotient of degree-zero 2-chains
                let mut chain = vec![Rational::zero(); q.pairs.len()];
                let (a, b, sign) = if i < j {
                    (i, j, Rational::one())
                } else {
                    (j, i, -Rational::one())
                };
                let p = q
                    .pairs
                    .iter()
                    .position(|t| t == &[a, b])
                    .expect("pair at 0");
                chain[p] = sign;
                project_chain(&q, &chain)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (nonzero_idx.len() + k, c))
                    .collect()
            } else {
                alg.bracket_basis(i, j)
                    .into_iter()
                    .filter_map(|(k, c)| pos_of.get(&k).map(|&p| (p, c)))
                    .collect()
            };
            blown
                .set_bracket_indexed(a_pos, b_pos, combo)
                .expect("fresh pair");
        }
    }

    // brackets of degree-zero classes with nonzero-weight generators:
    // [z, x] = [tau(z), x] transported along the identity on g_beta
    for (k, tz) in tau_of_class.iter().enumerate() {
        let z_pos = nonzero_idx.len() + k;
        for (x_pos, &i) in nonzero_idx.iter().enumerate() {
            let w = alg.bracket_vectors(tz, &alg.basis_vector(i));
            let combo: Combination = w
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(old, c)| (pos_of[&old], c.clone()))
                .collect();
            blown
                .set_bracket_indexed(z_pos, x_pos, combo)
                .expect("fresh pair");
        }
    }

    // brackets among degree-zero classes: [z, z'] = class(tau z ^ tau z')
    for k in 0..q_dim {
        for l in (k + 1)..q_dim {
            let chain = wedge_chain(&q, &tau_of_class[k], &tau_of_class[l]);
            let combo: Combination = project_chain(&q, &chain)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (nonzero_idx.len() + m, c))
                .collect();
            blown
                .set_bracket_indexed(nonzero_idx.len() + k, nonzero_idx.len() + l, combo)
                .expect("fresh pair");
        }
    }

    // kernel: degree-zero classes of 2-cycles
    let zero = Weight::zero(alg.weight_dim);
    let b2 = wedge_basis(alg, 2, &zero, false);
    let singles = alg.graded_component(&zero);
    let mut d2 = RationalMatrix::zero(singles.len(), b2.len());
    let index: std::collections::BTreeMap<usize, usize> =
        singles.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    for (col, tuple) in b2.elements.iter().enumerate() {
        for (k, c) in alg.bracket_basis(tuple[0], tuple[1]) {
            let row = index[&k];
            let cur = d2.get(row, col).clone();
            d2.set(row, col, cur - c);
        }
    }
    let mut kernel_basis = Vec::new();
    for cycle in d2.kernel_basis() {
        let coords = project_chain(&q, &cycle);
        if coords.iter().any(|c| !c.is_zero()) {
            let mut v = vec![Rational::zero(); new_dim];
            for (m, c) in coords.into_iter().enumerate() {
                v[nonzero_idx.len() + m] = c;
            }
            kernel_basis.push(v);
        }
    }
    let kernel_space = Subspace::span(new_dim, &kernel_basis);
    let kernel_basis: Vec<Vec<Rational>> = kernel_space.basis().to_vec();
    let kernel_dim = kernel_space.dim();

    BlowUpResult {
        blown_up: blown,
        tau,
        kernel_basis,
        kernel_dim,
    }
}

/// `g_0 ⊆ [g, g]`: zero is not a weight of the abelianization.
pub fn is_relatively_perfect_degree_zero(alg: &GradedLieAlgebra) -> bool {
    let derived = alg.derived_subalgebra();
    alg.degree_zero_subspace()
        .basis()
        .iter()
        .all(|v| derived.contains(v))
}

#[derive(Clone, Debug)]
pub struct BlowUpVerification {
    pub jacobi_ok: bool,
    pub tau_is_homomorphism: bool,
    pub kernel_central: bool,
    pub kernel_dim_matches_h2: bool,
    pub idempotent_kernel: Option<bool>,
    /// Set when the input is 2-tame on principal weights: the extension
    /// then also realizes the amalgam of the tame subalgebras.
    pub amalgam_note: Option<String>,
    pub failures: Vec<String>,
}

impl BlowUpVerification {
    pub fn all_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Re-derives the blow-up contract on a constructed result: Jacobi holds,
/// the projection is a homomorphism, the kernel is central of dimension
/// `dim H2(g)_0`, and for inputs that are relatively perfect in degree
/// zero the second blow-up adds nothing.
pub fn verify_blow_up(alg: &GradedLieAlgebra, result: &BlowUpResult) -> BlowUpVerification {
    let mut failures = Vec::new();
    let jacobi_ok = result.blown_up.validate().is_empty();
    if !jacobi_ok {
        failures.push("blow-up fails validation".to_string());
    }

    // tau([x,y]') = [tau x, tau y] on all basis pairs
    let nb = result.blown_up.dim();
    let mut tau_is_homomorphism = true;
    for i in 0..nb {
        for j in (i + 1)..nb {
            let xi = result.blown_up.basis_vector(i);
            let xj = result.blown_up.basis_vector(j);
            let lhs = result
                .tau
                .mul_vec(&result.blown_up.bracket_vectors(&xi, &xj));
            let rhs = alg.bracket_vectors(&result.tau.mul_vec(&xi), &result.tau.mul_vec(&xj));
            if lhs != rhs {
                tau_is_homomorphism = false;
            }
        }
    }
    if !tau_is_homomorphism {
        failures.push("projection is not a homomorphism".to_string());
    }

    let mut kernel_central = true;
    for v in &result.kernel_basis {
        for i in 0..nb {
            let w = result
                .blown_up
                .bracket_vectors(v, &result.blown_up.basis_vector(i));
            if w.iter().any(|c| !c.is_zero()) {
                kernel_central = false;
            }
        }
        // kernel vectors are concentrated in degree zero
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() && !result.blown_up.basis[i].weight.is_zero() {
                kernel_central = false;
            }
        }
    }
    if !kernel_central {
        failures.push("kernel is not central in degree zero".to_string());
    }

    let h2 = h2_degree_zero(alg);
    let kernel_dim_matches_h2 = result.kernel_dim == h2.dim_h2_0;
    if !kernel_dim_matches_h2 {
        failures.push(format!(
            "kernel dimension {} differs from dim H2_0 = {}",
            result.kernel_dim, h2.dim_h2_0
        ));
    }

    let idempotent_kernel = if is_relatively_perfect_degree_zero(alg) {
        let second = blow_up(&result.blown_up);
        let ok = second.kernel_dim == 0;
        if !ok {
            failures.push(format!(
                "second blow-up has kernel dimension {}",
                second.kernel_dim
            ));
        }
        Some(ok)
    } else {
        None
    };

    let ws = crate::weights::WeightSet::from_algebra(alg);
    let na: Vec<String> = alg
        .fields
        .iter()
        .filter(|f| !f.kind.is_archimedean())
        .map(|f| f.id.clone())
        .collect();
    let flags = crate::weights::tameness_flags(&ws, &na);
    let amalgam_note = flags.two_tame.then(|| {
        "two-tame input: this extension also realizes the colimit of the tame subalgebras"
            .to_string()
    });

    BlowUpVerification {
        jacobi_ok,
        tau_is_homomorphism,
        kernel_central,
        kernel_dim_matches_h2,
        idempotent_kernel,
        amalgam_note,
        failures,
    }
}
