//! Degree-zero homology of graded Lie algebras: boundary maps on graded
//! wedge components, `H2(g)_0`, the degree-zero Killing module, their
//! tame variants, and the first-cyclic-homology pairing on Laurent
//! polynomials.
//!
//! All wedge and symmetric bases are built per weight, never globally,
//! so the matrices stay small even when the full exterior powers are
//! large.

use crate::lie::{GradedLieAlgebra, Weight};
use crate::linalg::{RationalMatrix, Subspace};
use crate::rat::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Canonical basis of a graded component of an exterior power: strictly
/// increasing index tuples whose weights sum to the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedWedgeBasis {
    pub degree: Weight,
    pub arity: usize,
    pub elements: Vec<Vec<usize>>,
}

impl GradedWedgeBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, tuple: &[usize]) -> Option<usize> {
        self.elements.iter().position(|e| e == tuple)
    }
}

/// Builds the degree component of the `arity`-th exterior power. When
/// `nonzero_only` is set, tuples are restricted to basis vectors of
/// nonzero weight (the tame subcomplex).
pub fn wedge_basis(
    alg: &GradedLieAlgebra,
    arity: usize,
    degree: &Weight,
    nonzero_only: bool,
) -> GradedWedgeBasis {
    struct Search<'a> {
        alg: &'a GradedLieAlgebra,
        allowed: Vec<usize>,
        arity: usize,
        degree: &'a Weight,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    impl Search<'_> {
        fn run(&mut self, start: usize, acc: &Weight) {
            if self.stack.len() == self.arity {
                if acc == self.degree {
                    self.out.push(self.stack.clone());
                }
                return;
            }
            for pos in start..self.allowed.len() {
                let i = self.allowed[pos];
                self.stack.push(i);
                let next = acc.add(&self.alg.basis[i].weight);
                self.run(pos + 1, &next);
                self.stack.pop();
            }
        }
    }
    let n = alg.dim();
    let mut search = Search {
        alg,
        allowed: (0..n)
            .filter(|&i| !nonzero_only || !alg.basis[i].weight.is_zero())
            .collect(),
        arity,
        degree,
        stack: Vec::new(),
        out: Vec::new(),
    };
    search.run(0, &Weight::zero(alg.weight_dim));
    GradedWedgeBasis {
        degree: degree.clone(),
        arity,
        elements: search.out,
    }
}

/// A wedge monomial with sign after sorting, `None` when degenerate.
fn normalize_tuple(mut idx: Vec<usize>) -> Option<(Vec<usize>, Rational)> {
    let mut sign = Rational::one();
    // insertion sort, counting transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((idx, sign))
}

/// Matrix of the boundary map `d_n` from the degree component of the
/// `n`-th exterior power to that of the `(n-1)`-th, in canonical bases
/// (rows = codomain, columns = domain).
///
/// `d_n(x_1 ^ ... ^ x_n) = sum_{i<j} (-1)^{i+j} [x_i,x_j] ^ x_1 ^ ...
/// ^ x_i-hat ^ ... ^ x_j-hat ^ ... ^ x_n`, so `d_2(x ^ y) = -[x, y]`.
pub fn boundary_matrix(alg: &GradedLieAlgebra, arity: usize, degree: &Weight) -> RationalMatrix {
    boundary_matrix_between(
        alg,
        &wedge_basis(alg, arity, degree, false),
        &wedge_basis(alg, arity - 1, degree, false),
    )
}

/// Same map with explicit domain and codomain bases (used for the tame
/// subcomplex, where both are restricted to nonzero-weight tuples).
pub fn boundary_matrix_between(
    alg: &GradedLieAlgebra,
    domain: &GradedWedgeBasis,
    codomain: &GradedWedgeBasis,
) -> RationalMatrix {
    assert!(domain.arity >= 2);
    assert_eq!(codomain.arity + 1, domain.arity);
    let codomain_index: BTreeMap<&[usize], usize> = codomain
        .elements
        .iter()
        .enumerate()
        .map(|(p, t)| (t.as_slice(), p))
        .collect();
    let mut m = RationalMatrix::zero(codomain.len(), domain.len());
    for (col, tuple) in domain.elements.iter().enumerate() {
        let n = tuple.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let sign = if (i + j) % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                // (-1)^{(i+1)+(j+1)} with 1-based positions equals (-1)^{i+j}
                let combo = alg.bracket_basis(tuple[i], tuple[j]);
                if combo.is_empty() {
                    continue;
                }
                let rest: Vec<usize> = tuple
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != i && *p != j)
                    .map(|(_, &v)| v)
                    .collect();
                for (k, c) in &combo {
                    let mut idx = Vec::with_capacity(n - 1);
                    idx.push(*k);
                    idx.extend_from_slice(&rest);
                    let Some((sorted, s)) = normalize_tuple(idx) else {
                        continue;
                    };
                    let Some(&row) = codomain_index.get(sorted.as_slice()) else {
                        // target tuple leaves the restricted codomain;
                        // can only happen for tame bases, where it does not
                        // (weights of the bracket stay nonzero), so a miss
                        // means a genuinely absent basis tuple
                        continue;
                    };
                    let cur = m.get(row, col).clone();
                    m.set(row, col, cur + &sign * &s * c);
                }
            }
        }
    }
    m
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct DegreeZeroHomologyReport {
    pub dim_lambda2_0: usize,
    pub dim_lambda3_0: usize,
    pub dim_z2_0: usize,
    pub dim_b2_0: usize,
    pub dim_h2_0: usize,
    pub dim_h2_tame_0: usize,
    /// Field id -> dim of the degree-zero second homology of that
    /// component's subalgebra.
    pub per_field_dims: BTreeMap<String, usize>,
    /// Canonical representatives of a basis of the quotient, as sparse
    /// chains over the canonical wedge basis at degree zero.
    #[serde(skip)]
    pub h2_representatives: Vec<Vec<(Vec<usize>, Rational)>>,
}

/// The homology computation shared by the full and tame variants:
/// returns `(dim lambda2, dim lambda3, dim Z2, dim B2, representatives)`.
fn two_homology_at_degree(
    alg: &GradedLieAlgebra,
    degree: &Weight,
    nonzero_only: bool,
) -> (GradedWedgeBasis, usize, usize, usize, Vec<Vec<Rational>>) {
    let b2 = wedge_basis(alg, 2, degree, nonzero_only);
    let b3 = wedge_basis(alg, 3, degree, nonzero_only);
    // the codomain of d2 is the full algebra component either way
    let b1 = wedge_single_basis(alg, degree);
    let d2 = boundary_matrix_between_single(alg, &b2, &b1);
    let d3 = boundary_matrix_between(alg, &b3, &b2);
    let z2 = Subspace::span(b2.len(), &d2.kernel_basis());
    let image_rows: Vec<Vec<Rational>> = (0..b3.len()).map(|c| column(&d3, c)).collect();
    let b2_space = Subspace::span(b2.len(), &image_rows);
    let reps = z2
        .quotient_representatives(&b2_space)
        .expect("boundaries are cycles");
    (b2, b3.len(), z2.dim(), b2_space.dim(), reps)
}

fn column(m: &RationalMatrix, c: usize) -> Vec<Rational> {
    (0..m.rows).map(|r| m.get(r, c).clone()).collect()
}

/// Basis of the degree component of the algebra itself (arity 1).
fn wedge_single_basis(alg: &GradedLieAlgebra, degree: &Weight) -> Vec<usize> {
    alg.graded_component(degree)
}

/// `d_2` from a wedge basis to the degree component of the algebra.
fn boundary_matrix_between_single(
    alg: &GradedLieAlgebra,
    domain: &GradedWedgeBasis,
    codomain: &[usize],
) -> RationalMatrix {
    assert_eq!(domain.arity, 2);
    let index: BTreeMap<usize, usize> = codomain.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let mut m = RationalMatrix::zero(codomain.len(), domain.len());
    for (col, tuple) in domain.elements.iter().enumerate() {
        for (k, c) in alg.bracket_basis(tuple[0], tuple[1]) {
            let row = index[&k];
            let cur = m.get(row, col).clone();
            m.set(row, col, cur - c);
        }
    }
    m
}

/// Full degree-zero homology report: exact dimensions of the complex at
/// degree zero, canonical representatives, the tame variant, and the
/// per-field-component dimensions.
pub fn h2_degree_zero(alg: &GradedLieAlgebra) -> DegreeZeroHomologyReport {
    let zero = Weight::zero(alg.weight_dim);
    let (b2, dim_l3, dim_z2, dim_b2, reps) = two_homology_at_degree(alg, &zero, false);
    let tame = h2_tame_degree_zero(alg);
    let mut per_field_dims = BTreeMap::new();
    for fc in &alg.fields {
        let sub = alg.field_component_subalgebra(&fc.id);
        let (_, _, z, b, _) = two_homology_at_degree(&sub, &zero, false);
        per_field_dims.insert(fc.id.clone(), z - b);
    }
    let h2_representatives = reps
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (b2.elements[p].clone(), c.clone()))
                .collect()
        })
        .collect();
    DegreeZeroHomologyReport {
        dim_lambda2_0: b2.len(),
        dim_lambda3_0: dim_l3,
        dim_z2_0: dim_z2,
        dim_b2_0: dim_b2,
        dim_h2_0: dim_z2 - dim_b2,
        dim_h2_tame_0: tame.dim,
        per_field_dims,
        h2_representatives,
    }
}

#[derive(Clone, Debug)]
pub struct TameHomology {
    pub dim: usize,
    pub dim_lambda2_tame_0: usize,
    pub dim_lambda3_tame_0: usize,
    /// Sparse representatives over the tame wedge basis.
    pub representatives: Vec<Vec<(Vec<usize>, Rational)>>,
}

/// Tame degree-zero homology
/// `(Ker d2 ∩ (g_nz ^ g_nz)_0) / d3((g_nz ^ g_nz ^ g_nz)_0)`.
pub fn h2_tame_degree_zero(alg: &GradedLieAlgebra) -> TameHomology {
    let zero = Weight::zero(alg.weight_dim);
    let (b2, dim_l3, dim_z2, dim_b2, reps) = two_homology_at_degree(alg, &zero, true);
    let _ = (dim_z2, dim_b2);
    let representatives = reps
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (b2.elements[p].clone(), c.clone()))
                .collect()
        })
        .collect();
    TameHomology {
        dim: reps.len(),
        dim_lambda2_tame_0: b2.len(),
        dim_lambda3_tame_0: dim_l3,
        representatives,
    }
}

/// Checks that the image of the tame degree-zero 2-cycles in the full
/// `H2(g)_0` is zero: every degree-zero 2-cycle supported on nonzero
/// weights is a boundary of the full complex.
pub fn prop_six_check(alg: &GradedLieAlgebra) -> bool {
    let zero = Weight::zero(alg.weight_dim);
    let full2 = wedge_basis(alg, 2, &zero, false);
    let tame2 = wedge_basis(alg, 2, &zero, true);
    let singles = wedge_single_basis(alg, &zero);
    let d2_tame = boundary_matrix_between_single(alg, &tame2, &singles);
    let tame_cycles = d2_tame.kernel_basis();
    // embed tame cycles into the full wedge component
    let embed: Vec<usize> = tame2
        .elements
        .iter()
        .map(|t| full2.position(t).expect("tame tuple is a full tuple"))
        .collect();
    let full3 = wedge_basis(alg, 3, &zero, false);
    let d3 = boundary_matrix_between(alg, &full3, &full2);
    let boundaries: Vec<Vec<Rational>> = (0..full3.len()).map(|c| column(&d3, c)).collect();
    let b_space = Subspace::span(full2.len(), &boundaries);
    tame_cycles.iter().all(|cycle| {
        let mut v = vec![Rational::zero(); full2.len()];
        for (p, c) in cycle.iter().enumerate() {
            if !c.is_zero() {
                v[embed[p]] = c.clone();
            }
        }
        b_space.contains(&v)
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct KillingReport {
    pub dim_sym2_0: usize,
    pub dim_t_image_0: usize,
    pub dim_kill_0: usize,
    pub dim_kill_tame_0: usize,
    /// Field id -> degree-zero Killing dimension of that component.
    pub per_field_dims: BTreeMap<String, usize>,
}

/// Canonical basis of the degree-zero symmetric square: pairs `i <= j`
/// with weights summing to zero (restricted to nonzero weights for the
/// tame variant).
fn sym2_basis(alg: &GradedLieAlgebra, nonzero_only: bool) -> Vec<(usize, usize)> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        if nonzero_only && alg.basis[i].weight.is_zero() {
            continue;
        }
        for j in i..n {
            if nonzero_only && alg.basis[j].weight.is_zero() {
                continue;
            }
            if alg.basis[i].weight.add(&alg.basis[j].weight).is_zero() {
                out.push((i, j));
            }
        }
    }
    out
}

/// Image of the map `T(u ⊙ v ⊗ w) = u ⊙ [v,w] + v ⊙ [u,w]` restricted to
/// degree zero, as a subspace of the degree-zero symmetric square.
fn t_image(alg: &GradedLieAlgebra, nonzero_only: bool) -> (Vec<(usize, usize)>, Subspace) {
    let sym = sym2_basis(alg, nonzero_only);
    let index: BTreeMap<(usize, usize), usize> =
        sym.iter().enumerate().map(|(p, &t)| (t, p)).collect();
    let n = alg.dim();
    let mut vecs = Vec::new();
    // domain triples (i <= j) tensor k with total weight zero
    for i in 0..n {
        if nonzero_only && alg.basis[i].weight.is_zero() {
            continue;
        }
        for j in i..n {
            if nonzero_only && alg.basis[j].weight.is_zero() {
                continue;
            }
            let wij = alg.basis[i].weight.add(&alg.basis[j].weight);
            for k in 0..n {
                if nonzero_only && alg.basis[k].weight.is_zero() {
                    continue;
                }
                if !wij.add(&alg.basis[k].weight).is_zero() {
                    continue;
                }
                let mut v = vec![Rational::zero(); sym.len()];
                let mut nonzero = false;
                // u ⊙ [v,w]
                for (t, c) in alg.bracket_basis(j, k) {
                    let key = if i <= t { (i, t) } else { (t, i) };
                    if let Some(&p) = index.get(&key) {
                        v[p] = &v[p] + &c;
                        nonzero = true;
                    }
                }
                // v ⊙ [u,w]
                for (t, c) in alg.bracket_basis(i, k) {
                    let key = if j <= t { (j, t) } else { (t, j) };
                    if let Some(&p) = index.get(&key) {
                        v[p] = &v[p] + &c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    vecs.push(v);
                }
            }
        }
    }
    (sym.clone(), Subspace::span(sym.len(), &vecs))
}

/// Degree-zero Killing module `coker(T)_0` and its tame variant.
pub fn killing_degree_zero(alg: &GradedLieAlgebra) -> KillingReport {
    let (sym, image) = t_image(alg, false);
    let (tame_sym, tame_image) = t_image(alg, true);
    let mut per_field_dims = BTreeMap::new();
    for fc in &alg.fields {
        let sub = alg.field_component_subalgebra(&fc.id);
        let (s, im) = t_image(&sub, false);
        per_field_dims.insert(fc.id.clone(), s.len() - im.dim());
    }
    KillingReport {
        dim_sym2_0: sym.len(),
        dim_t_image_0: image.dim(),
        dim_kill_0: sym.len() - image.dim(),
        dim_kill_tame_0: tame_sym.len() - tame_image.dim(),
        per_field_dims,
    }
}

/// Laurent polynomial over the rationals with finite support.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut p = LaurentPoly::new();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.coeffs.iter()
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// The pairing `F(sum x_i t^i, sum y_j t^j) = sum_k k x_k y_{-k}`.
///
/// It is bilinear, alternating, kills all cyclic elements
/// `uv ^ w + vw ^ u + wu ^ v`, and takes the value 1 on `t ^ t^{-1}`,
/// which is what detects nontrivial first cyclic homology of a
/// transcendental extension.
pub fn hc1_pairing(f: &LaurentPoly, g: &LaurentPoly) -> Rational {
    let mut sum = Rational::zero();
    for (k, fk) in f.terms() {
        let gk = g.coeff(-k);
        if !gk.is_zero() {
            sum += crate::rat::rat(*k) * fk * gk;
        }
    }
    sum
}
