//! Finite-dimensional graded Lie algebras over a finite product of
//! local fields, given by rational structure constants.
//!
//! The grading lives in `Q^d` for a user-chosen `d` (the weight space).
//! Brackets are stored once per ordered pair `i < j`; antisymmetry and
//! zero diagonal are implicit. [`GradedLieAlgebra::validate`] checks the
//! axioms that are data (grading compatibility, field separation, Jacobi)
//! and reports violations instead of failing.

use crate::linalg::Subspace;
use crate::rat::{format_rational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One factor `K_j` of the ground ring `K = prod K_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldComponent {
    pub id: String,
    pub kind: FieldKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldKind {
    Archimedean,
    /// Non-archimedean with the given residue characteristic.
    NonArchimedean(u32),
}

impl FieldKind {
    pub fn is_archimedean(&self) -> bool {
        matches!(self, FieldKind::Archimedean)
    }
}

/// A point of the weight space `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub field: String,
    pub weight: Weight,
}

/// Sparse linear combination of basis elements.
pub type Combination = Vec<(usize, Rational)>;

/// The central object: a graded Lie algebra with rational structure
/// constants, each basis vector homogeneous and tagged with the field
/// component it lives in.
#[derive(Clone, Debug)]
pub struct GradedLieAlgebra {
    pub name: String,
    pub weight_dim: usize,
    /// Rank of the acting abelian group; consumed by the classifier only.
    pub a_rank: u32,
    pub fields: Vec<FieldComponent>,
    pub basis: Vec<BasisElement>,
    /// `(i, j) -> [e_i, e_j]` for `i < j`, absent meaning zero.
    brackets: BTreeMap<(usize, usize), Combination>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Grading {
        left: String,
        right: String,
        term: String,
        expected: Weight,
        found: Weight,
    },
    FieldSeparation {
        left: String,
        right: String,
    },
    Jacobi {
        triple: (String, String, String),
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Grading {
                left,
                right,
                term,
                expected,
                found,
            } => write!(
                f,
                "grading: [{left},{right}] has term {term} of weight {found}, expected {expected}"
            ),
            Violation::FieldSeparation { left, right } => write!(
                f,
                "field separation: [{left},{right}] is nonzero across distinct field components"
            ),
            Violation::Jacobi { triple } => write!(
                f,
                "jacobi: identity fails on ({}, {}, {})",
                triple.0, triple.1, triple.2
            ),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),
    #[error("unknown field component `{0}`")]
    UnknownField(String),
    #[error("duplicate basis name `{0}`")]
    DuplicateBasis(String),
    #[error("duplicate field id `{0}`")]
    DuplicateField(String),
    #[error("bracket [{0},{0}] listed with nonzero terms")]
    DiagonalBracket(String),
    #[error("bracket [{0},{1}] listed more than once")]
    DuplicateBracket(String, String),
    #[error("weight of `{0}` has {1} coordinates, expected {2}")]
    WeightLength(String, usize, usize),
    #[error("algebra is not nilpotent: descending central series stabilizes at dimension {0}")]
    NotNilpotent(usize),
}

impl GradedLieAlgebra {
    pub fn new(
        name: impl Into<String>,
        weight_dim: usize,
        a_rank: u32,
        fields: Vec<FieldComponent>,
        basis: Vec<BasisElement>,
    ) -> Result<Self, AlgebraError> {
        let mut seen = std::collections::BTreeSet::new();
        for fc in &fields {
            if !seen.insert(fc.id.clone()) {
                return Err(AlgebraError::DuplicateField(fc.id.clone()));
            }
        }
        let mut names = std::collections::BTreeSet::new();
        for b in &basis {
            if !names.insert(b.name.clone()) {
                return Err(AlgebraError::DuplicateBasis(b.name.clone()));
            }
            if !fields.iter().any(|f| f.id == b.field) {
                return Err(AlgebraError::UnknownField(b.field.clone()));
            }
            if b.weight.dim() != weight_dim {
                return Err(AlgebraError::WeightLength(
                    b.name.clone(),
                    b.weight.dim(),
                    weight_dim,
                ));
            }
        }
        Ok(GradedLieAlgebra {
            name: name.into(),
            weight_dim,
            a_rank,
            fields,
            basis,
            brackets: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.basis
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| AlgebraError::UnknownBasis(name.to_string()))
    }

    /// Installs `[left, right] = terms`; pairs may be given in either
    /// order and are normalized to `left index < right index`.
    pub fn set_bracket(
        &mut self,
        left: &str,
        right: &str,
        terms: Vec<(&str, Rational)>,
    ) -> Result<(), AlgebraError> {
        let li = self.index_of(left)?;
        let ri = self.index_of(right)?;
        let mut combo: Combination = Vec::new();
        for (name, coeff) in terms {
            let k = self.index_of(name)?;
            if !coeff.is_zero() {
                combo.push((k, coeff));
            }
        }
        self.set_bracket_indexed(li, ri, combo)
    }

    pub fn set_bracket_indexed(
        &mut self,
        li: usize,
        ri: usize,
        mut combo: Combination,
    ) -> Result<(), AlgebraError> {
        combo.retain(|(_, c)| !c.is_zero());
        combo.sort_by_key(|(k, _)| *k);
        if li == ri {
            if combo.is_empty() {
                return Ok(());
            }
            return Err(AlgebraError::DiagonalBracket(self.basis[li].name.clone()));
        }
        let (key, flip) = if li < ri {
            ((li, ri), false)
        } else {
            ((ri, li), true)
        };
        if self.brackets.contains_key(&key) {
            return Err(AlgebraError::DuplicateBracket(
                self.basis[key.0].name.clone(),
                self.basis[key.1].name.clone(),
            ));
        }
        if flip {
            for (_, c) in combo.iter_mut() {
                *c = -c.clone();
            }
        }
        if !combo.is_empty() {
            self.brackets.insert(key, combo);
        }
        Ok(())
    }

    /// `[e_i, e_j]` as a sparse combination, any order of `i, j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Combination {
        if i == j {
            return Vec::new();
        }
        let (key, flip) = if i < j {
            ((i, j), false)
        } else {
            ((j, i), true)
        };
        match self.brackets.get(&key) {
            None => Vec::new(),
            Some(c) if !flip => c.clone(),
            Some(c) => c.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    pub fn stored_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Combination)> {
        self.brackets.iter()
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vectors(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let mut out = vec![Rational::zero(); n];
        for (&(i, j), combo) in &self.brackets {
            // [e_i, e_j] contributes with coefficient x_i y_j - x_j y_i
            let coeff = &x[i] * &y[j] - &x[j] * &y[i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in combo {
                out[*k] = &out[*k] + &(&coeff * c);
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = num_traits::One::one();
        v
    }

    /// Checks grading compatibility, field separation, and the Jacobi
    /// identity on all basis pairs/triples. Violations are data.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (&(i, j), combo) in &self.brackets {
            let expected = self.basis[i].weight.add(&self.basis[j].weight);
            for (k, c) in combo {
                if c.is_zero() {
                    continue;
                }
                if self.basis[*k].weight != expected {
                    out.push(Violation::Grading {
                        left: self.basis[i].name.clone(),
                        right: self.basis[j].name.clone(),
                        term: self.basis[*k].name.clone(),
                        expected: expected.clone(),
                        found: self.basis[*k].weight.clone(),
                    });
                }
            }
            if self.basis[i].field != self.basis[j].field && !combo.is_empty() {
                out.push(Violation::FieldSeparation {
                    left: self.basis[i].name.clone(),
                    right: self.basis[j].name.clone(),
                });
            }
        }
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let t1 = self.bracket_vectors(&ei, &self.bracket_vectors(&ej, &ek));
                    let t2 = self.bracket_vectors(&ej, &self.bracket_vectors(&ek, &ei));
                    let t3 = self.bracket_vectors(&ek, &self.bracket_vectors(&ei, &ej));
                    let sum: Vec<Rational> = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    if sum.iter().any(|v| !v.is_zero()) {
                        out.push(Violation::Jacobi {
                            triple: (
                                self.basis[i].name.clone(),
                                self.basis[j].name.clone(),
                                self.basis[k].name.clone(),
                            ),
                        });
                    }
                }
            }
        }
        out
    }

    /// Indices of the basis elements of the given weight.
    pub fn graded_component(&self, weight: &Weight) -> Vec<usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, b)| &b.weight == weight)
            .map(|(i, _)| i)
            .collect()
    }

    /// Distinct weights, sorted.
    pub fn weight_support(&self) -> Vec<Weight> {
        let mut ws: Vec<Weight> = self.basis.iter().map(|b| b.weight.clone()).collect();
        ws.sort();
        ws.dedup();
        ws
    }

    /// Field components that contribute a basis vector of this weight.
    pub fn fields_of_weight(&self, weight: &Weight) -> Vec<String> {
        let mut ids: Vec<String> = self
            .basis
            .iter()
            .filter(|b| &b.weight == weight)
            .map(|b| b.field.clone())
            .collect();
        ids.sort();
        ids.dedup();
        ids
    }

    /// The span of `[g, S]` for a subspace `S`.
    pub fn bracket_with_algebra(&self, s: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim() {
            let ei = self.basis_vector(i);
            for v in s.basis() {
                let w = self.bracket_vectors(&ei, v);
                if w.iter().any(|c| !c.is_zero()) {
                    vecs.push(w);
                }
            }
        }
        Subspace::span(self.dim(), &vecs)
    }

    /// Descending central series `g^1 = g`, `g^{i+1} = [g, g^i]` with the
    /// stabilized term and nilpotency length.
    pub fn descending_central_series(&self) -> CentralSeriesReport {
        let mut terms = vec![Subspace::full(self.dim())];
        loop {
            let next = self.bracket_with_algebra(terms.last().unwrap());
            if next.dim() == terms.last().unwrap().dim() {
                // stabilized; drop the repeat unless it is the first step
                break;
            }
            terms.push(next);
            if terms.last().unwrap().dim() == 0 {
                break;
            }
        }
        let stable = terms.last().unwrap().clone();
        let nilpotency_length = if stable.dim() == 0 {
            Some(terms.len() - 1)
        } else {
            None
        };
        CentralSeriesReport {
            terms,
            stable_term: stable,
            nilpotency_length,
        }
    }

    /// The exponential radical `g^inf` (intersection of the series).
    pub fn exponential_radical(&self) -> Subspace {
        self.descending_central_series().stable_term
    }

    /// Weights of `g/[g,g]` with multiplicities and per-field tags,
    /// computed on graded complements of `[g,g]`.
    pub fn principal_weights(&self) -> Vec<PrincipalWeight> {
        let derived = self.derived_subalgebra();
        let mut out = Vec::new();
        for w in self.weight_support() {
            let comp = self.graded_component(&w);
            // derived is graded, so intersect by restricting its basis
            let derived_in_w: Vec<Vec<Rational>> = derived
                .basis()
                .iter()
                .filter(|v| {
                    v.iter()
                        .enumerate()
                        .all(|(i, c)| c.is_zero() || comp.contains(&i))
                })
                .cloned()
                .collect();
            let mult = comp.len() - Subspace::span(self.dim(), &derived_in_w).dim();
            if mult > 0 {
                let mut fields = Vec::new();
                for &i in &comp {
                    // a field is tagged if the component survives modulo the
                    // derived subalgebra in that field's block
                    if !fields.contains(&self.basis[i].field) {
                        fields.push(self.basis[i].field.clone());
                    }
                }
                fields.sort();
                out.push(PrincipalWeight {
                    weight: w,
                    multiplicity: mult,
                    fields,
                });
            }
        }
        out
    }

    /// `[g, g]` as a subspace.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut vecs = Vec::new();
        for combo in self.brackets.values() {
            let mut v = vec![Rational::zero(); self.dim()];
            for (k, c) in combo {
                v[*k] = c.clone();
            }
            vecs.push(v);
        }
        Subspace::span(self.dim(), &vecs)
    }

    /// Degree-zero component as a subspace.
    pub fn degree_zero_subspace(&self) -> Subspace {
        let zero = Weight::zero(self.weight_dim);
        let idx = self.graded_component(&zero);
        let vecs: Vec<Vec<Rational>> = idx.iter().map(|&i| self.basis_vector(i)).collect();
        Subspace::span(self.dim(), &vecs)
    }

    /// Span of all `[g_b, g_{-b}]` over nonzero weights `b` excluding
    /// the line through `excluded` (used for the 1-tame hierarchy).
    fn opposite_bracket_span(&self, excluded: Option<&Weight>) -> Subspace {
        let mut vecs = Vec::new();
        for w in self.weight_support() {
            if w.is_zero() {
                continue;
            }
            if let Some(ex) = excluded {
                if w == *ex || w == ex.neg() {
                    continue;
                }
            }
            let neg = w.neg();
            for &i in &self.graded_component(&w) {
                for &j in &self.graded_component(&neg) {
                    let v = self.bracket_basis(i, j);
                    if !v.is_empty() {
                        let mut vec = vec![Rational::zero(); self.dim()];
                        for (k, c) in v {
                            vec[k] = c;
                        }
                        vecs.push(vec);
                    }
                }
            }
        }
        Subspace::span(self.dim(), &vecs)
    }

    /// 1-tameness: `g_0 = sum_b [g_b, g_{-b}]`. On failure returns a
    /// degree-zero witness vector outside the bracket span.
    pub fn is_1_tame(&self) -> TamenessWitness {
        let g0 = self.degree_zero_subspace();
        let span = self.opposite_bracket_span(None);
        for v in g0.basis() {
            if !span.contains(v) {
                return TamenessWitness::No(v.clone());
            }
        }
        TamenessWitness::Yes
    }

    /// Doubly 1-tame: for every `a` in the weight space,
    /// `g_0 = sum_{b not in {0, a, -a}} [g_b, g_{-b}]`.
    ///
    /// Lines through no weight reduce the condition to the 1-tame span,
    /// so it suffices to test the 1-tame condition plus one `a` per
    /// weight line.
    pub fn is_doubly_1_tame(&self) -> DoublyTameResult {
        if let TamenessWitness::No(witness) = self.is_1_tame() {
            return DoublyTameResult::No {
                weight: Weight::zero(self.weight_dim),
                witness,
            };
        }
        let g0 = self.degree_zero_subspace();
        for a in self.weight_support() {
            if a.is_zero() {
                continue;
            }
            let span = self.opposite_bracket_span(Some(&a));
            for v in g0.basis() {
                if !span.contains(v) {
                    return DoublyTameResult::No {
                        weight: a,
                        witness: v.clone(),
                    };
                }
            }
        }
        DoublyTameResult::Yes
    }

    /// Smallest bracket-closed subspace containing `seed`.
    pub fn subalgebra_generated(&self, seed: &[Vec<Rational>]) -> Subspace {
        let mut cur = Subspace::span(self.dim(), seed);
        loop {
            let mut vecs: Vec<Vec<Rational>> = cur.basis().to_vec();
            for a in cur.basis() {
                for b in cur.basis() {
                    let w = self.bracket_vectors(a, b);
                    if w.iter().any(|c| !c.is_zero()) {
                        vecs.push(w);
                    }
                }
            }
            let next = Subspace::span(self.dim(), &vecs);
            if next.dim() == cur.dim() {
                return next;
            }
            cur = next;
        }
    }

    /// Restricts the algebra to a bracket-closed graded subspace spanned
    /// by homogeneous vectors, producing a standalone algebra (used for
    /// exponential radicals and per-field components).
    pub fn graded_subalgebra(&self, name: &str, sub: &Subspace) -> Option<GradedLieAlgebra> {
        // each basis vector must be homogeneous
        let mut new_basis = Vec::new();
        let mut reps: Vec<Vec<Rational>> = Vec::new();
        for (n, v) in sub.basis().iter().enumerate() {
            let mut weight: Option<&Weight> = None;
            let mut field: Option<&str> = None;
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match weight {
                    None => {
                        weight = Some(&self.basis[i].weight);
                        field = Some(&self.basis[i].field);
                    }
                    Some(w) => {
                        if w != &self.basis[i].weight || field != Some(&self.basis[i].field) {
                            return None;
                        }
                    }
                }
            }
            let weight = weight?.clone();
            new_basis.push(BasisElement {
                name: format!("s{n}"),
                field: field.unwrap().to_string(),
                weight,
            });
            reps.push(v.clone());
        }
        // prefer original names when the subspace basis is a subset of the
        // ambient basis vectors
        for (n, v) in reps.iter().enumerate() {
            let support: Vec<usize> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, _)| i)
                .collect();
            if support.len() == 1 && v[support[0]] == num_traits::One::one() {
                new_basis[n].name = self.basis[support[0]].name.clone();
            }
        }
        let mut alg = GradedLieAlgebra::new(
            name,
            self.weight_dim,
            self.a_rank,
            self.fields.clone(),
            new_basis,
        )
        .ok()?;
        // express brackets of representatives in the representative basis
        let m = crate::linalg::RationalMatrix::from_rows(reps.clone()).transpose();
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                let w = self.bracket_vectors(&reps[i], &reps[j]);
                if w.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let coords = solve_coordinates(&m, &w)?;
                let combo: Combination = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                alg.set_bracket_indexed(i, j, combo).ok()?;
            }
        }
        Some(alg)
    }

    /// The subalgebra spanned by the basis vectors of one field component.
    pub fn field_component_subalgebra(&self, field_id: &str) -> GradedLieAlgebra {
        let idx: Vec<usize> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, b)| b.field == field_id)
            .map(|(i, _)| i)
            .collect();
        let vecs: Vec<Vec<Rational>> = idx.iter().map(|&i| self.basis_vector(i)).collect();
        let sub = Subspace::span(self.dim(), &vecs);
        self.graded_subalgebra(&format!("{}@{}", self.name, field_id), &sub)
            .expect("field component is a graded subalgebra")
    }

    /// Applies an invertible weight-block-diagonal basis change given by
    /// `p` (new basis in terms of old: row `a` holds the coordinates of
    /// the new vector `f_a`). Returns `None` when `p` is singular or not
    /// block-diagonal with respect to the grading.
    pub fn apply_graded_basis_change(
        &self,
        p: &crate::linalg::RationalMatrix,
    ) -> Option<GradedLieAlgebra> {
        let n = self.dim();
        if p.rows != n || p.cols != n || p.rank() != n {
            return None;
        }
        for a in 0..n {
            for b in 0..n {
                if !p.get(a, b).is_zero() && self.basis[a].weight != self.basis[b].weight {
                    return None;
                }
            }
        }
        let cols =
            crate::linalg::RationalMatrix::from_rows((0..n).map(|a| p.row(a)).collect::<Vec<_>>())
                .transpose();
        let mut alg = GradedLieAlgebra::new(
            format!("{}'", self.name),
            self.weight_dim,
            self.a_rank,
            self.fields.clone(),
            self.basis.clone(),
        )
        .ok()?;
        for a in 0..n {
            for b in (a + 1)..n {
                let w = self.bracket_vectors(&p.row(a), &p.row(b));
                if w.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let coords = solve_coordinates(&cols, &w)?;
                let combo: Combination = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                alg.set_bracket_indexed(a, b, combo).ok()?;
            }
        }
        Some(alg)
    }

    /// Scales every weight by a positive rational (the convex geometry of
    /// the weight configuration is unchanged).
    pub fn scale_weights(&self, c: &Rational) -> GradedLieAlgebra {
        assert!(c > &Rational::zero(), "scale must be positive");
        let mut alg = self.clone();
        for b in alg.basis.iter_mut() {
            b.weight = b.weight.scale(c);
        }
        alg
    }
}

/// Solves `m x = v` where the columns of `m` are independent.
fn solve_coordinates(m: &crate::linalg::RationalMatrix, v: &[Rational]) -> Option<Vec<Rational>> {
    m.solve(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TamenessWitness {
    Yes,
    /// A degree-zero vector not spanned by opposite-weight brackets.
    No(Vec<Rational>),
}

impl TamenessWitness {
    pub fn holds(&self) -> bool {
        matches!(self, TamenessWitness::Yes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DoublyTameResult {
    Yes,
    No {
        weight: Weight,
        witness: Vec<Rational>,
    },
}

impl DoublyTameResult {
    pub fn holds(&self) -> bool {
        matches!(self, DoublyTameResult::Yes)
    }
}

#[derive(Clone, Debug)]
pub struct PrincipalWeight {
    pub weight: Weight,
    pub multiplicity: usize,
    pub fields: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CentralSeriesReport {
    /// `g^1 = g ⊇ g^2 ⊇ ...` until stabilization.
    pub terms: Vec<Subspace>,
    pub stable_term: Subspace,
    /// `Some(s)` when `g^{s+1} = 0`.
    pub nilpotency_length: Option<usize>,
}
