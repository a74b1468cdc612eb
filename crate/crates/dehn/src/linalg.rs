//! Exact linear algebra over the rationals.
//!
//! Dense matrices with [`Rational`] entries and plain Gaussian
//! elimination. Pivoting is leftmost-column first, smallest-row on ties,
//! so every echelon form, rank, kernel basis, and quotient computation is
//! deterministic and reproducible across runs.

use crate::rat::Rational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("subspace is not contained in the ambient span")]
    SubspaceNotContained,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rational>,
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::rat::format_rational(self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "incompatible shapes");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Leftmost pivot, smallest row index on ties; pivots scaled to 1 and
    /// cleared above and below.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0usize;
        for col in 0..m.cols {
            if next_row >= m.rows {
                break;
            }
            let Some(pr) = (next_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pr != next_row {
                for j in 0..m.cols {
                    let a = m.get(pr, j).clone();
                    let b = m.get(next_row, j).clone();
                    m.set(pr, j, b);
                    m.set(next_row, j, a);
                }
            }
            let inv = m.get(next_row, col).clone().recip();
            for j in col..m.cols {
                let v = m.get(next_row, j) * &inv;
                m.set(next_row, j, v);
            }
            for r in 0..m.rows {
                if r != next_row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &f * m.get(next_row, j);
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        (m, pivots)
    }

    /// Rank over the rationals, exact.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : m v = 0}`.
    ///
    /// One vector per free column, ordered by free-column index, each
    /// scaled so its first nonzero coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            normalize_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Solves `self x = rhs` exactly; `None` when inconsistent. Free
    /// variables, if any, are set to zero, so the solution is canonical.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, rhs.len(), "rhs length mismatch");
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for (i, r) in rhs.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, r.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = RationalMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = RationalMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Scales a vector so its first nonzero coordinate is 1.
pub fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|e| !e.is_zero()).cloned() {
        let inv = lead.recip();
        for e in v.iter_mut() {
            *e = &*e * &inv;
        }
    }
}

/// A linear subspace of `Q^n` held as a canonical (RREF) basis.
///
/// Two subspaces are equal as sets iff their `Subspace` values compare
/// equal, which is what makes report output reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    /// RREF rows, nonzero, pivots 1.
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = RationalMatrix::from_rows(vectors.to_vec());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace {
            ambient_dim,
            basis: rows,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Subspace::span(self.ambient_dim, &rows).dim() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &rows)
    }

    /// A deterministic complement-coordinate description of the quotient
    /// `self / sub`: returns representative vectors of `self` spanning a
    /// complement of `sub` inside `self`.
    pub fn quotient_representatives(
        &self,
        sub: &Subspace,
    ) -> Result<Vec<Vec<Rational>>, LinalgError> {
        if !self.contains_subspace(sub) {
            return Err(LinalgError::SubspaceNotContained);
        }
        let mut reps = Vec::new();
        let mut acc = sub.clone();
        for v in &self.basis {
            if !acc.contains(v) {
                reps.push(v.clone());
                let mut rows = acc.basis.clone();
                rows.push(v.clone());
                acc = Subspace::span(self.ambient_dim, &rows);
            }
        }
        Ok(reps)
    }
}

/// `dim span(ambient) - dim span(sub)`, after checking containment.
pub fn quotient_dim(
    sub: &[Vec<Rational>],
    ambient: &[Vec<Rational>],
) -> Result<usize, LinalgError> {
    let n = ambient
        .first()
        .or_else(|| sub.first())
        .map(|v| v.len())
        .unwrap_or(0);
    let amb = Subspace::span(n, ambient);
    let s = Subspace::span(n, sub);
    if amb.ambient_dim() != s.ambient_dim() {
        return Err(LinalgError::DimensionMismatch(format!(
            "ambient {} vs sub {}",
            amb.ambient_dim(),
            s.ambient_dim()
        )));
    }
    if !amb.contains_subspace(&s) {
        return Err(LinalgError::SubspaceNotContained);
    }
    Ok(amb.dim() - s.dim())
}
