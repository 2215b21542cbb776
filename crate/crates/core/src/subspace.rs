//! Subspaces of `Q^n` in canonical reduced row-echelon form.

use num::Zero;

use crate::matrix::{rref, LinalgError, QMatrix};
use crate::rational::Rational;

/// A linear subspace of `Q^ambient_dim`.
///
/// The basis is stored in reduced row-echelon form with zero rows removed, so
/// two equal subspaces always have identical representations and `==` is
/// subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: QMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: QMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: QMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        let m = QMatrix::from_rows(ambient_dim, rows)?;
        Ok(Self::from_matrix(&m))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &QMatrix) -> Self {
        let (r, rank, pivots) = rref(m);
        let rows = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: QMatrix::from_rows(m.cols(), rows).expect("rows have matrix width"),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not covered by a pivot; the corresponding unit vectors span
    /// a complement of the subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_len(&self, n: usize) -> Result<(), LinalgError> {
        if n != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo the subspace: the pivot
    /// coordinates of the result are zero.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        self.check_len(v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, b) in out.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *o -= &c * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Coefficients of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient_dim)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_len(other.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient_dim)?;
        // Solve sum_i a_i s_i - sum_j b_j o_j = 0 for (a, b).
        let mut columns = self.basis_vectors();
        columns.extend(
            other
                .basis_vectors()
                .into_iter()
                .map(|v| v.into_iter().map(|x| -x).collect()),
        );
        let system = QMatrix::from_columns(self.ambient_dim, &columns)?;
        let null = crate::matrix::kernel(&system);
        let vectors = null.basis_vectors().into_iter().map(|coeffs| {
            let mut v = vec![Rational::zero(); self.ambient_dim];
            for (c, row) in coeffs.iter().zip(self.basis_vectors()) {
                for (x, y) in v.iter_mut().zip(row) {
                    *x += c * y;
                }
            }
            v
        });
        Self::span(self.ambient_dim, vectors)
    }
}
