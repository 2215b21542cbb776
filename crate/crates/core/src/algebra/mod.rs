//! Finite-dimensional associative unital algebras given by structure
//! constants.
//!
//! An [`Algebra`] over `Q` with basis `e_0, ..., e_{n-1}` is described by its
//! multiplication table `e_i e_j = sum_k c[i][j][k] e_k` and the coordinates
//! of its unit. Elements are plain coordinate vectors ([`Element`]); every
//! product goes through the algebra that owns the table.
//!
//! [`Algebra::validate`] checks associativity on all `n^3` basis triples and
//! the unit law on all basis elements. It costs `O(n^3)` triples, each a
//! sparse product, so it is meant for the desk-scale algebras used here
//! (`n <= 64`).

mod catalog;
mod constructions;
mod format;
mod ideals;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};
use thiserror::Error;

use crate::matrix::{solve_linear, QMatrix};
use crate::poly::{krylov_dependence, Poly};
use crate::rational::Rational;

pub use catalog::{CatalogError, CatalogSpec};
pub(crate) use constructions::matrix_unit_name;
pub use format::{AlgebraFile, FormatError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("dimension must be at least 1")]
    EmptyBasis,
    #[error("{what}: expected length {expected}, found {found}")]
    Length {
        what: String,
        expected: usize,
        found: usize,
    },
}

/// First failure found by [`Algebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("associativity fails on basis triple ({i}, {j}, {k}): (e_i e_j) e_k = {left:?}, e_i (e_j e_k) = {right:?}")]
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        left: Vec<Rational>,
        right: Vec<Rational>,
    },
    #[error("unit law fails on basis element {index} ({side} side): got {got:?}")]
    Unit {
        index: usize,
        side: Side,
        got: Vec<Rational>,
    },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element has {found} coordinates, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("quotient by the whole algebra has no unital presentation")]
    ImproperIdeal,
    #[error("change of basis matrix is singular or has the wrong size")]
    BadChangeOfBasis,
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// Coordinates of an algebra element in the owning algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element(Vec<Rational>);

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Element(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Element(coords.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element(self.0.iter().map(|x| x * c).collect())
    }

    /// Number of nonzero coordinates.
    pub fn support(&self) -> usize {
        self.0.iter().filter(|x| !x.is_zero()).count()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

/// Structure-constant presentation of an algebra.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    unit: Vec<Rational>,
    /// Dense table, `table[i][j][k]` = coefficient of `e_k` in `e_i e_j`.
    table: Vec<Vec<Vec<Rational>>>,
    /// Nonzero entries of `table[i][j]`, indexed by `i * n + j`.
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.basis == other.basis
            && self.unit == other.unit
            && self.table == other.table
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("basis", &self.basis)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    /// Builds a presentation, checking only the shape of the data. Use
    /// [`Algebra::validate`] for the algebra axioms.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        unit: Vec<Rational>,
        table: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self, ShapeError> {
        let n = basis.len();
        if n == 0 {
            return Err(ShapeError::EmptyBasis);
        }
        let len_err = |what: String, expected, found| ShapeError::Length {
            what,
            expected,
            found,
        };
        if unit.len() != n {
            return Err(len_err("unit".into(), n, unit.len()));
        }
        if table.len() != n {
            return Err(len_err("mult".into(), n, table.len()));
        }
        let mut sparse = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(len_err(format!("mult[{i}]"), n, row.len()));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != n {
                    return Err(len_err(format!("mult[{i}][{j}]"), n, v.len()));
                }
                sparse.push(
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect(),
                );
            }
        }
        Ok(Algebra {
            name: name.into(),
            basis,
            unit,
            table,
            sparse,
        })
    }

    /// Builds a presentation from a function giving `e_i e_j`, then validates.
    pub(crate) fn from_products<F>(
        name: impl Into<String>,
        basis: Vec<String>,
        unit: Vec<Rational>,
        mut product: F,
    ) -> Result<Self, AlgebraError>
    where
        F: FnMut(usize, usize) -> Vec<Rational>,
    {
        let n = basis.len();
        let table = (0..n)
            .map(|i| (0..n).map(|j| product(i, j)).collect())
            .collect();
        let alg = Algebra::new(name, basis, unit, table).map_err(ValidationError::from)?;
        alg.validate()?;
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn unit_coords(&self) -> &[Rational] {
        &self.unit
    }

    pub fn table(&self) -> &[Vec<Vec<Rational>>] {
        &self.table
    }

    /// Same unit and multiplication table, ignoring names.
    pub fn same_constants(&self, other: &Algebra) -> bool {
        self.unit == other.unit && self.table == other.table
    }

    /// Exhaustive check of associativity on basis triples and of the unit
    /// law on basis elements. Reports the first failure.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let n = self.dim();
        for i in 0..n {
            let ei = self.basis_element(i);
            let left = self.mul(&self.one(), &ei);
            if left != ei {
                return Err(ValidationError::Unit {
                    index: i,
                    side: Side::Left,
                    got: left.into_coords(),
                });
            }
            let right = self.mul(&ei, &self.one());
            if right != ei {
                return Err(ValidationError::Unit {
                    index: i,
                    side: Side::Right,
                    got: right.into_coords(),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let eij = Element(self.table[i][j].clone());
                for k in 0..n {
                    let left = self.mul_by_basis_right(&eij, k);
                    let ejk = Element(self.table[j][k].clone());
                    let right = self.mul_by_basis_left(i, &ejk);
                    if left != right {
                        return Err(ValidationError::Associativity {
                            i,
                            j,
                            k,
                            left: left.into_coords(),
                            right: right.into_coords(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check(&self, a: &Element) -> Result<(), AlgebraError> {
        if a.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: a.dim(),
            });
        }
        Ok(())
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element, AlgebraError> {
        let e = Element(coords);
        self.check(&e)?;
        Ok(e)
    }

    pub fn zero(&self) -> Element {
        Element(vec![Rational::zero(); self.dim()])
    }

    pub fn one(&self) -> Element {
        Element(self.unit.clone())
    }

    pub fn scalar(&self, c: &Rational) -> Element {
        self.one().scale(c)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        Element(v)
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// Looks up a basis element by name.
    pub fn named(&self, name: &str) -> Option<Element> {
        self.basis
            .iter()
            .position(|b| b == name)
            .map(|i| self.basis_element(i))
    }

    /// `e_i * b`.
    fn mul_by_basis_left(&self, i: usize, b: &Element) -> Element {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (j, bj) in b.0.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for (k, c) in &self.sparse[i * n + j] {
                out[*k] += bj * c;
            }
        }
        Element(out)
    }

    /// `a * e_j`.
    fn mul_by_basis_right(&self, a: &Element, j: usize) -> Element {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, c) in &self.sparse[i * n + j] {
                out[*k] += ai * c;
            }
        }
        Element(out)
    }

    /// Product by bilinear extension of the structure constants.
    ///
    /// Panics if either element has the wrong dimension; see
    /// [`Algebra::try_mul`].
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.try_mul(a, b).expect("element dimension mismatch")
    }

    pub fn try_mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let s = &self.sparse[i * n + j];
                if s.is_empty() {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in s {
                    out[*k] += &ab * c;
                }
            }
        }
        Ok(Element(out))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        a + b
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        a - b
    }

    pub fn neg(&self, a: &Element) -> Element {
        -a
    }

    pub fn scalar_mul(&self, c: &Rational, a: &Element) -> Element {
        a.scale(c)
    }

    /// `a^e` by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, a: &Element, mut e: u32) -> Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn square(&self, a: &Element) -> Element {
        self.mul(a, a)
    }

    /// Anticommutator `ab + ba`.
    pub fn anticommutator(&self, a: &Element, b: &Element) -> Element {
        &self.mul(a, b) + &self.mul(b, a)
    }

    /// Commutator `ab - ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        &self.mul(a, b) - &self.mul(b, a)
    }

    /// `Some(c)` when `a = c * 1`.
    pub fn as_scalar(&self, a: &Element) -> Option<Rational> {
        let (k, u) = self.unit.iter().enumerate().find(|(_, u)| !u.is_zero())?;
        let c = &a.0[k] / u;
        (self.scalar(&c) == *a).then_some(c)
    }

    /// Matrices of `x -> a x` and `x -> x a` in the basis.
    pub fn regular_representation(&self, a: &Element) -> (QMatrix, QMatrix) {
        let n = self.dim();
        let left: Vec<Vec<Rational>> = (0..n).map(|j| self.mul_by_basis_right(a, j).0).collect();
        let right: Vec<Vec<Rational>> = (0..n).map(|i| self.mul_by_basis_left(i, a).0).collect();
        (
            QMatrix::from_columns(n, &left).expect("n columns of length n"),
            QMatrix::from_columns(n, &right).expect("n columns of length n"),
        )
    }

    pub fn left_matrix(&self, a: &Element) -> QMatrix {
        self.regular_representation(a).0
    }

    /// Matrix of `x -> a x + x a`.
    pub fn anticommutator_matrix(&self, a: &Element) -> QMatrix {
        let (l, r) = self.regular_representation(a);
        l.add(&r).expect("same shape")
    }

    /// Matrix of `x -> a x - x a`.
    pub fn commutator_matrix(&self, a: &Element) -> QMatrix {
        let (l, r) = self.regular_representation(a);
        l.sub(&r).expect("same shape")
    }

    /// Two-sided inverse, or `None` if `a` is not invertible.
    pub fn invert(&self, a: &Element) -> Option<Element> {
        let l = self.left_matrix(a);
        let x = Element(solve_linear(&l, &self.unit).expect("square system")?);
        let one = self.one();
        (self.mul(a, &x) == one && self.mul(&x, a) == one).then_some(x)
    }

    pub fn is_invertible(&self, a: &Element) -> bool {
        self.left_matrix(a).inverse().is_some()
    }

    /// Monic polynomial of least degree vanishing at `a`, from the first
    /// linear dependence among `1, a, a^2, ...`.
    pub fn minimal_polynomial(&self, a: &Element) -> Poly {
        let mu = krylov_dependence(self.unit.clone(), self.dim(), |v| {
            self.mul(&Element(v.to_vec()), a).0
        });
        assert!(
            self.eval_poly(&mu, a).is_zero(),
            "minimal polynomial does not annihilate its element"
        );
        mu
    }

    /// `f(a)` by Horner's rule, the constant term acting as a multiple of 1.
    pub fn eval_poly(&self, f: &Poly, a: &Element) -> Element {
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = &self.mul(&acc, a) + &self.scalar(c);
        }
        acc
    }

    /// Trace of `x -> a x`.
    pub fn left_trace(&self, a: &Element) -> Rational {
        let n = self.dim();
        a.0.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                c * (0..n)
                    .map(|m| self.table[k][m][m].clone())
                    .sum::<Rational>()
            })
            .sum()
    }

    /// Whether `a` and `b` commute.
    pub fn commute(&self, a: &Element, b: &Element) -> bool {
        self.commutator(a, b).is_zero()
    }

    /// Smallest `k` with `a^k = 0`, if `a` is nilpotent.
    pub fn nilpotency_of(&self, a: &Element) -> Option<u32> {
        let mut p = a.clone();
        for k in 1..=self.dim() as u32 + 1 {
            if p.is_zero() {
                return Some(k);
            }
            p = self.mul(&p, a);
        }
        None
    }
}
