//! Univariate polynomials over the rationals.

mod parse;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::QMatrix;
use crate::rational::Rational;

pub use parse::{parse_poly, PolyParseError};
pub use sturm::{sturm_count, sturm_sequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `X - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn divmod(&self, g: &Poly) -> Result<(Poly, Poly), PolyError> {
        let gd = g.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = g.coeffs[gd].recip();
        let mut r = self.coeffs.clone();
        let Some(fd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if fd < gd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); fd - gd + 1];
        for k in (0..=fd - gd).rev() {
            let c = &r[k + gd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                if !gc.is_zero() {
                    r[k + j] -= &c * gc;
                }
            }
            q[k] = c;
        }
        r.truncate(gd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divmod(g)?.1)
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn div_exact(&self, g: &Poly) -> Poly {
        let (q, r) = self.divmod(g).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, f: &Poly) -> Result<bool, PolyError> {
        Ok(f.rem(self)?.is_zero())
    }

    /// Composition `self(inner(X))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }
}

/// Monic gcd with Bezout cofactors: `u f + v g = d`.
pub fn egcd(f: &Poly, g: &Poly) -> Result<(Poly, Poly, Poly), PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = r0.leading().expect("nonzero remainder").recip();
    let (d, u, v) = (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv));
    assert_eq!(&(&u * f) + &(&v * g), d, "Bezout identity failed");
    Ok((d, u, v))
}

pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly, PolyError> {
    Ok(egcd(f, g)?.0)
}

/// `gcd(f, f') = 1`. Over a field of characteristic zero this is the same as
/// having no repeated root in a splitting field.
pub fn is_separable(f: &Poly) -> Result<bool, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(gcd(f, &f.derivative())?.is_constant())
}

/// Yun's square-free decomposition: monic `(a_i, i)` pairs with
/// `monic(f) = prod a_i^i`, each `a_i` square-free and pairwise coprime.
/// Trivial factors are omitted.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let f = f.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = f.div_exact(&a0);
    let c = df.div_exact(&a0);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        b = b.div_exact(&a);
        let c = d.div_exact(&a);
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Monic product of the distinct irreducible factors of `f`.
pub fn squarefree_part(f: &Poly) -> Result<Poly, PolyError> {
    Ok(squarefree_decomposition(f)?
        .into_iter()
        .fold(Poly::one(), |acc, (a, _)| &acc * &a))
}

/// First linear dependence among `v0, step(v0), step(step(v0)), ...`,
/// returned as the monic annihilating polynomial.
///
/// Each new vector is reduced against the earlier ones as it arrives, and
/// the next step is applied to the reduced vector `p_k(step) v0`, whose
/// polynomial is monic of degree `k`.
pub(crate) fn krylov_dependence<F>(v0: Vec<Rational>, max_degree: usize, mut step: F) -> Poly
where
    F: FnMut(&[Rational]) -> Vec<Rational>,
{
    // (pivot, reduced vector scaled to pivot entry 1, its polynomial)
    let mut echelon: Vec<(usize, Vec<Rational>, Poly)> = Vec::new();
    let mut current = (v0, Poly::one());
    for _ in 0..=max_degree {
        let (mut v, mut p) = current;
        for (pivot, r, q) in &echelon {
            let c = v[*pivot].clone();
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &c * y;
                }
                p = &p - &q.scale(&c);
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return p.monic();
        };
        let inv = v[pivot].recip();
        let r: Vec<Rational> = v.iter().map(|x| x * &inv).collect();
        let q = p.scale(&inv);
        let next = (step(&v), &Poly::x() * &p);
        echelon.push((pivot, r, q));
        current = next;
    }
    unreachable!("Cayley-Hamilton bounds the degree by the dimension")
}

/// Evaluates `p` at a square matrix.
pub fn eval_at_matrix(p: &Poly, m: &QMatrix) -> Result<QMatrix, PolyError> {
    if !m.is_square() {
        return Err(PolyError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut acc = QMatrix::zeros(n, n);
    for c in p.coeffs.iter().rev() {
        acc = acc.mul(m).expect("square");
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    Ok(acc)
}

/// Minimal polynomial of a square matrix from the first dependence among
/// `I, M, M^2, ...`; verified to annihilate `m`.
pub fn minimal_polynomial(m: &QMatrix) -> Result<Poly, PolyError> {
    if !m.is_square() {
        return Err(PolyError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let start = QMatrix::identity(n).entries().to_vec();
    let mu = krylov_dependence(start, n, |flat| {
        let prev = QMatrix::from_vec(n, n, flat.to_vec()).expect("n*n entries");
        prev.mul(m).expect("square").entries().to_vec()
    });
    assert!(
        eval_at_matrix(&mu, m)?.is_zero(),
        "minimal polynomial check failed"
    );
    Ok(mu)
}

/// `det(X I - M)` by the Faddeev-LeVerrier recurrence (characteristic 0).
pub fn characteristic_polynomial(m: &QMatrix) -> Result<Poly, PolyError> {
    if !m.is_square() {
        return Err(PolyError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = QMatrix::zeros(n, n);
    for k in 1..=n {
        acc = m.mul(&acc).expect("square");
        for i in 0..n {
            acc[(i, i)] += &coeffs[n - k + 1];
        }
        let t = m.mul(&acc).expect("square").trace();
        coeffs[n - k] = -t / Rational::from_integer(k.into());
    }
    Ok(Poly::new(coeffs))
}

impl fmt::Display for Poly {
    /// Renders in the same grammar accepted by [`parse_poly`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    // A bare leading '-X' is not in the grammar.
                    write_term(f, c, i, true)?;
                } else {
                    write_term(f, &mag, i, false)?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
                write_term(f, &mag, i, false)?;
            }
        }
        Ok(())
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    power: usize,
    force_coeff: bool,
) -> fmt::Result {
    let mono = match power {
        0 => None,
        1 => Some("X".to_string()),
        p => Some(format!("X^{p}")),
    };
    match mono {
        None => write!(f, "{c}"),
        Some(m) if c.is_one() && !force_coeff => write!(f, "{m}"),
        Some(m) => write!(f, "{c}*{m}"),
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
