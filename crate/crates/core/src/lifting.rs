//! Lifting roots of polynomials modulo nil ideals.
//!
//! Every lift here runs through one Newton iteration
//! `a <- a - h(a) f(a)`, where `g f + h f' = 1`. Since `a` and `h(a) f(a)`
//! commute, `f` of the new iterate is `k(a) f(a)^2`, so the residue moves
//! from `I^(2^k)` to `I^(2^(k+1))` and the iteration stops after at most
//! `ceil(log2 nu)` steps when `I^nu = 0`.

use num::{One, Zero};
use thiserror::Error;

use crate::algebra::{matrix_unit_name, Algebra, AlgebraError, CatalogSpec, Element};
use crate::matrix::{solve_linear, QMatrix};
use crate::poly::{egcd, is_separable, Poly};
use crate::rational::{int, Rational};
use crate::structure::{nilpotency_index, StructureError};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("polynomial is not separable: gcd(f, f') = {gcd}")]
    NotSeparable { gcd: Poly },
    #[error("f(b) = {residue:?} does not lie in the ideal")]
    ResidueNotInIdeal { residue: Element },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the zero polynomial has no lifting problem")]
    ZeroPolynomial,
    #[error("beta must be nonzero")]
    BetaZero,
    #[error("root degree m must be positive")]
    ZeroDegree,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    pub lifted: Element,
    /// Number of nonzero coordinates of `f(a_k)` for each iterate, starting
    /// with `f(b)` and ending with `0`.
    pub residual_path: Vec<usize>,
    pub iterations: usize,
    /// `a_0 = b, a_1, ..., a_k = lifted`.
    pub iterates: Vec<Element>,
    /// Nilpotency index of the ideal.
    pub nilpotency_index: usize,
}

pub(crate) struct NewtonRun {
    pub iterates: Vec<Element>,
    pub residues: Vec<Element>,
}

/// `h` with `g f + h f' = 1`, or the gcd when `f` is not separable.
pub(crate) fn newton_correction(f: &Poly) -> Result<Poly, LiftError> {
    if f.is_zero() {
        return Err(LiftError::ZeroPolynomial);
    }
    let (d, _, h) = egcd(f, &f.derivative()).expect("f is nonzero");
    if !d.is_constant() {
        return Err(LiftError::NotSeparable { gcd: d });
    }
    Ok(h)
}

/// Runs `a <- a - h(a) f(a)` from `b` until `f(a) = 0`; `None` if that takes
/// more than `cap` steps.
pub(crate) fn newton_iteration(
    alg: &Algebra,
    f: &Poly,
    h: &Poly,
    b: &Element,
    cap: usize,
) -> Option<NewtonRun> {
    let mut iterates = vec![b.clone()];
    let mut residues = vec![alg.eval_poly(f, b)];
    while !residues.last().expect("nonempty").is_zero() {
        if iterates.len() > cap {
            return None;
        }
        let a = iterates.last().expect("nonempty");
        let r = residues.last().expect("nonempty");
        let next = a - &alg.mul(&alg.eval_poly(h, a), r);
        residues.push(alg.eval_poly(f, &next));
        iterates.push(next);
    }
    Some(NewtonRun { iterates, residues })
}

pub(crate) fn ceil_log2(nu: usize) -> usize {
    assert!(nu >= 1);
    (usize::BITS - (nu - 1).leading_zeros()) as usize
}

fn in_ideal(ideal: &Subspace, a: &Element) -> bool {
    ideal.contains(a.coords()).expect("algebra dimension")
}

/// Lifts `b` to an exact root `a` of the separable `f` with `a - b` in the
/// nilpotent two-sided ideal `I`, given `f(b)` in `I`.
pub fn hensel_lift(
    alg: &Algebra,
    ideal: &Subspace,
    b: &Element,
    f: &Poly,
) -> Result<LiftResult, LiftError> {
    alg.check(b)?;
    let h = newton_correction(f)?;
    if ideal.ambient_dim() != alg.dim() {
        return Err(StructureError::NotAnIdeal.into());
    }
    let nu = nilpotency_index(alg, ideal)?;
    let residue = alg.eval_poly(f, b);
    if !in_ideal(ideal, &residue) {
        return Err(LiftError::ResidueNotInIdeal { residue });
    }
    let bound = ceil_log2(nu);
    let run = newton_iteration(alg, f, &h, b, alg.dim() + bound + 1)
        .expect("residue lies in a nilpotent ideal, so the iteration terminates");
    let iterations = run.iterates.len() - 1;
    assert!(
        iterations <= bound,
        "{iterations} Newton steps exceed ceil(log2 {nu}) = {bound}"
    );
    let lifted = run.iterates.last().expect("nonempty").clone();
    assert!(alg.eval_poly(f, &lifted).is_zero());
    assert!(in_ideal(ideal, &(&lifted - b)));
    assert!(alg.commute(&lifted, b));
    Ok(LiftResult {
        lifted,
        residual_path: run.residues.iter().map(Element::support).collect(),
        iterations,
        iterates: run.iterates,
        nilpotency_index: nu,
    })
}

/// Iterates of `c <- 3c^2 - 2c^3` from `b` until `c^2 = c`.
///
/// This is the Newton iteration for `X^2 - X`; every iterate is checked
/// against the closed form.
pub fn idempotent_iterates(
    alg: &Algebra,
    ideal: &Subspace,
    b: &Element,
) -> Result<Vec<Element>, LiftError> {
    alg.check(b)?;
    let f = Poly::from_i64(&[0, -1, 1]);
    let nu = nilpotency_index(alg, ideal)?;
    let residue = alg.eval_poly(&f, b);
    if !in_ideal(ideal, &residue) {
        return Err(LiftError::ResidueNotInIdeal { residue });
    }
    let h = newton_correction(&f)?;
    let run = newton_iteration(alg, &f, &h, b, alg.dim() + ceil_log2(nu) + 1)
        .expect("residue lies in a nilpotent ideal");
    for w in run.iterates.windows(2) {
        let c = &w[0];
        let c2 = alg.square(c);
        let c3 = alg.mul(&c2, c);
        assert_eq!(w[1], &c2.scale(&int(3)) - &c3.scale(&int(2)), "3c^2 - 2c^3");
    }
    Ok(run.iterates)
}

/// Idempotent `e` with `e - b` in `I`, given `b^2 - b` in `I`.
pub fn lift_idempotent(alg: &Algebra, ideal: &Subspace, b: &Element) -> Result<Element, LiftError> {
    let iterates = idempotent_iterates(alg, ideal, b)?;
    let hensel = hensel_lift(alg, ideal, b, &Poly::from_i64(&[0, -1, 1]))?;
    assert_eq!(hensel.iterates, iterates);
    let e = iterates.last().expect("nonempty").clone();
    assert_eq!(alg.square(&e), e);
    Ok(e)
}

/// `C(r, n) = r (r - 1) ... (r - n + 1) / n!`.
pub fn generalized_binomial(r: &Rational, n: usize) -> Rational {
    let mut c = Rational::one();
    for k in 0..n {
        c = c * (r - int(k as i64)) / int(k as i64 + 1);
    }
    c
}

/// `a` with `a^m = beta` and `a - b` in `I`, given `b^m - beta` in `I`.
///
/// With `w = b^m / beta - 1`, `a = (1 + w)^(-1/m) b` where the binomial
/// series stops at `w^(nu - 1)`.
pub fn lift_mth_root(
    alg: &Algebra,
    ideal: &Subspace,
    b: &Element,
    m: u32,
    beta: &Rational,
) -> Result<Element, LiftError> {
    alg.check(b)?;
    if beta.is_zero() {
        return Err(LiftError::BetaZero);
    }
    if m == 0 {
        return Err(LiftError::ZeroDegree);
    }
    let nu = nilpotency_index(alg, ideal)?;
    let bm = alg.pow(b, m);
    let residue = &bm - &alg.scalar(beta);
    if !in_ideal(ideal, &residue) {
        return Err(LiftError::ResidueNotInIdeal { residue });
    }
    let w = &bm.scale(&beta.recip()) - &alg.one();
    let exponent = Rational::new((-1).into(), m.into());
    let mut z = alg.zero();
    let mut wn = alg.one();
    for n in 0..nu {
        z = &z + &wn.scale(&generalized_binomial(&exponent, n));
        wn = alg.mul(&wn, &w);
    }
    let a = alg.mul(&z, b);
    assert_eq!(alg.pow(&a, m), alg.scalar(beta), "a^m = beta");
    assert!(in_ideal(ideal, &(&a - b)));
    Ok(a)
}

/// A presentation where `f(b)` lies in `I` but no `b + y` with `y` in `I`
/// is a root of `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoLiftWitness {
    pub algebra: Algebra,
    pub ideal: Subspace,
    pub element: Element,
    pub polynomial: Poly,
    /// `f(b)`, nonzero and in `I`.
    pub residue: Element,
    pub note: String,
}

impl NoLiftWitness {
    /// Checks `f(b)` in `I`, `f(b) != 0`, `I^2 = 0`, and `f(b + y) = f(b)` for
    /// every basis vector `y` of `I`.
    pub fn verify(&self) -> bool {
        let a = &self.algebra;
        let fb = a.eval_poly(&self.polynomial, &self.element);
        fb == self.residue
            && !fb.is_zero()
            && in_ideal(&self.ideal, &fb)
            && a.is_two_sided_ideal(&self.ideal)
            && a.subspace_product(&self.ideal, &self.ideal).is_zero()
            && a.subspace_elements(&self.ideal)
                .iter()
                .all(|y| a.eval_poly(&self.polynomial, &(&self.element + y)) == fb)
    }
}

/// Multiplicity of `r` as a root of `f`.
fn root_multiplicity(f: &Poly, r: &Rational) -> usize {
    let lin = Poly::linear_root(r);
    let mut g = f.clone();
    let mut k = 0;
    while !g.is_zero() && g.eval(r).is_zero() {
        g = g.divmod(&lin).expect("nonzero divisor").0;
        k += 1;
    }
    k
}

/// For `f` with a repeated rational root `beta` of multiplicity `k >= 2`:
/// `A = Tri(k + 1)`, `I = span{e_(1,k+1)}` and
/// `b = beta + e12 + e23 + ... + e_(k,k+1)`. Then `f(b)` is a nonzero
/// multiple of `e_(1,k+1)`, and since `I` annihilates every strictly upper
/// triangular matrix, `f(b + y) = f(b)` for all `y` in `I`.
pub fn inseparable_witness(f: &Poly, root: &Rational) -> Result<NoLiftWitness, LiftError> {
    if f.is_zero() {
        return Err(LiftError::ZeroPolynomial);
    }
    if is_separable(f).expect("f is nonzero") {
        return Err(LiftError::NotApplicable(format!("{f} is separable")));
    }
    let k = root_multiplicity(f, root);
    if k == 0 {
        return Err(LiftError::NotApplicable(format!(
            "{root} is not a root of {f}"
        )));
    }
    if k < 2 {
        return Err(LiftError::NotApplicable(format!(
            "{root} is a simple root of {f}"
        )));
    }
    let n = k + 1;
    let alg = CatalogSpec::triangular(n).build().expect("Tri(n) is valid");
    let unit = |r: usize, c: usize| alg.named(&matrix_unit_name(n, r, c)).expect("matrix unit");
    let mut b = alg.scalar(root);
    for i in 0..k {
        b = &b + &unit(i, i + 1);
    }
    let corner = unit(0, n - 1);
    let ideal = Subspace::span(alg.dim(), [corner.coords().to_vec()]).expect("dimension");
    let residue = alg.eval_poly(f, &b);
    let corner_index = corner
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("unit vector");
    let witness = NoLiftWitness {
        note: format!(
            "f(b) = {} e1{n} lies in I and is nonzero; I annihilates b - {root} and itself, \
             so f(b + y) = f(b) for every y in I",
            residue.coords()[corner_index]
        ),
        algebra: alg,
        ideal,
        element: b,
        polynomial: f.clone(),
        residue,
    };
    assert!(witness.verify(), "inseparable witness failed verification");
    Ok(witness)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// `a = x + u`, `b = y + v` with `a^2 = b^2 = -1` and `a o b = 0`.
    Feasible {
        u: Element,
        v: Element,
        a: Element,
        b: Element,
    },
    /// The affine system has no solution.
    Infeasible {
        equations: usize,
        unknowns: usize,
        coefficient_rank: usize,
        augmented_rank: usize,
    },
}

/// Decides whether `x, y` lift to an exact quaternion pair modulo an ideal
/// with `I^2 = 0`.
///
/// For `u, v` in `I` the products `u^2`, `v^2`, `u o v` vanish, so
/// `(x + u)^2 = -1`, `(y + v)^2 = -1`, `(x + u) o (y + v) = 0` become the
/// affine system
/// `x o u = -(x^2 + 1)`, `y o v = -(y^2 + 1)`, `u o y + x o v = -(x o y)`
/// in the coordinates of `u` and `v`.
pub fn quaternion_lift_feasibility(
    alg: &Algebra,
    ideal: &Subspace,
    x: &Element,
    y: &Element,
) -> Result<Feasibility, LiftError> {
    alg.check(x)?;
    alg.check(y)?;
    if ideal.ambient_dim() != alg.dim() || !alg.is_two_sided_ideal(ideal) {
        return Err(StructureError::NotAnIdeal.into());
    }
    if !alg.subspace_product(ideal, ideal).is_zero() {
        return Err(LiftError::Precondition(
            "the ideal does not square to zero".into(),
        ));
    }
    let one = alg.one();
    let x_def = &alg.square(x) + &one;
    let y_def = &alg.square(y) + &one;
    if !in_ideal(ideal, &x_def) || !in_ideal(ideal, &y_def) {
        return Err(LiftError::Precondition(
            "x^2 + 1 and y^2 + 1 must lie in the ideal".into(),
        ));
    }
    let n = alg.dim();
    let gens = alg.subspace_elements(ideal);
    let d = gens.len();
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(2 * d);
    for g in &gens {
        let mut col = alg.anticommutator(x, g).into_coords();
        col.extend(vec![Rational::zero(); n]);
        col.extend(alg.anticommutator(g, y).into_coords());
        columns.push(col);
    }
    for g in &gens {
        let mut col = vec![Rational::zero(); n];
        col.extend(alg.anticommutator(y, g).into_coords());
        col.extend(alg.anticommutator(x, g).into_coords());
        columns.push(col);
    }
    let rhs: Vec<Rational> = (-&x_def)
        .into_coords()
        .into_iter()
        .chain((-&y_def).into_coords())
        .chain((-&alg.anticommutator(x, y)).into_coords())
        .collect();
    let coeff = if d == 0 {
        QMatrix::zeros(3 * n, 0)
    } else {
        QMatrix::from_columns(3 * n, &columns).expect("3n rows")
    };
    match solve_linear(&coeff, &rhs).expect("shapes agree") {
        Some(sol) => {
            let combine = |coeffs: &[Rational]| {
                gens.iter()
                    .zip(coeffs)
                    .fold(alg.zero(), |acc, (g, c)| &acc + &g.scale(c))
            };
            let u = combine(&sol[..d]);
            let v = combine(&sol[d..]);
            let a = x + &u;
            let b = y + &v;
            let minus_one = alg.scalar(&int(-1));
            assert_eq!(alg.square(&a), minus_one, "(x + u)^2 = -1");
            assert_eq!(alg.square(&b), minus_one, "(y + v)^2 = -1");
            assert!(alg.anticommutator(&a, &b).is_zero(), "a o b = 0");
            assert!(in_ideal(ideal, &u) && in_ideal(ideal, &v));
            Ok(Feasibility::Feasible { u, v, a, b })
        }
        None => {
            let mut aug_cols = columns;
            aug_cols.push(rhs);
            let augmented = QMatrix::from_columns(3 * n, &aug_cols).expect("3n rows");
            let coefficient_rank = coeff.rank();
            let augmented_rank = augmented.rank();
            assert!(augmented_rank > coefficient_rank);
            Ok(Feasibility::Infeasible {
                equations: 3 * n,
                unknowns: 2 * d,
                coefficient_rank,
                augmented_rank,
            })
        }
    }
}

/// Checks that `x + u`, `y + v` is a quaternion pair: squares `-1`,
/// anticommuting, with `u, v` in `I`.
pub fn verify_quaternion_lift(
    alg: &Algebra,
    ideal: &Subspace,
    x: &Element,
    y: &Element,
    u: &Element,
    v: &Element,
) -> bool {
    let a = x + u;
    let b = y + v;
    let minus_one = alg.scalar(&int(-1));
    alg.square(&a) == minus_one
        && alg.square(&b) == minus_one
        && alg.anticommutator(&a, &b).is_zero()
        && in_ideal(ideal, u)
        && in_ideal(ideal, v)
}
