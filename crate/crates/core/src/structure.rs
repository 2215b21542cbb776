//! Radicals, nilpotency indices and the Jordan-Chevalley splitting.

use num::Zero;
use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::lifting::{newton_correction, newton_iteration};
use crate::matrix::{kernel, QMatrix};
use crate::poly::squarefree_part;
use crate::rational::Rational;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    /// Powers of the ideal stopped shrinking at a nonzero subspace.
    #[error("ideal is not nilpotent: its powers stabilize at dimension {}", stable.dim())]
    NotNilpotent { stable: Subspace },
    #[error("radical verification failed: {0}")]
    Verification(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalReport {
    pub radical: Subspace,
    /// Least `nu` with `rad^nu = 0`.
    pub nilpotency_index: usize,
    pub is_semisimple: bool,
}

/// Kernel of `G[i][j] = tr(L_{e_i e_j})`.
fn trace_form_kernel(a: &Algebra) -> Subspace {
    let n = a.dim();
    let traces: Vec<Rational> = (0..n).map(|k| a.left_trace(&a.basis_element(k))).collect();
    let mut g = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = a.table()[i][j]
                .iter()
                .zip(&traces)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, t)| c * t)
                .sum();
        }
    }
    kernel(&g)
}

/// Radical of `A` as the kernel of the trace form `(x, y) -> tr(L_{xy})`.
///
/// In characteristic 0 an element `x` lies in the radical iff
/// `tr(L_{x e_j}) = 0` for every basis element. The answer is checked: it
/// must be a nilpotent two-sided ideal with a semisimple quotient.
pub fn radical(a: &Algebra) -> Result<RadicalReport, StructureError> {
    let rad = trace_form_kernel(a);
    if !a.is_two_sided_ideal(&rad) {
        return Err(StructureError::Verification(
            "trace-form kernel is not an ideal",
        ));
    }
    let nu = nilpotency_index(a, &rad)
        .map_err(|_| StructureError::Verification("trace-form kernel is not nilpotent"))?;
    if !rad.is_zero() {
        let (q, _) = a
            .quotient(&rad)
            .map_err(|_| StructureError::Verification("quotient by the radical failed"))?;
        if !trace_form_kernel(&q).is_zero() {
            return Err(StructureError::Verification(
                "quotient by the radical is not semisimple",
            ));
        }
    }
    Ok(RadicalReport {
        is_semisimple: rad.is_zero(),
        radical: rad,
        nilpotency_index: nu,
    })
}

/// Least `nu` with `I^nu = 0`; the zero ideal has index 1.
pub fn nilpotency_index(a: &Algebra, ideal: &Subspace) -> Result<usize, StructureError> {
    if !a.is_two_sided_ideal(ideal) {
        return Err(StructureError::NotAnIdeal);
    }
    let mut power = ideal.clone();
    let mut nu = 1;
    while !power.is_zero() {
        let next = a.subspace_product(&power, ideal);
        if next.dim() == power.dim() {
            return Err(StructureError::NotNilpotent { stable: power });
        }
        power = next;
        nu += 1;
    }
    Ok(nu)
}

/// `b = s + n` with `s` a root of the square-free part of `mu_b`, `n`
/// nilpotent, and both polynomials in `b`.
///
/// `s` is the Newton lift of `b` to a root of `g = sqfree(mu_b)` inside
/// `Q[b]`, where `g(b)` is nilpotent.
pub fn jordan_chevalley(a: &Algebra, b: &Element) -> (Element, Element) {
    let mu = a.minimal_polynomial(b);
    let g = squarefree_part(&mu).expect("minimal polynomial is nonzero");
    let h = newton_correction(&g).expect("square-free part is separable");
    let run = newton_iteration(a, &g, &h, b, a.dim() + 1)
        .expect("Newton iteration converges on a nilpotent residue");
    let s = run.iterates.last().expect("nonempty").clone();
    let n = b - &s;
    assert!(a.eval_poly(&g, &s).is_zero());
    assert!(a.commute(&s, &n));
    assert!(
        a.nilpotency_of(&n).is_some(),
        "nilpotent part is not nilpotent"
    );
    (s, n)
}
