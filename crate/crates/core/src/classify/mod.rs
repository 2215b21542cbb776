//! Witnesses and certificates for embeddings of `C` and `H` into `A (x) R`.
//!
//! Every search walks a fixed, seeded candidate order (basis elements, then
//! `e_i + e_j` and `e_i - e_j` for `i < j`, then random combinations with
//! coefficients in `-2..=2`) and stops at the first hit, so outcomes depend
//! only on the algebra, the budget and the seed. Whatever is returned has
//! been re-verified by exact arithmetic; a fruitless search reports
//! `Unknown` rather than guessing.

mod frobenius;
mod search;

use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::poly::{squarefree_part, sturm_count, Poly};
use crate::rational::{int, Rational};
use crate::structure::radical;
use crate::subspace::Subspace;

pub use frobenius::{frobenius_classify, Frobenius, NonDivisionEvidence};
pub use search::{
    find_anticommuting_pair, find_complex_witness, find_left_ideal_mod4_certificate,
    find_odd_left_ideal_certificate, find_quaternion_witness,
};

pub const DEFAULT_BUDGET: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Search {
    /// Maximum number of candidates examined.
    pub budget: usize,
    pub seed: u64,
}

impl Search {
    pub fn new(budget: usize, seed: u64) -> Self {
        Search { budget, seed }
    }
}

impl Default for Search {
    fn default() -> Self {
        Search {
            budget: DEFAULT_BUDGET,
            seed: 0,
        }
    }
}

/// Element whose minimal polynomial has no real root, so `a - t` is
/// invertible for every real `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexWitness {
    pub element: Element,
    pub minimal_polynomial: Poly,
    pub squarefree_part: Poly,
    pub sturm_sequence: Vec<Poly>,
    pub real_root_count: usize,
}

impl ComplexWitness {
    pub fn verify(&self, alg: &Algebra) -> bool {
        let mu = alg.minimal_polynomial(&self.element);
        mu == self.minimal_polynomial
            && squarefree_part(&mu).ok().as_ref() == Some(&self.squarefree_part)
            && sturm_count(&self.squarefree_part) == Ok(0)
            && self.real_root_count == 0
    }
}

/// `a^2 = -lambda`, `b^2 = -mu`, `a o b = 0` with `lambda, mu > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionWitness {
    pub a: Element,
    pub b: Element,
    pub lambda: Rational,
    pub mu: Rational,
}

impl QuaternionWitness {
    pub fn verify(&self, alg: &Algebra) -> bool {
        self.lambda.is_positive()
            && self.mu.is_positive()
            && alg.square(&self.a) == alg.scalar(&-&self.lambda)
            && alg.square(&self.b) == alg.scalar(&-&self.mu)
            && alg.anticommutator(&self.a, &self.b).is_zero()
    }
}

/// Invertible `u, v` with `u o v = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnticommutingPair {
    pub u: Element,
    pub v: Element,
    pub u_inverse: Element,
    pub v_inverse: Element,
}

impl AnticommutingPair {
    pub fn verify(&self, alg: &Algebra) -> bool {
        let one = alg.one();
        alg.anticommutator(&self.u, &self.v).is_zero()
            && alg.mul(&self.u, &self.u_inverse) == one
            && alg.mul(&self.u_inverse, &self.u) == one
            && alg.mul(&self.v, &self.v_inverse) == one
            && alg.mul(&self.v_inverse, &self.v) == one
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    Left,
    TwoSided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateReason {
    OddDimension,
    NotMultipleOfFour,
}

impl CertificateReason {
    pub fn holds(self, dim: usize) -> bool {
        match self {
            CertificateReason::OddDimension => dim % 2 == 1,
            CertificateReason::NotMultipleOfFour => !dim.is_multiple_of(4),
        }
    }
}

/// An ideal whose dimension rules out a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCertificate {
    pub kind: IdealKind,
    pub reason: CertificateReason,
    pub generators: Vec<Element>,
    pub subspace: Subspace,
    pub dim: usize,
}

impl IdealCertificate {
    /// Closure under the stated multiplications, generation by the listed
    /// elements, and the dimension condition.
    pub fn verify(&self, alg: &Algebra) -> bool {
        let (closed, generated) = match self.kind {
            IdealKind::Left => (
                alg.is_left_ideal(&self.subspace),
                alg.left_ideal_span(&self.generators),
            ),
            IdealKind::TwoSided => (
                alg.is_two_sided_ideal(&self.subspace),
                alg.two_sided_ideal_span(&self.generators),
            ),
        };
        closed
            && generated == self.subspace
            && self.subspace.dim() == self.dim
            && self.reason.holds(self.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Complex(ComplexWitness),
    Quaternion(QuaternionWitness),
    Anticommuting(AnticommutingPair),
}

impl Witness {
    pub fn verify(&self, alg: &Algebra) -> bool {
        match self {
            Witness::Complex(w) => w.verify(alg),
            Witness::Quaternion(w) => w.verify(alg),
            Witness::Anticommuting(w) => w.verify(alg),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    Witness(Witness),
    Certificate(IdealCertificate),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOutcome {
    pub finding: Finding,
    pub budget: usize,
    /// Candidates (elements or sampled ideals) examined.
    pub budget_used: usize,
    pub seed: u64,
}

impl ClassifyOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self.finding, Finding::Witness(_))
    }

    pub fn is_certificate(&self) -> bool {
        matches!(self.finding, Finding::Certificate(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.finding, Finding::Unknown)
    }

    pub fn variant(&self) -> &'static str {
        match self.finding {
            Finding::Witness(_) => "witness",
            Finding::Certificate(_) => "certificate",
            Finding::Unknown => "unknown",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.finding {
            Finding::Witness(w) => Some(w),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&IdealCertificate> {
        match &self.finding {
            Finding::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

/// Number of distinct real roots of `mu_a`.
pub fn real_root_count(alg: &Algebra, a: &Element) -> usize {
    let mu = alg.minimal_polynomial(a);
    sturm_count(&squarefree_part(&mu).expect("nonzero")).expect("nonzero")
}

/// Seeded candidate stream over the span of `basis`: each basis vector,
/// then `b_i + b_j`, `b_i - b_j` for `i < j`, then (when built from an
/// algebra) a basis of the same span that is orthogonal for the trace form
/// `tr(L_(xy))`, then random combinations with
/// coefficients in `-B..=B`, where `B` starts at 2 and grows by one every
/// [`Candidates::WIDEN_EVERY`] random draws so that every rational direction
/// is eventually reachable. Never yields zero; endless when `basis` is
/// nonempty.
pub struct Candidates {
    basis: Vec<Element>,
    orthogonal: Vec<Element>,
    rng: ChaCha8Rng,
    stage: Stage,
}

enum Stage {
    Single(usize),
    Pair(usize, usize, bool),
    Orthogonal(usize),
    Random(usize),
}

impl Candidates {
    pub const WIDEN_EVERY: usize = 40;

    pub fn new(basis: Vec<Element>, seed: u64) -> Self {
        Candidates {
            basis,
            orthogonal: Vec::new(),
            rng: ChaCha8Rng::seed_from_u64(seed),
            stage: Stage::Single(0),
        }
    }

    /// Candidates over the span of `basis` inside `alg`, including the
    /// trace-orthogonal stage.
    pub fn over_subspace(alg: &Algebra, basis: Vec<Element>, seed: u64) -> Self {
        let orthogonal = trace_orthogonal_basis(alg, &basis);
        Candidates {
            orthogonal,
            ..Candidates::new(basis, seed)
        }
    }

    pub fn over_algebra(alg: &Algebra, seed: u64) -> Self {
        Candidates::over_subspace(alg, alg.basis_elements(), seed)
    }
}

/// Diagonalizes the symmetric form `(x, y) -> tr(L_(xy))` on the span of
/// `vectors` by symmetric elimination. Vectors in the radical of the form
/// come last.
pub fn trace_orthogonal_basis(alg: &Algebra, vectors: &[Element]) -> Vec<Element> {
    let form = |a: &Element, b: &Element| alg.left_trace(&alg.mul(a, b));
    let mut work: Vec<Element> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut out = Vec::new();
    while !work.is_empty() {
        let pivot = match work.iter().position(|w| !form(w, w).is_zero()) {
            Some(p) => work.swap_remove(p),
            None => {
                let pair = (0..work.len())
                    .flat_map(|i| (i + 1..work.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !form(&work[i], &work[j]).is_zero());
                match pair {
                    Some((i, j)) => {
                        let w = &work[i] + &work[j];
                        work.swap_remove(i);
                        w
                    }
                    None => {
                        out.append(&mut work);
                        break;
                    }
                }
            }
        };
        let norm = form(&pivot, &pivot);
        work = work
            .iter()
            .map(|w| w - &pivot.scale(&(form(w, &pivot) / &norm)))
            .filter(|w| !w.is_zero())
            .collect();
        out.push(pivot);
    }
    out
}

impl Iterator for Candidates {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        let n = self.basis.len();
        if n == 0 {
            return None;
        }
        loop {
            match self.stage {
                Stage::Single(i) if i < n => {
                    self.stage = Stage::Single(i + 1);
                    if !self.basis[i].is_zero() {
                        return Some(self.basis[i].clone());
                    }
                }
                Stage::Single(_) => self.stage = Stage::Pair(0, 1, true),
                Stage::Pair(i, j, plus) if j < n => {
                    self.stage = if plus {
                        Stage::Pair(i, j, false)
                    } else if j + 1 < n {
                        Stage::Pair(i, j + 1, true)
                    } else {
                        Stage::Pair(i + 1, i + 2, true)
                    };
                    let c = if plus {
                        &self.basis[i] + &self.basis[j]
                    } else {
                        &self.basis[i] - &self.basis[j]
                    };
                    if !c.is_zero() {
                        return Some(c);
                    }
                }
                Stage::Pair(..) => self.stage = Stage::Orthogonal(0),
                Stage::Orthogonal(i) if i < self.orthogonal.len() => {
                    self.stage = Stage::Orthogonal(i + 1);
                    return Some(self.orthogonal[i].clone());
                }
                Stage::Orthogonal(_) => self.stage = Stage::Random(0),
                Stage::Random(draws) => {
                    self.stage = Stage::Random(draws + 1);
                    let bound = 2 + (draws / Self::WIDEN_EVERY) as i64;
                    let mut c = self.basis[0].scale(&Rational::zero());
                    for b in &self.basis {
                        let k: i64 = self.rng.gen_range(-bound..=bound);
                        if k != 0 {
                            c = &c + &b.scale(&int(k));
                        }
                    }
                    if !c.is_zero() {
                        return Some(c);
                    }
                }
            }
        }
    }
}

/// Seeded stream of left or two-sided ideals: the radical, then ideals
/// generated by candidates, each new ideal followed by its sums with up to
/// [`IdealSampler::MEMORY`] earlier distinct ideals.
pub struct IdealSampler<'a> {
    alg: &'a Algebra,
    kind: IdealKind,
    candidates: Candidates,
    started: bool,
    seen: Vec<(Vec<Element>, Subspace)>,
    queue: std::collections::VecDeque<(Vec<Element>, Subspace)>,
}

impl<'a> IdealSampler<'a> {
    pub const MEMORY: usize = 8;

    pub fn new(alg: &'a Algebra, kind: IdealKind, seed: u64) -> Self {
        IdealSampler {
            alg,
            kind,
            candidates: Candidates::over_algebra(alg, seed),
            started: false,
            seen: Vec::new(),
            queue: Default::default(),
        }
    }

    fn generate(&self, gens: &[Element]) -> Subspace {
        match self.kind {
            IdealKind::Left => self.alg.left_ideal_span(gens),
            IdealKind::TwoSided => self.alg.two_sided_ideal_span(gens),
        }
    }

    fn remember(&mut self, gens: Vec<Element>, s: Subspace) {
        if self.seen.iter().any(|(_, t)| *t == s) {
            return;
        }
        for (g, t) in &self.seen {
            let mut both = g.clone();
            both.extend(gens.iter().cloned());
            let sum = self.generate(&both);
            debug_assert_eq!(sum, s.sum(t).expect("same ambient"));
            self.queue.push_back((both, sum));
        }
        self.seen.push((gens, s));
        if self.seen.len() > Self::MEMORY {
            self.seen.remove(0);
        }
    }
}

impl Iterator for IdealSampler<'_> {
    /// Generators and the ideal they generate.
    type Item = (Vec<Element>, Subspace);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            let rad = radical(self.alg).expect("validated algebra").radical;
            let gens = self.alg.subspace_elements(&rad);
            self.remember(gens.clone(), rad.clone());
            return Some((gens, rad));
        }
        if let Some(item) = self.queue.pop_front() {
            return Some(item);
        }
        let v = self.candidates.next()?;
        let gens = vec![v];
        let s = self.generate(&gens);
        self.remember(gens.clone(), s.clone());
        Some((gens, s))
    }
}

/// Dimensions of the first `count` sampled left ideals.
pub fn sample_left_ideal_dims(alg: &Algebra, count: usize, seed: u64) -> Vec<usize> {
    IdealSampler::new(alg, IdealKind::Left, seed)
        .take(count)
        .map(|(_, s)| s.dim())
        .collect()
}

/// Dimensions of the first `count` sampled two-sided ideals.
pub fn sample_two_sided_ideal_dims(alg: &Algebra, count: usize, seed: u64) -> Vec<usize> {
    IdealSampler::new(alg, IdealKind::TwoSided, seed)
        .take(count)
        .map(|(_, s)| s.dim())
        .collect()
}

/// `a = c + p/2` and `lambda` when `mu_c = X^2 + pX + q` has negative
/// discriminant, so that `a^2 = -lambda` with `lambda = q - p^2/4 > 0`.
pub(crate) fn negative_square_shift(alg: &Algebra, c: &Element) -> Option<(Element, Rational)> {
    let mu = alg.minimal_polynomial(c);
    if mu.degree() != Some(2) {
        return None;
    }
    let (q, p) = (mu.coeff(0), mu.coeff(1));
    let half_p = &p / int(2);
    let lambda = &q - &half_p * &half_p;
    if !lambda.is_positive() {
        return None;
    }
    let a = c + &alg.scalar(&half_p);
    assert_eq!(alg.square(&a), alg.scalar(&-&lambda));
    Some((a, lambda))
}

/// `mu > 0` with `d^2 = -mu`.
pub(crate) fn negative_scalar_square(alg: &Algebra, d: &Element) -> Option<Rational> {
    let s = alg.as_scalar(&alg.square(d))?;
    s.is_negative().then(|| -s)
}

/// Seed for a search nested inside candidate number `index`.
pub(crate) fn nested_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CatalogSpec;

    #[test]
    fn candidate_order() {
        let basis = vec![
            Element::from_i64(&[1, 0, 0]),
            Element::from_i64(&[0, 1, 0]),
            Element::from_i64(&[0, 0, 1]),
        ];
        let first: Vec<Element> = Candidates::new(basis.clone(), 3).take(9).collect();
        let expected = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, -1, 0],
            [1, 0, 1],
            [1, 0, -1],
            [0, 1, 1],
            [0, 1, -1],
        ];
        for (c, e) in first.iter().zip(expected) {
            assert_eq!(*c, Element::from_i64(&e));
        }
        let a: Vec<Element> = Candidates::new(basis.clone(), 3).take(40).collect();
        let b: Vec<Element> = Candidates::new(basis, 3).take(40).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|c| !c.is_zero()));
    }

    #[test]
    fn ideal_samples() {
        let m2 = CatalogSpec::matrix(CatalogSpec::Q, 2).build().unwrap();
        assert!(sample_left_ideal_dims(&m2, 60, 1)
            .iter()
            .all(|d| [0, 2, 4].contains(d)));
        assert!(sample_two_sided_ideal_dims(&m2, 60, 1)
            .iter()
            .all(|d| [0, 4].contains(d)));
        let h = CatalogSpec::quaternion(-1, -1).build().unwrap();
        assert!(sample_left_ideal_dims(&h, 40, 2).iter().all(|d| d % 4 == 0));
    }

    #[test]
    fn shifts() {
        let t2 = CatalogSpec::triangular(2).build().unwrap();
        assert!(negative_square_shift(&t2, &t2.one()).is_none());
        let c = CatalogSpec::cneg(-3).build().unwrap();
        // u + 1 has minimal polynomial X^2 - 2X + 4
        let b = &c.named("u").unwrap() + &c.one();
        let (a, lambda) = negative_square_shift(&c, &b).unwrap();
        assert_eq!(a, c.named("u").unwrap());
        assert_eq!(lambda, int(3));
        assert_eq!(negative_scalar_square(&c, &a), Some(int(3)));
    }

    #[test]
    fn trace_orthogonal_stage() {
        let m2 = CatalogSpec::matrix(CatalogSpec::Q, 2).build().unwrap();
        let (alg, _) = m2.scramble_basis(0);
        let basis = alg.basis_elements();
        let ortho = trace_orthogonal_basis(&alg, &basis);
        assert_eq!(ortho.len(), 4);
        let form = |a: &Element, b: &Element| alg.left_trace(&alg.mul(a, b));
        for (i, a) in ortho.iter().enumerate() {
            for b in &ortho[i + 1..] {
                assert!(form(a, b).is_zero());
            }
        }
        // the trace form on M2 has signature (3, 1)
        let negative: Vec<&Element> = ortho.iter().filter(|v| form(v, v).is_negative()).collect();
        assert_eq!(negative.len(), 1);
        assert!(negative_scalar_square(&alg, negative[0]).is_some());

        // these come right after the pairs
        let singles_and_pairs = 4 + 4 * 3;
        let stream: Vec<Element> = Candidates::over_algebra(&alg, 0)
            .skip(singles_and_pairs)
            .take(4)
            .collect();
        assert_eq!(stream, ortho);

        let trunc = CatalogSpec::Trunc(3).build().unwrap();
        let ortho = trace_orthogonal_basis(&trunc, &trunc.basis_elements());
        assert_eq!(ortho.len(), 3);
        assert!(ortho[1..].iter().all(|v| form_is_zero(&trunc, v)));
    }

    fn form_is_zero(alg: &Algebra, v: &Element) -> bool {
        alg.basis_elements()
            .iter()
            .all(|b| alg.left_trace(&alg.mul(v, b)).is_zero())
    }
}
