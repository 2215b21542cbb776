use crate::algebra::{Algebra, Element};
use crate::poly::{squarefree_part, sturm_count, sturm_sequence};

use super::{
    negative_scalar_square, negative_square_shift, nested_seed, AnticommutingPair, Candidates,
    CertificateReason, ClassifyOutcome, ComplexWitness, Finding, IdealCertificate, IdealKind,
    IdealSampler, QuaternionWitness, Search, Witness,
};

fn outcome(finding: Finding, search: Search, used: usize) -> ClassifyOutcome {
    ClassifyOutcome {
        finding,
        budget: search.budget,
        budget_used: used,
        seed: search.seed,
    }
}

/// First candidate whose minimal polynomial has no real root.
pub fn find_complex_witness(alg: &Algebra, search: Search) -> ClassifyOutcome {
    for (k, c) in Candidates::over_algebra(alg, search.seed)
        .take(search.budget)
        .enumerate()
    {
        let mu = alg.minimal_polynomial(&c);
        let sqf = squarefree_part(&mu).expect("nonzero");
        if sturm_count(&sqf).expect("nonzero") == 0 {
            let w = ComplexWitness {
                element: c,
                sturm_sequence: sturm_sequence(&sqf).expect("nonzero"),
                minimal_polynomial: mu,
                squarefree_part: sqf,
                real_root_count: 0,
            };
            assert!(w.verify(alg), "complex witness failed verification");
            return outcome(Finding::Witness(Witness::Complex(w)), search, k + 1);
        }
    }
    outcome(Finding::Unknown, search, search.budget)
}

fn find_ideal_certificate(
    alg: &Algebra,
    kind: IdealKind,
    reason: CertificateReason,
    search: Search,
) -> ClassifyOutcome {
    for (k, (generators, subspace)) in IdealSampler::new(alg, kind, search.seed)
        .take(search.budget)
        .enumerate()
    {
        let dim = subspace.dim();
        if reason.holds(dim) {
            let cert = IdealCertificate {
                kind,
                reason,
                generators,
                subspace,
                dim,
            };
            assert!(cert.verify(alg), "ideal certificate failed verification");
            return outcome(Finding::Certificate(cert), search, k + 1);
        }
    }
    outcome(Finding::Unknown, search, search.budget)
}

/// Sampled left ideal of odd dimension; its existence rules out a complex
/// witness.
pub fn find_odd_left_ideal_certificate(alg: &Algebra, search: Search) -> ClassifyOutcome {
    find_ideal_certificate(
        alg,
        IdealKind::Left,
        CertificateReason::OddDimension,
        search,
    )
}

/// Sampled left ideal whose dimension is not a multiple of 4; its existence
/// rules out a quaternion witness.
pub fn find_left_ideal_mod4_certificate(alg: &Algebra, search: Search) -> ClassifyOutcome {
    find_ideal_certificate(
        alg,
        IdealKind::Left,
        CertificateReason::NotMultipleOfFour,
        search,
    )
}

/// Searches the span of `basis` for an element accepted by `accept`,
/// spending at most `limit` candidates. Returns the hit and the count spent.
fn search_subspace<T>(
    alg: &Algebra,
    basis: Vec<Element>,
    seed: u64,
    limit: usize,
    mut accept: impl FnMut(&Element) -> Option<T>,
) -> (Option<(Element, T)>, usize) {
    let mut spent = 0;
    for d in Candidates::over_subspace(alg, basis, seed).take(limit) {
        spent += 1;
        if let Some(t) = accept(&d) {
            return (Some((d, t)), spent);
        }
    }
    (None, spent)
}

/// Candidates to try inside an anticommutant of dimension `k`: its basis,
/// all signed pairs, a trace-orthogonal basis, and as many random
/// combinations as basis vectors and pairs.
fn inner_limit(k: usize) -> usize {
    2 * (k + k * k.saturating_sub(1)) + k
}

/// `a` with `a^2 = -lambda` from a candidate with quadratic negative
/// discriminant minimal polynomial, then `b` in the anticommutant of `a`
/// with `b^2 = -mu`.
pub fn find_quaternion_witness(alg: &Algebra, search: Search) -> ClassifyOutcome {
    let mut used = 0;
    let mut candidates = Candidates::over_algebra(alg, search.seed);
    while used < search.budget {
        let Some(c) = candidates.next() else { break };
        used += 1;
        let Some((a, lambda)) = negative_square_shift(alg, &c) else {
            continue;
        };
        let k = alg.anticommutant(&a);
        if k.is_zero() {
            continue;
        }
        let limit = inner_limit(k.dim()).min(search.budget - used);
        let (hit, spent) = search_subspace(
            alg,
            alg.subspace_elements(&k),
            nested_seed(search.seed, used),
            limit,
            |d| negative_scalar_square(alg, d),
        );
        used += spent;
        if let Some((b, mu)) = hit {
            let w = QuaternionWitness { a, b, lambda, mu };
            assert!(w.verify(alg), "quaternion witness failed verification");
            return outcome(Finding::Witness(Witness::Quaternion(w)), search, used);
        }
    }
    outcome(Finding::Unknown, search, used)
}

/// Invertible `u, v` with `u o v = 0`.
///
/// The first half of the budget only tries `u` squaring to a negative
/// scalar; the second half restarts the candidate order and tries every
/// invertible `u`. For each `u` the kernel of `x -> u o x` is searched for an
/// invertible `v`. Failing that, a sampled two-sided ideal whose dimension
/// is not a multiple of 4 is returned as a certificate, using a separate
/// budget of the same size.
pub fn find_anticommuting_pair(alg: &Algebra, search: Search) -> ClassifyOutcome {
    let mut used = 0;
    let phases = [(search.budget / 2, true), (search.budget, false)];
    for (phase_end, negative_only) in phases {
        let mut candidates = Candidates::over_algebra(alg, search.seed);
        while used < phase_end {
            let Some(c) = candidates.next() else { break };
            used += 1;
            let u = if negative_only {
                match negative_square_shift(alg, &c) {
                    Some((a, _)) => a,
                    None => continue,
                }
            } else {
                c
            };
            let Some(u_inverse) = alg.invert(&u) else {
                continue;
            };
            let k = alg.anticommutant(&u);
            if k.is_zero() {
                continue;
            }
            let limit = inner_limit(k.dim()).min(phase_end - used);
            let (hit, spent) = search_subspace(
                alg,
                alg.subspace_elements(&k),
                nested_seed(search.seed, used),
                limit,
                |d| alg.invert(d),
            );
            used += spent;
            if let Some((v, v_inverse)) = hit {
                let pair = AnticommutingPair {
                    u,
                    v,
                    u_inverse,
                    v_inverse,
                };
                assert!(pair.verify(alg), "anticommuting pair failed verification");
                return outcome(Finding::Witness(Witness::Anticommuting(pair)), search, used);
            }
        }
    }
    let companion = find_ideal_certificate(
        alg,
        IdealKind::TwoSided,
        CertificateReason::NotMultipleOfFour,
        search,
    );
    outcome(companion.finding, search, used + companion.budget_used)
}
