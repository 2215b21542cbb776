use num::Signed;

use crate::algebra::{Algebra, Element};
use crate::poly::{squarefree_part, sturm_count, Poly};
use crate::rational::{int, square_class, Rational};
use crate::subspace::Subspace;

use super::negative_scalar_square;

/// Why a presentation is not a real division algebra (after `(x) R`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonDivisionEvidence {
    /// `mu` has a real root, so `element - r` is a zero divisor over `R`.
    RealRoot {
        element: Element,
        minimal_polynomial: Poly,
        real_roots: usize,
    },
    /// Division algebras over `R` have quadratic minimal polynomials.
    DegreeAboveTwo {
        element: Element,
        minimal_polynomial: Poly,
    },
    Dimension {
        dim: usize,
    },
    /// Nothing anticommutes with the normalized element.
    TrivialAnticommutant {
        element: Element,
    },
    NonScalarSquare {
        element: Element,
        square: Element,
    },
    DependentBasis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Frobenius {
    Real,
    /// `a^2 = -lambda`, `lambda` a square-free positive integer.
    Complex {
        lambda: Rational,
        a: Element,
    },
    /// Basis `1, a, v, av` with `a^2 = -lambda`, `v^2 = -mu`, `a o v = 0`,
    /// `(av)^2 = -lambda mu`; `lambda`, `mu` square-free positive integers.
    Quaternion {
        lambda: Rational,
        mu: Rational,
        basis: [Element; 4],
    },
    NotRealDivision(NonDivisionEvidence),
}

impl Frobenius {
    pub fn label(&self) -> String {
        match self {
            Frobenius::Real => "R".into(),
            Frobenius::Complex { lambda, .. } => format!("C({lambda})"),
            Frobenius::Quaternion { lambda, mu, .. } => format!("H({lambda},{mu})"),
            Frobenius::NotRealDivision(_) => "NotRealDivision".into(),
        }
    }

    /// Re-checks the defining identities of the returned basis.
    pub fn verify(&self, alg: &Algebra) -> bool {
        match self {
            Frobenius::Real => alg.dim() == 1,
            Frobenius::Complex { lambda, a } => {
                alg.dim() == 2 && lambda.is_positive() && alg.square(a) == alg.scalar(&-lambda)
            }
            Frobenius::Quaternion { lambda, mu, basis } => {
                let [one, a, v, av] = basis;
                let independent =
                    Subspace::span(alg.dim(), basis.iter().map(|e| e.coords().to_vec()))
                        .map(|s| s.dim() == 4)
                        .unwrap_or(false);
                alg.dim() == 4
                    && independent
                    && *one == alg.one()
                    && lambda.is_positive()
                    && mu.is_positive()
                    && *av == alg.mul(a, v)
                    && alg.square(a) == alg.scalar(&-lambda)
                    && alg.square(v) == alg.scalar(&-mu)
                    && alg.anticommutator(a, v).is_zero()
                    && alg.square(av) == alg.scalar(&-(lambda * mu))
            }
            Frobenius::NotRealDivision(_) => true,
        }
    }
}

/// Rescales `x` with `x^2 = -c` (`c > 0`) so that the new square is minus a
/// square-free integer.
fn normalize(x: &Element, c: &Rational) -> (Element, Rational) {
    let (k, r) = square_class(c);
    (x.scale(&r.recip()), Rational::from_integer(k))
}

/// Identifies `R`, `C` or `H` after extending scalars to the reals, or
/// reports the identity that fails.
///
/// A non-scalar `b` must have a quadratic minimal polynomial without real
/// roots; completing the square gives `a` with `a^2 = -lambda`. In
/// dimension 4 a nonzero `v` anticommuting with `a` must square to a negative
/// scalar, and `1, a, v, av` is then a scaled quaternion basis.
pub fn frobenius_classify(alg: &Algebra) -> Frobenius {
    let evidence = |e| Frobenius::NotRealDivision(e);
    if alg.dim() == 1 {
        return Frobenius::Real;
    }
    let Some(b) = alg
        .basis_elements()
        .into_iter()
        .find(|e| alg.as_scalar(e).is_none())
    else {
        return evidence(NonDivisionEvidence::Dimension { dim: alg.dim() });
    };
    let mu = alg.minimal_polynomial(&b);
    let real_roots = sturm_count(&squarefree_part(&mu).expect("nonzero")).expect("nonzero");
    if real_roots > 0 {
        return evidence(NonDivisionEvidence::RealRoot {
            element: b,
            minimal_polynomial: mu,
            real_roots,
        });
    }
    if mu.degree() != Some(2) {
        return evidence(NonDivisionEvidence::DegreeAboveTwo {
            element: b,
            minimal_polynomial: mu,
        });
    }
    let half_p = mu.coeff(1) / int(2);
    let lambda = mu.coeff(0) - &half_p * &half_p;
    let a = &b + &alg.scalar(&half_p);
    let (a, lambda) = normalize(&a, &lambda);
    match alg.dim() {
        2 => {
            let out = Frobenius::Complex { lambda, a };
            assert!(out.verify(alg));
            out
        }
        4 => {
            let k = alg.anticommutant(&a);
            let Some(v) = alg.subspace_elements(&k).into_iter().next() else {
                return evidence(NonDivisionEvidence::TrivialAnticommutant { element: a });
            };
            let v2 = alg.square(&v);
            let Some(mu_v) = negative_scalar_square(alg, &v) else {
                return match alg.as_scalar(&v2) {
                    Some(_) => {
                        let minimal_polynomial = alg.minimal_polynomial(&v);
                        let real_roots =
                            sturm_count(&squarefree_part(&minimal_polynomial).expect("nonzero"))
                                .expect("nonzero");
                        evidence(NonDivisionEvidence::RealRoot {
                            element: v,
                            minimal_polynomial,
                            real_roots,
                        })
                    }
                    None => evidence(NonDivisionEvidence::NonScalarSquare {
                        element: v,
                        square: v2,
                    }),
                };
            };
            let (v, mu_v) = normalize(&v, &mu_v);
            let av = alg.mul(&a, &v);
            let out = Frobenius::Quaternion {
                lambda,
                mu: mu_v,
                basis: [alg.one(), a, v, av],
            };
            if !out.verify(alg) {
                return evidence(NonDivisionEvidence::DependentBasis);
            }
            out
        }
        dim => evidence(NonDivisionEvidence::Dimension { dim }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CatalogSpec;

    fn build(spec: &str) -> Algebra {
        CatalogSpec::parse(spec).unwrap().build().unwrap()
    }

    #[test]
    fn division_algebras() {
        assert_eq!(frobenius_classify(&build("Q")), Frobenius::Real);
        let (q, _) = build("Q").scramble_basis(3);
        assert_eq!(frobenius_classify(&q), Frobenius::Real);

        let c2 = build("Cneg(-2)");
        match frobenius_classify(&c2) {
            Frobenius::Complex { lambda, .. } => assert_eq!(lambda, int(2)),
            other => panic!("{other:?}"),
        }
        // u^2 = -8 normalizes to -2
        match frobenius_classify(&build("Cneg(-8)")) {
            Frobenius::Complex { lambda, a } => {
                assert_eq!(lambda, int(2));
                assert_eq!(
                    a,
                    build("Cneg(-8)")
                        .named("u")
                        .unwrap()
                        .scale(&Rational::new(1.into(), 2.into()))
                );
            }
            other => panic!("{other:?}"),
        }

        let (h, _) = build("Quat(-1,-1)").scramble_basis(7);
        let out = frobenius_classify(&h);
        assert!(matches!(out, Frobenius::Quaternion { .. }), "{out:?}");
        assert!(out.verify(&h));
    }

    #[test]
    fn non_division_algebras() {
        match frobenius_classify(&build("Cneg(2)")) {
            Frobenius::NotRealDivision(NonDivisionEvidence::RealRoot { real_roots, .. }) => {
                assert_eq!(real_roots, 2)
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            frobenius_classify(&build("Mat(Q,2)")),
            Frobenius::NotRealDivision(NonDivisionEvidence::RealRoot { .. })
        ));
        assert!(matches!(
            frobenius_classify(&build("Tensor(Cneg(-1),Cneg(-1))")),
            Frobenius::NotRealDivision(_)
        ));
        assert!(matches!(
            frobenius_classify(&build("Trunc(2)")),
            Frobenius::NotRealDivision(NonDivisionEvidence::RealRoot { .. })
        ));
    }
}
