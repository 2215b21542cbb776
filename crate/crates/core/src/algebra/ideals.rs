//! Ideals, subspace products and quotients.

use num::Zero;

use super::{Algebra, AlgebraError, Element};
use crate::matrix::QMatrix;
use crate::rational::Rational;
use crate::subspace::Subspace;

impl Algebra {
    fn span_elements<I: IntoIterator<Item = Element>>(&self, elems: I) -> Subspace {
        Subspace::span(self.dim(), elems.into_iter().map(Element::into_coords))
            .expect("elements have algebra dimension")
    }

    /// `span{x : x in S}` as elements.
    pub fn subspace_elements(&self, s: &Subspace) -> Vec<Element> {
        s.basis_vectors().into_iter().map(Element::new).collect()
    }

    /// `A g_1 + ... + A g_r`, the left ideal generated by `gens`.
    pub fn left_ideal_span(&self, gens: &[Element]) -> Subspace {
        let basis = self.basis_elements();
        let s = self.span_elements(
            gens.iter()
                .flat_map(|g| basis.iter().map(move |e| self.mul(e, g))),
        );
        debug_assert!(self.is_left_ideal(&s));
        s
    }

    /// Right ideal generated by `gens`.
    pub fn right_ideal_span(&self, gens: &[Element]) -> Subspace {
        let basis = self.basis_elements();
        self.span_elements(
            gens.iter()
                .flat_map(|g| basis.iter().map(move |e| self.mul(g, e))),
        )
    }

    /// Smallest two-sided ideal containing `gens`: the span of the
    /// generators closed under multiplication by basis elements on both
    /// sides, iterated to a fixed point.
    pub fn two_sided_ideal_span(&self, gens: &[Element]) -> Subspace {
        self.two_sided_closure(self.span_elements(gens.iter().cloned()))
    }

    pub(crate) fn two_sided_closure(&self, start: Subspace) -> Subspace {
        let basis = self.basis_elements();
        let mut current = start;
        loop {
            let mut vectors = current.basis_vectors();
            for v in self.subspace_elements(&current) {
                for e in &basis {
                    vectors.push(self.mul(e, &v).into_coords());
                    vectors.push(self.mul(&v, e).into_coords());
                }
            }
            let next = Subspace::span(self.dim(), vectors).expect("algebra dimension");
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    pub fn is_left_ideal(&self, s: &Subspace) -> bool {
        self.closed_under(s, true, false)
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        self.closed_under(s, true, true)
    }

    fn closed_under(&self, s: &Subspace, left: bool, right: bool) -> bool {
        if s.ambient_dim() != self.dim() {
            return false;
        }
        let basis = self.basis_elements();
        self.subspace_elements(s).iter().all(|v| {
            basis.iter().all(|e| {
                (!left || s.contains(self.mul(e, v).coords()).unwrap_or(false))
                    && (!right || s.contains(self.mul(v, e).coords()).unwrap_or(false))
            })
        })
    }

    /// `span{a b : a in I, b in J}`.
    pub fn subspace_product(&self, i: &Subspace, j: &Subspace) -> Subspace {
        let left = self.subspace_elements(i);
        let right = self.subspace_elements(j);
        self.span_elements(
            left.iter()
                .flat_map(|a| right.iter().map(move |b| self.mul(a, b))),
        )
    }

    /// Subspace of elements commuting with `a`.
    pub fn centralizer(&self, a: &Element) -> Subspace {
        crate::matrix::kernel(&self.commutator_matrix(a))
    }

    /// Subspace of elements anticommuting with `a`.
    pub fn anticommutant(&self, a: &Element) -> Subspace {
        crate::matrix::kernel(&self.anticommutator_matrix(a))
    }

    /// `A / I` for a two-sided ideal `I`.
    ///
    /// The quotient basis consists of the images of the basis elements whose
    /// index is not a pivot of `I`'s canonical basis. The returned projection
    /// matrix maps `A`-coordinates to quotient coordinates and is checked to
    /// be a unital homomorphism on all basis pairs.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, QMatrix), AlgebraError> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(AlgebraError::NotAnIdeal);
        }
        if ideal.dim() == self.dim() {
            return Err(AlgebraError::ImproperIdeal);
        }
        let keep = ideal.non_pivots();
        let n = self.dim();
        let m = keep.len();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v).expect("algebra dimension");
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mut proj = QMatrix::zeros(m, n);
        for col in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[col] = num::One::one();
            for (row, x) in project(&e).into_iter().enumerate() {
                proj[(row, col)] = x;
            }
        }
        let names = keep.iter().map(|&c| self.basis[c].clone()).collect();
        let unit = project(&self.unit);
        let q = Algebra::from_products(format!("{}/I", self.name), names, unit, |a, b| {
            project(&self.table[keep[a]][keep[b]])
        })?;
        for i in 0..n {
            for j in 0..n {
                let lhs = proj.mul_vec(&self.table[i][j]).expect("shape");
                let pi = Element::new(proj.column(i));
                let pj = Element::new(proj.column(j));
                assert_eq!(
                    lhs,
                    q.mul(&pi, &pj).into_coords(),
                    "projection is not multiplicative"
                );
            }
        }
        assert_eq!(
            proj.mul_vec(&self.unit).expect("shape"),
            q.unit,
            "projection is not unital"
        );
        Ok((q, proj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CatalogSpec;

    fn m(n: usize) -> Algebra {
        CatalogSpec::matrix(CatalogSpec::Q, n).build().unwrap()
    }

    #[test]
    fn left_ideals() {
        let m2 = m(2);
        let l = m2.left_ideal_span(&[m2.named("e11").unwrap()]);
        let expected = Subspace::span(
            4,
            vec![
                m2.named("e11").unwrap().into_coords(),
                m2.named("e21").unwrap().into_coords(),
            ],
        )
        .unwrap();
        assert_eq!(l, expected);
        assert_eq!(m2.left_ideal_span(&[m2.one()]).dim(), 4);
        assert_eq!(m2.left_ideal_span(&[m2.zero()]).dim(), 0);
    }

    #[test]
    fn two_sided_ideals() {
        let t2 = CatalogSpec::triangular(2).build().unwrap();
        let i = t2.two_sided_ideal_span(&[t2.named("e12").unwrap()]);
        assert_eq!(i.dim(), 1);
        let m2 = m(2);
        assert_eq!(
            m2.two_sided_ideal_span(&[m2.named("e11").unwrap()]).dim(),
            4
        );
        assert_eq!(m2.two_sided_ideal_span(&[m2.zero()]).dim(), 0);
    }

    #[test]
    fn quotients() {
        let t2 = CatalogSpec::triangular(2).build().unwrap();
        let i = t2.two_sided_ideal_span(&[t2.named("e12").unwrap()]);
        let (q, _) = t2.quotient(&i).unwrap();
        assert_eq!(q.dim(), 2);
        let (e11, e22) = (q.named("e11").unwrap(), q.named("e22").unwrap());
        assert_eq!(q.mul(&e11, &e11), e11);
        assert!(q.mul(&e11, &e22).is_zero());
        assert!(q.commute(&e11, &e22));

        let h = CatalogSpec::quaternion(-1, -1).build().unwrap();
        let (q, p) = h.quotient(&Subspace::zero(4)).unwrap();
        assert!(q.same_constants(&h));
        assert_eq!(p, QMatrix::identity(4));

        let not_ideal = Subspace::span(3, vec![t2.named("e11").unwrap().into_coords()]).unwrap();
        assert_eq!(t2.quotient(&not_ideal), Err(AlgebraError::NotAnIdeal));
    }

    #[test]
    fn ideal_plus_quotient_dimension() {
        let t3 = CatalogSpec::triangular(3).build().unwrap();
        for g in t3.basis_elements() {
            let i = t3.two_sided_ideal_span(&[g]);
            if i.dim() < t3.dim() {
                let (q, _) = t3.quotient(&i).unwrap();
                assert_eq!(i.dim() + q.dim(), t3.dim());
            }
        }
    }
}
