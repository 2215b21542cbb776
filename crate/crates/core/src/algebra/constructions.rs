//! Products, tensor products, matrix algebras and changes of basis.

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Algebra, AlgebraError, Element};
use crate::matrix::QMatrix;
use crate::rational::{int, Rational};

fn tensor_name(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", _) => b.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{a}*{b}"),
    }
}

pub(crate) fn matrix_unit_name(n: usize, r: usize, c: usize) -> String {
    if n < 10 {
        format!("e{}{}", r + 1, c + 1)
    } else {
        format!("e{}_{}", r + 1, c + 1)
    }
}

impl Algebra {
    /// `A x B` with componentwise operations.
    pub fn direct_product(a: &Algebra, b: &Algebra) -> Algebra {
        let (n, m) = (a.dim(), b.dim());
        let basis = a
            .basis
            .iter()
            .map(|s| format!("{s}@1"))
            .chain(b.basis.iter().map(|s| format!("{s}@2")))
            .collect();
        let unit = a.unit.iter().chain(&b.unit).cloned().collect();
        Algebra::from_products(
            format!("Prod({},{})", a.name, b.name),
            basis,
            unit,
            |i, j| {
                let mut v = vec![Rational::zero(); n + m];
                if i < n && j < n {
                    v[..n].clone_from_slice(&a.table[i][j]);
                } else if i >= n && j >= n {
                    v[n..].clone_from_slice(&b.table[i - n][j - n]);
                }
                v
            },
        )
        .expect("product of valid algebras is valid")
    }

    /// `A (x) B` over `Q`, basis `e_i (x) f_j` at index `i * dim B + j`.
    pub fn tensor_product(a: &Algebra, b: &Algebra) -> Algebra {
        let m = b.dim();
        let basis = a
            .basis
            .iter()
            .flat_map(|x| b.basis.iter().map(move |y| tensor_name(x, y)))
            .collect();
        let unit = a
            .unit
            .iter()
            .flat_map(|x| b.unit.iter().map(move |y| x * y))
            .collect();
        Algebra::from_products(
            format!("Tensor({},{})", a.name, b.name),
            basis,
            unit,
            |p, q| {
                let (i, j) = (p / m, p % m);
                let (k, l) = (q / m, q % m);
                a.table[i][k]
                    .iter()
                    .flat_map(|x| b.table[j][l].iter().map(move |y| x * y))
                    .collect()
            },
        )
        .expect("tensor product of valid algebras is valid")
    }

    /// Matrix units `e_rc` of `M_n(Q)`, or of the upper triangular
    /// subalgebra when `upper_only`.
    pub(crate) fn matrix_units(n: usize, upper_only: bool) -> Algebra {
        assert!(n >= 1, "matrix size must be positive");
        let positions: Vec<(usize, usize)> = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter(|&(r, c)| !upper_only || r <= c)
            .collect();
        let index = |rc: (usize, usize)| positions.iter().position(|&p| p == rc);
        let d = positions.len();
        let basis = positions
            .iter()
            .map(|&(r, c)| matrix_unit_name(n, r, c))
            .collect();
        let unit = positions
            .iter()
            .map(|&(r, c)| {
                if r == c {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let name = if upper_only {
            format!("Tri({n})")
        } else {
            format!("Mat(Q,{n})")
        };
        Algebra::from_products(name, basis, unit, |i, j| {
            let ((r, c), (c2, s)) = (positions[i], positions[j]);
            let mut v = vec![Rational::zero(); d];
            if c == c2 {
                v[index((r, s)).expect("closed under products")] = Rational::one();
            }
            v
        })
        .expect("matrix units form an algebra")
    }

    /// `M_n(B)`, basis `e_rc (x) b_k`; `M_1(B)` has exactly `B`'s constants.
    pub fn matrix_algebra(inner: &Algebra, n: usize) -> Algebra {
        if n == 1 {
            return inner.clone().with_name(format!("Mat({},1)", inner.name));
        }
        Algebra::tensor_product(&Algebra::matrix_units(n, false), inner)
            .with_name(format!("Mat({},{n})", inner.name))
    }

    /// Upper triangular `n x n` matrices over `B`.
    pub fn triangular_over(inner: &Algebra, n: usize) -> Algebra {
        let name = if inner.dim() == 1 && inner.name == "Q" {
            format!("Tri({n})")
        } else {
            format!("Tri({n},{})", inner.name)
        };
        Algebra::tensor_product(&Algebra::matrix_units(n, true), inner).with_name(name)
    }

    /// Re-expresses the algebra in the basis given by the columns of `p`
    /// (old coordinates of the new basis vectors).
    pub fn change_basis(&self, p: &QMatrix) -> Result<Algebra, AlgebraError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::BadChangeOfBasis);
        }
        let p_inv = p.inverse().ok_or(AlgebraError::BadChangeOfBasis)?;
        let new_basis: Vec<Element> = (0..n).map(|j| Element::new(p.column(j))).collect();
        let names = (0..n).map(|i| format!("f{i}")).collect();
        let unit = p_inv.mul_vec(&self.unit).expect("shape");
        Algebra::from_products(format!("{}'", self.name), names, unit, |a, b| {
            let prod = self.mul(&new_basis[a], &new_basis[b]);
            p_inv.mul_vec(prod.coords()).expect("shape")
        })
    }

    /// Isomorphic presentation under a seeded random integer change of basis
    /// whose first new basis vector is the unit. Returns the matrix used, so
    /// `result.change_basis(&p.inverse())` recovers the original constants.
    pub fn scramble_basis(&self, seed: u64) -> (Algebra, QMatrix) {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut p = QMatrix::zeros(n, n);
            for i in 0..n {
                p[(i, 0)] = self.unit[i].clone();
                for j in 1..n {
                    p[(i, j)] = int(rng.gen_range(-2..=2));
                }
            }
            if p.inverse().is_some() {
                let scrambled = self
                    .change_basis(&p)
                    .expect("invertible change of basis")
                    .with_name(format!("{}~{seed}", self.name));
                return (scrambled, p);
            }
        }
    }

    /// Image of an element under the coordinate change used by
    /// [`Algebra::change_basis`]: old coordinates to new.
    pub fn coords_in_basis(p: &QMatrix, a: &Element) -> Element {
        let p_inv = p.inverse().expect("invertible change of basis");
        Element::new(p_inv.mul_vec(a.coords()).expect("shape"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CatalogSpec;

    #[test]
    fn products_and_matrices() {
        let q = CatalogSpec::Q.build().unwrap();
        let qq = Algebra::direct_product(&q, &q);
        assert_eq!(qq.dim(), 2);
        assert_eq!(qq.one(), Element::from_i64(&[1, 1]));
        let m2 = Algebra::matrix_algebra(&q, 2);
        assert_eq!(m2.dim(), 4);
        assert_eq!(m2.basis_names(), ["e11", "e12", "e21", "e22"]);
        let h = CatalogSpec::quaternion(-1, -1).build().unwrap();
        assert!(Algebra::matrix_algebra(&h, 1).same_constants(&h));
        let mc = Algebra::matrix_algebra(&CatalogSpec::cneg(-1).build().unwrap(), 2);
        assert_eq!(mc.dim(), 8);
        assert!(mc.validate().is_ok());
        assert_eq!(Algebra::triangular_over(&h, 2).dim(), 12);
    }

    #[test]
    fn change_of_basis_round_trip() {
        let h = CatalogSpec::quaternion(-1, -1).build().unwrap();
        let same = h.change_basis(&QMatrix::identity(4)).unwrap();
        assert!(same.same_constants(&h));
        for seed in 0..5 {
            let (s, p) = h.scramble_basis(seed);
            assert!(s.validate().is_ok());
            assert_eq!(s.one(), s.basis_element(0));
            let back = s.change_basis(&p.inverse().unwrap()).unwrap();
            assert!(back.same_constants(&h));
        }
        let singular = QMatrix::zeros(4, 4);
        assert_eq!(
            h.change_basis(&singular),
            Err(AlgebraError::BadChangeOfBasis)
        );
    }

    #[test]
    fn scrambling_is_deterministic() {
        let t = CatalogSpec::triangular(3).build().unwrap();
        assert_eq!(t.scramble_basis(7), t.scramble_basis(7));
    }
}
