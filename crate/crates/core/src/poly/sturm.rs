//! Exact real-root counting with Sturm sequences.

use num::Signed;

use super::{squarefree_part, Poly, PolyError};

/// `p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k)` until the remainder
/// vanishes.
pub fn sturm_sequence(f: &Poly) -> Result<Vec<Poly>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq.last().expect("nonempty").is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1])?;
        seq.push(-&r);
    }
    seq.pop();
    Ok(seq)
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_at_infinity(p: &Poly, positive: bool) -> i8 {
    let lc = p.leading().expect("sequence holds no zero polynomial");
    let mut s: i8 = if lc.is_positive() { 1 } else { -1 };
    if !positive && p.degree().unwrap_or(0) % 2 == 1 {
        s = -s;
    }
    s
}

/// Number of distinct real roots of `f`, from the Sturm sequence of its
/// square-free part evaluated at both infinities.
pub fn sturm_count(f: &Poly) -> Result<usize, PolyError> {
    let g = squarefree_part(f)?;
    let seq = sturm_sequence(&g)?;
    let minus = sign_changes(seq.iter().map(|p| sign_at_infinity(p, false)));
    let plus = sign_changes(seq.iter().map(|p| sign_at_infinity(p, true)));
    Ok(minus - plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, Rational};
    use num::Zero;
    use proptest::prelude::*;

    #[test]
    fn counts() {
        assert_eq!(sturm_count(&Poly::from_i64(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_count(&Poly::from_i64(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_count(&Poly::from_i64(&[0, -1, 0, 1])).unwrap(), 3);
        assert_eq!(sturm_count(&Poly::from_i64(&[-2, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_count(&Poly::from_i64(&[7])).unwrap(), 0);
        // (X-1)^2 (X^2+1): one distinct real root.
        let f = &Poly::from_i64(&[-1, 1]).pow(2) * &Poly::from_i64(&[1, 0, 1]);
        assert_eq!(sturm_count(&f).unwrap(), 1);
        assert!(sturm_count(&Poly::zero()).is_err());
    }

    /// Sign-change scan over the half-integer grid; only valid when every
    /// root is an integer in [-100, 100] and all roots are simple in the
    /// scanned polynomial.
    fn grid_oracle(f: &Poly) -> usize {
        let g = squarefree_part(f).unwrap();
        let mut count = 0;
        let mut prev = g.eval(&Rational::new((-201).into(), 2.into()));
        for k in -100..=100 {
            if g.eval(&int(k)).is_zero() {
                count += 1;
            }
            let here = g.eval(&Rational::new((2 * k + 1).into(), 2.into()));
            if !prev.is_zero() && !here.is_zero() && prev.is_positive() != here.is_positive() {
                // a sign change across an integer must be a root there
                assert!(g.eval(&int(k)).is_zero());
            }
            prev = here;
        }
        count
    }

    proptest! {
        #[test]
        fn matches_grid_oracle(
            roots in proptest::collection::vec(-100i64..=100, 1..6),
            quad in proptest::option::of((-5i64..=5, 1i64..=5)),
        ) {
            let mut f = roots.iter().fold(Poly::one(), |acc, &r| &acc * &Poly::linear_root(&int(r)));
            if let Some((p, q)) = quad {
                // X^2 + pX + q' with p^2 - 4q' < 0
                let qq = p * p + q;
                f = &f * &Poly::from_i64(&[qq, p, 1]);
            }
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            let n = sturm_count(&f).unwrap();
            prop_assert_eq!(n, distinct.len());
            prop_assert_eq!(n, grid_oracle(&f));
        }
    }
}
