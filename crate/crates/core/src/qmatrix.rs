//! Matrices over the quantum matrix algebra, the q-weighted product and
//! quantum powers.

use std::fmt;

use crate::algebra::{theta, AlgebraElement, QAlgebra};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::par;

/// An `n x n` grid of algebra elements, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    entries: Vec<AlgebraElement>,
}

impl QMatrix {
    pub fn from_fn<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> AlgebraElement,
    {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let e = f(i, j);
                assert_eq!(e.n(), n, "entry ({i},{j}) lives in a different algebra");
                entries.push(e);
            }
        }
        QMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| AlgebraElement::zero(n))
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar_diagonal(n, &AlgebraElement::one(n))
    }

    /// `s` on the diagonal, zero elsewhere.
    pub fn scalar_diagonal(n: usize, s: &AlgebraElement) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                s.clone()
            } else {
                AlgebraElement::zero(n)
            }
        })
    }

    /// The generic matrix `X` with `x[i,j]` in entry `(i,j)`.
    pub fn generic(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            AlgebraElement::generator(n, i, j).expect("indices within range")
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i,j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &AlgebraElement)> {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .map(move |(idx, e)| (idx / n + 1, idx % n + 1, e))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    /// Total number of terms across all entries.
    pub fn term_count(&self) -> usize {
        self.entries.iter().map(AlgebraElement::len).sum()
    }

    fn check_size(&self, other: &QMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QMatrix) -> Result<QMatrix> {
        self.check_size(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(QMatrix { n: self.n, entries })
    }

    pub fn try_sub(&self, other: &QMatrix) -> Result<QMatrix> {
        self.check_size(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_sub(b))
            .collect::<Result<_>>()?;
        Ok(QMatrix { n: self.n, entries })
    }

    pub fn scale(&self, c: &LaurentPoly) -> QMatrix {
        QMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }
}

fn check_alg(alg: &QAlgebra, a: &QMatrix) -> Result<()> {
    if alg.n() != a.n {
        return Err(Error::SizeMismatch {
            left: a.n,
            right: alg.n(),
        });
    }
    Ok(())
}

/// `(A * B)_{ij} = sum_k q^{theta(j,k)} a_{ik} b_{kj}`. Not associative.
pub fn star(alg: &QAlgebra, a: &QMatrix, b: &QMatrix) -> Result<QMatrix> {
    a.check_size(b)?;
    check_alg(alg, a)?;
    let n = a.n;
    let entries = par::map_range(n * n, alg.is_parallel(), |idx| {
        let (i, j) = (idx / n + 1, idx % n + 1);
        let mut acc = AlgebraElement::zero(n);
        for k in 1..=n {
            let (aik, bkj) = (a.get(i, k), b.get(k, j));
            if aik.is_zero() || bkj.is_zero() {
                continue;
            }
            let prod = alg.mul(aik, bkj)?;
            acc = acc.try_add(&prod.scale(&LaurentPoly::q_pow(theta(j, k))))?;
        }
        Ok(acc)
    });
    Ok(QMatrix {
        n,
        entries: entries.into_iter().collect::<Result<_>>()?,
    })
}

/// Left-nested quantum power: `X^0 = I`, `X^k = X * X^{k-1}`.
pub fn qpower(alg: &QAlgebra, x: &QMatrix, k: i64) -> Result<QMatrix> {
    if k < 0 {
        return Err(Error::NegativeExponent(k));
    }
    check_alg(alg, x)?;
    let mut acc = QMatrix::identity(x.n);
    for step in 0..k {
        acc = if step == 0 {
            x.clone()
        } else {
            star(alg, x, &acc)?
        };
    }
    Ok(acc)
}

/// Sum of the diagonal entries.
pub fn trace(a: &QMatrix) -> AlgebraElement {
    (1..=a.n).fold(AlgebraElement::zero(a.n), |acc, i| &acc + a.get(i, i))
}

/// Multiplies every entry by `s` on the right.
pub fn right_scalar_mul(alg: &QAlgebra, a: &QMatrix, s: &AlgebraElement) -> Result<QMatrix> {
    check_alg(alg, a)?;
    if s.n() != a.n {
        return Err(Error::SizeMismatch {
            left: a.n,
            right: s.n(),
        });
    }
    let entries = par::map(&a.entries, alg.is_parallel(), |e| alg.mul(e, s));
    Ok(QMatrix {
        n: a.n,
        entries: entries.into_iter().collect::<Result<_>>()?,
    })
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, e) in self.entries() {
            writeln!(f, "[{i},{j}] {e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix(n={})\n{self}", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gen, Monomial};
    use crate::coeff::rat;
    use num_traits::One;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    fn m(gens: &[(usize, usize)]) -> Monomial {
        Monomial::from_gens(gens.iter().map(|&(i, j)| Gen::new(i, j)))
    }

    #[test]
    fn star_of_identities() {
        let alg = QAlgebra::new(3).unwrap();
        let id = QMatrix::identity(3);
        assert_eq!(star(&alg, &id, &id).unwrap(), id);
    }

    #[test]
    fn star_square_entries_n2() {
        let alg = QAlgebra::new(2).unwrap();
        let x = QMatrix::generic(2);
        let sq = star(&alg, &x, &x).unwrap();
        let e11 = sq.get(1, 1);
        assert_eq!(e11.len(), 2);
        assert_eq!(e11.coeff(&m(&[(1, 1), (1, 1)])), LaurentPoly::one());
        assert_eq!(e11.coeff(&m(&[(1, 2), (2, 1)])), LaurentPoly::q());
        let e22 = sq.get(2, 2);
        assert_eq!(e22.len(), 2);
        assert_eq!(e22.coeff(&m(&[(2, 2), (2, 2)])), LaurentPoly::one());
        assert_eq!(e22.coeff(&m(&[(1, 2), (2, 1)])), LaurentPoly::q_pow(-1));
    }

    #[test]
    fn qpower_base_cases() {
        let alg = QAlgebra::new(2).unwrap();
        let x = QMatrix::generic(2);
        assert_eq!(qpower(&alg, &x, 0).unwrap(), QMatrix::identity(2));
        assert_eq!(qpower(&alg, &x, 1).unwrap(), x);
        assert_eq!(qpower(&alg, &x, -1), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn qpower_n1_is_ordinary_power() {
        let alg = QAlgebra::new(1).unwrap();
        let x = QMatrix::generic(1);
        for k in 0..6 {
            let p = qpower(&alg, &x, k).unwrap();
            let expected = Monomial::from_gens(std::iter::repeat_n(Gen::new(1, 1), k as usize));
            assert_eq!(
                p.get(1, 1),
                &AlgebraElement::term(1, expected, LaurentPoly::one())
            );
        }
    }

    #[test]
    fn trace_examples() {
        let alg = QAlgebra::new(2).unwrap();
        assert_eq!(
            trace(&QMatrix::identity(2)),
            AlgebraElement::scalar(2, LaurentPoly::integer(2))
        );
        let x = QMatrix::generic(2);
        let t1 = trace(&x);
        assert_eq!(t1.len(), 2);
        let t2 = trace(&qpower(&alg, &x, 2).unwrap());
        assert_eq!(t2.len(), 3);
        assert_eq!(t2.coeff(&m(&[(1, 2), (2, 1)])), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(t2.coeff(&m(&[(1, 1), (1, 1)])), LaurentPoly::one());
        assert_eq!(t2.coeff(&m(&[(2, 2), (2, 2)])), LaurentPoly::one());
    }

    #[test]
    fn right_scalar_mul_examples() {
        let alg = QAlgebra::new(2).unwrap();
        let x = QMatrix::generic(2);
        assert_eq!(right_scalar_mul(&alg, &x, &alg.one()).unwrap(), x);
        let s = &alg.gen(1, 2).unwrap() + &alg.gen(2, 1).unwrap();
        assert_eq!(
            right_scalar_mul(&alg, &QMatrix::identity(2), &s).unwrap(),
            QMatrix::scalar_diagonal(2, &s)
        );
        let r = right_scalar_mul(&alg, &x, &alg.gen(1, 1).unwrap()).unwrap();
        assert_eq!(
            r.get(1, 2),
            &AlgebraElement::term(2, m(&[(1, 1), (1, 2)]), LaurentPoly::q_pow(-1))
        );
    }

    #[test]
    fn star_is_not_associative_n2() {
        let alg = QAlgebra::new(2).unwrap();
        let x = QMatrix::generic(2);
        let xx = star(&alg, &x, &x).unwrap();
        let left = star(&alg, &xx, &x).unwrap();
        let right = star(&alg, &x, &xx).unwrap();
        assert_ne!(left, right);
    }

    #[test]
    fn diagonal_central_entries_are_two_sided_units() {
        let alg = QAlgebra::new(2).unwrap();
        let d = QMatrix::from_fn(2, |i, j| {
            if i == j {
                AlgebraElement::scalar(2, lp(&[(i as i32, 1), (0, 2)]))
            } else {
                AlgebraElement::zero(2)
            }
        });
        let id = QMatrix::identity(2);
        assert_eq!(star(&alg, &d, &id).unwrap(), d);
        assert_eq!(star(&alg, &id, &d).unwrap(), d);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let alg = QAlgebra::new(2).unwrap();
        let err = star(&alg, &QMatrix::identity(2), &QMatrix::identity(3)).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 2, right: 3 });
    }
}
