//! The quasi-classical limit: commutative polynomials in `y[i,j]` with the
//! bracket `{y_ij, y_kl} = (theta(i,k) + theta(j,l)) y_il y_kj`, extended to
//! all polynomials as a biderivation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::{all_gens, theta, AlgebraElement, Gen, Monomial, QAlgebra};
use crate::coeff::{rat, Rational};
use crate::error::{Error, Result};

/// A commutative polynomial in `y[i,j]` with rational coefficients.
///
/// Monomials reuse [`Monomial`] as sorted generator multisets.
#[derive(Clone, PartialEq, Eq)]
pub struct CPoly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl CPoly {
    pub fn zero(n: usize) -> Self {
        CPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut out = Self::zero(n);
        out.add_term(Monomial::one(), c);
        out
    }

    pub fn var(n: usize, i: usize, j: usize) -> Result<Self> {
        let g = Gen::checked(i, j, n)?;
        let mut out = Self::zero(n);
        out.add_term(Monomial::from_gens([g]), Rational::one());
        Ok(out)
    }

    /// `c` times the product of the given generators, in any order.
    pub fn monomial<I: IntoIterator<Item = Gen>>(n: usize, gens: I, c: Rational) -> Self {
        let mut out = Self::zero(n);
        out.add_term(Monomial::sorted(gens), c);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert!(m.is_normal());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: &CPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CPoly) -> Result<CPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CPoly) -> Result<CPoly> {
        self.try_add(&other.scale(&rat(-1)))
    }

    pub fn try_mul(&self, other: &CPoly) -> Result<CPoly> {
        self.check(other)?;
        let mut out = CPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(
                    Monomial::sorted(ma.letters().iter().chain(mb.letters()).copied()),
                    ca * cb,
                );
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> CPoly {
        let mut out = CPoly::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Partial derivative with respect to `y[g]`.
    pub fn partial(&self, g: Gen) -> CPoly {
        let mut out = CPoly::zero(self.n);
        for (m, c) in &self.terms {
            let letters = m.letters();
            let e = letters.iter().filter(|&&h| h == g).count();
            if e == 0 {
                continue;
            }
            let pos = letters.iter().position(|&h| h == g).unwrap();
            let rest =
                Monomial::from_gens(letters[..pos].iter().chain(&letters[pos + 1..]).copied());
            out.add_term(rest, c * rat(e as i64));
        }
        out
    }

    /// Generators that occur in some monomial.
    pub fn support(&self) -> Vec<Gen> {
        let mut gens: Vec<Gen> = self
            .terms
            .keys()
            .flat_map(|m| m.letters().iter().copied())
            .collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    /// Substitutes rational values for the variables (`values[(i-1)*n + (j-1)]`).
    pub fn eval(&self, values: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let v = m.letters().iter().fold(c.clone(), |p, g| {
                p * &values[(g.row() - 1) * self.n + g.col() - 1]
            });
            acc + v
        })
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            let letters = m.letters();
            let mut p = 0;
            while p < letters.len() {
                let g = letters[p];
                let run = letters[p..].iter().take_while(|&&h| h == g).count();
                write!(f, "*y[{},{}]", g.row, g.col)?;
                if run > 1 {
                    write!(f, "^{run}")?;
                }
                p += run;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CPoly[n={}]({self})", self.n)
    }
}

fn gen_bracket(n: usize, a: Gen, b: Gen) -> CPoly {
    let (i, j, k, l) = (a.row(), a.col(), b.row(), b.col());
    let c = theta(i, k) + theta(j, l);
    CPoly::monomial(n, [Gen::new(i, l), Gen::new(k, j)], rat(c as i64))
}

/// `{y_ij, y_kl}`.
pub fn pbracket_gen(n: usize, i: usize, j: usize, k: usize, l: usize) -> Result<CPoly> {
    let a = Gen::checked(i, j, n)?;
    let b = Gen::checked(k, l, n)?;
    Ok(gen_bracket(n, a, b))
}

/// `{f, g} = sum over (a, b) of df/dy_a * dg/dy_b * {y_a, y_b}`.
pub fn pbracket(f: &CPoly, g: &CPoly) -> Result<CPoly> {
    f.check(g)?;
    let n = f.n;
    let mut out = CPoly::zero(n);
    let g_partials: Vec<(Gen, CPoly)> =
        g.support().into_iter().map(|b| (b, g.partial(b))).collect();
    for a in f.support() {
        let fa = f.partial(a);
        for (b, gb) in &g_partials {
            let br = gen_bracket(n, a, *b);
            if br.is_zero() {
                continue;
            }
            out = out.try_add(&fa.try_mul(gb)?.try_mul(&br)?)?;
        }
    }
    Ok(out)
}

/// The same bracket computed by expanding each monomial pair with the
/// Leibniz rule down to generator brackets. Independent of [`pbracket`].
pub fn pbracket_leibniz(f: &CPoly, g: &CPoly) -> Result<CPoly> {
    f.check(g)?;
    let n = f.n;
    let mut out = CPoly::zero(n);
    for (u, cu) in f.terms() {
        for (v, cv) in g.terms() {
            let br = monomial_bracket(n, u.letters(), v.letters());
            out = out.try_add(&br.scale(&(cu * cv)))?;
        }
    }
    Ok(out)
}

fn product_of(n: usize, gens: &[Gen]) -> CPoly {
    CPoly::monomial(n, gens.iter().copied(), Rational::one())
}

// {a u', v} = a {u', v} + {a, v} u'
fn monomial_bracket(n: usize, u: &[Gen], v: &[Gen]) -> CPoly {
    match u.split_first() {
        None => CPoly::zero(n),
        Some((&a, rest)) => {
            let left = product_of(n, &[a])
                .try_mul(&monomial_bracket(n, rest, v))
                .unwrap();
            let right = gen_with_monomial(n, a, v)
                .try_mul(&product_of(n, rest))
                .unwrap();
            left.try_add(&right).unwrap()
        }
    }
}

// {a, b v'} = b {a, v'} + {a, b} v'
fn gen_with_monomial(n: usize, a: Gen, v: &[Gen]) -> CPoly {
    match v.split_first() {
        None => CPoly::zero(n),
        Some((&b, rest)) => {
            let left = product_of(n, &[b])
                .try_mul(&gen_with_monomial(n, a, rest))
                .unwrap();
            let right = gen_bracket(n, a, b).try_mul(&product_of(n, rest)).unwrap();
            left.try_add(&right).unwrap()
        }
    }
}

/// `Tr(Y^k)` for the ordinary matrix power of the generic commutative matrix.
pub fn classical_trace_power(n: usize, k: usize) -> Result<CPoly> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            range: "1..".into(),
        });
    }
    let y: Vec<CPoly> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| CPoly::var(n, i, j))
        .collect::<Result<_>>()?;
    let mut power = y.clone();
    for _ in 1..k {
        let mut next = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CPoly::zero(n);
                for s in 0..n {
                    acc = acc.try_add(&power[i * n + s].try_mul(&y[s * n + j])?)?;
                }
                next.push(acc);
            }
        }
        power = next;
    }
    (0..n).try_fold(CPoly::zero(n), |acc, i| acc.try_add(&power[i * n + i]))
}

/// `{Tr(Y^k), Tr(Y^m)}`.
pub fn involution_residual(n: usize, k: usize, m: usize) -> Result<CPoly> {
    pbracket(&classical_trace_power(n, k)?, &classical_trace_power(n, m)?)
}

/// Reads an element at `q = 1` as a commutative polynomial.
pub fn classical_shadow(a: &AlgebraElement) -> Result<CPoly> {
    let special = a.specialize(&Rational::one())?;
    let mut out = CPoly::zero(a.n());
    for (m, c) in special.terms() {
        out.add_term(m.clone(), c.clone());
    }
    Ok(out)
}

/// Coefficient-wise `d/dq` at `q = 1`, read commutatively.
pub fn derivative_shadow(a: &AlgebraElement) -> CPoly {
    let mut out = CPoly::zero(a.n());
    for (m, c) in a.terms() {
        out.add_term(m.clone(), c.derivative_at_one());
    }
    out
}

/// `D([x_ij, x_kl]) - {y_ij, y_kl}` where `D` is [`derivative_shadow`].
pub fn semiclassical_generator_residual(
    alg: &QAlgebra,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<CPoly> {
    let comm = alg.commutator(&alg.gen(i, j)?, &alg.gen(k, l)?)?;
    derivative_shadow(&comm).try_sub(&pbracket_gen(alg.n(), i, j, k, l)?)
}

/// A random polynomial with up to `max_terms` terms of degree at most
/// `max_degree` and small integer coefficients.
pub fn random_cpoly<R: Rng>(rng: &mut R, n: usize, max_terms: usize, max_degree: usize) -> CPoly {
    let gens = all_gens(n);
    let mut out = CPoly::zero(n);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let degree = rng.gen_range(0..=max_degree);
        let mono: Vec<Gen> = (0..degree)
            .map(|_| gens[rng.gen_range(0..gens.len())])
            .collect();
        let c = rng.gen_range(-3i64..=3);
        out.add_term(Monomial::sorted(mono), rat(c));
    }
    out
}
