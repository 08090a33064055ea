//! The coordinate ring of `n x n` quantum matrices, presented as a
//! rewriting system on words in the generators `x[i,j]`.
//!
//! Generators are ordered row-major and normal monomials are non-decreasing
//! words. An out-of-order adjacent pair `x[k,l] x[i,j]` with `(i,j) < (k,l)`
//! is rewritten by one of four rules:
//!
//! | shape               | rewrite                                         |
//! |---------------------|-------------------------------------------------|
//! | `i = k`, `j < l`    | `q^-1 x[i,j] x[i,l]`                            |
//! | `i < k`, `j = l`    | `q^-1 x[i,j] x[k,j]`                            |
//! | `i < k`, `j > l`    | `x[i,j] x[k,l]`                                 |
//! | `i < k`, `j < l`    | `x[i,j] x[k,l] - (q - q^-1) x[i,l] x[k,j]`      |
//!
//! Every rewrite keeps the degree and makes the word lexicographically
//! smaller, so reduction terminates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering as AtomicOrdering};
use std::sync::{Arc, RwLock};
use std::time::Instant;

use dashmap::DashMap;
use num_traits::Zero;
use smallvec::SmallVec;

use crate::coeff::{LaurentPoly, Rational, Scalar};
use crate::error::{Error, Result};
use crate::par;

/// Sign of `j - i`.
pub fn theta(i: usize, j: usize) -> i32 {
    match i.cmp(&j) {
        Ordering::Less => 1,
        Ordering::Equal => 0,
        Ordering::Greater => -1,
    }
}

/// The generator `x[row,col]`, 1-based. Ordered row-major.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen {
    pub row: u8,
    pub col: u8,
}

impl Gen {
    pub fn new(row: usize, col: usize) -> Self {
        Gen {
            row: row as u8,
            col: col as u8,
        }
    }

    pub fn checked(row: usize, col: usize, n: usize) -> Result<Self> {
        if row == 0 || col == 0 || row > n || col > n {
            return Err(Error::IndexOutOfRange { row, col, n });
        }
        Ok(Gen::new(row, col))
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    fn in_range(self, n: usize) -> bool {
        self.row >= 1 && self.col >= 1 && self.row() <= n && self.col() <= n
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// A word in the generators. Ordered by degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[Gen; 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn from_gens<I: IntoIterator<Item = Gen>>(gens: I) -> Self {
        Monomial(gens.into_iter().collect())
    }

    /// A normal monomial from an arbitrary multiset of generators.
    pub fn sorted<I: IntoIterator<Item = Gen>>(gens: I) -> Self {
        let mut word: SmallVec<[Gen; 8]> = gens.into_iter().collect();
        word.sort_unstable();
        Monomial(word)
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn last(&self) -> Option<Gen> {
        self.0.last().copied()
    }

    fn with(&self, g: Gen) -> Monomial {
        let mut word = self.0.clone();
        word.push(g);
        Monomial(word)
    }

    fn concat(&self, other: &Monomial) -> Monomial {
        let mut word = self.0.clone();
        word.extend_from_slice(&other.0);
        Monomial(word)
    }

    fn split_last(&self) -> Option<(Monomial, Gen)> {
        let (&last, rest) = self.0.split_last()?;
        Some((Monomial(SmallVec::from_slice(rest)), last))
    }

    /// Sorted row indices and sorted column indices.
    pub fn bidegree(&self) -> (Vec<u8>, Vec<u8>) {
        let mut rows: Vec<u8> = self.0.iter().map(|g| g.row).collect();
        let mut cols: Vec<u8> = self.0.iter().map(|g| g.col).collect();
        rows.sort_unstable();
        cols.sort_unstable();
        (rows, cols)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (idx, g) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A linear combination of normal monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<C> {
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

/// An element of the quantum matrix algebra over `Q[q, q^-1]`.
pub type AlgebraElement = Element<LaurentPoly>;

/// An element with `q` specialized to a rational number.
pub type NumericElement = Element<Rational>;

impl<C: Scalar> Element<C> {
    pub fn zero(n: usize) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, C::one())
    }

    pub fn scalar(n: usize, c: C) -> Self {
        Self::term(n, Monomial::one(), c)
    }

    pub fn term(n: usize, mono: Monomial, c: C) -> Self {
        let mut out = Self::zero(n);
        out.add_term(mono, &c);
        out
    }

    pub fn generator(n: usize, row: usize, col: usize) -> Result<Self> {
        let g = Gen::checked(row, col, n)?;
        Ok(Self::term(n, Monomial::from_gens([g]), C::one()))
    }

    /// Builds an element from terms that are already normal.
    pub(crate) fn from_normal_terms<I: IntoIterator<Item = (Monomial, C)>>(
        n: usize,
        terms: I,
    ) -> Self {
        let mut out = Self::zero(n);
        for (m, c) in terms {
            debug_assert!(m.is_normal());
            out.add_term(m, &c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
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

    pub(crate) fn add_term(&mut self, mono: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v.clone() * c));
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_sizes(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_sizes(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c.clone());
        }
        Ok(out)
    }

    /// True when every monomial has the same row multiset and the same
    /// column multiset.
    pub fn is_bihomogeneous(&self) -> bool {
        let mut grades = self.terms.keys().map(Monomial::bidegree);
        match grades.next() {
            None => true,
            Some(first) => grades.all(|g| g == first),
        }
    }

    /// Counts monomials whose row multiset minus column multiset differs
    /// from `offset` (indexed by `1..=n`, entry 0 unused).
    pub fn bigrading_violations(&self, offset: &[i64]) -> usize {
        self.terms
            .keys()
            .filter(|m| {
                let mut balance = vec![0i64; self.n + 1];
                for g in m.letters() {
                    balance[g.row()] += 1;
                    balance[g.col()] -= 1;
                }
                balance.as_slice() != offset
            })
            .count()
    }
}

impl AlgebraElement {
    pub fn q_scalar(n: usize, c: LaurentPoly) -> Self {
        Self::scalar(n, c)
    }

    /// Evaluates every coefficient at `q = value`.
    pub fn specialize(&self, value: &Rational) -> Result<NumericElement> {
        if value.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        let mut out = NumericElement::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.eval(value)?);
        }
        Ok(out)
    }
}

pub fn alg_specialize(a: &AlgebraElement, qvalue: &Rational) -> Result<NumericElement> {
    a.specialize(qvalue)
}

fn check_sizes(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

impl<C: Scalar> Add for &Element<C> {
    type Output = Element<C>;

    fn add(self, rhs: &Element<C>) -> Element<C> {
        self.try_add(rhs).expect("ambient sizes differ")
    }
}

impl<C: Scalar> Sub for &Element<C> {
    type Output = Element<C>;

    fn sub(self, rhs: &Element<C>) -> Element<C> {
        self.try_sub(rhs).expect("ambient sizes differ")
    }
}

impl<C: Scalar> Neg for &Element<C> {
    type Output = Element<C>;

    fn neg(self) -> Element<C> {
        self.scale(&-C::one())
    }
}

impl<C: fmt::Display> fmt::Display for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

impl<C: fmt::Display> fmt::Debug for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[n={}]({self})", self.n)
    }
}

/// Pair-selection rule for the literal rewriting reducer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Cached<C> = Arc<[(Monomial, C)]>;

struct Acc<C>(HashMap<Monomial, C>);

impl<C: Scalar> Acc<C> {
    fn new() -> Self {
        Acc(HashMap::new())
    }

    fn add(&mut self, m: Monomial, c: C) {
        match self.0.get_mut(&m) {
            Some(slot) => *slot += &c,
            None => {
                self.0.insert(m, c);
            }
        }
    }

    fn merge(&mut self, other: Acc<C>) {
        for (m, c) in other.0 {
            self.add(m, c);
        }
    }

    fn into_nonzero(self) -> impl Iterator<Item = (Monomial, C)> {
        self.0.into_iter().filter(|(_, c)| !c.is_zero())
    }
}

/// Reduction context for the algebra of `n x n` quantum matrices over the
/// coefficient ring `C`.
///
/// Holds the memo table for right insertion of a generator into a normal
/// monomial; the table is shared by all threads using the context.
pub struct Algebra<C: Scalar> {
    n: usize,
    q: C,
    q_inv: C,
    correction: C,
    cache: DashMap<(Monomial, Gen), Cached<C>>,
    deadline: RwLock<Option<Instant>>,
    parallel: AtomicBool,
    violations: AtomicUsize,
}

/// The generic-`q` algebra.
pub type QAlgebra = Algebra<LaurentPoly>;

/// The algebra with `q` specialized to a rational number.
pub type NumericAlgebra = Algebra<Rational>;

impl QAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_q(n, LaurentPoly::q(), LaurentPoly::q_pow(-1))
    }
}

impl NumericAlgebra {
    pub fn at(n: usize, value: &Rational) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        Self::with_q(n, value.clone(), value.recip())
    }
}

impl<C: Scalar> Algebra<C> {
    fn with_q(n: usize, q: C, q_inv: C) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        if n > u8::MAX as usize {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                range: format!("1..={}", u8::MAX),
            });
        }
        let mut correction = q.clone();
        correction += &-q_inv.clone();
        Ok(Algebra {
            n,
            q,
            q_inv,
            correction: -correction,
            cache: DashMap::new(),
            deadline: RwLock::new(None),
            parallel: AtomicBool::new(cfg!(feature = "parallel")),
            violations: AtomicUsize::new(0),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `q^e` in the coefficient ring.
    pub fn q_pow(&self, e: i32) -> C {
        let base = if e < 0 { &self.q_inv } else { &self.q };
        (0..e.unsigned_abs()).fold(C::one(), |acc, _| acc * base)
    }

    /// `(-q)^e` in the coefficient ring.
    pub fn neg_q_pow(&self, e: i32) -> C {
        let p = self.q_pow(e);
        if e.rem_euclid(2) == 0 {
            p
        } else {
            -p
        }
    }

    /// Toggles data-parallel multiplication. Has no effect without the
    /// `parallel` feature.
    pub fn set_parallel(&self, on: bool) {
        self.parallel
            .store(on && cfg!(feature = "parallel"), AtomicOrdering::Relaxed);
    }

    pub fn is_parallel(&self) -> bool {
        self.parallel.load(AtomicOrdering::Relaxed)
    }

    /// Long multiplications abort with [`Error::BudgetExceeded`] after
    /// `deadline`.
    pub fn set_deadline(&self, deadline: Option<Instant>) {
        *self.deadline.write().unwrap() = deadline;
    }

    pub fn check_budget(&self) -> Result<()> {
        match *self.deadline.read().unwrap() {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded),
            _ => Ok(()),
        }
    }

    /// Number of memoized insertion results that failed the row/column
    /// multiset check. Stays zero for a correct rule table.
    pub fn bigrading_violations(&self) -> usize {
        self.violations.load(AtomicOrdering::Relaxed)
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }

    pub fn zero(&self) -> Element<C> {
        Element::zero(self.n)
    }

    pub fn one(&self) -> Element<C> {
        Element::one(self.n)
    }

    pub fn scalar(&self, c: C) -> Element<C> {
        Element::scalar(self.n, c)
    }

    pub fn gen(&self, row: usize, col: usize) -> Result<Element<C>> {
        Element::generator(self.n, row, col)
    }

    /// The rewrite of an adjacent pair `a b`. In-order pairs are returned
    /// unchanged; the result always consists of in-order pairs.
    pub fn rewrite_pair(&self, a: Gen, b: Gen) -> SmallVec<[(C, Gen, Gen); 2]> {
        let mut out = SmallVec::new();
        if a <= b {
            out.push((C::one(), a, b));
            return out;
        }
        // a = x[k,l], b = x[i,j], (i,j) < (k,l)
        if a.row == b.row || a.col == b.col {
            out.push((self.q_inv.clone(), b, a));
        } else if b.col > a.col {
            out.push((C::one(), b, a));
        } else {
            out.push((C::one(), b, a));
            out.push((
                self.correction.clone(),
                Gen {
                    row: b.row,
                    col: a.col,
                },
                Gen {
                    row: a.row,
                    col: b.col,
                },
            ));
        }
        out
    }

    fn insert_right(&self, m: &Monomial, g: Gen, coef: &C, acc: &mut Acc<C>) {
        match m.last() {
            Some(a) if a > g => {
                let cached = self.insert_right_cached(m, g);
                for (mono, c) in cached.iter() {
                    acc.add(mono.clone(), coef.clone() * c);
                }
            }
            _ => acc.add(m.with(g), coef.clone()),
        }
    }

    fn insert_right_cached(&self, m: &Monomial, g: Gen) -> Cached<C> {
        let key = (m.clone(), g);
        if let Some(hit) = self.cache.get(&key) {
            return hit.value().clone();
        }
        let (prefix, a) = m.split_last().expect("non-empty monomial");
        let mut acc = Acc::new();
        for (c, first, second) in self.rewrite_pair(a, g) {
            let mut mid = Acc::new();
            self.insert_right(&prefix, first, &c, &mut mid);
            for (mono, cm) in mid.into_nonzero() {
                self.insert_right(&mono, second, &cm, &mut acc);
            }
        }
        let mut terms: Vec<(Monomial, C)> = acc.into_nonzero().collect();
        terms.sort_by(|x, y| x.0.cmp(&y.0));

        let expected = m.with(g).bidegree();
        let bad = terms
            .iter()
            .filter(|(mono, _)| mono.bidegree() != expected)
            .count();
        if bad > 0 {
            self.violations.fetch_add(bad, AtomicOrdering::Relaxed);
        }

        let terms: Cached<C> = terms.into();
        self.cache.insert(key, terms.clone());
        terms
    }

    /// `u v` for normal `u` and `v`.
    fn mul_monomials(&self, u: &Monomial, v: &Monomial, coef: &C, acc: &mut Acc<C>) {
        match (u.last(), v.letters().first()) {
            (Some(a), Some(&b)) if a > b => {}
            _ => {
                acc.add(u.concat(v), coef.clone());
                return;
            }
        }
        let mut cur = Acc::new();
        cur.add(u.clone(), coef.clone());
        for &g in v.letters() {
            let mut next = Acc::new();
            for (mono, c) in cur.into_nonzero() {
                self.insert_right(&mono, g, &c, &mut next);
            }
            cur = next;
        }
        acc.merge(cur);
    }

    fn check_word(&self, word: &[Gen]) -> Result<()> {
        match word.iter().find(|g| !g.in_range(self.n)) {
            Some(g) => Err(Error::IndexOutOfRange {
                row: g.row(),
                col: g.col(),
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Normal form of a word via memoized right insertion.
    pub fn reduce_word(&self, word: &[Gen]) -> Result<Element<C>> {
        self.check_word(word)?;
        let mut cur = Acc::new();
        cur.add(Monomial::one(), C::one());
        for &g in word {
            let mut next = Acc::new();
            for (mono, c) in cur.into_nonzero() {
                self.insert_right(&mono, g, &c, &mut next);
            }
            cur = next;
        }
        Ok(Element::from_normal_terms(self.n, cur.into_nonzero()))
    }

    /// Normal form of a word by literal rewriting of one adjacent
    /// out-of-order pair at a time, chosen by `strategy`. No memoization.
    pub fn reduce_word_with(&self, word: &[Gen], strategy: Strategy) -> Result<Element<C>> {
        self.check_word(word)?;
        let mut out = Element::zero(self.n);
        let mut pending: BTreeMap<Vec<Gen>, C> = BTreeMap::new();
        pending.insert(word.to_vec(), C::one());
        // Every rewrite makes a word lexicographically smaller, so taking the
        // largest pending word visits each word once.
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            let mut bad = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]);
            let pos = match strategy {
                Strategy::Leftmost => bad.next(),
                Strategy::Rightmost => bad.next_back(),
            };
            let Some(pos) = pos else {
                out.add_term(Monomial::from_gens(w), &c);
                continue;
            };
            for (rc, first, second) in self.rewrite_pair(w[pos], w[pos + 1]) {
                let mut next = w.clone();
                next[pos] = first;
                next[pos + 1] = second;
                let coef = c.clone() * &rc;
                match pending.get_mut(&next) {
                    Some(slot) => *slot += &coef,
                    None => {
                        pending.insert(next, coef);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, a: &Element<C>, b: &Element<C>) -> Result<Element<C>> {
        check_sizes(a.n, self.n)?;
        check_sizes(b.n, self.n)?;
        if a.is_zero() || b.is_zero() {
            return Ok(self.zero());
        }
        let left: Vec<(&Monomial, &C)> = a.terms.iter().collect();
        let work = left.len() * b.len();
        let parallel = self.is_parallel() && work >= 64;
        let partials = par::map(&left, parallel, |(u, cu)| -> Result<Acc<C>> {
            self.check_budget()?;
            let mut acc = Acc::new();
            for (v, cv) in &b.terms {
                let coef = (*cu).clone() * cv;
                self.mul_monomials(u, v, &coef, &mut acc);
            }
            Ok(acc)
        });
        let mut total = Acc::new();
        for p in partials {
            total.merge(p?);
        }
        Ok(Element::from_normal_terms(self.n, total.into_nonzero()))
    }

    /// Product of several factors, left to right.
    pub fn product<'a, I>(&self, factors: I) -> Result<Element<C>>
    where
        I: IntoIterator<Item = &'a Element<C>>,
    {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &Element<C>, k: u32) -> Result<Element<C>> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &Element<C>, b: &Element<C>) -> Result<Element<C>> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        ab.try_sub(&ba)
    }
}

pub fn reduce_word<C: Scalar>(alg: &Algebra<C>, word: &[Gen]) -> Result<Element<C>> {
    alg.reduce_word(word)
}

pub fn alg_mul<C: Scalar>(alg: &Algebra<C>, a: &Element<C>, b: &Element<C>) -> Result<Element<C>> {
    alg.mul(a, b)
}

pub fn alg_commutator<C: Scalar>(
    alg: &Algebra<C>,
    a: &Element<C>,
    b: &Element<C>,
) -> Result<Element<C>> {
    alg.commutator(a, b)
}

/// All words of length `degree` over the `n^2` generators.
pub fn all_words(n: usize, degree: usize) -> Vec<Vec<Gen>> {
    let gens: Vec<Gen> = all_gens(n);
    let mut words: Vec<Vec<Gen>> = vec![Vec::new()];
    for _ in 0..degree {
        words = words
            .into_iter()
            .flat_map(|w| {
                gens.iter().map(move |&g| {
                    let mut next = w.clone();
                    next.push(g);
                    next
                })
            })
            .collect();
    }
    words
}

/// Generators in row-major order.
pub fn all_gens(n: usize) -> Vec<Gen> {
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| Gen::new(i, j)))
        .collect()
}

impl<C: Scalar> fmt::Debug for Algebra<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("n", &self.n)
            .field("cached", &self.cache.len())
            .finish()
    }
}
