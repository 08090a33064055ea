//! Quantum minors, the quantum determinant and sums of principal minors.

use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;

use crate::algebra::{AlgebraElement, Gen, QAlgebra};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};

/// A strictly increasing subset of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut elements: Vec<usize>, n: usize) -> Result<Self> {
        let sorted = elements.windows(2).all(|w| w[0] < w[1]);
        if !sorted || elements.iter().any(|&e| e == 0 || e > n) {
            elements.sort_unstable();
            return Err(Error::InvalidIndexSet { elements, n });
        }
        Ok(IndexSet(elements))
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    /// All `k`-element subsets of `{1..n}` in lexicographic order.
    pub fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
        fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == k {
                out.push(IndexSet(cur.clone()));
                return;
            }
            for v in start..=n {
                if n - v + 1 < k - cur.len() {
                    break;
                }
                cur.push(v);
                go(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k <= n {
            go(1, n, k, &mut Vec::with_capacity(k), &mut out);
        }
        out
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: usize) -> bool {
        self.0.binary_search(&u).is_ok()
    }

    pub fn without(&self, u: usize) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|&e| e != u).collect())
    }

    pub fn with(&self, u: usize) -> IndexSet {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&u) {
            v.insert(pos, u);
        }
        IndexSet(v)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A bijection of `{1..k}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k + 1];
        for &v in &images {
            if v == 0 || v > k || seen[v] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// All permutations of `{1..k}`.
    pub fn all(k: usize) -> Vec<Permutation> {
        fn go(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == k {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=k {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    go(k, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(
            k,
            &mut Vec::with_capacity(k),
            &mut vec![false; k + 1],
            &mut out,
        );
        out
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`.
    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }
}

pub fn inversions(p: &Permutation) -> usize {
    p.inversions()
}

/// `|{ j in set : u > j }|`.
pub fn l_count(u: usize, set: &IndexSet) -> usize {
    set.elements().iter().filter(|&&j| u > j).count()
}

fn check_shape(rows: &IndexSet, cols: &IndexSet) -> Result<()> {
    if rows.len() != cols.len() {
        return Err(Error::MinorShape {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    Ok(())
}

fn check_within(alg: &QAlgebra, set: &IndexSet) -> Result<()> {
    if set.elements().iter().any(|&e| e == 0 || e > alg.n()) {
        return Err(Error::InvalidIndexSet {
            elements: set.elements().to_vec(),
            n: alg.n(),
        });
    }
    Ok(())
}

/// Direct permutation-sum expansion. The empty minor is `1`.
fn expand_minor(alg: &QAlgebra, rows: &IndexSet, cols: &IndexSet) -> Result<AlgebraElement> {
    let (r, c) = (rows.elements(), cols.elements());
    let mut acc = alg.zero();
    for p in Permutation::all(r.len()) {
        let word: Vec<Gen> = r
            .iter()
            .zip(p.images())
            .map(|(&row, &img)| Gen::new(row, c[img - 1]))
            .collect();
        let weight = LaurentPoly::neg_q_pow(p.inversions() as i32);
        acc = acc.try_add(&alg.reduce_word(&word)?.scale(&weight))?;
    }
    Ok(acc)
}

/// The quantum minor `[K|L]`. `qminor(full, full)` is the quantum
/// determinant.
pub fn qminor(alg: &QAlgebra, rows: &IndexSet, cols: &IndexSet) -> Result<AlgebraElement> {
    check_shape(rows, cols)?;
    if rows.is_empty() {
        return Err(Error::MinorShape { rows: 0, cols: 0 });
    }
    check_within(alg, rows)?;
    check_within(alg, cols)?;
    expand_minor(alg, rows, cols)
}

/// Sum of the principal `k x k` minors; zero for `k > n`.
pub fn sigma(alg: &QAlgebra, k: usize) -> Result<AlgebraElement> {
    sigma_in(alg, &MinorCache::default(), k)
}

/// `delta(i,r) [K|L] - sum_{s in L} (-q)^{l(s,L) - l(r,K)} x[i,s] [K\r | L\s]`.
pub fn laplace_residual(
    alg: &QAlgebra,
    rows: &IndexSet,
    cols: &IndexSet,
    i: usize,
    r: usize,
) -> Result<AlgebraElement> {
    laplace_in(alg, &MinorCache::default(), rows, cols, i, r)
}

/// Memo table for minors, keyed by `(K, L)`.
#[derive(Default)]
pub struct MinorCache(DashMap<(IndexSet, IndexSet), Arc<AlgebraElement>>);

impl MinorCache {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `[K|L]`, with `[{}|{}] = 1`.
fn minor_in(
    alg: &QAlgebra,
    cache: &MinorCache,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<Arc<AlgebraElement>> {
    check_shape(rows, cols)?;
    let key = (rows.clone(), cols.clone());
    if let Some(hit) = cache.0.get(&key) {
        return Ok(hit.value().clone());
    }
    check_within(alg, rows)?;
    check_within(alg, cols)?;
    let value = Arc::new(expand_minor(alg, rows, cols)?);
    cache.0.insert(key, value.clone());
    Ok(value)
}

fn sigma_in(alg: &QAlgebra, cache: &MinorCache, k: usize) -> Result<AlgebraElement> {
    if k == 0 {
        return Ok(alg.one());
    }
    let mut acc = alg.zero();
    for set in IndexSet::subsets(alg.n(), k) {
        acc = acc.try_add(&*minor_in(alg, cache, &set, &set)?)?;
    }
    Ok(acc)
}

fn laplace_in(
    alg: &QAlgebra,
    cache: &MinorCache,
    rows: &IndexSet,
    cols: &IndexSet,
    i: usize,
    r: usize,
) -> Result<AlgebraElement> {
    check_shape(rows, cols)?;
    if rows.len() < 2 {
        return Err(Error::MinorShape {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    for u in [i, r] {
        if !rows.contains(u) {
            return Err(Error::NotMember {
                index: u,
                set: rows.elements().to_vec(),
            });
        }
    }
    let mut residual = if i == r {
        (*minor_in(alg, cache, rows, cols)?).clone()
    } else {
        alg.zero()
    };
    let reduced_rows = rows.without(r);
    let base = l_count(r, rows) as i32;
    for &s in cols.elements() {
        let weight = LaurentPoly::neg_q_pow(l_count(s, cols) as i32 - base);
        let sub = minor_in(alg, cache, &reduced_rows, &cols.without(s))?;
        let term = alg.mul(&alg.gen(i, s)?, &sub)?;
        residual = residual.try_sub(&term.scale(&weight))?;
    }
    Ok(residual)
}

/// Memoized minors over a shared algebra context.
pub struct Minors {
    alg: Arc<QAlgebra>,
    cache: MinorCache,
}

impl Minors {
    pub fn new(alg: Arc<QAlgebra>) -> Self {
        Minors {
            alg,
            cache: MinorCache::default(),
        }
    }

    pub fn algebra(&self) -> &QAlgebra {
        &self.alg
    }

    /// `[K|L]`, with `[{}|{}] = 1`.
    pub fn minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Arc<AlgebraElement>> {
        minor_in(&self.alg, &self.cache, rows, cols)
    }

    pub fn qminor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<AlgebraElement> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::MinorShape {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        Ok((*self.minor(rows, cols)?).clone())
    }

    pub fn sigma(&self, k: usize) -> Result<AlgebraElement> {
        sigma_in(&self.alg, &self.cache, k)
    }

    pub fn laplace_residual(
        &self,
        rows: &IndexSet,
        cols: &IndexSet,
        i: usize,
        r: usize,
    ) -> Result<AlgebraElement> {
        laplace_in(&self.alg, &self.cache, rows, cols, i, r)
    }
}
