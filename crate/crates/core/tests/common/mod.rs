//! Reference arithmetic for integration tests. Words are reduced by solving
//! the defining relation for the out-of-order word at each step; elements of
//! the free algebra are multiplied by concatenation and only reduced at the
//! end. Coefficients are integer Laurent polynomials.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_traits::ToPrimitive;
use qtrace::AlgebraElement;

pub type G = (usize, usize);
pub type Word = Vec<G>;
pub type Lp = BTreeMap<i32, i64>;
pub type Free = HashMap<Word, Lp>;

pub fn lp_mono(c: i64, e: i32) -> Lp {
    let mut p = Lp::new();
    if c != 0 {
        p.insert(e, c);
    }
    p
}

pub fn lp_add_into(a: &mut Lp, b: &Lp, scale: i64) {
    for (&e, &c) in b {
        let v = a.entry(e).or_insert(0);
        *v += c * scale;
        if *v == 0 {
            a.remove(&e);
        }
    }
}

pub fn lp_mul(a: &Lp, b: &Lp) -> Lp {
    let mut out = Lp::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            lp_add_into(&mut out, &lp_mono(ca * cb, ea + eb), 1);
        }
    }
    out
}

fn th(a: usize, b: usize) -> i32 {
    (b as i32 - a as i32).signum()
}

pub struct Oracle {
    memo: HashMap<Word, Free>,
}

fn free_add(acc: &mut Free, w: Word, c: &Lp) {
    let slot = acc.entry(w.clone()).or_default();
    lp_add_into(slot, c, 1);
    if slot.is_empty() {
        acc.remove(&w);
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle {
            memo: HashMap::new(),
        }
    }

    /// `x_kl x_ij` with `(i,j) < (k,l)` as a combination of words, from
    /// `x_ij x_kl - x_kl x_ij = (q^th(j,l) - q^-th(i,k)) x_il x_kj`.
    fn swap(&self, b: G, a: G) -> Vec<(Lp, Word)> {
        let ((i, j), (k, l)) = (a, b);
        let mut c = lp_mono(1, th(j, l));
        lp_add_into(&mut c, &lp_mono(1, -th(i, k)), -1);
        let other = vec![(i, l), (k, j)];
        if c.is_empty() {
            return vec![(lp_mono(1, 0), vec![a, b])];
        }
        if other == vec![b, a] {
            // (1 + c) x_kl x_ij = x_ij x_kl, and 1 + c is a monomial here
            let mut one_plus = c.clone();
            lp_add_into(&mut one_plus, &lp_mono(1, 0), 1);
            assert_eq!(one_plus.len(), 1);
            let (&e, &v) = one_plus.iter().next().unwrap();
            assert!(v == 1 || v == -1);
            return vec![(lp_mono(v, -e), vec![a, b])];
        }
        if other == vec![a, b] {
            let mut coef = lp_mono(1, 0);
            lp_add_into(&mut coef, &c, -1);
            return vec![(coef, vec![a, b])];
        }
        let mut neg = Lp::new();
        lp_add_into(&mut neg, &c, -1);
        vec![(lp_mono(1, 0), vec![a, b]), (neg, other)]
    }

    pub fn reduce(&mut self, w: &Word) -> Free {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let pos = (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]);
        let out = match pos {
            None => {
                let mut f = Free::new();
                f.insert(w.clone(), lp_mono(1, 0));
                f
            }
            Some(p) => {
                let mut acc = Free::new();
                for (c, pair) in self.swap(w[p], w[p + 1]) {
                    let mut next = w.clone();
                    next[p] = pair[0];
                    next[p + 1] = pair[1];
                    for (m, cm) in self.reduce(&next) {
                        free_add(&mut acc, m, &lp_mul(&c, &cm));
                    }
                }
                acc
            }
        };
        self.memo.insert(w.clone(), out.clone());
        out
    }

    pub fn normal_form(&mut self, f: &Free) -> Free {
        let mut acc = Free::new();
        for (w, c) in f {
            for (m, cm) in self.reduce(w) {
                free_add(&mut acc, m, &lp_mul(c, &cm));
            }
        }
        acc
    }
}

pub fn gen(i: usize, j: usize) -> Free {
    let mut f = Free::new();
    f.insert(vec![(i, j)], lp_mono(1, 0));
    f
}

pub fn one() -> Free {
    let mut f = Free::new();
    f.insert(vec![], lp_mono(1, 0));
    f
}

pub fn add(a: &Free, b: &Free, scale: &Lp) -> Free {
    let mut out = a.clone();
    for (w, c) in b {
        free_add(&mut out, w.clone(), &lp_mul(c, scale));
    }
    out
}

pub fn mul(a: &Free, b: &Free) -> Free {
    let mut out = Free::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            free_add(&mut out, w, &lp_mul(ca, cb));
        }
    }
    out
}

pub type Mat = Vec<Vec<Free>>;

pub fn generic(n: usize) -> Mat {
    (1..=n)
        .map(|i| (1..=n).map(|j| gen(i, j)).collect())
        .collect()
}

pub fn star(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![Free::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let term = mul(&a[i][k], &b[k][j]);
                out[i][j] = add(&out[i][j], &term, &lp_mono(1, th(j + 1, k + 1)));
            }
        }
    }
    out
}

/// `Tr(X^k)` for the left-nested power, unreduced.
pub fn trace_power(n: usize, k: usize) -> Free {
    let x = generic(n);
    let mut p = x.clone();
    for _ in 1..k {
        p = star(&x, &p);
    }
    let mut t = Free::new();
    for (i, row) in p.iter().enumerate() {
        t = add(&t, &row[i], &lp_mono(1, 0));
    }
    t
}

fn perms(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(k - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, k - 1);
            out.push(v);
        }
    }
    out
}

/// `sum_pi (-q)^inv(pi) x_{r1, c_pi1} ... x_{rk, c_pik}`, unreduced.
pub fn minor(rows: &[usize], cols: &[usize]) -> Free {
    let mut out = Free::new();
    for p in perms(rows.len()) {
        let inv = (0..p.len())
            .flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| p[a] > p[b])
            .count();
        let w: Word = rows.iter().zip(&p).map(|(&r, &pi)| (r, cols[pi])).collect();
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        free_add(&mut out, w, &lp_mono(sign, inv as i32));
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect())
        .collect()
}

pub fn sigma(n: usize, k: usize) -> Free {
    if k == 0 {
        return one();
    }
    let mut out = Free::new();
    for s in subsets(n, k) {
        out = add(&out, &minor(&s, &s), &lp_mono(1, 0));
    }
    out
}

/// Converts an engine element into oracle form; panics on non-integer
/// coefficients.
pub fn from_engine(e: &AlgebraElement) -> Free {
    let mut out = Free::new();
    for (m, c) in e.terms() {
        let w: Word = m.letters().iter().map(|g| (g.row(), g.col())).collect();
        let mut lp = Lp::new();
        for (exp, r) in c.terms() {
            assert!(r.is_integer(), "non-integer coefficient {r}");
            lp.insert(exp, r.to_integer().to_i64().unwrap());
        }
        out.insert(w, lp);
    }
    out
}

pub fn is_zero(f: &Free) -> bool {
    f.values().all(|c| c.is_empty())
}
