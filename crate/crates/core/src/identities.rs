//! The matrices `Z_k`, their closed form, the second Cayley-Hamilton
//! theorem, Newton's formulae relating traces of quantum powers to sums of
//! principal minors, and commutativity of those traces.
//!
//! Every identity is exposed as a residual: an element (or matrix) that is
//! zero exactly when the identity holds. A nonzero residual is returned
//! as-is so it can be inspected.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use dashmap::DashMap;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::algebra::{theta, AlgebraElement, QAlgebra};
use crate::coeff::{rat, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::minors::{l_count, IndexSet, Minors};
use crate::qmatrix::{right_scalar_mul, star, trace, QMatrix};

fn sign(k: usize) -> LaurentPoly {
    LaurentPoly::integer(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Grows a memo sequence up to index `k`. The lock is released while each
/// new entry is computed, so nested parallel work cannot re-enter it.
fn extend_memo<F>(memo: &Mutex<Vec<Arc<QMatrix>>>, k: usize, next: F) -> Result<Arc<QMatrix>>
where
    F: Fn(usize, &QMatrix) -> Result<QMatrix>,
{
    loop {
        let (len, last) = {
            let seq = memo.lock().unwrap();
            if let Some(hit) = seq.get(k) {
                return Ok(hit.clone());
            }
            (seq.len(), seq.last().unwrap().clone())
        };
        let value = Arc::new(next(len, &last)?);
        let mut seq = memo.lock().unwrap();
        if seq.len() == len {
            seq.push(value);
        }
    }
}

/// Memoized state for one ambient size: the generic matrix, its quantum
/// powers and their traces, the `sigma_k` and the `Z_k`.
///
/// All methods take `&self`, so a session can be shared between worker
/// threads.
pub struct Session {
    alg: Arc<QAlgebra>,
    minors: Minors,
    x: QMatrix,
    sigmas: DashMap<usize, Arc<AlgebraElement>>,
    traces: DashMap<usize, Arc<AlgebraElement>>,
    powers: Mutex<Vec<Arc<QMatrix>>>,
    zs: Mutex<Vec<Arc<QMatrix>>>,
}

impl Session {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self::with_algebra(Arc::new(QAlgebra::new(n)?)))
    }

    pub fn with_algebra(alg: Arc<QAlgebra>) -> Self {
        let n = alg.n();
        Session {
            minors: Minors::new(alg.clone()),
            x: QMatrix::generic(n),
            sigmas: DashMap::new(),
            traces: DashMap::new(),
            powers: Mutex::new(vec![Arc::new(QMatrix::identity(n))]),
            zs: Mutex::new(vec![Arc::new(QMatrix::identity(n))]),
            alg,
        }
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn algebra(&self) -> &QAlgebra {
        &self.alg
    }

    pub fn minors(&self) -> &Minors {
        &self.minors
    }

    /// The generic matrix `X`.
    pub fn x(&self) -> &QMatrix {
        &self.x
    }

    /// `sigma_k`, with `sigma_0 = 1` and `sigma_k = 0` for `k > n`.
    pub fn sigma(&self, k: usize) -> Result<Arc<AlgebraElement>> {
        if let Some(hit) = self.sigmas.get(&k) {
            return Ok(hit.value().clone());
        }
        let value = Arc::new(self.minors.sigma(k)?);
        self.sigmas.insert(k, value.clone());
        Ok(value)
    }

    /// The left-nested quantum power `X^k`.
    pub fn qpower(&self, k: usize) -> Result<Arc<QMatrix>> {
        extend_memo(&self.powers, k, |len, last| {
            if len == 1 {
                Ok(self.x.clone())
            } else {
                star(&self.alg, &self.x, last)
            }
        })
    }

    /// `t_k = Tr(X^k)`.
    pub fn t(&self, k: usize) -> Result<Arc<AlgebraElement>> {
        if let Some(hit) = self.traces.get(&k) {
            return Ok(hit.value().clone());
        }
        let value = Arc::new(trace(&*self.qpower(k)?));
        self.traces.insert(k, value.clone());
        Ok(value)
    }

    /// `Z_0 = I`, `Z_k = X * Z_{k-1} + (-1)^k I sigma_k`.
    pub fn z_recursive(&self, k: usize) -> Result<Arc<QMatrix>> {
        extend_memo(&self.zs, k, |j, prev| {
            let shifted = star(&self.alg, &self.x, prev)?;
            let diag = self.sigma(j)?.scale(&sign(j));
            shifted.try_add(&QMatrix::scalar_diagonal(self.n(), &diag))
        })
    }

    /// Entry `(i,j)` of `Z_k` from the closed form
    /// `(-1)^k sum_{|J|=k+1, i,j in J} q^{theta(i,j)} (-q)^{l(i,J)-l(j,J)} [J\j | J\i]`.
    pub fn z_closed_form(&self, k: usize, i: usize, j: usize) -> Result<AlgebraElement> {
        let n = self.n();
        if k >= n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                range: format!("0..={}", n - 1),
            });
        }
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(Error::OutOfRange {
                    what: "index",
                    value: v as i64,
                    range: format!("1..={n}"),
                });
            }
        }
        let mut acc = self.alg.zero();
        for set in IndexSet::subsets(n, k + 1) {
            if !set.contains(i) || !set.contains(j) {
                continue;
            }
            let exponent = l_count(i, &set) as i32 - l_count(j, &set) as i32;
            let weight = LaurentPoly::q_pow(theta(i, j)) * LaurentPoly::neg_q_pow(exponent);
            let minor = self.minors.minor(&set.without(j), &set.without(i))?;
            acc = acc.try_add(&minor.scale(&weight))?;
        }
        Ok(acc.scale(&sign(k)))
    }

    pub fn z_closed_form_matrix(&self, k: usize) -> Result<QMatrix> {
        let n = self.n();
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(self.z_closed_form(k, i, j)?);
            }
        }
        let mut it = entries.into_iter();
        Ok(QMatrix::from_fn(n, |_, _| it.next().unwrap()))
    }

    /// `X^k - X^{k-1} sigma_1 + ... + (-1)^k I sigma_k`, each power
    /// multiplied by its sigma on the right.
    pub fn z_via_power_sum(&self, k: usize) -> Result<QMatrix> {
        let mut acc = QMatrix::zero(self.n());
        for j in 0..=k.min(self.n()) {
            let sig = self.sigma(j)?;
            let term = right_scalar_mul(&self.alg, &*self.qpower(k - j)?, &sig)?;
            acc = acc.try_add(&term.scale(&sign(j)))?;
        }
        Ok(acc)
    }

    /// `Tr(Z_k) - (-1)^k (n-k) sigma_k` for `k < n`, `Tr(Z_k)` otherwise.
    pub fn trace_z_residual(&self, k: usize) -> Result<AlgebraElement> {
        let tr = trace(&*self.z_recursive(k)?);
        let n = self.n();
        if k >= n {
            return Ok(tr);
        }
        let expected = self
            .sigma(k)?
            .scale(&(sign(k) * LaurentPoly::integer((n - k) as i64)));
        tr.try_sub(&expected)
    }

    /// `t_k - t_{k-1} sigma_1 + ... + (-1)^{k-1} t_1 sigma_{k-1} + (-1)^k k sigma_k`.
    pub fn newton_residual(&self, k: usize) -> Result<AlgebraElement> {
        if k == 0 {
            return Err(Error::OutOfRange {
                what: "k",
                value: 0,
                range: "1..".into(),
            });
        }
        let mut acc = self.alg.zero();
        for j in 0..k {
            let sig = self.sigma(j)?;
            if sig.is_zero() {
                continue;
            }
            let prod = self.alg.mul(&*self.t(k - j)?, &sig)?;
            acc = acc.try_add(&prod.scale(&sign(j)))?;
        }
        let last = self
            .sigma(k)?
            .scale(&(sign(k) * LaurentPoly::integer(k as i64)));
        acc.try_add(&last)
    }

    /// `[t_k, t_m]`.
    pub fn commutator_residual(&self, k: usize, m: usize) -> Result<AlgebraElement> {
        if k == 0 || m == 0 {
            return Err(Error::OutOfRange {
                what: "power",
                value: 0,
                range: "1..".into(),
            });
        }
        self.alg.commutator(&*self.t(k)?, &*self.t(m)?)
    }

    /// `[sigma_i, sigma_j]`.
    pub fn sigma_commutator(&self, i: usize, j: usize) -> Result<AlgebraElement> {
        self.alg.commutator(&*self.sigma(i)?, &*self.sigma(j)?)
    }

    /// `sigma_1..sigma_upto` recovered from `t_1..t_upto` by solving
    /// Newton's formulae for the last sigma at each step.
    pub fn sigma_from_t(&self, upto: usize) -> Result<Vec<AlgebraElement>> {
        let n = self.n();
        if upto > n {
            return Err(Error::OutOfRange {
                what: "upto",
                value: upto as i64,
                range: format!("0..={n}"),
            });
        }
        let mut recovered = vec![self.alg.one()];
        for k in 1..=upto {
            let mut acc = self.alg.zero();
            for (j, sig) in recovered.iter().enumerate() {
                let prod = self.alg.mul(&*self.t(k - j)?, sig)?;
                acc = acc.try_add(&prod.scale(&sign(j)))?;
            }
            let factor = LaurentPoly::constant(Rational::new(
                if k % 2 == 1 { 1.into() } else { (-1).into() },
                (k as i64).into(),
            ));
            recovered.push(acc.scale(&factor));
        }
        recovered.remove(0);
        Ok(recovered)
    }

    /// A polynomial in `t_1..t_n` equal to `t_k`.
    pub fn t_in_t_basis(&self, k: usize) -> Result<TPoly> {
        t_in_t_basis(self.n(), k)
    }

    /// Evaluates a polynomial in `t_1..t_n` inside the algebra, multiplying
    /// factors left to right in the order printed.
    pub fn eval_tpoly(&self, p: &TPoly) -> Result<AlgebraElement> {
        let mut acc = self.alg.zero();
        for (mono, c) in p.terms() {
            let mut prod = self.alg.one();
            for &v in mono.vars() {
                prod = self.alg.mul(&prod, &*self.t(v as usize)?)?;
            }
            acc = acc.try_add(&prod.scale(&LaurentPoly::constant(c.clone())))?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Session").field("n", &self.n()).finish()
    }
}

/// Monomial in the commuting symbols `t_1, t_2, ...`, stored as a sorted
/// list of variable indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TMonomial(SmallVec<[u8; 8]>);

impl TMonomial {
    pub fn vars(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Weighted degree: `t_i` has weight `i`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&v| v as usize).sum()
    }

    fn mul(&self, other: &TMonomial) -> TMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        TMonomial(v)
    }
}

impl Ord for TMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for TMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Commutative polynomial in `t_1..t_n` with rational coefficients, printed
/// degree-then-lex with `t_1 < t_2 < ...`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    terms: BTreeMap<TMonomial, Rational>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(TMonomial::default(), c);
        out
    }

    pub fn var(i: usize) -> Self {
        let mut out = Self::zero();
        out.add_term(TMonomial(SmallVec::from_slice(&[i as u8])), Rational::one());
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, vars: &[u8]) -> Rational {
        let mut v: SmallVec<[u8; 8]> = SmallVec::from_slice(vars);
        v.sort_unstable();
        self.terms
            .get(&TMonomial(v))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: TMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TPoly {
        let mut out = TPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// True when every monomial has weighted degree `w`.
    pub fn is_isobaric(&self, w: usize) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            let vars = m.vars();
            let mut p = 0;
            while p < vars.len() {
                let v = vars[p];
                let run = vars[p..].iter().take_while(|&&w| w == v).count();
                if run == 1 {
                    write!(f, "*t[{v}]")?;
                } else {
                    write!(f, "*t[{v}]^{run}")?;
                }
                p += run;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

/// `sigma_0..sigma_n` as polynomials in `t_1..t_n`.
pub fn sigma_polys(n: usize) -> Vec<TPoly> {
    let mut sig = vec![TPoly::constant(Rational::one())];
    for k in 1..=n {
        let mut acc = TPoly::zero();
        for (j, s) in sig.iter().enumerate() {
            let term = TPoly::var(k - j).mul(s);
            acc = acc.add(&term.scale(&rat(if j % 2 == 0 { 1 } else { -1 })));
        }
        let factor = Rational::new(
            if k % 2 == 1 { 1.into() } else { (-1).into() },
            (k as i64).into(),
        );
        sig.push(acc.scale(&factor));
    }
    sig
}

/// `t_k` as a polynomial in `t_1..t_n`, from Newton's formulae with
/// `sigma_j = 0` for `j > n`.
pub fn t_in_t_basis(n: usize, k: usize) -> Result<TPoly> {
    if n == 0 || k == 0 {
        return Err(Error::OutOfRange {
            what: if n == 0 { "n" } else { "k" },
            value: 0,
            range: "1..".into(),
        });
    }
    let sig = sigma_polys(n);
    let mut t: Vec<TPoly> = (0..=n.min(k)).map(TPoly::var).collect();
    for m in n + 1..=k {
        let mut acc = TPoly::zero();
        for j in 1..=n {
            let term = t[m - j].mul(&sig[j]);
            acc = acc.add(&term.scale(&rat(if j % 2 == 1 { 1 } else { -1 })));
        }
        t.push(acc);
    }
    Ok(t.swap_remove(k))
}

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// A parameter value attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Text(String),
}

impl From<usize> for Param {
    fn from(v: usize) -> Self {
        Param::Int(v as i64)
    }
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Int(v)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

/// Structured record of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub params: BTreeMap<String, Param>,
    pub status: Status,
    pub residual_terms: usize,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    /// A residual-style report: passes iff `residual_terms == 0`.
    pub fn residual(
        name: &str,
        params: BTreeMap<String, Param>,
        residual_terms: usize,
        millis: u64,
    ) -> Self {
        VerificationReport {
            name: name.to_string(),
            params,
            status: if residual_terms == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            residual_terms,
            millis,
            error: None,
        }
    }

    pub fn skipped(name: &str, params: BTreeMap<String, Param>, millis: u64) -> Self {
        VerificationReport {
            name: name.to_string(),
            params,
            status: Status::Skipped,
            residual_terms: 0,
            millis,
            error: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{status} {} [{}] residual_terms={} ({} ms)",
            self.name,
            params.join(" "),
            self.residual_terms,
            self.millis
        )?;
        if let Some(e) = &self.error {
            write!(f, " error: {e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gen, Monomial};
    use crate::coeff::ratio;

    fn m(gens: &[(usize, usize)]) -> Monomial {
        Monomial::from_gens(gens.iter().map(|&(i, j)| Gen::new(i, j)))
    }

    #[test]
    fn z_base_cases() {
        let s = Session::new(2).unwrap();
        assert_eq!(*s.z_recursive(0).unwrap(), QMatrix::identity(2));
        let z1 = s.z_recursive(1).unwrap();
        assert_eq!(z1.get(1, 1), &(-&s.algebra().gen(2, 2).unwrap()));
        assert_eq!(z1.get(1, 2), &s.algebra().gen(1, 2).unwrap());
        assert!(s.z_recursive(2).unwrap().is_zero());
    }

    #[test]
    fn z_closed_form_small_entries() {
        let s = Session::new(2).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                let expected = if i == j {
                    AlgebraElement::one(2)
                } else {
                    AlgebraElement::zero(2)
                };
                assert_eq!(s.z_closed_form(0, i, j).unwrap(), expected);
            }
        }
        assert_eq!(
            s.z_closed_form(1, 1, 1).unwrap(),
            -&s.algebra().gen(2, 2).unwrap()
        );
        assert_eq!(
            s.z_closed_form(1, 1, 2).unwrap(),
            s.algebra().gen(1, 2).unwrap()
        );
        assert!(matches!(
            s.z_closed_form(2, 1, 1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn power_sum_small_cases() {
        let s = Session::new(2).unwrap();
        assert_eq!(s.z_via_power_sum(0).unwrap(), QMatrix::identity(2));
        assert_eq!(s.z_via_power_sum(1).unwrap(), *s.z_recursive(1).unwrap());
        assert!(s.z_via_power_sum(2).unwrap().is_zero());
    }

    #[test]
    fn trace_z_small_cases() {
        let s = Session::new(2).unwrap();
        for k in 0..=3 {
            assert!(s.trace_z_residual(k).unwrap().is_zero(), "k = {k}");
        }
    }

    #[test]
    fn newton_small_cases() {
        let s = Session::new(2).unwrap();
        for k in 1..=3 {
            assert!(s.newton_residual(k).unwrap().is_zero(), "k = {k}");
        }
        let t2 = s.t(2).unwrap();
        assert_eq!(
            t2.coeff(&m(&[(1, 2), (2, 1)])),
            LaurentPoly::from_terms([(1, rat(1)), (-1, rat(1))])
        );
    }

    #[test]
    fn commutators_small_cases() {
        let s = Session::new(2).unwrap();
        assert!(s.commutator_residual(1, 1).unwrap().is_zero());
        assert!(s.commutator_residual(1, 2).unwrap().is_zero());
        assert!(s.commutator_residual(0, 2).is_err());
    }

    #[test]
    fn sigma_recovery_n2() {
        let s = Session::new(2).unwrap();
        let rec = s.sigma_from_t(2).unwrap();
        assert_eq!(rec[0], *s.t(1).unwrap());
        assert_eq!(rec[1], *s.sigma(2).unwrap());
        assert!(s.sigma_from_t(3).is_err());
    }

    #[test]
    fn t_basis_polynomials() {
        let t2 = t_in_t_basis(1, 2).unwrap();
        assert_eq!(t2.to_string(), "1*t[1]^2");
        let t3 = t_in_t_basis(2, 3).unwrap();
        assert_eq!(t3.coeff(&[1, 2]), ratio(3, 2));
        assert_eq!(t3.coeff(&[1, 1, 1]), ratio(-1, 2));
        assert_eq!(t3.to_string(), "3/2*t[1]*t[2] + -1/2*t[1]^3");
        assert!(t3.is_isobaric(3));
        assert!(t_in_t_basis(3, 7).unwrap().is_isobaric(7));
        assert_eq!(t_in_t_basis(3, 2).unwrap(), TPoly::var(2));
    }

    #[test]
    fn sigma_polys_classical_shape() {
        let sig = sigma_polys(3);
        // sigma_2 = (t1^2 - t2) / 2
        assert_eq!(sig[2].coeff(&[1, 1]), ratio(1, 2));
        assert_eq!(sig[2].coeff(&[2]), ratio(-1, 2));
        // sigma_3 = t1^3/6 - t1 t2/2 + t3/3
        assert_eq!(sig[3].coeff(&[1, 1, 1]), ratio(1, 6));
        assert_eq!(sig[3].coeff(&[1, 2]), ratio(-1, 2));
        assert_eq!(sig[3].coeff(&[3]), ratio(1, 3));
    }

    #[test]
    fn report_status_follows_residual() {
        let r = VerificationReport::residual("x", BTreeMap::new(), 0, 1);
        assert_eq!(r.status, Status::Pass);
        let r = VerificationReport::residual("x", BTreeMap::new(), 3, 1);
        assert_eq!(r.status, Status::Fail);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"status\":\"fail\""));
    }
}
