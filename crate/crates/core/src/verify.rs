//! Batch verification runs: every identity check as a named, parameterized
//! report, with an optional wall-clock budget.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    all_gens, all_words, theta, AlgebraElement, Gen, Monomial, QAlgebra, Strategy,
};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::identities::{Param, Session, Status, VerificationReport};
use crate::minors::IndexSet;
use crate::par;
use crate::poisson::{self, CPoly};
use crate::qmatrix::{trace, QMatrix};

pub const REPORT_VERSION: u32 = 1;

/// Selectable check groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Relations,
    Pbw,
    Laplace,
    ZClosedForm,
    Ch,
    ZPowerSum,
    TraceZ,
    Newton,
    Commute,
    SigmaCommute,
    TBasis,
    Poisson,
    Semiclassical,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Relations,
        Check::Pbw,
        Check::Laplace,
        Check::ZClosedForm,
        Check::Ch,
        Check::ZPowerSum,
        Check::TraceZ,
        Check::Newton,
        Check::Commute,
        Check::SigmaCommute,
        Check::TBasis,
        Check::Poisson,
        Check::Semiclassical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Relations => "relations",
            Check::Pbw => "pbw",
            Check::Laplace => "laplace",
            Check::ZClosedForm => "z_closed_form",
            Check::Ch => "ch",
            Check::ZPowerSum => "z_power_sum",
            Check::TraceZ => "trace_z",
            Check::Newton => "newton",
            Check::Commute => "commute",
            Check::SigmaCommute => "sigma_commute",
            Check::TBasis => "t_basis",
            Check::Poisson => "poisson",
            Check::Semiclassical => "semiclassical",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a comma-separated list of check names; `all` selects every group.
pub fn parse_checks(list: &str) -> std::result::Result<BTreeSet<Check>, String> {
    let mut out = BTreeSet::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend(Check::ALL);
            continue;
        }
        match Check::ALL.iter().find(|c| c.name() == item) {
            Some(c) => {
                out.insert(*c);
            }
            None => return Err(format!("unknown check '{item}'")),
        }
    }
    if out.is_empty() {
        return Err("no checks selected".into());
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected text or json)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: usize,
    pub max_power: usize,
    pub checks: BTreeSet<Check>,
    pub format: Format,
    pub seed: u64,
    pub budget_ms: Option<u64>,
}

impl RunConfig {
    pub fn new(n: usize) -> Self {
        RunConfig {
            n,
            max_power: n + 2,
            checks: Check::ALL.into_iter().collect(),
            format: Format::Text,
            seed: 0,
            budget_ms: None,
        }
    }

    pub fn with_checks<I: IntoIterator<Item = Check>>(mut self, checks: I) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyAmbient);
        }
        if self.max_power == 0 {
            return Err(Error::OutOfRange {
                what: "max_power",
                value: 0,
                range: "1..".into(),
            });
        }
        Ok(())
    }
}

/// Reports from one run, sorted by `(name, params)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunSummary {
    pub version: u32,
    pub n: usize,
    pub config: RunConfig,
    pub checks: Vec<VerificationReport>,
}

impl RunSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(VerificationReport::passed)
    }

    /// 0 when nothing failed, 1 otherwise. Skipped checks do not fail a run.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.checks {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        let count = |s| self.checks.iter().filter(|r| r.status == s).count();
        out.push_str(&format!(
            "n={} checks={} pass={} fail={} skipped={}\n",
            self.n,
            self.checks.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        ));
        out
    }
}

/// Residual term count plus row/column grading violations found in the
/// intermediate elements of a check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub residual_terms: usize,
    pub bigrading: usize,
}

impl Outcome {
    fn residual(terms: usize) -> Self {
        Outcome {
            residual_terms: terms,
            bigrading: 0,
        }
    }
}

type TaskFn<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

struct Task<'a> {
    name: &'static str,
    params: BTreeMap<String, Param>,
    run: TaskFn<'a>,
}

fn params(n: usize, extra: &[(&str, Param)]) -> BTreeMap<String, Param> {
    let mut p = BTreeMap::new();
    p.insert("n".to_string(), Param::from(n));
    for (k, v) in extra {
        p.insert(k.to_string(), v.clone());
    }
    p
}

fn offset(n: usize, plus: usize, minus: usize) -> Vec<i64> {
    let mut v = vec![0i64; n + 1];
    if plus > 0 {
        v[plus] += 1;
    }
    if minus > 0 {
        v[minus] -= 1;
    }
    v
}

fn balanced(e: &AlgebraElement) -> usize {
    e.bigrading_violations(&vec![0; e.n() + 1])
}

/// Grading violations of a `Z`-type matrix: entry `(i,j)` must have row
/// multiset minus column multiset equal to `e_i - e_j`.
fn z_violations(z: &QMatrix) -> usize {
    let n = z.n();
    z.entries()
        .map(|(i, j, e)| e.bigrading_violations(&offset(n, i, j)))
        .sum()
}

fn matrix_residual(a: &QMatrix, b: &QMatrix) -> Result<usize> {
    Ok(a.try_sub(b)?.term_count())
}

/// Expected reduction of the pair `a b` from the explicit four-case table.
pub fn expected_pair(n: usize, a: Gen, b: Gen) -> AlgebraElement {
    let word = |x: Gen, y: Gen| Monomial::from_gens([x, y]);
    if a <= b {
        return AlgebraElement::term(n, word(a, b), LaurentPoly::constant(crate::coeff::rat(1)));
    }
    let (i, j, k, l) = (b.row(), b.col(), a.row(), a.col());
    let mut out = AlgebraElement::zero(n);
    if i == k || j == l {
        out.add_term(word(b, a), &LaurentPoly::q_pow(-1));
    } else if j > l {
        out.add_term(word(b, a), &LaurentPoly::constant(crate::coeff::rat(1)));
    } else {
        out.add_term(word(b, a), &LaurentPoly::constant(crate::coeff::rat(1)));
        let corr = LaurentPoly::q_pow(-1) - LaurentPoly::q();
        out.add_term(word(Gen::new(i, l), Gen::new(k, j)), &corr);
    }
    out
}

/// `x_ij x_kl - x_kl x_ij - (q^{theta(j,l)} - q^{-theta(i,k)}) x_il x_kj`.
pub fn relation_residual(
    alg: &QAlgebra,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<AlgebraElement> {
    let comm = alg.commutator(&alg.gen(i, j)?, &alg.gen(k, l)?)?;
    let coeff = LaurentPoly::q_pow(theta(j, l)) - LaurentPoly::q_pow(-theta(i, k));
    let rhs = alg.mul(&alg.gen(i, l)?, &alg.gen(k, j)?)?.scale(&coeff);
    comm.try_sub(&rhs)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `(number of normal words of degree d, C(n^2+d-1, d), non-normal
/// monomials found in reductions of all degree-d words)`.
pub fn pbw_counts(alg: &QAlgebra, d: usize) -> Result<(usize, usize, usize)> {
    let n = alg.n();
    let words = all_words(n, d);
    let normal = words
        .iter()
        .filter(|w| Monomial::from_gens(w.iter().copied()).is_normal())
        .count();
    let mut support: HashSet<Monomial> = HashSet::new();
    for w in &words {
        for (m, _) in alg.reduce_word(w)?.terms() {
            support.insert(m.clone());
        }
    }
    let stray = support.iter().filter(|m| !m.is_normal()).count();
    Ok((normal, binomial(n * n + d - 1, d), stray))
}

/// Reduces `samples` random words of length up to `max_len` with the
/// memoized engine and with leftmost and rightmost literal rewriting;
/// returns the number of words on which they disagree.
pub fn confluence_mismatches(
    alg: &QAlgebra,
    seed: u64,
    samples: usize,
    max_len: usize,
) -> Result<usize> {
    let gens = all_gens(alg.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let word: Vec<Gen> = (0..len)
            .map(|_| gens[rng.gen_range(0..gens.len())])
            .collect();
        let left = alg.reduce_word_with(&word, Strategy::Leftmost)?;
        let right = alg.reduce_word_with(&word, Strategy::Rightmost)?;
        let fast = alg.reduce_word(&word)?;
        if left != right || left != fast {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Poisson bracket axioms on random samples: returns
/// `(antisymmetry, leibniz, jacobi, two-route)` failure counts.
pub fn poisson_properties(n: usize, seed: u64, samples: usize) -> Result<[usize; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails = [0usize; 4];
    for _ in 0..samples {
        let f = poisson::random_cpoly(&mut rng, n, 3, 2);
        let g = poisson::random_cpoly(&mut rng, n, 3, 2);
        let h = poisson::random_cpoly(&mut rng, n, 3, 2);
        let fg = poisson::pbracket(&f, &g)?;
        let gf = poisson::pbracket(&g, &f)?;
        if !fg.try_add(&gf)?.is_zero() {
            fails[0] += 1;
        }
        let lhs = poisson::pbracket(&f, &g.try_mul(&h)?)?;
        let rhs = fg
            .try_mul(&h)?
            .try_add(&g.try_mul(&poisson::pbracket(&f, &h)?)?)?;
        if lhs != rhs {
            fails[1] += 1;
        }
        let jacobi = poisson::pbracket(&f, &poisson::pbracket(&g, &h)?)?
            .try_add(&poisson::pbracket(&g, &poisson::pbracket(&h, &f)?)?)?
            .try_add(&poisson::pbracket(&h, &fg)?)?;
        if !jacobi.is_zero() {
            fails[2] += 1;
        }
        if fg != poisson::pbracket_leibniz(&f, &g)? {
            fails[3] += 1;
        }
    }
    Ok(fails)
}

/// Checks that reading products at `q = 1` commutes with multiplication on
/// random samples; returns the number of failures.
pub fn shadow_homomorphism_failures(alg: &QAlgebra, seed: u64, samples: usize) -> Result<usize> {
    let n = alg.n();
    let gens = all_gens(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_elem = |rng: &mut ChaCha8Rng| -> Result<AlgebraElement> {
        let mut e = alg.zero();
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(0..=2);
            let word: Vec<Gen> = (0..len)
                .map(|_| gens[rng.gen_range(0..gens.len())])
                .collect();
            let c = LaurentPoly::monomial(
                crate::coeff::rat(rng.gen_range(-2..=2)),
                rng.gen_range(-1..=1),
            );
            e = e.try_add(&alg.reduce_word(&word)?.scale(&c))?;
        }
        Ok(e)
    };
    let mut fails = 0;
    for _ in 0..samples {
        let a = random_elem(&mut rng)?;
        let b = random_elem(&mut rng)?;
        let lhs = poisson::classical_shadow(&alg.mul(&a, &b)?)?;
        let rhs: CPoly = poisson::classical_shadow(&a)?.try_mul(&poisson::classical_shadow(&b)?)?;
        if lhs != rhs {
            fails += 1;
        }
    }
    Ok(fails)
}

fn build_tasks<'a>(cfg: &RunConfig, s: &'a Session) -> Vec<Task<'a>> {
    let n = cfg.n;
    let p = cfg.max_power;
    let seed = cfg.seed;
    let mut tasks: Vec<Task<'a>> = Vec::new();
    let mut push = |name: &'static str, params: BTreeMap<String, Param>, run: TaskFn<'a>| {
        tasks.push(Task { name, params, run });
    };

    for check in &cfg.checks {
        match check {
            Check::Relations => push(
                "relations",
                params(n, &[]),
                Box::new(move || {
                    let alg = s.algebra();
                    let gens = all_gens(n);
                    let mut total = 0;
                    for &a in &gens {
                        for &b in &gens {
                            let reduced = alg.reduce_word(&[a, b])?;
                            total += reduced.try_sub(&expected_pair(n, a, b))?.len();
                            total +=
                                relation_residual(alg, a.row(), a.col(), b.row(), b.col())?.len();
                        }
                    }
                    Ok(Outcome::residual(total))
                }),
            ),
            Check::Pbw => {
                for d in 1..=3 {
                    push(
                        "pbw_count",
                        params(n, &[("d", d.into())]),
                        Box::new(move || {
                            let (normal, expected, stray) = pbw_counts(s.algebra(), d)?;
                            Ok(Outcome::residual(normal.abs_diff(expected) + stray))
                        }),
                    );
                }
                push(
                    "pbw_confluence",
                    params(
                        n,
                        &[("seed", (seed as i64).into()), ("samples", 200usize.into())],
                    ),
                    Box::new(move || {
                        Ok(Outcome::residual(confluence_mismatches(
                            s.algebra(),
                            seed,
                            200,
                            6,
                        )?))
                    }),
                );
            }
            Check::Laplace => {
                for size in 2..=n {
                    push(
                        "laplace",
                        params(n, &[("size", size.into())]),
                        Box::new(move || {
                            let mut out = Outcome::default();
                            let subsets = IndexSet::subsets(n, size);
                            for rows in &subsets {
                                for cols in &subsets {
                                    let minor = s.minors().minor(rows, cols)?;
                                    let expected = (
                                        rows.elements()
                                            .iter()
                                            .map(|&e| e as u8)
                                            .collect::<Vec<_>>(),
                                        cols.elements()
                                            .iter()
                                            .map(|&e| e as u8)
                                            .collect::<Vec<_>>(),
                                    );
                                    out.bigrading += minor
                                        .terms()
                                        .filter(|(m, _)| m.bidegree() != expected)
                                        .count();
                                    for &i in rows.elements() {
                                        for &r in rows.elements() {
                                            let res =
                                                s.minors().laplace_residual(rows, cols, i, r)?;
                                            out.residual_terms += res.len();
                                        }
                                    }
                                }
                            }
                            Ok(out)
                        }),
                    );
                }
            }
            Check::ZClosedForm => {
                for k in 0..n {
                    push(
                        "z_closed_form",
                        params(n, &[("k", k.into())]),
                        Box::new(move || {
                            let z = s.z_recursive(k)?;
                            let closed = s.z_closed_form_matrix(k)?;
                            Ok(Outcome {
                                residual_terms: matrix_residual(&z, &closed)?,
                                bigrading: z_violations(&z) + z_violations(&closed),
                            })
                        }),
                    );
                }
            }
            Check::Ch => {
                for k in n..=p.max(n) {
                    push(
                        "cayley_hamilton",
                        params(n, &[("k", k.into())]),
                        Box::new(move || {
                            let z = s.z_recursive(k)?;
                            Ok(Outcome {
                                residual_terms: z.term_count(),
                                bigrading: z_violations(&z),
                            })
                        }),
                    );
                }
            }
            Check::ZPowerSum => {
                for k in 0..=p {
                    push(
                        "z_power_sum",
                        params(n, &[("k", k.into())]),
                        Box::new(move || {
                            let z = s.z_recursive(k)?;
                            let via = s.z_via_power_sum(k)?;
                            Ok(Outcome {
                                residual_terms: matrix_residual(&z, &via)?,
                                bigrading: z_violations(&via),
                            })
                        }),
                    );
                }
            }
            Check::TraceZ => {
                for k in 0..=p {
                    push(
                        "trace_z",
                        params(n, &[("k", k.into())]),
                        Box::new(move || {
                            let res = s.trace_z_residual(k)?;
                            let tr = trace(&*s.z_recursive(k)?);
                            Ok(Outcome {
                                residual_terms: res.len(),
                                bigrading: balanced(&tr) + balanced(&res),
                            })
                        }),
                    );
                }
            }
            Check::Newton => {
                for k in 1..=p.max(2 * n) {
                    push(
                        "newton",
                        params(n, &[("k", k.into())]),
                        Box::new(move || {
                            let res = s.newton_residual(k)?;
                            Ok(Outcome {
                                residual_terms: res.len(),
                                bigrading: balanced(&res)
                                    + balanced(&*s.t(k)?)
                                    + balanced(&*s.sigma(k)?),
                            })
                        }),
                    );
                }
                push(
                    "sigma_from_t",
                    params(n, &[("upto", n.into())]),
                    Box::new(move || {
                        let rec = s.sigma_from_t(n)?;
                        let mut out = Outcome::default();
                        for (idx, r) in rec.iter().enumerate() {
                            out.residual_terms += r.try_sub(&*s.sigma(idx + 1)?)?.len();
                            out.bigrading += balanced(r);
                        }
                        Ok(out)
                    }),
                );
            }
            Check::Commute => {
                for k in 1..=p {
                    for m in 1..=p {
                        push(
                            "commute",
                            params(n, &[("k", k.into()), ("m", m.into())]),
                            Box::new(move || {
                                let res = s.commutator_residual(k, m)?;
                                Ok(Outcome {
                                    residual_terms: res.len(),
                                    bigrading: balanced(&res),
                                })
                            }),
                        );
                    }
                }
            }
            Check::SigmaCommute => {
                for i in 1..=n {
                    for j in 1..=n {
                        push(
                            "sigma_commute",
                            params(n, &[("i", i.into()), ("j", j.into())]),
                            Box::new(move || {
                                let res = s.sigma_commutator(i, j)?;
                                Ok(Outcome {
                                    residual_terms: res.len(),
                                    bigrading: balanced(&res),
                                })
                            }),
                        );
                    }
                }
            }
            Check::TBasis => {
                for k in n + 1..=p.max(n + 1) {
                    push(
                        "t_basis",
                        params(n, &[("k", k.into())]),
                        Box::new(move || {
                            let poly = s.t_in_t_basis(k)?;
                            let value = s.eval_tpoly(&poly)?;
                            Ok(Outcome::residual(value.try_sub(&*s.t(k)?)?.len()))
                        }),
                    );
                }
            }
            Check::Poisson => {
                for k in 1..=p {
                    for m in 1..=p {
                        push(
                            "involution",
                            params(n, &[("k", k.into()), ("m", m.into())]),
                            Box::new(move || {
                                Ok(Outcome::residual(
                                    poisson::involution_residual(n, k, m)?.len(),
                                ))
                            }),
                        );
                    }
                }
                let names = [
                    "poisson_antisymmetry",
                    "poisson_leibniz",
                    "poisson_jacobi",
                    "poisson_two_routes",
                ];
                for (idx, name) in names.into_iter().enumerate() {
                    push(
                        name,
                        params(
                            n,
                            &[("seed", (seed as i64).into()), ("samples", 100usize.into())],
                        ),
                        Box::new(move || {
                            Ok(Outcome::residual(poisson_properties(n, seed, 100)?[idx]))
                        }),
                    );
                }
            }
            Check::Semiclassical => {
                push(
                    "semiclassical",
                    params(n, &[]),
                    Box::new(move || {
                        let mut total = 0;
                        for a in all_gens(n) {
                            for b in all_gens(n) {
                                total += poisson::semiclassical_generator_residual(
                                    s.algebra(),
                                    a.row(),
                                    a.col(),
                                    b.row(),
                                    b.col(),
                                )?
                                .len();
                            }
                        }
                        Ok(Outcome::residual(total))
                    }),
                );
                push(
                    "classical_shadow",
                    params(
                        n,
                        &[("seed", (seed as i64).into()), ("samples", 100usize.into())],
                    ),
                    Box::new(move || {
                        Ok(Outcome::residual(shadow_homomorphism_failures(
                            s.algebra(),
                            seed,
                            100,
                        )?))
                    }),
                );
            }
        }
    }
    tasks
}

/// Runs the configured checks. Returns `Err` only for an invalid config.
pub fn run_verify(cfg: &RunConfig) -> Result<RunSummary> {
    cfg.validate()?;
    let session = Session::new(cfg.n)?;
    run_verify_in(cfg, &session)
}

/// As [`run_verify`], reusing the memo tables of an existing session.
pub fn run_verify_in(cfg: &RunConfig, session: &Session) -> Result<RunSummary> {
    cfg.validate()?;
    if session.n() != cfg.n {
        return Err(Error::SizeMismatch {
            left: cfg.n,
            right: session.n(),
        });
    }
    let start = Instant::now();
    let deadline = cfg.budget_ms.map(|ms| start + Duration::from_millis(ms));
    session.algebra().set_deadline(deadline);
    let engine_before = session.algebra().bigrading_violations();

    let tasks = build_tasks(cfg, session);
    let results = par::map(&tasks, session.algebra().is_parallel(), |task| {
        let t0 = Instant::now();
        if deadline.is_some_and(|d| t0 > d) {
            return (
                VerificationReport::skipped(task.name, task.params.clone(), 0),
                0,
            );
        }
        let outcome = (task.run)();
        let millis = t0.elapsed().as_millis() as u64;
        match outcome {
            Ok(o) => (
                VerificationReport::residual(
                    task.name,
                    task.params.clone(),
                    o.residual_terms,
                    millis,
                ),
                o.bigrading,
            ),
            Err(Error::BudgetExceeded) => (
                VerificationReport::skipped(task.name, task.params.clone(), millis),
                0,
            ),
            Err(e) => {
                let mut r = VerificationReport::residual(task.name, task.params.clone(), 0, millis);
                r.status = Status::Fail;
                r.error = Some(e.to_string());
                (r, 0)
            }
        }
    });
    session.algebra().set_deadline(None);

    let mut reports: Vec<VerificationReport> = Vec::with_capacity(results.len() + 1);
    let mut grading = 0;
    for (r, g) in results {
        grading += g;
        reports.push(r);
    }
    grading += session.algebra().bigrading_violations() - engine_before;
    reports.push(VerificationReport::residual(
        "bigrading",
        params(cfg.n, &[]),
        grading,
        start.elapsed().as_millis() as u64,
    ));
    reports.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));

    Ok(RunSummary {
        version: REPORT_VERSION,
        n: cfg.n,
        config: cfg.clone(),
        checks: reports,
    })
}

/// Stable JSON for determinism comparisons: the report with every `millis`
/// zeroed.
pub fn json_without_timings(summary: &RunSummary) -> String {
    let mut s = summary.clone();
    for r in &mut s.checks {
        r.millis = 0;
    }
    s.to_json()
}

/// Shares one session between several runs over the same `n`.
pub fn shared_session(n: usize) -> Result<Arc<Session>> {
    Ok(Arc::new(Session::new(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading_detector_flags_mismatches() {
        let x = QMatrix::generic(3);
        assert_eq!(z_violations(&x), 0);
        let transposed = QMatrix::from_fn(3, |i, j| x.get(j, i).clone());
        assert_eq!(z_violations(&transposed), 6);
        let alg = QAlgebra::new(2).unwrap();
        let e = alg
            .mul(&alg.gen(1, 1).unwrap(), &alg.gen(2, 2).unwrap())
            .unwrap();
        assert_eq!(balanced(&e), 0);
        assert_eq!(balanced(&e.try_add(&alg.gen(1, 2).unwrap()).unwrap()), 1);
    }

    #[test]
    fn check_list_parsing() {
        assert_eq!(parse_checks("all").unwrap().len(), Check::ALL.len());
        let c = parse_checks("commute, newton").unwrap();
        assert!(c.contains(&Check::Commute) && c.contains(&Check::Newton));
        assert!(parse_checks("bogus").is_err());
        assert!(parse_checks("").is_err());
    }

    #[test]
    fn invalid_config() {
        let mut cfg = RunConfig::new(0);
        assert_eq!(run_verify(&cfg).unwrap_err(), Error::EmptyAmbient);
        cfg.n = 2;
        cfg.max_power = 0;
        assert!(run_verify(&cfg).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(11, 3), 165);
        assert_eq!(binomial(4, 0), 1);
    }

    #[test]
    fn pair_table_matches_engine_n3() {
        let alg = QAlgebra::new(3).unwrap();
        for a in all_gens(3) {
            for b in all_gens(3) {
                assert_eq!(
                    alg.reduce_word(&[a, b]).unwrap(),
                    expected_pair(3, a, b),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn full_suite_n1_and_n2() {
        for n in 1..=2 {
            let summary = run_verify(&RunConfig::new(n)).unwrap();
            for r in &summary.checks {
                assert_eq!(r.status, Status::Pass, "{r}");
            }
            assert_eq!(summary.exit_code(), 0);
        }
    }

    #[test]
    fn tiny_budget_skips_instead_of_failing() {
        let mut cfg = RunConfig::new(3).with_checks([Check::Commute]);
        cfg.budget_ms = Some(0);
        let summary = run_verify(&cfg).unwrap();
        assert!(summary.checks.iter().any(|r| r.status == Status::Skipped));
        assert_eq!(summary.exit_code(), 0);
    }
}
