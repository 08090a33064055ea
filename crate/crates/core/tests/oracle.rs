mod common;

use common::*;
use qtrace::minors::IndexSet;
use qtrace::{QAlgebra, Rational, Session};

fn engine_eq(o: &mut Oracle, engine: &qtrace::AlgebraElement, free: &Free) {
    let expected = o.normal_form(free);
    assert_eq!(from_engine(engine), expected);
}

#[test]
fn pair_products_match_relation() {
    for n in 1..=3 {
        let alg = QAlgebra::new(n).unwrap();
        let mut o = Oracle::new();
        for a in qtrace::algebra::all_gens(n) {
            for b in qtrace::algebra::all_gens(n) {
                let e = alg.reduce_word(&[a, b]).unwrap();
                engine_eq(
                    &mut o,
                    &e,
                    &mul(&gen(a.row(), a.col()), &gen(b.row(), b.col())),
                );
            }
        }
    }
}

#[test]
fn square_of_diagonal_sum() {
    let alg = QAlgebra::new(2).unwrap();
    let d = alg
        .gen(1, 1)
        .unwrap()
        .try_add(&alg.gen(2, 2).unwrap())
        .unwrap();
    let e = alg.mul(&d, &d).unwrap();
    let f = add(&gen(1, 1), &gen(2, 2), &lp_mono(1, 0));
    engine_eq(&mut Oracle::new(), &e, &mul(&f, &f));
}

#[test]
fn random_words_match_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let alg = QAlgebra::new(3).unwrap();
    let gens = qtrace::algebra::all_gens(3);
    let mut o = Oracle::new();
    for _ in 0..200 {
        let len = rng.gen_range(0..=6);
        let word: Vec<_> = (0..len)
            .map(|_| gens[rng.gen_range(0..gens.len())])
            .collect();
        let e = alg.reduce_word(&word).unwrap();
        let w: Word = word.iter().map(|g| (g.row(), g.col())).collect();
        let mut f = Free::new();
        f.insert(w, lp_mono(1, 0));
        engine_eq(&mut o, &e, &f);
    }
}

#[test]
fn trace_powers_match_oracle() {
    for (n, kmax) in [(2, 4), (3, 3)] {
        let s = Session::new(n).unwrap();
        let mut o = Oracle::new();
        for k in 1..=kmax {
            engine_eq(&mut o, &s.t(k).unwrap(), &trace_power(n, k));
        }
    }
}

#[test]
fn sigmas_and_minors_match_oracle() {
    for n in 1..=3 {
        let s = Session::new(n).unwrap();
        let mut o = Oracle::new();
        for k in 0..=n {
            engine_eq(&mut o, &s.sigma(k).unwrap(), &sigma(n, k));
        }
        for k in 1..=n {
            for rows in subsets(n, k) {
                for cols in subsets(n, k) {
                    let e = s
                        .minors()
                        .qminor(
                            &IndexSet::new(rows.clone(), n).unwrap(),
                            &IndexSet::new(cols.clone(), n).unwrap(),
                        )
                        .unwrap();
                    engine_eq(&mut o, &e, &minor(&rows, &cols));
                }
            }
        }
    }
}

#[test]
fn newton_relations_hold_in_oracle() {
    for (n, kmax) in [(2, 4), (3, 4)] {
        let mut o = Oracle::new();
        for k in 1..=kmax {
            // t_k + sum_{j=1}^{k-1} (-1)^j t_{k-j} s_j + (-1)^k k s_k
            let mut r = trace_power(n, k);
            for j in 1..k {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                r = add(
                    &r,
                    &mul(&trace_power(n, k - j), &sigma(n, j)),
                    &lp_mono(sign, 0),
                );
            }
            if k <= n {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                r = add(&r, &sigma(n, k), &lp_mono(sign * k as i64, 0));
            }
            assert!(is_zero(&o.normal_form(&r)), "n={n} k={k}");
            assert!(Session::new(n)
                .unwrap()
                .newton_residual(k)
                .unwrap()
                .is_zero());
        }
    }
}

#[test]
fn trace_commutator_n3_k2_m3() {
    let mut o = Oracle::new();
    let t2 = trace_power(3, 2);
    let t3 = trace_power(3, 3);
    let c = add(&mul(&t2, &t3), &mul(&t3, &t2), &lp_mono(-1, 0));
    assert!(is_zero(&o.normal_form(&c)));
    let s = Session::new(3).unwrap();
    assert!(s.commutator_residual(2, 3).unwrap().is_zero());
}

#[test]
fn t3_and_t4_in_trace_basis_n2() {
    let mut o = Oracle::new();
    let (t1, t2, t3, t4) = (
        trace_power(2, 1),
        trace_power(2, 2),
        trace_power(2, 3),
        trace_power(2, 4),
    );
    // 2 t3 = 3 t1 t2 - t1^3
    let mut r = add(&Free::new(), &t3, &lp_mono(2, 0));
    r = add(&r, &mul(&t1, &t2), &lp_mono(-3, 0));
    r = add(&r, &mul(&t1, &mul(&t1, &t1)), &lp_mono(1, 0));
    assert!(is_zero(&o.normal_form(&r)));
    // 2 t4 = 2 t1^2 t2 - t1^4 + t2^2
    let t1sq = mul(&t1, &t1);
    let mut r = add(&Free::new(), &t4, &lp_mono(2, 0));
    r = add(&r, &mul(&t1sq, &t2), &lp_mono(-2, 0));
    r = add(&r, &mul(&t1sq, &t1sq), &lp_mono(1, 0));
    r = add(&r, &mul(&t2, &t2), &lp_mono(-1, 0));
    assert!(is_zero(&o.normal_form(&r)));

    let s = Session::new(2).unwrap();
    let half = Rational::new(1.into(), 2.into());
    let p3 = s.t_in_t_basis(3).unwrap();
    assert_eq!(p3.coeff(&[1, 2]), Rational::from_integer(3.into()) * &half);
    assert_eq!(p3.coeff(&[1, 1, 1]), -half.clone());
    assert_eq!(p3.terms().count(), 2);
    let p4 = s.t_in_t_basis(4).unwrap();
    assert_eq!(p4.coeff(&[1, 1, 2]), Rational::from_integer(1.into()));
    assert_eq!(p4.coeff(&[1, 1, 1, 1]), -half.clone());
    assert_eq!(p4.coeff(&[2, 2]), half);
    assert_eq!(p4.terms().count(), 3);
    for k in [3, 4] {
        let value = s.eval_tpoly(&s.t_in_t_basis(k).unwrap()).unwrap();
        engine_eq(&mut o, &value, &trace_power(2, k));
    }
}

#[test]
fn laplace_expansions_vanish_in_oracle_n3() {
    let n = 3;
    let s = Session::new(n).unwrap();
    let mut o = Oracle::new();
    for size in 1..=n {
        for rows in subsets(n, size) {
            for cols in subsets(n, size) {
                for &i in &rows {
                    for &r in &rows {
                        if size == 1 {
                            continue;
                        }
                        let rk: Vec<usize> = rows.iter().copied().filter(|&u| u != r).collect();
                        let lr = rows.iter().filter(|&&u| u < r).count() as i32;
                        let mut res = if i == r {
                            minor(&rows, &cols)
                        } else {
                            Free::new()
                        };
                        for &c in &cols {
                            let ls = cols.iter().filter(|&&u| u < c).count() as i32;
                            let lk: Vec<usize> = cols.iter().copied().filter(|&u| u != c).collect();
                            let e = ls - lr;
                            let sign = if e.rem_euclid(2) == 0 { -1 } else { 1 };
                            res = add(&res, &mul(&gen(i, c), &minor(&rk, &lk)), &lp_mono(sign, e));
                        }
                        assert!(is_zero(&o.normal_form(&res)), "{rows:?} {cols:?} {i} {r}");
                        let engine = s
                            .minors()
                            .laplace_residual(
                                &IndexSet::new(rows.clone(), n).unwrap(),
                                &IndexSet::new(cols.clone(), n).unwrap(),
                                i,
                                r,
                            )
                            .unwrap();
                        assert!(engine.is_zero());
                    }
                }
            }
        }
    }
}
