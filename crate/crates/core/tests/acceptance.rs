//! End-to-end acceptance suite: every defining identity of the three
//! positivity structures, checked bit-exactly on seeded random input.
//! Prints one pass/fail line per criterion.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use theta_positivity::flag::{is_positive_triple_standard, Flag, StandardFlags};
use theta_positivity::gl::{
    is_totally_positive, param_f, proximality_check, sl3_transition, word_transition,
    PositiveParams,
};
use theta_positivity::matrix::RatMatrix;
use theta_positivity::scalar::{rat, ExactScalar};
use theta_positivity::so3q::{
    braid_transition, exp_principal, f_word, in_cone_alpha2, invert_f, q_j, word_1212, word_2121,
    B2Params, B2Slot, QFormConfig,
};
use theta_positivity::sp::{
    h_elem, is_positive_lag_triple, lag_coordinate, maslov_index, signature, v_elem, w_elem,
    Lagrangian, SymMatrix, SymplecticSpace,
};
use theta_positivity::weyl::CoxeterSystem;

const SEED: u64 = 0x5EED_CAFE;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn pos_rat(rng: &mut ChaCha8Rng) -> ExactScalar {
    let num = rng.gen_range(1..=24i64);
    let den = rng.gen_range(1..=12i64);
    ExactScalar::new(num.into(), den.into())
}

fn any_rat(rng: &mut ChaCha8Rng) -> ExactScalar {
    let num = rng.gen_range(-12..=12i64);
    let den = rng.gen_range(1..=8i64);
    ExactScalar::new(num.into(), den.into())
}

/// Interior vector of the cone {q_J > 0, v_1 > 0} by rejection.
fn cone_vec(cfg: &QFormConfig, rng: &mut ChaCha8Rng) -> Vec<ExactScalar> {
    loop {
        let mut v: Vec<ExactScalar> = (0..cfg.vdim()).map(|_| any_rat(rng)).collect();
        v[0] = pos_rat(rng) + rat(1);
        if in_cone_alpha2(cfg, &v).unwrap() {
            return v;
        }
    }
}

fn interior_1212(cfg: &QFormConfig, rng: &mut ChaCha8Rng) -> B2Params {
    B2Params::new(
        vec![1, 2, 1, 2],
        vec![
            B2Slot::Scalar(pos_rat(rng)),
            B2Slot::Vector(cone_vec(cfg, rng)),
            B2Slot::Scalar(pos_rat(rng)),
            B2Slot::Vector(cone_vec(cfg, rng)),
        ],
    )
    .unwrap()
}

/// Totally positive matrix as L D U with positive parameters.
fn random_tp(n: usize, sys: &CoxeterSystem, rng: &mut ChaCha8Rng) -> RatMatrix {
    let w0 = sys.longest_element();
    let upper = |rng: &mut ChaCha8Rng| {
        let values = (0..w0.len()).map(|_| pos_rat(rng)).collect();
        param_f(&PositiveParams::new(w0.clone(), values).unwrap(), n).unwrap()
    };
    let lower = upper(rng).into_matrix().transpose();
    let mut diag = RatMatrix::identity(n);
    for i in 0..n {
        diag[(i, i)] = pos_rat(rng);
    }
    lower.mul(&diag).mul(upper(rng).matrix())
}

fn sl2_identity() -> Result<(), String> {
    let u = |s: &ExactScalar| {
        RatMatrix::from_rows(vec![vec![rat(1), s.clone()], vec![rat(0), rat(1)]])
    };
    let o = |t: &ExactScalar| {
        RatMatrix::from_rows(vec![vec![rat(1), rat(0)], vec![t.clone(), rat(1)]])
    };
    let a = |l: &ExactScalar| {
        RatMatrix::from_rows(vec![vec![l.clone(), rat(0)], vec![rat(0), rat(1) / l]])
    };
    let mut rng = rng();
    for i in 0..100 {
        let s = pos_rat(&mut rng);
        let t = pos_rat(&mut rng);
        let denom = rat(1) + &s * &t;
        let lhs = u(&s).mul(&o(&t));
        let rhs = o(&(&t / &denom)).mul(&a(&denom)).mul(&u(&(&s / &denom)));
        if lhs != rhs {
            return Err(format!("mismatch at sample {i}"));
        }
    }
    Ok(())
}

fn sl3_transition_identity() -> Result<(), String> {
    let sys = CoxeterSystem::type_a(3);
    let w121 = sys.reduced_word(&[1, 2, 1]).map_err(|e| e.to_string())?;
    let w212 = sys.reduced_word(&[2, 1, 2]).map_err(|e| e.to_string())?;
    let mut rng = rng();
    for i in 0..200 {
        let (a, b, c) = (pos_rat(&mut rng), pos_rat(&mut rng), pos_rat(&mut rng));
        let (c1, b1, a1) = sl3_transition(&a, &b, &c).map_err(|e| e.to_string())?;
        if !(c1 > rat(0) && b1 > rat(0) && a1 > rat(0)) {
            return Err(format!("non-positive output at sample {i}"));
        }
        let lhs = param_f(
            &PositiveParams::new(w121.clone(), vec![a, b, c]).unwrap(),
            3,
        )
        .map_err(|e| e.to_string())?;
        let rhs = param_f(
            &PositiveParams::new(w212.clone(), vec![c1, b1, a1]).unwrap(),
            3,
        )
        .map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("matrix mismatch at sample {i}"));
        }
    }
    Ok(())
}

fn tp_closure() -> Result<(), String> {
    let mut rng = rng();
    for n in [3usize, 4] {
        let sys = CoxeterSystem::type_a(n);
        for i in 0..50 {
            let g = random_tp(n, &sys, &mut rng);
            let h = random_tp(n, &sys, &mut rng);
            if !is_totally_positive(&g).map_err(|e| e.to_string())? {
                return Err(format!("n={n} sample {i}: factor not totally positive"));
            }
            if !is_totally_positive(&g.mul(&h)).map_err(|e| e.to_string())? {
                return Err(format!("n={n} sample {i}: product not totally positive"));
            }
        }
    }
    Ok(())
}

fn reduced_word_independence() -> Result<(), String> {
    let sys = CoxeterSystem::type_a(4);
    let w0 = sys.longest_element();
    let words = sys.enumerate_reduced_words(&w0).map_err(|e| e.to_string())?;
    if words.len() != 16 {
        return Err(format!("expected 16 reduced words of w0 in S4, got {}", words.len()));
    }
    let mut rng = rng();
    let base = words[0].clone();
    for target in &words {
        for i in 0..20 {
            let values: Vec<ExactScalar> = (0..6).map(|_| pos_rat(&mut rng)).collect();
            let p = PositiveParams::new(base.clone(), values).unwrap();
            let m = param_f(&p, 4).map_err(|e| e.to_string())?;
            let q = word_transition(&sys, &p, target).map_err(|e| e.to_string())?;
            if !q.all_positive() {
                return Err(format!("word {:?} sample {i}: parameters left the cone", target.letters()));
            }
            if param_f(&q, 4).map_err(|e| e.to_string())? != m {
                return Err(format!("word {:?} sample {i}: image changed", target.letters()));
            }
        }
    }
    Ok(())
}

fn flag_triple_criterion() -> Result<(), String> {
    let mut rng = rng();
    // n = 2: the triple (E, span(t e1 + e2), F) is positive iff t > 0
    let std2 = StandardFlags::new(2);
    let mut seen_pos = 0;
    let mut seen_neg = 0;
    for _ in 0..100 {
        let t = {
            let mut t = any_rat(&mut rng);
            while t == rat(0) {
                t = any_rat(&mut rng);
            }
            t
        };
        let basis = RatMatrix::from_rows(vec![vec![t.clone(), rat(1)], vec![rat(1), rat(0)]]);
        let flag = Flag::new(basis).map_err(|e| e.to_string())?;
        let verdict = is_positive_triple_standard(&flag, &std2).map_err(|e| e.to_string())?;
        if verdict != (t > rat(0)) {
            return Err(format!("n=2 mismatch at t = {t}"));
        }
        if verdict {
            seen_pos += 1;
        } else {
            seen_neg += 1;
        }
    }
    if seen_pos == 0 || seen_neg == 0 {
        return Err("n=2 samples were not of mixed sign".into());
    }
    // n = 3: forward-constructed triples from the positive semigroup
    let sys = CoxeterSystem::type_a(3);
    let w0 = sys.longest_element();
    let std3 = StandardFlags::new(3);
    for i in 0..50 {
        let values: Vec<ExactScalar> = (0..3).map(|_| pos_rat(&mut rng)).collect();
        let p = PositiveParams::new(w0.clone(), values).unwrap();
        let u = param_f(&p, 3).map_err(|e| e.to_string())?;
        let t = std3.e.apply(u.matrix()).map_err(|e| e.to_string())?;
        if !is_positive_triple_standard(&t, &std3).map_err(|e| e.to_string())? {
            return Err(format!("n=3 sample {i}: forward triple not positive"));
        }
        let neg = param_f(&p.negated(), 3).map_err(|e| e.to_string())?;
        let t = std3.e.apply(neg.matrix()).map_err(|e| e.to_string())?;
        if is_positive_triple_standard(&t, &std3).map_err(|e| e.to_string())? {
            return Err(format!("n=3 sample {i}: mirrored triple tested positive"));
        }
    }
    Ok(())
}

fn random_sym(n: usize, rng: &mut ChaCha8Rng) -> SymMatrix {
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = any_rat(rng);
            m[(i, j)] = x.clone();
            m[(j, i)] = x;
        }
    }
    SymMatrix::new(m).unwrap()
}

fn random_pos_def(n: usize, rng: &mut ChaCha8Rng) -> SymMatrix {
    // B^t B + I for a random B is positive definite
    let mut b = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = any_rat(rng);
        }
    }
    let m = b.transpose().mul(&b).add(&RatMatrix::identity(n));
    SymMatrix::new(m).unwrap()
}

fn maslov_equivalence(sp_log: &mut Vec<(usize, RatMatrix)>) -> Result<(), String> {
    let mut rng = rng();
    for n in [1usize, 2, 3] {
        let space = SymplecticSpace::new(n);
        let mut done = 0;
        while done < 100 {
            // random triple of graphs moved by a random symplectic map
            let g = {
                let v = v_elem(&space, &random_pos_def(n, &mut rng));
                let w = w_elem(&space, &random_sym(n, &mut rng));
                let mut a = RatMatrix::identity(n);
                for i in 0..n {
                    a[(i, i)] = pos_rat(&mut rng);
                    if i + 1 < n {
                        a[(i, i + 1)] = any_rat(&mut rng);
                    }
                }
                let h = h_elem(&space, &a).map_err(|e| e.to_string())?;
                v.mul(&h).mul(&w)
            };
            sp_log.push((n, g.clone()));
            let ls: Vec<Lagrangian> = (0..3)
                .map(|_| {
                    Lagrangian::graph(&space, &random_sym(n, &mut rng))
                        .apply(&space, &g)
                        .map_err(|e| e.to_string())
                })
                .collect::<Result<_, _>>()?;
            let pairwise = ls[0].is_transverse_to(&ls[1])
                && ls[1].is_transverse_to(&ls[2])
                && ls[0].is_transverse_to(&ls[2]);
            if !pairwise {
                continue;
            }
            done += 1;
            let positive =
                is_positive_lag_triple(&space, &ls[0], &ls[1], &ls[2]).map_err(|e| e.to_string())?;
            let index = maslov_index(&space, &ls[0], &ls[1], &ls[2]);
            if positive != (index == n as i64) {
                return Err(format!(
                    "n={n}: positivity {positive} vs maslov index {index}"
                ));
            }
            // independent oracle: the index is the signature of the
            // Kashiwara form assembled from scratch
            let omega = space.form();
            let mut gram = RatMatrix::zeros(3 * n, 3 * n);
            let bases = [ls[0].basis(), ls[1].basis(), ls[2].basis()];
            for (bi, bj) in [(0, 1), (1, 2), (2, 0)] {
                let block = bases[bi].transpose().mul(omega).mul(bases[bj]);
                for r in 0..n {
                    for c in 0..n {
                        let half = &block[(r, c)] / rat(2);
                        gram[(bi * n + r, bj * n + c)] = half.clone();
                        gram[(bj * n + c, bi * n + r)] = half;
                    }
                }
            }
            if signature(&gram) != index {
                return Err(format!("n={n}: signature oracle disagrees"));
            }
        }
    }
    Ok(())
}

fn so3q_braid_identity(u_log: &mut Vec<(usize, RatMatrix)>) -> Result<(), String> {
    let mut rng = rng();
    for q in [4usize, 5, 6] {
        let cfg = QFormConfig::new(q).map_err(|e| e.to_string())?;
        for i in 0..200 {
            let p = interior_1212(&cfg, &mut rng);
            let (x1, v1, x2, v2) = match (&p.slots[0], &p.slots[1], &p.slots[2], &p.slots[3]) {
                (B2Slot::Scalar(a), B2Slot::Vector(b), B2Slot::Scalar(c), B2Slot::Vector(d)) => {
                    (a.clone(), b.clone(), c.clone(), d.clone())
                }
                _ => unreachable!(),
            };
            let img = braid_transition(&cfg, &x1, &v1, &x2, &v2).map_err(|e| e.to_string())?;
            let lhs = f_word(&cfg, &p).map_err(|e| e.to_string())?;
            let rhs = f_word(&cfg, &img.params()).map_err(|e| e.to_string())?;
            u_log.push((q, lhs.matrix().clone()));
            u_log.push((q, rhs.matrix().clone()));
            if lhs != rhs {
                return Err(format!("q={q} sample {i}: braid identity failed"));
            }
            let vsum: Vec<ExactScalar> =
                v1.iter().zip(&v2).map(|(a, b)| a + b).collect();
            let wsum: Vec<ExactScalar> =
                img.w1.iter().zip(&img.w2).map(|(a, b)| a + b).collect();
            // (1) and (2)
            if &x1 + &x2 != &img.y1 + &img.y2 || vsum != wsum {
                return Err(format!("q={q} sample {i}: sum equations failed"));
            }
            // (3)
            let lhs3: Vec<ExactScalar> = vsum
                .iter()
                .zip(&v2)
                .map(|(s, b)| &x1 * s + &x2 * b)
                .collect();
            let rhs3: Vec<ExactScalar> = img.w2.iter().map(|c| &img.y1 * c).collect();
            if lhs3 != rhs3 {
                return Err(format!("q={q} sample {i}: equation (3) failed"));
            }
            // (4)
            let lhs4 = &img.y1 * q_j(&cfg, &img.w2).map_err(|e| e.to_string())?;
            let rhs4 = &x1 * q_j(&cfg, &vsum).map_err(|e| e.to_string())?
                + &x2 * q_j(&cfg, &v2).map_err(|e| e.to_string())?;
            if lhs4 != rhs4 {
                return Err(format!("q={q} sample {i}: equation (4) failed"));
            }
            // cone preservation, including q_J(w1) > 0
            let interior = img.y1 > rat(0)
                && img.y2 > rat(0)
                && in_cone_alpha2(&cfg, &img.w1).map_err(|e| e.to_string())?
                && in_cone_alpha2(&cfg, &img.w2).map_err(|e| e.to_string())?
                && q_j(&cfg, &img.w1).map_err(|e| e.to_string())? > rat(0);
            if !interior {
                return Err(format!("q={q} sample {i}: output left the open cones"));
            }
        }
    }
    Ok(())
}

fn nilpotent_exp_identity(u_log: &mut Vec<(usize, RatMatrix)>) -> Result<(), String> {
    let mut rng = rng();
    let third = ExactScalar::new(1.into(), 3.into());
    for q in [4usize, 5, 6] {
        let cfg = QFormConfig::new(q).map_err(|e| e.to_string())?;
        for i in 0..100 {
            let a = pos_rat(&mut rng);
            let w = cone_vec(&cfg, &mut rng);
            let e = exp_principal(&cfg, &a, &w).map_err(|e| e.to_string())?;
            u_log.push((q, e.matrix().clone()));
            let p = B2Params::new(
                vec![2, 1, 2, 1],
                vec![
                    B2Slot::Vector(w.iter().map(|x| x * &third).collect()),
                    B2Slot::Scalar(&a * ExactScalar::new(3.into(), 4.into())),
                    B2Slot::Vector(w.iter().map(|x| x * rat(2) * &third).collect()),
                    B2Slot::Scalar(&a / rat(4)),
                ],
            )
            .unwrap();
            if e != f_word(&cfg, &p).map_err(|e| e.to_string())? {
                return Err(format!("q={q} sample {i}: exponential identity failed"));
            }
        }
    }
    Ok(())
}

fn invert_roundtrip(u_log: &mut Vec<(usize, RatMatrix)>) -> Result<(), String> {
    let mut rng = rng();
    let words = [word_1212(), word_2121()];
    for q in [4usize, 5, 6] {
        let cfg = QFormConfig::new(q).map_err(|e| e.to_string())?;
        for i in 0..100 {
            for word in &words {
                let p = if word.letters()[0] == 1 {
                    interior_1212(&cfg, &mut rng)
                } else {
                    B2Params::new(
                        vec![2, 1, 2, 1],
                        vec![
                            B2Slot::Vector(cone_vec(&cfg, &mut rng)),
                            B2Slot::Scalar(pos_rat(&mut rng)),
                            B2Slot::Vector(cone_vec(&cfg, &mut rng)),
                            B2Slot::Scalar(pos_rat(&mut rng)),
                        ],
                    )
                    .unwrap()
                };
                let u = f_word(&cfg, &p).map_err(|e| e.to_string())?;
                u_log.push((q, u.matrix().clone()));
                match invert_f(&cfg, &u, word).map_err(|e| e.to_string())? {
                    Some(got) if got == p => {}
                    other => {
                        return Err(format!(
                            "q={q} sample {i} word {:?}: round trip failed ({other:?})",
                            word.letters()
                        ))
                    }
                }
            }
        }
        // identity and mirrored elements are rejected
        let id = theta_positivity::so3q::UThetaElement::from_matrix(
            &cfg,
            &RatMatrix::identity(cfg.dim()),
        )
        .map_err(|e| e.to_string())?;
        let mirrored = {
            let p = interior_1212(&cfg, &mut rng);
            let neg = B2Params::new(
                p.word.clone(),
                p.slots
                    .iter()
                    .map(|s| match s {
                        B2Slot::Scalar(x) => B2Slot::Scalar(-x),
                        B2Slot::Vector(v) => B2Slot::Vector(v.iter().map(|x| -x).collect()),
                    })
                    .collect(),
            )
            .unwrap();
            f_word(&cfg, &neg).map_err(|e| e.to_string())?
        };
        u_log.push((q, mirrored.matrix().clone()));
        for word in &words {
            if invert_f(&cfg, &id, word).map_err(|e| e.to_string())?.is_some() {
                return Err(format!("q={q}: identity accepted as positive"));
            }
            if invert_f(&cfg, &mirrored, word).map_err(|e| e.to_string())?.is_some() {
                return Err(format!("q={q}: mirrored element accepted as positive"));
            }
        }
    }
    Ok(())
}

fn eigenvalue_separation() -> Result<(), String> {
    let mut rng = rng();
    for n in [3usize, 4] {
        let sys = CoxeterSystem::type_a(n);
        for i in 0..25 {
            let g = random_tp(n, &sys, &mut rng);
            if !proximality_check(&g).map_err(|e| e.to_string())? {
                return Err(format!("n={n} sample {i}: eigenvalues not separated"));
            }
        }
    }
    Ok(())
}

fn group_membership(
    sp_log: &[(usize, RatMatrix)],
    u_log: &[(usize, RatMatrix)],
) -> Result<(), String> {
    if sp_log.is_empty() || u_log.is_empty() {
        return Err("no elements were logged by the earlier criteria".into());
    }
    for (n, g) in sp_log {
        let space = SymplecticSpace::new(*n);
        if !space.is_symplectic(g) {
            return Err(format!("Sp(2*{n}) element fails g^t w g = w"));
        }
    }
    for (q, g) in u_log {
        let cfg = QFormConfig::new(*q).map_err(|e| e.to_string())?;
        if !cfg.preserves_form(g) {
            return Err(format!("SO(3,{q}) element fails g^t Q g = Q"));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let mut sp_log: Vec<(usize, RatMatrix)> = Vec::new();
    let mut u_log: Vec<(usize, RatMatrix)> = Vec::new();

    // extra sanity used by criterion 6's setup
    {
        let space = SymplecticSpace::new(2);
        let tri = lag_coordinate(&Lagrangian::standard_e(&space), &space);
        assert!(tri.is_ok());
    }

    let mut results: Vec<(String, Result<(), String>, f64)> = Vec::new();
    let mut run = |name: &str, f: &mut dyn FnMut() -> Result<(), String>| {
        let start = Instant::now();
        let outcome = f();
        results.push((name.to_string(), outcome, start.elapsed().as_secs_f64()));
    };

    run("01 SL(2) factorization identity", &mut sl2_identity);
    run("02 SL(3) braid transition", &mut sl3_transition_identity);
    run("03 total positivity closed under products", &mut tp_closure);
    run("04 reduced-word independence in S4", &mut reduced_word_independence);
    run("05 flag-triple criterion", &mut flag_triple_criterion);
    run("06 Maslov index equivalence", &mut || maslov_equivalence(&mut sp_log));
    run("07 SO(3,q) braid identity and cones", &mut || so3q_braid_identity(&mut u_log));
    run("08 nilpotent exponential identity", &mut || nilpotent_exp_identity(&mut u_log));
    run("09 parameter recovery round trip", &mut || invert_roundtrip(&mut u_log));
    run("10 eigenvalue separation of positive matrices", &mut eigenvalue_separation);
    let sp_snapshot = sp_log.clone();
    let u_snapshot = u_log.clone();
    run("11 group membership of constructed elements", &mut || {
        group_membership(&sp_snapshot, &u_snapshot)
    });

    let mut failed = 0;
    for (name, outcome, secs) in &results {
        match outcome {
            Ok(()) => println!("PASS {name} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {msg}");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
