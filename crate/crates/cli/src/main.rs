//! Command-line front end: JSON in, JSON report out, human summary on
//! stderr. Exit codes: 0 = verdict true/pass, 1 = verdict false/fail,
//! 2 = input error. Reports are deterministic for identical inputs and
//! seed; timing is only printed to stderr.

use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use theta_positivity::error::Error;
use theta_positivity::flag::{
    is_positive_quadruple, is_positive_triple, is_positive_triple_sl, Flag,
};
use theta_positivity::gl::{
    is_totally_positive, is_unipotent_positive, param_f, whitney_factor, word_transition,
    PositiveParams, UnipotentUpper,
};
use theta_positivity::json::{
    b2_params_to_json, matrix_from_json, params_from_json,
    MatrixJson, ParamsJson,
};
use theta_positivity::matrix::RatMatrix;
use theta_positivity::scalar::{format_scalar, parse_scalar, rat, ExactScalar};
use theta_positivity::so3q::{
    braid_transition, exp_principal, f_word, in_cone_alpha2, invert_f, is_positive_triple_so3q,
    q_j, u_theta, word_1212, word_2121, B2Params, B2Slot, IsotropicFlag, QFormConfig,
    UThetaElement,
};
use theta_positivity::sp::{
    h_elem, is_positive_lag_triple, maslov_index, refactor, sp_semigroup_product, v_elem, w_elem,
    Lagrangian, SpFactor, SymMatrix, SymplecticSpace,
};
use theta_positivity::weyl::CoxeterSystem;

#[derive(Parser)]
#[command(
    name = "theta-pos",
    about = "Exact positivity checks for GL(n), Sp(2n) and SO(3,q)",
    version
)]
struct Cli {
    /// Seed for all randomized commands (fallback: THETA_POS_SEED, then 0).
    /// The generator is ChaCha8.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test total positivity of a square matrix (all minors > 0)
    CheckTp {
        /// Matrix JSON, inline or @file
        #[arg(long)]
        matrix: String,
    },
    /// Exact LDU factorization with unit triangular factors
    Factor {
        #[arg(long)]
        matrix: String,
    },
    /// Evaluate the word parametrization F_w and test membership in the
    /// positive unipotent semigroup
    Param {
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// Parameters JSON: {"word":[...],"values":["p/q",...]}
        #[arg(long)]
        params: String,
    },
    /// Transport parameters from one reduced word to another
    Transition {
        #[arg(long)]
        n: usize,
        /// Source word, e.g. 121 or 1,2,1
        #[arg(long)]
        from: String,
        /// Target word
        #[arg(long)]
        to: String,
        /// Comma-separated rational values
        #[arg(long)]
        values: String,
    },
    /// Positivity of a flag triple (f1, t, f3)
    Triple {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        f3: String,
        /// Use the orientation-sensitive SL convention instead of GL
        #[arg(long)]
        sl: bool,
    },
    /// Positivity of a flag quadruple (f1, s1, s2, f4)
    Quadruple {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        s1: String,
        #[arg(long)]
        s2: String,
        #[arg(long)]
        f4: String,
    },
    /// Maslov index of a Lagrangian triple (signature of the ternary form)
    Maslov {
        /// Symplectic rank n; Lagrangian bases are 2n x n
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
        #[arg(long)]
        l3: String,
    },
    /// Positivity of a Lagrangian triple
    LagTriple {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
        #[arg(long)]
        l3: String,
    },
    /// SO(3,q) operations
    So3q {
        #[command(subcommand)]
        op: So3qOp,
    },
    /// Draw random elements of a positive semigroup
    Sample {
        /// One of: tp, unipotent, sp, so3q
        #[arg(long)]
        kind: String,
        /// Size parameter (matrix size n, or q for so3q)
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Run the full invariant suite and report pass counts
    Selftest,
}

#[derive(Subcommand)]
enum So3qOp {
    /// Change of coordinates across the B2 braid relation
    Braid {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        x1: String,
        /// Comma-separated vector of q-1 rationals
        #[arg(long)]
        v1: String,
        #[arg(long)]
        x2: String,
        #[arg(long)]
        v2: String,
    },
    /// Recover word parameters from a unipotent matrix, or report that
    /// it is not positive
    Invert {
        #[arg(long)]
        q: usize,
        /// 1212 or 2121
        #[arg(long)]
        word: String,
        #[arg(long)]
        matrix: String,
    },
    /// Exponential of a + w in the two weight spaces
    Exp {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        w: String,
    },
    /// Positivity of the isotropic-flag triple (E, S, F) with standard
    /// outer flags
    Triple {
        #[arg(long)]
        q: usize,
        /// Line: comma-separated vector of q+3 rationals
        #[arg(long)]
        line: String,
        /// Plane basis: (q+3) x 2 matrix JSON
        #[arg(long)]
        plane: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let seed = cli
        .seed
        .or_else(|| std::env::var("THETA_POS_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(0);
    let start = Instant::now();
    let outcome = dispatch(&cli.command, seed);
    let code = match outcome {
        Ok((report, code)) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            let verdict = report
                .get("verdict")
                .map(|v| v.to_string())
                .unwrap_or_else(|| "done".into());
            eprintln!(
                "{}: verdict {} in {:.3}s",
                report.get("command").and_then(Value::as_str).unwrap_or("?"),
                verdict,
                start.elapsed().as_secs_f64()
            );
            code
        }
        Err(e) => {
            let report = json!({"error": e.to_string()});
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            eprintln!("input error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn read_arg(s: &str) -> Result<String, Error> {
    if let Some(path) = s.strip_prefix('@') {
        let mut buf = String::new();
        std::fs::File::open(path)
            .and_then(|mut f| f.read_to_string(&mut buf))
            .map_err(|e| Error::Input { field: "file".into(), msg: format!("{path}: {e}") })?;
        Ok(buf)
    } else {
        Ok(s.to_string())
    }
}

fn arg_matrix(s: &str) -> Result<RatMatrix, Error> {
    matrix_from_json(&read_arg(s)?)
}

fn arg_word(s: &str) -> Result<Vec<usize>, Error> {
    let compact = !s.contains(',');
    let letters: Result<Vec<usize>, _> = if compact {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or(())).collect()
    } else {
        s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| ())).collect()
    };
    letters.map_err(|_| Error::Input {
        field: "word".into(),
        msg: format!("cannot parse word `{s}`"),
    })
}

fn arg_scalars(s: &str) -> Result<Vec<ExactScalar>, Error> {
    s.split(',').map(|t| parse_scalar(t.trim())).collect()
}

fn verdict_code(v: bool) -> i32 {
    if v {
        0
    } else {
        1
    }
}

fn unipotent_json(u: &UnipotentUpper) -> Value {
    serde_json::to_value(MatrixJson::from_matrix(u.matrix())).expect("serializable")
}

fn matrix_json(m: &RatMatrix) -> Value {
    serde_json::to_value(MatrixJson::from_matrix(m)).expect("serializable")
}

fn scalars_json(v: &[ExactScalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_scalar(x))).collect())
}

fn dispatch(cmd: &Command, seed: u64) -> Result<(Value, i32), Error> {
    match cmd {
        Command::CheckTp { matrix } => {
            let m = arg_matrix(matrix)?;
            let verdict = is_totally_positive(&m)?;
            Ok((
                json!({
                    "command": "check-tp",
                    "inputs": {"matrix": matrix_json(&m)},
                    "verdict": verdict,
                }),
                verdict_code(verdict),
            ))
        }
        Command::Factor { matrix } => {
            let m = arg_matrix(matrix)?;
            match whitney_factor(&m) {
                Ok((l, d, u)) => Ok((
                    json!({
                        "command": "factor",
                        "inputs": {"matrix": matrix_json(&m)},
                        "verdict": true,
                        "witness": {
                            "lower": matrix_json(&l),
                            "diag": matrix_json(&d),
                            "upper": unipotent_json(&u),
                        },
                    }),
                    0,
                )),
                Err(Error::LeadingMinorZero(k)) => Ok((
                    json!({
                        "command": "factor",
                        "inputs": {"matrix": matrix_json(&m)},
                        "verdict": false,
                        "witness": {"vanishing_leading_minor": k},
                    }),
                    1,
                )),
                Err(e) => Err(e),
            }
        }
        Command::Param { n, params } => {
            let p = params_from_json(&read_arg(params)?, *n)?;
            let u = param_f(&p, *n)?;
            let positive = p.all_positive() && is_unipotent_positive(&u)?;
            Ok((
                json!({
                    "command": "param",
                    "inputs": {"n": n, "params": serde_json::to_value(ParamsJson::from_params(&p)).unwrap()},
                    "verdict": positive,
                    "witness": {"matrix": unipotent_json(&u)},
                }),
                verdict_code(positive),
            ))
        }
        Command::Transition { n, from, to, values } => {
            let sys = CoxeterSystem::type_a(*n);
            let from_w = sys.reduced_word(&arg_word(from)?)?;
            let to_w = sys.reduced_word(&arg_word(to)?)?;
            let vals = arg_scalars(values)?;
            let p = PositiveParams::new(from_w, vals)?;
            let q = word_transition(&sys, &p, &to_w)?;
            let same = param_f(&p, *n)? == param_f(&q, *n)?;
            Ok((
                json!({
                    "command": "transition",
                    "inputs": {
                        "n": n,
                        "from": p.word.letters(),
                        "to": to_w.letters(),
                        "values": scalars_json(&p.values),
                    },
                    "verdict": same,
                    "witness": {"values": scalars_json(&q.values)},
                }),
                verdict_code(same),
            ))
        }
        Command::Triple { f1, t, f3, sl } => {
            let a = Flag::new(arg_matrix(f1)?)?;
            let b = Flag::new(arg_matrix(t)?)?;
            let c = Flag::new(arg_matrix(f3)?)?;
            let verdict = if *sl {
                is_positive_triple_sl(&a, &b, &c)?
            } else {
                is_positive_triple(&a, &b, &c)?
            };
            Ok((
                json!({
                    "command": "triple",
                    "inputs": {
                        "f1": matrix_json(a.basis()),
                        "t": matrix_json(b.basis()),
                        "f3": matrix_json(c.basis()),
                        "sl": sl,
                    },
                    "verdict": verdict,
                }),
                verdict_code(verdict),
            ))
        }
        Command::Quadruple { f1, s1, s2, f4 } => {
            let a = Flag::new(arg_matrix(f1)?)?;
            let b = Flag::new(arg_matrix(s1)?)?;
            let c = Flag::new(arg_matrix(s2)?)?;
            let d = Flag::new(arg_matrix(f4)?)?;
            let verdict = is_positive_quadruple(&a, &b, &c, &d)?;
            Ok((
                json!({
                    "command": "quadruple",
                    "inputs": {
                        "f1": matrix_json(a.basis()),
                        "s1": matrix_json(b.basis()),
                        "s2": matrix_json(c.basis()),
                        "f4": matrix_json(d.basis()),
                    },
                    "verdict": verdict,
                }),
                verdict_code(verdict),
            ))
        }
        Command::Maslov { n, l1, l2, l3 } => {
            let space = SymplecticSpace::new(*n);
            let a = Lagrangian::new(&space, arg_matrix(l1)?)?;
            let b = Lagrangian::new(&space, arg_matrix(l2)?)?;
            let c = Lagrangian::new(&space, arg_matrix(l3)?)?;
            let index = maslov_index(&space, &a, &b, &c);
            Ok((
                json!({
                    "command": "maslov",
                    "inputs": {
                        "n": n,
                        "l1": matrix_json(a.basis()),
                        "l2": matrix_json(b.basis()),
                        "l3": matrix_json(c.basis()),
                    },
                    "verdict": true,
                    "witness": {"index": index},
                }),
                0,
            ))
        }
        Command::LagTriple { n, l1, l2, l3 } => {
            let space = SymplecticSpace::new(*n);
            let a = Lagrangian::new(&space, arg_matrix(l1)?)?;
            let b = Lagrangian::new(&space, arg_matrix(l2)?)?;
            let c = Lagrangian::new(&space, arg_matrix(l3)?)?;
            let verdict = is_positive_lag_triple(&space, &a, &b, &c)?;
            Ok((
                json!({
                    "command": "lag-triple",
                    "inputs": {
                        "n": n,
                        "l1": matrix_json(a.basis()),
                        "l2": matrix_json(b.basis()),
                        "l3": matrix_json(c.basis()),
                    },
                    "verdict": verdict,
                    "witness": {"maslov_index": maslov_index(&space, &a, &b, &c)},
                }),
                verdict_code(verdict),
            ))
        }
        Command::So3q { op } => so3q_dispatch(op),
        Command::Sample { kind, size, count } => sample(kind, *size, *count, seed),
        Command::Selftest => selftest(seed),
    }
}

fn so3q_dispatch(op: &So3qOp) -> Result<(Value, i32), Error> {
    match op {
        So3qOp::Braid { q, x1, v1, x2, v2 } => {
            let cfg = QFormConfig::new(*q)?;
            let x1 = parse_scalar(x1)?;
            let x2 = parse_scalar(x2)?;
            let v1 = arg_scalars(v1)?;
            let v2 = arg_scalars(v2)?;
            let img = braid_transition(&cfg, &x1, &v1, &x2, &v2)?;
            let lhs = f_word(
                &cfg,
                &B2Params::new(
                    vec![1, 2, 1, 2],
                    vec![
                        B2Slot::Scalar(x1.clone()),
                        B2Slot::Vector(v1.clone()),
                        B2Slot::Scalar(x2.clone()),
                        B2Slot::Vector(v2.clone()),
                    ],
                )?,
            )?;
            let verdict = lhs == f_word(&cfg, &img.params())?;
            Ok((
                json!({
                    "command": "so3q braid",
                    "inputs": {
                        "q": q,
                        "x1": format_scalar(&x1),
                        "v1": scalars_json(&v1),
                        "x2": format_scalar(&x2),
                        "v2": scalars_json(&v2),
                    },
                    "verdict": verdict,
                    "witness": {
                        "w1": scalars_json(&img.w1),
                        "y1": format_scalar(&img.y1),
                        "w2": scalars_json(&img.w2),
                        "y2": format_scalar(&img.y2),
                    },
                }),
                verdict_code(verdict),
            ))
        }
        So3qOp::Invert { q, word, matrix } => {
            let cfg = QFormConfig::new(*q)?;
            let letters = arg_word(word)?;
            let w = match letters.as_slice() {
                [1, 2, 1, 2] => word_1212(),
                [2, 1, 2, 1] => word_2121(),
                _ => {
                    return Err(Error::Input {
                        field: "word".into(),
                        msg: "word must be 1212 or 2121".into(),
                    })
                }
            };
            let m = arg_matrix(matrix)?;
            let u = UThetaElement::from_matrix(&cfg, &m)?;
            match invert_f(&cfg, &u, &w)? {
                Some(p) => Ok((
                    json!({
                        "command": "so3q invert",
                        "inputs": {"q": q, "word": w.letters(), "matrix": matrix_json(&m)},
                        "verdict": true,
                        "witness": {"params": serde_json::from_str::<Value>(&b2_params_to_json(&p)).unwrap()},
                    }),
                    0,
                )),
                None => Ok((
                    json!({
                        "command": "so3q invert",
                        "inputs": {"q": q, "word": w.letters(), "matrix": matrix_json(&m)},
                        "verdict": false,
                        "witness": "not in the positive semigroup",
                    }),
                    1,
                )),
            }
        }
        So3qOp::Exp { q, a, w } => {
            let cfg = QFormConfig::new(*q)?;
            let a = parse_scalar(a)?;
            let w = arg_scalars(w)?;
            let e = exp_principal(&cfg, &a, &w)?;
            // interior data lands in the positive semigroup
            let positive = invert_f(&cfg, &e, &word_2121())?.is_some();
            Ok((
                json!({
                    "command": "so3q exp",
                    "inputs": {"q": q, "a": format_scalar(&a), "w": scalars_json(&w)},
                    "verdict": positive,
                    "witness": {"matrix": matrix_json(e.matrix())},
                }),
                verdict_code(positive),
            ))
        }
        So3qOp::Triple { q, line, plane } => {
            let cfg = QFormConfig::new(*q)?;
            let v1 = arg_scalars(line)?;
            let v2 = arg_matrix(plane)?;
            let s = IsotropicFlag::new(&cfg, v1.clone(), v2.clone())?;
            let verdict = is_positive_triple_so3q(&cfg, &s)?;
            Ok((
                json!({
                    "command": "so3q triple",
                    "inputs": {"q": q, "line": scalars_json(&v1), "plane": matrix_json(&v2)},
                    "verdict": verdict,
                }),
                verdict_code(verdict),
            ))
        }
    }
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

fn cone_vec(cfg: &QFormConfig, rng: &mut ChaCha8Rng) -> Vec<ExactScalar> {
    loop {
        let mut v: Vec<ExactScalar> = (0..cfg.vdim()).map(|_| any_rat(rng)).collect();
        v[0] = pos_rat(rng) + rat(1);
        if in_cone_alpha2(cfg, &v).expect("length fixed") {
            return v;
        }
    }
}

fn random_positive_unipotent(
    n: usize,
    sys: &CoxeterSystem,
    rng: &mut ChaCha8Rng,
) -> Result<UnipotentUpper, Error> {
    let w0 = sys.longest_element();
    let values = (0..w0.len()).map(|_| pos_rat(rng)).collect();
    param_f(&PositiveParams::new(w0, values)?, n)
}

fn random_tp(n: usize, sys: &CoxeterSystem, rng: &mut ChaCha8Rng) -> Result<RatMatrix, Error> {
    let lower = random_positive_unipotent(n, sys, rng)?.into_matrix().transpose();
    let upper = random_positive_unipotent(n, sys, rng)?;
    let mut diag = RatMatrix::identity(n);
    for i in 0..n {
        diag[(i, i)] = pos_rat(rng);
    }
    Ok(lower.mul(&diag).mul(upper.matrix()))
}

fn random_pos_def(n: usize, rng: &mut ChaCha8Rng) -> SymMatrix {
    let mut b = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = any_rat(rng);
        }
    }
    SymMatrix::new(b.transpose().mul(&b).add(&RatMatrix::identity(n))).expect("symmetric")
}

fn interior_params(cfg: &QFormConfig, word: &[usize], rng: &mut ChaCha8Rng) -> B2Params {
    let slots = word
        .iter()
        .map(|&l| {
            if l == 1 {
                B2Slot::Scalar(pos_rat(rng))
            } else {
                B2Slot::Vector(cone_vec(cfg, rng))
            }
        })
        .collect();
    B2Params::new(word.to_vec(), slots).expect("slot types match")
}

fn sample(kind: &str, size: usize, count: usize, seed: u64) -> Result<(Value, i32), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::new();
    match kind {
        "tp" => {
            let sys = CoxeterSystem::type_a(size);
            for _ in 0..count {
                let g = random_tp(size, &sys, &mut rng)?;
                debug_assert!(is_totally_positive(&g)?);
                items.push(matrix_json(&g));
            }
        }
        "unipotent" => {
            let sys = CoxeterSystem::type_a(size);
            for _ in 0..count {
                let u = random_positive_unipotent(size, &sys, &mut rng)?;
                items.push(unipotent_json(&u));
            }
        }
        "sp" => {
            let space = SymplecticSpace::new(size);
            for _ in 0..count {
                let product = sp_semigroup_product(
                    &space,
                    &[
                        SpFactor::VPos(random_pos_def(size, &mut rng)),
                        SpFactor::WPos(random_pos_def(size, &mut rng)),
                    ],
                )?;
                let factored = product.factorization.is_some();
                debug_assert!(factored);
                items.push(json!({
                    "matrix": matrix_json(&product.matrix),
                    "certified": factored,
                }));
            }
        }
        "so3q" => {
            let cfg = QFormConfig::new(size)?;
            for _ in 0..count {
                let p = interior_params(&cfg, &[1, 2, 1, 2], &mut rng);
                let u = f_word(&cfg, &p)?;
                items.push(json!({
                    "params": serde_json::from_str::<Value>(&b2_params_to_json(&p)).unwrap(),
                    "matrix": matrix_json(u.matrix()),
                }));
            }
        }
        other => {
            return Err(Error::Input {
                field: "kind".into(),
                msg: format!("unknown sample kind `{other}` (expected tp, unipotent, sp, so3q)"),
            })
        }
    }
    Ok((
        json!({
            "command": "sample",
            "inputs": {"kind": kind, "size": size, "count": count, "seed": seed},
            "verdict": true,
            "witness": {"items": items},
        }),
        0,
    ))
}

fn selftest(seed: u64) -> Result<(Value, i32), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut suites = Vec::new();
    let mut all_ok = true;
    let mut push = |name: &str, pass: usize, total: usize| {
        suites.push(json!({"suite": name, "passed": pass, "total": total}));
        pass == total
    };

    // SL(2) factorization identity
    {
        let mut pass = 0;
        for _ in 0..50 {
            let s = pos_rat(&mut rng);
            let t = pos_rat(&mut rng);
            let u = |x: &ExactScalar| {
                RatMatrix::from_rows(vec![vec![rat(1), x.clone()], vec![rat(0), rat(1)]])
            };
            let o = |x: &ExactScalar| {
                RatMatrix::from_rows(vec![vec![rat(1), rat(0)], vec![x.clone(), rat(1)]])
            };
            let d = rat(1) + &s * &t;
            let lhs = u(&s).mul(&o(&t));
            let a = RatMatrix::from_rows(vec![
                vec![d.clone(), rat(0)],
                vec![rat(0), rat(1) / &d],
            ]);
            let rhs = o(&(&t / &d)).mul(&a).mul(&u(&(&s / &d)));
            if lhs == rhs {
                pass += 1;
            }
        }
        all_ok &= push("sl2 factorization identity", pass, 50);
    }

    // type A reduced-word independence in S4
    {
        let sys = CoxeterSystem::type_a(4);
        let w0 = sys.longest_element();
        let words = sys.enumerate_reduced_words(&w0)?;
        let mut pass = 0;
        let mut total = 0;
        for target in &words {
            for _ in 0..5 {
                total += 1;
                let values: Vec<ExactScalar> = (0..6).map(|_| pos_rat(&mut rng)).collect();
                let p = PositiveParams::new(words[0].clone(), values)?;
                let q = word_transition(&sys, &p, target)?;
                if q.all_positive() && param_f(&p, 4)? == param_f(&q, 4)? {
                    pass += 1;
                }
            }
        }
        all_ok &= push("reduced-word independence (S4)", pass, total);
    }

    // total positivity closure
    {
        let mut pass = 0;
        let sys = CoxeterSystem::type_a(3);
        for _ in 0..20 {
            let g = random_tp(3, &sys, &mut rng)?;
            let h = random_tp(3, &sys, &mut rng)?;
            if is_totally_positive(&g.mul(&h))? {
                pass += 1;
            }
        }
        all_ok &= push("total positivity closure (n=3)", pass, 20);
    }

    // Sp semigroup certification
    {
        let space = SymplecticSpace::new(2);
        let mut pass = 0;
        for _ in 0..20 {
            let product = sp_semigroup_product(
                &space,
                &[
                    SpFactor::VPos(random_pos_def(2, &mut rng)),
                    SpFactor::H({
                        let mut a = RatMatrix::identity(2);
                        a[(0, 0)] = pos_rat(&mut rng);
                        a[(1, 1)] = pos_rat(&mut rng);
                        a[(0, 1)] = any_rat(&mut rng);
                        a
                    }),
                    SpFactor::WPos(random_pos_def(2, &mut rng)),
                ],
            )?;
            let ok = match &product.factorization {
                Some((m, a, n)) => {
                    v_elem(&space, m)
                        .mul(&h_elem(&space, a)?)
                        .mul(&w_elem(&space, n))
                        == product.matrix
                        && refactor(&space, &product.matrix)?.is_some()
                }
                None => false,
            };
            if ok {
                pass += 1;
            }
        }
        all_ok &= push("sp semigroup certification (n=2)", pass, 20);
    }

    // SO(3,q) braid identity
    {
        let mut pass = 0;
        let mut total = 0;
        for q in [4usize, 5] {
            let cfg = QFormConfig::new(q)?;
            for _ in 0..25 {
                total += 1;
                let p = interior_params(&cfg, &[1, 2, 1, 2], &mut rng);
                let (x1, v1, x2, v2) = match (&p.slots[0], &p.slots[1], &p.slots[2], &p.slots[3]) {
                    (
                        B2Slot::Scalar(a),
                        B2Slot::Vector(b),
                        B2Slot::Scalar(c),
                        B2Slot::Vector(d),
                    ) => (a, b, c, d),
                    _ => unreachable!(),
                };
                let img = braid_transition(&cfg, x1, v1, x2, v2)?;
                if f_word(&cfg, &p)? == f_word(&cfg, &img.params())?
                    && img.params().all_interior(&cfg)?
                    && q_j(&cfg, &img.w1)? > rat(0)
                {
                    pass += 1;
                }
            }
        }
        all_ok &= push("so3q braid identity", pass, total);
    }

    // nilpotent exponential identity
    {
        let cfg = QFormConfig::new(4)?;
        let mut pass = 0;
        for _ in 0..25 {
            let a = pos_rat(&mut rng);
            let w = cone_vec(&cfg, &mut rng);
            let e = exp_principal(&cfg, &a, &w)?;
            let third = ExactScalar::new(1.into(), 3.into());
            let p = B2Params::new(
                vec![2, 1, 2, 1],
                vec![
                    B2Slot::Vector(w.iter().map(|x| x * &third).collect()),
                    B2Slot::Scalar(&a * ExactScalar::new(3.into(), 4.into())),
                    B2Slot::Vector(w.iter().map(|x| x * rat(2) * &third).collect()),
                    B2Slot::Scalar(&a / rat(4)),
                ],
            )?;
            if e == f_word(&cfg, &p)? {
                pass += 1;
            }
        }
        all_ok &= push("nilpotent exponential identity (q=4)", pass, 25);
    }

    // parameter recovery round trip
    {
        let cfg = QFormConfig::new(5)?;
        let mut pass = 0;
        for _ in 0..25 {
            let p = interior_params(&cfg, &[2, 1, 2, 1], &mut rng);
            let u = f_word(&cfg, &p)?;
            if invert_f(&cfg, &u, &word_2121())? == Some(p) {
                pass += 1;
            }
        }
        all_ok &= push("parameter recovery round trip (q=5)", pass, 25);
    }

    // unipotent coordinate identity on random elements
    {
        let cfg = QFormConfig::new(4)?;
        let mut pass = 0;
        for _ in 0..25 {
            let x = any_rat(&mut rng);
            let a = any_rat(&mut rng);
            let v: Vec<ExactScalar> = (0..3).map(|_| any_rat(&mut rng)).collect();
            let w: Vec<ExactScalar> = (0..3).map(|_| any_rat(&mut rng)).collect();
            let u = u_theta(&cfg, &x, &v, &w, &a)?;
            if cfg.preserves_form(u.matrix())
                && UThetaElement::from_matrix(&cfg, u.matrix())? == u
            {
                pass += 1;
            }
        }
        all_ok &= push("unipotent group membership (q=4)", pass, 25);
    }

    Ok((
        json!({
            "command": "selftest",
            "inputs": {"seed": seed},
            "verdict": all_ok,
            "witness": {"suites": suites},
        }),
        verdict_code(all_ok),
    ))
}
