//! Randomized algebraic invariants, shrunk automatically on failure.

use proptest::prelude::*;

use theta_positivity::gl::{param_f, sl3_transition, word_transition, PositiveParams};
use theta_positivity::matrix::RatMatrix;
use theta_positivity::scalar::{format_scalar, parse_scalar, rat, ExactScalar};
use theta_positivity::so3q::{braid_transition, f_word, in_cone_alpha2, QFormConfig};
use theta_positivity::sp::{signature, SymMatrix};
use theta_positivity::weyl::CoxeterSystem;

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| ExactScalar::new(n.into(), d.into()))
}

fn pos_scalar() -> impl Strategy<Value = ExactScalar> {
    (1i64..=20, 1i64..=10).prop_map(|(n, d)| ExactScalar::new(n.into(), d.into()))
}

fn matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(scalar(), n * n)
        .prop_map(move |entries| RatMatrix::new(n, n, entries))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let lhs = a.mul(&b).det().unwrap();
        let rhs = a.det().unwrap() * b.det().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn det_of_transpose(a in matrix(4)) {
        prop_assert_eq!(a.det().unwrap(), a.transpose().det().unwrap());
    }

    #[test]
    fn echelon_is_idempotent_and_rank_preserving(a in matrix(3)) {
        let e = a.column_echelon();
        prop_assert_eq!(e.column_echelon(), e.clone());
        prop_assert_eq!(e.rank(), a.rank());
    }

    #[test]
    fn scalar_format_roundtrip(x in scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn sl3_transition_is_an_involution(
        a in pos_scalar(), b in pos_scalar(), c in pos_scalar()
    ) {
        let (c1, b1, a1) = sl3_transition(&a, &b, &c).unwrap();
        let (c2, b2, a2) = sl3_transition(&c1, &b1, &a1).unwrap();
        prop_assert_eq!((c2, b2, a2), (a, b, c));
    }

    #[test]
    fn word_transition_preserves_image(
        values in proptest::collection::vec(pos_scalar(), 6)
    ) {
        let sys = CoxeterSystem::type_a(4);
        let from = sys.reduced_word(&[1, 2, 1, 3, 2, 1]).unwrap();
        let to = sys.reduced_word(&[3, 2, 3, 1, 2, 3]).unwrap();
        let p = PositiveParams::new(from, values).unwrap();
        let q = word_transition(&sys, &p, &to).unwrap();
        prop_assert!(q.all_positive());
        prop_assert_eq!(param_f(&p, 4).unwrap(), param_f(&q, 4).unwrap());
    }

    #[test]
    fn signature_is_a_congruence_invariant(a in matrix(3), strict in matrix(3)) {
        // symmetrize and conjugate by a unit lower-triangular matrix
        let s = a.add(&a.transpose());
        let mut p = RatMatrix::identity(3);
        for i in 0..3 {
            for j in 0..i {
                p[(i, j)] = strict[(i, j)].clone();
            }
        }
        let conj = p.transpose().mul(&s).mul(&p);
        prop_assert_eq!(signature(&conj), signature(&s));
    }

    #[test]
    fn sym_matrix_rejects_asymmetry(a in matrix(3)) {
        let ok = SymMatrix::new(a.clone()).is_ok();
        prop_assert_eq!(ok, a == a.transpose());
    }

    #[test]
    fn braid_transition_interior_outputs(
        x1 in pos_scalar(), x2 in pos_scalar(),
        m1 in scalar(), m2 in scalar(),
        t1 in pos_scalar(), t2 in pos_scalar()
    ) {
        // cone vectors built directly: (v1, m, v3) with v1 v3 > m^2 / 2
        let cfg = QFormConfig::new(4).unwrap();
        let mk = |m: &ExactScalar, t: &ExactScalar| {
            let v3 = (m * m / rat(2) + t) + rat(1);
            vec![rat(1), m.clone(), v3]
        };
        let v1 = mk(&m1, &t1);
        let v2 = mk(&m2, &t2);
        prop_assert!(in_cone_alpha2(&cfg, &v1).unwrap());
        prop_assert!(in_cone_alpha2(&cfg, &v2).unwrap());
        let img = braid_transition(&cfg, &x1, &v1, &x2, &v2).unwrap();
        prop_assert!(img.y1 > rat(0));
        prop_assert!(img.y2 > rat(0));
        prop_assert!(in_cone_alpha2(&cfg, &img.w1).unwrap());
        prop_assert!(in_cone_alpha2(&cfg, &img.w2).unwrap());
        prop_assert!(img.params().all_interior(&cfg).unwrap());
        // and the exchanged word gives the same group element
        let lhs = f_word(&cfg, &theta_positivity::so3q::B2Params::new(
            vec![1, 2, 1, 2],
            vec![
                theta_positivity::so3q::B2Slot::Scalar(x1),
                theta_positivity::so3q::B2Slot::Vector(v1),
                theta_positivity::so3q::B2Slot::Scalar(x2),
                theta_positivity::so3q::B2Slot::Vector(v2),
            ],
        ).unwrap()).unwrap();
        prop_assert_eq!(lhs, f_word(&cfg, &img.params()).unwrap());
    }
}
