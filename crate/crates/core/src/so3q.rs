//! The positive structure of SO(3,q), q > 3: the quadratic form Q, the
//! unipotent radical U(x, v, w, a), the cones, the B2 generator maps,
//! the braid-relation change of coordinates, exact parameter recovery,
//! and positivity of isotropic-flag triples.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::scalar::{rat, ExactScalar};
use crate::weyl::{CoxeterSystem, ReducedWord};

pub const MIN_Q: usize = 4;
pub const MAX_Q: usize = 16;

/// The split form of signature (3, q) in the isotropic-friendly basis:
/// Q = (0, 0, K; 0, J, 0; -K, 0, 0) with K = [[0,1],[-1,0]] and
/// J = [[0,0,1],[0,-Id,0],[1,0,0]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFormConfig {
    q: usize,
    big_q: RatMatrix,
    j: RatMatrix,
}

impl QFormConfig {
    pub fn new(q: usize) -> Result<Self> {
        if !(MIN_Q..=MAX_Q).contains(&q) {
            return Err(Error::Input {
                field: "q".into(),
                msg: format!("q must lie in {}..={}", MIN_Q, MAX_Q),
            });
        }
        let m = q - 1;
        let mut j = RatMatrix::zeros(m, m);
        j[(0, m - 1)] = ExactScalar::one();
        j[(m - 1, 0)] = ExactScalar::one();
        for i in 1..m - 1 {
            j[(i, i)] = -ExactScalar::one();
        }
        let n = q + 3;
        let mut big_q = RatMatrix::zeros(n, n);
        // K block in rows 0..2, cols n-2..n
        big_q[(0, n - 1)] = ExactScalar::one();
        big_q[(1, n - 2)] = -ExactScalar::one();
        // -K block in rows n-2..n, cols 0..2
        big_q[(n - 2, 1)] = -ExactScalar::one();
        big_q[(n - 1, 0)] = ExactScalar::one();
        for i in 0..m {
            for k in 0..m {
                big_q[(2 + i, 2 + k)] = j[(i, k)].clone();
            }
        }
        Ok(QFormConfig { q, big_q, j })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Ambient dimension 3 + q.
    pub fn dim(&self) -> usize {
        self.q + 3
    }

    /// Dimension q - 1 of the vector weight space.
    pub fn vdim(&self) -> usize {
        self.q - 1
    }

    pub fn form(&self) -> &RatMatrix {
        &self.big_q
    }

    pub fn j(&self) -> &RatMatrix {
        &self.j
    }

    pub fn preserves_form(&self, g: &RatMatrix) -> bool {
        g.rows() == self.dim()
            && g.cols() == self.dim()
            && g.transpose().mul(&self.big_q).mul(g) == self.big_q
    }

    fn check_vec(&self, v: &[ExactScalar]) -> Result<()> {
        if v.len() != self.vdim() {
            return Err(Error::Dimension { expected: self.vdim(), got: v.len() });
        }
        Ok(())
    }
}

/// b_J(v, w) = (1/2) v^t J w
pub fn b_j(cfg: &QFormConfig, v: &[ExactScalar], w: &[ExactScalar]) -> Result<ExactScalar> {
    cfg.check_vec(v)?;
    cfg.check_vec(w)?;
    let jw = cfg.j.mul_vec(w);
    let mut acc = ExactScalar::zero();
    for (a, b) in v.iter().zip(jw.iter()) {
        acc += a * b;
    }
    Ok(acc / rat(2))
}

/// q_J(v) = b_J(v, v)
pub fn q_j(cfg: &QFormConfig, v: &[ExactScalar]) -> Result<ExactScalar> {
    b_j(cfg, v, v)
}

/// Open cone {q_J(v) > 0, v_1 > 0} in the vector weight space.
pub fn in_cone_alpha2(cfg: &QFormConfig, v: &[ExactScalar]) -> Result<bool> {
    cfg.check_vec(v)?;
    Ok(v[0].is_positive() && q_j(cfg, v)?.is_positive())
}

/// Closed cone: q_J(v) >= 0 and v_1 >= 0.
pub fn in_closed_cone_alpha2(cfg: &QFormConfig, v: &[ExactScalar]) -> Result<bool> {
    cfg.check_vec(v)?;
    Ok(!v[0].is_negative() && !q_j(cfg, v)?.is_negative())
}

fn vec_comb(a: &ExactScalar, v: &[ExactScalar], b: &ExactScalar, w: &[ExactScalar]) -> Vec<ExactScalar> {
    v.iter().zip(w.iter()).map(|(x, y)| a * x + b * y).collect()
}

fn vec_scale(a: &ExactScalar, v: &[ExactScalar]) -> Vec<ExactScalar> {
    v.iter().map(|x| a * x).collect()
}

fn vec_add(v: &[ExactScalar], w: &[ExactScalar]) -> Vec<ExactScalar> {
    vec_comb(&rat(1), v, &rat(1), w)
}

fn vec_sub(v: &[ExactScalar], w: &[ExactScalar]) -> Vec<ExactScalar> {
    vec_comb(&rat(1), v, &rat(-1), w)
}

/// Element of the unipotent radical, carrying both its four coordinates
/// and the assembled (3+q) x (3+q) matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UThetaElement {
    pub x: ExactScalar,
    pub v: Vec<ExactScalar>,
    pub w: Vec<ExactScalar>,
    pub a: ExactScalar,
    matrix: RatMatrix,
}

impl UThetaElement {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// Reads the four coordinates off a matrix and validates that the
    /// matrix is exactly of the U(x, v, w, a) shape.
    pub fn from_matrix(cfg: &QFormConfig, m: &RatMatrix) -> Result<Self> {
        let n = cfg.dim();
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension { expected: n, got: m.rows() });
        }
        let x = m[(n - 2, n - 1)].clone();
        let a = m[(0, n - 2)].clone();
        let v: Vec<ExactScalar> = (0..cfg.vdim()).map(|i| m[(1, 2 + i)].clone()).collect();
        // first row carries w^t + x v^t / 2
        let w: Vec<ExactScalar> = (0..cfg.vdim())
            .map(|i| &m[(0, 2 + i)] - &x * &v[i] / rat(2))
            .collect();
        let rebuilt = u_theta(cfg, &x, &v, &w, &a)?;
        if rebuilt.matrix != *m {
            return Err(Error::Input {
                field: "matrix".into(),
                msg: "matrix is not of the unipotent U(x, v, w, a) form".into(),
            });
        }
        Ok(rebuilt)
    }
}

/// U(x, v, w, a): the general element of the unipotent radical.
pub fn u_theta(
    cfg: &QFormConfig,
    x: &ExactScalar,
    v: &[ExactScalar],
    w: &[ExactScalar],
    a: &ExactScalar,
) -> Result<UThetaElement> {
    cfg.check_vec(v)?;
    cfg.check_vec(w)?;
    let n = cfg.dim();
    let md = cfg.vdim();
    let half_x = x / rat(2);
    // w + x v/2 appears in the first row; its q_J value in the corner
    let wxv: Vec<ExactScalar> = vec_comb(&rat(1), w, &half_x, v);
    let mut m = RatMatrix::identity(n);
    m[(0, 1)] = x.clone();
    for i in 0..md {
        m[(0, 2 + i)] = wxv[i].clone();
        m[(1, 2 + i)] = v[i].clone();
    }
    m[(0, n - 2)] = a.clone();
    m[(0, n - 1)] = a * x - q_j(cfg, &wxv)?;
    m[(1, n - 2)] = q_j(cfg, v)?;
    m[(1, n - 1)] = a - rat(2) * b_j(cfg, v, w)?;
    let jv = cfg.j.mul_vec(v);
    // -J w + x J v / 2
    let jcol: Vec<ExactScalar> = cfg.j.mul_vec(&vec_comb(&half_x, v, &rat(-1), w));
    for i in 0..md {
        m[(2 + i, n - 2)] = jv[i].clone();
        m[(2 + i, n - 1)] = jcol[i].clone();
    }
    m[(n - 2, n - 1)] = x.clone();
    debug_assert!(cfg.preserves_form(&m));
    Ok(UThetaElement { x: x.clone(), v: v.to_vec(), w: w.to_vec(), a: a.clone(), matrix: m })
}

/// One-parameter group for the scalar weight space.
pub fn x_alpha1(cfg: &QFormConfig, x: &ExactScalar) -> UThetaElement {
    let zero = vec![ExactScalar::zero(); cfg.vdim()];
    u_theta(cfg, x, &zero, &zero, &ExactScalar::zero()).expect("total construction")
}

/// Abelian group of the vector weight space.
pub fn x_alpha2(cfg: &QFormConfig, v: &[ExactScalar]) -> Result<UThetaElement> {
    let zero = vec![ExactScalar::zero(); cfg.vdim()];
    u_theta(cfg, &ExactScalar::zero(), v, &zero, &ExactScalar::zero())
}

/// One parameter slot of a B2 word: letter 1 takes a scalar, letter 2
/// takes a vector of length q - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum B2Slot {
    Scalar(ExactScalar),
    Vector(Vec<ExactScalar>),
}

/// Parameters for a B2 reduced word, slot types alternating with the
/// letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct B2Params {
    pub word: Vec<usize>,
    pub slots: Vec<B2Slot>,
}

impl B2Params {
    pub fn new(word: Vec<usize>, slots: Vec<B2Slot>) -> Result<Self> {
        if word.len() != slots.len() {
            return Err(Error::Input {
                field: "slots".into(),
                msg: format!("expected {} slots, got {}", word.len(), slots.len()),
            });
        }
        for (pos, (letter, slot)) in word.iter().zip(slots.iter()).enumerate() {
            match (letter, slot) {
                (1, B2Slot::Scalar(_)) | (2, B2Slot::Vector(_)) => {}
                (1, _) | (2, _) => return Err(Error::SlotKind(pos, *letter)),
                (other, _) => return Err(Error::GeneratorIndex(*other, 2)),
            }
        }
        Ok(B2Params { word, slots })
    }

    /// Every scalar slot positive and every vector slot in the open
    /// cone.
    pub fn all_interior(&self, cfg: &QFormConfig) -> Result<bool> {
        for slot in &self.slots {
            match slot {
                B2Slot::Scalar(x) => {
                    if !x.is_positive() {
                        return Ok(false);
                    }
                }
                B2Slot::Vector(v) => {
                    if !in_cone_alpha2(cfg, v)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Ordered product x_{beta_{i1}}(p_1) ... x_{beta_{il}}(p_l) for a
/// reduced B2 word.
pub fn f_word(cfg: &QFormConfig, params: &B2Params) -> Result<UThetaElement> {
    let sys = CoxeterSystem::b2();
    if !sys.is_reduced(&params.word)? {
        return Err(Error::NotReduced);
    }
    let mut m = RatMatrix::identity(cfg.dim());
    for (letter, slot) in params.word.iter().zip(params.slots.iter()) {
        let g = match (letter, slot) {
            (1, B2Slot::Scalar(x)) => x_alpha1(cfg, x),
            (2, B2Slot::Vector(v)) => x_alpha2(cfg, v)?,
            _ => unreachable!("validated at construction"),
        };
        m = m.mul(g.matrix());
    }
    UThetaElement::from_matrix(cfg, &m)
}

/// Output of the braid-relation change of coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidImage {
    pub w1: Vec<ExactScalar>,
    pub y1: ExactScalar,
    pub w2: Vec<ExactScalar>,
    pub y2: ExactScalar,
}

impl BraidImage {
    pub fn params(&self) -> B2Params {
        B2Params::new(
            vec![2, 1, 2, 1],
            vec![
                B2Slot::Vector(self.w1.clone()),
                B2Slot::Scalar(self.y1.clone()),
                B2Slot::Vector(self.w2.clone()),
                B2Slot::Scalar(self.y2.clone()),
            ],
        )
        .expect("slot types fixed")
    }
}

/// Change of coordinates across the B2 braid relation:
/// x1(x1) x2(v1) x1(x2) x2(v2) = x2(w1) x1(y1) x2(w2) x1(y2),
/// solved in closed form. Defined for x1 >= 0, v1 in the closed cone,
/// x2 > 0, v2 in the open cone; interior inputs give interior outputs.
pub fn braid_transition(
    cfg: &QFormConfig,
    x1: &ExactScalar,
    v1: &[ExactScalar],
    x2: &ExactScalar,
    v2: &[ExactScalar],
) -> Result<BraidImage> {
    cfg.check_vec(v1)?;
    cfg.check_vec(v2)?;
    if x1.is_negative()
        || !in_closed_cone_alpha2(cfg, v1)?
        || !x2.is_positive()
        || !in_cone_alpha2(cfg, v2)?
    {
        return Err(Error::Input {
            field: "params".into(),
            msg: "need x1 >= 0, v1 in the closed cone, x2 > 0, v2 in the open cone".into(),
        });
    }
    let vsum = vec_add(v1, v2);
    // s = x1 (v1 + v2) + x2 v2
    let s = vec_comb(x1, &vsum, x2, v2);
    let qs = q_j(cfg, &s)?;
    let denom = x1 * q_j(cfg, &vsum)? + x2 * q_j(cfg, v2)?;
    if qs.is_zero() || denom.is_zero() {
        return Err(Error::Singular("braid transition denominator vanishes".into()));
    }
    let q1 = q_j(cfg, v1)?;
    let y1 = &qs / &denom;
    let y2 = x1 * x2 * &q1 / &denom;
    let w2 = vec_scale(&(&denom / &qs), &s);
    // w1 = ((x1 x2 q_J(v1+v2) + x2^2 q_J(v2)) v1 - x1 x2 q_J(v1) (v1+v2)) / q_J(s)
    let c1 = x1 * x2 * q_j(cfg, &vsum)? + x2 * x2 * q_j(cfg, v2)?;
    let c2 = x1 * x2 * &q1;
    let w1 = vec_scale(&(rat(1) / &qs), &vec_comb(&c1, v1, &(-c2), &vsum));
    Ok(BraidImage { w1, y1, w2, y2 })
}

/// The reduced word (1,2,1,2) of the longest element of B2.
pub fn word_1212() -> ReducedWord {
    CoxeterSystem::b2().reduced_word(&[1, 2, 1, 2]).expect("reduced in B2")
}

/// The reduced word (2,1,2,1) of the longest element of B2.
pub fn word_2121() -> ReducedWord {
    CoxeterSystem::b2().reduced_word(&[2, 1, 2, 1]).expect("reduced in B2")
}

/// Exact parameter recovery for the two length-four words: returns the
/// interior parameters with f_word(params) = u when they exist, and
/// None (not positive) otherwise.
pub fn invert_f(cfg: &QFormConfig, u: &UThetaElement, word: &ReducedWord) -> Result<Option<B2Params>> {
    let letters = word.letters();
    let params = match letters {
        [1, 2, 1, 2] => {
            // with u = 2 x2 v1: x2 = q_J(u) / (4 x2 q_J(v1)), and
            // a - x q_J(v) + b_J(v, u) = x2 q_J(v1)
            let uv = vec_comb(&u.x, &u.v, &rat(-2), &u.w);
            let denom = &u.a - &u.x * q_j(cfg, &u.v)? + b_j(cfg, &u.v, &uv)?;
            if denom.is_zero() {
                return Ok(None);
            }
            let x2 = q_j(cfg, &uv)? / (rat(4) * denom);
            if !x2.is_positive() {
                return Ok(None);
            }
            let x1 = &u.x - &x2;
            let v1 = vec_scale(&(rat(1) / (rat(2) * &x2)), &uv);
            let v2 = vec_sub(&u.v, &v1);
            B2Params::new(
                vec![1, 2, 1, 2],
                vec![
                    B2Slot::Scalar(x1),
                    B2Slot::Vector(v1),
                    B2Slot::Scalar(x2),
                    B2Slot::Vector(v2),
                ],
            )?
        }
        [2, 1, 2, 1] => {
            // with u = 2 y1 w2: y1 = q_J(u) / (4 a)
            let uv = vec_comb(&u.x, &u.v, &rat(2), &u.w);
            if u.a.is_zero() {
                return Ok(None);
            }
            let y1 = q_j(cfg, &uv)? / (rat(4) * &u.a);
            if !y1.is_positive() {
                return Ok(None);
            }
            let w2 = vec_scale(&(rat(1) / (rat(2) * &y1)), &uv);
            let w1 = vec_sub(&u.v, &w2);
            let y2 = &u.x - &y1;
            B2Params::new(
                vec![2, 1, 2, 1],
                vec![
                    B2Slot::Vector(w1),
                    B2Slot::Scalar(y1),
                    B2Slot::Vector(w2),
                    B2Slot::Scalar(y2),
                ],
            )?
        }
        _ => {
            return Err(Error::Input {
                field: "word".into(),
                msg: "parameter recovery is implemented for the two length-four words".into(),
            })
        }
    };
    if !params.all_interior(cfg)? {
        return Ok(None);
    }
    // the formulas assume membership in the image; confirm exactly
    if f_word(cfg, &params)? != *u {
        return Ok(None);
    }
    Ok(Some(params))
}

/// exp(a + w) for a in the scalar weight space, w in the vector weight
/// space; the argument is nilpotent so the series terminates.
pub fn exp_principal(cfg: &QFormConfig, a: &ExactScalar, w: &[ExactScalar]) -> Result<UThetaElement> {
    cfg.check_vec(w)?;
    let n = cfg.dim();
    let md = cfg.vdim();
    let mut nil = RatMatrix::zeros(n, n);
    nil[(0, 1)] = a.clone();
    nil[(n - 2, n - 1)] = a.clone();
    let jw = cfg.j.mul_vec(w);
    for i in 0..md {
        nil[(1, 2 + i)] = w[i].clone();
        nil[(2 + i, n - 2)] = jw[i].clone();
    }
    let mut sum = RatMatrix::identity(n);
    let mut power = RatMatrix::identity(n);
    let mut factorial = rat(1);
    for k in 1..=n {
        power = power.mul(&nil);
        if power.is_zero() {
            break;
        }
        factorial = factorial * rat(k as i64);
        sum = sum.add(&power.scale(&(rat(1) / &factorial)));
    }
    UThetaElement::from_matrix(cfg, &sum)
}

/// The sixteen subwords (position subsets) of the reduced word
/// (1,2,1,2); these index the charts of the closed semigroup, with the
/// slot type of each letter given by the letter itself.
pub fn semigroup_chart_words() -> Vec<Vec<usize>> {
    let base = [1usize, 2, 1, 2];
    (0u32..16)
        .map(|mask| {
            base.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &l)| l)
                .collect()
        })
        .collect()
}

/// Isotropic flag V1 in V2 with dim V_i = i and Q vanishing on V2,
/// stored as a canonical echelon basis of V2 whose first column spans
/// V1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicFlag {
    v1: Vec<ExactScalar>,
    v2: RatMatrix,
}

impl IsotropicFlag {
    pub fn new(cfg: &QFormConfig, v1: Vec<ExactScalar>, v2: RatMatrix) -> Result<Self> {
        let n = cfg.dim();
        if v1.len() != n {
            return Err(Error::Dimension { expected: n, got: v1.len() });
        }
        if v2.rows() != n || v2.cols() != 2 {
            return Err(Error::Dimension { expected: n, got: v2.rows() });
        }
        if v2.rank() != 2 {
            return Err(Error::Input {
                field: "v2".into(),
                msg: "plane basis must have rank 2".into(),
            });
        }
        let line = RatMatrix::from_columns(n, vec![v1.clone()]);
        if line.rank() != 1 || v2.hconcat(&line).rank() != 2 {
            return Err(Error::Input {
                field: "v1".into(),
                msg: "line must be nonzero and contained in the plane".into(),
            });
        }
        if !v2.transpose().mul(cfg.form()).mul(&v2).is_zero() {
            return Err(Error::NotIsotropic);
        }
        let canon_line = line.column_echelon().column(0);
        Ok(IsotropicFlag { v1: canon_line, v2: v2.column_echelon() })
    }

    pub fn line(&self) -> &[ExactScalar] {
        &self.v1
    }

    pub fn plane(&self) -> &RatMatrix {
        &self.v2
    }

    /// E1 = R e_{q+3}, E2 = E1 + R e_{q+2}.
    pub fn standard_e(cfg: &QFormConfig) -> Self {
        let n = cfg.dim();
        let mut v1 = vec![ExactScalar::zero(); n];
        v1[n - 1] = ExactScalar::one();
        let mut v2 = RatMatrix::zeros(n, 2);
        v2[(n - 1, 0)] = ExactScalar::one();
        v2[(n - 2, 1)] = ExactScalar::one();
        IsotropicFlag { v1, v2: v2.column_echelon() }
    }

    /// F1 = R e_1, F2 = F1 + R e_2.
    pub fn standard_f(cfg: &QFormConfig) -> Self {
        let n = cfg.dim();
        let mut v1 = vec![ExactScalar::zero(); n];
        v1[0] = ExactScalar::one();
        let mut v2 = RatMatrix::zeros(n, 2);
        v2[(0, 0)] = ExactScalar::one();
        v2[(1, 1)] = ExactScalar::one();
        IsotropicFlag { v1, v2: v2.column_echelon() }
    }

    pub fn apply(&self, cfg: &QFormConfig, g: &RatMatrix) -> Result<IsotropicFlag> {
        IsotropicFlag::new(cfg, g.mul_vec(&self.v1), g.mul(&self.v2))
    }
}

/// Transversality of two isotropic flags: the line of each pairs
/// nontrivially with the line of the other, and the planes pair
/// nondegenerately.
pub fn is_transverse_12(cfg: &QFormConfig, s: &IsotropicFlag, f: &IsotropicFlag) -> Result<bool> {
    let q = cfg.form();
    let line_s = RatMatrix::from_columns(cfg.dim(), vec![s.v1.clone()]);
    let line_f = RatMatrix::from_columns(cfg.dim(), vec![f.v1.clone()]);
    if line_f.transpose().mul(q).mul(&line_s)[(0, 0)].is_zero() {
        return Ok(false);
    }
    let gram = f.v2.transpose().mul(q).mul(&s.v2);
    Ok(!gram.det()?.is_zero())
}

/// The unique unipotent u with u . E = S, for S transverse to the
/// standard flag F.
pub fn flag_coordinate(cfg: &QFormConfig, s: &IsotropicFlag) -> Result<UThetaElement> {
    let n = cfg.dim();
    let md = cfg.vdim();
    // normalize the line so its last coordinate is 1: it must match the
    // last column of U(x, v, w, a)
    if s.v1[n - 1].is_zero() {
        return Err(Error::NotTransverse);
    }
    let s1 = vec_scale(&(rat(1) / &s.v1[n - 1]), &s.v1);
    // an element of the plane with last coordinate 0, coordinate n-2
    // equal to 1: it must match the second-to-last column
    let b1 = s.v2.column(0);
    let b2 = s.v2.column(1);
    let z = vec_comb(&b2[n - 1], &b1, &(-&b1[n - 1]), &b2);
    if z[n - 2].is_zero() {
        return Err(Error::NotTransverse);
    }
    let s2 = vec_scale(&(rat(1) / &z[n - 2]), &z);
    let x = s1[n - 2].clone();
    let a = s2[0].clone();
    let v = cfg.j.mul_vec(&s2[2..2 + md]);
    // middle of the line is -J w + x J v / 2
    let half_x = &x / rat(2);
    let w = vec_comb(&half_x, &v, &rat(-1), &cfg.j.mul_vec(&s1[2..2 + md]));
    let u = u_theta(cfg, &x, &v, &w, &a)?;
    // transversality guarantees a solution; confirm exactly
    let moved = IsotropicFlag::standard_e(cfg).apply(cfg, u.matrix())?;
    if moved != *s {
        return Err(Error::NotTransverse);
    }
    Ok(u)
}

/// Positivity of the triple (E, S, F) with E, F the standard flags:
/// the unipotent carrying E to S must lie in the positive semigroup.
pub fn is_positive_triple_so3q(cfg: &QFormConfig, s: &IsotropicFlag) -> Result<bool> {
    let u = flag_coordinate(cfg, s)?;
    let word = word_1212();
    Ok(invert_f(cfg, &u, &word)?.is_some())
}
