//! Lusztig total positivity for GL(n,R): membership by exhaustive minor
//! enumeration, the Whitney LDU decomposition, the F_w parametrization
//! of the positive unipotent semigroup, and the rational transition
//! maps between reduced words.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::poly::{char_poly, isolate_real_roots};
use crate::scalar::ExactScalar;
use crate::weyl::{CoxeterSystem, ReducedWord};

/// Exhaustive minor enumeration is rejected above this size.
pub const MAX_MINOR_SIZE: usize = 5;

/// Upper triangular matrix with unit diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentUpper {
    matrix: RatMatrix,
}

impl UnipotentUpper {
    pub fn new(matrix: RatMatrix) -> Result<Self> {
        let n = matrix.require_square()?;
        for i in 0..n {
            if !matrix[(i, i)].is_one() {
                return Err(Error::Input {
                    field: "matrix".into(),
                    msg: format!("diagonal entry ({},{}) is not 1", i + 1, i + 1),
                });
            }
            for j in 0..i {
                if !matrix[(i, j)].is_zero() {
                    return Err(Error::Input {
                        field: "matrix".into(),
                        msg: format!("entry ({},{}) below the diagonal is nonzero", i + 1, j + 1),
                    });
                }
            }
        }
        Ok(UnipotentUpper { matrix })
    }

    pub fn identity(n: usize) -> Self {
        UnipotentUpper { matrix: RatMatrix::identity(n) }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RatMatrix {
        self.matrix
    }

    pub fn mul(&self, other: &UnipotentUpper) -> UnipotentUpper {
        UnipotentUpper { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn inverse(&self) -> UnipotentUpper {
        UnipotentUpper { matrix: self.matrix.inverse().expect("unipotent matrices are invertible") }
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }
}

/// Parameters for an F_w map: a reduced word with one scalar per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveParams {
    pub word: ReducedWord,
    pub values: Vec<ExactScalar>,
}

impl PositiveParams {
    pub fn new(word: ReducedWord, values: Vec<ExactScalar>) -> Result<Self> {
        if word.len() != values.len() {
            return Err(Error::Dimension { expected: word.len(), got: values.len() });
        }
        Ok(PositiveParams { word, values })
    }

    pub fn all_positive(&self) -> bool {
        self.values.iter().all(|v| v.is_positive())
    }

    /// The mirrored-cone variant: every parameter negated.
    pub fn negated(&self) -> PositiveParams {
        PositiveParams {
            word: self.word.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

/// u_i(t) = I_n + t E_{i,i+1}, 1-based i.
pub fn elementary_u(i: usize, t: &ExactScalar, n: usize) -> Result<UnipotentUpper> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorIndex(i, n - 1));
    }
    let mut m = RatMatrix::identity(n);
    m[(i - 1, i)] = t.clone();
    Ok(UnipotentUpper { matrix: m })
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    // strictly increasing 1-based index sets of size k
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

fn check_size_bound(n: usize) -> Result<()> {
    if n > MAX_MINOR_SIZE {
        return Err(Error::SizeBound(n, MAX_MINOR_SIZE));
    }
    Ok(())
}

/// True iff every minor of every size is strictly positive.
pub fn is_totally_positive(m: &RatMatrix) -> Result<bool> {
    let n = m.require_square()?;
    check_size_bound(n)?;
    for k in 1..=n {
        let subsets = index_subsets(n, k);
        for rows in &subsets {
            for cols in &subsets {
                if !m.minor(rows, cols)?.is_positive() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// U^{>0} membership: every minor not forced to vanish by the
/// triangular shape is strictly positive. For row set i_1 < ... < i_k
/// and column set j_1 < ... < j_k the minor of a unit upper triangular
/// matrix vanishes identically unless i_l <= j_l for all l; those are
/// the minors tested.
pub fn is_unipotent_positive(u: &UnipotentUpper) -> Result<bool> {
    let n = u.size();
    check_size_bound(n)?;
    let m = u.matrix();
    for k in 1..=n {
        let subsets = index_subsets(n, k);
        for rows in &subsets {
            for cols in &subsets {
                if rows.iter().zip(cols).all(|(i, j)| i <= j) {
                    if !m.minor(rows, cols)?.is_positive() {
                        return Ok(false);
                    }
                } else {
                    debug_assert!(m.minor(rows, cols)?.is_zero());
                }
            }
        }
    }
    Ok(true)
}

/// F_w(t_1, ..., t_k) = u_{i_1}(t_1) ... u_{i_k}(t_k).
pub fn param_f(p: &PositiveParams, n: usize) -> Result<UnipotentUpper> {
    let mut out = UnipotentUpper::identity(n);
    for (&i, t) in p.word.letters().iter().zip(&p.values) {
        out = out.mul(&elementary_u(i, t, n)?);
    }
    Ok(out)
}

/// The SL(3) change of coordinates between the two reduced words of w0:
/// F_121(a,b,c) = F_212(c', b', a') with c' = bc/(a+c), b' = a+c,
/// a' = ab/(a+c). The map is an involution.
pub fn sl3_transition(
    a: &ExactScalar,
    b: &ExactScalar,
    c: &ExactScalar,
) -> Result<(ExactScalar, ExactScalar, ExactScalar)> {
    let s = a + c;
    if s.is_zero() {
        return Err(Error::Singular("a + c = 0 in the SL(3) transition map".into()));
    }
    Ok((b * c / &s, s.clone(), a * b / &s))
}

/// Transports parameters along a chain of braid moves to `target_word`,
/// preserving the F_w image exactly.
pub fn word_transition(
    sys: &CoxeterSystem,
    p: &PositiveParams,
    target_word: &ReducedWord,
) -> Result<PositiveParams> {
    let path = sys.braid_move_path(&p.word, target_word)?;
    let mut word = p.word.letters().to_vec();
    let mut values = p.values.clone();
    for mv in path {
        match mv.order {
            2 => values.swap(mv.position, mv.position + 1),
            3 => {
                let (a, b, c) =
                    (values[mv.position].clone(), values[mv.position + 1].clone(), values[mv.position + 2].clone());
                let (c1, b1, a1) = sl3_transition(&a, &b, &c)?;
                values[mv.position] = c1;
                values[mv.position + 1] = b1;
                values[mv.position + 2] = a1;
            }
            m => {
                return Err(Error::Input {
                    field: "word".into(),
                    msg: format!("unsupported braid order {m} in a type A word"),
                })
            }
        }
        word = sys.apply_braid_move(&word, mv);
    }
    debug_assert_eq!(&word, target_word.letters());
    PositiveParams::new(target_word.clone(), values)
}

/// Exact LDU factorization without pivoting: g = lower * diag * upper
/// with unit triangular factors. Requires all leading principal minors
/// nonzero.
pub fn whitney_factor(g: &RatMatrix) -> Result<(RatMatrix, RatMatrix, UnipotentUpper)> {
    let n = g.require_square()?;
    let mut a = g.clone();
    let mut lower = RatMatrix::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            return Err(Error::LeadingMinorZero(k + 1));
        }
        for i in k + 1..n {
            let f = &a[(i, k)] / &a[(k, k)];
            lower[(i, k)] = f.clone();
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = &f * &a[(k, j)];
                a[(i, j)] -= t;
            }
        }
    }
    let mut diag = RatMatrix::identity(n);
    let mut upper = RatMatrix::identity(n);
    for i in 0..n {
        diag[(i, i)] = a[(i, i)].clone();
        for j in i + 1..n {
            upper[(i, j)] = &a[(i, j)] / &a[(i, i)];
        }
    }
    Ok((lower, diag, UnipotentUpper::new(upper)?))
}

/// True iff the characteristic polynomial has n distinct real roots all
/// of the same sign, certified by exact root isolation.
pub fn proximality_check(g: &RatMatrix) -> Result<bool> {
    let n = g.require_square()?;
    let p = char_poly(g)?;
    let mut roots = isolate_real_roots(&p)?;
    if roots.len() != n || roots.iter().any(|r| r.multiplicity != 1) {
        return Ok(false);
    }
    // no root at zero, and all isolating intervals on one side of it
    if p.coeffs().first().is_some_and(|c| c.is_zero()) {
        return Ok(false);
    }
    for r in roots.iter_mut() {
        // refine until the interval lies strictly on one side of zero
        while r.lo != r.hi && !r.lo.is_positive() && !r.hi.is_negative() {
            let mid = (&r.lo + &r.hi) / crate::scalar::rat(2);
            if p.eval(&mid).is_zero() {
                r.lo = mid.clone();
                r.hi = mid;
                break;
            }
            // count roots left of mid via sign of p at endpoints: the
            // interval contains exactly one simple root, so the sign of
            // p changes across it
            if (p.eval(&r.lo) * p.eval(&mid)).is_negative() {
                r.hi = mid;
            } else {
                r.lo = mid;
            }
        }
    }
    let pos = roots.iter().filter(|r| r.lo.is_positive()).count();
    Ok(pos == n || pos == 0)
}
