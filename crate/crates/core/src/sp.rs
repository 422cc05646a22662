//! The Hermitian tube-type model Sp(2n,R): block generators, the
//! semigroup V H W with positive-definite blocks, Lagrangian triple
//! positivity, and the Maslov index as the signature of the Kashiwara
//! ternary form.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::scalar::{rat, ExactScalar};

/// R^{2n} with the standard symplectic form in the basis
/// {e_1..e_n, f_1..f_n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
    form: RatMatrix,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut form = RatMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            form[(i, n + i)] = ExactScalar::one();
            form[(n + i, i)] = -ExactScalar::one();
        }
        SymplecticSpace { n, form }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> &RatMatrix {
        &self.form
    }

    pub fn is_symplectic(&self, g: &RatMatrix) -> bool {
        g.rows() == 2 * self.n && g.cols() == 2 * self.n && g.transpose().mul(&self.form).mul(g) == self.form
    }
}

/// Symmetric n x n matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    matrix: RatMatrix,
}

impl SymMatrix {
    pub fn new(matrix: RatMatrix) -> Result<Self> {
        matrix.require_square()?;
        if matrix != matrix.transpose() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymMatrix { matrix })
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix { matrix: RatMatrix::identity(n) }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }
}

/// Sylvester criterion: all leading principal minors positive.
pub fn is_pos_def(m: &SymMatrix) -> Result<bool> {
    let n = m.size();
    for k in 1..=n {
        if !m.matrix.leading_block(k).det()?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lagrangian subspace, stored as a canonical 2n x n echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lagrangian {
    basis: RatMatrix,
}

impl Lagrangian {
    pub fn new(space: &SymplecticSpace, basis: RatMatrix) -> Result<Self> {
        if basis.rows() != 2 * space.n || basis.cols() != space.n {
            return Err(Error::Dimension { expected: 2 * space.n, got: basis.rows() });
        }
        if !is_lagrangian(space, &basis)? {
            return Err(Error::NotIsotropic);
        }
        Ok(Lagrangian { basis: basis.column_echelon() })
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// L_E = span(e_1..e_n).
    pub fn standard_e(space: &SymplecticSpace) -> Self {
        let n = space.n;
        let mut b = RatMatrix::zeros(2 * n, n);
        for i in 0..n {
            b[(i, i)] = ExactScalar::one();
        }
        Lagrangian { basis: b }
    }

    /// L_F = span(f_1..f_n).
    pub fn standard_f(space: &SymplecticSpace) -> Self {
        let n = space.n;
        let mut b = RatMatrix::zeros(2 * n, n);
        for i in 0..n {
            b[(n + i, i)] = ExactScalar::one();
        }
        Lagrangian { basis: b }
    }

    /// Graph of a symmetric matrix over L_E: span of the columns of
    /// [I; M].
    pub fn graph(space: &SymplecticSpace, m: &SymMatrix) -> Self {
        let n = space.n;
        assert_eq!(m.size(), n);
        let mut b = RatMatrix::zeros(2 * n, n);
        for i in 0..n {
            b[(i, i)] = ExactScalar::one();
            for j in 0..n {
                b[(n + i, j)] = m.matrix[(i, j)].clone();
            }
        }
        Lagrangian { basis: b }
    }

    pub fn apply(&self, space: &SymplecticSpace, g: &RatMatrix) -> Result<Lagrangian> {
        Lagrangian::new(space, g.mul(&self.basis))
    }

    pub fn is_transverse_to(&self, other: &Lagrangian) -> bool {
        self.basis.hconcat(&other.basis).rank() == self.basis.rows()
    }
}

/// Checks dim = n and that the form vanishes on the span.
pub fn is_lagrangian(space: &SymplecticSpace, basis: &RatMatrix) -> Result<bool> {
    if basis.rows() != 2 * space.n || basis.cols() != space.n {
        return Err(Error::Dimension { expected: 2 * space.n, got: basis.rows() });
    }
    if basis.rank() != space.n {
        return Ok(false);
    }
    Ok(basis.transpose().mul(&space.form).mul(basis).is_zero())
}

/// (Id, 0; M, Id)
pub fn v_elem(space: &SymplecticSpace, m: &SymMatrix) -> RatMatrix {
    let n = space.n;
    assert_eq!(m.size(), n);
    let mut g = RatMatrix::identity(2 * n);
    for i in 0..n {
        for j in 0..n {
            g[(n + i, j)] = m.matrix[(i, j)].clone();
        }
    }
    g
}

/// (Id, N; 0, Id)
pub fn w_elem(space: &SymplecticSpace, m: &SymMatrix) -> RatMatrix {
    let n = space.n;
    assert_eq!(m.size(), n);
    let mut g = RatMatrix::identity(2 * n);
    for i in 0..n {
        for j in 0..n {
            g[(i, n + j)] = m.matrix[(i, j)].clone();
        }
    }
    g
}

/// (A, 0; 0, A^{-t})
pub fn h_elem(space: &SymplecticSpace, a: &RatMatrix) -> Result<RatMatrix> {
    let n = space.n;
    assert_eq!(a.rows(), n);
    let inv_t = a.inverse()?.transpose();
    let mut g = RatMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = a[(i, j)].clone();
            g[(n + i, n + j)] = inv_t[(i, j)].clone();
        }
    }
    Ok(g)
}

/// The unique symmetric M with v_elem(M) . L_E = t, for t transverse to
/// L_F (equivalently, the top block of its basis invertible).
pub fn lag_coordinate(t: &Lagrangian, space: &SymplecticSpace) -> Result<SymMatrix> {
    let n = space.n;
    let top = t.basis.select(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
    let bottom = t.basis.select(&(n..2 * n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
    let inv = top.inverse().map_err(|_| Error::NotTransverse)?;
    SymMatrix::new(bottom.mul(&inv))
}

/// A symplectic g carrying (l1, l3) to (L_E, L_F), by symplectic basis
/// completion.
pub fn normalize_lag_pair(space: &SymplecticSpace, l1: &Lagrangian, l3: &Lagrangian) -> Result<RatMatrix> {
    if !l1.is_transverse_to(l3) {
        return Err(Error::NotTransverse);
    }
    let a = l1.basis.clone();
    let b = &l3.basis;
    let gram = a.transpose().mul(&space.form).mul(b);
    let b_adj = b.mul(&gram.inverse().map_err(|_| Error::NotTransverse)?);
    let s = a.hconcat(&b_adj);
    debug_assert!(space.is_symplectic(&s));
    s.inverse()
}

/// Positivity of a Lagrangian triple: normalize the outer pair to
/// (L_E, L_F) and test positive definiteness of the middle coordinate.
pub fn is_positive_lag_triple(
    space: &SymplecticSpace,
    l1: &Lagrangian,
    l2: &Lagrangian,
    l3: &Lagrangian,
) -> Result<bool> {
    let g = normalize_lag_pair(space, l1, l3)?;
    let moved = l2.apply(space, &g)?;
    match lag_coordinate(&moved, space) {
        Ok(m) => is_pos_def(&m),
        Err(Error::NotTransverse) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Maslov index: signature of the Kashiwara form
/// q(x1,x2,x3) = w(x1,x2) + w(x2,x3) + w(x3,x1) on l1 + l2 + l3,
/// computed by exact congruence diagonalization. Degenerate
/// configurations are allowed.
pub fn maslov_index(
    space: &SymplecticSpace,
    l1: &Lagrangian,
    l2: &Lagrangian,
    l3: &Lagrangian,
) -> i64 {
    let n = space.n;
    let omega = &space.form;
    let blocks = [
        (0, 1, l1.basis.transpose().mul(omega).mul(&l2.basis)),
        (1, 2, l2.basis.transpose().mul(omega).mul(&l3.basis)),
        (2, 0, l3.basis.transpose().mul(omega).mul(&l1.basis)),
    ];
    let mut m = RatMatrix::zeros(3 * n, 3 * n);
    for (bi, bj, g) in blocks {
        for i in 0..n {
            for j in 0..n {
                let half = &g[(i, j)] / rat(2);
                m[(bi * n + i, bj * n + j)] = half.clone();
                m[(bj * n + j, bi * n + i)] = half;
            }
        }
    }
    signature(&m)
}

/// Signature (positives minus negatives) of a symmetric matrix by
/// congruence reduction.
pub fn signature(sym: &RatMatrix) -> i64 {
    let n = sym.rows();
    let mut m = sym.clone();
    let mut handled = vec![false; n];
    let mut sig = 0i64;
    loop {
        // pick a nonzero diagonal pivot among unhandled rows
        let pivot = (0..n).find(|&i| !handled[i] && !m[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all unhandled diagonal entries are zero; find an
                // off-diagonal coupling and fold it onto the diagonal
                let mut found = None;
                'outer: for i in 0..n {
                    if handled[i] {
                        continue;
                    }
                    for j in i + 1..n {
                        if !handled[j] && !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                let Some((i, j)) = found else { break };
                // row/col i += row/col j: diagonal becomes 2 m[i][j]
                for k in 0..n {
                    let t = m[(j, k)].clone();
                    m[(i, k)] += t;
                }
                for k in 0..n {
                    let t = m[(k, j)].clone();
                    m[(k, i)] += t;
                }
                i
            }
        };
        sig += if m[(p, p)].is_positive() { 1 } else { -1 };
        // clear row/column p against the pivot
        let d = m[(p, p)].clone();
        for i in 0..n {
            if i == p || m[(i, p)].is_zero() {
                continue;
            }
            let f = &m[(i, p)] / &d;
            for k in 0..n {
                let t = &f * &m[(p, k)];
                m[(i, k)] -= t;
            }
            for k in 0..n {
                let t = &f * &m[(k, p)];
                m[(k, i)] -= t;
            }
        }
        handled[p] = true;
    }
    sig
}

/// One factor of a V H W product.
#[derive(Debug, Clone)]
pub enum SpFactor {
    /// (Id, 0; M, Id) with M positive definite.
    VPos(SymMatrix),
    /// (A, 0; 0, A^{-t}) with det A > 0.
    H(RatMatrix),
    /// (Id, N; 0, Id) with N positive definite.
    WPos(SymMatrix),
}

/// Product of semigroup factors together with the recovered
/// V H W factorization when one exists.
#[derive(Debug, Clone)]
pub struct SpProduct {
    pub matrix: RatMatrix,
    /// (M, A, N) with matrix = v(M) h(A) w(N), M, N positive definite,
    /// det A > 0 — present iff the product is certified in Sp^{>0}.
    pub factorization: Option<(SymMatrix, RatMatrix, SymMatrix)>,
}

/// Multiplies the factors exactly and attempts to re-factor the result
/// as V H W with positive-definite blocks by block elimination.
pub fn sp_semigroup_product(space: &SymplecticSpace, factors: &[SpFactor]) -> Result<SpProduct> {
    let n = space.n;
    let mut g = RatMatrix::identity(2 * n);
    for f in factors {
        let m = match f {
            SpFactor::VPos(m) => {
                if !is_pos_def(m)? {
                    return Err(Error::Input {
                        field: "factors".into(),
                        msg: "V factor must have a positive definite block".into(),
                    });
                }
                v_elem(space, m)
            }
            SpFactor::WPos(m) => {
                if !is_pos_def(m)? {
                    return Err(Error::Input {
                        field: "factors".into(),
                        msg: "W factor must have a positive definite block".into(),
                    });
                }
                w_elem(space, m)
            }
            SpFactor::H(a) => {
                if !a.det()?.is_positive() {
                    return Err(Error::Input {
                        field: "factors".into(),
                        msg: "H factor must lie in the identity component (det > 0)".into(),
                    });
                }
                h_elem(space, a)?
            }
        };
        debug_assert!(space.is_symplectic(&m));
        g = g.mul(&m);
    }
    let factorization = refactor(space, &g)?;
    Ok(SpProduct { matrix: g, factorization })
}

/// Recovers g = v(M) h(A) w(N) with M, N positive definite and
/// det A > 0, if such a factorization exists.
pub fn refactor(
    space: &SymplecticSpace,
    g: &RatMatrix,
) -> Result<Option<(SymMatrix, RatMatrix, SymMatrix)>> {
    let n = space.n;
    if !space.is_symplectic(g) {
        return Ok(None);
    }
    let idx: Vec<usize> = (0..n).collect();
    let idx2: Vec<usize> = (n..2 * n).collect();
    let a = g.select(&idx, &idx);
    let b = g.select(&idx, &idx2);
    let c = g.select(&idx2, &idx);
    let Ok(a_inv) = a.inverse() else {
        return Ok(None);
    };
    if !a.det()?.is_positive() {
        return Ok(None);
    }
    let Ok(m) = SymMatrix::new(c.mul(&a_inv)) else {
        return Ok(None);
    };
    let Ok(nmat) = SymMatrix::new(a_inv.mul(&b)) else {
        return Ok(None);
    };
    if is_pos_def(&m)? && is_pos_def(&nmat)? {
        Ok(Some((m, a, nmat)))
    } else {
        Ok(None)
    }
}
