//! Full flags in R^n: transversality, normalization of transverse
//! pairs, and positivity of triples and quadruples of flags.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gl::{is_unipotent_positive, UnipotentUpper};
use crate::matrix::RatMatrix;
use crate::scalar::ExactScalar;

/// A complete flag F_1 subset ... subset F_{n-1} of R^n, stored as an
/// invertible basis matrix whose first i columns span F_i, reduced to a
/// canonical form so that flag equality is plain data equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    n: usize,
    basis: RatMatrix,
}

/// The standard pair: F_i = span(e_1..e_i), E_i = span(e_n..e_{n-i+1}).
#[derive(Debug, Clone)]
pub struct StandardFlags {
    pub e: Flag,
    pub f: Flag,
}

impl StandardFlags {
    pub fn new(n: usize) -> Self {
        let f = Flag::new(RatMatrix::identity(n)).unwrap();
        let mut rev = RatMatrix::zeros(n, n);
        for i in 0..n {
            rev[(n - 1 - i, i)] = ExactScalar::one();
        }
        let e = Flag::new(rev).unwrap();
        StandardFlags { e, f }
    }
}

impl Flag {
    /// Builds a flag from any invertible basis matrix; the stored
    /// representative is canonicalized by column reduction under the
    /// right action of upper triangular matrices, which preserves every
    /// leading span.
    pub fn new(basis: RatMatrix) -> Result<Self> {
        let n = basis.require_square()?;
        if basis.rank() != n {
            return Err(Error::SingularMatrix);
        }
        Ok(Flag { n, basis: canonicalize(basis) })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// First i columns, a basis of F_i.
    pub fn subspace(&self, i: usize) -> RatMatrix {
        self.basis.leading_columns(i)
    }

    /// Image under an invertible matrix.
    pub fn apply(&self, g: &RatMatrix) -> Result<Flag> {
        Flag::new(g.mul(&self.basis))
    }
}

/// Column reduction: column j is reduced against the pivot rows of the
/// earlier columns and scaled so its bottom-most nonzero entry is 1.
/// Only earlier columns are subtracted from later ones, so every
/// leading span is unchanged; the result is the unique such
/// representative of the flag.
fn canonicalize(basis: RatMatrix) -> RatMatrix {
    let n = basis.rows();
    let mut cols: Vec<Vec<ExactScalar>> = (0..n).map(|j| basis.column(j)).collect();
    let mut pivots: Vec<usize> = Vec::new();
    for j in 0..n {
        let (head, tail) = cols.split_at_mut(j);
        let col = &mut tail[0];
        for (k, &p) in pivots.iter().enumerate() {
            if !col[p].is_zero() {
                let f = col[p].clone();
                for i in 0..n {
                    let t = &f * &head[k][i];
                    col[i] -= t;
                }
            }
        }
        let p = (0..n).rev().find(|&i| !col[i].is_zero()).expect("invertible basis");
        let inv = col[p].recip();
        for x in col.iter_mut() {
            *x *= &inv;
        }
        pivots.push(p);
    }
    RatMatrix::from_columns(n, cols)
}

/// Flags F, F' are transverse iff F_i and F'_{n-i} meet only in 0 for
/// every i, i.e. every concatenation has full rank.
pub fn is_transverse(f1: &Flag, f2: &Flag) -> Result<bool> {
    if f1.n != f2.n {
        return Err(Error::Dimension { expected: f1.n, got: f2.n });
    }
    let n = f1.n;
    for i in 1..n {
        let cat = f1.subspace(i).hconcat(&f2.subspace(n - i));
        if cat.rank() != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique unit upper triangular u with u . E = t, for t transverse
/// to the standard F. Column n-i+1 of u is solved from the condition
/// that it lies in T_i with prescribed lower entries.
pub fn unipotent_coordinate(t: &Flag, std: &StandardFlags) -> Result<UnipotentUpper> {
    let n = t.n;
    if n != std.f.n {
        return Err(Error::Dimension { expected: std.f.n, got: n });
    }
    let mut u = RatMatrix::identity(n);
    for i in 1..=n {
        let b = t.subspace(i); // n x i
        // rows n-i+1 .. n (0-based n-i .. n-1) of b form the system
        let rows: Vec<usize> = (n - i..n).collect();
        let m = b.select(&rows, &(0..i).collect::<Vec<_>>());
        let inv = m.inverse().map_err(|_| Error::NotTransverse)?;
        let mut rhs = vec![ExactScalar::zero(); i];
        rhs[0] = ExactScalar::one();
        let x = inv.mul_vec(&rhs);
        let c = b.mul_vec(&x);
        debug_assert!(c[n - i].is_one());
        for (r, val) in c.iter().enumerate().take(n - i) {
            u[(r, n - i)] = val.clone();
        }
    }
    UnipotentUpper::new(u)
}

/// Positivity of (E, t, F) with the standard pair: the unipotent
/// coordinate of t lies in U^{>0}.
pub fn is_positive_triple_standard(t: &Flag, std: &StandardFlags) -> Result<bool> {
    let u = unipotent_coordinate(t, std)?;
    is_unipotent_positive(&u)
}

/// An invertible g with g . f1 = E and g . f2 = F, built from the
/// adapted basis v_i spanning f2_i meet f1_{n-i+1}; unique up to the
/// diagonal subgroup.
pub fn normalize_pair(f1: &Flag, f2: &Flag) -> Result<RatMatrix> {
    if !is_transverse(f1, f2)? {
        return Err(Error::NotTransverse);
    }
    let n = f1.n;
    let mut cols = Vec::with_capacity(n);
    for i in 1..=n {
        let a = f2.subspace(i);
        let b = f1.subspace(n - i + 1);
        let v = line_intersection(&a, &b).ok_or(Error::NotTransverse)?;
        cols.push(v);
    }
    let v = RatMatrix::from_columns(n, cols);
    v.inverse()
}

/// One-dimensional intersection of two column spans, or None.
fn line_intersection(a: &RatMatrix, b: &RatMatrix) -> Option<Vec<ExactScalar>> {
    let cat = a.hconcat(&b.map(|x| -x));
    let null = nullspace(&cat);
    if null.len() != 1 {
        return None;
    }
    let coeffs = &null[0][..a.cols()];
    Some(a.mul_vec(coeffs))
}

/// Basis of the kernel of m.
fn nullspace(m: &RatMatrix) -> Vec<Vec<ExactScalar>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..cols {
                let t = a[(p, j)].clone();
                a[(p, j)] = a[(row, j)].clone();
                a[(row, j)] = t;
            }
        }
        let inv = a[(row, col)].recip();
        for j in 0..cols {
            a[(row, j)] *= &inv;
        }
        for i in 0..rows {
            if i != row && !a[(i, col)].is_zero() {
                let f = a[(i, col)].clone();
                for j in 0..cols {
                    let t = &f * &a[(row, j)];
                    a[(i, j)] -= t;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![ExactScalar::zero(); cols];
            v[fc] = ExactScalar::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[(r, fc)].clone();
            }
            v
        })
        .collect()
}

fn sign_matrices(n: usize) -> Vec<RatMatrix> {
    (0..1usize << n)
        .map(|mask| {
            let mut d = RatMatrix::identity(n);
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    d[(i, i)] = -ExactScalar::one();
                }
            }
            d
        })
        .collect()
}

fn coordinate_after(g: &RatMatrix, t: &Flag, std: &StandardFlags) -> Option<UnipotentUpper> {
    let moved = t.apply(g).ok()?;
    unipotent_coordinate(&moved, std).ok()
}

/// GL(n)-extended positivity of a triple: some diagonal sign adjustment
/// of the normalizing element carries t into the positive chart.
pub fn is_positive_triple(f1: &Flag, t: &Flag, f3: &Flag) -> Result<bool> {
    positive_triple_impl(f1, t, f3, false)
}

/// SL-orbit variant: only orientation-preserving normalizations are
/// quantified over, which recovers the cyclic-order criterion on RP^1.
pub fn is_positive_triple_sl(f1: &Flag, t: &Flag, f3: &Flag) -> Result<bool> {
    positive_triple_impl(f1, t, f3, true)
}

fn positive_triple_impl(f1: &Flag, t: &Flag, f3: &Flag, preserve_orientation: bool) -> Result<bool> {
    let g = normalize_pair(f1, f3)?;
    let n = f1.n;
    let std = StandardFlags::new(n);
    let g_det_positive = g.det()?.is_positive();
    for d in sign_matrices(n) {
        if preserve_orientation {
            let d_det_positive = d.det()?.is_positive();
            if d_det_positive != g_det_positive {
                continue;
            }
        }
        let gd = d.mul(&g);
        if let Some(u) = coordinate_after(&gd, t, &std) {
            if is_unipotent_positive(&u)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Quadruple positivity realized at the semigroup level: after
/// normalizing (f1, f4) to (E, F), the coordinates satisfy
/// u_{s2} = u_{s1} w with both u_{s1} and w in U^{>0}, and the triple
/// (s1, s2, f4) is itself positive.
pub fn is_positive_quadruple(f1: &Flag, s1: &Flag, s2: &Flag, f4: &Flag) -> Result<bool> {
    let g = normalize_pair(f1, f4)?;
    let n = f1.n;
    let std = StandardFlags::new(n);
    let mut chain_ok = false;
    for d in sign_matrices(n) {
        let gd = d.mul(&g);
        let (Some(u1), Some(u2)) = (coordinate_after(&gd, s1, &std), coordinate_after(&gd, s2, &std)) else {
            continue;
        };
        if !is_unipotent_positive(&u1)? {
            continue;
        }
        let w = u1.inverse().mul(&u2);
        if is_unipotent_positive(&w)? {
            chain_ok = true;
            break;
        }
    }
    if !chain_ok {
        return Ok(false);
    }
    is_positive_triple(s1, s2, f4)
}
