//! Exact univariate polynomials: characteristic polynomials and real
//! root isolation by square-free decomposition and Sturm sequences.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::scalar::{rat, ExactScalar};

/// Polynomial over exact rationals, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<ExactScalar>,
}

/// Isolating interval for one distinct real root. `lo == hi` means the
/// root is the rational number itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: ExactScalar,
    pub hi: ExactScalar,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn contains(&self, x: &ExactScalar) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// (x - r)
    pub fn linear_root(r: &ExactScalar) -> Self {
        Polynomial::new(vec![-r.clone(), ExactScalar::one()])
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![ExactScalar::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &ExactScalar) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division with remainder.
    pub fn divmod(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![ExactScalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let t = &c * d;
                    rem[k + i] -= t;
                }
            }
            quot[k] = c;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Polynomial {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.divmod(&g).0.monic()
    }

    /// Yun's square-free decomposition: returns `(f_i, i)` with
    /// `p = c * prod f_i^i`, each `f_i` monic square-free, pairwise
    /// coprime, deg f_i >= 1.
    pub fn square_free_factors(&self) -> Vec<(Polynomial, usize)> {
        assert!(!self.is_zero());
        let p = self.monic();
        if p.degree() == Some(0) {
            return vec![];
        }
        let dp = p.derivative();
        let mut out = Vec::new();
        let a0 = p.gcd(&dp);
        let mut b = p.divmod(&a0).0;
        let mut c = dp.divmod(&a0).0;
        let mut i = 1;
        loop {
            let d = c.sub(&b.derivative());
            let f = b.gcd(&d);
            if f.degree().unwrap_or(0) >= 1 {
                out.push((f.clone(), i));
            }
            b = b.divmod(&f).0;
            c = d.divmod(&f).0;
            i += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }

    /// Cauchy bound: all real roots lie in (-B, B).
    pub fn root_bound(&self) -> ExactScalar {
        let lead = self.leading().expect("nonzero polynomial");
        let mut max = ExactScalar::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = (c / lead).abs();
            if r > max {
                max = r;
            }
        }
        max + rat(1)
    }
}

/// Exact characteristic polynomial det(xI - m) via Faddeev-LeVerrier.
pub fn char_poly(m: &RatMatrix) -> Result<Polynomial> {
    let n = m.require_square()?;
    let mut coeffs = vec![ExactScalar::zero(); n + 1];
    coeffs[n] = ExactScalar::one();
    let mut mk = m.clone();
    for k in 1..=n {
        let trace: ExactScalar = (0..n).map(|i| mk[(i, i)].clone()).sum();
        let c = -(trace / rat(k as i64));
        coeffs[n - k] = c.clone();
        if k < n {
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted[(i, i)] += &c;
            }
            mk = m.mul(&shifted);
        }
    }
    Ok(Polynomial::new(coeffs))
}

struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    fn new(p: &Polynomial) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while chain.last().map_or(false, |q| !q.is_zero()) {
            let k = chain.len();
            let (_, r) = chain[k - 2].divmod(&chain[k - 1]);
            chain.push(r.neg());
        }
        chain.pop();
        SturmChain { chain }
    }

    fn sign_variations(&self, x: &ExactScalar) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for q in &self.chain {
            let val = q.eval(x);
            let s = if val.is_zero() {
                continue;
            } else if val.is_positive() {
                1
            } else {
                -1
            };
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct roots in the open interval (lo, hi), endpoints
    /// assumed non-roots.
    fn count_roots(&self, lo: &ExactScalar, hi: &ExactScalar) -> usize {
        self.sign_variations(lo) - self.sign_variations(hi)
    }
}

/// Multiplicity of a known root `r` of `p` by repeated deflation.
fn multiplicity_at(p: &Polynomial, r: &ExactScalar) -> usize {
    let lin = Polynomial::linear_root(r);
    let mut q = p.clone();
    let mut m = 0;
    loop {
        let (quot, rem) = q.divmod(&lin);
        if !rem.is_zero() {
            return m;
        }
        m += 1;
        q = quot;
    }
}

/// Isolates the distinct real roots of `p`: disjoint rational intervals,
/// one per root, with multiplicities. Uses the square-free part for
/// isolation (Sturm sequences + bisection) and Yun factors for the
/// multiplicities.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let factors = p.square_free_factors();
    let mut sf = p.square_free_part();

    let mut exact: Vec<(ExactScalar, usize)> = Vec::new();
    let mut intervals: Vec<(ExactScalar, ExactScalar)> = Vec::new();

    // Bisection; a midpoint hitting a root is deflated out so that all
    // remaining interval endpoints are guaranteed non-roots.
    let bound = sf.root_bound();
    let mut work = vec![(-bound.clone(), bound)];
    let mut chain = SturmChain::new(&sf);
    while let Some((lo, hi)) = work.pop() {
        match chain.count_roots(&lo, &hi) {
            0 => {}
            1 => intervals.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / rat(2);
                if sf.eval(&mid).is_zero() {
                    exact.push((mid.clone(), multiplicity_at(p, &mid)));
                    sf = sf.divmod(&Polynomial::linear_root(&mid)).0;
                    chain = SturmChain::new(&sf);
                    // restart with the deflated polynomial; keep already
                    // isolated intervals, they cannot contain mid
                    work.push((lo, mid.clone()));
                    work.push((mid, hi));
                } else {
                    work.push((lo, mid.clone()));
                    work.push((mid, hi));
                }
            }
        }
    }

    // shrink until intervals are pairwise disjoint and avoid exact roots
    let disjoint = |ivs: &[(ExactScalar, ExactScalar)], pts: &[(ExactScalar, usize)]| {
        for (i, a) in ivs.iter().enumerate() {
            for b in ivs[i + 1..].iter() {
                if a.0 <= b.1 && b.0 <= a.1 {
                    return false;
                }
            }
            for (x, _) in pts {
                if a.0 <= *x && *x <= a.1 {
                    return false;
                }
            }
        }
        true
    };
    while !disjoint(&intervals, &exact) {
        let mut next = Vec::with_capacity(intervals.len());
        for iv in intervals.drain(..) {
            let mid = (&iv.0 + &iv.1) / rat(2);
            if sf.eval(&mid).is_zero() {
                // the enclosed root is the rational midpoint itself
                exact.push((mid.clone(), multiplicity_at(p, &mid)));
                sf = sf.divmod(&Polynomial::linear_root(&mid)).0;
                chain = SturmChain::new(&sf);
            } else if chain.count_roots(&iv.0, &mid) == 1 {
                next.push((iv.0, mid));
            } else {
                next.push((mid, iv.1));
            }
        }
        intervals = next;
    }

    let mut out: Vec<RootInterval> = Vec::new();
    for (x, m) in exact {
        out.push(RootInterval { lo: x.clone(), hi: x, multiplicity: m });
    }
    for (lo, hi) in intervals {
        // the Yun factor with a sign change over (lo, hi) carries the
        // multiplicity of the enclosed root
        let mult = factors
            .iter()
            .find(|(f, _)| (f.eval(&lo) * f.eval(&hi)).is_negative())
            .map(|&(_, m)| m)
            .unwrap_or(1);
        out.push(RootInterval { lo, hi, multiplicity: mult });
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn char_poly_identity() {
        // (x-1)^2 = 1 - 2x + x^2
        let p = char_poly(&RatMatrix::identity(2)).unwrap();
        assert_eq!(p, Polynomial::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_diagonal() {
        // (x-1)(x-2) = 2 - 3x + x^2
        let m = RatMatrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert_eq!(char_poly(&m).unwrap(), Polynomial::from_i64(&[2, -3, 1]));
    }

    #[test]
    fn char_poly_swap() {
        // x^2 - 1
        let m = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&m).unwrap(), Polynomial::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn isolate_x2_minus_1() {
        let roots = isolate_real_roots(&Polynomial::from_i64(&[-1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&rat(-1)));
        assert!(roots[1].contains(&rat(1)));
        assert!(roots.iter().all(|r| r.multiplicity == 1));
        assert!(roots[0].hi < roots[1].lo);
    }

    #[test]
    fn isolate_double_root() {
        // (x-1)^2
        let roots = isolate_real_roots(&Polynomial::from_i64(&[1, -2, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&rat(1)));
        assert_eq!(roots[0].multiplicity, 2);
    }

    #[test]
    fn isolate_no_real_roots() {
        let roots = isolate_real_roots(&Polynomial::from_i64(&[1, 0, 1])).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn isolate_rejects_zero() {
        assert!(matches!(isolate_real_roots(&Polynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn isolate_mixed_multiplicities() {
        // (x-1)^2 (x+2)^3 (x - 1/2)
        let p = Polynomial::from_i64(&[1, -2, 1])
            .mul(&Polynomial::from_i64(&[2, 1]).mul(&Polynomial::from_i64(&[2, 1])).mul(&Polynomial::from_i64(&[2, 1])))
            .mul(&Polynomial::new(vec![frac(-1, 2), rat(1)]));
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        let find = |x: ExactScalar| roots.iter().find(|r| r.contains(&x)).unwrap().multiplicity;
        assert_eq!(find(rat(-2)), 3);
        assert_eq!(find(frac(1, 2)), 1);
        assert_eq!(find(rat(1)), 2);
    }

    #[test]
    fn divmod_roundtrip() {
        let a = Polynomial::from_i64(&[3, 0, -2, 1, 5]);
        let b = Polynomial::from_i64(&[1, 2, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }
}
