//! Exact inertia (signature) of symmetric matrices by Lagrange congruence
//! diagonalization, generic over an exactly-ordered field.
//!
//! Two instantiations are used: plain rationals (the main path for plateau
//! signatures) and elements of the real cyclotomic field Q(2 cos(2 pi s/d))
//! (an independent evaluator for signatures at rational angles).

use crate::num::{int, Rat};
use crate::poly::{IntPoly, RatPoly};
use crate::roots::{isolate_roots, refine_step, Isolated};
use num_traits::{One, Signed, Zero};
use std::sync::{Arc, Mutex};

pub trait InertiaScalar: Clone {
    fn is_zero(&self) -> bool;
    /// Exact sign in {-1, 0, 1}.
    fn sign(&self) -> i32;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
}

impl InertiaScalar for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sign(&self) -> i32 {
        crate::num::sign_rat(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

/// Inertia (positive, negative, zero counts) of a symmetric matrix.
pub fn inertia<T: InertiaScalar>(mat: &[Vec<T>]) -> (usize, usize, usize) {
    let n = mat.len();
    for row in mat {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    let mut m: Vec<Vec<T>> = mat.to_vec();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut i = 0usize;
    while i < n {
        let diag_pivot = (i..n).find(|&j| !m[j][j].is_zero());
        if let Some(j) = diag_pivot {
            sym_swap(&mut m, i, j);
        } else {
            let mut off = None;
            'search: for j in i..n {
                for k in j + 1..n {
                    if !m[j][k].is_zero() {
                        off = Some((j, k));
                        break 'search;
                    }
                }
            }
            let Some((j, k)) = off else {
                zero += n - i;
                break;
            };
            // All trailing diagonal entries vanish; row/col addition makes
            // m[j][j] = 2 m[j][k] != 0.
            for c in i..n {
                let v = m[j][c].add(&m[k][c]);
                m[j][c] = v;
            }
            for r in i..n {
                let v = m[r][j].add(&m[r][k]);
                m[r][j] = v;
            }
            sym_swap(&mut m, i, j);
        }
        let d = m[i][i].clone();
        match d.sign() {
            1 => pos += 1,
            -1 => neg += 1,
            _ => unreachable!("pivot must be nonzero"),
        }
        for r in i + 1..n {
            if m[r][i].is_zero() {
                continue;
            }
            let f = m[r][i].div(&d);
            for c in i + 1..n {
                let v = m[r][c].sub(&f.mul(&m[i][c]));
                m[r][c] = v;
            }
        }
        i += 1;
    }
    (pos, neg, zero)
}

fn sym_swap<T: Clone>(m: &mut [Vec<T>], a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    let n = m.len();
    for r in 0..n {
        m[r].swap(a, b);
    }
}

/// Signature = pos - neg of a symmetric rational matrix.
pub fn signature_rat(mat: &[Vec<Rat>]) -> i64 {
    let (p, n, _) = inertia(mat);
    p as i64 - n as i64
}

/// Shared context for arithmetic in Q(mu), mu = 2 cos(2 pi s / d): the minimal
/// polynomial and a refinable isolating interval for this particular root.
pub struct CosCtx {
    psi: IntPoly,
    iso: Mutex<Isolated>,
}

impl CosCtx {
    /// s/d reduced, 0 < s/d < 1/2, d >= 3 (the rational-angle cases d <= 6 with
    /// rational cosine are legal too; they just carry a degree-1 psi).
    pub fn new(s: u64, d: u64) -> Arc<Self> {
        let mu = crate::roots::AlgebraicCos::new(s, d);
        let psi = mu.min_poly();
        let lo = Rat::from_integer(int(-2));
        let hi = Rat::from_integer(int(2));
        let mut roots = isolate_roots(&psi, &lo, &hi);
        roots.reverse(); // descending; mu is at `index` from the top
        let iso = roots
            .into_iter()
            .nth(mu_index(&mu))
            .expect("root index in range");
        Arc::new(CosCtx { psi, iso: Mutex::new(iso) })
    }

    pub fn elem_from_upoly(self: &Arc<Self>, p: &RatPoly) -> CycElem {
        let (_, r) = p.div_rem(&RatPoly::from_int(&self.psi));
        CycElem { ctx: Arc::clone(self), poly: r }
    }

    pub fn constant(self: &Arc<Self>, c: Rat) -> CycElem {
        CycElem { ctx: Arc::clone(self), poly: RatPoly::constant(c) }
    }

    /// Sign of p(mu) for reduced p (deg < deg psi), by interval refinement.
    fn sign_at_mu(&self, p: &RatPoly) -> i32 {
        if p.is_zero() {
            return 0;
        }
        // Nonzero reduced element of an irreducible extension is nonzero at mu.
        let mut guard = 0;
        loop {
            let (lo, hi) = {
                let iso = self.iso.lock().unwrap();
                (iso.lo(), iso.hi())
            };
            let (vlo, vhi) = interval_eval(p, &lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            if lo == hi {
                // Exact rational mu.
                let v = p.coeffs().iter().rev().fold(Rat::zero(), |acc, c| acc * &lo + c);
                return crate::num::sign_rat(&v);
            }
            {
                let mut iso = self.iso.lock().unwrap();
                refine_step(&self.psi, &mut iso);
            }
            guard += 1;
            assert!(guard < 100_000, "sign refinement stalled");
        }
    }
}

fn mu_index(mu: &crate::roots::AlgebraicCos) -> usize {
    // Re-derive the descending-order index: number of coprime j < s.
    use num_integer::Integer;
    (1..mu.s).filter(|j| j.gcd(&mu.d) == 1).count()
}

/// Interval Horner evaluation of p over [lo, hi]; returns an enclosure.
fn interval_eval(p: &RatPoly, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut alo = Rat::zero();
    let mut ahi = Rat::zero();
    for c in p.coeffs().iter().rev() {
        // [alo, ahi] * [lo, hi]
        let candidates = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut mn = candidates[0].clone();
        let mut mx = candidates[0].clone();
        for v in &candidates[1..] {
            if v < &mn {
                mn = v.clone();
            }
            if v > &mx {
                mx = v.clone();
            }
        }
        alo = mn + c;
        ahi = mx + c;
    }
    (alo, ahi)
}

/// An element of Q(mu) represented by its reduced polynomial in mu.
#[derive(Clone)]
pub struct CycElem {
    ctx: Arc<CosCtx>,
    poly: RatPoly,
}

impl CycElem {
    fn reduce(ctx: &Arc<CosCtx>, p: RatPoly) -> CycElem {
        let (_, r) = p.div_rem(&RatPoly::from_int(&ctx.psi));
        CycElem { ctx: Arc::clone(ctx), poly: r }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm mod psi.
    fn inverse(&self) -> CycElem {
        assert!(!self.poly.is_zero(), "division by zero in Q(mu)");
        let psi = RatPoly::from_int(&self.ctx.psi);
        // Extended gcd of (poly, psi): s*poly + t*psi = g, g constant.
        let (g, s) = ext_gcd_mod(&self.poly, &psi);
        let gdeg = g.degree().expect("gcd nonzero");
        assert_eq!(gdeg, 0, "psi must be irreducible");
        let ginv = Rat::one() / g.coeff(0);
        let inv = s.mul(&RatPoly::constant(ginv));
        CycElem::reduce(&self.ctx, inv)
    }
}

/// Extended gcd returning (g, s) with s*a + t*b = g (t not needed).
fn ext_gcd_mod(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = RatPoly::constant(Rat::one());
    let mut s1 = RatPoly::zero();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub_poly(&q.mul(&s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl InertiaScalar for CycElem {
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
    fn sign(&self) -> i32 {
        self.ctx.sign_at_mu(&self.poly)
    }
    fn add(&self, o: &Self) -> Self {
        CycElem { ctx: Arc::clone(&self.ctx), poly: self.poly.add(&o.poly) }
    }
    fn sub(&self, o: &Self) -> Self {
        CycElem { ctx: Arc::clone(&self.ctx), poly: self.poly.sub_poly(&o.poly) }
    }
    fn mul(&self, o: &Self) -> Self {
        CycElem::reduce(&self.ctx, self.poly.mul(&o.poly))
    }
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn rm(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Rat::from_integer(int(x))).collect())
            .collect()
    }

    #[test]
    fn rational_inertia_basics() {
        assert_eq!(inertia(&rm(&[&[2, 1], &[1, -2]])), (1, 1, 0));
        assert_eq!(inertia(&rm(&[&[-2, 1], &[1, -2]])), (0, 2, 0));
        assert_eq!(inertia(&rm(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(inertia(&rm(&[&[0, 0], &[0, 0]])), (0, 0, 2));
        assert_eq!(inertia(&rm(&[&[1, 2], &[2, 4]])), (1, 0, 1));
    }

    #[test]
    fn cyclotomic_field_arith() {
        // mu = 2 cos(2 pi / 5), golden-ratio flavored: mu^2 + mu - 1 = 0.
        let ctx = CosCtx::new(1, 5);
        let mu = ctx.elem_from_upoly(&RatPoly::new(vec![Rat::zero(), Rat::one()]));
        let lhs = mu.mul(&mu).add(&mu).sub(&ctx.constant(Rat::one()));
        assert!(lhs.is_zero());
        assert_eq!(mu.sign(), 1);
        // mu - 1 < 0 since mu = 0.618...
        let m1 = mu.sub(&ctx.constant(Rat::one()));
        assert_eq!(m1.sign(), -1);
        let inv = ctx.constant(Rat::one()).div(&mu);
        // 1/mu = mu + 1 for this minimal polynomial.
        let expect = mu.add(&ctx.constant(Rat::one()));
        assert!(inv.sub(&expect).is_zero());
    }

    #[test]
    fn cyclotomic_inertia() {
        // diag(mu, -mu, mu - 1) over Q(2 cos(2pi/5)) has inertia (1, 2, 0).
        let ctx = CosCtx::new(1, 5);
        let mu = ctx.elem_from_upoly(&RatPoly::new(vec![Rat::zero(), Rat::one()]));
        let z = ctx.constant(Rat::zero());
        let m = vec![
            vec![mu.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.sub(&mu), z.clone()],
            vec![z.clone(), z.clone(), mu.sub(&ctx.constant(rat(1, 1)))],
        ];
        assert_eq!(inertia(&m), (1, 2, 0));
    }
}
