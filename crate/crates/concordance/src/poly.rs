//! Dense univariate integer polynomials with the exact operations the rest of
//! the crate leans on: Euclidean structure over Q via primitive remainder
//! sequences, Sylvester resultants, cyclotomic polynomials, and the rewrite of
//! palindromic polynomials in the variable u = t + 1/t.

use crate::error::{Error, Result};
use crate::mat::IntMat;
use crate::num::{int, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree order; empty vector is the zero
/// polynomial, otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![Int::one()] }
    }

    /// x^n with coefficient c.
    pub fn monomial(c: Int, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); n + 1];
        coeffs[n] = c;
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Int) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Substitute p(x) -> p(q(x)).
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&Self::new(vec![c.clone()]));
        }
        acc
    }

    /// gcd of all coefficients, nonnegative.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide out the (positive) content, keeping the sign of every
    /// coefficient intact.
    pub fn div_positive_content(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division; panics if the division is not exact over Q.
    pub fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem_rat(rhs);
        assert!(r.is_zero(), "division was not exact");
        let den = q.denominator_lcm();
        assert!(den.is_one(), "quotient is not integral");
        q.numerator_poly()
    }

    /// Remainder and quotient over Q.
    pub fn div_rem_rat(&self, rhs: &Self) -> (RatPoly, RatPoly) {
        RatPoly::from_int(self).div_rem(&RatPoly::from_int(rhs))
    }

    /// True iff rhs divides self over Q.
    pub fn divisible_by(&self, rhs: &Self) -> bool {
        if self.is_zero() {
            return true;
        }
        if rhs.is_zero() {
            return false;
        }
        let (_, r) = self.div_rem_rat(rhs);
        r.is_zero()
    }

    /// Primitive gcd over Q[x] (integer coefficients, positive leading).
    pub fn gcd_primitive(&self, rhs: &Self) -> Self {
        let mut a = self.primitive_normalized();
        let mut b = rhs.primitive_normalized();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_normalized();
            a = b;
            b = r;
        }
        a.primitive_normalized()
    }

    /// Pseudo-remainder of self by rhs (sign-scaled so no rational arithmetic
    /// is needed); only used inside gcd where scaling is irrelevant.
    fn pseudo_rem(&self, rhs: &Self) -> Self {
        let d = rhs.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let lc = rhs.leading();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let shift = rd - d;
            let r_lead = r.leading();
            // lc * r - r_lead * x^shift * rhs
            let scaled_r = r.scale(&lc);
            let sub = rhs.mul(&Self::monomial(r_lead, shift));
            r = scaled_r.sub(&sub);
        }
        r
    }

    /// Squarefree part p / gcd(p, p').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd_primitive(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_normalized();
        }
        let (q, r) = self.div_rem_rat(&g);
        debug_assert!(r.is_zero());
        q.clear_denominators().primitive_normalized()
    }

    /// Exact Lagrange interpolation through (pts[i], vals[i]); the result must
    /// have integer coefficients.
    pub fn interpolate(pts: &[i64], vals: &[Int]) -> Self {
        assert_eq!(pts.len(), vals.len());
        let mut acc = RatPoly::zero();
        for (i, (&xi, yi)) in pts.iter().zip(vals).enumerate() {
            let mut term = RatPoly::constant(Rat::from_integer(yi.clone()));
            for (j, &xj) in pts.iter().enumerate() {
                if i == j {
                    continue;
                }
                // (x - xj) / (xi - xj)
                let denom = Rat::from_integer(int(xi - xj));
                let lin = RatPoly::new(vec![
                    Rat::from_integer(int(-xj)) / denom.clone(),
                    Rat::one() / denom,
                ]);
                term = term.mul(&lin);
            }
            acc = acc.add(&term);
        }
        let den = acc.denominator_lcm();
        assert!(den.is_one(), "interpolation result not integral");
        acc.numerator_poly()
    }

    /// Resultant as the determinant of the Sylvester matrix.
    pub fn resultant(&self, rhs: &Self) -> Result<Int> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        let m = rhs.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 || m == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(sylvester(self, rhs).det())
    }

    /// Human-readable rendering with the given variable name.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format!("{c}"),
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{i}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }

    /// True iff coeff(i) == coeff(n - i) for the given ambient even degree n
    /// (the polynomial is allowed to have lower actual degree).
    pub fn is_palindromic_for(&self, n: usize) -> bool {
        (0..=n).all(|i| self.coeff(i) == self.coeff(n - i))
    }

    /// For p palindromic with respect to even ambient degree 2m, return q with
    /// q(t + 1/t) = p(t) / t^m. Uses V_0 = 2, V_1 = u, V_{j+1} = u V_j - V_{j-1}.
    pub fn symmetric_to_u(&self, m: usize) -> Self {
        assert!(self.is_palindromic_for(2 * m), "polynomial is not palindromic");
        let mut q = IntPoly::new(vec![self.coeff(m)]);
        let mut v_prev = IntPoly::from_i64(&[2]); // V_0
        let mut v_cur = IntPoly::from_i64(&[0, 1]); // V_1
        for j in 1..=m {
            q = q.add(&v_cur.scale(&self.coeff(m + j)));
            let next = v_cur.mul(&IntPoly::from_i64(&[0, 1])).sub(&v_prev);
            v_prev = std::mem::replace(&mut v_cur, next);
        }
        q
    }

    /// V_w in the Chebyshev-like basis: V_w(2 cos x) = 2 cos(w x).
    pub fn chebyshev_v(w: usize) -> Self {
        let mut v_prev = IntPoly::from_i64(&[2]);
        let mut v_cur = IntPoly::from_i64(&[0, 1]);
        match w {
            0 => v_prev,
            1 => v_cur,
            _ => {
                for _ in 2..=w {
                    let next = v_cur.mul(&IntPoly::from_i64(&[0, 1])).sub(&v_prev);
                    v_prev = std::mem::replace(&mut v_cur, next);
                }
                v_cur
            }
        }
    }
}

fn sylvester(f: &IntPoly, g: &IntPoly) -> IntMat {
    let n = f.degree().unwrap();
    let m = g.degree().unwrap();
    let size = n + m;
    let mut s = IntMat::zero(size, size);
    for i in 0..m {
        for j in 0..=n {
            s[(i, i + j)] = f.coeff(n - j);
        }
    }
    for i in 0..n {
        for j in 0..=m {
            s[(m + i, i + j)] = g.coeff(m - j);
        }
    }
    s
}

/// Cyclotomic polynomial Phi_d, built bottom-up over the divisors of d:
/// Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1);
    let divs = crate::num::divisors(d as i64);
    let mut table: Vec<(u64, IntPoly)> = Vec::with_capacity(divs.len());
    for e in divs {
        let e = e as u64;
        let mut num = IntPoly::monomial(Int::one(), e as usize).sub(&IntPoly::one());
        for (f, phi) in &table {
            if e % f == 0 {
                num = num.div_exact(phi);
            }
        }
        table.push((e, num));
    }
    table.pop().unwrap().1
}

/// Minimal polynomial of 2 cos(2 pi / d) for d >= 3: Phi_d rewritten in
/// u = t + 1/t. Degree phi(d)/2, irreducible over Q.
pub fn real_cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 3);
    let phi = cyclotomic(d);
    let deg = phi.degree().unwrap();
    debug_assert!(deg % 2 == 0);
    phi.symmetric_to_u(deg / 2)
}

/// Exact integral Bezout relation: u1*f + u2*g = c with c | Res(f, g).
///
/// Solves the Sylvester system with Cramer-style integer arithmetic, then
/// divides the triple by its common content.
pub fn integer_bezout(f: &IntPoly, g: &IntPoly) -> Result<(IntPoly, IntPoly, Int)> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        // f is a nonzero constant: c = f, u1 = 1, u2 = 0.
        return Ok((IntPoly::one(), IntPoly::zero(), f.coeff(0)));
    }
    if m == 0 {
        return Ok((IntPoly::zero(), IntPoly::one(), g.coeff(0)));
    }
    let gcd = f.gcd_primitive(g);
    if gcd.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    let res = f.resultant(g)?;
    debug_assert!(!res.is_zero());

    // Coefficients x of u2 (deg < n) and u1 (deg < m) solve S^t x = res * e_last,
    // where S is the Sylvester matrix of (f, g). Solve by explicit adjugate
    // column; sizes are tiny.
    let s = sylvester(f, g).transpose();
    let size = n + m;
    let mut cols = Vec::with_capacity(size);
    for k in 0..size {
        // Cramer: x_k = res * det(S with column k replaced by e_last) / det(S).
        // det(S^t with col k -> e_last) is the (last, k) cofactor.
        let mut sub = IntMat::zero(size - 1, size - 1);
        for (ri, r) in (0..size).filter(|&r| r != size - 1).enumerate() {
            for (ci, c) in (0..size).filter(|&c| c != k).enumerate() {
                sub[(ri, ci)] = s[(r, c)].clone();
            }
        }
        let cof = sub.det();
        let sgn_exp = (size - 1) + k;
        cols.push(if sgn_exp % 2 == 0 { cof } else { -cof });
    }
    // S^t x = det(S^t) e_last has the cofactor vector as solution.
    // Sylvester rows: first m rows hold f-shifts (multipliers = coeffs of u1,
    // degree < m), next n rows hold g-shifts (coeffs of u2, degree < n).
    // Multiplier coefficients are ordered by descending shift.
    let det_s = s.det();
    debug_assert_eq!(det_s.abs(), res.abs());

    let u1_coeffs: Vec<Int> = (0..m).map(|i| cols[m - 1 - i].clone()).collect();
    let u2_coeffs: Vec<Int> = (0..n).map(|i| cols[m + n - 1 - i].clone()).collect();
    let mut u1 = IntPoly::new(u1_coeffs);
    let mut u2 = IntPoly::new(u2_coeffs);
    let mut c = det_s;

    // Verify and reduce by common content.
    let mut g_all = u1.content().gcd(&u2.content()).gcd(&c);
    if g_all.is_zero() {
        g_all = Int::one();
    }
    u1 = IntPoly::new(u1.coeffs().iter().map(|x| x / &g_all).collect());
    u2 = IntPoly::new(u2.coeffs().iter().map(|x| x / &g_all).collect());
    c /= &g_all;

    let check = u1.mul(f).add(&u2.mul(g));
    debug_assert_eq!(check, IntPoly::new(vec![c.clone()]));
    Ok((u1, u2, c))
}

/// Polynomials with rational coefficients; only what the integer layer needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(p: &IntPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub_poly(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn div_rem(&self, rhs: &Self) -> (RatPoly, RatPoly) {
        let d = rhs.degree().expect("division by zero polynomial");
        let lc = rhs.coeffs[d].clone();
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let f = rem.coeffs[rd].clone() / lc.clone();
            quo[rd - d] = f.clone();
            let mut shifted = vec![Rat::zero(); rd - d];
            shifted.extend(rhs.coeffs.iter().map(|c| c * &f));
            rem = rem.sub_raw(&shifted);
        }
        (RatPoly::new(quo), rem)
    }

    fn sub_raw(&self, other: &[Rat]) -> Self {
        let n = self.coeffs.len().max(other.len());
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeff(i) - other.get(i).cloned().unwrap_or_else(Rat::zero)
                })
                .collect(),
        )
    }

    pub fn denominator_lcm(&self) -> Int {
        let mut l = Int::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        l
    }

    pub fn numerator_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    pub fn clear_denominators(&self) -> IntPoly {
        let l = self.denominator_lcm();
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arith_and_eval() {
        let p = IntPoly::from_i64(&[-1, 3, -1]); // -1 + 3t - t^2
        assert_eq!(p.eval_int(&int(2)), int(1));
        assert_eq!(p.degree(), Some(2));
        let q = p.mul(&p);
        assert_eq!(q.degree(), Some(4));
        assert_eq!(q.eval_int(&int(2)), int(1));
    }

    #[test]
    fn gcd_and_divisibility() {
        let a = IntPoly::from_i64(&[-1, 0, 1]); // t^2 - 1
        let b = IntPoly::from_i64(&[1, 1]); // t + 1
        assert_eq!(a.gcd_primitive(&b), b);
        assert!(a.divisible_by(&b));
        let c = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(a.gcd_primitive(&c).degree(), Some(0));
    }

    #[test]
    fn resultants() {
        // Res(t^2 - 1, t^2 - 4) = (1-2)(1+2)(-1-2)(-1+2) = 9
        let a = IntPoly::from_i64(&[-1, 0, 1]);
        let b = IntPoly::from_i64(&[-4, 0, 1]);
        assert_eq!(a.resultant(&b).unwrap(), int(9));
        assert_eq!(a.resultant(&a).unwrap(), int(0));
        let c = IntPoly::from_i64(&[5]);
        assert!(matches!(a.resultant(&c), Err(Error::ConstantPolynomial)));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(5), IntPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(real_cyclotomic(6), IntPoly::from_i64(&[-1, 1]));
        // psi_5(u) = u^2 + u - 1
        assert_eq!(real_cyclotomic(5), IntPoly::from_i64(&[-1, 1, 1]));
    }

    #[test]
    fn u_substitution_roundtrip() {
        // p = t^4 + t^3 + t^2 + t + 1 (palindromic, m = 2)
        let p = IntPoly::from_i64(&[1, 1, 1, 1, 1]);
        let q = p.symmetric_to_u(2);
        // q(t + 1/t) * t^2 == p(t); check at a few integer points.
        for t in [2i64, 3, -2, 5] {
            let u = Rat::new(int(t * t + 1), int(t));
            let lhs = q.eval_rat(&u) * Rat::from_integer(int(t * t));
            assert_eq!(lhs, Rat::from_integer(p.eval_int(&int(t))));
        }
    }

    #[test]
    fn chebyshev_identity() {
        // V_3(u) = u^3 - 3u
        assert_eq!(IntPoly::chebyshev_v(3), IntPoly::from_i64(&[0, -3, 0, 1]));
    }

    #[test]
    fn bezout_examples() {
        let f = IntPoly::from_i64(&[-2, -1, 1]); // x^2 - x - 2
        let g = IntPoly::from_i64(&[-6, -1, 1]); // x^2 - x - 6
        let (u1, u2, c) = integer_bezout(&f, &g).unwrap();
        assert_eq!(c.abs(), int(4));
        assert_eq!(u1.mul(&f).add(&u2.mul(&g)), IntPoly::new(vec![c.clone()]));
        let res = f.resultant(&g).unwrap();
        assert!((&res % &c).is_zero());

        let f = IntPoly::from_i64(&[-1, 1]);
        let g = IntPoly::from_i64(&[1, 1]);
        let (u1, u2, c) = integer_bezout(&f, &g).unwrap();
        assert_eq!(c.abs(), int(2));
        assert_eq!(u1.mul(&f).add(&u2.mul(&g)), IntPoly::new(vec![c]));

        let f = IntPoly::from_i64(&[-1, -1, 1]);
        assert!(matches!(integer_bezout(&f, &f), Err(Error::NotCoprime)));
    }

    #[test]
    fn interpolation() {
        let pts = [0i64, 1, 2, 3];
        let vals = [int(1), int(0), int(3), int(16)];
        let p = IntPoly::interpolate(&pts, &vals);
        for (x, v) in pts.iter().zip(&vals) {
            assert_eq!(p.eval_int(&int(*x)), *v);
        }
    }
}
