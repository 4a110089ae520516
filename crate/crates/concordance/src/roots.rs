//! Exact real-root machinery: Sturm sequences, root counting and isolation
//! over the rationals, and an exact comparison oracle for the algebraic
//! numbers 2 cos(2 pi s / d) that appear as breakpoint coordinates.
//!
//! Everything here is rational arithmetic; no floating point enters any
//! decision.

use crate::num::{int, sign_rat, Int, Rat};
use crate::poly::{real_cyclotomic, IntPoly};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    chain: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        let p = p.primitive_normalized();
        let mut chain = vec![p.clone(), p.derivative().div_positive_content()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let (_, r) = chain[n - 2].div_rem_rat(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // Scale by positive rationals only, then negate: Sturm's theorem
            // needs the sign of the remainder preserved.
            let r = r.clear_denominators().div_positive_content().neg();
            chain.push(r);
        }
        Sturm { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.chain {
            let s = sign_rat(&p.eval_rat(x));
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_roots(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

/// An isolating interval for a single real root of a squarefree polynomial:
/// either an exact rational root, or an open interval with a sign change and
/// no other root inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isolated {
    Exact(Rat),
    Interval { lo: Rat, hi: Rat },
}

impl Isolated {
    pub fn lo(&self) -> Rat {
        match self {
            Isolated::Exact(r) => r.clone(),
            Isolated::Interval { lo, .. } => lo.clone(),
        }
    }

    pub fn hi(&self) -> Rat {
        match self {
            Isolated::Exact(r) => r.clone(),
            Isolated::Interval { hi, .. } => hi.clone(),
        }
    }
}

/// Isolate all distinct real roots of squarefree `p` inside the open interval
/// (lo, hi), where p(lo) != 0 and p(hi) != 0. Roots are returned in increasing
/// order.
pub fn isolate_roots(p: &IntPoly, lo: &Rat, hi: &Rat) -> Vec<Isolated> {
    let p = p.primitive_normalized();
    assert!(!p.eval_rat(lo).is_zero() && !p.eval_rat(hi).is_zero());
    let sturm = Sturm::new(&p);
    let two = Rat::from_integer(int(2));
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_roots(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(Isolated::Interval { lo: a, hi: b });
            continue;
        }
        let mid = (&a + &b) / &two;
        if p.eval_rat(&mid).is_zero() {
            // A rational root landed on the midpoint: record it exactly and
            // carve out a window around it containing no other root.
            out.push(Isolated::Exact(mid.clone()));
            let mut eps = (&b - &a) / Rat::from_integer(int(4));
            let mut guard = 0;
            loop {
                let l = (&mid - &eps).max(a.clone());
                let r = (&mid + &eps).min(b.clone());
                if sturm.count_roots(&l, &r) == 1
                    && !p.eval_rat(&l).is_zero()
                    && !p.eval_rat(&r).is_zero()
                {
                    if l > a {
                        stack.push((a, l));
                    }
                    if r < b {
                        stack.push((r, b));
                    }
                    break;
                }
                eps /= &two;
                guard += 1;
                assert!(guard < 10_000, "root isolation stalled");
            }
        } else {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    // Sort intervals; they are pairwise disjoint by construction.
    out.sort_by(|x, y| x.lo().cmp(&y.lo()).then(x.hi().cmp(&y.hi())));
    out
}

/// One bisection refinement step on an isolating interval.
pub fn refine_step(p: &IntPoly, iso: &mut Isolated) {
    if let Isolated::Interval { lo, hi } = iso {
        let mid = (&*lo + &*hi) / Rat::from_integer(int(2));
        let v = p.eval_rat(&mid);
        if v.is_zero() {
            *iso = Isolated::Exact(mid);
            return;
        }
        let slo = sign_rat(&p.eval_rat(lo));
        let smid = sign_rat(&v);
        if slo != smid {
            *hi = mid;
        } else {
            *lo = mid;
        }
    }
}

/// Refine until the interval width is at most `width`.
pub fn refine_to_width(p: &IntPoly, iso: &mut Isolated, width: &Rat) {
    let mut guard = 0;
    while let Isolated::Interval { lo, hi } = iso {
        if &(&*hi - &*lo) <= width {
            return;
        }
        refine_step(p, iso);
        guard += 1;
        assert!(guard < 100_000, "refinement stalled");
    }
}

/// Cached Sturm data for the minimal polynomial of 2 cos(2 pi / d).
struct CosField {
    psi: IntPoly,
    sturm: Sturm,
}

fn cos_field(d: u64) -> &'static CosField {
    static CACHE: OnceLock<Mutex<HashMap<u64, &'static CosField>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    if let Some(f) = map.get(&d) {
        return f;
    }
    let psi = real_cyclotomic(d);
    let sturm = Sturm::new(&psi);
    let leaked: &'static CosField = Box::leak(Box::new(CosField { psi, sturm }));
    map.insert(d, leaked);
    leaked
}

/// The algebraic number mu = 2 cos(2 pi s / d) for a reduced fraction s/d in
/// (0, 1/2], compared exactly against rationals via Sturm root counting.
#[derive(Clone, Debug)]
pub struct AlgebraicCos {
    pub s: u64,
    pub d: u64,
    /// Index of mu among the roots of psi_d in descending order.
    index: usize,
}

impl AlgebraicCos {
    /// s/d must be in lowest terms with 0 < s/d <= 1/2.
    pub fn new(s: u64, d: u64) -> Self {
        assert!(s >= 1 && 2 * s <= d, "need 0 < s/d <= 1/2");
        assert!(Int::from(s).gcd(&Int::from(d)).is_one(), "s/d not reduced");
        let index = (1..s).filter(|j| Int::from(*j).gcd(&Int::from(d)).is_one()).count();
        AlgebraicCos { s, d, index }
    }

    /// Exact rational value if d is small enough that 2 cos(2 pi s/d) is
    /// rational (Niven: d in {1, 2, 3, 4, 6}).
    pub fn rational_value(&self) -> Option<Rat> {
        match self.d {
            1 => Some(Rat::from_integer(int(2))),
            2 => Some(Rat::from_integer(int(-2))),
            3 => Some(Rat::from_integer(int(-1))),
            4 => Some(Rat::zero()),
            6 => Some(Rat::one()),
            _ => None,
        }
    }

    /// Compare mu with the rational e.
    pub fn cmp_rat(&self, e: &Rat) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if let Some(v) = self.rational_value() {
            return v.cmp(e);
        }
        let two = Rat::from_integer(int(2));
        if *e >= two {
            return Less;
        }
        if *e <= -two.clone() {
            return Greater;
        }
        let f = cos_field(self.d);
        let above = f.sturm.count_roots(e, &two);
        if above > self.index {
            Greater
        } else if above == self.index && f.psi.eval_rat(e).is_zero() {
            Equal
        } else {
            Less
        }
    }

    /// Minimal polynomial psi_d of mu.
    pub fn min_poly(&self) -> IntPoly {
        cos_field(self.d).psi.clone()
    }
}

/// For a rational r in (0,1), the value 2 cos(2 pi r) as an exact comparable.
/// Folds r to (0, 1/2] first (cosine is even around 0 and symmetric r <-> 1-r).
pub fn cos_of_rational(r: &Rat) -> AlgebraicCos {
    assert!(r > &Rat::zero() && r < &Rat::one());
    let folded = crate::num::fold_half(r);
    let s = folded.numer().to_string().parse::<u64>().expect("numerator fits u64");
    let d = folded.denom().to_string().parse::<u64>().expect("denominator fits u64");
    AlgebraicCos::new(s, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn sturm_counts() {
        // (x^2 - 2)(x^2 - 3) has four roots in (-2, 2)
        let p = IntPoly::from_i64(&[6, 0, -5, 0, 1]);
        let s = Sturm::new(&p);
        assert_eq!(s.count_roots(&rat(-2, 1), &rat(2, 1)), 4);
        assert_eq!(s.count_roots(&rat(0, 1), &rat(2, 1)), 2);
        assert_eq!(s.count_roots(&rat(3, 2), &rat(2, 1)), 1);
    }

    #[test]
    fn isolation_with_rational_root() {
        // roots at 1 (exact rational) and +/- sqrt(2)
        let p = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-1, 1]));
        let roots = isolate_roots(&p, &rat(-2, 1), &rat(2, 1));
        assert_eq!(roots.len(), 3);
        let exact: Vec<_> = roots
            .iter()
            .filter(|r| matches!(r, Isolated::Exact(v) if *v == rat(1, 1)))
            .collect();
        assert_eq!(exact.len(), 1);
    }

    #[test]
    fn refine_shrinks() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &rat(0, 1), &rat(2, 1));
        assert_eq!(roots.len(), 1);
        let mut iso = roots[0].clone();
        refine_to_width(&p, &mut iso, &rat(1, 1000));
        let (lo, hi) = (iso.lo(), iso.hi());
        assert!(&hi - &lo <= rat(1, 1000));
        // sqrt(2) = 1.41421...
        assert!(lo < rat(14143, 10000) && hi > rat(14142, 10000));
    }

    #[test]
    fn algebraic_cos_comparisons() {
        // 2 cos(2 pi / 5) = (sqrt(5) - 1)/2 = 0.618...
        let mu = AlgebraicCos::new(1, 5);
        assert_eq!(mu.cmp_rat(&rat(0, 1)), std::cmp::Ordering::Greater);
        assert_eq!(mu.cmp_rat(&rat(1, 1)), std::cmp::Ordering::Less);
        assert_eq!(mu.cmp_rat(&rat(61, 100)), std::cmp::Ordering::Greater);
        assert_eq!(mu.cmp_rat(&rat(62, 100)), std::cmp::Ordering::Less);
        // 2 cos(2 pi 2/5) = -(sqrt(5)+1)/2 = -1.618...
        let mu2 = AlgebraicCos::new(2, 5);
        assert_eq!(mu2.cmp_rat(&rat(-8, 5)), std::cmp::Ordering::Less);
        assert_eq!(mu2.cmp_rat(&rat(-17, 10)), std::cmp::Ordering::Greater);
        // Exact rational case d = 6
        let mu3 = cos_of_rational(&rat(5, 6));
        assert_eq!(mu3.cmp_rat(&rat(1, 1)), std::cmp::Ordering::Equal);
    }
}
