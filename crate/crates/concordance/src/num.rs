//! Shared numeric aliases and small integer helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Reduce into [0, 1).
pub fn frac_mod1(r: &Rat) -> Rat {
    let f = r.floor();
    r - f
}

/// Fold r in [0, 1] to min(r, 1-r) in [0, 1/2].
pub fn fold_half(r: &Rat) -> Rat {
    let one_minus = Rat::one() - r;
    if *r <= one_minus {
        r.clone()
    } else {
        one_minus
    }
}

pub fn is_perfect_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let s = (n as f64).sqrt() as i64;
    for c in s.saturating_sub(2)..=s + 2 {
        if c >= 0 && c * c == n {
            return true;
        }
    }
    false
}

/// Prime factorization by trial division; fine for the desk-scale inputs here.
pub fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    assert!(n > 0, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime_i64(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_prime_power_i64(n: i64) -> bool {
    n >= 2 && factorize(n).len() == 1
}

/// Divisors of n in ascending order.
pub fn divisors(n: i64) -> Vec<i64> {
    assert!(n > 0);
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Multiplicative inverse of a mod m (m >= 2), if gcd(a, m) = 1.
pub fn inv_mod(a: i64, m: i64) -> Option<i64> {
    let a = a.rem_euclid(m);
    let g = a.gcd(&m);
    if g != 1 {
        return None;
    }
    let e = a.extended_gcd(&m);
    Some(e.x.rem_euclid(m))
}

pub fn pow_mod(b: i64, mut e: u64, m: i64) -> i64 {
    let mut acc: i128 = 1;
    let mm = m as i128;
    let mut bb = (b.rem_euclid(m)) as i128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as i64
}

/// Multiplicative order of a mod p for prime p, gcd(a, p) = 1.
pub fn mult_order(a: i64, p: i64) -> u64 {
    let mut ord = 1u64;
    let mut x = a.rem_euclid(p);
    while x != 1 {
        x = (x as i128 * a as i128).rem_euclid(p as i128) as i64;
        ord += 1;
        assert!(ord <= p as u64, "order search runaway");
    }
    ord
}

/// Miller-Rabin with deterministic witnesses valid for all u64.
pub fn is_prime_big(n: &Int) -> bool {
    use num_traits::ToPrimitive;
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    // Probabilistic for the rare > u64 case: fixed witness set.
    miller_rabin_big(n, &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41])
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    miller_rabin_big(&Int::from(n), &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37])
}

fn miller_rabin_big(n: &Int, witnesses: &[u64]) -> bool {
    let one = Int::one();
    let two = int(2);
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut r = 0u32;
    while (&d).is_even() {
        d /= &two;
        r += 1;
    }
    'next: for &w in witnesses {
        let a = Int::from(w) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'next;
            }
        }
        return false;
    }
    true
}

/// Sign of a rational as -1, 0, 1.
pub fn sign_rat(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod() {
        assert_eq!(inv_mod(-3, 5), Some(3));
        assert_eq!(inv_mod(4, 8), None);
        assert_eq!(inv_mod(11, 19), Some(7));
    }

    #[test]
    fn orders_and_primes() {
        assert_eq!(mult_order(11, 19), 3);
        assert!(is_prime_i64(61));
        assert!(!is_prime_i64(61741));
        assert!(is_prime_big(&Int::from(2129)));
        assert!(is_prime_power_i64(81));
        assert!(!is_prime_power_i64(21));
    }

    #[test]
    fn squares() {
        assert!(is_perfect_square(25));
        assert!(!is_perfect_square(21));
        assert!(is_perfect_square(0));
    }

    #[test]
    fn folding() {
        assert_eq!(fold_half(&rat(5, 6)), rat(1, 6));
        assert_eq!(frac_mod1(&rat(7, 5)), rat(2, 5));
        assert_eq!(frac_mod1(&rat(-1, 5)), rat(4, 5));
    }
}
