//! Dense univariate polynomials over the rationals and integers.
//!
//! Coefficients ascend by degree and carry no trailing zeros. These helpers
//! back the cyclotomic-field layer: cyclotomic polynomials by recursive
//! division, exact division/remainder, and resultants used to cross-check
//! norms.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;

pub type RatPoly = Vec<BigRational>;
pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut RatPoly) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
}

pub fn is_zero(p: &[BigRational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn degree(p: &[BigRational]) -> usize {
    for i in (0..p.len()).rev() {
        if !p[i].is_zero() {
            return i;
        }
    }
    0
}

pub fn add(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x + y);
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if is_zero(a) || is_zero(b) {
        return vec![BigRational::zero()];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; the divisor's leading coefficient must be nonzero.
pub fn div_rem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    assert!(!is_zero(b), "polynomial division by zero");
    let db = degree(b);
    let lead_inv = b[db].recip();
    let mut rem: RatPoly = a.to_vec();
    trim(&mut rem);
    if degree(&rem) < db && !(db == 0 && !is_zero(&rem)) {
        if db == 0 {
            let q: RatPoly = rem.iter().map(|c| c * &lead_inv).collect();
            return (q, vec![BigRational::zero()]);
        }
        return (vec![BigRational::zero()], rem);
    }
    if db == 0 {
        let q: RatPoly = rem.iter().map(|c| c * &lead_inv).collect();
        return (q, vec![BigRational::zero()]);
    }
    let mut quot = vec![BigRational::zero(); degree(&rem).saturating_sub(db) + 1];
    while !is_zero(&rem) && degree(&rem) >= db {
        let dr = degree(&rem);
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        quot[shift] = c.clone();
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            let t = &c * bc;
            rem[shift + i] -= t;
        }
        trim(&mut rem);
        if dr == 0 {
            break;
        }
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Resultant of two rational polynomials via the Euclidean recurrence.
pub fn resultant(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    let mut acc = BigRational::one();
    loop {
        if is_zero(&b) {
            return if degree(&a) == 0 && !is_zero(&a) {
                // res(const, 0) only meaningful for deg a = 0: empty product
                acc
            } else {
                BigRational::zero()
            };
        }
        let da = degree(&a);
        let db = degree(&b);
        if db == 0 {
            // res(a, c) = c^deg(a)
            return acc * pow(&b[0], da as u64);
        }
        if da < db {
            if (da * db) % 2 == 1 {
                acc = -acc;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let (_, r) = div_rem(&a, &b);
        let dr = if is_zero(&r) { 0 } else { degree(&r) };
        if is_zero(&r) {
            return BigRational::zero();
        }
        // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc = acc * pow(&b[db], (da - dr) as u64);
        a = b;
        b = r;
    }
}

fn pow(x: &BigRational, e: u64) -> BigRational {
    let mut r = BigRational::one();
    let mut b = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            r = &r * &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    r
}

// ---- Integer polynomials ----

pub fn int_trim(p: &mut IntPoly) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division of integer polynomials (panics if not exact).
pub fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut rem: Vec<BigInt> = a.to_vec();
    int_trim(&mut rem);
    let db = b.len() - 1;
    assert!(!b[db].is_zero());
    let da = rem.len() - 1;
    assert!(da >= db);
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for shift in (0..=da - db).rev() {
        let idx = shift + db;
        if idx >= rem.len() {
            continue;
        }
        let (q, r) = rem[idx].div_rem(&b[db]);
        assert!(r.is_zero(), "non-exact integer polynomial division");
        if q.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &q * bc;
            rem[shift + i] -= t;
        }
        quot[shift] = q;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder");
    int_trim(&mut quot);
    quot
}

/// The m-th cyclotomic polynomial, by recursive division of `X^m - 1` by all
/// `Phi_d` with `d | m`, `d < m`.
pub fn cyclotomic(m: u64) -> IntPoly {
    assert!(m >= 1);
    if m == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // X^m - 1
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    let mut result = num;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic(d);
            result = int_div_exact(&result, &phi_d);
        }
    }
    result
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Multiplicative order of `a` modulo `n` (requires gcd(a, n) = 1; n = 1
/// yields 1).
pub fn mult_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    assert_eq!(num::integer::gcd(a, n), 1);
    let mut x = a % n;
    let mut ord = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % n as u128) as u64;
        ord += 1;
    }
    ord
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ip(coeffs: &[i64]) -> IntPoly {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Independent route: Phi_m(X) = prod_{d | m} (X^{m/d} - 1)^{mu(d)},
    /// computed over the rationals.
    fn cyclotomic_by_moebius(m: u64) -> IntPoly {
        fn moebius(mut n: u64) -> i64 {
            let mut count = 0;
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    n /= p;
                    if n % p == 0 {
                        return 0;
                    }
                    count += 1;
                }
                p += 1;
            }
            if n > 1 {
                count += 1;
            }
            if count % 2 == 0 {
                1
            } else {
                -1
            }
        }
        let mut num: RatPoly = vec![r(1)];
        let mut den: RatPoly = vec![r(1)];
        for d in 1..=m {
            if m % d != 0 {
                continue;
            }
            let e = m / d;
            let mut f = vec![r(0); e as usize + 1];
            f[0] = r(-1);
            f[e as usize] = r(1);
            match moebius(d) {
                1 => num = mul(&num, &f),
                -1 => den = mul(&den, &f),
                _ => {}
            }
        }
        let (q, rem) = div_rem(&num, &den);
        assert!(is_zero(&rem));
        q.iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }

    #[test]
    fn cyclotomic_small_values() {
        assert_eq!(cyclotomic(1), ip(&[-1, 1]));
        assert_eq!(cyclotomic(2), ip(&[1, 1]));
        assert_eq!(cyclotomic(4), ip(&[1, 0, 1]));
        assert_eq!(cyclotomic(5), ip(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(6), ip(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), ip(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_matches_moebius_product() {
        for m in 1..=36 {
            assert_eq!(cyclotomic(m), cyclotomic_by_moebius(m), "m = {m}");
            assert_eq!(cyclotomic(m).len() as u64 - 1, euler_phi(m));
        }
    }

    #[test]
    fn division_and_resultant() {
        // res(x^2 + 1, x - 2) = 5 (value of x^2+1 at 2)
        let a = vec![r(1), r(0), r(1)];
        let b = vec![r(-2), r(1)];
        assert_eq!(resultant(&a, &b), r(5));
        // res(x^2 - 1, x^2 - 4) = (1-4)(1-4)... = prod over roots +-1 of (x^2-4) = (-3)(-3) = 9
        let c = vec![r(-1), r(0), r(1)];
        let d = vec![r(-4), r(0), r(1)];
        assert_eq!(resultant(&c, &d), r(9));
        // shared root -> 0
        let e = vec![r(-1), r(1)];
        let f = vec![r(-1), r(0), r(1)];
        assert_eq!(resultant(&f, &e), r(0));
    }

    #[test]
    fn mult_order_values() {
        assert_eq!(mult_order(3, 4), 2);
        assert_eq!(mult_order(2, 5), 4);
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(mult_order(7, 1), 1);
    }
}
