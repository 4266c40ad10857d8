//! Rigorous real and complex enclosures over exact rational endpoints.
//!
//! A [`RealBall`] stores a closed interval `[lo, hi]` with `BigRational`
//! endpoints. All arithmetic is exact on the endpoints, so soundness never
//! depends on rounding modes; [`RealBall::compress`] rounds endpoints
//! outward to dyadics of bounded size to keep coefficient growth in check.
//! Elementary functions (`ln`, `exp`, `sqrt`, `cos`, `sin`) enclose their
//! truncation error explicitly.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;
use std::cmp::Ordering;
use std::fmt;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(big(n), big(d))
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(big(n))
}

/// Approximate floor of log2 of a positive rational (within +-1).
fn floor_log2(x: &BigRational) -> i64 {
    debug_assert!(x.is_positive());
    let nb = x.numer().magnitude().bits() as i64;
    let db = x.denom().magnitude().bits() as i64;
    nb - db
}

/// Largest dyadic `k / 2^s` not exceeding `x`.
fn dyadic_floor(x: &BigRational, s: u32) -> BigRational {
    let scale = BigInt::one() << s;
    let k = (x.numer() * &scale).div_floor(x.denom());
    BigRational::new(k, scale)
}

/// Smallest dyadic `k / 2^s` not below `x`.
fn dyadic_ceil(x: &BigRational, s: u32) -> BigRational {
    let scale = BigInt::one() << s;
    let k = (x.numer() * &scale).div_ceil(x.denom());
    BigRational::new(k, scale)
}

/// A closed real interval with exact rational endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct RealBall {
    lo: BigRational,
    hi: BigRational,
}

impl fmt::Debug for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealBall[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(12))
    }
}

impl RealBall {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "invalid interval endpoints");
        RealBall { lo, hi }
    }

    pub fn exact(x: BigRational) -> Self {
        RealBall { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(rat_int(n))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::exact(BigRational::from_integer(n.clone()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn rad(&self) -> BigRational {
        (&self.hi - &self.lo) / rat_int(2)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certain comparison against an exact rational: `None` when the interval
    /// straddles `x`.
    pub fn cmp_rational(&self, x: &BigRational) -> Option<Ordering> {
        if &self.lo > x {
            Some(Ordering::Greater)
        } else if &self.hi < x {
            Some(Ordering::Less)
        } else if &self.lo == x && &self.hi == x {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RealBall::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        RealBall::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }

    pub fn neg(&self) -> Self {
        RealBall::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let cands = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RealBall::new(lo, hi)
    }

    pub fn mul_rational(&self, c: &BigRational) -> Self {
        if c.is_negative() {
            RealBall::new(&self.hi * c, &self.lo * c)
        } else {
            RealBall::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Interval square; tighter than `mul(self)` when the interval straddles 0.
    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            RealBall::new(BigRational::zero(), a.max(b))
        } else {
            RealBall::new(a.clone().min(b.clone()), a.max(b))
        }
    }

    /// Reciprocal; panics if the interval contains zero (callers must exclude it).
    pub fn recip(&self) -> Self {
        assert!(
            !self.contains_zero(),
            "reciprocal of an interval containing zero"
        );
        RealBall::new(self.hi.recip(), self.lo.recip())
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.recip())
    }

    pub fn abs(&self) -> Self {
        if self.lo.is_negative() && !self.hi.is_negative() {
            RealBall::new(BigRational::zero(), self.lo.abs().max(self.hi.abs()))
        } else if self.hi.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn max(&self, rhs: &Self) -> Self {
        RealBall::new(
            self.lo.clone().max(rhs.lo.clone()),
            self.hi.clone().max(rhs.hi.clone()),
        )
    }

    pub fn min(&self, rhs: &Self) -> Self {
        RealBall::new(
            self.lo.clone().min(rhs.lo.clone()),
            self.hi.clone().min(rhs.hi.clone()),
        )
    }

    /// `max(1, x)` as used by height products.
    pub fn max_one(&self) -> Self {
        self.max(&RealBall::one())
    }

    /// Integer power by repeated squaring with periodic compression.
    pub fn pow_u64(&self, e: u64, prec: u32) -> Self {
        let mut result = RealBall::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).compress(prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.square_keep_sign().compress(prec);
            }
        }
        result
    }

    /// Square used inside powering: preserves the sign information of the
    /// original interval (plain product, not the 0-clamped `square`).
    fn square_keep_sign(&self) -> Self {
        self.mul(self)
    }

    /// Round endpoints outward to dyadics with roughly `prec` significant bits.
    pub fn compress(&self, prec: u32) -> Self {
        let mag = {
            let a = self.lo.abs();
            let b = self.hi.abs();
            let m = a.max(b);
            if m.is_zero() {
                return self.clone();
            }
            floor_log2(&m)
        };
        let s = (prec as i64 - mag).clamp(8, 1 << 24) as u32;
        RealBall::new(dyadic_floor(&self.lo, s), dyadic_ceil(&self.hi, s))
    }

    /// Midpoint rendered as a decimal string with `digits` significant digits.
    /// Exact long division makes the output independent of platform floats.
    pub fn to_decimal(&self, digits: u32) -> String {
        let mid = self.mid();
        format_rational(&mid, digits)
    }

    pub fn to_f64(&self) -> f64 {
        use num::ToPrimitive;
        self.mid().to_f64().unwrap_or(f64::NAN)
    }
}

/// Deterministic decimal rendering of a rational with `digits` significant
/// digits (round half away from zero).
pub fn format_rational(x: &BigRational, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    // e10 = floor(log10(a))
    let mut e10: i64 = (floor_log2(&a) as f64 * 0.30102999566398119) as i64;
    let ten = rat_int(10);
    let mut p = pow_rat(&ten, e10);
    while &a >= &(&p * &ten) {
        p = &p * &ten;
        e10 += 1;
    }
    while &a < &p {
        p = &p / &ten;
        e10 -= 1;
    }
    // scaled = a * 10^(digits-1-e10), rounded to nearest integer
    let scale = pow_rat(&ten, digits as i64 - 1 - e10);
    let scaled = &a * &scale;
    let rounded = (scaled.numer() * big(2) + scaled.denom()).div_floor(&(scaled.denom() * big(2)));
    let mut mantissa = rounded.to_string();
    // rounding may carry to one extra digit
    if mantissa.len() > digits as usize {
        mantissa.truncate(digits as usize);
        e10 += 1;
    }
    let sign = if neg { "-" } else { "" };
    if e10 >= 0 && (e10 as usize) < digits as usize {
        let (int_part, frac_part) = mantissa.split_at(e10 as usize + 1);
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    } else if (-4..0).contains(&e10) {
        let zeros = "0".repeat((-e10 - 1) as usize);
        let frac = mantissa.trim_end_matches('0');
        format!("{sign}0.{zeros}{frac}")
    } else {
        let (head, tail) = mantissa.split_at(1);
        let tail = tail.trim_end_matches('0');
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }
}

fn pow_rat(x: &BigRational, e: i64) -> BigRational {
    if e < 0 {
        return pow_rat(x, -e).recip();
    }
    let mut r = BigRational::one();
    let mut b = x.clone();
    let mut e = e as u64;
    while e > 0 {
        if e & 1 == 1 {
            r = &r * &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    r
}

/// Enclosure of `ln 2`.
pub fn ln2(prec: u32) -> RealBall {
    // ln 2 = 2 atanh(1/3)
    atanh_small(&rat(1, 3), prec).mul_rational(&rat_int(2))
}

/// Enclosure of `pi` via Machin's formula.
pub fn pi(prec: u32) -> RealBall {
    let a = atan_small(&rat(1, 5), prec);
    let b = atan_small(&rat(1, 239), prec);
    a.mul_rational(&rat_int(16)).sub(&b.mul_rational(&rat_int(4)))
}

/// Enclosure of Euler's number `e`.
pub fn euler(prec: u32) -> RealBall {
    // sum 1/k! with remainder < 2/(N+1)!
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    let mut k: i64 = 0;
    let eps = small_eps(prec);
    loop {
        sum += &term;
        k += 1;
        term /= rat_int(k);
        if term < eps && k > 2 {
            break;
        }
    }
    let rem = &term * rat_int(2);
    RealBall::new(&sum - &rem, &sum + &rem).compress(prec + 8)
}

fn small_eps(prec: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << (prec + 8))
}

/// atanh(t) for |t| <= 1/3 by its power series (tail bounded geometrically).
fn atanh_small(t: &BigRational, prec: u32) -> RealBall {
    let eps = small_eps(prec);
    let t2 = t * t;
    let mut power = t.clone();
    let mut sum = BigRational::zero();
    let mut k: i64 = 0;
    loop {
        sum += &power / rat_int(2 * k + 1);
        power = &power * &t2;
        k += 1;
        if power.abs() < eps {
            break;
        }
    }
    // tail <= |t|^(2k+1)/(2k+1) * 1/(1 - t^2) <= 2 |power|
    let rem = power.abs() * rat_int(2);
    RealBall::new(&sum - &rem, &sum + &rem).compress(prec + 8)
}

/// atan(t) for |t| < 1 by the alternating series (tail bounded by first
/// omitted term).
fn atan_small(t: &BigRational, prec: u32) -> RealBall {
    let eps = small_eps(prec);
    let t2 = t * t;
    let mut power = t.clone();
    let mut sum = BigRational::zero();
    let mut k: i64 = 0;
    loop {
        let term = &power / rat_int(2 * k + 1);
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power = &power * &t2;
        k += 1;
        if power.abs() < eps {
            break;
        }
    }
    let rem = power.abs();
    RealBall::new(&sum - &rem, &sum + &rem).compress(prec + 8)
}

/// Rigorous enclosure of `ln x` for an exact positive rational.
pub fn ln_point(x: &BigRational, prec: u32) -> RealBall {
    assert!(x.is_positive(), "ln of a non-positive value");
    let mut y = x.clone();
    let mut k: i64 = 0;
    let three_half = rat(3, 2);
    let three_quarter = rat(3, 4);
    let two = rat_int(2);
    while y >= three_half {
        y = &y / &two;
        k += 1;
    }
    while y < three_quarter {
        y = &y * &two;
        k -= 1;
    }
    // ln y = 2 atanh((y-1)/(y+1)), argument in [-1/7, 1/5]
    let t = (&y - BigRational::one()) / (&y + BigRational::one());
    let core = atanh_small(&t, prec).mul_rational(&two);
    let l2 = ln2(prec).mul_rational(&rat_int(k));
    core.add(&l2).compress(prec + 8)
}

/// Monotone extension of `ln` to intervals with positive lower endpoint.
pub fn ln_ball(x: &RealBall, prec: u32) -> RealBall {
    assert!(
        x.lo().is_positive(),
        "ln of an interval touching the non-positive axis"
    );
    let lo = ln_point(x.lo(), prec);
    let hi = ln_point(x.hi(), prec);
    RealBall::new(lo.lo().clone(), hi.hi().clone())
}

/// Rigorous enclosure of `exp x` for moderate rational `x` (|x| <= 2^24).
pub fn exp_point(x: &BigRational, prec: u32) -> RealBall {
    assert!(
        x.abs() < BigRational::from_integer(BigInt::one() << 24),
        "exp argument too large; work in the log domain instead"
    );
    let l2 = ln2(prec + 16);
    // choose k ~ x / ln2 using exact floor against the midpoint
    let k_rat = x / l2.mid();
    let k = k_rat.floor().to_integer();
    let kr = BigRational::from_integer(k.clone());
    // r = x - k*ln2 lies within [-eps, ln2 + eps]
    let r = RealBall::exact(x.clone()).sub(&l2.mul_rational(&kr));
    let core = exp_series(&r, prec);
    let two_k = pow2_rational(&k);
    core.mul_rational(&two_k).compress(prec + 8)
}

fn pow2_rational(k: &BigInt) -> BigRational {
    use num::ToPrimitive;
    let ka = k.abs().to_u64().expect("exponent fits u64");
    assert!(ka <= (1 << 25), "dyadic exponent too large");
    let p = BigInt::one() << ka;
    if k.sign() == Sign::Minus {
        BigRational::new(BigInt::one(), p)
    } else {
        BigRational::from_integer(p)
    }
}

/// exp on a small interval (|r| <= 1) by Taylor series with explicit tail.
fn exp_series(r: &RealBall, prec: u32) -> RealBall {
    let eps = small_eps(prec);
    let rmax = r.lo().abs().max(r.hi().abs());
    assert!(rmax <= rat_int(1), "exp_series argument reduction failed");
    let mut term = RealBall::one();
    let mut sum = RealBall::zero();
    let mut k: i64 = 0;
    loop {
        sum = sum.add(&term);
        k += 1;
        term = term.mul(r).mul_rational(&rat(1, k)).compress(prec + 16);
        let tmax = term.lo().abs().max(term.hi().abs());
        if tmax < eps && k > 2 {
            break;
        }
    }
    // tail <= |term| * 1/(1 - rmax/(k+1)) <= 2 |term| once k >= 1
    let tmax = term.lo().abs().max(term.hi().abs()) * rat_int(2);
    sum.add(&RealBall::new(-tmax.clone(), tmax)).compress(prec + 8)
}

/// Monotone extension of `exp` to intervals.
pub fn exp_ball(x: &RealBall, prec: u32) -> RealBall {
    let lo = exp_point(x.lo(), prec);
    let hi = exp_point(x.hi(), prec);
    RealBall::new(lo.lo().clone(), hi.hi().clone())
}

/// Rigorous `sqrt` of a non-negative interval via integer square roots.
pub fn sqrt_ball(x: &RealBall, prec: u32) -> RealBall {
    assert!(
        !x.lo().is_negative(),
        "sqrt of an interval with negative lower endpoint"
    );
    RealBall::new(sqrt_down(x.lo(), prec), sqrt_up(x.hi(), prec))
}

fn sqrt_down(x: &BigRational, prec: u32) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    // sqrt(p/q) = sqrt(p q)/q; floor(sqrt(p q 4^s)) / (q 2^s) <= sqrt(p/q)
    let p = x.numer();
    let q = x.denom();
    let shifted = (p * q) << (2 * prec);
    let root = shifted.sqrt();
    BigRational::new(root, q << prec)
}

fn sqrt_up(x: &BigRational, prec: u32) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let p = x.numer();
    let q = x.denom();
    let shifted = (p * q) << (2 * prec);
    let root = shifted.sqrt() + BigInt::one();
    BigRational::new(root, q << prec)
}

/// cos on an interval |theta| < 7 by Taylor series with explicit tail.
pub fn cos_ball(theta: &RealBall, prec: u32) -> RealBall {
    sincos_series(theta, prec, true)
}

/// sin on an interval |theta| < 7 by Taylor series with explicit tail.
pub fn sin_ball(theta: &RealBall, prec: u32) -> RealBall {
    sincos_series(theta, prec, false)
}

fn sincos_series(theta: &RealBall, prec: u32, is_cos: bool) -> RealBall {
    let tmax = theta.lo().abs().max(theta.hi().abs());
    assert!(tmax < rat_int(7), "sincos argument reduction missing");
    let eps = small_eps(prec);
    let t2 = theta.square().compress(prec + 16);
    let mut term = if is_cos {
        RealBall::one()
    } else {
        theta.clone()
    };
    let mut sum = RealBall::zero();
    let mut k: i64 = 0;
    loop {
        if k % 2 == 0 {
            sum = sum.add(&term);
        } else {
            sum = sum.sub(&term);
        }
        k += 1;
        let denom = if is_cos {
            rat_int((2 * k - 1) * (2 * k)).recip()
        } else {
            rat_int((2 * k) * (2 * k + 1)).recip()
        };
        term = term.mul(&t2).mul_rational(&denom).compress(prec + 16);
        let mag = term.lo().abs().max(term.hi().abs());
        // once the term ratio is < 1/2 the tail is bounded by twice the term
        if mag < eps && rat_int((2 * k + 1) * (2 * k + 2)) > &tmax * &tmax * rat_int(2) {
            break;
        }
        if k > 4000 {
            panic!("sincos series failed to converge");
        }
    }
    let mag = term.lo().abs().max(term.hi().abs()) * rat_int(2);
    sum.add(&RealBall::new(-mag.clone(), mag)).compress(prec + 8)
}

/// Rectangular enclosure of a complex number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: RealBall,
    pub im: RealBall,
}

impl ComplexBall {
    pub fn new(re: RealBall, im: RealBall) -> Self {
        ComplexBall { re, im }
    }

    pub fn zero() -> Self {
        ComplexBall::new(RealBall::zero(), RealBall::zero())
    }

    pub fn from_rational(x: &BigRational) -> Self {
        ComplexBall::new(RealBall::exact(x.clone()), RealBall::zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ComplexBall::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ComplexBall::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        ComplexBall::new(re, im)
    }

    pub fn mul_rational(&self, c: &BigRational) -> Self {
        ComplexBall::new(self.re.mul_rational(c), self.im.mul_rational(c))
    }

    pub fn compress(&self, prec: u32) -> Self {
        ComplexBall::new(self.re.compress(prec), self.im.compress(prec))
    }

    /// Enclosure of the squared modulus.
    pub fn abs_sq(&self) -> RealBall {
        self.re.square().add(&self.im.square())
    }

    /// Enclosure of the modulus.
    pub fn abs(&self, prec: u32) -> RealBall {
        sqrt_ball(&self.abs_sq().compress(prec + 16), prec)
    }
}

/// Enclosure of `exp(2 pi i a / m)`, the canonical embedding of a root of
/// unity.
pub fn unit_root_embedding(m: u64, a: u64, prec: u32) -> ComplexBall {
    let a = a % m;
    let theta = pi(prec + 16)
        .mul_rational(&BigRational::new(big(2 * a as i64), big(m as i64)))
        .compress(prec + 16);
    ComplexBall::new(cos_ball(&theta, prec), sin_ball(&theta, prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(ball: &RealBall, expect: f64, tol: f64) {
        let v = ball.to_f64();
        assert!(
            (v - expect).abs() < tol,
            "expected {expect}, got {v} (ball {ball:?})"
        );
    }

    #[test]
    fn constants_enclose_reference_values() {
        close(&pi(96), std::f64::consts::PI, 1e-14);
        close(&ln2(96), std::f64::consts::LN_2, 1e-14);
        close(&euler(96), std::f64::consts::E, 1e-14);
    }

    #[test]
    fn ln_and_exp_roundtrip() {
        let x = rat(17, 5);
        let l = ln_point(&x, 128);
        close(&l, (17.0f64 / 5.0).ln(), 1e-14);
        let back = exp_ball(&l, 128);
        assert!(back.contains(&x), "exp(ln x) must enclose x");
        let e1 = exp_point(&rat_int(1), 128);
        close(&e1, std::f64::consts::E, 1e-14);
        let em = exp_point(&rat_int(-3), 128);
        close(&em, (-3.0f64).exp(), 1e-16);
    }

    #[test]
    fn sqrt_encloses() {
        let two = RealBall::from_int(2);
        let s = sqrt_ball(&two, 128);
        close(&s, std::f64::consts::SQRT_2, 1e-14);
        let prod = s.mul(&s);
        assert!(prod.contains(&rat_int(2)));
    }

    #[test]
    fn trig_on_known_angles() {
        let p = pi(128);
        close(&cos_ball(&p, 128), -1.0, 1e-14);
        close(&sin_ball(&p, 128), 0.0, 1e-14);
        let third = p.mul_rational(&rat(1, 3));
        close(&cos_ball(&third, 128), 0.5, 1e-14);
        close(&sin_ball(&third, 128), (3.0f64).sqrt() / 2.0, 1e-14);
    }

    #[test]
    fn unit_root_embedding_is_on_circle() {
        for (m, a) in [(1u64, 0u64), (4, 1), (5, 2), (8, 3), (12, 7)] {
            let z = unit_root_embedding(m, a, 96);
            let norm = z.abs_sq();
            assert!(norm.contains(&rat_int(1)), "|zeta|^2 must enclose 1");
            assert!(norm.width() < rat(1, 1 << 30));
        }
    }

    #[test]
    fn interval_arithmetic_soundness() {
        let a = RealBall::new(rat(1, 3), rat(1, 2));
        let b = RealBall::new(rat(-1, 4), rat(1, 5));
        let p = a.mul(&b);
        assert!(p.contains(&(rat(1, 3) * rat(-1, 4))));
        assert!(p.contains(&(rat(1, 2) * rat(1, 5))));
        let s = a.square();
        assert!(s.contains(&rat(1, 9)));
        assert!(!s.contains_zero());
        let c = RealBall::new(rat(-1, 2), rat(1, 3)).square();
        assert!(c.contains_zero());
    }

    #[test]
    fn compress_is_outward() {
        let x = RealBall::new(rat(1, 3), rat(1, 3));
        let c = x.compress(64);
        assert!(c.lo() <= x.lo() && c.hi() >= x.hi());
        assert!(c.width() < rat(1, 1i64 << 40));
    }

    #[test]
    fn decimal_formatting_is_stable() {
        assert_eq!(format_rational(&rat(1, 2), 6), "0.5");
        assert_eq!(format_rational(&rat(-355, 113), 10), "-3.14159292");
        assert_eq!(format_rational(&rat_int(1048576), 6), "1.04858e6");
        assert_eq!(format_rational(&rat_int(0), 6), "0");
        assert_eq!(format_rational(&rat(1, 1000), 4), "0.001");
        assert_eq!(format_rational(&rat(1, 10_000_000), 4), "1e-7");
    }
}
