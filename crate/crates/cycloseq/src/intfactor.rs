//! Budgeted integer factorization: trial division, deterministic
//! Miller-Rabin, Pollard p-1, and Brent's cycle variant of Pollard rho over
//! two-limb Montgomery arithmetic.
//!
//! The rho budget is counted in iterations, not wall time, so identical
//! inputs produce identical outcomes regardless of worker count. Exhausting
//! the budget leaves explicit unfactored cofactors rather than silently
//! truncating.

use num::bigint::BigUint;
use num::integer::Roots;
use num::traits::{One, ToPrimitive, Zero};
use num::Integer;
use std::collections::BTreeMap;
use std::sync::OnceLock;

const TRIAL_BOUND: u32 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut p = 2usize;
        while p * p <= n {
            if sieve[p] {
                let mut q = p * p;
                while q <= n {
                    sieve[q] = false;
                    q += p;
                }
            }
            p += 1;
        }
        (2..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// Iteration budget shared across one factorization task.
#[derive(Debug, Clone)]
pub struct Budget {
    pub rho_iterations: u64,
}

impl Budget {
    pub fn new(rho_iterations: u64) -> Self {
        Budget { rho_iterations }
    }

    fn consume(&mut self, amount: u64) -> bool {
        if self.rho_iterations >= amount {
            self.rho_iterations -= amount;
            true
        } else {
            self.rho_iterations = 0;
            false
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        // enough for ~10^16-scale smallest prime factors
        Budget::new(2_000_000_000)
    }
}

/// Result of a budgeted factorization: prime factors with multiplicity and
/// any composite cofactors left unfactored when the budget ran out.
#[derive(Debug, Clone)]
pub struct FactorOutcome {
    pub factors: BTreeMap<BigUint, u32>,
    pub unfactored: Vec<BigUint>,
}

impl FactorOutcome {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_empty()
    }
}

// ---- two-limb (u128) modular arithmetic ----

fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = (a >> 64, a & u64::MAX as u128);
    let (b1, b0) = (b >> 64, b & u64::MAX as u128);
    let ll = a0 * b0;
    let lh = a0 * b1;
    let hl = a1 * b0;
    let hh = a1 * b1;
    let mid = (ll >> 64) + (lh & u64::MAX as u128) + (hl & u64::MAX as u128);
    let lo = (mid << 64) | (ll & u64::MAX as u128);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (hi, lo)
}

/// Montgomery context for an odd modulus below 2^126.
struct Mont {
    n: u128,
    n_neg_inv: u128,
    r2: u128,
    one: u128,
}

impl Mont {
    fn new(n: u128) -> Mont {
        debug_assert!(n & 1 == 1 && n >> 126 == 0);
        // Newton iteration for n^{-1} mod 2^128
        let mut inv: u128 = 1;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let n_neg_inv = inv.wrapping_neg();
        let r2 = ((BigUint::one() << 256u32) % BigUint::from(n))
            .to_u128()
            .unwrap();
        let mut m = Mont {
            n,
            n_neg_inv,
            r2,
            one: 0,
        };
        m.one = m.to_mont(1);
        m
    }

    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.n_neg_inv);
        let (mn_hi, mn_lo) = mul_wide(m, self.n);
        let carry = u128::from(lo != 0 || mn_lo != 0) & u128::from(lo.wrapping_add(mn_lo) == 0);
        // lo + mn_lo is 0 mod 2^128 by construction; carry is 1 unless both are 0
        let mut t = hi + mn_hi + carry;
        if t >= self.n {
            t -= self.n;
        }
        t
    }

    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.redc(hi, lo)
    }

    fn to_mont(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    fn from_mont(&self, a: u128) -> u128 {
        self.redc(0, a)
    }

    fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }

    fn pow(&self, base_mont: u128, mut e: u128) -> u128 {
        let mut acc = self.one;
        let mut b = base_mont;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

// ---- primality ----

/// Miller-Rabin with the 12-base set that is deterministic below
/// 3.317e24; larger inputs additionally run a fixed extended base set
/// (probabilistic in principle, deterministic as a function).
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    let primary: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &primary {
        let pb = BigUint::from(p);
        if n == &pb {
            return true;
        }
        if (n % pb).is_zero() {
            return false;
        }
    }
    let deterministic_bound = BigUint::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    let extended: [u32; 13] = [41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];
    let mut bases: Vec<u32> = primary.to_vec();
    if n >= &deterministic_bound {
        bases.extend_from_slice(&extended);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'bases: for &a in &bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

// ---- rho and p-1 ----

/// Brent's variant of Pollard rho on a u128 modulus. Returns a nontrivial
/// factor or `None` if the budget ran out first.
fn rho_brent_u128(n: u128, c: u128, budget: &mut Budget) -> Option<u128> {
    debug_assert!(n & 1 == 1 && n > 3);
    let mont = Mont::new(n);
    let c_m = mont.to_mont(c);
    let step = |x: u128| mont.add(mont.mul(x, x), c_m);
    let mut y = mont.to_mont(2);
    let mut r: u64 = 1;
    let mut q = mont.one;
    let mut g: u128 = 1;
    let mut x = y;
    let mut ys = y;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        if !budget.consume(r) {
            return None;
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let lim = BATCH.min(r - k);
            for _ in 0..lim {
                y = step(y);
                let diff = if x >= y { x - y } else { y - x };
                q = mont.mul(q, diff.max(1));
            }
            g = gcd_u128(mont.from_mont(q), n);
            if !budget.consume(lim) {
                return None;
            }
            k += lim;
        }
        r *= 2;
    }
    if g == n {
        // backtrack one step at a time
        loop {
            ys = step(ys);
            let diff = if x >= ys { x - ys } else { ys - x };
            g = gcd_u128(mont.from_mont(diff.max(1)), n);
            if g > 1 {
                break;
            }
            if !budget.consume(1) {
                return None;
            }
        }
    }
    if g > 1 && g < n {
        Some(g)
    } else {
        None
    }
}

/// Pollard rho for moduli that do not fit the fast path.
fn rho_big(n: &BigUint, c: u32, budget: &mut Budget) -> Option<BigUint> {
    let one = BigUint::one();
    let cb = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &cb) % n;
    let mut x = BigUint::from(2u32);
    let mut y = x.clone();
    let mut q = BigUint::one();
    loop {
        if !budget.consume(1) {
            return None;
        }
        x = f(&x);
        y = f(&f(&y));
        let diff = if x >= y { &x - &y } else { &y - &x };
        if diff.is_zero() {
            return None;
        }
        q = (q * diff) % n;
        if budget.rho_iterations % 128 == 0 {
            let g = q.gcd(n);
            if g > one && &g < n {
                return Some(g);
            }
            if g == *n {
                return None;
            }
        }
    }
}

/// Pollard p-1 stage 1 with bound `b1`.
fn pollard_pm1_u128(n: u128, b1: u32, budget: &mut Budget) -> Option<u128> {
    let mont = Mont::new(n);
    let mut a = mont.to_mont(2);
    for &p in small_primes() {
        if p > b1 {
            break;
        }
        let mut pk = p as u128;
        while pk <= (b1 as u128) * (p as u128) / p as u128 {
            let next = pk.checked_mul(p as u128);
            match next {
                Some(v) if v <= b1 as u128 => pk = v,
                _ => break,
            }
        }
        a = mont.pow(a, pk);
        if !budget.consume(1) {
            return None;
        }
    }
    let am1 = if a >= mont.one {
        a - mont.one
    } else {
        a + n - mont.one
    };
    let g = gcd_u128(mont.from_mont(am1), n);
    if g > 1 && g < n {
        Some(g)
    } else {
        None
    }
}

/// Strip exact k-th powers; returns (base, k) with k maximal.
fn perfect_power(n: &BigUint) -> (BigUint, u32) {
    let bits = n.bits();
    for k in (2..=bits.min(80) as u32).rev() {
        let root = n.nth_root(k);
        if root.pow(k) == *n {
            let (b, k2) = perfect_power(&root);
            return (b, k * k2);
        }
    }
    (n.clone(), 1)
}

/// Budgeted factorization of a positive integer.
pub fn factor(n: &BigUint, budget: &mut Budget) -> FactorOutcome {
    let mut factors: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut unfactored: Vec<BigUint> = Vec::new();
    if n.is_zero() {
        panic!("factor(0) is undefined");
    }
    let mut rest = n.clone();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut count = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            count += 1;
        }
        if count > 0 {
            factors.insert(pb, count);
        }
    }
    if rest.is_one() {
        return FactorOutcome {
            factors,
            unfactored,
        };
    }
    let mut stack = vec![(rest, 1u32)];
    while let Some((c, mult)) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if is_prime(&c) {
            *factors.entry(c).or_insert(0) += mult;
            continue;
        }
        let (base, k) = perfect_power(&c);
        if k > 1 {
            stack.push((base, mult * k));
            continue;
        }
        if budget.rho_iterations == 0 {
            unfactored.push(c);
            continue;
        }
        let found = split_composite(&c, budget);
        match found {
            Some(g) => {
                let other = &c / &g;
                stack.push((g, mult));
                stack.push((other, mult));
            }
            None => unfactored.push(c),
        }
    }
    unfactored.sort();
    FactorOutcome {
        factors,
        unfactored,
    }
}

fn split_composite(c: &BigUint, budget: &mut Budget) -> Option<BigUint> {
    if let Some(c128) = c.to_u128() {
        if c128 >> 126 == 0 {
            if c128 & 1 == 0 {
                return Some(BigUint::from(2u32));
            }
            if let Some(g) = pollard_pm1_u128(c128, 100_000, budget) {
                return Some(BigUint::from(g));
            }
            for attempt in 0..32u128 {
                if budget.rho_iterations == 0 {
                    return None;
                }
                if let Some(g) = rho_brent_u128(c128, 2 * attempt + 1, budget) {
                    return Some(BigUint::from(g));
                }
            }
            return None;
        }
    }
    for attempt in 0..8u32 {
        if budget.rho_iterations == 0 {
            return None;
        }
        if let Some(g) = rho_big(c, 2 * attempt + 1, budget) {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> BigUint {
        BigUint::parse_bytes(s.as_bytes(), 10).unwrap()
    }

    #[test]
    fn montgomery_matches_bigint() {
        let moduli: [u128; 4] = [
            1_000_000_007,
            0xffff_ffff_ffff_ffc5,
            519005348245813515560209090767210289,
            (1u128 << 125) + 111,
        ];
        for &m in &moduli {
            let mont = Mont::new(m);
            let mb = BigUint::from(m);
            let samples: [u128; 5] = [1, 2, 12345, m - 1, m / 2 + 3];
            for &a in &samples {
                for &b in &samples {
                    let am = mont.to_mont(a);
                    let bm = mont.to_mont(b);
                    let got = mont.from_mont(mont.mul(am, bm));
                    let want = (BigUint::from(a) * BigUint::from(b)) % &mb;
                    assert_eq!(BigUint::from(got), want, "a={a} b={b} m={m}");
                }
            }
            // powers
            let am = mont.to_mont(7);
            let got = mont.from_mont(mont.pow(am, 1_000_003));
            let want = BigUint::from(7u32).modpow(&BigUint::from(1_000_003u32), &mb);
            assert_eq!(BigUint::from(got), want);
        }
    }

    #[test]
    fn primality_known_values() {
        assert!(is_prime(&n("2")));
        assert!(is_prime(&n("97")));
        assert!(!is_prime(&n("1")));
        assert!(!is_prime(&n("561"))); // Carmichael
        assert!(is_prime(&n("2305843009213693951"))); // 2^61 - 1
        assert!(!is_prime(&n("2305843009213693953")));
        assert!(is_prime(&n("170141183460469231731687303715884105727"))); // 2^127 - 1
        // strong pseudoprime to base 2
        assert!(!is_prime(&n("2047")));
    }

    #[test]
    fn factor_small_and_medium() {
        let mut b = Budget::default();
        let out = factor(&n("72"), &mut b);
        assert!(out.is_complete());
        assert_eq!(out.factors.get(&n("2")), Some(&3));
        assert_eq!(out.factors.get(&n("3")), Some(&2));

        let out = factor(&n("1"), &mut Budget::default());
        assert!(out.is_complete() && out.factors.is_empty());

        // 2^59 + 1 = 3 * 2833 * 37171 * 1824726041
        let out = factor(&n("576460752303423489"), &mut Budget::default());
        assert!(out.is_complete());
        assert_eq!(out.factors.get(&n("1824726041")), Some(&1));

        // 2^47 + 1 = 3 * 283 * 165768537521
        let out = factor(&n("140737488355329"), &mut Budget::default());
        assert!(out.is_complete());
        assert_eq!(out.factors.get(&n("165768537521")), Some(&1));

        // perfect power
        let out = factor(&n("1000000014000000049"), &mut Budget::default()); // (10^9+7)^2
        assert!(out.is_complete());
        assert_eq!(out.factors.get(&n("1000000007")), Some(&2));
    }

    #[test]
    fn factor_runs_out_of_budget_gracefully() {
        // product of two 19-digit primes; a tiny budget cannot split it
        let hard = n("2305843009213693951") * n("4611686018427387847");
        let mut b = Budget::new(500);
        let out = factor(&hard, &mut b);
        assert!(!out.is_complete());
        assert_eq!(out.unfactored.len(), 1);
        assert_eq!(out.unfactored[0], hard);
    }

    #[test]
    fn factor_hard_semiprime_with_full_budget() {
        // 17-digit x 20-digit primes (the hardest cofactor in the Gaussian
        // growth harness)
        let p = n("22291109969132129");
        let q = n("23283064368015417041");
        let hard = &p * &q;
        let mut b = Budget::default();
        let out = factor(&hard, &mut b);
        assert!(out.is_complete(), "budget left: {}", b.rho_iterations);
        assert_eq!(out.factors.get(&p), Some(&1));
        assert_eq!(out.factors.get(&q), Some(&1));
    }
}
