//! Prime-ideal arithmetic in `Z[zeta_m]`.
//!
//! `Z[zeta_m]` is the maximal order of `Q(zeta_m)`, so Kummer-Dedekind
//! applies at every rational prime: the ideals above `p` correspond to the
//! monic irreducible factors of the cyclotomic polynomial modulo `p`, with
//! the standard reduction `Phi_m = Phi_{m0}^(phi(m)/phi(m0)) mod p` when
//! `p | m` (`m0` the p-free part of `m`).
//!
//! Valuations divide by an anti-uniformizer `theta = u(zeta)/p` with
//! `v_P(theta) = -1` and non-negative valuation at every other prime; `u`
//! is any vector in the kernel of multiplication by `g(zeta)` on
//! `Z[zeta_m]/p`, which realizes `theta` in `P^(-1) \ Z[zeta_m]` without a
//! uniformizer search.

use crate::cyclo::{norm, CycloElem, CycloField};
use crate::error::IdealError;
use crate::intfactor::{self, Budget};
use crate::ratpoly;
use num::bigint::{BigInt, BigUint};
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::Integer;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// A prime ideal `(p, g(zeta))` of `Z[zeta_m]` with residue data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeIdeal {
    /// The rational prime below.
    pub p: BigUint,
    /// Monic irreducible factor of the cyclotomic polynomial modulo `p`
    /// (ascending coefficients in `[0, p)`), defining the ideal.
    pub gen_poly: Vec<BigUint>,
    /// Residue degree.
    pub f: u32,
    /// Ramification index.
    pub e: u32,
    /// Conductor of the ambient field.
    pub m: u64,
}

impl PrimeIdeal {
    /// `N(P) = p^f`.
    pub fn ideal_norm(&self) -> BigUint {
        self.p.pow(self.f)
    }
}

impl fmt::Display for PrimeIdeal {
    /// Wire format `p:f:e:c0,c1,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.gen_poly.iter().map(|c| c.to_string()).collect();
        write!(f, "{}:{}:{}:{}", self.p, self.f, self.e, coeffs.join(","))
    }
}

/// Factorization of the principal ideal generated by an algebraic integer.
#[derive(Debug, Clone)]
pub struct IdealFactorization {
    pub element: CycloElem,
    /// `(P, v_P)` pairs with positive valuation, sorted by ideal.
    pub factors: Vec<(PrimeIdeal, u32)>,
    /// `|N(element)|`.
    pub norm_abs: BigUint,
    /// False when the integer-factorization budget ran out.
    pub complete: bool,
    /// Composite cofactors of the norm that remained unfactored.
    pub unfactored: Vec<BigUint>,
}

/// The S-supported part of a factorization and its cofactor.
#[derive(Debug, Clone)]
pub struct SPartResult {
    /// `N([alpha]_S)`.
    pub s_part_norm: BigUint,
    /// `N(a)` for the cofactor ideal coprime to S.
    pub cofactor_norm: BigUint,
    /// Exponent of every ideal in S (zeros included).
    pub exponents: Vec<(PrimeIdeal, u32)>,
}

// ---- polynomial arithmetic over F_p ----

type ModPoly = Vec<BigUint>;

fn pm_trim(p: &mut ModPoly) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn pm_is_zero(p: &[BigUint]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn mod_inv(a: &BigUint, p: &BigUint) -> BigUint {
    let a = BigInt::from(a.clone());
    let p = BigInt::from(p.clone());
    let e = a.extended_gcd(&p);
    debug_assert!(e.gcd.is_one());
    let inv = e.x.mod_floor(&p);
    inv.to_biguint().unwrap()
}

fn pm_mul(a: &[BigUint], b: &[BigUint], p: &BigUint) -> ModPoly {
    if pm_is_zero(a) || pm_is_zero(b) {
        return vec![BigUint::zero()];
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = (&out[i + j] + x * y) % p;
        }
    }
    pm_trim(&mut out);
    out
}

fn pm_rem(a: &[BigUint], b: &[BigUint], p: &BigUint) -> ModPoly {
    let mut rem: ModPoly = a.to_vec();
    pm_trim(&mut rem);
    let db = b.len() - 1;
    debug_assert!(!b[db].is_zero());
    let lead_inv = mod_inv(&b[db], p);
    while rem.len() > db && !pm_is_zero(&rem) {
        let dr = rem.len() - 1;
        if rem[dr].is_zero() {
            rem.pop();
            continue;
        }
        let c = (&rem[dr] * &lead_inv) % p;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            let sub = (&c * bc) % p;
            let cur = &rem[shift + i];
            rem[shift + i] = ((cur + p) - sub) % p;
        }
        pm_trim(&mut rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    pm_trim(&mut rem);
    rem
}

fn pm_make_monic(a: &mut ModPoly, p: &BigUint) {
    pm_trim(a);
    let lead = a.last().unwrap().clone();
    if lead.is_one() || lead.is_zero() {
        return;
    }
    let inv = mod_inv(&lead, p);
    for c in a.iter_mut() {
        *c = (&*c * &inv) % p;
    }
}

fn pm_gcd(a: &[BigUint], b: &[BigUint], p: &BigUint) -> ModPoly {
    let mut x: ModPoly = a.to_vec();
    let mut y: ModPoly = b.to_vec();
    pm_trim(&mut x);
    pm_trim(&mut y);
    while !pm_is_zero(&y) {
        let r = pm_rem(&x, &y, p);
        x = y;
        y = r;
    }
    pm_make_monic(&mut x, p);
    x
}

fn pm_powmod(base: &[BigUint], exp: &BigUint, modulus: &[BigUint], p: &BigUint) -> ModPoly {
    let mut acc: ModPoly = vec![BigUint::one()];
    let mut b = pm_rem(base, modulus, p);
    let bits = exp.bits();
    for i in 0..bits {
        if exp.bit(i) {
            acc = pm_rem(&pm_mul(&acc, &b, p), modulus, p);
        }
        if i + 1 < bits {
            b = pm_rem(&pm_mul(&b, &b, p), modulus, p);
        }
    }
    acc
}

fn pm_sub(a: &[BigUint], b: &[BigUint], p: &BigUint) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(((x + p) - y) % p);
    }
    pm_trim(&mut out);
    out
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn next_mod(&mut self, p: &BigUint) -> BigUint {
        let words = (p.bits() / 64 + 1) as usize;
        let mut acc = BigUint::zero();
        for _ in 0..words {
            acc = (acc << 64u32) + BigUint::from(self.next());
        }
        acc % p
    }
}

/// Cantor-Zassenhaus equal-degree factorization of a squarefree polynomial
/// whose irreducible factors all have degree `f`.
fn equal_degree_factor(v: ModPoly, f: usize, p: &BigUint, rng: &mut Lcg) -> Vec<ModPoly> {
    let deg = v.len() - 1;
    if deg == f {
        return vec![v];
    }
    debug_assert!(deg % f == 0);
    loop {
        let mut a: ModPoly = (0..deg).map(|_| rng.next_mod(p)).collect();
        pm_trim(&mut a);
        if pm_is_zero(&a) {
            continue;
        }
        let shared = pm_gcd(&v, &a, p);
        let candidate = if shared.len() > 1 && shared.len() < v.len() {
            shared
        } else if p.bit(0) && p > &BigUint::from(2u32) {
            // odd p: gcd(v, a^((p^f - 1)/2) - 1)
            let e = (p.pow(f as u32) - BigUint::one()) >> 1;
            let b = pm_powmod(&a, &e, &v, p);
            let b1 = pm_sub(&b, &[BigUint::one()], p);
            pm_gcd(&v, &b1, p)
        } else {
            // p = 2: trace map sum_{i<f} a^(2^i)
            let mut t: ModPoly = vec![BigUint::zero()];
            let mut power = pm_rem(&a, &v, p);
            for _ in 0..f {
                t = {
                    let mut s = vec![BigUint::zero(); t.len().max(power.len())];
                    for (i, c) in t.iter().enumerate() {
                        s[i] = (&s[i] + c) % p;
                    }
                    for (i, c) in power.iter().enumerate() {
                        s[i] = (&s[i] + c) % p;
                    }
                    pm_trim(&mut s);
                    s
                };
                power = pm_rem(&pm_mul(&power, &power, p), &v, p);
            }
            pm_gcd(&v, &t, p)
        };
        if candidate.len() > 1 && candidate.len() < v.len() {
            let mut left = equal_degree_factor(candidate.clone(), f, p, rng);
            let quotient = pm_div_exact(&v, &candidate, p);
            let right = equal_degree_factor(quotient, f, p, rng);
            left.extend(right);
            return left;
        }
    }
}

fn pm_div_exact(a: &[BigUint], b: &[BigUint], p: &BigUint) -> ModPoly {
    let db = b.len() - 1;
    let da = a.len() - 1;
    let lead_inv = mod_inv(&b[db], p);
    let mut rem: ModPoly = a.to_vec();
    let mut quot = vec![BigUint::zero(); da - db + 1];
    for shift in (0..=da - db).rev() {
        let idx = shift + db;
        if idx >= rem.len() || rem[idx].is_zero() {
            continue;
        }
        let c = (&rem[idx] * &lead_inv) % p;
        quot[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let sub = (&c * bc) % p;
            let cur = &rem[shift + i];
            rem[shift + i] = ((cur + p) - sub) % p;
        }
    }
    debug_assert!(pm_is_zero(&rem), "non-exact division mod p");
    pm_trim(&mut quot);
    quot
}

// ---- splitting ----

fn split_cache() -> &'static Mutex<HashMap<(u64, BigUint), Arc<Vec<PrimeIdeal>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, BigUint), Arc<Vec<PrimeIdeal>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Splitting of the rational prime `p` in `Z[zeta_m]`. Results are memoized
/// per `(m, p)`; the ideal list is sorted canonically by generator.
pub fn split_prime(field: &Arc<CycloField>, p: &BigUint) -> Arc<Vec<PrimeIdeal>> {
    let key = (field.m, p.clone());
    if let Some(hit) = split_cache().lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let ideals = Arc::new(split_prime_uncached(field, p));
    split_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::clone(&ideals));
    ideals
}

fn split_prime_uncached(field: &Arc<CycloField>, p: &BigUint) -> Vec<PrimeIdeal> {
    let m = field.m;
    // p-free part of m
    let mut m0 = m;
    if let Some(p_small) = p.to_u64() {
        if p_small <= m {
            while m0 % p_small == 0 {
                m0 /= p_small;
            }
        }
    }
    let phi_m = ratpoly::euler_phi(m);
    let phi_m0 = ratpoly::euler_phi(m0);
    let e = (phi_m / phi_m0) as u32;
    let p_mod_m0 = (p % BigUint::from(m0)).to_u64().unwrap();
    let f = ratpoly::mult_order(p_mod_m0, m0) as usize;
    // Phi_{m0} reduced mod p
    let phi_poly = ratpoly::cyclotomic(m0);
    let p_int = BigInt::from(p.clone());
    let reduced: ModPoly = phi_poly
        .iter()
        .map(|c| c.mod_floor(&p_int).to_biguint().unwrap())
        .collect();
    let mut v = reduced;
    pm_trim(&mut v);
    pm_make_monic(&mut v, p);
    let mut rng = Lcg(0x9E3779B97F4A7C15u64 ^ (m.wrapping_mul(0xD1B54A32D192ED03)) ^ hash_big(p));
    let mut factors = equal_degree_factor(v, f, p, &mut rng);
    factors.sort();
    debug_assert_eq!(factors.len() as u64, phi_m0 / f as u64);
    factors
        .into_iter()
        .map(|g| PrimeIdeal {
            p: p.clone(),
            gen_poly: g,
            f: f as u32,
            e,
            m,
        })
        .collect()
}

fn hash_big(p: &BigUint) -> u64 {
    p.iter_u64_digits().fold(0u64, |acc, d| {
        acc.wrapping_mul(0x100000001B3).wrapping_add(d)
    })
}

// ---- membership and valuation ----

fn integer_coords(beta: &CycloElem) -> Result<Vec<BigInt>, IdealError> {
    if !beta.is_integral() {
        return Err(IdealError::NonIntegral);
    }
    Ok(beta.coords().iter().map(|c| c.to_integer()).collect())
}

/// Reduce `beta` modulo `(p, g(zeta))`: true when `beta` is in the ideal.
pub fn in_ideal(beta: &CycloElem, ideal: &PrimeIdeal) -> Result<bool, IdealError> {
    let coords = integer_coords(beta)?;
    let p_int = BigInt::from(ideal.p.clone());
    let mut poly: ModPoly = coords
        .iter()
        .map(|c| c.mod_floor(&p_int).to_biguint().unwrap())
        .collect();
    pm_trim(&mut poly);
    let r = pm_rem(&poly, &ideal.gen_poly, &ideal.p);
    Ok(pm_is_zero(&r))
}

/// Kernel vector of multiplication by `g(zeta)` on `Z[zeta_m]/p`, realizing
/// the anti-uniformizer `u(zeta)/p`.
fn anti_uniformizer_numerator(field: &Arc<CycloField>, ideal: &PrimeIdeal) -> CycloElem {
    let d = field.degree;
    let p = &ideal.p;
    let p_int = BigInt::from(p.clone());
    // g(zeta) as a field element
    let g_elem = CycloElem::new(
        Arc::clone(field),
        ideal
            .gen_poly
            .iter()
            .map(|c| num::rational::BigRational::from_integer(BigInt::from(c.clone())))
            .collect(),
    );
    // columns: coordinates of g(zeta) * zeta^j mod p
    let mut mat: Vec<Vec<BigUint>> = Vec::with_capacity(d);
    for j in 0..d {
        let zj = CycloElem::zeta_pow_of(Arc::clone(field), j as u64);
        let col = g_elem.mul(&zj);
        let coords: Vec<BigUint> = col
            .coords()
            .iter()
            .map(|c| c.to_integer().mod_floor(&p_int).to_biguint().unwrap())
            .collect();
        mat.push(coords);
    }
    // row-reduce the d x d matrix (columns = mat[j]) to find a kernel vector
    let mut rows: Vec<Vec<BigUint>> = (0..d)
        .map(|i| (0..d).map(|j| mat[j][i].clone()).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; d];
    let mut rank = 0usize;
    for col in 0..d {
        let mut pivot = None;
        for r in rank..d {
            if !rows[r][col].is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        rows.swap(rank, pr);
        let inv = mod_inv(&rows[rank][col], p);
        for c in 0..d {
            rows[rank][c] = (&rows[rank][c] * &inv) % p;
        }
        for r in 0..d {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..d {
                    let sub = (&factor * &rows[rank][c]) % p;
                    rows[r][c] = ((&rows[r][c] + p) - sub) % p;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    // first free column gives a kernel vector
    let free_col = pivot_of_col
        .iter()
        .position(|pv| pv.is_none())
        .expect("multiplication by a generator of a proper ideal must be singular mod p");
    let mut u = vec![BigUint::zero(); d];
    u[free_col] = BigUint::one();
    for (col, pv) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pv {
            // x_col = -rows[r][free_col]
            let val = rows[*r][free_col].clone();
            if !val.is_zero() {
                u[col] = p - val;
            }
        }
    }
    CycloElem::new(
        Arc::clone(field),
        u.into_iter()
            .map(|c| num::rational::BigRational::from_integer(BigInt::from(c)))
            .collect(),
    )
}

/// `v_P(beta)` for a nonzero algebraic integer: repeated exact division by
/// the anti-uniformizer.
pub fn valuation(beta: &CycloElem, ideal: &PrimeIdeal) -> Result<u32, IdealError> {
    if beta.is_zero() {
        return Err(IdealError::ZeroElement);
    }
    let coords = integer_coords(beta)?;
    let field = beta.field();
    assert_eq!(field.m, ideal.m, "ideal belongs to a different field");
    let u = anti_uniformizer_numerator(field, ideal);
    let p_int = BigInt::from(ideal.p.clone());
    let mut current = coords;
    let mut v = 0u32;
    loop {
        // multiply by u(zeta) and test exact divisibility of all coordinates by p
        let elem = CycloElem::new(
            Arc::clone(field),
            current
                .iter()
                .map(|c| num::rational::BigRational::from_integer(c.clone()))
                .collect(),
        );
        let y = elem.mul(&u);
        let y_coords: Vec<BigInt> = y.coords().iter().map(|c| c.to_integer()).collect();
        if y_coords.iter().all(|c| (c % &p_int).is_zero()) {
            current = y_coords.into_iter().map(|c| c / &p_int).collect();
            v += 1;
        } else {
            return Ok(v);
        }
    }
}

/// Factor the principal ideal `[beta]` completely (subject to the integer
/// factorization budget).
pub fn factor_principal(beta: &CycloElem, budget: &mut Budget) -> Result<IdealFactorization, IdealError> {
    if beta.is_zero() {
        return Err(IdealError::ZeroElement);
    }
    if !beta.is_integral() {
        return Err(IdealError::NonIntegral);
    }
    let n = norm(beta);
    debug_assert!(n.is_integer());
    let norm_abs = n.to_integer().magnitude().clone();
    let field = beta.field();
    let mut factors: Vec<(PrimeIdeal, u32)> = Vec::new();
    if norm_abs.is_one() {
        return Ok(IdealFactorization {
            element: beta.clone(),
            factors,
            norm_abs,
            complete: true,
            unfactored: vec![],
        });
    }
    let outcome = intfactor::factor(&norm_abs, budget);
    for (p, mult) in &outcome.factors {
        let ideals = split_prime(field, p);
        let mut weighted = 0u32;
        for ideal in ideals.iter() {
            let v = valuation(beta, ideal)?;
            if v > 0 {
                weighted += ideal.f * v;
                factors.push((ideal.clone(), v));
            }
        }
        assert_eq!(
            weighted, *mult,
            "valuation-norm bridge failed at p = {p} for {beta}"
        );
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(IdealFactorization {
        element: beta.clone(),
        factors,
        norm_abs,
        complete: outcome.is_complete(),
        unfactored: outcome.unfactored,
    })
}

/// Greatest prime-ideal norm and radical norm of a complete factorization.
/// Units yield `(1, 1)`, matching the integer convention.
pub fn greatest_prime_and_radical(
    fact: &IdealFactorization,
) -> Result<(BigUint, BigUint), IdealError> {
    if !fact.complete {
        return Err(IdealError::IncompleteFactorization);
    }
    let mut p_max = BigUint::one();
    let mut radical = BigUint::one();
    for (ideal, _) in &fact.factors {
        let n = ideal.ideal_norm();
        if n > p_max {
            p_max = n.clone();
        }
        radical *= n;
    }
    Ok((p_max, radical))
}

/// Split the factorization into the part supported on `S` and its cofactor.
///
/// Exponents are recomputed directly from the element, so the S-part stays
/// exact even when the norm's integer factorization is incomplete.
pub fn s_part(fact: &IdealFactorization, s: &[PrimeIdeal]) -> Result<SPartResult, IdealError> {
    if s.is_empty() {
        return Err(IdealError::EmptyS);
    }
    for (i, a) in s.iter().enumerate() {
        for b in &s[i + 1..] {
            assert!(a != b, "ideals in S must be distinct");
        }
    }
    let mut s_part_norm = BigUint::one();
    let mut exponents = Vec::with_capacity(s.len());
    for ideal in s {
        let v = valuation(&fact.element, ideal)?;
        s_part_norm *= ideal.ideal_norm().pow(v);
        exponents.push((ideal.clone(), v));
    }
    let cofactor_norm = &fact.norm_abs / &s_part_norm;
    debug_assert_eq!(&cofactor_norm * &s_part_norm, fact.norm_abs);
    Ok(SPartResult {
        s_part_norm,
        cofactor_norm,
        exponents,
    })
}
