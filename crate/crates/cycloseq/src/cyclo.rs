//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(m)-1)`
//! with exact rational coordinates; all products reduce modulo the m-th
//! cyclotomic polynomial, so no operation ever rounds. `Z[zeta_m]` is the
//! maximal order, which keeps the prime-ideal layer downstream exact and
//! makes integrality a coordinate test.
//!
//! Complex data (houses, heights, modulus comparisons) go through rigorous
//! enclosures of `e^(2 pi i a / m)` from [`crate::real`], refined on demand:
//! any sign decision loops refine-until-separated with an exact fallback on
//! coordinate equality, so ties never spin.

use crate::error::CycloError;
use crate::ratpoly::{self, IntPoly};
use crate::real::{self, ComplexBall, RealBall};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// The cyclotomic field `Q(zeta_m)`.
#[derive(Debug)]
pub struct CycloField {
    /// Conductor.
    pub m: u64,
    /// Degree over `Q`, equal to `phi(m)`.
    pub degree: usize,
    /// The m-th cyclotomic polynomial (monic, integer coefficients).
    pub cyclotomic_poly: IntPoly,
    /// Order of the torsion subgroup of the unit group: `lcm(2, m)`.
    pub torsion_order: u64,
    /// Exponents `a` with `gcd(a, m) = 1` indexing the Galois group
    /// `zeta -> zeta^a`; the identity exponent comes first.
    pub galois_exponents: Vec<u64>,
    /// `power_table[j]` holds the coordinates of `zeta^j` reduced modulo the
    /// cyclotomic polynomial, for `0 <= j <= max(m - 1, 2 degree - 2)`.
    power_table: Vec<Vec<BigInt>>,
}

fn field_registry() -> &'static Mutex<HashMap<u64, Arc<CycloField>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<u64, Arc<CycloField>>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Construct (or fetch from the shared registry) the field `Q(zeta_m)`.
pub fn make_field(m: u64) -> Arc<CycloField> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(f) = field_registry().lock().unwrap().get(&m) {
        return Arc::clone(f);
    }
    let field = Arc::new(CycloField::build(m));
    field_registry()
        .lock()
        .unwrap()
        .entry(m)
        .or_insert_with(|| Arc::clone(&field));
    Arc::clone(field_registry().lock().unwrap().get(&m).unwrap())
}

impl CycloField {
    fn build(m: u64) -> CycloField {
        let phi = ratpoly::cyclotomic(m);
        let degree = phi.len() - 1;
        debug_assert_eq!(degree as u64, ratpoly::euler_phi(m));
        let galois_exponents = if m <= 2 {
            vec![1]
        } else {
            let mut v: Vec<u64> = (1..m).filter(|a| num::integer::gcd(*a, m) == 1).collect();
            v.sort_unstable();
            v
        };
        let max_index = (m as usize).max(2 * degree).saturating_sub(1).max(1);
        let mut power_table: Vec<Vec<BigInt>> = Vec::with_capacity(max_index + 1);
        for j in 0..=max_index {
            if j < degree {
                let mut row = vec![BigInt::zero(); degree];
                row[j] = BigInt::one();
                power_table.push(row);
            } else {
                // zeta^j = zeta * zeta^(j-1) reduced by the monic cyclotomic poly
                let prev = &power_table[j - 1];
                let mut row = vec![BigInt::zero(); degree + 1];
                row[1..=degree].clone_from_slice(&prev[..degree]);
                let lead = row[degree].clone();
                if !lead.is_zero() {
                    for (i, c) in phi.iter().enumerate().take(degree) {
                        row[i] -= &lead * c;
                    }
                }
                row.truncate(degree);
                power_table.push(row);
            }
        }
        CycloField {
            m,
            degree,
            cyclotomic_poly: phi,
            torsion_order: num::integer::lcm(2, m),
            galois_exponents,
            power_table,
        }
    }

    /// Coordinates of `zeta^e` (any exponent, reduced modulo m).
    pub fn zeta_power_coords(&self, e: u64) -> &[BigInt] {
        &self.power_table[(e % self.m) as usize]
    }
}

/// An element of a cyclotomic field, exact in the power basis.
#[derive(Clone)]
pub struct CycloElem {
    field: Arc<CycloField>,
    coords: Vec<BigRational>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coords == other.coords
    }
}

impl Eq for CycloElem {}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem({self})")
    }
}

impl fmt::Display for CycloElem {
    /// Wire format `m; c0, c1, ...` with exact rational coordinates.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}; {}", self.field.m, coords.join(", "))
    }
}

impl CycloElem {
    pub fn new(field: Arc<CycloField>, mut coords: Vec<BigRational>) -> Self {
        assert!(
            coords.len() <= field.degree,
            "coordinate vector longer than field degree"
        );
        coords.resize(field.degree, BigRational::zero());
        CycloElem { field, coords }
    }

    /// Parse the wire format `m; c0, c1, ...`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let (m_part, coord_part) = s
            .split_once(';')
            .ok_or_else(|| format!("missing ';' in element '{s}'"))?;
        let m: u64 = m_part
            .trim()
            .parse()
            .map_err(|_| format!("bad conductor in element '{s}'"))?;
        if m == 0 {
            return Err("conductor must be positive".into());
        }
        let field = make_field(m);
        let mut coords = Vec::new();
        for part in coord_part.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            coords.push(parse_rational(part)?);
        }
        if coords.len() > field.degree {
            return Err(format!(
                "{} coordinates exceed degree {} of Q(zeta_{m})",
                coords.len(),
                field.degree
            ));
        }
        Ok(CycloElem::new(field, coords))
    }

    pub fn zero(field: Arc<CycloField>) -> Self {
        CycloElem::new(field, vec![])
    }

    pub fn one(field: Arc<CycloField>) -> Self {
        CycloElem::new(field, vec![BigRational::one()])
    }

    pub fn from_rational(field: Arc<CycloField>, r: BigRational) -> Self {
        CycloElem::new(field, vec![r])
    }

    pub fn from_int(field: Arc<CycloField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    /// The generator `zeta_m` (reduces to 1 when m = 1, -1 when m = 2).
    pub fn zeta(field: Arc<CycloField>) -> Self {
        Self::zeta_pow_of(field, 1)
    }

    /// `zeta_m^e`.
    pub fn zeta_pow_of(field: Arc<CycloField>, e: u64) -> Self {
        let coords = field
            .zeta_power_coords(e)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        CycloElem {
            field,
            coords,
        }
    }

    /// Evaluate an integer polynomial at `zeta`, reducing exponents modulo m
    /// and the result modulo the cyclotomic polynomial. Accepts any degree.
    pub fn from_int_poly(field: Arc<CycloField>, poly: &[BigInt]) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree];
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64) % field.m;
            for (j, t) in field.zeta_power_coords(e).iter().enumerate() {
                if !t.is_zero() {
                    coords[j] += BigRational::from_integer(c * t);
                }
            }
        }
        CycloElem { field, coords }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// True when all non-constant coordinates vanish.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Algebraic integers of `Q(zeta_m)` are exactly the elements with
    /// integer power-basis coordinates (`Z[zeta_m]` is the maximal order).
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.m, other.field.m,
            "elements from different cyclotomic fields; embed explicitly first"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        CycloElem {
            field: Arc::clone(&self.field),
            coords,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        CycloElem {
            field: Arc::clone(&self.field),
            coords,
        }
    }

    pub fn neg(&self) -> Self {
        CycloElem {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let d = self.field.degree;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut coords = vec![BigRational::zero(); d];
        for (j, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < d {
                coords[j] += c;
            } else {
                for (i, t) in self.field.power_table[j].iter().enumerate() {
                    if !t.is_zero() {
                        coords[i] += &c * t;
                    }
                }
            }
        }
        CycloElem {
            field: Arc::clone(&self.field),
            coords,
        }
    }

    pub fn mul_rational(&self, c: &BigRational) -> Self {
        CycloElem {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Binary exponentiation.
    pub fn pow(&self, e: u64) -> Self {
        let mut result = CycloElem::one(Arc::clone(&self.field));
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact inverse via the conjugate product divided by the norm.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::ZeroElement);
        }
        let mut prod = CycloElem::one(Arc::clone(&self.field));
        for a in self.field.galois_exponents.iter().skip(1) {
            prod = prod.mul(&self.galois_apply(*a));
        }
        let n = norm(self);
        Ok(prod.mul_rational(&n.recip()))
    }

    /// The Galois automorphism `sigma_a: zeta -> zeta^a` (gcd(a, m) = 1).
    pub fn galois_apply(&self, a: u64) -> Self {
        let m = self.field.m;
        debug_assert!(m <= 2 || num::integer::gcd(a % m, m) == 1, "exponent not coprime to m");
        let d = self.field.degree;
        let mut coords = vec![BigRational::zero(); d];
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((a as u128 * i as u128) % m as u128) as u64;
            for (j, t) in self.field.power_table[e as usize].iter().enumerate() {
                if !t.is_zero() {
                    coords[j] += c * t;
                }
            }
        }
        CycloElem {
            field: Arc::clone(&self.field),
            coords,
        }
    }

    /// Complex conjugation (`sigma_{-1}`).
    pub fn conj(&self) -> Self {
        let m = self.field.m;
        if m <= 2 {
            self.clone()
        } else {
            self.galois_apply(m - 1)
        }
    }

    /// The totally real element `|beta|^2 = beta * conj(beta)`.
    pub fn abs_sq_elem(&self) -> Self {
        self.mul(&self.conj())
    }

    /// Rigorous enclosure of the canonical embedding `zeta -> e^(2 pi i / m)`.
    pub fn embed(&self, prec: u32) -> ComplexBall {
        self.embed_at(1, prec)
    }

    /// Embedding `zeta -> e^(2 pi i a / m)`.
    pub fn embed_at(&self, a: u64, prec: u32) -> ComplexBall {
        let z = real::unit_root_embedding(self.field.m, a, prec + 16);
        let mut acc = ComplexBall::zero();
        for c in self.coords.iter().rev() {
            acc = acc.mul(&z).add(&ComplexBall::from_rational(c)).compress(prec + 16);
        }
        acc.compress(prec)
    }

    /// Natural embedding into `Q(zeta_M)` for `m | M` (`zeta_m -> zeta_M^(M/m)`).
    pub fn embed_into(&self, target: &Arc<CycloField>) -> Self {
        let m = self.field.m;
        let big_m = target.m;
        assert_eq!(big_m % m, 0, "no embedding Q(zeta_{m}) -> Q(zeta_{big_m})");
        if big_m == m {
            return CycloElem {
                field: Arc::clone(target),
                coords: self.coords.clone(),
            };
        }
        let step = big_m / m;
        let mut coords = vec![BigRational::zero(); target.degree];
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((step as u128 * i as u128) % big_m as u128) as u64;
            for (j, t) in target.power_table[e as usize].iter().enumerate() {
                if !t.is_zero() {
                    coords[j] += c * t;
                }
            }
        }
        CycloElem {
            field: Arc::clone(target),
            coords,
        }
    }

    /// Exact torsion test by Kronecker's criterion specialized to cyclotomic
    /// fields: the unit-group torsion is exactly the `lcm(2, m)`-th roots of
    /// unity, so `beta` is a root of unity iff `beta^(lcm(2, m)) = 1`.
    pub fn is_root_of_unity(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.pow(self.field.torsion_order).is_one()
    }

    /// Multiplicative order when `beta` is a root of unity.
    pub fn torsion_order_of(&self) -> Option<u64> {
        if !self.is_root_of_unity() {
            return None;
        }
        let mut divisors: Vec<u64> = (1..=self.field.torsion_order)
            .filter(|d| self.field.torsion_order % d == 0)
            .collect();
        divisors.sort_unstable();
        divisors.into_iter().find(|&d| self.pow(d).is_one())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("bad integer '{t}'"))
    };
    if let Some((n, d)) = s.split_once('/') {
        let num = parse_int(n)?;
        let den = parse_int(d)?;
        if den.is_zero() {
            return Err(format!("zero denominator in '{s}'"));
        }
        Ok(BigRational::new(num, den))
    } else {
        Ok(BigRational::from_integer(parse_int(s)?))
    }
}

/// All Galois conjugates `sigma_a(beta)`, identity first.
pub fn galois_conjugates(beta: &CycloElem) -> Vec<CycloElem> {
    beta.field()
        .galois_exponents
        .iter()
        .map(|a| beta.galois_apply(*a))
        .collect()
}

/// Exact signed field norm: the product of all Galois conjugates.
pub fn norm(beta: &CycloElem) -> BigRational {
    let mut prod = CycloElem::one(Arc::clone(beta.field()));
    for a in &beta.field().galois_exponents {
        prod = prod.mul(&beta.galois_apply(*a));
    }
    prod.to_rational()
        .expect("norm must reduce to a rational value")
}

/// Independent norm route: `res(Phi_m, A)` where `A` is the coordinate
/// polynomial of `beta`. Used to cross-check [`norm`].
pub fn norm_via_resultant(beta: &CycloElem) -> BigRational {
    let phi: Vec<BigRational> = beta
        .field()
        .cyclotomic_poly
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let mut a: Vec<BigRational> = beta.coords().to_vec();
    ratpoly::trim(&mut a);
    ratpoly::resultant(&phi, &a)
}

/// Rigorous enclosure of the house: the maximum modulus over all embeddings.
pub fn house(beta: &CycloElem, prec: u32) -> RealBall {
    if beta.is_zero() {
        return RealBall::zero();
    }
    let mut prec = prec.max(32);
    loop {
        let mut lo = BigRational::from_integer(BigInt::from(-1));
        let mut hi = BigRational::from_integer(BigInt::from(-1));
        for a in &beta.field().galois_exponents {
            let v = beta.embed_at(*a, prec);
            let b = v.abs(prec);
            if lo.is_negative() || b.lo() > &lo {
                lo = b.lo().clone();
            }
            if hi.is_negative() || b.hi() > &hi {
                hi = b.hi().clone();
            }
        }
        let ball = RealBall::new(lo, hi);
        // keep the relative width near 2^-prec so callers see radius shrink
        if ball.width() * BigRational::from_integer(BigInt::one() << (prec / 2))
            < ball.hi().abs() + BigRational::one()
            || prec >= 1 << 14
        {
            return ball;
        }
        prec *= 2;
    }
}

/// Primitive integer minimal polynomial of `beta`, with its leading
/// coefficient. Distinct Galois conjugates give exactly the roots of the
/// minimal polynomial, so the product of `(X - gamma)` over the deduplicated
/// conjugates is the monic minimal polynomial over `Q`; clearing denominators
/// yields the primitive integer form with positive leading coefficient.
pub fn min_poly(beta: &CycloElem) -> (IntPoly, BigInt) {
    let mut distinct: Vec<CycloElem> = Vec::new();
    for c in galois_conjugates(beta) {
        if !distinct.contains(&c) {
            distinct.push(c);
        }
    }
    let field = Arc::clone(beta.field());
    // product of (X - gamma) with coefficients in the field
    let mut poly: Vec<CycloElem> = vec![CycloElem::one(Arc::clone(&field))];
    for gamma in &distinct {
        let mut next: Vec<CycloElem> = vec![CycloElem::zero(Arc::clone(&field)); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(gamma));
        }
        poly = next;
    }
    let rat_coeffs: Vec<BigRational> = poly
        .iter()
        .map(|c| {
            c.to_rational()
                .expect("minimal polynomial coefficients must be rational")
        })
        .collect();
    // clear denominators to a primitive integer polynomial, positive lead
    let mut den_lcm = BigInt::one();
    for c in &rat_coeffs {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut int_coeffs: Vec<BigInt> = rat_coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for c in &int_coeffs {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut int_coeffs {
            *c /= &content;
        }
    }
    if int_coeffs.last().unwrap().is_negative() {
        for c in &mut int_coeffs {
            *c = -c.clone();
        }
    }
    let lead = int_coeffs.last().unwrap().clone();
    (int_coeffs, lead)
}

/// Height data for a nonzero element.
#[derive(Debug, Clone)]
pub struct Heights {
    /// Mahler-style height `|a_d| prod max(1, |beta_i|)` over the roots of
    /// the minimal polynomial.
    pub big_h: RealBall,
    /// Absolute logarithmic height.
    pub log_h: RealBall,
    /// Degree of the minimal polynomial.
    pub degree: usize,
}

/// Compute `H(beta)` and `h(beta)` from the minimal polynomial; the roots are
/// the distinct Galois conjugates, each enclosed rigorously at the canonical
/// embedding.
pub fn heights(beta: &CycloElem, prec: u32) -> Result<Heights, CycloError> {
    if beta.is_zero() {
        return Err(CycloError::ZeroElement);
    }
    let (mp, lead) = min_poly(beta);
    let d = mp.len() - 1;
    let mut distinct: Vec<CycloElem> = Vec::new();
    for c in galois_conjugates(beta) {
        if !distinct.contains(&c) {
            distinct.push(c);
        }
    }
    debug_assert_eq!(distinct.len(), d);
    let lead_rat = BigRational::from_integer(lead.clone());
    let mut big_h = RealBall::exact(lead_rat.abs());
    let mut log_sum = real::ln_point(&lead_rat.abs(), prec);
    let work = prec + 16;
    for gamma in &distinct {
        let modulus = gamma.embed(work).abs(work).max_one();
        big_h = big_h.mul(&modulus).compress(work);
        log_sum = log_sum.add(&real::ln_ball(&modulus, work)).compress(work);
    }
    let log_h = log_sum.mul_rational(&BigRational::new(BigInt::one(), BigInt::from(d as i64)));
    Ok(Heights {
        big_h: big_h.compress(prec),
        log_h: log_h.compress(prec),
        degree: d,
    })
}

/// Exact comparison of `|beta|` and `|gamma|` at the canonical embedding.
///
/// Equality is decided exactly on the totally real elements
/// `beta conj(beta)` and `gamma conj(gamma)`; a strict order is decided by
/// refining embeddings until the enclosures separate (guaranteed to
/// terminate when the squared moduli differ as field elements).
pub fn abs_compare(beta: &CycloElem, gamma: &CycloElem) -> Ordering {
    let b2 = beta.abs_sq_elem();
    let g2 = gamma.abs_sq_elem();
    if b2 == g2 {
        return Ordering::Equal;
    }
    let diff = b2.sub(&g2);
    let mut prec = 64;
    loop {
        let ball = diff.embed(prec).re;
        if ball.is_strictly_positive() {
            return Ordering::Greater;
        }
        if ball.is_strictly_negative() {
            return Ordering::Less;
        }
        prec *= 2;
        assert!(prec <= 1 << 20, "abs_compare failed to separate");
    }
}

/// Compare `|beta|^2` against an exact rational threshold (same refinement
/// scheme as [`abs_compare`]).
pub fn abs_sq_compare_rational(beta: &CycloElem, threshold: &BigRational) -> Ordering {
    let b2 = beta.abs_sq_elem();
    if b2.is_rational() {
        return b2.to_rational().unwrap().cmp(threshold);
    }
    let diff = b2.sub(&CycloElem::from_rational(
        Arc::clone(beta.field()),
        threshold.clone(),
    ));
    let mut prec = 64;
    loop {
        let ball = diff.embed(prec).re;
        if ball.is_strictly_positive() {
            return Ordering::Greater;
        }
        if ball.is_strictly_negative() {
            return Ordering::Less;
        }
        prec *= 2;
        assert!(prec <= 1 << 20, "abs_sq_compare failed to separate");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn elem(m: u64, coords: &[i64]) -> CycloElem {
        CycloElem::new(make_field(m), coords.iter().map(|&c| r(c)).collect())
    }

    #[test]
    fn field_construction() {
        let f1 = make_field(1);
        assert_eq!(f1.degree, 1);
        assert_eq!(f1.cyclotomic_poly, vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(f1.torsion_order, 2);

        let f4 = make_field(4);
        assert_eq!(f4.degree, 2);
        assert_eq!(
            f4.cyclotomic_poly,
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]
        );
        assert_eq!(f4.torsion_order, 4);

        let f5 = make_field(5);
        assert_eq!(f5.degree, 4);
        assert_eq!(f5.cyclotomic_poly, vec![BigInt::one(); 5]);
        assert_eq!(f5.torsion_order, 10);
        assert_eq!(f5.galois_exponents, vec![1, 2, 3, 4]);
        assert_eq!(f5.degree, f5.galois_exponents.len());
    }

    #[test]
    fn cyclotomic_standard_values() {
        // Phi_1(0) = -1 and Phi_m(0) = 1 for m >= 2; Phi_m(1) = p for prime
        // powers and 1 otherwise (m >= 2).
        assert_eq!(make_field(1).cyclotomic_poly[0], BigInt::from(-1));
        for m in 2..=30u64 {
            let f = make_field(m);
            assert_eq!(f.cyclotomic_poly[0], BigInt::one(), "Phi_{m}(0)");
            let at_one: BigInt = f.cyclotomic_poly.iter().sum();
            let mut n = m;
            let mut distinct_primes = 0;
            let mut p_found = 0u64;
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    distinct_primes += 1;
                    p_found = p;
                    while n % p == 0 {
                        n /= p;
                    }
                }
                p += 1;
            }
            if n > 1 {
                distinct_primes += 1;
                p_found = n;
            }
            if distinct_primes == 1 {
                assert_eq!(at_one, BigInt::from(p_found), "Phi_{m}(1)");
            } else {
                assert_eq!(at_one, BigInt::one(), "Phi_{m}(1)");
            }
        }
    }

    #[test]
    fn conjugates_examples() {
        // 2 + zeta in Q(zeta_4) -> {2 + zeta, 2 - zeta}
        let b = elem(4, &[2, 1]);
        let conj = galois_conjugates(&b);
        assert_eq!(conj.len(), 2);
        assert_eq!(conj[0], b);
        assert_eq!(conj[1], elem(4, &[2, -1]));

        // rational fixed by Galois
        let three = elem(5, &[3]);
        for c in galois_conjugates(&three) {
            assert_eq!(c, three);
        }

        // zeta in Q(zeta_5) -> zeta^a
        let z = CycloElem::zeta(make_field(5));
        let conj = galois_conjugates(&z);
        assert_eq!(conj[1], z.pow(2));
        assert_eq!(conj[2], z.pow(3));
        assert_eq!(conj[3], z.pow(4));
    }

    #[test]
    fn norm_examples() {
        // (8 + 8 zeta)(8 - 8 zeta) = 64 + 64 = 128 in Q(i)
        assert_eq!(norm(&elem(4, &[8, 8])), r(128));
        // Phi_5(-1) = 1
        assert_eq!(norm(&elem(5, &[1, 1])), r(1));
        assert_eq!(norm(&CycloElem::zero(make_field(4))), r(0));
    }

    #[test]
    fn norm_matches_resultant_route() {
        let samples = [
            elem(4, &[8, 8]),
            elem(5, &[1, 1]),
            elem(5, &[2, -1, 0, 3]),
            elem(8, &[1, 2, 3, 4]),
            elem(12, &[-1, 0, 5, 2]),
            elem(3, &[7, -2]),
            elem(1, &[5]),
        ];
        for b in &samples {
            assert_eq!(norm(b), norm_via_resultant(b), "element {b}");
        }
    }

    #[test]
    fn house_examples() {
        let two = elem(4, &[2]);
        let h = house(&two, 64);
        assert!(h.contains(&r(2)));
        assert!(h.width() < BigRational::new(BigInt::one(), BigInt::one() << 30));

        let z8 = CycloElem::zeta(make_field(8));
        let h = house(&z8, 64);
        assert!(h.contains(&r(1)));

        // house(1 + zeta_5) = 2 cos(pi/5) = golden ratio
        let b = elem(5, &[1, 1]);
        let h = house(&b, 96);
        let phi_f64 = h.to_f64();
        assert!((phi_f64 - 1.618033988749894).abs() < 1e-12, "{phi_f64}");
    }

    #[test]
    fn min_poly_examples() {
        let (mp, lead) = min_poly(&CycloElem::zeta(make_field(4)));
        assert_eq!(mp, vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        assert_eq!(lead, BigInt::one());

        // 1 + zeta_5: X^4 - 3X^3 + 4X^2 - 2X + 1
        let (mp, lead) = min_poly(&elem(5, &[1, 1]));
        assert_eq!(
            mp,
            vec![
                BigInt::from(1),
                BigInt::from(-2),
                BigInt::from(4),
                BigInt::from(-3),
                BigInt::from(1)
            ]
        );
        assert_eq!(lead, BigInt::one());

        // 1/2 in Q(zeta_1): 2X - 1
        let half = CycloElem::from_rational(make_field(1), BigRational::new(1.into(), 2.into()));
        let (mp, lead) = min_poly(&half);
        assert_eq!(mp, vec![BigInt::from(-1), BigInt::from(2)]);
        assert_eq!(lead, BigInt::from(2));
    }

    #[test]
    fn heights_examples() {
        let two = elem(1, &[2]);
        let h = heights(&two, 96).unwrap();
        assert!((h.big_h.to_f64() - 2.0).abs() < 1e-12);
        assert!((h.log_h.to_f64() - 2.0f64.ln()).abs() < 1e-12);

        for m in [3u64, 4, 5, 8, 12] {
            let z = CycloElem::zeta(make_field(m));
            let h = heights(&z, 64).unwrap();
            assert!(h.big_h.contains(&r(1)));
            assert!(h.log_h.contains(&BigRational::zero()));
        }

        // H(1 + zeta_5) = golden ratio squared; h = log(H)/4
        let h = heights(&elem(5, &[1, 1]), 96).unwrap();
        assert!((h.big_h.to_f64() - 2.618033988749895).abs() < 1e-10);
        assert!((h.log_h.to_f64() - 0.2406059125298017).abs() < 1e-10);
        assert_eq!(h.degree, 4);

        assert!(matches!(
            heights(&CycloElem::zero(make_field(4)), 64),
            Err(CycloError::ZeroElement)
        ));
    }

    #[test]
    fn torsion_examples() {
        // -zeta_7^3
        let z7 = CycloElem::zeta(make_field(7));
        assert!(z7.pow(3).neg().is_root_of_unity());
        // 1 + zeta_3 = -zeta_3^2
        let b = elem(3, &[1, 1]);
        assert!(b.is_root_of_unity());
        assert!(b.pow(6).is_one());
        assert_eq!(b, CycloElem::zeta(make_field(3)).pow(2).neg());
        // 1 + zeta_5 is a unit of infinite order
        let c = elem(5, &[1, 1]);
        assert!(!c.is_root_of_unity());
        assert!(!c.pow(10).is_one());
        // zero is not a root of unity
        assert!(!CycloElem::zero(make_field(4)).is_root_of_unity());
    }

    #[test]
    fn abs_compare_examples() {
        // |3 + zeta| = |1 + 3 zeta| = sqrt(10) in Q(i)
        let a = elem(4, &[3, 1]);
        let b = elem(4, &[1, 3]);
        assert_eq!(abs_compare(&a, &b), Ordering::Equal);
        let c = elem(4, &[1, 1]);
        assert_eq!(abs_compare(&a, &c), Ordering::Greater);
        assert_eq!(abs_compare(&c, &a), Ordering::Less);
        // |zeta| = |1|
        let z = CycloElem::zeta(make_field(4));
        let one = CycloElem::one(make_field(4));
        assert_eq!(abs_compare(&z, &one), Ordering::Equal);
    }

    #[test]
    fn inverse_and_embedding() {
        let b = elem(5, &[2, -1, 0, 3]);
        let inv = b.inverse().unwrap();
        assert!(b.mul(&inv).is_one());

        // embed_into Q(zeta_4) -> Q(zeta_12): zeta_4 -> zeta_12^3
        let z4 = CycloElem::zeta(make_field(4));
        let f12 = make_field(12);
        let lifted = z4.embed_into(&f12);
        assert_eq!(lifted, CycloElem::zeta(Arc::clone(&f12)).pow(3));
        // norms relate by the relative degree: N_12(lift) = N_4(z)^(phi(12)/phi(4))
        let n4 = norm(&z4);
        let n12 = norm(&lifted);
        assert_eq!(n12, &n4 * &n4);
    }

    #[test]
    fn display_parse_roundtrip() {
        let b = CycloElem::new(
            make_field(4),
            vec![BigRational::new(1.into(), 2.into()), r(-3)],
        );
        let s = b.to_string();
        assert_eq!(s, "4; 1/2, -3");
        let parsed = CycloElem::parse(&s).unwrap();
        assert_eq!(parsed, b);
    }
}
