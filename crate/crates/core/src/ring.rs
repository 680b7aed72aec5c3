//! Exchangeable coefficient rings: arbitrary-precision rationals, integers
//! mod p^N, and finite fields F_{p^e} with an explicit irreducible modulus.
//!
//! Ring elements are carried by the [`Coef`] enum; all arithmetic goes through
//! the owning [`CoefRing`], which validates its parameters at construction.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use std::fmt;

/// Deterministic Miller–Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

fn inv_mod_u64(a: u64, p: u64) -> Result<u64> {
    if a % p == 0 {
        return Err(Error::NonUnit);
    }
    Ok(pow_mod_u64(a, p - 2, p))
}

/// A univariate polynomial over F_p, dense, little-endian coefficients.
type FpPoly = Vec<u64>;

fn fp_poly_trim(v: &mut FpPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_poly_rem(a: &FpPoly, m: &FpPoly, p: u64) -> FpPoly {
    // m is monic
    let mut r = a.clone();
    fp_poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for i in 0..=dm {
            let idx = shift + i;
            let sub = mul_mod_u64(lead, m[i], p);
            r[idx] = (r[idx] + p - sub) % p;
        }
        fp_poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn fp_poly_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod_u64(ai, bj, p)) % p;
        }
    }
    out
}

fn fp_poly_eval(a: &FpPoly, x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = (mul_mod_u64(acc, x, p) + c) % p;
    }
    acc
}

/// Extended Euclid in F_p[t]; returns (g, u) with u*a = g mod m, g monic.
fn fp_poly_inv_mod(a: &FpPoly, m: &FpPoly, p: u64) -> Result<FpPoly> {
    let (mut r0, mut r1) = (m.clone(), fp_poly_rem(a, m, p));
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        // divide r0 by r1
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        let lc_inv = inv_mod_u64(*r1.last().unwrap(), p)?;
        while rem.len() >= r1.len() && !rem.is_empty() {
            let coeff = mul_mod_u64(*rem.last().unwrap(), lc_inv, p);
            let shift = rem.len() - r1.len();
            q[shift] = coeff;
            for (i, &c) in r1.iter().enumerate() {
                let sub = mul_mod_u64(coeff, c, p);
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
            fp_poly_trim(&mut rem);
        }
        let qs1 = fp_poly_mul(&q, &s1, p);
        let mut s2 = s0.clone();
        s2.resize(s2.len().max(qs1.len()), 0);
        for (i, &c) in qs1.iter().enumerate() {
            s2[i] = (s2[i] + p - c) % p;
        }
        fp_poly_trim(&mut s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return Err(Error::NonUnit);
    }
    let scale = inv_mod_u64(r0[0], p)?;
    let mut out: FpPoly = s0.iter().map(|&c| mul_mod_u64(c, scale, p)).collect();
    fp_poly_trim(&mut out);
    Ok(fp_poly_rem(&out, m, p))
}

/// Brute-force irreducibility over F_p for degree <= 4: a reducible
/// polynomial of degree <= 3 has a root, and degree 4 additionally admits a
/// monic quadratic factor.
fn fp_poly_irreducible(m: &FpPoly, p: u64) -> bool {
    let deg = m.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for x in 0..p {
        if fp_poly_eval(m, x, p) == 0 {
            return false;
        }
    }
    if deg <= 3 {
        return true;
    }
    // degree 4: trial divide by every monic quadratic
    for b in 0..p {
        for c in 0..p {
            let q = vec![c, b, 1];
            if fp_poly_rem(m, &q, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The coefficient ring a polynomial lives over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefRing {
    /// Arbitrary-precision rationals, stored reduced with positive denominator.
    Rationals,
    /// Z/p^N with p prime and N >= 1. Not a domain for N > 1, so gcd is refused.
    IntegersModPrimePower { p: u64, n: u32, modulus: BigUint },
    /// F_{p^e} as F_p[t]/(modulus); modulus monic irreducible of degree e.
    FiniteField { p: u64, e: u32, modulus: Vec<u64> },
}

/// A coefficient; which variant is valid depends on the owning ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coef {
    Rat(BigRational),
    ModP(BigUint),
    Ff(Vec<u64>),
}

impl CoefRing {
    pub fn rationals() -> Self {
        CoefRing::Rationals
    }

    pub fn integers_mod_prime_power(p: u64, n: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if n < 1 {
            return Err(Error::Other("precision exponent must be >= 1".into()));
        }
        let modulus = BigUint::from(p).pow(n);
        Ok(CoefRing::IntegersModPrimePower { p, n, modulus })
    }

    /// Build F_{p^e}. When `modulus` is `None` and e > 1, the first monic
    /// irreducible of degree e found by scanning small coefficients is used.
    pub fn finite_field(p: u64, e: u32, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 || e > 4 {
            return Err(Error::Other("extension degree must be in 1..=4".into()));
        }
        if e > 1 && p > 1024 {
            return Err(Error::Other(
                "extension fields supported only for p <= 1024".into(),
            ));
        }
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            match modulus {
                Some(mut m) => {
                    for c in m.iter_mut() {
                        *c %= p;
                    }
                    if m.len() != e as usize + 1 || *m.last().unwrap() != 1 {
                        return Err(Error::Other(format!(
                            "modulus must be monic of degree {e}"
                        )));
                    }
                    if !fp_poly_irreducible(&m, p) {
                        return Err(Error::NotIrreducible(p));
                    }
                    m
                }
                None => Self::find_irreducible(p, e)?,
            }
        };
        Ok(CoefRing::FiniteField { p, e, modulus })
    }

    fn find_irreducible(p: u64, e: u32) -> Result<Vec<u64>> {
        let e = e as usize;
        // scan t^e + a_{e-1} t^{e-1} + ... + a_0 in lexicographic order
        let mut coeffs = vec![0u64; e];
        loop {
            let mut m = coeffs.clone();
            m.push(1);
            if fp_poly_irreducible(&m, p) {
                return Ok(m);
            }
            let mut i = 0;
            loop {
                if i == e {
                    return Err(Error::NotIrreducible(p));
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            CoefRing::Rationals | CoefRing::FiniteField { .. } => true,
            CoefRing::IntegersModPrimePower { n, .. } => *n == 1,
        }
    }

    /// Rings over which the gcd machinery is defined (Q and F_{p^e}).
    pub fn supports_gcd(&self) -> bool {
        matches!(self, CoefRing::Rationals | CoefRing::FiniteField { .. })
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self {
            CoefRing::Rationals => Some(0),
            CoefRing::IntegersModPrimePower { p, n, .. } => {
                if *n == 1 {
                    Some(*p)
                } else {
                    None
                }
            }
            CoefRing::FiniteField { p, .. } => Some(*p),
        }
    }

    pub fn zero(&self) -> Coef {
        match self {
            CoefRing::Rationals => Coef::Rat(BigRational::zero()),
            CoefRing::IntegersModPrimePower { .. } => Coef::ModP(BigUint::zero()),
            CoefRing::FiniteField { e, .. } => Coef::Ff(vec![0; *e as usize]),
        }
    }

    pub fn one(&self) -> Coef {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coef {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coef {
        match self {
            CoefRing::Rationals => Coef::Rat(BigRational::from_integer(v.clone())),
            CoefRing::IntegersModPrimePower { modulus, .. } => {
                let m = BigInt::from(modulus.clone());
                let r = ((v % &m) + &m) % &m;
                Coef::ModP(r.to_biguint().unwrap())
            }
            CoefRing::FiniteField { p, e, .. } => {
                let pm = BigInt::from(*p);
                let r = ((v % &pm) + &pm) % &pm;
                let mut out = vec![0u64; *e as usize];
                out[0] = r.to_u64().unwrap();
                Coef::Ff(out)
            }
        }
    }

    pub fn is_zero(&self, c: &Coef) -> bool {
        match c {
            Coef::Rat(r) => r.is_zero(),
            Coef::ModP(r) => r.is_zero(),
            Coef::Ff(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self, c: &Coef) -> bool {
        *c == self.one()
    }

    pub fn add(&self, a: &Coef, b: &Coef) -> Coef {
        match (self, a, b) {
            (CoefRing::Rationals, Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(x + y),
            (CoefRing::IntegersModPrimePower { modulus, .. }, Coef::ModP(x), Coef::ModP(y)) => {
                Coef::ModP((x + y) % modulus)
            }
            (CoefRing::FiniteField { p, .. }, Coef::Ff(x), Coef::Ff(y)) => {
                Coef::Ff(x.iter().zip(y).map(|(&a, &b)| (a + b) % p).collect())
            }
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn neg(&self, a: &Coef) -> Coef {
        match (self, a) {
            (CoefRing::Rationals, Coef::Rat(x)) => Coef::Rat(-x),
            (CoefRing::IntegersModPrimePower { modulus, .. }, Coef::ModP(x)) => {
                if x.is_zero() {
                    Coef::ModP(BigUint::zero())
                } else {
                    Coef::ModP(modulus - x)
                }
            }
            (CoefRing::FiniteField { p, .. }, Coef::Ff(x)) => {
                Coef::Ff(x.iter().map(|&a| (p - a) % p).collect())
            }
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn sub(&self, a: &Coef, b: &Coef) -> Coef {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coef, b: &Coef) -> Coef {
        match (self, a, b) {
            (CoefRing::Rationals, Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(x * y),
            (CoefRing::IntegersModPrimePower { modulus, .. }, Coef::ModP(x), Coef::ModP(y)) => {
                Coef::ModP((x * y) % modulus)
            }
            (CoefRing::FiniteField { p, modulus, .. }, Coef::Ff(x), Coef::Ff(y)) => {
                let prod = fp_poly_mul(x, y, *p);
                let mut r = fp_poly_rem(&prod, modulus, *p);
                r.resize(modulus.len() - 1, 0);
                Coef::Ff(r)
            }
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn inv(&self, a: &Coef) -> Result<Coef> {
        if self.is_zero(a) {
            return Err(Error::NonUnit);
        }
        match (self, a) {
            (CoefRing::Rationals, Coef::Rat(x)) => Ok(Coef::Rat(x.recip())),
            (CoefRing::IntegersModPrimePower { p, modulus, .. }, Coef::ModP(x)) => {
                if (x % BigUint::from(*p)).is_zero() {
                    return Err(Error::NonUnit);
                }
                let m = BigInt::from(modulus.clone());
                let xi = BigInt::from(x.clone());
                let ext = xi.extended_gcd(&m);
                let r = ((ext.x % &m) + &m) % &m;
                Ok(Coef::ModP(r.to_biguint().unwrap()))
            }
            (CoefRing::FiniteField { p, modulus, .. }, Coef::Ff(x)) => {
                let mut r = fp_poly_inv_mod(x, modulus, *p)?;
                r.resize(modulus.len() - 1, 0);
                Ok(Coef::Ff(r))
            }
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn div(&self, a: &Coef, b: &Coef) -> Result<Coef> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coef, e: u64) -> Coef {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Random element; for Rationals, a small integer.
    pub fn random<R: Rng>(&self, rng: &mut R) -> Coef {
        match self {
            CoefRing::Rationals => self.from_i64(rng.gen_range(-20i64..=20)),
            CoefRing::IntegersModPrimePower { modulus, .. } => {
                let bits = modulus.bits();
                let mut v = BigUint::zero();
                for _ in 0..bits.div_ceil(32) {
                    v = (v << 32) + BigUint::from(rng.gen::<u32>());
                }
                Coef::ModP(v % modulus)
            }
            CoefRing::FiniteField { p, e, .. } => {
                Coef::Ff((0..*e).map(|_| rng.gen_range(0..*p)).collect())
            }
        }
    }

    /// Format a coefficient; used by canonical printing.
    pub fn format(&self, c: &Coef) -> String {
        match c {
            Coef::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coef::ModP(r) => r.to_string(),
            Coef::Ff(v) => {
                if v.len() == 1 {
                    v[0].to_string()
                } else {
                    format!(
                        "[{}]",
                        v.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                }
            }
        }
    }
}

impl fmt::Display for CoefRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefRing::Rationals => write!(f, "Q"),
            CoefRing::IntegersModPrimePower { p, n, .. } => write!(f, "Z/{p}^{n}"),
            CoefRing::FiniteField { p, e, .. } => {
                if *e == 1 {
                    write!(f, "F{p}")
                } else {
                    write!(f, "F{p}^{e}")
                }
            }
        }
    }
}

/// Iterate all elements of F_{p^e} (used by orbit enumeration).
pub fn field_elements(ring: &CoefRing) -> Result<Vec<Coef>> {
    match ring {
        CoefRing::FiniteField { p, e, .. } => {
            let e = *e as usize;
            let mut out = Vec::new();
            let mut cur = vec![0u64; e];
            loop {
                out.push(Coef::Ff(cur.clone()));
                let mut i = 0;
                loop {
                    if i == e {
                        return Ok(out);
                    }
                    cur[i] += 1;
                    if cur[i] < *p {
                        break;
                    }
                    cur[i] = 0;
                    i += 1;
                }
            }
        }
        _ => Err(Error::UnsupportedRing(
            "element enumeration needs a finite field".into(),
        )),
    }
}

use num_integer::Integer;

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(1000003));
        assert!(is_prime_u64(4611686017554972673));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
    }

    #[test]
    fn mod_prime_power_inverse() {
        let r = CoefRing::integers_mod_prime_power(3, 4).unwrap();
        // 1/2 mod 81 = 41
        let half = r.inv(&r.from_i64(2)).unwrap();
        assert_eq!(half, r.from_i64(41));
        assert!(r.inv(&r.from_i64(3)).is_err());
    }

    #[test]
    fn finite_field_f9() {
        let r = CoefRing::finite_field(3, 2, None).unwrap();
        let els = field_elements(&r).unwrap();
        assert_eq!(els.len(), 9);
        // every nonzero element has an inverse
        for c in &els {
            if !r.is_zero(c) {
                let i = r.inv(c).unwrap();
                assert!(r.is_one(&r.mul(c, &i)));
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // t^2 - 1 = (t-1)(t+1) over F_3
        assert!(CoefRing::finite_field(3, 2, Some(vec![2, 0, 1])).is_err());
        // t^2 + 1 is irreducible over F_3
        assert!(CoefRing::finite_field(3, 2, Some(vec![1, 0, 1])).is_ok());
    }

    #[test]
    fn field_axioms_randomized() {
        let rings = [
            CoefRing::rationals(),
            CoefRing::integers_mod_prime_power(5, 3).unwrap(),
            CoefRing::finite_field(7, 2, None).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for ring in &rings {
            for _ in 0..1000 {
                let a = ring.random(&mut rng);
                let b = ring.random(&mut rng);
                let c = ring.random(&mut rng);
                assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
                assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
                assert_eq!(
                    ring.add(&ring.add(&a, &b), &c),
                    ring.add(&a, &ring.add(&b, &c))
                );
                assert_eq!(
                    ring.mul(&ring.mul(&a, &b), &c),
                    ring.mul(&a, &ring.mul(&b, &c))
                );
                assert_eq!(
                    ring.mul(&a, &ring.add(&b, &c)),
                    ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
                );
            }
        }
    }
}
