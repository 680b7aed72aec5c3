//! Dense fast path for large polynomial products.
//!
//! Exponent vectors are Kronecker-packed into a single index, coefficients are
//! reduced modulo a batch of 62-bit NTT-friendly primes, each residue image is
//! multiplied with a radix-2 NTT, and the integer coefficients are recovered
//! by CRT. Homogeneous operands are first projected down one variable, which
//! is what keeps the packed index space quadratic rather than cubic for
//! plane Cremona maps.
//!
//! The per-prime images are independent, so they go through
//! [`crate::batch::map_batch`].

use crate::batch::map_batch;
use crate::error::Result;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{Coef, CoefRing};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// primes p = c * 2^26 + 1 just under 2^62, with a primitive root each
const NTT_PRIMES: [(u64, u64); 48] = [
    (4611686017554972673, 5),
    (4611686015004835841, 3),
    (4611686009971671041, 6),
    (4611686007555751937, 3),
    (4611686007488643073, 5),
    (4611686007085989889, 22),
    (4611686005878030337, 5),
    (4611686004066091009, 13),
    (4611686003260784641, 11),
    (4611686003059458049, 7),
    (4611686001717280769, 3),
    (4611685996013027329, 7),
    (4611685994872176641, 3),
    (4611685994201088001, 7),
    (4611685993060237313, 3),
    (4611685992187822081, 11),
    (4611685989973229569, 7),
    (4611685988966596609, 7),
    (4611685987758637057, 5),
    (4611685984940064769, 11),
    (4611685984336084993, 15),
    (4611685982725472257, 5),
    (4611685982322819073, 5),
    (4611685981987274753, 5),
    (4611685981383294977, 3),
    (4611685980108226561, 21),
    (4611685977759416321, 7),
    (4611685976350130177, 3),
    (4611685976283021313, 11),
    (4611685975746150401, 3),
    (4611685973263122433, 5),
    (4611685969907679233, 3),
    (4611685968699719681, 3),
    (4611685961653288961, 3),
    (4611685961586180097, 5),
    (4611685961183526913, 10),
    (4611685960847982593, 3),
    (4611685958767607809, 7),
    (4611685955814817793, 3),
    (4611685955412164609, 3),
    (4611685954405531649, 3),
    (4611685953533116417, 17),
    (4611685950714544129, 11),
    (4611685950177673217, 3),
    (4611685949775020033, 3),
    (4611685946553794561, 3),
    (4611685944339202049, 3),
    (4611685944137875457, 3),
];

const MAX_NTT_LOG: u32 = 26;
/// below this many pairwise term products, sparse accumulation wins
const DENSE_PAIR_THRESHOLD: usize = 2_000_000;

/// Montgomery arithmetic for one odd 64-bit prime.
#[derive(Clone, Copy)]
struct Mont {
    p: u64,
    ninv: u64, // -p^{-1} mod 2^64
    r: u64,    // 2^64 mod p (montgomery one)
    r2: u64,   // 2^128 mod p
}

impl Mont {
    fn new(p: u64) -> Self {
        let mut inv = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let ninv = inv.wrapping_neg();
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Mont { p, ninv, r, r2 }
    }

    #[inline(always)]
    fn mul(&self, a: u64, b: u64) -> u64 {
        let t = a as u128 * b as u128;
        let m = (t as u64).wrapping_mul(self.ninv);
        let t = ((t.wrapping_add(m as u128 * self.p as u128)) >> 64) as u64;
        if t >= self.p {
            t - self.p
        } else {
            t
        }
    }

    #[inline(always)]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn to_mont(&self, a: u64) -> u64 {
        self.mul(a, self.r2)
    }

    fn from_mont(&self, a: u64) -> u64 {
        self.mul(a, 1)
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        // b in montgomery form
        let mut acc = self.r;
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

fn bit_reverse(a: &mut [u64]) {
    let n = a.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
}

/// In-place NTT; `root` is a primitive n-th root of unity in montgomery form.
fn ntt(a: &mut [u64], root: u64, mont: &Mont) {
    let n = a.len();
    bit_reverse(a);
    let mut len = 2;
    while len <= n {
        let wlen = mont.pow(root, (n / len) as u64);
        for chunk in a.chunks_mut(len) {
            let mut w = mont.r;
            let (lo, hi) = chunk.split_at_mut(len / 2);
            for i in 0..len / 2 {
                let u = lo[i];
                let v = mont.mul(hi[i], w);
                lo[i] = mont.add(u, v);
                hi[i] = mont.sub(u, v);
                w = mont.mul(w, wlen);
            }
        }
        len <<= 1;
    }
}

fn ntt_convolve(mut fa: Vec<u64>, mut fb: Vec<u64>, p: u64, g: u64) -> Vec<u64> {
    let n = fa.len();
    let mont = Mont::new(p);
    let order = (p - 1) / n as u64;
    let root = mont.pow(mont.to_mont(g), order);
    // root^n = 1, so root^(n-1) is the inverse root
    let root_inv = mont.pow(root, (n - 1) as u64);
    for x in fa.iter_mut() {
        *x = mont.to_mont(*x);
    }
    for x in fb.iter_mut() {
        *x = mont.to_mont(*x);
    }
    ntt(&mut fa, root, &mont);
    ntt(&mut fb, root, &mont);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = mont.mul(*x, *y);
    }
    drop(fb);
    ntt(&mut fa, root_inv, &mont);
    // scale by n^{-1}: n^{-1} = (p - (p-1)/n) since n * (p-1)/n = p-1 = -1 mod p
    let ninv_mont = mont.pow(mont.to_mont(n as u64), p - 2);
    for x in fa.iter_mut() {
        *x = mont.from_mont(mont.mul(*x, ninv_mont));
    }
    fa
}

struct Packed {
    /// (packed index, integer coefficient)
    terms: Vec<(usize, BigInt)>,
    max_idx: usize,
    max_bits: u64,
}

struct Packing {
    /// variable indices that survive packing, with their mixed-radix strides
    kept: Vec<(usize, usize)>,
    /// dropped homogeneous variable, with the product's total degree
    dropped: Option<(usize, u32)>,
    nvars: usize,
}

impl Packing {
    fn unpack(&self, mut idx: usize) -> Monomial {
        let mut e = vec![0u32; self.nvars];
        for &(var, stride) in self.kept.iter().rev() {
            e[var] = (idx / stride) as u32;
            idx %= stride;
        }
        if let Some((var, dtot)) = self.dropped {
            let used: u32 = e.iter().sum();
            e[var] = dtot - used;
        }
        Monomial(e)
    }
}

fn coef_to_bigint(ring: &CoefRing, c: &Coef) -> Option<BigInt> {
    match c {
        Coef::Rat(r) => {
            if r.is_integer() {
                Some(r.numer().clone())
            } else {
                None
            }
        }
        Coef::ModP(r) => Some(BigInt::from(r.clone())),
        Coef::Ff(v) => {
            if let CoefRing::FiniteField { e: 1, .. } = ring {
                Some(BigInt::from(v[0]))
            } else {
                None
            }
        }
    }
}

fn pack(a: &Polynomial, b: &Polynomial) -> Option<(Packing, Packed, Packed)> {
    let nvars = a.nvars();
    let mut amax = vec![0u32; nvars];
    let mut bmax = vec![0u32; nvars];
    for (m, _) in a.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            amax[i] = amax[i].max(e);
        }
    }
    for (m, _) in b.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            bmax[i] = bmax[i].max(e);
        }
    }
    // drop one variable when both factors are homogeneous
    let dropped = match (a.homogeneous_degree(), b.homogeneous_degree()) {
        (Some(da), Some(db)) if nvars >= 2 => {
            let drop_var = (0..nvars)
                .max_by_key(|&i| amax[i] + bmax[i])
                .unwrap();
            Some((drop_var, da + db))
        }
        _ => None,
    };
    let mut kept = Vec::new();
    let mut stride = 1usize;
    for i in 0..nvars {
        if dropped.map(|(v, _)| v) == Some(i) {
            continue;
        }
        kept.push((i, stride));
        let radix = (amax[i] + bmax[i] + 1) as usize;
        stride = stride.checked_mul(radix)?;
        if stride > (1usize << MAX_NTT_LOG) {
            return None;
        }
    }
    let packing = Packing {
        kept,
        dropped,
        nvars,
    };
    let ring = a.ring();
    let pack_poly = |p: &Polynomial| -> Option<Packed> {
        let mut terms = Vec::with_capacity(p.num_terms());
        let mut max_idx = 0usize;
        let mut max_bits = 0u64;
        for (m, c) in p.terms() {
            let mut idx = 0usize;
            for &(var, stride) in &packing.kept {
                idx += m.0[var] as usize * stride;
            }
            let v = coef_to_bigint(ring, c)?;
            max_bits = max_bits.max(v.magnitude().bits());
            max_idx = max_idx.max(idx);
            terms.push((idx, v));
        }
        Some(Packed {
            terms,
            max_idx,
            max_bits,
        })
    };
    let pa = pack_poly(a)?;
    let pb = pack_poly(b)?;
    Some((packing, pa, pb))
}

/// Attempt the dense modular product; `Ok(None)` means "not applicable, use
/// the sparse path".
pub fn try_mul_dense(a: &Polynomial, b: &Polynomial) -> Result<Option<Polynomial>> {
    let pair_products = a.num_terms().checked_mul(b.num_terms());
    match pair_products {
        Some(n) if n < DENSE_PAIR_THRESHOLD => return Ok(None),
        _ => {}
    }
    match a.ring() {
        CoefRing::Rationals
        | CoefRing::IntegersModPrimePower { .. }
        | CoefRing::FiniteField { e: 1, .. } => {}
        _ => return Ok(None),
    }
    Ok(mul_dense_inner(a, b))
}

/// The unconditional dense product; `None` when coefficients or index space
/// do not fit the modular representation.
fn mul_dense_inner(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let (packing, pa, pb) = pack(a, b)?;
    let need = pa.max_idx + pb.max_idx + 1;
    let n = need.next_power_of_two().max(2);
    if n > (1usize << MAX_NTT_LOG) {
        return None;
    }
    // signed coefficient bound: max|a| * max|b| * min(#terms)
    let min_terms = a.num_terms().min(b.num_terms()) as u64;
    let bound_bits = pa.max_bits + pb.max_bits + 64 - min_terms.leading_zeros() as u64 + 2;
    let nprimes = (bound_bits as usize).div_ceil(61);
    if nprimes > NTT_PRIMES.len() {
        return None;
    }
    let primes = &NTT_PRIMES[..nprimes];

    let images = map_batch(primes.to_vec(), |(p, g)| {
        let pb_big = BigInt::from(p);
        let mut fa = vec![0u64; n];
        for (idx, c) in &pa.terms {
            fa[*idx] = c.mod_floor(&pb_big).to_u64().unwrap();
        }
        let mut fb = vec![0u64; n];
        for (idx, c) in &pb.terms {
            fb[*idx] = c.mod_floor(&pb_big).to_u64().unwrap();
        }
        ntt_convolve(fa, fb, p, g)
    });

    // CRT reconstruction (Garner, mixed radix) per populated slot
    let mut modulus = BigUint::from(1u32);
    for &(p, _) in primes {
        modulus *= BigUint::from(p);
    }
    let half = &modulus >> 1;
    // garner coefficients: inv(prod_{j<i} p_j) mod p_i
    let mut garner_inv = Vec::with_capacity(nprimes);
    for (i, &(p, _)) in primes.iter().enumerate() {
        let mut prod = 1u64 % p;
        for &(q, _) in &primes[..i] {
            prod = crate::ring::mul_mod_u64(prod, q % p, p);
        }
        garner_inv.push(crate::ring::pow_mod_u64(prod, p - 2, p));
    }
    let ring = a.ring().clone();
    let mut out_terms: Vec<(Monomial, Coef)> = Vec::new();
    for idx in 0..need {
        if images.iter().all(|img| img[idx] == 0) {
            continue;
        }
        let mut acc = BigUint::zero();
        let mut m = BigUint::from(1u32);
        for (i, &(p, _)) in primes.iter().enumerate() {
            let x = images[i][idx];
            let acc_mod = (&acc % BigUint::from(p)).to_u64().unwrap();
            let diff = if x >= acc_mod { x - acc_mod } else { x + p - acc_mod };
            let t = crate::ring::mul_mod_u64(diff, garner_inv[i], p);
            acc += BigUint::from(t) * &m;
            m *= BigUint::from(p);
        }
        let signed = if acc > half {
            BigInt::from(acc) - BigInt::from(modulus.clone())
        } else {
            BigInt::from(acc)
        };
        let c = ring.from_bigint(&signed);
        if !ring.is_zero(&c) {
            out_terms.push((packing.unpack(idx), c));
        }
    }
    Some(Polynomial::from_terms(&ring, a.vars(), out_terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use std::sync::Arc;

    #[test]
    fn ntt_convolution_small() {
        // (1 + 2x)(3 + 4x) = 3 + 10x + 8x^2
        let (p, g) = NTT_PRIMES[0];
        let out = ntt_convolve(vec![1, 2, 0, 0], vec![3, 4, 0, 0], p, g);
        assert_eq!(&out[..3], &[3, 10, 8]);
    }

    #[test]
    fn dense_matches_sparse() {
        let ring = CoefRing::rationals();
        let vars = Arc::new(vec!["x".to_string(), "y".to_string()]);
        let a = parse_polynomial("x^3 - 2*x*y + y^2 - 7", &ring, &vars).unwrap();
        let b = parse_polynomial("5*x^2*y - y^3 + 11", &ring, &vars).unwrap();
        let dense = mul_dense_inner(&a, &b).unwrap();
        let sparse = a.mul(&b).unwrap();
        assert_eq!(dense, sparse);
    }

    #[test]
    fn dense_matches_sparse_mod_p() {
        let ring = CoefRing::finite_field(1000003, 1, None).unwrap();
        let vars = Arc::new(vec!["x".to_string(), "y".to_string(), "z".to_string()]);
        let a = parse_polynomial("x^2 + 999999*y*z + z^2", &ring, &vars).unwrap();
        let b = parse_polynomial("x*y + 500000*z^2", &ring, &vars).unwrap();
        let dense = mul_dense_inner(&a, &b).unwrap();
        assert_eq!(dense, a.mul(&b).unwrap());
    }

    #[test]
    fn dense_matches_sparse_homogeneous() {
        // homogeneous operands exercise the variable-dropping packer
        let ring = CoefRing::rationals();
        let vars = Arc::new(vec!["x".to_string(), "y".to_string(), "z".to_string()]);
        let a = parse_polynomial("x^2 - 3*y*z + z^2", &ring, &vars).unwrap();
        let b = parse_polynomial("x*y + y^2 - 4*x*z", &ring, &vars).unwrap();
        assert_eq!(mul_dense_inner(&a, &b).unwrap(), a.mul(&b).unwrap());
    }
}
