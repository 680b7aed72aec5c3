//! Multivariate gcd over a field (Q or F_{p^e}) by recursive primitive
//! pseudo-remainder sequences: view the polynomials as univariate in the last
//! occurring variable with polynomial coefficients, split off contents, and
//! run the Euclidean loop on primitive parts. Z/p^N is rejected because it is
//! not a domain for N > 1.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::CoefRing;

/// Degree of `p` in variable `v`.
fn deg_in(p: &Polynomial, v: usize) -> u32 {
    p.terms().map(|(m, _)| m.0[v]).max().unwrap_or(0)
}

/// Coefficient of v^e in `p`, as a polynomial with the v-exponent zeroed.
fn coeff_of(p: &Polynomial, v: usize, e: u32) -> Polynomial {
    Polynomial::from_terms(
        p.ring(),
        p.vars(),
        p.terms().filter(|(m, _)| m.0[v] == e).map(|(m, c)| {
            let mut nm = m.clone();
            nm.0[v] = 0;
            (nm, c.clone())
        }),
    )
}

/// Highest-index variable appearing in either polynomial.
fn main_var(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    (0..a.nvars())
        .rev()
        .find(|&v| deg_in(a, v) > 0 || deg_in(b, v) > 0)
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Result<Polynomial> {
    let db = deg_in(b, v);
    let lb = coeff_of(b, v, db);
    let mut r = a.clone();
    while !r.is_zero() && deg_in(&r, v) >= db {
        let dr = deg_in(&r, v);
        let lr = coeff_of(&r, v, dr);
        let shift = Monomial::var(a.nvars(), v);
        let mut vpow = Polynomial::constant(a.ring(), a.vars(), a.ring().one());
        for _ in 0..(dr - db) {
            vpow = vpow.mul_monomial(&shift, &a.ring().one());
        }
        let lhs = r.mul(&lb)?;
        let rhs = b.mul(&lr)?.mul(&vpow)?;
        r = lhs.sub(&rhs)?;
        debug_assert!(r.is_zero() || deg_in(&r, v) < dr);
    }
    Ok(r)
}

/// gcd of all monomials of both polynomials (used when one operand is a
/// single term: the coefficient gcd is trivially a unit over a field).
fn monomial_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut g: Option<Monomial> = None;
    for (m, _) in a.terms().chain(b.terms()) {
        g = Some(match g {
            None => m.clone(),
            Some(g) => g.gcd(m),
        });
    }
    Polynomial::from_terms(
        a.ring(),
        a.vars(),
        [(g.unwrap_or_else(|| Monomial::constant(a.nvars())), a.ring().one())],
    )
}

/// Primes for the modular coprimality filter over Q.
const FILTER_PRIMES: [u64; 3] = [1_000_003, 1_000_033, 1_000_037];

/// Cap on the degree of the Kronecker-packed univariate image.
const KRONECKER_CAP: usize = 1 << 21;

/// Whether gcd of two dense univariate polynomials over F_p is a constant.
fn fp_univ_gcd_is_constant(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> bool {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    loop {
        if b.is_empty() {
            return a.len() <= 1;
        }
        // make b monic, then a <- a mod b
        let li = crate::ring::pow_mod_u64(*b.last().unwrap(), p - 2, p);
        for c in b.iter_mut() {
            *c = crate::ring::mul_mod_u64(*c, li, p);
        }
        let db = b.len() - 1;
        while a.len() > db {
            let lead = *a.last().unwrap();
            if lead != 0 {
                let shift = a.len() - 1 - db;
                for (i, &bc) in b.iter().enumerate() {
                    let s = crate::ring::mul_mod_u64(lead, bc, p);
                    a[shift + i] = (a[shift + i] + p - s) % p;
                }
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Terms of `poly` reduced mod p as (exponent vector, residue), nonzero
/// residues only. For Q, denominators are cleared first (a scalar multiple,
/// which does not affect coprimality). `None` if the ring is unsupported.
fn residue_terms(poly: &Polynomial, p: u64) -> Option<Vec<(Vec<u32>, u64)>> {
    use crate::ring::Coef;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, ToPrimitive, Zero};
    match poly.ring() {
        CoefRing::Rationals => {
            let mut denom_lcm = BigInt::from(1);
            for (_, c) in poly.terms() {
                if let Coef::Rat(r) = c {
                    denom_lcm = denom_lcm.lcm(r.denom());
                }
            }
            let pb = BigInt::from(p);
            let mut out = Vec::new();
            for (m, c) in poly.terms() {
                if let Coef::Rat(r) = c {
                    let v = r.numer() * (&denom_lcm / r.denom());
                    let mut v = v % &pb;
                    if v.is_negative() {
                        v += &pb;
                    }
                    if !v.is_zero() {
                        out.push((m.0.clone(), v.to_u64().unwrap()));
                    }
                }
            }
            Some(out)
        }
        CoefRing::FiniteField { p: q, e: 1, .. } if *q == p => {
            let mut out = Vec::new();
            for (m, c) in poly.terms() {
                if let Coef::Ff(v) = c {
                    if v[0] != 0 {
                        out.push((m.0.clone(), v[0]));
                    }
                }
            }
            Some(out)
        }
        _ => None,
    }
}

/// Sound coprimality certificate mod p via Kronecker substitution.
///
/// A nonconstant common factor G survives reduction mod p as a nonconstant
/// common factor of the reduced polynomials whenever the guard conditions
/// below hold, and an injective exponent packing sends it to a nonconstant
/// common factor of the univariate images. So a constant univariate gcd
/// proves the original gcd constant; anything else is inconclusive.
fn kronecker_coprime(a: &Polynomial, b: &Polynomial, p: u64) -> bool {
    let ta = match residue_terms(a, p) {
        Some(t) if !t.is_empty() => t,
        _ => return false,
    };
    let tb = match residue_terms(b, p) {
        Some(t) if !t.is_empty() => t,
        _ => return false,
    };
    let nvars = a.nvars();
    let mut amax = vec![0u32; nvars];
    let mut bmax = vec![0u32; nvars];
    let mut amin = vec![u32::MAX; nvars];
    let mut bmin = vec![u32::MAX; nvars];
    for (e, _) in &ta {
        for i in 0..nvars {
            amax[i] = amax[i].max(e[i]);
            amin[i] = amin[i].min(e[i]);
        }
    }
    for (e, _) in &tb {
        for i in 0..nvars {
            bmax[i] = bmax[i].max(e[i]);
            bmin[i] = bmin[i].min(e[i]);
        }
    }
    // For homogeneous pairs a variable can be eliminated: exponents of the
    // others determine it. Requires a variable v not dividing one of the
    // reduced polynomials, so the dehomogenized common factor stays
    // nonconstant. For inhomogeneous input, keep all variables but insist
    // the reduction preserved a grevlex-leading monomial (so a nonconstant
    // factor cannot reduce to a constant).
    let homogeneous =
        a.homogeneous_degree().is_some() && b.homogeneous_degree().is_some();
    let active: Vec<usize> = (0..nvars)
        .filter(|&i| amax[i] > 0 || bmax[i] > 0)
        .collect();
    let drop_var = if homogeneous && active.len() >= 2 {
        active
            .iter()
            .copied()
            .filter(|&v| amin[v] == 0 || bmin[v] == 0)
            .max_by_key(|&v| amax[v].max(bmax[v]))
    } else {
        None
    };
    if drop_var.is_none() {
        let lead_preserved = |orig: &Polynomial, terms: &[(Vec<u32>, u64)]| {
            let lead = orig.leading().map(|(m, _)| m.0.clone());
            terms.iter().any(|(e, _)| Some(e) == lead.as_ref())
        };
        if !lead_preserved(a, &ta) && !lead_preserved(b, &tb) {
            return false;
        }
    }
    let mut weights = vec![0usize; nvars];
    let mut stride = 1usize;
    for &i in &active {
        if Some(i) == drop_var {
            continue;
        }
        weights[i] = stride;
        let radix = (amax[i].max(bmax[i]) as usize) + 1;
        stride = match stride.checked_mul(radix) {
            Some(s) if s <= KRONECKER_CAP => s,
            _ => return false,
        };
    }
    let pack = |terms: &[(Vec<u32>, u64)]| {
        let mut v = vec![0u64; stride];
        for (e, c) in terms {
            let idx: usize = (0..nvars)
                .map(|i| {
                    if Some(i) == drop_var {
                        0
                    } else {
                        e[i] as usize * weights[i]
                    }
                })
                .sum();
            v[idx] = (v[idx] + c) % p;
        }
        v
    };
    fp_univ_gcd_is_constant(pack(&ta), pack(&tb), p)
}

/// Fast sound filter: true means the gcd is certainly constant.
fn proven_coprime_fast(a: &Polynomial, b: &Polynomial) -> bool {
    match a.ring() {
        CoefRing::Rationals => FILTER_PRIMES.iter().any(|&p| kronecker_coprime(a, b, p)),
        CoefRing::FiniteField { p, e: 1, .. } => kronecker_coprime(a, b, *p),
        _ => false,
    }
}

/// Componentwise-minimum exponent over all terms: the monomial content.
fn monomial_content(p: &Polynomial) -> Monomial {
    let mut out = vec![u32::MAX; p.nvars()];
    for (m, _) in p.terms() {
        for (o, &e) in out.iter_mut().zip(&m.0) {
            *o = (*o).min(e);
        }
    }
    Monomial(out.into_iter().map(|e| if e == u32::MAX { 0 } else { e }).collect())
}

fn strip_monomial(p: &Polynomial, c: &Monomial) -> Polynomial {
    Polynomial::from_terms(
        p.ring(),
        p.vars(),
        p.terms()
            .map(|(m, v)| (m.try_div(c).expect("content divides"), v.clone())),
    )
}

fn gcd_inner(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    if a.is_monomial() || b.is_monomial() {
        return Ok(monomial_gcd(a, b));
    }
    // gcd(ma*a', mb*b') = gcd(ma, mb) * gcd(a', b') for monomial contents
    let ca = monomial_content(a);
    let cb = monomial_content(b);
    if !ca.is_constant() || !cb.is_constant() {
        let g = gcd_inner(&strip_monomial(a, &ca), &strip_monomial(b, &cb))?;
        return Ok(g.mul_monomial(&ca.gcd(&cb), &a.ring().one()));
    }
    if (a.total_degree() >= 6 || b.total_degree() >= 6) && proven_coprime_fast(a, b) {
        return Ok(Polynomial::constant(a.ring(), a.vars(), a.ring().one()));
    }
    let v = match main_var(a, b) {
        // both are nonzero constants: gcd is a unit
        None => {
            return Ok(Polynomial::constant(a.ring(), a.vars(), a.ring().one()));
        }
        Some(v) => v,
    };
    // contents and primitive parts with respect to v
    let (ca, pa) = content_split(a, v)?;
    let (cb, pb) = content_split(b, v)?;
    let cg = gcd_inner(&ca, &cb)?;
    let (mut r0, mut r1) = if deg_in(&pa, v) >= deg_in(&pb, v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&r0, &r1, v)?;
        if r.is_zero() {
            break;
        }
        let (_, pr) = content_split(&r, v)?;
        r0 = r1;
        r1 = pr;
    }
    cg.mul(&r1)
}

/// Content (gcd of the v-coefficients) and primitive part with respect to v.
fn content_split(p: &Polynomial, v: usize) -> Result<(Polynomial, Polynomial)> {
    let mut content = Polynomial::zero(p.ring(), p.vars());
    for e in 0..=deg_in(p, v) {
        let c = coeff_of(p, v, e);
        if c.is_zero() {
            continue;
        }
        content = gcd_inner(&content, &c)?;
        if content.is_constant() {
            break;
        }
    }
    if content.is_constant() {
        return Ok((
            Polynomial::constant(p.ring(), p.vars(), p.ring().one()),
            p.clone(),
        ));
    }
    let prim = p.divide_exact(&content)?;
    Ok((content, prim))
}

/// A greatest common divisor, normalized to have grevlex-leading coefficient
/// 1. `gcd(a, 0)` is the normalization of `a`; `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.check_compat(b)?;
    if !a.ring().supports_gcd() {
        return Err(Error::UnsupportedRing(format!(
            "gcd over {} (not a unique factorization domain)",
            a.ring()
        )));
    }
    let g = gcd_inner(a, b)?;
    g.monic()
}

/// gcd of a whole slice, folding cheap operands (monomials, then fewer
/// terms) first so a unit gcd is discovered early.
pub fn gcd_many(polys: &[Polynomial]) -> Result<Polynomial> {
    if polys.is_empty() {
        return Err(Error::Precondition("gcd of empty list".into()));
    }
    let mut order: Vec<&Polynomial> = polys.iter().collect();
    order.sort_by_key(|p| (!p.is_monomial(), p.num_terms()));
    let mut g = gcd(order[0], order[0])?;
    for p in &order[1..] {
        if g.is_one() {
            break;
        }
        g = gcd(&g, p)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::CoefRing;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn vars2() -> Arc<Vec<String>> {
        Arc::new(vec!["x".into(), "y".into()])
    }

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, &CoefRing::rationals(), &vars2()).unwrap()
    }

    #[test]
    fn monomial_case() {
        assert_eq!(gcd(&q("x^2*y"), &q("x*y^2")).unwrap(), q("x*y"));
    }

    #[test]
    fn factored_case() {
        assert_eq!(
            gcd(&q("x^2 - y^2"), &q("x^2 + 2*x*y + y^2")).unwrap(),
            q("x + y")
        );
    }

    #[test]
    fn unit_and_zero_cases() {
        assert_eq!(gcd(&q("x^3 + y - 2"), &q("1")).unwrap(), q("1"));
        assert_eq!(gcd(&q("2*x + 2"), &q("0")).unwrap(), q("x + 1"));
        assert!(gcd(&q("0"), &q("0")).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_ufd_ring() {
        let r = CoefRing::integers_mod_prime_power(3, 2).unwrap();
        let v = vars2();
        let a = parse_polynomial("x", &r, &v).unwrap();
        assert!(matches!(
            gcd(&a, &a),
            Err(Error::UnsupportedRing(_))
        ));
    }

    #[test]
    fn finite_field_gcd() {
        let r = CoefRing::finite_field(7, 1, None).unwrap();
        let v = vars2();
        let p = |s: &str| parse_polynomial(s, &r, &v).unwrap();
        assert_eq!(
            gcd(&p("x^2 - y^2"), &p("x^2 + 2*x*y + y^2")).unwrap(),
            p("x + y")
        );
    }

    fn rand_poly(rng: &mut ChaCha8Rng, nterms: usize) -> Polynomial {
        let r = CoefRing::rationals();
        let v = vars2();
        let mut p = Polynomial::zero(&r, &v);
        for _ in 0..nterms {
            let m = crate::monomial::Monomial(vec![
                rng.gen_range(0..=2u32),
                rng.gen_range(0..=2u32),
            ]);
            let c = r.from_i64(rng.gen_range(-4i64..=4));
            p = p.add(&Polynomial::from_terms(&r, &v, [(m, c)])).unwrap();
        }
        p
    }

    #[test]
    fn gcd_divides_and_scales() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut done = 0;
        while done < 60 {
            let a = rand_poly(&mut rng, 3);
            let b = rand_poly(&mut rng, 3);
            let f = rand_poly(&mut rng, 2);
            if a.is_zero() || b.is_zero() || f.is_zero() {
                continue;
            }
            let g = gcd(&a, &b).unwrap();
            assert!(g.divides(&a), "gcd must divide a");
            assert!(g.divides(&b), "gcd must divide b");
            // gcd(fa, fb) = monic(f) * gcd(a, b)
            let fa = f.mul(&a).unwrap();
            let fb = f.mul(&b).unwrap();
            let lhs = gcd(&fa, &fb).unwrap();
            let rhs = f.monic().unwrap().mul(&g).unwrap().monic().unwrap();
            assert_eq!(lhs, rhs);
            done += 1;
        }
    }
}
