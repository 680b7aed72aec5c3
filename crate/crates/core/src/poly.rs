//! Sparse multivariate polynomials over an exchangeable coefficient ring.
//!
//! Terms are kept in a map keyed by grevlex-ordered monomials, so equal
//! polynomials have identical printed forms and hashes. Values are immutable:
//! every operation returns a fresh polynomial.

use crate::dense;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{Coef, CoefRing};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: CoefRing,
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Coef>,
}

impl Polynomial {
    pub fn zero(ring: &CoefRing, vars: &Arc<Vec<String>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &CoefRing, vars: &Arc<Vec<String>>, c: Coef) -> Self {
        let mut p = Self::zero(ring, vars);
        if !ring.is_zero(&c) {
            p.terms.insert(Monomial::constant(vars.len()), c);
        }
        p
    }

    pub fn from_i64(ring: &CoefRing, vars: &Arc<Vec<String>>, v: i64) -> Self {
        Self::constant(ring, vars, ring.from_i64(v))
    }

    pub fn var(ring: &CoefRing, vars: &Arc<Vec<String>>, idx: usize) -> Self {
        let mut p = Self::zero(ring, vars);
        p.terms.insert(Monomial::var(vars.len(), idx), ring.one());
        p
    }

    pub fn from_terms<I>(ring: &CoefRing, vars: &Arc<Vec<String>>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coef)>,
    {
        let mut p = Self::zero(ring, vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &CoefRing {
        &self.ring
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coef)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_constant() && self.ring.is_one(c))
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Grevlex-leading term.
    pub fn leading(&self) -> Option<(&Monomial, &Coef)> {
        self.terms.iter().next_back()
    }

    pub fn coef(&self, m: &Monomial) -> Coef {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `Some(d)` when all terms share total degree d (zero counts as
    /// homogeneous of every degree; reported as degree 0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(m) => m.total_degree(),
        };
        if it.all(|m| m.total_degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: Coef) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = self.ring.add(&old, &c);
                if !self.ring.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn check_compat(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        if self.vars != other.vars {
            return Err(Error::VarsMismatch(format!(
                "{:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coef) -> Polynomial {
        if self.ring.is_zero(c) {
            return Polynomial::zero(&self.ring, &self.vars);
        }
        let mut out = Polynomial::zero(&self.ring, &self.vars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), self.ring.mul(v, c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coef) -> Polynomial {
        if self.ring.is_zero(c) {
            return Polynomial::zero(&self.ring, &self.vars);
        }
        let mut out = Polynomial::zero(&self.ring, &self.vars);
        for (mm, v) in &self.terms {
            out.add_term(mm.mul(m), self.ring.mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.mul_capped(other, None).map(|(p, _)| p)
    }

    /// Multiply, optionally dropping terms of total degree above `cap`.
    /// The boolean reports whether anything was dropped.
    pub fn mul_capped(&self, other: &Polynomial, cap: Option<u32>) -> Result<(Polynomial, bool)> {
        self.check_compat(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok((Polynomial::zero(&self.ring, &self.vars), false));
        }
        // single-term operands reduce to a monomial scale
        if self.terms.len() == 1 {
            let (m, c) = self.leading().unwrap();
            let (m, c) = (m.clone(), c.clone());
            return Ok(truncate(other.mul_monomial(&m, &c), cap));
        }
        if other.terms.len() == 1 {
            let (m, c) = other.leading().unwrap();
            let (m, c) = (m.clone(), c.clone());
            return Ok(truncate(self.mul_monomial(&m, &c), cap));
        }
        if cap.is_none() {
            if let Some(p) = dense::try_mul_dense(self, other)? {
                return Ok((p, false));
            }
        }
        let mut out = Polynomial::zero(&self.ring, &self.vars);
        let mut dropped = false;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(cap) = cap {
                    if ma.total_degree() + mb.total_degree() > cap {
                        dropped = true;
                        continue;
                    }
                }
                out.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok((out, dropped))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(&self.ring, &self.vars, self.ring.one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Replace variable i by `images[i]`. The result lives in the images'
    /// variable set, which may differ from this polynomial's.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        self.substitute_capped(images, None).map(|(p, _)| p)
    }

    pub fn substitute_capped(
        &self,
        images: &[Polynomial],
        cap: Option<u32>,
    ) -> Result<(Polynomial, bool)> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars()
            )));
        }
        for im in images {
            if im.ring != self.ring {
                return Err(Error::RingMismatch("substitution image ring".into()));
            }
        }
        let (tring, tvars) = match images.first() {
            Some(im) => (im.ring.clone(), im.vars.clone()),
            None => (self.ring.clone(), self.vars.clone()),
        };
        for im in images {
            if im.vars != tvars {
                return Err(Error::VarsMismatch("substitution images".into()));
            }
        }
        // lazily grown power caches, one per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|im| vec![Polynomial::constant(&tring, &tvars, tring.one()), im.clone()])
            .collect();
        let mut dropped = false;
        let mut out = Polynomial::zero(&tring, &tvars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&tring, &tvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let last = powers[i].last().unwrap();
                    let (next, d) = last.mul_capped(&images[i], cap)?;
                    dropped |= d;
                    powers[i].push(next);
                }
                let (t, d) = term.mul_capped(&powers[i][e as usize], cap)?;
                dropped |= d;
                term = t;
            }
            out = out.add(&term)?;
        }
        Ok((out, dropped))
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring, &self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[var] = e - 1;
            out.add_term(nm, self.ring.mul(c, &self.ring.from_i64(e as i64)));
        }
        out
    }

    /// Exact quotient; errors with `NotDivisible` if `divisor` does not divide.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_compat(divisor)?;
        if divisor.is_zero() {
            return Err(Error::NotDivisible("division by zero polynomial".into()));
        }
        // monomial divisor: per-term division
        if divisor.terms.len() == 1 {
            let (dm, dc) = divisor.leading().unwrap();
            let dci = self.ring.inv(dc).map_err(|_| {
                Error::NotDivisible("leading coefficient is not a unit".into())
            })?;
            let mut out = Polynomial::zero(&self.ring, &self.vars);
            for (m, c) in &self.terms {
                let q = m.try_div(dm).ok_or_else(|| {
                    Error::NotDivisible(format!("monomial {m:?} not divisible"))
                })?;
                out.add_term(q, self.ring.mul(c, &dci));
            }
            return Ok(out);
        }
        let (dm, dc) = divisor.leading().unwrap();
        let (dm, dc) = (dm.clone(), dc.clone());
        let dci = self
            .ring
            .inv(&dc)
            .map_err(|_| Error::NotDivisible("leading coefficient is not a unit".into()))?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring, &self.vars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm
                .try_div(&dm)
                .ok_or_else(|| Error::NotDivisible("leading monomial not divisible".into()))?;
            let qc = self.ring.mul(rc, &dci);
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&divisor.mul_monomial(&qm, &qc))?;
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.divide_exact(self).is_ok()
    }

    /// Scale so the grevlex-leading coefficient is 1 (field rings only).
    pub fn monic(&self) -> Result<Polynomial> {
        if !self.ring.supports_gcd() && !self.ring.is_field() {
            return Err(Error::UnsupportedRing(format!("{}", self.ring)));
        }
        match self.leading() {
            None => Ok(self.clone()),
            Some((_, c)) => {
                let ci = self.ring.inv(c)?;
                Ok(self.scale(&ci))
            }
        }
    }

    /// Homogenize with a fresh variable appended, to the requested degree.
    pub fn homogenize(&self, newvar: &str, degree: u32) -> Result<Polynomial> {
        let d0 = self.total_degree();
        if degree < d0 {
            return Err(Error::DegreeTooSmall {
                requested: degree,
                needed: d0,
            });
        }
        let mut vars = (*self.vars).clone();
        vars.push(newvar.to_string());
        let vars = Arc::new(vars);
        let mut out = Polynomial::zero(&self.ring, &vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.push(degree - m.total_degree());
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Set the named variable to 1 and drop it from the variable list.
    pub fn dehomogenize(&self, var: &str) -> Result<Polynomial> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::VarsMismatch(format!("no variable {var}")))?;
        let mut vars = (*self.vars).clone();
        vars.remove(idx);
        let vars = Arc::new(vars);
        let mut out = Polynomial::zero(&self.ring, &vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(idx);
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Set the variable at `idx` to 1, keeping the variable list (exponent
    /// zeroed). Used for affine-chart computations.
    pub fn set_var_to_one(&self, idx: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring, &self.vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e[idx] = 0;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[Coef]) -> Result<Coef> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for {} variables",
                point.len(),
                self.nvars()
            )));
        }
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = self.ring.mul(&t, &self.ring.pow(&point[i], e as u64));
                }
            }
            acc = self.ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Minimum over terms of the p-valuation of the coefficient, for
    /// Z/p^N coefficients; `None` for the zero polynomial (valuation >= N).
    pub fn min_valuation(&self) -> Option<u32> {
        let (p, n) = match &self.ring {
            CoefRing::IntegersModPrimePower { p, n, .. } => (*p, *n),
            _ => return None,
        };
        let mut best: Option<u32> = None;
        for c in self.terms.values() {
            if let Coef::ModP(r) = c {
                let mut v = 0u32;
                let mut r = r.clone();
                let pb = num_bigint::BigUint::from(p);
                while v < n && (&r % &pb) == num_bigint::BigUint::from(0u32) {
                    r /= &pb;
                    v += 1;
                }
                best = Some(best.map_or(v, |b| b.min(v)));
                if best == Some(0) {
                    break;
                }
            }
        }
        best
    }

    /// Drop terms of total degree above `cap`; reports whether any were.
    pub fn truncate_above(&self, cap: u32) -> (Polynomial, bool) {
        truncate(self.clone(), Some(cap))
    }
}

fn truncate(p: Polynomial, cap: Option<u32>) -> (Polynomial, bool) {
    match cap {
        None => (p, false),
        Some(cap) => {
            let mut out = Polynomial::zero(&p.ring, &p.vars);
            let mut dropped = false;
            for (m, c) in p.terms {
                if m.total_degree() > cap {
                    dropped = true;
                } else {
                    out.terms.insert(m, c);
                }
            }
            (out, dropped)
        }
    }
}

/// Determinant of the k x k matrix of partial derivatives, by cofactor
/// expansion along the first row.
pub fn jacobian_det(components: &[Polynomial]) -> Result<Polynomial> {
    let k = components.len();
    if k == 0 {
        return Err(Error::NonSquare(0, 0));
    }
    let nv = components[0].nvars();
    if nv != k {
        return Err(Error::NonSquare(k, nv));
    }
    for c in components {
        components[0].check_compat(c)?;
    }
    let mut matrix = Vec::with_capacity(k);
    for comp in components {
        let row: Vec<Polynomial> = (0..k).map(|j| comp.derivative(j)).collect();
        matrix.push(row);
    }
    det(&matrix)
}

pub(crate) fn det(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    let vars = m[0][0].vars().clone();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = Polynomial::zero(&ring, &vars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = m[0][j].mul(&det(&minor)?)?;
        if j % 2 == 0 {
            acc = acc.add(&cof)?;
        } else {
            acc = acc.sub(&cof)?;
        }
    }
    Ok(acc)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = self.ring.format(c);
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if mag != "1" || m.is_constant() {
                parts.push(mag);
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars[i].clone()),
                    _ => parts.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn qring() -> CoefRing {
        CoefRing::rationals()
    }

    fn vars(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    fn p(s: &str, vs: &Arc<Vec<String>>) -> Polynomial {
        parse_polynomial(s, &qring(), vs).unwrap()
    }

    #[test]
    fn add_examples() {
        let vs = vars(&["x", "y"]);
        assert_eq!(p("x + y", &vs).add(&p("x - y", &vs)).unwrap(), p("2*x", &vs));
        let q = p("x^2*y + 3", &vs);
        assert_eq!(q.add(&Polynomial::zero(&qring(), &vs)).unwrap(), q);
        assert_eq!(
            p("x^2*y + 3", &vs).add(&p("-x^2*y", &vs)).unwrap(),
            p("3", &vs)
        );
    }

    #[test]
    fn mul_examples() {
        let vs = vars(&["x", "y"]);
        assert_eq!(
            p("x + y", &vs).mul(&p("x - y", &vs)).unwrap(),
            p("x^2 - y^2", &vs)
        );
        let q = p("x^2*y - 7", &vs);
        assert_eq!(q.mul(&p("1", &vs)).unwrap(), q);
        let vs3 = vars(&["x", "y", "z"]);
        assert_eq!(
            p("x + y + z", &vs3).pow(2).unwrap(),
            p("x^2 + y^2 + z^2 + 2*x*y + 2*x*z + 2*y*z", &vs3)
        );
    }

    #[test]
    fn mul_degree_additivity() {
        let vs = vars(&["x", "y"]);
        let a = p("x^3 + y + 1", &vs);
        let b = p("x*y^2 - 2", &vs);
        assert_eq!(
            a.mul(&b).unwrap().total_degree(),
            a.total_degree() + b.total_degree()
        );
    }

    #[test]
    fn substitute_examples() {
        let vs = vars(&["x", "y"]);
        let images = vec![p("y", &vs), p("x", &vs)];
        assert_eq!(
            p("x^2 + y", &vs).substitute(&images).unwrap(),
            p("y^2 + x", &vs)
        );
        let ident = vec![
            Polynomial::var(&qring(), &vs, 0),
            Polynomial::var(&qring(), &vs, 1),
        ];
        let q = p("x^3*y - 5*x + 2", &vs);
        assert_eq!(q.substitute(&ident).unwrap(), q);
        let vs3 = vars(&["x", "y", "z"]);
        let imgs = vec![p("y*z", &vs3), p("x*z", &vs3)];
        let xy = parse_polynomial("x*y", &qring(), &vars(&["x", "y"])).unwrap();
        assert_eq!(xy.substitute(&imgs).unwrap(), p("x*y*z^2", &vs3));
    }

    #[test]
    fn substitute_composition_law() {
        // substitute(substitute(p, g), h) = substitute(p, g o h componentwise)
        let vs = vars(&["x", "y"]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let mut q = Polynomial::zero(&qring(), &vs);
                for _ in 0..4 {
                    let m = Monomial(vec![rng.gen_range(0..=2u32), rng.gen_range(0..=1u32)]);
                    q = q
                        .add(&Polynomial::from_terms(
                            &qring(),
                            &vs,
                            [(m, qring().from_i64(rng.gen_range(-3i64..=3)))],
                        ))
                        .unwrap();
                }
                q
            };
            let f = rand_poly(&mut rng);
            let g = vec![rand_poly(&mut rng), rand_poly(&mut rng)];
            let h = vec![rand_poly(&mut rng), rand_poly(&mut rng)];
            let lhs = f.substitute(&g).unwrap().substitute(&h).unwrap();
            let gh: Vec<Polynomial> = g.iter().map(|gi| gi.substitute(&h).unwrap()).collect();
            assert_eq!(lhs, f.substitute(&gh).unwrap());
        }
    }

    #[test]
    fn divide_exact_examples() {
        let vs = vars(&["x", "y"]);
        assert_eq!(
            p("x^2 - y^2", &vs).divide_exact(&p("x - y", &vs)).unwrap(),
            p("x + y", &vs)
        );
        let q = p("x^2*y - 3*x + 1", &vs);
        assert_eq!(q.divide_exact(&q).unwrap(), p("1", &vs));
        let vs3 = vars(&["x", "y", "z"]);
        assert_eq!(
            p("x^2*y*z + x*y^2*z + x*y*z^2", &vs3)
                .divide_exact(&p("x*y*z", &vs3))
                .unwrap(),
            p("x + y + z", &vs3)
        );
        assert!(matches!(
            p("x^2 + 1", &vs).divide_exact(&p("x + 1", &vs)),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn jacobian_examples() {
        let vs = vars(&["x", "y"]);
        assert_eq!(
            jacobian_det(&[p("x", &vs), p("y", &vs)]).unwrap(),
            p("1", &vs)
        );
        let vs3 = vars(&["x", "y", "z"]);
        assert_eq!(
            jacobian_det(&[p("y*z", &vs3), p("x*z", &vs3), p("x*y", &vs3)]).unwrap(),
            p("2*x*y*z", &vs3)
        );
        assert_eq!(
            jacobian_det(&[p("x + y^2", &vs), p("y", &vs)]).unwrap(),
            p("1", &vs)
        );
    }

    #[test]
    fn homogenize_examples() {
        let vs = vars(&["x", "y"]);
        let vs3 = vars(&["x", "y", "z"]);
        assert_eq!(
            p("x + y^2", &vs).homogenize("z", 2).unwrap(),
            p("x*z + y^2", &vs3)
        );
        assert_eq!(
            p("x*z + y^2", &vs3).dehomogenize("z").unwrap(),
            p("x + y^2", &vs)
        );
        assert_eq!(p("1", &vs).homogenize("z", 3).unwrap(), p("z^3", &vs3));
        assert!(p("x^3", &vs).homogenize("z", 2).is_err());
    }

    #[test]
    fn homogenize_round_trip() {
        let vs = vars(&["x", "y"]);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let mut q = Polynomial::zero(&qring(), &vs);
            for _ in 0..5 {
                let m = Monomial(vec![rng.gen_range(0..=3u32), rng.gen_range(0..=3u32)]);
                q = q
                    .add(&Polynomial::from_terms(
                        &qring(),
                        &vs,
                        [(m, qring().from_i64(rng.gen_range(-5i64..=5)))],
                    ))
                    .unwrap();
            }
            if q.is_zero() {
                continue;
            }
            let h = q.homogenize("z", q.total_degree()).unwrap();
            assert_eq!(h.dehomogenize("z").unwrap(), q);
        }
    }

    #[test]
    fn canonical_printing() {
        let vs = vars(&["x", "y", "z"]);
        assert_eq!(p("2*x^2*y - 3*z + 1", &vs).to_string(), "2*x^2*y - 3*z + 1");
        assert_eq!(p("1 - 3*z + 2*x^2*y", &vs).to_string(), "2*x^2*y - 3*z + 1");
        assert_eq!(Polynomial::zero(&qring(), &vs).to_string(), "0");
        assert_eq!(p("-x", &vs).to_string(), "-x");
    }

    #[test]
    fn printing_round_trip() {
        let vs = vars(&["x", "y", "z"]);
        let q = p("x^2 - 1/2*y*z + 7", &vs)
            .mul(&p("x - y", &vs))
            .unwrap();
        assert_eq!(parse_polynomial(&q.to_string(), &qring(), &vs).unwrap(), q);
    }

    #[test]
    fn mismatch_errors() {
        let vs = vars(&["x", "y"]);
        let vs2 = vars(&["u", "v"]);
        let a = p("x", &vs);
        let b = parse_polynomial("u", &qring(), &vs2).unwrap();
        assert!(matches!(a.add(&b), Err(Error::VarsMismatch(_))));
        let fp = CoefRing::finite_field(5, 1, None).unwrap();
        let c = parse_polynomial("x", &fp, &vs).unwrap();
        assert!(matches!(a.add(&c), Err(Error::RingMismatch(_))));
    }
}
