//! Birational self-maps of projective space as normalized homogeneous lifts,
//! polynomial automorphisms of affine space, and divisor transforms.
//!
//! A projective map is stored as k+1 homogeneous polynomials of a common
//! degree with unit gcd, scaled so the grevlex-leading coefficient of the
//! first nonzero entry is 1. Composition substitutes lifts and renormalizes,
//! so intermediate degrees are the true deg(f^n).

use crate::error::{Error, Result};
use crate::gcd::{gcd, gcd_many};
use crate::poly::{jacobian_det, Polynomial};
use crate::ring::{Coef, CoefRing};
use std::sync::Arc;

/// An effective divisor on P^k, up to scalar: a nonzero homogeneous defining
/// polynomial, monic in grevlex order. Degree 0 encodes the zero divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    defining: Polynomial,
}

impl Divisor {
    pub fn new(defining: Polynomial) -> Result<Divisor> {
        if defining.is_zero() {
            return Err(Error::Precondition("divisor needs a nonzero polynomial".into()));
        }
        if defining.homogeneous_degree().is_none() {
            return Err(Error::Precondition("divisor polynomial must be homogeneous".into()));
        }
        Ok(Divisor {
            defining: defining.monic()?,
        })
    }

    pub fn zero(ring: &CoefRing, vars: &Arc<Vec<String>>) -> Divisor {
        Divisor {
            defining: Polynomial::constant(ring, vars, ring.one()),
        }
    }

    pub fn defining(&self) -> &Polynomial {
        &self.defining
    }

    pub fn degree(&self) -> u32 {
        self.defining.total_degree()
    }

    /// Divisor sum: defining polynomials multiply.
    pub fn add(&self, other: &Divisor) -> Result<Divisor> {
        Divisor::new(self.defining.mul(&other.defining)?)
    }
}

/// The Jacobian certificate for the exceptional locus of a map of degree d
/// on P^k: every contracted hypersurface divides `jacobian`, whose total
/// degree is at most m = (d-1)(k+1).
#[derive(Clone, Debug)]
pub struct ExceptionalData {
    pub jacobian: Polynomial,
    pub degree_bound: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveMap {
    k: usize,
    lift: Vec<Polynomial>,
    inverse: Option<Vec<Polynomial>>,
}

/// Canonical scaling: first nonzero entry becomes grevlex-monic.
fn canonical_scale(mut lift: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let lead = lift
        .iter()
        .find(|p| !p.is_zero())
        .and_then(|p| p.leading().map(|(_, c)| c.clone()));
    if let Some(c) = lead {
        let ci = lift[0].ring().inv(&c)?;
        for p in lift.iter_mut() {
            *p = p.scale(&ci);
        }
    }
    Ok(lift)
}

fn check_lift(lift: &[Polynomial]) -> Result<u32> {
    if lift.len() < 2 {
        return Err(Error::InvalidMap("lift needs at least 2 entries".into()));
    }
    for p in &lift[1..] {
        lift[0].check_compat(p)?;
    }
    if lift[0].nvars() != lift.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} lift entries over {} variables",
            lift.len(),
            lift[0].nvars()
        )));
    }
    if lift.iter().all(|p| p.is_zero()) {
        return Err(Error::InvalidMap("all lift entries are zero".into()));
    }
    let mut degree = None;
    for p in lift {
        if p.is_zero() {
            continue;
        }
        let d = p
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidMap(format!("inhomogeneous lift entry {p}")))?;
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => {
                return Err(Error::InvalidMap(format!(
                    "lift degrees differ: {d0} vs {d}"
                )))
            }
            _ => {}
        }
    }
    Ok(degree.unwrap())
}

impl ProjectiveMap {
    /// Divide the lift entries by their gcd and scale canonically.
    pub fn normalize(lift: Vec<Polynomial>) -> Result<ProjectiveMap> {
        let _ = check_lift(&lift)?;
        let g = gcd_many(&lift)?;
        let lift = if g.is_constant() {
            lift
        } else {
            lift.iter()
                .map(|p| p.divide_exact(&g))
                .collect::<Result<Vec<_>>>()?
        };
        let lift = canonical_scale(lift)?;
        Ok(ProjectiveMap {
            k: lift.len() - 1,
            lift,
            inverse: None,
        })
    }

    /// Normalize and attach an inverse lift, verifying both compositions.
    pub fn with_inverse(lift: Vec<Polynomial>, inverse: Vec<Polynomial>) -> Result<ProjectiveMap> {
        let f = ProjectiveMap::normalize(lift)?;
        let g = ProjectiveMap::normalize(inverse)?;
        if !is_inverse_pair(&f, &g)? {
            return Err(Error::InvalidMap("supplied inverse does not verify".into()));
        }
        Ok(ProjectiveMap {
            inverse: Some(g.lift),
            ..f
        })
    }

    pub fn identity(ring: &CoefRing, vars: &Arc<Vec<String>>) -> ProjectiveMap {
        let lift: Vec<Polynomial> = (0..vars.len())
            .map(|i| Polynomial::var(ring, vars, i))
            .collect();
        ProjectiveMap {
            k: vars.len() - 1,
            inverse: Some(lift.clone()),
            lift,
        }
    }

    /// The linear map of an integer matrix (rows act on the variable column).
    pub fn from_matrix(
        ring: &CoefRing,
        vars: &Arc<Vec<String>>,
        matrix: &[Vec<i64>],
    ) -> Result<ProjectiveMap> {
        let n = vars.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare(matrix.len(), n));
        }
        let lift: Vec<Polynomial> = matrix
            .iter()
            .map(|row| {
                let mut p = Polynomial::zero(ring, vars);
                for (j, &a) in row.iter().enumerate() {
                    p = p
                        .add(&Polynomial::var(ring, vars, j).scale(&ring.from_i64(a)))
                        .unwrap();
                }
                p
            })
            .collect();
        ProjectiveMap::normalize(lift)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lift(&self) -> &[Polynomial] {
        &self.lift
    }

    pub fn inverse_lift(&self) -> Option<&[Polynomial]> {
        self.inverse.as_deref()
    }

    pub fn ring(&self) -> &CoefRing {
        self.lift[0].ring()
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        self.lift[0].vars()
    }

    /// Degree of the normalized lift.
    pub fn degree(&self) -> u32 {
        self.lift.iter().map(|p| p.total_degree()).max().unwrap()
    }

    /// self after other: (self . compose(g))(x) = self(g(x)).
    pub fn compose(&self, g: &ProjectiveMap) -> Result<ProjectiveMap> {
        if self.k != g.k {
            return Err(Error::DimensionMismatch(format!(
                "composing maps of P^{} and P^{}",
                self.k, g.k
            )));
        }
        let lift: Vec<Polynomial> = self
            .lift
            .iter()
            .map(|p| p.substitute(&g.lift))
            .collect::<Result<_>>()?;
        let mut out = ProjectiveMap::normalize(lift)?;
        if let (Some(fi), Some(gi)) = (&self.inverse, &g.inverse) {
            let inv: Vec<Polynomial> = gi
                .iter()
                .map(|p| p.substitute(fi))
                .collect::<Result<_>>()?;
            out.inverse = Some(ProjectiveMap::normalize(inv)?.lift);
        }
        Ok(out)
    }

    /// n-fold composition with normalization at every step; f^0 = identity.
    pub fn iterate(&self, n: u32) -> Result<ProjectiveMap> {
        let mut acc = ProjectiveMap::identity(self.ring(), self.vars());
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Evaluate the lift at a point of P^k given by k+1 coordinates. `None`
    /// means every component vanished: the point is an indeterminacy point.
    pub fn evaluate(&self, point: &[Coef]) -> Result<Option<Vec<Coef>>> {
        let ring = self.ring();
        if point.iter().all(|c| ring.is_zero(c)) {
            return Err(Error::ZeroPoint);
        }
        let image: Vec<Coef> = self
            .lift
            .iter()
            .map(|p| p.evaluate(point))
            .collect::<Result<_>>()?;
        if image.iter().all(|c| ring.is_zero(c)) {
            Ok(None)
        } else {
            Ok(Some(image))
        }
    }

    /// Jacobian certificate: the determinant of the (k+1)x(k+1) matrix of
    /// partials of the lift, made monic, with m = (d-1)(k+1).
    pub fn exceptional_data(&self) -> Result<ExceptionalData> {
        let d = self.degree();
        let m = (d - 1) * (self.k as u32 + 1);
        let jac = jacobian_det(&self.lift)?;
        if jac.is_zero() {
            return Err(Error::DegenerateJacobian);
        }
        let jac = jac.monic()?;
        debug_assert!(jac.total_degree() <= m);
        if jac.total_degree() > m {
            return Err(Error::InvalidMap(format!(
                "jacobian degree {} exceeds (d-1)(k+1) = {}",
                jac.total_degree(),
                m
            )));
        }
        Ok(ExceptionalData {
            jacobian: jac,
            degree_bound: m,
        })
    }

    /// Total transform of a divisor: substitute the lift into its defining
    /// polynomial. Degree is exactly d*D.
    pub fn pullback_divisor(&self, e: &Divisor) -> Result<Divisor> {
        if e.defining.nvars() != self.k + 1 {
            return Err(Error::DimensionMismatch(format!(
                "divisor in {} variables on P^{}",
                e.defining.nvars(),
                self.k
            )));
        }
        if e.degree() == 0 {
            return Ok(Divisor::zero(self.ring(), self.vars()));
        }
        Divisor::new(e.defining.substitute(&self.lift)?)
    }

    /// Strict transform: the pullback with every factor shared with the
    /// Jacobian removed to full multiplicity.
    pub fn strict_transform_divisor(&self, e: &Divisor) -> Result<Divisor> {
        let pulled = self.pullback_divisor(e)?;
        let jac = self.exceptional_data()?.jacobian;
        let mut q = pulled.defining;
        loop {
            let g = gcd(&q, &jac)?;
            if g.is_constant() {
                break;
            }
            q = q.divide_exact(&g)?;
        }
        Divisor::new(q)
    }
}

/// True iff both compositions normalize to the identity.
pub fn is_inverse_pair(f: &ProjectiveMap, g: &ProjectiveMap) -> Result<bool> {
    if f.k != g.k {
        return Ok(false);
    }
    let id = ProjectiveMap::identity(f.ring(), f.vars());
    Ok(f.compose(g)?.lift == id.lift && g.compose(f)?.lift == id.lift)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    k: usize,
    components: Vec<Polynomial>,
    inverse: Option<Vec<Polynomial>>,
}

impl AffineMap {
    pub fn new(components: Vec<Polynomial>, inverse: Option<Vec<Polynomial>>) -> Result<AffineMap> {
        if components.is_empty() {
            return Err(Error::InvalidMap("empty affine map".into()));
        }
        for p in &components[1..] {
            components[0].check_compat(p)?;
        }
        if components[0].nvars() != components.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} components over {} variables",
                components.len(),
                components[0].nvars()
            )));
        }
        if components.iter().any(|p| p.is_zero() || p.total_degree() < 1) {
            return Err(Error::InvalidMap(
                "affine map components must have degree >= 1".into(),
            ));
        }
        let k = components.len();
        if let Some(inv) = &inverse {
            if inv.len() != k {
                return Err(Error::DimensionMismatch("inverse component count".into()));
            }
            let ring = components[0].ring();
            let vars = components[0].vars();
            let idents: Vec<Polynomial> =
                (0..k).map(|i| Polynomial::var(ring, vars, i)).collect();
            for dir in [(&components, inv), (inv, &components)] {
                for (i, p) in dir.0.iter().enumerate() {
                    if p.substitute(dir.1)? != idents[i] {
                        return Err(Error::InvalidMap(
                            "supplied affine inverse does not verify".into(),
                        ));
                    }
                }
            }
        }
        Ok(AffineMap {
            k,
            components,
            inverse,
        })
    }

    pub fn identity(ring: &CoefRing, vars: &Arc<Vec<String>>) -> AffineMap {
        let components: Vec<Polynomial> = (0..vars.len())
            .map(|i| Polynomial::var(ring, vars, i))
            .collect();
        AffineMap {
            k: vars.len(),
            inverse: Some(components.clone()),
            components,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn inverse_components(&self) -> Option<&[Polynomial]> {
        self.inverse.as_deref()
    }

    pub fn ring(&self) -> &CoefRing {
        self.components[0].ring()
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        self.components[0].vars()
    }

    /// Max of the component total degrees (deg^H for the standard
    /// compactification of affine space).
    pub fn affine_degree(&self) -> u32 {
        self.components
            .iter()
            .map(|p| p.total_degree())
            .max()
            .unwrap()
    }

    pub fn compose(&self, g: &AffineMap) -> Result<AffineMap> {
        if self.k != g.k {
            return Err(Error::DimensionMismatch(format!(
                "composing maps of A^{} and A^{}",
                self.k, g.k
            )));
        }
        let components: Vec<Polynomial> = self
            .components
            .iter()
            .map(|p| p.substitute(&g.components))
            .collect::<Result<_>>()?;
        let inverse = match (&self.inverse, &g.inverse) {
            (Some(fi), Some(gi)) => Some(
                gi.iter()
                    .map(|p| p.substitute(fi))
                    .collect::<Result<Vec<_>>>()?,
            ),
            _ => None,
        };
        AffineMap::new(components, inverse)
    }

    pub fn iterate(&self, n: u32) -> Result<AffineMap> {
        let mut acc = AffineMap::identity(self.ring(), self.vars());
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Homogenize to a normalized lift on P^k with one extra variable.
    pub fn to_projective(&self) -> Result<ProjectiveMap> {
        let d = self.affine_degree();
        let hvar = fresh_var_name(self.vars());
        let mut lift: Vec<Polynomial> = self
            .components
            .iter()
            .map(|p| p.homogenize(&hvar, d))
            .collect::<Result<_>>()?;
        // the extra coordinate maps to hvar^d
        let ring = self.ring();
        let one = Polynomial::constant(ring, self.vars(), ring.one());
        lift.push(one.homogenize(&hvar, d)?);
        ProjectiveMap::normalize(lift)
    }

    /// Degree of the normalized projective lift.
    pub fn projective_degree(&self) -> Result<u32> {
        Ok(self.to_projective()?.degree())
    }
}

fn fresh_var_name(vars: &Arc<Vec<String>>) -> String {
    for cand in ["z", "w", "u", "t", "h"] {
        if !vars.iter().any(|v| v == cand) {
            return cand.to_string();
        }
    }
    let mut i = 0;
    loop {
        let cand = format!("h{i}");
        if !vars.iter().any(|v| *v == cand) {
            return cand;
        }
        i += 1;
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

    fn vars3() -> Arc<Vec<String>> {
        Arc::new(vec!["x".into(), "y".into(), "z".into()])
    }

    fn vars2() -> Arc<Vec<String>> {
        Arc::new(vec!["x".into(), "y".into()])
    }

    fn p3(s: &str) -> Polynomial {
        parse_polynomial(s, &qring(), &vars3()).unwrap()
    }

    fn sigma() -> ProjectiveMap {
        ProjectiveMap::with_inverse(
            vec![p3("y*z"), p3("x*z"), p3("x*y")],
            vec![p3("y*z"), p3("x*z"), p3("x*y")],
        )
        .unwrap()
    }

    #[test]
    fn normalize_examples() {
        let m = ProjectiveMap::normalize(vec![p3("x^2*y*z"), p3("x*y^2*z"), p3("x*y*z^2")])
            .unwrap();
        assert_eq!(m.lift(), &[p3("x"), p3("y"), p3("z")]);
        let m = ProjectiveMap::normalize(vec![p3("x"), p3("y"), p3("z")]).unwrap();
        assert_eq!(m.lift(), &[p3("x"), p3("y"), p3("z")]);
        let m = ProjectiveMap::normalize(vec![p3("2*x"), p3("2*y"), p3("2*z")]).unwrap();
        assert_eq!(m.lift(), &[p3("x"), p3("y"), p3("z")]);
        assert!(ProjectiveMap::normalize(vec![p3("x + x^2"), p3("y"), p3("z")]).is_err());
        assert!(ProjectiveMap::normalize(vec![p3("x^2"), p3("y"), p3("z")]).is_err());
    }

    #[test]
    fn sigma_is_involution() {
        let s = sigma();
        let id = ProjectiveMap::identity(&qring(), &vars3());
        assert_eq!(s.compose(&s).unwrap().lift(), id.lift());
        assert_eq!(s.iterate(2).unwrap().lift(), id.lift());
        assert_eq!(s.iterate(0).unwrap().lift(), id.lift());
        assert_eq!(s.iterate(1).unwrap().lift(), s.lift());
        assert!(is_inverse_pair(&s, &s).unwrap());
        assert!(!is_inverse_pair(&s, &id).unwrap());
        assert!(is_inverse_pair(&id, &id).unwrap());
    }

    #[test]
    fn compose_identity_and_matrices() {
        let s = sigma();
        let id = ProjectiveMap::identity(&qring(), &vars3());
        assert_eq!(s.compose(&id).unwrap().lift(), s.lift());
        let a = [[1i64, 2, 0], [0, 1, 1], [1, 0, 1]];
        let b = [[2i64, 0, 1], [1, 1, 0], [0, 3, 1]];
        let prod = [[4i64, 2, 1], [1, 4, 1], [2, 3, 2]]; // a * b by hand
        let ma = ProjectiveMap::from_matrix(&qring(), &vars3(), &a.map(|r| r.to_vec())).unwrap();
        let mb = ProjectiveMap::from_matrix(&qring(), &vars3(), &b.map(|r| r.to_vec())).unwrap();
        let mp =
            ProjectiveMap::from_matrix(&qring(), &vars3(), &prod.map(|r| r.to_vec())).unwrap();
        assert_eq!(ma.compose(&mb).unwrap().lift(), mp.lift());
    }

    #[test]
    fn pullback_examples() {
        let s = sigma();
        let line = Divisor::new(p3("x")).unwrap();
        let pb = s.pullback_divisor(&line).unwrap();
        assert_eq!(pb.defining(), &p3("y*z"));
        assert_eq!(pb.degree(), 2);
        let id = ProjectiveMap::identity(&qring(), &vars3());
        assert_eq!(id.pullback_divisor(&line).unwrap(), line);
        let zero = Divisor::zero(&qring(), &vars3());
        assert_eq!(s.pullback_divisor(&zero).unwrap().degree(), 0);
    }

    #[test]
    fn strict_transform_examples() {
        let s = sigma();
        let line = Divisor::new(p3("x")).unwrap();
        // pullback yz is entirely exceptional
        assert_eq!(s.strict_transform_divisor(&line).unwrap().degree(), 0);
        let id = ProjectiveMap::identity(&qring(), &vars3());
        let e = Divisor::new(p3("x^2 + y*z")).unwrap();
        assert_eq!(id.strict_transform_divisor(&e).unwrap(), e);
        // generic line: no cancellation
        let gen = Divisor::new(p3("1234567891*x + 987654323*y + 1122334455*z")).unwrap();
        assert_eq!(s.strict_transform_divisor(&gen).unwrap().degree(), 2);
    }

    #[test]
    fn strict_transform_is_additive() {
        let s = sigma();
        let e1 = Divisor::new(p3("x + 7*y")).unwrap();
        let e2 = Divisor::new(p3("3*x - z")).unwrap();
        let lhs = s.strict_transform_divisor(&e1.add(&e2).unwrap()).unwrap();
        let rhs = s
            .strict_transform_divisor(&e1)
            .unwrap()
            .add(&s.strict_transform_divisor(&e2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exceptional_examples() {
        let s = sigma();
        let ed = s.exceptional_data().unwrap();
        assert_eq!(ed.jacobian, p3("x*y*z"));
        assert_eq!(ed.degree_bound, 3);
        let id = ProjectiveMap::identity(&qring(), &vars3());
        let ed = id.exceptional_data().unwrap();
        assert!(ed.jacobian.is_constant());
        assert_eq!(ed.degree_bound, 0);
        let a = ProjectiveMap::from_matrix(
            &qring(),
            &vars3(),
            &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 2]],
        )
        .unwrap();
        let ed = a.exceptional_data().unwrap();
        assert!(ed.jacobian.is_constant());
        assert_eq!(ed.degree_bound, 0);
    }

    #[test]
    fn evaluate_examples() {
        let s = sigma();
        let one = qring().one();
        let zero = qring().zero();
        let img = s
            .evaluate(&[one.clone(), one.clone(), one.clone()])
            .unwrap()
            .unwrap();
        assert!(img.iter().all(|c| qring().is_one(c)));
        assert_eq!(
            s.evaluate(&[one.clone(), zero.clone(), zero.clone()]).unwrap(),
            None
        );
        assert!(matches!(
            s.evaluate(&[zero.clone(), zero.clone(), zero]),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn affine_examples() {
        let v2 = vars2();
        let p2 = |s: &str| parse_polynomial(s, &qring(), &v2).unwrap();
        let e = AffineMap::new(vec![p2("x + y^2"), p2("y")], Some(vec![p2("x - y^2"), p2("y")]))
            .unwrap();
        assert_eq!(e.affine_degree(), 2);
        let pe = e.to_projective().unwrap();
        assert_eq!(pe.lift(), &[p3("x*z + y^2"), p3("y*z"), p3("z^2")]);
        assert_eq!(e.projective_degree().unwrap(), 2);
        let id = AffineMap::identity(&qring(), &v2);
        assert_eq!(id.affine_degree(), 1);
        assert_eq!(id.projective_degree().unwrap(), 1);
        let h = AffineMap::new(vec![p2("y"), p2("y^2 - x")], Some(vec![p2("x^2 - y"), p2("x")]))
            .unwrap();
        assert_eq!(h.affine_degree(), 2);
        assert_eq!(h.projective_degree().unwrap(), 2);
        // e^n = (x + n y^2, y)
        assert_eq!(
            e.iterate(5).unwrap().components()[0],
            p2("x + 5*y^2")
        );
        assert!(AffineMap::new(
            vec![p2("x"), p2("y")],
            Some(vec![p2("x + 1"), p2("y")])
        )
        .is_err());
    }

    fn random_linear(rng: &mut ChaCha8Rng) -> ProjectiveMap {
        loop {
            let m: Vec<Vec<i64>> = (0..3)
                .map(|_| (0..3).map(|_| rng.gen_range(-9i64..=9)).collect())
                .collect();
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            if det != 0 {
                return ProjectiveMap::from_matrix(&qring(), &vars3(), &m).unwrap();
            }
        }
    }

    /// A random quadratic birational map: the Cremona involution conjugated
    /// and twisted by random linear maps.
    pub(crate) fn random_quadratic(rng: &mut ChaCha8Rng) -> ProjectiveMap {
        let s = sigma();
        let a = random_linear(rng);
        let f = s.compose(&a).unwrap();
        if f.degree() == 2 {
            f
        } else {
            // degenerate draw (degree dropped); retry
            random_quadratic(rng)
        }
    }

    #[test]
    fn submultiplicativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..25 {
            let f = random_quadratic(&mut rng);
            let g = random_quadratic(&mut rng);
            let fg = f.compose(&g).unwrap();
            assert!(fg.degree() <= f.degree() * g.degree());
        }
    }

    #[test]
    fn iterate_additivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = random_quadratic(&mut rng);
        for (a, b) in [(1u32, 1u32), (1, 2), (2, 2)] {
            let lhs = f.iterate(a + b).unwrap();
            let rhs = f.iterate(a).unwrap().compose(&f.iterate(b).unwrap()).unwrap();
            assert_eq!(lhs.lift(), rhs.lift());
        }
    }

    #[test]
    fn jacobian_degree_bound_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let f = random_quadratic(&mut rng);
            let ed = f.exceptional_data().unwrap();
            assert!(ed.jacobian.total_degree() <= ed.degree_bound);
            assert_eq!(ed.degree_bound, 3);
        }
    }
}
