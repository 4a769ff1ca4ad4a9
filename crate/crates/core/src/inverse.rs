//! Drazin, strongly Drazin and Hirano inverses: existence criteria, certified
//! constructions, tripotent decompositions and the brute-force oracles that
//! anchor them on finite rings.
//!
//! For an element `a` and a candidate `b`, all three inverses require `ab = ba`
//! and `bab = b`; they differ in the defect required to be nilpotent:
//!
//! | inverse          | nilpotent defect |
//! |------------------|------------------|
//! | Drazin           | `a - a²b`        |
//! | strongly Drazin  | `a - ab`         |
//! | Hirano           | `a² - ab`        |

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lifting::{lift_idempotent, PolynomialCertificate};
use crate::ring::{
    char_poly, inverse_of_unipotent, is_nilpotent, Element, IntPoly, NilpotencyWitness, RingSpec,
};

fn commute_and_absorb(a: &Element, b: &Element) -> bool {
    a.ring() == b.ring() && a.commutes_with(b) && &(&(b * a) * b) == b
}

/// `b` is the Hirano inverse of `a`: `a² - ab` nilpotent, `ab = ba`, `bab = b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HiranoCertificate {
    pub source: Element,
    pub inverse: Element,
    pub defect: Element,
    pub defect_witness: NilpotencyWitness,
}

impl HiranoCertificate {
    /// Checks the three axioms for the candidate `b`.
    pub fn certify(a: &Element, b: &Element) -> Option<Self> {
        if !commute_and_absorb(a, b) {
            return None;
        }
        let defect = &(a * a) - &(a * b);
        let defect_witness = is_nilpotent(&defect)?;
        Some(HiranoCertificate {
            source: a.clone(),
            inverse: b.clone(),
            defect,
            defect_witness,
        })
    }

    pub fn is_valid(&self) -> bool {
        Self::certify(&self.source, &self.inverse).as_ref() == Some(self)
    }
}

/// `b` is the strongly Drazin inverse of `a`: `a - ab` nilpotent, `ab = ba`, `bab = b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SDrazinCertificate {
    pub source: Element,
    pub inverse: Element,
    pub defect: Element,
    pub defect_witness: NilpotencyWitness,
}

impl SDrazinCertificate {
    pub fn certify(a: &Element, b: &Element) -> Option<Self> {
        if !commute_and_absorb(a, b) {
            return None;
        }
        let defect = a - &(a * b);
        let defect_witness = is_nilpotent(&defect)?;
        Some(SDrazinCertificate {
            source: a.clone(),
            inverse: b.clone(),
            defect,
            defect_witness,
        })
    }
}

/// `b` is the Drazin inverse of `a`, with the least `k >= 1` such that `a^k = a^(k+1) b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrazinCertificate {
    pub source: Element,
    pub inverse: Element,
    pub defect: Element,
    pub defect_witness: NilpotencyWitness,
    pub index: u32,
}

impl DrazinCertificate {
    pub fn certify(a: &Element, b: &Element) -> Option<Self> {
        if !commute_and_absorb(a, b) {
            return None;
        }
        let defect = a - &(&(a * a) * b);
        let defect_witness = is_nilpotent(&defect)?;
        // ab is idempotent, so defect^m = a^m (1 - ab) and k <= m.
        let mut ak = a.clone();
        let mut index = None;
        for k in 1..=defect_witness.index {
            if ak == &(&ak * a) * b {
                index = Some(k);
                break;
            }
            ak = &ak * a;
        }
        Some(DrazinCertificate {
            source: a.clone(),
            inverse: b.clone(),
            defect,
            defect_witness,
            index: index?,
        })
    }
}

/// Least `index >= 1` and `period >= 1` with `a^(index + period) = a^index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SemigroupProfile {
    pub index: u64,
    pub period: u64,
}

/// `a = p + w` with `p³ = p`, `w` nilpotent, `pw = wp`, and `p = e - f` for commuting
/// idempotents `e, f`. `p`, `e`, `f` all come with polynomial certificates in `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripotentDecomposition {
    pub subject: Element,
    pub tripotent: Element,
    pub nilpotent: Element,
    pub nilpotent_witness: NilpotencyWitness,
    pub idempotent_plus: Element,
    pub idempotent_minus: Element,
    pub tripotent_certificate: PolynomialCertificate,
    pub plus_certificate: PolynomialCertificate,
    pub minus_certificate: PolynomialCertificate,
}

/// Which generalized inverses an element has, with certificates.
///
/// `has_drazin` is `None` when existence is undecided: integer matrices are
/// decided only through the Hirano criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseReport {
    pub ring: RingSpec,
    pub element: Element,
    pub has_drazin: Option<bool>,
    pub has_strongly_drazin: bool,
    pub has_hirano: bool,
    pub drazin: Option<DrazinCertificate>,
    pub strongly_drazin: Option<SDrazinCertificate>,
    pub hirano: Option<HiranoCertificate>,
}

/// Witness that `a - a³` is nilpotent, i.e. that `a` has a Hirano inverse.
pub fn hirano_criterion(a: &Element) -> Option<NilpotencyWitness> {
    is_nilpotent(&(a - &a.pow(3)))
}

pub fn has_hirano(a: &Element) -> bool {
    hirano_criterion(a).is_some()
}

/// Witness that `a - a²` is nilpotent, i.e. that `a` has a strongly Drazin inverse.
pub fn strongly_drazin_criterion(a: &Element) -> Option<NilpotencyWitness> {
    is_nilpotent(&(a - &(a * a)))
}

pub fn has_strongly_drazin(a: &Element) -> bool {
    strongly_drazin_criterion(a).is_some()
}

/// Builds `a^H`: lift `a²` to an idempotent `e`, put `w = a² - e`,
/// `c = (1 + w)⁻¹ e` and return `b = ac`.
pub fn hirano(a: &Element) -> Result<HiranoCertificate> {
    if !has_hirano(a) {
        return Err(Error::Precondition(format!("{a} - {a}^3 is not nilpotent")));
    }
    let ring = a.ring();
    let a2 = a * a;
    let e = lift_idempotent(&a2)?.idempotent;
    let w = &a2 - &e;
    let w_witness = is_nilpotent(&w)
        .ok_or_else(|| Error::Verification(format!("a^2 - e is not nilpotent for a = {a}")))?;
    let u_inv = inverse_of_unipotent(&(&ring.one() + &w), w_witness)?;
    let c = &u_inv * &e;
    let b = a * &c;
    HiranoCertificate::certify(a, &b).ok_or_else(|| {
        Error::Verification(format!(
            "constructed Hirano inverse {b} of {a} fails the axioms"
        ))
    })
}

/// Builds `a^{sD}`: lift `a` to `e`, then `b = e (1 + ea - e)⁻¹`.
pub fn strongly_drazin(a: &Element) -> Result<SDrazinCertificate> {
    if !has_strongly_drazin(a) {
        return Err(Error::Precondition(format!("{a} - {a}^2 is not nilpotent")));
    }
    let ring = a.ring();
    let e = lift_idempotent(a)?.idempotent;
    let n = &(&e * a) - &e;
    let n_witness = is_nilpotent(&n)
        .ok_or_else(|| Error::Verification(format!("ea - e is not nilpotent for a = {a}")))?;
    let u_inv = inverse_of_unipotent(&(&ring.one() + &n), n_witness)?;
    let b = &e * &u_inv;
    SDrazinCertificate::certify(a, &b).ok_or_else(|| {
        Error::Verification(format!(
            "constructed strongly Drazin inverse {b} of {a} fails the axioms"
        ))
    })
}

/// Index and period of the power sequence of `a` in a finite ring.
pub fn semigroup_profile(a: &Element) -> Result<SemigroupProfile> {
    let ring = a.ring();
    if !ring.is_finite() {
        return Err(Error::NotFinite(ring));
    }
    let mut seen: HashMap<Element, u64> = HashMap::new();
    let mut power = a.clone();
    let mut j = 1u64;
    loop {
        if let Some(&i) = seen.get(&power) {
            return Ok(SemigroupProfile {
                index: i,
                period: j - i,
            });
        }
        seen.insert(power.clone(), j);
        power = &power * a;
        j += 1;
    }
}

/// Drazin inverse in a finite ring as the power `a^(m-1)`, where `m` is the least
/// multiple of the period with `m >= index + 1`.
pub fn drazin_finite(a: &Element) -> Result<DrazinCertificate> {
    let SemigroupProfile { index, period } = semigroup_profile(a)?;
    let m = period * (index + 1).div_ceil(period);
    let b = a.pow(m - 1);
    let cert = DrazinCertificate::certify(a, &b).ok_or_else(|| {
        Error::Verification(format!(
            "power-formula Drazin inverse {b} of {a} fails the axioms"
        ))
    })?;
    if u64::from(cert.index) != index {
        return Err(Error::Verification(format!(
            "Drazin index {} of {a} differs from the semigroup index {index}",
            cert.index
        )));
    }
    Ok(cert)
}

/// Drazin inverse where it can be decided: always in finite rings, and through
/// the Hirano criterion otherwise. `Ok(None)` means proven not to exist.
pub fn drazin(a: &Element) -> Result<Option<DrazinCertificate>> {
    let ring = a.ring();
    if ring.is_finite() {
        return drazin_finite(a).map(Some);
    }
    if has_hirano(a) {
        let h = hirano(a)?;
        return DrazinCertificate::certify(a, &h.inverse)
            .map(Some)
            .ok_or_else(|| {
                Error::Verification(format!("Hirano inverse of {a} is not a Drazin inverse"))
            });
    }
    if !ring.is_matrix() {
        // In Z, a^k = a^(k+1) x forces a = 0 or a = ±1, all of which satisfy a = a³.
        return Ok(None);
    }
    Err(Error::Precondition(format!(
        "Drazin existence for {a} over {ring} is only decided when a - a^3 is nilpotent"
    )))
}

/// Units: `a · a^D = 1` in finite rings, determinant `±1` for integer matrices.
pub fn is_unit(a: &Element) -> bool {
    let ring = a.ring();
    if ring.is_finite() {
        return drazin_finite(a)
            .map(|d| (a * &d.inverse).is_one())
            .unwrap_or(false);
    }
    if ring.is_matrix() {
        let p = char_poly(a).expect("matrix element");
        let det = p.coeffs().first().cloned().unwrap_or_default();
        return det == BigInt::from(1) || det == BigInt::from(-1);
    }
    a.is_one() || a.neg().is_one()
}

fn integral_half(x: &Element) -> Option<Element> {
    let two = BigInt::from(2);
    let halves: Option<Vec<BigInt>> = x
        .entries()
        .iter()
        .map(|v| {
            let (q, r) = num_integer::Integer::div_rem(v, &two);
            num_traits::Zero::is_zero(&r).then_some(q)
        })
        .collect();
    x.ring().element_from_entries(&halves?).ok()
}

/// `a = p + w` with `p = e - f`, where `e` lifts `(a² + a)/2` and `f` lifts `(a² - a)/2`.
///
/// Requires `a - a³` nilpotent and 2 a unit. Over integer bases 2 is not a unit; there
/// only exact tripotents `a = a³` are accepted (then `p = a`, `w = 0`) and the
/// halves must be integral.
pub fn tripotent_decomposition(a: &Element) -> Result<TripotentDecomposition> {
    if !has_hirano(a) {
        return Err(Error::Precondition(format!("{a} - {a}^3 is not nilpotent")));
    }
    let ring = a.ring();
    let a2 = a * a;
    let (e, f, e_cert, f_cert) = if ring.two_is_unit() {
        let half = ring.half()?;
        let half_int = BigInt::from(ring.modulus().expect("odd modulus").div_ceil(2));
        let g = &half * &(&a2 + a);
        let h = &half * &(&a2 - a);
        let g_poly = IntPoly::from_i64(&[0, 1, 1]).scale(&half_int);
        let h_poly = IntPoly::from_i64(&[0, -1, 1]).scale(&half_int);
        let lift_g = lift_idempotent(&g)?;
        let lift_h = lift_idempotent(&h)?;
        let e_cert = lift_g.certificate.substitute(&g_poly, a);
        let f_cert = lift_h.certificate.substitute(&h_poly, a);
        (lift_g.idempotent, lift_h.idempotent, e_cert, f_cert)
    } else if ring.modulus().is_none() && a.pow(3) == *a {
        let not_integral =
            || Error::Precondition(format!("(a^2 ± a)/2 is not integral for a = {a}"));
        let e = integral_half(&(&a2 + a)).ok_or_else(not_integral)?;
        let f = integral_half(&(&a2 - a)).ok_or_else(not_integral)?;
        let two = BigInt::from(2);
        let e_cert = PolynomialCertificate::with_denominator(
            IntPoly::from_i64(&[0, 1, 1]),
            two.clone(),
            a.clone(),
        );
        let f_cert =
            PolynomialCertificate::with_denominator(IntPoly::from_i64(&[0, -1, 1]), two, a.clone());
        (e, f, e_cert, f_cert)
    } else {
        return Err(Error::TwoNotUnit(ring));
    };

    let p = &e - &f;
    let w = a - &p;
    let p_cert = e_cert.difference(&f_cert);
    let fail = |what: &str| {
        Err(Error::Verification(format!(
            "tripotent decomposition of {a}: {what}"
        )))
    };
    if !e.is_idempotent() || !f.is_idempotent() || !e.commutes_with(&f) {
        return fail("e, f are not commuting idempotents");
    }
    if !p.is_tripotent() {
        return fail("p^3 != p");
    }
    if !p.commutes_with(&w) {
        return fail("p and w do not commute");
    }
    if !e_cert.certifies(&e) || !f_cert.certifies(&f) || !p_cert.certifies(&p) {
        return fail("polynomial certificate mismatch");
    }
    let Some(nilpotent_witness) = is_nilpotent(&w) else {
        return fail("a - p is not nilpotent");
    };
    Ok(TripotentDecomposition {
        subject: a.clone(),
        tripotent: p,
        nilpotent: w,
        nilpotent_witness,
        idempotent_plus: e,
        idempotent_minus: f,
        tripotent_certificate: p_cert,
        plus_certificate: e_cert,
        minus_certificate: f_cert,
    })
}

/// `a = b - c` with `b, c` commuting and both strongly Drazin invertible:
/// `b = e`, `c = f - w` from the tripotent decomposition.
pub fn sd_difference_decomposition(a: &Element) -> Result<(Element, Element)> {
    let d = tripotent_decomposition(a)?;
    let b = d.idempotent_plus.clone();
    let c = &d.idempotent_minus - &d.nilpotent;
    if &(&b - &c) != a
        || !b.commutes_with(&c)
        || !has_strongly_drazin(&b)
        || !has_strongly_drazin(&c)
    {
        return Err(Error::Verification(format!(
            "difference decomposition of {a} fails its checks"
        )));
    }
    Ok((b, c))
}

/// `a^H = a (a²)^{sD}`.
pub fn hirano_via_square(a: &Element) -> Result<HiranoCertificate> {
    let sd = strongly_drazin(&(a * a))?;
    let b = a * &sd.inverse;
    HiranoCertificate::certify(a, &b).ok_or_else(|| {
        Error::Verification(format!("a (a^2)^sD = {b} is not a Hirano inverse of {a}"))
    })
}

/// `(a^H)^H = a² a^H`, checked against the direct construction for `a^H`.
pub fn hirano_of_hirano(cert: &HiranoCertificate) -> Result<Element> {
    if !cert.is_valid() {
        return Err(Error::Precondition("invalid Hirano certificate".into()));
    }
    let a = &cert.source;
    let b = &cert.inverse;
    let formula = &(a * a) * b;
    let direct = hirano(b)
        .map_err(|e| Error::TheoremViolation(format!("a^H = {b} of {a} is not Hirano: {e}")))?;
    if direct.inverse != formula {
        return Err(Error::TheoremViolation(format!(
            "(a^H)^H = {} but a^2 a^H = {formula} for a = {a}",
            direct.inverse
        )));
    }
    Ok(formula)
}

fn brute_force(a: &Element, accept: impl Fn(&Element, &Element) -> bool) -> Result<Vec<Element>> {
    Ok(a.ring().elements()?.filter(|b| accept(a, b)).collect())
}

/// Every `b` satisfying the Hirano axioms, in enumeration order.
pub fn brute_force_hirano(a: &Element) -> Result<Vec<Element>> {
    brute_force(a, |a, b| HiranoCertificate::certify(a, b).is_some())
}

pub fn brute_force_strongly_drazin(a: &Element) -> Result<Vec<Element>> {
    brute_force(a, |a, b| SDrazinCertificate::certify(a, b).is_some())
}

pub fn brute_force_drazin(a: &Element) -> Result<Vec<Element>> {
    brute_force(a, |a, b| {
        commute_and_absorb(a, b) && is_nilpotent(&(a - &(&(a * a) * b))).is_some()
    })
}

/// Tripotents `p` commuting with `a` with `a - p` nilpotent.
pub fn brute_force_tripotents(a: &Element) -> Result<Vec<Element>> {
    brute_force(a, |a, p| {
        p.is_tripotent() && p.commutes_with(a) && is_nilpotent(&(a - p)).is_some()
    })
}

/// Classifies `a` and attaches certificates for every inverse it has.
pub fn classify(a: &Element) -> Result<InverseReport> {
    let h = if has_hirano(a) {
        Some(hirano(a)?)
    } else {
        None
    };
    let sd = if has_strongly_drazin(a) {
        Some(strongly_drazin(a)?)
    } else {
        None
    };
    let (has_drazin, d) = match drazin(a) {
        Ok(d) => (Some(d.is_some()), d),
        Err(Error::Precondition(_)) => (None, None),
        Err(e) => return Err(e),
    };
    if let (Some(h), Some(d)) = (&h, &d) {
        if h.inverse != d.inverse {
            return Err(Error::Verification(format!(
                "Hirano inverse {} and Drazin inverse {} of {a} differ",
                h.inverse, d.inverse
            )));
        }
    }
    Ok(InverseReport {
        ring: a.ring(),
        element: a.clone(),
        has_drazin,
        has_strongly_drazin: sd.is_some(),
        has_hirano: h.is_some(),
        drazin: d,
        strongly_drazin: sd,
        hirano: h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> RingSpec {
        RingSpec::modular(n).unwrap()
    }

    fn m2(n: u64) -> RingSpec {
        RingSpec::matrix(z(n), 2).unwrap()
    }

    fn mz(k: usize) -> RingSpec {
        RingSpec::matrix(RingSpec::integers(), k).unwrap()
    }

    fn example_tripotent() -> Element {
        mz(3).elem(&[-2, 3, 2, -2, 3, 2, 1, -1, -1]).unwrap()
    }

    #[test]
    fn hirano_predicate_examples() {
        let a = m2(2).elem(&[0, 1, 1, 1]).unwrap();
        assert!(!has_hirano(&a));
        assert!(!has_hirano(&z(5).from_int(3)));
        assert!(has_hirano(&z(5).from_int(4)));
        assert!(has_hirano(&m2(3).zero()));
    }

    #[test]
    fn hirano_construction_examples() {
        assert_eq!(hirano(&z(9).from_int(2)).unwrap().inverse, z(9).from_int(5));
        let a = example_tripotent();
        assert_eq!(a.pow(3), a);
        assert_eq!(hirano(&a).unwrap().inverse, a);
        assert_eq!(hirano(&m2(3).one()).unwrap().inverse, m2(3).one());
        assert!(matches!(
            hirano(&z(5).from_int(3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn strongly_drazin_examples() {
        assert!(!has_strongly_drazin(&z(3).from_int(2)));
        assert!(!has_strongly_drazin(&example_tripotent()));
        assert_eq!(
            strongly_drazin(&z(9).from_int(3)).unwrap().inverse,
            z(9).zero()
        );
        let e = mz(2).elem(&[1, 0, 0, 0]).unwrap();
        assert!(has_strongly_drazin(&e));
        assert_eq!(strongly_drazin(&e).unwrap().inverse, e);
    }

    #[test]
    fn semigroup_profiles() {
        assert_eq!(
            semigroup_profile(&z(9).from_int(2)).unwrap(),
            SemigroupProfile {
                index: 1,
                period: 6
            }
        );
        let x = m2(2).elem(&[0, 1, 0, 0]).unwrap();
        assert_eq!(
            semigroup_profile(&x).unwrap(),
            SemigroupProfile {
                index: 2,
                period: 1
            }
        );
        assert_eq!(
            semigroup_profile(&m2(3).one()).unwrap(),
            SemigroupProfile {
                index: 1,
                period: 1
            }
        );
        assert!(semigroup_profile(&example_tripotent()).is_err());
    }

    #[test]
    fn drazin_finite_examples() {
        let r = m2(2);
        let a = r.elem(&[0, 1, 1, 1]).unwrap();
        // (-1, 1; 1, 0) reduced mod 2
        assert_eq!(
            drazin_finite(&a).unwrap().inverse,
            r.elem(&[-1, 1, 1, 0]).unwrap()
        );
        let x = r.elem(&[0, 1, 0, 0]).unwrap();
        assert_eq!(drazin_finite(&x).unwrap().inverse, r.zero());
        assert_eq!(drazin_finite(&x).unwrap().index, 2);
        assert_eq!(
            drazin_finite(&z(9).from_int(2)).unwrap().inverse,
            z(9).from_int(5)
        );
    }

    #[test]
    fn drazin_over_integers() {
        assert_eq!(drazin(&RingSpec::integers().from_int(2)).unwrap(), None);
        let d = drazin(&RingSpec::integers().from_int(-1)).unwrap().unwrap();
        assert_eq!(d.inverse, RingSpec::integers().from_int(-1));
        assert_eq!(
            drazin(&example_tripotent()).unwrap().unwrap().inverse,
            example_tripotent()
        );
        // [[2,0],[0,0]] has Drazin inverse diag(1/2, 0) over Q; undecided here.
        assert!(matches!(
            drazin(&mz(2).elem(&[2, 0, 0, 0]).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tripotent_decomposition_examples() {
        let d = tripotent_decomposition(&z(9).from_int(2)).unwrap();
        assert_eq!(d.tripotent, z(9).from_int(8));
        assert_eq!(d.nilpotent, z(9).from_int(3));
        let d = tripotent_decomposition(&z(3).from_int(2)).unwrap();
        assert_eq!(d.tripotent, z(3).from_int(2));
        assert!(d.nilpotent.is_zero());
        let p = m2(5).elem(&[1, 0, 0, -1]).unwrap();
        let d = tripotent_decomposition(&p).unwrap();
        assert_eq!(d.tripotent, p);
        assert!(matches!(
            tripotent_decomposition(&z(4).from_int(2)),
            Err(Error::TwoNotUnit(_))
        ));
    }

    #[test]
    fn tripotent_decomposition_over_integers() {
        let a = example_tripotent();
        let d = tripotent_decomposition(&a).unwrap();
        assert_eq!(d.tripotent, a);
        assert!(d.nilpotent.is_zero());
        assert_eq!(
            d.idempotent_plus,
            mz(3).elem(&[-1, 2, 1, -1, 2, 1, 0, 0, 0]).unwrap()
        );
        // a = a³ but (a² + a)/2 is not integral.
        let b = mz(2).elem(&[1, 1, 0, -1]).unwrap();
        assert_eq!(b.pow(3), b);
        assert!(matches!(
            tripotent_decomposition(&b),
            Err(Error::Precondition(_))
        ));
        let c = mz(2).elem(&[0, 1, 0, 0]).unwrap();
        assert!(matches!(
            tripotent_decomposition(&c),
            Err(Error::TwoNotUnit(_))
        ));
    }

    #[test]
    fn cubic_half_has_non_nilpotent_defect() {
        // (a³ + a)/2 for a = 2 in Z/9 is 5, whose defect 5 - 25 = 7 is a unit.
        let r = z(9);
        let a = r.from_int(2);
        let cubic = &r.half().unwrap() * &(&a.pow(3) + &a);
        assert_eq!(cubic, r.from_int(5));
        let defect = &cubic - &(&cubic * &cubic);
        assert_eq!(defect, r.from_int(7));
        assert!(is_nilpotent(&defect).is_none());
    }

    #[test]
    fn difference_decomposition() {
        let r = z(9);
        let (b, c) = sd_difference_decomposition(&r.from_int(2)).unwrap();
        assert_eq!((b.clone(), c.clone()), (r.zero(), r.from_int(7)));
        assert_eq!(&b - &c, r.from_int(2));
        let e = m2(3).elem(&[1, 0, 0, 0]).unwrap();
        assert_eq!(
            sd_difference_decomposition(&e).unwrap(),
            (e.clone(), m2(3).zero())
        );
        assert_eq!(
            sd_difference_decomposition(&r.zero()).unwrap(),
            (r.zero(), r.zero())
        );
    }

    #[test]
    fn square_route_and_double_inverse() {
        assert_eq!(
            hirano_via_square(&z(5).from_int(4)).unwrap().inverse,
            z(5).from_int(4)
        );
        assert_eq!(
            hirano_via_square(&z(9).zero()).unwrap().inverse,
            z(9).zero()
        );
        assert_eq!(
            hirano_via_square(&z(9).from_int(2)).unwrap().inverse,
            z(9).from_int(5)
        );

        let h = hirano(&z(9).from_int(2)).unwrap();
        assert_eq!(hirano_of_hirano(&h).unwrap(), z(9).from_int(2));
        let h = hirano(&z(9).one()).unwrap();
        assert_eq!(hirano_of_hirano(&h).unwrap(), z(9).one());
        let h = hirano(&z(9).from_int(3)).unwrap();
        assert_eq!(hirano_of_hirano(&h).unwrap(), z(9).zero());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_hirano(&z(9).from_int(2)).unwrap(),
            vec![z(9).from_int(5)]
        );
        assert!(brute_force_hirano(&m2(2).elem(&[0, 1, 1, 1]).unwrap())
            .unwrap()
            .is_empty());
        assert_eq!(
            brute_force_hirano(&m2(3).zero()).unwrap(),
            vec![m2(3).zero()]
        );
        assert_eq!(
            brute_force_strongly_drazin(&z(9).from_int(3)).unwrap(),
            vec![z(9).zero()]
        );
        assert_eq!(
            brute_force_tripotents(&z(9).from_int(2)).unwrap(),
            vec![z(9).from_int(8)]
        );
    }

    #[test]
    fn units_have_their_inverse_as_drazin_inverse() {
        for r in [z(12), m2(2), m2(3)] {
            for a in r.elements().unwrap() {
                let d = drazin_finite(&a).unwrap();
                let inv = r.elements().unwrap().find(|b| (&a * b).is_one());
                assert_eq!(is_unit(&a), inv.is_some());
                if let Some(inv) = inv {
                    assert_eq!(d.inverse, inv);
                }
            }
        }
        assert!(is_unit(&mz(2).elem(&[2, 1, 1, 1]).unwrap()));
        assert!(!is_unit(&mz(2).elem(&[2, 0, 0, 1]).unwrap()));
    }

    #[test]
    fn classify_reports_agree() {
        let rep = classify(&m2(2).elem(&[0, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(rep.has_drazin, Some(true));
        assert!(!rep.has_hirano && !rep.has_strongly_drazin);
        let rep = classify(&example_tripotent()).unwrap();
        assert_eq!(rep.has_drazin, Some(true));
        assert!(rep.has_hirano && !rep.has_strongly_drazin);
        let rep = classify(&mz(2).elem(&[2, 0, 0, 0]).unwrap()).unwrap();
        assert_eq!(rep.has_drazin, None);
    }
}
