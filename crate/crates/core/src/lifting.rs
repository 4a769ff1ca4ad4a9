//! Lifting idempotents modulo nilpotents.
//!
//! If `x - x²` is nilpotent, iterating `t ↦ 3t² - 2t³` from `t = x` reaches an
//! idempotent `e` with `x - e` nilpotent. The defect `t - t²` is at least squared
//! by each step, so a defect of nilpotency index `m` dies within `ceil(log2 m)`
//! steps. The same iteration is replayed on polynomials, which yields `e` as an
//! integer polynomial in `x`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{is_nilpotent, nilpotency_bound, Element, IntPoly};

/// Evidence that an element equals `poly(subject) / denominator`.
///
/// Anything of this form commutes with every element commuting with `subject`.
/// The denominator is 1 except for the integer-matrix tripotent case, where it is 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialCertificate {
    #[serde(serialize_with = "poly_as_strings")]
    pub polynomial: IntPoly,
    #[serde(serialize_with = "big_as_string")]
    pub denominator: BigInt,
    pub subject: Element,
}

fn poly_as_strings<S: serde::Serializer>(
    p: &IntPoly,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.coeffs().iter().map(|c| c.to_string()))
}

fn big_as_string<S: serde::Serializer>(b: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(b)
}

impl PolynomialCertificate {
    pub fn new(polynomial: IntPoly, subject: Element) -> Self {
        PolynomialCertificate {
            polynomial,
            denominator: BigInt::one(),
            subject,
        }
    }

    pub fn with_denominator(polynomial: IntPoly, denominator: BigInt, subject: Element) -> Self {
        PolynomialCertificate {
            polynomial,
            denominator,
            subject,
        }
    }

    /// Does `denominator · certified = polynomial(subject)` hold?
    pub fn certifies(&self, certified: &Element) -> bool {
        certified.ring() == self.subject.ring()
            && certified.scale(&self.denominator) == self.polynomial.eval(&self.subject)
    }

    /// Re-expresses the certificate in terms of `subject`, given `self.subject = inner(subject)`.
    pub fn substitute(&self, inner: &IntPoly, subject: &Element) -> PolynomialCertificate {
        PolynomialCertificate {
            polynomial: self.polynomial.compose(inner),
            denominator: self.denominator.clone(),
            subject: subject.clone(),
        }
    }

    /// `self - other`; both must share subject and denominator.
    pub(crate) fn difference(&self, other: &PolynomialCertificate) -> PolynomialCertificate {
        debug_assert_eq!(self.subject, other.subject);
        debug_assert_eq!(self.denominator, other.denominator);
        PolynomialCertificate {
            polynomial: self.polynomial.sub(&other.polynomial),
            denominator: self.denominator.clone(),
            subject: self.subject.clone(),
        }
    }
}

/// An idempotent lifted from `x`, with its certificate as a polynomial in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedIdempotent {
    pub idempotent: Element,
    pub certificate: PolynomialCertificate,
    pub iterations: u32,
}

pub(crate) fn iteration_cap(bound: u32) -> u32 {
    // ceil(log2 B) + 2
    let ceil_log2 = if bound <= 1 {
        0
    } else {
        32 - (bound - 1).leading_zeros()
    };
    ceil_log2 + 2
}

/// Lifts `x` (with `x - x²` nilpotent) to an idempotent `e ∈ Z[x]` with `x - e` nilpotent.
pub fn lift_idempotent(x: &Element) -> Result<LiftedIdempotent> {
    let defect = x - &(x * x);
    if is_nilpotent(&defect).is_none() {
        return Err(Error::Precondition(format!("{x} - {x}^2 is not nilpotent")));
    }
    let cap = iteration_cap(nilpotency_bound(&x.ring()));
    let step = IntPoly::from_i64(&[0, 0, 3, -2]);

    let mut t = x.clone();
    let mut poly = IntPoly::identity();
    let mut iterations = 0;
    while !t.is_idempotent() {
        if iterations == cap {
            return Err(Error::NonConvergence { iterations });
        }
        let t2 = &t * &t;
        t = &t2.scale_int(3) - &(&t2 * &t).scale_int(2);
        poly = step.compose(&poly);
        iterations += 1;
    }

    let certificate = PolynomialCertificate::new(poly, x.clone());
    if !certificate.certifies(&t) {
        return Err(Error::Verification(format!(
            "lifted idempotent of {x} does not match its polynomial certificate"
        )));
    }
    if is_nilpotent(&(x - &t)).is_none() {
        return Err(Error::Verification(format!(
            "{x} minus its lifted idempotent {t} is not nilpotent"
        )));
    }
    Ok(LiftedIdempotent {
        idempotent: t,
        certificate,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn m2(n: u64) -> RingSpec {
        RingSpec::matrix(RingSpec::modular(n).unwrap(), 2).unwrap()
    }

    #[test]
    fn cap_values() {
        assert_eq!(iteration_cap(1), 2);
        assert_eq!(iteration_cap(2), 3);
        assert_eq!(iteration_cap(4), 4);
        assert_eq!(iteration_cap(5), 5);
    }

    #[test]
    fn residue_examples() {
        let z9 = RingSpec::modular(9).unwrap();
        assert_eq!(
            lift_idempotent(&z9.from_int(4)).unwrap().idempotent,
            z9.one()
        );
        assert_eq!(
            lift_idempotent(&z9.from_int(3)).unwrap().idempotent,
            z9.zero()
        );
        assert!(matches!(
            lift_idempotent(&z9.from_int(2)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn idempotents_are_fixed() {
        let r = m2(3);
        let e = r.elem(&[1, 0, 0, 0]).unwrap();
        let lift = lift_idempotent(&e).unwrap();
        assert_eq!(lift.idempotent, e);
        assert_eq!(lift.iterations, 0);
        assert_eq!(lift.certificate.polynomial, IntPoly::identity());
    }

    #[test]
    fn integer_matrices() {
        let r = RingSpec::matrix(RingSpec::integers(), 2).unwrap();
        let x = r.elem(&[1, 5, 0, 0]).unwrap();
        assert_eq!(lift_idempotent(&x).unwrap().idempotent, x);
        let y = r.elem(&[1, 1, 0, 1]).unwrap();
        let lift = lift_idempotent(&y).unwrap();
        assert_eq!(lift.idempotent, r.one());
    }

    #[test]
    fn exhaustive_success_and_rejection() {
        let mut rings: Vec<RingSpec> = (2..=64).map(|n| RingSpec::modular(n).unwrap()).collect();
        rings.push(m2(2));
        rings.push(m2(3));
        for r in rings {
            for x in r.elements().unwrap() {
                let defect_nil = is_nilpotent(&(&x - &(&x * &x))).is_some();
                match lift_idempotent(&x) {
                    Ok(lift) => {
                        assert!(defect_nil);
                        let e = &lift.idempotent;
                        assert!(e.is_idempotent());
                        assert!(is_nilpotent(&(&x - e)).is_some());
                        assert!(lift.certificate.certifies(e));
                    }
                    Err(Error::Precondition(_)) => assert!(!defect_nil, "{x} in {r}"),
                    Err(other) => panic!("{x} in {r}: {other}"),
                }
            }
        }
    }

    #[test]
    fn lifted_idempotent_lies_in_the_double_commutant() {
        for r in [m2(2), m2(3)] {
            let all: Vec<Element> = r.elements().unwrap().collect();
            for x in &all {
                let Ok(lift) = lift_idempotent(x) else {
                    continue;
                };
                let e = &lift.idempotent;
                for y in all.iter().filter(|y| x.commutes_with(y)) {
                    assert!(e.commutes_with(y), "x = {x}, y = {y}");
                }
            }
        }
    }
}
