//! Transfer laws for Hirano inverses: Cline's formula under `aba = aca`, the
//! Jacobson-type transfer between `1 + ac` and `1 + ba`, and the product, power
//! and sum formulas.
//!
//! Every closed-form inverse produced here is treated as a candidate and checked
//! against the Hirano axioms. A failing candidate is reported as
//! [`Error::TheoremViolation`], never replaced by a fallback.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverse::{drazin, has_hirano, strongly_drazin, HiranoCertificate, SDrazinCertificate};
use crate::ring::{Element, RingSpec};

fn same_ring(xs: &[&Element]) -> Result<()> {
    let ring = xs[0].ring();
    for x in &xs[1..] {
        if x.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: x.ring(),
            });
        }
    }
    Ok(())
}

fn require_valid(h: &HiranoCertificate) -> Result<()> {
    if h.is_valid() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "invalid Hirano certificate for {}",
            h.source
        )))
    }
}

fn certify_or_violation(a: &Element, b: &Element, law: &str) -> Result<HiranoCertificate> {
    HiranoCertificate::certify(a, b).ok_or_else(|| {
        Error::TheoremViolation(format!("{law}: {b} is not a Hirano inverse of {a}"))
    })
}

/// Given `aba = aca` and `(ac)^H`, returns `(ba)^H = b ((ac)^H)² a`.
pub fn cline(
    a: &Element,
    b: &Element,
    c: &Element,
    ac_inverse: &HiranoCertificate,
) -> Result<HiranoCertificate> {
    same_ring(&[a, b, c, &ac_inverse.source])?;
    if &(a * b) * a != &(a * c) * a {
        return Err(Error::Precondition("aba != aca".into()));
    }
    if ac_inverse.source != a * c {
        return Err(Error::Precondition("certificate is not for ac".into()));
    }
    require_valid(ac_inverse)?;
    let h = &ac_inverse.inverse;
    let candidate = &(&(b * h) * h) * a;
    certify_or_violation(&(b * a), &candidate, "Cline formula")
}

/// Returns whether `(ba)^k` has a Hirano inverse, checking that it does whenever `(ab)^k` does.
pub fn power_transfer(a: &Element, b: &Element, k: u64) -> Result<bool> {
    same_ring(&[a, b])?;
    if k == 0 {
        return Err(Error::Precondition("power must be positive".into()));
    }
    let left = has_hirano(&(a * b).pow(k));
    let right = has_hirano(&(b * a).pow(k));
    if left && !right {
        return Err(Error::TheoremViolation(format!(
            "(ab)^{k} is Hirano but (ba)^{k} is not for a = {a}, b = {b}"
        )));
    }
    Ok(right)
}

/// For commuting `a, b`: `(ab)^H = a^H b^H`.
pub fn commuting_product(
    ha: &HiranoCertificate,
    hb: &HiranoCertificate,
) -> Result<HiranoCertificate> {
    same_ring(&[&ha.source, &hb.source])?;
    require_valid(ha)?;
    require_valid(hb)?;
    let (a, b) = (&ha.source, &hb.source);
    if !a.commutes_with(b) {
        return Err(Error::Precondition(format!("{a} and {b} do not commute")));
    }
    certify_or_violation(&(a * b), &(&ha.inverse * &hb.inverse), "product formula")
}

/// `(a^n)^H = (a^H)^n` for `n >= 1`.
pub fn power_formula(ha: &HiranoCertificate, n: u64) -> Result<HiranoCertificate> {
    require_valid(ha)?;
    if n == 0 {
        return Err(Error::Precondition("power must be positive".into()));
    }
    certify_or_violation(&ha.source.pow(n), &ha.inverse.pow(n), "power formula")
}

/// Given `aba = aca`, returns whether `1 + ba` is Hirano, checking it agrees with `1 + ac`.
pub fn jacobson_transfer(a: &Element, b: &Element, c: &Element) -> Result<bool> {
    same_ring(&[a, b, c])?;
    if &(a * b) * a != &(a * c) * a {
        return Err(Error::Precondition("aba != aca".into()));
    }
    let one = a.ring().one();
    let left = has_hirano(&(&one + &(a * c)));
    let right = has_hirano(&(&one + &(b * a)));
    if left != right {
        return Err(Error::TheoremViolation(format!(
            "1 + ac Hirano = {left} but 1 + ba Hirano = {right} for a = {a}, b = {b}, c = {c}"
        )));
    }
    Ok(right)
}

/// For `ab = ba = 0`: `(a + b)^H = a^H + b^H`.
pub fn orthogonal_sum(ha: &HiranoCertificate, hb: &HiranoCertificate) -> Result<HiranoCertificate> {
    same_ring(&[&ha.source, &hb.source])?;
    require_valid(ha)?;
    require_valid(hb)?;
    let (a, b) = (&ha.source, &hb.source);
    if !(a * b).is_zero() || !(b * a).is_zero() {
        return Err(Error::Precondition(format!(
            "{a} and {b} are not orthogonal"
        )));
    }
    certify_or_violation(&(a + b), &(&ha.inverse + &hb.inverse), "orthogonal sum")
}

/// Outcome of the square-zero sum formula.
///
/// Two closed forms are in circulation for `(a + b)^H` when `a² = b² = 0`:
/// `a (ba)^H + b (ab)^H` and `a (ba)^D + b (ab)(ab)^D`. Both are evaluated and checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareZeroSum {
    pub certificate: HiranoCertificate,
    pub statement_form: Element,
    pub statement_form_valid: bool,
    pub proof_form: Element,
    pub proof_form_valid: bool,
}

impl SquareZeroSum {
    pub fn forms_agree(&self) -> bool {
        self.statement_form == self.proof_form
    }
}

/// `(a + b)^H` for `a² = b² = 0` with `ab` strongly Drazin invertible.
pub fn square_zero_sum(
    a: &Element,
    b: &Element,
    ab_sd: &SDrazinCertificate,
) -> Result<SquareZeroSum> {
    same_ring(&[a, b, &ab_sd.source])?;
    if !(a * a).is_zero() || !(b * b).is_zero() {
        return Err(Error::Precondition("a^2 and b^2 must vanish".into()));
    }
    let ab = a * b;
    let ba = b * a;
    if ab_sd.source != ab || SDrazinCertificate::certify(&ab, &ab_sd.inverse).is_none() {
        return Err(Error::Precondition(
            "certificate is not a strongly Drazin inverse of ab".into(),
        ));
    }
    let ab_h = certify_or_violation(
        &ab,
        &ab_sd.inverse,
        "strongly Drazin inverse as Hirano inverse",
    )?;
    let ba_h = cline(a, b, b, &ab_h)?;
    let undecided =
        |x: &Element| Error::TheoremViolation(format!("Drazin inverse of {x} does not exist"));
    let ab_d = drazin(&ab)?.ok_or_else(|| undecided(&ab))?.inverse;
    let ba_d = drazin(&ba)?.ok_or_else(|| undecided(&ba))?.inverse;

    let sum = a + b;
    let statement_form = &(a * &ba_h.inverse) + &(b * &ab_h.inverse);
    let proof_form = &(a * &ba_d) + &(&(b * &ab) * &ab_d);
    let statement_cert = HiranoCertificate::certify(&sum, &statement_form);
    let proof_cert = HiranoCertificate::certify(&sum, &proof_form);
    let statement_form_valid = statement_cert.is_some();
    let proof_form_valid = proof_cert.is_some();
    let certificate = statement_cert.or(proof_cert).ok_or_else(|| {
        Error::TheoremViolation(format!(
            "neither {statement_form} nor {proof_form} is a Hirano inverse of {sum}"
        ))
    })?;
    Ok(SquareZeroSum {
        certificate,
        statement_form,
        statement_form_valid,
        proof_form,
        proof_form_valid,
    })
}

/// [`square_zero_sum`] with the strongly Drazin inverse of `ab` constructed on the spot.
pub fn square_zero_sum_from(a: &Element, b: &Element) -> Result<SquareZeroSum> {
    same_ring(&[a, b])?;
    let sd = strongly_drazin(&(a * b))?;
    square_zero_sum(a, b, &sd)
}

/// Smallest `(Z/n, a)` in enumeration order with `a` Hirano but `1 - a` not.
pub fn one_minus_counterexample() -> (RingSpec, Element) {
    for n in 2u64.. {
        let ring = RingSpec::modular(n).expect("n >= 2");
        let one = ring.one();
        if let Some(a) = ring
            .elements()
            .expect("finite")
            .find(|a| has_hirano(a) && !has_hirano(&(&one - a)))
        {
            return (ring, a);
        }
    }
    unreachable!("Z/5 contains a witness")
}
