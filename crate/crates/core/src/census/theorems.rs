use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

use super::{sample_indices, to_sorted_json, Strategy, DEFAULT_MAX_RING_SIZE};
use crate::calculus::{
    cline, commuting_product, jacobson_transfer, orthogonal_sum, power_formula, power_transfer,
    square_zero_sum,
};
use crate::error::{Error, Result};
use crate::inverse::{
    brute_force_hirano, brute_force_tripotents, drazin_finite, has_hirano, has_strongly_drazin,
    hirano, hirano_of_hirano, hirano_via_square, sd_difference_decomposition, strongly_drazin,
    tripotent_decomposition, DrazinCertificate,
};
use crate::par::{map_range, Workers};
use crate::ring::{is_nilpotent, Element, RingSpec};

/// The checkable statements, named by their usual numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Hirano inverses are Drazin inverses.
    T2_1,
    /// At most one Hirano inverse, equal to the Drazin inverse.
    T2_2,
    /// `a` Hirano iff `a²` strongly Drazin, with `(a²)^sD = (a^H)²`, `a^H = a (a²)^sD`.
    T2_4,
    /// `a` Hirano iff `a - a³` nilpotent.
    T3_1,
    /// `(a^H)^H = a² a^H`.
    T3_2,
    /// Tripotent plus nilpotent decomposition when 2 is a unit.
    T3_3,
    /// Difference of commuting strongly Drazin invertible elements.
    T3_4,
    /// Strongly 2-nil-clean iff every element is Hirano.
    T3_6,
    /// Cline's formula under `aba = aca`.
    T4_1,
    /// Cline's formula for `ab`, `ba`.
    T4_2,
    /// `(ab)^k` Hirano implies `(ba)^k` Hirano.
    T4_3,
    /// `(ab)^H = a^H b^H` for commuting `a, b`.
    T4_4,
    /// `(a^n)^H = (a^H)^n`.
    T4_5,
    /// `1 + ac` Hirano iff `1 + ba` Hirano under `aba = aca`.
    T5_1,
    /// `1 + ab` Hirano iff `1 + ba` Hirano.
    T5_2,
    /// `(a + b)^H = a^H + b^H` for `ab = ba = 0`.
    T5_4,
    /// `(a + b)^H` for `a² = b² = 0` with `ab` strongly Drazin.
    T5_5,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::T2_1,
        TheoremId::T2_2,
        TheoremId::T2_4,
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T3_4,
        TheoremId::T3_6,
        TheoremId::T4_1,
        TheoremId::T4_2,
        TheoremId::T4_3,
        TheoremId::T4_4,
        TheoremId::T4_5,
        TheoremId::T5_1,
        TheoremId::T5_2,
        TheoremId::T5_4,
        TheoremId::T5_5,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T2_1 => "2.1",
            TheoremId::T2_2 => "2.2",
            TheoremId::T2_4 => "2.4",
            TheoremId::T3_1 => "3.1",
            TheoremId::T3_2 => "3.2",
            TheoremId::T3_3 => "3.3",
            TheoremId::T3_4 => "3.4",
            TheoremId::T3_6 => "3.6",
            TheoremId::T4_1 => "4.1",
            TheoremId::T4_2 => "4.2",
            TheoremId::T4_3 => "4.3",
            TheoremId::T4_4 => "4.4",
            TheoremId::T4_5 => "4.5",
            TheoremId::T5_1 => "5.1",
            TheoremId::T5_2 => "5.2",
            TheoremId::T5_4 => "5.4",
            TheoremId::T5_5 => "5.5",
        }
    }

    /// Number of ring elements in one instance of the hypothesis space.
    pub fn arity(&self) -> u32 {
        match self {
            TheoremId::T4_1 | TheoremId::T5_1 => 3,
            TheoremId::T4_2
            | TheoremId::T4_3
            | TheoremId::T4_4
            | TheoremId::T5_2
            | TheoremId::T5_4
            | TheoremId::T5_5 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub ring: RingSpec,
    pub strategy: String,
    pub seed: Option<u64>,
    /// Tuples scanned.
    pub instances: u64,
    /// Tuples satisfying the hypotheses.
    pub applicable: u64,
    pub violations: Vec<Violation>,
    /// Observations that are not violations, e.g. two closed forms disagreeing while one verifies.
    pub notes: Vec<String>,
    pub note_count: u64,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }
}

const MAX_NOTES: usize = 20;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub strategy: Strategy,
    pub workers: Workers,
    pub max_ring_size: u64,
    /// Cap on the size of an exhaustively scanned hypothesis space.
    pub max_instances: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            strategy: Strategy::Exhaustive,
            workers: Workers::Auto,
            max_ring_size: DEFAULT_MAX_RING_SIZE,
            max_instances: 1_000_000,
        }
    }
}

/// Rings up to this size get a full table of brute-force Hirano inverses up front.
const ORACLE_TABLE_LIMIT: u64 = 2_000;
/// Per-instance scans over the whole ring (centralizers, tripotent search) run up to this size.
const SMALL_RING: u64 = 100;
const CENTRALIZER_LIMIT: u64 = 2_000;

struct Ctx {
    ring: RingSpec,
    size: u64,
    elements: Option<Vec<Element>>,
    hirano_table: Option<Vec<Vec<Element>>>,
}

impl Ctx {
    fn element(&self, i: u64) -> Element {
        match &self.elements {
            Some(v) => v[i as usize].clone(),
            None => self.ring.element_at(i).expect("index in range"),
        }
    }

    /// Brute-force Hirano inverses of `x`.
    fn oracle(&self, x: &Element) -> Vec<Element> {
        match (&self.hirano_table, x.index()) {
            (Some(t), Some(i)) => t[i as usize].clone(),
            _ => brute_force_hirano(x).expect("finite ring"),
        }
    }

    fn all(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size).map(|i| self.element(i))
    }
}

#[derive(Default)]
struct Outcome {
    applicable: bool,
    violation: Option<String>,
    note: Option<String>,
}

impl Outcome {
    fn skip() -> Self {
        Outcome::default()
    }

    fn from_check(r: Result<()>) -> Self {
        Outcome {
            applicable: true,
            violation: r.err().map(|e| e.to_string()),
            note: None,
        }
    }
}

fn fail(msg: impl Into<String>) -> Result<()> {
    Err(Error::TheoremViolation(msg.into()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        fail(msg())
    }
}

/// Checks one theorem over a finite ring, exhaustively or on a seeded sample.
pub fn verify_theorem(
    id: TheoremId,
    ring: &RingSpec,
    opts: &VerifyOptions,
) -> Result<TheoremReport> {
    let started = Instant::now();
    let size = ring.size_within(opts.max_ring_size)?;
    if matches!(id, TheoremId::T3_3 | TheoremId::T3_4) && !ring.two_is_unit() {
        return Err(Error::TwoNotUnit(*ring));
    }
    let arity = id.arity();
    let space = (size as u128).pow(arity);

    let (indices, instances): (Option<Vec<u64>>, u64) = match opts.strategy {
        Strategy::Exhaustive => {
            if space > opts.max_instances as u128 {
                return Err(Error::Precondition(format!(
                    "exhaustive scan of {space} instances exceeds the cap of {}; sample instead",
                    opts.max_instances
                )));
            }
            (None, space as u64)
        }
        Strategy::Sampled { seed, samples } => {
            let bound = u64::try_from(space).unwrap_or(u64::MAX);
            (Some(sample_indices(seed, samples, bound)), samples)
        }
    };

    let elements = (arity > 1 || size <= ORACLE_TABLE_LIMIT)
        .then(|| ring.elements().map(|e| e.collect::<Vec<_>>()))
        .transpose()?;
    let hirano_table = if size <= ORACLE_TABLE_LIMIT {
        let els = elements.as_ref().expect("enumerated above");
        let table = map_range(size, opts.workers, |i| brute_force_hirano(&els[i as usize]));
        Some(table.into_iter().collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    let ctx = Ctx {
        ring: *ring,
        size,
        elements,
        hirano_table,
    };

    let decode = |flat: u64| -> Vec<Element> {
        let mut rest = flat % (size as u128).pow(arity).min(u64::MAX as u128) as u64;
        let mut out = vec![ring.zero(); arity as usize];
        for slot in out.iter_mut().rev() {
            *slot = ctx.element(rest % size);
            rest /= size;
        }
        out
    };

    let outcomes: Vec<Outcome> = map_range(instances, opts.workers, |k| {
        let flat = match &indices {
            Some(v) => v[k as usize],
            None => k,
        };
        let t = decode(flat);
        check(id, &ctx, &t)
    });

    let mut applicable = 0;
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    let mut note_count = 0;
    let mut all_hirano = true;
    let mut all_decomposable = true;
    for (k, o) in outcomes.into_iter().enumerate() {
        let flat = indices.as_ref().map_or(k as u64, |v| v[k]);
        applicable += o.applicable as u64;
        if let Some(detail) = o.violation {
            let t = decode(flat);
            violations.push(Violation {
                instance: t
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                detail,
            });
        }
        if let Some(n) = o.note {
            if id == TheoremId::T3_6 {
                // Per-element data for the ring-level equivalence.
                let (h, d) = n.split_once(',').expect("flag pair");
                all_hirano &= h == "1";
                all_decomposable &= d == "1";
                continue;
            }
            note_count += 1;
            if notes.len() < MAX_NOTES {
                notes.push(n);
            }
        }
    }
    if id == TheoremId::T3_6 {
        notes.push(format!(
            "every element Hirano: {all_hirano}; every element tripotent + commuting nilpotent: {all_decomposable}"
        ));
        note_count = 1;
        if all_hirano != all_decomposable {
            violations.push(Violation {
                instance: ring.to_string(),
                detail: "strongly 2-nil-clean does not match all-Hirano".into(),
            });
        }
    }

    Ok(TheoremReport {
        theorem: id,
        ring: *ring,
        strategy: opts.strategy.name().into(),
        seed: opts.strategy.seed(),
        instances,
        applicable,
        violations,
        notes,
        note_count,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn check(id: TheoremId, ctx: &Ctx, t: &[Element]) -> Outcome {
    match id {
        TheoremId::T2_1 => check_2_1(ctx, &t[0]),
        TheoremId::T2_2 => Outcome::from_check(check_2_2(ctx, &t[0])),
        TheoremId::T2_4 => Outcome::from_check(check_2_4(ctx, &t[0])),
        TheoremId::T3_1 => Outcome::from_check(check_3_1(ctx, &t[0])),
        TheoremId::T3_2 => check_3_2(ctx, &t[0]),
        TheoremId::T3_3 => Outcome::from_check(check_3_3(ctx, &t[0])),
        TheoremId::T3_4 => Outcome::from_check(check_3_4(ctx, &t[0])),
        TheoremId::T3_6 => check_3_6(ctx, &t[0]),
        TheoremId::T4_1 => check_4_1(ctx, &t[0], &t[1], &t[2]),
        TheoremId::T4_2 => check_4_1(ctx, &t[0], &t[1], &t[1]),
        TheoremId::T4_3 => Outcome::from_check(check_4_3(&t[0], &t[1])),
        TheoremId::T4_4 => check_4_4(ctx, &t[0], &t[1]),
        TheoremId::T4_5 => check_4_5(ctx, &t[0]),
        TheoremId::T5_1 => check_5_1(ctx, &t[0], &t[1], &t[2]),
        TheoremId::T5_2 => check_5_1(ctx, &t[0], &t[1], &t[1]),
        TheoremId::T5_4 => check_5_4(ctx, &t[0], &t[1]),
        TheoremId::T5_5 => check_5_5(ctx, &t[0], &t[1]),
    }
}

fn check_2_1(ctx: &Ctx, a: &Element) -> Outcome {
    let found = ctx.oracle(a);
    if found.is_empty() {
        return Outcome::skip();
    }
    Outcome::from_check(found.iter().try_for_each(|b| {
        ensure(DrazinCertificate::certify(a, b).is_some(), || {
            format!("Hirano inverse {b} of {a} is not a Drazin inverse")
        })
    }))
}

fn check_2_2(ctx: &Ctx, a: &Element) -> Result<()> {
    let found = ctx.oracle(a);
    match found.as_slice() {
        [] => Ok(()),
        [b] => {
            let h = hirano(a)?;
            let d = drazin_finite(a)?;
            ensure(&h.inverse == b && &d.inverse == b, || {
                format!(
                    "unique Hirano inverse {b}, constructed {}, Drazin {}",
                    h.inverse, d.inverse
                )
            })
        }
        many => fail(format!("{} Hirano inverses of {a}", many.len())),
    }
}

fn check_2_4(ctx: &Ctx, a: &Element) -> Result<()> {
    let a2 = a * a;
    let exists = !ctx.oracle(a).is_empty();
    ensure(exists == has_strongly_drazin(&a2), || {
        format!("Hirano existence {exists} differs from strongly Drazin existence of a^2")
    })?;
    if !exists {
        return Ok(());
    }
    let h = hirano(a)?.inverse;
    let sd = strongly_drazin(&a2)?.inverse;
    ensure(sd == &h * &h, || {
        format!("(a^2)^sD = {sd} but (a^H)^2 = {}", &h * &h)
    })?;
    ensure(h == a * &sd, || {
        format!("a^H = {h} but a (a^2)^sD = {}", a * &sd)
    })?;
    let via = hirano_via_square(a)?.inverse;
    ensure(via == h, || {
        format!("square route gives {via}, direct route {h}")
    })
}

fn check_3_1(ctx: &Ctx, a: &Element) -> Result<()> {
    let found = ctx.oracle(a);
    let criterion = has_hirano(a);
    ensure(criterion == !found.is_empty(), || {
        format!(
            "criterion says {criterion}, brute force found {} inverses",
            found.len()
        )
    })?;
    if criterion {
        let b = hirano(a)?.inverse;
        ensure(found.contains(&b), || {
            format!("constructed {b} not among brute-force inverses")
        })?;
    }
    Ok(())
}

fn check_3_2(ctx: &Ctx, a: &Element) -> Outcome {
    if !has_hirano(a) {
        return Outcome::skip();
    }
    Outcome::from_check((|| {
        let h = hirano(a)?;
        let bb = hirano_of_hirano(&h)?;
        let found = ctx.oracle(&h.inverse);
        ensure(found == vec![bb.clone()], || {
            format!("brute force gives {found:?} for (a^H)^H, formula gives {bb}")
        })
    })())
}

fn check_3_3(ctx: &Ctx, a: &Element) -> Result<()> {
    if !has_hirano(a) {
        if ctx.size <= SMALL_RING {
            let p = brute_force_tripotents(a)?;
            ensure(p.is_empty(), || {
                format!("non-Hirano {a} has commuting tripotent part {}", p[0])
            })?;
        }
        return Ok(());
    }
    let d = tripotent_decomposition(a)?;
    let p = &d.tripotent;
    ensure(p.is_tripotent() && is_nilpotent(&(a - p)).is_some(), || {
        format!("p = {p} is not a tripotent with a - p nilpotent")
    })?;
    ensure(d.tripotent_certificate.certifies(p), || {
        format!("certificate for p = {p} fails")
    })?;
    if ctx.size <= CENTRALIZER_LIMIT {
        if let Some(y) = ctx
            .all()
            .find(|y| a.commutes_with(y) && !p.commutes_with(y))
        {
            return fail(format!(
                "p = {p} does not commute with {y}, which commutes with a"
            ));
        }
    }
    if ctx.size <= SMALL_RING {
        let candidates = brute_force_tripotents(a)?;
        ensure(candidates.contains(p), || {
            format!("p = {p} not among brute-force tripotents {candidates:?}")
        })?;
    }
    Ok(())
}

fn check_3_4(ctx: &Ctx, a: &Element) -> Result<()> {
    if has_hirano(a) {
        let (b, c) = sd_difference_decomposition(a)?;
        return ensure(
            &(&b - &c) == a
                && b.commutes_with(&c)
                && has_strongly_drazin(&b)
                && has_strongly_drazin(&c),
            || format!("decomposition ({b}, {c}) fails"),
        );
    }
    if ctx.size <= SMALL_RING {
        for b in ctx.all() {
            let c = &b - a;
            if b.commutes_with(&c) && has_strongly_drazin(&b) && has_strongly_drazin(&c) {
                return fail(format!(
                    "non-Hirano {a} = {b} - {c} with both strongly Drazin"
                ));
            }
        }
    }
    Ok(())
}

fn check_3_6(ctx: &Ctx, a: &Element) -> Outcome {
    let hirano = !ctx.oracle(a).is_empty();
    let decomposable = ctx
        .all()
        .any(|p| p.is_tripotent() && p.commutes_with(a) && is_nilpotent(&(a - &p)).is_some());
    Outcome {
        applicable: true,
        violation: None,
        note: Some(format!("{},{}", hirano as u8, decomposable as u8)),
    }
}

fn check_4_1(ctx: &Ctx, a: &Element, b: &Element, c: &Element) -> Outcome {
    if &(a * b) * a != &(a * c) * a {
        return Outcome::skip();
    }
    let ac = a * c;
    let ba = b * a;
    Outcome::from_check((|| {
        let (left, right) = (has_hirano(&ac), has_hirano(&ba));
        ensure(left == right, || {
            format!("ac Hirano {left}, ba Hirano {right}")
        })?;
        let oracle_ba = ctx.oracle(&ba);
        ensure(ctx.oracle(&ac).is_empty() == oracle_ba.is_empty(), || {
            "brute-force existence differs between ac and ba".into()
        })?;
        if left {
            let out = cline(a, b, c, &hirano(&ac)?)?;
            ensure(oracle_ba == vec![out.inverse.clone()], || {
                format!("Cline inverse {} vs brute force {oracle_ba:?}", out.inverse)
            })?;
        }
        Ok(())
    })())
}

fn check_4_3(a: &Element, b: &Element) -> Result<()> {
    for k in 1..=3 {
        power_transfer(a, b, k)?;
        power_transfer(b, a, k)?;
    }
    Ok(())
}

fn check_4_4(ctx: &Ctx, a: &Element, b: &Element) -> Outcome {
    if !a.commutes_with(b) || !has_hirano(a) || !has_hirano(b) {
        return Outcome::skip();
    }
    Outcome::from_check((|| {
        let (ha, hb) = (hirano(a)?, hirano(b)?);
        ensure(ha.inverse.commutes_with(&hb.inverse), || {
            format!(
                "a^H = {} and b^H = {} do not commute",
                ha.inverse, hb.inverse
            )
        })?;
        let p = commuting_product(&ha, &hb)?;
        let found = ctx.oracle(&(a * b));
        ensure(found == vec![p.inverse.clone()], || {
            format!("product inverse {} vs brute force {found:?}", p.inverse)
        })
    })())
}

fn check_4_5(ctx: &Ctx, a: &Element) -> Outcome {
    if !has_hirano(a) {
        return Outcome::skip();
    }
    Outcome::from_check((|| {
        let h = hirano(a)?;
        for n in 1..=4 {
            let p = power_formula(&h, n)?;
            let found = ctx.oracle(&a.pow(n));
            ensure(found == vec![p.inverse.clone()], || {
                format!("(a^{n})^H = {} vs brute force {found:?}", p.inverse)
            })?;
        }
        Ok(())
    })())
}

fn check_5_1(ctx: &Ctx, a: &Element, b: &Element, c: &Element) -> Outcome {
    if &(a * b) * a != &(a * c) * a {
        return Outcome::skip();
    }
    Outcome::from_check((|| {
        jacobson_transfer(a, b, c)?;
        let one = ctx.ring.one();
        let left = ctx.oracle(&(&one + &(a * c))).is_empty();
        let right = ctx.oracle(&(&one + &(b * a))).is_empty();
        ensure(left == right, || {
            "brute-force existence differs between 1 + ac and 1 + ba".into()
        })
    })())
}

fn check_5_4(ctx: &Ctx, a: &Element, b: &Element) -> Outcome {
    if !(a * b).is_zero() || !(b * a).is_zero() || !has_hirano(a) || !has_hirano(b) {
        return Outcome::skip();
    }
    Outcome::from_check((|| {
        let s = orthogonal_sum(&hirano(a)?, &hirano(b)?)?;
        let found = ctx.oracle(&(a + b));
        ensure(found == vec![s.inverse.clone()], || {
            format!("sum inverse {} vs brute force {found:?}", s.inverse)
        })
    })())
}

fn check_5_5(ctx: &Ctx, a: &Element, b: &Element) -> Outcome {
    let ab = a * b;
    if !(a * a).is_zero() || !(b * b).is_zero() || !has_strongly_drazin(&ab) {
        return Outcome::skip();
    }
    let mut note = None;
    let r = (|| {
        let out = square_zero_sum(a, b, &strongly_drazin(&ab)?)?;
        if !out.forms_agree() || !out.statement_form_valid || !out.proof_form_valid {
            note =
                Some(format!(
                "a = {a}, b = {b}: a(ba)^H + b(ab)^H = {} ({}), a(ba)^D + b(ab)(ab)^D = {} ({})",
                out.statement_form,
                if out.statement_form_valid { "valid" } else { "invalid" },
                out.proof_form,
                if out.proof_form_valid { "valid" } else { "invalid" },
            ));
        }
        let found = ctx.oracle(&(a + b));
        ensure(found == vec![out.certificate.inverse.clone()], || {
            format!(
                "sum inverse {} vs brute force {found:?}",
                out.certificate.inverse
            )
        })
    })();
    Outcome {
        note,
        ..Outcome::from_check(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(n: u64) -> RingSpec {
        RingSpec::matrix(RingSpec::modular(n).unwrap(), 2).unwrap()
    }

    #[test]
    fn ids_parse_and_print() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!(matches!(
            "3.5".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn every_theorem_holds_on_small_rings() {
        for id in TheoremId::ALL {
            let ring = if matches!(id, TheoremId::T3_3 | TheoremId::T3_4) {
                RingSpec::modular(27).unwrap()
            } else {
                m2(2)
            };
            let rep = verify_theorem(id, &ring, &VerifyOptions::default()).unwrap();
            assert!(rep.passed(), "{id} on {ring}: {:?}", rep.violations);
            assert!(rep.applicable > 0 || id == TheoremId::T5_5, "{id}");
        }
    }

    #[test]
    fn counts_for_known_spaces() {
        let rep = verify_theorem(TheoremId::T3_1, &m2(2), &VerifyOptions::default()).unwrap();
        assert_eq!(rep.instances, 16);
        let rep = verify_theorem(TheoremId::T5_1, &m2(2), &VerifyOptions::default()).unwrap();
        assert_eq!(rep.instances, 4096);
        assert!(rep.applicable < 4096);
    }

    #[test]
    fn two_must_be_a_unit_for_the_tripotent_statements() {
        assert!(matches!(
            verify_theorem(TheoremId::T3_3, &m2(2), &VerifyOptions::default()),
            Err(Error::TwoNotUnit(_))
        ));
    }

    #[test]
    fn sampled_runs_are_replayable() {
        let opts = VerifyOptions {
            strategy: Strategy::Sampled {
                seed: 7,
                samples: 500,
            },
            ..Default::default()
        };
        let a = verify_theorem(TheoremId::T4_1, &m2(3), &opts).unwrap();
        let b = verify_theorem(TheoremId::T4_1, &m2(3), &opts).unwrap();
        assert_eq!(a.instances, 500);
        assert_eq!(a.seed, Some(7));
        assert_eq!((a.applicable, &a.violations), (b.applicable, &b.violations));
        assert!(a.passed());
    }

    #[test]
    fn exhaustive_cap() {
        let opts = VerifyOptions {
            max_instances: 1000,
            ..Default::default()
        };
        assert!(matches!(
            verify_theorem(TheoremId::T5_1, &m2(2), &opts),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn strongly_2_nil_clean_rings() {
        for (ring, expect) in [
            (RingSpec::modular(9).unwrap(), true),
            (RingSpec::modular(3).unwrap(), true),
            (m2(2), false),
        ] {
            let rep = verify_theorem(TheoremId::T3_6, &ring, &VerifyOptions::default()).unwrap();
            assert!(rep.passed());
            assert!(rep.notes[0].starts_with(&format!("every element Hirano: {expect}")));
        }
    }
}
