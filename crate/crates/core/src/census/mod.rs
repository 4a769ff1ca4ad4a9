//! Whole-ring classification and theorem verification on finite rings.

mod theorems;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverse::{
    brute_force_drazin, brute_force_hirano, brute_force_strongly_drazin, has_hirano,
    has_strongly_drazin, is_unit,
};
use crate::par::{map_range, Workers};
use crate::ring::{is_nilpotent, Element, RingSpec};

pub use theorems::{verify_theorem, TheoremId, TheoremReport, VerifyOptions, Violation};

/// Default cap on the number of elements a census will classify.
pub const DEFAULT_MAX_RING_SIZE: u64 = 1_000_000;
/// Rings up to this size are cross-checked against brute force element by element.
pub const EXHAUSTIVE_CROSS_CHECK_LIMIT: u64 = 10_000;
/// Elements cross-checked against brute force in larger rings.
pub const SAMPLED_CROSS_CHECK: u64 = 32;
pub const DEFAULT_SEED: u64 = 0x5eed_5eed;
/// Tuples drawn when a hypothesis space is too large to scan.
pub const DEFAULT_SAMPLES: u64 = 10_000;

/// How a hypothesis space (or a cross-check) was covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

impl Strategy {
    fn name(&self) -> &'static str {
        match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::Sampled { .. } => "sampled",
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Strategy::Exhaustive => None,
            Strategy::Sampled { seed, .. } => Some(*seed),
        }
    }
}

/// `count` indices below `bound`, drawn from a ChaCha8 stream seeded with `seed`.
pub(crate) fn sample_indices(seed: u64, count: u64, bound: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen_range(0..bound)).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub total: u64,
    pub nilpotent: u64,
    pub idempotent: u64,
    pub tripotent: u64,
    pub unit: u64,
    pub drazin: u64,
    pub strongly_drazin: u64,
    pub hirano: u64,
}

impl Counts {
    fn merge(mut self, c: &Class) -> Self {
        self.total += 1;
        self.nilpotent += c.nilpotent as u64;
        self.idempotent += c.idempotent as u64;
        self.tripotent += c.tripotent as u64;
        self.unit += c.unit as u64;
        self.drazin += 1;
        self.strongly_drazin += c.strongly_drazin as u64;
        self.hirano += c.hirano as u64;
        self
    }
}

/// An element showing that one inclusion of inverse classes is proper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictnessWitness {
    pub inclusion: String,
    pub element: Element,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub ring: RingSpec,
    pub counts: Counts,
    pub witnesses: Vec<StrictnessWitness>,
    pub strongly_2_nil_clean: bool,
    pub cross_check: String,
    pub cross_checked: u64,
    pub seed: Option<u64>,
}

impl CensusReport {
    /// Stable JSON with sorted keys.
    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub workers: Workers,
    pub max_ring_size: u64,
    pub seed: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            workers: Workers::Auto,
            max_ring_size: DEFAULT_MAX_RING_SIZE,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Class {
    nilpotent: bool,
    idempotent: bool,
    tripotent: bool,
    unit: bool,
    strongly_drazin: bool,
    hirano: bool,
}

fn classify_fast(a: &Element) -> Class {
    Class {
        nilpotent: is_nilpotent(a).is_some(),
        idempotent: a.is_idempotent(),
        tripotent: a.is_tripotent(),
        unit: is_unit(a),
        strongly_drazin: has_strongly_drazin(a),
        hirano: has_hirano(a),
    }
}

/// Re-derives the inverse flags of `a` by definitional search and compares.
fn cross_check(a: &Element, c: &Class) -> Result<()> {
    let drazin = !brute_force_drazin(a)?.is_empty();
    let sd = !brute_force_strongly_drazin(a)?.is_empty();
    let h = !brute_force_hirano(a)?.is_empty();
    if !drazin || sd != c.strongly_drazin || h != c.hirano {
        return Err(Error::Verification(format!(
            "criteria disagree with brute force at {a}: drazin {drazin}, strongly Drazin {} vs {sd}, Hirano {} vs {h}",
            c.strongly_drazin, c.hirano
        )));
    }
    Ok(())
}

/// Classifies every element of a finite ring.
pub fn run_census(ring: &RingSpec) -> Result<CensusReport> {
    run_census_with(ring, &CensusOptions::default())
}

pub fn run_census_with(ring: &RingSpec, opts: &CensusOptions) -> Result<CensusReport> {
    let size = ring.size_within(opts.max_ring_size)?;
    let exhaustive = size <= EXHAUSTIVE_CROSS_CHECK_LIMIT;
    let checked: Vec<bool> = if exhaustive {
        vec![true; size as usize]
    } else {
        let mut v = vec![false; size as usize];
        for i in sample_indices(opts.seed, SAMPLED_CROSS_CHECK, size) {
            v[i as usize] = true;
        }
        v
    };

    let classes = map_range(size, opts.workers, |i| -> Result<Class> {
        let a = ring.element_at(i)?;
        let c = classify_fast(&a);
        if checked[i as usize] {
            cross_check(&a, &c)?;
        }
        Ok(c)
    });
    let classes: Vec<Class> = classes.into_iter().collect::<Result<_>>()?;

    let counts = classes.iter().fold(Counts::default(), Counts::merge);
    let mut witnesses = Vec::new();
    if let Some(i) = classes.iter().position(|c| c.hirano && !c.strongly_drazin) {
        let a = ring.element_at(i as u64)?;
        let d = &a - &(&a * &a);
        witnesses.push(StrictnessWitness {
            inclusion: "strongly_drazin < hirano".into(),
            reason: format!("a - a^3 is nilpotent but a - a^2 = {d} is not"),
            element: a,
        });
    }
    if let Some(i) = classes.iter().position(|c| !c.hirano) {
        let a = ring.element_at(i as u64)?;
        let d = &a - &a.pow(3);
        witnesses.push(StrictnessWitness {
            inclusion: "hirano < drazin".into(),
            reason: format!(
                "Drazin invertible in a finite ring but a - a^3 = {d} is not nilpotent"
            ),
            element: a,
        });
    }

    let strategy = if exhaustive {
        Strategy::Exhaustive
    } else {
        Strategy::Sampled {
            seed: opts.seed,
            samples: SAMPLED_CROSS_CHECK,
        }
    };
    Ok(CensusReport {
        ring: *ring,
        strongly_2_nil_clean: counts.hirano == counts.total,
        counts,
        witnesses,
        cross_check: strategy.name().into(),
        cross_checked: checked.iter().filter(|&&c| c).count() as u64,
        seed: strategy.seed(),
    })
}

/// Serializes with object keys in sorted order, whatever map backing serde_json uses.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    fn sort(v: serde_json::Value) -> serde_json::Value {
        match v {
            serde_json::Value::Object(map) => {
                let mut entries: Vec<_> = map.into_iter().collect();
                entries.sort_by(|a, b| a.0.cmp(&b.0));
                serde_json::Value::Object(entries.into_iter().map(|(k, v)| (k, sort(v))).collect())
            }
            serde_json::Value::Array(items) => {
                serde_json::Value::Array(items.into_iter().map(sort).collect())
            }
            other => other,
        }
    }
    let v = serde_json::to_value(value).expect("report serializes");
    serde_json::to_string(&sort(v)).expect("value serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(n: u64) -> RingSpec {
        RingSpec::matrix(RingSpec::modular(n).unwrap(), 2).unwrap()
    }

    #[test]
    fn z3() {
        let r = run_census(&RingSpec::modular(3).unwrap()).unwrap();
        assert_eq!(r.counts.total, 3);
        assert_eq!(r.counts.hirano, 3);
        assert_eq!(r.counts.strongly_drazin, 2);
        assert!(r.strongly_2_nil_clean);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(
            r.witnesses[0].element,
            RingSpec::modular(3).unwrap().from_int(2)
        );
    }

    #[test]
    fn m2_z2() {
        let ring = m2(2);
        let r = run_census(&ring).unwrap();
        assert_eq!(r.counts.drazin, 16);
        assert_eq!(r.counts.hirano, 14);
        assert!(!r.strongly_2_nil_clean);
        let bad: Vec<Element> = ring
            .elements()
            .unwrap()
            .filter(|a| !has_hirano(a))
            .collect();
        assert_eq!(
            bad,
            vec![
                ring.elem(&[0, 1, 1, 1]).unwrap(),
                ring.elem(&[1, 1, 1, 0]).unwrap()
            ]
        );
        assert_eq!(r.cross_check, "exhaustive");
        assert_eq!(r.cross_checked, 16);
    }

    #[test]
    fn z9_is_strongly_2_nil_clean() {
        let r = run_census(&RingSpec::modular(9).unwrap()).unwrap();
        assert_eq!(r.counts.hirano, 9);
        assert!(r.strongly_2_nil_clean);
    }

    #[test]
    fn counts_respect_the_hierarchy() {
        for ring in [
            m2(2),
            m2(3),
            RingSpec::modular(12).unwrap(),
            RingSpec::modular(25).unwrap(),
        ] {
            let r = run_census(&ring).unwrap();
            let c = r.counts;
            assert!(c.strongly_drazin <= c.hirano && c.hirano <= c.drazin && c.drazin == c.total);
            assert_eq!(r.strongly_2_nil_clean, c.hirano == c.total);
        }
    }

    #[test]
    fn caps_and_infinite_rings() {
        assert!(matches!(
            run_census(&RingSpec::integers()),
            Err(Error::NotFinite(_))
        ));
        let opts = CensusOptions {
            max_ring_size: 10,
            ..Default::default()
        };
        assert!(matches!(
            run_census_with(&m2(2), &opts),
            Err(Error::RingTooLarge { .. })
        ));
    }

    #[test]
    fn sampled_cross_check_above_the_limit() {
        // M2(Z/11) has 14641 elements.
        let r = run_census(&m2(11)).unwrap();
        assert_eq!(r.cross_check, "sampled");
        assert_eq!(r.seed, Some(DEFAULT_SEED));
        assert!(r.cross_checked <= SAMPLED_CROSS_CHECK && r.cross_checked > 0);
    }

    #[test]
    fn json_is_sorted_and_worker_independent() {
        let ring = m2(3);
        let a = run_census_with(
            &ring,
            &CensusOptions {
                workers: Workers::Fixed(1),
                ..Default::default()
            },
        )
        .unwrap()
        .to_json();
        let b = run_census_with(
            &ring,
            &CensusOptions {
                workers: Workers::Fixed(4),
                ..Default::default()
            },
        )
        .unwrap()
        .to_json();
        assert_eq!(a, b);
        assert!(a.starts_with("{\"counts\":{\"drazin\":81,"));
    }
}
