//! Exact arithmetic in `Z`, `Z/n` and the matrix rings `M_k(Z)`, `M_k(Z/n)`.
//!
//! Every element carries its [`RingSpec`] and a dense row-major payload. Scalars are
//! stored as 1×1 payloads so that scalar and matrix arithmetic share one code path.
//! Residues are kept reduced into `[0, n)`; integer payloads are arbitrary precision.

mod enumerate;
mod factor;
mod nilpotent;
mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use enumerate::Elements;
pub use factor::{factorize, Factorization};
pub use nilpotent::{inverse_of_unipotent, is_nilpotent, nilpotency_bound, NilpotencyWitness};
pub use parse::{parse_element, parse_ring};
pub use poly::{char_poly, IntPoly};

/// Largest supported modulus. Products of two residues fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

/// A modulus `n` with `2 <= n <= 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!(
                "modulus must be at least 2, got {n}"
            )));
        }
        if n > MAX_MODULUS {
            return Err(Error::InvalidRing(format!(
                "modulus {n} exceeds the supported maximum 2^32"
            )));
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    fn reduce_big(self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.0))
            .to_u64()
            .expect("residue fits in u64")
    }

    #[inline]
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }
}

/// Scalar base of a ring: the integers or a residue ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    Modular(Modulus),
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::Modular(n) => write!(f, "Z/{}", n.get()),
        }
    }
}

/// A concrete ring: `Z`, `Z/n`, or `M_k` over one of those.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    base: BaseRing,
    dim: Option<usize>,
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec {
            base: BaseRing::Integers,
            dim: None,
        }
    }

    pub fn modular(n: u64) -> Result<Self> {
        Ok(RingSpec {
            base: BaseRing::Modular(Modulus::new(n)?),
            dim: None,
        })
    }

    /// `M_dim(base)`. `base` must itself be a scalar ring.
    pub fn matrix(base: RingSpec, dim: usize) -> Result<Self> {
        if base.dim.is_some() {
            return Err(Error::InvalidRing(
                "matrices over matrix rings are not supported".into(),
            ));
        }
        if dim == 0 {
            return Err(Error::InvalidRing(
                "matrix dimension must be at least 1".into(),
            ));
        }
        Ok(RingSpec {
            base: base.base,
            dim: Some(dim),
        })
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    /// Scalar ring underlying this ring (itself for scalar rings).
    pub fn scalar_ring(&self) -> RingSpec {
        RingSpec {
            base: self.base,
            dim: None,
        }
    }

    pub fn is_matrix(&self) -> bool {
        self.dim.is_some()
    }

    /// Matrix dimension; 1 for scalar rings.
    pub fn dim(&self) -> usize {
        self.dim.unwrap_or(1)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.base {
            BaseRing::Integers => None,
            BaseRing::Modular(n) => Some(n.get()),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.base, BaseRing::Modular(_))
    }

    fn entry_count(&self) -> usize {
        let k = self.dim();
        k * k
    }

    /// Number of elements, or `None` for infinite rings.
    pub fn cardinality(&self) -> Option<num_bigint::BigUint> {
        let n = self.modulus()?;
        Some(num_bigint::BigUint::from(n).pow(self.entry_count() as u32))
    }

    /// Number of elements as a `u64`, provided the ring is finite and has at most `cap` elements.
    pub fn size_within(&self, cap: u64) -> Result<u64> {
        let card = self.cardinality().ok_or(Error::NotFinite(*self))?;
        match card.to_u64() {
            Some(s) if s <= cap => Ok(s),
            _ => Err(Error::RingTooLarge {
                ring: *self,
                size: card.to_string(),
                cap,
            }),
        }
    }

    /// 2 is a unit iff the base is `Z/n` with `n` odd.
    pub fn two_is_unit(&self) -> bool {
        matches!(self.modulus(), Some(n) if n % 2 == 1)
    }

    pub fn zero(&self) -> Element {
        let len = self.entry_count();
        let data = match self.base {
            BaseRing::Integers => Entries::Integer(vec![BigInt::zero(); len]),
            BaseRing::Modular(_) => Entries::Residue(vec![0; len]),
        };
        Element { ring: *self, data }
    }

    pub fn one(&self) -> Element {
        self.from_int(1)
    }

    /// The integer `c` embedded as `c · 1`.
    pub fn from_int(&self, c: i64) -> Element {
        self.from_bigint(&BigInt::from(c))
    }

    pub fn from_bigint(&self, c: &BigInt) -> Element {
        let mut z = self.zero();
        let k = self.dim();
        for i in 0..k {
            z.data.set_from_big(self.base, i * k + i, c);
        }
        z
    }

    /// Builds an element from row-major integer entries, reducing residues.
    pub fn element_from_entries(&self, entries: &[BigInt]) -> Result<Element> {
        if entries.len() != self.entry_count() {
            return Err(Error::InvalidRing(format!(
                "{} expects {} entries, got {}",
                self,
                self.entry_count(),
                entries.len()
            )));
        }
        let data = match self.base {
            BaseRing::Integers => Entries::Integer(entries.to_vec()),
            BaseRing::Modular(n) => {
                Entries::Residue(entries.iter().map(|x| n.reduce_big(x)).collect())
            }
        };
        Ok(Element { ring: *self, data })
    }

    /// Convenience for literals in code and tests: `ring.elem(&[0, 1, 1, 1])`.
    pub fn elem(&self, entries: &[i64]) -> Result<Element> {
        let big: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
        self.element_from_entries(&big)
    }

    /// The inverse of 2 as a scalar element, when it exists.
    pub fn half(&self) -> Result<Element> {
        match self.modulus() {
            Some(n) if n % 2 == 1 => Ok(self.from_int(n.div_ceil(2) as i64)),
            _ => Err(Error::TwoNotUnit(*self)),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dim {
            None => write!(f, "{}", self.base),
            Some(k) => write!(f, "M{}({})", k, self.base),
        }
    }
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Entries {
    Residue(Vec<u64>),
    Integer(Vec<BigInt>),
}

impl Entries {
    fn set_from_big(&mut self, base: BaseRing, idx: usize, c: &BigInt) {
        match (self, base) {
            (Entries::Residue(v), BaseRing::Modular(n)) => v[idx] = n.reduce_big(c),
            (Entries::Integer(v), BaseRing::Integers) => v[idx] = c.clone(),
            _ => unreachable!("payload kind always matches the base ring"),
        }
    }
}

/// An immutable element of a [`RingSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingSpec,
    data: Entries,
}

impl Element {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    /// Row-major entry `(i, j)` as an integer (the residue for modular bases).
    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        let idx = i * self.ring.dim() + j;
        match &self.data {
            Entries::Residue(v) => BigInt::from(v[idx]),
            Entries::Integer(v) => v[idx].clone(),
        }
    }

    /// All entries, row-major.
    pub fn entries(&self) -> Vec<BigInt> {
        match &self.data {
            Entries::Residue(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            Entries::Integer(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Entries::Residue(v) => v.iter().all(|&x| x == 0),
            Entries::Integer(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    fn modulus_of(&self) -> Modulus {
        match self.ring.base {
            BaseRing::Modular(n) => n,
            BaseRing::Integers => unreachable!("residue payload over the integers"),
        }
    }

    fn zip(
        &self,
        other: &Element,
        fm: impl Fn(Modulus, u64, u64) -> u64,
        fi: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Element {
        let data = match (&self.data, &other.data) {
            (Entries::Residue(a), Entries::Residue(b)) => {
                let n = self.modulus_of();
                Entries::Residue(a.iter().zip(b).map(|(&x, &y)| fm(n, x, y)).collect())
            }
            (Entries::Integer(a), Entries::Integer(b)) => {
                Entries::Integer(a.iter().zip(b).map(|(x, y)| fi(x, y)).collect())
            }
            _ => unreachable!("payload kind always matches the base ring"),
        };
        Element {
            ring: self.ring,
            data,
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.zip(other, Modulus::add, |x, y| x + y))
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.zip(other, Modulus::sub, |x, y| x - y))
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let k = self.ring.dim();
        let data = match (&self.data, &other.data) {
            (Entries::Residue(a), Entries::Residue(b)) => {
                let n = self.modulus_of();
                let mut out = vec![0u64; k * k];
                for i in 0..k {
                    for l in 0..k {
                        let ail = a[i * k + l];
                        if ail == 0 {
                            continue;
                        }
                        for j in 0..k {
                            out[i * k + j] = n.add(out[i * k + j], n.mul(ail, b[l * k + j]));
                        }
                    }
                }
                Entries::Residue(out)
            }
            (Entries::Integer(a), Entries::Integer(b)) => {
                let mut out = vec![BigInt::zero(); k * k];
                for i in 0..k {
                    for l in 0..k {
                        let ail = &a[i * k + l];
                        if ail.is_zero() {
                            continue;
                        }
                        for j in 0..k {
                            out[i * k + j] += ail * &b[l * k + j];
                        }
                    }
                }
                Entries::Integer(out)
            }
            _ => unreachable!("payload kind always matches the base ring"),
        };
        Ok(Element {
            ring: self.ring,
            data,
        })
    }

    pub fn neg(&self) -> Element {
        self.ring.zero().try_sub(self).expect("same ring")
    }

    /// Multiplies every entry by the integer `c`.
    pub fn scale(&self, c: &BigInt) -> Element {
        let data = match &self.data {
            Entries::Residue(v) => {
                let n = self.modulus_of();
                let c = n.reduce_big(c);
                Entries::Residue(v.iter().map(|&x| n.mul(x, c)).collect())
            }
            Entries::Integer(v) => Entries::Integer(v.iter().map(|x| x * c).collect()),
        };
        Element {
            ring: self.ring,
            data,
        }
    }

    pub fn scale_int(&self, c: i64) -> Element {
        self.scale(&BigInt::from(c))
    }

    /// `self^e` by square-and-multiply; `x^0` is the identity.
    pub fn pow(&self, mut e: u64) -> Element {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn commutes_with(&self, other: &Element) -> bool {
        self * other == other * self
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    pub fn is_tripotent(&self) -> bool {
        &self.pow(3) == self
    }

    /// Position of this element in [`RingSpec::elements`] order, for finite rings.
    pub fn index(&self) -> Option<u64> {
        match &self.data {
            Entries::Residue(v) => {
                let n = self.modulus_of().get();
                let mut idx: u64 = 0;
                for &x in v {
                    idx = idx.checked_mul(n)?.checked_add(x)?;
                }
                Some(idx)
            }
            Entries::Integer(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.entries();
        match self.ring.dim {
            None => write!(f, "{}", entries[0]),
            Some(k) => {
                write!(f, "[")?;
                for i in 0..k {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[")?;
                    for j in 0..k {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{}", entries[i * k + j])?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// Operator forms panic on ring mismatch; use the `try_*` methods when the rings
// are not known to agree.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}
