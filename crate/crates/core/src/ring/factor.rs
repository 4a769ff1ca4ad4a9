use std::fmt;

use crate::error::{Error, Result};

/// Prime factorization, ascending by prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn max_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Trial division. Moduli are capped at 2^32 so this is at most 2^16 divisions.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::Precondition(format!("cannot factor {n}")));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}
