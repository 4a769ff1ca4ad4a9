use crate::error::{Error, Result};

use super::{Element, Entries, RingSpec};

impl RingSpec {
    /// All elements in lexicographic order of their row-major residues.
    pub fn elements(&self) -> Result<Elements> {
        let size = self.size_within(u64::MAX)?;
        Ok(Elements {
            ring: *self,
            next: 0,
            size,
        })
    }

    /// The element at position `idx` of [`RingSpec::elements`].
    pub fn element_at(&self, mut idx: u64) -> Result<Element> {
        let n = self.modulus().ok_or(Error::NotFinite(*self))?;
        let len = self.entry_count();
        let mut v = vec![0u64; len];
        for slot in v.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        if idx != 0 {
            return Err(Error::Precondition(format!(
                "index out of range for {self}"
            )));
        }
        Ok(Element {
            ring: *self,
            data: Entries::Residue(v),
        })
    }
}

/// Iterator over the elements of a finite ring.
#[derive(Debug, Clone)]
pub struct Elements {
    ring: RingSpec,
    next: u64,
    size: u64,
}

impl Elements {
    pub fn size(&self) -> u64 {
        self.size
    }
}

impl Iterator for Elements {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.next >= self.size {
            return None;
        }
        let e = self.ring.element_at(self.next).expect("index below size");
        self.next += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.size - self.next) as usize;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for Elements {}
