//! Literal grammar shared by the library and the CLI.
//!
//! ```text
//! ring    := "Z" | "Z/" uint | "M" uint "(" scalar ")"
//! scalar  := "Z" | "Z/" uint
//! element := int | "[" row ("," row)* "]"
//! row     := "[" int ("," int)* "]"
//! ```
//!
//! Whitespace is allowed between tokens. Integers may carry a leading `-` (or U+2212).

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{Element, RingSpec};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return self.err("expected digits");
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Ok(s)
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("{d} does not fit in 64 bits"),
        })
    }

    fn int(&mut self) -> Result<BigInt> {
        let negative = self.eat('-') || self.eat('\u{2212}');
        let d = self.digits()?;
        let v: BigInt = d.parse().expect("digits parse as BigInt");
        Ok(if negative { -v } else { v })
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing '{c}'")),
        }
    }

    fn scalar_ring(&mut self) -> Result<RingSpec> {
        let start = self.pos;
        self.expect('Z')?;
        if self.eat('/') {
            let n = self.uint()?;
            RingSpec::modular(n).map_err(|e| Error::Parse {
                pos: start,
                msg: e.to_string(),
            })
        } else {
            Ok(RingSpec::integers())
        }
    }
}

/// Parses `Z`, `Z/9`, `M2(Z/3)`, `M3(Z)`.
pub fn parse_ring(src: &str) -> Result<RingSpec> {
    let mut c = Cursor::new(src);
    let ring = match c.peek() {
        Some('M') => {
            c.pos += 1;
            let start = c.pos;
            let k = c.uint()?;
            c.expect('(')?;
            let base = c.scalar_ring()?;
            c.expect(')')?;
            RingSpec::matrix(base, k as usize).map_err(|e| Error::Parse {
                pos: start,
                msg: e.to_string(),
            })?
        }
        Some('Z') => c.scalar_ring()?,
        Some(other) => return c.err(format!("expected 'Z' or 'M', found '{other}'")),
        None => return c.err("empty ring literal"),
    };
    c.finish()?;
    Ok(ring)
}

/// Parses an element literal of `ring`, reducing residues.
pub fn parse_element(ring: &RingSpec, src: &str) -> Result<Element> {
    let mut c = Cursor::new(src);
    let k = ring.dim();
    let mut entries = Vec::with_capacity(k * k);
    if ring.is_matrix() {
        c.expect('[')?;
        for i in 0..k {
            if i > 0 {
                c.expect(',')?;
            }
            c.expect('[')?;
            for j in 0..k {
                if j > 0 {
                    c.expect(',')?;
                }
                entries.push(c.int()?);
            }
            if c.peek() == Some(',') {
                return c.err(format!("row {} has more than {k} entries", i + 1));
            }
            c.expect(']')?;
        }
        if c.peek() == Some(',') {
            return c.err(format!("more than {k} rows"));
        }
        c.expect(']')?;
    } else {
        if c.peek() == Some('[') {
            return c.err(format!("{ring} is a scalar ring; expected an integer"));
        }
        entries.push(c.int()?);
    }
    c.finish()?;
    ring.element_from_entries(&entries)
}
