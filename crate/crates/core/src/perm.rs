//! Permutations of `{1..n}`.
//!
//! Points are 1-based at every public boundary (cycle notation, `image`);
//! the image table is stored 0-based. Products read left to right:
//! `p.compose(&q)` applies `p` first, then `q`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list: `images[i - 1]` is
    /// the image of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::PointOutOfRange { point: 0, degree });
        }
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for &p in images {
            if p == 0 || p > degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::RepeatedPoint(p));
            }
            table.push((p - 1) as u32);
        }
        Ok(Permutation { images: table })
    }

    /// Product of disjoint cycles, each a list of 1-based points.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::PointOutOfRange { point: 0, degree });
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; `()` or an empty string
    /// is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let mut number_start = 0;
        let flush =
            |number: &mut String, start: usize, cycle: &mut Option<Vec<usize>>| -> Result<()> {
                if number.is_empty() {
                    return Ok(());
                }
                let value = number.parse::<usize>().map_err(|e| Error::Syntax {
                    position: start,
                    message: format!("bad point `{number}`: {e}"),
                })?;
                match cycle {
                    Some(c) => c.push(value),
                    None => {
                        return Err(Error::Syntax {
                            position: start,
                            message: "point outside parentheses".into(),
                        })
                    }
                }
                number.clear();
                Ok(())
            };
        for (pos, ch) in text.char_indices() {
            match ch {
                '0'..='9' => {
                    if number.is_empty() {
                        number_start = pos;
                    }
                    number.push(ch);
                }
                '(' => {
                    flush(&mut number, number_start, &mut current)?;
                    if current.is_some() {
                        return Err(Error::Syntax {
                            position: pos,
                            message: "nested `(`".into(),
                        });
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, number_start, &mut current)?;
                    match current.take() {
                        Some(c) => cycles.push(c),
                        None => {
                            return Err(Error::Syntax {
                                position: pos,
                                message: "unmatched `)`".into(),
                            })
                        }
                    }
                }
                ',' => flush(&mut number, number_start, &mut current)?,
                c if c.is_whitespace() => flush(&mut number, number_start, &mut current)?,
                other => {
                    return Err(Error::Syntax {
                        position: pos,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        flush(&mut number, number_start, &mut current)?;
        if current.is_some() {
            return Err(Error::Syntax {
                position: text.len(),
                message: "unterminated cycle".into(),
            });
        }
        Permutation::from_cycles(&cycles, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn img(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// "Apply `self`, then `other`".
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&square);
            }
            square = square.mul_unchecked(&square);
            e >>= 1;
        }
        acc
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().mul_unchecked(self).mul_unchecked(other)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &p)| i == p as usize)
    }

    /// Nontrivial cycles in 1-based points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.img(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.img(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Smallest moved point, 0-based.
    pub(crate) fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &p)| *i != p as usize)
            .map(|(i, _)| i)
    }

    /// Acts as `self` on `1..=n` and as `other` (shifted by `n`) on the rest.
    pub fn disjoint_union(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&p| p + shift));
        Permutation { images }
    }

    /// Restriction to the 0-based block `start..start + len`, which must be
    /// invariant.
    pub(crate) fn restrict(&self, start: usize, len: usize) -> Permutation {
        let images = self.images[start..start + len]
            .iter()
            .map(|&p| {
                let p = p as usize;
                debug_assert!(p >= start && p < start + len, "block is not invariant");
                (p - start) as u32
            })
            .collect();
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
