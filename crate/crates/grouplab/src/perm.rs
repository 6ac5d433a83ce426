//! Permutations on {1..n}, stored as 0-based image tables. Composition reads
//! left to right: `a.compose(&b)` maps i to b(a(i)). Cycle notation in text is
//! 1-based; image tables in code are 0-based.

use crate::{Error, Result};
use std::fmt;

pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidDegree(degree));
        }
        Ok(Permutation { images: (0..degree as u16).collect() })
    }

    /// Build from a 0-based image table; rejects non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidDegree(degree));
        }
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for &im in &images {
            if im >= degree || seen[im] {
                return Err(Error::NotABijection);
            }
            seen[im] = true;
            table.push(im as u16);
        }
        Ok(Permutation { images: table.into_boxed_slice() })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u16 == im)
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &im)| i != im as usize).map(|(i, _)| i)
    }

    /// Left-to-right composition: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self.images.iter().map(|&i| other.images[i as usize]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u16;
        }
        Permutation { images: images.into_boxed_slice() }
    }

    /// Parse disjoint cycles like "(1 2 4)(3 6)"; "()" is the identity.
    /// Points are 1-based and must stay within `degree`; a point may appear
    /// in at most one cycle.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let mut perm = Permutation::identity(degree)?;
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::MalformedCycles("empty cycle text".into()));
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::MalformedCycles(format!("expected '(' at \"{rest}\"")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::MalformedCycles("unbalanced '('".into()))?;
            let body = &rest[1..close];
            if body.contains('(') {
                return Err(Error::MalformedCycles("nested '('".into()));
            }
            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let point: usize = tok
                    .parse()
                    .map_err(|_| Error::MalformedCycles(format!("bad point \"{tok}\"")))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(Error::RepeatedPoint { point });
                }
                used[point - 1] = true;
                cycle.push(point - 1);
            }
            for w in 0..cycle.len() {
                perm.images[cycle[w]] = cycle[(w + 1) % cycle.len()] as u16;
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(perm)
    }

    /// Disjoint cycle text, cycles ordered by smallest moved point, each cycle
    /// starting at its smallest point. The identity prints as "()".
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut p = start;
            loop {
                seen[p] = true;
                if p != start {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm[{}] {}", self.degree(), self.cycle_string())
    }
}
