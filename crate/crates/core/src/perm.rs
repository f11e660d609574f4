//! Permutations of `{1..n}`.
//!
//! Points are 1-based in cycle notation and 0-based in the stored image table.
//! Products are read right to left: `a.compose(&b)` applies `b` first, then `a`.
//! The derived ordering compares image tables lexicographically; every
//! "canonically first" choice in the crate uses it.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking that they form a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Parse("permutation degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n || seen[i] {
                return Err(Error::Parse(format!(
                    "images {images:?} are not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Box<[u32]>) -> Self {
        debug_assert!(Permutation::from_images(images.to_vec()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from 1-based cycles. Cycles are
    /// applied right to left, so overlapping cycles compose like a product.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("permutation degree must be positive".into()));
        }
        let mut result = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            let mut seen = std::collections::HashSet::new();
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::Parse(format!("point {pt} outside 1..={degree}")));
                }
                if !seen.insert(pt) {
                    return Err(Error::Parse(format!("point {pt} repeated in a cycle")));
                }
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
            let cycle_perm = Permutation::from_images_unchecked(images.into_boxed_slice());
            result = result.compose_unchecked(&cycle_perm);
        }
        Ok(result)
    }

    /// Parses cycle notation against an explicit degree.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self ∘ rhs`: apply `rhs` first, then `self`.
    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.degree() != rhs.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: rhs.degree(),
            });
        }
        Ok(self.compose_unchecked(rhs))
    }

    pub(crate) fn compose_unchecked(&self, rhs: &Permutation) -> Permutation {
        Permutation {
            images: rhs
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    /// Writes the images of `self ∘ rhs` into `out` without allocating.
    pub(crate) fn compose_into(&self, rhs: &Permutation, out: &mut [u32]) {
        for (o, &i) in out.iter_mut().zip(rhs.images.iter()) {
            *o = self.images[i as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Conjugate `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose_unchecked(self).compose_unchecked(g)
    }

    /// Disjoint cycles of length at least two, 1-based, each starting at its
    /// smallest point, ordered by first point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Smallest k ≥ 1 with `self^k` the identity (lcm of the cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_involution(&self) -> bool {
        self.order() == 2
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Splits cycle notation into 1-based cycles. Points inside a cycle are
/// separated by whitespace or commas; whitespace between cycles is ignored.
/// The empty string and `()` both denote the identity.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' in {s:?}")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in {s:?}")));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::Parse(format!("nested '(' in {s:?}")));
        }
        let points = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&p| p > 0)
                    .ok_or_else(|| Error::Parse(format!("bad point {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation; the degree is the largest point mentioned (at least 1).
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
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
        write!(f, "{self}")
    }
}

// Hash and Eq agree with the image slice, so sets of permutations can be probed
// with a scratch buffer.
impl std::borrow::Borrow<[u32]> for Permutation {
    fn borrow(&self) -> &[u32] {
        &self.images
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Same as [`Permutation::compose`]; panics on a degree mismatch.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn compose_is_right_to_left() {
        assert_eq!(
            p("(1 2 3)", 3).compose(&p("(1 2)", 3)).unwrap(),
            p("(1 3)", 3)
        );
        let x = p("(1 3 2)", 3);
        assert_eq!(Permutation::identity(3).compose(&x).unwrap(), x);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        let err = p("(1 2)", 2).compose(&p("(1 2)", 3)).unwrap_err();
        assert!(matches!(
            err,
            Error::DegreeMismatch {
                expected: 2,
                found: 3
            }
        ));
    }

    #[test]
    fn inverses() {
        assert_eq!(p("(1 3 2 5)", 6).inverse(), p("(1 5 2 3)", 6));
        assert!(Permutation::identity(4).inverse().is_identity());
        let inv = p("(1 2)(3 5)", 6);
        assert_eq!(inv.inverse(), inv);
    }

    #[test]
    fn orders() {
        assert_eq!(p("(1 2)(3 5)", 6).order(), 2);
        assert_eq!(p("(1 3 2 5)", 6).order(), 4);
        assert!(!Permutation::identity(5).is_involution());
        assert!(p("(1 2)(3 5)", 6).is_involution());
        // iterate directly as a cross-check of the lcm formula
        let x = p("(1 2 3)(4 5)", 5);
        let mut k = 1;
        let mut y = x.clone();
        while !y.is_identity() {
            y = &y * &x;
            k += 1;
        }
        assert_eq!(x.order(), k);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("", 4), Permutation::identity(4));
        assert_eq!(p("()", 4), Permutation::identity(4));
        assert_eq!(p(" ( 1 2 ) ( 3,5 ) ", 6).to_string(), "(1 2)(3 5)");
        assert_eq!(p("(3 1 2)", 3).to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!("(1 10)".parse::<Permutation>().unwrap().degree(), 10);
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("(1 1)", 3).is_err());
        assert!(Permutation::parse("(0 1)", 3).is_err());
        assert!(Permutation::parse("1 2", 3).is_err());
    }

    #[test]
    fn overlapping_cycles_compose() {
        // (2 3) is applied first
        assert_eq!(p("(1 2)(2 3)", 3), p("(1 2 3)", 3));
        assert_eq!(
            p("(1 2)(2 3)", 3),
            p("(1 2)", 3).compose(&p("(2 3)", 3)).unwrap()
        );
    }

    #[test]
    fn from_images_checks_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert_eq!(Permutation::from_images(vec![1, 0]).unwrap(), p("(1 2)", 2));
    }
}
