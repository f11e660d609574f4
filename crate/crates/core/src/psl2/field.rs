//! Small Galois fields GF(p^k) as polynomials over GF(p) modulo a fixed
//! irreducible polynomial.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::is_prime;
use crate::limits::Limits;

/// A field element as its residue coefficients, constant term first.
/// The derived ordering is the canonical element order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(Vec<u64>);

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Monic, `k + 1` coefficients, constant term first. For prime fields
    /// this is the placeholder `x`.
    modulus: Vec<u64>,
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut n = q;
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n == 1 && is_prime(p)).then_some((p, k))
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p); both constant term first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
    }
    r
}

/// All coefficient tuples of length `len` over GF(p), lexicographic with the
/// first coordinate most significant.
fn tuples(p: u64, len: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(len as u32);
    (0..total).map(move |mut i| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = i % p;
            i /= p;
        }
        v
    })
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    (1..=k / 2).all(|d| {
        tuples(p, d).all(|low| {
            let mut g = low;
            g.push(1);
            poly_rem(f, &g, p).iter().any(|&c| c != 0)
        })
    })
}

impl FiniteField {
    pub fn new(q: u64) -> Result<FiniteField> {
        FiniteField::with_bound(q, Limits::default().field_bound)
    }

    /// GF(q) with the smallest monic irreducible modulus of degree `k`,
    /// comparing coefficient sequences from the constant term upward.
    pub fn with_bound(q: u64, bound: u64) -> Result<FiniteField> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > bound {
            return Err(Error::FieldBoundExceeded { q, bound });
        }
        if k == 1 {
            return Ok(FiniteField {
                p,
                k,
                modulus: vec![0, 1],
            });
        }
        let modulus = tuples(p, k)
            .map(|mut low| {
                low.push(1);
                low
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(FiniteField { p, k, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Every element in canonical order.
    pub fn elements(&self) -> Vec<FieldElement> {
        tuples(self.p, self.k).map(FieldElement).collect()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.k])
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut v = vec![0; self.k];
        v[0] = n.rem_euclid(self.p as i64) as u64;
        FieldElement(v)
    }

    /// The class of the indeterminate `x`; `None` for a prime field.
    pub fn generator(&self) -> Option<FieldElement> {
        (self.k > 1).then(|| {
            let mut v = vec![0; self.k];
            v[1] = 1;
            FieldElement(v)
        })
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.k, 0);
        FieldElement(r)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `a^(q-2)`, the inverse in the multiplicative group of order `q - 1`.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    pub fn multiplicative_order(&self, a: &FieldElement) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let one = self.one();
        let mut x = a.clone();
        let mut k = 1;
        while x != one {
            x = self.mul(&x, a);
            k += 1;
        }
        Some(k)
    }

    /// Canonically first element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> FieldElement {
        let target = self.order() - 1;
        self.elements()
            .into_iter()
            .find(|a| self.multiplicative_order(a) == Some(target))
            .expect("the multiplicative group is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        let f7 = FiniteField::new(7).unwrap();
        assert_eq!((f7.characteristic(), f7.degree()), (7, 1));
        // 1 + x^2 + x^3 precedes 1 + x + x^3 when comparing from the constant term
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn errors() {
        assert_eq!(FiniteField::new(12), Err(Error::NotPrimePower(12)));
        assert_eq!(FiniteField::new(1), Err(Error::NotPrimePower(1)));
        assert_eq!(
            FiniteField::new(67),
            Err(Error::FieldBoundExceeded { q: 67, bound: 64 })
        );
        let f = FiniteField::new(5).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn gf9_arithmetic() {
        let f = FiniteField::new(9).unwrap();
        let x = f.generator().unwrap();
        assert_eq!(f.mul(&x, &x), f.from_int(2));
        let a = f.add(&x, &f.one());
        assert_eq!(f.add(&a, &f.zero()), a);
        assert_eq!(f.inv(&f.one()).unwrap(), f.one());
    }

    #[test]
    fn field_axioms_exhaustively() {
        for q in [2, 3, 4, 5, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            let els = f.elements();
            assert_eq!(els.len() as u64, q);
            assert!(els.windows(2).all(|w| w[0] < w[1]));
            for a in &els {
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                if !f.is_zero(a) {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one(), "q={q} a={a:?}");
                }
                for b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in &els {
                        let lhs = f.mul(a, &f.add(b, c));
                        let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            let nonzero = els.iter().filter(|a| !f.is_zero(a)).count() as u64;
            assert_eq!(nonzero, q - 1);
            assert_eq!(f.multiplicative_order(&f.primitive_element()), Some(q - 1));
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(17), Some((17, 1)));
        assert_eq!(prime_power(36), None);
    }
}
