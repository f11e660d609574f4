//! Fully enumerated permutation groups.
//!
//! A [`Group`] stores its elements sorted in canonical order, so two groups
//! are equal exactly when their element lists are. Subgroups are plain
//! `Group`s whose elements lie in the parent; see [`Group::is_subgroup_of`].

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Permutation;

#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl std::hash::Hash for Group {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, degree {}, <", self.order(), self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

impl Group {
    /// The group generated by `gens`, enumerated breadth-first under the
    /// default closure cap.
    pub fn closure(degree: usize, gens: &[Permutation]) -> Result<Group> {
        Group::closure_with_cap(degree, gens, Limits::default().max_order)
    }

    pub fn closure_with_cap(degree: usize, gens: &[Permutation], cap: usize) -> Result<Group> {
        if degree == 0 {
            return Err(Error::Parse("group degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let elements = enumerate(degree, &gens, cap)?;
        let generators = if gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            gens
        };
        Ok(Group {
            degree,
            generators,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Group {
        Group {
            degree,
            generators: vec![Permutation::identity(degree)],
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Wraps an element list already known to be closed under products.
    /// A small generating set is picked greedily in canonical order.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Group {
        elements.sort_unstable();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if span.len() == elements.len() {
                break;
            }
            if !span.contains(e) {
                generators.push(e.clone());
                span = enumerate(degree, &generators, usize::MAX)
                    .expect("subgroup of a finite group")
                    .into_iter()
                    .collect();
            }
        }
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        Group {
            degree,
            generators,
            elements,
        }
    }

    /// Like [`Group::from_closed_elements`] with generators supplied by the caller.
    pub(crate) fn from_parts(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Group {
        elements.sort_unstable();
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Group {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Position of the element with the given 0-based images in the canonical list.
    pub fn position_of_images(&self, images: &[u32]) -> Option<usize> {
        self.elements
            .binary_search_by(|e| e.images().cmp(images))
            .ok()
    }

    pub fn position(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.degree {
            return None;
        }
        self.position_of_images(g.images())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.position(g).is_some()
    }

    fn check_member(&self, g: &Permutation) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::NotInGroup(g.to_string()))
        }
    }

    pub fn is_subgroup_of(&self, parent: &Group) -> bool {
        self.degree == parent.degree && self.elements.iter().all(|e| parent.contains(e))
    }

    /// Whether `self` is a normal subgroup of `parent`.
    pub fn is_normal_in(&self, parent: &Group) -> bool {
        self.is_subgroup_of(parent)
            && parent.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|h| self.contains(&h.conjugate_by(g)))
            })
    }

    /// Least subgroup containing `seed`.
    pub fn generated_subgroup(&self, seed: &[Permutation]) -> Result<Group> {
        for s in seed {
            self.check_member(s)?;
        }
        Group::closure_with_cap(self.degree, seed, self.order())
    }

    /// `⟨self, other⟩` for two subgroups of a common parent.
    pub fn join(&self, other: &Group) -> Group {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Group::closure_with_cap(self.degree, &gens, usize::MAX).expect("degrees agree")
    }

    /// `self ∩ other` for two subgroups of a common parent.
    pub fn intersection(&self, other: &Group) -> Group {
        let elements = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        Group::from_closed_elements(self.degree, elements)
    }

    pub fn index(&self, h: &Group) -> usize {
        self.order() / h.order()
    }

    /// For each element of `self` (by canonical position), the number of the
    /// left coset `gH` containing it. Cosets are numbered in order of their
    /// canonically least element. Returns the assignment and the coset count.
    pub fn left_coset_ids(&self, h: &Group) -> (Vec<usize>, usize) {
        let mut ids = vec![usize::MAX; self.order()];
        let mut buf = vec![0u32; self.degree];
        let mut count = 0;
        for i in 0..self.order() {
            if ids[i] != usize::MAX {
                continue;
            }
            let g = &self.elements[i];
            for x in &h.elements {
                g.compose_into(x, &mut buf);
                let j = self.position_of_images(&buf).expect("h is a subgroup");
                ids[j] = count;
            }
            count += 1;
        }
        (ids, count)
    }

    /// Left cosets `gH`, each sorted, listed by representative (the least
    /// element of the coset).
    pub fn left_cosets(&self, h: &Group) -> Vec<Vec<Permutation>> {
        let (ids, count) = self.left_coset_ids(h);
        let mut cosets = vec![Vec::with_capacity(h.order()); count];
        for (e, &id) in self.elements.iter().zip(&ids) {
            cosets[id].push(e.clone());
        }
        cosets
    }

    /// `g⁻¹Hg`.
    pub fn conjugate_subgroup(&self, h: &Group, g: &Permutation) -> Result<Group> {
        self.check_member(g)?;
        let gens = h.generators.iter().map(|x| x.conjugate_by(g)).collect();
        let elements = h.elements.iter().map(|x| x.conjugate_by(g)).collect();
        Ok(Group::from_parts(self.degree, gens, elements))
    }

    /// Whether `g⁻¹Hg = H`.
    pub fn normalizes(h: &Group, g: &Permutation) -> bool {
        h.generators.iter().all(|x| h.contains(&x.conjugate_by(g)))
    }

    /// `N_G(H)` by scanning every element of `self`.
    pub fn normalizer(&self, h: &Group) -> Group {
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|g| Group::normalizes(h, g))
            .cloned()
            .collect();
        Group::from_closed_elements(self.degree, elements)
    }

    /// Some `g` in `self` with `g⁻¹Ag = B`, found by scanning in canonical order.
    pub fn find_conjugator(&self, a: &Group, b: &Group) -> Option<Permutation> {
        if a.order() != b.order() {
            return None;
        }
        self.elements
            .iter()
            .find(|g| a.generators.iter().all(|x| b.contains(&x.conjugate_by(g))))
            .cloned()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a * b == b * a))
    }

    /// Whether the order is a power of `p` (the trivial group counts).
    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements.iter().any(|e| e.order() == n)
    }

    /// Abelian with every non-identity element of one common prime order.
    pub fn is_elementary_abelian(&self) -> bool {
        if self.order() == 1 {
            return true;
        }
        if !self.is_abelian() {
            return false;
        }
        let mut orders = self
            .elements
            .iter()
            .filter(|e| !e.is_identity())
            .map(Permutation::order);
        let first = orders.next().expect("nontrivial group");
        is_prime(first) && orders.all(|o| o == first)
    }

    /// Order `2m` with a cyclic subgroup `C` of order `m` and an involution
    /// `t ∉ C` inverting every element of `C`. The Klein four group qualifies.
    pub fn is_dihedral(&self) -> bool {
        let n = self.order();
        if !n.is_multiple_of(2) {
            return false;
        }
        let m = (n / 2) as u64;
        let involutions: Vec<&Permutation> =
            self.elements.iter().filter(|e| e.is_involution()).collect();
        self.elements.iter().filter(|c| c.order() == m).any(|c| {
            let cyclic: Vec<Permutation> = (0..m).map(|k| c.pow(k)).collect();
            let c_inv = c.inverse();
            involutions
                .iter()
                .any(|t| !cyclic.contains(t) && &(*t * c) * t == c_inv)
        })
    }

    /// `⟨x⟩` for an element of the group.
    pub fn cyclic_subgroup(&self, x: &Permutation) -> Result<Group> {
        self.generated_subgroup(std::slice::from_ref(x))
    }
}

/// Breadth-first product closure returning the sorted element list.
fn enumerate(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut buf = vec![0u32; degree];
    while let Some(x) = queue.pop_front() {
        for g in gens {
            x.compose_into(g, &mut buf);
            if seen.contains(buf.as_slice()) {
                continue;
            }
            let y = Permutation::from_images_unchecked(buf.clone().into_boxed_slice());
            seen.insert(y.clone());
            if seen.len() > cap {
                return Err(Error::OrderCapExceeded { cap });
            }
            queue.push_back(y);
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn is_power_of(n: u64, p: u64) -> bool {
    let mut n = n;
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Largest power of `p` dividing `n` (`n > 0`).
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Largest power of 2 dividing `n` (`n > 0`).
pub fn two_part(n: u64) -> u64 {
    p_part(n, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn gen(n: usize, gens: &[&str]) -> Group {
        let gens: Vec<_> = gens.iter().map(|s| p(s, n)).collect();
        Group::closure(n, &gens).unwrap()
    }

    /// Independent order count: every word in the generators up to length
    /// `len`, collected into a set.
    fn words_oracle(n: usize, gens: &[&str], len: usize) -> usize {
        let gens: Vec<_> = gens.iter().map(|s| p(s, n)).collect();
        let mut layer = vec![Permutation::identity(n)];
        let mut all: HashSet<Permutation> = layer.iter().cloned().collect();
        for _ in 0..len {
            layer = layer
                .iter()
                .flat_map(|x| gens.iter().map(move |g| x * g))
                .collect();
            all.extend(layer.iter().cloned());
            layer.sort();
            layer.dedup();
        }
        all.len()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(gen(6, &["(1 2)(3 5)", "(3 4 5)"]).order(), 6);
        assert_eq!(words_oracle(6, &["(1 2)(3 5)", "(3 4 5)"], 8), 6);
        assert_eq!(gen(4, &["(1 2 3 4)"]).order(), 4);
        assert_eq!(gen(6, &["(1 2)", "(1 2 3 4 5 6)"]).order(), 720);
        assert_eq!(words_oracle(6, &["(1 2)", "(1 2 3 4 5 6)"], 30), 720);
    }

    #[test]
    fn closure_invariants() {
        let g = gen(5, &["(1 2)", "(1 2 3 4 5)"]);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(g.contains(&g.identity()));
        assert!(g.elements().iter().all(|e| g.contains(&e.inverse())));
        assert!(g.generators().iter().all(|x| g.contains(x)));
        assert_eq!(120 % g.order(), 0);
    }

    #[test]
    fn closure_errors() {
        assert!(matches!(
            Group::closure(4, &[p("(1 2)", 3)]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            Group::closure_with_cap(6, &[p("(1 2)", 6), p("(1 2 3 4 5 6)", 6)], 100),
            Err(Error::OrderCapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn generated_subgroups() {
        let s6 = gen(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        assert_eq!(
            s6.generated_subgroup(&[p("(1 2)(3 5)", 6)])
                .unwrap()
                .order(),
            2
        );
        assert_eq!(s6.generated_subgroup(&[]).unwrap(), Group::trivial(6));
        let p16 = s6
            .generated_subgroup(&[p("(1 2)", 6), p("(3 5)", 6), p("(3 4 5 6)", 6)])
            .unwrap();
        assert_eq!(p16.order(), 16);
        let c4 = gen(4, &["(1 2 3 4)"]);
        assert!(matches!(
            c4.generated_subgroup(&[p("(1 2)", 4)]),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn cosets_and_index() {
        let s6 = gen(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        let h = gen(6, &["(1 2)(3 5)", "(3 4 5)"]);
        assert_eq!(s6.index(&h), 120);
        let cosets = s6.left_cosets(&h);
        assert_eq!(cosets.len(), 120);
        assert_eq!(cosets.iter().map(Vec::len).sum::<usize>(), 720);
        let mut all: Vec<_> = cosets.iter().flatten().cloned().collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 720);
        for c in &cosets {
            // every member reaches the representative's coset
            let rep_inv = c[0].inverse();
            assert!(c.iter().all(|x| h.contains(&(&rep_inv * x))));
        }
        assert_eq!(s6.left_cosets(&s6).len(), 1);
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(s3.index(&gen(3, &["(1 2)"])), 3);
    }

    #[test]
    fn conjugates_and_normalizers() {
        let s6 = gen(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        let q = gen(6, &["(1 2)(3 5)"]);
        assert_eq!(s6.conjugate_subgroup(&q, &s6.identity()).unwrap(), q);
        assert_eq!(s6.conjugate_subgroup(&q, &p("(1 3 2 5)", 6)).unwrap(), q);
        assert!(s6.normalizer(&q).contains(&p("(1 3 2 5)", 6)));

        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let t = gen(3, &["(1 2)"]);
        // g⁻¹(1 2)g with g = (1 2 3), read right to left: 1 -> 2 -> 1 -> 3
        assert_eq!(
            s3.conjugate_subgroup(&t, &p("(1 2 3)", 3)).unwrap(),
            gen(3, &["(1 3)"])
        );
        assert_eq!(
            s3.conjugate_subgroup(&t, &p("(1 3 2)", 3)).unwrap(),
            gen(3, &["(2 3)"])
        );

        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        let c4 = gen(4, &["(1 2 3 4)"]);
        let n = s4.normalizer(&c4);
        assert_eq!(n.order(), 8);
        let brute = s4
            .elements()
            .iter()
            .filter(|g| {
                let conj: HashSet<_> = c4.elements().iter().map(|x| x.conjugate_by(g)).collect();
                conj == c4.elements().iter().cloned().collect()
            })
            .count();
        assert_eq!(brute, 8);
        let a4 = gen(4, &["(1 2 3)", "(2 3 4)"]);
        assert_eq!(s4.normalizer(&a4), s4);
        assert!(a4.is_normal_in(&s4));
        assert!(!c4.is_normal_in(&s4));
    }

    #[test]
    fn structure_predicates() {
        let p16 = gen(6, &["(1 2)", "(3 5)", "(3 4 5 6)"]);
        assert!(!p16.is_dihedral());
        assert!(!p16.is_cyclic());
        let d8 = gen(4, &["(1 2 3 4)", "(1 3)"]);
        assert!(d8.is_dihedral());
        let klein = gen(4, &["(1 2)", "(3 4)"]);
        assert!(klein.is_elementary_abelian());
        assert!(klein.is_dihedral());
        let c4 = gen(4, &["(1 2 3 4)"]);
        assert!(c4.is_cyclic());
        assert!(!c4.is_dihedral());
        assert!(!c4.is_elementary_abelian());
        assert!(Group::trivial(3).is_elementary_abelian());
        let c6 = gen(5, &["(1 2 3)(4 5)"]);
        assert!(!c6.is_elementary_abelian());
        let q8 = gen(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]);
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_dihedral() && !q8.is_cyclic() && !q8.is_abelian());
        assert_eq!(two_part(720), 16);
        assert_eq!(two_part(1), 1);
        assert_eq!(p_part(720, 3), 9);
    }

    #[test]
    fn greedy_generators_span_the_group() {
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        let rebuilt = Group::from_closed_elements(4, s4.elements().to_vec());
        assert_eq!(rebuilt, s4);
        assert_eq!(Group::closure(4, rebuilt.generators()).unwrap(), s4);
    }
}
