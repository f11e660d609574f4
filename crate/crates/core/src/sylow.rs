//! Sylow subgroups by normalizer extension.
//!
//! Starting from a p-subgroup `Q`, repeatedly adjoin the canonically first
//! p-element of `N_G(Q) \ Q`. While `Q` is not Sylow, `p` divides
//! `|N_G(Q) : Q|`, so such an element exists and `⟨Q, y⟩ = Q⟨y⟩` is again a
//! p-group; the loop ends at exactly the p-part of `|G|`.

use crate::error::{Error, Result};
use crate::group::{is_prime, p_part, Group};
use crate::perm::Permutation;

fn is_p_element(x: &Permutation, p: u64) -> bool {
    let mut o = x.order();
    while o.is_multiple_of(p) {
        o /= p;
    }
    o == 1
}

impl Group {
    /// A Sylow `p`-subgroup, seeded at the canonically first element of order `p`.
    pub fn sylow(&self, p: u64) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let seed = match self.elements().iter().find(|e| e.order() == p) {
            Some(x) => self.cyclic_subgroup(x)?,
            None => return Ok(Group::trivial(self.degree())),
        };
        self.extend_to_sylow(p, seed)
    }

    /// A Sylow `p`-subgroup containing the given `p`-subgroup.
    pub fn sylow_containing(&self, p: u64, q0: &Group) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !q0.is_p_group(p) {
            return Err(Error::NotPGroup {
                p,
                order: q0.order(),
            });
        }
        if !q0.is_subgroup_of(self) {
            return Err(Error::NotInGroup(format!("{q0:?}")));
        }
        if q0.order() == 1 {
            return self.sylow(p);
        }
        self.extend_to_sylow(p, q0.clone())
    }

    fn extend_to_sylow(&self, p: u64, mut q: Group) -> Result<Group> {
        let target = p_part(self.order() as u64, p) as usize;
        while q.order() < target {
            let normalizer = self.normalizer(&q);
            let next = normalizer
                .elements()
                .iter()
                .filter(|y| !q.contains(y) && is_p_element(y, p))
                .map(|y| {
                    let mut gens = q.generators().to_vec();
                    gens.push(y.clone());
                    Group::closure_with_cap(self.degree(), &gens, target)
                })
                .find_map(|r| r.ok().filter(|g| g.is_p_group(p)))
                .expect("a p-subgroup below the p-part has a p-element in its normalizer");
            q = next;
        }
        Ok(q)
    }
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

    #[test]
    fn sylow_of_example_subgroup() {
        let h = gen(6, &["(1 2)(3 5)", "(3 4 5)"]);
        let q = gen(6, &["(1 2)(3 5)"]);
        let found = h.sylow(2).unwrap();
        // (1 2)(4 5) is the canonically first involution of H
        assert_eq!(found, gen(6, &["(1 2)(4 5)"]));
        assert_eq!(found.order(), q.order());
        assert!(h.find_conjugator(&found, &q).is_some());
        assert_eq!(h.sylow_containing(2, &q).unwrap(), q);
    }

    #[test]
    fn sylow_orders() {
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(s4.sylow(2).unwrap().order(), 8);
        assert_eq!(s4.sylow(3).unwrap().order(), 3);
        assert_eq!(s4.sylow(5).unwrap(), Group::trivial(4));
        assert!(matches!(s4.sylow(4), Err(Error::NotPrime(4))));
        let s6 = gen(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        assert_eq!(s6.sylow(2).unwrap().order(), 16);
        assert_eq!(s6.sylow(3).unwrap().order(), 9);
        assert_eq!(s6.sylow(5).unwrap().order(), 5);
    }

    #[test]
    fn sylow_is_deterministic() {
        let s5 = gen(5, &["(1 2)", "(1 2 3 4 5)"]);
        assert_eq!(s5.sylow(2).unwrap(), s5.sylow(2).unwrap());
    }

    #[test]
    fn sylow_containing_seed() {
        let s6 = gen(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        let q = gen(6, &["(1 2)(3 5)"]);
        let p16 = s6.sylow_containing(2, &q).unwrap();
        assert_eq!(p16.order(), 16);
        assert!(p16.contains(&p("(1 2)(3 5)", 6)));
        assert_eq!(
            s6.sylow_containing(2, &Group::trivial(6)).unwrap(),
            s6.sylow(2).unwrap()
        );
        let d8 = gen(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(d8.sylow_containing(2, &gen(4, &["(1 3)"])).unwrap(), d8);
        assert!(matches!(
            s6.sylow_containing(2, &gen(6, &["(1 2 3)"])),
            Err(Error::NotPGroup { .. })
        ));
    }

    #[test]
    fn differently_seeded_sylows_are_conjugate() {
        let s5 = gen(5, &["(1 2)", "(1 2 3 4 5)"]);
        let base = s5.sylow(2).unwrap();
        for x in s5
            .elements()
            .iter()
            .filter(|x| x.order() == 2 || x.order() == 4)
        {
            let other = s5
                .sylow_containing(2, &s5.cyclic_subgroup(x).unwrap())
                .unwrap();
            assert_eq!(other.order(), 8);
            assert!(s5.find_conjugator(&base, &other).is_some());
        }
    }
}
