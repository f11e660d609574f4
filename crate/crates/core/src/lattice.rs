//! Subgroup lattices of small groups.
//!
//! Works on element positions with a precomputed multiplication table, then
//! converts back to [`Group`] values at the end.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;

struct Table {
    n: usize,
    mul: Vec<u32>,
}

impl Table {
    fn new(g: &Group) -> Table {
        let n = g.order();
        let mut mul = vec![0u32; n * n];
        let mut buf = vec![0u32; g.degree()];
        for (i, a) in g.elements().iter().enumerate() {
            for (j, b) in g.elements().iter().enumerate() {
                a.compose_into(b, &mut buf);
                mul[i * n + j] = g.position_of_images(&buf).expect("closed") as u32;
            }
        }
        Table { n, mul }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    /// Sorted positions of `⟨gens⟩`.
    fn closure(&self, identity: usize, gens: &[usize]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        seen[identity] = true;
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n as u32).filter(|&i| seen[i as usize]).collect()
    }
}

fn contains(sorted: &[u32], x: u32) -> bool {
    sorted.binary_search(&x).is_ok()
}

impl Group {
    /// Every subgroup exactly once, sorted by order and then element list,
    /// using the default lattice bound.
    pub fn all_subgroups(&self) -> Result<Vec<Group>> {
        self.all_subgroups_bounded(Limits::default().lattice_bound)
    }

    /// Starts from the cyclic subgroups and closes under joins with them.
    pub fn all_subgroups_bounded(&self, bound: usize) -> Result<Vec<Group>> {
        if self.order() > bound {
            return Err(Error::LatticeBoundExceeded {
                order: self.order(),
                bound,
            });
        }
        let table = Table::new(self);
        let identity = self.position(&self.identity()).expect("identity");

        // cyclic subgroups keyed by element set, generated by their first generator found
        let mut cyclic: HashMap<Vec<u32>, usize> = HashMap::new();
        for x in 0..self.order() {
            cyclic.entry(table.closure(identity, &[x])).or_insert(x);
        }
        let mut cyclic: Vec<(Vec<u32>, usize)> = cyclic.into_iter().collect();
        cyclic.sort();

        let mut found: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
        let mut queue = VecDeque::new();
        for (elems, x) in &cyclic {
            let gens = if *x == identity { vec![] } else { vec![*x] };
            found.insert(elems.clone(), gens);
            queue.push_back(elems.clone());
        }
        while let Some(k) = queue.pop_front() {
            let k_gens = found[&k].clone();
            for (c, x) in &cyclic {
                if contains(&k, *x as u32) {
                    continue;
                }
                let mut gens = k_gens.clone();
                gens.push(*x);
                let joined = table.closure(identity, &gens);
                debug_assert!(c.iter().all(|&e| contains(&joined, e)));
                if !found.contains_key(&joined) {
                    found.insert(joined.clone(), gens);
                    queue.push_back(joined);
                }
            }
        }

        let mut subgroups: Vec<(Vec<u32>, Vec<usize>)> = found.into_iter().collect();
        subgroups.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        Ok(subgroups
            .into_iter()
            .map(|(elems, gens)| {
                let elements = elems
                    .iter()
                    .map(|&i| self.elements()[i as usize].clone())
                    .collect();
                let generators = gens.iter().map(|&i| self.elements()[i].clone()).collect();
                Group::from_parts(self.degree(), generators, elements)
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use std::collections::HashSet;

    fn gen(n: usize, gens: &[&str]) -> Group {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse(s, n).unwrap())
            .collect();
        Group::closure(n, &gens).unwrap()
    }

    /// Independent count: every subset closed under products, for tiny groups.
    fn subset_oracle(g: &Group) -> usize {
        let n = g.order();
        assert!(n <= 12);
        let el = g.elements();
        (1u32..(1 << n))
            .filter(|mask| {
                let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                members.iter().all(|&a| {
                    members.iter().all(|&b| {
                        let c = g.position(&(&el[a] * &el[b])).unwrap();
                        mask & (1 << c) != 0
                    })
                })
            })
            .count()
    }

    #[test]
    fn small_lattices_match_subset_enumeration() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(s3.all_subgroups().unwrap().len(), 6);
        assert_eq!(subset_oracle(&s3), 6);
        let d8 = gen(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(d8.all_subgroups().unwrap().len(), subset_oracle(&d8));
        let q8 = gen(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]);
        assert_eq!(q8.all_subgroups().unwrap().len(), subset_oracle(&q8));
        assert_eq!(Group::trivial(2).all_subgroups().unwrap().len(), 1);
    }

    #[test]
    fn s4_lattice() {
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        let subs = s4.all_subgroups().unwrap();
        assert_eq!(subs.len(), 30);
        let unique: HashSet<_> = subs.iter().collect();
        assert_eq!(unique.len(), 30);
        for h in &subs {
            assert!(h.is_subgroup_of(&s4));
            assert_eq!(24 % h.order(), 0);
            assert_eq!(&Group::closure(4, h.generators()).unwrap(), h);
        }
        assert!(subs
            .windows(2)
            .all(|w| (w[0].order(), w[0].elements()) < (w[1].order(), w[1].elements())));
    }

    #[test]
    fn join_order_does_not_matter() {
        // rebuild the S4 lattice by joining pairs of found subgroups in reverse order
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        let subs = s4.all_subgroups().unwrap();
        let set: HashSet<_> = subs.iter().cloned().collect();
        for a in subs.iter().rev() {
            for b in subs.iter().rev() {
                assert!(set.contains(&b.join(a)));
            }
        }
    }

    #[test]
    fn lattice_bound() {
        let s6 = gen(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        assert!(matches!(
            s6.all_subgroups(),
            Err(Error::LatticeBoundExceeded {
                order: 720,
                bound: 300
            })
        ));
    }
}
