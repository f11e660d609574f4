//! Ground truth straight from the definition of a perfect code.
//!
//! In `Cay(G, S)` the neighbours of `x` are the elements `sx`, `s ∈ S`. A
//! subgroup `H` is then a perfect code exactly when `S` meets every
//! nontrivial left coset `gH` in one element and misses `H`, i.e. `S ∪ {1}`
//! is a left transversal of `H`. The search below looks for such an `S` that
//! is also closed under inverses.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::perm::Permutation;

/// Inverse-closed, identity-free subset of a group, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: Vec<Permutation>,
}

impl ConnectionSet {
    pub fn new(g: &Group, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(x) = elements.iter().find(|x| !g.contains(x)) {
            return Err(Error::NotInGroup(x.to_string()));
        }
        if elements.iter().any(Permutation::is_identity) {
            return Err(Error::HypothesisViolated(
                "connection set contains the identity",
            ));
        }
        if elements
            .iter()
            .any(|x| elements.binary_search(&x.inverse()).is_err())
        {
            return Err(Error::HypothesisViolated(
                "connection set is not inverse-closed",
            ));
        }
        Ok(ConnectionSet { elements })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `g⁻¹Sg`.
    pub fn conjugate(&self, g: &Permutation) -> ConnectionSet {
        let mut elements: Vec<Permutation> =
            self.elements.iter().map(|s| s.conjugate_by(g)).collect();
        elements.sort_unstable();
        ConnectionSet { elements }
    }
}

/// Whether `C` is a perfect code of `Cay(G, S)`: no vertex of `C` has a
/// neighbour in `C`, every other vertex has exactly one.
pub fn cayley_perfect_code_check(g: &Group, s: &ConnectionSet, c: &[Permutation]) -> bool {
    let mut code: Vec<&Permutation> = c.iter().collect();
    code.sort_unstable();
    code.dedup();
    let in_code = |x: &Permutation| code.binary_search(&x).is_ok();
    g.elements().iter().all(|v| {
        // y ~ v iff v y⁻¹ ∈ S iff y = s⁻¹v; S is inverse-closed so y ranges over S·v
        let hits = s.elements().iter().filter(|t| in_code(&(*t * v))).count();
        if in_code(v) {
            hits == 0
        } else {
            hits == 1
        }
    })
}

/// Checks that `S` is a connection set, that `S ∪ {1}` is a left transversal
/// of `H`, and that `H` is a perfect code of `Cay(G, S)`.
pub fn verify_witness(g: &Group, h: &Group, s: &[Permutation]) -> bool {
    let Ok(set) = ConnectionSet::new(g, s.to_vec()) else {
        return false;
    };
    if set.len() != s.len() || !h.is_subgroup_of(g) {
        return false;
    }
    let (ids, count) = g.left_coset_ids(h);
    let mut hit = vec![0usize; count];
    hit[ids[g.position(&g.identity()).expect("identity")]] += 1;
    for x in set.elements() {
        hit[ids[g.position(x).expect("checked membership")]] += 1;
    }
    hit.iter().all(|&k| k == 1) && cayley_perfect_code_check(g, &set, h.elements())
}

pub fn find_admissible_connection_set(g: &Group, h: &Group) -> Result<Option<ConnectionSet>> {
    find_admissible_connection_set_with(g, h, &Limits::default())
}

/// Backtracking over the nontrivial left cosets of `H` in canonical order.
/// Picking `s` in coset `gH` forces `s⁻¹` as the pick for coset `s⁻¹H`; an
/// involution pairs its coset with itself. Within a coset involutions are
/// tried first. Returns the first admissible set, or `None` once the search
/// space is exhausted.
pub fn find_admissible_connection_set_with(
    g: &Group,
    h: &Group,
    limits: &Limits,
) -> Result<Option<ConnectionSet>> {
    let index = g.index(h);
    if index > limits.oracle_index_bound && g.order() > limits.oracle_order_bound {
        return Err(Error::OracleBoundExceeded {
            index,
            order: g.order(),
            index_bound: limits.oracle_index_bound,
            order_bound: limits.oracle_order_bound,
        });
    }
    let search = Search::new(g, h);
    let mut choice = vec![None; search.count];
    // coset 0 holds the identity, i.e. it is H itself
    choice[0] = Some(usize::MAX);
    if !search.solve(&mut choice) {
        return Ok(None);
    }
    let elements = choice[1..]
        .iter()
        .map(|c| g.elements()[c.expect("complete assignment")].clone())
        .collect();
    Ok(Some(ConnectionSet::new(g, elements)?))
}

struct Search {
    count: usize,
    /// Candidates per coset: (position, position of inverse, coset of inverse).
    candidates: Vec<Vec<Candidate>>,
}

#[derive(Clone, Copy)]
struct Candidate {
    pos: usize,
    inv_pos: usize,
    inv_coset: usize,
}

impl Candidate {
    fn is_involution(&self) -> bool {
        self.pos == self.inv_pos
    }
}

impl Search {
    fn new(g: &Group, h: &Group) -> Search {
        let (ids, count) = g.left_coset_ids(h);
        let mut candidates = vec![Vec::new(); count];
        for (pos, x) in g.elements().iter().enumerate() {
            let inv_pos = g.position(&x.inverse()).expect("closed under inverses");
            candidates[ids[pos]].push(Candidate {
                pos,
                inv_pos,
                inv_coset: ids[inv_pos],
            });
        }
        for list in &mut candidates {
            // stable: canonical order within each class
            list.sort_by_key(|c| !c.is_involution());
        }
        Search { count, candidates }
    }

    fn usable(&self, c: &Candidate, coset: usize, choice: &[Option<usize>]) -> bool {
        if c.is_involution() {
            return true;
        }
        // s ≠ s⁻¹ cannot both be the single pick of one coset
        c.inv_coset != coset && choice[c.inv_coset].is_none()
    }

    /// Every open coset still has a usable candidate.
    fn feasible(&self, choice: &[Option<usize>]) -> bool {
        (0..self.count).all(|k| {
            choice[k].is_some() || self.candidates[k].iter().any(|c| self.usable(c, k, choice))
        })
    }

    fn solve(&self, choice: &mut Vec<Option<usize>>) -> bool {
        let Some(coset) = choice.iter().position(Option::is_none) else {
            return true;
        };
        for c in &self.candidates[coset] {
            if !self.usable(c, coset, choice) {
                continue;
            }
            choice[coset] = Some(c.pos);
            if !c.is_involution() {
                choice[c.inv_coset] = Some(c.inv_pos);
            }
            if self.feasible(choice) && self.solve(choice) {
                return true;
            }
            choice[coset] = None;
            if !c.is_involution() {
                choice[c.inv_coset] = None;
            }
        }
        false
    }
}
