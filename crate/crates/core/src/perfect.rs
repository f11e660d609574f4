//! Subgroup perfect codes.
//!
//! `H ≤ G` fails to be a perfect code exactly when some double coset
//! `D = HxH ≠ H` is closed under inversion, is a union of an odd number of
//! left cosets of `H`, and contains no involution. That test
//! ([`basic_criterion`]) scans all of `G`. The fast path ([`is_perfect_code`])
//! instead reduces to a Sylow 2-subgroup `Q` of `H` and a Sylow 2-subgroup
//! `P` of `N_G(Q)`: `H` is a perfect code of `G` iff `Q` is one of `P`, and
//! since `Q ⊴ P` that is decided coset by coset in `P`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// `HxH` together with the number of left cosets of `H` it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Canonically least element.
    pub representative: Permutation,
    /// Sorted.
    pub elements: Vec<Permutation>,
    pub left_coset_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecisionPath {
    OddShortcut,
    NgqReduction,
    BasicCriterion,
    HxzCriterion,
    EquivalentCriterion,
}

impl DecisionPath {
    pub fn label(self) -> &'static str {
        match self {
            DecisionPath::OddShortcut => "odd-shortcut",
            DecisionPath::NgqReduction => "ngq-reduction",
            DecisionPath::BasicCriterion => "basic-criterion",
            DecisionPath::HxzCriterion => "hxz-criterion",
            DecisionPath::EquivalentCriterion => "equivalent-criterion",
        }
    }
}

impl fmt::Display for DecisionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectCodeReport {
    pub is_perfect_code: bool,
    pub path: DecisionPath,
    /// Present exactly when `is_perfect_code` is false: an `x ∉ H` whose
    /// double coset `HxH` violates the perfect-code condition.
    pub witness: Option<Permutation>,
    /// `(label, order)` for Q, N_G(Q) and P on the reduction path.
    pub reduction_trace: Vec<(&'static str, usize)>,
}

impl PerfectCodeReport {
    fn verdict(path: DecisionPath, witness: Option<Permutation>) -> Self {
        PerfectCodeReport {
            is_perfect_code: witness.is_none(),
            path,
            witness,
            reduction_trace: Vec::new(),
        }
    }
}

/// Double coset bookkeeping over the canonical positions of `G`.
struct DoubleCosetTable {
    /// Double coset number of each element of `G`.
    ids: Vec<usize>,
    cosets: Vec<DcInfo>,
}

struct DcInfo {
    representative: usize,
    members: Vec<usize>,
    self_inverse: bool,
}

impl DoubleCosetTable {
    fn new(g: &Group, h: &Group) -> Self {
        let n = g.order();
        let mut ids = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        let mut buf = vec![0u32; g.degree()];
        let mut left = vec![0u32; g.degree()];
        let els = g.elements();
        for start in 0..n {
            if ids[start] != usize::MAX {
                continue;
            }
            let id = cosets.len();
            let x = &els[start];
            let mut members = Vec::new();
            for h1 in h.elements() {
                h1.compose_into(x, &mut left);
                let y = g.position_of_images(&left).expect("H is a subgroup of G");
                if ids[y] == id {
                    continue;
                }
                // the whole left coset yH is new
                let y = &els[y];
                for h2 in h.elements() {
                    y.compose_into(h2, &mut buf);
                    let z = g.position_of_images(&buf).expect("H is a subgroup of G");
                    ids[z] = id;
                    members.push(z);
                }
            }
            let inv = g.position(&x.inverse()).expect("closed under inverses");
            members.sort_unstable();
            cosets.push(DcInfo {
                representative: start,
                members,
                self_inverse: ids[inv] == id,
            });
        }
        DoubleCosetTable { ids, cosets }
    }

    fn left_coset_count(&self, id: usize, h: &Group) -> usize {
        self.cosets[id].members.len() / h.order()
    }

    /// The double coset breaks the perfect-code condition: it is not `H`,
    /// is inverse-closed, has an odd left-coset count and no involution.
    fn is_obstruction(&self, id: usize, g: &Group, h: &Group) -> bool {
        let dc = &self.cosets[id];
        let els = g.elements();
        dc.self_inverse
            && !h.contains(&els[dc.representative])
            && self.left_coset_count(id, h) % 2 == 1
            && !dc.members.iter().any(|&m| els[m].is_involution())
    }
}

/// Partition of `G` into double cosets `HxH`, listed by representative.
pub fn double_coset_decomposition(g: &Group, h: &Group) -> Vec<DoubleCoset> {
    let table = DoubleCosetTable::new(g, h);
    let els = g.elements();
    table
        .cosets
        .iter()
        .map(|dc| DoubleCoset {
            representative: els[dc.representative].clone(),
            elements: dc.members.iter().map(|&m| els[m].clone()).collect(),
            left_coset_count: dc.members.len() / h.order(),
        })
        .collect()
}

/// Decides the perfect-code property directly from the double cosets of
/// `H`; the witness is the least representative of an offending double coset.
///
/// Panics if `h` is not a subgroup of `g`.
pub fn basic_criterion(g: &Group, h: &Group) -> PerfectCodeReport {
    let table = DoubleCosetTable::new(g, h);
    let witness = (0..table.cosets.len())
        .find(|&id| table.is_obstruction(id, g, h))
        .map(|id| g.elements()[table.cosets[id].representative].clone());
    PerfectCodeReport::verdict(DecisionPath::BasicCriterion, witness)
}

/// When `H` is not a perfect code, the canonically first 2-element
/// `x ∈ G \ H` with `x² ∈ H` whose double coset is an obstruction.
pub fn two_element_witness(g: &Group, h: &Group) -> Option<Permutation> {
    let table = DoubleCosetTable::new(g, h);
    let bad: Vec<bool> = (0..table.cosets.len())
        .map(|id| table.is_obstruction(id, g, h))
        .collect();
    if !bad.iter().any(|&b| b) {
        return None;
    }
    g.elements()
        .iter()
        .enumerate()
        .filter(|(pos, _)| bad[table.ids[*pos]])
        .map(|(_, x)| x)
        .find(|x| x.order().is_power_of_two() && h.contains(&(*x * *x)))
        .cloned()
}

/// The four conditions a failure witness `x` must meet for `H ≤ G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessCheck {
    pub outside_subgroup: bool,
    pub self_inverse: bool,
    pub odd_coset_count: bool,
    pub involution_free: bool,
}

impl WitnessCheck {
    pub fn holds(&self) -> bool {
        self.outside_subgroup && self.self_inverse && self.odd_coset_count && self.involution_free
    }
}

/// Evaluates the witness conditions for `x` by building `HxH` from scratch.
pub fn check_witness(g: &Group, h: &Group, x: &Permutation) -> WitnessCheck {
    let mut dc: Vec<Permutation> = h
        .elements()
        .iter()
        .flat_map(|a| h.elements().iter().map(move |b| &(a * x) * b))
        .collect();
    dc.sort_unstable();
    dc.dedup();
    let x_inv = x.inverse();
    debug_assert!(dc.iter().all(|e| g.contains(e)));
    WitnessCheck {
        outside_subgroup: !h.contains(x),
        self_inverse: dc.binary_search(&x_inv).is_ok(),
        odd_coset_count: (dc.len() / h.order()) % 2 == 1,
        involution_free: !dc.iter().any(Permutation::is_involution),
    }
}

/// Whether the left coset `xH` contains an element whose square is trivial.
fn coset_has_square_root_of_one(x: &Permutation, h: &Group) -> bool {
    h.elements().iter().any(|k| {
        let y = x * k;
        (&y * &y).is_identity()
    })
}

/// First `x` (canonical order) among `candidates` with `x² ∈ H` but no `h ∈ H`
/// making `(xh)² = 1`.
fn square_condition_failure<'a>(
    candidates: impl Iterator<Item = &'a Permutation>,
    h: &Group,
) -> Option<Permutation> {
    candidates
        .filter(|x| h.contains(&(*x * *x)))
        .find(|x| !coset_has_square_root_of_one(x, h))
        .cloned()
}

/// Criterion for a normal subgroup: every `x` with `x² ∈ H` has some
/// `h ∈ H` with `(xh)² = 1`.
pub fn hxz_criterion(g: &Group, h: &Group) -> Result<bool> {
    if !h.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    Ok(hxz_failure(g, h).is_none())
}

/// The condition holds per left coset when `H ⊴ G`, so one element per coset suffices.
fn hxz_failure(g: &Group, h: &Group) -> Option<Permutation> {
    let (ids, count) = g.left_coset_ids(h);
    let mut checked = vec![false; count];
    let reps = g.elements().iter().zip(&ids).filter_map(|(x, &id)| {
        if checked[id] {
            None
        } else {
            checked[id] = true;
            Some(x)
        }
    });
    square_condition_failure(reps, h)
}

/// The same square condition restricted to `x ∈ N_G(H)`. Valid when `H` is a
/// 2-group or one of `|H|`, `|G:H|` is odd.
pub fn equivalent_criterion(g: &Group, h: &Group) -> Result<bool> {
    let applicable = h.is_p_group(2) || h.order() % 2 == 1 || g.index(h) % 2 == 1;
    if !applicable {
        return Err(Error::HypothesisViolated(
            "H must be a 2-group or have odd order or odd index",
        ));
    }
    let n = g.normalizer(h);
    Ok(square_condition_failure(n.elements().iter(), h).is_none())
}

/// `Some(true)` when `|H|` or `|G:H|` is odd, which forces a perfect code.
pub fn odd_shortcut(g: &Group, h: &Group) -> Option<bool> {
    (h.order() % 2 == 1 || g.index(h) % 2 == 1).then_some(true)
}

/// A Sylow 2-subgroup `Q` of `H`; `H` is a perfect code of `G` iff `Q` is.
pub fn reduce_to_sylow2(_g: &Group, h: &Group) -> Group {
    h.sylow(2).expect("2 is prime")
}

/// `(Q, P)` with `Q` a Sylow 2-subgroup of `H` and `P` a Sylow 2-subgroup of
/// `N_G(Q)`. `Q` is normal in `N_G(Q)`, hence contained and normal in `P`.
pub fn reduce_ngq(g: &Group, h: &Group) -> (Group, Group) {
    let (q, _, p) = ngq_chain(g, h);
    (q, p)
}

fn ngq_chain(g: &Group, h: &Group) -> (Group, Group, Group) {
    let q = reduce_to_sylow2(g, h);
    let n = g.normalizer(&q);
    let p = n.sylow(2).expect("2 is prime");
    debug_assert!(q.is_normal_in(&p));
    (q, n, p)
}

/// Decides whether `H` is a perfect code of `G`: odd order or index settles
/// it at once, otherwise the question moves to the pair `Q ⊴ P` from
/// [`reduce_ngq`]. A failure witness is the first `x ∈ P` with `x² ∈ Q` and
/// no involution in `xQ`; such an `x` also satisfies every condition of
/// [`check_witness`] for `H` in `G`.
pub fn is_perfect_code(g: &Group, h: &Group) -> PerfectCodeReport {
    if odd_shortcut(g, h).is_some() {
        return PerfectCodeReport::verdict(DecisionPath::OddShortcut, None);
    }
    let (q, n, p) = ngq_chain(g, h);
    let witness = hxz_failure(&p, &q);
    let mut report = PerfectCodeReport::verdict(DecisionPath::NgqReduction, witness);
    report.reduction_trace = vec![
        ("sylow2(H)", q.order()),
        ("normalizer(G,Q)", n.order()),
        ("sylow2(normalizer)", p.order()),
    ];
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shortcut {
    /// `P₀ ∩ N_G(Q)` has odd index in `N_G(Q)`, for `P₀` the Sylow 2-subgroup of `G` containing `Q`.
    QNormal,
    NormalSylow2,
    AbelianSylow2,
    ElementaryAbelianSylow2,
}

impl Shortcut {
    pub fn label(self) -> &'static str {
        match self {
            Shortcut::QNormal => "qnormal",
            Shortcut::NormalSylow2 => "normal-sylow2",
            Shortcut::AbelianSylow2 => "abelian-sylow2",
            Shortcut::ElementaryAbelianSylow2 => "elementary-abelian-sylow2",
        }
    }
}

/// The pair `(Q, P₀)`: `Q` from [`reduce_to_sylow2`] and `P₀` a Sylow
/// 2-subgroup of `G` containing it.
pub fn corollary_pair(g: &Group, h: &Group) -> (Group, Group) {
    let q = reduce_to_sylow2(g, h);
    let p0 = g.sylow_containing(2, &q).expect("Q is a 2-subgroup of G");
    (q, p0)
}

/// Which shortcut hypotheses hold for `(G, H)`. Under any of the first
/// three, `H` is a perfect code of `G` iff `Q` is one of `P₀`; under the
/// last, every subgroup of `G` is a perfect code.
pub fn applicable_shortcuts(g: &Group, h: &Group) -> BTreeSet<Shortcut> {
    let mut out = BTreeSet::new();
    let (q, p0) = corollary_pair(g, h);
    let n = g.normalizer(&q);
    if n.index(&p0.intersection(&n)) % 2 == 1 {
        out.insert(Shortcut::QNormal);
    }
    let sylow = g.sylow(2).expect("2 is prime");
    if sylow.is_normal_in(g) {
        out.insert(Shortcut::NormalSylow2);
    }
    if sylow.is_abelian() {
        out.insert(Shortcut::AbelianSylow2);
    }
    if sylow.is_elementary_abelian() {
        out.insert(Shortcut::ElementaryAbelianSylow2);
    }
    out
}

/// Every subgroup of `G` is a perfect code iff a Sylow 2-subgroup is elementary abelian.
pub fn every_subgroup_is_perfect_code(g: &Group) -> bool {
    g.sylow(2).expect("2 is prime").is_elementary_abelian()
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

    fn s6() -> Group {
        gen(6, &["(1 2)", "(1 2 3 4 5 6)"])
    }

    fn example_h() -> Group {
        gen(6, &["(1 2)(3 5)", "(3 4 5)"])
    }

    fn example_q() -> Group {
        gen(6, &["(1 2)(3 5)"])
    }

    fn p16() -> Group {
        gen(6, &["(1 2)", "(3 5)", "(3 4 5 6)"])
    }

    #[test]
    fn double_cosets() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        let whole = double_coset_decomposition(&s3, &s3);
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].elements.len(), 6);

        let h = gen(3, &["(1 2)"]);
        let dcs = double_coset_decomposition(&s3, &h);
        let sizes: Vec<usize> = dcs.iter().map(|d| d.elements.len()).collect();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(dcs[1].left_coset_count, 2);
        let mut expected = vec![
            p("(1 2 3)", 3),
            p("(1 3)", 3),
            p("(2 3)", 3),
            p("(1 3 2)", 3),
        ];
        expected.sort();
        assert_eq!(dcs[1].elements, expected);

        let dcs = double_coset_decomposition(&s6(), &example_h());
        assert_eq!(dcs.iter().map(|d| d.elements.len()).sum::<usize>(), 720);
        for d in &dcs {
            assert_eq!(d.elements.len(), d.left_coset_count * 6);
            assert_eq!(d.representative, d.elements[0]);
        }
    }

    #[test]
    fn basic_criterion_examples() {
        assert!(!basic_criterion(&s6(), &example_q()).is_perfect_code);
        assert!(!basic_criterion(&s6(), &example_h()).is_perfect_code);
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert!(basic_criterion(&s3, &gen(3, &["(1 2)"])).is_perfect_code);
        assert!(basic_criterion(&p16(), &example_q()).is_perfect_code);
        // odd-order subgroups never count H itself as an obstruction
        assert!(basic_criterion(&s3, &gen(3, &["(1 2 3)"])).is_perfect_code);
    }

    #[test]
    fn witnesses() {
        let (g, q) = (s6(), example_q());
        let report = basic_criterion(&g, &q);
        let x = report.witness.unwrap();
        assert!(check_witness(&g, &q, &x).holds());

        let y = two_element_witness(&g, &q).unwrap();
        assert!(y.order().is_power_of_two());
        assert!(q.contains(&(&y * &y)));
        assert!(check_witness(&g, &q, &y).holds());
        assert!(check_witness(&g, &q, &p("(1 3 2 5)", 6)).holds());
        assert_eq!(two_element_witness(&g, &g), None);

        let fast = is_perfect_code(&g, &q);
        assert!(check_witness(&g, &q, fast.witness.as_ref().unwrap()).holds());
        assert!(!check_witness(&g, &q, &p("(1 2)", 6)).holds());
    }

    #[test]
    fn hxz_examples() {
        let z4 = gen(4, &["(1 2 3 4)"]);
        assert_eq!(hxz_criterion(&z4, &gen(4, &["(1 3)(2 4)"])), Ok(false));
        assert_eq!(hxz_criterion(&z4, &z4), Ok(true));
        let d8 = gen(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(hxz_criterion(&d8, &gen(4, &["(1 3)(2 4)"])), Ok(false));
        assert_eq!(
            hxz_criterion(&d8, &gen(4, &["(1 3)"])),
            Err(Error::NotNormal)
        );
    }

    #[test]
    fn equivalent_examples() {
        assert_eq!(equivalent_criterion(&s6(), &example_q()), Ok(false));
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(equivalent_criterion(&s3, &Group::trivial(3)), Ok(true));
        assert_eq!(equivalent_criterion(&s3, &gen(3, &["(1 2 3)"])), Ok(true));
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        let s3_in_s4 = gen(4, &["(1 2)", "(1 2 3)"]);
        assert!(matches!(
            equivalent_criterion(&s4, &s3_in_s4),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn odd_shortcut_examples() {
        let s3 = gen(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(odd_shortcut(&s3, &gen(3, &["(1 2)"])), Some(true));
        assert_eq!(odd_shortcut(&s3, &Group::trivial(3)), Some(true));
        assert_eq!(odd_shortcut(&s6(), &example_h()), None);
    }

    #[test]
    fn reductions() {
        let (g, h, q) = (s6(), example_h(), example_q());
        let found = reduce_to_sylow2(&g, &h);
        assert_eq!(found.order(), 2);
        assert!(h.find_conjugator(&found, &q).is_some());
        let c3 = gen(6, &["(1 2 3)"]);
        assert_eq!(reduce_to_sylow2(&g, &c3), Group::trivial(6));
        assert_eq!(reduce_to_sylow2(&g, &p16()), p16());

        let (q2, pp) = reduce_ngq(&g, &q);
        assert_eq!(q2, q);
        // N_{S6}((1 2)(3 5)) by brute force: elements commuting with the involution
        let x = p("(1 2)(3 5)", 6);
        let brute = g
            .elements()
            .iter()
            .filter(|y| (*y * &x) == (&x * *y))
            .count();
        assert_eq!(brute, 16);
        assert_eq!(pp.order(), 16);
        assert!(q2.is_normal_in(&pp));

        let (q3, p3) = reduce_ngq(&g, &c3);
        assert_eq!(q3, Group::trivial(6));
        assert_eq!(p3, g.sylow(2).unwrap());
    }

    #[test]
    fn fast_path() {
        let g = s6();
        let r = is_perfect_code(&g, &example_h());
        assert!(!r.is_perfect_code);
        assert_eq!(r.path, DecisionPath::NgqReduction);
        let orders: Vec<usize> = r.reduction_trace.iter().map(|t| t.1).collect();
        assert_eq!(orders, vec![2, 16, 16]);
        let r = is_perfect_code(&g, &g);
        assert!(r.is_perfect_code && r.witness.is_none());
        assert_eq!(r.path, DecisionPath::OddShortcut);

        let a5 = gen(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        for h in a5.all_subgroups().unwrap() {
            assert!(is_perfect_code(&a5, &h).is_perfect_code);
        }
    }

    #[test]
    fn shortcuts() {
        let a5 = gen(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let s = applicable_shortcuts(&a5, &Group::trivial(5));
        assert!(s.contains(&Shortcut::AbelianSylow2));
        assert!(s.contains(&Shortcut::ElementaryAbelianSylow2));
        let z4 = gen(4, &["(1 2 3 4)"]);
        assert!(
            applicable_shortcuts(&z4, &gen(4, &["(1 3)(2 4)"])).contains(&Shortcut::NormalSylow2)
        );
        assert!(
            !applicable_shortcuts(&s6(), &example_h()).contains(&Shortcut::ElementaryAbelianSylow2)
        );

        assert!(every_subgroup_is_perfect_code(&a5));
        assert!(!every_subgroup_is_perfect_code(&s6()));
        assert!(every_subgroup_is_perfect_code(&gen(3, &["(1 2 3)"])));
    }
}
