//! The fixed list of groups the verification suites run over.

use crate::error::Result;
use crate::group::Group;
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::spec::GroupSpec;

/// Explicit generators of the quaternion group of order 8 on 8 points.
pub const QUATERNION_8: &str = "8:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)";

/// Field orders of the `psl2` entries.
pub const PSL2_FIELDS: [u64; 8] = [4, 5, 7, 8, 9, 11, 13, 17];

#[derive(Debug, Clone)]
pub struct CorpusGroup {
    pub name: String,
    pub group: Group,
}

/// Corpus specs in canonical order: symmetric, alternating, cyclic,
/// dihedral, quaternion, then `psl2`.
pub fn corpus_specs() -> Vec<(String, GroupSpec)> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    specs.extend((3..=5).map(GroupSpec::Symmetric));
    specs.extend((4..=5).map(GroupSpec::Alternating));
    specs.extend((2..=16).map(GroupSpec::Cyclic));
    specs.extend((2..=8).map(GroupSpec::Dihedral));
    specs.push(QUATERNION_8.parse().expect("valid spec"));
    specs.extend(PSL2_FIELDS.map(GroupSpec::Psl2));
    specs
        .into_iter()
        .map(|s| {
            let name = if s.to_string() == QUATERNION_8 {
                "quaternion:8".to_string()
            } else {
                s.to_string()
            };
            (name, s)
        })
        .collect()
}

fn spec_order(spec: &GroupSpec) -> usize {
    match *spec {
        GroupSpec::Symmetric(n) => (1..=n).product(),
        GroupSpec::Alternating(n) => (1..=n).product::<usize>() / 2,
        GroupSpec::Cyclic(n) => n,
        GroupSpec::Dihedral(n) => 2 * n,
        GroupSpec::Psl2(q) => crate::psl2::psl2_order(q) as usize,
        GroupSpec::Explicit { .. } => 8,
    }
}

/// Corpus groups of order at most `max_order`, built without enumerating the others.
pub fn corpus(max_order: usize, limits: &Limits) -> Result<Vec<CorpusGroup>> {
    corpus_specs()
        .into_iter()
        .filter(|(_, s)| spec_order(s) <= max_order)
        .map(|(name, s)| {
            Ok(CorpusGroup {
                name,
                group: s.build_with(limits)?,
            })
        })
        .collect()
}

/// The `S6` worked example: `H = ⟨(1 2)(3 5), (3 4 5)⟩`, its Sylow 2-subgroup
/// `Q = ⟨(1 2)(3 5)⟩`, and `P = ⟨(1 2), (3 5), (3 4 5 6)⟩`, a Sylow 2-subgroup
/// of `G` containing `Q`. `Q` is a perfect code of `P` but not of `G`.
#[derive(Debug, Clone)]
pub struct S6Example {
    pub g: Group,
    pub h: Group,
    pub q: Group,
    pub p: Group,
}

impl S6Example {
    pub fn new() -> Result<Self> {
        let g = GroupSpec::Symmetric(6).build()?;
        let sub = |s: &str| -> Result<Group> {
            let gens = crate::spec::parse_generators(s, 6)?;
            g.generated_subgroup(&gens)
        };
        Ok(S6Example {
            h: sub("(1 2)(3 5);(3 4 5)")?,
            q: sub("(1 2)(3 5)")?,
            p: sub("(1 2);(3 5);(3 4 5 6)")?,
            g,
        })
    }

    /// `(group name, group, subgroup name, subgroup)` for each example pair.
    pub fn pairs(&self) -> Vec<(&'static str, &Group, &'static str, &Group)> {
        vec![
            ("sym:6", &self.g, "H", &self.h),
            ("sym:6", &self.g, "Q", &self.q),
            ("P", &self.p, "Q", &self.q),
        ]
    }
}

/// Generators of a subgroup as `g1;g2;…`, or `()` for the trivial group.
pub fn describe(h: &Group) -> String {
    if h.generators().is_empty() {
        return "()".to_string();
    }
    h.generators()
        .iter()
        .map(Permutation::to_string)
        .collect::<Vec<_>>()
        .join(";")
}
