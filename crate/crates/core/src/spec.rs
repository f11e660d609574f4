//! Textual group specifications.
//!
//! Family tokens: `sym:<n>`, `alt:<n>`, `cyclic:<n>`, `dihedral:<n>` (order
//! `2n`) and `psl2:<q>`. Explicit groups are written `<degree>:<gens>` with
//! generators in cycle notation separated by semicolons, e.g.
//! `8:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)`.
//!
//! Family generating sets:
//!
//! | token          | degree | generators                                         |
//! |----------------|--------|----------------------------------------------------|
//! | `sym:n`        | n      | `(1 2)`, `(1 2 … n)`                               |
//! | `alt:n`, n ≥ 3 | n      | `(1 2 3)`, then `(1 2 … n)` (n odd) or `(2 3 … n)` (n even, n ≥ 4) |
//! | `cyclic:n`     | n      | `(1 2 … n)`                                        |
//! | `dihedral:n`   | n      | `(1 2 … n)`, `i ↦ n + 1 − i`; n = 1 is `(1 2)`, n = 2 is `(1 2)(3 4)`, `(1 3)(2 4)` on 4 points |
//! | `psl2:q`       | q + 1  | see [`crate::psl2::Psl2Group`]                     |
//!
//! Families with no generators (`sym:1`, `alt:1`, `alt:2`, `cyclic:1`) give
//! the trivial group.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::psl2::Psl2Group;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    Psl2(u64),
    Explicit {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

fn cycle(points: impl IntoIterator<Item = usize>) -> Vec<usize> {
    points.into_iter().collect()
}

impl GroupSpec {
    pub fn degree(&self) -> usize {
        match *self {
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) | GroupSpec::Cyclic(n) => n,
            GroupSpec::Dihedral(1) => 2,
            GroupSpec::Dihedral(2) => 4,
            GroupSpec::Dihedral(n) => n,
            GroupSpec::Psl2(q) => q as usize + 1,
            GroupSpec::Explicit { degree, .. } => degree,
        }
    }

    /// The documented generating set. `psl2:q` builds the group to get it.
    pub fn generators(&self) -> Result<Vec<Permutation>> {
        let n = self.degree();
        let from = |cycles: Vec<Vec<usize>>| Permutation::from_cycles(n, &cycles);
        let gens = match *self {
            GroupSpec::Symmetric(n) if n >= 2 => {
                vec![from(vec![cycle([1, 2])])?, from(vec![cycle(1..=n)])?]
            }
            GroupSpec::Alternating(3) => vec![from(vec![cycle([1, 2, 3])])?],
            GroupSpec::Alternating(n) if n >= 4 => {
                let long = if n % 2 == 1 {
                    cycle(1..=n)
                } else {
                    cycle(2..=n)
                };
                vec![from(vec![cycle([1, 2, 3])])?, from(vec![long])?]
            }
            GroupSpec::Cyclic(n) if n >= 2 => vec![from(vec![cycle(1..=n)])?],
            GroupSpec::Dihedral(1) => vec![from(vec![cycle([1, 2])])?],
            GroupSpec::Dihedral(2) => vec![
                from(vec![cycle([1, 2]), cycle([3, 4])])?,
                from(vec![cycle([1, 3]), cycle([2, 4])])?,
            ],
            GroupSpec::Dihedral(n) => {
                let reflection = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
                vec![from(vec![cycle(1..=n)])?, from(reflection)?]
            }
            GroupSpec::Psl2(q) => Psl2Group::new(q)?.group().generators().to_vec(),
            GroupSpec::Explicit { ref generators, .. } => generators.clone(),
            _ => vec![],
        };
        Ok(gens)
    }

    pub fn build(&self) -> Result<Group> {
        self.build_with(&Limits::default())
    }

    pub fn build_with(&self, limits: &Limits) -> Result<Group> {
        if let GroupSpec::Psl2(q) = *self {
            return Ok(Psl2Group::with_limits(q, limits)?.group().clone());
        }
        Group::closure_with_cap(self.degree(), &self.generators()?, limits.max_order)
    }
}

/// Parses semicolon-separated cycle-notation generators of a fixed degree.
pub fn parse_generators(s: &str, degree: usize) -> Result<Vec<Permutation>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| Permutation::parse(t, degree))
        .collect()
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec {s:?} has no ':'")))?;
        let size = || -> Result<usize> {
            tail.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Error::Parse(format!("bad size in {s:?}")))
        };
        match head.trim() {
            "sym" => Ok(GroupSpec::Symmetric(size()?)),
            "alt" => Ok(GroupSpec::Alternating(size()?)),
            "cyclic" => Ok(GroupSpec::Cyclic(size()?)),
            "dihedral" => Ok(GroupSpec::Dihedral(size()?)),
            "psl2" => Ok(GroupSpec::Psl2(size()? as u64)),
            other => {
                let degree = other
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::Parse(format!("unknown group family {other:?}")))?;
                let generators = parse_generators(tail, degree)?;
                Ok(GroupSpec::Explicit { degree, generators })
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alt:{n}"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Psl2(q) => write!(f, "psl2:{q}"),
            GroupSpec::Explicit { degree, generators } => {
                write!(f, "{degree}:")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> usize {
        s.parse::<GroupSpec>().unwrap().build().unwrap().order()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order("sym:1"), 1);
        assert_eq!(order("sym:5"), 120);
        assert_eq!(order("alt:2"), 1);
        assert_eq!(order("alt:3"), 3);
        assert_eq!(order("alt:4"), 12);
        assert_eq!(order("alt:5"), 60);
        assert_eq!(order("alt:6"), 360);
        assert_eq!(order("cyclic:1"), 1);
        assert_eq!(order("cyclic:12"), 12);
        assert_eq!(order("dihedral:1"), 2);
        assert_eq!(order("dihedral:2"), 4);
        assert_eq!(order("dihedral:3"), 6);
        assert_eq!(order("dihedral:8"), 16);
        assert_eq!(order("psl2:5"), 60);
        assert_eq!(order("8:(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"), 8);
    }

    #[test]
    fn dihedral_families_are_dihedral() {
        for n in 1..=8 {
            let g = GroupSpec::Dihedral(n).build().unwrap();
            assert!(g.is_dihedral(), "n = {n}");
        }
    }

    #[test]
    fn canonical_round_trip() {
        let s: GroupSpec = " 6 : (3 1 2) ; ( 4 5 ) ".parse().unwrap();
        assert_eq!(s.to_string(), "6:(1 2 3);(4 5)");
        assert_eq!(s.to_string().parse::<GroupSpec>().unwrap(), s);
        assert_eq!(" sym:6 ".parse::<GroupSpec>().unwrap().to_string(), "sym:6");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "sym", "sym:0", "sym:x", "foo:3", "3:(1 4)", "0:(1 2)", "4:(1 2",
        ] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }
}
