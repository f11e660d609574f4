//! `PSL(2, q)` acting on the `q + 1` points of the projective line, and the
//! classification of its subgroup perfect codes for `q ≡ ±1 (mod 8)`.

mod field;

pub use field::{prime_power, FieldElement, FiniteField};

use crate::error::{Error, Result};
use crate::group::{two_part, Group};
use crate::limits::Limits;
use crate::perfect::is_perfect_code;
use crate::perm::Permutation;

/// A point `[x : y]` of the projective line, normalized to `[t : 1]` or `[1 : 0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    x: FieldElement,
    y: FieldElement,
}

impl ProjectivePoint {
    pub fn new(field: &FiniteField, x: FieldElement, y: FieldElement) -> Result<Self> {
        if field.is_zero(&y) {
            if field.is_zero(&x) {
                return Err(Error::HypothesisViolated(
                    "[0 : 0] is not a projective point",
                ));
            }
            return Ok(ProjectivePoint::infinity(field));
        }
        let t = field.mul(&x, &field.inv(&y)?);
        Ok(ProjectivePoint {
            x: t,
            y: field.one(),
        })
    }

    pub fn infinity(field: &FiniteField) -> Self {
        ProjectivePoint {
            x: field.one(),
            y: field.zero(),
        }
    }

    pub fn coordinates(&self) -> (&FieldElement, &FieldElement) {
        (&self.x, &self.y)
    }
}

/// A 2×2 matrix `[[a, b], [c, d]]` over the field.
type Matrix = [FieldElement; 4];

#[derive(Debug, Clone)]
pub struct Psl2Group {
    q: u64,
    field: FiniteField,
    points: Vec<ProjectivePoint>,
    group: Group,
}

/// `q(q−1)(q+1)/d` with `d = gcd(2, q − 1)`.
pub fn psl2_order(q: u64) -> u64 {
    let d = if q.is_multiple_of(2) { 1 } else { 2 };
    q * (q - 1) * (q + 1) / d
}

impl Psl2Group {
    pub fn new(q: u64) -> Result<Psl2Group> {
        Psl2Group::with_limits(q, &Limits::default())
    }

    /// Points are `[t : 1]` for `t` in canonical field order, then `[1 : 0]`.
    /// Generators are the Möbius maps of `[[1, 1], [0, 1]]` and
    /// `[[0, 1], [−1, 0]]`, plus `diag(ω, ω⁻¹)` for a primitive `ω` when `q`
    /// is not prime (the first two alone only reach `PSL(2, p)`).
    pub fn with_limits(q: u64, limits: &Limits) -> Result<Psl2Group> {
        let field = FiniteField::with_bound(q, limits.field_bound)?;
        let mut points: Vec<ProjectivePoint> = field
            .elements()
            .into_iter()
            .map(|t| ProjectivePoint {
                x: t,
                y: field.one(),
            })
            .collect();
        points.push(ProjectivePoint::infinity(&field));

        let (zero, one) = (field.zero(), field.one());
        let mut matrices: Vec<Matrix> = vec![
            [one.clone(), one.clone(), zero.clone(), one.clone()],
            [zero.clone(), one.clone(), field.neg(&one), zero.clone()],
        ];
        if field.degree() > 1 {
            let w = field.primitive_element();
            let w_inv = field.inv(&w)?;
            matrices.push([w, zero.clone(), zero, w_inv]);
        }
        let gens = matrices
            .iter()
            .map(|m| mobius_permutation(&field, &points, m))
            .collect::<Result<Vec<_>>>()?;
        let group = Group::closure_with_cap(points.len(), &gens, limits.max_order)?;
        let expected = psl2_order(q) as usize;
        if group.order() != expected {
            return Err(Error::OrderMismatch {
                expected,
                found: group.order(),
            });
        }
        Ok(Psl2Group {
            q,
            field,
            points,
            group,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn d(&self) -> u64 {
        if self.q.is_multiple_of(2) {
            1
        } else {
            2
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Stabilizer of `[1 : 0]`, the upper triangular (Borel) subgroup.
    pub fn point_stabilizer(&self) -> Group {
        let inf = self.points.len();
        let elements = self
            .group
            .elements()
            .iter()
            .filter(|g| g.image(inf) == inf)
            .cloned()
            .collect();
        Group::from_closed_elements(self.group.degree(), elements)
    }

    fn require_odd_classification(&self) -> Result<()> {
        if matches!(self.q % 8, 1 | 7) {
            Ok(())
        } else {
            Err(Error::HypothesisViolated("q must satisfy q ≡ ±1 (mod 8)"))
        }
    }

    pub fn sylow2_is_dihedral(&self) -> Result<bool> {
        self.require_odd_classification()?;
        Ok(self.group.sylow(2)?.is_dihedral())
    }

    /// Classifies `H` by its Sylow 2-subgroup `Q`: trivial, noncyclic, or
    /// cyclic of the largest order a cyclic 2-subgroup of `G` can have
    /// (half the Sylow 2-order, as the Sylow 2-subgroups are dihedral).
    /// `H` is a perfect code exactly in those three cases.
    pub fn classify(&self, h: &Group) -> Result<(PslCase, bool)> {
        self.require_odd_classification()?;
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::NotInGroup(format!("{h:?}")));
        }
        let q = h.sylow(2)?;
        let max_cyclic = two_part(self.group.order() as u64) / 2;
        let case = if q.order() == 1 {
            PslCase::TrivialQ
        } else if !q.is_cyclic() {
            PslCase::NoncyclicQ
        } else if q.order() as u64 == max_cyclic {
            PslCase::MaximalCyclicQ
        } else {
            PslCase::None
        };
        Ok((case, case != PslCase::None))
    }

    /// Whether the classification agrees with the general decision procedure.
    pub fn classify_vs_checker(&self, h: &Group) -> Result<bool> {
        let (_, predicted) = self.classify(h)?;
        Ok(predicted == is_perfect_code(&self.group, h).is_perfect_code)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PslCase {
    TrivialQ,
    NoncyclicQ,
    MaximalCyclicQ,
    None,
}

impl PslCase {
    pub fn label(self) -> &'static str {
        match self {
            PslCase::TrivialQ => "trivial-Q",
            PslCase::NoncyclicQ => "noncyclic-Q",
            PslCase::MaximalCyclicQ => "maximal-cyclic-Q",
            PslCase::None => "none",
        }
    }
}

/// Builds `PSL(2, q)` and tests its Sylow 2-subgroup for being dihedral.
pub fn sylow2_is_dihedral_check(q: u64) -> Result<bool> {
    if q.is_multiple_of(2) || !matches!(q % 8, 1 | 7) {
        return Err(Error::HypothesisViolated(
            "q must be odd with q ≡ ±1 (mod 8)",
        ));
    }
    Psl2Group::new(q)?.sylow2_is_dihedral()
}

fn point_index(field: &FiniteField, points: &[ProjectivePoint], pt: &ProjectivePoint) -> usize {
    if field.is_zero(&pt.y) {
        points.len() - 1
    } else {
        points[..points.len() - 1]
            .binary_search_by(|p| p.x.cmp(&pt.x))
            .expect("normalized point")
    }
}

/// The permutation of point indices induced by `[x : y] ↦ [ax + by : cx + dy]`.
fn mobius_permutation(
    field: &FiniteField,
    points: &[ProjectivePoint],
    m: &Matrix,
) -> Result<Permutation> {
    let [a, b, c, d] = m;
    let images = points
        .iter()
        .map(|pt| {
            let x = field.add(&field.mul(a, &pt.x), &field.mul(b, &pt.y));
            let y = field.add(&field.mul(c, &pt.x), &field.mul(d, &pt.y));
            let image = ProjectivePoint::new(field, x, y)?;
            Ok(point_index(field, points, &image) as u32)
        })
        .collect::<Result<Vec<u32>>>()?;
    Permutation::from_images(images)
}
