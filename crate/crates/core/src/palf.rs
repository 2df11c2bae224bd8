//! Positive allowable Lefschetz fibrations with planar fiber, given by their
//! vanishing cycles, and the homological invariants of the total space `X`
//! and its boundary.
//!
//! `X` is `F × D²` with one 2-handle per vanishing cycle. With `V` the
//! `(b-1) × n` matrix whose columns are the homology classes of the cycles:
//!
//! * `χ(X) = χ(F) + n = 2 - b + n`
//! * `H_1(X) = coker V`
//! * `H_2(X) = ker V`, free of rank `n - rank V`
//! * `H_1(∂X) = coker(V Vᵀ)`. The boundary carries the open book with page
//!   `F` and the total monodromy; its first homology is the cokernel of the
//!   variation map, which for a product of twists on a planar page is
//!   `Σ_k [α_k] ⟨·, α_k⟩ = V Vᵀ` because the intersection form of `F` vanishes.

use std::fmt;

use serde::Serialize;

use crate::algebra::{AbelianGroup, IntMatrix};
use crate::curve::Curve;
use crate::mcg::{Braid, MappingClass};
use crate::surface::{reduce_word, Sign, Surface};

/// A fibration given by its fiber and its vanishing cycles in application
/// order: `cycles[0]` is twisted first, so the written product is
/// `t_{cycles[n-1]} ⋯ t_{cycles[0]}`.
#[derive(Clone, Debug)]
pub struct Palf {
    name: String,
    fiber: Surface,
    cycles: Vec<Curve>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SurfaceMismatch {
        index: usize,
        fiber: Surface,
        found: Surface,
    },
    HomologicallyTrivial {
        index: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SurfaceMismatch {
                index,
                fiber,
                found,
            } => write!(f, "cycle {index} lives on {found}, not on the fiber {fiber}"),
            Violation::HomologicallyTrivial { index } => {
                write!(f, "cycle {index} is homologically trivial (not allowable)")
            }
        }
    }
}

impl Palf {
    /// No checks are made here; see [`Palf::validate`]. The invariant
    /// computations assume a valid fibration and panic on cycles from a
    /// different surface.
    pub fn new(name: impl Into<String>, fiber: Surface, cycles: Vec<Curve>) -> Self {
        Palf {
            name: name.into(),
            fiber,
            cycles,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn fiber(&self) -> &Surface {
        &self.fiber
    }

    pub fn cycles(&self) -> &[Curve] {
        &self.cycles
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (index, c) in self.cycles.iter().enumerate() {
            if c.surface() != &self.fiber {
                out.push(Violation::SurfaceMismatch {
                    index,
                    fiber: self.fiber,
                    found: *c.surface(),
                });
            } else if c.homology_class().iter().all(|&x| x == 0) {
                out.push(Violation::HomologicallyTrivial { index });
            }
        }
        out
    }

    /// The matrix `V` whose columns are the cycles' homology classes.
    pub fn cycle_matrix(&self) -> IntMatrix {
        let holes = self.fiber.holes();
        let columns: Vec<Vec<i64>> = self
            .cycles
            .iter()
            .map(|c| {
                assert_eq!(c.surface(), &self.fiber, "cycle on a different surface");
                c.homology_class()
            })
            .collect();
        IntMatrix::from_columns(holes, &columns)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.fiber.euler_characteristic() + self.cycles.len() as i64
    }

    pub fn total_space_h1(&self) -> AbelianGroup {
        AbelianGroup::cokernel(&self.cycle_matrix())
    }

    pub fn total_space_h2(&self) -> AbelianGroup {
        let rank = self.cycle_matrix().smith_normal_form().rank;
        AbelianGroup::free(self.cycles.len() - rank)
    }

    pub fn boundary_h1(&self) -> AbelianGroup {
        let v = self.cycle_matrix();
        AbelianGroup::cokernel(&v.mul(&v.transpose()))
    }

    /// `t_{α_n} ∘ ⋯ ∘ t_{α_1}`.
    pub fn total_monodromy(&self) -> MappingClass {
        // Evaluated generator by generator: composing two large maps costs the
        // product of their sizes, composing with a generator only the sum.
        // After Hurwitz moves most of the word cancels freely.
        let word = reduce_word(self.cycles.iter().flat_map(|c| c.twist_word(Sign::Positive)));
        Braid::from_word(&self.fiber, &word)
            .expect("cycle on a different surface")
            .to_mapping_class()
            .expect("a product of twists fixes every hole")
    }

    pub fn report(&self) -> InvariantReport {
        let v = self.cycle_matrix();
        let rank = v.smith_normal_form().rank;
        let report = InvariantReport {
            euler: self.euler_characteristic(),
            h1_total: AbelianGroup::cokernel(&v),
            h2_total: AbelianGroup::free(self.cycles.len() - rank),
            h1_boundary: AbelianGroup::cokernel(&v.mul(&v.transpose())),
            cycle_count: self.cycles.len(),
            fiber_boundaries: self.fiber.boundaries(),
        };
        assert!(report.euler_identity_holds());
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub euler: i64,
    pub h1_total: AbelianGroup,
    pub h2_total: AbelianGroup,
    pub h1_boundary: AbelianGroup,
    pub cycle_count: usize,
    pub fiber_boundaries: usize,
}

impl InvariantReport {
    pub fn euler_identity_holds(&self) -> bool {
        self.euler == 2 - self.fiber_boundaries as i64 + self.cycle_count as i64
    }

    /// `(name, value)` pairs in a fixed order.
    pub fn records(&self) -> Vec<(&'static str, String)> {
        vec![
            ("fiber_boundaries", self.fiber_boundaries.to_string()),
            ("cycle_count", self.cycle_count.to_string()),
            ("euler", self.euler.to_string()),
            ("h1_total", self.h1_total.to_string()),
            ("h2_total", self.h2_total.to_string()),
            ("h1_boundary", self.h1_boundary.to_string()),
        ]
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in self.records() {
            writeln!(f, "{name:<17}{value}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorizationRelation {
    /// Same fiber and the cycle lists agree term by term up to isotopy.
    ElementwiseEqual,
    /// Different cycle lists with the same total monodromy.
    SameMonodromy,
    Neither,
}

impl fmt::Display for FactorizationRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorizationRelation::ElementwiseEqual => "elementwise-equal",
            FactorizationRelation::SameMonodromy => "equal-total-monodromy",
            FactorizationRelation::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantDiff {
    pub name: &'static str,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub invariants: Vec<InvariantDiff>,
    pub factorization: FactorizationRelation,
}

impl Comparison {
    pub fn invariants_equal(&self) -> bool {
        self.invariants.iter().all(|d| d.equal)
    }
}

pub fn compare(p: &Palf, q: &Palf) -> Comparison {
    let (rp, rq) = (p.report(), q.report());
    let invariants = rp
        .records()
        .into_iter()
        .zip(rq.records())
        .map(|((name, left), (_, right))| InvariantDiff {
            name,
            equal: left == right,
            left,
            right,
        })
        .collect();
    let factorization = if p.fiber != q.fiber {
        FactorizationRelation::Neither
    } else if p.cycles == q.cycles {
        FactorizationRelation::ElementwiseEqual
    } else if p.total_monodromy() == q.total_monodromy() {
        FactorizationRelation::SameMonodromy
    } else {
        FactorizationRelation::Neither
    };
    Comparison {
        invariants,
        factorization,
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.invariants {
            let mark = if d.equal { "equal" } else { "DIFFERENT" };
            writeln!(f, "{:<17}{:<10}{} | {}", d.name, mark, d.left, d.right)?;
        }
        writeln!(f, "{:<17}{}", "factorization", self.factorization)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{Generator, TwistGen};

    fn s(b: usize) -> Surface {
        Surface::planar(b).unwrap()
    }

    fn convex(surface: &Surface, lo: usize, hi: usize) -> Curve {
        Curve::convex(surface, lo, hi).unwrap()
    }

    #[test]
    fn euler_characteristic_examples() {
        let s5 = s(5);
        let cycles = (1..=4).map(|i| convex(&s5, i, i)).collect();
        assert_eq!(Palf::new("w", s5, cycles).euler_characteristic(), 1);
        assert_eq!(Palf::new("e", s(4), vec![]).euler_characteristic(), -2);
        let s10 = s(10);
        let cycles = (0..10).map(|i| convex(&s10, 1 + i % 9, 1 + i % 9)).collect();
        assert_eq!(Palf::new("c", s10, cycles).euler_characteristic(), 2);
    }

    #[test]
    fn total_space_homology() {
        let s5 = s(5);
        let p = Palf::new("p", s5, (1..=4).map(|i| convex(&s5, i, i)).collect());
        assert!(p.total_space_h1().is_trivial());
        assert!(p.total_space_h2().is_trivial());
        let q = Palf::new("q", s5, vec![convex(&s5, 1, 2), convex(&s5, 1, 1)]);
        assert_eq!(q.total_space_h1(), AbelianGroup::free(2));
        let e = Palf::new("e", s(4), vec![]);
        assert_eq!(e.total_space_h1(), AbelianGroup::free(3));
        assert!(e.total_space_h2().is_trivial());
        let s2 = s(2);
        let r = Palf::new("r", s2, vec![convex(&s2, 1, 1), convex(&s2, 1, 1)]);
        assert_eq!(r.total_space_h2(), AbelianGroup::free(1));
    }

    #[test]
    fn annulus_open_books() {
        let s2 = s(2);
        let core = || convex(&s2, 1, 1);
        // S^1 x S^2, S^3, RP^3
        assert_eq!(Palf::new("a", s2, vec![]).boundary_h1().to_string(), "Z");
        assert_eq!(Palf::new("b", s2, vec![core()]).boundary_h1().to_string(), "0");
        assert_eq!(Palf::new("c", s2, vec![core(), core()]).boundary_h1().to_string(), "Z/2");
    }

    #[test]
    fn validation() {
        let s5 = s(5);
        let ok = Palf::new("ok", s5, vec![convex(&s5, 1, 2)]);
        assert!(ok.validate().is_empty());
        assert!(Palf::new("empty", s5, vec![]).validate().is_empty());
        let bad = Palf::new("bad", s5, vec![convex(&s5, 1, 1), convex(&s(4), 1, 1)]);
        assert_eq!(
            bad.validate(),
            vec![Violation::SurfaceMismatch {
                index: 1,
                fiber: s5,
                found: s(4)
            }]
        );
    }

    #[test]
    fn monodromy() {
        let s4 = s(4);
        assert!(Palf::new("e", s4, vec![]).total_monodromy().is_identity());
        let one = Palf::new("one", s4, vec![convex(&s4, 1, 2)]);
        assert_eq!(
            one.total_monodromy(),
            MappingClass::twist(&s4, TwistGen::positive(1, 2)).unwrap()
        );
        let c = Curve::new(&s4, 2, 3, vec![Generator::Twist(TwistGen::positive(1, 2))]).unwrap();
        let p = Palf::new("p", s4, vec![convex(&s4, 1, 2), c.clone(), convex(&s4, 3, 3)]);
        let m = p.total_monodromy();
        assert!(m.abelianized_action().is_identity());
        // application order: first cycle acts first
        let expect = MappingClass::twist(&s4, TwistGen::positive(3, 3))
            .unwrap()
            .compose(&c.twist(Sign::Positive))
            .unwrap()
            .compose(&MappingClass::twist(&s4, TwistGen::positive(1, 2)).unwrap())
            .unwrap();
        assert_eq!(m, expect);
    }

    #[test]
    fn comparisons() {
        let s5 = s(5);
        let p = Palf::new("p", s5, (1..=4).map(|i| convex(&s5, i, i)).collect());
        let cmp = compare(&p, &p);
        assert!(cmp.invariants_equal());
        assert_eq!(cmp.factorization, FactorizationRelation::ElementwiseEqual);
        let e = Palf::new("e", s5, vec![]);
        let cmp = compare(&p, &e);
        let euler = cmp.invariants.iter().find(|d| d.name == "euler").unwrap();
        assert_eq!((euler.left.as_str(), euler.right.as_str()), ("1", "-3"));
        assert_eq!(cmp.factorization, FactorizationRelation::Neither);
        // boundary twists commute, so a reordering has the same monodromy
        let mut rev: Vec<Curve> = p.cycles().to_vec();
        rev.reverse();
        let r = Palf::new("r", s5, rev);
        assert_eq!(compare(&p, &r).factorization, FactorizationRelation::SameMonodromy);
    }
}
