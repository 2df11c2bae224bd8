//! Classical relations in planar mapping class groups, checked through the
//! engine. They pin down the handedness convention.

use std::fmt;
use std::str::FromStr;

use crate::curve::Curve;
use crate::mcg::{Braid, MappingClass};
use crate::surface::{Generator, HalfTwist, Sign, Surface, TopologyError, TwistGen};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `t_{c(1,1)} t_{c(2,2)} t_{c(3,3)} t_{c(1,3)} = t_a t_b t_c` with
    /// `a = c(1,2)`, `b = c(2,3)` and `c` the curve around holes 1 and 3,
    /// obtained as the image of `c(1,2)` under the inverse half twist `h(2)`.
    Lantern,
    /// Twists along two round curves commute.
    Commuting { a: TwistGen, b: TwistGen },
    /// `f t_c f^-1 = t_{f(c)}`, with `f` a word applied left to right.
    Conjugation { f: Vec<Generator>, c: TwistGen },
}

/// The third interior curve of the lantern on holes 1..3.
pub fn lantern_curve(surface: &Surface) -> Result<Curve, TopologyError> {
    Curve::new(
        surface,
        1,
        2,
        vec![Generator::Half(HalfTwist {
            index: 2,
            sign: Sign::Negative,
        })],
    )
}

pub fn verify_relation(surface: &Surface, relation: &Relation) -> Result<bool, TopologyError> {
    let twist = |lo, hi| MappingClass::twist(surface, TwistGen::positive(lo, hi));
    match relation {
        Relation::Lantern => {
            if surface.boundaries() < 4 {
                return Err(TopologyError::MalformedRelation(format!(
                    "the lantern relation needs at least 4 boundary components, got {}",
                    surface.boundaries()
                )));
            }
            // rightmost factor first
            let lhs = twist(1, 1)?
                .compose(&twist(2, 2)?)?
                .compose(&twist(3, 3)?)?
                .compose(&twist(1, 3)?)?;
            let c = lantern_curve(surface)?.twist(Sign::Positive);
            let rhs = twist(1, 2)?.compose(&twist(2, 3)?)?.compose(&c)?;
            lhs.equals(&rhs)
        }
        Relation::Commuting { a, b } => {
            let ta = MappingClass::twist(surface, *a)?;
            let tb = MappingClass::twist(surface, *b)?;
            ta.compose(&tb)?.equals(&tb.compose(&ta)?)
        }
        Relation::Conjugation { f, c } => {
            let fm = Braid::from_word(surface, f)?;
            let tc = MappingClass::twist(surface, *c)?;
            let lhs = fm.conjugate(&tc)?;
            let image = Curve::new(surface, c.lo, c.hi, Vec::new())?.act_on_curve(f)?;
            lhs.equals(&image.twist(c.sign))
        }
    }
}

/// Name of a relation family, as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    Lantern,
    Commuting,
    Conjugation,
}

impl FromStr for RelationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lantern" => Ok(RelationKind::Lantern),
            "commuting" => Ok(RelationKind::Commuting),
            "conjugation" => Ok(RelationKind::Conjugation),
            other => Err(format!("unknown relation `{other}`")),
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Lantern => "lantern",
            RelationKind::Commuting => "commuting",
            RelationKind::Conjugation => "conjugation",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lantern_holds() {
        for b in 4..=6 {
            let s = Surface::planar(b).unwrap();
            assert!(verify_relation(&s, &Relation::Lantern).unwrap(), "b = {b}");
        }
        let s3 = Surface::planar(3).unwrap();
        assert!(verify_relation(&s3, &Relation::Lantern).is_err());
    }

    #[test]
    fn lantern_fails_for_the_other_half_twist() {
        // The opposite half twist gives the other curve around holes 1 and 3;
        // with it the all-positive lantern fails in this cyclic order.
        let s = Surface::planar(4).unwrap();
        let c = Curve::new(
            &s,
            1,
            2,
            vec![Generator::Half(HalfTwist {
                index: 2,
                sign: Sign::Positive,
            })],
        )
        .unwrap();
        assert_eq!(c.homology_class(), vec![1, 0, 1]);
        let t = |lo, hi| MappingClass::twist(&s, TwistGen::positive(lo, hi)).unwrap();
        let lhs = t(1, 1).compose(&t(2, 2)).unwrap().compose(&t(3, 3)).unwrap().compose(&t(1, 3)).unwrap();
        let rhs = t(1, 2).compose(&t(2, 3)).unwrap().compose(&c.twist(Sign::Positive)).unwrap();
        assert!(!lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn commuting_examples() {
        let s = Surface::planar(4).unwrap();
        let rel = |a, b| Relation::Commuting { a, b };
        let p = TwistGen::positive;
        assert!(verify_relation(&s, &rel(p(1, 1), p(3, 3))).unwrap());
        // nested round curves are disjoint too
        assert!(verify_relation(&s, &rel(p(1, 3), p(2, 2))).unwrap());
        assert!(!verify_relation(&s, &rel(p(1, 2), p(2, 3))).unwrap());
        assert!(verify_relation(&s, &rel(p(1, 2), p(2, 4))).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let s = Surface::planar(4).unwrap();
        let rel = Relation::Conjugation {
            f: vec![Generator::Twist(TwistGen::positive(2, 3))],
            c: TwistGen::positive(1, 2),
        };
        assert!(verify_relation(&s, &rel).unwrap());
    }
}
