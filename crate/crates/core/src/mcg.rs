//! Mapping classes of planar surfaces in arc coordinates.
//!
//! Fix the basepoint `p` on the outer boundary and, for each hole `i`, a
//! standard arc `δ_i` running from `p` straight up to hole `i`. A
//! homeomorphism `f` fixing the boundary pointwise sends `δ_i` to an arc with
//! the same endpoints, so `f(δ_i) = w_i · δ_i` for a unique `w_i ∈ π_1(F, p)`.
//! The tuple `(w_1, ..., w_{b-1})` determines `f` up to isotopy, because the
//! arcs cut the surface into a disk. Unlike the action on `π_1` alone, it sees
//! Dehn twists about boundary-parallel curves.
//!
//! Half twists additionally permute the holes: `f(δ_i) = w_i · δ_{π(i)}`.
//! [`Braid`] carries that permutation; [`MappingClass`] is the pure case.
//!
//! Composition rule: `(g∘f)(δ_i) = φ_g(w^f_i) · w^g_{π_f(i)} · δ_{π_g π_f(i)}`,
//! where `φ_g(x_i) = w^g_i x_{π_g(i)} (w^g_i)^{-1}` is the induced loop map.
//! Inverting needs `φ_{f^{-1}}`, so every element carries its inverse along.

use std::fmt;

use crate::algebra::{IntMatrix, Word};
use crate::surface::{Generator, HalfTwist, Sign, Surface, TopologyError, TwistGen};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct ArcMap {
    /// `perm[i]` is the 0-based hole the arc to hole `i` is sent to.
    perm: Vec<usize>,
    arcs: Vec<Word>,
}

impl ArcMap {
    fn identity(holes: usize) -> Self {
        ArcMap {
            perm: (0..holes).collect(),
            arcs: vec![Word::identity(); holes],
        }
    }

    fn is_pure(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    fn loop_images(&self) -> Vec<Word> {
        self.arcs
            .iter()
            .zip(&self.perm)
            .map(|(w, &p)| Word::generator(p + 1).conjugate_by(w))
            .collect()
    }

    /// `self ∘ f`.
    fn after(&self, f: &ArcMap) -> ArcMap {
        let images = self.loop_images();
        let perm = f.perm.iter().map(|&p| self.perm[p]).collect();
        let arcs = f
            .arcs
            .iter()
            .zip(&f.perm)
            .map(|(w, &p)| w.substitute(&images).mul(&self.arcs[p]))
            .collect();
        ArcMap { perm, arcs }
    }
}

/// A homeomorphism together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct ArcPair {
    fwd: ArcMap,
    inv: ArcMap,
}

impl ArcPair {
    fn identity(holes: usize) -> Self {
        ArcPair {
            fwd: ArcMap::identity(holes),
            inv: ArcMap::identity(holes),
        }
    }

    fn after(&self, f: &ArcPair) -> ArcPair {
        ArcPair {
            fwd: self.fwd.after(&f.fwd),
            inv: f.inv.after(&self.inv),
        }
    }

    fn inverse(&self) -> ArcPair {
        ArcPair {
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
        }
    }

    fn twist(holes: usize, g: TwistGen) -> ArcPair {
        let c = Word::from_letters_unchecked((g.lo..=g.hi).map(|i| i as i32));
        let c_inv = c.inverse();
        let mut fwd = ArcMap::identity(holes);
        let mut inv = ArcMap::identity(holes);
        for k in g.lo - 1..g.hi {
            fwd.arcs[k] = c.clone();
            inv.arcs[k] = c_inv.clone();
        }
        let pair = ArcPair { fwd, inv };
        match g.sign {
            Sign::Positive => pair,
            Sign::Negative => pair.inverse(),
        }
    }

    /// σ_i: `x_i ↦ x_i x_{i+1} x_i^-1`, `x_{i+1} ↦ x_i`.
    fn half_twist(holes: usize, h: HalfTwist) -> ArcPair {
        let i = h.index - 1;
        let mut fwd = ArcMap::identity(holes);
        fwd.perm.swap(i, i + 1);
        fwd.arcs[i] = Word::generator(i + 1);
        let mut inv = ArcMap::identity(holes);
        inv.perm.swap(i, i + 1);
        inv.arcs[i + 1] = Word::generator(i + 2).inverse();
        let pair = ArcPair { fwd, inv };
        match h.sign {
            Sign::Positive => pair,
            Sign::Negative => pair.inverse(),
        }
    }

    fn generator(holes: usize, g: Generator) -> ArcPair {
        match g {
            Generator::Twist(t) => ArcPair::twist(holes, t),
            Generator::Half(h) => ArcPair::half_twist(holes, h),
        }
    }
}

fn check_word_rank(surface: &Surface, w: &Word) -> Result<(), TopologyError> {
    let index = w.max_index();
    if index > surface.holes() {
        Err(TopologyError::RankMismatch {
            index,
            holes: surface.holes(),
        })
    } else {
        Ok(())
    }
}

/// An element of the mapping class group `Map(F, ∂F)` of a planar surface.
///
/// Equality (`==`) is equality of mapping classes: same surface and same arc
/// coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MappingClass {
    surface: Surface,
    pair: ArcPair,
}

impl MappingClass {
    pub fn identity(surface: &Surface) -> Self {
        MappingClass {
            surface: *surface,
            pair: ArcPair::identity(surface.holes()),
        }
    }

    /// The Dehn twist along `c(g.lo, g.hi)`. Its arc coordinates are
    /// `w_k = x_lo x_{lo+1} ⋯ x_hi` for `lo <= k <= hi` and trivial
    /// otherwise; the negative twist is the inverse.
    pub fn twist(surface: &Surface, g: TwistGen) -> Result<Self, TopologyError> {
        g.check(surface)?;
        Ok(MappingClass {
            surface: *surface,
            pair: ArcPair::twist(surface.holes(), g),
        })
    }

    /// Product of twists applied left to right: `[a, b]` gives `t_b ∘ t_a`.
    pub fn from_twists(surface: &Surface, word: &[TwistGen]) -> Result<Self, TopologyError> {
        word.iter().try_fold(MappingClass::identity(surface), |acc, &g| {
            MappingClass::twist(surface, g)?.compose(&acc)
        })
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    /// `self ∘ f`, with `f` applied first.
    pub fn compose(&self, f: &MappingClass) -> Result<MappingClass, TopologyError> {
        self.surface.check_same(&f.surface)?;
        Ok(MappingClass {
            surface: self.surface,
            pair: self.pair.after(&f.pair),
        })
    }

    pub fn invert(&self) -> MappingClass {
        MappingClass {
            surface: self.surface,
            pair: self.pair.inverse(),
        }
    }

    /// Equality of mapping classes, rejecting classes on different surfaces.
    pub fn equals(&self, other: &MappingClass) -> Result<bool, TopologyError> {
        self.surface.check_same(&other.surface)?;
        Ok(self.pair.fwd.arcs == other.pair.fwd.arcs)
    }

    pub fn is_identity(&self) -> bool {
        self.pair.fwd.arcs.iter().all(Word::is_identity)
    }

    /// `(w_1, ..., w_{b-1})`.
    pub fn arc_coords(&self) -> &[Word] {
        &self.pair.fwd.arcs
    }

    /// Applies the induced automorphism `x_i ↦ w_i x_i w_i^-1` of `π_1`.
    pub fn loop_action(&self, w: &Word) -> Result<Word, TopologyError> {
        check_word_rank(&self.surface, w)?;
        Ok(w.substitute(&self.pair.fwd.loop_images()))
    }

    /// The action on `H_1(F) = Z^{b-1}`; column `i` is the image of `x_i`.
    pub fn abelianized_action(&self) -> IntMatrix {
        let n = self.surface.holes();
        let columns: Vec<Vec<i64>> = self
            .pair
            .fwd
            .loop_images()
            .iter()
            .map(|w| w.abelianize(n))
            .collect();
        IntMatrix::from_columns(n, &columns)
    }

    /// Whether the loop around the outer boundary, `x_1 ⋯ x_{b-1}`, is fixed.
    /// It must be, since the boundary is fixed pointwise; this is a
    /// consistency check on the induced automorphism.
    pub fn preserves_peripheral(&self) -> bool {
        let n = self.surface.holes();
        let peripheral = Word::from_letters_unchecked(1..=n as i32);
        self.loop_action(&peripheral).is_ok_and(|w| w == peripheral)
    }

    pub(crate) fn into_braid(self) -> Braid {
        Braid {
            surface: self.surface,
            pair: self.pair,
        }
    }
}

impl fmt::Debug for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MappingClass")
            .field("surface", &self.surface)
            .field("arcs", &self.pair.fwd.arcs)
            .finish()
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.arc_coords().iter().enumerate() {
            writeln!(f, "δ{} ↦ ({}) δ{}", i + 1, w, i + 1)?;
        }
        Ok(())
    }
}

/// An element of the group generated by Dehn twists and half twists: a
/// homeomorphism fixing the outer boundary that may permute the holes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Braid {
    surface: Surface,
    pair: ArcPair,
}

impl Braid {
    pub fn identity(surface: &Surface) -> Self {
        Braid {
            surface: *surface,
            pair: ArcPair::identity(surface.holes()),
        }
    }

    pub fn generator(surface: &Surface, g: Generator) -> Result<Self, TopologyError> {
        g.check(surface)?;
        Ok(Braid {
            surface: *surface,
            pair: ArcPair::generator(surface.holes(), g),
        })
    }

    /// Evaluates a word applied left to right: `[a, b]` gives `b ∘ a`.
    pub fn from_word(surface: &Surface, word: &[Generator]) -> Result<Self, TopologyError> {
        word.iter().try_fold(Braid::identity(surface), |acc, &g| {
            Braid::generator(surface, g)?.compose(&acc)
        })
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Braid) -> Result<Braid, TopologyError> {
        self.surface.check_same(&f.surface)?;
        Ok(Braid {
            surface: self.surface,
            pair: self.pair.after(&f.pair),
        })
    }

    pub fn invert(&self) -> Braid {
        Braid {
            surface: self.surface,
            pair: self.pair.inverse(),
        }
    }

    /// 1-based hole that hole `i` is carried to.
    pub fn permutation(&self) -> Vec<usize> {
        self.pair.fwd.perm.iter().map(|p| p + 1).collect()
    }

    pub fn loop_action(&self, w: &Word) -> Result<Word, TopologyError> {
        check_word_rank(&self.surface, w)?;
        Ok(w.substitute(&self.pair.fwd.loop_images()))
    }

    /// `Some` when no hole is moved.
    pub fn to_mapping_class(&self) -> Option<MappingClass> {
        self.pair.fwd.is_pure().then(|| MappingClass {
            surface: self.surface,
            pair: self.pair.clone(),
        })
    }

    /// `self ∘ m ∘ self^-1`, which is pure whenever `m` is.
    pub fn conjugate(&self, m: &MappingClass) -> Result<MappingClass, TopologyError> {
        let b = self.compose(&m.clone().into_braid())?.compose(&self.invert())?;
        Ok(b.to_mapping_class().expect("conjugate of a pure class is pure"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(b: usize) -> Surface {
        Surface::planar(b).unwrap()
    }

    fn t(surface: &Surface, lo: usize, hi: usize) -> MappingClass {
        MappingClass::twist(surface, TwistGen::positive(lo, hi)).unwrap()
    }

    fn w(letters: &[i32]) -> Word {
        Word::reduce(8, letters.iter().copied()).unwrap()
    }

    #[test]
    fn twist_arc_coordinates() {
        let s4 = s(4);
        assert_eq!(t(&s4, 1, 2).arc_coords(), &[w(&[1, 2]), w(&[1, 2]), w(&[])]);
        assert_eq!(t(&s4, 2, 2).arc_coords(), &[w(&[]), w(&[2]), w(&[])]);
        let neg = MappingClass::twist(&s4, TwistGen::negative(1, 2)).unwrap();
        assert!(neg.compose(&t(&s4, 1, 2)).unwrap().is_identity());
        assert!(MappingClass::twist(&s4, TwistGen::positive(2, 4)).is_err());
    }

    /// Independent model of the Artin action of σ_i on words, for checking
    /// that a twist about c(i,i+1) acts on loops like σ_i².
    fn artin(i: usize, word: &Word) -> Word {
        let images: Vec<Word> = (1..=3)
            .map(|k| {
                if k == i {
                    w(&[i as i32, i as i32 + 1, -(i as i32)])
                } else if k == i + 1 {
                    w(&[i as i32])
                } else {
                    w(&[k as i32])
                }
            })
            .collect();
        word.substitute(&images)
    }

    #[test]
    fn twist_loop_action_is_square_of_half_twist() {
        let s4 = s(4);
        let tw = t(&s4, 1, 2);
        for k in 1..=3 {
            let x = Word::generator(k);
            assert_eq!(tw.loop_action(&x).unwrap(), artin(1, &artin(1, &x)));
        }
        assert_eq!(tw.loop_action(&w(&[1])).unwrap(), w(&[1, 2, 1, -2, -1]));
        assert_eq!(tw.loop_action(&w(&[3])).unwrap(), w(&[3]));
        assert!(tw.loop_action(&w(&[4])).is_err());
    }

    #[test]
    fn composition_examples() {
        let s4 = s(4);
        let a = t(&s4, 1, 1).compose(&t(&s4, 2, 2)).unwrap();
        let b = t(&s4, 2, 2).compose(&t(&s4, 1, 1)).unwrap();
        assert_eq!(a.arc_coords(), &[w(&[1]), w(&[2]), w(&[])]);
        assert!(a.equals(&b).unwrap());
        let c = t(&s4, 1, 2).compose(&t(&s4, 2, 3)).unwrap();
        let d = t(&s4, 2, 3).compose(&t(&s4, 1, 2)).unwrap();
        assert!(!c.equals(&d).unwrap());
        assert!(!t(&s4, 1, 1).equals(&t(&s4, 2, 2)).unwrap());
        assert!(t(&s4, 1, 1).equals(&t(&s(5), 1, 1)).is_err());
    }

    #[test]
    fn inverses() {
        let s4 = s(4);
        assert!(MappingClass::identity(&s4).invert().is_identity());
        let neg = MappingClass::twist(&s4, TwistGen::negative(1, 2)).unwrap();
        assert_eq!(t(&s4, 1, 2).invert(), neg);
    }

    #[test]
    fn boundary_twists_are_nontrivial() {
        let s5 = s(5);
        for i in 1..=4 {
            let m = t(&s5, i, i);
            assert!(!m.is_identity());
            // invisible to the loop action
            for k in 1..=4 {
                let x = Word::generator(k);
                assert_eq!(m.loop_action(&x).unwrap(), x);
            }
        }
        assert!(!t(&s5, 1, 4).is_identity());
    }

    #[test]
    fn abelianized_action_is_trivial() {
        let s5 = s(5);
        for g in TwistGen::all(&s5) {
            let m = MappingClass::twist(&s5, g).unwrap();
            assert!(m.abelianized_action().is_identity());
            assert!(m.preserves_peripheral());
        }
    }

    #[test]
    fn half_twists() {
        let s4 = s(4);
        let h = |index, sign| Generator::Half(HalfTwist { index, sign });
        let sigma = Braid::generator(&s4, h(1, Sign::Positive)).unwrap();
        assert_eq!(sigma.permutation(), vec![2, 1, 3]);
        assert_eq!(sigma.loop_action(&w(&[1])).unwrap(), w(&[1, 2, -1]));
        assert_eq!(sigma.loop_action(&w(&[2])).unwrap(), w(&[1]));
        let back = sigma.compose(&sigma.invert()).unwrap();
        assert!(back.to_mapping_class().unwrap().is_identity());
        // σ_1 moves hole 2 into the position of hole 1
        let moved = sigma.conjugate(&t(&s4, 2, 2)).unwrap();
        assert_eq!(moved, t(&s4, 1, 1));
        // σ_1² is the twist about c(1,2) corrected by the two boundary twists
        let sq = sigma.compose(&sigma).unwrap().to_mapping_class().unwrap();
        let expect = t(&s4, 1, 2)
            .compose(&t(&s4, 1, 1).invert())
            .unwrap()
            .compose(&t(&s4, 2, 2).invert())
            .unwrap();
        assert_eq!(sq, expect);
        // braid relation
        let s2 = Braid::generator(&s4, h(2, Sign::Positive)).unwrap();
        let lhs = sigma.compose(&s2).unwrap().compose(&sigma).unwrap();
        let rhs = s2.compose(&sigma).unwrap().compose(&s2).unwrap();
        assert_eq!(lhs, rhs);
    }
}
