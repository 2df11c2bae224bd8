//! Simple closed curves on a planar surface.
//!
//! A curve is stored as the image of a round base curve `c(lo,hi)` under a
//! conjugator word. Since curves are only ever produced as homeomorphic
//! images of embedded round curves, they are simple by construction, and two
//! of them are isotopic exactly when their free homotopy classes agree. The
//! class of the unoriented curve is cached as a canonical cyclic word.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::algebra::Word;
use crate::mcg::{Braid, MappingClass};
use crate::surface::{
    check_range, inverse_word, reduce_word, Generator, Sign, Surface, TopologyError, TwistGen,
};

#[derive(Clone)]
pub struct Curve {
    surface: Surface,
    lo: usize,
    hi: usize,
    conjugator: Vec<Generator>,
    class: Word,
    /// The positive twist along the curve, built on first use.
    twist: OnceLock<MappingClass>,
}

/// Moves a cyclic word by each generator in turn. Going one generator at a
/// time keeps every intermediate word the class of an actual curve, where
/// evaluating the whole word first would build arc words far longer than
/// the result.
fn push_class(surface: &Surface, class: &Word, word: &[Generator]) -> Result<Word, TopologyError> {
    word.iter().try_fold(class.clone(), |w, &g| {
        Ok(Braid::generator(surface, g)?.loop_action(&w)?.cyclically_reduced())
    })
}

impl Curve {
    /// The round curve `c(lo,hi)` enclosing holes `lo..=hi`.
    pub fn convex(surface: &Surface, lo: usize, hi: usize) -> Result<Self, TopologyError> {
        Curve::new(surface, lo, hi, Vec::new())
    }

    /// The image of `c(lo,hi)` under `conjugator`, applied left to right.
    pub fn new(
        surface: &Surface,
        lo: usize,
        hi: usize,
        conjugator: Vec<Generator>,
    ) -> Result<Self, TopologyError> {
        check_range(surface, lo, hi)?;
        let class = push_class(surface, &base_word(lo, hi), &conjugator)?.unoriented_class();
        Ok(Curve {
            surface: *surface,
            lo,
            hi,
            conjugator,
            class,
            twist: OnceLock::new(),
        })
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    /// `(lo, hi)` of the base curve.
    pub fn base(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn conjugator(&self) -> &[Generator] {
        &self.conjugator
    }

    /// Canonical free homotopy class of the unoriented curve.
    pub fn pi1_class(&self) -> &Word {
        &self.class
    }

    /// Class in `H_1(F) = Z^{b-1}`, normalised so the first nonzero entry is
    /// positive. For a curve enclosing a set of holes this is the indicator
    /// vector of that set.
    pub fn homology_class(&self) -> Vec<i64> {
        let mut v = self.class.abelianize(self.surface.holes());
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        v
    }

    /// Isotopy of curves, rejecting curves on different surfaces.
    pub fn equals(&self, other: &Curve) -> Result<bool, TopologyError> {
        self.surface.check_same(&other.surface)?;
        Ok(self.class == other.class)
    }

    /// The image of this curve under `word` (applied left to right).
    pub fn act_on_curve(&self, word: &[Generator]) -> Result<Curve, TopologyError> {
        let conjugator = reduce_word(self.conjugator.iter().chain(word).copied());
        Ok(Curve {
            surface: self.surface,
            lo: self.lo,
            hi: self.hi,
            conjugator,
            class: push_class(&self.surface, &self.class, word)?.unoriented_class(),
            twist: OnceLock::new(),
        })
    }

    /// The Dehn twist along this curve: `h ∘ t_{c(lo,hi)} ∘ h^-1` for the
    /// conjugator `h`.
    pub fn twist(&self, sign: Sign) -> MappingClass {
        let t = self.twist.get_or_init(|| {
            let base = TwistGen::positive(self.lo, self.hi);
            let start = MappingClass::twist(&self.surface, base).expect("checked range");
            // one generator at a time, for the same reason as the class
            self.conjugator.iter().fold(start, |t, &g| {
                Braid::generator(&self.surface, g)
                    .and_then(|h| h.conjugate(&t))
                    .expect("checked generator")
            })
        });
        match sign {
            Sign::Positive => t.clone(),
            Sign::Negative => t.invert(),
        }
    }

    /// The same twist written as a generator word, applied left to right.
    pub fn twist_word(&self, sign: Sign) -> Vec<Generator> {
        let mut out = inverse_word(&self.conjugator);
        out.push(Generator::Twist(TwistGen {
            lo: self.lo,
            hi: self.hi,
            sign,
        }));
        out.extend_from_slice(&self.conjugator);
        out
    }
}

fn base_word(lo: usize, hi: usize) -> Word {
    Word::from_letters_unchecked((lo..=hi).map(|i| i as i32))
}

/// Curves compare by isotopy class.
impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.surface == other.surface && self.class == other.class
    }
}

impl Eq for Curve {}

impl Hash for Curve {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.surface.hash(state);
        self.class.hash(state);
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve({self}; class {})", self.class)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({},{})", self.lo, self.hi)?;
        if !self.conjugator.is_empty() {
            f.write_str(" apply")?;
            for g in &self.conjugator {
                write!(f, " {g}")?;
            }
        }
        Ok(())
    }
}
