//! Planar surfaces and the generators used to build mapping classes on them.
//!
//! The surface `Σ_{0,b}` is a disk whose outer boundary is component 0, with
//! holes `1..b-1` placed left to right along a horizontal axis. Its
//! fundamental group, based on the outer boundary, is free on loops
//! `x_1, ..., x_{b-1}`, one around each hole.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("genus {0} is not supported; only planar (genus 0) surfaces are modelled")]
    UnsupportedGenus(usize),
    #[error("a planar surface needs at least 2 boundary components, got {0}")]
    TooFewBoundaries(usize),
    #[error("hole range {lo}..{hi} is invalid on a surface with {holes} holes")]
    InvalidHoleRange { lo: usize, hi: usize, holes: usize },
    #[error("half twist {index} is invalid on a surface with {holes} holes")]
    InvalidHalfTwist { index: usize, holes: usize },
    #[error("surface mismatch: {0} vs {1}")]
    SurfaceMismatch(Surface, Surface),
    #[error("word uses generator x{index} but the surface has only {holes} holes")]
    RankMismatch { index: usize, holes: usize },
    #[error("{0}")]
    MalformedRelation(String),
}

/// A compact planar surface `Σ_{0,b}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Surface {
    boundaries: usize,
}

impl Surface {
    pub fn new(genus: usize, boundaries: usize) -> Result<Self, TopologyError> {
        if genus != 0 {
            return Err(TopologyError::UnsupportedGenus(genus));
        }
        Surface::planar(boundaries)
    }

    pub fn planar(boundaries: usize) -> Result<Self, TopologyError> {
        if boundaries < 2 {
            return Err(TopologyError::TooFewBoundaries(boundaries));
        }
        Ok(Surface { boundaries })
    }

    pub fn genus(&self) -> usize {
        0
    }

    pub fn boundaries(&self) -> usize {
        self.boundaries
    }

    /// Number of holes, which is also the rank of the fundamental group.
    pub fn holes(&self) -> usize {
        self.boundaries - 1
    }

    /// Euler characteristic `2 - b`.
    pub fn euler_characteristic(&self) -> i64 {
        2 - self.boundaries as i64
    }

    pub(crate) fn check_same(&self, other: &Surface) -> Result<(), TopologyError> {
        if self == other {
            Ok(())
        } else {
            Err(TopologyError::SurfaceMismatch(*self, *other))
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ(0,{})", self.boundaries)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// A Dehn twist along the round curve `c(lo,hi)` enclosing the consecutive
/// holes `lo..=hi`. Positive means right-handed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TwistGen {
    pub lo: usize,
    pub hi: usize,
    pub sign: Sign,
}

impl TwistGen {
    pub fn positive(lo: usize, hi: usize) -> Self {
        TwistGen {
            lo,
            hi,
            sign: Sign::Positive,
        }
    }

    pub fn negative(lo: usize, hi: usize) -> Self {
        TwistGen {
            lo,
            hi,
            sign: Sign::Negative,
        }
    }

    pub fn inverse(self) -> Self {
        TwistGen {
            sign: self.sign.flip(),
            ..self
        }
    }

    pub fn check(&self, surface: &Surface) -> Result<(), TopologyError> {
        check_range(surface, self.lo, self.hi)
    }

    /// Every positive and negative twist generator on the surface, ordered
    /// by `(lo, hi, sign)`.
    pub fn all(surface: &Surface) -> Vec<TwistGen> {
        let n = surface.holes();
        let mut out = Vec::with_capacity(n * (n + 1));
        for lo in 1..=n {
            for hi in lo..=n {
                out.push(TwistGen::positive(lo, hi));
                out.push(TwistGen::negative(lo, hi));
            }
        }
        out
    }
}

pub(crate) fn check_range(surface: &Surface, lo: usize, hi: usize) -> Result<(), TopologyError> {
    if lo >= 1 && lo <= hi && hi <= surface.holes() {
        Ok(())
    } else {
        Err(TopologyError::InvalidHoleRange {
            lo,
            hi,
            holes: surface.holes(),
        })
    }
}

/// The half twist exchanging holes `index` and `index + 1` counterclockwise.
///
/// Half twists permute the holes, so they are not elements of the mapping
/// class group of the surface with its boundary fixed. They are used only to
/// move curves around: a Dehn twist along the image of a curve under a half
/// twist is an honest mapping class.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct HalfTwist {
    pub index: usize,
    pub sign: Sign,
}

impl HalfTwist {
    pub fn inverse(self) -> Self {
        HalfTwist {
            sign: self.sign.flip(),
            ..self
        }
    }

    pub fn check(&self, surface: &Surface) -> Result<(), TopologyError> {
        if self.index >= 1 && self.index < surface.holes() {
            Ok(())
        } else {
            Err(TopologyError::InvalidHalfTwist {
                index: self.index,
                holes: surface.holes(),
            })
        }
    }
}

/// One letter of a conjugator word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Generator {
    Twist(TwistGen),
    Half(HalfTwist),
}

impl Generator {
    pub fn inverse(self) -> Self {
        match self {
            Generator::Twist(t) => Generator::Twist(t.inverse()),
            Generator::Half(h) => Generator::Half(h.inverse()),
        }
    }

    pub fn check(&self, surface: &Surface) -> Result<(), TopologyError> {
        match self {
            Generator::Twist(t) => t.check(surface),
            Generator::Half(h) => h.check(surface),
        }
    }
}

impl From<TwistGen> for Generator {
    fn from(t: TwistGen) -> Self {
        Generator::Twist(t)
    }
}

impl From<HalfTwist> for Generator {
    fn from(h: HalfTwist) -> Self {
        Generator::Half(h)
    }
}

/// Inverse of a word applied left to right.
pub fn inverse_word(word: &[Generator]) -> Vec<Generator> {
    word.iter().rev().map(|g| g.inverse()).collect()
}

/// Cancels adjacent inverse pairs. Only the free cancellation `g g^-1 = 1`
/// is used, so the result always names the same homeomorphism.
pub fn reduce_word(word: impl IntoIterator<Item = Generator>) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::new();
    for g in word {
        if out.last() == Some(&g.inverse()) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

impl fmt::Display for TwistGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}c({},{})", self.sign.symbol(), self.lo, self.hi)
    }
}

impl fmt::Display for HalfTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}h({})", self.sign.symbol(), self.index)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Twist(t) => t.fmt(f),
            Generator::Half(h) => h.fmt(f),
        }
    }
}

/// Error from parsing a single generator token such as `+c(1,2)` or `-h(3)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected a signed generator like +c(lo,hi) or -h(i), found `{0}`")]
pub struct GeneratorSyntaxError(pub String);

impl FromStr for Generator {
    type Err = GeneratorSyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GeneratorSyntaxError(s.to_string());
        let mut chars = s.chars();
        let sign = match chars.next() {
            Some('+') => Sign::Positive,
            Some('-') => Sign::Negative,
            _ => return Err(err()),
        };
        let rest = chars.as_str();
        let kind = rest.chars().next().ok_or_else(err)?;
        let args = rest[1..]
            .strip_prefix('(')
            .and_then(|a| a.strip_suffix(')'))
            .ok_or_else(err)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        match (kind, nums.as_slice()) {
            ('c', &[lo, hi]) => Ok(Generator::Twist(TwistGen { lo, hi, sign })),
            ('h', &[index]) => Ok(Generator::Half(HalfTwist { index, sign })),
            _ => Err(err()),
        }
    }
}
