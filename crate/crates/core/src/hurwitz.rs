//! Hurwitz moves on positive factorizations and a depth-bounded search for a
//! sequence of moves relating two factorizations.
//!
//! In application order a right move at `i` replaces the adjacent pair
//! `(a, b)` by `(b, t_b(a))` and a left move replaces it by
//! `(t_a^-1(b), a)`. Both keep the total monodromy, since
//! `t_{t_b(a)} t_b = t_b t_a t_b^-1 t_b = t_b t_a`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::Word;
use crate::curve::Curve;
use crate::mcg::Braid;
use crate::palf::Palf;
use crate::surface::{Generator, Sign, Surface, TopologyError, TwistGen};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("move index {index} is out of range for a factorization of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("fibers differ: {0} vs {1}")]
    FiberMismatch(Surface, Surface),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Left,
    Right,
}

/// A move on the adjacent pair `(cycles[index], cycles[index + 1])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzMove {
    pub index: usize,
    pub direction: Direction,
}

impl HurwitzMove {
    pub fn right(index: usize) -> Self {
        HurwitzMove {
            index,
            direction: Direction::Right,
        }
    }

    pub fn left(index: usize) -> Self {
        HurwitzMove {
            index,
            direction: Direction::Left,
        }
    }

    pub fn inverse(self) -> Self {
        HurwitzMove {
            index: self.index,
            direction: match self.direction {
                Direction::Left => Direction::Right,
                Direction::Right => Direction::Left,
            },
        }
    }

    /// All moves on a factorization of length `n`, in search order.
    pub fn all(n: usize) -> Vec<HurwitzMove> {
        (0..n.saturating_sub(1))
            .flat_map(|i| [HurwitzMove::left(i), HurwitzMove::right(i)])
            .collect()
    }
}

impl fmt::Display for HurwitzMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.direction {
            Direction::Left => "left",
            Direction::Right => "right",
        };
        write!(f, "{d}@{}", self.index)
    }
}

fn transport(curve: &Curve, along: &Curve, sign: Sign) -> Result<Curve, TopologyError> {
    curve.act_on_curve(&along.twist_word(sign))
}

pub fn apply_move(p: &Palf, mv: HurwitzMove) -> Result<Palf, HurwitzError> {
    let n = p.cycles().len();
    if mv.index + 1 >= n {
        return Err(HurwitzError::IndexOutOfRange {
            index: mv.index,
            len: n,
        });
    }
    let mut cycles = p.cycles().to_vec();
    let (a, b) = (&p.cycles()[mv.index], &p.cycles()[mv.index + 1]);
    let (first, second) = match mv.direction {
        Direction::Right => (b.clone(), transport(a, b, Sign::Positive)?),
        Direction::Left => (transport(b, a, Sign::Negative)?, a.clone()),
    };
    cycles[mv.index] = first;
    cycles[mv.index + 1] = second;
    Ok(Palf::new(p.name(), *p.fiber(), cycles))
}

pub fn apply_moves(p: &Palf, moves: &[HurwitzMove]) -> Result<Palf, HurwitzError> {
    moves
        .iter()
        .try_fold(p.clone(), |acc, &mv| apply_move(&acc, mv))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub depth: usize,
    /// Also accept `g(q)` for words `g` of at most two twist generators.
    pub conjugation: bool,
}

/// A move sequence taking `p` to `g(q)`, elementwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub moves: Vec<HurwitzMove>,
    /// The conjugating word `g`, applied left to right; empty unless the
    /// conjugation variant was needed.
    pub conjugator: Vec<TwistGen>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Witness),
    /// Nothing within the depth bound. This is not a proof that the
    /// factorizations are inequivalent.
    NotFound { depth: usize, explored: usize },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

type StateKey = Vec<Word>;

fn key(p: &Palf) -> StateKey {
    p.cycles().iter().map(|c| c.pi1_class().clone()).collect()
}

/// Every cycle of `q` moved by `word` (applied left to right). The total
/// monodromy is conjugated accordingly.
pub fn conjugate_factorization(q: &Palf, word: &[TwistGen]) -> Result<Palf, TopologyError> {
    let gens: Vec<Generator> = word.iter().map(|&g| g.into()).collect();
    let cycles = q
        .cycles()
        .iter()
        .map(|c| c.act_on_curve(&gens))
        .collect::<Result<_, _>>()?;
    Ok(Palf::new(q.name(), *q.fiber(), cycles))
}

/// Conjugating words in search order: the empty word, then one twist, then
/// two twists that do not cancel.
fn conjugators(q: &Palf, conjugation: bool) -> Result<Vec<(Vec<TwistGen>, Braid)>, TopologyError> {
    let mut words: Vec<Vec<TwistGen>> = vec![vec![]];
    if conjugation {
        let gens = TwistGen::all(q.fiber());
        words.extend(gens.iter().map(|&g| vec![g]));
        for &g in &gens {
            for &h in &gens {
                if h != g.inverse() {
                    words.push(vec![g, h]);
                }
            }
        }
    }
    words
        .into_iter()
        .map(|w| {
            let gens: Vec<Generator> = w.iter().map(|&g| g.into()).collect();
            let braid = Braid::from_word(q.fiber(), &gens)?;
            Ok((w, braid))
        })
        .collect()
}

/// States first reached at one distance, each with the least path to it.
/// Forward paths lead from the start to the state; backward paths lead from
/// the state to the goal.
type Layer = Vec<(StateKey, Palf, Vec<HurwitzMove>)>;

fn expand(
    layer: &Layer,
    visited: &mut HashSet<StateKey>,
    moves: &[HurwitzMove],
    backward: bool,
) -> Result<Layer, HurwitzError> {
    let children: Vec<Vec<(StateKey, Palf, Vec<HurwitzMove>)>> = layer
        .par_iter()
        .map(|(_, state, path)| {
            moves
                .iter()
                .map(|&mv| {
                    let (next, path) = if backward {
                        let next = apply_move(state, mv.inverse())?;
                        (next, std::iter::once(mv).chain(path.iter().copied()).collect())
                    } else {
                        let next = apply_move(state, mv)?;
                        (next, path.iter().copied().chain(std::iter::once(mv)).collect())
                    };
                    Ok((key(&next), next, path))
                })
                .collect::<Result<Vec<_>, HurwitzError>>()
        })
        .collect::<Result<_, _>>()?;
    let mut best: HashMap<StateKey, (Palf, Vec<HurwitzMove>)> = HashMap::new();
    for (k, state, path) in children.into_iter().flatten() {
        if visited.contains(&k) {
            continue;
        }
        match best.get(&k) {
            Some((_, old)) if *old <= path => {}
            _ => {
                best.insert(k, (state, path));
            }
        }
    }
    let mut next: Layer = best.into_iter().map(|(k, (s, p))| (k, s, p)).collect();
    next.sort_by(|a, b| a.2.cmp(&b.2));
    visited.extend(next.iter().map(|e| e.0.clone()));
    Ok(next)
}

/// The least witness joining a forward state `m` to a backward state `y`
/// with `m = g(y)`. Moves commute with global conjugation, so the backward
/// path from `y` also takes `m` to `g(q)`.
fn meet(
    fwd: &Layer,
    bwd: &Layer,
    conj: &[(Vec<TwistGen>, Braid)],
) -> Result<Option<Witness>, TopologyError> {
    let index: HashMap<&StateKey, &Vec<HurwitzMove>> = fwd.iter().map(|(k, _, p)| (k, p)).collect();
    let heads: HashSet<Option<&Word>> = index.keys().map(|k| k.first()).collect();
    let found: Vec<(Vec<HurwitzMove>, usize)> = bwd
        .par_iter()
        .map(|(k, _, suffix)| {
            let mut out = Vec::new();
            for (gi, (_, braid)) in conj.iter().enumerate() {
                // cheap filter on the first cycle before moving the rest
                let head = k
                    .first()
                    .map(|c| Ok::<_, TopologyError>(braid.loop_action(c)?.unoriented_class()))
                    .transpose()?;
                if !heads.contains(&head.as_ref()) {
                    continue;
                }
                let moved = k
                    .iter()
                    .map(|c| Ok(braid.loop_action(c)?.unoriented_class()))
                    .collect::<Result<StateKey, TopologyError>>()?;
                if let Some(prefix) = index.get(&moved) {
                    out.push((prefix.iter().chain(suffix).copied().collect(), gi));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>, TopologyError>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(found.into_iter().min().map(|(moves, gi)| Witness {
        moves,
        conjugator: conj[gi].0.clone(),
    }))
}

/// Total length of the curve classes in a layer, a proxy for the cost of
/// expanding it.
fn weight(layer: &Layer) -> usize {
    layer
        .iter()
        .map(|(k, _, _)| k.iter().map(Word::len).sum::<usize>())
        .sum()
}

/// Breadth-first search over move sequences of length at most
/// `options.depth` taking `p` to `q`.
///
/// The search runs from both ends, one layer at a time, always growing the
/// side whose frontier holds the shorter curves. Curves grow quickly along
/// chains of moves, so this keeps away from the complicated end. A shortest
/// path passes through every layer pair `(f, d - f)`, so the result does not
/// depend on which side grew. States are deduplicated by the tuple of
/// canonical curve classes. The witness returned is of minimal length, ties
/// broken by the lexicographic order of move sequences (then by conjugator
/// order).
pub fn equivalent_within(
    p: &Palf,
    q: &Palf,
    options: SearchOptions,
) -> Result<SearchOutcome, HurwitzError> {
    if p.fiber() != q.fiber() {
        return Err(HurwitzError::FiberMismatch(*p.fiber(), *q.fiber()));
    }
    if p.cycles().len() != q.cycles().len() {
        return Ok(SearchOutcome::NotFound {
            depth: options.depth,
            explored: 0,
        });
    }
    let conj = conjugators(q, options.conjugation)?;
    let moves = HurwitzMove::all(p.cycles().len());
    let mut fwd_seen = HashSet::from([key(p)]);
    let mut bwd_seen = HashSet::from([key(q)]);
    let mut fwd: Layer = vec![(key(p), p.clone(), vec![])];
    let mut bwd: Layer = vec![(key(q), q.clone(), vec![])];
    for d in 0..=options.depth {
        if d > 0 {
            if weight(&fwd) <= weight(&bwd) {
                fwd = expand(&fwd, &mut fwd_seen, &moves, false)?;
            } else {
                bwd = expand(&bwd, &mut bwd_seen, &moves, true)?;
            }
        }
        if fwd.is_empty() || bwd.is_empty() {
            break;
        }
        if let Some(w) = meet(&fwd, &bwd, &conj)? {
            return Ok(SearchOutcome::Found(w));
        }
    }
    Ok(SearchOutcome::NotFound {
        depth: options.depth,
        explored: fwd_seen.len() + bwd_seen.len(),
    })
}
