//! Exact algebra shared by the rest of the crate: reduced words in free
//! groups and integer matrices with Smith normal form.

mod matrix;
mod word;

pub use matrix::{AbelianGroup, IntMatrix, SmithForm};
pub use word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("letter {letter} is out of range for a free group of rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },
}
