//! Genus-zero Lefschetz fibrations over the disk, given as factorizations
//! into right-handed Dehn twists on a planar surface.
//!
//! The modules build on each other: [`algebra`] (free group words, integer
//! matrices), [`surface`] and [`mcg`] (generators and exact mapping
//! classes), [`curve`], [`palf`] (factorizations and invariants),
//! [`hurwitz`], and the I/O layers [`format`], [`datasets`] and [`svg`].
//! A guide with runnable examples lives in `book/`.

pub mod algebra;
pub mod mcg;
pub mod surface;
pub mod curve;
pub mod relations;
pub mod palf;
pub mod hurwitz;
pub mod format;
pub mod datasets;
pub mod svg;

/// The guide in `book/`, compiled as doc tests so its snippets keep working.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/surfaces-and-twists.md")]
    mod surfaces_and_twists {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/factorizations.md")]
    mod factorizations {}
    #[doc = include_str!("../../../book/src/hurwitz.md")]
    mod hurwitz {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
    #[doc = include_str!("../../../book/src/datasets.md")]
    mod datasets {}
}
