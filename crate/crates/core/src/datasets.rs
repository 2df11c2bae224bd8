//! Generators for the bundled fibrations: `W1` on `Σ(0,5)` and the pair
//! `C1(m)`, `C2(m)` on `Σ(0,-m+5)` for `m <= -5`.
//!
//! The published vanishing cycles are only drawn, never written down, so the
//! curves here are reconstructions. They match every fact stated in words:
//! fiber, number of cycles, planar fiber, and the `δ` cycles shared verbatim
//! by `C1(m)` and `C2(m)`. They also satisfy the homological constraints
//! those manifolds force:
//!
//! * `W1`: `χ = 1` and `H_1(X) = H_2(X) = H_1(∂X) = 0`.
//! * `C1(m)`, `C2(m)`: equal invariant reports with `χ = 2`.
//!
//! The `β` and `γ` cycles enclose the same holes and differ by twists.
//!
//! Both manifolds carry the parameters `(m,1,3,0)`. A lone `C2(m,3,1,0)`
//! in the literature is read as a typo for `C2(m,1,3,0)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::format::{CurveDef, PalfDocument};
use crate::surface::{Generator, Surface, TwistGen};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dataset {
    W1,
    C1,
    C2,
}

impl Dataset {
    /// The text shipped in `data/`, generated with `m = -5` for the `C` pair.
    pub fn bundled(self) -> &'static str {
        match self {
            Dataset::W1 => include_str!("../data/w1.palf"),
            Dataset::C1 => include_str!("../data/c1.palf"),
            Dataset::C2 => include_str!("../data/c2.palf"),
        }
    }
}

impl FromStr for Dataset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "w1" => Ok(Dataset::W1),
            "c1" => Ok(Dataset::C1),
            "c2" => Ok(Dataset::C2),
            other => Err(format!("unknown dataset `{other}` (expected w1, c1 or c2)")),
        }
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dataset::W1 => "w1",
            Dataset::C1 => "c1",
            Dataset::C2 => "c2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatasetError {
    #[error("m must be at most -5, got {0}")]
    MOutOfRange(i64),
}

/// Default `m` for the `C` pair.
pub const DEFAULT_M: i64 = -5;

const PROVENANCE: &[&str] = &[
    "Reconstructed vanishing cycles. The original curves are only given as",
    "pictures; these satisfy the stated fiber, the cycle count, the shared",
    "delta cycles of the C pair, and the homological invariants that the",
    "total spaces must have. Any curves with those properties would do.",
];

fn twist(sign: i8, lo: usize, hi: usize) -> Generator {
    Generator::Twist(if sign > 0 {
        TwistGen::positive(lo, hi)
    } else {
        TwistGen::negative(lo, hi)
    })
}

/// `(name, lo, hi, conjugator)`: round curves around a run of holes, moved
/// by a single twist.
type Row = (&'static str, usize, usize, Option<Generator>);

fn add(doc: &mut PalfDocument, specs: &[(String, usize, usize, Option<Generator>)]) {
    for (name, lo, hi, conj) in specs {
        let base = format!("{name}_0");
        match conj {
            None => {
                doc.add_curve(name.clone(), CurveDef::Convex { lo: *lo, hi: *hi })
                    .expect("valid dataset curve");
            }
            Some(g) => {
                doc.add_curve(base.clone(), CurveDef::Convex { lo: *lo, hi: *hi })
                    .expect("valid dataset curve");
                doc.add_curve(
                    name.clone(),
                    CurveDef::From {
                        base,
                        apply: vec![*g],
                    },
                )
                .expect("valid dataset curve");
            }
        }
    }
}

fn owned(specs: &[Row]) -> Vec<(String, usize, usize, Option<Generator>)> {
    specs
        .iter()
        .map(|&(n, lo, hi, g)| (n.to_string(), lo, hi, g))
        .collect()
}

fn w1_specs(prefix: char) -> Vec<(String, usize, usize, Option<Generator>)> {
    let specs: [Row; 4] = [
        ("1", 1, 2, None),
        ("2", 2, 3, Some(twist(1, 1, 2))),
        ("3", 3, 4, Some(twist(-1, 2, 3))),
        ("4", 1, 3, Some(twist(1, 3, 4))),
    ];
    owned(&specs)
        .into_iter()
        .map(|(n, lo, hi, g)| (format!("{prefix}{n}"), lo, hi, g))
        .collect()
}

pub fn gen_dataset(which: Dataset, m: i64) -> Result<PalfDocument, DatasetError> {
    if which == Dataset::W1 {
        let mut doc = PalfDocument::new(Surface::planar(5).expect("b = 5"));
        doc.push_header("W1: genus zero PALF with 4 vanishing cycles on a fiber with 5 boundary components.");
        doc.push_header("");
        PROVENANCE.iter().for_each(|l| doc.push_header(*l));
        let specs = w1_specs('a');
        add(&mut doc, &specs);
        let names = specs.into_iter().map(|s| s.0).collect();
        doc.add_palf("W1", names).expect("declared cycles");
        return Ok(doc);
    }
    if m > -5 {
        return Err(DatasetError::MOutOfRange(m));
    }
    let b = (5 - m) as usize;
    let holes = b - 1;
    let (label, letter) = match which {
        Dataset::C1 => ("C1", 'b'),
        _ => ("C2", 'g'),
    };
    let mut doc = PalfDocument::new(Surface::planar(b).expect("b >= 10"));
    doc.push_header(format!(
        "{label}(m,1,3,0) with m = {m}: genus zero PALF with {b} vanishing cycles on a fiber with {b} boundary components."
    ));
    doc.push_header(format!("Cycles d7..d{b} are identical in C1 and C2."));
    if which == Dataset::C2 {
        doc.push_header("The parameters are (m,1,3,0); the one occurrence of C2(m,3,1,0) is read as a typo.");
    }
    doc.push_header("");
    PROVENANCE.iter().for_each(|l| doc.push_header(*l));
    let mut specs = match which {
        Dataset::C1 => {
            let mut s = w1_specs(letter);
            s.push((format!("{letter}5"), 4, 5, Some(twist(1, 3, 4))));
            s
        }
        _ => owned(&[
            ("1", 1, 2, Some(twist(1, 2, 3))),
            ("2", 2, 3, Some(twist(-1, 1, 2))),
            ("3", 3, 4, Some(twist(1, 2, 3))),
            ("4", 1, 3, Some(twist(-1, 3, 4))),
            ("5", 4, 5, Some(twist(-1, 3, 4))),
        ])
        .into_iter()
        .map(|(n, lo, hi, g)| (format!("{letter}{n}"), lo, hi, g))
        .collect(),
    };
    specs.push((format!("{letter}6"), 6, holes, Some(twist(1, 5, 6))));
    specs.extend((7..=b).map(|j| (format!("d{j}"), j - 1, j - 1, None)));
    add(&mut doc, &specs);
    let names = specs.into_iter().map(|s| s.0).collect();
    doc.add_palf(label, names).expect("declared cycles");
    Ok(doc)
}
