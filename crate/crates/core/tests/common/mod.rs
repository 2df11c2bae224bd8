//! Oracles and generators shared by the integration tests. Nothing here
//! calls into the library's own Smith normal form.

#![allow(dead_code)]

use palf::curve::Curve;
use palf::hurwitz::HurwitzMove;
use palf::palf::Palf;
use palf::surface::{Generator, HalfTwist, Sign, Surface, TwistGen};
use rand::Rng;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `D_k` is the gcd of all
/// `k × k` minors and `d_k = D_k / D_{k-1}`.
pub fn determinantal_factors(m: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let mut dk = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                dk = gcd(dk, det(&minor));
            }
        }
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

/// Invariant factors by elementary operations: Euclid on rows and columns
/// until the matrix is diagonal, then `(a, b) -> (gcd, lcm)` on the diagonal.
pub fn elementary_factors(m: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            let pivot_row = a[t].clone();
            for row in a[t + 1..].iter_mut() {
                let q = row[t] / p;
                for (x, y) in row[t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= q * y;
                }
                clean &= row[t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                for row in a[t..].iter_mut() {
                    row[j] -= q * row[t];
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
        if a[t][t] != 0 {
            diag.push(a[t][t].abs());
        }
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(diag[i], diag[j]);
            let l = diag[i] / g * diag[j];
            (diag[i], diag[j]) = (g, l);
        }
    }
    diag
}

pub fn random_matrix(rng: &mut impl Rng) -> (Vec<Vec<i128>>, usize) {
    let rows = rng.gen_range(1..=4);
    let cols = rng.gen_range(1..=4);
    let m = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect())
        .collect();
    (m, cols)
}

pub fn to_i64(m: &[Vec<i128>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
}

pub fn random_twist(rng: &mut impl Rng, s: &Surface) -> TwistGen {
    let gens = TwistGen::all(s);
    gens[rng.gen_range(0..gens.len())]
}

pub fn random_twist_word(rng: &mut impl Rng, s: &Surface, max_len: usize) -> Vec<TwistGen> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_twist(rng, s)).collect()
}

/// Twists and half twists.
pub fn random_word(rng: &mut impl Rng, s: &Surface, max_len: usize) -> Vec<Generator> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            if s.holes() >= 2 && rng.gen_bool(0.3) {
                let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                Generator::Half(HalfTwist {
                    index: rng.gen_range(1..s.holes()),
                    sign,
                })
            } else {
                Generator::Twist(random_twist(rng, s))
            }
        })
        .collect()
}

pub fn random_curve(rng: &mut impl Rng, s: &Surface, max_conj: usize) -> Curve {
    let lo = rng.gen_range(1..=s.holes());
    let hi = rng.gen_range(lo..=s.holes());
    Curve::new(s, lo, hi, random_word(rng, s, max_conj)).unwrap()
}

pub fn random_palf(rng: &mut impl Rng, s: &Surface, max_cycles: usize) -> Palf {
    let n = rng.gen_range(0..=max_cycles);
    let cycles = (0..n).map(|_| random_curve(rng, s, 2)).collect();
    Palf::new("random", *s, cycles)
}

pub fn random_moves(rng: &mut impl Rng, n: usize, k: usize) -> Vec<HurwitzMove> {
    if n < 2 {
        return vec![];
    }
    (0..k)
        .map(|_| {
            let i = rng.gen_range(0..n - 1);
            if rng.gen_bool(0.5) {
                HurwitzMove::right(i)
            } else {
                HurwitzMove::left(i)
            }
        })
        .collect()
}

/// Homology of the open books on the annulus with `k` positive core twists:
/// `S¹×S²` for `k = 0`, and the lens space `L(k,1)` otherwise.
pub fn annulus_boundary(k: usize) -> &'static str {
    match k {
        0 => "Z",
        1 => "0",
        2 => "Z/2",
        3 => "Z/3",
        _ => unimplemented!(),
    }
}

/// Proptest-friendly constructors: arbitrary numbers folded into range.
pub fn twist_from(s: &Surface, a: usize, b: usize, positive: bool) -> TwistGen {
    let lo = a % s.holes() + 1;
    let hi = lo + b % (s.holes() - lo + 1);
    if positive {
        TwistGen::positive(lo, hi)
    } else {
        TwistGen::negative(lo, hi)
    }
}

/// `(kind, a, b, positive)`; kind 0 is a half twist when the surface has
/// one, anything else a twist.
pub fn generator_from(s: &Surface, (kind, a, b, positive): (u8, usize, usize, bool)) -> Generator {
    if kind == 0 && s.holes() >= 2 {
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        Generator::Half(HalfTwist {
            index: a % (s.holes() - 1) + 1,
            sign,
        })
    } else {
        Generator::Twist(twist_from(s, a, b, positive))
    }
}
