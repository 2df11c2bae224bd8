//! Exact integer matrices, Smith normal form and finitely generated abelian
//! groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A dense matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have the
    /// same length; `cols` is needed for the zero-row case.
    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns<C: AsRef<[i64]>>(rows: usize, columns: &[C]) -> Self {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            let col = col.as_ref();
            assert_eq!(col.len(), rows, "ragged matrix columns");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `(row a, row b) <- (p*a + q*b, r*a + s*b)`; unimodular when `ps - qr = ±1`.
    fn combine_rows(&mut self, a: usize, b: usize, [p, q, r, s]: [&BigInt; 4]) {
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, p * &x + q * &y);
            self.set(b, j, r * &x + s * &y);
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, [p, q, r, s]: [&BigInt; 4]) {
        for i in 0..self.rows {
            let x = self.get(i, a).clone();
            let y = self.get(i, b).clone();
            self.set(i, a, p * &x + q * &y);
            self.set(i, b, r * &x + s * &y);
        }
    }

    /// Smith normal form of the matrix: the nonzero invariant factors
    /// `d1 | d2 | ...` (all positive) and the rank.
    pub fn smith_normal_form(&self) -> SmithForm {
        let mut m = self.clone();
        let mut factors: Vec<BigInt> = Vec::new();
        let mut t = 0;
        while t < m.rows.min(m.cols) {
            // pivot: any nonzero entry of the remaining block
            let Some((pi, pj)) = (t..m.rows)
                .flat_map(|i| (t..m.cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !m.get(i, j).is_zero())
                .min_by(|&(a, b), &(c, d)| m.get(a, b).abs().cmp(&m.get(c, d).abs()))
            else {
                break;
            };
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
            loop {
                let mut changed = false;
                // clear column t below the pivot
                for i in t + 1..m.rows {
                    if m.get(i, t).is_zero() {
                        continue;
                    }
                    let a = m.get(t, t).clone();
                    let b = m.get(i, t).clone();
                    let [p, q, r, s] = eliminator(&a, &b);
                    m.combine_rows(t, i, [&p, &q, &r, &s]);
                    changed = true;
                }
                // clear row t right of the pivot
                for j in t + 1..m.cols {
                    if m.get(t, j).is_zero() {
                        continue;
                    }
                    let a = m.get(t, t).clone();
                    let b = m.get(t, j).clone();
                    let [p, q, r, s] = eliminator(&a, &b);
                    m.combine_cols(t, j, [&p, &q, &r, &s]);
                    changed = true;
                }
                if !changed {
                    break;
                }
            }
            // the pivot must divide the rest of the block; otherwise fold
            // the offending row in and repeat
            let pivot = m.get(t, t).clone();
            let bad_row = (t + 1..m.rows)
                .find(|&i| (t + 1..m.cols).any(|j| !m.get(i, j).is_multiple_of(&pivot)));
            if let Some(i) = bad_row {
                let one = BigInt::one();
                let zero = BigInt::zero();
                m.combine_rows(t, i, [&one, &one, &zero, &one]);
                continue;
            }
            factors.push(pivot.abs());
            t += 1;
        }
        let rank = factors.len();
        SmithForm { factors, rank }
    }
}

/// Unimodular `[p, q, r, s]` sending `(a, b)` to `(gcd, 0)`. When `a`
/// already divides `b` the first entry is left alone, so a pivot that
/// divides its row and column is never disturbed.
fn eliminator(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    if b.is_multiple_of(a) {
        return [BigInt::one(), BigInt::zero(), -(b / a), BigInt::one()];
    }
    let e = a.extended_gcd(b);
    let (ag, bg) = (a / &e.gcd, b / &e.gcd);
    [e.x, e.y, -bg, ag]
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of [`IntMatrix::smith_normal_form`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// A finitely generated abelian group `Z^free_rank + Z/d1 + Z/d2 + ...`
/// with `d1 | d2 | ...` and every `d_i >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// `Z^n / span(columns of m)`, where `m` has `n` rows.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let snf = m.smith_normal_form();
        AbelianGroup {
            free_rank: m.rows() - snf.rank,
            torsion: snf.factors.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[[i64; 2]]) -> (Vec<i64>, usize) {
        let snf = IntMatrix::from_rows(2, rows).smith_normal_form();
        let f = snf.factors.iter().map(|d| d.try_into().unwrap()).collect();
        (f, snf.rank)
    }

    #[test]
    fn snf_examples() {
        assert_eq!(factors(&[[1, 0], [0, 1]]), (vec![1, 1], 2));
        assert_eq!(factors(&[[2, 0], [0, 3]]), (vec![1, 6], 2));
        assert_eq!(factors(&[[2, 4], [6, 8]]), (vec![2, 4], 2));
        assert_eq!(factors(&[[0, 0], [0, 0]]), (vec![], 0));
        assert_eq!(factors(&[[3, 6], [1, 2]]), (vec![1], 1));
    }

    #[test]
    fn cokernel_examples() {
        assert!(AbelianGroup::cokernel(&IntMatrix::identity(4)).is_trivial());
        let m = IntMatrix::from_columns(3, &[[1, 1, 0], [1, 0, 0]]);
        assert_eq!(AbelianGroup::cokernel(&m), AbelianGroup::free(1));
        let m = IntMatrix::from_rows(1, &[[2]]);
        assert_eq!(AbelianGroup::cokernel(&m).to_string(), "Z/2");
        // no columns at all
        assert_eq!(
            AbelianGroup::cokernel(&IntMatrix::zeros(3, 0)),
            AbelianGroup::free(3)
        );
    }

    #[test]
    fn display() {
        let g = AbelianGroup {
            free_rank: 2,
            torsion: vec![BigInt::from(2), BigInt::from(6)],
        };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
    }

    #[test]
    fn entries_beyond_machine_width() {
        let big = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        let mut m = IntMatrix::zeros(2, 2);
        m.set(0, 0, big.clone());
        m.set(1, 1, big.clone() + 1);
        let snf = m.smith_normal_form();
        assert_eq!(snf.factors, vec![BigInt::one(), big.clone() * (big + 1)]);
    }
}
