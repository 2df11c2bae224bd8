//! Reduced words in a free group of finite rank.
//!
//! Letters are stored as nonzero `i32`s: `i` is the generator `x_i` and `-i`
//! its inverse. Generators are numbered from 1.

use std::fmt;

use super::AlgebraError;

/// A freely reduced word. The rank of the ambient free group is not stored;
/// it is checked whenever a word is built from raw letters.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<i32>,
}

/// Position of a letter in the total order `x1 < x1^-1 < x2 < x2^-1 < ...`.
#[inline]
fn order_key(letter: i32) -> u32 {
    2 * (letter.unsigned_abs() - 1) + u32::from(letter < 0)
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The generator `x_i`.
    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are numbered from 1");
        Word {
            letters: vec![i as i32],
        }
    }

    /// Freely reduces a raw letter sequence, checking every index against `rank`.
    pub fn reduce<I>(rank: usize, letters: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = i32>,
    {
        let mut out: Vec<i32> = Vec::new();
        for letter in letters {
            let index = letter.unsigned_abs() as usize;
            if letter == 0 || index > rank {
                return Err(AlgebraError::LetterOutOfRange { letter, rank });
            }
            push_reduced(&mut out, letter);
        }
        Ok(Word { letters: out })
    }

    /// Reduces letters already known to be in range.
    pub(crate) fn from_letters_unchecked<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = i32>,
    {
        let mut out = Vec::new();
        for letter in letters {
            debug_assert!(letter != 0);
            push_reduced(&mut out, letter);
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index that occurs, 0 for the identity.
    pub fn max_index(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Product `self * other`, reduced.
    pub fn mul(&self, other: &Word) -> Self {
        let mut out = self.letters.clone();
        out.reserve(other.letters.len());
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    /// `u * self * u^-1`, reduced.
    pub fn conjugate_by(&self, u: &Word) -> Self {
        u.mul(self).mul(&u.inverse())
    }

    /// Strips matching inverse pairs from the two ends.
    pub fn cyclically_reduced(&self) -> Self {
        let l = &self.letters;
        let (mut start, mut end) = (0, l.len());
        while end - start >= 2 && l[start] == -l[end - 1] {
            start += 1;
            end -= 1;
        }
        Word {
            letters: l[start..end].to_vec(),
        }
    }

    /// Canonical representative of the conjugacy class: cyclically reduce,
    /// then take the lexicographically least rotation under the order
    /// `x1 < x1^-1 < x2 < x2^-1 < ...`.
    pub fn cyclic_normal_form(&self) -> Self {
        let reduced = self.cyclically_reduced();
        if reduced.letters.len() < 2 {
            return reduced;
        }
        let keys: Vec<u32> = reduced.letters.iter().map(|&l| order_key(l)).collect();
        let k = least_rotation(&keys);
        let mut letters = Vec::with_capacity(keys.len());
        letters.extend_from_slice(&reduced.letters[k..]);
        letters.extend_from_slice(&reduced.letters[..k]);
        Word { letters }
    }

    /// Conjugacy class of the word up to inversion: the smaller (under
    /// [`Word::cmp_canonical`]) of the normal forms of `w` and `w^-1`.
    pub fn unoriented_class(&self) -> Self {
        let a = self.cyclic_normal_form();
        let b = self.inverse().cyclic_normal_form();
        if b.cmp_canonical(&a).is_lt() {
            b
        } else {
            a
        }
    }

    /// Length-then-lexicographic comparison under the generator order.
    pub fn cmp_canonical(&self, other: &Word) -> std::cmp::Ordering {
        self.letters.len().cmp(&other.letters.len()).then_with(|| {
            let a = self.letters.iter().map(|&l| order_key(l));
            let b = other.letters.iter().map(|&l| order_key(l));
            a.cmp(b)
        })
    }

    /// Image in `Z^rank`.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            v[i] += i64::from(l.signum());
        }
        v
    }

    /// Applies the homomorphism sending `x_i` to `images[i - 1]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out: Vec<i32> = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &m in &img.letters {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut out, -m);
                }
            }
        }
        Word { letters: out }
    }
}

#[inline]
fn push_reduced(out: &mut Vec<i32>, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

/// Booth's algorithm: start index of the lexicographically least rotation.
fn least_rotation(s: &[u32]) -> usize {
    let n = s.len();
    let at = |i: usize| s[i % n];
    let mut failure = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != -1 && sj != at(k + (i + 1) as usize) {
            if sj < at(k + (i + 1) as usize) {
                k = j - (i + 1) as usize;
            }
            i = failure[i as usize];
        }
        if sj != at(k + (i + 1) as usize) {
            // here i == -1
            if sj < at(k) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, &l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(letters: &[i32]) -> Word {
        Word::reduce(4, letters.iter().copied()).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w(&[1, 2, -2]).letters(), &[1]);
        assert!(w(&[]).is_identity());
        assert_eq!(w(&[1, -1, 1]).letters(), &[1]);
    }

    #[test]
    fn out_of_range_letter() {
        assert_eq!(
            Word::reduce(2, [1, 3]),
            Err(AlgebraError::LetterOutOfRange { letter: 3, rank: 2 })
        );
        assert!(Word::reduce(2, [0]).is_err());
    }

    #[test]
    fn cyclic_normal_form_examples() {
        assert_eq!(w(&[1, 2, -1]).cyclic_normal_form(), w(&[2]));
        assert_eq!(w(&[2, 1]).cyclic_normal_form(), w(&[1, 2]));
        assert_eq!(Word::identity().cyclic_normal_form(), Word::identity());
        // x1^-1 sorts after x1 but before x2
        assert_eq!(w(&[2, -1]).cyclic_normal_form(), w(&[-1, 2]));
        assert_eq!(w(&[2, 2, 1]).cyclic_normal_form(), w(&[1, 2, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(w(&[1, -2]).to_string(), "x1 x2^-1");
        assert_eq!(Word::identity().to_string(), "1");
    }

    fn naive_least_rotation(s: &[u32]) -> Vec<u32> {
        (0..s.len())
            .map(|k| s[k..].iter().chain(&s[..k]).copied().collect::<Vec<_>>())
            .min()
            .unwrap()
    }

    fn letters(rank: i32, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
        prop::collection::vec(
            (1..=rank, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i }),
            0..max_len,
        )
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(s in letters(3, 20)) {
            let once = Word::reduce(3, s).unwrap();
            let twice = Word::reduce(3, once.letters().to_vec()).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn normal_form_is_conjugacy_invariant(u in letters(3, 8), v in letters(3, 10)) {
            let u = Word::reduce(3, u).unwrap();
            let v = Word::reduce(3, v).unwrap();
            prop_assert_eq!(v.conjugate_by(&u).cyclic_normal_form(), v.cyclic_normal_form());
        }

        #[test]
        fn booth_matches_brute_force(s in prop::collection::vec(0u32..4, 1..12)) {
            let k = least_rotation(&s);
            let rot: Vec<u32> = s[k..].iter().chain(&s[..k]).copied().collect();
            prop_assert_eq!(rot, naive_least_rotation(&s));
        }
    }
}
