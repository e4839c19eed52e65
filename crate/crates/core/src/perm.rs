//! One-line permutations of `[n]`, their group operations and cycle machinery.
//!
//! Positions and values are 1-indexed throughout. `compose(p, q)` is function
//! composition with `q` applied first, so `compose(p, q)(i) = p(q(i))`.

use std::fmt;
use std::str::FromStr;

use crate::error::PermError;

/// A permutation of `[n]` in one-line notation, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    letters: Vec<usize>,
}

impl Permutation {
    /// Validates `letters` as a rearrangement of `1..=n`.
    pub fn new(letters: Vec<usize>) -> Result<Self, PermError> {
        let n = letters.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            if x == 0 || x > n {
                return Err(PermError::OutOfRange { value: x, n });
            }
            if seen[x] {
                return Err(PermError::Duplicate(x));
            }
            seen[x] = true;
        }
        Ok(Permutation { letters })
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok());
        Permutation { letters }
    }

    pub fn identity(n: usize) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        Ok(Permutation {
            letters: (1..=n).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing clippy expects.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    /// The image `p(i)` of a 1-indexed position.
    ///
    /// Panics if `i` is outside `1..=n`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.letters[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn first_letter(&self) -> usize {
        self.letters[0]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.letters.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { letters: inv }
    }

    /// `compose(self, other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != other.len() {
            return Err(PermError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            letters: other.letters.iter().map(|&x| self.at(x)).collect(),
        })
    }

    /// Left multiplication by the adjacent transposition `(i, i+1)`: the
    /// letters of value `i` and `i + 1` trade places in the one-line word.
    pub fn left_adjacent_transposition(&self, i: usize) -> Result<Permutation, PermError> {
        let n = self.len();
        if i == 0 || i >= n {
            return Err(PermError::IndexOutOfRange { index: i, n });
        }
        let mut letters = self.letters.clone();
        swap_values_in_place(&mut letters, i);
        Ok(Permutation { letters })
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`, by merge counting.
    pub fn inversions(&self) -> usize {
        let mut buf = self.letters.clone();
        let mut scratch = vec![0; buf.len()];
        merge_count(&mut buf, &mut scratch)
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle decomposition with each cycle ending in its minimum and cycles
    /// sorted by increasing minimum.
    pub fn foata_cycle_form(&self) -> CycleForm {
        let n = self.len();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for m in 1..=n {
            if visited[m] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = self.at(m);
            loop {
                visited[x] = true;
                cycle.push(x);
                if x == m {
                    break;
                }
                x = self.at(x);
            }
            cycles.push(cycle);
        }
        CycleForm { cycles }
    }

    /// Ascending positions `i` with `p(i) < p(j)` for every `j > i`.
    pub fn right_to_left_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for (idx, &x) in self.letters.iter().enumerate().rev() {
            if x < min {
                min = x;
                out.push(idx + 1);
            }
        }
        out.reverse();
        out
    }

    /// Lexicographic rank in `0..n!`.
    pub fn rank(&self) -> u64 {
        let n = self.len();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller_after = self.letters[i + 1..]
                .iter()
                .filter(|&&y| y < self.letters[i])
                .count() as u64;
            rank = rank * (n - i) as u64 + smaller_after;
        }
        rank
    }
}

pub(crate) fn swap_values_in_place(letters: &mut [usize], i: usize) {
    for x in letters.iter_mut() {
        if *x == i {
            *x = i + 1;
        } else if *x == i + 1 {
            *x = i;
        }
    }
}

fn merge_count(buf: &mut [usize], scratch: &mut [usize]) -> usize {
    let n = buf.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (lo, hi) = buf.split_at_mut(mid);
        let (slo, shi) = scratch.split_at_mut(mid);
        merge_count(lo, slo) + merge_count(hi, shi)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if buf[i] <= buf[j] {
            scratch[k] = buf[i];
            i += 1;
        } else {
            scratch[k] = buf[j];
            count += mid - i;
            j += 1;
        }
        k += 1;
    }
    scratch[k..k + mid - i].copy_from_slice(&buf[i..mid]);
    k += mid - i;
    scratch[k..k + n - j].copy_from_slice(&buf[j..n]);
    buf.copy_from_slice(&scratch[..n]);
    count
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.letters, ",")
    }
}

/// Parses one-line notation separated by whitespace and/or commas.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for token in s.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let x = Some(token)
                .filter(|t| t.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| PermError::Parse(token.to_string()))?;
            letters.push(x);
        }
        Permutation::new(letters)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(letters: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(letters)
    }
}

/// Canonical cycle notation used by the fundamental transformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForm {
    cycles: Vec<Vec<usize>>,
}

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// The word obtained by erasing parentheses.
    pub fn flatten(&self) -> Vec<usize> {
        self.cycles.iter().flatten().copied().collect()
    }

    /// Reads a flattened word back into cycles by cutting it after each
    /// right-to-left minimum.
    pub fn from_flattened(word: &Permutation) -> CycleForm {
        let mut cycles = Vec::new();
        let mut start = 0;
        for pos in word.right_to_left_minima() {
            cycles.push(word.letters()[start..pos].to_vec());
            start = pos;
        }
        CycleForm { cycles }
    }

    /// The permutation whose cycles these are.
    pub fn to_permutation(&self) -> Permutation {
        let n: usize = self.cycles.iter().map(Vec::len).sum();
        let mut letters = vec![0; n];
        for cycle in &self.cycles {
            for (k, &x) in cycle.iter().enumerate() {
                letters[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_vec_unchecked(letters)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            write_joined(f, cycle, " ")?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[usize], sep: &str) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Order-isomorphic relabelling of a distinct-letter word onto `[m]`.
pub fn standardize(word: &[usize]) -> Result<Permutation, PermError> {
    if word.is_empty() {
        return Err(PermError::Empty);
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_unstable_by_key(|&k| word[k]);
    let mut letters = vec![0; word.len()];
    for (rank, &k) in order.iter().enumerate() {
        if rank > 0 && word[order[rank - 1]] == word[k] {
            return Err(PermError::Duplicate(word[k]));
        }
        letters[k] = rank + 1;
    }
    Ok(Permutation { letters })
}

/// Inverse of [`standardize`] for a given ascending ground set.
pub fn unstandardize(p: &Permutation, ground: &[usize]) -> Result<Vec<usize>, PermError> {
    if ground.len() != p.len() {
        return Err(PermError::LengthMismatch {
            left: p.len(),
            right: ground.len(),
        });
    }
    if ground.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PermError::GroundNotAscending);
    }
    Ok(p.letters.iter().map(|&x| ground[x - 1]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(xs: &[usize]) -> Permutation {
        Permutation::new(xs.to_vec()).unwrap()
    }

    fn brute_inversions(p: &Permutation) -> usize {
        let l = p.letters();
        let mut c = 0;
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                if l[i] > l[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn construction_and_validation() {
        assert_eq!(perm(&[4, 5, 3, 1, 6, 2]).len(), 6);
        assert_eq!(perm(&[1]).len(), 1);
        assert_eq!(
            Permutation::new(vec![1, 1, 2]),
            Err(PermError::Duplicate(1))
        );
        assert_eq!(Permutation::new(vec![]), Err(PermError::Empty));
        assert_eq!(
            Permutation::new(vec![0, 1]),
            Err(PermError::OutOfRange { value: 0, n: 2 })
        );
        assert_eq!(
            Permutation::new(vec![1, 3]),
            Err(PermError::OutOfRange { value: 3, n: 2 })
        );
        assert!(Permutation::identity(0).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("4 5 3 1 6 2".parse::<Permutation>().unwrap(), perm(&[4, 5, 3, 1, 6, 2]));
        assert_eq!("4,6, 2 ,3,1,5".parse::<Permutation>().unwrap(), perm(&[4, 6, 2, 3, 1, 5]));
        assert!(matches!("1;2".parse::<Permutation>(), Err(PermError::Parse(_))));
        assert!(matches!("1 -2".parse::<Permutation>(), Err(PermError::Parse(_))));
        assert!(matches!("+1".parse::<Permutation>(), Err(PermError::Parse(_))));
        assert_eq!("  ".parse::<Permutation>(), Err(PermError::Empty));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm(&[4, 5, 3, 1, 6, 2]).inverse(), perm(&[4, 6, 3, 1, 2, 5]));
        assert_eq!(perm(&[1, 2, 3]).inverse(), perm(&[1, 2, 3]));
        assert_eq!(perm(&[2, 1]).inverse(), perm(&[2, 1]));
    }

    #[test]
    fn compose_examples() {
        let tau = perm(&[2, 1, 3]);
        assert_eq!(tau.compose(&perm(&[3, 1, 2])).unwrap(), perm(&[3, 2, 1]));
        let p = perm(&[4, 5, 3, 1, 6, 2]);
        let id = Permutation::identity(6).unwrap();
        assert_eq!(id.compose(&p).unwrap(), p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(
            p.compose(&tau),
            Err(PermError::LengthMismatch { left: 6, right: 3 })
        );
    }

    #[test]
    fn adjacent_transposition_examples() {
        let p = perm(&[1, 3, 4, 2]);
        assert_eq!(p.left_adjacent_transposition(2).unwrap(), perm(&[1, 2, 4, 3]));
        assert_eq!(perm(&[1, 2]).left_adjacent_transposition(1).unwrap(), perm(&[2, 1]));
        let twice = p
            .left_adjacent_transposition(3)
            .unwrap()
            .left_adjacent_transposition(3)
            .unwrap();
        assert_eq!(twice, p);
        assert!(p.left_adjacent_transposition(0).is_err());
        assert!(p.left_adjacent_transposition(4).is_err());
        // agrees with composing by the transposition itself
        let t2 = perm(&[1, 3, 2, 4]);
        assert_eq!(t2.compose(&p).unwrap(), p.left_adjacent_transposition(2).unwrap());
    }

    #[test]
    fn inversions_and_sign() {
        assert_eq!(perm(&[1, 2, 3]).inversions(), 0);
        assert_eq!(perm(&[1, 2, 3]).sign(), 1);
        assert_eq!(perm(&[3, 2, 1]).inversions(), 3);
        assert_eq!(perm(&[3, 2, 1]).sign(), -1);
        let p = perm(&[4, 5, 3, 1, 6, 2]);
        assert_eq!(brute_inversions(&p), 9);
        assert_eq!(p.inversions(), 9);
        assert_eq!(p.sign(), -1);
    }

    #[test]
    fn cycle_form_examples() {
        let w = perm(&[8, 9, 1, 6, 2, 4, 3, 7, 5]);
        assert_eq!(w.foata_cycle_form().to_string(), "(8 7 3 1)(9 5 2)(6 4)");
        assert_eq!(perm(&[1, 2, 3]).foata_cycle_form().to_string(), "(1)(2)(3)");
        // 1 -> 3 -> 2 -> 1 is a single cycle
        assert_eq!(perm(&[3, 1, 2]).foata_cycle_form().to_string(), "(3 2 1)");
        assert_eq!(perm(&[3, 2, 1]).foata_cycle_form().to_string(), "(3 1)(2)");
        assert_eq!(w.foata_cycle_form().to_permutation(), w);
    }

    #[test]
    fn right_to_left_minima_examples() {
        assert_eq!(perm(&[8, 7, 3, 1, 9, 5, 2, 6, 4]).right_to_left_minima(), vec![4, 7, 9]);
        assert_eq!(perm(&[1, 2, 3]).right_to_left_minima(), vec![1, 2, 3]);
        assert_eq!(perm(&[3, 2, 1]).right_to_left_minima(), vec![3]);
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(standardize(&[4, 2, 5, 3]).unwrap(), perm(&[3, 1, 4, 2]));
        assert_eq!(standardize(&[1, 2, 3]).unwrap(), perm(&[1, 2, 3]));
        assert_eq!(standardize(&[9, 5, 2]).unwrap(), perm(&[3, 2, 1]));
        assert_eq!(standardize(&[4, 2, 4]), Err(PermError::Duplicate(4)));

        let g = [2, 3, 4, 5];
        assert_eq!(unstandardize(&perm(&[3, 1, 4, 2]), &g).unwrap(), vec![4, 2, 5, 3]);
        assert_eq!(unstandardize(&perm(&[1, 2, 3, 4]), &g).unwrap(), g.to_vec());
        assert_eq!(unstandardize(&perm(&[3, 4, 2, 1]), &g).unwrap(), vec![4, 5, 3, 2]);
        assert!(unstandardize(&perm(&[1, 2]), &g).is_err());
    }

    #[test]
    fn first_letter_examples() {
        assert_eq!(perm(&[4, 5, 3, 1, 6, 2]).first_letter(), 4);
        assert_eq!(perm(&[1, 2, 3]).first_letter(), 1);
        assert_eq!(perm(&[2, 1]).first_letter(), 2);
    }

    #[test]
    fn rank_is_lexicographic() {
        assert_eq!(perm(&[1, 2, 3]).rank(), 0);
        assert_eq!(perm(&[1, 3, 2]).rank(), 1);
        assert_eq!(perm(&[3, 2, 1]).rank(), 5);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(super) fn arb_perm() -> impl Strategy<Value = Permutation> {
            (1usize..=10)
                .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
                .prop_map(|v| Permutation::new(v).unwrap())
        }

        proptest! {
            #[test]
            fn inverse_is_two_sided(p in arb_perm()) {
                prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
                prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
            }

            #[test]
            fn transposition_flips_sign(p in arb_perm()) {
                for i in 1..p.len() {
                    let q = p.left_adjacent_transposition(i).unwrap();
                    prop_assert_eq!(q.sign(), -p.sign());
                }
            }

            #[test]
            fn merge_count_matches_pair_enumeration(p in arb_perm()) {
                prop_assert_eq!(p.inversions(), brute_inversions(&p));
            }

            #[test]
            fn cycle_form_cuts_at_right_to_left_minima(p in arb_perm()) {
                let form = p.foata_cycle_form();
                let flat = Permutation::new(form.flatten()).unwrap();
                prop_assert_eq!(CycleForm::from_flattened(&flat), form.clone());
                prop_assert_eq!(form.to_permutation(), p);
            }

            #[test]
            fn standardization_roundtrips(p in arb_perm(), offset in 0usize..5, stride in 1usize..4) {
                let ground: Vec<usize> = (0..p.len()).map(|k| offset + 1 + k * stride).collect();
                let word = unstandardize(&p, &ground).unwrap();
                prop_assert_eq!(standardize(&word).unwrap(), p);
                let mut sorted = word.clone();
                sorted.sort_unstable();
                prop_assert_eq!(sorted, ground);
            }
        }
    }
}
