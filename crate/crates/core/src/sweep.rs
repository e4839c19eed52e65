//! Exhaustive enumeration of `Sₙ` and fold/reduce over it.
//!
//! The group is cut into `n` slices by first letter. Each slice is folded
//! on its own and the partial results are reduced left to right, so the
//! outcome is identical under both execution modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::VerifyError;
use crate::perm::Permutation;

/// Largest `n` accepted by [`enumerate_sn`].
pub const MAX_ENUMERATION_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Slices run on the rayon pool. Without the `parallel` feature this
    /// runs sequentially.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Lexicographic successor in place; false once the last permutation is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a larger suffix letter");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Lexicographic iterator over a range of `Sₙ`.
#[derive(Debug, Clone)]
pub struct Lexicographic {
    next: Option<Vec<usize>>,
    first_letter: Option<usize>,
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) && self.first_letter.is_none_or(|a| succ[0] == a) {
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}

fn check_n(n: usize) -> Result<(), VerifyError> {
    if (1..=MAX_ENUMERATION_N).contains(&n) {
        Ok(())
    } else {
        Err(VerifyError::SizeOutOfRange {
            n,
            max: MAX_ENUMERATION_N,
        })
    }
}

/// All of `Sₙ` in lexicographic order.
pub fn enumerate_sn(n: usize) -> Result<Lexicographic, VerifyError> {
    check_n(n)?;
    Ok(Lexicographic {
        next: Some((1..=n).collect()),
        first_letter: None,
    })
}

/// The permutations of `Sₙ` beginning with `first`, in lexicographic order.
pub fn enumerate_slice(n: usize, first: usize) -> Result<Lexicographic, VerifyError> {
    check_n(n)?;
    assert!((1..=n).contains(&first), "first letter out of range");
    let mut start = vec![first];
    start.extend((1..=n).filter(|&x| x != first));
    Ok(Lexicographic {
        next: Some(start),
        first_letter: Some(first),
    })
}

/// Folds every permutation of `Sₙ` into an accumulator, slice by slice, and
/// reduces the slice results in first-letter order.
pub fn fold_sn<A, Id, F, R>(
    n: usize,
    exec: Execution,
    identity: Id,
    fold: F,
    reduce: R,
) -> Result<A, VerifyError>
where
    A: Send,
    Id: Fn() -> A + Sync + Send,
    F: Fn(A, &Permutation) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    check_n(n)?;
    let slice = |first: usize| {
        enumerate_slice(n, first)
            .expect("n already checked")
            .fold(identity(), |acc, p| fold(acc, &p))
    };
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => Ok((1..=n)
            .into_par_iter()
            .map(slice)
            .reduce(&identity, &reduce)),
        _ => Ok((1..=n).map(slice).fold(identity(), &reduce)),
    }
}

/// Maps every permutation, returning results in lexicographic order.
pub fn map_sn<T, F>(n: usize, exec: Execution, f: F) -> Result<Vec<T>, VerifyError>
where
    T: Send,
    F: Fn(&Permutation) -> T + Sync + Send,
{
    fold_sn(
        n,
        exec,
        Vec::new,
        |mut acc, p| {
            acc.push(f(p));
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}
