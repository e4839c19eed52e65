//! The bijection carrying `(Êxc, Aexc, F̂ix)` to `(Asc₂, Des, Suc)`.
//!
//! The forward map splits `{0} ∪ [n]` into increasing words, then repeatedly
//! glues the word with the largest first letter onto a host chosen by the
//! drop bi-word, until a single word `0, σ₁, …, σₙ` remains. Each glue creates
//! exactly one descent, which is what moves drops onto descents.

use std::cmp::Reverse;
use std::fmt;

use crate::perm::{write_joined, Permutation};

/// An increasing-then-merged word over `{0} ∪ [n]` with distinct letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(Vec<usize>);

impl Word {
    fn singleton(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("words are nonempty")
    }

    fn append(&mut self, other: Word) {
        self.0.extend(other.0);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_joined(f, &self.0, ",")?;
        write!(f, "]")
    }
}

/// Words with pairwise disjoint letters, kept in decreasing order of last letter.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordList(Vec<Word>);

impl WordList {
    fn from_unsorted(mut words: Vec<Word>) -> Self {
        words.sort_unstable_by_key(|w| Reverse(w.last()));
        WordList(words)
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn resort(&mut self) {
        self.0.sort_unstable_by_key(|w| Reverse(w.last()));
    }
}

impl fmt::Display for WordList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Drop positions (descending) over their images.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DropBiword {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl DropBiword {
    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    fn remove_column(&mut self, idx: usize) {
        self.top.remove(idx);
        self.bottom.remove(idx);
    }
}

impl fmt::Display for DropBiword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.top.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        write_joined(f, &self.top, " ")?;
        write!(f, " / ")?;
        write_joined(f, &self.bottom, " ")?;
        write!(f, ")")
    }
}

/// One glue step of the forward map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iteration {
    pub pick: Word,
    /// 1-based column of `pick.first()` in the current bottom row, which is
    /// also the 1-based rank of the host among the remaining words.
    pub rank: usize,
    pub host: Word,
}

impl Iteration {
    /// `(L(host), F(pick))`.
    pub fn junction(&self) -> (usize, usize) {
        (self.host.last(), self.pick.first())
    }
}

impl fmt::Display for Iteration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = self.junction();
        write!(
            f,
            "pick={} Y={} host={} junction={}>{}",
            self.pick, self.rank, self.host, l, r
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTrace {
    pub initial_words: WordList,
    pub initial_biword: DropBiword,
    pub iterations: Vec<Iteration>,
}

/// A structural lemma of the forward map that failed on some input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaViolation {
    /// Top row of the drop bi-word differs from `{L(w)+1 : L(w) != n}`.
    TopRow { top: Vec<usize>, expected: Vec<usize> },
    /// Fewer than `Y+1` initial words end at or above the bottom-row entry `x`.
    Availability { value: usize, column: usize, words: usize },
    /// A glue step did not create a descent.
    Junction { iteration: usize, host_last: usize, pick_first: usize },
    /// Number of glue steps differs from the number of drops or from the
    /// number of descents of the image.
    IterationCount { iterations: usize, drops: usize, descents: usize },
}

impl fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaViolation::TopRow { top, expected } => {
                write!(f, "top row {top:?} != {expected:?}")
            }
            LemmaViolation::Availability { value, column, words } => write!(
                f,
                "bottom entry {value} in column {column} has only {words} words ending at or above it"
            ),
            LemmaViolation::Junction { iteration, host_last, pick_first } => write!(
                f,
                "iteration {iteration}: junction {host_last}>{pick_first} fails"
            ),
            LemmaViolation::IterationCount { iterations, drops, descents } => write!(
                f,
                "{iterations} iterations, {drops} drops, {descents} descents"
            ),
        }
    }
}

impl PhiTrace {
    /// Checks the top-row, availability and junction lemmas against the
    /// permutation `source` that produced this trace and its `image`.
    pub fn check_lemmas(&self, source: &Permutation, image: &Permutation) -> Result<(), LemmaViolation> {
        let n = source.len();
        let mut expected: Vec<usize> = self
            .initial_words
            .words()
            .iter()
            .filter(|w| w.last() != n)
            .map(|w| w.last() + 1)
            .collect();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        if expected != self.initial_biword.top {
            return Err(LemmaViolation::TopRow {
                top: self.initial_biword.top.clone(),
                expected,
            });
        }

        for (col, &x) in self.initial_biword.bottom.iter().enumerate() {
            let words = self
                .initial_words
                .words()
                .iter()
                .filter(|w| w.last() >= x)
                .count();
            if words < col + 2 {
                return Err(LemmaViolation::Availability {
                    value: x,
                    column: col + 1,
                    words,
                });
            }
        }

        for (k, it) in self.iterations.iter().enumerate() {
            let (host_last, pick_first) = it.junction();
            if host_last <= pick_first {
                return Err(LemmaViolation::Junction {
                    iteration: k,
                    host_last,
                    pick_first,
                });
            }
        }

        let drops = self.initial_biword.len();
        let descents = crate::stats::des(image);
        if self.iterations.len() != drops || descents != drops {
            return Err(LemmaViolation::IterationCount {
                iterations: self.iterations.len(),
                drops,
                descents,
            });
        }
        Ok(())
    }
}

impl fmt::Display for PhiTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "words: {}", self.initial_words)?;
        writeln!(f, "biword: {}", self.initial_biword)?;
        writeln!(f, "iterations: {}", self.iterations.len())?;
        for it in &self.iterations {
            writeln!(f, "{it}")?;
        }
        Ok(())
    }
}

/// Splits `{0} ∪ [n]` into increasing words: `x` opens a new word when
/// `p⁻¹(x) > x` and otherwise extends the word currently ending in `p⁻¹(x) - 1`.
pub fn initial_words(p: &Permutation) -> WordList {
    let n = p.len();
    let inv = p.inverse();
    let mut words = vec![Word::singleton(0)];
    // word index by current last letter
    let mut ending_in: Vec<Option<usize>> = vec![None; n + 1];
    ending_in[0] = Some(0);
    for x in 1..=n {
        let pos = inv.at(x);
        if pos > x {
            ending_in[x] = Some(words.len());
            words.push(Word::singleton(x));
        } else {
            let tail = pos - 1;
            let idx = ending_in[tail]
                .take()
                .unwrap_or_else(|| panic!("letter {tail} is not the end of any word"));
            words[idx].0.push(x);
            ending_in[x] = Some(idx);
        }
    }
    WordList::from_unsorted(words)
}

pub fn drop_biword(p: &Permutation) -> DropBiword {
    let top: Vec<usize> = (1..=p.len()).rev().filter(|&i| i > p.at(i)).collect();
    let bottom = top.iter().map(|&i| p.at(i)).collect();
    DropBiword { top, bottom }
}

/// The forward map together with its full iteration trace.
pub fn phi_triple_traced(p: &Permutation) -> (Permutation, PhiTrace) {
    let initial = initial_words(p);
    let biword = drop_biword(p);
    let mut words = initial.clone();
    let mut omega = biword.clone();
    let mut iterations = Vec::with_capacity(omega.len());

    while words.len() > 1 {
        let pick_idx = (0..words.len())
            .max_by_key(|&k| words.0[k].first())
            .expect("at least two words");
        let pick = words.0.remove(pick_idx);
        let column = omega
            .bottom
            .iter()
            .position(|&x| x == pick.first())
            .expect("first letter of a picked word lies in the bottom row");
        let host = &mut words.0[column];
        iterations.push(Iteration {
            pick: pick.clone(),
            rank: column + 1,
            host: host.clone(),
        });
        host.append(pick);
        omega.remove_column(column);
        words.resort();
    }

    let last = words.0.pop().expect("one word remains");
    debug_assert_eq!(last.first(), 0);
    let image = Permutation::from_vec_unchecked(last.0[1..].to_vec());
    let trace = PhiTrace {
        initial_words: initial,
        initial_biword: biword,
        iterations,
    };
    (image, trace)
}

pub fn phi_triple(p: &Permutation) -> Permutation {
    phi_triple_traced(p).0
}

/// Inverse of [`phi_triple`].
///
/// The ascent blocks of `0, s` are the initial words. Inside a block,
/// consecutive letters `a, b` give `π(a + 1) = b`. The glue steps are then
/// replayed in decreasing order of first letter: the host of each block is
/// the current word ending in the letter just before it in `s`, and the
/// host's rank selects which remaining top-row position maps to the block's
/// first letter.
pub fn phi_triple_inverse(s: &Permutation) -> Permutation {
    let n = s.len();
    let mut word = Vec::with_capacity(n + 1);
    word.push(0);
    word.extend_from_slice(s.letters());

    let mut image = vec![0usize; n + 1];
    // (first letter, current last letter) of each live word
    let mut live: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=word.len() {
        if k == word.len() || word[k] < word[k - 1] {
            let block = &word[start..k];
            for pair in block.windows(2) {
                image[pair[0] + 1] = pair[1];
            }
            live.push((block[0], *block.last().unwrap()));
            start = k;
        }
    }

    let mut top: Vec<usize> = live
        .iter()
        .filter(|&&(_, last)| last != n)
        .map(|&(_, last)| last + 1)
        .collect();
    top.sort_unstable_by(|a, b| b.cmp(a));

    let mut predecessor = vec![0usize; n + 1];
    for pair in word.windows(2) {
        predecessor[pair[1]] = pair[0];
    }

    let mut firsts: Vec<usize> = live.iter().map(|&(f, _)| f).filter(|&f| f != 0).collect();
    firsts.sort_unstable_by(|a, b| b.cmp(a));

    for alpha in firsts {
        let w_idx = live.iter().position(|&(f, _)| f == alpha).unwrap();
        let (_, w_last) = live.swap_remove(w_idx);
        let before = predecessor[alpha];
        let rank = live.iter().filter(|&&(_, last)| last > before).count();
        let host = live
            .iter_mut()
            .find(|(_, last)| *last == before)
            .expect("the letter before a block ends a live word");
        image[top.remove(rank)] = alpha;
        host.1 = w_last;
    }
    debug_assert!(top.is_empty());

    Permutation::from_vec_unchecked(image[1..].to_vec())
}
