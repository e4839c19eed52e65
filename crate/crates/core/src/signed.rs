//! A sign- and first-letter-preserving bijection carrying `depth` to `drp`.
//!
//! `Sₙ` splits by first letter into `A1` (starts with 1), `A2` (starts with
//! 2) and `B` (everything else). On `B` the fundamental transformation is
//! corrected for sign with a `(1,2)` twist; on `A1` the leading identity
//! prefix is peeled off with adjacent transpositions and the remaining
//! suffix is handled as a `B` permutation after standardization; `A2` is
//! conjugated into `A1`.

use std::fmt;

use serde::Serialize;

use crate::error::DomainError;
use crate::perm::{standardize, swap_values_in_place, unstandardize, CycleForm, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CaseLabel {
    A1,
    A2,
    B,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::A1 => "A1",
            CaseLabel::A2 => "A2",
            CaseLabel::B => "B",
        };
        f.write_str(s)
    }
}

pub fn classify(p: &Permutation) -> CaseLabel {
    match p.first_letter() {
        1 => CaseLabel::A1,
        2 => CaseLabel::A2,
        _ => CaseLabel::B,
    }
}

fn require(map: &'static str, p: &Permutation, expected: CaseLabel) -> Result<(), DomainError> {
    let found = classify(p);
    if found == expected {
        Ok(())
    } else {
        Err(DomainError { map, expected, found })
    }
}

/// Adjacent transpositions `t_i = (i, i+1)` recorded in increasing `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TranspositionTrail {
    indices: Vec<usize>,
}

impl TranspositionTrail {
    fn push(&mut self, i: usize) {
        debug_assert!(self.indices.last().is_none_or(|&last| last < i));
        self.indices.push(i);
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Left-multiplies `p` by `t_{i_1} ⋯ t_{i_k}`.
    pub fn apply_left(&self, p: &Permutation) -> Permutation {
        let mut letters = p.letters().to_vec();
        for &i in self.indices.iter().rev() {
            swap_values_in_place(&mut letters, i);
        }
        Permutation::from_vec_unchecked(letters)
    }
}

/// Parenthesis erasure of the canonical cycle form. Preserves the first
/// letter and carries `(nexc, depth)` to `(des, drp)`.
pub fn foata_map(w: &Permutation) -> Permutation {
    Permutation::from_vec_unchecked(w.foata_cycle_form().flatten())
}

pub fn foata_map_inverse(v: &Permutation) -> Permutation {
    CycleForm::from_flattened(v).to_permutation()
}

/// Sign repair of [`foata_map`] on class `B`.
pub fn phi_tilde(w: &Permutation) -> Result<Permutation, DomainError> {
    require("phi-tilde", w, CaseLabel::B)?;
    let image = foata_map(w);
    if image.sign() == w.sign() {
        Ok(image)
    } else {
        let mut letters = image.into_letters();
        swap_values_in_place(&mut letters, 1);
        Ok(Permutation::from_vec_unchecked(letters))
    }
}

/// The peeling loop of [`psi1`]: returns the transpositions applied and the
/// index where the remaining suffix starts, or `None` if the word drained to
/// the identity.
pub fn psi1_peel(w: &Permutation) -> (TranspositionTrail, Permutation, Option<usize>) {
    let mut trail = TranspositionTrail::default();
    let mut letters = w.letters().to_vec();
    let mut i = 1;
    loop {
        while i <= letters.len() && letters[i - 1] == i {
            i += 1;
        }
        if i > letters.len() {
            return (trail, Permutation::from_vec_unchecked(letters), None);
        }
        // values below i are fixed, so letters[i-1] > i
        if letters[i - 1] == i + 1 {
            swap_values_in_place(&mut letters, i);
            trail.push(i);
        } else {
            return (trail, Permutation::from_vec_unchecked(letters), Some(i));
        }
    }
}

/// The bijection on `A1`.
pub fn psi1(w: &Permutation) -> Result<Permutation, DomainError> {
    require("psi1", w, CaseLabel::A1)?;
    let (trail, peeled, split) = psi1_peel(w);
    let core = match split {
        None => peeled,
        Some(i) => {
            let letters = peeled.letters();
            let suffix = &letters[i - 1..];
            let std = standardize(suffix).expect("suffix letters are distinct");
            let mapped = phi_tilde(&std).expect("suffix starts at least two above its minimum");
            let ground: Vec<usize> = (i..=letters.len()).collect();
            let mut out: Vec<usize> = (1..i).collect();
            out.extend(unstandardize(&mapped, &ground).expect("sizes agree"));
            Permutation::from_vec_unchecked(out)
        }
    };
    Ok(trail.apply_left(&core))
}

/// The bijection on `A2`, `(1,2) ∘ psi1 ∘ (1,2)`.
pub fn psi2(w: &Permutation) -> Result<Permutation, DomainError> {
    require("psi2", w, CaseLabel::A2)?;
    let mut letters = w.letters().to_vec();
    swap_values_in_place(&mut letters, 1);
    let inner = psi1(&Permutation::from_vec_unchecked(letters)).expect("twist lands in A1");
    let mut letters = inner.into_letters();
    swap_values_in_place(&mut letters, 1);
    Ok(Permutation::from_vec_unchecked(letters))
}

/// Dispatches on the first-letter class.
pub fn f_map(w: &Permutation) -> Permutation {
    let out = match classify(w) {
        CaseLabel::A1 => psi1(w),
        CaseLabel::A2 => psi2(w),
        CaseLabel::B => phi_tilde(w),
    };
    out.expect("classification matches the dispatched map")
}
