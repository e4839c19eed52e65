//! Sparse multivariate polynomials with exact integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Graded lexicographic order: total degree first, then lexicographic.
fn grlex(a: &Monomial, b: &Monomial) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// A polynomial over a fixed list of variable names. Zero coefficients are
/// never stored, so equality is equality of term sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    variables: Vec<String>,
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Self {
        MultiPoly {
            variables: variables.into_iter().map(Into::into).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Self {
        let mut p = Self::zero(variables);
        let arity = p.variables.len();
        p.add_term(vec![0; arity], 1);
        p
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> Vec<(&Monomial, i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, &c)| (m, c)).collect();
        v.sort_by(|a, b| grlex(a.0, b.0));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients, i.e. the value at all ones.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exponents: Monomial, coefficient: i64) {
        assert_eq!(exponents.len(), self.variables.len(), "arity mismatch");
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_variables(&self, other: &MultiPoly) {
        assert_eq!(self.variables, other.variables, "variable lists differ");
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        self.assert_same_variables(rhs);
        for (m, &c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_variables(rhs);
        let mut out = MultiPoly::zero(self.variables.iter().cloned());
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

/// `(1 - q)^(n-1)`, computed by repeated multiplication.
pub fn binomial_expand(n: usize) -> MultiPoly {
    assert!(n >= 1, "n must be positive");
    let one_minus_q = {
        let mut p = MultiPoly::one(["q"]);
        p.add_term(vec![1], -1);
        p
    };
    let mut acc = MultiPoly::one(["q"]);
    for _ in 1..n {
        acc = &acc * &one_minus_q;
    }
    acc
}

/// Renders e.g. `1 - 2q + q^2` or `1 + 2qt + q^2t^2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.terms().into_iter().enumerate() {
            let abs = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = mono.iter().all(|&e| e == 0);
            if abs != 1 || constant {
                write!(f, "{abs}")?;
            }
            for (var, &e) in self.variables.iter().zip(mono) {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coefficient: i64,
}

/// Wire form: `{"variables": [...], "terms": [{"exponents": [...], "coefficient": c}]}`
/// with terms in graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        PolyJson {
            variables: p.variables.clone(),
            terms: p
                .terms()
                .into_iter()
                .map(|(m, c)| TermJson {
                    exponents: m.clone(),
                    coefficient: c,
                })
                .collect(),
        }
    }
}

impl From<PolyJson> for MultiPoly {
    fn from(j: PolyJson) -> Self {
        let mut p = MultiPoly::zero(j.variables);
        for t in j.terms {
            p.add_term(t.exponents, t.coefficient);
        }
        p
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        PolyJson::deserialize(deserializer).map(MultiPoly::from)
    }
}
