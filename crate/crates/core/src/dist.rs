//! Joint generating polynomials and set-valued histograms over `Sₙ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::VerifyError;
use crate::perm::Permutation;
use crate::poly::MultiPoly;
use crate::stats::{self, cyclic_stats, linear_stats};
use crate::sweep::{fold_sn, Execution};

/// Variable names assigned to statistics by position.
pub const VARIABLES: [&str; 5] = ["q", "t", "x", "y", "s"];

/// Integer-valued statistics usable as exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Depth,
    Drp,
    Exc,
    Des,
    Asc,
    ExcHat,
    Aexc,
    FixHat,
    ExcHatPlusFixHat,
}

impl Statistic {
    pub const ALL: [Statistic; 9] = [
        Statistic::Depth,
        Statistic::Drp,
        Statistic::Exc,
        Statistic::Des,
        Statistic::Asc,
        Statistic::ExcHat,
        Statistic::Aexc,
        Statistic::FixHat,
        Statistic::ExcHatPlusFixHat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Depth => "depth",
            Statistic::Drp => "drp",
            Statistic::Exc => "exc",
            Statistic::Des => "des",
            Statistic::Asc => "asc",
            Statistic::ExcHat => "exc-hat",
            Statistic::Aexc => "aexc",
            Statistic::FixHat => "fix-hat",
            Statistic::ExcHatPlusFixHat => "exc-hat+fix-hat",
        }
    }

    pub fn value(self, p: &Permutation) -> usize {
        let tail = || p.letters().iter().enumerate().skip(1);
        match self {
            Statistic::Depth => stats::depth(p),
            Statistic::Drp => stats::drp(p),
            Statistic::Exc => stats::exc(p),
            Statistic::Des => stats::des(p),
            Statistic::Asc => p.len() - 1 - stats::des(p),
            Statistic::ExcHat => tail().filter(|&(i, &x)| x > i + 1).count(),
            Statistic::Aexc => stats::nexc(p),
            Statistic::FixHat => tail().filter(|&(i, &x)| x == i + 1).count(),
            Statistic::ExcHatPlusFixHat => tail().filter(|&(i, &x)| x > i).count(),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let canonical = match s {
            "êxc" | "exchat" => "exc-hat",
            "f̂ix" | "fixhat" => "fix-hat",
            "êxc+f̂ix" | "exchat+fixhat" => "exc-hat+fix-hat",
            "drops" => "drp",
            other => other,
        };
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == canonical)
            .ok_or_else(|| VerifyError::UnknownStatistic(s.to_string()))
    }
}

fn exponents(stats: &[Statistic], p: &Permutation) -> Vec<u32> {
    stats.iter().map(|s| s.value(p) as u32).collect()
}

/// `Σ_{π ∈ Sₙ} (sign(π) if signed) · ∏ var_k^{stat_k(π)}`.
pub fn joint_polynomial(
    n: usize,
    stats: &[Statistic],
    signed: bool,
    exec: Execution,
) -> Result<MultiPoly, VerifyError> {
    if stats.is_empty() {
        return Err(VerifyError::NoStatistics);
    }
    if stats.len() > VARIABLES.len() {
        return Err(VerifyError::TooManyStatistics {
            got: stats.len(),
            max: VARIABLES.len(),
        });
    }
    let vars = &VARIABLES[..stats.len()];
    fold_sn(
        n,
        exec,
        || MultiPoly::zero(vars.iter().copied()),
        |mut acc, p| {
            let c = if signed { i64::from(p.sign()) } else { 1 };
            acc.add_term(exponents(stats, p), c);
            acc
        },
        |a, b| a + b,
    )
}

/// Set-valued statistics (or fixed tuples of them).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetStatistic {
    /// Succession positions in `[n-1]`.
    SucPositions,
    /// Fixed points in `[n-1]`.
    FixPositions,
    /// `(Asc₂, Des, Suc)` value sets.
    LinearTriple,
    /// `(Êxc, Aexc, F̂ix)` value sets.
    CyclicTriple,
}

impl SetStatistic {
    pub const ALL: [SetStatistic; 4] = [
        SetStatistic::SucPositions,
        SetStatistic::FixPositions,
        SetStatistic::LinearTriple,
        SetStatistic::CyclicTriple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetStatistic::SucPositions => "suc-set",
            SetStatistic::FixPositions => "fix-set",
            SetStatistic::LinearTriple => "asc2-des-suc",
            SetStatistic::CyclicTriple => "exc-aexc-fix-hat",
        }
    }

    pub fn key(self, p: &Permutation) -> SetKey {
        match self {
            SetStatistic::SucPositions => SetKey(vec![linear_stats(p).suc_positions]),
            SetStatistic::FixPositions => SetKey(vec![cyclic_stats(p).fix_positions_capped]),
            SetStatistic::LinearTriple => {
                let s = linear_stats(p);
                SetKey(vec![s.asc2_values, s.des_values, s.suc_values])
            }
            SetStatistic::CyclicTriple => {
                let s = cyclic_stats(p);
                SetKey(vec![s.exc_hat_values, s.aexc_values, s.fix_hat_values])
            }
        }
    }
}

impl fmt::Display for SetStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetStatistic {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SetStatistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| VerifyError::UnknownStatistic(s.to_string()))
    }
}

/// A tuple of ascending integer sets. Renders as `{1,2}|{}|{3}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetKey(pub Vec<Vec<usize>>);

impl fmt::Display for SetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, set) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            crate::perm::write_joined(f, set, ",")?;
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Exact histogram of a set-valued statistic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistributionTable(BTreeMap<SetKey, u64>);

impl DistributionTable {
    pub fn record(&mut self, key: SetKey) {
        *self.0.entry(key).or_insert(0) += 1;
    }

    pub fn merge(mut self, other: DistributionTable) -> DistributionTable {
        for (k, c) in other.0 {
            *self.0.entry(k).or_insert(0) += c;
        }
        self
    }

    pub fn get(&self, key: &SetKey) -> u64 {
        self.0.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SetKey, u64)> {
        self.0.iter().map(|(k, &c)| (k, c))
    }

    /// First key (in key order) whose count differs between the two tables.
    pub fn first_difference(&self, other: &DistributionTable) -> Option<SetKey> {
        self.0
            .keys()
            .chain(other.0.keys())
            .filter(|k| self.get(k) != other.get(k))
            .min()
            .cloned()
    }

    /// Two-column CSV, header `key,count`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["key", "count"]).expect("in-memory write");
        for (k, c) in self.iter() {
            w.write_record([k.to_string(), c.to_string()]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_json(&self, statistic: SetStatistic, n: usize) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row {
            key: String,
            count: u64,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            statistic: &'a str,
            n: usize,
            rows: Vec<Row>,
        }
        let doc = Doc {
            statistic: statistic.name(),
            n,
            rows: self
                .iter()
                .map(|(k, count)| Row {
                    key: k.to_string(),
                    count,
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }
}

pub fn set_valued_distribution(
    n: usize,
    stat: SetStatistic,
    exec: Execution,
) -> Result<DistributionTable, VerifyError> {
    fold_sn(
        n,
        exec,
        DistributionTable::default,
        |mut acc, p| {
            acc.record(stat.key(p));
            acc
        },
        DistributionTable::merge,
    )
}
