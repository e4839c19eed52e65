//! Linear (one-line) and cyclic (functional) permutation statistics.
//!
//! Every set is returned in ascending order.

use serde::Serialize;

use crate::perm::Permutation;

/// Statistics read off consecutive pairs `(p(i), p(i+1))`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LinearStats {
    /// Positions `i` in `[n-1]` with `p(i) > p(i+1)`.
    pub des_positions: Vec<usize>,
    /// Descent bottoms `p(i+1)`.
    pub des_values: Vec<usize>,
    /// Big-ascent tops `p(i+1) >= p(i) + 2`.
    pub asc2_values: Vec<usize>,
    /// Positions `i` in `[n-1]` with `p(i+1) = p(i) + 1`.
    pub suc_positions: Vec<usize>,
    pub suc_values: Vec<usize>,
    pub asc_count: usize,
}

/// Statistics comparing each position with its image.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CyclicStats {
    pub exc_positions: Vec<usize>,
    pub exc_count: usize,
    /// Values `p(i) > i` for `i` in `[2, n]`.
    pub exc_hat_values: Vec<usize>,
    /// Values `p(i) < i` for `i` in `[2, n]`.
    pub aexc_values: Vec<usize>,
    /// Values `p(i) = i` for `i` in `[2, n]`.
    pub fix_hat_values: Vec<usize>,
    /// Fixed points restricted to positions `[n-1]`.
    pub fix_positions_capped: Vec<usize>,
    /// Positions `i` with `i > p(i)`.
    pub drop_positions: Vec<usize>,
    pub nexc_count: usize,
}

pub fn linear_stats(p: &Permutation) -> LinearStats {
    let mut s = LinearStats::default();
    for (i, pair) in p.letters().windows(2).enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let pos = i + 1;
        if a > b {
            s.des_positions.push(pos);
            s.des_values.push(b);
        } else {
            s.asc_count += 1;
            if b == a + 1 {
                s.suc_positions.push(pos);
                s.suc_values.push(b);
            } else {
                s.asc2_values.push(b);
            }
        }
    }
    s.des_values.sort_unstable();
    s.suc_values.sort_unstable();
    s.asc2_values.sort_unstable();
    s
}

pub fn cyclic_stats(p: &Permutation) -> CyclicStats {
    let n = p.len();
    let mut s = CyclicStats::default();
    for (idx, &x) in p.letters().iter().enumerate() {
        let i = idx + 1;
        if x > i {
            s.exc_positions.push(i);
            if i >= 2 {
                s.exc_hat_values.push(x);
            }
        } else if x < i {
            s.drop_positions.push(i);
            s.aexc_values.push(x);
        } else {
            if i < n {
                s.fix_positions_capped.push(i);
            }
            if i >= 2 {
                s.fix_hat_values.push(x);
            }
        }
    }
    s.exc_count = s.exc_positions.len();
    s.nexc_count = s.drop_positions.len();
    s.exc_hat_values.sort_unstable();
    s.aexc_values.sort_unstable();
    s.fix_hat_values.sort_unstable();
    s
}

/// Number of descents.
pub fn des(p: &Permutation) -> usize {
    p.letters().windows(2).filter(|w| w[0] > w[1]).count()
}

/// Number of excedances.
pub fn exc(p: &Permutation) -> usize {
    p.letters()
        .iter()
        .enumerate()
        .filter(|&(i, &x)| x > i + 1)
        .count()
}

/// Number of drops, `#{i : p(i) < i}`.
pub fn nexc(p: &Permutation) -> usize {
    p.letters()
        .iter()
        .enumerate()
        .filter(|&(i, &x)| x < i + 1)
        .count()
}

/// Total excedance height.
pub fn depth(p: &Permutation) -> usize {
    p.letters()
        .iter()
        .enumerate()
        .map(|(i, &x)| x.saturating_sub(i + 1))
        .sum()
}

/// Total descent height `sum of p(i) - p(i+1)` over descents.
pub fn drp(p: &Permutation) -> usize {
    p.letters()
        .windows(2)
        .map(|w| w[0].saturating_sub(w[1]))
        .sum()
}

/// Half of the total displacement `sum |p(i) - i|`.
pub fn displacement(p: &Permutation) -> usize {
    let total: usize = p
        .letters()
        .iter()
        .enumerate()
        .map(|(i, &x)| x.abs_diff(i + 1))
        .sum();
    debug_assert!(total.is_multiple_of(2));
    total / 2
}

/// Everything the `stats` command reports, in a fixed key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsReport {
    pub n: usize,
    pub permutation: Vec<usize>,
    pub first_letter: usize,
    pub des_positions: Vec<usize>,
    pub des_values: Vec<usize>,
    pub des: usize,
    pub asc: usize,
    pub asc2: Vec<usize>,
    pub suc_positions: Vec<usize>,
    pub suc_values: Vec<usize>,
    pub exc_positions: Vec<usize>,
    pub exc: usize,
    pub exc_hat: Vec<usize>,
    pub aexc: Vec<usize>,
    pub fix_hat: Vec<usize>,
    pub fix_positions: Vec<usize>,
    pub drop_positions: Vec<usize>,
    pub nexc: usize,
    pub depth: usize,
    pub drp: usize,
    pub displacement: usize,
    pub inv: usize,
    pub sign: i8,
}

impl StatsReport {
    pub fn new(p: &Permutation) -> Self {
        let lin = linear_stats(p);
        let cyc = cyclic_stats(p);
        StatsReport {
            n: p.len(),
            permutation: p.letters().to_vec(),
            first_letter: p.first_letter(),
            des: lin.des_positions.len(),
            des_positions: lin.des_positions,
            des_values: lin.des_values,
            asc: lin.asc_count,
            asc2: lin.asc2_values,
            suc_positions: lin.suc_positions,
            suc_values: lin.suc_values,
            exc_positions: cyc.exc_positions,
            exc: cyc.exc_count,
            exc_hat: cyc.exc_hat_values,
            aexc: cyc.aexc_values,
            fix_hat: cyc.fix_hat_values,
            fix_positions: cyc.fix_positions_capped,
            drop_positions: cyc.drop_positions,
            nexc: cyc.nexc_count,
            depth: depth(p),
            drp: drp(p),
            displacement: displacement(p),
            inv: p.inversions(),
            sign: p.sign(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(xs: &[usize]) -> Permutation {
        Permutation::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn linear_examples() {
        let s = linear_stats(&perm(&[4, 6, 2, 3, 1, 5]));
        assert_eq!(s.asc2_values, vec![5, 6]);
        assert_eq!(s.des_values, vec![1, 2]);
        assert_eq!(s.suc_values, vec![3]);
        assert_eq!(s.des_positions, vec![2, 4]);

        let s = linear_stats(&perm(&[1, 2, 3, 4]));
        assert!(s.asc2_values.is_empty());
        assert!(s.des_positions.is_empty());
        assert_eq!(s.suc_values, vec![2, 3, 4]);
        assert_eq!(s.suc_positions, vec![1, 2, 3]);
        assert_eq!(s.asc_count, 3);

        let s = linear_stats(&perm(&[2, 1, 3]));
        assert_eq!(s.des_positions, vec![1]);
        assert_eq!(s.des_values, vec![1]);
        assert_eq!(s.asc2_values, vec![3]);
        assert!(s.suc_values.is_empty());
    }

    #[test]
    fn cyclic_examples() {
        let s = cyclic_stats(&perm(&[4, 5, 3, 1, 6, 2]));
        assert_eq!(s.exc_hat_values, vec![5, 6]);
        assert_eq!(s.aexc_values, vec![1, 2]);
        assert_eq!(s.fix_hat_values, vec![3]);
        assert_eq!(s.drop_positions, vec![4, 6]);

        let s = cyclic_stats(&perm(&[1, 2, 3, 4]));
        assert!(s.exc_hat_values.is_empty());
        assert!(s.aexc_values.is_empty());
        assert_eq!(s.fix_hat_values, vec![2, 3, 4]);
        assert_eq!(s.fix_positions_capped, vec![1, 2, 3]);
        assert_eq!(s.nexc_count, 0);

        let s = cyclic_stats(&perm(&[2, 3, 1]));
        assert_eq!(s.exc_hat_values, vec![3]);
        assert_eq!(s.aexc_values, vec![1]);
        assert!(s.fix_hat_values.is_empty());
        assert_eq!(s.drop_positions, vec![3]);
    }

    #[test]
    fn height_statistics() {
        let w = perm(&[8, 9, 1, 6, 2, 4, 3, 7, 5]);
        assert_eq!(depth(&w), 16);
        assert_eq!(displacement(&w), 16);
        assert_eq!(drp(&perm(&[8, 7, 3, 1, 9, 5, 2, 6, 4])), 16);
        assert_eq!(depth(&perm(&[4, 5, 3, 1, 6, 2])), 7);
        assert_eq!(drp(&perm(&[4, 6, 2, 3, 1, 5])), 6);
        assert_eq!(displacement(&perm(&[2, 1])), 1);
        let id = perm(&[1, 2, 3]);
        assert_eq!((depth(&id), drp(&id), displacement(&id)), (0, 0, 0));
    }

    #[test]
    fn single_letter() {
        let p = perm(&[1]);
        let r = StatsReport::new(&p);
        assert!(r.des_positions.is_empty() && r.exc_hat.is_empty() && r.fix_hat.is_empty());
        assert!(r.fix_positions.is_empty());
        assert_eq!(r.depth, 0);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..=10)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    fn union_sorted(parts: &[&[usize]]) -> Vec<usize> {
        let mut v: Vec<usize> = parts.iter().flat_map(|s| s.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    proptest! {
        #[test]
        fn depth_identities(p in arb_perm()) {
            prop_assert_eq!(depth(&p), displacement(&p));
            prop_assert_eq!(depth(&p), depth(&p.inverse()));
        }

        #[test]
        fn counting_identities(p in arb_perm()) {
            let lin = linear_stats(&p);
            let cyc = cyclic_stats(&p);
            let n = p.len();
            let fixed = p.letters().iter().enumerate().filter(|&(i, &x)| x == i + 1).count();
            prop_assert_eq!(cyc.exc_count + cyc.nexc_count + fixed, n);
            prop_assert_eq!(cyc.nexc_count, cyc.aexc_values.len());
            prop_assert_eq!(lin.des_positions.len(), lin.des_values.len());
            prop_assert_eq!(lin.asc_count + lin.des_positions.len(), n - 1);
            prop_assert!(drp(&p) >= lin.des_positions.len());
            prop_assert!(depth(&p) >= cyc.exc_count);
            prop_assert_eq!(des(&p), lin.des_positions.len());
            prop_assert_eq!(exc(&p), cyc.exc_count);
            prop_assert_eq!(nexc(&p), cyc.nexc_count);
            let mut image: Vec<usize> = cyc.drop_positions.iter().map(|&i| p.at(i)).collect();
            image.sort_unstable();
            prop_assert_eq!(&image, &cyc.aexc_values);
        }

        #[test]
        fn value_sets_partition_the_tail(p in arb_perm()) {
            let lin = linear_stats(&p);
            let cyc = cyclic_stats(&p);
            let mut tail = p.letters()[1..].to_vec();
            tail.sort_unstable();
            prop_assert_eq!(
                union_sorted(&[&lin.asc2_values, &lin.des_values, &lin.suc_values]),
                tail.clone()
            );
            prop_assert_eq!(
                union_sorted(&[&cyc.exc_hat_values, &cyc.aexc_values, &cyc.fix_hat_values]),
                tail
            );
        }

        #[test]
        fn heights_equal_counts_only_for_unit_steps(p in arb_perm()) {
            let unit_descents = p.letters().windows(2).all(|w| w[0] <= w[1] || w[0] == w[1] + 1);
            prop_assert_eq!(drp(&p) == des(&p), unit_descents);
            let unit_exc = p.letters().iter().enumerate().all(|(i, &x)| x <= i + 2);
            prop_assert_eq!(depth(&p) == exc(&p), unit_exc);
        }
    }
}
