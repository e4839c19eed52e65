//! One exhaustive checker per equidistribution identity or bijection claim.
//!
//! Every checker sweeps all of `Sₙ`. Pointwise checks report the first
//! failing permutation in lexicographic order; distribution checks locate
//! the first mismatching key and report the first permutation carrying it.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::dist::{joint_polynomial, set_valued_distribution, SetStatistic, Statistic};
use crate::error::VerifyError;
use crate::perm::Permutation;
use crate::poly::{binomial_expand, MultiPoly};
use crate::signed::{classify, f_map, foata_map, foata_map_inverse, psi1_peel, CaseLabel};
use crate::stats::{cyclic_stats, depth, des, displacement, drp, linear_stats, nexc};
use crate::sweep::{enumerate_sn, fold_sn, Execution};
use crate::triple::{phi_triple_inverse, phi_triple_traced};

/// Largest `n` a theorem check accepts.
pub const MAX_CHECK_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `SUC` and `FIX` have the same set-valued distribution.
    SucFix,
    /// The triple bijection transports `(Êxc, Aexc, F̂ix)` to `(Asc₂, Des, Suc)`.
    Triple,
    /// `(depth, exc)` and `(drp, des)` are jointly equidistributed.
    DepthExcDrpDes,
    /// Signed `depth` enumerates to `(1-q)^(n-1)`.
    SignedDepth,
    /// Signed `drp` enumerates to `(1-q)^(n-1)`.
    SignedDrp,
    /// `f` preserves sign and first letter and carries depth to drp.
    SignBijection,
    /// `depth(w) = depth(w⁻¹) = ½ Σ |w(i) - i|`.
    Displacement,
    /// Drops of `π` become descents of the triple image; trace lemmas hold.
    DropDes,
    /// `êxc + f̂ix`, `asc`, `des` and `exc` all have the Eulerian distribution.
    Eulerian,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::SucFix,
        TheoremId::Triple,
        TheoremId::DepthExcDrpDes,
        TheoremId::SignedDepth,
        TheoremId::SignedDrp,
        TheoremId::SignBijection,
        TheoremId::Displacement,
        TheoremId::DropDes,
        TheoremId::Eulerian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::SucFix => "suc-fix",
            TheoremId::Triple => "triple",
            TheoremId::DepthExcDrpDes => "depth-exc-drp-des",
            TheoremId::SignedDepth => "signed-depth",
            TheoremId::SignedDrp => "signed-drp",
            TheoremId::SignBijection => "sign-bijection",
            TheoremId::Displacement => "displacement",
            TheoremId::DropDes => "drop-des",
            TheoremId::Eulerian => "eulerian",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

/// Outcome of one theorem at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub passed: bool,
    /// First counterexample; always present when `passed` is false.
    pub witness: Option<Permutation>,
    /// Summary such as the verified polynomial, or the failure reason.
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} n={}", self.theorem, self.n)?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        write!(f, " ({:.3} ms)", self.elapsed.as_secs_f64() * 1e3)
    }
}

/// Partial result of a pointwise sweep: first failure in lexicographic order.
type FirstFailure = Option<(Permutation, String)>;

fn pointwise<F>(n: usize, exec: Execution, check: F) -> Result<FirstFailure, VerifyError>
where
    F: Fn(&Permutation) -> Result<(), String> + Sync + Send,
{
    fold_sn(
        n,
        exec,
        || None,
        |acc: FirstFailure, p| match acc {
            Some(_) => acc,
            None => check(p).err().map(|why| (p.clone(), why)),
        },
        |a, b| a.or(b),
    )
}

fn first_matching<F: Fn(&Permutation) -> bool>(n: usize, pred: F) -> Option<Permutation> {
    enumerate_sn(n).ok()?.find(|p| pred(p))
}

struct Outcome {
    passed: bool,
    witness: Option<Permutation>,
    detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome {
            passed: true,
            witness: None,
            detail: detail.into(),
        }
    }

    fn fail(witness: Option<Permutation>, detail: impl Into<String>, n: usize) -> Self {
        // a failing report always names a permutation
        let witness = witness.or_else(|| Permutation::identity(n).ok());
        Outcome {
            passed: false,
            witness,
            detail: detail.into(),
        }
    }

    fn from_failure(failure: FirstFailure, pass_detail: impl Into<String>, n: usize) -> Self {
        match failure {
            None => Outcome::pass(pass_detail),
            Some((p, why)) => Outcome::fail(Some(p), why, n),
        }
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: {got:?} != {want:?}"))
    }
}

/// Runs one checker over all of `Sₙ`, `1 <= n <= 9`.
pub fn check_theorem(id: TheoremId, n: usize, exec: Execution) -> Result<CheckReport, VerifyError> {
    if !(1..=MAX_CHECK_N).contains(&n) {
        return Err(VerifyError::SizeOutOfRange { n, max: MAX_CHECK_N });
    }
    let started = Instant::now();
    let outcome = match id {
        TheoremId::SucFix => check_set_tables(n, exec, SetStatistic::SucPositions, SetStatistic::FixPositions)?,
        TheoremId::Triple => check_triple(n, exec)?,
        TheoremId::DepthExcDrpDes => check_polys(
            n,
            exec,
            &[Statistic::Depth, Statistic::Exc],
            &[Statistic::Drp, Statistic::Des],
            false,
        )?,
        TheoremId::SignedDepth => check_signed(n, exec, Statistic::Depth)?,
        TheoremId::SignedDrp => check_signed(n, exec, Statistic::Drp)?,
        TheoremId::SignBijection => check_sign_bijection(n, exec)?,
        TheoremId::Displacement => {
            let failure = pointwise(n, exec, |w| {
                expect_eq("depth(w⁻¹)", depth(&w.inverse()), depth(w))?;
                expect_eq("displacement", displacement(w), depth(w))
            })?;
            Outcome::from_failure(failure, "", n)
        }
        TheoremId::DropDes => check_drop_des(n, exec)?,
        TheoremId::Eulerian => check_eulerian(n, exec)?,
    };
    Ok(CheckReport {
        theorem: id,
        n,
        passed: outcome.passed,
        witness: outcome.witness,
        detail: outcome.detail,
        elapsed: started.elapsed(),
    })
}

/// Every theorem for every `n` in `1..=n_max`, in a fixed order.
pub fn check_all(n_max: usize, exec: Execution) -> Result<Vec<CheckReport>, VerifyError> {
    let mut reports = Vec::new();
    for id in TheoremId::ALL {
        for n in 1..=n_max {
            reports.push(check_theorem(id, n, exec)?);
        }
    }
    Ok(reports)
}

fn check_set_tables(
    n: usize,
    exec: Execution,
    left: SetStatistic,
    right: SetStatistic,
) -> Result<Outcome, VerifyError> {
    let a = set_valued_distribution(n, left, exec)?;
    let b = set_valued_distribution(n, right, exec)?;
    Ok(match a.first_difference(&b) {
        None => Outcome::pass(format!("keys={}", a.len())),
        Some(key) => {
            let witness = first_matching(n, |p| left.key(p) == key || right.key(p) == key);
            let detail = format!("{left} vs {right} at {key}: {} != {}", a.get(&key), b.get(&key));
            Outcome::fail(witness, detail, n)
        }
    })
}

fn first_poly_witness(n: usize, stats_a: &[Statistic], stats_b: &[Statistic], mono: &[u32]) -> Option<Permutation> {
    let exps = |stats: &[Statistic], p: &Permutation| -> Vec<u32> {
        stats.iter().map(|s| s.value(p) as u32).collect()
    };
    first_matching(n, |p| exps(stats_a, p) == mono || exps(stats_b, p) == mono)
}

fn first_difference(a: &MultiPoly, b: &MultiPoly) -> Option<Vec<u32>> {
    let mut monos: Vec<Vec<u32>> = a
        .terms()
        .into_iter()
        .chain(b.terms())
        .map(|(m, _)| m.clone())
        .collect();
    monos.sort();
    monos.into_iter().find(|m| a.coefficient(m) != b.coefficient(m))
}

fn check_polys(
    n: usize,
    exec: Execution,
    left: &[Statistic],
    right: &[Statistic],
    signed: bool,
) -> Result<Outcome, VerifyError> {
    let a = joint_polynomial(n, left, signed, exec)?;
    let b = joint_polynomial(n, right, signed, exec)?;
    Ok(match first_difference(&a, &b) {
        None => Outcome::pass(format!("[{a}]")),
        Some(m) => Outcome::fail(
            first_poly_witness(n, left, right, &m),
            format!("[{a}] != [{b}]"),
            n,
        ),
    })
}

fn check_signed(n: usize, exec: Execution, stat: Statistic) -> Result<Outcome, VerifyError> {
    let got = joint_polynomial(n, &[stat], true, exec)?;
    let want = binomial_expand(n);
    Ok(match first_difference(&got, &want) {
        None => Outcome::pass(format!("[{got}]")),
        Some(m) => Outcome::fail(
            first_poly_witness(n, &[stat], &[stat], &m),
            format!("[{got}] != [{want}]"),
            n,
        ),
    })
}

fn check_triple(n: usize, exec: Execution) -> Result<Outcome, VerifyError> {
    let failure = pointwise(n, exec, |p| {
        let (image, _) = phi_triple_traced(p);
        let lin = linear_stats(&image);
        let cyc = cyclic_stats(p);
        expect_eq("Asc2 vs Exc-hat", &lin.asc2_values, &cyc.exc_hat_values)?;
        expect_eq("Des vs Aexc", &lin.des_values, &cyc.aexc_values)?;
        expect_eq("Suc vs Fix-hat", &lin.suc_values, &cyc.fix_hat_values)?;
        expect_eq("inverse after forward", &phi_triple_inverse(&image), p)?;
        let pre = phi_triple_inverse(p);
        expect_eq("forward after inverse", &phi_triple_traced(&pre).0, p)
    })?;
    if failure.is_some() {
        return Ok(Outcome::from_failure(failure, "", n));
    }
    check_set_tables(n, exec, SetStatistic::LinearTriple, SetStatistic::CyclicTriple)
}

fn check_drop_des(n: usize, exec: Execution) -> Result<Outcome, VerifyError> {
    let failure = pointwise(n, exec, |p| {
        let (image, trace) = phi_triple_traced(p);
        trace.check_lemmas(p, &image).map_err(|v| v.to_string())?;
        let cyc = cyclic_stats(p);
        expect_eq("iterations vs drops", trace.iterations.len(), cyc.drop_positions.len())?;
        expect_eq("des(image) vs drops", des(&image), cyc.nexc_count)?;
        expect_eq("Des(image) vs Aexc", linear_stats(&image).des_values, cyc.aexc_values)
    })?;
    Ok(Outcome::from_failure(failure, "", n))
}

fn check_sign_bijection(n: usize, exec: Execution) -> Result<Outcome, VerifyError> {
    let twist = |p: &Permutation| p.left_adjacent_transposition(1).expect("n >= 2 on class B");
    let images = fold_sn(
        n,
        exec,
        || (Vec::new(), None),
        |(mut ranks, failure): (Vec<u64>, FirstFailure), w| {
            let image = f_map(w);
            ranks.push(image.rank());
            if failure.is_some() {
                return (ranks, failure);
            }
            let check = || -> Result<(), String> {
                expect_eq("first letter", image.first_letter(), w.first_letter())?;
                expect_eq("sign", image.sign(), w.sign())?;
                expect_eq("drp(f(w)) vs depth(w)", drp(&image), depth(w))?;

                let v = foata_map(w);
                expect_eq("foata roundtrip", &foata_map_inverse(&v), w)?;
                expect_eq("foata first letter", v.first_letter(), w.first_letter())?;
                expect_eq("nexc(w) vs des(foata(w))", nexc(w), des(&v))?;
                expect_eq("depth(w) vs drp(foata(w))", depth(w), drp(&v))?;

                match classify(w) {
                    CaseLabel::B => {
                        let tw = twist(w);
                        expect_eq("twist stays in B", classify(&tw), CaseLabel::B)?;
                        expect_eq("foata commutes with twist", foata_map(&tw), twist(&v))?;
                        expect_eq("depth of twin", depth(&tw), depth(w))?;
                        expect_eq("drp of twin", drp(&tw), drp(w))?;
                    }
                    CaseLabel::A1 => check_peel_steps(w)?,
                    CaseLabel::A2 => {}
                }
                Ok(())
            };
            let failure = check().err().map(|why| (w.clone(), why));
            (ranks, failure)
        },
        |(mut ra, fa), (rb, fb)| {
            ra.extend(rb);
            (ra, fa.or(fb))
        },
    )?;
    let (ranks, failure) = images;
    if failure.is_some() {
        return Ok(Outcome::from_failure(failure, "", n));
    }

    let mut seen = vec![false; ranks.len()];
    for (k, &r) in ranks.iter().enumerate() {
        let slot = &mut seen[r as usize];
        if *slot {
            let w = enumerate_sn(n)?.nth(k);
            return Ok(Outcome::fail(w, format!("image rank {r} hit twice"), n));
        }
        *slot = true;
    }
    Ok(Outcome::pass(format!("images={}", ranks.len())))
}

/// Each peeled transposition lowers both depth and drp by exactly one.
fn check_peel_steps(w: &Permutation) -> Result<(), String> {
    let (trail, _, _) = psi1_peel(w);
    let mut cur = w.clone();
    for &i in trail.indices() {
        let next = cur.left_adjacent_transposition(i).map_err(|e| e.to_string())?;
        expect_eq("peel lowers depth by one", depth(&next) + 1, depth(&cur))?;
        expect_eq("peel lowers drp by one", drp(&next) + 1, drp(&cur))?;
        cur = next;
    }
    Ok(())
}

fn check_eulerian(n: usize, exec: Execution) -> Result<Outcome, VerifyError> {
    let stats = [
        Statistic::ExcHatPlusFixHat,
        Statistic::Asc,
        Statistic::Des,
        Statistic::Exc,
    ];
    let polys = stats
        .iter()
        .map(|&s| joint_polynomial(n, &[s], false, exec))
        .collect::<Result<Vec<_>, _>>()?;
    for (k, p) in polys.iter().enumerate().skip(1) {
        if let Some(m) = first_difference(&polys[0], p) {
            return Ok(Outcome::fail(
                first_poly_witness(n, &[stats[0]], &[stats[k]], &m),
                format!("{} [{}] != {} [{}]", stats[0], polys[0], stats[k], p),
                n,
            ));
        }
    }
    // report the shared polynomial in t
    let mut eulerian = MultiPoly::zero(["t"]);
    for (m, c) in polys[0].terms() {
        eulerian.add_term(m.clone(), c);
    }
    Ok(Outcome::pass(format!("[{eulerian}]")))
}
