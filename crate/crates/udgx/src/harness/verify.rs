//! Randomized cross-verification: for each trial, generate an instance,
//! snap it into exact mode, run the fast solver and the exhaustive oracle,
//! and record any disagreement. All comparisons are exact.

use std::time::Instant;

use num_rational::BigRational;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::biclique::{self, PairMode, WeightedCloud};
use crate::cycle::ConvexInstance;
use crate::dispersion::{solve_dispersion, solve_dispersion3};
use crate::domset::{self, validate_dominating};
use crate::error::{Error, Result};
use crate::harness::gen::{gen_cloud_density, gen_convex, random_weights};
use crate::harness::io::{cloud_to_exact, convex_to_exact, instance_to_json, AnyInstance};
use crate::harness::oracle;
use crate::indep::{solve_mwis, triple_far_decision_sq};
use crate::kcenter::{pairwise_distance_ladder, solve_kcenter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Dominating,
    DominatingWeighted,
    KCenter,
    Mwis,
    Dispersion,
    Dispersion3,
    TripleFar,
    Mwis3,
    Clique3,
    PairFar,
    PairNear,
    Min3Far,
    Min3Near,
}

impl Problem {
    pub const ALL: [(&'static str, Problem); 13] = [
        ("dominating", Problem::Dominating),
        ("dominating-weighted", Problem::DominatingWeighted),
        ("kcenter", Problem::KCenter),
        ("mwis", Problem::Mwis),
        ("dispersion", Problem::Dispersion),
        ("dispersion3", Problem::Dispersion3),
        ("triple-far", Problem::TripleFar),
        ("mwis3", Problem::Mwis3),
        ("clique3", Problem::Clique3),
        ("pair-far", Problem::PairFar),
        ("pair-near", Problem::PairNear),
        ("min3-far", Problem::Min3Far),
        ("min3-near", Problem::Min3Near),
    ];

    pub fn parse(s: &str) -> Option<Problem> {
        Self::ALL.iter().find(|(name, _)| *name == s).map(|(_, p)| *p)
    }

    pub fn name(&self) -> &'static str {
        Self::ALL.iter().find(|(_, p)| p == self).unwrap().0
    }

    fn convex(&self) -> bool {
        !matches!(
            self,
            Problem::Mwis3
                | Problem::Clique3
                | Problem::PairFar
                | Problem::PairNear
                | Problem::Min3Far
                | Problem::Min3Near
        )
    }

    /// Largest size the paired oracle can enumerate.
    fn oracle_cap(&self) -> usize {
        match self {
            Problem::Dominating | Problem::DominatingWeighted | Problem::Mwis => 20,
            Problem::KCenter | Problem::Dispersion => 14,
            _ => 400,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Mismatch {
    pub seed: u64,
    pub digest: String,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub problem: String,
    pub trials: usize,
    pub mismatches: Vec<Mismatch>,
    pub max_runtime_ms: u128,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn digest_of(json: &str) -> String {
    let h = Sha256::digest(json.as_bytes());
    h.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

struct Trial {
    seed: u64,
    rng: ChaCha8Rng,
    mismatches: Vec<Mismatch>,
}

impl Trial {
    fn report(&mut self, json: &str, detail: String) {
        self.mismatches.push(Mismatch { seed: self.seed, digest: digest_of(json), detail });
    }
}

fn gen_exact_convex(
    t: &mut Trial,
    n_max: usize,
    weighted: bool,
) -> Result<(ConvexInstance<BigRational>, String)> {
    let n = t.rng.gen_range(3..=n_max.max(3));
    let scale = t.rng.gen_range(0.6..6.0);
    let base = gen_convex(n, t.seed, scale)?;
    let base = if weighted {
        base.with_weights(random_weights(base.n(), t.seed ^ 0x77, true))?
    } else {
        base
    };
    let json = instance_to_json(&AnyInstance::FloatConvex(
        base.with_weights(base.weights().to_vec())?,
    ));
    Ok((convex_to_exact(&base)?, json))
}

fn gen_exact_cloud(
    t: &mut Trial,
    n_max: usize,
    mixed_weights: bool,
) -> Result<(WeightedCloud<BigRational>, String)> {
    let n = t.rng.gen_range(3..=n_max.max(3));
    let density = t.rng.gen_range(1.0..14.0);
    let base = gen_cloud_density(n, t.seed, density)?;
    let weights = random_weights(n, t.seed ^ 0x99, !mixed_weights);
    let base = WeightedCloud::new(base.points().to_vec(), weights, *base.r(), base.tol().clone())?;
    let json = instance_to_json(&AnyInstance::FloatCloud(WeightedCloud::new(
        base.points().to_vec(),
        base.weights().to_vec(),
        *base.r(),
        base.tol().clone(),
    )?));
    Ok((cloud_to_exact(&base)?, json))
}

fn run_trial(problem: Problem, t: &mut Trial, n_max: usize) -> Result<()> {
    match problem {
        Problem::Dominating => {
            let (inst, json) = gen_exact_convex(t, n_max, false)?;
            let sol = domset::solve_unweighted(&inst)?;
            let (want, _) = oracle::dominating_min_cardinality(inst.points(), inst.r_sq(), inst.tol())?;
            if sol.centers.len() != want {
                t.report(&json, format!("cardinality {} != oracle {want}", sol.centers.len()));
            } else if !validate_dominating(&inst, inst.r_sq(), &sol.centers) {
                t.report(&json, "witness fails coverage".into());
            }
            // the unit-weight dynamic program must land on the same cardinality
            let dp = domset::solve_weighted(&inst)?;
            if dp.centers.len() != want {
                t.report(&json, format!("unit-weight DP size {} != greedy {want}", dp.centers.len()));
            }
        }
        Problem::DominatingWeighted => {
            let (inst, json) = gen_exact_convex(t, n_max, true)?;
            let per_k = domset::solve_weighted_bounded_per_k(&inst, inst.n())?;
            let want =
                oracle::dominating_weighted_per_k(inst.points(), inst.weights(), inst.r_sq(), inst.tol())?;
            for k in 1..=inst.n() {
                let got_w = per_k[k - 1].as_ref().map(|s| s.total_weight.clone());
                let want_w = want[k - 1].as_ref().map(|w| w.0.clone());
                if got_w != want_w {
                    t.report(&json, format!("k={k}: weight {got_w:?} != oracle {want_w:?}"));
                    break;
                }
                if let Some(sol) = &per_k[k - 1] {
                    if sol.centers.len() > k || !validate_dominating(&inst, inst.r_sq(), &sol.centers) {
                        t.report(&json, format!("k={k}: invalid witness"));
                        break;
                    }
                }
            }
        }
        Problem::KCenter => {
            let (inst, json) = gen_exact_convex(t, n_max, false)?;
            let k = t.rng.gen_range(1..=4.min(inst.n()));
            let got = solve_kcenter(&inst, k)?;
            let want = oracle::kcenter(inst.points(), k, inst.tol())?;
            if got.r_star_sq != want {
                t.report(&json, format!("k={k}: r*^2 mismatch"));
            }
        }
        Problem::Mwis => {
            let (inst, json) = gen_exact_convex(t, n_max, true)?;
            let (got_w, members) = solve_mwis(&inst)?;
            let (want_w, _) = oracle::mwis(inst.points(), inst.weights(), inst.r_sq(), inst.tol(), true)?;
            if got_w != want_w {
                t.report(&json, format!("weight {got_w} != oracle {want_w}"));
            } else if !oracle::validate_pairwise(
                inst.points(),
                &members,
                inst.r_sq(),
                inst.tol(),
                PairMode::Far,
                true,
            ) {
                t.report(&json, "witness not independent".into());
            }
        }
        Problem::Dispersion => {
            let (inst, json) = gen_exact_convex(t, n_max, false)?;
            let k = t.rng.gen_range(3..=5.min(inst.n()));
            let got = solve_dispersion(&inst, k)?;
            let want = oracle::dispersion(inst.points(), k, inst.tol())?;
            if got.r_star_sq.as_ref() != Some(&want) {
                t.report(&json, format!("k={k}: dispersion value mismatch"));
            }
        }
        Problem::Dispersion3 => {
            let (inst, json) = gen_exact_convex(t, n_max, false)?;
            let got = solve_dispersion3(&inst)?;
            let (want, _) = oracle::dispersion3(inst.points(), inst.tol())?;
            if got.r_star_sq.as_ref() != Some(&want) {
                t.report(&json, "dispersion3 value mismatch".into());
            } else if !oracle::validate_pairwise(
                inst.points(),
                &got.members,
                &want,
                inst.tol(),
                PairMode::Far,
                false,
            ) {
                t.report(&json, "dispersion3 witness below optimum".into());
            }
            // the general-k path must agree at k = 3
            let general = solve_dispersion(&inst, 3)?;
            if general.r_star_sq != got.r_star_sq {
                t.report(&json, "dispersion(k=3) disagrees with dispersion3".into());
            }
        }
        Problem::TripleFar => {
            let (inst, json) = gen_exact_convex(t, n_max, false)?;
            let ladder = pairwise_distance_ladder(&inst);
            let r_sq = ladder.values_sq[t.rng.gen_range(0..ladder.len())].clone();
            let got = triple_far_decision_sq(&inst, &r_sq)?;
            let want = oracle::triple_far_exists(inst.points(), &r_sq, inst.tol())?;
            if got.is_some() != want {
                t.report(&json, "decision bit mismatch".into());
            } else if let Some((a, b, c)) = got {
                if !oracle::validate_pairwise(
                    inst.points(),
                    &[a, b, c],
                    &r_sq,
                    inst.tol(),
                    PairMode::Far,
                    false,
                ) {
                    t.report(&json, "triple witness fails threshold".into());
                }
            }
        }
        Problem::Mwis3 | Problem::Clique3 => {
            let mode = if problem == Problem::Mwis3 { PairMode::Far } else { PairMode::Near };
            let (cloud, json) = gen_exact_cloud(t, n_max, true)?;
            let got = biclique::solve_triple(&cloud, mode)?;
            let want = oracle::cloud_triple(cloud.points(), cloud.weights(), cloud.r_sq(), cloud.tol(), mode)?;
            match (&got, &want) {
                (None, None) => {}
                (Some(g), Some((w, _))) if g.total_weight == *w => {
                    if !oracle::validate_pairwise(
                        cloud.points(),
                        &g.indices,
                        cloud.r_sq(),
                        cloud.tol(),
                        mode,
                        true,
                    ) {
                        t.report(&json, "triple witness violates relation".into());
                    }
                }
                _ => t.report(&json, "triple weight mismatch".into()),
            }
        }
        Problem::PairFar | Problem::PairNear => {
            let mode = if problem == Problem::PairFar { PairMode::Far } else { PairMode::Near };
            let (cloud, json) = gen_exact_cloud(t, n_max, true)?;
            let got = biclique::solve_pair(&cloud, mode)?;
            let want = oracle::cloud_pair(cloud.points(), cloud.weights(), cloud.r_sq(), cloud.tol(), mode)?;
            let gw = got.map(|(_, w)| w);
            let ww = want.map(|(w, _)| w);
            if gw != ww {
                t.report(&json, "pair weight mismatch".into());
            }
        }
        Problem::Min3Far | Problem::Min3Near => {
            let mode = if problem == Problem::Min3Far { PairMode::Far } else { PairMode::Near };
            let (cloud, json) = gen_exact_cloud(t, n_max, true)?;
            let got = biclique::solve_min_triple(&cloud, mode)?;
            let neg = cloud.negated();
            let want =
                oracle::cloud_triple(neg.points(), neg.weights(), neg.r_sq(), neg.tol(), mode)?;
            let gw = got.map(|s| s.total_weight);
            let ww = want.map(|(w, _)| -w);
            if gw != ww {
                t.report(&json, "min-variant mismatch".into());
            }
        }
    }
    Ok(())
}

/// Run `trials` randomized solver-vs-oracle comparisons.
pub fn verify(problem: Problem, trials: usize, n_max: usize, seed: u64) -> Result<VerifyReport> {
    let n_max = n_max.min(problem.oracle_cap());
    let _ = problem.convex();
    let mut mismatches = Vec::new();
    let mut max_ms = 0u128;
    for trial in 0..trials {
        let tseed = seed ^ 0x9e37_79b9_7f4a_7c15u64.wrapping_mul(trial as u64 + 1);
        let mut t = Trial { seed: tseed, rng: ChaCha8Rng::seed_from_u64(tseed), mismatches: Vec::new() };
        let started = Instant::now();
        match run_trial(problem, &mut t, n_max) {
            Ok(()) => {}
            Err(Error::DegenerateInput) => {
                // snapped coordinates violated general position; not a solver
                // disagreement, skip the trial
            }
            Err(e) => {
                t.mismatches.push(Mismatch {
                    seed: tseed,
                    digest: String::new(),
                    detail: format!("error: {e}"),
                });
            }
        }
        max_ms = max_ms.max(started.elapsed().as_millis());
        mismatches.extend(t.mismatches);
    }
    Ok(VerifyReport { problem: problem.name().into(), trials, mismatches, max_runtime_ms: max_ms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_verify_runs_clean() {
        for problem in [Problem::Dominating, Problem::Mwis, Problem::Mwis3] {
            let report = verify(problem, 8, 10, 7).unwrap();
            assert!(report.ok(), "{report:?}");
            assert_eq!(report.trials, 8);
        }
    }

    #[test]
    fn problem_names_round_trip() {
        for (name, p) in Problem::ALL {
            assert_eq!(Problem::parse(name), Some(p));
            assert_eq!(p.name(), name);
        }
        assert_eq!(Problem::parse("nope"), None);
    }
}
