//! Max-min dispersion on the convex cycle: binary search over the distance
//! ladder, using the independent-set machinery as the decision procedure.
//! The general-k decision asks for `k` points pairwise strictly beyond `r`;
//! the size-3 decision is the non-strict feasibility scan. Extraction reruns
//! the decision at the optimum in non-strict mode, which plays the role of
//! an infinitesimally smaller radius.

use crate::cycle::ConvexInstance;
use crate::error::{Error, Result};
use crate::indep::{greedy_far_set_sq, max_cardinality_far_set_sq, triple_far_decision_sq, DEFAULT_MWIS_CAP};
use crate::kcenter::pairwise_distance_ladder;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct DispersionSolution<S> {
    /// `None` encodes the k = 1 convention (unbounded separation).
    pub r_star_sq: Option<S>,
    pub members: Vec<u32>,
}

impl<S: Scalar> DispersionSolution<S> {
    pub fn r_star(&self) -> f64 {
        match &self.r_star_sq {
            None => f64::INFINITY,
            Some(v) => v.to_f64().sqrt(),
        }
    }
}

/// Subset of `k` points maximizing the minimum pairwise distance.
pub fn solve_dispersion<S: Scalar>(inst: &ConvexInstance<S>, k: usize) -> Result<DispersionSolution<S>> {
    solve_dispersion_capped(inst, k, DEFAULT_MWIS_CAP)
}

pub fn solve_dispersion_capped<S: Scalar>(
    inst: &ConvexInstance<S>,
    k: usize,
    cap: usize,
) -> Result<DispersionSolution<S>> {
    let n = inst.n();
    if k < 1 || k > n {
        return Err(Error::BadK);
    }
    if k == 1 {
        return Ok(DispersionSolution { r_star_sq: None, members: vec![0] });
    }
    let ladder = pairwise_distance_ladder(inst);
    if k == 2 {
        let last = ladder.len() - 1;
        let (i, j) = ladder.pairs[last];
        return Ok(DispersionSolution {
            r_star_sq: Some(ladder.values_sq[last].clone()),
            members: vec![i, j],
        });
    }
    // decision(r): k points pairwise strictly beyond r — true exactly for
    // r < r*. A greedy subset settles the bulk of the search; the exact DP
    // runs only when the greedy bound falls short, which happens near the
    // transition radius where tables are small.
    let decide = |idx: usize| -> Result<bool> {
        let r_sq = &ladder.values_sq[idx];
        if greedy_far_set_sq(inst, r_sq, true, k).len() >= k {
            return Ok(true);
        }
        Ok(max_cardinality_far_set_sq(inst, r_sq, true, cap)?.len() >= k)
    };
    debug_assert!(decide(0)?);
    let mut lo = 0usize; // true
    let mut hi = ladder.len() - 1; // false for k >= 3
    debug_assert!(!decide(hi)?);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if decide(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // extraction: any k points pairwise >= r* realize the optimum exactly
    // (a subset with min pairwise > r* would contradict the search)
    let r_star_sq = ladder.values_sq[hi].clone();
    let mut members = greedy_far_set_sq(inst, &r_star_sq, false, k);
    if members.len() < k {
        members = max_cardinality_far_set_sq(inst, &r_star_sq, false, cap)?;
    }
    debug_assert!(members.len() >= k, "optimal subset qualifies non-strictly");
    members.truncate(k);
    Ok(DispersionSolution { r_star_sq: Some(r_star_sq), members })
}

/// Three points maximizing the minimum pairwise distance.
pub fn solve_dispersion3<S: Scalar>(inst: &ConvexInstance<S>) -> Result<DispersionSolution<S>> {
    if inst.n() < 3 {
        return Err(Error::TooFewPoints);
    }
    let ladder = pairwise_distance_ladder(inst);
    // decision(r): a triple with min pairwise >= r exists — true exactly for r <= r*
    let last = ladder.len() - 1;
    let best_idx = if triple_far_decision_sq(inst, &ladder.values_sq[last])?.is_some() {
        last
    } else {
        let mut lo = 0usize; // true at radius 0
        let mut hi = last; // false
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if triple_far_decision_sq(inst, &ladder.values_sq[mid])?.is_some() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    let r_star_sq = ladder.values_sq[best_idx].clone();
    let (a, b, c) = triple_far_decision_sq(inst, &r_star_sq)?
        .expect("decision holds at the optimum");
    Ok(DispersionSolution { r_star_sq: Some(r_star_sq), members: vec![a, b, c] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::harness::gen::gen_convex;
    use crate::harness::oracle;
    use crate::scalar::Tol;

    fn unit_square() -> ConvexInstance<f64> {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        ConvexInstance::unit_weighted(pts, 1.0, Tol::with_eps(1e-9).unwrap()).unwrap()
    }

    #[test]
    fn square_cases() {
        let inst = unit_square();
        let s3 = solve_dispersion(&inst, 3).unwrap();
        assert_eq!(s3.r_star_sq, Some(1.0));
        assert_eq!(s3.members.len(), 3);
        let s2 = solve_dispersion(&inst, 2).unwrap();
        assert_eq!(s2.r_star_sq, Some(2.0));
        let s1 = solve_dispersion(&inst, 1).unwrap();
        assert_eq!(s1.r_star_sq, None);
        assert!(s1.r_star().is_infinite());
        assert_eq!(solve_dispersion(&inst, 5).unwrap_err(), crate::Error::BadK);
    }

    #[test]
    fn square_dispersion3() {
        let inst = unit_square();
        let s = solve_dispersion3(&inst).unwrap();
        assert_eq!(s.r_star_sq, Some(1.0));
    }

    #[test]
    fn pentagon_dispersion3_resolved_by_oracle() {
        let pts: Vec<Point<f64>> = (0..5)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / 5.0;
                Point::new(a.cos(), a.sin())
            })
            .collect();
        let inst = ConvexInstance::unit_weighted(pts, 1.0, Tol::with_eps(1e-9).unwrap()).unwrap();
        let got = solve_dispersion3(&inst).unwrap();
        let (want, _) = oracle::dispersion3(inst.points(), inst.tol()).unwrap();
        assert_eq!(got.r_star_sq, Some(want));
        // the optimal triple of a regular pentagon realizes the side, not the diagonal
        let side = 2.0 * (std::f64::consts::PI / 5.0).sin();
        assert!((got.r_star() - side).abs() < 1e-12);
    }

    #[test]
    fn matches_combination_oracle_small() {
        for seed in 0..25u64 {
            let inst = gen_convex(5 + (seed % 8) as usize, seed ^ 0xd15, 1.0 + (seed % 5) as f64).unwrap();
            for k in 3..=5usize.min(inst.n()) {
                let got = solve_dispersion(&inst, k).unwrap();
                let want = oracle::dispersion(inst.points(), k, inst.tol()).unwrap();
                assert_eq!(got.r_star_sq, Some(want), "seed={seed} k={k}");
                // members realize r* exactly
                let mut mn = f64::INFINITY;
                for (x, &mx) in got.members.iter().enumerate() {
                    for &my in &got.members[x + 1..] {
                        mn = mn.min(inst.dist2(mx, my));
                    }
                }
                assert_eq!(Some(mn), got.r_star_sq);
            }
        }
    }

    #[test]
    fn dispersion3_agrees_with_general_k() {
        for seed in 40..60u64 {
            let inst = gen_convex(6 + (seed % 10) as usize, seed, 1.0 + (seed % 4) as f64).unwrap();
            let a = solve_dispersion3(&inst).unwrap();
            let b = solve_dispersion(&inst, 3).unwrap();
            assert_eq!(a.r_star_sq, b.r_star_sq, "seed={seed}");
        }
    }

    #[test]
    fn decision_is_antitone_on_ladder() {
        let inst = gen_convex(12, 99, 2.0).unwrap();
        let ladder = pairwise_distance_ladder(&inst);
        let k = 4;
        let mut prev = true;
        for idx in 0..ladder.len() {
            let cur = max_cardinality_far_set_sq(&inst, &ladder.values_sq[idx], true, 300)
                .unwrap()
                .len()
                >= k;
            assert!(prev || !cur, "decision may only flip true -> false");
            prev = cur;
        }
    }
}
