//! Discrete k-center for points in convex position: binary search over the
//! ladder of pairwise distances, with the greedy cover decision from
//! [`crate::domset`] as the feasibility test.

use crate::cycle::ConvexInstance;
use crate::domset::cover_decision_sq;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sorted unique candidate radii (stored squared), with 0 in front and one
/// realizing pair per value.
pub struct DistanceLadder<S> {
    pub values_sq: Vec<S>,
    pub pairs: Vec<(u32, u32)>,
}

pub fn pairwise_distance_ladder<S: Scalar>(inst: &ConvexInstance<S>) -> DistanceLadder<S> {
    let (values_sq, pairs) = inst.distance_ladder_sq();
    DistanceLadder { values_sq, pairs }
}

impl<S: Scalar> DistanceLadder<S> {
    pub fn len(&self) -> usize {
        self.values_sq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values_sq.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct KCenterSolution<S> {
    pub r_star_sq: S,
    pub centers: Vec<u32>,
}

impl<S: Scalar> KCenterSolution<S> {
    pub fn r_star(&self) -> f64 {
        self.r_star_sq.to_f64().sqrt()
    }
}

/// Smallest radius from the ladder admitting a cover by at most `k` of the
/// input points, with witness centers.
pub fn solve_kcenter<S: Scalar>(inst: &ConvexInstance<S>, k: usize) -> Result<KCenterSolution<S>> {
    if k < 1 || k > inst.n() {
        return Err(Error::BadK);
    }
    let ladder = pairwise_distance_ladder(inst);
    // invariant: feasible at hi (one center within the diameter covers all)
    let mut lo = 0usize;
    let mut hi = ladder.len() - 1;
    let mut witness = cover_decision_sq(inst, k, &ladder.values_sq[hi])
        .expect("feasible at the diameter");
    if let Some(w) = cover_decision_sq(inst, k, &ladder.values_sq[0]) {
        return Ok(KCenterSolution { r_star_sq: ladder.values_sq[0].clone(), centers: w });
    }
    // decision is false at lo, true at hi
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        match cover_decision_sq(inst, k, &ladder.values_sq[mid]) {
            Some(w) => {
                hi = mid;
                witness = w;
            }
            None => lo = mid,
        }
    }
    Ok(KCenterSolution { r_star_sq: ladder.values_sq[hi].clone(), centers: witness })
}
