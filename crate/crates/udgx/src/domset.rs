//! Dominating sets on the disk graph of a convex cycle.
//!
//! The weighted solver runs the iterative sublist dynamic program: iteration
//! `t` holds a frontier of cyclic sublists, each covered by at most `t`
//! centers within its budget, and extends every frontier entry through each
//! candidate center both counterclockwise and clockwise. The unweighted
//! solver replaces the minimum-weight enclosing query by a farthest-endpoint
//! enclosing query and stops at the first full cycle.
//!
//! Full-cycle candidates are routed to a running best across all iterations
//! rather than stored in the frontier; an optimal set of fewer than `k`
//! centers therefore survives to the answer even though later frontiers are
//! rebuilt from scratch.

use std::rc::Rc;

use crate::cycle::{ConvexInstance, FarNeighborIndex, Sublist};
use crate::error::{Error, Result};
use crate::scalar::{order, Scalar};

/// Persistent chain of chosen centers; frontier entries share tails.
#[derive(Debug)]
struct WitnessNode {
    idx: u32,
    len: u32,
    parent: Witness,
}

type Witness = Option<Rc<WitnessNode>>;

fn witness_push(w: &Witness, idx: u32) -> Witness {
    let len = w.as_ref().map_or(0, |n| n.len) + 1;
    Some(Rc::new(WitnessNode { idx, len, parent: w.clone() }))
}

fn witness_len(w: &Witness) -> u32 {
    w.as_ref().map_or(0, |n| n.len)
}

fn witness_vec(w: &Witness) -> Vec<u32> {
    let mut out = Vec::new();
    let mut cur = w;
    while let Some(node) = cur {
        out.push(node.idx);
        cur = &node.parent;
    }
    out.sort_unstable();
    out
}

/// One frontier element: a sublist, the budget paid for it, and the centers
/// whose disks cover it.
pub struct CandidateCover<S: Scalar> {
    pub sublist: Sublist,
    pub budget: S,
    witness: Witness,
}

impl<S: Scalar> CandidateCover<S> {
    pub fn witnesses(&self) -> Vec<u32> {
        witness_vec(&self.witness)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DominatingSolution<S> {
    pub centers: Vec<u32>,
    pub total_weight: S,
}

/// Coverage re-check independent of the solver path: every point is a center
/// or within the (non-strict) radius of one.
pub fn validate_dominating<S: Scalar>(inst: &ConvexInstance<S>, r_sq: &S, centers: &[u32]) -> bool {
    let n = inst.n() as u32;
    (0..n).all(|t| {
        centers.iter().any(|&c| {
            c == t || inst.tol().le(&inst.dist2(c, t), r_sq)
        })
    })
}

// ---------------------------------------------------------------------------
// Enclosing-sublist query structures
// ---------------------------------------------------------------------------

/// Cyclic arcs unrolled to intervals on [0, 2n-2]: an arc wrapping past the
/// origin contributes a second copy anchored at 0, so interval containment
/// over the copies is exactly cyclic containment (full-cycle arcs are never
/// stored; they go to the answer tracker instead).
fn unrolled_copies(s: u32, len: u32, n: u32, id: u32, out: &mut Vec<(u32, u32, u32)>) {
    debug_assert!(len < n);
    let e = s + len - 1;
    out.push((s, e, id));
    if e >= n {
        out.push((0, e - n, id));
    }
}

/// Minimum-budget enclosing sublist queries over a static frontier,
/// organized as a merge tree: copies sorted by start, each tree node holding
/// its range's ends sorted with suffix minima of the budgets.
pub struct EnclosingSublistIndex<S: Scalar> {
    n: u32,
    items: Vec<(Sublist, S)>,
    starts: Vec<u32>,
    size: usize,
    ends: Vec<Vec<u32>>,
    suffix: Vec<Vec<(S, u32)>>,
}

impl<S: Scalar> EnclosingSublistIndex<S> {
    pub fn build(n: u32, entries: Vec<(Sublist, S)>) -> Self {
        let mut copies: Vec<(u32, u32, u32)> = Vec::with_capacity(entries.len() * 2);
        for (id, (sl, _)) in entries.iter().enumerate() {
            if let Sublist::Arc { start, len } = sl {
                unrolled_copies(*start, *len, n, id as u32, &mut copies);
            }
        }
        copies.sort_unstable();
        let m = copies.len();
        let size = m.next_power_of_two().max(1);
        let mut ends = vec![Vec::new(); 2 * size];
        let mut suffix = vec![Vec::new(); 2 * size];
        for (pos, &(_, e, id)) in copies.iter().enumerate() {
            ends[size + pos] = vec![e];
            suffix[size + pos] = vec![(entries[id as usize].1.clone(), id)];
        }
        for idx in (1..size).rev() {
            let (l, r) = (2 * idx, 2 * idx + 1);
            let mut merged: Vec<(u32, (S, u32))> = Vec::with_capacity(ends[l].len() + ends[r].len());
            {
                let (mut a, mut b) = (0, 0);
                while a < ends[l].len() || b < ends[r].len() {
                    let take_left = b >= ends[r].len()
                        || (a < ends[l].len() && ends[l][a] <= ends[r][b]);
                    if take_left {
                        merged.push((ends[l][a], suffix[l][a].clone()));
                        a += 1;
                    } else {
                        merged.push((ends[r][b], suffix[r][b].clone()));
                        b += 1;
                    }
                }
            }
            // suffix minima by (budget, id)
            let mut best: Option<(S, u32)> = None;
            let mut suf = vec![(S::zero(), 0u32); merged.len()];
            for t in (0..merged.len()).rev() {
                let cand = merged[t].1.clone();
                best = Some(match best.take() {
                    None => cand,
                    Some(cur) => {
                        if better_budget(&cand, &cur) {
                            cand
                        } else {
                            cur
                        }
                    }
                });
                suf[t] = best.clone().unwrap();
            }
            ends[idx] = merged.iter().map(|x| x.0).collect();
            suffix[idx] = suf;
        }
        let starts = copies.iter().map(|c| c.0).collect();
        EnclosingSublistIndex { n, items: entries, starts, size, ends, suffix }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn item(&self, id: u32) -> &(Sublist, S) {
        &self.items[id as usize]
    }

    fn query_ids(&self, qs: u32, qe: u32) -> Option<(S, u32)> {
        let cnt = self.starts.partition_point(|&s| s <= qs);
        let mut best: Option<(S, u32)> = None;
        let (mut l, mut r) = (self.size, self.size + cnt);
        while l < r {
            let mut probe = |idx: usize| {
                let pos = self.ends[idx].partition_point(|&e| e < qe);
                if pos < self.ends[idx].len() {
                    let cand = self.suffix[idx][pos].clone();
                    best = Some(match best.take() {
                        None => cand,
                        Some(cur) => {
                            if better_budget(&cand, &cur) {
                                cand
                            } else {
                                cur
                            }
                        }
                    });
                }
            };
            if l & 1 == 1 {
                probe(l);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                probe(r);
            }
            l /= 2;
            r /= 2;
        }
        best
    }
}

fn better_budget<S: Scalar>(a: &(S, u32), b: &(S, u32)) -> bool {
    match order(&a.0, &b.0) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => a.1 < b.1,
    }
}

/// Minimum-budget stored sublist containing the query, if any.
pub fn min_weight_enclosing<'a, S: Scalar>(
    idx: &'a EnclosingSublistIndex<S>,
    query: &Sublist,
) -> Option<(&'a Sublist, &'a S, u32)> {
    let (qs, qlen) = match query {
        Sublist::Empty => return None,
        Sublist::Arc { start, len } => (*start, *len),
    };
    if qlen >= idx.n {
        return None; // only full-cycle arcs could contain this; none are stored
    }
    let budget_id = idx.query_ids(qs, qs + qlen - 1)?;
    let id = budget_id.1;
    let (sl, budget) = idx.item(id);
    Some((sl, budget, id))
}

/// Farthest-endpoint enclosing queries, both orientations. The clockwise
/// side is the counterclockwise structure built on the reflected cycle.
pub struct FarthestEnclosingIndex {
    n: u32,
    ccw: FarthestDir,
    cw: FarthestDir,
}

struct FarthestDir {
    starts: Vec<u32>,
    // running maxima of unrolled ends over starts <= bound, with arc ids
    prefmax: Vec<(u32, u32)>,
}

impl FarthestDir {
    fn build(arcs: &[(u32, u32)], n: u32) -> Self {
        let mut copies = Vec::with_capacity(arcs.len() * 2);
        for (id, &(s, len)) in arcs.iter().enumerate() {
            unrolled_copies(s, len, n, id as u32, &mut copies);
        }
        copies.sort_unstable();
        let mut prefmax: Vec<(u32, u32)> = Vec::with_capacity(copies.len());
        for &(_, e, id) in &copies {
            let cand = (e, id);
            let best = match prefmax.last() {
                Some(&(pe, pid)) if pe > e || (pe == e && pid <= id) => (pe, pid),
                _ => cand,
            };
            prefmax.push(best);
        }
        FarthestDir { starts: copies.iter().map(|c| c.0).collect(), prefmax }
    }

    /// Arc containing `t` with maximal CCW reach from `t`, as (reach, id).
    fn query(&self, t: u32, n: u32) -> Option<(u32, u32)> {
        let mut best: Option<(u32, u32)> = None;
        let cnt = self.starts.partition_point(|&s| s <= t);
        if cnt > 0 {
            let (e, id) = self.prefmax[cnt - 1];
            if e >= t {
                best = Some((e - t, id));
            }
        }
        if let Some(&(e, id)) = self.prefmax.last() {
            if e >= t + n {
                let cand = (e - t - n, id);
                best = Some(match best {
                    Some(cur) if cur.0 > cand.0 || (cur.0 == cand.0 && cur.1 <= cand.1) => cur,
                    _ => cand,
                });
            }
        }
        best
    }
}

impl FarthestEnclosingIndex {
    pub fn build(n: u32, arcs: &[Sublist]) -> Self {
        let fwd: Vec<(u32, u32)> = arcs
            .iter()
            .map(|a| match a {
                Sublist::Arc { start, len } => (*start, *len),
                Sublist::Empty => unreachable!("frontier arcs are non-empty"),
            })
            .collect();
        let rev: Vec<(u32, u32)> = fwd
            .iter()
            .map(|&(s, len)| (n - 1 - (s + len - 1) % n, len))
            .collect();
        FarthestEnclosingIndex {
            n,
            ccw: FarthestDir::build(&fwd, n),
            cw: FarthestDir::build(&rev, n),
        }
    }
}

/// Stored arc containing `p_t` whose CCW endpoint is farthest from `t`.
pub fn farthest_ccw_enclosing(idx: &FarthestEnclosingIndex, t: u32) -> Option<u32> {
    idx.ccw.query(t, idx.n).map(|(_, id)| id)
}

/// Stored arc containing `p_t` whose CW endpoint is farthest from `t`.
pub fn farthest_cw_enclosing(idx: &FarthestEnclosingIndex, t: u32) -> Option<u32> {
    idx.cw.query(idx.n - 1 - t, idx.n).map(|(_, id)| id)
}

// ---------------------------------------------------------------------------
// Sublist union of one extension step
// ---------------------------------------------------------------------------

/// Union of `P(b, a)`, a stored arc `l` containing `a`, and `P(l_end, a2)`,
/// where `a2` is the first far point CCW from `l_end + 1` (so the third
/// piece never runs past `a`). The result is contiguous by construction.
fn ccw_union(n: u32, b: u32, a: u32, l: &Sublist, a2: u32) -> Sublist {
    let ls = l.start().expect("stored arc");
    let le = l.end(n).expect("stored arc");
    let u = |x: u32| (x + n - a) % n;
    let u1 = u((b + 1) % n);
    debug_assert!(u1 != 0, "P(b, a) contains the center, so it is non-empty");
    let uj1 = u(ls);
    let tail = if uj1 == 0 { u1 } else { u1.min(uj1) };
    let v = if a2 == a { n } else { u(a2) };
    debug_assert!(v > u(le) || v == n);
    if v >= tail {
        Sublist::full(n)
    } else {
        Sublist::Arc { start: (a + tail) % n, len: (n - tail) + v }
    }
}

/// Clockwise mirror of [`ccw_union`] via reflection of the cyclic order.
fn cw_union(n: u32, b: u32, a: u32, l: &Sublist, b2: u32) -> Sublist {
    let rev = |x: u32| n - 1 - x;
    let rl = Sublist::arc(rev(l.end(n).unwrap()), rev(l.start().unwrap()), n);
    match ccw_union(n, rev(a), rev(b), &rl, rev(b2)) {
        Sublist::Arc { start: _, len } if len == n => Sublist::full(n),
        Sublist::Arc { start, len } => Sublist::Arc { start: rev((start + len - 1) % n), len },
        Sublist::Empty => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Weighted dynamic program
// ---------------------------------------------------------------------------

struct BestFull<S> {
    budget: S,
    witness: Witness,
}

fn consider_full<S: Scalar>(best: &mut Option<BestFull<S>>, budget: S, witness: Witness) {
    let replace = match best {
        None => true,
        Some(cur) => match order(&budget, &cur.budget) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => match witness_len(&witness).cmp(&witness_len(&cur.witness)) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => witness_vec(&witness) < witness_vec(&cur.witness),
            },
        },
    };
    if replace {
        *best = Some(BestFull { budget, witness });
    }
}

fn dedup_covers<S: Scalar>(mut covers: Vec<CandidateCover<S>>) -> Vec<CandidateCover<S>> {
    covers.sort_by(|x, y| {
        let kx = (x.sublist.start().unwrap(), x.sublist.len());
        let ky = (y.sublist.start().unwrap(), y.sublist.len());
        kx.cmp(&ky)
            .then_with(|| order(&x.budget, &y.budget))
            .then_with(|| witness_len(&x.witness).cmp(&witness_len(&y.witness)))
    });
    covers.dedup_by(|b, a| a.sublist == b.sublist);
    covers
}

fn snapshot<S: Scalar>(best: &Option<BestFull<S>>) -> Option<DominatingSolution<S>> {
    best.as_ref().map(|b| DominatingSolution {
        centers: witness_vec(&b.witness),
        total_weight: b.budget.clone(),
    })
}

/// Minimum-weight dominating sets of size at most `k`, reported for every
/// bound `1..=k_max` from a single run (iteration results do not depend on
/// the bound). Entry `t-1` is the best full cover seen within `t` iterations.
pub fn solve_weighted_bounded_per_k<S: Scalar>(
    inst: &ConvexInstance<S>,
    k_max: usize,
) -> Result<Vec<Option<DominatingSolution<S>>>> {
    let n = inst.n();
    if k_max < 1 || k_max > n {
        return Err(Error::BadK);
    }
    inst.require_positive_weights()?;
    if n <= 2 {
        return Ok(small_weighted(inst, k_max));
    }
    let nu = n as u32;
    let idx = FarNeighborIndex::with_r_sq(inst, inst.r_sq().clone(), true);
    let a: Vec<Option<u32>> = (0..nu).map(|i| idx.first_far_ccw(i, i)).collect();
    let b: Vec<Option<u32>> = (0..nu).map(|i| idx.first_far_cw(i, i)).collect();

    let mut tracker: Option<BestFull<S>> = None;
    let mut frontier: Vec<CandidateCover<S>> = Vec::new();
    for i in 0..nu {
        let wit = witness_push(&None, i);
        match a[i as usize] {
            None => consider_full(&mut tracker, inst.weight(i).clone(), wit),
            Some(ai) => {
                let arc = Sublist::open_between(b[i as usize].unwrap(), ai, nu);
                debug_assert!(arc.contains(i, nu));
                frontier.push(CandidateCover { sublist: arc, budget: inst.weight(i).clone(), witness: wit });
            }
        }
    }
    frontier = dedup_covers(frontier);

    let mut per_k = Vec::with_capacity(k_max);
    per_k.push(snapshot(&tracker));

    for _t in 2..=k_max {
        if frontier.is_empty() {
            per_k.push(snapshot(&tracker));
            continue;
        }
        let entries: Vec<(Sublist, S)> =
            frontier.iter().map(|c| (c.sublist, c.budget.clone())).collect();
        let encl = EnclosingSublistIndex::build(nu, entries);
        let mut next: Vec<CandidateCover<S>> = Vec::new();
        for i in 0..nu {
            let (ai, bi) = match (a[i as usize], b[i as usize]) {
                (Some(ai), Some(bi)) => (ai, bi),
                _ => continue,
            };
            let wi = inst.weight(i);
            for j in 0..nu {
                // counterclockwise pass: enclose P[a_i^i, j]
                let qlen = (j + nu - ai) % nu + 1;
                if qlen < nu {
                    let q = Sublist::Arc { start: ai, len: qlen };
                    if let Some((ls, budget, id)) = min_weight_enclosing(&encl, &q) {
                        let le = ls.end(nu).unwrap();
                        let a2 = idx.first_far_ccw(i, (le + 1) % nu).expect("a_i exists");
                        let u = ccw_union(nu, bi, ai, ls, a2);
                        let nb = budget.clone() + wi.clone();
                        let wit = witness_push(&frontier[id as usize].witness, i);
                        if u.is_full(nu) {
                            consider_full(&mut tracker, nb, wit);
                        } else {
                            next.push(CandidateCover { sublist: u, budget: nb, witness: wit });
                        }
                    }
                }
                // clockwise pass: enclose P[j, b_i^i]
                let qlen = (bi + nu - j) % nu + 1;
                if qlen < nu {
                    let q = Sublist::Arc { start: j, len: qlen };
                    if let Some((ls, budget, id)) = min_weight_enclosing(&encl, &q) {
                        let js = ls.start().unwrap();
                        let b2 = idx.first_far_cw(i, (js + nu - 1) % nu).expect("b_i exists");
                        let u = cw_union(nu, bi, ai, ls, b2);
                        let nb = budget.clone() + wi.clone();
                        let wit = witness_push(&frontier[id as usize].witness, i);
                        if u.is_full(nu) {
                            consider_full(&mut tracker, nb, wit);
                        } else {
                            next.push(CandidateCover { sublist: u, budget: nb, witness: wit });
                        }
                    }
                }
            }
        }
        frontier = dedup_covers(next);
        per_k.push(snapshot(&tracker));
    }
    Ok(per_k)
}

fn small_weighted<S: Scalar>(inst: &ConvexInstance<S>, k_max: usize) -> Vec<Option<DominatingSolution<S>>> {
    let n = inst.n();
    let covers_all = |centers: &[u32]| validate_dominating(inst, inst.r_sq(), centers);
    let mut tracker: Option<BestFull<S>> = None;
    let mut per_k = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let subsets: Vec<Vec<u32>> = match (n, k) {
            (1, _) => vec![vec![0]],
            (2, 1) => vec![vec![0], vec![1]],
            (2, _) => vec![vec![0, 1]],
            _ => unreachable!(),
        };
        for s in subsets {
            if covers_all(&s) {
                let w = s.iter().fold(S::zero(), |acc, &i| acc + inst.weight(i).clone());
                let mut wit = None;
                for &i in &s {
                    wit = witness_push(&wit, i);
                }
                consider_full(&mut tracker, w, wit);
            }
        }
        per_k.push(snapshot(&tracker));
    }
    per_k
}

/// Minimum-weight dominating set of size at most `k`, or `None` when no
/// such set exists within the bound.
pub fn solve_weighted_bounded<S: Scalar>(
    inst: &ConvexInstance<S>,
    k: usize,
) -> Result<Option<DominatingSolution<S>>> {
    let mut per_k = solve_weighted_bounded_per_k(inst, k)?;
    Ok(per_k.pop().unwrap())
}

/// Minimum-weight dominating set (bound `k = n`; always feasible).
pub fn solve_weighted<S: Scalar>(inst: &ConvexInstance<S>) -> Result<DominatingSolution<S>> {
    let sol = solve_weighted_bounded(inst, inst.n())?;
    Ok(sol.expect("the whole point set dominates itself"))
}

// ---------------------------------------------------------------------------
// Unweighted greedy
// ---------------------------------------------------------------------------

fn greedy_cover<S: Scalar>(inst: &ConvexInstance<S>, k_cap: usize, r_sq: &S) -> Option<Vec<u32>> {
    let n = inst.n();
    if k_cap == 0 {
        return None;
    }
    if n <= 2 {
        let near = |i: u32, j: u32| inst.tol().le(&inst.dist2(i, j), r_sq);
        if n == 1 {
            return Some(vec![0]);
        }
        if near(0, 1) {
            return Some(vec![0]);
        }
        return if k_cap >= 2 { Some(vec![0, 1]) } else { None };
    }
    let nu = n as u32;
    let idx = FarNeighborIndex::with_r_sq(inst, r_sq.clone(), true);
    let a: Vec<Option<u32>> = (0..nu).map(|i| idx.first_far_ccw(i, i)).collect();
    let b: Vec<Option<u32>> = (0..nu).map(|i| idx.first_far_cw(i, i)).collect();

    let mut frontier: Vec<CandidateCover<S>> = Vec::new();
    for i in 0..nu {
        match a[i as usize] {
            None => return Some(vec![i]),
            Some(ai) => frontier.push(CandidateCover {
                sublist: Sublist::open_between(b[i as usize].unwrap(), ai, nu),
                budget: S::one(),
                witness: witness_push(&None, i),
            }),
        }
    }
    frontier = dedup_covers(frontier);

    for _t in 2..=k_cap {
        if frontier.is_empty() {
            return None;
        }
        let arcs: Vec<Sublist> = frontier.iter().map(|c| c.sublist).collect();
        let fi = FarthestEnclosingIndex::build(nu, &arcs);
        let mut next: Vec<CandidateCover<S>> = Vec::new();
        for i in 0..nu {
            let (ai, bi) = match (a[i as usize], b[i as usize]) {
                (Some(ai), Some(bi)) => (ai, bi),
                _ => continue,
            };
            if let Some(id) = farthest_ccw_enclosing(&fi, ai) {
                let ls = &frontier[id as usize].sublist;
                let le = ls.end(nu).unwrap();
                let a2 = idx.first_far_ccw(i, (le + 1) % nu).expect("a_i exists");
                let u = ccw_union(nu, bi, ai, ls, a2);
                let wit = witness_push(&frontier[id as usize].witness, i);
                if u.is_full(nu) {
                    return Some(witness_vec(&wit));
                }
                next.push(CandidateCover { sublist: u, budget: S::one(), witness: wit });
            }
            if let Some(id) = farthest_cw_enclosing(&fi, bi) {
                let ls = &frontier[id as usize].sublist;
                let js = ls.start().unwrap();
                let b2 = idx.first_far_cw(i, (js + nu - 1) % nu).expect("b_i exists");
                let u = cw_union(nu, bi, ai, ls, b2);
                let wit = witness_push(&frontier[id as usize].witness, i);
                if u.is_full(nu) {
                    return Some(witness_vec(&wit));
                }
                next.push(CandidateCover { sublist: u, budget: S::one(), witness: wit });
            }
        }
        frontier = dedup_covers(next);
    }
    None
}

/// Smallest dominating set at the instance radius (weights ignored; the
/// reported weight is the cardinality).
pub fn solve_unweighted<S: Scalar>(inst: &ConvexInstance<S>) -> Result<DominatingSolution<S>> {
    let centers = greedy_cover(inst, inst.n(), inst.r_sq())
        .expect("the whole point set dominates itself");
    let total_weight = S::from_int(centers.len() as i64);
    Ok(DominatingSolution { centers, total_weight })
}

/// Can `<= k` centers cover every point within distance `r`? Returns the
/// witness centers when so.
pub fn cover_decision<S: Scalar>(inst: &ConvexInstance<S>, k: usize, r: &S) -> Result<Option<Vec<u32>>> {
    if k < 1 {
        return Err(Error::BadK);
    }
    if !r.is_finite_val() || *r < S::zero() {
        return Err(Error::InvalidRadius);
    }
    Ok(greedy_cover(inst, k.min(inst.n()), &(r.clone() * r.clone())))
}

/// Same decision with the threshold already squared (used by ladder searches).
pub fn cover_decision_sq<S: Scalar>(inst: &ConvexInstance<S>, k: usize, r_sq: &S) -> Option<Vec<u32>> {
    greedy_cover(inst, k.min(inst.n()), r_sq)
}
