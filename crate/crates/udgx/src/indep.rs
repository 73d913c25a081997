//! Independent sets on the convex cycle.
//!
//! `solve_mwis` runs the diagonal dynamic program: for every ordered far
//! pair `(i, j)`, the open arc members beyond threshold from both endpoints
//! are sorted by the pencil parameter of the chord `(i, j)`. Querying the
//! suffix beyond a threshold key then yields the best subproblem value over
//! exactly the members strictly outside any disk through the chord, so the
//! whole table is shared by every enclosing disk without storing
//! per-triple values. Pairs are processed in increasing CCW arc length so
//! every dependency lives on a strictly shorter arc, which also handles
//! wrap-around pairs uniformly.
//!
//! `triple_far_decision` is the size-3 test: far-neighbor spans `a_i`/`b_i`
//! (non-strict threshold), the folded index array, and a range-minimum
//! structure locate a feasible point, from which a witness triple follows
//! by a four-way case split.

use std::cmp::Ordering;

use crate::cycle::{ConvexInstance, FarNeighborIndex, Sublist};
use crate::error::{Error, Result};
use crate::scalar::{order, Scalar};

/// Default size cap for the cubic-memory MWIS table; override through the
/// `*_capped` entry points.
pub const DEFAULT_MWIS_CAP: usize = 300;

/// Pencil key of a point `q` against the directed chord `a -> b`: the raw
/// perpendicular offset of the circumcenter carries a positive common
/// factor `|b - a|^2`, so the order-equivalent ratio
/// `(A.Q - |Q|^2) / (2 cross(A, Q))` with `A = b - a`, `Q = q - a` is used
/// instead. On the bounded dyadic grid both parts are exact 50-bit values,
/// stored as integers and compared in `i128`; otherwise they stay scalars
/// and compare by cross-multiplication. Denominators are normalized
/// positive.
#[derive(Clone, Debug)]
enum Key<S> {
    Int(i64, i64),
    Rat(S, S),
}

enum KeyVec<S> {
    Int(Vec<(i64, i64)>),
    Rat(Vec<(S, S)>),
}

fn cmp_int(a: (i64, i64), b: (i64, i64)) -> Ordering {
    (a.0 as i128 * b.1 as i128).cmp(&(b.0 as i128 * a.1 as i128))
}

fn cmp_rat_parts<S: Scalar>(a: &(S, S), b: &(S, S)) -> Ordering {
    order(&(a.0.clone() * b.1.clone()), &(b.0.clone() * a.1.clone()))
}

impl<S: Scalar> KeyVec<S> {
    fn len(&self) -> usize {
        match self {
            KeyVec::Int(v) => v.len(),
            KeyVec::Rat(v) => v.len(),
        }
    }

    fn cmp_at(&self, idx: usize, t: &Key<S>) -> Ordering {
        match (self, t) {
            (KeyVec::Int(v), Key::Int(bn, bd)) => cmp_int(v[idx], (*bn, *bd)),
            (KeyVec::Rat(v), Key::Rat(bn, bd)) => {
                order(&(v[idx].0.clone() * bd.clone()), &(bn.clone() * v[idx].1.clone()))
            }
            _ => unreachable!("keys of one table share a representation"),
        }
    }
}

/// First index in `0..len` where `pred` turns false (`pred` monotone).
fn lower_bound(len: usize, pred: impl Fn(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0usize, len);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Coordinates mirrored onto the bounded dyadic grid, under which every
/// pencil numerator and denominator is exact in both `f64` and `i64`.
fn dyadic_grid<S: Scalar>(inst: &ConvexInstance<S>) -> Option<Vec<(f64, f64)>> {
    let flat = crate::scalar::dyadic_grid_f64(
        inst.points().iter().flat_map(|p| [p.x.clone(), p.y.clone()]),
    )?;
    Some(flat.chunks_exact(2).map(|c| (c[0], c[1])).collect())
}

struct PairEntry<S> {
    i: u32,
    j: u32,
    members: Vec<u32>,
    keys: KeyVec<S>,
    suffix_val: Vec<S>,
    suffix_arg: Vec<u32>,
}

/// Per-ordered-pair pencil arrays for one (radius, strictness, weights)
/// configuration.
pub struct MwisTable<'a, S: Scalar> {
    inst: &'a ConvexInstance<S>,
    weights: Vec<S>,
    r_sq: S,
    strict: bool,
    grid: Option<Vec<(f64, f64)>>,
    pair_pos: Vec<u32>,
    pairs: Vec<PairEntry<S>>,
}

const NO_PAIR: u32 = u32::MAX;

impl<'a, S: Scalar> MwisTable<'a, S> {
    pub fn build(
        inst: &'a ConvexInstance<S>,
        r_sq: S,
        strict: bool,
        weights: Vec<S>,
        cap: usize,
    ) -> Result<Self> {
        let n = inst.n();
        if n > cap {
            return Err(Error::TooLarge(n, cap));
        }
        debug_assert_eq!(weights.len(), n);
        let nu = n as u32;
        let thr = inst.threshold(r_sq.clone());
        let mut order_pairs: Vec<(u32, u32, u32)> = Vec::new(); // (arc, i, j)
        for i in 0..nu {
            for j in 0..nu {
                if i != j && inst.far_at_t(i, j, &thr, strict) {
                    order_pairs.push(((j + nu - i) % nu, i, j));
                }
            }
        }
        order_pairs.sort_unstable();

        let mut table = MwisTable {
            inst,
            weights,
            r_sq,
            strict,
            grid: dyadic_grid(inst),
            pair_pos: vec![NO_PAIR; n * n],
            pairs: Vec::with_capacity(order_pairs.len()),
        };

        // scratch buffers shared across pairs keep the heap quiet
        let mut scratch_int: Vec<(i64, i64, u32)> = Vec::new();
        let mut scratch_rat: Vec<((S, S), u32)> = Vec::new();
        for &(_, i, j) in &order_pairs {
            let (keys, members): (KeyVec<S>, Vec<u32>) = if table.grid.is_some() {
                scratch_int.clear();
                for l in Sublist::open_between(i, j, nu).iter(nu) {
                    if table.inst.far_at_t(l, i, &thr, table.strict)
                        && table.inst.far_at_t(l, j, &thr, table.strict)
                    {
                        match table.key_for(i, j, l)? {
                            Key::Int(kn, kd) => scratch_int.push((kn, kd, l)),
                            Key::Rat(..) => unreachable!(),
                        }
                    }
                }
                scratch_int.sort_unstable_by(|a, b| {
                    cmp_int((a.0, a.1), (b.0, b.1)).then(a.2.cmp(&b.2))
                });
                if S::EXACT && strict {
                    for w in scratch_int.windows(2) {
                        if cmp_int((w[0].0, w[0].1), (w[1].0, w[1].1)) == Ordering::Equal {
                            return Err(Error::DegenerateInput);
                        }
                    }
                }
                (
                    KeyVec::Int(scratch_int.iter().map(|e| (e.0, e.1)).collect()),
                    scratch_int.iter().map(|e| e.2).collect(),
                )
            } else {
                scratch_rat.clear();
                for l in Sublist::open_between(i, j, nu).iter(nu) {
                    if table.inst.far_at_t(l, i, &thr, table.strict)
                        && table.inst.far_at_t(l, j, &thr, table.strict)
                    {
                        match table.key_for(i, j, l)? {
                            Key::Rat(kn, kd) => scratch_rat.push(((kn, kd), l)),
                            Key::Int(..) => unreachable!(),
                        }
                    }
                }
                scratch_rat.sort_by(|a, b| {
                    cmp_rat_parts(&a.0, &b.0).then(a.1.cmp(&b.1))
                });
                if S::EXACT && strict {
                    for w in scratch_rat.windows(2) {
                        if cmp_rat_parts(&w[0].0, &w[1].0) == Ordering::Equal {
                            return Err(Error::DegenerateInput);
                        }
                    }
                }
                (
                    KeyVec::Rat(scratch_rat.iter().map(|e| e.0.clone()).collect()),
                    scratch_rat.iter().map(|e| e.1).collect(),
                )
            };
            let m = members.len();
            let mut suffix_val = Vec::with_capacity(m);
            let mut suffix_arg = vec![0u32; m];
            // forward pass computes g; the suffix maxima are folded in below
            for &l in &members {
                suffix_val.push(table.member_value(i, j, l)?);
            }
            if m > 0 {
                suffix_arg[m - 1] = (m - 1) as u32;
            }
            for t in (0..m.saturating_sub(1)).rev() {
                if order(&suffix_val[t + 1], &suffix_val[t]) == Ordering::Greater {
                    suffix_val[t] = suffix_val[t + 1].clone();
                    suffix_arg[t] = suffix_arg[t + 1];
                } else {
                    suffix_arg[t] = t as u32;
                }
            }
            let id = table.pairs.len() as u32;
            table.pair_pos[i as usize * n + j as usize] = id;
            table.pairs.push(PairEntry { i, j, members, keys, suffix_val, suffix_arg });
        }
        Ok(table)
    }

    /// Key of `q` against the chord `a -> b`; errors on collinearity.
    fn key_for(&self, a: u32, b: u32, q: u32) -> Result<Key<S>> {
        if let Some(g) = &self.grid {
            let (ax, ay) = g[a as usize];
            let (bx, by) = g[b as usize];
            let (qx, qy) = g[q as usize];
            let (ux, uy) = (bx - ax, by - ay);
            let (vx, vy) = (qx - ax, qy - ay);
            let num = ux * vx + uy * vy - (vx * vx + vy * vy);
            let den = 2.0 * (ux * vy - uy * vx);
            if den == 0.0 {
                return Err(Error::DegenerateCircle);
            }
            let scale = 4294967296.0; // 2^32: both parts are exact multiples
            let ni = (num * scale) as i64;
            let di = (den * scale) as i64;
            debug_assert_eq!(ni as f64, num * scale);
            debug_assert_eq!(di as f64, den * scale);
            Ok(if di < 0 { Key::Int(-ni, -di) } else { Key::Int(ni, di) })
        } else {
            let pa = self.inst.point(a);
            let pb = self.inst.point(b);
            let pq = self.inst.point(q);
            let ux = pb.x.clone() - pa.x.clone();
            let uy = pb.y.clone() - pa.y.clone();
            let vx = pq.x.clone() - pa.x.clone();
            let vy = pq.y.clone() - pa.y.clone();
            let num = ux.clone() * vx.clone() + uy.clone() * vy.clone()
                - (vx.clone() * vx.clone() + vy.clone() * vy.clone());
            let den = (ux * vy - uy * vx) * S::from_int(2);
            if den.is_zero() {
                return Err(Error::DegenerateCircle);
            }
            Ok(if den < S::zero() { Key::Rat(-num, -den) } else { Key::Rat(num, den) })
        }
    }

    pub fn n(&self) -> u32 {
        self.inst.n() as u32
    }

    fn pair(&self, i: u32, j: u32) -> Option<&PairEntry<S>> {
        let pos = self.pair_pos[i as usize * self.inst.n() + j as usize];
        (pos != NO_PAIR).then(|| &self.pairs[pos as usize])
    }

    /// Members of `P_0(i, j)`, for definitional cross-checks.
    pub fn members_of(&self, i: u32, j: u32) -> Option<&[u32]> {
        self.pair(i, j).map(|e| &e.members[..])
    }

    /// g(l) for the pair `(i, j)`: value of keeping `l` as the next hull
    /// point, split into its two shorter-arc subproblems.
    pub fn member_value(&self, i: u32, j: u32, l: u32) -> Result<S> {
        let thr1 = self.key_for(i, l, j)?;
        let thr2 = self.key_for(l, j, i)?;
        let f1 = self.suffix_query(i, l, Some(&thr1));
        let f2 = self.suffix_query(l, j, Some(&thr2));
        Ok(f1 + f2 + self.weights[l as usize].clone())
    }

    /// First suffix position qualifying against the threshold: strictly
    /// greater keys under the strict threshold, `>=` under the non-strict
    /// one (a boundary point counts as outside there, which is the symbolic
    /// perturbation the dispersion extraction relies on).
    fn suffix_start(&self, entry: &PairEntry<S>, thr: Option<&Key<S>>) -> usize {
        match thr {
            None => 0,
            Some(t) if self.strict => {
                lower_bound(entry.keys.len(), |idx| entry.keys.cmp_at(idx, t) != Ordering::Greater)
            }
            Some(t) => lower_bound(entry.keys.len(), |idx| entry.keys.cmp_at(idx, t) == Ordering::Less),
        }
    }

    /// Best subproblem value over members outside the threshold disk (the
    /// whole array when `None`); zero on an empty suffix.
    fn suffix_query(&self, i: u32, j: u32, thr: Option<&Key<S>>) -> S {
        let entry = self.pair(i, j).expect("dependency pair is canonical and shorter");
        let pos = self.suffix_start(entry, thr);
        if pos >= entry.suffix_val.len() {
            S::zero()
        } else {
            entry.suffix_val[pos].clone()
        }
    }

    fn collect_members(&self, i: u32, j: u32, thr: Option<&Key<S>>, out: &mut Vec<u32>) -> Result<()> {
        let entry = self.pair(i, j).expect("canonical pair");
        let pos = self.suffix_start(entry, thr);
        if pos >= entry.suffix_val.len() || !(entry.suffix_val[pos] > S::zero()) {
            return Ok(());
        }
        let argpos = entry.suffix_arg[pos] as usize;
        let l = entry.members[argpos];
        out.push(l);
        let thr1 = self.key_for(i, l, j)?;
        let thr2 = self.key_for(l, j, i)?;
        self.collect_members(i, l, Some(&thr1), out)?;
        self.collect_members(l, j, Some(&thr2), out)?;
        Ok(())
    }
}

/// `f(i, j, k)` through the pencil table; `k = None` is the dummy point
/// (the open halfplane right of the chord).
pub fn eval_f<S: Scalar>(table: &MwisTable<'_, S>, i: u32, j: u32, k: Option<u32>) -> Result<S> {
    let n = table.n();
    if i == j || table.pair(i, j).is_none() {
        return Err(Error::NotCanonical);
    }
    match k {
        None => Ok(table.suffix_query(i, j, None)),
        Some(k) => {
            let in_left_arc = Sublist::open_between(j, i, n).contains(k, n);
            if !in_left_arc
                || !table.inst.far_at(i, k, &table.r_sq, table.strict)
                || !table.inst.far_at(j, k, &table.r_sq, table.strict)
            {
                return Err(Error::NotCanonical);
            }
            let thr = table.key_for(i, j, k)?;
            Ok(table.suffix_query(i, j, Some(&thr)))
        }
    }
}

fn mwis_core<S: Scalar>(
    inst: &ConvexInstance<S>,
    r_sq: &S,
    strict: bool,
    weights: Vec<S>,
    cap: usize,
) -> Result<(S, Vec<u32>)> {
    let n = inst.n() as u32;
    // single heaviest point: the optimum when no far pair exists
    let best_single = (0..n)
        .max_by(|&x, &y| order(&weights[x as usize], &weights[y as usize]).then(y.cmp(&x)))
        .expect("non-empty instance");
    let mut best: (S, Vec<u32>) = (weights[best_single as usize].clone(), vec![best_single]);

    if n >= 2 {
        let table = MwisTable::build(inst, r_sq.clone(), strict, weights.clone(), cap)?;
        let mut best_pair: Option<(S, u32, u32)> = None;
        for entry in &table.pairs {
            let total = table.suffix_query(entry.i, entry.j, None)
                + weights[entry.i as usize].clone()
                + weights[entry.j as usize].clone();
            let better = match &best_pair {
                None => true,
                Some((cur, _, _)) => order(&total, cur) == std::cmp::Ordering::Greater,
            };
            if better {
                best_pair = Some((total, entry.i, entry.j));
            }
        }
        if let Some((total, i, j)) = best_pair {
            if order(&total, &best.0) == std::cmp::Ordering::Greater {
                let mut members = vec![i, j];
                table.collect_members(i, j, None, &mut members)?;
                members.sort_unstable();
                debug_assert_eq!(
                    {
                        let sum = members
                            .iter()
                            .fold(S::zero(), |acc, &l| acc + weights[l as usize].clone());
                        order(&sum, &total)
                    },
                    std::cmp::Ordering::Equal
                );
                best = (total, members);
            }
        }
    }
    Ok(best)
}

/// Maximum-weight independent set: the heaviest subset with all pairwise
/// distances strictly beyond the instance radius.
pub fn solve_mwis<S: Scalar>(inst: &ConvexInstance<S>) -> Result<(S, Vec<u32>)> {
    solve_mwis_capped(inst, DEFAULT_MWIS_CAP)
}

pub fn solve_mwis_capped<S: Scalar>(inst: &ConvexInstance<S>, cap: usize) -> Result<(S, Vec<u32>)> {
    inst.require_positive_weights()?;
    mwis_core(inst, inst.r_sq(), true, inst.weights().to_vec(), cap)
}

/// Largest subset with every pairwise distance beyond `r` (`>` when strict,
/// `>=` otherwise); unit-weight reduction to the DP.
pub fn max_cardinality_far_set<S: Scalar>(
    inst: &ConvexInstance<S>,
    r: &S,
    strict: bool,
) -> Result<Vec<u32>> {
    max_cardinality_far_set_sq(inst, &(r.clone() * r.clone()), strict, DEFAULT_MWIS_CAP)
}

pub fn max_cardinality_far_set_sq<S: Scalar>(
    inst: &ConvexInstance<S>,
    r_sq: &S,
    strict: bool,
    cap: usize,
) -> Result<Vec<u32>> {
    let ones = vec![S::one(); inst.n()];
    Ok(mwis_core(inst, r_sq, strict, ones, cap)?.1)
}

/// Greedy pairwise-far subset, stopping once `want` points are kept. A
/// cheap cardinality lower bound: when it reaches `want`, the exact DP
/// decision is already settled.
pub fn greedy_far_set_sq<S: Scalar>(
    inst: &ConvexInstance<S>,
    r_sq: &S,
    strict: bool,
    want: usize,
) -> Vec<u32> {
    let n = inst.n() as u32;
    let thr = inst.threshold(r_sq.clone());
    let mut kept: Vec<u32> = Vec::with_capacity(want);
    for t in 0..n {
        if kept.iter().all(|&s| inst.far_at_t(s, t, &thr, strict)) {
            kept.push(t);
            if kept.len() >= want {
                break;
            }
        }
    }
    kept
}

// ---------------------------------------------------------------------------
// Size-3 independent set (non-strict threshold)
// ---------------------------------------------------------------------------

/// Far spans and the folded first-far array with a sparse-table range
/// minimum, realizing the feasible-point test.
pub struct FeasibleScan {
    n: u32,
    a: Vec<Option<u32>>,
    b: Vec<Option<u32>>,
    aprime: Vec<u32>,
    levels: Vec<Vec<(u32, u32)>>,
}

impl FeasibleScan {
    pub fn build<S: Scalar>(inst: &ConvexInstance<S>, r_sq: &S) -> Self {
        let n = inst.n() as u32;
        let idx = FarNeighborIndex::with_r_sq(inst, r_sq.clone(), false);
        let a: Vec<Option<u32>> = (0..n).map(|i| idx.first_far_ccw(i, i)).collect();
        let b: Vec<Option<u32>> = (0..n).map(|i| idx.first_far_cw(i, i)).collect();
        let aprime: Vec<u32> = (0..n as usize)
            .map(|k| match a[k] {
                None => u32::MAX,
                Some(ak) => {
                    if ak > k as u32 {
                        ak
                    } else {
                        ak + n
                    }
                }
            })
            .collect();
        let mut levels: Vec<Vec<(u32, u32)>> =
            vec![aprime.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect()];
        let mut span = 1usize;
        while 2 * span <= n as usize {
            let prev = levels.last().unwrap();
            let mut cur = Vec::with_capacity(prev.len().saturating_sub(span));
            for i in 0..prev.len() - span {
                cur.push(prev[i].min(prev[i + span]));
            }
            levels.push(cur);
            span *= 2;
        }
        FeasibleScan { n, a, b, aprime, levels }
    }

    pub fn a(&self, i: u32) -> Option<u32> {
        self.a[i as usize]
    }

    pub fn b(&self, i: u32) -> Option<u32> {
        self.b[i as usize]
    }

    pub fn aprime(&self) -> &[u32] {
        &self.aprime
    }

    /// Minimum of the folded array on the inclusive range, with its index.
    fn rmq(&self, lo: u32, hi: u32) -> (u32, u32) {
        debug_assert!(lo <= hi && hi < self.n);
        let len = (hi - lo + 1) as usize;
        let lvl = usize::BITS as usize - 1 - (len.leading_zeros() as usize);
        let span = 1usize << lvl;
        self.levels[lvl][lo as usize].min(self.levels[lvl][hi as usize + 1 - span])
    }
}

/// Three points with pairwise distance at least `r`, or `None`.
pub fn triple_far_decision<S: Scalar>(
    inst: &ConvexInstance<S>,
    r: &S,
) -> Result<Option<(u32, u32, u32)>> {
    triple_far_decision_sq(inst, &(r.clone() * r.clone()))
}

pub fn triple_far_decision_sq<S: Scalar>(
    inst: &ConvexInstance<S>,
    r_sq: &S,
) -> Result<Option<(u32, u32, u32)>> {
    let n = inst.n() as u32;
    if n < 3 {
        return Err(Error::TooFewPoints);
    }
    if !(*r_sq > S::zero()) {
        return Ok(Some((0, 1, 2)));
    }
    let scan = FeasibleScan::build(inst, r_sq);
    for i in 0..n {
        let (ai, bi) = match (scan.a(i), scan.b(i)) {
            (Some(ai), Some(bi)) if ai != bi => (ai, bi),
            _ => continue,
        };
        let hit = if ai < bi {
            let (mn, arg) = scan.rmq(ai, bi);
            (mn <= bi).then_some(arg)
        } else {
            let (mn1, arg1) = scan.rmq(ai, n - 1);
            if mn1 <= bi + n {
                Some(arg1)
            } else {
                let (mn2, arg2) = scan.rmq(0, bi);
                (mn2 <= bi).then_some(arg2)
            }
        };
        if let Some(k) = hit {
            let ak = scan.a(k).expect("folded entry was finite");
            let near_j = !inst.far_at(i, k, r_sq, false);
            let near_k = !inst.far_at(i, ak, r_sq, false);
            let triple = match (near_j, near_k) {
                (false, false) => (i, k, ak),
                (true, true) => (i, ai, bi),
                (true, false) => (i, ai, ak),
                (false, true) => (i, k, bi),
            };
            let mut t = [triple.0, triple.1, triple.2];
            t.sort_unstable();
            debug_assert!(
                t[0] != t[1]
                    && t[1] != t[2]
                    && inst.far_at(t[0], t[1], r_sq, false)
                    && inst.far_at(t[0], t[2], r_sq, false)
                    && inst.far_at(t[1], t[2], r_sq, false),
                "witness triple must verify"
            );
            return Ok(Some((t[0], t[1], t[2])));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::harness::gen::gen_convex;
    use crate::harness::oracle;
    use crate::scalar::Tol;

    fn inst_of(pts: Vec<(f64, f64)>, weights: Vec<f64>, r: f64) -> ConvexInstance<f64> {
        let points = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
        ConvexInstance::new(points, weights, r, Tol::with_eps(1e-9).unwrap()).unwrap()
    }

    #[test]
    fn mwis_triangle_all_far() {
        let h = 3.0f64.sqrt();
        let inst = inst_of(vec![(0.0, 0.0), (2.0, 0.0), (1.0, h)], vec![1.0, 2.0, 3.0], 1.0);
        let (w, members) = solve_mwis(&inst).unwrap();
        assert_eq!(w, 6.0);
        assert_eq!(members, vec![0, 1, 2]);
    }

    #[test]
    fn mwis_unit_square() {
        // sides have distance exactly 1 (edges); only diagonal pairs are independent
        let inst = inst_of(
            vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            vec![1.0; 4],
            1.0,
        );
        let (w, members) = solve_mwis(&inst).unwrap();
        assert_eq!(w, 2.0);
        assert_eq!(members.len(), 2);
        assert_eq!((members[1] + 4 - members[0]) % 4, 2, "diagonal pair");
    }

    #[test]
    fn far_set_square_and_pentagon() {
        let inst = inst_of(
            vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            vec![1.0; 4],
            1.0,
        );
        assert_eq!(max_cardinality_far_set(&inst, &1.0, false).unwrap().len(), 4);
        assert_eq!(max_cardinality_far_set(&inst, &1.0, true).unwrap().len(), 2);

        let pts: Vec<(f64, f64)> = (0..5)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / 5.0;
                (a.cos(), a.sin())
            })
            .collect();
        let inst = inst_of(pts, vec![1.0; 5], 1.0);
        assert_eq!(max_cardinality_far_set(&inst, &1.0, true).unwrap().len(), 5);
    }

    #[test]
    fn eval_f_empty_and_halfplane_dominates() {
        let inst = gen_convex(24, 5, 3.0).unwrap();
        let table =
            MwisTable::build(&inst, *inst.r_sq(), true, inst.weights().to_vec(), DEFAULT_MWIS_CAP)
                .unwrap();
        let n = inst.n() as u32;
        let mut checked = 0;
        for i in 0..n {
            for j in 0..n {
                if eval_f(&table, i, j, None).is_err() {
                    continue;
                }
                let f0 = eval_f(&table, i, j, None).unwrap();
                for k in Sublist::open_between(j, i, n).iter(n) {
                    if let Ok(fk) = eval_f(&table, i, j, Some(k)) {
                        assert!(f0 >= fk, "halfplane dominates every disk");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn eval_f_matches_brute_scan() {
        use crate::geom::outside_disk;
        for seed in [1u64, 2, 9] {
            let inst = gen_convex(20, seed, 2.5).unwrap();
            let n = inst.n() as u32;
            let table = MwisTable::build(
                &inst,
                *inst.r_sq(),
                true,
                inst.weights().to_vec(),
                DEFAULT_MWIS_CAP,
            )
            .unwrap();
            for i in 0..n {
                for j in 0..n {
                    for k in Sublist::open_between(j, i, n).iter(n) {
                        let got = match eval_f(&table, i, j, Some(k)) {
                            Ok(v) => v,
                            Err(_) => continue,
                        };
                        // definitional: best g over members strictly outside D(i, j, k)
                        let mut want = 0.0f64;
                        for l in Sublist::open_between(i, j, n).iter(n) {
                            if !inst.far_at(l, i, inst.r_sq(), true)
                                || !inst.far_at(l, j, inst.r_sq(), true)
                            {
                                continue;
                            }
                            if outside_disk(inst.point(i), inst.point(j), inst.point(k), inst.point(l), inst.tol())
                                .unwrap()
                            {
                                let g = table.member_value(i, j, l).unwrap();
                                if g > want {
                                    want = g;
                                }
                            }
                        }
                        assert!((got - want).abs() < 1e-9, "i={i} j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn mwis_matches_oracle_small_random() {
        for seed in 0..30u64 {
            let inst = gen_convex(4 + (seed % 9) as usize, seed ^ 0x7777, 1.2 + (seed % 4) as f64).unwrap();
            let weights: Vec<f64> = (0..inst.n()).map(|i| 0.5 + ((seed + 3 * i as u64) % 9) as f64).collect();
            let inst = inst.with_weights(weights).unwrap();
            let (w, members) = solve_mwis(&inst).unwrap();
            let (want, _) = oracle::mwis(inst.points(), inst.weights(), inst.r_sq(), inst.tol(), true).unwrap();
            assert!((w - want).abs() < 1e-9, "seed={seed} got={w} want={want}");
            for (x, &mx) in members.iter().enumerate() {
                for &my in &members[x + 1..] {
                    assert!(inst.far_at(mx, my, inst.r_sq(), true));
                }
            }
            let sum: f64 = members.iter().map(|&m| inst.weight(m)).sum();
            assert!((sum - w).abs() < 1e-12);
        }
    }

    #[test]
    fn triple_square_cases() {
        let inst = inst_of(
            vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            vec![1.0; 4],
            1.0,
        );
        assert_eq!(triple_far_decision(&inst, &1.2).unwrap(), None);
        let t = triple_far_decision(&inst, &1.0).unwrap().unwrap();
        assert!(t.0 < t.1 && t.1 < t.2);
    }

    #[test]
    fn triple_matches_cubic_oracle() {
        for seed in 0..60u64 {
            let inst = gen_convex(3 + (seed % 40) as usize, seed ^ 0x3333, 1.0 + (seed % 6) as f64).unwrap();
            let (ladder, _) = inst.distance_ladder_sq();
            let r_sq = ladder[(seed as usize * 7) % ladder.len()];
            let got = triple_far_decision_sq(&inst, &r_sq).unwrap();
            let want = oracle::triple_far_exists(inst.points(), &r_sq, inst.tol()).unwrap();
            assert_eq!(got.is_some(), want, "seed={seed}");
        }
    }
}
