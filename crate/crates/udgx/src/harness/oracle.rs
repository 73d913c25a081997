//! Exhaustive oracles: definitional optima by direct enumeration. These
//! share only the geometric primitives with the fast solvers — no sublist
//! machinery, no pencil tables, no quadtrees — and are the reference side
//! of every cross-verification.

use itertools::Itertools;

use crate::biclique::PairMode;
use crate::error::{Error, Result};
use crate::geom::{squared_distance, Point};
use crate::scalar::{dyadic_i64, exact_f64, order, Scalar, Tol};

const SUBSET_ORACLE_MAX: usize = 20;
const COMBO_ORACLE_MAX_N: usize = 14;
const COMBO_ORACLE_MAX_K: usize = 5;
const TRIPLE_ORACLE_MAX: usize = 400;
const PAIR_ORACLE_MAX: usize = 2000;

fn dist_matrix<S: Scalar>(points: &[Point<S>]) -> Vec<S> {
    let n = points.len();
    if S::EXACT {
        if let Some(g) = crate::scalar::dyadic_grid_f64(
            points.iter().flat_map(|p| [p.x.clone(), p.y.clone()]),
        ) {
            let mut m = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let dx = g[2 * i] - g[2 * j];
                    let dy = g[2 * i + 1] - g[2 * j + 1];
                    m.push(S::from_f64(dx * dx + dy * dy).expect("finite"));
                }
            }
            return m;
        }
    }
    let mut m = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            m.push(squared_distance(&points[i], &points[j]));
        }
    }
    m
}

/// Lossless `f64` mirror of a distance matrix (exact comparisons on doubles)
/// when every entry permits one.
fn mirror_of<S: Scalar>(d: &[S]) -> Option<Vec<f64>> {
    if S::EXACT {
        d.iter().map(exact_f64).collect()
    } else {
        Some(d.iter().map(|v| v.to_f64()).collect())
    }
}

/// Subset-sum weights: integer numerators on the dyadic grid when all
/// weights lie on it, exact scalars otherwise.
enum Sums<S> {
    Int(Vec<i64>),
    Exact(Vec<S>),
}

impl<S: Scalar> Sums<S> {
    fn build(weights: &[S]) -> Sums<S> {
        if S::EXACT {
            if let Some(nums) = weights.iter().map(|w| dyadic_i64(w, 16)).collect::<Option<Vec<i64>>>() {
                let mut sums = vec![0i64; 1 << weights.len()];
                for m in 1usize..(1 << weights.len()) {
                    let low = m.trailing_zeros() as usize;
                    sums[m] = sums[m & (m - 1)] + nums[low];
                }
                return Sums::Int(sums);
            }
        }
        Sums::Exact(subset_sums(weights))
    }

    fn cmp(&self, a: u64, b: u64) -> std::cmp::Ordering {
        match self {
            Sums::Int(v) => v[a as usize].cmp(&v[b as usize]),
            Sums::Exact(v) => order(&v[a as usize], &v[b as usize]),
        }
    }

    fn value(&self, m: u64, weights: &[S]) -> S {
        match self {
            Sums::Int(_) => mask_indices(m)
                .into_iter()
                .fold(S::zero(), |acc, i| acc + weights[i as usize].clone()),
            Sums::Exact(v) => v[m as usize].clone(),
        }
    }
}

fn mask_indices(mut mask: u64) -> Vec<u32> {
    let mut out = Vec::new();
    while mask != 0 {
        let b = mask.trailing_zeros();
        out.push(b);
        mask &= mask - 1;
    }
    out
}

/// All subset weights via one addition per mask.
fn subset_sums<S: Scalar>(weights: &[S]) -> Vec<S> {
    let n = weights.len();
    let mut sums = vec![S::zero(); 1 << n];
    for m in 1usize..(1 << n) {
        let low = m.trailing_zeros() as usize;
        sums[m] = sums[m & (m - 1)].clone() + weights[low].clone();
    }
    sums
}

/// Smallest dominating set by popcount-ordered subset enumeration.
pub fn dominating_min_cardinality<S: Scalar>(
    points: &[Point<S>],
    r_sq: &S,
    tol: &Tol<S>,
) -> Result<(usize, Vec<u32>)> {
    let n = points.len();
    if n > SUBSET_ORACLE_MAX {
        return Err(Error::TooLargeForOracle);
    }
    let d = dist_matrix(points);
    let covers: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&t| tol.le(&d[i * n + t], r_sq))
                .fold(0u64, |acc, t| acc | (1 << t))
        })
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 1..=n {
        for combo in (0..n).combinations(size) {
            let mut covered = 0u64;
            for &c in &combo {
                covered |= covers[c];
            }
            if covered == full {
                return Ok((size, combo.into_iter().map(|c| c as u32).collect()));
            }
        }
    }
    unreachable!("the full set dominates")
}

/// Minimum dominating-set weight for every size bound `k = 1..=n`.
pub fn dominating_weighted_per_k<S: Scalar>(
    points: &[Point<S>],
    weights: &[S],
    r_sq: &S,
    tol: &Tol<S>,
) -> Result<Vec<Option<(S, Vec<u32>)>>> {
    let n = points.len();
    if n > SUBSET_ORACLE_MAX {
        return Err(Error::TooLargeForOracle);
    }
    let d = dist_matrix(points);
    let covers: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&t| tol.le(&d[i * n + t], r_sq))
                .fold(0u64, |acc, t| acc | (1 << t))
        })
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let sums = Sums::build(weights);
    let mut best_by_size: Vec<Option<u64>> = vec![None; n + 1];
    for m in 1u64..(1 << n) {
        let mut covered = 0u64;
        let mut rest = m;
        while rest != 0 {
            covered |= covers[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        if covered != full {
            continue;
        }
        let size = m.count_ones() as usize;
        let better = match best_by_size[size] {
            None => true,
            Some(cur) => sums.cmp(m, cur) == std::cmp::Ordering::Less,
        };
        if better {
            best_by_size[size] = Some(m);
        }
    }
    let mut out: Vec<Option<(S, Vec<u32>)>> = Vec::with_capacity(n);
    let mut run: Option<u64> = None;
    for size in 1..=n {
        if let Some(m) = best_by_size[size] {
            let better = match run {
                None => true,
                Some(cur) => sums.cmp(m, cur) == std::cmp::Ordering::Less,
            };
            if better {
                run = Some(m);
            }
        }
        out.push(run.map(|m| (sums.value(m, weights), mask_indices(m))));
    }
    Ok(out)
}

/// Maximum-weight independent set by subset enumeration; independence is
/// pairwise distance `> r` (strict) or `>= r`.
pub fn mwis<S: Scalar>(
    points: &[Point<S>],
    weights: &[S],
    r_sq: &S,
    tol: &Tol<S>,
    strict: bool,
) -> Result<(S, Vec<u32>)> {
    let n = points.len();
    if n > SUBSET_ORACLE_MAX {
        return Err(Error::TooLargeForOracle);
    }
    let d = dist_matrix(points);
    let conflict: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&t| {
                    t != i
                        && !(if strict {
                            tol.gt(&d[i * n + t], r_sq)
                        } else {
                            tol.ge(&d[i * n + t], r_sq)
                        })
                })
                .fold(0u64, |acc, t| acc | (1 << t))
        })
        .collect();
    let sums = Sums::build(weights);
    let mut best: u64 = 0;
    for m in 1u64..(1 << n) {
        let mut ok = true;
        let mut rest = m;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if conflict[i] & m != 0 {
                ok = false;
                break;
            }
            rest &= rest - 1;
        }
        if ok && sums.cmp(m, best) == std::cmp::Ordering::Greater {
            best = m;
        }
    }
    Ok((sums.value(best, weights), mask_indices(best)))
}

/// Optimal discrete k-center radius (squared) over all center combinations.
pub fn kcenter<S: Scalar>(points: &[Point<S>], k: usize, _tol: &Tol<S>) -> Result<S> {
    let n = points.len();
    if n > COMBO_ORACLE_MAX_N || k > COMBO_ORACLE_MAX_K {
        return Err(Error::TooLargeForOracle);
    }
    if k < 1 || k > n {
        return Err(Error::BadK);
    }
    let d = dist_matrix(points);
    if let Some(m) = mirror_of(&d) {
        let mut best: Option<(f64, usize)> = None;
        for centers in (0..n).combinations(k) {
            let mut worst: (f64, usize) = (f64::NEG_INFINITY, 0);
            for t in 0..n {
                let mut nearest = f64::INFINITY;
                let mut ni = 0usize;
                for &c in &centers {
                    let v = m[c * n + t];
                    if v < nearest {
                        nearest = v;
                        ni = c * n + t;
                    }
                }
                if nearest > worst.0 {
                    worst = (nearest, ni);
                }
            }
            if best.map_or(true, |(b, _)| worst.0 < b) {
                best = Some(worst);
            }
        }
        let (_, idx) = best.expect("k >= 1");
        return Ok(d[idx].clone());
    }
    let mut best: Option<S> = None;
    for centers in (0..n).combinations(k) {
        let mut worst = S::zero();
        for t in 0..n {
            let mut nearest: Option<S> = None;
            for &c in &centers {
                let v = d[c * n + t].clone();
                nearest = Some(match nearest {
                    None => v,
                    Some(cur) => {
                        if order(&v, &cur) == std::cmp::Ordering::Less {
                            v
                        } else {
                            cur
                        }
                    }
                });
            }
            let nv = nearest.unwrap();
            if order(&nv, &worst) == std::cmp::Ordering::Greater {
                worst = nv;
            }
        }
        best = Some(match best {
            None => worst,
            Some(cur) => {
                if order(&worst, &cur) == std::cmp::Ordering::Less {
                    worst
                } else {
                    cur
                }
            }
        });
    }
    Ok(best.expect("k >= 1"))
}

/// Optimal dispersion value (squared min pairwise distance) over all
/// k-subsets.
pub fn dispersion<S: Scalar>(points: &[Point<S>], k: usize, _tol: &Tol<S>) -> Result<S> {
    let n = points.len();
    if n > COMBO_ORACLE_MAX_N || k > COMBO_ORACLE_MAX_K {
        return Err(Error::TooLargeForOracle);
    }
    if k < 2 || k > n {
        return Err(Error::BadK);
    }
    let d = dist_matrix(points);
    if let Some(m) = mirror_of(&d) {
        let mut best: Option<(f64, usize)> = None;
        for subset in (0..n).combinations(k) {
            let mut mn: (f64, usize) = (f64::INFINITY, 0);
            for (x, &i) in subset.iter().enumerate() {
                for &j in &subset[x + 1..] {
                    let v = m[i * n + j];
                    if v < mn.0 {
                        mn = (v, i * n + j);
                    }
                }
            }
            if best.map_or(true, |(b, _)| mn.0 > b) {
                best = Some(mn);
            }
        }
        let (_, idx) = best.expect("k >= 2");
        return Ok(d[idx].clone());
    }
    let mut best: Option<S> = None;
    for subset in (0..n).combinations(k) {
        let mut mn: Option<S> = None;
        for (x, &i) in subset.iter().enumerate() {
            for &j in &subset[x + 1..] {
                let v = d[i * n + j].clone();
                mn = Some(match mn {
                    None => v,
                    Some(cur) => {
                        if order(&v, &cur) == std::cmp::Ordering::Less {
                            v
                        } else {
                            cur
                        }
                    }
                });
            }
        }
        let mv = mn.unwrap();
        best = Some(match best {
            None => mv,
            Some(cur) => {
                if order(&mv, &cur) == std::cmp::Ordering::Greater {
                    mv
                } else {
                    cur
                }
            }
        });
    }
    Ok(best.expect("k >= 2"))
}

/// Exact rank of every pairwise squared distance plus one representative
/// matrix position per rank; ranks preserve the exact order, so the cubic
/// scans below run on integers and values materialize lazily.
fn pair_ranks<S: Scalar>(d: &[S], n: usize) -> (Vec<u32>, Vec<u32>) {
    let mut ranks = vec![u32::MAX; n * n];
    let mut rep: Vec<u32> = Vec::new();
    if let Some(m) = mirror_of(d) {
        let mut items: Vec<(f64, u32)> = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                items.push((m[i * n + j], (i * n + j) as u32));
            }
        }
        items.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut last = f64::NEG_INFINITY;
        for (v, pos) in items {
            if rep.is_empty() || v != last {
                rep.push(pos);
                last = v;
            }
            let r = (rep.len() - 1) as u32;
            let (i, j) = (pos as usize / n, pos as usize % n);
            ranks[i * n + j] = r;
            ranks[j * n + i] = r;
        }
        return (ranks, rep);
    }
    let mut items: Vec<(u32, u32)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            items.push((i as u32, j as u32));
        }
    }
    items.sort_by(|a, b| {
        order(&d[a.0 as usize * n + a.1 as usize], &d[b.0 as usize * n + b.1 as usize])
    });
    for (i, j) in items {
        let pos = i as usize * n + j as usize;
        if rep.last().map_or(true, |&last| d[last as usize] != d[pos]) {
            rep.push(pos as u32);
        }
        let r = (rep.len() - 1) as u32;
        ranks[pos] = r;
        ranks[j as usize * n + i as usize] = r;
    }
    (ranks, rep)
}

/// Best size-3 dispersion: the maximum over triples of the minimum pairwise
/// squared distance, with a witness triple.
pub fn dispersion3<S: Scalar>(points: &[Point<S>], _tol: &Tol<S>) -> Result<(S, (u32, u32, u32))> {
    let n = points.len();
    if n > TRIPLE_ORACLE_MAX {
        return Err(Error::TooLargeForOracle);
    }
    if n < 3 {
        return Err(Error::TooFewPoints);
    }
    let d = dist_matrix(points);
    let (ranks, rep) = pair_ranks(&d, n);
    let mut best_rank = 0u32;
    let mut best_triple = (0u32, 1u32, 2u32);
    let mut found = false;
    for i in 0..n {
        for j in (i + 1)..n {
            let rij = ranks[i * n + j];
            if found && rij <= best_rank {
                continue;
            }
            for k in (j + 1)..n {
                let m = rij.min(ranks[i * n + k]).min(ranks[j * n + k]);
                if !found || m > best_rank {
                    found = true;
                    best_rank = m;
                    best_triple = (i as u32, j as u32, k as u32);
                }
            }
        }
    }
    Ok((d[rep[best_rank as usize] as usize].clone(), best_triple))
}

/// Does a triple with min pairwise distance `>= r` exist (tolerance-aware)?
pub fn triple_far_exists<S: Scalar>(points: &[Point<S>], r_sq: &S, tol: &Tol<S>) -> Result<bool> {
    let (best, _) = dispersion3(points, tol)?;
    Ok(tol.ge(&best, r_sq))
}

fn related<S: Scalar>(d: &S, r_sq: &S, tol: &Tol<S>, mode: PairMode) -> bool {
    match mode {
        PairMode::Far => tol.gt(d, r_sq),
        PairMode::Near => tol.le(d, r_sq),
    }
}

/// Maximum-weight triple under the pair relation by cubic scan (for each
/// related pair, the heaviest compatible third point in weight order).
pub fn cloud_triple<S: Scalar>(
    points: &[Point<S>],
    weights: &[S],
    r_sq: &S,
    tol: &Tol<S>,
    mode: PairMode,
) -> Result<Option<(S, [u32; 3])>> {
    let n = points.len();
    if n > TRIPLE_ORACLE_MAX {
        return Err(Error::TooLargeForOracle);
    }
    if n < 3 {
        return Err(Error::TooFewPoints);
    }
    let d = dist_matrix(points);
    let rel: Vec<bool> = relation_matrix(&d, n, r_sq, tol, mode);
    let mut by_weight: Vec<u32> = (0..n as u32).collect();
    by_weight.sort_by(|&x, &y| order(&weights[y as usize], &weights[x as usize]).then(x.cmp(&y)));
    let nums: Option<Vec<i64>> = if S::EXACT {
        weights.iter().map(|w| dyadic_i64(w, 16)).collect()
    } else {
        None
    };
    let sum3 = |idx: &[u32; 3]| -> S {
        idx.iter().fold(S::zero(), |acc, &t| acc + weights[t as usize].clone())
    };
    let cmp3 = |a: &[u32; 3], b: &[u32; 3]| -> std::cmp::Ordering {
        match &nums {
            Some(v) => {
                let sa: i64 = a.iter().map(|&t| v[t as usize]).sum();
                let sb: i64 = b.iter().map(|&t| v[t as usize]).sum();
                sa.cmp(&sb)
            }
            None => order(&sum3(a), &sum3(b)),
        }
    };
    let mut best: Option<[u32; 3]> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            if !rel[i * n + j] {
                continue;
            }
            let k = by_weight.iter().copied().find(|&k| {
                let k = k as usize;
                k != i && k != j && rel[i * n + k] && rel[j * n + k]
            });
            if let Some(k) = k {
                let mut idx = [i as u32, j as u32, k];
                idx.sort_unstable();
                let better = match &best {
                    None => true,
                    Some(cur) => match cmp3(&idx, cur) {
                        std::cmp::Ordering::Greater => true,
                        std::cmp::Ordering::Less => false,
                        std::cmp::Ordering::Equal => idx < *cur,
                    },
                };
                if better {
                    best = Some(idx);
                }
            }
        }
    }
    Ok(best.map(|idx| (sum3(&idx), idx)))
}

/// Mode relation over all ordered pairs, through the mirror when lossless.
fn relation_matrix<S: Scalar>(
    d: &[S],
    n: usize,
    r_sq: &S,
    tol: &Tol<S>,
    mode: PairMode,
) -> Vec<bool> {
    if S::EXACT {
        if let (Some(m), Some(rm)) = (mirror_of(d), exact_f64(r_sq)) {
            return (0..n * n)
                .map(|pos| {
                    let (i, j) = (pos / n, pos % n);
                    i != j
                        && match mode {
                            PairMode::Far => m[pos] > rm,
                            PairMode::Near => m[pos] <= rm,
                        }
                })
                .collect();
        }
    }
    (0..n * n)
        .map(|pos| {
            let (i, j) = (pos / n, pos % n);
            i != j && related(&d[pos], r_sq, tol, mode)
        })
        .collect()
}

/// Maximum-weight related pair by quadratic scan.
pub fn cloud_pair<S: Scalar>(
    points: &[Point<S>],
    weights: &[S],
    r_sq: &S,
    tol: &Tol<S>,
    mode: PairMode,
) -> Result<Option<(S, (u32, u32))>> {
    let n = points.len();
    if n > PAIR_ORACLE_MAX {
        return Err(Error::TooLargeForOracle);
    }
    if n < 2 {
        return Err(Error::TooFewPoints);
    }
    let mut best: Option<(S, (u32, u32))> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let dv = squared_distance(&points[i], &points[j]);
            if !related(&dv, r_sq, tol, mode) {
                continue;
            }
            let w = weights[i].clone() + weights[j].clone();
            let better = match &best {
                None => true,
                Some((cur, cij)) => match order(&w, cur) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => (i as u32, j as u32) < *cij,
                },
            };
            if better {
                best = Some((w, (i as u32, j as u32)));
            }
        }
    }
    Ok(best)
}

/// Pairwise check used when re-validating solver witnesses.
pub fn validate_pairwise<S: Scalar>(
    points: &[Point<S>],
    ids: &[u32],
    r_sq: &S,
    tol: &Tol<S>,
    mode: PairMode,
    strict_far: bool,
) -> bool {
    for (x, &i) in ids.iter().enumerate() {
        for &j in &ids[x + 1..] {
            if i == j {
                return false;
            }
            let d = squared_distance(&points[i as usize], &points[j as usize]);
            let ok = match mode {
                PairMode::Far => {
                    if strict_far {
                        tol.gt(&d, r_sq)
                    } else {
                        tol.ge(&d, r_sq)
                    }
                }
                PairMode::Near => tol.le(&d, r_sq),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Tol;

    fn pts(v: &[(f64, f64)]) -> Vec<Point<f64>> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn tol() -> Tol<f64> {
        Tol::with_eps(1e-9).unwrap()
    }

    #[test]
    fn weighted_square_fixture() {
        // this is the reference value the dominating-set example freezes
        let p = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let w = vec![5.0, 1.0, 1.0, 9.0];
        let per_k = dominating_weighted_per_k(&p, &w, &1.0, &tol()).unwrap();
        assert_eq!(per_k[1].as_ref().map(|x| x.0), Some(2.0));
        assert_eq!(per_k[1].as_ref().map(|x| x.1.clone()), Some(vec![1, 2]));
    }

    #[test]
    fn mwis_triangle_fixture() {
        let h = 3.0f64.sqrt();
        let p = pts(&[(0.0, 0.0), (2.0, 0.0), (1.0, h)]);
        let (w, m) = mwis(&p, &[1.0, 2.0, 3.0], &1.0, &tol(), true).unwrap();
        assert_eq!(w, 6.0);
        assert_eq!(m, vec![0, 1, 2]);
    }

    #[test]
    fn far_triple_cloud_fixture() {
        let p = pts(&[(0.0, 0.0), (2.0, 0.0), (0.0, 2.0), (0.5, 0.0)]);
        let w = vec![3.0, 5.0, 7.0, 100.0];
        let got = cloud_triple(&p, &w, &1.0, &tol(), PairMode::Far).unwrap().unwrap();
        assert_eq!(got.0, 112.0);
        assert_eq!(got.1, [1, 2, 3]);
    }

    #[test]
    fn size_guards() {
        let p = pts(&(0..25).map(|i| (i as f64, 0.0)).collect::<Vec<_>>());
        assert_eq!(
            dominating_min_cardinality(&p, &1.0, &tol()).unwrap_err(),
            Error::TooLargeForOracle
        );
        assert_eq!(kcenter(&p, 2, &tol()).unwrap_err(), Error::TooLargeForOracle);
    }
}
