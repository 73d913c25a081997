//! The cyclic convex point list: validated instances, inclusive cyclic
//! sublists, and the far-neighbor queries `a_i^j` / `b_i^j` (first point at
//! or beyond the distance threshold counterclockwise / clockwise from a
//! start position).
//!
//! Far-neighbor queries run against a complete binary tree over the cyclic
//! order whose nodes own contiguous point blocks with bounding boxes; a
//! block whose box cannot reach the threshold is skipped whole. Instances
//! small enough to carry a cached distance matrix answer the same queries by
//! a direct scan, which is faster at verification scale.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::geom::{squared_distance, validate_convex_ccw, Point};

use crate::scalar::{exact_f64, PredicateMode, Scalar, Tol};

/// Cyclic inclusive index range over `n` points. `len == n` is the full
/// cycle; `Empty` is distinct from every arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sublist {
    Empty,
    Arc { start: u32, len: u32 },
}

impl Sublist {
    /// Inclusive arc from `start` CCW to `end`.
    pub fn arc(start: u32, end: u32, n: u32) -> Sublist {
        debug_assert!(start < n && end < n);
        Sublist::Arc { start, len: (end + n - start) % n + 1 }
    }

    pub fn full(n: u32) -> Sublist {
        Sublist::Arc { start: 0, len: n }
    }

    /// The open interval `P(b, a)`: points strictly between `b` and `a` in
    /// CCW order. `P(t, t)` is the full cycle minus `p_t`.
    pub fn open_between(b: u32, a: u32, n: u32) -> Sublist {
        let d = (a + n - b) % n;
        let cnt = if d == 0 { n - 1 } else { d - 1 };
        if cnt == 0 {
            Sublist::Empty
        } else {
            Sublist::Arc { start: (b + 1) % n, len: cnt }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Sublist::Empty)
    }

    pub fn is_full(&self, n: u32) -> bool {
        matches!(self, Sublist::Arc { len, .. } if *len == n)
    }

    pub fn len(&self) -> u32 {
        match self {
            Sublist::Empty => 0,
            Sublist::Arc { len, .. } => *len,
        }
    }

    pub fn start(&self) -> Option<u32> {
        match self {
            Sublist::Empty => None,
            Sublist::Arc { start, .. } => Some(*start),
        }
    }

    pub fn end(&self, n: u32) -> Option<u32> {
        match self {
            Sublist::Empty => None,
            Sublist::Arc { start, len } => Some((start + len - 1) % n),
        }
    }

    pub fn contains(&self, t: u32, n: u32) -> bool {
        match self {
            Sublist::Empty => false,
            Sublist::Arc { start, len } => (t + n - start) % n < *len,
        }
    }

    pub fn contains_arc(&self, other: &Sublist, n: u32) -> bool {
        match (self, other) {
            (_, Sublist::Empty) => true,
            (Sublist::Empty, _) => false,
            (Sublist::Arc { start: s, len: l }, Sublist::Arc { start: qs, len: ql }) => {
                (qs + n - s) % n + ql <= *l
            }
        }
    }

    pub fn iter(&self, n: u32) -> impl Iterator<Item = u32> + '_ {
        let (start, len) = match self {
            Sublist::Empty => (0, 0),
            Sublist::Arc { start, len } => (*start, *len),
        };
        (0..len).map(move |d| (start + d) % n)
    }
}

/// True iff `t` lies on the CCW run of `s`.
pub fn sublist_contains(s: &Sublist, t: u32, n: u32) -> bool {
    s.contains(t, n)
}

const DIST_CACHE_MAX: usize = 1024;

/// Cached pairwise squared distances with an optional lossless `f64` mirror.
/// When every entry mirrors exactly (snapped instances always do), exact-mode
/// comparisons run on the doubles without losing exactness.
pub(crate) struct DistCache<S> {
    pub(crate) d: Vec<S>,
    pub(crate) mirror: Option<Vec<f64>>,
}

impl<S: Scalar> DistCache<S> {
    pub(crate) fn build(points: &[Point<S>]) -> Self {
        let n = points.len();
        if S::EXACT {
            // bounded dyadic coordinates: the double matrix is exact and the
            // scalar entries lift back losslessly
            let flat = crate::scalar::dyadic_grid_f64(
                points.iter().flat_map(|p| [p.x.clone(), p.y.clone()]),
            );
            if let Some(g) = flat {
                let mut m = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let dx = g[2 * i] - g[2 * j];
                        let dy = g[2 * i + 1] - g[2 * j + 1];
                        m.push(dx * dx + dy * dy);
                    }
                }
                let d = m.iter().map(|&v| S::from_f64(v).expect("finite")).collect();
                return DistCache { d, mirror: Some(m) };
            }
        }
        let mut d = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                d.push(squared_distance(&points[i], &points[j]));
            }
        }
        let mirror = if S::EXACT { d.iter().map(exact_f64).collect() } else { None };
        DistCache { d, mirror }
    }
}

/// A squared threshold prepared for repeated comparisons (the `f64` mirror
/// is kept when the value is losslessly representable).
#[derive(Clone, Debug)]
pub struct Thresh<S> {
    r_sq: S,
    mirror: Option<f64>,
}

impl<S: Scalar> Thresh<S> {
    pub fn new(r_sq: S) -> Self {
        let mirror = if S::EXACT { exact_f64(&r_sq) } else { None };
        Thresh { r_sq, mirror }
    }

    pub fn r_sq(&self) -> &S {
        &self.r_sq
    }
}

/// Weighted points in strictly convex CCW cyclic order with a disk radius
/// parameter. Carries its predicate mode (tolerance); caches a pairwise
/// squared-distance matrix and the far-neighbor tree on first use.
pub struct ConvexInstance<S: Scalar> {
    points: Vec<Point<S>>,
    weights: Vec<S>,
    r: S,
    r_sq: S,
    tol: Tol<S>,
    dist_cache: OnceLock<DistCache<S>>,
    tree: OnceLock<FarNeighborTree<S>>,
}

impl<S: Scalar> std::fmt::Debug for ConvexInstance<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConvexInstance")
            .field("n", &self.n())
            .field("r", &self.r)
            .finish_non_exhaustive()
    }
}

impl<S: Scalar> ConvexInstance<S> {
    pub fn new(points: Vec<Point<S>>, weights: Vec<S>, r: S, tol: Tol<S>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::TooFewPoints);
        }
        if weights.len() != points.len() {
            return Err(Error::BadWeights);
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        if weights.iter().any(|w| !w.is_finite_val()) {
            return Err(Error::BadWeights);
        }
        if !r.is_finite_val() || !(r > S::zero()) {
            return Err(Error::InvalidRadius);
        }
        match points.len() {
            1 => {}
            2 => {
                if points[0] == points[1] {
                    return Err(Error::DuplicatePoint);
                }
            }
            _ => {
                // convexity is validated with exact sign tests: the float
                // tolerance is meant for distance thresholds and would
                // misclassify the tiny turns of large fine polygons
                if !validate_convex_ccw(&points, &Tol::exact()) {
                    return Err(Error::NotConvex);
                }
            }
        }
        let r_sq = r.clone() * r.clone();
        Ok(ConvexInstance {
            points,
            weights,
            r,
            r_sq,
            tol,
            dist_cache: OnceLock::new(),
            tree: OnceLock::new(),
        })
    }

    pub fn unit_weighted(points: Vec<Point<S>>, r: S, tol: Tol<S>) -> Result<Self> {
        let w = vec![S::one(); points.len()];
        Self::new(points, w, r, tol)
    }

    pub fn with_weights(&self, weights: Vec<S>) -> Result<Self> {
        Self::new(self.points.clone(), weights, self.r.clone(), self.tol.clone())
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn point(&self, i: u32) -> &Point<S> {
        &self.points[i as usize]
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    pub fn weight(&self, i: u32) -> &S {
        &self.weights[i as usize]
    }

    pub fn r(&self) -> &S {
        &self.r
    }

    pub fn r_sq(&self) -> &S {
        &self.r_sq
    }

    pub fn tol(&self) -> &Tol<S> {
        &self.tol
    }

    pub fn mode(&self) -> PredicateMode {
        self.tol.mode()
    }

    pub fn require_positive_weights(&self) -> Result<()> {
        if self.weights.iter().all(|w| *w > S::zero()) {
            Ok(())
        } else {
            Err(Error::NonPositiveWeight)
        }
    }

    pub(crate) fn cache(&self) -> Option<&DistCache<S>> {
        if self.n() > DIST_CACHE_MAX {
            return None;
        }
        Some(self.dist_cache.get_or_init(|| DistCache::build(&self.points)))
    }

    fn dist_matrix(&self) -> Option<&[S]> {
        self.cache().map(|c| &c.d[..])
    }

    pub fn dist2(&self, i: u32, j: u32) -> S {
        match self.dist_matrix() {
            Some(m) => m[i as usize * self.n() + j as usize].clone(),
            None => squared_distance(&self.points[i as usize], &self.points[j as usize]),
        }
    }

    /// Does `(i, j)` pass the threshold: `> r` when strict, `>= r` otherwise?
    pub fn far_at(&self, i: u32, j: u32, r_sq: &S, strict: bool) -> bool {
        let d = self.dist2(i, j);
        if strict {
            self.tol.gt(&d, r_sq)
        } else {
            self.tol.ge(&d, r_sq)
        }
    }

    pub fn threshold(&self, r_sq: S) -> Thresh<S> {
        Thresh::new(r_sq)
    }

    /// [`Self::far_at`] against a prepared threshold; exact instances whose
    /// distances mirror losslessly compare on doubles.
    pub fn far_at_t(&self, i: u32, j: u32, t: &Thresh<S>, strict: bool) -> bool {
        if S::EXACT {
            if let (Some(rm), Some(c)) = (t.mirror, self.cache()) {
                if let Some(m) = &c.mirror {
                    let d = m[i as usize * self.n() + j as usize];
                    return if strict { d > rm } else { d >= rm };
                }
            }
        }
        self.far_at(i, j, &t.r_sq, strict)
    }

    fn tree(&self) -> &FarNeighborTree<S> {
        self.tree.get_or_init(|| FarNeighborTree::build(&self.points))
    }

    /// All pairwise squared distances, deduplicated ascending, with 0 in
    /// front; each value keeps one realizing pair.
    pub fn distance_ladder_sq(&self) -> (Vec<S>, Vec<(u32, u32)>) {
        let n = self.n();
        if let Some(c) = self.cache() {
            if let Some(m) = &c.mirror {
                // lossless mirror: sorting the doubles is the exact order
                let mut idx: Vec<(f64, u32, u32)> = Vec::with_capacity(n * (n - 1) / 2 + 1);
                idx.push((0.0, 0, 0));
                for i in 0..n {
                    for j in (i + 1)..n {
                        idx.push((m[i * n + j], i as u32, j as u32));
                    }
                }
                idx.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
                idx.dedup_by_key(|e| e.0);
                let pairs: Vec<(u32, u32)> = idx.iter().map(|e| (e.1, e.2)).collect();
                let values = idx
                    .iter()
                    .map(|e| {
                        if e.1 == e.2 {
                            S::zero()
                        } else {
                            c.d[e.1 as usize * n + e.2 as usize].clone()
                        }
                    })
                    .collect();
                return (values, pairs);
            }
        }
        let mut items: Vec<(S, (u32, u32))> = Vec::with_capacity(n * (n - 1) / 2 + 1);
        items.push((S::zero(), (0, 0)));
        for i in 0..n {
            for j in (i + 1)..n {
                items.push((self.dist2(i as u32, j as u32), (i as u32, j as u32)));
            }
        }
        items.sort_by(|a, b| crate::scalar::order(&a.0, &b.0));
        items.dedup_by(|a, b| a.0 == b.0);
        items.into_iter().unzip()
    }
}

/// Complete binary tree over the cyclic point order; each node owns a
/// contiguous block and its bounding box. Immutable after build.
pub struct FarNeighborTree<S> {
    boxes: Vec<Option<BoundBox<S>>>,
}

#[derive(Clone)]
struct BoundBox<S> {
    x0: S,
    y0: S,
    x1: S,
    y1: S,
}

impl<S: Scalar> BoundBox<S> {
    fn of(p: &Point<S>) -> Self {
        BoundBox { x0: p.x.clone(), y0: p.y.clone(), x1: p.x.clone(), y1: p.y.clone() }
    }

    fn merge(a: &Self, b: &Self) -> Self {
        let min = |u: &S, v: &S| if u < v { u.clone() } else { v.clone() };
        let max = |u: &S, v: &S| if u > v { u.clone() } else { v.clone() };
        BoundBox {
            x0: min(&a.x0, &b.x0),
            y0: min(&a.y0, &b.y0),
            x1: max(&a.x1, &b.x1),
            y1: max(&a.y1, &b.y1),
        }
    }

    /// Upper bound for the squared distance from `p` to any point inside.
    fn max_dist_sq(&self, p: &Point<S>) -> S {
        let dx0 = (p.x.clone() - self.x0.clone()).abs();
        let dx1 = (p.x.clone() - self.x1.clone()).abs();
        let dy0 = (p.y.clone() - self.y0.clone()).abs();
        let dy1 = (p.y.clone() - self.y1.clone()).abs();
        let dx = if dx0 > dx1 { dx0 } else { dx1 };
        let dy = if dy0 > dy1 { dy0 } else { dy1 };
        dx.clone() * dx + dy.clone() * dy
    }
}

struct FarProbe<'a, S: Scalar> {
    pts: &'a [Point<S>],
    origin: &'a Point<S>,
    r_sq: &'a S,
    strict: bool,
    tol: &'a Tol<S>,
}

impl<'a, S: Scalar> FarProbe<'a, S> {
    fn passes(&self, d_sq: &S) -> bool {
        if self.strict {
            self.tol.gt(d_sq, self.r_sq)
        } else {
            self.tol.ge(d_sq, self.r_sq)
        }
    }

    fn point_far(&self, t: usize) -> bool {
        self.passes(&squared_distance(self.origin, &self.pts[t]))
    }

    fn block_may_contain(&self, b: &BoundBox<S>) -> bool {
        self.passes(&b.max_dist_sq(self.origin))
    }
}

impl<S: Scalar> FarNeighborTree<S> {
    pub fn build(points: &[Point<S>]) -> Self {
        let n = points.len();
        let mut boxes = vec![None; 4 * n.max(1)];
        fn fill<S: Scalar>(
            boxes: &mut [Option<BoundBox<S>>],
            points: &[Point<S>],
            idx: usize,
            lo: usize,
            hi: usize,
        ) -> BoundBox<S> {
            let b = if hi - lo == 1 {
                BoundBox::of(&points[lo])
            } else {
                let mid = (lo + hi) / 2;
                let l = fill(boxes, points, 2 * idx, lo, mid);
                let r = fill(boxes, points, 2 * idx + 1, mid, hi);
                BoundBox::merge(&l, &r)
            };
            boxes[idx] = Some(b.clone());
            b
        }
        if n > 0 {
            fill(&mut boxes, points, 1, 0, n);
        }
        let _ = n;
        FarNeighborTree { boxes }
    }

    fn first_in<'a>(
        &self,
        probe: &FarProbe<'a, S>,
        idx: usize,
        lo: usize,
        hi: usize,
        ql: usize,
        qh: usize,
    ) -> Option<usize> {
        if qh <= lo || hi <= ql {
            return None;
        }
        let b = self.boxes[idx].as_ref().expect("built node");
        if !probe.block_may_contain(b) {
            return None;
        }
        if hi - lo == 1 {
            return probe.point_far(lo).then_some(lo);
        }
        let mid = (lo + hi) / 2;
        self.first_in(probe, 2 * idx, lo, mid, ql, qh)
            .or_else(|| self.first_in(probe, 2 * idx + 1, mid, hi, ql, qh))
    }

    fn last_in<'a>(
        &self,
        probe: &FarProbe<'a, S>,
        idx: usize,
        lo: usize,
        hi: usize,
        ql: usize,
        qh: usize,
    ) -> Option<usize> {
        if qh <= lo || hi <= ql {
            return None;
        }
        let b = self.boxes[idx].as_ref().expect("built node");
        if !probe.block_may_contain(b) {
            return None;
        }
        if hi - lo == 1 {
            return probe.point_far(lo).then_some(lo);
        }
        let mid = (lo + hi) / 2;
        self.last_in(probe, 2 * idx + 1, mid, hi, ql, qh)
            .or_else(|| self.last_in(probe, 2 * idx, lo, mid, ql, qh))
    }
}

/// Far-neighbor query handle at a fixed threshold. `strict` selects the
/// `> r` definition; non-strict selects `>= r`.
pub struct FarNeighborIndex<'a, S: Scalar> {
    inst: &'a ConvexInstance<S>,
    thresh: Thresh<S>,
    strict: bool,
}

impl<'a, S: Scalar> FarNeighborIndex<'a, S> {
    pub fn new(inst: &'a ConvexInstance<S>, r: &S, strict: bool) -> Self {
        Self::with_r_sq(inst, r.clone() * r.clone(), strict)
    }

    pub fn with_r_sq(inst: &'a ConvexInstance<S>, r_sq: S, strict: bool) -> Self {
        FarNeighborIndex { inst, thresh: Thresh::new(r_sq), strict }
    }

    pub fn r_sq(&self) -> &S {
        self.thresh.r_sq()
    }

    /// `a_i^j`: first point CCW from `p_j` (inclusive) beyond the threshold
    /// from `p_i`; `None` when every point is within it.
    pub fn first_far_ccw(&self, i: u32, j: u32) -> Option<u32> {
        let n = self.inst.n();
        if self.inst.dist_matrix().is_some() {
            for step in 0..n {
                let t = (j as usize + step) % n;
                if self.inst.far_at_t(i, t as u32, &self.thresh, self.strict) {
                    return Some(t as u32);
                }
            }
            return None;
        }
        let tree = self.inst.tree();
        let probe = FarProbe {
            pts: self.inst.points(),
            origin: self.inst.point(i),
            r_sq: self.thresh.r_sq(),
            strict: self.strict,
            tol: self.inst.tol(),
        };
        tree.first_in(&probe, 1, 0, n, j as usize, n)
            .or_else(|| tree.first_in(&probe, 1, 0, n, 0, j as usize))
            .map(|t| t as u32)
    }

    /// `b_i^j`: mirror of [`Self::first_far_ccw`] in the clockwise direction.
    pub fn first_far_cw(&self, i: u32, j: u32) -> Option<u32> {
        let n = self.inst.n();
        if self.inst.dist_matrix().is_some() {
            for step in 0..n {
                let t = (j as usize + n - step) % n;
                if self.inst.far_at_t(i, t as u32, &self.thresh, self.strict) {
                    return Some(t as u32);
                }
            }
            return None;
        }
        let tree = self.inst.tree();
        let probe = FarProbe {
            pts: self.inst.points(),
            origin: self.inst.point(i),
            r_sq: self.thresh.r_sq(),
            strict: self.strict,
            tol: self.inst.tol(),
        };
        tree.last_in(&probe, 1, 0, n, 0, j as usize + 1)
            .or_else(|| tree.last_in(&probe, 1, 0, n, j as usize + 1, n))
            .map(|t| t as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::gen::gen_convex;

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
    fn build_instance_cases() {
        let inst = unit_square();
        assert_eq!(inst.n(), 4);

        let cw = vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ];
        assert_eq!(
            ConvexInstance::unit_weighted(cw, 1.0, Tol::with_eps(1e-9).unwrap()).unwrap_err(),
            Error::NotConvex
        );

        let coll = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)];
        assert_eq!(
            ConvexInstance::unit_weighted(coll, 1.0, Tol::with_eps(1e-9).unwrap()).unwrap_err(),
            Error::NotConvex
        );
    }

    #[test]
    fn sublist_basics() {
        let n = 4;
        assert!(Sublist::arc(3, 0, n).contains(3, n));
        assert!(Sublist::arc(2, 0, n).contains(3, n));
        assert!(!Sublist::arc(1, 2, n).contains(0, n));
        assert!(!Sublist::Empty.contains(0, n));
        assert!(Sublist::full(n).is_full(n));
        assert_eq!(Sublist::open_between(1, 1, n).len(), 3);
        assert_eq!(Sublist::open_between(1, 2, n), Sublist::Empty);
        assert_eq!(Sublist::arc(2, 1, n).len(), 4);
        assert!(Sublist::arc(2, 1, n).is_full(n));
        // wrap containment: P[3,1] over n=4 contains 0
        assert!(sublist_contains(&Sublist::arc(3, 1, n), 0, n));
    }

    #[test]
    fn first_far_on_square() {
        let inst = unit_square();
        let idx = FarNeighborIndex::new(&inst, &1.0, true);
        // from p0 itself: p1 at distance 1 fails "> 1", p2 at sqrt(2) passes
        assert_eq!(idx.first_far_ccw(0, 0), Some(2));
        assert_eq!(idx.first_far_cw(0, 0), Some(2));
        // |p0 p2| > 1 means the scan starting at j = 2 stops immediately
        assert_eq!(idx.first_far_ccw(0, 2), Some(2));
        assert_eq!(idx.first_far_cw(0, 2), Some(2));
    }

    #[test]
    fn first_far_none_when_all_near() {
        // regular pentagon of circumradius 0.4: diameter < 1
        let pts: Vec<Point<f64>> = (0..5)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / 5.0;
                Point::new(0.4 * a.cos(), 0.4 * a.sin())
            })
            .collect();
        let inst = ConvexInstance::unit_weighted(pts, 1.0, Tol::with_eps(1e-9).unwrap()).unwrap();
        let idx = FarNeighborIndex::new(&inst, &1.0, true);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(idx.first_far_ccw(i, j), None);
                assert_eq!(idx.first_far_cw(i, j), None);
            }
        }
    }

    fn scan_ccw(inst: &ConvexInstance<f64>, i: u32, j: u32, r_sq: f64, strict: bool) -> Option<u32> {
        let n = inst.n();
        (0..n).map(|s| ((j as usize + s) % n) as u32).find(|&t| inst.far_at(i, t, &r_sq, strict))
    }

    fn scan_cw(inst: &ConvexInstance<f64>, i: u32, j: u32, r_sq: f64, strict: bool) -> Option<u32> {
        let n = inst.n();
        (0..n)
            .map(|s| ((j as usize + n - s % n) % n) as u32)
            .find(|&t| inst.far_at(i, t, &r_sq, strict))
    }

    #[test]
    fn far_queries_match_linear_scan() {
        for seed in 0..6u64 {
            let inst = gen_convex(40, seed, 4.0).unwrap();
            let (ladder, _) = inst.distance_ladder_sq();
            let r_sq = ladder[ladder.len() / 2];
            for strict in [true, false] {
                let idx = FarNeighborIndex::with_r_sq(&inst, r_sq, strict);
                for i in 0..inst.n() as u32 {
                    for j in 0..inst.n() as u32 {
                        assert_eq!(idx.first_far_ccw(i, j), scan_ccw(&inst, i, j, r_sq, strict));
                        assert_eq!(idx.first_far_cw(i, j), scan_cw(&inst, i, j, r_sq, strict));
                    }
                }
            }
        }
    }

    /// The tree path must agree with the cache path; exercised by forcing a
    /// large instance (no distance cache) against the scan oracle.
    #[test]
    fn tree_path_matches_scan_on_large_instance() {
        let inst = gen_convex(1500, 7, 5.0).unwrap();
        assert!(inst.n() > DIST_CACHE_MAX);
        let idx = FarNeighborIndex::new(&inst, &1.0, true);
        let n = inst.n() as u32;
        for i in (0..n).step_by(97) {
            for j in (0..n).step_by(131) {
                let want = (0..n)
                    .map(|s| (j + s) % n)
                    .find(|&t| inst.far_at(i, t, &1.0, true));
                assert_eq!(idx.first_far_ccw(i, j), want);
            }
        }
    }

    #[test]
    fn none_iff_both_none() {
        for seed in [11u64, 12, 13] {
            let inst = gen_convex(24, seed, 1.3).unwrap();
            let (ladder, _) = inst.distance_ladder_sq();
            for r_sq in [ladder[1], ladder[ladder.len() - 1]] {
                let idx = FarNeighborIndex::with_r_sq(&inst, r_sq, true);
                for i in 0..inst.n() as u32 {
                    for j in 0..inst.n() as u32 {
                        assert_eq!(
                            idx.first_far_ccw(i, j).is_none(),
                            idx.first_far_cw(i, j).is_none()
                        );
                    }
                }
            }
        }
    }
}
