//! Tree-structured biclique partitions of the far (or near) pair relation
//! over an arbitrary planar point set, and the size-3 / size-2 weighted
//! solvers on top of them.
//!
//! The partition is built on a point-region quadtree over an expanded
//! bounding square. Each cell keeps the circles of radius `r` that cross it
//! (its conflict list, a subset of the parent's); a circle that stops
//! crossing at a cell lying entirely on the relation side contributes that
//! cell's points as one biclique. At recursion stops every point becomes a
//! singleton child whose B-list is filtered from the cell's conflict list.
//! Every related ordered pair is therefore covered exactly once, and the
//! A-sets form a tree in which children partition their parent.

use std::sync::OnceLock;

use crate::cycle::DistCache;
use crate::error::{Error, Result};
use crate::geom::{squared_distance, Point};
use crate::scalar::{exact_f64, order, Scalar, Tol};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// Pairs strictly farther than `r` (independent-set side).
    Far,
    /// Pairs within `r` (clique side).
    Near,
}

/// Planar points with weights (negative allowed) and a radius; no convexity
/// requirement, but points must be distinct.
pub struct WeightedCloud<S: Scalar> {
    points: Vec<Point<S>>,
    weights: Vec<S>,
    r: S,
    r_sq: S,
    r_sq_mirror: Option<f64>,
    tol: Tol<S>,
    dist_cache: OnceLock<DistCache<S>>,
    weight_rank: OnceLock<Vec<u32>>,
}

const CLOUD_CACHE_MAX: usize = 1024;

impl<S: Scalar> WeightedCloud<S> {
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
        let mut sorted: Vec<u32> = (0..points.len() as u32).collect();
        sorted.sort_by(|&x, &y| {
            let (px, py) = (&points[x as usize], &points[y as usize]);
            order(&px.x, &py.x).then_with(|| order(&px.y, &py.y))
        });
        for w in sorted.windows(2) {
            if points[w[0] as usize] == points[w[1] as usize] {
                return Err(Error::DuplicatePoint);
            }
        }
        let r_sq = r.clone() * r.clone();
        let r_sq_mirror = if S::EXACT { exact_f64(&r_sq) } else { None };
        Ok(WeightedCloud {
            points,
            weights,
            r,
            r_sq,
            r_sq_mirror,
            tol,
            dist_cache: OnceLock::new(),
            weight_rank: OnceLock::new(),
        })
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

    pub fn negated(&self) -> WeightedCloud<S> {
        WeightedCloud {
            points: self.points.clone(),
            weights: self.weights.iter().map(|w| -w.clone()).collect(),
            r: self.r.clone(),
            r_sq: self.r_sq.clone(),
            r_sq_mirror: self.r_sq_mirror,
            tol: self.tol.clone(),
            dist_cache: OnceLock::new(),
            weight_rank: OnceLock::new(),
        }
    }

    /// Position of each point in the descending-weight order (ties by
    /// index); scalar weight comparisons then reduce to integer ranks.
    fn weight_rank(&self) -> &[u32] {
        self.weight_rank.get_or_init(|| {
            let mut by_weight: Vec<u32> = (0..self.n() as u32).collect();
            by_weight
                .sort_by(|&x, &y| order(&self.weights[y as usize], &self.weights[x as usize]).then(x.cmp(&y)));
            let mut rank = vec![0u32; self.n()];
            for (pos, &i) in by_weight.iter().enumerate() {
                rank[i as usize] = pos as u32;
            }
            rank
        })
    }

    fn cache(&self) -> Option<&DistCache<S>> {
        if self.n() > CLOUD_CACHE_MAX {
            return None;
        }
        Some(self.dist_cache.get_or_init(|| DistCache::build(&self.points)))
    }

    pub fn dist2(&self, i: u32, j: u32) -> S {
        match self.cache() {
            Some(c) => c.d[i as usize * self.n() + j as usize].clone(),
            None => squared_distance(self.point(i), self.point(j)),
        }
    }

    pub fn related(&self, mode: PairMode, i: u32, j: u32) -> bool {
        if S::EXACT {
            if let (Some(rm), Some(c)) = (self.r_sq_mirror, self.cache()) {
                if let Some(m) = &c.mirror {
                    let d = m[i as usize * self.n() + j as usize];
                    return match mode {
                        PairMode::Far => d > rm,
                        PairMode::Near => d <= rm,
                    };
                }
            }
        }
        let d = self.dist2(i, j);
        match mode {
            PairMode::Far => self.tol.gt(&d, &self.r_sq),
            PairMode::Near => self.tol.le(&d, &self.r_sq),
        }
    }
}

/// Half-open axis-aligned square cell.
#[derive(Clone, Debug)]
pub struct Cell<S> {
    pub x0: S,
    pub y0: S,
    pub x1: S,
    pub y1: S,
}

impl<S: Scalar> Cell<S> {
    fn quadrant_of(&self, p: &Point<S>, mx: &S, my: &S) -> usize {
        (if p.x < *mx { 0 } else { 1 }) + (if p.y < *my { 0 } else { 2 })
    }

    fn min_dist_sq(&self, p: &Point<S>) -> S {
        let axis = |lo: &S, hi: &S, v: &S| -> S {
            if *v < *lo {
                lo.clone() - v.clone()
            } else if *v > *hi {
                v.clone() - hi.clone()
            } else {
                S::zero()
            }
        };
        let dx = axis(&self.x0, &self.x1, &p.x);
        let dy = axis(&self.y0, &self.y1, &p.y);
        dx.clone() * dx + dy.clone() * dy
    }

    fn max_dist_sq(&self, p: &Point<S>) -> S {
        let axis = |lo: &S, hi: &S, v: &S| -> S {
            let a = (v.clone() - lo.clone()).abs();
            let b = (v.clone() - hi.clone()).abs();
            if a > b {
                a
            } else {
                b
            }
        };
        let dx = axis(&self.x0, &self.x1, &p.x);
        let dy = axis(&self.y0, &self.y1, &p.y);
        dx.clone() * dx + dy.clone() * dy
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum CellSide {
    Inside,
    Outside,
    Crossing,
}

fn classify<S: Scalar>(cell: &Cell<S>, center: &Point<S>, r_sq: &S, tol: &Tol<S>) -> CellSide {
    if tol.gt(&cell.min_dist_sq(center), r_sq) {
        CellSide::Outside
    } else if tol.le(&cell.max_dist_sq(center), r_sq) {
        CellSide::Inside
    } else {
        CellSide::Crossing
    }
}

/// Approximate cell view for a cheap pre-classification in exact mode. A
/// verdict is only returned when it clears the error margin; anything
/// uncertain stays "crossing", which keeps the circle in the conflict list
/// and is resolved exactly deeper down. Sound for moderate magnitudes
/// because the float error of these few operations is far below the margin.
#[derive(Clone, Copy)]
struct CellF {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

const CLASSIFY_MARGIN: f64 = 1e-7;

impl CellF {
    fn classify(&self, cx: f64, cy: f64, r_sq: f64) -> Option<CellSide> {
        let axis = |lo: f64, hi: f64, v: f64| -> (f64, f64) {
            let lo_d = (v - lo).abs();
            let hi_d = (v - hi).abs();
            let min = if v < lo {
                lo - v
            } else if v > hi {
                v - hi
            } else {
                0.0
            };
            (min, lo_d.max(hi_d))
        };
        let (mnx, mxx) = axis(self.x0, self.x1, cx);
        let (mny, mxy) = axis(self.y0, self.y1, cy);
        let min_sq = mnx * mnx + mny * mny;
        let max_sq = mxx * mxx + mxy * mxy;
        if min_sq > r_sq + CLASSIFY_MARGIN {
            Some(CellSide::Outside)
        } else if max_sq < r_sq - CLASSIFY_MARGIN {
            Some(CellSide::Inside)
        } else {
            None
        }
    }
}

const DEPTH_CAP: u32 = 64;

pub struct PartitionNode<S> {
    pub cell: Cell<S>,
    pub depth: u32,
    pub parent: Option<u32>,
    pub children: Vec<u32>,
    /// Singleton child attached to a recursion stop (its A-set is one point).
    pub leaf_child: bool,
    pub a_lo: u32,
    pub a_hi: u32,
    /// Points whose circle crosses the parent cell while this cell lies
    /// entirely on the relation side; sorted by descending weight.
    pub b_set: Vec<u32>,
    /// Circles crossing this cell (subset of the parent's list).
    pub conflict: Vec<u32>,
    top2: [Option<u32>; 2],
}

pub struct BicliquePartition<'a, S: Scalar> {
    pub mode: PairMode,
    cloud: &'a WeightedCloud<S>,
    nodes: Vec<PartitionNode<S>>,
    order: Vec<u32>,
}

impl<'a, S: Scalar> BicliquePartition<'a, S> {
    pub fn nodes(&self) -> &[PartitionNode<S>] {
        &self.nodes
    }

    pub fn a_points(&self, node: &PartitionNode<S>) -> &[u32] {
        &self.order[node.a_lo as usize..node.a_hi as usize]
    }

    /// Structural invariants: children partition the parent A-set, conflict
    /// lists shrink along every edge, bicliques respect the relation, and
    /// A and B are disjoint in far mode.
    pub fn check_structure(&self) -> std::result::Result<(), String> {
        for (id, node) in self.nodes.iter().enumerate() {
            if !node.children.is_empty() {
                let mut ranges: Vec<(u32, u32)> = node
                    .children
                    .iter()
                    .map(|&c| (self.nodes[c as usize].a_lo, self.nodes[c as usize].a_hi))
                    .collect();
                ranges.sort_unstable();
                let mut cursor = node.a_lo;
                for (lo, hi) in ranges {
                    if lo != cursor {
                        return Err(format!("node {id}: children do not partition the A-set"));
                    }
                    cursor = hi;
                }
                if cursor != node.a_hi {
                    return Err(format!("node {id}: children do not cover the A-set"));
                }
            }
            if let Some(parent) = node.parent {
                let parent_conf = &self.nodes[parent as usize].conflict;
                let mut it = parent_conf.iter();
                for b in &node.conflict {
                    if !it.any(|pb| pb == b) {
                        return Err(format!("node {id}: conflict list not nested in parent"));
                    }
                }
            }
            for &b in &node.b_set {
                for &a in self.a_points(node) {
                    if !self.cloud.related(self.mode, a, b) {
                        return Err(format!("node {id}: biclique pair violates the relation"));
                    }
                    if self.mode == PairMode::Far && a == b {
                        return Err(format!("node {id}: far-mode A and B must be disjoint"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Count how often each ordered pair is covered by some biclique.
    pub fn coverage_counts(&self) -> Vec<u32> {
        let n = self.cloud.n();
        let mut counts = vec![0u32; n * n];
        for node in &self.nodes {
            for &a in self.a_points(node) {
                for &b in &node.b_set {
                    counts[a as usize * n + b as usize] += 1;
                }
            }
        }
        counts
    }
}

/// Build the tree-structured biclique partition for the given relation.
pub fn build_partition<'a, S: Scalar>(
    cloud: &'a WeightedCloud<S>,
    mode: PairMode,
) -> Result<BicliquePartition<'a, S>> {
    let n = cloud.n();
    let nu = n as u32;
    let mut order: Vec<u32> = (0..nu).collect();

    let mut min_x = cloud.point(0).x.clone();
    let mut max_x = min_x.clone();
    let mut min_y = cloud.point(0).y.clone();
    let mut max_y = min_y.clone();
    for p in cloud.points() {
        if p.x < min_x {
            min_x = p.x.clone();
        }
        if p.x > max_x {
            max_x = p.x.clone();
        }
        if p.y < min_y {
            min_y = p.y.clone();
        }
        if p.y > max_y {
            max_y = p.y.clone();
        }
    }
    let span_x = max_x - min_x.clone();
    let span_y = max_y - min_y.clone();
    let span = if span_x > span_y { span_x } else { span_y };
    let side = span + S::one();
    let root_cell = Cell {
        x0: min_x.clone(),
        y0: min_y.clone(),
        x1: min_x + side.clone(),
        y1: min_y.clone() + side,
    };

    let mut part = BicliquePartition { mode, cloud, nodes: Vec::new(), order: Vec::new() };
    // the conceptual parent of the root is the whole plane: every circle
    // crosses it
    let all: Vec<u32> = (0..nu).collect();
    let centers: Vec<(f64, f64)> =
        cloud.points().iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let enabled = centers.iter().all(|&(x, y)| x.abs() <= 1e3 && y.abs() <= 1e3)
        && cloud.r_sq().to_f64() <= 1e6;
    let ctx = FastClassify { centers, r_sq_f: cloud.r_sq().to_f64(), enabled };
    let root_f = CellF {
        x0: root_cell.x0.to_f64(),
        y0: root_cell.y0.to_f64(),
        x1: root_cell.x1.to_f64(),
        y1: root_cell.y1.to_f64(),
    };
    build_node(cloud, mode, &mut part.nodes, &mut order, root_cell, root_f, &ctx, 0, n, 0, None, &all)?;
    part.order = order;
    Ok(part)
}

/// Shared data for the float pre-classification.
struct FastClassify {
    centers: Vec<(f64, f64)>,
    r_sq_f: f64,
    enabled: bool,
}

#[allow(clippy::too_many_arguments)]
fn build_node<S: Scalar>(
    cloud: &WeightedCloud<S>,
    mode: PairMode,
    nodes: &mut Vec<PartitionNode<S>>,
    order: &mut [u32],
    cell: Cell<S>,
    cellf: CellF,
    ctx: &FastClassify,
    lo: usize,
    hi: usize,
    depth: u32,
    parent: Option<u32>,
    parent_conflict: &[u32],
) -> Result<u32> {
    let mut b_set: Vec<u32> = Vec::new();
    let mut conflict: Vec<u32> = Vec::new();
    let want = match mode {
        PairMode::Far => CellSide::Outside,
        PairMode::Near => CellSide::Inside,
    };
    for &b in parent_conflict {
        // the float view settles everything outside the margin band; the
        // band itself gets the exact test
        let side = ctx
            .enabled
            .then(|| {
                let (cx, cy) = ctx.centers[b as usize];
                cellf.classify(cx, cy, ctx.r_sq_f)
            })
            .flatten()
            .unwrap_or_else(|| classify(&cell, cloud.point(b), cloud.r_sq(), cloud.tol()));
        match side {
            CellSide::Crossing => conflict.push(b),
            side if side == want => b_set.push(b),
            _ => {}
        }
    }
    sort_by_weight_desc(cloud, &mut b_set);

    let id = nodes.len() as u32;
    let slice = &mut order[lo..hi];
    let top2 = top_two(cloud, slice);
    nodes.push(PartitionNode {
        cell: cell.clone(),
        depth,
        parent,
        children: Vec::new(),
        leaf_child: false,
        a_lo: lo as u32,
        a_hi: hi as u32,
        b_set,
        conflict,
        top2,
    });

    let stop = hi - lo <= 1 || nodes[id as usize].conflict.is_empty() || depth >= DEPTH_CAP;
    if stop {
        if depth >= DEPTH_CAP && hi - lo > 1 && !nodes[id as usize].conflict.is_empty() {
            let slice = &order[lo..hi];
            for (x, &a) in slice.iter().enumerate() {
                for &b in &slice[x + 1..] {
                    if cloud.point(a) == cloud.point(b) {
                        return Err(Error::DepthCapExceeded);
                    }
                }
            }
        }
        // one singleton child per point, with its B-list filtered from the
        // cell's conflict list
        let conflict = nodes[id as usize].conflict.clone();
        let mut children = Vec::with_capacity(hi - lo);
        for pos in lo..hi {
            let a = order[pos];
            let mut ba: Vec<u32> =
                conflict.iter().copied().filter(|&b| cloud.related(mode, a, b)).collect();
            sort_by_weight_desc(cloud, &mut ba);
            let cid = nodes.len() as u32;
            nodes.push(PartitionNode {
                cell: cell.clone(),
                depth: depth + 1,
                parent: Some(id),
                children: Vec::new(),
                leaf_child: true,
                a_lo: pos as u32,
                a_hi: pos as u32 + 1,
                b_set: ba,
                conflict: Vec::new(),
                top2: [Some(a), None],
            });
            children.push(cid);
        }
        nodes[id as usize].children = children;
        return Ok(id);
    }

    let mx = (cell.x0.clone() + cell.x1.clone()).halved();
    let my = (cell.y0.clone() + cell.y1.clone()).halved();
    let mxf = (cellf.x0 + cellf.x1) / 2.0;
    let myf = (cellf.y0 + cellf.y1) / 2.0;
    // in-place 4-way partition of the slice: quadrant index (x>=mx) + 2*(y>=my)
    let mut buckets: [Vec<u32>; 4] = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    for &a in order[lo..hi].iter() {
        buckets[cell.quadrant_of(cloud.point(a), &mx, &my)].push(a);
    }
    let mut cursor = lo;
    let mut ranges = [(0usize, 0usize); 4];
    for (q, bucket) in buckets.iter().enumerate() {
        let start = cursor;
        for &a in bucket {
            order[cursor] = a;
            cursor += 1;
        }
        ranges[q] = (start, cursor);
    }
    let cells = [
        Cell { x0: cell.x0.clone(), y0: cell.y0.clone(), x1: mx.clone(), y1: my.clone() },
        Cell { x0: mx.clone(), y0: cell.y0.clone(), x1: cell.x1.clone(), y1: my.clone() },
        Cell { x0: cell.x0.clone(), y0: my.clone(), x1: mx.clone(), y1: cell.y1.clone() },
        Cell { x0: mx, y0: my, x1: cell.x1.clone(), y1: cell.y1.clone() },
    ];
    let cells_f = [
        CellF { x0: cellf.x0, y0: cellf.y0, x1: mxf, y1: myf },
        CellF { x0: mxf, y0: cellf.y0, x1: cellf.x1, y1: myf },
        CellF { x0: cellf.x0, y0: myf, x1: mxf, y1: cellf.y1 },
        CellF { x0: mxf, y0: myf, x1: cellf.x1, y1: cellf.y1 },
    ];
    let parent_conf = nodes[id as usize].conflict.clone();
    let mut children = Vec::new();
    for q in 0..4 {
        let (clo, chi) = ranges[q];
        if clo == chi {
            continue; // empty quadrants carry no pairs
        }
        let cid = build_node(
            cloud,
            mode,
            nodes,
            order,
            cells[q].clone(),
            cells_f[q],
            ctx,
            clo,
            chi,
            depth + 1,
            Some(id),
            &parent_conf,
        )?;
        children.push(cid);
    }
    nodes[id as usize].children = children;
    Ok(id)
}

fn sort_by_weight_desc<S: Scalar>(cloud: &WeightedCloud<S>, ids: &mut [u32]) {
    let rank = cloud.weight_rank();
    ids.sort_by_key(|&x| rank[x as usize]);
}

fn top_two<S: Scalar>(cloud: &WeightedCloud<S>, slice: &[u32]) -> [Option<u32>; 2] {
    let rank = cloud.weight_rank();
    let mut best: [Option<u32>; 2] = [None, None];
    for &a in slice {
        let beats = |cur: &Option<u32>| match cur {
            None => true,
            Some(c) => rank[a as usize] < rank[*c as usize],
        };
        if beats(&best[0]) {
            best[1] = best[0];
            best[0] = Some(a);
        } else if beats(&best[1]) {
            best[1] = Some(a);
        }
    }
    best
}

/// Heaviest point of `b_set` (sorted by descending weight) on the relation
/// side of the disk around `center`, skipping the excluded ids.
pub fn best_point_vs_disk<S: Scalar>(
    cloud: &WeightedCloud<S>,
    b_set: &[u32],
    center: u32,
    mode: PairMode,
    exclude: &[u32],
) -> Option<u32> {
    b_set
        .iter()
        .copied()
        .find(|&c| !exclude.contains(&c) && cloud.related(mode, center, c))
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleSolution<S> {
    pub indices: [u32; 3],
    pub total_weight: S,
}

/// Maximum-weight triple with the mode's pairwise relation, or `None`.
pub fn solve_triple<S: Scalar>(cloud: &WeightedCloud<S>, mode: PairMode) -> Result<Option<TripleSolution<S>>> {
    if cloud.n() < 3 {
        return Err(Error::TooFewPoints);
    }
    let part = build_partition(cloud, mode)?;
    let mut best: Option<TripleSolution<S>> = None;

    for node in part.nodes() {
        if node.b_set.is_empty() {
            continue;
        }
        for &b in &node.b_set {
            // best one or two A-points distinct from b
            let (a1, a2) = match node.top2 {
                [Some(x), y] if x != b => (Some(x), y.filter(|&v| v != b)),
                [Some(_), y] => (y.filter(|&v| v != b), None),
                _ => (None, None),
            };
            let a1 = match a1 {
                Some(a) => a,
                None => continue,
            };
            let mut anc = Some(node);
            while let Some(t) = anc {
                if !t.b_set.is_empty() {
                    let c1 = best_point_vs_disk(cloud, &t.b_set, b, mode, &[b]);
                    if let Some(c1) = c1 {
                        if c1 != a1 {
                            consider(cloud, &mut best, a1, b, c1);
                        } else {
                            if let Some(c2) = best_point_vs_disk(cloud, &t.b_set, b, mode, &[b, a1]) {
                                consider(cloud, &mut best, a1, b, c2);
                            }
                            if let Some(a2) = a2 {
                                consider(cloud, &mut best, a2, b, c1);
                            }
                        }
                    }
                }
                anc = t.parent.map(|p| &part.nodes()[p as usize]);
            }
        }
    }
    Ok(best)
}

fn consider<S: Scalar>(
    cloud: &WeightedCloud<S>,
    best: &mut Option<TripleSolution<S>>,
    a: u32,
    b: u32,
    c: u32,
) {
    debug_assert!(a != b && b != c && a != c);
    let mut idx = [a, b, c];
    idx.sort_unstable();
    let w = cloud.weight(a).clone() + cloud.weight(b).clone() + cloud.weight(c).clone();
    let replace = match best {
        None => true,
        Some(cur) => match order(&w, &cur.total_weight) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => idx < cur.indices,
        },
    };
    if replace {
        *best = Some(TripleSolution { indices: idx, total_weight: w });
    }
}

/// Maximum-weight related pair by direct scan.
pub fn solve_pair<S: Scalar>(cloud: &WeightedCloud<S>, mode: PairMode) -> Result<Option<((u32, u32), S)>> {
    let n = cloud.n() as u32;
    if n < 2 {
        return Err(Error::TooFewPoints);
    }
    let mut best: Option<((u32, u32), S)> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            if !cloud.related(mode, i, j) {
                continue;
            }
            let w = cloud.weight(i).clone() + cloud.weight(j).clone();
            let replace = match &best {
                None => true,
                Some((cur_ij, cur)) => match order(&w, cur) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => (i, j) < *cur_ij,
                },
            };
            if replace {
                best = Some(((i, j), w));
            }
        }
    }
    Ok(best)
}

/// Minimum-weight triple via weight negation.
pub fn solve_min_triple<S: Scalar>(cloud: &WeightedCloud<S>, mode: PairMode) -> Result<Option<TripleSolution<S>>> {
    let neg = cloud.negated();
    Ok(solve_triple(&neg, mode)?.map(|t| TripleSolution {
        indices: t.indices,
        total_weight: t.total_weight.neg(),
    }))
}

/// Minimum-weight pair via weight negation.
pub fn solve_min_pair<S: Scalar>(cloud: &WeightedCloud<S>, mode: PairMode) -> Result<Option<((u32, u32), S)>> {
    let neg = cloud.negated();
    Ok(solve_pair(&neg, mode)?.map(|(ij, w)| (ij, w.neg())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::gen::gen_cloud;
    use crate::harness::oracle;

    fn cloud_of(pts: Vec<(f64, f64)>, weights: Vec<f64>, r: f64) -> WeightedCloud<f64> {
        let points = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
        WeightedCloud::new(points, weights, r, Tol::with_eps(1e-9).unwrap()).unwrap()
    }

    fn assert_exact_coverage(cloud: &WeightedCloud<f64>, mode: PairMode) {
        let part = build_partition(cloud, mode).unwrap();
        part.check_structure().unwrap();
        let counts = part.coverage_counts();
        let n = cloud.n();
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                let want = if cloud.related(mode, a, b) { 1 } else { 0 };
                assert_eq!(
                    counts[a as usize * n + b as usize],
                    want,
                    "pair ({a},{b}) mode {mode:?}"
                );
            }
        }
    }

    #[test]
    fn corners_of_big_square_all_far() {
        let cloud = cloud_of(
            vec![(0.0, 0.0), (3.0, 0.0), (3.0, 3.0), (0.0, 3.0)],
            vec![1.0; 4],
            1.0,
        );
        let part = build_partition(&cloud, PairMode::Far).unwrap();
        let total: u32 = part.coverage_counts().iter().sum();
        assert_eq!(total, 12);
        assert_exact_coverage(&cloud, PairMode::Far);
    }

    #[test]
    fn close_pair_covers_nothing_far() {
        let cloud = cloud_of(vec![(0.0, 0.0), (0.5, 0.0)], vec![1.0, 1.0], 1.0);
        let part = build_partition(&cloud, PairMode::Far).unwrap();
        assert_eq!(part.coverage_counts().iter().sum::<u32>(), 0);
    }

    #[test]
    fn coverage_exact_on_random_clouds() {
        for seed in 0..10u64 {
            let cloud = gen_cloud(60 + 10 * seed as usize, seed, 8.0).unwrap();
            assert_exact_coverage(&cloud, PairMode::Far);
            assert_exact_coverage(&cloud, PairMode::Near);
        }
    }

    #[test]
    fn near_mode_covers_self_pairs_once() {
        // radius larger than the diameter: everything (including each point
        // with itself) is near
        let cloud = cloud_of(vec![(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)], vec![1.0; 3], 10.0);
        assert_exact_coverage(&cloud, PairMode::Near);
    }

    #[test]
    fn best_point_vs_disk_example() {
        let cloud = cloud_of(
            vec![(0.0, 0.0), (0.5, 0.0), (2.0, 0.0)],
            vec![1.0, 9.0, 4.0],
            1.0,
        );
        // B sorted by descending weight: the w=9 point is within r of the
        // center and is skipped; the w=4 point qualifies
        let b_set = vec![1, 2];
        assert_eq!(best_point_vs_disk(&cloud, &b_set, 0, PairMode::Far, &[]), Some(2));
        assert_eq!(best_point_vs_disk(&cloud, &[], 0, PairMode::Far, &[]), None);
    }

    #[test]
    fn triple_example_with_conflict() {
        let cloud = cloud_of(
            vec![(0.0, 0.0), (2.0, 0.0), (0.0, 2.0), (0.5, 0.0)],
            vec![3.0, 5.0, 7.0, 100.0],
            1.0,
        );
        let got = solve_triple(&cloud, PairMode::Far).unwrap().unwrap();
        assert_eq!(got.total_weight, 112.0);
        assert_eq!(got.indices, [1, 2, 3]);
    }

    #[test]
    fn tight_cluster_modes() {
        let cloud = cloud_of(
            vec![(0.0, 0.0), (0.3, 0.1), (0.1, 0.4)],
            vec![1.0, 2.0, 3.0],
            1.0,
        );
        assert_eq!(solve_triple(&cloud, PairMode::Far).unwrap(), None);
        let near = solve_triple(&cloud, PairMode::Near).unwrap().unwrap();
        assert_eq!(near.indices, [0, 1, 2]);
        assert_eq!(near.total_weight, 6.0);
    }

    #[test]
    fn pair_examples() {
        let cloud = cloud_of(vec![(0.0, 0.0), (3.0, 0.0)], vec![1.0, 2.0], 1.0);
        let got = solve_pair(&cloud, PairMode::Far).unwrap().unwrap();
        assert_eq!(got, ((0, 1), 3.0));
        let cloud = cloud_of(vec![(0.0, 0.0), (0.5, 0.0)], vec![1.0, 2.0], 1.0);
        assert_eq!(solve_pair(&cloud, PairMode::Far).unwrap(), None);
    }

    #[test]
    fn min_variant_identities() {
        let cloud = cloud_of(
            vec![(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)],
            vec![1.0, 2.0, 3.0],
            1.0,
        );
        let got = solve_min_triple(&cloud, PairMode::Far).unwrap().unwrap();
        assert_eq!(got.total_weight, 6.0);
        // negation round trip on a random cloud
        let cloud = gen_cloud(40, 5, 6.0).unwrap();
        let max_negated = solve_triple(&cloud.negated(), PairMode::Far).unwrap();
        let min_direct = solve_min_triple(&cloud, PairMode::Far).unwrap();
        assert_eq!(
            min_direct.map(|t| t.total_weight),
            max_negated.map(|t| -t.total_weight)
        );
    }

    #[test]
    fn triple_matches_cubic_oracle_small() {
        for seed in 0..16u64 {
            let cloud = gen_cloud(24 + seed as usize, seed ^ 0xb1c, 5.0).unwrap();
            for mode in [PairMode::Far, PairMode::Near] {
                let got = solve_triple(&cloud, mode).unwrap();
                let want = oracle::cloud_triple(
                    cloud.points(),
                    cloud.weights(),
                    cloud.r_sq(),
                    cloud.tol(),
                    mode,
                )
                .unwrap();
                match (&got, &want) {
                    (None, None) => {}
                    (Some(g), Some((w, _))) => {
                        assert!((g.total_weight - w).abs() < 1e-9, "seed={seed} {mode:?}");
                        for x in 0..3 {
                            for y in (x + 1)..3 {
                                assert!(cloud.related(mode, g.indices[x], g.indices[y]));
                            }
                        }
                    }
                    _ => panic!("seed={seed} {mode:?}: got {got:?} want {want:?}"),
                }
            }
        }
    }
}
