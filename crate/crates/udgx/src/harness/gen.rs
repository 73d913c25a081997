//! Deterministic instance generation: random convex polygons (Valtr's
//! construction) and uniform clouds, with coordinates snapped to a dyadic
//! grid at verification sizes so the exact-mode rationals stay small.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::biclique::WeightedCloud;
use crate::cycle::ConvexInstance;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::scalar::Tol;

/// Grid step 2^-16; products of snapped coordinate differences stay exact
/// in doubles for the coordinate ranges produced here.
const SNAP_BITS: i32 = 16;
/// Above this size instances stay unsnapped: strictly convex polygons on a
/// grid cannot have arbitrarily many vertices.
const SNAP_MAX_N: usize = 512;

pub const DEFAULT_EPS: f64 = 1e-9;

fn snap(v: f64) -> f64 {
    let s = (1u64 << SNAP_BITS) as f64;
    (v * s).round() / s
}

fn float_tol() -> Tol<f64> {
    Tol::with_eps(DEFAULT_EPS).unwrap()
}

/// Raw Valtr polygon on the unit square: a uniform-style random convex
/// polygon with `n` vertices in CCW order.
fn valtr(n: usize, rng: &mut ChaCha8Rng) -> Vec<(f64, f64)> {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    let mut ys: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let chain = |vals: &[f64], rng: &mut ChaCha8Rng| -> Vec<f64> {
        let n = vals.len();
        let (lo, hi) = (vals[0], vals[n - 1]);
        let mut vecs = Vec::with_capacity(n);
        let (mut last_top, mut last_bot) = (lo, lo);
        for &v in &vals[1..n - 1] {
            if rng.gen::<bool>() {
                vecs.push(v - last_top);
                last_top = v;
            } else {
                vecs.push(last_bot - v);
                last_bot = v;
            }
        }
        vecs.push(hi - last_top);
        vecs.push(last_bot - hi);
        vecs
    };

    let xv = chain(&xs, rng);
    let mut yv = chain(&ys, rng);
    yv.shuffle(rng);

    let mut vecs: Vec<(f64, f64)> = xv.into_iter().zip(yv).collect();
    vecs.sort_by(|a, b| a.1.atan2(a.0).partial_cmp(&b.1.atan2(b.0)).unwrap());

    let mut out = Vec::with_capacity(n);
    let (mut x, mut y) = (0.0, 0.0);
    for (dx, dy) in vecs {
        out.push((x, y));
        x += dx;
        y += dy;
    }
    out
}

/// Strict convex hull (CCW, starting at the lexicographic minimum) using
/// exact sign tests on the grid coordinates.
fn strict_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    let n = pts.len();
    if n < 3 {
        return pts;
    }
    let turn = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| -> f64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Random convex instance: `n` points in strictly convex CCW order with
/// unit weights and `r = 1`, scaled so the diameter is roughly `scale`.
/// Deterministic per `(n, seed, scale)`.
pub fn gen_convex(n: usize, seed: u64, scale: f64) -> Result<ConvexInstance<f64>> {
    if n < 3 {
        return Err(Error::TooFewPoints);
    }
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::InvalidRadius);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x56a1_7200);
    let snapping = n <= SNAP_MAX_N;
    for _attempt in 0..16 {
        let oversample = if snapping { n + 4 + n / 16 } else { n };
        let raw = valtr(oversample, &mut rng);
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in &raw {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let diag = ((max_x - min_x).powi(2) + (max_y - min_y).powi(2)).sqrt();
        let f = scale / diag.max(1e-12);
        let cx = (min_x + max_x) / 2.0;
        let cy = (min_y + max_y) / 2.0;
        let mut pts: Vec<(f64, f64)> = raw
            .into_iter()
            .map(|(x, y)| ((x - cx) * f, (y - cy) * f))
            .collect();
        if snapping {
            pts = pts.into_iter().map(|(x, y)| (snap(x), snap(y))).collect();
            pts = strict_hull(pts);
            if pts.len() < n {
                continue;
            }
            if pts.len() > n {
                let m = pts.len();
                pts = (0..n).map(|i| pts[i * m / n]).collect();
            }
        }
        let points: Vec<Point<f64>> = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
        match ConvexInstance::unit_weighted(points, 1.0, float_tol()) {
            Ok(inst) => return Ok(inst),
            Err(_) => continue,
        }
    }
    Err(Error::NotConvex)
}

/// Random cloud: `n` distinct points uniform in a square of the given side,
/// snapped to the grid, unit weights, `r = 1`.
pub fn gen_cloud(n: usize, seed: u64, side: f64) -> Result<WeightedCloud<f64>> {
    if n < 1 {
        return Err(Error::TooFewPoints);
    }
    if !(side.is_finite() && side > 0.0) {
        return Err(Error::InvalidRadius);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1c00_d900);
    let mut seen = std::collections::HashSet::with_capacity(n * 2);
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let x = snap((rng.gen::<f64>() - 0.5) * side);
        let y = snap((rng.gen::<f64>() - 0.5) * side);
        if seen.insert((x.to_bits(), y.to_bits())) {
            pts.push(Point::new(x, y));
        }
    }
    WeightedCloud::new(pts, vec![1.0; n], 1.0, float_tol())
}

/// Cloud with the side chosen so the expected unit-disk degree is `density`.
pub fn gen_cloud_density(n: usize, seed: u64, density: f64) -> Result<WeightedCloud<f64>> {
    if !(density.is_finite() && density > 0.0) {
        return Err(Error::InvalidRadius);
    }
    let side = (std::f64::consts::PI * n as f64 / density).sqrt().clamp(0.5, 240.0);
    gen_cloud(n, seed, side)
}

/// Dyadic random weights on the 2^-16 grid: positive in (0, 8], or
/// mixed-sign in [-8, 8] when `positive` is false.
pub fn random_weights(n: usize, seed: u64, positive: bool) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3e16_45);
    let s = (1u64 << SNAP_BITS) as f64;
    let hi = 8 * (1i64 << SNAP_BITS);
    (0..n)
        .map(|_| {
            if positive {
                rng.gen_range(1..=hi) as f64 / s
            } else {
                rng.gen_range(-hi..=hi) as f64 / s
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::validate_convex_ccw;
    use crate::scalar::Tol;

    #[test]
    fn convex_is_valid_and_deterministic() {
        let a = gen_convex(64, 42, 3.0).unwrap();
        let b = gen_convex(64, 42, 3.0).unwrap();
        assert_eq!(a.points(), b.points());
        assert!(validate_convex_ccw(a.points(), &Tol::exact()));
        assert_eq!(a.n(), 64);

        let c = gen_convex(64, 43, 3.0).unwrap();
        assert_ne!(a.points(), c.points());
    }

    #[test]
    fn convex_triangle_and_large() {
        let t = gen_convex(3, 1, 2.0).unwrap();
        assert_eq!(t.n(), 3);
        let big = gen_convex(10_000, 7, 6.0).unwrap();
        assert!(validate_convex_ccw(big.points(), &Tol::exact()));
    }

    #[test]
    fn cloud_distinct_and_deterministic() {
        let a = gen_cloud(500, 9, 10.0).unwrap();
        let b = gen_cloud(500, 9, 10.0).unwrap();
        assert_eq!(a.points(), b.points());
        assert_eq!(a.n(), 500);
    }

    #[test]
    fn weights_ranges() {
        let w = random_weights(1000, 3, true);
        assert!(w.iter().all(|&v| v > 0.0 && v <= 8.0));
        let m = random_weights(1000, 3, false);
        assert!(m.iter().any(|&v| v < 0.0) && m.iter().any(|&v| v > 0.0));
    }
}
