//! Planar primitives: squared distances, orientation, circumcenters, the
//! strictly-outside-disk predicate, and the pencil parameter for the family
//! of circles through a fixed chord.
//!
//! All threshold tests elsewhere in the crate compare squared distances, so
//! nothing here takes a square root. In exact mode the outside-disk test is
//! the orientation-normalized in-circle determinant; in float mode it is the
//! circumcenter distance test under the instance tolerance.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tol};

#[derive(Clone, Debug, PartialEq)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Option<Self> {
        Some(Point { x: S::from_f64(x)?, y: S::from_f64(y)? })
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite_val() && self.y.is_finite_val()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

pub fn squared_distance<S: Scalar>(p: &Point<S>, q: &Point<S>) -> S {
    let dx = p.x.clone() - q.x.clone();
    let dy = p.y.clone() - q.y.clone();
    dx.clone() * dx + dy.clone() * dy
}

/// Cross product of (b - a) and (c - a); positive for a CCW turn.
pub fn cross<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> S {
    let abx = b.x.clone() - a.x.clone();
    let aby = b.y.clone() - a.y.clone();
    let acx = c.x.clone() - a.x.clone();
    let acy = c.y.clone() - a.y.clone();
    abx * acy - aby * acx
}

pub fn orientation<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>, tol: &Tol<S>) -> Orientation {
    let cr = cross(a, b, c);
    match tol.cmp(&cr, &S::zero()) {
        std::cmp::Ordering::Greater => Orientation::Ccw,
        std::cmp::Ordering::Less => Orientation::Cw,
        std::cmp::Ordering::Equal => Orientation::Collinear,
    }
}

/// Center of the circle through three non-collinear points.
pub fn circumcenter<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>, tol: &Tol<S>) -> Result<Point<S>> {
    if orientation(a, b, c, tol) == Orientation::Collinear {
        return Err(Error::DegenerateCircle);
    }
    let ax = b.x.clone() - a.x.clone();
    let ay = b.y.clone() - a.y.clone();
    let bx = c.x.clone() - a.x.clone();
    let by = c.y.clone() - a.y.clone();
    let al = ax.clone() * ax.clone() + ay.clone() * ay.clone();
    let bl = bx.clone() * bx.clone() + by.clone() * by.clone();
    let d = (ax.clone() * by.clone() - ay.clone() * bx.clone()) * S::from_int(2);
    let ux = (by * al.clone() - ay * bl.clone()) / d.clone();
    let uy = (ax * bl - bx * al) / d;
    let ctr = Point::new(a.x.clone() + ux, a.y.clone() + uy);
    if !ctr.is_finite() {
        return Err(Error::DegenerateCircle);
    }
    Ok(ctr)
}

/// Pencil parameter of `q` with respect to the directed chord `a -> b`:
/// the offset of circumcenter(a, b, q) along the perpendicular bisector of
/// `ab`, scaled by |ab| and signed so that positive points into the open
/// halfplane right of `a -> b`. For the one-parameter family of circles
/// through `a` and `b`, the part of the disk inside that right halfplane
/// grows strictly with this value.
pub fn pencil_param<S: Scalar>(a: &Point<S>, b: &Point<S>, q: &Point<S>, tol: &Tol<S>) -> Result<S> {
    let ctr = circumcenter(a, b, q, tol)?;
    let mx = (a.x.clone() + b.x.clone()).halved();
    let my = (a.y.clone() + b.y.clone()).halved();
    // rot-90 of (b - a) points into the right halfplane of a -> b
    let rx = b.y.clone() - a.y.clone();
    let ry = a.x.clone() - b.x.clone();
    Ok((ctr.x - mx) * rx + (ctr.y - my) * ry)
}

/// Is `q` strictly outside the disk through `a`, `b`, `c`? Symmetric in the
/// first three arguments; cocircular points are not strictly outside.
pub fn outside_disk<S: Scalar>(
    a: &Point<S>,
    b: &Point<S>,
    c: &Point<S>,
    q: &Point<S>,
    tol: &Tol<S>,
) -> Result<bool> {
    if S::EXACT {
        let orient = cross(a, b, c);
        if orient.is_zero() {
            return Err(Error::DegenerateCircle);
        }
        let det = incircle_det(a, b, c, q);
        // det > 0 iff q inside for CCW (a, b, c)
        Ok((det * orient).is_negative())
    } else {
        let ctr = circumcenter(a, b, c, tol)?;
        let rad_sq = squared_distance(&ctr, a);
        Ok(tol.gt(&squared_distance(&ctr, q), &rad_sq))
    }
}

fn incircle_det<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>, q: &Point<S>) -> S {
    let adx = a.x.clone() - q.x.clone();
    let ady = a.y.clone() - q.y.clone();
    let bdx = b.x.clone() - q.x.clone();
    let bdy = b.y.clone() - q.y.clone();
    let cdx = c.x.clone() - q.x.clone();
    let cdy = c.y.clone() - q.y.clone();
    let asq = adx.clone() * adx.clone() + ady.clone() * ady.clone();
    let bsq = bdx.clone() * bdx.clone() + bdy.clone() * bdy.clone();
    let csq = cdx.clone() * cdx.clone() + cdy.clone() * cdy.clone();
    adx * (bdy.clone() * csq.clone() - bsq.clone() * cdy.clone())
        - ady * (bdx.clone() * csq - bsq * cdx.clone())
        + asq * (bdx * cdy - bdy * cdx)
}

/// Strict convexity in CCW order: every consecutive triple turns left and the
/// edge directions complete exactly one counterclockwise revolution. The
/// winding check rejects star-shaped orderings of convex point sets, which
/// consecutive-triple tests alone would accept.
pub fn validate_convex_ccw<S: Scalar>(points: &[Point<S>], tol: &Tol<S>) -> bool {
    let n = points.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        let a = &points[i];
        let b = &points[(i + 1) % n];
        let c = &points[(i + 2) % n];
        if orientation(a, b, c, tol) != Orientation::Ccw {
            return false;
        }
    }
    // Edge direction class: 0 for angle in [0, pi), 1 for [pi, 2*pi).
    let class = |i: usize| -> u8 {
        let p = &points[i];
        let q = &points[(i + 1) % n];
        let dy = q.y.clone() - p.y.clone();
        let dx = q.x.clone() - p.x.clone();
        if dy.is_positive() || (dy.is_zero() && dx.is_negative()) {
            0
        } else {
            1
        }
    };
    let mut wraps = 0u32;
    for i in 0..n {
        if class(i) == 1 && class((i + 1) % n) == 0 {
            wraps += 1;
        }
    }
    wraps == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn tol() -> Tol<f64> {
        Tol::with_eps(1e-9).unwrap()
    }

    #[test]
    fn squared_distance_cases() {
        assert_eq!(squared_distance(&p(0.0, 0.0), &p(3.0, 4.0)), 25.0);
        assert_eq!(squared_distance(&p(1.0, 1.0), &p(1.0, 1.0)), 0.0);
        assert_eq!(squared_distance(&p(0.0, 0.0), &p(1.0, 1.0)), 2.0);
    }

    #[test]
    fn orientation_cases() {
        let t = tol();
        assert_eq!(orientation(&p(0.0, 0.0), &p(1.0, 0.0), &p(0.0, 1.0), &t), Orientation::Ccw);
        assert_eq!(orientation(&p(0.0, 0.0), &p(1.0, 0.0), &p(2.0, 0.0), &t), Orientation::Collinear);
        assert_eq!(orientation(&p(0.0, 0.0), &p(0.0, 1.0), &p(1.0, 0.0), &t), Orientation::Cw);
    }

    #[test]
    fn circumcenter_cases() {
        let t = tol();
        assert_eq!(circumcenter(&p(0.0, 0.0), &p(2.0, 0.0), &p(1.0, -1.0), &t).unwrap(), p(1.0, 0.0));
        assert_eq!(circumcenter(&p(0.0, 0.0), &p(2.0, 0.0), &p(1.0, 1.0), &t).unwrap(), p(1.0, 0.0));
        assert_eq!(circumcenter(&p(0.0, 0.0), &p(4.0, 0.0), &p(0.0, 4.0), &t).unwrap(), p(2.0, 2.0));
        assert_eq!(
            circumcenter(&p(0.0, 0.0), &p(1.0, 0.0), &p(2.0, 0.0), &t),
            Err(Error::DegenerateCircle)
        );
    }

    #[test]
    fn pencil_param_cases() {
        let t = tol();
        let a = p(0.0, 0.0);
        let b = p(2.0, 0.0);
        assert_eq!(pencil_param(&a, &b, &p(1.0, -1.0), &t).unwrap(), 0.0);
        assert!(pencil_param(&a, &b, &p(1.0, -2.0), &t).unwrap() > 0.0);
        // monotone in how far the disk bulges right
        let s05 = pencil_param(&a, &b, &p(1.0, -0.5), &t).unwrap();
        let s1 = pencil_param(&a, &b, &p(1.0, -1.0), &t).unwrap();
        let s2 = pencil_param(&a, &b, &p(1.0, -2.0), &t).unwrap();
        assert!(s2 > s1 && s1 > s05);
    }

    #[test]
    fn outside_disk_cases() {
        let t = tol();
        let (a, b, c) = (p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0));
        assert!(outside_disk(&a, &b, &c, &p(1.0, -2.0), &t).unwrap());
        assert!(!outside_disk(&a, &b, &c, &p(1.0, 0.0), &t).unwrap());
        // cocircular: not strictly outside
        assert!(!outside_disk(&a, &b, &c, &p(1.0, -1.0), &t).unwrap());
    }

    #[test]
    fn outside_disk_permutation_invariant_exact() {
        let te: Tol<BigRational> = Tol::exact();
        let pts: Vec<Point<BigRational>> = [(0.0, 0.0), (2.0, 0.0), (1.0, 1.0)]
            .iter()
            .map(|&(x, y)| Point::from_f64(x, y).unwrap())
            .collect();
        let q: Point<BigRational> = Point::from_f64(0.3, -1.7).unwrap();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let base = outside_disk(&pts[0], &pts[1], &pts[2], &q, &te).unwrap();
        for perm in perms {
            assert_eq!(
                outside_disk(&pts[perm[0]], &pts[perm[1]], &pts[perm[2]], &q, &te).unwrap(),
                base
            );
        }
    }

    #[test]
    fn convex_validation_cases() {
        let t = tol();
        let sq = vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        assert!(validate_convex_ccw(&sq, &t));
        let cw: Vec<_> = sq.iter().rev().cloned().collect();
        assert!(!validate_convex_ccw(&cw, &t));
        let coll = vec![p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(1.0, 1.0)];
        assert!(!validate_convex_ccw(&coll, &t));
    }

    #[test]
    fn convex_validation_rejects_star_order() {
        // Regular pentagon visited as a pentagram: all consecutive triples
        // turn left, but the edge directions wind twice.
        let t = tol();
        let verts: Vec<Point<f64>> = (0..5)
            .map(|i| {
                let ang = std::f64::consts::TAU * (i as f64) / 5.0;
                p(ang.cos(), ang.sin())
            })
            .collect();
        assert!(validate_convex_ccw(&verts, &t));
        let star: Vec<Point<f64>> = [0usize, 2, 4, 1, 3].iter().map(|&i| verts[i].clone()).collect();
        assert!(!validate_convex_ccw(&star, &t));
    }

    /// Pencil law: for a fixed chord and q right / c left of it, the strict
    /// outside-disk relation coincides with strict pencil-parameter order.
    #[test]
    fn pencil_law_random_exact() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let te: Tol<BigRational> = Tol::exact();
        let tf = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(0x9e11);
        let mut tested = 0usize;
        while tested < 10_000 {
            let raw: Vec<f64> = (0..8).map(|_| (rng.gen::<f64>() - 0.5) * 8.0).collect();
            let a = p(raw[0], raw[1]);
            let b = p(raw[2], raw[3]);
            let q = p(raw[4], raw[5]);
            let c = p(raw[6], raw[7]);
            // require q strictly right, c strictly left of a -> b
            if orientation(&a, &b, &q, &tf) != Orientation::Cw
                || orientation(&a, &b, &c, &tf) != Orientation::Ccw
            {
                continue;
            }
            let conv = |pt: &Point<f64>| Point::<BigRational>::from_f64(pt.x, pt.y).unwrap();
            let (ea, eb, eq, ec) = (conv(&a), conv(&b), conv(&q), conv(&c));
            let outside = outside_disk(&ea, &eb, &ec, &eq, &te).unwrap();
            let sq = pencil_param(&ea, &eb, &eq, &te).unwrap();
            let sc = pencil_param(&ea, &eb, &ec, &te).unwrap();
            assert_eq!(outside, sq > sc, "pencil law violated");
            tested += 1;
        }
    }
}
