//! Flat-file instance format.
//!
//! ```json
//! {"r": 1.0, "mode": "float", "eps": 1e-9, "convex": true,
//!  "points": [[x, y, w], ...]}
//! ```
//!
//! Exact-mode files may write any numeric field as a string: `"p/q"`
//! rationals or plain decimals. Float fields round-trip losslessly through
//! the shortest-representation printer. Witness indices in solver output
//! are 0-based positions into `points`.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::biclique::WeightedCloud;
use crate::cycle::ConvexInstance;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::harness::gen::DEFAULT_EPS;
use crate::scalar::{Scalar, Tol};

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
enum NumRepr {
    F(f64),
    S(String),
}

#[derive(Serialize, Deserialize)]
struct FileRepr {
    r: NumRepr,
    mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eps: Option<f64>,
    convex: bool,
    points: Vec<[NumRepr; 3]>,
}

pub enum AnyInstance {
    FloatConvex(ConvexInstance<f64>),
    ExactConvex(ConvexInstance<BigRational>),
    FloatCloud(WeightedCloud<f64>),
    ExactCloud(WeightedCloud<BigRational>),
}

fn parse_rational_str(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad exact number: {s}"));
    if let Some((p, q)) = s.split_once('/') {
        let num = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if den == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let t = s.trim();
    let (sign, rest) = match t.strip_prefix('-') {
        Some(r) => (-1i64, r),
        None => (1i64, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, f),
        None => (rest, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits: String = format!("{int_part}{frac_part}");
    if digits.chars().any(|c| !c.is_ascii_digit()) {
        return Err(bad());
    }
    let num = BigInt::from_str(&digits).map_err(|_| bad())?;
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(num * BigInt::from(sign), den))
}

fn parse_exact(n: &NumRepr) -> Result<BigRational> {
    match n {
        NumRepr::F(v) => BigRational::from_f64(*v).ok_or(Error::NonFinite),
        NumRepr::S(s) => parse_rational_str(s),
    }
}

fn parse_float(n: &NumRepr) -> Result<f64> {
    match n {
        NumRepr::F(v) => {
            if v.is_finite() {
                Ok(*v)
            } else {
                Err(Error::NonFinite)
            }
        }
        NumRepr::S(s) => {
            let r = parse_rational_str(s)?;
            Ok(r.to_f64())
        }
    }
}

pub fn parse_instance(text: &str) -> Result<AnyInstance> {
    let repr: FileRepr =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match repr.mode.as_str() {
        "float" => {
            let eps = repr.eps.unwrap_or(DEFAULT_EPS);
            let tol = Tol::with_eps(eps)?;
            let r = parse_float(&repr.r)?;
            let mut points = Vec::with_capacity(repr.points.len());
            let mut weights = Vec::with_capacity(repr.points.len());
            for [x, y, w] in &repr.points {
                points.push(Point::new(parse_float(x)?, parse_float(y)?));
                weights.push(parse_float(w)?);
            }
            if repr.convex {
                Ok(AnyInstance::FloatConvex(ConvexInstance::new(points, weights, r, tol)?))
            } else {
                Ok(AnyInstance::FloatCloud(WeightedCloud::new(points, weights, r, tol)?))
            }
        }
        "exact" => {
            let tol = Tol::exact();
            let r = parse_exact(&repr.r)?;
            let mut points = Vec::with_capacity(repr.points.len());
            let mut weights = Vec::with_capacity(repr.points.len());
            for [x, y, w] in &repr.points {
                points.push(Point::new(parse_exact(x)?, parse_exact(y)?));
                weights.push(parse_exact(w)?);
            }
            if repr.convex {
                Ok(AnyInstance::ExactConvex(ConvexInstance::new(points, weights, r, tol)?))
            } else {
                Ok(AnyInstance::ExactCloud(WeightedCloud::new(points, weights, r, tol)?))
            }
        }
        other => Err(Error::Parse(format!("unknown mode {other:?}"))),
    }
}

pub fn read_instance(path: &Path) -> Result<AnyInstance> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_instance(&text)
}

fn float_repr(points: &[Point<f64>], weights: &[f64], r: f64, eps: f64, convex: bool) -> FileRepr {
    FileRepr {
        r: NumRepr::F(r),
        mode: "float".into(),
        eps: Some(eps),
        convex,
        points: points
            .iter()
            .zip(weights)
            .map(|(p, w)| [NumRepr::F(p.x), NumRepr::F(p.y), NumRepr::F(*w)])
            .collect(),
    }
}

fn exact_repr(
    points: &[Point<BigRational>],
    weights: &[BigRational],
    r: &BigRational,
    convex: bool,
) -> FileRepr {
    let s = |v: &BigRational| NumRepr::S(v.to_string());
    FileRepr {
        r: s(r),
        mode: "exact".into(),
        eps: None,
        convex,
        points: points
            .iter()
            .zip(weights)
            .map(|(p, w)| [s(&p.x), s(&p.y), s(w)])
            .collect(),
    }
}

pub fn instance_to_json(inst: &AnyInstance) -> String {
    let repr = match inst {
        AnyInstance::FloatConvex(i) => {
            float_repr(i.points(), i.weights(), *i.r(), *i.tol().eps(), true)
        }
        AnyInstance::FloatCloud(c) => {
            float_repr(c.points(), c.weights(), *c.r(), *c.tol().eps(), false)
        }
        AnyInstance::ExactConvex(i) => exact_repr(i.points(), i.weights(), i.r(), true),
        AnyInstance::ExactCloud(c) => exact_repr(c.points(), c.weights(), c.r(), false),
    };
    serde_json::to_string(&repr).expect("instance serialization")
}

pub fn write_instance(path: &Path, inst: &AnyInstance) -> Result<()> {
    std::fs::write(path, instance_to_json(inst))
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Lossless lift of a float instance into exact mode (every finite double
/// is a dyadic rational).
pub fn convex_to_exact(inst: &ConvexInstance<f64>) -> Result<ConvexInstance<BigRational>> {
    let points = inst
        .points()
        .iter()
        .map(|p| Point::<BigRational>::from_f64(p.x, p.y).ok_or(Error::NonFinite))
        .collect::<Result<Vec<_>>>()?;
    let weights = inst
        .weights()
        .iter()
        .map(|w| BigRational::from_f64(*w).ok_or(Error::NonFinite))
        .collect::<Result<Vec<_>>>()?;
    let r = BigRational::from_f64(*inst.r()).ok_or(Error::NonFinite)?;
    ConvexInstance::new(points, weights, r, Tol::exact())
}

pub fn cloud_to_exact(cloud: &WeightedCloud<f64>) -> Result<WeightedCloud<BigRational>> {
    let points = cloud
        .points()
        .iter()
        .map(|p| Point::<BigRational>::from_f64(p.x, p.y).ok_or(Error::NonFinite))
        .collect::<Result<Vec<_>>>()?;
    let weights = cloud
        .weights()
        .iter()
        .map(|w| BigRational::from_f64(*w).ok_or(Error::NonFinite))
        .collect::<Result<Vec<_>>>()?;
    let r = BigRational::from_f64(*cloud.r()).ok_or(Error::NonFinite)?;
    WeightedCloud::new(points, weights, r, Tol::exact())
}
