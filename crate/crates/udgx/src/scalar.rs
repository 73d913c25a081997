//! Scalar abstraction behind the two predicate modes.
//!
//! Every solver in this crate is generic over [`Scalar`]. Instantiating with
//! `f64` gives the fast floating mode with an absolute tolerance on squared
//! quantities; instantiating with [`num_rational::BigRational`] gives the
//! exact mode used by the verification suites (tolerance fixed to zero).

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// How comparisons are resolved: exact rational arithmetic, or doubles with
/// an absolute epsilon applied to squared quantities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PredicateMode {
    ExactRational,
    FloatEps { eps: f64 },
}

/// Number type usable as a coordinate/weight. `Signed` pulls in the ring
/// operations; the extra hooks cover construction and reporting.
pub trait Scalar:
    Clone + PartialOrd + fmt::Debug + fmt::Display + Zero + One + Signed + 'static
{
    /// True when arithmetic in this type is exact (no rounding).
    const EXACT: bool;

    /// Exact conversion from a finite double (every finite double is a
    /// dyadic rational). `None` on NaN or infinity.
    fn from_f64(v: f64) -> Option<Self>;
    fn from_int(v: i64) -> Self;
    /// Nearest-double rendering for output; may round in exact mode.
    fn to_f64(&self) -> f64;
    fn is_finite_val(&self) -> bool;
    fn mode(eps: &Self) -> PredicateMode;

    fn halved(self) -> Self {
        self / Self::from_int(2)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_f64(v: f64) -> Option<Self> {
        v.is_finite().then_some(v)
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_finite_val(&self) -> bool {
        self.is_finite()
    }
    fn mode(eps: &Self) -> PredicateMode {
        PredicateMode::FloatEps { eps: *eps }
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_f64(v: f64) -> Option<Self> {
        <BigRational as FromPrimitive>::from_f64(v)
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_finite_val(&self) -> bool {
        true
    }
    fn mode(_eps: &Self) -> PredicateMode {
        PredicateMode::ExactRational
    }
}

/// Three-way comparator with an absolute tolerance. Values within `eps` of
/// each other compare `Equal`, so ties are never "strictly" greater or less.
/// Exact mode uses `eps = 0`.
#[derive(Clone, Debug)]
pub struct Tol<S> {
    eps: S,
}

impl<S: Scalar> Tol<S> {
    pub fn exact() -> Self {
        Tol { eps: S::zero() }
    }

    pub fn with_eps(eps: S) -> crate::Result<Self> {
        if !eps.is_finite_val() || eps < S::zero() {
            return Err(crate::Error::NonFinite);
        }
        Ok(Tol { eps })
    }

    pub fn eps(&self) -> &S {
        &self.eps
    }

    pub fn mode(&self) -> PredicateMode {
        S::mode(&self.eps)
    }

    pub fn cmp(&self, a: &S, b: &S) -> Ordering {
        let d = a.clone() - b.clone();
        if d.abs() <= self.eps {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// `a > b` strictly (beyond tolerance).
    pub fn gt(&self, a: &S, b: &S) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }

    /// `a >= b` up to tolerance.
    pub fn ge(&self, a: &S, b: &S) -> bool {
        self.cmp(a, b) != Ordering::Less
    }

    pub fn lt(&self, a: &S, b: &S) -> bool {
        self.cmp(a, b) == Ordering::Less
    }

    pub fn le(&self, a: &S, b: &S) -> bool {
        self.cmp(a, b) != Ordering::Greater
    }

    pub fn eq(&self, a: &S, b: &S) -> bool {
        self.cmp(a, b) == Ordering::Equal
    }
}

/// Total-order comparison for finite scalars (panics on NaN, which validated
/// instances cannot contain).
pub fn order<S: Scalar>(a: &S, b: &S) -> Ordering {
    a.partial_cmp(b).expect("finite scalar comparison")
}

/// The double that represents `v` exactly, when one exists. Comparisons of
/// losslessly mirrored values in `f64` agree with the exact order, which
/// lets hot paths of the exact mode run on doubles without giving up
/// exactness (snapped instances mirror in full).
pub fn exact_f64<S: Scalar>(v: &S) -> Option<f64> {
    let f = v.to_f64();
    if !f.is_finite() {
        return None;
    }
    match S::from_f64(f) {
        Some(back) if back == *v => Some(f),
        _ => None,
    }
}

/// Doubles for coordinates on the bounded dyadic grid (step 2^-16,
/// magnitude at most 128). Differences, their products, and twofold sums of
/// those products are all exact in `f64` under these bounds, so squared
/// distances and pencil numerators computed from the grid are exact.
pub fn dyadic_grid_f64<S: Scalar>(xs: impl Iterator<Item = S>) -> Option<Vec<f64>> {
    let ok = |v: f64| (v * 65536.0).fract() == 0.0 && v.abs() <= 128.0;
    xs.map(|v| {
        let f = exact_f64(&v)?;
        ok(f).then_some(f)
    })
    .collect()
}

/// Integer numerator of `v` over the fixed dyadic grid `2^-bits`, when `v`
/// lies on it and fits comfortably in an `i64`. Sums of a few such
/// numerators are exact integer arithmetic.
pub fn dyadic_i64<S: Scalar>(v: &S, bits: u32) -> Option<i64> {
    let f = exact_f64(v)?;
    let scaled = f * (1u64 << bits) as f64;
    if scaled.fract() == 0.0 && scaled.abs() <= (1i64 << 40) as f64 {
        Some(scaled as i64)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tol_ties_are_equal() {
        let t = Tol::with_eps(0.5f64).unwrap();
        assert_eq!(t.cmp(&1.0, &1.4), Ordering::Equal);
        assert!(t.ge(&1.0, &1.4));
        assert!(!t.gt(&1.6, &1.4));
        assert!(t.gt(&2.0, &1.4));
    }

    #[test]
    fn exact_rational_mode() {
        let t: Tol<BigRational> = Tol::exact();
        assert_eq!(t.mode(), PredicateMode::ExactRational);
        let a = <BigRational as Scalar>::from_f64(0.1).unwrap();
        let b = <BigRational as Scalar>::from_f64(0.1).unwrap();
        assert!(t.eq(&a, &b));
        let tiny = <BigRational as Scalar>::from_f64(1e-300).unwrap();
        assert!(t.gt(&(a.clone() + tiny), &a));
    }

    #[test]
    fn f64_roundtrip_is_exact() {
        for v in [0.1, 1.0 / 3.0, 123.456e-7, -2.5e10] {
            let r = <BigRational as Scalar>::from_f64(v).unwrap();
            assert_eq!(Scalar::to_f64(&r), v);
        }
    }
}
