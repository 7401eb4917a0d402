//! Elementary bijections between intervals and the real line, and the
//! handle type used to pass bijections around.
//!
//! Every map here sends rationals to rationals in both directions, except
//! [`semicircle_map`], which reproduces the geometric construction in
//! floating point for plotting.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pairing::RealTuple;
use crate::rational::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// The whole real line (coordinatewise for tuples).
    Real,
    /// `[0, 1]`
    Closed,
    /// `(0, 1]`
    HalfOpen,
    /// `(0, 1)`
    Open,
}

/// A space kind together with its arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Space {
    pub kind: SpaceKind,
    pub arity: usize,
}

impl Space {
    pub fn real(arity: usize) -> Self {
        Space {
            kind: SpaceKind::Real,
            arity,
        }
    }

    pub fn interval(kind: SpaceKind) -> Self {
        Space { kind, arity: 1 }
    }

    pub fn contains_coord(&self, x: &ExactRational) -> bool {
        match self.kind {
            SpaceKind::Real => true,
            SpaceKind::Closed => !x.is_negative() && *x <= 1,
            SpaceKind::HalfOpen => x.in_unit_halfopen(),
            SpaceKind::Open => *x > 0 && *x < 1,
        }
    }

    pub(crate) fn check(&self, x: &RealTuple) -> Result<()> {
        if x.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: x.arity(),
            });
        }
        if !x.coords().iter().all(|c| self.contains_coord(c)) {
            return Err(Error::DomainViolation {
                value: x.to_string(),
                space: self.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.kind {
            SpaceKind::Real => "R",
            SpaceKind::Closed => "[0,1]",
            SpaceKind::HalfOpen => "(0,1]",
            SpaceKind::Open => "(0,1)",
        };
        if self.arity == 1 {
            f.write_str(base)
        } else {
            write!(f, "{base}^{}", self.arity)
        }
    }
}

type MapFn = Arc<dyn Fn(&RealTuple) -> Result<RealTuple> + Send + Sync>;

/// An invertible map between two spaces.
///
/// `forward` and `backward` check that their argument lies in the source
/// (resp. target) space before running. Nothing checks that the two closures
/// really are mutually inverse; that is what round-trip tests are for, and
/// deliberately broken handles are how the transport checks get exercised.
#[derive(Clone)]
pub struct BijectionHandle {
    name: String,
    source: Space,
    target: Space,
    forward: MapFn,
    backward: MapFn,
}

impl BijectionHandle {
    pub fn new<F, B>(name: impl Into<String>, source: Space, target: Space, forward: F, backward: B) -> Self
    where
        F: Fn(&RealTuple) -> Result<RealTuple> + Send + Sync + 'static,
        B: Fn(&RealTuple) -> Result<RealTuple> + Send + Sync + 'static,
    {
        BijectionHandle {
            name: name.into(),
            source,
            target,
            forward: Arc::new(forward),
            backward: Arc::new(backward),
        }
    }

    /// Build a handle between one-dimensional spaces from scalar maps.
    pub fn scalar<F, B>(name: impl Into<String>, source: SpaceKind, target: SpaceKind, forward: F, backward: B) -> Self
    where
        F: Fn(&ExactRational) -> Result<ExactRational> + Send + Sync + 'static,
        B: Fn(&ExactRational) -> Result<ExactRational> + Send + Sync + 'static,
    {
        BijectionHandle::new(
            name,
            Space::interval(source),
            Space::interval(target),
            move |x| Ok(RealTuple::scalar(forward(&x[0])?)),
            move |y| Ok(RealTuple::scalar(backward(&y[0])?)),
        )
    }

    pub fn identity(space: Space) -> Self {
        BijectionHandle::new("identity", space, space, |x| Ok(x.clone()), |y| Ok(y.clone()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> Space {
        self.source
    }

    pub fn target(&self) -> Space {
        self.target
    }

    pub fn forward(&self, x: &RealTuple) -> Result<RealTuple> {
        self.source.check(x)?;
        (self.forward)(x)
    }

    pub fn backward(&self, y: &RealTuple) -> Result<RealTuple> {
        self.target.check(y)?;
        (self.backward)(y)
    }

    pub fn forward_scalar(&self, x: &ExactRational) -> Result<ExactRational> {
        Ok(self.forward(&RealTuple::scalar(x.clone()))?.into_coords().remove(0))
    }

    pub fn backward_scalar(&self, y: &ExactRational) -> Result<ExactRational> {
        Ok(self.backward(&RealTuple::scalar(y.clone()))?.into_coords().remove(0))
    }

    /// Swap the directions.
    pub fn inverse(&self) -> Self {
        BijectionHandle {
            name: format!("inverse({})", self.name),
            source: self.target,
            target: self.source,
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }
}

impl fmt::Debug for BijectionHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.source, self.target)
    }
}

/// `f` then `g`: forward is `g ∘ f`, backward is `f⁻¹ ∘ g⁻¹`.
pub fn compose(f: &BijectionHandle, g: &BijectionHandle) -> Result<BijectionHandle> {
    if f.target != g.source {
        return Err(Error::CompositionMismatch {
            left: format!("{f:?}"),
            right: format!("{g:?}"),
        });
    }
    let (f1, g1) = (f.clone(), g.clone());
    let (f2, g2) = (f.clone(), g.clone());
    Ok(BijectionHandle::new(
        format!("{} ; {}", f.name, g.name),
        f.source,
        g.target,
        move |x| g1.forward(&f1.forward(x)?),
        move |y| f2.backward(&g2.backward(y)?),
    ))
}

/// `[0,1] -> (0,1]`: shifts `0, 1/2, 2/3, 3/4, ...` one step along,
/// `(n-1)/n ↦ n/(n+1)`, and fixes everything else.
pub fn closed_to_halfopen() -> BijectionHandle {
    // x = a/b lies on the sequence exactly when a = b - 1
    fn on_sequence(x: &ExactRational) -> bool {
        x.numer() + 1 == *x.denom()
    }
    BijectionHandle::scalar(
        "closed_to_halfopen",
        SpaceKind::Closed,
        SpaceKind::HalfOpen,
        |x| {
            Ok(if on_sequence(x) {
                ExactRational::new(x.numer() + 1, x.denom() + 1)?
            } else {
                x.clone()
            })
        },
        |y| {
            Ok(if on_sequence(y) && *y.denom() > BigInt::one() {
                ExactRational::new(y.numer() - 1, y.denom() - 1)?
            } else {
                y.clone()
            })
        },
    )
}

/// `(0,1] -> (0,1)`: shifts the unit fractions, `1/m ↦ 1/(m+1)`, and fixes
/// everything else.
pub fn halfopen_to_open() -> BijectionHandle {
    BijectionHandle::scalar(
        "halfopen_to_open",
        SpaceKind::HalfOpen,
        SpaceKind::Open,
        |x| {
            Ok(if x.numer().is_one() {
                ExactRational::new(1, x.denom() + 1)?
            } else {
                x.clone()
            })
        },
        |y| {
            Ok(if y.numer().is_one() {
                ExactRational::new(1, y.denom() - 1)?
            } else {
                y.clone()
            })
        },
    )
}

/// `R -> (0,1)`, `g(x) = 1/2 + x / (2(1 + |x|))`. Strictly increasing and
/// closed over the rationals in both directions.
pub fn real_to_open_rational() -> BijectionHandle {
    BijectionHandle::scalar(
        "real_to_open_rational",
        SpaceKind::Real,
        SpaceKind::Open,
        |x| {
            let half = ExactRational::frac(1, 2);
            let two = ExactRational::from(2);
            Ok(&half + &(x / &(&two * &(ExactRational::one() + x.abs()))))
        },
        |y| {
            let two = ExactRational::from(2);
            let centered = &(&two * y) - &ExactRational::one();
            let den = if *y >= ExactRational::frac(1, 2) {
                &two * &(ExactRational::one() - y.clone())
            } else {
                &two * y
            };
            Ok(&centered / &den)
        },
    )
}

/// `R -> (0,1]` through [`real_to_open_rational`] and the inverse unit
/// fraction shift.
pub fn classic_glue() -> BijectionHandle {
    compose(&real_to_open_rational(), &halfopen_to_open().inverse()).expect("R -> (0,1) -> (0,1]")
}

/// `R -> (0,1]` aligned with decimal digits.
///
/// Write `x = M - 1 + f` with `M = ceil(x)` and `f` in `(0,1]`, and number the
/// integers `0, -1, 1, -2, 2, ...` as `m = 0, 1, 2, ...`. Block `r` holds
/// the `9·10^r` indices `10^r - 1 <= m < 10^(r+1) - 1`; index `m` owns the
/// interval `(j, j+1] / 10^(2r+1)` with `j = 10^(r+1) - 1 - (m - 10^r + 1)`,
/// and `f` lands affinely inside it. The blocks tile `(0,1]`, so this is a
/// bijection. In digits the image is `r` zeros, the `r+1` digits of `j`, then
/// the expansion of `f`; preperiods grow by `O(log |x|)` and periods are
/// untouched, so decimal fractions map to decimal fractions.
pub fn decimal_block_glue() -> BijectionHandle {
    BijectionHandle::scalar(
        "decimal_block_glue",
        SpaceKind::Real,
        SpaceKind::HalfOpen,
        |x| Ok(block_encode(x)),
        |y| Ok(block_decode(y)),
    )
}

fn zigzag(m: &BigInt) -> BigInt {
    if m.is_negative() {
        -(m * 2u8) - 1u8
    } else {
        m * 2u8
    }
}

fn unzigzag(z: &BigInt) -> BigInt {
    if (z % 2u8).is_zero() {
        z / 2
    } else {
        -(z + 1u8) / 2
    }
}

fn block_encode(x: &ExactRational) -> ExactRational {
    let ceil = x.ceil();
    let frac = x - &ExactRational::from_integer(&ceil - 1u8);
    let m = zigzag(&ceil);
    let mut r = 0usize;
    while m >= ExactRational::pow10(r + 1) - 1u8 {
        r += 1;
    }
    let i = &m - (ExactRational::pow10(r) - 1u8);
    let j = ExactRational::pow10(r + 1) - 1u8 - i;
    (ExactRational::from_integer(j) + frac).scale10(-(2 * r as i64 + 1))
}

fn block_decode(y: &ExactRational) -> ExactRational {
    // 10^-(r+1) < y <= 10^-r; start from the digit-count estimate and correct
    let (num, den) = (y.numer(), y.denom());
    let estimate = den.to_string().len().saturating_sub(num.to_string().len());
    let mut r = estimate.saturating_sub(1);
    while y.scale10(r as i64 + 1) <= ExactRational::one() {
        r += 1;
    }
    let z = y.scale10(2 * r as i64 + 1);
    let j = z.ceil() - 1u8;
    let frac = &z - &ExactRational::from_integer(j.clone());
    let i = ExactRational::pow10(r + 1) - 1u8 - j;
    let m = ExactRational::pow10(r) - 1u8 + i;
    ExactRational::from_integer(unzigzag(&m) - 1u8) + frac
}

/// The geometric map `R -> (0,1)`: a semicircle of radius 1/2 rests on the
/// real axis at 1/2, the point `x` is joined to the centre, and the crossing
/// with the semicircle is projected back down.
pub fn semicircle_map(x: f64) -> f64 {
    let d = x - 0.5;
    0.5 + d / (2.0 * (d * d + 0.25).sqrt())
}

/// Half-width of the sampling window for [`semicircle_points`], centred on 1/2.
pub const SEMICIRCLE_HALF_WIDTH: f64 = 10.0;

/// Evenly spaced samples of [`semicircle_map`] over
/// `[0.5 - SEMICIRCLE_HALF_WIDTH, 0.5 + SEMICIRCLE_HALF_WIDTH]`. Odd sample
/// counts include the tangency point 0.5.
pub fn semicircle_points(samples: usize) -> Vec<(f64, f64)> {
    if samples <= 1 {
        return vec![(0.5, 0.5)].into_iter().take(samples).collect();
    }
    let last = (samples - 1) as f64;
    (0..samples)
        .map(|i| {
            let x = 0.5 + SEMICIRCLE_HALF_WIDTH * (2.0 * i as f64 / last - 1.0);
            (x, semicircle_map(x))
        })
        .collect()
}

/// CSV text with a header row, one `x,fx` line per sample.
pub fn semicircle_csv(samples: usize) -> String {
    let mut out = String::from("x,fx\n");
    for (x, fx) in semicircle_points(samples) {
        out.push_str(&format!("{x},{fx}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn closed_to_halfopen_shifts_the_sequence() {
        let f = closed_to_halfopen();
        assert_eq!(f.forward_scalar(&q("0")).unwrap(), q("1/2"));
        assert_eq!(f.forward_scalar(&q("1/2")).unwrap(), q("2/3"));
        assert_eq!(f.forward_scalar(&q("2/3")).unwrap(), q("3/4"));
        assert_eq!(f.forward_scalar(&q("1/3")).unwrap(), q("1/3"));
        assert_eq!(f.forward_scalar(&q("1")).unwrap(), q("1"));
        assert_eq!(f.backward_scalar(&q("1/2")).unwrap(), q("0"));
        assert_eq!(f.backward_scalar(&q("1")).unwrap(), q("1"));
    }

    #[test]
    fn domain_violations() {
        let err = closed_to_halfopen().forward_scalar(&q("3/2")).unwrap_err();
        assert!(err.to_string().starts_with("domain violation"));
        assert!(halfopen_to_open().forward_scalar(&q("0")).is_err());
        assert!(halfopen_to_open().backward_scalar(&q("1")).is_err());
        assert!(real_to_open_rational().backward_scalar(&q("0")).is_err());
        assert!(closed_to_halfopen().backward_scalar(&q("0")).is_err());
    }

    #[test]
    fn halfopen_to_open_shifts_unit_fractions() {
        let f = halfopen_to_open();
        assert_eq!(f.forward_scalar(&q("1")).unwrap(), q("1/2"));
        assert_eq!(f.forward_scalar(&q("1/2")).unwrap(), q("1/3"));
        assert_eq!(f.forward_scalar(&q("2/5")).unwrap(), q("2/5"));
        assert_eq!(f.backward_scalar(&q("1/2")).unwrap(), q("1"));
    }

    #[test]
    fn real_to_open_values() {
        let g = real_to_open_rational();
        assert_eq!(g.forward_scalar(&q("0")).unwrap(), q("1/2"));
        assert_eq!(g.forward_scalar(&q("1")).unwrap(), q("3/4"));
        assert_eq!(g.forward_scalar(&q("-1")).unwrap(), q("1/4"));
        assert_eq!(g.backward_scalar(&q("3/4")).unwrap(), q("1"));
        assert_eq!(g.backward_scalar(&q("1/4")).unwrap(), q("-1"));
    }

    #[test]
    fn compose_through_the_shift() {
        let s = classic_glue();
        // 0 -> 1/2 under g, and 1/2 is the shift image of 1
        assert_eq!(s.forward_scalar(&q("0")).unwrap(), q("1"));
        assert_eq!(s.backward_scalar(&q("1")).unwrap(), q("0"));
    }

    #[test]
    fn compose_mismatch() {
        let err = compose(&halfopen_to_open(), &closed_to_halfopen()).unwrap_err();
        assert!(err.to_string().starts_with("composition mismatch"));
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let f = real_to_open_rational();
        let id = compose(&f, &f.inverse()).unwrap();
        for i in -10..10 {
            let x = ExactRational::frac(i * 7 + 3, 11);
            assert_eq!(id.forward_scalar(&x).unwrap(), x);
            assert_eq!(id.backward_scalar(&x).unwrap(), x);
        }
    }

    #[test]
    fn decimal_block_glue_values() {
        let t = decimal_block_glue();
        assert_eq!(t.forward_scalar(&q("0")).unwrap(), q("1"));
        assert_eq!(t.forward_scalar(&q("-1/2")).unwrap(), q("19/20"));
        assert_eq!(t.forward_scalar(&q("1")).unwrap(), q("4/5"));
        // M = -5 is index 9, the first of block 1: (99, 100] / 1000
        assert_eq!(t.forward_scalar(&q("-5")).unwrap(), q("1/10"));
        assert_eq!(t.backward_scalar(&q("1/10")).unwrap(), q("-5"));
        assert_eq!(t.forward_scalar(&q("-4")).unwrap(), q("3/10"));
        assert_eq!(t.backward_scalar(&q("1")).unwrap(), q("0"));
    }

    #[test]
    fn decimal_block_glue_keeps_decimals_short() {
        let t = decimal_block_glue();
        let y = t.forward_scalar(&q("1000000")).unwrap();
        // 2·10^6 sits in block 6
        assert_eq!(y.denom().to_string().len(), 14);
        assert_eq!(t.backward_scalar(&y).unwrap(), q("1000000"));
    }

    #[test]
    fn semicircle_values() {
        assert_eq!(semicircle_map(0.5), 0.5);
        let v = semicircle_map(1.0);
        assert!((v - (0.5 + 0.25 / 0.5f64.sqrt())).abs() < 1e-15);
        assert!((v - 0.8536).abs() < 1e-4);
        let tail: Vec<f64> = [10.0, 100.0, 1000.0].iter().map(|&x| semicircle_map(x)).collect();
        assert!(tail.windows(2).all(|w| w[0] < w[1]));
        assert!(tail[2] < 1.0 && 1.0 - tail[2] < 1e-6);
        assert!(semicircle_map(-1000.0) > 0.0);
    }

    #[test]
    fn semicircle_matches_line_circle_intersection() {
        // intersect the segment from (x, 0) to the centre (1/2, 1/2) with the
        // circle of radius 1/2 and take the x coordinate
        for &x in &[-3.0, -0.25, 0.1, 0.5, 0.9, 1.0, 7.5] {
            let (cx, cy, r) = (0.5f64, 0.5f64, 0.5f64);
            let (dx, dy) = (x - cx, 0.0 - cy);
            let t = r / (dx * dx + dy * dy).sqrt();
            let px = cx + t * dx;
            assert!((px - semicircle_map(x)).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn semicircle_samples_are_increasing() {
        let pts = semicircle_points(201);
        assert!(pts.contains(&(0.5, 0.5)));
        assert!(pts.windows(2).all(|w| w[0].1 < w[1].1));
        assert!(pts.iter().all(|&(_, y)| y > 0.0 && y < 1.0));
        assert_eq!(semicircle_points(1), vec![(0.5, 0.5)]);
    }

    #[test]
    fn csv_has_tangency_row() {
        let csv = semicircle_csv(3);
        assert!(csv.lines().any(|l| l == "0.5,0.5"), "{csv}");
    }
}
