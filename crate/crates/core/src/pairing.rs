//! Pairing bijections: `(0,1]^2 -> (0,1]` by group interleaving, `R^2 -> R`
//! through a glue map, and tuple folding for `R^n <-> R^k`.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::atlas::{decimal_block_glue, BijectionHandle, Space, SpaceKind};
use crate::codec::{deinterleave, interleave, segment};
use crate::error::{Error, Result};
use crate::expansion::{to_expansion, PeriodicExpansion};
use crate::rational::ExactRational;

/// An ordered tuple of rationals with fixed arity `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealTuple(Vec<ExactRational>);

impl RealTuple {
    pub fn new(coords: Vec<ExactRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroArity);
        }
        Ok(RealTuple(coords))
    }

    pub fn scalar(x: ExactRational) -> Self {
        RealTuple(vec![x])
    }

    pub fn zeros(arity: usize) -> Result<Self> {
        RealTuple::new(vec![ExactRational::zero(); arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[ExactRational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<ExactRational> {
        self.0
    }

    pub fn get(&self, i: usize) -> Option<&ExactRational> {
        self.0.get(i)
    }
}

impl Index<usize> for RealTuple {
    type Output = ExactRational;
    fn index(&self, i: usize) -> &ExactRational {
        &self.0[i]
    }
}

impl fmt::Display for RealTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RealTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RealTuple {
    type Err = Error;

    /// `(a, b, c)`, `a,b,c` or whitespace separated.
    fn from_str(s: &str) -> Result<Self> {
        // outer parens come as a pair; a lone trailing ')' closes a period
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .map(|inner| inner.strip_suffix(')').ok_or_else(|| Error::Parse(format!("unclosed tuple in {s:?}"))))
            .transpose()?
            .unwrap_or(body);
        let coords = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        RealTuple::new(coords)
    }
}

impl From<Vec<ExactRational>> for RealTuple {
    /// Panics on an empty vector; use [`RealTuple::new`] for a checked path.
    fn from(coords: Vec<ExactRational>) -> Self {
        RealTuple::new(coords).expect("nonempty tuple")
    }
}

static DEFAULT_GLUE: LazyLock<BijectionHandle> = LazyLock::new(decimal_block_glue);

/// The glue map `R -> (0,1]` used by [`pair_reals`], [`fold_tuple`] and
/// [`build_phi`].
pub fn default_glue() -> &'static BijectionHandle {
    &DEFAULT_GLUE
}

fn check_unit(x: &ExactRational) -> Result<()> {
    if x.in_unit_halfopen() {
        Ok(())
    } else {
        Err(Error::DomainViolation {
            value: x.to_string(),
            space: "(0,1]".into(),
        })
    }
}

fn pair_expansions(a: &PeriodicExpansion, b: &PeriodicExpansion) -> Result<PeriodicExpansion> {
    interleave(&segment(a), &segment(b))
}

fn unpair_expansion(y: &PeriodicExpansion) -> (PeriodicExpansion, PeriodicExpansion) {
    let (a, b) = deinterleave(y);
    (a.to_expansion(), b.to_expansion())
}

/// `(0,1]^2 -> (0,1]`: interleave the digit groups of `a` and `b`.
pub fn pair_unit(a: &ExactRational, b: &ExactRational) -> Result<ExactRational> {
    check_unit(a)?;
    check_unit(b)?;
    Ok(pair_expansions(&to_expansion(a)?, &to_expansion(b)?)?.value())
}

/// Inverse of [`pair_unit`].
pub fn unpair_unit(y: &ExactRational) -> Result<(ExactRational, ExactRational)> {
    check_unit(y)?;
    let (a, b) = unpair_expansion(&to_expansion(y)?);
    Ok((a.value(), b.value()))
}

pub fn pair_reals(a: &ExactRational, b: &ExactRational) -> Result<ExactRational> {
    pair_reals_with(default_glue(), a, b)
}

pub fn unpair_reals(y: &ExactRational) -> Result<(ExactRational, ExactRational)> {
    unpair_reals_with(default_glue(), y)
}

/// `R^2 -> R` as `s⁻¹(pair_unit(s(a), s(b)))` for a glue map `s: R -> (0,1]`.
pub fn pair_reals_with(glue: &BijectionHandle, a: &ExactRational, b: &ExactRational) -> Result<ExactRational> {
    check_glue(glue)?;
    let u = pair_unit(&glue.forward_scalar(a)?, &glue.forward_scalar(b)?)?;
    glue.backward_scalar(&u)
}

pub fn unpair_reals_with(glue: &BijectionHandle, y: &ExactRational) -> Result<(ExactRational, ExactRational)> {
    check_glue(glue)?;
    let (a, b) = unpair_unit(&glue.forward_scalar(y)?)?;
    Ok((glue.backward_scalar(&a)?, glue.backward_scalar(&b)?))
}

fn check_glue(glue: &BijectionHandle) -> Result<()> {
    let (source, target) = (Space::real(1), Space::interval(SpaceKind::HalfOpen));
    if glue.source() != source || glue.target() != target {
        return Err(Error::CompositionMismatch {
            left: format!("{glue:?}"),
            right: format!("a glue map {source} -> {target}"),
        });
    }
    Ok(())
}

pub fn fold_tuple(x: &RealTuple) -> Result<ExactRational> {
    fold_tuple_with(default_glue(), x)
}

pub fn unfold_tuple(y: &ExactRational, k: usize) -> Result<RealTuple> {
    unfold_tuple_with(default_glue(), y, k)
}

/// `R^n -> R`, associating to the right: `(x1, ..., xn) ↦
/// pair_reals(x1, fold(x2, ..., xn))`.
///
/// Runs inside `(0,1]` and keeps the running value as an expansion, since
/// each intermediate `s⁻¹` is immediately undone by the next `s`.
pub fn fold_tuple_with(glue: &BijectionHandle, x: &RealTuple) -> Result<ExactRational> {
    check_glue(glue)?;
    let (last, init) = x.coords().split_last().ok_or(Error::ZeroArity)?;
    if init.is_empty() {
        return Ok(last.clone());
    }
    let mut acc = to_expansion(&glue.forward_scalar(last)?)?;
    for coord in init.iter().rev() {
        acc = pair_expansions(&to_expansion(&glue.forward_scalar(coord)?)?, &acc)?;
    }
    glue.backward_scalar(&acc.value())
}

/// Inverse of [`fold_tuple_with`] at arity `k`.
pub fn unfold_tuple_with(glue: &BijectionHandle, y: &ExactRational, k: usize) -> Result<RealTuple> {
    check_glue(glue)?;
    match k {
        0 => return Err(Error::ZeroArity),
        1 => return Ok(RealTuple::scalar(y.clone())),
        _ => {}
    }
    let mut rest = to_expansion(&glue.forward_scalar(y)?)?;
    let mut coords = Vec::with_capacity(k);
    for _ in 0..k - 1 {
        let (head, tail) = unpair_expansion(&rest);
        coords.push(glue.backward_scalar(&head.value())?);
        rest = tail;
    }
    coords.push(glue.backward_scalar(&rest.value())?);
    RealTuple::new(coords)
}

/// `Φ: R^n -> R^k`, forward `unfold_k ∘ fold_n`, backward `unfold_n ∘ fold_k`.
pub fn build_phi(n: usize, k: usize) -> Result<BijectionHandle> {
    build_phi_with(default_glue(), n, k)
}

pub fn build_phi_with(glue: &BijectionHandle, n: usize, k: usize) -> Result<BijectionHandle> {
    if n == 0 || k == 0 {
        return Err(Error::ZeroArity);
    }
    check_glue(glue)?;
    let (g1, g2) = (glue.clone(), glue.clone());
    Ok(BijectionHandle::new(
        format!("phi({n},{k})"),
        Space::real(n),
        Space::real(k),
        move |x| unfold_tuple_with(&g1, &fold_tuple_with(&g1, x)?, k),
        move |y| unfold_tuple_with(&g2, &fold_tuple_with(&g2, y)?, n),
    ))
}
