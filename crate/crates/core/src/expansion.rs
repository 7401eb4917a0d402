//! Canonical repeating-decimal expansions of rationals in `(0, 1]`.
//!
//! Every value in the half-open unit interval has exactly one expansion
//! without a trailing tail of zeros: terminating decimals are written in
//! nines-form, so `1/2` is `0.4(9)` and `1` is `0.(9)`. An expansion is
//! stored as finite data, a preperiod and a nonempty period, kept minimal
//! so that structural equality coincides with equality of values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{valuation, ExactRational};

/// Upper bound on preperiod + period digits materialized by a single
/// conversion. Interleaving multiplies period lengths, so runaway inputs fail
/// with [`Error::DigitLimit`] instead of exhausting memory.
pub const DEFAULT_DIGIT_LIMIT: usize = 1 << 22;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PeriodicExpansion {
    pre: Vec<u8>,
    period: Vec<u8>,
}

impl PeriodicExpansion {
    /// Build from raw digits, folding the period to its primitive root and
    /// the preperiod boundary as far left as it goes.
    pub fn new(pre: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        if pre.iter().chain(&period).any(|&d| d > 9) {
            return Err(Error::NonCanonical("digit out of range".into()));
        }
        if period.is_empty() {
            return Err(Error::NonCanonical("empty period".into()));
        }
        if period.iter().all(|&d| d == 0) {
            return Err(Error::NonCanonical("all-zero period".into()));
        }
        let (pre, period) = minimize(pre, period);
        Ok(PeriodicExpansion { pre, period })
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.pre
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    pub fn value(&self) -> ExactRational {
        Self::raw_value(&self.pre, &self.period)
    }

    /// `0.pre(period)` via the geometric series, without canonical checks.
    pub(crate) fn raw_value(pre: &[u8], period: &[u8]) -> ExactRational {
        let scale = ExactRational::pow10(pre.len()).magnitude().clone();
        let nines = ExactRational::pow10(period.len()).magnitude() - 1u32;
        let num = digits_to_biguint(pre) * &nines + digits_to_biguint(period);
        ExactRational::from_unsigned(num, scale * nines)
    }

    /// The infinite digit stream.
    pub fn digits(&self) -> impl Iterator<Item = u8> + '_ {
        self.pre
            .iter()
            .copied()
            .chain(self.period.iter().copied().cycle())
    }

    pub fn prefix(&self, len: usize) -> Vec<u8> {
        self.digits().take(len).collect()
    }
}

/// Canonical nines-form expansion of `x`, `0 < x <= 1`.
pub fn to_expansion(x: &ExactRational) -> Result<PeriodicExpansion> {
    to_expansion_with_limit(x, DEFAULT_DIGIT_LIMIT)
}

pub fn to_expansion_with_limit(x: &ExactRational, limit: usize) -> Result<PeriodicExpansion> {
    if !x.in_unit_halfopen() {
        return Err(Error::OutOfUnitRange(x.to_string()));
    }
    if x.is_integer() {
        return Ok(PeriodicExpansion {
            pre: vec![],
            period: vec![9],
        });
    }
    let (p, q) = x.unsigned_parts();
    // For a reduced p/q the preperiod length is max(v2(q), v5(q)) and the
    // period is the order of 10 modulo the rest of q.
    let pre_len = valuation(&q, 2).max(valuation(&q, 5));
    if pre_len > limit {
        return Err(Error::DigitLimit {
            needed: pre_len as u128,
            limit,
        });
    }
    let (mut pre, period) = match (p.to_u64(), q.to_u64()) {
        (Some(p), Some(q)) if q < 1 << 59 => long_division(LongDivision::small(p, q), pre_len, limit)?,
        _ => long_division(LongDivision::big(p, q), pre_len, limit)?,
    };
    match period {
        Some(period) => Ok(PeriodicExpansion { pre, period }),
        None => {
            let last = pre.last_mut().expect("terminating expansion has digits");
            debug_assert!(*last > 0);
            *last -= 1;
            Ok(PeriodicExpansion {
                pre,
                period: vec![9],
            })
        }
    }
}

/// Inverse of [`to_expansion`].
pub fn from_expansion(e: &PeriodicExpansion) -> Result<ExactRational> {
    if e.period.iter().all(|&d| d == 0) {
        return Err(Error::NonCanonical("all-zero period".into()));
    }
    Ok(e.value())
}

enum LongDivision {
    Small { r: u64, q: u64 },
    Big { r: BigUint, q: BigUint },
}

impl LongDivision {
    fn small(p: u64, q: u64) -> Self {
        LongDivision::Small { r: p, q }
    }

    fn big(p: BigUint, q: BigUint) -> Self {
        LongDivision::Big { r: p, q }
    }

    fn step(&mut self) -> u8 {
        match self {
            LongDivision::Small { r, q } => {
                let t = *r * 10;
                *r = t % *q;
                (t / *q) as u8
            }
            LongDivision::Big { r, q } => {
                *r *= 10u32;
                let (d, rem) = r.div_rem(q);
                *r = rem;
                d.to_u8().expect("quotient digit")
            }
        }
    }

    fn remainder_is_zero(&self) -> bool {
        match self {
            LongDivision::Small { r, .. } => *r == 0,
            LongDivision::Big { r, .. } => r.is_zero(),
        }
    }

    fn snapshot(&self) -> Remainder {
        match self {
            LongDivision::Small { r, .. } => Remainder::Small(*r),
            LongDivision::Big { r, .. } => Remainder::Big(r.clone()),
        }
    }

    fn at(&self, mark: &Remainder) -> bool {
        match (self, mark) {
            (LongDivision::Small { r, .. }, Remainder::Small(m)) => r == m,
            (LongDivision::Big { r, .. }, Remainder::Big(m)) => r == m,
            _ => unreachable!(),
        }
    }
}

enum Remainder {
    Small(u64),
    Big(BigUint),
}

/// Returns the preperiod digits and, unless the division terminates, the
/// period digits found by waiting for the remainder to come back.
fn long_division(
    mut state: LongDivision,
    pre_len: usize,
    limit: usize,
) -> Result<(Vec<u8>, Option<Vec<u8>>)> {
    let mut pre = Vec::with_capacity(pre_len);
    for _ in 0..pre_len {
        pre.push(state.step());
    }
    if state.remainder_is_zero() {
        return Ok((pre, None));
    }
    let mark = state.snapshot();
    let mut period = Vec::new();
    loop {
        period.push(state.step());
        if state.at(&mark) {
            return Ok((pre, Some(period)));
        }
        if pre.len() + period.len() >= limit {
            return Err(Error::DigitLimit {
                needed: (pre.len() + period.len() + 1) as u128,
                limit,
            });
        }
    }
}

/// Reduce `period` to its primitive root, then fold the preperiod boundary
/// left while the last preperiod item equals the last period item.
pub(crate) fn minimize<T: PartialEq + Clone>(mut pre: Vec<T>, mut period: Vec<T>) -> (Vec<T>, Vec<T>) {
    let len = period.len();
    if let Some(root) = (1..len).find(|&d| len.is_multiple_of(d) && period[d..] == period[..len - d]) {
        period.truncate(root);
    }
    while let Some(last) = pre.last() {
        if last != period.last().expect("nonempty period") {
            break;
        }
        pre.pop();
        period.rotate_right(1);
    }
    (pre, period)
}

/// Decimal digits (most significant first) to an integer. Splits in halves
/// above a threshold so long periods convert in subquadratic time.
pub fn digits_to_biguint(digits: &[u8]) -> BigUint {
    const DIRECT: usize = 1024;
    if digits.len() <= DIRECT {
        let mut acc = BigUint::zero();
        for chunk in digits.chunks(19) {
            let mut word = 0u64;
            for &d in chunk {
                word = word * 10 + d as u64;
            }
            acc = acc * 10u64.pow(chunk.len() as u32) + word;
        }
        return acc;
    }
    let low = digits.len() / 2;
    let (hi, lo) = digits.split_at(digits.len() - low);
    digits_to_biguint(hi) * ExactRational::pow10(low).magnitude() + digits_to_biguint(lo)
}

fn render(digits: &[u8]) -> String {
    digits.iter().map(|d| char::from(b'0' + d)).collect()
}

impl fmt::Display for PeriodicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.{}({})", render(&self.pre), render(&self.period))
    }
}

impl fmt::Debug for PeriodicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PeriodicExpansion {
    type Err = Error;

    /// `0.<pre>(<period>)`, or any rational text form in `(0, 1]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix("0.") {
            if let Some((pre, rest)) = body.split_once('(') {
                let period = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed period in {s:?}")))?;
                let digits = |t: &str| -> Result<Vec<u8>> {
                    t.bytes()
                        .map(|b| {
                            b.is_ascii_digit()
                                .then_some(b - b'0')
                                .ok_or_else(|| Error::Parse(format!("invalid digit in {s:?}")))
                        })
                        .collect()
                };
                return PeriodicExpansion::new(digits(pre)?, digits(period)?);
            }
        }
        to_expansion(&s.parse()?)
    }
}
