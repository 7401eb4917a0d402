//! Digit groups and the interleaving engine behind the unit-square pairing.
//!
//! A digit group is a run of zeros closed by one nonzero digit. A canonical
//! expansion never ends in zeros, so its digit stream splits into an infinite
//! sequence of groups, and that sequence is eventually periodic whenever the
//! expansion is. Interleaving the groups of two expansions (`a1 b1 a2 b2 ...`)
//! is a bijection `(0,1]^2 -> (0,1]`; interleaving single digits would not
//! be, because of numbers with two decimal representations.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::expansion::{minimize, PeriodicExpansion, DEFAULT_DIGIT_LIMIT};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitGroup {
    zeros: usize,
    terminal: u8,
}

impl DigitGroup {
    pub fn new(zeros: usize, terminal: u8) -> Result<Self> {
        if !(1..=9).contains(&terminal) {
            return Err(Error::NonCanonical(format!("group terminal {terminal}")));
        }
        Ok(DigitGroup { zeros, terminal })
    }

    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn terminal(&self) -> u8 {
        self.terminal
    }

    pub fn len(&self) -> usize {
        self.zeros + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn push_digits(&self, out: &mut Vec<u8>) {
        out.extend(std::iter::repeat_n(0, self.zeros));
        out.push(self.terminal);
    }
}

impl fmt::Display for DigitGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.zeros {
            f.write_str("0")?;
        }
        write!(f, "{}", self.terminal)
    }
}

impl fmt::Debug for DigitGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Eventually periodic sequence of digit groups, minimal like
/// [`PeriodicExpansion`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSequence {
    pre: Vec<DigitGroup>,
    period: Vec<DigitGroup>,
}

impl GroupSequence {
    pub fn new(pre: Vec<DigitGroup>, period: Vec<DigitGroup>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::NonCanonical("empty group period".into()));
        }
        let (pre, period) = minimize(pre, period);
        Ok(GroupSequence { pre, period })
    }

    pub fn preperiod(&self) -> &[DigitGroup] {
        &self.pre
    }

    pub fn period(&self) -> &[DigitGroup] {
        &self.period
    }

    /// Group `i` of the infinite sequence.
    pub fn group(&self, i: usize) -> DigitGroup {
        match i.checked_sub(self.pre.len()) {
            None => self.pre[i],
            Some(j) => self.period[j % self.period.len()],
        }
    }

    pub fn groups(&self) -> impl Iterator<Item = DigitGroup> + '_ {
        self.pre.iter().chain(self.period.iter().cycle()).copied()
    }

    /// Concatenate the groups back into a digit expansion.
    pub fn to_expansion(&self) -> PeriodicExpansion {
        let flatten = |groups: &[DigitGroup]| {
            let mut digits = Vec::with_capacity(groups.iter().map(DigitGroup::len).sum());
            for g in groups {
                g.push_digits(&mut digits);
            }
            digits
        };
        PeriodicExpansion::new(flatten(&self.pre), flatten(&self.period))
            .expect("group terminals are nonzero")
    }
}

impl fmt::Display for GroupSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.pre {
            write!(f, "{g} ")?;
        }
        f.write_str("| (")?;
        for (i, g) in self.period.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for GroupSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Split the digit stream of `e` into groups.
///
/// A group starting at a position inside the periodic tail is determined by
/// that position modulo the period length, so the first residue seen twice
/// closes the group cycle. At most `|period|` group starts past the preperiod
/// are examined.
pub fn segment(e: &PeriodicExpansion) -> GroupSequence {
    let pre = e.preperiod();
    let period = e.period();
    let digit = |pos: usize| match pos.checked_sub(pre.len()) {
        None => pre[pos],
        Some(j) => period[j % period.len()],
    };
    let mut first_seen: Vec<Option<usize>> = vec![None; period.len()];
    let mut groups = Vec::new();
    let mut pos = 0usize;
    let cycle_start = loop {
        if let Some(offset) = pos.checked_sub(pre.len()) {
            let residue = offset % period.len();
            if let Some(index) = first_seen[residue] {
                break index;
            }
            first_seen[residue] = Some(groups.len());
        }
        let start = pos;
        while digit(pos) == 0 {
            pos += 1;
        }
        groups.push(DigitGroup {
            zeros: pos - start,
            terminal: digit(pos),
        });
        pos += 1;
    };
    let period_groups = groups.split_off(cycle_start);
    GroupSequence::new(groups, period_groups).expect("cycle is nonempty")
}

/// `a1 b1 a2 b2 ...` as a group sequence.
///
/// Past both preperiods the joint state is the pair of indices into the two
/// group cycles. Both advance by one per step, so the first repeated pair
/// closes after exactly `lcm` of the cycle lengths.
pub fn interleave_groups(a: &GroupSequence, b: &GroupSequence, limit: usize) -> Result<GroupSequence> {
    let start = a.pre.len().max(b.pre.len());
    let cycle = (a.period.len() as u128).lcm(&(b.period.len() as u128));
    // every group has at least one digit
    let floor = 2 * (start as u128 + cycle);
    if floor > limit as u128 {
        return Err(Error::DigitLimit { needed: floor, limit });
    }
    let cycle = cycle as usize;
    let mut digits = 0usize;
    let mut pairs = |range: std::ops::Range<usize>| -> Result<Vec<DigitGroup>> {
        let mut out = Vec::with_capacity(2 * range.len());
        for i in range {
            let (x, y) = (a.group(i), b.group(i));
            digits += x.len() + y.len();
            if digits > limit {
                return Err(Error::DigitLimit {
                    needed: digits as u128,
                    limit,
                });
            }
            out.push(x);
            out.push(y);
        }
        Ok(out)
    };
    let pre = pairs(0..start)?;
    let period = pairs(start..start + cycle)?;
    GroupSequence::new(pre, period)
}

/// Interleave two group sequences into one expansion.
pub fn interleave(a: &GroupSequence, b: &GroupSequence) -> Result<PeriodicExpansion> {
    Ok(interleave_groups(a, b, DEFAULT_DIGIT_LIMIT)?.to_expansion())
}

/// Split `y` into its odd-numbered groups (first) and even-numbered groups
/// (second), counting from one.
pub fn deinterleave(y: &PeriodicExpansion) -> (GroupSequence, GroupSequence) {
    let g = segment(y);
    let p = g.pre.len();
    let c = g.period.len();
    // Index 2i (resp. 2i+1) of g is periodic once it reaches p; stepping by two
    // through a cycle of length c repeats after c / gcd(c, 2) steps.
    let take = |offset: usize, start: usize| {
        let cycle = c / c.gcd(&2);
        let pre = (0..start).map(|i| g.group(2 * i + offset)).collect();
        let period = (start..start + cycle).map(|i| g.group(2 * i + offset)).collect();
        GroupSequence::new(pre, period).expect("cycle is nonempty")
    };
    (take(0, p.div_ceil(2)), take(1, p / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::to_expansion;
    use crate::rational::ExactRational;

    fn exp(s: &str) -> PeriodicExpansion {
        s.parse().unwrap()
    }

    fn rendered(groups: &[DigitGroup]) -> Vec<String> {
        groups.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn group_shape() {
        assert!(DigitGroup::new(3, 0).is_err());
        assert_eq!(DigitGroup::new(2, 4).unwrap().to_string(), "004");
    }

    #[test]
    fn segments_one_four_hundredth() {
        let g = segment(&exp("0.0024(9)"));
        assert_eq!(rendered(g.preperiod()), ["002", "4"]);
        assert_eq!(rendered(g.period()), ["9"]);
        assert_eq!(g.to_string(), "002 4 | (9)");
    }

    #[test]
    fn segments_worked_prefix() {
        // digits 003 8 001 007 3 7 3, continued with (73)
        let g = segment(&exp("0.003800100(73)"));
        let first: Vec<String> = g.groups().take(7).map(|x| x.to_string()).collect();
        assert_eq!(first, ["003", "8", "001", "007", "3", "7", "3"]);
        // the literal prefix 0.003801007373 has a single zero before the 1
        let g = segment(&exp("0.0038010073(73)"));
        let first: Vec<String> = g.groups().take(7).map(|x| x.to_string()).collect();
        assert_eq!(first, ["003", "8", "01", "007", "3", "7", "3"]);
    }

    #[test]
    fn segments_one_seventh() {
        let g = segment(&exp("0.(142857)"));
        assert!(g.preperiod().is_empty());
        assert_eq!(rendered(g.period()), ["1", "4", "2", "8", "5", "7"]);
    }

    #[test]
    fn group_cycle_can_span_several_digit_periods() {
        // digit period "10" has one group "01" once the boundary shifts
        let g = segment(&exp("0.(10)"));
        assert_eq!(rendered(g.preperiod()), ["1"]);
        assert_eq!(rendered(g.period()), ["01"]);
        assert_eq!(g.to_expansion(), exp("0.(10)"));
    }

    #[test]
    fn interleave_half_with_itself() {
        let g = segment(&exp("0.4(9)"));
        let y = interleave(&g, &g).unwrap();
        assert_eq!(y, exp("0.44(9)"));
        assert_eq!(y.value(), ExactRational::frac(9, 20));
    }

    #[test]
    fn interleave_ones() {
        let g = segment(&exp("0.(9)"));
        assert_eq!(interleave(&g, &g).unwrap(), exp("0.(9)"));
    }

    #[test]
    fn interleave_sevenths() {
        let g = segment(&to_expansion(&ExactRational::frac(1, 7)).unwrap());
        let y = interleave(&g, &g).unwrap();
        assert_eq!(y.to_string(), "0.(114422885577)");
    }

    #[test]
    fn deinterleave_examples() {
        let half = segment(&exp("0.4(9)"));
        assert_eq!(deinterleave(&exp("0.44(9)")), (half.clone(), half));
        let one = segment(&exp("0.(9)"));
        assert_eq!(deinterleave(&exp("0.(9)")), (one.clone(), one));
        let seventh = segment(&exp("0.(142857)"));
        assert_eq!(deinterleave(&exp("0.(114422885577)")), (seventh.clone(), seventh));
    }

    #[test]
    fn deinterleave_half() {
        let (a, b) = deinterleave(&exp("0.4(9)"));
        assert_eq!(a.to_expansion(), exp("0.4(9)"));
        assert_eq!(b.to_expansion(), exp("0.(9)"));
    }

    #[test]
    fn interleave_respects_limit() {
        let a = segment(&to_expansion(&ExactRational::frac(1, 97)).unwrap());
        let b = segment(&to_expansion(&ExactRational::frac(1, 89)).unwrap());
        assert!(matches!(interleave_groups(&a, &b, 1000), Err(Error::DigitLimit { .. })));
        assert!(interleave_groups(&a, &b, 100_000).is_ok());
    }
}
