//! Seeded random rationals for the randomized checks.
//!
//! Trial `t` of a run with seed `s` draws from ChaCha8 seeded with `s` on
//! stream `t`, so trials are independent of evaluation order.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::pairing::RealTuple;
use crate::rational::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Denominators {
    /// `q = 10^j`, `j` uniform in `0..=log10(max_denominator)`.
    PowersOfTen,
    /// `q` uniform in `1..=max_denominator`.
    Uniform,
    /// `q = 10^j · s`, `j` uniform in `0..=max_exp`, `s` uniform in
    /// `1..=max_cofactor`: short periods with nontrivial preperiods.
    ScaledSmall { max_exp: u32, max_cofactor: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSampler {
    pub max_abs_numerator: u64,
    pub max_denominator: u64,
    pub denominators: Denominators,
}

impl RationalSampler {
    pub fn decimal(max_abs_numerator: u64, max_denominator: u64) -> Self {
        RationalSampler {
            max_abs_numerator,
            max_denominator,
            denominators: Denominators::PowersOfTen,
        }
    }

    pub fn uniform(max_abs_numerator: u64, max_denominator: u64) -> Self {
        RationalSampler {
            max_abs_numerator,
            max_denominator,
            denominators: Denominators::Uniform,
        }
    }

    pub fn scaled_small(max_abs_numerator: u64, max_exp: u32, max_cofactor: u64) -> Self {
        RationalSampler {
            max_abs_numerator,
            max_denominator: 10u64.pow(max_exp) * max_cofactor,
            denominators: Denominators::ScaledSmall { max_exp, max_cofactor },
        }
    }

    /// The sampler used by the axiom and isomorphism checks:
    /// `p / 10^j` with `|p| <= 1000` and `10^j <= 1000`.
    ///
    /// Decimal fractions are closed under everything the transported space
    /// does. A general denominator `q` brings a period of up to `q - 1`
    /// digits, interleaving takes lcms of group cycles, and sums take lcms of
    /// periods, so expansions outgrow memory after a couple of operations.
    pub fn transport_default() -> Self {
        RationalSampler::decimal(1000, 1000)
    }

    fn denominator(&self, rng: &mut ChaCha8Rng) -> BigInt {
        let max = self.max_denominator.max(1);
        match self.denominators {
            Denominators::PowersOfTen => {
                let top = max.ilog10();
                BigInt::from(10u64.pow(rng.random_range(0..=top)))
            }
            Denominators::Uniform => BigInt::from(rng.random_range(1..=max)),
            Denominators::ScaledSmall { max_exp, max_cofactor } => {
                let j = rng.random_range(0..=max_exp);
                let s = rng.random_range(1..=max_cofactor.max(1));
                BigInt::from(10u64.pow(j) * s)
            }
        }
    }

    pub fn rational(&self, rng: &mut ChaCha8Rng) -> ExactRational {
        let q = self.denominator(rng);
        let m = self.max_abs_numerator as i64;
        let p = rng.random_range(-m..=m);
        ExactRational::new(p, q).expect("positive denominator")
    }

    /// A value in `(0, 1]`: `p/q` with `1 <= p <= q`.
    pub fn unit(&self, rng: &mut ChaCha8Rng) -> ExactRational {
        let q = self.denominator(rng);
        let top: u64 = (&q).try_into().expect("denominator fits u64");
        let p = rng.random_range(1..=top);
        ExactRational::new(p, q).expect("positive denominator")
    }

    pub fn tuple(&self, rng: &mut ChaCha8Rng, arity: usize) -> RealTuple {
        RealTuple::new((0..arity).map(|_| self.rational(rng)).collect()).expect("arity >= 1")
    }

    pub fn describe(&self) -> String {
        match self.denominators {
            Denominators::PowersOfTen => format!(
                "chacha8(seed, stream=trial): p/10^j, |p| <= {}, 10^j <= {}",
                self.max_abs_numerator, self.max_denominator
            ),
            Denominators::Uniform => format!(
                "chacha8(seed, stream=trial): p/q, |p| <= {}, 1 <= q <= {}",
                self.max_abs_numerator, self.max_denominator
            ),
            Denominators::ScaledSmall { max_exp, max_cofactor } => format!(
                "chacha8(seed, stream=trial): p/(10^j s), |p| <= {}, j <= {max_exp}, 1 <= s <= {max_cofactor}",
                self.max_abs_numerator
            ),
        }
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_trial() {
        let s = RationalSampler::uniform(1000, 1000);
        let a: Vec<_> = (0..5).map(|t| s.rational(&mut trial_rng(7, t))).collect();
        let b: Vec<_> = (0..5).rev().map(|t| s.rational(&mut trial_rng(7, t))).collect();
        assert_eq!(a, b.into_iter().rev().collect::<Vec<_>>());
        assert_ne!(s.rational(&mut trial_rng(7, 0)), s.rational(&mut trial_rng(8, 0)));
    }

    #[test]
    fn respects_bounds() {
        let s = RationalSampler::decimal(1000, 1000);
        let mut rng = trial_rng(1, 0);
        let bound = ExactRational::from(1000);
        for _ in 0..500 {
            let x = s.rational(&mut rng);
            assert!(x.abs() <= bound);
            assert_eq!(BigInt::from(1000) % x.denom(), BigInt::from(0));
            let u = s.unit(&mut rng);
            assert!(u.in_unit_halfopen());
        }
        let s = RationalSampler::uniform(10, 10);
        let bound = ExactRational::from(10);
        for _ in 0..500 {
            let x = s.rational(&mut rng);
            assert!(x.abs() <= bound);
            assert!(*x.denom() <= BigInt::from(10));
        }
    }
}
