//! The space `R^n_k`: `n`-tuples with vector operations pulled back from
//! `R^k` along a bijection `Φ: R^n -> R^k`,
//!
//! ```text
//! x ⊕ y = Φ⁻¹(Φ(x) + Φ(y))        c ⊙ x = Φ⁻¹(c · Φ(x))
//! ```
//!
//! Any [`BijectionHandle`] between real tuple spaces works, not just the
//! pairing construction, which makes `Φ` linear by definition. The checks in
//! this module witness the vector space axioms and the isomorphism on seeded
//! random inputs with exact equality.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::atlas::{BijectionHandle, Space, SpaceKind};
use crate::error::{Error, Result};
use crate::linalg;
use crate::pairing::{build_phi, RealTuple};
use crate::rational::ExactRational;
use crate::report::{AxiomReport, Counterexample, IsoReport, LawResult};
use crate::sample::{trial_rng, RationalSampler};

/// An element of the standard space `R^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KVector(Vec<ExactRational>);

impl KVector {
    pub fn new(coords: Vec<ExactRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroArity);
        }
        Ok(KVector(coords))
    }

    pub fn zeros(k: usize) -> Result<Self> {
        KVector::new(vec![ExactRational::zero(); k])
    }

    pub fn unit(k: usize, i: usize) -> Result<Self> {
        let mut v = KVector::zeros(k)?;
        v.0[i] = ExactRational::one();
        Ok(v)
    }

    pub fn standard_basis(k: usize) -> Result<Vec<KVector>> {
        (0..k).map(|i| KVector::unit(k, i)).collect()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[ExactRational] {
        &self.0
    }

    pub fn add(&self, other: &KVector) -> Result<KVector> {
        self.same_dim(other)?;
        Ok(KVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn scale(&self, c: &ExactRational) -> KVector {
        KVector(self.0.iter().map(|a| c * a).collect())
    }

    pub fn neg(&self) -> KVector {
        KVector(self.0.iter().map(|a| -a).collect())
    }

    fn same_dim(&self, other: &KVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::ArityMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }
}

impl From<RealTuple> for KVector {
    fn from(t: RealTuple) -> Self {
        KVector(t.into_coords())
    }
}

impl From<KVector> for RealTuple {
    fn from(v: KVector) -> Self {
        RealTuple::new(v.0).expect("nonempty vector")
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&RealTuple::from(self.clone()), f)
    }
}

impl fmt::Debug for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct TransportedSpace {
    n: usize,
    k: usize,
    phi: BijectionHandle,
}

impl TransportedSpace {
    /// Wrap any bijection `R^n -> R^k`.
    pub fn new(phi: BijectionHandle) -> Result<Self> {
        let (source, target) = (phi.source(), phi.target());
        if source.kind != SpaceKind::Real || target.kind != SpaceKind::Real {
            return Err(Error::CompositionMismatch {
                left: format!("{phi:?}"),
                right: "a bijection between real tuple spaces".into(),
            });
        }
        if source.arity == 0 || target.arity == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(TransportedSpace {
            n: source.arity,
            k: target.arity,
            phi,
        })
    }

    /// `R^n_k` through the pairing construction.
    pub fn pairing(n: usize, k: usize) -> Result<Self> {
        TransportedSpace::new(build_phi(n, k)?)
    }

    /// `R^k` with its usual structure.
    pub fn standard(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroArity);
        }
        TransportedSpace::new(BijectionHandle::identity(Space::real(k)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn phi(&self) -> &BijectionHandle {
        &self.phi
    }

    pub fn to_target(&self, x: &RealTuple) -> Result<KVector> {
        Ok(self.phi.forward(x)?.into())
    }

    pub fn from_target(&self, v: &KVector) -> Result<RealTuple> {
        self.phi.backward(&v.clone().into())
    }

    /// `x ⊕ y = Φ⁻¹(Φ(x) + Φ(y))`
    pub fn vadd(&self, x: &RealTuple, y: &RealTuple) -> Result<RealTuple> {
        self.from_target(&self.to_target(x)?.add(&self.to_target(y)?)?)
    }

    /// `c ⊙ x = Φ⁻¹(c · Φ(x))`
    pub fn smul(&self, c: &ExactRational, x: &RealTuple) -> Result<RealTuple> {
        self.from_target(&self.to_target(x)?.scale(c))
    }

    /// `Φ⁻¹(0_k)`
    pub fn zero(&self) -> Result<RealTuple> {
        self.from_target(&KVector::zeros(self.k)?)
    }

    /// `Φ⁻¹(-Φ(x))`
    pub fn neg(&self, x: &RealTuple) -> Result<RealTuple> {
        self.from_target(&self.to_target(x)?.neg())
    }

    fn check_basis(&self, basis: &[KVector]) -> Result<()> {
        if basis.len() != self.k {
            return Err(Error::NotABasis(format!(
                "{} vectors given, dimension is {}",
                basis.len(),
                self.k
            )));
        }
        if let Some(v) = basis.iter().find(|v| v.dim() != self.k) {
            return Err(Error::NotABasis(format!("{v} does not lie in R^{}", self.k)));
        }
        let rows: Vec<Vec<ExactRational>> = basis.iter().map(|v| v.coords().to_vec()).collect();
        if linalg::rank(&rows) < self.k {
            return Err(Error::NotABasis("vectors are linearly dependent".into()));
        }
        Ok(())
    }

    /// Pull a basis of `R^k` back to `R^n_k`: `[Φ⁻¹(α1), ..., Φ⁻¹(αk)]`.
    pub fn basis(&self, basis: &[KVector]) -> Result<Vec<RealTuple>> {
        self.check_basis(basis)?;
        basis.iter().map(|v| self.from_target(v)).collect()
    }

    /// The unique coefficients `c` with `Φ(x) = Σ c_i α_i`.
    pub fn coordinates(&self, basis: &[KVector], x: &RealTuple) -> Result<Vec<ExactRational>> {
        self.check_basis(basis)?;
        let target = self.to_target(x)?;
        // columns are the basis vectors
        let a: Vec<Vec<ExactRational>> = (0..self.k)
            .map(|r| basis.iter().map(|v| v.coords()[r].clone()).collect())
            .collect();
        linalg::solve(&a, target.coords()).ok_or_else(|| Error::NotABasis("singular system".into()))
    }

    /// `(c1 ⊙ t1) ⊕ ... ⊕ (ck ⊙ tk)`
    pub fn combine(&self, coeffs: &[ExactRational], tuples: &[RealTuple]) -> Result<RealTuple> {
        if coeffs.len() != tuples.len() || coeffs.is_empty() {
            return Err(Error::ArityMismatch {
                expected: tuples.len(),
                got: coeffs.len(),
            });
        }
        let mut acc = self.smul(&coeffs[0], &tuples[0])?;
        for (c, t) in coeffs.iter().zip(tuples).skip(1) {
            acc = self.vadd(&acc, &self.smul(c, t)?)?;
        }
        Ok(acc)
    }

    pub fn check_axioms(&self, trials: usize, seed: u64) -> AxiomReport {
        self.check_axioms_with(trials, seed, &RationalSampler::transport_default())
    }

    /// Evaluate both sides of each of the eight axioms on seeded inputs
    /// `x, y, z ∈ R^n` and scalars `c1, c2`.
    pub fn check_axioms_with(&self, trials: usize, seed: u64, sampler: &RationalSampler) -> AxiomReport {
        let laws = AXIOMS.iter().map(|(name, _)| *name).collect::<Vec<_>>();
        let outcomes = self.run_trials(trials, seed, sampler, |inputs| {
            AXIOMS.iter().map(|(_, law)| law(self, inputs)).collect()
        });
        AxiomReport {
            phi: self.phi.name().to_string(),
            n: self.n,
            k: self.k,
            seed,
            trials,
            generator: sampler.describe(),
            axioms: tally(&laws, trials, outcomes),
        }
    }

    pub fn check_isomorphism(&self, trials: usize, seed: u64) -> IsoReport {
        self.check_isomorphism_with(trials, seed, &RationalSampler::transport_default())
    }

    /// Additivity and homogeneity of `Φ`, and round trips in both directions.
    pub fn check_isomorphism_with(&self, trials: usize, seed: u64, sampler: &RationalSampler) -> IsoReport {
        let laws = ISO_CHECKS.iter().map(|(name, _)| *name).collect::<Vec<_>>();
        let outcomes = self.run_trials(trials, seed, sampler, |inputs| {
            ISO_CHECKS.iter().map(|(_, law)| law(self, inputs)).collect()
        });
        IsoReport {
            phi: self.phi.name().to_string(),
            n: self.n,
            k: self.k,
            seed,
            trials,
            generator: sampler.describe(),
            checks: tally(&laws, trials, outcomes),
        }
    }

    fn run_trials<F>(&self, trials: usize, seed: u64, sampler: &RationalSampler, eval: F) -> Vec<(Inputs, Vec<Outcome>)>
    where
        F: Fn(&Inputs) -> Vec<Outcome> + Sync,
    {
        (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = trial_rng(seed, t as u64);
                let inputs = Inputs {
                    x: sampler.tuple(&mut rng, self.n),
                    y: sampler.tuple(&mut rng, self.n),
                    z: sampler.tuple(&mut rng, self.n),
                    v: sampler.tuple(&mut rng, self.k),
                    c1: sampler.rational(&mut rng),
                    c2: sampler.rational(&mut rng),
                };
                let outcomes = eval(&inputs);
                (inputs, outcomes)
            })
            .collect()
    }
}

struct Inputs {
    x: RealTuple,
    y: RealTuple,
    z: RealTuple,
    v: RealTuple,
    c1: ExactRational,
    c2: ExactRational,
}

impl Inputs {
    fn named(&self, names: &[&str]) -> BTreeMap<String, Vec<String>> {
        names
            .iter()
            .map(|&name| {
                let coords = match name {
                    "x" => self.x.coords().iter().map(ToString::to_string).collect(),
                    "y" => self.y.coords().iter().map(ToString::to_string).collect(),
                    "z" => self.z.coords().iter().map(ToString::to_string).collect(),
                    "v" => self.v.coords().iter().map(ToString::to_string).collect(),
                    "c1" => vec![self.c1.to_string()],
                    "c2" => vec![self.c2.to_string()],
                    _ => unreachable!("unknown input {name}"),
                };
                (name.to_string(), coords)
            })
            .collect()
    }
}

/// `Ok(())` when both sides agree, otherwise the inputs involved and why.
type Outcome = std::result::Result<(), (&'static [&'static str], String)>;

type Law = fn(&TransportedSpace, &Inputs) -> Outcome;

fn equal<T: PartialEq + fmt::Display>(uses: &'static [&'static str], sides: Result<(T, T)>) -> Outcome {
    match sides {
        Ok((lhs, rhs)) if lhs == rhs => Ok(()),
        Ok((lhs, rhs)) => Err((uses, format!("{lhs} != {rhs}"))),
        Err(e) => Err((uses, format!("error: {e}"))),
    }
}

const AXIOMS: [(&str, Law); 8] = [
    ("commutativity of addition", |s, i| {
        equal(&["x", "y"], (|| Ok((s.vadd(&i.x, &i.y)?, s.vadd(&i.y, &i.x)?)))())
    }),
    ("associativity of addition", |s, i| {
        equal(&["x", "y", "z"], (|| {
            let lhs = s.vadd(&i.x, &s.vadd(&i.y, &i.z)?)?;
            let rhs = s.vadd(&s.vadd(&i.x, &i.y)?, &i.z)?;
            Ok((lhs, rhs))
        })())
    }),
    ("additive identity", |s, i| {
        equal(&["x"], (|| Ok((s.vadd(&i.x, &s.zero()?)?, i.x.clone())))())
    }),
    ("additive inverse", |s, i| {
        equal(&["x"], (|| Ok((s.vadd(&i.x, &s.neg(&i.x)?)?, s.zero()?)))())
    }),
    ("scalar identity", |s, i| {
        equal(&["x"], (|| Ok((s.smul(&ExactRational::one(), &i.x)?, i.x.clone())))())
    }),
    ("compatibility of scalar multiplication", |s, i| {
        equal(&["x", "c1", "c2"], (|| {
            let lhs = s.smul(&i.c1, &s.smul(&i.c2, &i.x)?)?;
            let rhs = s.smul(&(&i.c1 * &i.c2), &i.x)?;
            Ok((lhs, rhs))
        })())
    }),
    ("distributivity over vector addition", |s, i| {
        equal(&["x", "y", "c1"], (|| {
            let lhs = s.smul(&i.c1, &s.vadd(&i.x, &i.y)?)?;
            let rhs = s.vadd(&s.smul(&i.c1, &i.x)?, &s.smul(&i.c1, &i.y)?)?;
            Ok((lhs, rhs))
        })())
    }),
    ("distributivity over field addition", |s, i| {
        equal(&["x", "c1", "c2"], (|| {
            let lhs = s.smul(&(&i.c1 + &i.c2), &i.x)?;
            let rhs = s.vadd(&s.smul(&i.c1, &i.x)?, &s.smul(&i.c2, &i.x)?)?;
            Ok((lhs, rhs))
        })())
    }),
];

const ISO_CHECKS: [(&str, Law); 4] = [
    ("additivity: phi(x + y) = phi(x) + phi(y)", |s, i| {
        equal(&["x", "y"], (|| {
            let lhs = s.to_target(&s.vadd(&i.x, &i.y)?)?;
            let rhs = s.to_target(&i.x)?.add(&s.to_target(&i.y)?)?;
            Ok((lhs, rhs))
        })())
    }),
    ("homogeneity: phi(c x) = c phi(x)", |s, i| {
        equal(&["x", "c1"], (|| {
            let lhs = s.to_target(&s.smul(&i.c1, &i.x)?)?;
            let rhs = s.to_target(&i.x)?.scale(&i.c1);
            Ok((lhs, rhs))
        })())
    }),
    ("backward(forward(x)) = x", |s, i| {
        equal(&["x"], (|| Ok((s.phi.backward(&s.phi.forward(&i.x)?)?, i.x.clone())))())
    }),
    ("forward(backward(v)) = v", |s, i| {
        equal(&["v"], (|| Ok((s.phi.forward(&s.phi.backward(&i.v)?)?, i.v.clone())))())
    }),
];

fn tally(laws: &[&str], trials: usize, outcomes: Vec<(Inputs, Vec<Outcome>)>) -> Vec<LawResult> {
    let mut results: Vec<LawResult> = laws
        .iter()
        .map(|name| LawResult {
            name: name.to_string(),
            trials,
            passes: 0,
            counterexample: None,
        })
        .collect();
    for (trial, (inputs, row)) in outcomes.into_iter().enumerate() {
        for (result, outcome) in results.iter_mut().zip(row) {
            match outcome {
                Ok(()) => result.passes += 1,
                Err((uses, detail)) => {
                    if result.counterexample.is_none() {
                        result.counterexample = Some(Counterexample {
                            trial,
                            inputs: inputs.named(uses),
                            detail,
                        });
                    }
                }
            }
        }
    }
    results
}
