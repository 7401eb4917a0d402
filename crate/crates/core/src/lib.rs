//! Exact bijections `R^n <-> R^k` built from decimal digit-group
//! interleaving, and the `k`-dimensional vector spaces obtained by
//! transporting the structure of `R^k` onto `n`-tuples along them.
//!
//! All arithmetic is over exact rationals. Decimal expansions are handled as
//! finite (preperiod, period) data in nines-form, so every operation is
//! total and equality is structural.

pub mod atlas;
pub mod codec;
pub mod error;
pub mod expansion;
pub mod linalg;
pub mod pairing;
pub mod rational;
pub mod report;
pub mod sample;
pub mod transport;

pub use atlas::{compose, BijectionHandle, Space, SpaceKind};
pub use codec::{deinterleave, interleave, segment, DigitGroup, GroupSequence};
pub use error::{Error, Result};
pub use expansion::{from_expansion, to_expansion, PeriodicExpansion};
pub use pairing::{
    build_phi, fold_tuple, pair_reals, pair_unit, unfold_tuple, unpair_reals, unpair_unit, RealTuple,
};
pub use rational::{normalize, ExactRational};
pub use report::{AxiomReport, IsoReport, LawResult};
pub use sample::RationalSampler;
pub use transport::{KVector, TransportedSpace};
