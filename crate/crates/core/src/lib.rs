//! Exact prime-characteristic invariants of Stanley-Reisner rings.
//!
//! The objects are quotients R = S/I of a polynomial ring over F_p by a
//! squarefree monomial ideal, together with monomial ideal pairs in R.
//! Everything is computed in exact arithmetic: Frobenius power counts
//! and their limits (F-thresholds), contractions of ideals under the
//! Cartier algebra with their cores and splitting data, a-invariants of
//! the squarefree quotients through simplicial cohomology, and the
//! limit behaviour of Castelnuovo-Mumford regularity along Frobenius
//! levels.
//!
//! Expensive counts come in two flavours: the production routes in
//! [`threshold`], [`cartier`], and [`regularity`], and deliberately
//! naive reference routes in [`oracle`] that re-derive small instances
//! from first principles so the two can be compared in tests.

pub mod cartier;
pub mod complex;
pub mod error;
pub mod input;
pub mod monomial;
pub mod oracle;
pub mod rational;
pub mod regularity;
pub mod ring;
pub mod simplex;
pub mod threshold;

pub use error::{Error, Result};
pub use monomial::{FacePrime, Monomial, MonomialIdeal, MAX_ENUM_VARS};
pub use rational::BigRational;
pub use ring::{FrobeniusLevel, Localization, StanleyReisnerRing};
