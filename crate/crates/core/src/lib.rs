//! Exact combinatorics behind Picard-Lefschetz oscillators.
//!
//! The crate is organized bottom-up:
//!
//! * [`root_datum`]: simple root data, positive (co)roots, Langlands duality.
//! * [`kostant`]: Kostant partitions of positive coweights.
//! * [`poly`]: Laurent polynomials in a Tate-twist variable with half-integer exponents.
//! * [`lefschetz`]: sl2-characters, exterior powers, oscillator stalks.
//! * [`kgroup`]: Grothendieck-group classes on divisor spaces and the diagonal computation.
//! * [`uea`]: the Hopf algebra U(n) of the Langlands dual group in a PBW basis.
//!
//! All arithmetic is exact.

pub mod error;
pub mod kgroup;
pub mod kostant;
pub mod lefschetz;
pub mod poly;
pub mod root_datum;
pub mod uea;

pub use error::{Error, Result};
pub use kgroup::{Block, BlockTag, DiagonalClass, KClass};
pub use kostant::KostantPartition;
pub use lefschetz::{CollisionPattern, OscillatorStalk, PloStalk, Sl2Decomposition};
pub use poly::{BigradedChar, HalfLaurent, SignedTwistPoly};
pub use root_datum::{Coweight, Family, GroupType, RootDatum};
pub use uea::{ChevalleyBasis, Monomial, PbwElement, TensorElement};
