//! Exact computations with monomial ideals in monomial quotient rings
//! `R = k[x_1..x_r]/Q`: saturations, lengths of finite-length quotients,
//! epsilon and Amao multiplicity sequences, and the nilradical
//! decomposition of the saturated-power quotient.

pub mod asymptotics;
pub mod error;
pub mod length;
pub mod monomial;
pub mod rational;
pub mod ring;
pub mod verify;

pub use asymptotics::{
    amao_grid, decomposition_sequences, epsilon_sequence, estimate_limit, running_estimates,
    swanson_c_search, swanson_search, AmaoGrid, AmaoRow, DecompositionRow, FamilyKind,
    LimitEstimate, RunningEstimate, SequenceIndex, SequenceRecord, SequenceStore, SwansonResult,
};
pub use error::{Error, Result};
pub use length::{hilbert_function, is_finite_colength_pair, length_quotient, LengthResult, StopCertificate};
pub use monomial::{Monomial, MonomialIdeal};
pub use ring::{QuotientRing, RingHandle, RingIdeal};
