//! Length sequences of the epsilon, Amao and nilradical-decomposition
//! families, their normalized limits, and Swanson-type linear constants.
//!
//! Every normalization uses `d = dim R`. Lengths are exact integers and all
//! normalized values are exact rationals.

mod estimate;
mod sequences;
mod swanson;

pub use estimate::{
    default_tolerance, estimate_limit, estimate_limit_with_tolerance, running_estimates,
    EstimateDiagnostics, LimitEstimate, RunningEstimate,
};
pub use sequences::{
    amao_grid, amao_grid_in, as_pairs, decomposition_records, decomposition_sequences,
    epsilon_sequence, epsilon_sequence_in, filtration_sequences, tabulate, AmaoGrid, AmaoRow,
    DecompositionPairs, DecompositionRow, FamilyKind, FiltrationSequences, SequenceIndex,
    SequenceRecord, SequenceStore,
};
pub use swanson::{swanson_c_search, swanson_search, SwansonResult};
