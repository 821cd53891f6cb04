//! Zeta-map algorithms on Dyck words.
//!
//! Three routes to the same level-by-level reading of a Dyck word:
//!
//! * [`zeta_sweep`] — reverse the word, attach running heights, collect
//!   entries by descending height;
//! * [`zeta_area_vector`] — rebuild the identical image from the area
//!   sequence alone, one height class per pass;
//! * [`scaffolding`] — an agent walk seeded at the peaks that emits the
//!   word from the top level down. Its default reading equals the closed
//!   form [`scaffolding_grouped`], and conjugating it by
//!   reverse-complement on both sides ([`scaffolding_conjugate`])
//!   reproduces the sweep exactly.
//!
//! The sweep is a bijection on each `Dyck(n)`; [`inverse_zeta`]
//! materializes its inverse as a table. [`variant_search`] surveys the
//! sixteen readings of the agent procedure against the sweep and its
//! conjugated form.

mod classical;
mod error;
mod inverse;
mod scaffolding;
mod variants;

pub use classical::{sweep_level_row, zeta_area_vector, zeta_sweep};
pub use error::MapError;
pub use inverse::{inverse_zeta, InverseError, InverseTable, MAX_INVERSE_SEMILENGTH};
pub use scaffolding::{
    scaffolding, scaffolding_conjugate, scaffolding_default, scaffolding_grouped,
    trace_scaffolding, LevelConvention, MapVariant, PeakInQueue, QueueOrder, ScaffoldState,
    ScaffoldTrace, SpawnTiming, TraceRecord,
};
pub use variants::{
    variant_search, Mismatch, VariantOutcome, VariantSearchReport, VARIANT_SEARCH_RANGE,
};
