//! Edge-coloring fan machinery for simple graphs.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`], [`graph6`], [`families`], [`enumerate`]: graphs, their
//!   interchange format, fixtures, and exhaustive small-graph corpora.
//! - [`coloring`]: partial proper edge colorings of `G - e`, missing-color
//!   sets, Kempe chains and swaps.
//! - [`chromatic`]: exact chromatic index with certificates, criticality,
//!   constructive (Δ+1)-colorings, and enumeration of colorings up to color
//!   permutation.
//! - [`fan`]: multi-fans, linear sequences, shifting, the fan order,
//!   stopping colors, extremal τ-sequences and extended multi-fans.
//! - [`verify`]: executable checks of the fan lemmas over corpora, with
//!   replayable witnesses.

pub mod chromatic;
pub mod coloring;
pub mod enumerate;
pub mod families;
pub mod fan;
pub mod graph;
pub mod graph6;
pub mod verify;

pub use chromatic::{
    chromatic_index, classify, enumerate_colorings, is_critical, is_critical_edge, vizing_color, ChromaticCertificate,
    EdgeClass, LowerBound, SolverConfig, SolverError,
};
pub use coloring::{Chain, ChainKind, Color, ColorSet, ColoringError, NonElementary, PartialColoring, Violation};
pub use enumerate::{canonical_form, enumerate_all, enumerate_connected, CanonicalForm};
pub use families::{make_family, Family};
pub use fan::{
    extend_multifan, fan_order, grow_multifan, maximum_multifan, shift, stopping_colors, tau_sequences_outside,
    ExtendedMultiFan, FanError, FanOrder, LinearSequence, MaximumFan, MultiFan, StoppingColors, TauSeqType,
};
pub use graph::{CoreInfo, EdgeId, Graph, GraphError, Vertex};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
