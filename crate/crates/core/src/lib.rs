//! Legal strings, overlap graphs and reduction graphs for modelling gene
//! assembly in ciliates, together with the reduction-rule systems acting on
//! them.

pub mod arrangement;
pub mod compress;
pub mod direct;
pub mod dot;
pub mod error;
pub mod graph;
pub mod iso;
pub mod overlap;
pub mod pointer;
pub mod pointer_set;
pub mod reduction;
pub mod rewriting;
pub mod sample;

pub use arrangement::{is_realistic, pi_kappa, realistic_decode, MicronuclearArrangement, Segment};
pub use error::{Error, Result};
pub use graph::{Colour, ColouredGraph, LabelledGraph};
pub use overlap::{
    find_realistic_arrangement, is_realistic_overlap, overlap_graph, OverlapGraph, Sign,
    DEFAULT_REALISM_KAPPA_CAP,
};
pub use pointer::{LegalString, Pointer, PointerString};
pub use pointer_set::PointerSet;
pub use reduction::{reduction_graph, ReductionGraph, RgVertex, RootSubgraph, Side};
pub use compress::{cps, cps_reduction, inflate, DesireEdge};
pub use direct::{condition_witnesses, direct_reduction_graph, Condition, DirectReductionGraph, JVertex, Witness};
pub use iso::{
    brute_force_isomorphic, brute_force_isomorphic_labelled, canonical_2edge, canonical_coloured,
    canonical_labelled, isomorphic_labelled, CanonicalForm,
};
pub use rewriting::{GraphRule, RuleSet, StringRule};
