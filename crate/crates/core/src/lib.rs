//! Belief-function combination rules.
//!
//! Mass functions live on a [`Frame`] of at most 64 singletons, with focal
//! sets encoded as bitmasks. Every M-expert rule enumerates the Cartesian
//! product of the experts' focal elements once and decides, tuple by tuple,
//! where the tuple's product mass goes:
//!
//! | rule | non-conflicting tuple | conflicting tuple |
//! |------|-----------------------|-------------------|
//! | [`conjunctive`] | intersection | ∅ |
//! | [`dempster`], [`yager`] | intersection | renormalized away / Θ |
//! | [`dubois_prade`] | intersection | union |
//! | [`pcr6`] | intersection | back to the elements, ∝ their masses |
//! | [`mix`] | split intersection / union by δ | union |
//! | [`dpcr`] | intersection | split PCR6 / union by α |
//! | [`mdpcr`] | split intersection / union by δ | split PCR6 / union by α |
//! | [`emix`] | like Mix | over maximal compatible groups |
//!
//! ```
//! use std::sync::Arc;
//! use belief_fusion::{Frame, MassFunction, World, pcr6};
//!
//! let frame = Arc::new(Frame::new(["A", "B", "C"]).unwrap());
//! let m1 = MassFunction::from_exprs(&frame, &[("A", 0.9), ("C", 0.1)], World::Closed).unwrap();
//! let m2 = MassFunction::from_exprs(&frame, &[("B", 0.9), ("C", 0.1)], World::Closed).unwrap();
//! let fused = pcr6(&[m1, m2]).unwrap();
//! assert!((fused.mass_of("A") - 0.486).abs() < 1e-12);
//! ```

pub mod classic;
pub mod cli;
pub mod error;
pub mod extended;
pub mod frame;
pub mod mass;
pub mod measures;
pub mod mixed;
pub mod pcr;
pub mod rule;
pub mod tuple;

pub use classic::{conjunctive, dempster, disjunctive, dubois_prade, florea, weighted_conflict_repartition, yager};
pub use error::{Error, Result};
pub use extended::{
    delta_group, emix, emix_complexity_probe, epsilon_k, extended_mdpcr, k_bar, maximal_groups, CompatibleGroup,
};
pub use frame::{FocalSet, Frame};
pub use mass::{MassFunction, PignisticDistribution, World};
pub use measures::{auto_conflict, global_conflict};
pub use mixed::{
    alpha_global, alpha_per_expert, delta_jaccard, delta_min, dpcr, lambda_norm, mdpcr, mix,
    pairwise_conflict_count, pairwise_conflict_fraction, AlphaPolicy, DissimilarityKind,
};
pub use pcr::{pcr6, pcr6f, pcr6g, pcr_two, sigma_index, ShapingFunction};
pub use rule::RuleConfig;
pub use tuple::{Tuple, Tuples};
