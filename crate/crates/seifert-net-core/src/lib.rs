//! Seifert surgeries on torus knots and the network they generate.
//!
//! A *Seifert surgery* is a pair `(K, m)` of a knot and an integral slope
//! such that `m`-surgery on `K` yields a Seifert fibered space.  Every
//! integral surgery on a torus knot is of this kind, and those vertices
//! form a distinguished subcomplex of the full surgery network.  Edges of
//! the network come from `(-1)`- or `(+1)`-twists along *seiferters*:
//! knots that become fibers in the surgered manifold.
//!
//! The crate provides
//!
//! * exact Seifert-invariant algebra over the integers and rationals
//!   ([`sfs`]),
//! * a classifier for the manifolds obtained by integral surgery on a
//!   torus knot ([`classify`]),
//! * a data-driven catalog of seiferters and annular pairs with exact
//!   linking-number arithmetic ([`catalog`]),
//! * a twist engine that moves surgeries along seiferters ([`twist`]),
//! * brute-force verifiers for the number-theoretic facts the twist
//!   calculus relies on ([`verify`]),
//! * graph construction and export for finite slices of the network
//!   ([`network`]).

pub mod catalog;
pub mod classify;
pub mod expr;
pub mod model;
pub mod network;
pub mod sfs;
pub mod twist;
pub mod verify;

pub use catalog::{AnnularPairRecord, Catalog, Seiferter, SeiferterKind};
pub use classify::{classify_surgery, surgered_invariants, ManifoldDescription};
pub use model::{
    canonical_torus_knot, spreader_slope, KnotDescriptor, KnotError, SeifertSurgery, TorusKnotId,
    TwistStep,
};
pub use network::{build_figure2, build_subcomplex_t, NetworkEdge, NetworkError, NetworkGraph};
pub use sfs::{LensSpace, SeifertInvariants};
pub use twist::{
    basic_twist, twist_along_seiferter, twist_sequence, BasicSeiferter, ScriptStep, TwistError,
};
pub use verify::{run_all, VerifyBounds, VerifyReport};
