//! Numerical toolkit for analytic discs in the unit ball of `C^n`.
//!
//! - [`geometry`]: ball points, Gleason distance, automorphisms, polynomial discs.
//! - [`quadrature`]: weighted Bergman and Hardy norms on the disc and sphere.
//! - [`pick`]: Pick matrices, PSD feasibility, the model-space norm, a Schur solver.
//! - [`carleson`]: pushforward box masses and the subordination ratio.
//! - [`sequences`]: weighted sequence norms, separated nets, disc trace checks.
//! - [`cli`]: the `disc-analysis` command line.

pub mod carleson;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod pick;
pub mod polynomial;
pub mod quadrature;
pub mod sequences;

pub use error::{Error, Result};
pub use geometry::{BallAutomorphism, CPoint, DiscMap, HolomorphicDisc, Region, C64};
