//! Legendrian contact homology DGAs from Lagrangian-projection diagrams.
//!
//! The crate models planar Lagrangian projections of oriented Legendrian links,
//! enumerates the immersed disks that define the Chekanov-Eliashberg differential,
//! and pushes augmentations through decomposable exact-Lagrangian-cobordism chain
//! maps (pinches, Reidemeister moves, basepoint slides and minimum caps). On top of
//! that it iterates Legendrian-loop monodromies to certify families of distinct
//! fillings and emits non-vanishing certificates for the symplectic homology of the
//! associated Weinstein 4-manifold.
//!
//! All arithmetic is exact: integer coefficients are arbitrary precision, diagram
//! geometry uses rational coordinates, and certificate matrices are exact fractions.

pub mod alg;
pub mod augment;
pub mod cobord;
pub mod coeff;
pub mod dga;
pub mod diagram;
pub mod disks;
pub mod geom;
pub mod qmat;
pub mod shcert;

pub use alg::{Elem, Word};
pub use coeff::{Laurent, Monomial};
pub use dga::Dga;
pub use diagram::Diagram;
