//! Exact enumeration of the Brauer complex of a simple algebraic group and a
//! census of its `F`-stable semisimple classes.
//!
//! All arithmetic is over `ℚ` with points written in the basis of fundamental
//! coweights. Nodes of the extended Dynkin diagram are numbered `0..=rank`
//! with `0` standing for `−α₀` and `1..=rank` in Bourbaki order.

pub mod affine;
pub mod brauer;
pub mod census;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod rootdata;

pub use affine::{
    AffineDatum, AffineMap, AffinePoint, DiagramSymmetry, FundamentalGroup, InvariantSpace,
};
pub use brauer::{BrauerComplex, FrobeniusConfig, SubAlcove, Theta, ThetaStratum};
pub use census::{Census, ClassRecord, Counts, DOddReport, GroupConfig, Isogeny, Table3Report};
pub use error::{Error, Result};
pub use lattice::Lattice;
pub use linalg::{Matrix, Rational, Vector};
pub use rootdata::{Family, RootDatum, TypeLabel};
