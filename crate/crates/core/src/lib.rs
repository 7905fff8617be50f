pub mod complex;
pub mod coxeter;
pub mod error;
pub mod gf2;
pub mod group;
pub mod homology;
pub mod nestohedra;
pub mod poset;
pub mod tableaux;

pub use complex::{FVector, FullSubcomplex, SimplicialComplex};
pub use coxeter::{CoxeterComplex, RootSystem};
pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use group::{RealToricSpace, VertexGroup};
pub use homology::{reduced_betti, BettiTable};
