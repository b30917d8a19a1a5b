//! Exact computation of the 0-th local cohomology `H^0_m(R(f)) = J(f)^sat / J(f)`
//! of jacobian rings of projective hypersurfaces, with duality, stability,
//! freeness and normal-crossing Hodge diagnostics.

pub mod corpus;
pub mod error;
pub mod exactlinalg;
pub mod groebner;
pub mod hodge;
pub mod input;
pub mod jacobian;
pub mod polyring;
pub mod report;
pub mod sheafdiag;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use input::InputFile;
pub use jacobian::{DualityVerdict, GradedTable, HypersurfaceInput, Tjurina};
pub use polyring::{Field, Polynomial, Ring};
pub use report::{AnalysisOptions, AnalysisReport};
