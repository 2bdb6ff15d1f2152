//! Combinatorial topology of complexity-one torus varieties, computed from
//! divisorial fans with exact rational arithmetic.

pub mod chow;
pub mod complexes;
pub mod divfan;
pub mod document;
pub mod error;
pub mod exactla;
pub mod invariants;
pub mod pi1;
pub mod polyhedron;
pub mod random;

pub use chow::{ChowPresentation, ChowRing, Generator, SpecializationMap};
pub use complexes::{CayleyFan, PolyhedralComplex, ShellingData};
pub use divfan::{Coefficient, CurveData, DivisorialFan, PDivisor, SlicePoint};
pub use document::{ComplexDocument, FanDocument, ToricFanDocument};
pub use error::{Error, Result};
pub use exactla::{QMatrix, QVec, Rational, SmithForm, ZMatrix, ZVec};
pub use invariants::EPolynomial;
pub use pi1::{FGAbelianGroup, LocPart, NdReading, Pi1Description};
pub use polyhedron::{Cone, FaceDescriptor, Polyhedron};
