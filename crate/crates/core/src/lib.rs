//! Relativistic field spin operator for massive spin-1/2 fields.
//!
//! The crate builds the Pauli-Lubanski vector and every spin operator
//! derived from it as explicit 4×4 complex matrices at numeric momenta, and
//! provides the checks that compare independent constructions.

pub mod clifford;
pub mod cmatrix;
pub mod error;
pub mod pauli_lubanski;
pub mod report;
pub mod sampling;
pub mod spin;
pub mod spinor;
pub mod suite;
pub mod tensor;
pub mod wigner;

pub use clifford::{chiral_gamma_basis, GammaBasis};
pub use cmatrix::{ComplexMatrix2, ComplexMatrix4, Spinor};
pub use error::{Error, Result};
pub use pauli_lubanski::{PlForm, PlVector};
pub use report::{Status, TableRow, VerificationReport, WignerRow};
pub use sampling::SweepConfig;
pub use spin::{ChiralSpinPair, SpinConstruction, SpinTriple};
pub use spinor::{DiracSpinor, Kind, Lambda, MatrixElementTable, MomentumGrid, PlaneWaveMode};
pub use suite::{TableOperator, VerifyConfig, WignerSweepConfig};
pub use tensor::{AntisymTensor4, FourVector, LorentzMatrix};
pub use wigner::{LittleGroupD, WignerRotation};
