//! Spectra, degeneracy values and Morse indices of the homogeneous metrics
//! `g_t` on spheres obtained by scaling the fibers of the Hopf fibrations
//! `S¹ → S^{2n+1}`, `S³ → S^{4n+3}` and `S⁷ → S¹⁵`.
//!
//! All quantities are exact: values are rationals or quadratic surds, and
//! every decimal number comes with a verified enclosure.

pub mod bifurcation;
pub mod diagram;
pub mod error;
pub mod families;
pub mod numerics;
pub mod spectra;
pub mod verify;

pub use bifurcation::{
    classify, degeneracy_value, degeneracy_values, gap_critical_point, gap_function, morse_index, morse_profile,
    Classification, DegeneracyTable, DegeneracyValue, GapFunction, MorseProfile,
};
pub use diagram::{diagram, Diagram, TRange};
pub use error::{Error, Result};
pub use families::{lambda1, lambda1_multiplicity, scalar_curvature, threshold, ThresholdCoefficients};
pub use numerics::{Enclosure, Rational, Surd};
pub use spectra::{
    enumerate_spectrum_below, Family, FamilyKind, FiberScale, Multiplicity, SpectralBranch, SpectrumEntry,
    SpectrumSlice, Status,
};
pub use verify::{verify, VerificationReport, VerifyConfig};
