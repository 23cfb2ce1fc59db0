//! Finite monoids, shift spaces over them, cellular automata, and a witness
//! engine that separates distinct cellular automata (and distinct monoid
//! endomorphisms) inside finite quotients, emitting machine-checkable
//! certificates.
//!
//! The crate has two computational backends:
//!
//! * a **finite backend**, where the acting monoid `M` is given by an explicit
//!   multiplication table and the full configuration space `A^M` is enumerable;
//! * an **integer backend**, where `M = ℤ`, configurations are periodic words,
//!   and cellular automata are presented by local rules of finite radius.
//!
//! Everything is exact integer arithmetic; all enumerations use a fixed
//! deterministic (lexicographic) order so that certificates are reproducible
//! byte for byte.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod catalog;
pub mod cellular;
pub mod certificate;
pub mod monoid;
pub mod shift;
pub mod witness;

pub use catalog::MonoidSpec;
pub use cellular::{
    enumerate_ca, enumerate_ca_with_cap, is_equivariant, rules_equal, tau_m, CellularError,
    EquivariantMap, LocalRule, Transformation,
};
pub use certificate::{
    verify_certificate, Certificate, EndoSeparationCertificate, FiniteSeparationCertificate,
    IntegerSeparationCertificate, VerifyError,
};
pub use monoid::{
    enumerate_congruences, enumerate_morphisms, is_congruence, Congruence, FiniteMonoid,
    MonoidError, QuotientResult, SemigroupMorphism,
};
pub use shift::{
    config_index, config_values, integer_orbit_congruence, inv, inv_integer, inv_integer_with_cap,
    inv_with_cap, orbit_congruence, periodic_cylinder_witness, Alphabet, Configuration,
    PeriodicWord, ShiftError,
};
pub use witness::{
    malcev_hopf_check, malcev_phi, separate_ca_finite, separate_ca_integer, separate_endomorphisms,
    MalcevPhi, MalcevReport, WitnessError,
};

/// Default enumeration guard: operations that materialize a configuration
/// space refuse to produce more than this many configurations.
pub const DEFAULT_ENUM_CAP: usize = 1 << 20;
