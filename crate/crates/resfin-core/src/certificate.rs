//! Machine-checkable separation certificates.
//!
//! A certificate packages everything needed to re-check, from scratch, that
//! two cellular automata (or two monoid endomorphisms) are distinct and that
//! the distinction survives restriction to a finite structure: the maps
//! themselves as raw tables, a witness, the finite invariant set, and the two
//! restricted images. Verification never trusts stored intermediate results —
//! it re-applies the maps, re-restricts them, rebuilds the canonical
//! invariant set, and recompares everything, reporting the first invariant
//! that fails.
//!
//! Certificates serialize to JSON with a fixed key order, so re-serializing a
//! parsed certificate reproduces it byte for byte. The optional `meta` field
//! carries free-form annotations and is ignored by verification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cellular::{CellularError, EquivariantMap, LocalRule, Transformation};
use crate::monoid::{enumerate_morphisms, Congruence, FiniteMonoid, SemigroupMorphism};
use crate::shift::{inv, inv_integer, Alphabet, Configuration, PeriodicWord};

/// Certificate format version written by this library and required of every
/// certificate it verifies.
pub const SCHEMA_VERSION: u32 = 1;

/// A failed certificate check: the first invariant that did not survive
/// re-derivation from the certificate's raw data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    /// The certificate declares a schema version this library does not know.
    #[error("unsupported schema version {got}")]
    UnsupportedVersion {
        /// The declared version.
        got: u32,
    },
    /// A component is malformed or inconsistent with the others.
    #[error("malformed certificate: {0}")]
    Malformed(String),
    /// The witness does not belong to the stored invariant set.
    #[error("witness not in X")]
    WitnessNotInSet,
    /// The two maps agree on the witness, so it separates nothing.
    #[error("the maps agree on the witness")]
    WitnessNotSeparating,
    /// The two stored restricted images are equal as transformations.
    #[error("images coincide")]
    ImagesCoincide,
    /// The invariant set is not closed under one of the maps.
    #[error("X not closed: member {member} maps outside the set under map {which}")]
    NotClosed {
        /// Which map escapes the set (1 or 2).
        which: u8,
        /// Position in `invariant_set` of the member whose image is missing.
        member: usize,
    },
    /// A stored restricted image disagrees with the recomputed restriction.
    #[error("image{which} does not match the recomputed restriction")]
    ImageMismatch {
        /// Which image disagrees (1 or 2).
        which: u8,
    },
    /// The stored invariant set is not the canonical one (the full set
    /// determined by the stored congruence or period, in canonical order).
    #[error("invariant_set does not match the recomputed invariant set")]
    SetProvenance,
    /// The two endomorphisms are equal, so there is nothing to separate.
    #[error("endomorphisms coincide")]
    EndosCoincide,
    /// The two stored induced quotient endomorphisms are equal.
    #[error("induced maps coincide")]
    InducedCoincide,
    /// The stored quotient table is not the quotient by the stored congruence.
    #[error("quotient does not match the congruence quotient")]
    QuotientMismatch,
    /// The stored projection is not the class map of the stored congruence.
    #[error("projection does not match the congruence classes")]
    ProjectionMismatch,
    /// A stored induced map disagrees with its endomorphism's action on
    /// congruence classes.
    #[error("induced{which} does not match the endomorphism's action on the quotient")]
    InducedMismatch {
        /// Which induced map disagrees (1 or 2).
        which: u8,
    },
    /// The stored congruence differs from the intersection of all morphism
    /// kernels into the test target.
    #[error("gamma does not match the intersection of morphism kernels")]
    GammaProvenance,
}

/// Certificate that two local rules induce distinct global maps on the
/// periodic points of `A^ℤ`, distinguished inside the finite set of all words
/// of one fixed period.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegerSeparationCertificate {
    /// Certificate format version; see [`SCHEMA_VERSION`].
    pub schema_version: u32,
    /// The first local rule.
    pub rule1: LocalRule,
    /// The second local rule.
    pub rule2: LocalRule,
    /// A periodic word on which the two induced maps differ.
    pub witness: PeriodicWord,
    /// The period `p` whose words form the invariant set.
    pub modulus: usize,
    /// All words of period `p`, in lexicographic order.
    pub invariant_set: Vec<PeriodicWord>,
    /// Restriction of the first rule's global map to `invariant_set`.
    pub image1: Transformation,
    /// Restriction of the second rule's global map to `invariant_set`.
    pub image2: Transformation,
    /// Free-form annotations; ignored by verification.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

/// Certificate that two cellular automata over a finite monoid are distinct,
/// distinguished inside a finite shift-invariant set of configurations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteSeparationCertificate {
    /// Certificate format version; see [`SCHEMA_VERSION`].
    pub schema_version: u32,
    /// The acting monoid.
    pub monoid: FiniteMonoid,
    /// The symbol alphabet size.
    pub alphabet: Alphabet,
    /// Graph of the first automaton on lexicographic configuration indices.
    pub map1: Vec<usize>,
    /// Graph of the second automaton.
    pub map2: Vec<usize>,
    /// Value array of a configuration on which the two automata differ.
    pub witness: Vec<usize>,
    /// Class labels of a congruence on the monoid; the invariant set consists
    /// of the configurations constant on its classes.
    pub congruence: Vec<usize>,
    /// Value arrays of all configurations constant on the congruence classes,
    /// in lexicographic order.
    pub invariant_set: Vec<Vec<usize>>,
    /// Restriction of the first automaton to `invariant_set`.
    pub image1: Transformation,
    /// Restriction of the second automaton to `invariant_set`.
    pub image2: Transformation,
    /// Free-form annotations; ignored by verification.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

/// Certificate that two endomorphisms of a finite monoid remain distinct
/// after passing to the quotient by the intersection of the kernels of all
/// morphisms into a chosen test monoid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndoSeparationCertificate {
    /// Certificate format version; see [`SCHEMA_VERSION`].
    pub schema_version: u32,
    /// The monoid whose endomorphisms are being separated.
    pub source: FiniteMonoid,
    /// The test monoid supplying the pool of separating morphisms.
    pub test_target: FiniteMonoid,
    /// Image array of the first endomorphism.
    pub endo1: Vec<usize>,
    /// Image array of the second endomorphism.
    pub endo2: Vec<usize>,
    /// Class labels of the congruence obtained by intersecting the kernels of
    /// every morphism from `source` into `test_target`.
    pub gamma: Vec<usize>,
    /// Multiplication table of the quotient by `gamma`.
    pub quotient: FiniteMonoid,
    /// Image array of the projection of `source` onto the quotient.
    pub projection: Vec<usize>,
    /// Image array of the first endomorphism's action on quotient classes.
    pub induced1: Vec<usize>,
    /// Image array of the second endomorphism's action on quotient classes.
    pub induced2: Vec<usize>,
    /// Free-form annotations; ignored by verification.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

/// Any certificate this library produces, tagged by `kind` in JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Separation of two local rules on the periodic points of `A^ℤ`.
    #[serde(rename = "integer-separation")]
    Integer(IntegerSeparationCertificate),
    /// Separation of two cellular automata over a finite monoid.
    #[serde(rename = "finite-separation")]
    Finite(FiniteSeparationCertificate),
    /// Separation of two monoid endomorphisms in a finite quotient.
    #[serde(rename = "endomorphism-separation")]
    Endo(EndoSeparationCertificate),
}

impl From<IntegerSeparationCertificate> for Certificate {
    fn from(cert: IntegerSeparationCertificate) -> Certificate {
        Certificate::Integer(cert)
    }
}

impl From<FiniteSeparationCertificate> for Certificate {
    fn from(cert: FiniteSeparationCertificate) -> Certificate {
        Certificate::Finite(cert)
    }
}

impl From<EndoSeparationCertificate> for Certificate {
    fn from(cert: EndoSeparationCertificate) -> Certificate {
        Certificate::Endo(cert)
    }
}

impl Certificate {
    /// Serializes to pretty-printed JSON with a trailing newline. The output
    /// is deterministic, and re-serializing a parsed certificate reproduces
    /// the original bytes.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("certificates always serialize");
        text.push('\n');
        text
    }

    /// Parses a certificate from JSON.
    pub fn from_json(text: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Checks every invariant; see [`verify_certificate`].
    pub fn verify(&self) -> Result<(), VerifyError> {
        verify_certificate(self)
    }
}

/// Re-derives every invariant of a certificate from its raw data: re-applies
/// the two maps to the witness, re-restricts them to the invariant set,
/// rebuilds the canonical invariant set (or quotient), and recompares all
/// stored images. Returns the first failing invariant.
pub fn verify_certificate(cert: &Certificate) -> Result<(), VerifyError> {
    match cert {
        Certificate::Integer(c) => verify_integer(c),
        Certificate::Finite(c) => verify_finite(c),
        Certificate::Endo(c) => verify_endo(c),
    }
}

fn malformed(what: impl std::fmt::Display) -> VerifyError {
    VerifyError::Malformed(what.to_string())
}

fn check_version(got: u32) -> Result<(), VerifyError> {
    if got == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(VerifyError::UnsupportedVersion { got })
    }
}

/// Restriction outcome with the closure failure translated into a verifier
/// error naming which of the two maps escapes.
fn closed_restriction(
    restricted: Result<Transformation, CellularError>,
    which: u8,
) -> Result<Transformation, VerifyError> {
    restricted.map_err(|e| match e {
        CellularError::NotClosed { member } => VerifyError::NotClosed { which, member },
        other => malformed(format!("map{which} restriction: {other}")),
    })
}

fn verify_integer(c: &IntegerSeparationCertificate) -> Result<(), VerifyError> {
    check_version(c.schema_version)?;
    let alphabet = c.rule1.alphabet();
    if c.rule2.alphabet() != alphabet {
        return Err(malformed("rule alphabets differ"));
    }
    if c.modulus == 0 {
        return Err(malformed("modulus must be positive"));
    }
    alphabet
        .check_all(c.witness.word())
        .map_err(|e| malformed(format!("witness: {e}")))?;
    for (i, member) in c.invariant_set.iter().enumerate() {
        alphabet
            .check_all(member.word())
            .map_err(|e| malformed(format!("invariant_set[{i}]: {e}")))?;
    }

    // Membership is up to re-cutting the period: equality of periodic words
    // is equality of the configurations they repeat into.
    if !c.invariant_set.iter().any(|w| w == &c.witness) {
        return Err(VerifyError::WitnessNotInSet);
    }

    let y1 = c
        .rule1
        .apply(&c.witness)
        .map_err(|e| malformed(format!("rule1: {e}")))?;
    let y2 = c
        .rule2
        .apply(&c.witness)
        .map_err(|e| malformed(format!("rule2: {e}")))?;
    if y1 == y2 {
        return Err(VerifyError::WitnessNotSeparating);
    }

    if c.image1 == c.image2 {
        return Err(VerifyError::ImagesCoincide);
    }

    let t1 = closed_restriction(c.rule1.restrict(&c.invariant_set), 1)?;
    let t2 = closed_restriction(c.rule2.restrict(&c.invariant_set), 2)?;
    if t1 != c.image1 {
        return Err(VerifyError::ImageMismatch { which: 1 });
    }
    if t2 != c.image2 {
        return Err(VerifyError::ImageMismatch { which: 2 });
    }

    // Provenance: the stored set must be exactly the full set of words of
    // the stated period, in lexicographic order.
    let expected = inv_integer(c.modulus, alphabet).map_err(malformed)?;
    if c.invariant_set.len() != expected.len()
        || c.invariant_set.iter().zip(&expected).any(|(a, b)| a != b)
    {
        return Err(VerifyError::SetProvenance);
    }
    Ok(())
}

fn verify_finite(c: &FiniteSeparationCertificate) -> Result<(), VerifyError> {
    check_version(c.schema_version)?;
    let monoid = &c.monoid;
    let alphabet = c.alphabet;
    let map1 = EquivariantMap::new(monoid.clone(), alphabet, c.map1.clone())
        .map_err(|e| malformed(format!("map1: {e}")))?;
    let map2 = EquivariantMap::new(monoid.clone(), alphabet, c.map2.clone())
        .map_err(|e| malformed(format!("map2: {e}")))?;
    alphabet
        .check_all(&c.witness)
        .map_err(|e| malformed(format!("witness: {e}")))?;
    let witness = Configuration::new(monoid.clone(), c.witness.clone())
        .map_err(|e| malformed(format!("witness: {e}")))?;
    let mut members = Vec::with_capacity(c.invariant_set.len());
    for (i, values) in c.invariant_set.iter().enumerate() {
        alphabet
            .check_all(values)
            .map_err(|e| malformed(format!("invariant_set[{i}]: {e}")))?;
        let member = Configuration::new(monoid.clone(), values.clone())
            .map_err(|e| malformed(format!("invariant_set[{i}]: {e}")))?;
        members.push(member);
    }

    if !members.iter().any(|x| x == &witness) {
        return Err(VerifyError::WitnessNotInSet);
    }

    let y1 = map1
        .apply(&witness)
        .map_err(|e| malformed(format!("map1: {e}")))?;
    let y2 = map2
        .apply(&witness)
        .map_err(|e| malformed(format!("map2: {e}")))?;
    if y1 == y2 {
        return Err(VerifyError::WitnessNotSeparating);
    }

    if c.image1 == c.image2 {
        return Err(VerifyError::ImagesCoincide);
    }

    let t1 = closed_restriction(map1.restrict(&members), 1)?;
    let t2 = closed_restriction(map2.restrict(&members), 2)?;
    if t1 != c.image1 {
        return Err(VerifyError::ImageMismatch { which: 1 });
    }
    if t2 != c.image2 {
        return Err(VerifyError::ImageMismatch { which: 2 });
    }

    // Provenance: the labels must form a congruence whose invariant
    // configurations are exactly the stored set, in lexicographic order.
    let gamma = Congruence::new(monoid, &c.congruence)
        .map_err(|e| malformed(format!("congruence: {e}")))?;
    let expected = inv(&gamma, alphabet).map_err(malformed)?;
    if members.len() != expected.len() || members.iter().zip(&expected).any(|(a, b)| a != b) {
        return Err(VerifyError::SetProvenance);
    }
    Ok(())
}

fn verify_endo(c: &EndoSeparationCertificate) -> Result<(), VerifyError> {
    check_version(c.schema_version)?;
    let source = &c.source;
    SemigroupMorphism::new(source.clone(), source.clone(), c.endo1.clone())
        .map_err(|e| malformed(format!("endo1: {e}")))?;
    SemigroupMorphism::new(source.clone(), source.clone(), c.endo2.clone())
        .map_err(|e| malformed(format!("endo2: {e}")))?;
    SemigroupMorphism::new(source.clone(), c.quotient.clone(), c.projection.clone())
        .map_err(|e| malformed(format!("projection: {e}")))?;
    SemigroupMorphism::new(c.quotient.clone(), c.quotient.clone(), c.induced1.clone())
        .map_err(|e| malformed(format!("induced1: {e}")))?;
    SemigroupMorphism::new(c.quotient.clone(), c.quotient.clone(), c.induced2.clone())
        .map_err(|e| malformed(format!("induced2: {e}")))?;

    if c.endo1 == c.endo2 {
        return Err(VerifyError::EndosCoincide);
    }
    if c.induced1 == c.induced2 {
        return Err(VerifyError::InducedCoincide);
    }

    let gamma = Congruence::new(source, &c.gamma).map_err(|e| malformed(format!("gamma: {e}")))?;
    let q = gamma.quotient();
    if q.quotient != c.quotient {
        return Err(VerifyError::QuotientMismatch);
    }
    if q.projection.images() != c.projection.as_slice() {
        return Err(VerifyError::ProjectionMismatch);
    }

    // Induced maps: on every element, acting then projecting must agree with
    // projecting then acting on the class. This is simultaneously the
    // stability check — an endomorphism that breaks a class apart cannot
    // satisfy it everywhere.
    for s in source.elements() {
        if c.induced1[c.projection[s]] != c.projection[c.endo1[s]] {
            return Err(VerifyError::InducedMismatch { which: 1 });
        }
        if c.induced2[c.projection[s]] != c.projection[c.endo2[s]] {
            return Err(VerifyError::InducedMismatch { which: 2 });
        }
    }

    // Provenance: gamma must be the intersection of every morphism kernel
    // into the test target.
    let mut expected = Congruence::full_congruence(source);
    for psi in enumerate_morphisms(source, &c.test_target, false) {
        expected = expected.intersect(&psi.kernel()).map_err(malformed)?;
    }
    if expected.class_of() != c.gamma.as_slice() {
        return Err(VerifyError::GammaProvenance);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::witness::{separate_ca_finite, separate_ca_integer, separate_endomorphisms};
    use crate::EquivariantMap;

    fn elementary_pair(n1: u8, n2: u8) -> Certificate {
        let cert =
            separate_ca_integer(&LocalRule::elementary(n1), &LocalRule::elementary(n2)).unwrap();
        Certificate::Integer(cert)
    }

    fn z2_complement_pair() -> Certificate {
        let monoid = catalog::by_name("z2").unwrap();
        let alphabet = Alphabet::new(2).unwrap();
        let id = EquivariantMap::identity(monoid.clone(), alphabet).unwrap();
        let complement = EquivariantMap::new(monoid, alphabet, vec![3, 2, 1, 0]).unwrap();
        Certificate::Finite(separate_ca_finite(&id, &complement).unwrap())
    }

    fn z6_endo_pair(images2: &[usize]) -> Certificate {
        let z6 = catalog::by_name("z6").unwrap();
        let id = SemigroupMorphism::identity_morphism(&z6);
        let other = SemigroupMorphism::new(z6.clone(), z6.clone(), images2.to_vec()).unwrap();
        Certificate::Endo(separate_endomorphisms(&z6, &z6, &id, &other).unwrap())
    }

    #[test]
    fn produced_certificates_verify() {
        for cert in [
            elementary_pair(110, 90),
            elementary_pair(0, 255),
            z2_complement_pair(),
            z6_endo_pair(&[0, 5, 4, 3, 2, 1]),
        ] {
            assert_eq!(cert.verify(), Ok(()));
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for cert in [
            elementary_pair(110, 90),
            z2_complement_pair(),
            z6_endo_pair(&[0, 5, 4, 3, 2, 1]),
        ] {
            let text = cert.to_json();
            let parsed = Certificate::from_json(&text).unwrap();
            assert_eq!(parsed, cert);
            assert_eq!(parsed.to_json(), text);
        }
    }

    #[test]
    fn kind_tags_are_stable() {
        let text = elementary_pair(110, 90).to_json();
        assert!(text.contains("\"kind\": \"integer-separation\""));
        let text = z2_complement_pair().to_json();
        assert!(text.contains("\"kind\": \"finite-separation\""));
        let text = z6_endo_pair(&[0, 5, 4, 3, 2, 1]).to_json();
        assert!(text.contains("\"kind\": \"endomorphism-separation\""));
    }

    #[test]
    fn tampered_equal_images_reported_as_coinciding() {
        let Certificate::Integer(mut c) = elementary_pair(110, 90) else {
            unreachable!()
        };
        c.image2 = c.image1.clone();
        let err = Certificate::Integer(c).verify().unwrap_err();
        assert_eq!(err, VerifyError::ImagesCoincide);
        assert_eq!(err.to_string(), "images coincide");
    }

    #[test]
    fn tampered_set_reported_as_not_closed() {
        let Certificate::Integer(mut c) = elementary_pair(110, 90) else {
            unreachable!()
        };
        // Member 1 is the word (0,1); its image under rule 110 is (1,1), the
        // member being dropped.
        assert_eq!(c.invariant_set[3].word(), &[1, 1]);
        c.invariant_set.remove(3);
        let err = Certificate::Integer(c).verify().unwrap_err();
        assert_eq!(
            err,
            VerifyError::NotClosed {
                which: 1,
                member: 1
            }
        );
        assert!(err.to_string().contains("X not closed"));
    }

    #[test]
    fn tampered_version_rejected() {
        let Certificate::Integer(mut c) = elementary_pair(110, 90) else {
            unreachable!()
        };
        c.schema_version = 2;
        assert_eq!(
            Certificate::Integer(c).verify(),
            Err(VerifyError::UnsupportedVersion { got: 2 })
        );
    }

    #[test]
    fn tampered_witness_where_maps_agree() {
        let Certificate::Integer(mut c) = elementary_pair(110, 90) else {
            unreachable!()
        };
        // Both rules fix the all-zero word, so it separates nothing.
        c.witness = PeriodicWord::new(vec![0]).unwrap();
        assert_eq!(
            Certificate::Integer(c).verify(),
            Err(VerifyError::WitnessNotSeparating)
        );
    }

    #[test]
    fn tampered_witness_outside_set() {
        let Certificate::Finite(mut c) = z2_complement_pair() else {
            unreachable!()
        };
        // The invariant set holds only the two constants.
        c.witness = vec![0, 1];
        assert_eq!(
            Certificate::Finite(c).verify(),
            Err(VerifyError::WitnessNotInSet)
        );
    }

    #[test]
    fn tampered_image_detected() {
        let Certificate::Integer(mut c) = elementary_pair(110, 90) else {
            unreachable!()
        };
        assert_eq!(c.image1.mapping(), &[0, 3, 3, 0]);
        c.image1 = Transformation::new(vec![0, 3, 0, 0]).unwrap();
        assert_eq!(
            Certificate::Integer(c).verify(),
            Err(VerifyError::ImageMismatch { which: 1 })
        );
    }

    #[test]
    fn reordered_set_fails_provenance() {
        let Certificate::Integer(mut c) = elementary_pair(0, 255) else {
            unreachable!()
        };
        // Swapping the two constants keeps every local invariant intact but
        // breaks the canonical ordering.
        c.invariant_set.swap(0, 1);
        c.witness = PeriodicWord::new(vec![0]).unwrap();
        c.image1 = Transformation::new(vec![1, 1]).unwrap();
        c.image2 = Transformation::new(vec![0, 0]).unwrap();
        assert_eq!(
            Certificate::Integer(c).verify(),
            Err(VerifyError::SetProvenance)
        );
    }

    #[test]
    fn tampered_induced_maps_reported_as_coinciding() {
        let Certificate::Endo(mut c) = z6_endo_pair(&[0, 5, 4, 3, 2, 1]) else {
            unreachable!()
        };
        c.induced2 = c.induced1.clone();
        let err = Certificate::Endo(c).verify().unwrap_err();
        assert_eq!(err, VerifyError::InducedCoincide);
    }

    #[test]
    fn consistent_but_foreign_congruence_fails_provenance() {
        // Doubling on ℤ/6 descends to the mod-3 quotient, so every local
        // check passes with that congruence substituted in; only the kernel
        // intersection recomputation exposes it.
        let Certificate::Endo(mut c) = z6_endo_pair(&[0, 2, 4, 0, 2, 4]) else {
            unreachable!()
        };
        c.gamma = vec![0, 1, 2, 0, 1, 2];
        c.quotient = catalog::cyclic(3);
        c.projection = vec![0, 1, 2, 0, 1, 2];
        c.induced1 = vec![0, 1, 2];
        c.induced2 = vec![0, 2, 1];
        assert_eq!(
            Certificate::Endo(c).verify(),
            Err(VerifyError::GammaProvenance)
        );
    }

    #[test]
    fn meta_is_optional_and_ignored() {
        let Certificate::Integer(mut c) = elementary_pair(110, 90) else {
            unreachable!()
        };
        assert!(c.meta.is_none());
        let plain = Certificate::Integer(c.clone()).to_json();
        assert!(!plain.contains("\"meta\""));
        c.meta = Some(serde_json::json!({ "note": "generated for a sweep" }));
        let annotated = Certificate::Integer(c);
        assert!(annotated.to_json().contains("\"note\""));
        assert_eq!(annotated.verify(), Ok(()));
    }

    #[test]
    fn unknown_kind_rejected() {
        assert!(Certificate::from_json("{\"kind\": \"bogus\"}").is_err());
        assert!(Certificate::from_json("{}").is_err());
    }
}
