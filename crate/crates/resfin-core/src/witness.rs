//! Separation procedures: turning "these two maps are distinct" into a
//! finite, independently checkable certificate.
//!
//! For cellular automata the output is a [`FiniteSeparationCertificate`] or
//! [`IntegerSeparationCertificate`]: a witness the maps disagree on, a finite
//! invariant set of configurations containing it, and the two restrictions —
//! distinct elements of the transformation monoid of that set. For monoid
//! endomorphisms the output is an [`EndoSeparationCertificate`]: a congruence
//! of finite index stable under every endomorphism, whose quotient the two
//! endomorphisms act on differently.
//!
//! [`malcev_phi`] and [`malcev_hopf_check`] tabulate the classical
//! precomposition argument that surjective endomorphisms of a finite monoid
//! are injective, as an inspectable report rather than a bare boolean.

use thiserror::Error;

use crate::cellular::{rules_equal, CellularError, EquivariantMap, LocalRule};
use crate::certificate::{
    EndoSeparationCertificate, FiniteSeparationCertificate, IntegerSeparationCertificate,
    SCHEMA_VERSION,
};
use crate::monoid::{
    enumerate_morphisms, Congruence, FiniteMonoid, MonoidError, SemigroupMorphism,
};
use crate::shift::{
    config_values, integer_orbit_congruence, inv, inv_integer, orbit_congruence, Configuration,
    PeriodicWord, ShiftError,
};

/// Errors from the separation procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    /// The two inputs define the same map, so there is nothing to separate.
    #[error("the two inputs are equal; nothing to separate")]
    NotDistinct,
    /// No morphism into the chosen test monoid tells the two endomorphisms
    /// apart, so they collapse to the same map on the quotient.
    #[error("no morphism into the test target separates the two endomorphisms")]
    NoSeparatingMorphism,
    /// A monoid-level precondition failed.
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    /// A shift-space-level precondition failed.
    #[error(transparent)]
    Shift(#[from] ShiftError),
    /// A cellular-automaton-level precondition failed.
    #[error(transparent)]
    Cellular(#[from] CellularError),
}

/// Separates two distinct cellular automata over a finite monoid.
///
/// Finds the lexicographically first configuration the maps disagree on,
/// forms the congruence identifying monoid elements that shift its orbit
/// identically, and restricts both maps to the configurations constant on the
/// congruence classes — a finite set invariant under *every* cellular
/// automaton. Writing ρ for that restriction, the certificate stores ρ of
/// both inputs; they differ at the witness.
///
/// As a built-in sanity check, ρ is verified multiplicative on the sample at
/// hand: `ρ(σ∘τ) = ρ(σ)∘ρ(τ)` for all four ordered pairs drawn from the two
/// inputs.
pub fn separate_ca_finite(
    tau1: &EquivariantMap,
    tau2: &EquivariantMap,
) -> Result<FiniteSeparationCertificate, WitnessError> {
    if tau1.monoid() != tau2.monoid() {
        return Err(CellularError::MonoidMismatch.into());
    }
    if tau1.alphabet() != tau2.alphabet() {
        return Err(CellularError::AlphabetMismatch.into());
    }
    let monoid = tau1.monoid();
    let alphabet = tau1.alphabet();

    // Configuration indices are lexicographic, so the first differing graph
    // entry names the lexicographically first differing configuration.
    let Some(index) = tau1
        .graph()
        .iter()
        .zip(tau2.graph())
        .position(|(a, b)| a != b)
    else {
        return Err(WitnessError::NotDistinct);
    };
    let witness = Configuration::new(
        monoid.clone(),
        config_values(index, monoid.size(), alphabet),
    )?;

    let orbit = witness.orbit();
    let gamma = orbit_congruence(monoid, &orbit)?;
    let members = inv(&gamma, alphabet)?;
    let image1 = tau1.restrict(&members)?;
    let image2 = tau2.restrict(&members)?;

    for sigma in [tau1, tau2] {
        let rho_sigma = sigma.restrict(&members)?;
        for tau in [tau1, tau2] {
            let rho_tau = tau.restrict(&members)?;
            let composite = sigma.compose(tau)?.restrict(&members)?;
            assert_eq!(
                composite,
                rho_sigma.compose(&rho_tau)?,
                "restriction to an invariant set must be multiplicative"
            );
        }
    }

    Ok(FiniteSeparationCertificate {
        schema_version: SCHEMA_VERSION,
        monoid: monoid.clone(),
        alphabet,
        map1: tau1.graph().to_vec(),
        map2: tau2.graph().to_vec(),
        witness: witness.values().to_vec(),
        congruence: gamma.class_of().to_vec(),
        invariant_set: members.iter().map(|x| x.values().to_vec()).collect(),
        image1,
        image2,
        meta: None,
    })
}

/// Separates two local rules that induce distinct global maps on `A^ℤ`.
///
/// Scans periods `p = 1, 2, …` and, within each period, words in
/// lexicographic order, stopping at the first word the induced maps disagree
/// on. A disagreement always appears by period `2·max(radius)+1`: the padded
/// local tables differ on some window, and repeating that window periodically
/// yields a word whose images differ at its center. The invariant set is then
/// the full set of words of the witness's minimal period — which equals the
/// period of discovery, since a word presentable at a shorter period would
/// have been found in an earlier round.
pub fn separate_ca_integer(
    rule1: &LocalRule,
    rule2: &LocalRule,
) -> Result<IntegerSeparationCertificate, WitnessError> {
    let alphabet = rule1.alphabet();
    if rule2.alphabet() != alphabet {
        return Err(CellularError::AlphabetMismatch.into());
    }
    if rules_equal(rule1, rule2)? {
        return Err(WitnessError::NotDistinct);
    }

    let bound = 2 * rule1.radius().max(rule2.radius()) + 1;
    for period in 1..=bound {
        let mut word = vec![0usize; period];
        loop {
            let candidate = PeriodicWord::new(word.clone())?;
            if rule1.apply(&candidate)? != rule2.apply(&candidate)? {
                let modulus = integer_orbit_congruence(&candidate);
                debug_assert_eq!(modulus, period);
                let witness = candidate.canonical();
                let members = inv_integer(modulus, alphabet)?;
                let image1 = rule1.restrict(&members)?;
                let image2 = rule2.restrict(&members)?;
                debug_assert_ne!(image1, image2);
                return Ok(IntegerSeparationCertificate {
                    schema_version: SCHEMA_VERSION,
                    rule1: rule1.clone(),
                    rule2: rule2.clone(),
                    witness,
                    modulus,
                    invariant_set: members,
                    image1,
                    image2,
                    meta: None,
                });
            }
            // Advance to the next word in lexicographic order.
            let mut pos = period;
            while pos > 0 && word[pos - 1] + 1 == alphabet.size() {
                word[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            word[pos - 1] += 1;
        }
    }
    unreachable!("distinct global maps differ on a word of period at most 2·max(radius)+1")
}

/// The precomposition self-map `Φ(u) = u∘ψ` of the morphism set Mor(S, S),
/// tabulated on the canonical enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalcevPhi {
    /// Every semigroup morphism S → S, in enumeration order; the index space
    /// for the table below.
    pub morphisms: Vec<SemigroupMorphism>,
    /// `phi[i]` is the index of `morphisms[i] ∘ ψ`.
    pub phi: Vec<usize>,
    /// Index of the identity morphism — the separating morphism ρ.
    pub rho_index: usize,
    /// Whether ψ is surjective.
    pub surjective: bool,
    /// Whether Φ is injective on the morphism set.
    pub injective: bool,
    /// An index with `Φ(u₀) = ρ`, when one exists.
    pub u0: Option<usize>,
}

/// Tabulates precomposition by the endomorphism `psi` on the full
/// semigroup-morphism set Mor(S, S).
///
/// When ψ is surjective, Φ is injective — morphisms that agree after
/// precomposing a surjection agree outright — hence a permutation of the
/// finite morphism set, and some u₀ satisfies `Φ(u₀) = ρ` with ρ the
/// identity.
pub fn malcev_phi(s: &FiniteMonoid, psi: &SemigroupMorphism) -> Result<MalcevPhi, WitnessError> {
    if psi.source() != s || psi.target() != s {
        return Err(MonoidError::MonoidMismatch.into());
    }
    let morphisms = enumerate_morphisms(s, s, false);
    let mut phi = Vec::with_capacity(morphisms.len());
    for u in &morphisms {
        let composed = u.compose(psi)?;
        let index = morphisms
            .iter()
            .position(|m| m.images() == composed.images())
            .expect("the morphism set is closed under composition");
        phi.push(index);
    }
    let rho_index = morphisms
        .iter()
        .position(|m| m.images().iter().copied().eq(s.elements()))
        .expect("the identity is a morphism");

    let mut seen = vec![false; morphisms.len()];
    let mut injective = true;
    for &image in &phi {
        if std::mem::replace(&mut seen[image], true) {
            injective = false;
        }
    }
    let surjective = psi.is_surjective();
    let u0 = phi.iter().position(|&j| j == rho_index);
    if surjective {
        debug_assert!(injective && u0.is_some());
    }
    Ok(MalcevPhi {
        morphisms,
        phi,
        rho_index,
        surjective,
        injective,
        u0,
    })
}

/// Outcome of the injectivity argument applied to one pair of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalcevReport {
    /// The tabulated precomposition map and its analysis.
    pub phi: MalcevPhi,
    /// First element of the pair under test.
    pub s1: usize,
    /// Second element of the pair under test.
    pub s2: usize,
    /// ψ(s1).
    pub image1: usize,
    /// ψ(s2).
    pub image2: usize,
    /// Whether ψ(s1) ≠ ψ(s2) — guaranteed whenever ψ is surjective.
    pub separated: bool,
}

/// Runs the injectivity argument for an endomorphism on a pair of distinct
/// elements.
///
/// With ρ the identity on S — which separates the pair outright — a
/// surjective ψ admits u₀ with `u₀∘ψ = ρ`, so equal images under ψ would
/// force `ρ(s1) = ρ(s2)`; hence ψ(s1) ≠ ψ(s2). When ψ is not surjective the
/// argument's hypothesis fails (recorded as `phi.surjective = false`) and the
/// report simply states whether the images happen to differ.
pub fn malcev_hopf_check(
    s: &FiniteMonoid,
    psi: &SemigroupMorphism,
    s1: usize,
    s2: usize,
) -> Result<MalcevReport, WitnessError> {
    for element in [s1, s2] {
        if element >= s.size() {
            return Err(MonoidError::ElementOutOfRange {
                index: element,
                size: s.size(),
            }
            .into());
        }
    }
    if s1 == s2 {
        return Err(WitnessError::NotDistinct);
    }
    let phi = malcev_phi(s, psi)?;
    let image1 = psi.apply(s1);
    let image2 = psi.apply(s2);
    let separated = image1 != image2;
    if phi.surjective {
        assert!(
            separated,
            "surjective endomorphisms of a finite monoid are injective"
        );
    }
    Ok(MalcevReport {
        phi,
        s1,
        s2,
        image1,
        image2,
        separated,
    })
}

/// Separates two distinct endomorphisms of `s` inside a finite quotient.
///
/// Intersects the kernels of every semigroup morphism from `s` into the test
/// monoid `t` and quotients by the resulting congruence. The congruence is
/// stable under every endomorphism α — composing a morphism into `t` with α
/// is again a morphism into `t` — so both inputs descend to the quotient.
/// Fails with [`WitnessError::NoSeparatingMorphism`] when the induced maps
/// coincide, i.e. no morphism into `t` tells the inputs apart; choosing
/// `t = s` always succeeds because the identity is in the pool.
pub fn separate_endomorphisms(
    s: &FiniteMonoid,
    t: &FiniteMonoid,
    alpha1: &SemigroupMorphism,
    alpha2: &SemigroupMorphism,
) -> Result<EndoSeparationCertificate, WitnessError> {
    for alpha in [alpha1, alpha2] {
        if alpha.source() != s || alpha.target() != s {
            return Err(MonoidError::MonoidMismatch.into());
        }
    }
    if alpha1.images() == alpha2.images() {
        return Err(WitnessError::NotDistinct);
    }

    let mut gamma = Congruence::full_congruence(s);
    for psi in enumerate_morphisms(s, t, false) {
        gamma = gamma.intersect(&psi.kernel())?;
    }
    let q = gamma.quotient();
    let projection = q.projection.images().to_vec();

    let induce = |alpha: &SemigroupMorphism| -> Vec<usize> {
        (0..gamma.index())
            .map(|class| projection[alpha.apply(gamma.representative(class))])
            .collect()
    };
    let induced1 = induce(alpha1);
    let induced2 = induce(alpha2);
    // Stability makes the induced maps independent of the representatives.
    debug_assert!(s
        .elements()
        .all(|x| induced1[projection[x]] == projection[alpha1.apply(x)]));
    debug_assert!(s
        .elements()
        .all(|x| induced2[projection[x]] == projection[alpha2.apply(x)]));

    if induced1 == induced2 {
        return Err(WitnessError::NoSeparatingMorphism);
    }
    Ok(EndoSeparationCertificate {
        schema_version: SCHEMA_VERSION,
        source: s.clone(),
        test_target: t.clone(),
        endo1: alpha1.images().to_vec(),
        endo2: alpha2.images().to_vec(),
        gamma: gamma.class_of().to_vec(),
        quotient: q.quotient,
        projection,
        induced1,
        induced2,
        meta: None,
    })
}
