//! End-to-end acceptance checks. Each test prints one `acceptance: <name>:
//! PASS` line (run with `--nocapture` to see them) and exercises a complete
//! workflow: enumerate, separate, certify, and re-verify from the raw bytes.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use resfin_core::catalog;
use resfin_core::{
    config_index, config_values, enumerate_ca, enumerate_congruences, enumerate_morphisms,
    is_congruence, malcev_phi, periodic_cylinder_witness, rules_equal, separate_ca_finite,
    separate_ca_integer, separate_endomorphisms, tau_m, Alphabet, Certificate, Configuration,
    EquivariantMap, FiniteMonoid, LocalRule, PeriodicWord,
};

/// Runs one acceptance criterion and prints its verdict.
fn report(name: &str, check: impl FnOnce() -> Result<(), String>) {
    match check() {
        Ok(()) => println!("acceptance: {name}: PASS"),
        Err(why) => {
            println!("acceptance: {name}: FAIL");
            panic!("{name}: {why}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($why:tt)+) => {
        if !$cond {
            return Err(format!($($why)+));
        }
    };
}

fn binary() -> Alphabet {
    Alphabet::new(2).expect("binary")
}

#[test]
fn elementary_rule_sweep_produces_verified_certificates() {
    report(
        "elementary rule sweep produces verified certificates",
        || {
            let started = Instant::now();
            let rules: Vec<LocalRule> = (0..=255u8).map(LocalRule::elementary).collect();
            let mut produced = 0usize;
            for i in 0..rules.len() {
                for j in (i + 1)..rules.len() {
                    let certificate = separate_ca_integer(&rules[i], &rules[j])
                        .map_err(|e| format!("pair ({i}, {j}): {e}"))?;
                    ensure!(
                        certificate.modulus <= 3,
                        "pair ({i}, {j}) separated only at period {}",
                        certificate.modulus
                    );
                    Certificate::from(certificate)
                        .verify()
                        .map_err(|e| format!("pair ({i}, {j}) produced a bad certificate: {e}"))?;
                    produced += 1;
                }
            }
            ensure!(produced == 256 * 255 / 2, "swept {produced} pairs");
            let elapsed = started.elapsed();
            ensure!(
                elapsed.as_secs() < 60,
                "sweep took {elapsed:?}, over the one-minute budget"
            );
            Ok(())
        },
    );
}

#[test]
fn rule_110_vs_90_separates_at_period_two() {
    report("rule 110 vs rule 90 separates at period two", || {
        let rule110 = LocalRule::elementary(110);
        let rule90 = LocalRule::elementary(90);
        let certificate = separate_ca_integer(&rule110, &rule90).map_err(|e| e.to_string())?;
        ensure!(
            certificate.modulus == 2,
            "modulus was {}",
            certificate.modulus
        );
        ensure!(
            certificate.witness.word() == [0, 1],
            "witness word was {:?}",
            certificate.witness.word()
        );
        let image110 = rule110
            .apply(&certificate.witness)
            .map_err(|e| e.to_string())?;
        let image90 = rule90
            .apply(&certificate.witness)
            .map_err(|e| e.to_string())?;
        ensure!(
            image110.word() == [1, 1],
            "rule 110 sent 0101… to {:?}",
            image110.word()
        );
        ensure!(
            image90.word() == [0, 0],
            "rule 90 sent 0101… to {:?}",
            image90.word()
        );
        ensure!(
            certificate.image1.mapping() == [0, 3, 3, 0],
            "restricted rule 110 was {:?}",
            certificate.image1.mapping()
        );
        ensure!(
            certificate.image2.mapping() == [0, 0, 0, 0],
            "restricted rule 90 was {:?}",
            certificate.image2.mapping()
        );
        Certificate::from(certificate)
            .verify()
            .map_err(|e| format!("certificate did not verify: {e}"))?;
        Ok(())
    });
}

#[test]
fn finite_enumeration_and_separation_are_complete() {
    report("finite enumeration and separation are complete", || {
        let started = Instant::now();
        let alphabet = binary();
        for monoid in [catalog::trivial(), catalog::cyclic(2)] {
            let maps = enumerate_ca(&monoid, alphabet).map_err(|e| e.to_string())?;

            // Independent filter: rebuild the shift tables from the action
            // formula and scan every self-map of the configuration space.
            let count = 1usize << monoid.size();
            let sigma: Vec<Vec<usize>> = monoid
                .elements()
                .map(|m| {
                    (0..count)
                        .map(|i| {
                            let values = config_values(i, monoid.size(), alphabet);
                            let shifted: Vec<usize> = monoid
                                .elements()
                                .map(|mp| values[monoid.mul(mp, m)])
                                .collect();
                            config_index(&shifted, alphabet)
                        })
                        .collect()
                })
                .collect();
            let mut graph = vec![0usize; count];
            let mut expected: Vec<Vec<usize>> = Vec::new();
            loop {
                if sigma
                    .iter()
                    .all(|sig| (0..count).all(|i| graph[sig[i]] == sig[graph[i]]))
                {
                    expected.push(graph.clone());
                }
                let mut pos = count;
                while pos > 0 && graph[pos - 1] + 1 == count {
                    graph[pos - 1] = 0;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
                graph[pos - 1] += 1;
            }
            let enumerated: Vec<Vec<usize>> = maps.iter().map(|map| map.graph().to_vec()).collect();
            ensure!(
                enumerated == expected,
                "enumeration disagrees with the brute-force filter on size {}",
                monoid.size()
            );

            // Every distinct pair separates, and the certificate re-verifies.
            for tau1 in &maps {
                for tau2 in &maps {
                    if tau1 == tau2 {
                        continue;
                    }
                    let certificate = separate_ca_finite(tau1, tau2).map_err(|e| e.to_string())?;
                    let witness = Configuration::new(monoid.clone(), certificate.witness.clone())
                        .map_err(|e| e.to_string())?;
                    let image1 = tau1.apply(&witness).map_err(|e| e.to_string())?;
                    let image2 = tau2.apply(&witness).map_err(|e| e.to_string())?;
                    ensure!(image1 != image2, "witness does not separate the pair");
                    Certificate::from(certificate)
                        .verify()
                        .map_err(|e| format!("bad certificate: {e}"))?;
                }
            }
        }
        let elapsed = started.elapsed();
        ensure!(
            elapsed.as_secs() < 10,
            "finite sweep took {elapsed:?}, over the ten-second budget"
        );
        Ok(())
    });
}

#[test]
fn shift_maps_satisfy_the_antimorphism_laws() {
    report("shift maps satisfy the antimorphism laws", || {
        let alphabet = binary();
        for name in catalog::names() {
            let monoid = catalog::by_name(name).expect("catalog name");
            let taus: Vec<EquivariantMap> = monoid
                .elements()
                .map(|m| tau_m(&monoid, alphabet, m))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let identity =
                EquivariantMap::identity(monoid.clone(), alphabet).map_err(|e| e.to_string())?;
            ensure!(
                taus[monoid.identity()] == identity,
                "{name}: τ_e is not the identity"
            );
            for m1 in monoid.elements() {
                for m2 in monoid.elements() {
                    let product =
                        tau_m(&monoid, alphabet, monoid.mul(m1, m2)).map_err(|e| e.to_string())?;
                    let reversed = taus[m2].compose(&taus[m1]).map_err(|e| e.to_string())?;
                    ensure!(
                        product == reversed,
                        "{name}: τ composes the wrong way around on ({m1}, {m2})"
                    );
                    if m1 != m2 {
                        ensure!(taus[m1] != taus[m2], "{name}: τ is not injective");
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn congruence_intersection_respects_the_index_bound() {
    report("congruence intersection respects the index bound", || {
        let klein = FiniteMonoid::new(
            vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![2, 3, 0, 1],
                vec![3, 2, 1, 0],
            ],
            0,
        )
        .map_err(|e| e.to_string())?;
        let mut monoids: Vec<FiniteMonoid> = catalog::names()
            .iter()
            .filter_map(|name| catalog::by_name(name))
            .filter(|m| m.size() <= 4)
            .collect();
        monoids.push(catalog::cyclic(4));
        monoids.push(klein);
        for monoid in &monoids {
            let congruences = enumerate_congruences(monoid);
            for gamma1 in &congruences {
                for gamma2 in &congruences {
                    let meet = gamma1.intersect(gamma2).map_err(|e| e.to_string())?;
                    ensure!(
                        is_congruence(monoid, meet.class_of()).map_err(|e| e.to_string())?,
                        "intersection is not a congruence on size {}",
                        monoid.size()
                    );
                    ensure!(
                        meet.index() <= gamma1.index() * gamma2.index(),
                        "index {} exceeds the product bound {}",
                        meet.index(),
                        gamma1.index() * gamma2.index()
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn surjective_endomorphisms_yield_injective_precomposition() {
    report(
        "surjective endomorphisms yield injective precomposition",
        || {
            let expected_surjective = [1usize, 1, 2, 2, 1, 2];
            for (name, expected) in catalog::names().iter().zip(expected_surjective) {
                let monoid = catalog::by_name(name).expect("catalog name");
                let endos = enumerate_morphisms(&monoid, &monoid, false);
                let identity_images: Vec<usize> = monoid.elements().collect();
                let mut surjective = 0usize;
                for psi in &endos {
                    if !psi.is_surjective() {
                        continue;
                    }
                    surjective += 1;
                    let analysis = malcev_phi(&monoid, psi).map_err(|e| e.to_string())?;
                    ensure!(analysis.surjective, "{name}: surjectivity misdetected");
                    ensure!(
                        analysis.injective,
                        "{name}: Φ must be injective for surjective ψ"
                    );
                    let u0 = analysis
                        .u0
                        .ok_or_else(|| format!("{name}: no u₀ with Φ(u₀) = ρ"))?;
                    let recomposed = analysis.morphisms[u0]
                        .compose(psi)
                        .map_err(|e| e.to_string())?;
                    ensure!(
                        recomposed.images() == identity_images,
                        "{name}: u₀ ∘ ψ is not the identity morphism"
                    );
                }
                ensure!(
                    surjective == expected,
                    "{name}: found {surjective} surjective endomorphisms, expected {expected}"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn endomorphism_pairs_separate_in_finite_quotients() {
    report("endomorphism pairs separate in finite quotients", || {
        for monoid in [catalog::cyclic(2), catalog::cyclic(6)] {
            let endos = enumerate_morphisms(&monoid, &monoid, false);
            let mut gammas = Vec::new();
            for i in 0..endos.len() {
                for j in (i + 1)..endos.len() {
                    let certificate =
                        separate_endomorphisms(&monoid, &monoid, &endos[i], &endos[j])
                            .map_err(|e| format!("pair ({i}, {j}): {e}"))?;
                    ensure!(
                        certificate.induced1 != certificate.induced2,
                        "pair ({i}, {j}): induced maps coincide"
                    );
                    gammas.push(certificate.gamma.clone());
                    Certificate::from(certificate)
                        .verify()
                        .map_err(|e| format!("pair ({i}, {j}) produced a bad certificate: {e}"))?;
                }
            }
            // The separating congruence must be stable under every
            // endomorphism, or the induced maps would be ill-defined.
            for gamma in &gammas {
                for alpha in &endos {
                    for a in monoid.elements() {
                        for b in monoid.elements() {
                            if gamma[a] == gamma[b] {
                                ensure!(
                                    gamma[alpha.apply(a)] == gamma[alpha.apply(b)],
                                    "congruence moved by an endomorphism on ({a}, {b})"
                                );
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn every_cylinder_contains_a_periodic_configuration() {
    report("every cylinder contains a periodic configuration", || {
        let alphabet = binary();
        for length in 1..=6usize {
            for bits in 0..(1u32 << length) {
                let word: Vec<usize> = (0..length).map(|k| ((bits >> k) & 1) as usize).collect();
                for offset in [-3i64, 0, 5] {
                    let constraints: Vec<(i64, usize)> = word
                        .iter()
                        .enumerate()
                        .map(|(k, &symbol)| (offset + k as i64, symbol))
                        .collect();
                    let witness = periodic_cylinder_witness(&constraints, alphabet)
                        .map_err(|e| e.to_string())?;
                    for &(position, symbol) in &constraints {
                        ensure!(
                            witness.at(position) == symbol,
                            "witness misses constraint ({position}, {symbol}) for word {word:?}"
                        );
                    }
                    ensure!(
                        witness.period() <= length,
                        "witness period {} exceeds the window length {length}",
                        witness.period()
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn restriction_is_multiplicative_on_random_rule_pairs() {
    report("restriction is multiplicative on random rule pairs", || {
        let seed = std::env::var("RESFIN_TEST_SEED")
            .ok()
            .and_then(|raw| raw.parse::<u64>().ok())
            .unwrap_or(0x7265_7366_696e);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alphabet = binary();
        let random_rule = |rng: &mut ChaCha8Rng| {
            let radius = rng.random_range(0..=1usize);
            let table = (0..1usize << (2 * radius + 1))
                .map(|_| rng.random_range(0..2usize))
                .collect();
            LocalRule::new(radius, alphabet, table).expect("valid table")
        };
        for trial in 0..100 {
            let rule1 = random_rule(&mut rng);
            let mut rule2 = random_rule(&mut rng);
            while rules_equal(&rule1, &rule2).map_err(|e| e.to_string())? {
                rule2 = random_rule(&mut rng);
            }
            let certificate =
                separate_ca_integer(&rule1, &rule2).map_err(|e| format!("trial {trial}: {e}"))?;
            let members: &[PeriodicWord] = &certificate.invariant_set;
            for (sigma, rho_sigma) in [(&rule1, &certificate.image1), (&rule2, &certificate.image2)]
            {
                for (tau, rho_tau) in [(&rule1, &certificate.image1), (&rule2, &certificate.image2)]
                {
                    let restricted = sigma
                        .compose(tau)
                        .map_err(|e| e.to_string())?
                        .restrict(members)
                        .map_err(|e| e.to_string())?;
                    let composed = rho_sigma.compose(rho_tau).map_err(|e| e.to_string())?;
                    ensure!(
                        restricted == composed,
                        "trial {trial}: restriction broke multiplicativity"
                    );
                }
            }
            Certificate::from(certificate)
                .verify()
                .map_err(|e| format!("trial {trial} produced a bad certificate: {e}"))?;
        }
        Ok(())
    });
}
