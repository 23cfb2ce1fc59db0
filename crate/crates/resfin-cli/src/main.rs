//! `resfin` — enumerate, separate, and certify cellular automata over finite
//! monoids, and probe monoid endomorphisms through their finite quotients.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when asked to separate two
//! equal objects, 3 when a certificate fails verification.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use resfin_core::catalog;
use resfin_core::{
    enumerate_ca_with_cap, enumerate_congruences, malcev_hopf_check, separate_ca_finite,
    separate_ca_integer, separate_endomorphisms, Alphabet, Certificate, EquivariantMap,
    FiniteMonoid, LocalRule, SemigroupMorphism, WitnessError, DEFAULT_ENUM_CAP,
};

#[derive(Parser)]
#[command(name = "resfin", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect finite monoids.
    #[command(subcommand)]
    Monoid(MonoidCommand),
    /// Work with cellular automata over a finite monoid.
    #[command(subcommand)]
    Ca(CaCommand),
    /// Separate two cellular automata and emit a certificate.
    Separate {
        /// Two elementary rule numbers (radius 1, binary alphabet).
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        wolfram: Option<Vec<u8>>,
        /// Two local-rule JSON files.
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        rule: Option<Vec<PathBuf>>,
        /// Two equivariant-map JSON files.
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        map: Option<Vec<PathBuf>>,
        /// Catalog name or JSON file the maps must live over (cross-check).
        #[arg(long)]
        monoid: Option<String>,
        /// Alphabet size the inputs must use (cross-check).
        #[arg(long)]
        alphabet: Option<usize>,
        /// Re-verify the certificate before emitting it.
        #[arg(long)]
        verify: bool,
        /// Write the certificate here instead of stdout.
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Re-check a certificate from its raw JSON.
    Verify {
        /// Path to a certificate JSON file.
        path: PathBuf,
    },
    /// Tabulate precomposition by an endomorphism on the endomorphism monoid.
    Malcev {
        /// Built-in monoid name.
        #[arg(long, value_name = "NAME", conflicts_with = "monoid")]
        catalog: Option<String>,
        /// Path to a monoid JSON file.
        #[arg(long, value_name = "FILE", required_unless_present = "catalog")]
        monoid: Option<PathBuf>,
        /// Endomorphism: "identity", "constant", or a comma-separated image list.
        #[arg(long, value_name = "SPEC")]
        endo: String,
        /// Two elements whose images to compare.
        #[arg(long, num_args = 2, required = true, value_names = ["FIRST", "SECOND"])]
        pair: Vec<usize>,
        /// Emit the analysis as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Separate two endomorphisms through a finite quotient.
    #[command(name = "end-separate")]
    EndSeparate {
        /// Built-in monoid name.
        #[arg(long, value_name = "NAME", conflicts_with = "monoid")]
        catalog: Option<String>,
        /// Path to a monoid JSON file.
        #[arg(long, value_name = "FILE", required_unless_present = "catalog")]
        monoid: Option<PathBuf>,
        /// First endomorphism: "identity", "constant", or an image list.
        #[arg(long, value_name = "SPEC")]
        endo1: String,
        /// Second endomorphism: "identity", "constant", or an image list.
        #[arg(long, value_name = "SPEC")]
        endo2: String,
        /// Test target monoid (catalog name or JSON file); defaults to the
        /// source monoid, which always suffices.
        #[arg(long, value_name = "NAME|FILE")]
        target: Option<String>,
        /// Re-verify the certificate before emitting it.
        #[arg(long)]
        verify: bool,
        /// Write the certificate here instead of stdout.
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MonoidCommand {
    /// Validate a multiplication table and report its basic structure.
    Check {
        /// Path to a monoid JSON file.
        #[arg(value_name = "FILE", required_unless_present = "catalog")]
        path: Option<PathBuf>,
        /// Built-in monoid name.
        #[arg(long, value_name = "NAME", conflicts_with = "path")]
        catalog: Option<String>,
    },
}

#[derive(Subcommand)]
enum CaCommand {
    /// List every cellular automaton over the given monoid and alphabet.
    Enumerate {
        /// Built-in monoid name.
        #[arg(long, value_name = "NAME", conflicts_with = "monoid")]
        catalog: Option<String>,
        /// Path to a monoid JSON file.
        #[arg(long, value_name = "FILE", required_unless_present = "catalog")]
        monoid: Option<PathBuf>,
        /// Alphabet size.
        #[arg(long, value_name = "N")]
        alphabet: usize,
        /// Refuse configuration spaces larger than this.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUM_CAP)]
        cap: usize,
        /// Print each graph as a JSON array, one per line.
        #[arg(long)]
        graphs: bool,
    },
}

/// A failed run, carrying the process exit code.
enum Failure {
    /// Bad input: unreadable files, malformed JSON, failed validation.
    Input(String),
    /// The two objects to separate are equal.
    NotDistinct(String),
    /// A certificate failed verification.
    Invalid(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::NotDistinct(_) => 2,
            Failure::Invalid(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(msg) | Failure::NotDistinct(msg) | Failure::Invalid(msg) => msg,
        }
    }
}

fn input(err: impl std::fmt::Display) -> Failure {
    Failure::Input(err.to_string())
}

/// Writes to stdout, exiting quietly when the read end of a pipe has gone
/// away (e.g. `resfin ca enumerate ... | head`).
fn emit(text: std::fmt::Arguments) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_fmt(text).is_err() {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!("{}\n", format_args!($($arg)*))) };
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Monoid(MonoidCommand::Check { path, catalog }) => monoid_check(path, catalog),
        Command::Ca(CaCommand::Enumerate {
            catalog,
            monoid,
            alphabet,
            cap,
            graphs,
        }) => ca_enumerate(catalog, monoid, alphabet, cap, graphs),
        Command::Separate {
            wolfram,
            rule,
            map,
            monoid,
            alphabet,
            verify,
            output,
        } => separate(wolfram, rule, map, monoid, alphabet, verify, output),
        Command::Verify { path } => verify_file(&path),
        Command::Malcev {
            catalog,
            monoid,
            endo,
            pair,
            json,
        } => malcev(catalog, monoid, &endo, &pair, json),
        Command::EndSeparate {
            catalog,
            monoid,
            endo1,
            endo2,
            target,
            verify,
            output,
        } => end_separate(catalog, monoid, &endo1, &endo2, target, verify, output),
    }
}

/// Reads a monoid from a catalog name or a JSON file, whichever was given.
fn load_monoid(
    catalog_name: Option<String>,
    path: Option<PathBuf>,
) -> Result<FiniteMonoid, Failure> {
    match (catalog_name, path) {
        (Some(name), None) => catalog::by_name(&name).ok_or_else(|| {
            Failure::Input(format!(
                "unknown catalog monoid {name:?} (available: {})",
                catalog::names().join(", ")
            ))
        }),
        (None, Some(path)) => monoid_from_file(&path),
        _ => Err(Failure::Input(
            "give exactly one of --catalog NAME or --monoid FILE".into(),
        )),
    }
}

fn monoid_from_file(path: &Path) -> Result<FiniteMonoid, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{} is not a valid monoid: {e}", path.display())))
}

/// Resolves a `NAME|FILE` argument: catalog names win, anything else must be
/// a readable monoid JSON file.
fn monoid_from_name_or_file(spec: &str) -> Result<FiniteMonoid, Failure> {
    if let Some(monoid) = catalog::by_name(spec) {
        return Ok(monoid);
    }
    if Path::new(spec).exists() {
        return monoid_from_file(Path::new(spec));
    }
    Err(Failure::Input(format!(
        "{spec:?} is neither a catalog monoid (available: {}) nor a readable file",
        catalog::names().join(", ")
    )))
}

/// Parses an endomorphism spec: `identity`, `constant` (onto the identity
/// element), or a comma-separated image list like `0,5,4,3,2,1`.
fn endomorphism_from_spec(monoid: &FiniteMonoid, spec: &str) -> Result<SemigroupMorphism, Failure> {
    match spec.trim() {
        "identity" => Ok(SemigroupMorphism::identity_morphism(monoid)),
        "constant" => {
            SemigroupMorphism::constant(monoid.clone(), monoid.clone(), monoid.identity())
                .map_err(input)
        }
        list => {
            let images: Vec<usize> = list
                .split(',')
                .map(|part| part.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| {
                    Failure::Input(format!(
                        "endomorphism spec {spec:?} is not \"identity\", \"constant\", or a \
                         comma-separated image list"
                    ))
                })?;
            SemigroupMorphism::new(monoid.clone(), monoid.clone(), images).map_err(input)
        }
    }
}

fn monoid_check(path: Option<PathBuf>, catalog_name: Option<String>) -> Result<(), Failure> {
    let monoid = load_monoid(catalog_name, path)?;
    let generators = monoid.generating_set();
    let plural = if generators.len() == 1 {
        "generator"
    } else {
        "generators"
    };
    outln!(
        "valid, size {}, {} {plural}",
        monoid.size(),
        generators.len()
    );
    outln!("identity: {}", monoid.identity());
    outln!("generators: {generators:?}");
    if monoid.size() <= 4 {
        outln!("congruences: {}", enumerate_congruences(&monoid).len());
    }
    Ok(())
}

fn ca_enumerate(
    catalog_name: Option<String>,
    monoid_path: Option<PathBuf>,
    alphabet: usize,
    cap: usize,
    graphs: bool,
) -> Result<(), Failure> {
    let monoid = load_monoid(catalog_name, monoid_path)?;
    let alphabet = Alphabet::new(alphabet).map_err(input)?;
    let maps = enumerate_ca_with_cap(&monoid, alphabet, cap).map_err(input)?;
    outln!(
        "{} cellular automata over {} cells and {} symbols",
        maps.len(),
        monoid.size(),
        alphabet.size()
    );

    let identity = EquivariantMap::identity(monoid.clone(), alphabet).map_err(input)?;
    let present = if maps.contains(&identity) {
        "present"
    } else {
        "MISSING"
    };
    outln!("identity map: {present}");

    // Composition closure: full check when feasible, else a fixed sample.
    let n = maps.len();
    let mut checked = 0usize;
    let mut closed = true;
    let full = n * n <= 1_000_000;
    let stride = if full { 1 } else { n * n / 1_000 + 1 };
    let mut k = 0usize;
    while k < n * n {
        let product = maps[k / n].compose(&maps[k % n]).map_err(input)?;
        closed &= maps
            .binary_search_by(|m| m.graph().cmp(product.graph()))
            .is_ok();
        checked += 1;
        k += stride;
    }
    let coverage = if full { "all" } else { "sampled" };
    outln!(
        "closed under composition: {} ({coverage} {checked} products checked)",
        if closed { "yes" } else { "NO" }
    );

    if graphs {
        for map in &maps {
            outln!("{}", serde_json::to_string(map.graph()).map_err(input)?);
        }
    }
    Ok(())
}

/// Writes a certificate to the chosen sink, optionally re-verifying first.
fn emit_certificate(
    certificate: Certificate,
    verify: bool,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    if verify {
        certificate
            .verify()
            .map_err(|e| Failure::Invalid(e.to_string()))?;
    }
    let text = certificate.to_json();
    match output {
        Some(path) => {
            fs::write(&path, text)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("certificate written to {}", path.display());
        }
        None => emit(format_args!("{text}")),
    }
    Ok(())
}

fn local_rule_from_file(path: &Path) -> Result<LocalRule, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{} is not a valid local rule: {e}", path.display())))
}

fn equivariant_map_from_file(path: &Path) -> Result<EquivariantMap, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Input(format!(
            "{} is not a valid equivariant map: {e}",
            path.display()
        ))
    })
}

#[allow(clippy::too_many_arguments)]
fn separate(
    wolfram: Option<Vec<u8>>,
    rule: Option<Vec<PathBuf>>,
    map: Option<Vec<PathBuf>>,
    monoid: Option<String>,
    alphabet: Option<usize>,
    verify: bool,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    let modes =
        usize::from(wolfram.is_some()) + usize::from(rule.is_some()) + usize::from(map.is_some());
    if modes != 1 {
        return Err(Failure::Input(
            "give exactly one of --wolfram, --rule, or --map".into(),
        ));
    }

    let rules = if let Some(numbers) = wolfram {
        Some((
            LocalRule::elementary(numbers[0]),
            LocalRule::elementary(numbers[1]),
        ))
    } else if let Some(paths) = rule {
        Some((
            local_rule_from_file(&paths[0])?,
            local_rule_from_file(&paths[1])?,
        ))
    } else {
        None
    };

    if let Some((rule1, rule2)) = rules {
        if let Some(size) = alphabet {
            for r in [&rule1, &rule2] {
                if r.alphabet().size() != size {
                    return Err(Failure::Input(format!(
                        "rule uses {} symbols, not the requested {size}",
                        r.alphabet().size()
                    )));
                }
            }
        }
        let certificate = match separate_ca_integer(&rule1, &rule2) {
            Ok(c) => c,
            Err(WitnessError::NotDistinct) => {
                return Err(Failure::NotDistinct("rules define the same map".into()))
            }
            Err(e) => return Err(input(e)),
        };
        return emit_certificate(certificate.into(), verify, output);
    }

    let paths = map.expect("mode counted above");
    let map1 = equivariant_map_from_file(&paths[0])?;
    let map2 = equivariant_map_from_file(&paths[1])?;
    if let Some(spec) = monoid {
        let requested = monoid_from_name_or_file(&spec)?;
        for m in [&map1, &map2] {
            if m.monoid() != &requested {
                return Err(Failure::Input(format!(
                    "map is not defined over the requested monoid {spec:?}"
                )));
            }
        }
    }
    if let Some(size) = alphabet {
        for m in [&map1, &map2] {
            if m.alphabet().size() != size {
                return Err(Failure::Input(format!(
                    "map uses {} symbols, not the requested {size}",
                    m.alphabet().size()
                )));
            }
        }
    }
    let certificate = match separate_ca_finite(&map1, &map2) {
        Ok(c) => c,
        Err(WitnessError::NotDistinct) => {
            return Err(Failure::NotDistinct(
                "maps define the same automaton".into(),
            ))
        }
        Err(e) => return Err(input(e)),
    };
    emit_certificate(certificate.into(), verify, output)
}

fn kind_name(certificate: &Certificate) -> &'static str {
    match certificate {
        Certificate::Integer(_) => "integer-separation",
        Certificate::Finite(_) => "finite-separation",
        Certificate::Endo(_) => "endomorphism-separation",
    }
}

fn verify_file(path: &Path) -> Result<(), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let certificate = Certificate::from_json(&text)
        .map_err(|e| Failure::Input(format!("malformed certificate JSON: {e}")))?;
    certificate
        .verify()
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    outln!("valid {} certificate", kind_name(&certificate));
    Ok(())
}

fn malcev(
    catalog_name: Option<String>,
    monoid_path: Option<PathBuf>,
    endo: &str,
    pair: &[usize],
    json: bool,
) -> Result<(), Failure> {
    let monoid = load_monoid(catalog_name, monoid_path)?;
    let psi = endomorphism_from_spec(&monoid, endo)?;
    let report = match malcev_hopf_check(&monoid, &psi, pair[0], pair[1]) {
        Ok(report) => report,
        Err(WitnessError::NotDistinct) => {
            return Err(Failure::NotDistinct(
                "the two elements of the pair are equal".into(),
            ))
        }
        Err(e) => return Err(input(e)),
    };

    if json {
        let analysis = &report.phi;
        let value = serde_json::json!({
            "size": monoid.size(),
            "endomorphism": psi.images(),
            "surjective": analysis.surjective,
            "endomorphism_count": analysis.morphisms.len(),
            "precomposition": analysis.phi,
            "injective": analysis.injective,
            "identity_index": analysis.rho_index,
            "u0": analysis.u0,
            "pair": [report.s1, report.s2],
            "images": [report.image1, report.image2],
            "separated": report.separated,
        });
        outln!("{}", serde_json::to_string_pretty(&value).map_err(input)?);
        return Ok(());
    }

    let analysis = &report.phi;
    outln!("monoid: size {}", monoid.size());
    outln!(
        "endomorphism: {:?} ({})",
        psi.images(),
        if analysis.surjective {
            "surjective"
        } else {
            "not surjective"
        }
    );
    outln!("endomorphisms of the monoid: {}", analysis.morphisms.len());
    outln!("precomposition table: {:?}", analysis.phi);
    outln!(
        "precomposition injective: {}",
        if analysis.injective { "yes" } else { "no" }
    );
    match analysis.u0 {
        Some(u0) => outln!(
            "identity recovered: u0 = {u0} with images {:?}",
            analysis.morphisms[u0].images()
        ),
        None => outln!("identity recovered: none"),
    }
    outln!(
        "pair ({}, {}): images ({}, {}) -- {}",
        report.s1,
        report.s2,
        report.image1,
        report.image2,
        if report.separated {
            "separated"
        } else {
            "not separated"
        }
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn end_separate(
    catalog_name: Option<String>,
    monoid_path: Option<PathBuf>,
    endo1: &str,
    endo2: &str,
    target: Option<String>,
    verify: bool,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    let source = load_monoid(catalog_name, monoid_path)?;
    let target = match target {
        Some(spec) => monoid_from_name_or_file(&spec)?,
        None => source.clone(),
    };
    let alpha1 = endomorphism_from_spec(&source, endo1)?;
    let alpha2 = endomorphism_from_spec(&source, endo2)?;
    let certificate = match separate_endomorphisms(&source, &target, &alpha1, &alpha2) {
        Ok(c) => c,
        Err(WitnessError::NotDistinct) => {
            return Err(Failure::NotDistinct(
                "the two endomorphisms are equal".into(),
            ))
        }
        Err(e) => return Err(input(e)),
    };
    emit_certificate(certificate.into(), verify, output)
}
