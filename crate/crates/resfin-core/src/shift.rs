//! Configuration spaces `A^M` with the shift action, orbits, invariant sets,
//! and the periodic-word backend for the integers.
//!
//! The shift is defined by `(m·x)(m') = x(m'·m)`. Written out, this makes
//! `m ↦ shift(m, ·)` a genuine left action: shifting by `m2` and then by `m1`
//! equals shifting by `m1·m2` (see the exhaustive law tests).

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::catalog::MonoidSpec;
use crate::monoid::{Congruence, FiniteMonoid, MonoidError};
use crate::DEFAULT_ENUM_CAP;

/// Errors arising from configuration-space operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    /// An alphabet must have at least one symbol.
    #[error("alphabet must have at least one symbol")]
    EmptyAlphabet,
    /// A symbol is not a member of the alphabet.
    #[error("symbol {symbol} out of range for alphabet of size {alphabet}")]
    SymbolOutOfRange {
        /// The offending symbol.
        symbol: usize,
        /// Alphabet size.
        alphabet: usize,
    },
    /// An array argument has the wrong length.
    #[error("expected an array of length {expected}, got {got}")]
    LengthMismatch {
        /// Required length.
        expected: usize,
        /// Provided length.
        got: usize,
    },
    /// An element index does not name a monoid element.
    #[error("element index {index} out of range for size {size}")]
    ElementOutOfRange {
        /// The offending index.
        index: usize,
        /// Number of elements.
        size: usize,
    },
    /// Configurations over different monoids were mixed.
    #[error("configurations are defined over different monoids")]
    MonoidMismatch,
    /// An operation requiring a nonempty input received none.
    #[error("input must be nonempty")]
    EmptyInput,
    /// A set of configurations is not closed under the shift.
    #[error("set is not shift-invariant: shifting member {member} by element {element} leaves it")]
    NotInvariant {
        /// The shifting element.
        element: usize,
        /// Index of the member whose shift escapes the set.
        member: usize,
    },
    /// A periodic word must have at least one letter.
    #[error("a periodic word needs period at least 1")]
    ZeroPeriod,
    /// An enumeration would exceed the configured cap.
    #[error("enumeration of {required} configurations exceeds the cap of {cap}")]
    CapExceeded {
        /// How many configurations would be produced.
        required: u128,
        /// The configured limit.
        cap: usize,
    },
    /// Two constraints pin the same position to different symbols.
    #[error("contradictory constraints at position {position}")]
    ContradictoryConstraints {
        /// The doubly-constrained position.
        position: i64,
    },
    /// A declared period field disagrees with the word length.
    #[error("declared period {declared} does not match word length {actual}")]
    PeriodMismatch {
        /// The declared period.
        declared: usize,
        /// The word's length.
        actual: usize,
    },
    /// An underlying monoid error.
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// A finite alphabet; symbols are the indices `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet(usize);

impl Alphabet {
    /// Validates an alphabet size (at least one symbol).
    pub fn new(size: usize) -> Result<Self, ShiftError> {
        if size == 0 {
            return Err(ShiftError::EmptyAlphabet);
        }
        Ok(Alphabet(size))
    }

    /// Number of symbols.
    pub fn size(&self) -> usize {
        self.0
    }

    /// Whether `symbol` is a member.
    pub fn contains(&self, symbol: usize) -> bool {
        symbol < self.0
    }

    /// Errors unless every entry of `symbols` is a member.
    pub fn check_all(&self, symbols: &[usize]) -> Result<(), ShiftError> {
        match symbols.iter().find(|&&s| !self.contains(s)) {
            Some(&s) => Err(ShiftError::SymbolOutOfRange {
                symbol: s,
                alphabet: self.0,
            }),
            None => Ok(()),
        }
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.0 as u64)
    }
}

impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let size = usize::deserialize(deserializer)?;
        Alphabet::new(size).map_err(serde::de::Error::custom)
    }
}

/// The index of `values` in the lexicographic enumeration of `A^M`, with
/// element 0 as the most significant digit.
pub fn config_index(values: &[usize], alphabet: Alphabet) -> usize {
    values.iter().fold(0, |acc, &v| acc * alphabet.size() + v)
}

/// Inverse of [`config_index`]: the `i`-th value array of length `len`.
pub fn config_values(mut i: usize, len: usize, alphabet: Alphabet) -> Vec<usize> {
    let a = alphabet.size();
    let mut values = vec![0usize; len];
    for slot in values.iter_mut().rev() {
        *slot = i % a;
        i /= a;
    }
    values
}

/// A point of `A^M` for a finite monoid `M`: one symbol per element.
///
/// Serializes as `{"monoid": <name or inline table>, "values": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigurationWire")]
pub struct Configuration {
    monoid: FiniteMonoid,
    values: Vec<usize>,
}

#[derive(Deserialize)]
struct ConfigurationWire {
    monoid: MonoidSpec,
    values: Vec<usize>,
}

impl TryFrom<ConfigurationWire> for Configuration {
    type Error = ShiftError;

    fn try_from(w: ConfigurationWire) -> Result<Self, ShiftError> {
        Configuration::new(w.monoid.resolve()?, w.values)
    }
}

impl Configuration {
    /// Wraps a value array as a configuration over `monoid`.
    pub fn new(monoid: FiniteMonoid, values: Vec<usize>) -> Result<Self, ShiftError> {
        if values.len() != monoid.size() {
            return Err(ShiftError::LengthMismatch {
                expected: monoid.size(),
                got: values.len(),
            });
        }
        Ok(Configuration { monoid, values })
    }

    /// The configuration with the same symbol everywhere.
    pub fn constant(monoid: FiniteMonoid, symbol: usize) -> Self {
        let values = vec![symbol; monoid.size()];
        Configuration { monoid, values }
    }

    /// The monoid this configuration lives over.
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    /// The value array, indexed by monoid elements.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The shifted configuration `m·x`, defined by `(m·x)(m') = x(m'·m)`.
    pub fn shift(&self, m: usize) -> Result<Configuration, ShiftError> {
        if m >= self.monoid.size() {
            return Err(ShiftError::ElementOutOfRange {
                index: m,
                size: self.monoid.size(),
            });
        }
        let values = (0..self.monoid.size())
            .map(|mp| self.values[self.monoid.mul(mp, m)])
            .collect();
        Ok(Configuration {
            monoid: self.monoid.clone(),
            values,
        })
    }

    /// The orbit `{m·x : m ∈ M}`, deduplicated and sorted lexicographically.
    pub fn orbit(&self) -> Vec<Configuration> {
        let mut out: Vec<Configuration> = Vec::new();
        for m in self.monoid.elements() {
            let shifted = self.shift(m).expect("element index from the monoid itself");
            if !out.contains(&shifted) {
                out.push(shifted);
            }
        }
        out.sort_by(|x, y| x.values.cmp(&y.values));
        out
    }

    /// Always true: over a finite monoid every orbit is finite.
    pub fn is_periodic(&self) -> bool {
        true
    }
}

/// A periodic point of `A^ℤ`, stored as one period `word`; the configuration
/// is `x(k) = word[k mod period]`.
///
/// Equality compares the denoted configurations, so `(0,1)` equals
/// `(0,1,0,1)`. Serializes as `{"period": n, "word": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "PeriodicWordWire")]
pub struct PeriodicWord {
    period: usize,
    word: Vec<usize>,
}

#[derive(Deserialize)]
struct PeriodicWordWire {
    period: usize,
    word: Vec<usize>,
}

impl TryFrom<PeriodicWordWire> for PeriodicWord {
    type Error = ShiftError;

    fn try_from(w: PeriodicWordWire) -> Result<Self, ShiftError> {
        if w.period != w.word.len() {
            return Err(ShiftError::PeriodMismatch {
                declared: w.period,
                actual: w.word.len(),
            });
        }
        PeriodicWord::new(w.word)
    }
}

impl PeriodicWord {
    /// Wraps a nonempty word as a periodic configuration.
    pub fn new(word: Vec<usize>) -> Result<Self, ShiftError> {
        if word.is_empty() {
            return Err(ShiftError::ZeroPeriod);
        }
        Ok(PeriodicWord {
            period: word.len(),
            word,
        })
    }

    /// The stored period (the word length, not necessarily minimal).
    pub fn period(&self) -> usize {
        self.period
    }

    /// One period of the configuration.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The symbol at integer position `k` (any sign).
    pub fn at(&self, k: i64) -> usize {
        self.word[k.rem_euclid(self.period as i64) as usize]
    }

    /// The shifted configuration `k·x`, i.e. `(k·x)(m) = x(m + k)`: the word
    /// rotated left by `k mod period`.
    pub fn shift(&self, k: i64) -> PeriodicWord {
        let word = (0..self.period as i64).map(|i| self.at(i + k)).collect();
        PeriodicWord {
            period: self.period,
            word,
        }
    }

    /// All distinct rotations, sorted lexicographically.
    pub fn orbit(&self) -> Vec<PeriodicWord> {
        let mut out: Vec<PeriodicWord> = Vec::new();
        for k in 0..self.period {
            let rotated = self.shift(k as i64);
            if !out.contains(&rotated) {
                out.push(rotated);
            }
        }
        out.sort_by(|x, y| x.word.cmp(&y.word));
        out
    }

    /// Always true: the representation only holds periodic points.
    pub fn is_periodic(&self) -> bool {
        true
    }

    /// The minimal period: the smallest divisor `d` of the stored period
    /// with `word[i] = word[i mod d]` for all `i`.
    pub fn minimal_period(&self) -> usize {
        (1..=self.period)
            .find(|&d| {
                self.period.is_multiple_of(d)
                    && (0..self.period).all(|i| self.word[i] == self.word[i % d])
            })
            .expect("the stored period itself always qualifies")
    }

    /// The same configuration re-cut at its minimal period.
    pub fn canonical(&self) -> PeriodicWord {
        let d = self.minimal_period();
        PeriodicWord {
            period: d,
            word: self.word[..d].to_vec(),
        }
    }
}

impl PartialEq for PeriodicWord {
    /// Two words are equal iff they denote the same configuration. Agreement
    /// on the first `lcm` of the periods is equivalent to having the same
    /// minimal-period cut, which is what we compare.
    fn eq(&self, other: &Self) -> bool {
        self.canonical().word == other.canonical().word
    }
}

impl Eq for PeriodicWord {}

/// The minimal period of `y`; the orbit congruence of a periodic integer
/// configuration is exactly congruence mod this number.
pub fn integer_orbit_congruence(y: &PeriodicWord) -> usize {
    y.minimal_period()
}

/// The congruence identifying `m1` and `m2` exactly when they shift every
/// member of `ys` identically.
///
/// `ys` must be nonempty and shift-invariant. Right compatibility of the
/// result relies on that invariance; left compatibility is automatic.
pub fn orbit_congruence(
    monoid: &FiniteMonoid,
    ys: &[Configuration],
) -> Result<Congruence, ShiftError> {
    if ys.is_empty() {
        return Err(ShiftError::EmptyInput);
    }
    if ys.iter().any(|y| y.monoid() != monoid) {
        return Err(ShiftError::MonoidMismatch);
    }
    for (member, y) in ys.iter().enumerate() {
        for m in monoid.elements() {
            let shifted = y.shift(m).expect("element from the monoid itself");
            if !ys.contains(&shifted) {
                return Err(ShiftError::NotInvariant { element: m, member });
            }
        }
    }
    // Each element's signature is how it shifts every member of ys.
    let signatures: Vec<Vec<Vec<usize>>> = monoid
        .elements()
        .map(|m| {
            ys.iter()
                .map(|y| y.shift(m).expect("checked above").values().to_vec())
                .collect()
        })
        .collect();
    let labels: Vec<usize> = signatures
        .iter()
        .map(|sig| {
            signatures
                .iter()
                .position(|other| other == sig)
                .expect("every signature finds itself")
        })
        .collect();
    Ok(Congruence::new(monoid, &labels).expect("equal action on an invariant set is a congruence"))
}

/// Computes `a^exp`, failing once the product exceeds `cap`.
fn checked_power(a: usize, exp: usize, cap: usize) -> Result<usize, ShiftError> {
    let mut required: u128 = 1;
    for _ in 0..exp {
        required = required.saturating_mul(a as u128);
        if required > cap as u128 {
            return Err(ShiftError::CapExceeded { required, cap });
        }
    }
    Ok(required as usize)
}

/// The configurations constant on each class of `gamma`, under the default
/// enumeration cap.
///
/// For a congruence these are exactly the configurations fixed jointly by
/// every congruent pair of shifts, and the returned set is shift-invariant.
pub fn inv(gamma: &Congruence, alphabet: Alphabet) -> Result<Vec<Configuration>, ShiftError> {
    inv_with_cap(gamma, alphabet, DEFAULT_ENUM_CAP)
}

/// [`inv`] with an explicit cap on `|A|^index` (the number of results).
pub fn inv_with_cap(
    gamma: &Congruence,
    alphabet: Alphabet,
    cap: usize,
) -> Result<Vec<Configuration>, ShiftError> {
    let count = checked_power(alphabet.size(), gamma.index(), cap)?;
    let monoid = gamma.monoid();
    let mut out = Vec::with_capacity(count);
    let mut coloring = vec![0usize; gamma.index()];
    // Class colorings in lexicographic order enumerate the configurations in
    // lexicographic order too, because classes are numbered by first
    // occurrence (class 0 starts at element 0).
    loop {
        let values: Vec<usize> = gamma.class_of().iter().map(|&c| coloring[c]).collect();
        out.push(Configuration::new(monoid.clone(), values).expect("length matches by build"));
        let mut k = gamma.index();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            coloring[k] += 1;
            if coloring[k] < alphabet.size() {
                break;
            }
            coloring[k] = 0;
        }
    }
}

/// All `|A|^p` periodic words of period `p`, in lexicographic order, under
/// the default cap.
///
/// These are exactly the integer configurations invariant under congruence
/// mod `p`.
pub fn inv_integer(p: usize, alphabet: Alphabet) -> Result<Vec<PeriodicWord>, ShiftError> {
    inv_integer_with_cap(p, alphabet, DEFAULT_ENUM_CAP)
}

/// [`inv_integer`] with an explicit cap on `|A|^p`.
pub fn inv_integer_with_cap(
    p: usize,
    alphabet: Alphabet,
    cap: usize,
) -> Result<Vec<PeriodicWord>, ShiftError> {
    if p == 0 {
        return Err(ShiftError::ZeroPeriod);
    }
    let count = checked_power(alphabet.size(), p, cap)?;
    let mut out = Vec::with_capacity(count);
    let mut word = vec![0usize; p];
    loop {
        out.push(PeriodicWord::new(word.clone()).expect("p >= 1"));
        let mut k = p;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            word[k] += 1;
            if word[k] < alphabet.size() {
                break;
            }
            word[k] = 0;
        }
    }
}

/// Builds a periodic integer configuration satisfying every `(position,
/// symbol)` constraint.
///
/// The period is the length of the constrained window (`max − min + 1`);
/// positions get their symbols by residue, unconstrained residues get 0.
/// Positions in the window are closer together than one period, so no two
/// distinct positions collide.
pub fn periodic_cylinder_witness(
    constraints: &[(i64, usize)],
    alphabet: Alphabet,
) -> Result<PeriodicWord, ShiftError> {
    if constraints.is_empty() {
        return Err(ShiftError::EmptyInput);
    }
    alphabet.check_all(&constraints.iter().map(|&(_, s)| s).collect::<Vec<_>>())?;
    let min = constraints.iter().map(|&(p, _)| p).min().expect("nonempty");
    let max = constraints.iter().map(|&(p, _)| p).max().expect("nonempty");
    let span = (max as i128 - min as i128) + 1;
    if span > DEFAULT_ENUM_CAP as i128 {
        return Err(ShiftError::CapExceeded {
            required: span as u128,
            cap: DEFAULT_ENUM_CAP,
        });
    }
    let period = span as usize;
    let mut word = vec![0usize; period];
    let mut pinned: Vec<Option<(i64, usize)>> = vec![None; period];
    for &(pos, sym) in constraints {
        let slot = pos.rem_euclid(period as i64) as usize;
        match pinned[slot] {
            Some((_, existing)) if existing != sym => {
                return Err(ShiftError::ContradictoryConstraints { position: pos });
            }
            _ => {
                pinned[slot] = Some((pos, sym));
                word[slot] = sym;
            }
        }
    }
    let witness = PeriodicWord::new(word).expect("period >= 1");
    debug_assert!(constraints.iter().all(|&(p, s)| witness.at(p) == s));
    Ok(witness)
}
