//! Cellular automata: shift-commuting self-maps of a configuration space.
//!
//! Over a finite monoid a cellular automaton is stored as its full graph on
//! configuration indices (continuity is vacuous there). Over the integers it
//! is presented by a local rule of finite radius; two rules define the same
//! global map iff their tables agree after padding to a common radius.

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::catalog::MonoidSpec;
use crate::monoid::FiniteMonoid;
use crate::shift::{
    config_index, config_values, Alphabet, Configuration, PeriodicWord, ShiftError,
};
use crate::DEFAULT_ENUM_CAP;

/// Errors arising from cellular-automaton operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellularError {
    /// An array argument has the wrong length.
    #[error("expected an array of length {expected}, got {got}")]
    LengthMismatch {
        /// Required length.
        expected: usize,
        /// Provided length.
        got: usize,
    },
    /// An entry exceeds the valid index range.
    #[error("entry {value} at position {position} out of range for size {size}")]
    EntryOutOfRange {
        /// Position of the offending entry.
        position: usize,
        /// The out-of-range value.
        value: usize,
        /// Number of valid indices.
        size: usize,
    },
    /// Operands have different alphabets.
    #[error("operands have different alphabets")]
    AlphabetMismatch,
    /// Operands live over different monoids.
    #[error("operands are defined over different monoids")]
    MonoidMismatch,
    /// The graph does not commute with some shift.
    #[error(
        "map is not equivariant: fails on configuration {config} shifted by element {element}"
    )]
    NotEquivariant {
        /// The shifting element exhibiting the failure.
        element: usize,
        /// Index of a configuration on which the maps disagree.
        config: usize,
    },
    /// A set is not closed under the map being restricted.
    #[error("set is not closed under the map: the image of member {member} is outside the set")]
    NotClosed {
        /// Index of the member whose image escapes.
        member: usize,
    },
    /// An underlying shift-space error (symbol range, caps, ...).
    #[error(transparent)]
    Shift(#[from] ShiftError),
}

/// Computes `a^exp` guarded by the default enumeration cap.
fn space_size(alphabet: Alphabet, exp: usize, cap: usize) -> Result<usize, CellularError> {
    let mut n: u128 = 1;
    for _ in 0..exp {
        n = n.saturating_mul(alphabet.size() as u128);
        if n > cap as u128 {
            return Err(CellularError::Shift(ShiftError::CapExceeded {
                required: n,
                cap,
            }));
        }
    }
    Ok(n as usize)
}

/// For each monoid element `m`, the permutation-like table sending a
/// configuration index `i` to the index of the shifted configuration `m·x_i`.
fn shift_index_maps(monoid: &FiniteMonoid, alphabet: Alphabet, count: usize) -> Vec<Vec<usize>> {
    let size = monoid.size();
    monoid
        .elements()
        .map(|m| {
            (0..count)
                .map(|i| {
                    let values = config_values(i, size, alphabet);
                    let shifted: Vec<usize> =
                        (0..size).map(|mp| values[monoid.mul(mp, m)]).collect();
                    config_index(&shifted, alphabet)
                })
                .collect()
        })
        .collect()
}

/// Returns a witness if `graph` fails to commute with some shift.
fn equivariance_violation(sigma: &[Vec<usize>], graph: &[usize]) -> Option<(usize, usize)> {
    for (m, sig) in sigma.iter().enumerate() {
        for i in 0..graph.len() {
            if graph[sig[i]] != sig[graph[i]] {
                return Some((m, i));
            }
        }
    }
    None
}

/// Tests whether `graph` (a self-map of configuration indices) commutes with
/// every shift of `A^M`.
pub fn is_equivariant(
    monoid: &FiniteMonoid,
    alphabet: Alphabet,
    graph: &[usize],
) -> Result<bool, CellularError> {
    let count = space_size(alphabet, monoid.size(), DEFAULT_ENUM_CAP)?;
    if graph.len() != count {
        return Err(CellularError::LengthMismatch {
            expected: count,
            got: graph.len(),
        });
    }
    if let Some((position, &value)) = graph.iter().enumerate().find(|(_, &v)| v >= count) {
        return Err(CellularError::EntryOutOfRange {
            position,
            value,
            size: count,
        });
    }
    let sigma = shift_index_maps(monoid, alphabet, count);
    Ok(equivariance_violation(&sigma, graph).is_none())
}

/// A cellular automaton over a finite monoid: the full graph of a
/// shift-commuting self-map of `A^M`, on lexicographic configuration indices.
///
/// Serializes as `{"monoid": ..., "alphabet": a, "graph": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EquivariantMapWire")]
pub struct EquivariantMap {
    monoid: FiniteMonoid,
    alphabet: Alphabet,
    graph: Vec<usize>,
}

#[derive(Deserialize)]
struct EquivariantMapWire {
    monoid: MonoidSpec,
    alphabet: Alphabet,
    graph: Vec<usize>,
}

impl TryFrom<EquivariantMapWire> for EquivariantMap {
    type Error = CellularError;

    fn try_from(w: EquivariantMapWire) -> Result<Self, CellularError> {
        let monoid = w.monoid.resolve().map_err(ShiftError::from)?;
        EquivariantMap::new(monoid, w.alphabet, w.graph)
    }
}

impl EquivariantMap {
    /// Validates a graph as an equivariant self-map of `A^M`.
    pub fn new(
        monoid: FiniteMonoid,
        alphabet: Alphabet,
        graph: Vec<usize>,
    ) -> Result<Self, CellularError> {
        let count = space_size(alphabet, monoid.size(), DEFAULT_ENUM_CAP)?;
        if graph.len() != count {
            return Err(CellularError::LengthMismatch {
                expected: count,
                got: graph.len(),
            });
        }
        if let Some((position, &value)) = graph.iter().enumerate().find(|(_, &v)| v >= count) {
            return Err(CellularError::EntryOutOfRange {
                position,
                value,
                size: count,
            });
        }
        let sigma = shift_index_maps(&monoid, alphabet, count);
        if let Some((element, config)) = equivariance_violation(&sigma, &graph) {
            return Err(CellularError::NotEquivariant { element, config });
        }
        Ok(EquivariantMap {
            monoid,
            alphabet,
            graph,
        })
    }

    /// The identity automaton.
    pub fn identity(monoid: FiniteMonoid, alphabet: Alphabet) -> Result<Self, CellularError> {
        let count = space_size(alphabet, monoid.size(), DEFAULT_ENUM_CAP)?;
        Ok(EquivariantMap {
            monoid,
            alphabet,
            graph: (0..count).collect(),
        })
    }

    /// The acting monoid.
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    /// The alphabet.
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The graph on configuration indices.
    pub fn graph(&self) -> &[usize] {
        &self.graph
    }

    /// Image of a configuration index.
    pub fn apply_index(&self, i: usize) -> usize {
        self.graph[i]
    }

    /// Image of a configuration.
    pub fn apply(&self, x: &Configuration) -> Result<Configuration, CellularError> {
        if x.monoid() != &self.monoid {
            return Err(CellularError::MonoidMismatch);
        }
        self.alphabet.check_all(x.values())?;
        let i = config_index(x.values(), self.alphabet);
        let values = config_values(self.graph[i], self.monoid.size(), self.alphabet);
        Ok(Configuration::new(self.monoid.clone(), values).expect("index arithmetic"))
    }

    /// Composition: `self` applied after `other`.
    pub fn compose(&self, other: &EquivariantMap) -> Result<EquivariantMap, CellularError> {
        if self.monoid != other.monoid {
            return Err(CellularError::MonoidMismatch);
        }
        if self.alphabet != other.alphabet {
            return Err(CellularError::AlphabetMismatch);
        }
        let graph: Vec<usize> = other.graph.iter().map(|&i| self.graph[i]).collect();
        // Compositions of equivariant maps are equivariant.
        Ok(EquivariantMap {
            monoid: self.monoid.clone(),
            alphabet: self.alphabet,
            graph,
        })
    }

    /// Restricts the automaton to an invariant ordered set of configurations,
    /// as a self-map of positions in `xs`.
    pub fn restrict(&self, xs: &[Configuration]) -> Result<Transformation, CellularError> {
        let mut mapping = Vec::with_capacity(xs.len());
        for (member, x) in xs.iter().enumerate() {
            let image = self.apply(x)?;
            match xs.iter().position(|other| other == &image) {
                Some(j) => mapping.push(j),
                None => return Err(CellularError::NotClosed { member }),
            }
        }
        Ok(Transformation { mapping })
    }
}

/// Enumerates every cellular automaton over `A^M`, in lexicographic order of
/// graphs, under the default cap on `|A^M|`.
pub fn enumerate_ca(
    monoid: &FiniteMonoid,
    alphabet: Alphabet,
) -> Result<Vec<EquivariantMap>, CellularError> {
    enumerate_ca_with_cap(monoid, alphabet, DEFAULT_ENUM_CAP)
}

/// [`enumerate_ca`] with an explicit cap on `|A^M|`.
///
/// Backtracks over the image of the smallest unassigned configuration and
/// propagates each choice along shift orbits, so the search prunes far below
/// the `|A^M|^|A^M|` brute-force space. Beware that the result itself can
/// still be large (over the trivial monoid every self-map qualifies).
pub fn enumerate_ca_with_cap(
    monoid: &FiniteMonoid,
    alphabet: Alphabet,
    cap: usize,
) -> Result<Vec<EquivariantMap>, CellularError> {
    let count = space_size(alphabet, monoid.size(), cap)?;
    let sigma = shift_index_maps(monoid, alphabet, count);
    let mut out: Vec<EquivariantMap> = Vec::new();

    // Sets graph[i] = value and closes under graph[σ_m(j)] = σ_m(graph[j]);
    // errors if the closure contradicts an existing assignment.
    fn assign(
        sigma: &[Vec<usize>],
        graph: &mut [Option<usize>],
        i: usize,
        value: usize,
    ) -> Result<(), ()> {
        graph[i] = Some(value);
        let mut queue = vec![(i, value)];
        while let Some((j, v)) = queue.pop() {
            for sig in sigma {
                let j2 = sig[j];
                let v2 = sig[v];
                match graph[j2] {
                    Some(w) if w != v2 => return Err(()),
                    Some(_) => {}
                    None => {
                        graph[j2] = Some(v2);
                        queue.push((j2, v2));
                    }
                }
            }
        }
        Ok(())
    }

    fn dfs(
        sigma: &[Vec<usize>],
        count: usize,
        graph: Vec<Option<usize>>,
        monoid: &FiniteMonoid,
        alphabet: Alphabet,
        out: &mut Vec<EquivariantMap>,
    ) {
        let Some(i) = (0..count).find(|&i| graph[i].is_none()) else {
            let complete: Vec<usize> = graph.iter().map(|o| o.expect("all assigned")).collect();
            debug_assert!(equivariance_violation(sigma, &complete).is_none());
            out.push(EquivariantMap {
                monoid: monoid.clone(),
                alphabet,
                graph: complete,
            });
            return;
        };
        for value in 0..count {
            let mut trial = graph.clone();
            if assign(sigma, &mut trial, i, value).is_ok() {
                dfs(sigma, count, trial, monoid, alphabet, out);
            }
        }
    }

    dfs(&sigma, count, vec![None; count], monoid, alphabet, &mut out);
    out.sort_by(|a, b| a.graph.cmp(&b.graph));
    Ok(out)
}

/// The left-translation automaton `τ_m`: `(τ_m x)(m') = x(m·m')`.
///
/// These maps embed the monoid into `CA(M, A)` contravariantly:
/// `τ_{m1·m2} = τ_{m2} ∘ τ_{m1}`, and `m ↦ τ_m` is injective once the
/// alphabet has at least two symbols.
pub fn tau_m(
    monoid: &FiniteMonoid,
    alphabet: Alphabet,
    m: usize,
) -> Result<EquivariantMap, CellularError> {
    if m >= monoid.size() {
        return Err(CellularError::Shift(ShiftError::ElementOutOfRange {
            index: m,
            size: monoid.size(),
        }));
    }
    let count = space_size(alphabet, monoid.size(), DEFAULT_ENUM_CAP)?;
    let size = monoid.size();
    let graph = (0..count)
        .map(|i| {
            let values = config_values(i, size, alphabet);
            let translated: Vec<usize> = (0..size).map(|mp| values[monoid.mul(m, mp)]).collect();
            config_index(&translated, alphabet)
        })
        .collect();
    EquivariantMap::new(monoid.clone(), alphabet, graph)
}

/// A local rule of radius `r` over the integers: a lookup table from
/// `(2r+1)`-symbol windows (leftmost symbol most significant) to symbols.
///
/// Serializes as `{"radius": r, "alphabet": a, "table": [...]}`; the
/// shorthand `{"wolfram": N}` denotes the elementary (binary, radius-1) rule
/// with that Wolfram number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LocalRuleWire")]
pub struct LocalRule {
    radius: usize,
    alphabet: Alphabet,
    table: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LocalRuleWire {
    Wolfram {
        wolfram: u8,
    },
    Explicit {
        radius: usize,
        alphabet: Alphabet,
        table: Vec<usize>,
    },
}

impl TryFrom<LocalRuleWire> for LocalRule {
    type Error = CellularError;

    fn try_from(w: LocalRuleWire) -> Result<Self, CellularError> {
        match w {
            LocalRuleWire::Wolfram { wolfram } => Ok(LocalRule::elementary(wolfram)),
            LocalRuleWire::Explicit {
                radius,
                alphabet,
                table,
            } => LocalRule::new(radius, alphabet, table),
        }
    }
}

impl LocalRule {
    /// Validates a window table of the right length and symbol range.
    pub fn new(
        radius: usize,
        alphabet: Alphabet,
        table: Vec<usize>,
    ) -> Result<Self, CellularError> {
        let width = 2 * radius + 1;
        let expected = space_size(alphabet, width, DEFAULT_ENUM_CAP)?;
        if table.len() != expected {
            return Err(CellularError::LengthMismatch {
                expected,
                got: table.len(),
            });
        }
        alphabet.check_all(&table)?;
        Ok(LocalRule {
            radius,
            alphabet,
            table,
        })
    }

    /// The elementary rule with the given Wolfram number: binary alphabet,
    /// radius 1, output for window `(l, c, r)` read from bit `4l + 2c + r`.
    pub fn elementary(number: u8) -> LocalRule {
        let table = (0..8).map(|k| ((number >> k) & 1) as usize).collect();
        LocalRule {
            radius: 1,
            alphabet: Alphabet::new(2).expect("binary"),
            table,
        }
    }

    /// The radius-0 identity rule.
    pub fn identity(alphabet: Alphabet) -> LocalRule {
        LocalRule {
            radius: 0,
            alphabet,
            table: (0..alphabet.size()).collect(),
        }
    }

    /// The Wolfram number, if this is a binary radius-1 rule.
    pub fn wolfram_number(&self) -> Option<u8> {
        if self.radius == 1 && self.alphabet.size() == 2 {
            Some(
                self.table
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (k, &v)| acc | ((v as u8) << k)),
            )
        } else {
            None
        }
    }

    /// The rule's radius.
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// The alphabet.
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The window table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Applies the rule to a periodic configuration; the result keeps the
    /// stored period and commutes with rotation.
    pub fn apply(&self, y: &PeriodicWord) -> Result<PeriodicWord, CellularError> {
        self.alphabet.check_all(y.word())?;
        let r = self.radius as i64;
        let word = (0..y.period() as i64)
            .map(|k| {
                let window: Vec<usize> = (-r..=r).map(|d| y.at(k + d)).collect();
                self.table[config_index(&window, self.alphabet)]
            })
            .collect();
        Ok(PeriodicWord::new(word).expect("period preserved"))
    }

    /// Composition: `self` applied after `other`. The radius grows to the
    /// sum of the radii.
    pub fn compose(&self, other: &LocalRule) -> Result<LocalRule, CellularError> {
        if self.alphabet != other.alphabet {
            return Err(CellularError::AlphabetMismatch);
        }
        let radius = self.radius + other.radius;
        let width = 2 * radius + 1;
        let count = space_size(self.alphabet, width, DEFAULT_ENUM_CAP)?;
        let inner_width = 2 * other.radius + 1;
        let table = (0..count)
            .map(|i| {
                let window = config_values(i, width, self.alphabet);
                let mid: Vec<usize> = (0..2 * self.radius + 1)
                    .map(|off| {
                        other.table[config_index(&window[off..off + inner_width], other.alphabet)]
                    })
                    .collect();
                self.table[config_index(&mid, self.alphabet)]
            })
            .collect();
        Ok(LocalRule {
            radius,
            alphabet: self.alphabet,
            table,
        })
    }

    /// The same global map presented at a larger radius: each padded window
    /// consults only its central part.
    pub fn pad_to(&self, radius: usize) -> LocalRule {
        assert!(radius >= self.radius, "can only pad to a larger radius");
        if radius == self.radius {
            return self.clone();
        }
        let width = 2 * radius + 1;
        let count = space_size(self.alphabet, width, usize::MAX).expect("no cap when padding");
        let margin = radius - self.radius;
        let inner_width = 2 * self.radius + 1;
        let table = (0..count)
            .map(|i| {
                let window = config_values(i, width, self.alphabet);
                self.table[config_index(&window[margin..margin + inner_width], self.alphabet)]
            })
            .collect();
        LocalRule {
            radius,
            alphabet: self.alphabet,
            table,
        }
    }

    /// Restricts the induced global map to an ordered set of periodic words,
    /// as a self-map of positions in `xs`.
    pub fn restrict(&self, xs: &[PeriodicWord]) -> Result<Transformation, CellularError> {
        let mut mapping = Vec::with_capacity(xs.len());
        for (member, x) in xs.iter().enumerate() {
            let image = self.apply(x)?;
            match xs.iter().position(|other| other == &image) {
                Some(j) => mapping.push(j),
                None => return Err(CellularError::NotClosed { member }),
            }
        }
        Ok(Transformation { mapping })
    }
}

/// Whether two local rules define the same global map on `A^ℤ`: pad the
/// smaller radius up and compare tables entrywise.
pub fn rules_equal(r1: &LocalRule, r2: &LocalRule) -> Result<bool, CellularError> {
    if r1.alphabet != r2.alphabet {
        return Err(CellularError::AlphabetMismatch);
    }
    let radius = r1.radius.max(r2.radius);
    Ok(r1.pad_to(radius).table == r2.pad_to(radius).table)
}

/// A self-map of a finite indexed set, e.g. a cellular automaton restricted
/// to a finite invariant set of configurations.
///
/// Serializes as the bare mapping array.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "Vec<usize>")]
pub struct Transformation {
    mapping: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Transformation {
    type Error = CellularError;

    fn try_from(mapping: Vec<usize>) -> Result<Self, CellularError> {
        Transformation::new(mapping)
    }
}

impl Serialize for Transformation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.mapping.len()))?;
        for v in &self.mapping {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl Transformation {
    /// Validates a mapping array (entries index back into the same set).
    pub fn new(mapping: Vec<usize>) -> Result<Self, CellularError> {
        let size = mapping.len();
        if let Some((position, &value)) = mapping.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(CellularError::EntryOutOfRange {
                position,
                value,
                size,
            });
        }
        Ok(Transformation { mapping })
    }

    /// The identity self-map of a set of `n` points.
    pub fn identity(n: usize) -> Transformation {
        Transformation {
            mapping: (0..n).collect(),
        }
    }

    /// Number of points.
    pub fn domain_size(&self) -> usize {
        self.mapping.len()
    }

    /// The mapping array.
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    /// Image of one point.
    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i]
    }

    /// Composition: `self` applied after `other`.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation, CellularError> {
        if self.mapping.len() != other.mapping.len() {
            return Err(CellularError::LengthMismatch {
                expected: self.mapping.len(),
                got: other.mapping.len(),
            });
        }
        Ok(Transformation {
            mapping: other.mapping.iter().map(|&i| self.mapping[i]).collect(),
        })
    }
}
