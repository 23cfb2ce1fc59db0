//! A small catalog of built-in monoids addressable by name, plus the
//! name-or-inline JSON convention used by configuration and map formats.

use serde::Deserialize;

use crate::monoid::{FiniteMonoid, MonoidError};

/// Names of the built-in monoids, in catalog order.
pub fn names() -> &'static [&'static str] {
    &["trivial", "z2", "z3", "z6", "sl2", "lz3"]
}

/// One-line description for a catalog name, if it exists.
pub fn describe(name: &str) -> Option<&'static str> {
    match name {
        "trivial" => Some("the one-element monoid"),
        "z2" => Some("cyclic group of order 2"),
        "z3" => Some("cyclic group of order 3"),
        "z6" => Some("cyclic group of order 6"),
        "sl2" => Some("two-element semilattice (identity plus absorbing element)"),
        "lz3" => Some("identity adjoined to the two-element left-zero semigroup"),
        _ => None,
    }
}

/// Looks up a built-in monoid by name.
pub fn by_name(name: &str) -> Option<FiniteMonoid> {
    match name {
        "trivial" => Some(trivial()),
        "z2" => Some(cyclic(2)),
        "z3" => Some(cyclic(3)),
        "z6" => Some(cyclic(6)),
        "sl2" => Some(semilattice_two()),
        "lz3" => Some(left_zero_three()),
        _ => None,
    }
}

/// The one-element monoid.
pub fn trivial() -> FiniteMonoid {
    FiniteMonoid::new(vec![vec![0]], 0).expect("trivial table is a monoid")
}

/// The cyclic group of order `n` written additively: `i·j = (i+j) mod n`.
pub fn cyclic(n: usize) -> FiniteMonoid {
    assert!(n >= 1, "cyclic group needs at least one element");
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteMonoid::new(table, 0).expect("modular addition is a group")
}

/// The two-element semilattice: identity 0 and an absorbing element 1.
pub fn semilattice_two() -> FiniteMonoid {
    FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]], 0).expect("semilattice table is a monoid")
}

/// Identity 0 adjoined to the left-zero semigroup on {1, 2}: `x·y = x` there.
pub fn left_zero_three() -> FiniteMonoid {
    FiniteMonoid::new(vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]], 0)
        .expect("left-zero table is a monoid")
}

/// A monoid referenced either by catalog name or by an inline table, as it
/// appears in JSON inputs.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MonoidSpec {
    /// A catalog name such as `"z6"`.
    Name(String),
    /// A full inline `{"size", "identity", "table"}` object.
    Inline(FiniteMonoid),
}

impl MonoidSpec {
    /// Resolves the reference to a concrete monoid.
    pub fn resolve(&self) -> Result<FiniteMonoid, MonoidError> {
        match self {
            MonoidSpec::Name(name) => {
                by_name(name).ok_or_else(|| MonoidError::UnknownCatalogName {
                    name: name.clone(),
                    available: names().join(", "),
                })
            }
            MonoidSpec::Inline(m) => Ok(m.clone()),
        }
    }
}
