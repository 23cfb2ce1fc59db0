//! Finite monoids presented by multiplication tables, their morphisms,
//! congruence relations, and quotients.
//!
//! Elements are dense indices `0..size`; the identity element is stored
//! explicitly. All enumerations return lexicographically ordered results so
//! downstream certificates are deterministic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors arising from monoid construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    /// The multiplication table has no rows.
    #[error("multiplication table is empty")]
    Empty,
    /// A row of the multiplication table has the wrong length.
    #[error("table is not square: row {row} has length {len}, expected {size}")]
    NotSquare {
        /// Offending row index.
        row: usize,
        /// Actual length of that row.
        len: usize,
        /// Expected length (the number of rows).
        size: usize,
    },
    /// A table entry is not a valid element index.
    #[error("table entry out of range: table[{i}][{j}] = {value} but size is {size}")]
    EntryOutOfRange {
        /// Row of the offending entry.
        i: usize,
        /// Column of the offending entry.
        j: usize,
        /// The out-of-range value.
        value: usize,
        /// Number of elements.
        size: usize,
    },
    /// An element index does not name an element.
    #[error("element index {index} out of range for size {size}")]
    ElementOutOfRange {
        /// The offending index.
        index: usize,
        /// Number of elements.
        size: usize,
    },
    /// The declared identity fails an identity law.
    #[error("element {identity} is not a two-sided identity: fails at element {witness}")]
    BadIdentity {
        /// The declared identity element.
        identity: usize,
        /// An element on which an identity law fails.
        witness: usize,
    },
    /// The table fails associativity.
    #[error("product not associative at ({i}·{j})·{k} vs {i}·({j}·{k})")]
    NotAssociative {
        /// First element of the witness triple.
        i: usize,
        /// Second element of the witness triple.
        j: usize,
        /// Third element of the witness triple.
        k: usize,
    },
    /// A declared `size` field disagrees with the table.
    #[error("declared size {declared} does not match table size {actual}")]
    SizeMismatch {
        /// The declared size.
        declared: usize,
        /// The table's row count.
        actual: usize,
    },
    /// An array argument has the wrong length.
    #[error("expected an array of length {expected}, got {got}")]
    LengthMismatch {
        /// Required length.
        expected: usize,
        /// Provided length.
        got: usize,
    },
    /// Class labels are not compatible with multiplication.
    #[error("not a congruence: {a} ≡ {b} but translation by {s} separates them")]
    NotCongruence {
        /// Translating element.
        s: usize,
        /// First element of the congruent pair.
        a: usize,
        /// Second element of the congruent pair.
        b: usize,
    },
    /// The image array fails the morphism equation.
    #[error("morphism equation fails at pair ({s1}, {s2})")]
    NotMorphism {
        /// First element of the witness pair.
        s1: usize,
        /// Second element of the witness pair.
        s2: usize,
    },
    /// Two operands live over different monoids.
    #[error("operands are defined over different monoids")]
    MonoidMismatch,
    /// A name does not appear in the built-in catalog.
    #[error("unknown catalog monoid {name:?} (available: {available})")]
    UnknownCatalogName {
        /// The unresolved name.
        name: String,
        /// Comma-separated list of valid names.
        available: String,
    },
}

/// A finite monoid given by its full multiplication table.
///
/// `table[i][j]` is the index of the product `i·j`. Construction validates
/// associativity and the identity laws, so every value of this type is a
/// genuine monoid.
///
/// Serializes as `{"size": n, "identity": i, "table": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MonoidWire")]
pub struct FiniteMonoid {
    size: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct MonoidWire {
    size: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<MonoidWire> for FiniteMonoid {
    type Error = MonoidError;

    fn try_from(w: MonoidWire) -> Result<Self, MonoidError> {
        if w.size != w.table.len() {
            return Err(MonoidError::SizeMismatch {
                declared: w.size,
                actual: w.table.len(),
            });
        }
        FiniteMonoid::new(w.table, w.identity)
    }
}

impl FiniteMonoid {
    /// Validates a multiplication table and identity element.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, MonoidError> {
        let size = table.len();
        if size == 0 {
            return Err(MonoidError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != size {
                return Err(MonoidError::NotSquare {
                    row,
                    len: r.len(),
                    size,
                });
            }
        }
        for (i, r) in table.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                if v >= size {
                    return Err(MonoidError::EntryOutOfRange {
                        i,
                        j,
                        value: v,
                        size,
                    });
                }
            }
        }
        if identity >= size {
            return Err(MonoidError::ElementOutOfRange {
                index: identity,
                size,
            });
        }
        if let Some(x) = (0..size).find(|&x| table[identity][x] != x || table[x][identity] != x) {
            return Err(MonoidError::BadIdentity {
                identity,
                witness: x,
            });
        }
        for i in 0..size {
            for j in 0..size {
                for k in 0..size {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(MonoidError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(FiniteMonoid {
            size,
            identity,
            table,
        })
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Index of the identity element.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// The product `a·b`. Panics if an index is out of range.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The full multiplication table.
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// The opposite monoid: same elements, product reversed.
    ///
    /// An involution: `m.opposite().opposite() == m`.
    pub fn opposite(&self) -> FiniteMonoid {
        let table = (0..self.size)
            .map(|i| (0..self.size).map(|j| self.table[j][i]).collect())
            .collect();
        // Transposing preserves associativity and the (two-sided) identity.
        FiniteMonoid {
            size: self.size,
            identity: self.identity,
            table,
        }
    }

    /// Marks every element reachable from `gens` (and the identity) under
    /// products.
    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut reached = vec![false; self.size];
        reached[self.identity] = true;
        for &g in gens {
            reached[g] = true;
        }
        loop {
            let known: Vec<usize> = (0..self.size).filter(|&i| reached[i]).collect();
            let mut grew = false;
            for &a in &known {
                for &b in &known {
                    let p = self.table[a][b];
                    if !reached[p] {
                        reached[p] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                return reached;
            }
        }
    }

    /// A greedy-minimal generating set.
    ///
    /// Repeatedly adds the smallest unreachable element, then drops every
    /// element whose removal keeps the set generating. The identity is never
    /// listed (it is always reachable), so the trivial monoid yields `[]`.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        loop {
            let reached = self.closure(&gens);
            match (0..self.size).find(|&i| !reached[i]) {
                Some(missing) => gens.push(missing),
                None => break,
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let mut trial = gens.clone();
            trial.remove(i);
            if self.closure(&trial).iter().all(|&r| r) {
                gens.remove(i);
            } else {
                i += 1;
            }
        }
        gens
    }
}

/// Returns a translation witness if the labels fail compatibility, i.e. some
/// `a ≡ b` with `s·a ≢ s·b` or `a·s ≢ b·s`.
fn congruence_violation(m: &FiniteMonoid, labels: &[usize]) -> Option<(usize, usize, usize)> {
    let n = m.size();
    for a in 0..n {
        for b in (a + 1)..n {
            if labels[a] != labels[b] {
                continue;
            }
            for s in 0..n {
                if labels[m.mul(s, a)] != labels[m.mul(s, b)]
                    || labels[m.mul(a, s)] != labels[m.mul(b, s)]
                {
                    return Some((s, a, b));
                }
            }
        }
    }
    None
}

/// Tests whether an arbitrary labelling of elements (equal label = same
/// class) is a congruence: an equivalence compatible with translation on
/// both sides.
///
/// Errors only on a length mismatch; the labels themselves may use any
/// values.
pub fn is_congruence(m: &FiniteMonoid, labels: &[usize]) -> Result<bool, MonoidError> {
    if labels.len() != m.size() {
        return Err(MonoidError::LengthMismatch {
            expected: m.size(),
            got: labels.len(),
        });
    }
    Ok(congruence_violation(m, labels).is_none())
}

/// A congruence on a finite monoid, stored as a class-index array.
///
/// Classes are numbered canonically by first occurrence (element 0 is always
/// in class 0), so two equal partitions compare equal field-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    monoid: FiniteMonoid,
    class_of: Vec<usize>,
    index: usize,
}

/// Relabels classes by first occurrence; returns the canonical array and the
/// number of classes.
fn canonicalize(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut seen: Vec<usize> = Vec::new();
    let class_of = labels
        .iter()
        .map(|&l| match seen.iter().position(|&s| s == l) {
            Some(c) => c,
            None => {
                seen.push(l);
                seen.len() - 1
            }
        })
        .collect();
    (class_of, seen.len())
}

impl Congruence {
    /// Validates a labelling as a congruence and stores it canonically.
    pub fn new(monoid: &FiniteMonoid, labels: &[usize]) -> Result<Self, MonoidError> {
        if labels.len() != monoid.size() {
            return Err(MonoidError::LengthMismatch {
                expected: monoid.size(),
                got: labels.len(),
            });
        }
        if let Some((s, a, b)) = congruence_violation(monoid, labels) {
            return Err(MonoidError::NotCongruence { s, a, b });
        }
        let (class_of, index) = canonicalize(labels);
        Ok(Congruence {
            monoid: monoid.clone(),
            class_of,
            index,
        })
    }

    /// The finest congruence: every element in its own class.
    pub fn identity_congruence(monoid: &FiniteMonoid) -> Self {
        Congruence {
            monoid: monoid.clone(),
            class_of: (0..monoid.size()).collect(),
            index: monoid.size(),
        }
    }

    /// The coarsest congruence: all elements in one class.
    pub fn full_congruence(monoid: &FiniteMonoid) -> Self {
        Congruence {
            monoid: monoid.clone(),
            class_of: vec![0; monoid.size()],
            index: 1,
        }
    }

    /// The monoid this congruence lives on.
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    /// The canonical class-index array.
    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    /// Number of classes.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Whether `a` and `b` are congruent.
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// The smallest element of class `c`.
    pub fn representative(&self, c: usize) -> usize {
        // Classes are numbered by first occurrence, so the first element
        // carrying label c is also the smallest.
        self.class_of
            .iter()
            .position(|&l| l == c)
            .expect("class index in range")
    }

    /// The common refinement: congruent here iff congruent in both inputs.
    ///
    /// The index is at most `self.index() * other.index()`.
    pub fn intersect(&self, other: &Congruence) -> Result<Congruence, MonoidError> {
        if self.monoid != other.monoid {
            return Err(MonoidError::MonoidMismatch);
        }
        let labels: Vec<usize> = (0..self.monoid.size())
            .map(|s| self.class_of[s] * other.index + other.class_of[s])
            .collect();
        Congruence::new(&self.monoid, &labels)
    }

    /// The quotient monoid together with the projection morphism.
    pub fn quotient(&self) -> QuotientResult {
        let table: Vec<Vec<usize>> = (0..self.index)
            .map(|c1| {
                let r1 = self.representative(c1);
                (0..self.index)
                    .map(|c2| self.class_of[self.monoid.mul(r1, self.representative(c2))])
                    .collect()
            })
            .collect();
        let quotient = FiniteMonoid::new(table, self.class_of[self.monoid.identity()])
            .expect("a quotient of a monoid by a congruence is a monoid");
        let projection =
            SemigroupMorphism::new(self.monoid.clone(), quotient.clone(), self.class_of.clone())
                .expect("the projection onto classes is a morphism");
        QuotientResult {
            quotient,
            projection,
        }
    }
}

/// A quotient monoid together with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    /// The quotient monoid; element `c` is the class numbered `c`.
    pub quotient: FiniteMonoid,
    /// The surjection sending each element to its class.
    pub projection: SemigroupMorphism,
}

/// A morphism of finite monoids-as-semigroups, stored as an image array.
///
/// Construction validates the morphism equation on all pairs. The `monoidal`
/// flag records whether the identity maps to the identity (it is derived, not
/// chosen).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupMorphism {
    source: FiniteMonoid,
    target: FiniteMonoid,
    images: Vec<usize>,
    monoidal: bool,
}

/// Returns a witness pair if the image array violates the morphism equation.
fn morphism_violation(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    images: &[usize],
) -> Option<(usize, usize)> {
    for s1 in 0..source.size() {
        for s2 in 0..source.size() {
            if images[source.mul(s1, s2)] != target.mul(images[s1], images[s2]) {
                return Some((s1, s2));
            }
        }
    }
    None
}

impl SemigroupMorphism {
    /// Validates an image array as a semigroup morphism.
    pub fn new(
        source: FiniteMonoid,
        target: FiniteMonoid,
        images: Vec<usize>,
    ) -> Result<Self, MonoidError> {
        if images.len() != source.size() {
            return Err(MonoidError::LengthMismatch {
                expected: source.size(),
                got: images.len(),
            });
        }
        if let Some(&v) = images.iter().find(|&&v| v >= target.size()) {
            return Err(MonoidError::ElementOutOfRange {
                index: v,
                size: target.size(),
            });
        }
        if let Some((s1, s2)) = morphism_violation(&source, &target, &images) {
            return Err(MonoidError::NotMorphism { s1, s2 });
        }
        let monoidal = images[source.identity()] == target.identity();
        Ok(SemigroupMorphism {
            source,
            target,
            images,
            monoidal,
        })
    }

    /// The identity morphism on `m`.
    pub fn identity_morphism(m: &FiniteMonoid) -> Self {
        SemigroupMorphism {
            source: m.clone(),
            target: m.clone(),
            images: (0..m.size()).collect(),
            monoidal: true,
        }
    }

    /// The constant morphism onto `value`, which must be idempotent.
    pub fn constant(
        source: FiniteMonoid,
        target: FiniteMonoid,
        value: usize,
    ) -> Result<Self, MonoidError> {
        let images = vec![value; source.size()];
        SemigroupMorphism::new(source, target, images)
    }

    /// Source monoid.
    pub fn source(&self) -> &FiniteMonoid {
        &self.source
    }

    /// Target monoid.
    pub fn target(&self) -> &FiniteMonoid {
        &self.target
    }

    /// Image array, indexed by source elements.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Whether the identity maps to the identity.
    pub fn is_monoidal(&self) -> bool {
        self.monoidal
    }

    /// Image of one element.
    pub fn apply(&self, s: usize) -> usize {
        self.images[s]
    }

    /// Whether every target element is hit.
    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &v in &self.images {
            hit[v] = true;
        }
        hit.iter().all(|&h| h)
    }

    /// Whether distinct elements have distinct images.
    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.images {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// The kernel relation: elements are congruent iff they share an image.
    pub fn kernel(&self) -> Congruence {
        Congruence::new(&self.source, &self.images)
            .expect("a kernel relation is always a congruence")
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SemigroupMorphism) -> Result<SemigroupMorphism, MonoidError> {
        if other.target != self.source {
            return Err(MonoidError::MonoidMismatch);
        }
        let images = other.images.iter().map(|&s| self.images[s]).collect();
        SemigroupMorphism::new(other.source.clone(), self.target.clone(), images)
    }
}

/// Assigns images to all remaining elements forced by the partial assignment,
/// failing on any conflict with the morphism equation.
fn propagate(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    img: &mut [Option<usize>],
) -> Result<(), ()> {
    loop {
        let known: Vec<usize> = (0..source.size()).filter(|&i| img[i].is_some()).collect();
        let mut grew = false;
        for &a in &known {
            for &b in &known {
                let p = source.mul(a, b);
                let q = target.mul(img[a].unwrap(), img[b].unwrap());
                match img[p] {
                    Some(v) if v != q => return Err(()),
                    Some(_) => {}
                    None => {
                        img[p] = Some(q);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return Ok(());
        }
    }
}

/// Enumerates all morphisms `source → target`, in lexicographic order of
/// their image arrays.
///
/// With `monoidal = true` only maps sending identity to identity are
/// returned. Small sources (size ≤ 4) are scanned exhaustively; larger ones
/// are solved by backtracking over the images of a generating set (plus the
/// identity), propagating products to the whole monoid and pruning on
/// conflict.
pub fn enumerate_morphisms(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    monoidal: bool,
) -> Vec<SemigroupMorphism> {
    let n = source.size();
    let t = target.size();
    let mut out: Vec<SemigroupMorphism> = Vec::new();

    if n <= 4 {
        // Full scan over all t^n image arrays.
        let mut images = vec![0usize; n];
        'scan: loop {
            let monoidal_ok = !monoidal || images[source.identity()] == target.identity();
            if monoidal_ok && morphism_violation(source, target, &images).is_none() {
                out.push(
                    SemigroupMorphism::new(source.clone(), target.clone(), images.clone())
                        .expect("scanned image array validated"),
                );
            }
            let mut k = n;
            loop {
                if k == 0 {
                    break 'scan;
                }
                k -= 1;
                images[k] += 1;
                if images[k] < t {
                    break;
                }
                images[k] = 0;
            }
        }
    } else {
        let mut slots = vec![source.identity()];
        slots.extend(
            source
                .generating_set()
                .into_iter()
                .filter(|&g| g != source.identity()),
        );
        let mut img: Vec<Option<usize>> = vec![None; n];
        search(source, target, monoidal, &slots, 0, &mut img, &mut out);
    }

    out.sort_by(|a, b| a.images.cmp(&b.images));
    out
}

/// Depth-first assignment of images to `slots`, with propagation.
fn search(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    monoidal: bool,
    slots: &[usize],
    at: usize,
    img: &mut Vec<Option<usize>>,
    out: &mut Vec<SemigroupMorphism>,
) {
    if at == slots.len() {
        let images: Vec<usize> = img
            .iter()
            .map(|o| o.expect("slots generate the source, so propagation fills every image"))
            .collect();
        out.push(
            SemigroupMorphism::new(source.clone(), target.clone(), images)
                .expect("propagation only completes on morphism-consistent assignments"),
        );
        return;
    }
    let s = slots[at];
    if img[s].is_some() {
        search(source, target, monoidal, slots, at + 1, img, out);
        return;
    }
    for candidate in 0..target.size() {
        if monoidal && s == source.identity() && candidate != target.identity() {
            continue;
        }
        let mut trial = img.clone();
        trial[s] = Some(candidate);
        if propagate(source, target, &mut trial).is_ok() {
            search(source, target, monoidal, slots, at + 1, &mut trial, out);
        }
    }
}

/// Enumerates every congruence on `m` by brute force over set partitions.
///
/// The number of partitions is the Bell number of `m.size()`, so this is a
/// desk-scale tool (fine up to size ~10).
pub fn enumerate_congruences(m: &FiniteMonoid) -> Vec<Congruence> {
    fn rec(m: &FiniteMonoid, labels: &mut Vec<usize>, pos: usize, out: &mut Vec<Congruence>) {
        let n = m.size();
        if pos == n {
            if congruence_violation(m, labels).is_none() {
                out.push(Congruence::new(m, labels).expect("violation-free labels"));
            }
            return;
        }
        let next_free = labels[..pos].iter().max().copied().unwrap_or(0) + 1;
        for c in 0..=next_free.min(pos) {
            labels[pos] = c;
            rec(m, labels, pos + 1, out);
        }
    }
    let mut labels = vec![0usize; m.size()];
    let mut out = Vec::new();
    rec(m, &mut labels, 1, &mut out);
    out
}
