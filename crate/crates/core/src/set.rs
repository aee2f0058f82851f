//! Canonical σ-set values: elements, structural equality, membership, the
//! star involution and the antielement relation.
//!
//! Every [`SigmaSet`] is kept in canonical form: members sorted by the total
//! order below, no duplicates, and exclusion-clean (no two co-members are
//! antielements of each other). Equality is then plain structural equality.
//!
//! The canonical total order: atoms before sets; atoms by (name, polarity)
//! with theta < plain < starred; sets by cardinality, then lexicographically
//! over their ordered members.

use crate::atom::{Atom, Polarity};
use crate::error::Error;
use std::cmp::Ordering;
use std::fmt;

/// A σ-set member: an atom or a nested σ-set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Atom(Atom),
    Set(SigmaSet),
}

/// A canonical finite σ-set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SigmaSet {
    members: Vec<Element>,
}

/// Outcome of the star involution. `Undefined` carries the first blocking
/// theta atom encountered in canonical scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarResult {
    Defined(Element),
    Undefined(Element),
}

impl StarResult {
    pub fn defined(self) -> Option<Element> {
        match self {
            StarResult::Defined(e) => Some(e),
            StarResult::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, StarResult::Defined(_))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Element::Atom(a), Element::Atom(b)) => a.cmp(b),
            (Element::Atom(_), Element::Set(_)) => Ordering::Less,
            (Element::Set(_), Element::Atom(_)) => Ordering::Greater,
            (Element::Set(a), Element::Set(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SigmaSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for SigmaSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Element {
    pub fn plain(name: impl Into<String>) -> Self {
        Element::Atom(Atom::plain(name))
    }

    pub fn starred(name: impl Into<String>) -> Self {
        Element::Atom(Atom::starred(name))
    }

    pub fn theta(name: impl Into<String>) -> Self {
        Element::Atom(Atom::theta(name))
    }

    pub fn empty_set() -> Self {
        Element::Set(SigmaSet::empty())
    }

    pub fn as_set(&self) -> Option<&SigmaSet> {
        match self {
            Element::Set(s) => Some(s),
            Element::Atom(_) => None,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Element::Atom(_))
    }

    /// Nesting depth: 0 for atoms, 1 + deepest member for sets (so the empty
    /// set has depth 1).
    pub fn depth(&self) -> u32 {
        match self {
            Element::Atom(_) => 0,
            Element::Set(s) => 1 + s.iter().map(Element::depth).max().unwrap_or(0),
        }
    }

    /// The σ-antielement of this element, when one exists.
    ///
    /// Only polar atoms have antielements: the same-name atom of opposite
    /// polarity. Theta atoms, the empty set and composite sets have none —
    /// 3^A holds both {1} and {1*} as co-members, and {∅}∪{A} = {∅,A} for
    /// every A, so neither sets nor ∅ ever annihilate. This is the relation
    /// that drives annihilation in fusion and the exclusion check.
    pub fn antielement(&self) -> Option<Element> {
        match self {
            Element::Atom(a) => a.opposite().map(Element::Atom),
            Element::Set(_) => None,
        }
    }

    /// The star involution: atoms swap polarity, sets map memberwise.
    /// Undefined exactly when a theta atom occurs at any depth.
    ///
    /// On atoms this coincides with [`Element::antielement`]; on sets it is
    /// the antiset map (memberwise star), which exists as a value even where
    /// no antielement does.
    pub fn star(&self) -> StarResult {
        match self {
            Element::Atom(a) => match a.opposite() {
                Some(op) => StarResult::Defined(Element::Atom(op)),
                None => StarResult::Undefined(self.clone()),
            },
            Element::Set(s) => {
                let mut starred = Vec::with_capacity(s.cardinality());
                for m in s.iter() {
                    match m.star() {
                        StarResult::Defined(e) => starred.push(e),
                        undefined @ StarResult::Undefined(_) => return undefined,
                    }
                }
                // Star is injective where defined, so no duplicates can
                // appear, and a clash star(a) = star(b)* in the image would
                // pull back to a clash in the source set.
                let set = SigmaSet::new(starred).expect("star of a canonical set is canonical");
                StarResult::Defined(Element::Set(set))
            }
        }
    }
}

impl SigmaSet {
    /// The empty σ-set.
    pub fn empty() -> Self {
        SigmaSet::default()
    }

    /// Canonicalizing constructor: sorts, removes duplicates and rejects
    /// collections holding both an element and its antielement.
    pub fn new(mut members: Vec<Element>) -> Result<Self, Error> {
        members.sort();
        members.dedup();
        for m in &members {
            if let Some(anti) = m.antielement() {
                if members.binary_search(&anti).is_ok() {
                    return Err(Error::ExclusionViolation {
                        element: m.clone(),
                        antielement: anti,
                    });
                }
            }
        }
        Ok(SigmaSet { members })
    }

    pub fn singleton(e: Element) -> Self {
        SigmaSet { members: vec![e] }
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.members.iter()
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    /// Membership by structural equality.
    pub fn contains(&self, e: &Element) -> bool {
        self.members.binary_search(e).is_ok()
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn subset_of(&self, other: &SigmaSet) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// Re-verifies the exclusion invariant; used by the harness on produced
    /// values.
    pub fn is_exclusion_clean(&self) -> bool {
        self.members.iter().all(|m| match m.antielement() {
            Some(anti) => self.members.binary_search(&anti).is_err(),
            None => true,
        })
    }

    pub fn into_element(self) -> Element {
        Element::Set(self)
    }
}

impl From<SigmaSet> for Element {
    fn from(s: SigmaSet) -> Self {
        Element::Set(s)
    }
}

impl From<Atom> for Element {
    fn from(a: Atom) -> Self {
        Element::Atom(a)
    }
}

impl<'a> IntoIterator for &'a SigmaSet {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Atom(a) => a.fmt(f),
            Element::Set(s) => s.fmt(f),
        }
    }
}

/// Canonical text rendering: `{}` for the empty set, members in canonical
/// order separated by `", "`. This is the byte-exact contract for golden
/// files.
impl fmt::Display for SigmaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Convenience check used by atoms-or-sets code paths.
pub fn is_theta_atom(e: &Element) -> bool {
    matches!(e, Element::Atom(a) if a.polarity() == Polarity::Theta)
}
