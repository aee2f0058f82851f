//! Atoms: the opaque leaves of every σ-set.

use std::fmt;

/// Polarity of an atom. Theta atoms have no antielement and survive every
/// fusion; plain and starred atoms of the same name annihilate each other.
///
/// The declaration order fixes the canonical order: theta < plain < starred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Theta,
    Plain,
    Starred,
}

/// An opaque named generator. Two atoms are equal iff name and polarity are
/// equal; their internal structure is never inspected.
///
/// Atoms are ordered by (name, polarity), which together with the set order
/// in [`crate::SigmaSet`] fixes the canonical form of every value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    name: String,
    polarity: Polarity,
}

impl Atom {
    /// Builds an atom. Names must match the identifier grammar `[A-Za-z0-9]+`.
    pub fn new(name: impl Into<String>, polarity: Polarity) -> Self {
        let name = name.into();
        assert!(
            is_valid_name(&name),
            "atom name {name:?} must match [A-Za-z0-9]+"
        );
        Atom { name, polarity }
    }

    pub fn plain(name: impl Into<String>) -> Self {
        Atom::new(name, Polarity::Plain)
    }

    pub fn starred(name: impl Into<String>) -> Self {
        Atom::new(name, Polarity::Starred)
    }

    pub fn theta(name: impl Into<String>) -> Self {
        Atom::new(name, Polarity::Theta)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// The same-name atom of opposite polarity, or `None` for theta atoms.
    pub fn opposite(&self) -> Option<Atom> {
        let polarity = match self.polarity {
            Polarity::Plain => Polarity::Starred,
            Polarity::Starred => Polarity::Plain,
            Polarity::Theta => return None,
        };
        Some(Atom {
            name: self.name.clone(),
            polarity,
        })
    }
}

/// Identifier grammar shared with the expression language.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric())
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Theta => write!(f, "{}_T", self.name),
            Polarity::Plain => write!(f, "{}", self.name),
            Polarity::Starred => write!(f, "{}*", self.name),
        }
    }
}
