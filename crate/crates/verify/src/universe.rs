//! Bounded universes: deterministic enumeration of all canonical,
//! exclusion-clean values up to a depth and width, driving the brute-force
//! theorem checks.

use crate::VerifyError;
use sigma_core::{Element, SigmaSet};

/// Enumeration cap when nothing else is configured.
pub const DEFAULT_MAX_CARD: usize = 100_000;

/// An enumeration specification. Every plain name contributes both the
/// plain and the starred atom; theta names contribute theta atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    pub plain: Vec<String>,
    pub theta: Vec<String>,
    pub max_depth: u32,
    pub max_width: usize,
}

impl Universe {
    pub fn new(
        plain: Vec<String>,
        theta: Vec<String>,
        max_depth: u32,
        max_width: usize,
    ) -> Self {
        Universe {
            plain,
            theta,
            max_depth,
            max_width,
        }
    }

    /// The default desk-scale universe: plain atoms 1, 2, 3 and one theta
    /// atom, depth 1, width 3.
    pub fn default_universe() -> Self {
        Universe::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec!["t".into()],
            1,
            3,
        )
    }

    pub fn atoms(&self) -> Vec<Element> {
        let mut atoms = Vec::new();
        for name in &self.plain {
            atoms.push(Element::plain(name.clone()));
            atoms.push(Element::starred(name.clone()));
        }
        for name in &self.theta {
            atoms.push(Element::theta(name.clone()));
        }
        atoms.sort();
        atoms.dedup();
        atoms
    }

    /// All atoms plus every exclusion-clean canonical set of depth up to
    /// `max_depth` and width up to `max_width`, deduplicated and in
    /// canonical order. Fails once more than `cap` values exist.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<Element>, VerifyError> {
        let mut values = self.atoms();
        for _ in 0..self.max_depth {
            let mut next = values.clone();
            for set in subsets_up_to(&values, self.max_width, cap)? {
                next.push(Element::Set(set));
            }
            next.sort();
            next.dedup();
            if next.len() > cap {
                return Err(VerifyError::BudgetExceeded { cap });
            }
            if next.len() == values.len() {
                break;
            }
            values = next;
        }
        Ok(values)
    }

    /// The enumerated sets only (the atoms stripped).
    pub fn enumerate_sets(&self, cap: usize) -> Result<Vec<SigmaSet>, VerifyError> {
        Ok(self
            .enumerate(cap)?
            .into_iter()
            .filter_map(|e| match e {
                Element::Set(s) => Some(s),
                Element::Atom(_) => None,
            })
            .collect())
    }
}

/// Every exclusion-clean subset of `values` with at most `width` members.
fn subsets_up_to(
    values: &[Element],
    width: usize,
    cap: usize,
) -> Result<Vec<SigmaSet>, VerifyError> {
    let mut out = vec![SigmaSet::empty()];
    let mut frontier: Vec<Vec<Element>> = vec![Vec::new()];
    for _ in 0..width {
        let mut next_frontier = Vec::new();
        for prefix in &frontier {
            let start = match prefix.last() {
                // Members in ascending index order: each set generated once.
                Some(last) => values.iter().position(|v| v == last).unwrap() + 1,
                None => 0,
            };
            for v in &values[start..] {
                let mut members = prefix.clone();
                members.push(v.clone());
                if let Ok(set) = SigmaSet::new(members.clone()) {
                    if out.len() >= cap {
                        return Err(VerifyError::BudgetExceeded { cap });
                    }
                    out.push(set);
                    next_frontier.push(members);
                }
            }
        }
        frontier = next_frontier;
    }
    Ok(out)
}
