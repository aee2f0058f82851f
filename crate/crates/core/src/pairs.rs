//! Ordered pairs, annihilation-aware: `(X, Y) = {{X}} ∪ {{X} ∪ {Y}}`, their
//! decoding, and Cartesian products.

use crate::algebra::fuse_singletons;
use crate::error::Error;
use crate::set::{Element, SigmaSet};
use std::fmt;

/// An ordered pair together with its σ-set encoding `{{X}, {X} ∪ {Y}}`.
///
/// When Y is the antielement of X the encoding degenerates to `{{X}, ∅}`,
/// and when X = Y to `{{X}}`; decoding recovers the components exactly in
/// every case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPair {
    first: Element,
    second: Element,
    encoding: SigmaSet,
}

impl OrderedPair {
    pub fn first(&self) -> &Element {
        &self.first
    }

    pub fn second(&self) -> &Element {
        &self.second
    }

    pub fn encoding(&self) -> &SigmaSet {
        &self.encoding
    }

    pub fn components(&self) -> (&Element, &Element) {
        (&self.first, &self.second)
    }
}

impl fmt::Display for OrderedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Builds the ordered pair of x and y.
pub fn pair(x: &Element, y: &Element) -> OrderedPair {
    let singleton_x = Element::Set(SigmaSet::singleton(x.clone()));
    let fused = Element::Set(fuse_singletons(x, y));
    // {x} and {x}∪{y} are sets and never annihilate as elements; a duplicate
    // ({x} = {x}∪{y}, i.e. x = y) collapses to the singleton encoding.
    let encoding =
        SigmaSet::new(vec![singleton_x, fused]).expect("pair encodings are sigma-sets");
    OrderedPair {
        first: x.clone(),
        second: y.clone(),
        encoding,
    }
}

/// Decodes an encoding back to the unique ordered pair it came from.
///
/// The three shapes are `{{x}, {x, y}}` → (x, y); `{{x}, ∅}` → (x, x*);
/// `{{x}}` → (x, x). Anything else — including `{{x}, ∅}` where x has no
/// antielement — is not a pair.
pub fn unpair(s: &SigmaSet) -> Result<OrderedPair, Error> {
    let not_a_pair = |reason: &str| Error::NotAPair {
        set: s.clone(),
        reason: reason.to_string(),
    };

    let sets: Vec<&SigmaSet> = s
        .iter()
        .map(|m| m.as_set())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| not_a_pair("members must be sets"))?;

    match sets.as_slice() {
        [only] => match only.members() {
            [x] => Ok(pair(x, x)),
            _ => Err(not_a_pair("single member must be a singleton")),
        },
        // Canonical order puts the smaller set first.
        [first, second] => {
            if first.is_empty() {
                match second.members() {
                    [x] => {
                        let anti = x
                            .antielement()
                            .ok_or_else(|| not_a_pair("first component has no antielement"))?;
                        Ok(pair(x, &anti))
                    }
                    _ => Err(not_a_pair("companion of the empty set must be a singleton")),
                }
            } else {
                let x = match first.members() {
                    [x] => x,
                    _ => return Err(not_a_pair("no singleton member")),
                };
                match second.members() {
                    [u, v] if u == x => Ok(pair(x, v)),
                    [u, v] if v == x => Ok(pair(x, u)),
                    _ => Err(not_a_pair("two-element member must contain the first component")),
                }
            }
        }
        _ => Err(not_a_pair("wrong arity")),
    }
}

/// Cartesian product `A × B`: the σ-set of all pair encodings (x, y) with
/// x ∈ A, y ∈ B.
pub fn cartesian_product(a: &SigmaSet, b: &SigmaSet) -> SigmaSet {
    let mut encodings = Vec::with_capacity(a.cardinality() * b.cardinality());
    for x in a.iter() {
        for y in b.iter() {
            encodings.push(Element::Set(pair(x, y).encoding().clone()));
        }
    }
    let product = SigmaSet::new(encodings).expect("pair encodings are distinct sigma-sets");
    // A × B ⊂ 2^⟨2^A, 2^B⟩: every encoding is a subset of the generated
    // space. Desk-scale self-check only.
    #[cfg(debug_assertions)]
    {
        if a.cardinality() + b.cardinality() <= 12 {
            let space = crate::algebra::generated_space(a, b);
            debug_assert!(product
                .iter()
                .all(|enc| enc.as_set().is_some_and(|e| e.subset_of(&space))));
        }
    }
    product
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(members: Vec<Element>) -> SigmaSet {
        SigmaSet::new(members).unwrap()
    }

    fn sing(e: Element) -> Element {
        Element::Set(SigmaSet::singleton(e))
    }

    #[test]
    fn pair_general_case() {
        let p = pair(&Element::plain("1"), &Element::plain("2"));
        let expected = set(vec![
            sing(Element::plain("1")),
            Element::Set(set(vec![Element::plain("1"), Element::plain("2")])),
        ]);
        assert_eq!(p.encoding(), &expected);
        assert_eq!(p.to_string(), "(1, 2)");
    }

    #[test]
    fn pair_annihilating_case() {
        let p = pair(&Element::plain("1"), &Element::starred("1"));
        let expected = set(vec![Element::empty_set(), sing(Element::plain("1"))]);
        assert_eq!(p.encoding(), &expected);
    }

    #[test]
    fn pair_diagonal_case() {
        // {1}∪{1} = {1}, so the encoding collapses to {{1}}.
        let p = pair(&Element::plain("1"), &Element::plain("1"));
        let expected = set(vec![sing(Element::plain("1"))]);
        assert_eq!(p.encoding(), &expected);
    }

    #[test]
    fn unpair_inverts_pair() {
        let enc = set(vec![
            sing(Element::plain("1")),
            Element::Set(set(vec![Element::plain("1"), Element::plain("2")])),
        ]);
        let p = unpair(&enc).unwrap();
        assert_eq!(p.components(), (&Element::plain("1"), &Element::plain("2")));
    }

    #[test]
    fn unpair_degenerate_encoding_uses_the_antielement() {
        let enc = set(vec![Element::empty_set(), sing(Element::plain("1"))]);
        let p = unpair(&enc).unwrap();
        assert_eq!(
            p.components(),
            (&Element::plain("1"), &Element::starred("1"))
        );
    }

    #[test]
    fn unpair_rejects_blocked_degenerate_encodings() {
        let enc = set(vec![Element::empty_set(), sing(Element::theta("1"))]);
        assert!(matches!(unpair(&enc), Err(Error::NotAPair { .. })));
        // Same for ∅ itself: {{∅}, ∅} encodes nothing.
        let enc = set(vec![Element::empty_set(), sing(Element::empty_set())]);
        assert!(matches!(unpair(&enc), Err(Error::NotAPair { .. })));
    }

    #[test]
    fn unpair_rejects_malformed_sets() {
        for bad in [
            SigmaSet::empty(),
            set(vec![Element::plain("1")]),
            set(vec![sing(Element::plain("1")), sing(Element::plain("2"))]),
            set(vec![Element::Set(set(vec![
                Element::plain("1"),
                Element::plain("2"),
            ]))]),
        ] {
            assert!(unpair(&bad).is_err(), "{bad} should not decode");
        }
    }

    /// Oracle for the degenerate decodings: build every pair over a small
    /// universe, invert the table, and compare with `unpair`.
    #[test]
    fn unpair_agrees_with_the_exhaustive_pair_table() {
        let mut universe = vec![
            Element::plain("1"),
            Element::starred("1"),
            Element::plain("2"),
            Element::starred("2"),
            Element::empty_set(),
        ];
        for name in ["1", "2"] {
            universe.push(sing(Element::plain(name)));
            universe.push(sing(Element::starred(name)));
        }

        let mut table: Vec<(SigmaSet, (Element, Element))> = Vec::new();
        for x in &universe {
            for y in &universe {
                let enc = pair(x, y).encoding().clone();
                table.push((enc, (x.clone(), y.clone())));
            }
        }

        // The encoding of (1, 1*) has exactly one preimage in the table.
        let probe = set(vec![Element::empty_set(), sing(Element::plain("1"))]);
        let preimages: Vec<_> = table.iter().filter(|(enc, _)| *enc == probe).collect();
        assert_eq!(preimages.len(), 1);
        assert_eq!(
            preimages[0].1,
            (Element::plain("1"), Element::starred("1"))
        );

        // And unpair recovers every entry of the table.
        for (enc, (x, y)) in &table {
            let p = unpair(enc).unwrap();
            assert_eq!(p.components(), (x, y), "decoding {enc}");
        }
    }

    #[test]
    fn product_examples() {
        let one = set(vec![Element::plain("1")]);
        let two = set(vec![Element::plain("2")]);
        let prod = cartesian_product(&one, &two);
        assert_eq!(prod.to_string(), "{{{1}, {1, 2}}}");

        assert_eq!(
            cartesian_product(&SigmaSet::empty(), &two),
            SigmaSet::empty()
        );

        let a = set(vec![Element::plain("1"), Element::plain("2")]);
        let b = set(vec![Element::starred("1")]);
        let prod = cartesian_product(&a, &b);
        let expected = set(vec![
            Element::Set(pair(&Element::plain("1"), &Element::starred("1")).encoding().clone()),
            Element::Set(pair(&Element::plain("2"), &Element::starred("1")).encoding().clone()),
        ]);
        assert_eq!(prod, expected);
        assert_eq!(prod.cardinality(), a.cardinality() * b.cardinality());
    }
}
