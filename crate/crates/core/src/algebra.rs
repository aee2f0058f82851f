//! The σ-set operation algebra: intersection, difference, anti-intersection,
//! star-difference, fusion with annihilation, antisets, and the power,
//! generated and integer spaces.

use crate::error::Error;
use crate::set::{Element, SigmaSet};
use std::collections::BTreeSet;

impl SigmaSet {
    /// Members satisfying the predicate, kept canonical (selection from a
    /// canonical set stays sorted, distinct and exclusion-clean).
    fn filtered(&self, keep: impl Fn(&Element) -> bool) -> SigmaSet {
        SigmaSet::new(self.iter().filter(|x| keep(x)).cloned().collect())
            .expect("selection from a canonical set is canonical")
    }

    /// `A ∩ B = {x ∈ A : x ∈ B}`.
    pub fn intersect(&self, other: &SigmaSet) -> SigmaSet {
        self.filtered(|x| other.contains(x))
    }

    /// `A − B = {x ∈ A : x ∉ B}`.
    pub fn difference(&self, other: &SigmaSet) -> SigmaSet {
        self.filtered(|x| !other.contains(x))
    }

    /// Anti-intersection `A ∩̂ B = {x ∈ A : x* ∈ B}`: the members of A that
    /// will annihilate against B under fusion.
    pub fn anti_intersect(&self, other: &SigmaSet) -> SigmaSet {
        self.filtered(|x| match x.antielement() {
            Some(anti) => other.contains(&anti),
            None => false,
        })
    }

    /// Star-difference `A ⋇ B = A − (A ∩̂ B)`: A without its annihilating part.
    pub fn star_difference(&self, other: &SigmaSet) -> SigmaSet {
        self.difference(&self.anti_intersect(other))
    }

    /// Fusion `A ∪ B = {x : x ∈ A⋇B ∨ x ∈ B⋇A}`: union with annihilation.
    /// When no member meets its antielement on the other side this is the
    /// plain union. The result is always exclusion-clean.
    pub fn fuse(&self, other: &SigmaSet) -> SigmaSet {
        let mut members: Vec<Element> = self.star_difference(other).members().to_vec();
        members.extend(other.star_difference(self).iter().cloned());
        // Survivors of A⋇B keep their antielements out of B and vice versa,
        // so the merge cannot reintroduce an annihilating pair.
        SigmaSet::new(members).expect("fusion preserves exclusion")
    }

    /// The σ-antiset: the unique B with `fuse(A, B) = ∅`, when it exists.
    ///
    /// Every member must annihilate a member of B, so the antiset is the
    /// memberwise antielement map; it exists exactly when every member is a
    /// polar atom. The error carries the first blocking member.
    pub fn antiset(&self) -> Result<SigmaSet, Error> {
        let mut members = Vec::with_capacity(self.cardinality());
        for m in self.iter() {
            match m.antielement() {
                Some(anti) => members.push(anti),
                None => {
                    return Err(Error::NoAntiset {
                        blocker: m.clone(),
                    })
                }
            }
        }
        Ok(SigmaSet::new(members).expect("antiset of a canonical set is canonical"))
    }

    /// `2^A`: the σ-set of all σ-subsets of A.
    pub fn power_set(&self) -> SigmaSet {
        let members = self.members();
        let n = members.len();
        assert!(n < usize::BITS as usize, "power set operand too wide");
        let mut subsets = Vec::with_capacity(1usize << n);
        for mask in 0usize..(1 << n) {
            let chosen: Vec<Element> = members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, m)| m.clone())
                .collect();
            // Subsets of an exclusion-clean set are exclusion-clean.
            let subset = SigmaSet::new(chosen).expect("subset of a canonical set is canonical");
            subsets.push(Element::Set(subset));
        }
        SigmaSet::new(subsets).expect("power set members are sets")
    }
}

/// Fusion of singletons `{x} ∪ {y}`: the empty σ-set when y is the
/// antielement of x, otherwise {x, y} (collapsing to {x} when x = y).
pub fn fuse_singletons(x: &Element, y: &Element) -> SigmaSet {
    if x.antielement().as_ref() == Some(y) {
        return SigmaSet::empty();
    }
    SigmaSet::new(vec![x.clone(), y.clone()]).expect("non-annihilating pair is a sigma-set")
}

/// Generated space `⟨2^A, 2^B⟩ = {x ∪ y : x ∈ 2^A, y ∈ 2^B}`, computed by
/// full enumeration of subset pairs with canonical deduplication.
pub fn generated_space(a: &SigmaSet, b: &SigmaSet) -> SigmaSet {
    let subsets_a = subsets_of(a);
    let subsets_b = subsets_of(b);
    let mut out = BTreeSet::new();
    for x in &subsets_a {
        for y in &subsets_b {
            out.insert(x.fuse(y));
        }
    }
    collect_space(out)
}

/// Integer space `3^A = ⟨2^A, 2^{A*}⟩`: every exclusion-clean sign
/// assignment over A's members. Fails if A has no antiset.
pub fn integer_space(a: &SigmaSet) -> Result<SigmaSet, Error> {
    let antiset = a.antiset()?;
    let space = generated_space(a, &antiset);
    // Built-in self-check of fusion: the space must have exactly 3^|A|
    // members.
    let expected = 3usize
        .checked_pow(a.cardinality() as u32)
        .expect("integer space cardinality overflow");
    assert_eq!(
        space.cardinality(),
        expected,
        "integer space of {a} has wrong cardinality"
    );
    Ok(space)
}

fn subsets_of(a: &SigmaSet) -> Vec<SigmaSet> {
    a.power_set()
        .iter()
        .map(|e| e.as_set().expect("power set members are sets").clone())
        .collect()
}

fn collect_space(sets: BTreeSet<SigmaSet>) -> SigmaSet {
    let members: Vec<Element> = sets.into_iter().map(Element::Set).collect();
    SigmaSet::new(members).expect("space members are distinct sets")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(members: Vec<Element>) -> SigmaSet {
        SigmaSet::new(members).unwrap()
    }

    fn atoms(names: &[&str]) -> SigmaSet {
        set(names
            .iter()
            .map(|n| match n.strip_suffix('*') {
                Some(base) => Element::starred(base),
                None => match n.strip_suffix("_T") {
                    Some(base) => Element::theta(base),
                    None => Element::plain(*n),
                },
            })
            .collect())
    }

    #[test]
    fn intersect_examples() {
        // X = {1_T, 2*} and Y = {1_T, 2} share exactly 1_T.
        let x = atoms(&["1_T", "2*"]);
        let y = atoms(&["1_T", "2"]);
        assert_eq!(x.intersect(&y), atoms(&["1_T"]));
        assert_eq!(x.intersect(&SigmaSet::empty()), SigmaSet::empty());
        assert_eq!(
            atoms(&["1", "2"]).intersect(&atoms(&["2", "3"])),
            atoms(&["2"])
        );
    }

    #[test]
    fn difference_examples() {
        assert_eq!(
            atoms(&["1", "2"]).difference(&atoms(&["2"])),
            atoms(&["1"])
        );
        let a = atoms(&["1", "3"]);
        assert_eq!(a.difference(&SigmaSet::empty()), a);
        assert_eq!(atoms(&["1"]).difference(&atoms(&["1*"])), atoms(&["1"]));
    }

    #[test]
    fn anti_intersect_examples() {
        let x = atoms(&["1_T", "2*"]);
        let y = atoms(&["1_T", "2"]);
        assert_eq!(x.anti_intersect(&y), atoms(&["2*"]));
        assert_eq!(
            atoms(&["1", "2", "3"]).anti_intersect(&atoms(&["1*", "2*", "3*"])),
            atoms(&["1", "2", "3"])
        );
        assert_eq!(x.anti_intersect(&SigmaSet::empty()), SigmaSet::empty());
    }

    #[test]
    fn star_difference_examples() {
        let x = atoms(&["1_T", "2*"]);
        let y = atoms(&["1_T", "2"]);
        assert_eq!(x.star_difference(&y), atoms(&["1_T"]));
        assert_eq!(x.star_difference(&SigmaSet::empty()), x);
        assert_eq!(
            atoms(&["1"]).star_difference(&atoms(&["1*"])),
            SigmaSet::empty()
        );
    }

    #[test]
    fn fuse_examples() {
        let x = atoms(&["1_T", "2*"]);
        let y = atoms(&["1_T", "2"]);
        assert_eq!(x.fuse(&y), atoms(&["1_T"]));
        assert_eq!(
            atoms(&["1", "2", "3"]).fuse(&atoms(&["1*", "2*", "3*"])),
            SigmaSet::empty()
        );
        assert_eq!(x.fuse(&SigmaSet::empty()), x);
        // Row δ_1*, column δ_12 of the fuse table reads δ_2.
        assert_eq!(atoms(&["1*"]).fuse(&atoms(&["1", "2"])), atoms(&["2"]));
    }

    #[test]
    fn fuse_is_not_associative_at_the_witness() {
        let one = atoms(&["1"]);
        let one_star = atoms(&["1*"]);
        let left = one.fuse(&one).fuse(&one_star);
        let right = one.fuse(&one.fuse(&one_star));
        assert_eq!(left, SigmaSet::empty());
        assert_eq!(right, one);
        assert_ne!(left, right);
    }

    #[test]
    fn fuse_singletons_examples() {
        assert_eq!(
            fuse_singletons(&Element::plain("1"), &Element::starred("1")),
            SigmaSet::empty()
        );
        let one = Element::Set(atoms(&["1"]));
        assert_eq!(
            fuse_singletons(&Element::empty_set(), &one),
            set(vec![Element::empty_set(), one.clone()])
        );
        assert_eq!(
            fuse_singletons(&Element::plain("2"), &Element::plain("2")),
            atoms(&["2"])
        );
        // {∅} ∪ {∅} = {∅}: the empty set has no antielement.
        assert_eq!(
            fuse_singletons(&Element::empty_set(), &Element::empty_set()),
            set(vec![Element::empty_set()])
        );
        // Sets never annihilate as elements: {{1}} ∪ {{1*}} = {{1}, {1*}}.
        let one_star = Element::Set(atoms(&["1*"]));
        assert_eq!(
            fuse_singletons(&one, &one_star),
            set(vec![one, one_star])
        );
    }

    #[test]
    fn antiset_examples() {
        assert_eq!(
            atoms(&["1", "2", "3"]).antiset().unwrap(),
            atoms(&["1*", "2*", "3*"])
        );
        assert_eq!(SigmaSet::empty().antiset().unwrap(), SigmaSet::empty());
        assert!(matches!(
            atoms(&["1_T"]).antiset(),
            Err(Error::NoAntiset { .. })
        ));
        // A set-valued member blocks the antiset as well: nothing fuses
        // {{1}} to the empty set.
        let nested = set(vec![Element::Set(atoms(&["1"]))]);
        assert!(nested.antiset().is_err());
    }

    #[test]
    fn antiset_annihilates() {
        let a = atoms(&["1", "2", "3"]);
        let b = a.antiset().unwrap();
        assert_eq!(a.fuse(&b), SigmaSet::empty());
    }

    #[test]
    fn power_set_examples() {
        let empty_power = SigmaSet::empty().power_set();
        assert_eq!(empty_power.to_string(), "{{}}");

        assert_eq!(atoms(&["1_T"]).power_set().to_string(), "{{}, {1_T}}");

        let p = atoms(&["1", "2"]).power_set();
        assert_eq!(p.to_string(), "{{}, {1}, {2}, {1, 2}}");
        assert_eq!(p.cardinality(), 4);
    }

    #[test]
    fn generated_space_small_example() {
        let x = atoms(&["1_T", "2*"]);
        let y = atoms(&["1_T", "2"]);
        let space = generated_space(&x, &y);
        assert_eq!(
            space.to_string(),
            "{{}, {1_T}, {2}, {2*}, {1_T, 2}, {1_T, 2*}}"
        );
        // In general 2^{A∪B} is strictly smaller than ⟨2^A, 2^B⟩.
        let power_of_fusion = x.fuse(&y).power_set();
        assert_eq!(power_of_fusion.to_string(), "{{}, {1_T}}");
        assert!(power_of_fusion.subset_of(&space));
        assert_ne!(power_of_fusion, space);
    }

    #[test]
    fn generated_space_trivial() {
        let space = generated_space(&SigmaSet::empty(), &SigmaSet::empty());
        assert_eq!(space.to_string(), "{{}}");
    }

    #[test]
    fn generated_space_36() {
        let a = atoms(&["1_T", "2_T", "1", "2"]);
        let b = atoms(&["1_T", "2_T", "1*", "2*"]);
        assert_eq!(generated_space(&a, &b).cardinality(), 36);
    }

    #[test]
    fn integer_space_examples() {
        let space = integer_space(&atoms(&["1", "2", "3"])).unwrap();
        assert_eq!(space.cardinality(), 27);

        assert_eq!(
            integer_space(&SigmaSet::empty()).unwrap().to_string(),
            "{{}}"
        );

        assert_eq!(
            integer_space(&atoms(&["1"])).unwrap().to_string(),
            "{{}, {1}, {1*}}"
        );

        assert!(integer_space(&atoms(&["1_T"])).is_err());
    }

    #[test]
    fn fuse_commutes_and_has_identity() {
        let pairs = [
            (atoms(&["1", "2"]), atoms(&["1*", "3"])),
            (atoms(&["1_T", "2*"]), atoms(&["1_T", "2"])),
            (SigmaSet::empty(), atoms(&["1"])),
        ];
        for (a, b) in &pairs {
            assert_eq!(a.fuse(b), b.fuse(a));
            assert_eq!(a.fuse(&SigmaSet::empty()), *a);
            assert_eq!(a.fuse(a), *a);
        }
    }
}
