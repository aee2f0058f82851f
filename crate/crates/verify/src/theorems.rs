//! Brute-force theorem checks over bounded universes: fusion laws,
//! antielement/antiset uniqueness, pair round-trips, product containment,
//! the function-space theorems, and seeded random structural sweeps.

use crate::report::{CheckReport, Recorder};
use crate::universe::Universe;
use crate::VerifyError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigma_core::algebra::{fuse_singletons, generated_space, integer_space};
use sigma_core::functions::{all_functions, build_diagram, SigmaFunction, DIAGRAM_LABELS};
use sigma_core::pairs::{cartesian_product, pair, unpair};
use sigma_core::{Element, SigmaSet};
use std::collections::BTreeMap;

/// Fixed seed for the random structural sweeps; reruns are identical.
const STRUCTURAL_SEED: u64 = 0x51_6d_a5e7;

/// Random pairs drawn by the structural sweep inside the merged suite.
pub const STRUCTURAL_PAIRS: usize = 10_000;

/// Runs every element-, pair- and function-level theorem over the universe,
/// plus the seeded structural sweep, in one merged report.
pub fn check_theorems(universe: &Universe, cap: usize) -> Result<CheckReport, VerifyError> {
    let mut rec = Recorder::new("theorems");
    element_checks(universe, cap, &mut rec)?;
    pair_checks(universe, cap, &mut rec)?;
    function_checks(universe, &mut rec);
    structural_checks(universe, cap, STRUCTURAL_PAIRS, STRUCTURAL_SEED, &mut rec)?;
    Ok(rec.finish())
}

/// Element-level suite on its own (fusion laws, uniqueness theorems).
pub fn check_element_theorems(
    universe: &Universe,
    cap: usize,
) -> Result<CheckReport, VerifyError> {
    let mut rec = Recorder::new("element_theorems");
    element_checks(universe, cap, &mut rec)?;
    Ok(rec.finish())
}

/// Ordered-pair suite on its own (round-trip, injectivity, containment).
pub fn check_pair_theorems(universe: &Universe, cap: usize) -> Result<CheckReport, VerifyError> {
    let mut rec = Recorder::new("pair_theorems");
    pair_checks(universe, cap, &mut rec)?;
    Ok(rec.finish())
}

/// Function-space suite on its own, exhaustive over all functions between
/// carriers of size <= 3 drawn from the universe's plain atoms and their
/// stars.
pub fn check_function_theorems(universe: &Universe) -> CheckReport {
    let mut rec = Recorder::new("function_theorems");
    function_checks(universe, &mut rec);
    rec.finish()
}

/// Structural sweep on its own: seeded random commutativity/identity pairs,
/// the non-associativity witness, and exclusion checks on everything
/// produced.
pub fn check_structural(
    universe: &Universe,
    cap: usize,
    pairs: usize,
    seed: u64,
) -> Result<CheckReport, VerifyError> {
    let mut rec = Recorder::new("structural");
    structural_checks(universe, cap, pairs, seed, &mut rec)?;
    Ok(rec.finish())
}

fn element_checks(
    universe: &Universe,
    cap: usize,
    rec: &mut Recorder,
) -> Result<(), VerifyError> {
    for label in [
        "theorem_1_5_transparent_fusion",
        "theorem_1_6_singleton_commutativity",
        "theorem_1_7_antielement_uniqueness",
        "theorem_1_8_antiset_uniqueness",
        "star_involution",
        "fuse_commutativity",
        "fuse_identity",
        "fuse_idempotence",
        "fuse_exclusion_preservation",
        "annihilation",
        "power_cardinality",
        "power_antielement_free",
        "integer_cardinality",
        "generated_vs_power_counterexample",
    ] {
        rec.declare(label);
    }

    let values = universe.enumerate(cap)?;
    let sets = universe.enumerate_sets(cap)?;
    let empty = Element::empty_set();

    // Theorem 1.5: the empty set and theta atoms never annihilate, so
    // {e} ∪ {A} = {e, A} for every A.
    let mut transparent = vec![empty.clone()];
    transparent.extend(universe.theta.iter().map(|n| Element::theta(n.clone())));
    for e in &transparent {
        for a in &values {
            let got = fuse_singletons(e, a);
            let expected = SigmaSet::new(vec![e.clone(), a.clone()])
                .expect("transparent elements never annihilate");
            rec.case("theorem_1_5_transparent_fusion", got == expected, || {
                format!("{{{e}}} u {{{a}}} = {got}, expected {expected}")
            });
        }
    }

    // Theorem 1.6: {A} ∪ {B} = ∅ iff {B} ∪ {A} = ∅ (checked as full
    // commutativity of singleton fusion).
    for x in &values {
        for y in &values {
            let xy = fuse_singletons(x, y);
            let yx = fuse_singletons(y, x);
            rec.case("theorem_1_6_singleton_commutativity", xy == yx, || {
                format!("{{{x}}} u {{{y}}} = {xy} but {{{y}}} u {{{x}}} = {yx}")
            });
        }
    }

    // Theorem 1.7: exhaustive candidate search finds exactly the
    // antielement when one exists, nothing otherwise.
    for x in &values {
        let candidates: Vec<&Element> = values
            .iter()
            .filter(|w| fuse_singletons(x, w).is_empty())
            .collect();
        let ok = match x.antielement() {
            Some(anti) => candidates.len() == 1 && *candidates[0] == anti,
            None => candidates.is_empty(),
        };
        rec.case("theorem_1_7_antielement_uniqueness", ok, || {
            format!(
                "{x}: candidates {:?}, antielement {:?}",
                candidates.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                x.antielement().map(|a| a.to_string())
            )
        });
    }

    // Theorem 1.8: same search at the set level against fusion.
    for a in &sets {
        let candidates: Vec<&SigmaSet> =
            sets.iter().filter(|b| a.fuse(b).is_empty()).collect();
        let ok = match a.antiset() {
            Ok(anti) => candidates.len() == 1 && *candidates[0] == anti,
            Err(_) => candidates.is_empty(),
        };
        rec.case("theorem_1_8_antiset_uniqueness", ok, || {
            format!(
                "{a}: candidates {:?}, antiset {:?}",
                candidates.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                a.antiset().map(|s| s.to_string())
            )
        });
    }

    for x in &values {
        if let sigma_core::StarResult::Defined(starred) = x.star() {
            let ok = starred.star() == sigma_core::StarResult::Defined(x.clone())
                && starred.depth() == x.depth();
            rec.case("star_involution", ok, || format!("star({x}) = {starred}"));
        }
    }

    for a in &sets {
        for b in &sets {
            let ab = a.fuse(b);
            rec.case("fuse_commutativity", ab == b.fuse(a), || {
                format!("{a} u {b} != {b} u {a}")
            });
            rec.case("fuse_exclusion_preservation", ab.is_exclusion_clean(), || {
                format!("{a} u {b} = {ab} violates exclusion")
            });
        }
        rec.case("fuse_identity", a.fuse(&SigmaSet::empty()) == *a, || {
            format!("{a} u {{}} != {a}")
        });
        rec.case("fuse_idempotence", a.fuse(a) == *a, || {
            format!("{a} u {a} != {a}")
        });
        if let Ok(anti) = a.antiset() {
            rec.case("annihilation", a.fuse(&anti).is_empty(), || {
                format!("{a} u {anti} != {{}}")
            });
        }

        let power = a.power_set();
        rec.case(
            "power_cardinality",
            power.cardinality() == 1 << a.cardinality(),
            || format!("|2^{a}| = {}", power.cardinality()),
        );
        let mut antielement_free = true;
        for s in power.iter() {
            for t in power.iter() {
                if fuse_singletons(s, t).is_empty() {
                    antielement_free = false;
                }
            }
        }
        rec.case("power_antielement_free", antielement_free, || {
            format!("2^{a} holds an annihilating pair")
        });

        if let Ok(space) = integer_space(a) {
            let expected = 3usize.pow(a.cardinality() as u32);
            rec.case("integer_cardinality", space.cardinality() == expected, || {
                format!("|3^{a}| = {}", space.cardinality())
            });
        }
    }

    // The printed counterexample 2^{X∪Y} ⊊ ⟨2^X, 2^Y⟩, instantiated with
    // the universe's first theta and plain names.
    if let (Some(t), Some(p)) = (universe.theta.first(), universe.plain.first()) {
        let x = SigmaSet::new(vec![Element::theta(t.clone()), Element::starred(p.clone())])
            .expect("clean pair");
        let y = SigmaSet::new(vec![Element::theta(t.clone()), Element::plain(p.clone())])
            .expect("clean pair");
        let space = generated_space(&x, &y);
        let power = x.fuse(&y).power_set();
        let strictly_contained = power
            .iter()
            .all(|m| space.contains(m))
            && power != space;
        rec.case(
            "generated_vs_power_counterexample",
            strictly_contained,
            || format!("2^({x} u {y}) = {power} vs <2^{x}, 2^{y}> = {space}"),
        );
    }

    Ok(())
}

fn pair_checks(universe: &Universe, cap: usize, rec: &mut Recorder) -> Result<(), VerifyError> {
    for label in [
        "theorem_2_3_round_trip",
        "pair_injectivity",
        "lemma_2_4_containment",
        "product_cardinality",
    ] {
        rec.declare(label);
    }

    let values = universe.enumerate(cap)?;
    let sets = universe.enumerate_sets(cap)?;

    let mut seen: BTreeMap<SigmaSet, (Element, Element)> = BTreeMap::new();
    for x in &values {
        for y in &values {
            let p = pair(x, y);
            let ok = match unpair(p.encoding()) {
                Ok(decoded) => decoded.components() == (x, y),
                Err(_) => false,
            };
            rec.case("theorem_2_3_round_trip", ok, || {
                format!("pair({x}, {y}) encodes as {} ", p.encoding())
            });

            let clash = seen.insert(p.encoding().clone(), (x.clone(), y.clone()));
            rec.case("pair_injectivity", clash.is_none(), || {
                let (a, b) = clash.as_ref().unwrap();
                format!("({x}, {y}) and ({a}, {b}) share encoding {}", p.encoding())
            });
        }
    }

    for a in &sets {
        for b in &sets {
            let product = cartesian_product(a, b);
            rec.case(
                "product_cardinality",
                product.cardinality() == a.cardinality() * b.cardinality(),
                || format!("|{a} x {b}| = {}", product.cardinality()),
            );
            // Lemma 2.4: every encoding is a subset of the generated space,
            // i.e. A × B ⊂ 2^⟨2^A, 2^B⟩.
            let space = generated_space(a, b);
            let contained = product
                .iter()
                .all(|enc| enc.as_set().is_some_and(|e| e.subset_of(&space)));
            rec.case("lemma_2_4_containment", contained, || {
                format!("{a} x {b} leaves 2^<2^{a}, 2^{b}>")
            });
        }
    }

    Ok(())
}

/// Carriers for the function suite: all subsets of size <= 3 of the plain
/// atoms, and of their starred counterparts.
fn function_carriers(universe: &Universe) -> Vec<SigmaSet> {
    let plains: Vec<Element> = universe
        .plain
        .iter()
        .map(|n| Element::plain(n.clone()))
        .collect();
    let starred: Vec<Element> = universe
        .plain
        .iter()
        .map(|n| Element::starred(n.clone()))
        .collect();
    let mut carriers = Vec::new();
    for pool in [plains, starred] {
        let n = pool.len();
        for mask in 0usize..(1 << n) {
            if (mask.count_ones() as usize) > 3 {
                continue;
            }
            let members: Vec<Element> = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            carriers.push(SigmaSet::new(members).expect("one-polarity carriers are clean"));
        }
    }
    carriers.sort();
    carriers.dedup();
    carriers
}

fn function_checks(universe: &Universe, rec: &mut Recorder) {
    for label in [
        "theorem_3_5_range_annihilation",
        "theorem_3_6_antifunction_exists",
        "theorem_3_7_antifunction_unique",
        "theorem_3_10_antidentity_involution",
        "theorem_3_13_classification_transfer",
        "corollary_3_14_inverse_transfer",
        "theorem_3_15_antinverse_contract",
        "theorem_3_15_antinverse_unique",
        "lemma_3_12_subset_antisets",
        "antifunction_involution",
        "diagram_identities",
    ] {
        rec.declare(label);
    }

    let carriers = function_carriers(universe);

    for a in &carriers {
        // Theorem 3.10: (Id*_A)* = Id_A, and Id_A* = (Id_A)*.
        if let Ok(antidentity) = SigmaFunction::antidentity(a) {
            let ok = antidentity
                .antifunction()
                .is_ok_and(|f| f.eq_pointwise(&SigmaFunction::identity(a)))
                && SigmaFunction::identity(a)
                    .antifunction()
                    .is_ok_and(|f| f.eq_pointwise(&antidentity));
            rec.case("theorem_3_10_antidentity_involution", ok, || {
                format!("A = {a}")
            });
        }

        // Lemma 3.12: every subset of A has a unique antiset inside 2^{A*}.
        if let Ok(a_star) = a.antiset() {
            let star_subsets: Vec<SigmaSet> = a_star
                .power_set()
                .iter()
                .map(|e| e.as_set().unwrap().clone())
                .collect();
            for b in a.power_set().iter() {
                let b = b.as_set().unwrap();
                let witnesses: Vec<&SigmaSet> = star_subsets
                    .iter()
                    .filter(|d| b.fuse(d).is_empty())
                    .collect();
                let ok = witnesses.len() == 1 && b.antiset().is_ok_and(|anti| *witnesses[0] == anti);
                rec.case("lemma_3_12_subset_antisets", ok, || {
                    format!("B = {b} inside 2^{a_star}")
                });
            }
        }
    }

    for a in &carriers {
        for b in &carriers {
            let b_star = b.antiset().expect("carriers have antisets");
            let candidates = all_functions(a, &b_star);
            for f in all_functions(a, b) {
                let anti = match f.antifunction() {
                    Ok(anti) => anti,
                    Err(e) => {
                        rec.case("theorem_3_6_antifunction_exists", false, || {
                            format!("f = {f}: {e}")
                        });
                        continue;
                    }
                };
                rec.case("theorem_3_6_antifunction_exists", true, String::new);

                // Theorem 3.5: ran(f) annihilates ran(f*).
                rec.case(
                    "theorem_3_5_range_annihilation",
                    f.image().fuse(&anti.image()).is_empty(),
                    || format!("f = {f}"),
                );

                // Theorem 3.7: f* is the only pointwise annihilator A → B*.
                let witnesses = candidates
                    .iter()
                    .filter(|g| {
                        f.domain().iter().all(|x| {
                            let fx = f.apply(x).unwrap();
                            let gx = g.apply(x).unwrap();
                            fuse_singletons(fx, gx).is_empty()
                        })
                    })
                    .count();
                rec.case("theorem_3_7_antifunction_unique", witnesses == 1, || {
                    format!("f = {f}: {witnesses} pointwise annihilators")
                });

                // Theorem 3.13: the three flags transfer to f*.
                rec.case(
                    "theorem_3_13_classification_transfer",
                    f.classify() == anti.classify(),
                    || format!("f = {f}: {} vs {}", f.classify(), anti.classify()),
                );

                // Corollary 3.14.
                rec.case(
                    "corollary_3_14_inverse_transfer",
                    f.inverse().is_ok() == anti.inverse().is_ok(),
                    || format!("f = {f}"),
                );

                rec.case(
                    "antifunction_involution",
                    anti.antifunction().is_ok_and(|ff| ff.eq_pointwise(&f)),
                    || format!("f = {f}"),
                );

                if f.classify().bijective {
                    theorem_3_15(&f, &anti, rec);
                    // The composition identities need the restricted
                    // composition, which is undefined on empty carriers.
                    if !f.domain().is_empty() {
                        diagram_identities(&f, rec);
                    }
                }
            }
        }
    }
}

fn theorem_3_15(f: &SigmaFunction, anti: &SigmaFunction, rec: &mut Recorder) {
    let antinverse = match f.antinverse() {
        Ok(g) => g,
        Err(e) => {
            rec.case("theorem_3_15_antinverse_contract", false, || {
                format!("f = {f}: {e}")
            });
            return;
        }
    };
    let contract = f.domain().iter().all(|x| {
        let fx_star = anti.apply(x).unwrap();
        antinverse.apply(fx_star) == x.antielement().as_ref()
    });
    rec.case("theorem_3_15_antinverse_contract", contract, || {
        format!("f = {f}, antinverse = {antinverse}")
    });

    let a_star = f.domain().antiset().expect("carrier has antiset");
    let b_star = f.codomain().antiset().expect("carrier has antiset");
    let witnesses = all_functions(&b_star, &a_star)
        .into_iter()
        .filter(|h| {
            f.domain().iter().all(|x| {
                let fx_star = anti.apply(x).unwrap();
                h.apply(fx_star) == x.antielement().as_ref()
            })
        })
        .count();
    rec.case("theorem_3_15_antinverse_unique", witnesses == 1, || {
        format!("f = {f}: {witnesses} contract witnesses")
    });
}

fn diagram_identities(f: &SigmaFunction, rec: &mut Recorder) {
    let diagram = match build_diagram(f) {
        Ok(d) => d,
        Err(e) => {
            rec.case("diagram_identities", false, || format!("f = {f}: {e}"));
            return;
        }
    };
    let node =
        |label: &str| &diagram.node(label).expect("all 16 nodes present").func;

    let f_inv = node("f_-1");
    let f_anti = node("f*");
    let constructions = [
        (
            node("f_-1*").eq_pointwise(
                &f_anti
                    .inverse()
                    .and_then(|g| g.antifunction())
                    .expect("construction route"),
            ),
            "f_-1* = ((f*)_-1)*",
        ),
        (
            node("(f_-1)*").eq_pointwise(
                &f.inverse()
                    .and_then(|g| g.antifunction())
                    .expect("construction route"),
            ),
            "(f_-1)* = (f_-1)*",
        ),
    ];
    for (ok, what) in constructions {
        rec.case("diagram_identities", ok, || format!("f = {f}: {what}"));
    }

    let compositions = [
        ("f", "f_-1", "Id_A"),
        ("f_-1", "f", "Id_B"),
        ("f", "(f_-1)*", "Id*_A"),
        ("f*", "f_-1*", "Id*_A"),
    ];
    for (first, then, equals) in compositions {
        let composed = SigmaFunction::compose(node(then), node(first));
        let ok = composed.is_ok_and(|c| c.eq_pointwise(node(equals)));
        rec.case("diagram_identities", ok, || {
            format!("f = {f}: {then} after {first} != {equals}")
        });
    }
    rec.case("diagram_identities", diagram.nodes().len() == 16, || {
        format!("f = {f}: {} nodes", diagram.nodes().len())
    });
    rec.case(
        "diagram_identities",
        diagram
            .edges()
            .iter()
            .zip(compositions)
            .all(|(e, (first, then, equals))| {
                DIAGRAM_LABELS[e.first] == first
                    && DIAGRAM_LABELS[e.then] == then
                    && DIAGRAM_LABELS[e.equals] == equals
            }),
        || format!("f = {f}: edge list mismatch"),
    );
}

fn structural_checks(
    universe: &Universe,
    cap: usize,
    pairs: usize,
    seed: u64,
    rec: &mut Recorder,
) -> Result<(), VerifyError> {
    for label in [
        "fuse_commutativity_random",
        "fuse_identity_random",
        "exclusion_invariant_random",
        "non_associativity_witness",
    ] {
        rec.declare(label);
    }

    let sets = universe.enumerate_sets(cap)?;
    if !sets.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            let a = &sets[rng.gen_range(0..sets.len())];
            let b = &sets[rng.gen_range(0..sets.len())];
            let ab = a.fuse(b);
            rec.case("fuse_commutativity_random", ab == b.fuse(a), || {
                format!("{a} u {b} != {b} u {a}")
            });
            rec.case("fuse_identity_random", a.fuse(&SigmaSet::empty()) == *a, || {
                format!("{a} u {{}} != {a}")
            });
            rec.case(
                "exclusion_invariant_random",
                ab.is_exclusion_clean(),
                || format!("{a} u {b} = {ab} violates exclusion"),
            );
        }
    }

    // The specific witness that fusion fails to associate:
    // ({1} u {1}) u {1*} = {} but {1} u ({1} u {1*}) = {1}.
    if let Some(p) = universe.plain.first() {
        let one = SigmaSet::singleton(Element::plain(p.clone()));
        let one_star = SigmaSet::singleton(Element::starred(p.clone()));
        let left = one.fuse(&one).fuse(&one_star);
        let right = one.fuse(&one.fuse(&one_star));
        let found = left.is_empty() && right == one && left != right;
        rec.case("non_associativity_witness", found, || {
            format!("left = {left}, right = {right}")
        });
    }

    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn criterion_universe() -> Universe {
        Universe::new(vec!["1".into(), "2".into()], vec!["t".into()], 1, 2)
    }

    #[test]
    fn element_suite_passes_on_the_criterion_universe() {
        let report = check_element_theorems(&criterion_universe(), 10_000).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.count_of("theorem_1_6_singleton_commutativity"), 361);
        assert_eq!(report.count_of("theorem_1_7_antielement_uniqueness"), 19);
        assert_eq!(report.count_of("theorem_1_8_antiset_uniqueness"), 14);
    }

    #[test]
    fn pair_suite_passes_on_the_criterion_universe() {
        let report = check_pair_theorems(&criterion_universe(), 10_000).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.count_of("theorem_2_3_round_trip"), 361);
        assert_eq!(report.count_of("lemma_2_4_containment"), 196);
    }

    #[test]
    fn function_suite_passes_on_two_names() {
        let u = Universe::new(vec!["1".into(), "2".into()], vec![], 1, 2);
        let report = check_function_theorems(&u);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn structural_suite_is_deterministic() {
        let u = criterion_universe();
        let a = check_structural(&u, 10_000, 500, 7).unwrap();
        let b = check_structural(&u, 10_000, 500, 7).unwrap();
        assert!(a.passed(), "{}", a.render_text());
        assert_eq!(a.counts(), b.counts());
        assert_eq!(a.count_of("fuse_commutativity_random"), 500);
    }

    #[test]
    fn nested_universe_uniqueness_still_holds() {
        // Depth 2: sets of sets get searched too; none has an antiset.
        let u = Universe::new(vec!["1".into()], vec!["1".into()], 2, 2);
        let report = check_element_theorems(&u, 10_000).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
