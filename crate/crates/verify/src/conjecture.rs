//! Desk-scale check that fusion is a binary operation on the integer space:
//! for every x, y in 3^A the fusion lands back in 3^A.

use crate::report::{CheckReport, Recorder};
use crate::VerifyError;
use sigma_core::algebra::integer_space;
use sigma_core::emit::{space_members, table, TableFormat, TableOp};
use sigma_core::{Element, SigmaSet};

/// Largest carrier the closure check will exhaust (3^4 squared fusions).
pub const MAX_CONJECTURE_CARRIER: usize = 4;

/// Exhausts fusion closure over 3^A. The carrier must have an antiset and
/// at most four members.
pub fn check_conjecture_closure(a: &SigmaSet) -> Result<CheckReport, VerifyError> {
    if a.cardinality() > MAX_CONJECTURE_CARRIER {
        return Err(VerifyError::CarrierTooLarge {
            cardinality: a.cardinality(),
        });
    }
    let space = integer_space(a).map_err(VerifyError::Core)?;

    let mut rec = Recorder::new("conjecture");
    rec.declare("conjecture_closure");
    for x in space.iter() {
        let x = x.as_set().expect("integer space members are sets");
        for y in space.iter() {
            let y = y.as_set().expect("integer space members are sets");
            let fused = x.fuse(y);
            let ok = space.contains(&Element::Set(fused.clone())) && fused.is_exclusion_clean();
            rec.case("conjecture_closure", ok, || {
                format!("{x} u {y} = {fused} left 3^{a}")
            });
        }
    }

    // For the three-atom carrier of the printed table, cross-check the 8x8
    // restriction entry-for-entry.
    if *a == printed_table_carrier() {
        rec.declare("conjecture_table_crosscheck");
        let members = space_members(&space).expect("space members are sets");
        let negatives: Vec<SigmaSet> = members
            .iter()
            .filter(|s| {
                s.iter().all(|e| {
                    matches!(e, Element::Atom(at) if at.polarity() == sigma_core::Polarity::Starred)
                })
            })
            .cloned()
            .collect();
        let positives: Vec<SigmaSet> = members
            .iter()
            .filter(|s| {
                s.iter().all(|e| {
                    matches!(e, Element::Atom(at) if at.polarity() == sigma_core::Polarity::Plain)
                })
            })
            .cloned()
            .collect();
        let csv = table(
            &space,
            &negatives,
            &positives,
            TableOp::Fuse,
            TableFormat::Csv,
            true,
        )
        .expect("closure already verified");
        rec.case(
            "conjecture_table_crosscheck",
            csv == crate::golden::FUSE_TABLE_8X8,
            || "8x8 restriction differs from the transcribed table".to_string(),
        );
    }

    Ok(rec.finish())
}

fn printed_table_carrier() -> SigmaSet {
    SigmaSet::new(vec![
        Element::plain("1"),
        Element::plain("2"),
        Element::plain("3"),
    ])
    .expect("plain atoms")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_carrier_has_one_case() {
        let report = check_conjecture_closure(&SigmaSet::empty()).unwrap();
        assert!(report.passed());
        assert_eq!(report.count_of("conjecture_closure"), 1);
    }

    #[test]
    fn one_atom_carrier_has_nine_cases() {
        let a = SigmaSet::new(vec![Element::plain("1")]).unwrap();
        let report = check_conjecture_closure(&a).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.count_of("conjecture_closure"), 9);
    }

    #[test]
    fn three_atom_carrier_has_729_cases_and_matches_the_table() {
        let report = check_conjecture_closure(&printed_table_carrier()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.count_of("conjecture_closure"), 729);
        assert_eq!(report.count_of("conjecture_table_crosscheck"), 1);
    }

    #[test]
    fn oversized_and_theta_carriers_are_rejected() {
        let big = SigmaSet::new(
            ["1", "2", "3", "4", "5"]
                .iter()
                .map(|n| Element::plain(*n))
                .collect(),
        )
        .unwrap();
        assert!(matches!(
            check_conjecture_closure(&big),
            Err(VerifyError::CarrierTooLarge { cardinality: 5 })
        ));

        let theta = SigmaSet::new(vec![Element::theta("t")]).unwrap();
        assert!(matches!(
            check_conjecture_closure(&theta),
            Err(VerifyError::Core(_))
        ));
    }
}
