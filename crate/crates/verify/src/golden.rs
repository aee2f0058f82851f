//! Regenerates the transcribed listings and the 8x8 fusion table, then
//! diffs them line-by-line against the checked-in fixtures.

use crate::report::{CheckReport, Recorder};
use sigma_core::algebra::{generated_space, integer_space};
use sigma_core::emit::{space_listing, table, TableFormat, TableOp};
use sigma_core::{Element, SigmaSet};

pub const GEN_SPACE_SMALL: &str = include_str!("../golden/gen_space_small.txt");
pub const POWER_OF_FUSION_SMALL: &str = include_str!("../golden/power_of_fusion_small.txt");
pub const GEN_SPACE_36: &str = include_str!("../golden/gen_space_36.txt");
pub const INTEGER_SPACE_27: &str = include_str!("../golden/integer_space_27.txt");
pub const FUSE_TABLE_8X8: &str = include_str!("../golden/fuse_table_8x8.csv");

fn atoms(tokens: &[&str]) -> SigmaSet {
    SigmaSet::new(
        tokens
            .iter()
            .map(|t| match t.strip_suffix("_T") {
                Some(base) => Element::theta(base),
                None => match t.strip_suffix('*') {
                    Some(base) => Element::starred(base),
                    None => Element::plain(*t),
                },
            })
            .collect(),
    )
    .expect("fixture carriers are clean")
}

/// Rebuilds every printed artifact and compares byte-for-byte, reporting
/// the first differing line of each.
pub fn reproduce_paper_artifacts() -> CheckReport {
    let mut rec = Recorder::new("golden");

    let x = atoms(&["1_T", "2*"]);
    let y = atoms(&["1_T", "2"]);
    diff(
        &mut rec,
        "golden_generated_space_small",
        GEN_SPACE_SMALL,
        &space_listing(&generated_space(&x, &y)),
    );
    diff(
        &mut rec,
        "golden_power_of_fusion_small",
        POWER_OF_FUSION_SMALL,
        &space_listing(&x.fuse(&y).power_set()),
    );

    let a = atoms(&["1_T", "2_T", "1", "2"]);
    let b = atoms(&["1_T", "2_T", "1*", "2*"]);
    diff(
        &mut rec,
        "golden_generated_space_36",
        GEN_SPACE_36,
        &space_listing(&generated_space(&a, &b)),
    );

    let carrier = atoms(&["1", "2", "3"]);
    let space = integer_space(&carrier).expect("plain carrier has an antiset");
    diff(
        &mut rec,
        "golden_integer_space_27",
        INTEGER_SPACE_27,
        &space_listing(&space),
    );

    let negatives: Vec<SigmaSet> = [
        vec![],
        vec!["1*"],
        vec!["2*"],
        vec!["3*"],
        vec!["1*", "2*"],
        vec!["1*", "3*"],
        vec!["2*", "3*"],
        vec!["1*", "2*", "3*"],
    ]
    .iter()
    .map(|toks| atoms(toks))
    .collect();
    let positives: Vec<SigmaSet> = [
        vec![],
        vec!["1"],
        vec!["2"],
        vec!["3"],
        vec!["1", "2"],
        vec!["1", "3"],
        vec!["2", "3"],
        vec!["1", "2", "3"],
    ]
    .iter()
    .map(|toks| atoms(toks))
    .collect();
    let csv = table(
        &space,
        &negatives,
        &positives,
        TableOp::Fuse,
        TableFormat::Csv,
        true,
    )
    .expect("fusion is closed on the integer space");
    diff(&mut rec, "golden_fuse_table_8x8", FUSE_TABLE_8X8, &csv);

    rec.finish()
}

/// Line-by-line diff; one case per golden line, failing with the first
/// mismatch.
fn diff(rec: &mut Recorder, check: &str, expected: &str, actual: &str) {
    rec.declare(check);
    let expected_lines: Vec<&str> = expected.lines().collect();
    let actual_lines: Vec<&str> = actual.lines().collect();
    for (i, want) in expected_lines.iter().enumerate() {
        let got = actual_lines.get(i).copied();
        rec.case(check, got == Some(*want), || {
            format!(
                "line {}: expected {:?}, got {:?}",
                i + 1,
                want,
                got.unwrap_or("<missing>")
            )
        });
        if got != Some(*want) {
            return;
        }
    }
    rec.case(
        check,
        actual_lines.len() == expected_lines.len(),
        || {
            format!(
                "trailing line {}: {:?}",
                expected_lines.len() + 1,
                actual_lines
                    .get(expected_lines.len())
                    .copied()
                    .unwrap_or("<missing>")
            )
        },
    );
}
