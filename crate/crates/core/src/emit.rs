//! Deterministic emitters: space listings, Cayley tables (CSV/markdown,
//! optional delta labels), lattice DOT and function-diagram DOT.
//!
//! All output is ASCII and byte-stable for the same input; the space and
//! table emitters are the golden-file contract.

use crate::error::Error;
use crate::functions::{FunctionDiagram, DIAGRAM_LABELS};
use crate::set::{Element, SigmaSet};
use std::fmt::Write;

/// The binary set operations a table can be built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Fuse,
    Intersect,
    AntiIntersect,
    Difference,
    StarDifference,
}

impl TableOp {
    pub fn name(self) -> &'static str {
        match self {
            TableOp::Fuse => "fuse",
            TableOp::Intersect => "int",
            TableOp::AntiIntersect => "aint",
            TableOp::Difference => "diff",
            TableOp::StarDifference => "sdiff",
        }
    }

    pub fn apply(self, a: &SigmaSet, b: &SigmaSet) -> SigmaSet {
        match self {
            TableOp::Fuse => a.fuse(b),
            TableOp::Intersect => a.intersect(b),
            TableOp::AntiIntersect => a.anti_intersect(b),
            TableOp::Difference => a.difference(b),
            TableOp::StarDifference => a.star_difference(b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

/// One σ-set per line in canonical order under a `# card=N` header.
pub fn space_listing(space: &SigmaSet) -> String {
    let mut out = format!("# card={}\n", space.cardinality());
    for member in space.iter() {
        let _ = writeln!(out, "{member}");
    }
    out
}

/// Compact delta label for a set of atoms: `d_1*2` for {1*, 2}, `{}` for the
/// empty set. Sets with non-atom members fall back to canonical rendering.
pub fn delta_label(set: &SigmaSet) -> String {
    if set.is_empty() {
        return "{}".to_string();
    }
    if set.iter().all(Element::is_atom) {
        let mut label = String::from("d_");
        for member in set.iter() {
            let _ = write!(label, "{member}");
        }
        label
    } else {
        set.to_string()
    }
}

/// The members of a space, in canonical order, as sets.
pub fn space_members(space: &SigmaSet) -> Result<Vec<SigmaSet>, String> {
    space
        .iter()
        .map(|m| {
            m.as_set()
                .cloned()
                .ok_or_else(|| format!("space member {m} is not a set"))
        })
        .collect()
}

/// Full |rows| x |cols| operation table over a space. Every entry must stay
/// inside the space. Row and column sets default to the whole space.
pub fn table(
    space: &SigmaSet,
    rows: &[SigmaSet],
    cols: &[SigmaSet],
    op: TableOp,
    format: TableFormat,
    delta_labels: bool,
) -> Result<String, Error> {
    let label = |s: &SigmaSet| {
        if delta_labels {
            delta_label(s)
        } else {
            s.to_string()
        }
    };

    let mut grid: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
    let mut header = vec![op.name().to_string()];
    header.extend(cols.iter().map(&label));
    grid.push(header);
    for r in rows {
        let mut line = vec![label(r)];
        for c in cols {
            let entry = op.apply(r, c);
            if !space.contains(&Element::Set(entry.clone())) {
                return Err(Error::NotClosed {
                    x: r.clone(),
                    y: c.clone(),
                });
            }
            line.push(label(&entry));
        }
        grid.push(line);
    }

    Ok(match format {
        TableFormat::Csv => render_csv(&grid),
        TableFormat::Markdown => render_markdown(&grid),
    })
}

fn render_csv(grid: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in grid {
        let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

fn csv_cell(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn render_markdown(grid: &[Vec<String>]) -> String {
    let mut out = String::new();
    for (i, row) in grid.iter().enumerate() {
        let _ = writeln!(out, "| {} |", row.join(" | "));
        if i == 0 {
            let _ = writeln!(out, "|{}", " --- |".repeat(row.len()));
        }
    }
    out
}

/// DOT graph of a space ordered by inclusion: nodes are the members, edges
/// the covering subset relations (subset -> superset, no member in between).
pub fn lattice_dot(space: &SigmaSet) -> Result<String, String> {
    let members = space_members(space)?;
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for m in &members {
        let _ = writeln!(out, "  \"{m}\";");
    }
    for (lower, upper) in covering_pairs(&members) {
        let _ = writeln!(out, "  \"{lower}\" -> \"{upper}\";");
    }
    out.push_str("}\n");
    Ok(out)
}

/// All covering pairs (s, t): s ⊂ t with no member strictly between.
pub fn covering_pairs(members: &[SigmaSet]) -> Vec<(&SigmaSet, &SigmaSet)> {
    let mut edges = Vec::new();
    for s in members {
        for t in members {
            if s == t || !s.subset_of(t) {
                continue;
            }
            let covered = members.iter().any(|u| {
                u != s && u != t && s.subset_of(u) && u.subset_of(t)
            });
            if !covered {
                edges.push((s, t));
            }
        }
    }
    edges
}

/// DOT rendering of the 16-function diagram: named nodes with carrier
/// labels, composition identities as labelled edges.
pub fn function_diagram_dot(diagram: &FunctionDiagram) -> String {
    let mut out = String::from("digraph functions {\n");
    for node in diagram.nodes() {
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}: {} -> {}\"];",
            node.label,
            node.label,
            node.func.domain(),
            node.func.codomain()
        );
    }
    for edge in diagram.edges() {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"= {}\"];",
            DIAGRAM_LABELS[edge.first], DIAGRAM_LABELS[edge.then], DIAGRAM_LABELS[edge.equals]
        );
    }
    out.push_str("}\n");
    out
}
