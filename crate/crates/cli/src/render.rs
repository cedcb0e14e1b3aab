//! Plain-text rendering. Purely a formatting layer over the JSON payloads.

use crate::{AnOutput, AnalysisResult, HomOutput, MinimalOutput, SemigroupOutput};
use minclone::classify::{ClassificationReport, RestrictionProfile};
use minclone::{FiniteOperation, TernaryPart};
use std::fmt::Write;

pub fn analysis(r: &AnalysisResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", r.input);
    if let Some(name) = &r.name {
        let _ = writeln!(s, "name: {name}");
    }
    let _ = writeln!(s, "domain: {}  arity: {}", r.domain, r.arity);
    match r.projection {
        Some(i) => {
            let _ = writeln!(s, "projection onto coordinate {i}");
        }
        None => {
            let _ = writeln!(s, "not a projection");
        }
    }
    if let Some(m) = r.majority {
        let _ = writeln!(s, "majority: {m}");
    }
    if let Some(nu) = r.near_unanimity {
        let _ = writeln!(s, "near-unanimity: {nu}");
    }
    let _ = writeln!(s, "conservative: {}", r.conservative);
    if let Some(sym) = &r.symmetry {
        let _ = writeln!(
            s,
            "symmetry: {sym} (stabilizer {}, orbit {})",
            r.stabilizer_size.unwrap(),
            r.orbit_size.unwrap()
        );
    }
    if let Some(size) = r.part_size {
        let _ = writeln!(
            s,
            "ternary part: {size} elements, {} majority operations",
            r.majority_count.unwrap()
        );
    }
    match (r.minimal, &r.minimality_witness) {
        (Some(true), _) => {
            let _ = writeln!(s, "generates a minimal clone");
        }
        (Some(false), Some(w)) => {
            let _ = writeln!(s, "not minimal; witness table {w:?}");
        }
        _ => {}
    }
    if let Some(idem) = &r.idempotents {
        for (op, table) in idem {
            let _ = writeln!(s, "idempotent under {op}: {table:?}");
        }
    }
    s.trim_end().to_string()
}

pub fn part(p: &TernaryPart) -> String {
    let export = p.to_export();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "domain {}  elements {}",
        export.domain,
        export.elements.len()
    );
    for (i, e) in export.elements.iter().enumerate() {
        let kind = if e.majority { "majority" } else { "trivial " };
        let _ = writeln!(s, "{i:3}  {kind}  {}  {:?}", e.witness, e.values);
    }
    s.trim_end().to_string()
}

pub fn minimal(m: &MinimalOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "minimal: {}  part size {}  majority count {}",
        m.minimal, m.part_size, m.majority_count
    );
    if let Some(w) = &m.witness {
        let _ = writeln!(
            s,
            "witness {w:?} generates only {} elements",
            m.witness_generates.unwrap()
        );
    }
    s.trim_end().to_string()
}

pub fn semigroup(out: &SemigroupOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} on {} nontrivial elements", out.op, out.size);
    let _ = write!(s, "    ");
    for b in 0..out.size {
        let _ = write!(s, "{b:4}");
    }
    let _ = writeln!(s);
    for (a, row) in out.cayley.iter().enumerate() {
        let _ = write!(s, "{a:4}");
        for v in row {
            let _ = write!(s, "{v:4}");
        }
        let _ = writeln!(s);
    }
    let _ = writeln!(s, "idempotents: {:?}", out.idempotents);
    s.trim_end().to_string()
}

pub fn an(out: &AnOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "midpoint algebra on {} elements", out.n);
    if let (Some(check), Some(holds)) = (&out.check, out.holds) {
        let _ = writeln!(s, "check {check}: {holds}");
    }
    if let Some((a, b)) = out.pair {
        let _ = writeln!(
            s,
            "principal congruence of ({a},{b}): full = {}",
            out.collapses_to_full.unwrap()
        );
        let _ = writeln!(s, "blocks: {:?}", out.blocks.as_ref().unwrap());
        let _ = writeln!(s, "merges: {:?}", out.merges.as_ref().unwrap());
    }
    if let Some(table) = &out.table {
        let _ = writeln!(s, "table: {}", serde_json::to_string(table).unwrap());
    }
    s.trim_end().to_string()
}

pub fn hom(out: &HomOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "homomorphism found: {}", out.found);
    if let (Some(images), Some(witnesses)) = (&out.images, &out.witnesses) {
        for (w, img) in witnesses.iter().zip(images) {
            let _ = writeln!(s, "  {w} -> {img:?}");
        }
    }
    if let Some(v) = &out.violation {
        let _ = writeln!(
            s,
            "violated at arguments {:?}: transported {:?} but target composes to {:?}",
            v.outer_args, v.transported, v.target_composed
        );
    }
    s.trim_end().to_string()
}

/// A summary shaped like the printed classification tables: one row per
/// distinct triple, one column per matched class.
pub fn classification(report: &ClassificationReport) -> String {
    let k = report.domain_size;
    let rows: Vec<[u8; 3]> = if k == 3 {
        vec![
            [1, 2, 3],
            [2, 3, 1],
            [3, 1, 2],
            [2, 1, 3],
            [1, 3, 2],
            [3, 2, 1],
        ]
    } else {
        vec![
            [1, 2, 3],
            [2, 3, 1],
            [3, 1, 2],
            [2, 1, 3],
            [1, 3, 2],
            [3, 2, 1],
            [4, 2, 3],
            [2, 3, 4],
            [3, 4, 2],
            [2, 4, 3],
            [4, 3, 2],
            [3, 2, 4],
        ]
    };
    let mut columns: Vec<(&str, FiniteOperation)> = Vec::new();
    let reference = if k == 3 {
        minclone::reference::three_element_tables()
    } else {
        minclone::reference::four_element_tables()
    };
    for class in &report.classes {
        // show the matched reference column when there is one, so the text
        // lines up with the printed table
        match reference.iter().find(|t| t.label == class.matched_label) {
            Some(t) => columns.push((t.label, t.op.clone())),
            None => columns.push((
                "??",
                FiniteOperation::new(k, 3, class.representative.clone()).expect("valid table"),
            )),
        }
    }
    columns.sort_by_key(|(label, _)| {
        reference
            .iter()
            .position(|t| &t.label == label)
            .unwrap_or(usize::MAX)
    });
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} majority tables, {} minimal, {} classes",
        report.total_majority,
        report.minimal_majority,
        report.classes.len()
    );
    let _ = write!(s, "{:>9} ", "");
    for (label, _) in &columns {
        let _ = write!(s, "{label:>4}");
    }
    let _ = writeln!(s);
    for row in &rows {
        let _ = write!(s, "({},{},{}) ", row[0], row[1], row[2]);
        for (_, op) in &columns {
            let _ = write!(s, "{:>4}", op.evaluate(row).expect("valid row"));
        }
        let _ = writeln!(s);
    }
    if k == 4 {
        let _ = writeln!(s, "every ordering of {{1,2,4}} and {{1,3,4}} maps to 4");
    }
    for anomaly in &report.anomalies {
        let _ = writeln!(s, "ANOMALY: {anomaly}");
    }
    s.trim_end().to_string()
}

pub fn profile(p: &RestrictionProfile) -> String {
    let mut s = String::new();
    for e in &p.entries {
        let subset: Vec<String> = e.subset.iter().map(u8::to_string).collect();
        let _ = writeln!(
            s,
            "{{{}}} -> {} ({} family)",
            subset.join(","),
            e.label,
            e.family
        );
    }
    s.trim_end().to_string()
}
