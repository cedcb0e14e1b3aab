//! The reference tables: the twelve minimal majority operations on the
//! three-element set and the twelve nonconservative ones on the four-element
//! set, shipped as normative JSON operation tables.
//!
//! Columns are labeled m1, m2, m2b, m2c, m3, m3b–m3h (and M1, … for the
//! four-element set); the letter suffixes distinguish the variable-permuted
//! mates inside one clone, which the tables list as separate columns.

use crate::op::{FiniteOperation, OpFile};
use std::sync::OnceLock;

/// Which clone of the reference classification a table generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// The clone with a single majority operation.
    M1,
    /// The clone with three majority operations (dual-discriminator type).
    M2,
    /// The clone with eight majority operations.
    M3,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::M1 => "m1",
            Family::M2 => "m2",
            Family::M3 => "m3",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReferenceTable {
    pub label: &'static str,
    pub family: Family,
    pub op: FiniteOperation,
}

macro_rules! embed {
    ($dir:literal, $name:literal) => {
        include_str!(concat!("../data/", $dir, "/", $name, ".json"))
    };
}

const THREE_ELEMENT_RAW: [(&str, Family, &str); 12] = [
    ("m1", Family::M1, embed!("three_element", "m1")),
    ("m2", Family::M2, embed!("three_element", "m2")),
    ("m2b", Family::M2, embed!("three_element", "m2b")),
    ("m2c", Family::M2, embed!("three_element", "m2c")),
    ("m3", Family::M3, embed!("three_element", "m3")),
    ("m3b", Family::M3, embed!("three_element", "m3b")),
    ("m3c", Family::M3, embed!("three_element", "m3c")),
    ("m3d", Family::M3, embed!("three_element", "m3d")),
    ("m3e", Family::M3, embed!("three_element", "m3e")),
    ("m3f", Family::M3, embed!("three_element", "m3f")),
    ("m3g", Family::M3, embed!("three_element", "m3g")),
    ("m3h", Family::M3, embed!("three_element", "m3h")),
];

const FOUR_ELEMENT_RAW: [(&str, Family, &str); 12] = [
    ("M1", Family::M1, embed!("four_element", "M1")),
    ("M2", Family::M2, embed!("four_element", "M2")),
    ("M2b", Family::M2, embed!("four_element", "M2b")),
    ("M2c", Family::M2, embed!("four_element", "M2c")),
    ("M3", Family::M3, embed!("four_element", "M3")),
    ("M3b", Family::M3, embed!("four_element", "M3b")),
    ("M3c", Family::M3, embed!("four_element", "M3c")),
    ("M3d", Family::M3, embed!("four_element", "M3d")),
    ("M3e", Family::M3, embed!("four_element", "M3e")),
    ("M3f", Family::M3, embed!("four_element", "M3f")),
    ("M3g", Family::M3, embed!("four_element", "M3g")),
    ("M3h", Family::M3, embed!("four_element", "M3h")),
];

fn parse(raw: &[(&'static str, Family, &str)]) -> Result<Vec<ReferenceTable>, String> {
    raw.iter()
        .map(|&(label, family, json)| {
            let file: OpFile =
                serde_json::from_str(json).map_err(|e| format!("table {label}: {e}"))?;
            let op = file.into_op().map_err(|e| format!("table {label}: {e}"))?;
            Ok(ReferenceTable { label, family, op })
        })
        .collect()
}

/// The twelve three-element reference tables, in printed column order.
pub fn try_three_element_tables() -> Result<&'static [ReferenceTable], String> {
    static TABLES: OnceLock<Result<Vec<ReferenceTable>, String>> = OnceLock::new();
    TABLES
        .get_or_init(|| parse(&THREE_ELEMENT_RAW))
        .as_ref()
        .map(Vec::as_slice)
        .map_err(Clone::clone)
}

pub fn three_element_tables() -> &'static [ReferenceTable] {
    try_three_element_tables().expect("embedded reference tables are valid")
}

/// The twelve four-element reference tables, in printed column order.
pub fn try_four_element_tables() -> Result<&'static [ReferenceTable], String> {
    static TABLES: OnceLock<Result<Vec<ReferenceTable>, String>> = OnceLock::new();
    TABLES
        .get_or_init(|| parse(&FOUR_ELEMENT_RAW))
        .as_ref()
        .map(Vec::as_slice)
        .map_err(Clone::clone)
}

pub fn four_element_tables() -> &'static [ReferenceTable] {
    try_four_element_tables().expect("embedded reference tables are valid")
}

fn by_label(tables: &'static [ReferenceTable], label: &str) -> FiniteOperation {
    tables
        .iter()
        .find(|t| t.label == label)
        .unwrap_or_else(|| panic!("no reference table {label}"))
        .op
        .clone()
}

pub fn m1() -> FiniteOperation {
    by_label(three_element_tables(), "m1")
}

pub fn m2() -> FiniteOperation {
    by_label(three_element_tables(), "m2")
}

pub fn m3() -> FiniteOperation {
    by_label(three_element_tables(), "m3")
}

pub fn big_m1() -> FiniteOperation {
    by_label(four_element_tables(), "M1")
}

pub fn big_m2() -> FiniteOperation {
    by_label(four_element_tables(), "M2")
}

pub fn big_m3() -> FiniteOperation {
    by_label(four_element_tables(), "M3")
}

/// Derived regression pins for the exhaustive three-element scan.
#[derive(Debug, Clone, serde::Deserialize)]
pub struct Pins {
    pub three_element: ThreeElementPins,
}

#[derive(Debug, Clone, serde::Deserialize)]
pub struct ThreeElementPins {
    pub total_majority_tables: usize,
    pub minimal_majority_tables: usize,
    pub relabeling_classes: usize,
    pub distinct_minimal_clones: usize,
    pub clone_majority_counts: Vec<usize>,
    pub part_size_histogram: std::collections::BTreeMap<String, usize>,
    pub distinct_closure_sets: usize,
}

pub fn pins() -> &'static Pins {
    static PINS: OnceLock<Pins> = OnceLock::new();
    PINS.get_or_init(|| {
        serde_json::from_str(include_str!("../data/pins.json")).expect("pins.json parses")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_reference_tables_are_majority() {
        for t in three_element_tables().iter().chain(four_element_tables()) {
            assert!(
                t.op.is_majority().unwrap(),
                "{} is a majority table",
                t.label
            );
        }
    }

    #[test]
    fn family_sizes_are_one_three_eight() {
        for tables in [three_element_tables(), four_element_tables()] {
            let count = |f: Family| tables.iter().filter(|t| t.family == f).count();
            assert_eq!(count(Family::M1), 1);
            assert_eq!(count(Family::M2), 3);
            assert_eq!(count(Family::M3), 8);
        }
    }

    #[test]
    fn printed_values_spot_checks() {
        // values straight from the printed columns
        assert_eq!(m2().evaluate(&[1, 2, 3]).unwrap(), 1);
        assert_eq!(m2().evaluate(&[2, 1, 3]).unwrap(), 2);
        assert_eq!(m3().evaluate(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(m3().evaluate(&[2, 1, 3]).unwrap(), 1);
        assert_eq!(big_m1().evaluate(&[1, 2, 3]).unwrap(), 4);
        assert_eq!(big_m2().evaluate(&[2, 3, 1]).unwrap(), 2);
        assert_eq!(big_m2().evaluate(&[2, 3, 4]).unwrap(), 2);
        // bracket rows: both orderings of {1,2,4} and {1,3,4} give 4
        for t in four_element_tables() {
            for &(a, b, c) in &[(1u8, 2, 4), (2, 4, 1), (4, 1, 2), (1, 4, 3), (3, 1, 4)] {
                assert_eq!(t.op.evaluate(&[a, b, c]).unwrap(), 4, "{}", t.label);
            }
        }
    }

    #[test]
    fn m2_is_reversed_dual_discriminator_and_m2c_is_dual_discriminator() {
        assert_eq!(m2(), FiniteOperation::reversed_dual_discriminator(3));
        let m2c = by_label(three_element_tables(), "m2c");
        assert_eq!(m2c, FiniteOperation::dual_discriminator(3));
    }

    #[test]
    fn pins_parse() {
        assert_eq!(pins().three_element.total_majority_tables, 729);
        assert_eq!(pins().three_element.minimal_majority_tables, 30);
    }
}
