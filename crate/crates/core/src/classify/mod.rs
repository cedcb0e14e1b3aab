//! Exhaustive and filtered searches over majority tables: enumeration, the
//! full three-element classification, verification of the four-element
//! reference tables, structural constraints on small clones, and restriction
//! profiles of conservative operations.

mod sweep;

use crate::clone::{
    is_minimal_majority_clone, ternary_closure, ternary_parts_isomorphic, CloneError,
};
use crate::dense3::Dense3;
use crate::op::{distinct_triples, DomainBijection, FiniteOperation};
use crate::reference::{self, Family};
use crate::symmetry::symmetry_class;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

pub(crate) use sweep::ScanData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("domain size {0} is over the enumeration budget for filter {1}")]
    DomainTooLarge(usize, &'static str),
    #[error("domain size {0} is too small, need at least {1}")]
    DomainTooSmall(usize, usize),
    #[error("operation is not a majority operation")]
    NotMajority,
    #[error("operation is not conservative")]
    NotConservative,
    #[error("operation does not generate a minimal clone")]
    NotMinimal,
    #[error("restriction to {{{}}} matches no reference table", subset.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","))]
    UnmatchedRestriction { subset: Vec<u8> },
    #[error("reference table data is unusable: {0}")]
    GoldenData(String),
    #[error(transparent)]
    Clone(#[from] CloneError),
}

/// Which majority tables to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorityFilter {
    /// Every majority table. Permitted for k ≤ 3 only.
    All,
    /// Totally symmetric tables: one free value per 3-subset. k ≤ 5.
    TotallySymmetric,
    /// Conservative tables: each free value drawn from its triple. k ≤ 5.
    Conservative,
}

impl MajorityFilter {
    fn name(self) -> &'static str {
        match self {
            MajorityFilter::All => "all",
            MajorityFilter::TotallySymmetric => "totally_symmetric",
            MajorityFilter::Conservative => "conservative",
        }
    }
}

/// Streams every majority table matching the filter exactly once, in
/// lexicographic order of the free-value vector.
pub fn enumerate_majority(
    domain_size: usize,
    filter: MajorityFilter,
) -> Result<MajorityEnumerator, ClassifyError> {
    if domain_size < 2 {
        return Err(ClassifyError::DomainTooSmall(domain_size, 2));
    }
    let cap = match filter {
        MajorityFilter::All => 3,
        _ => 5,
    };
    if domain_size > cap {
        return Err(ClassifyError::DomainTooLarge(domain_size, filter.name()));
    }
    let k = domain_size as u8;
    let positions: Vec<Position> = match filter {
        MajorityFilter::All => distinct_triples(domain_size)
            .into_iter()
            .map(|t| Position {
                triples: vec![t],
                choices: (1..=k).collect(),
            })
            .collect(),
        MajorityFilter::Conservative => distinct_triples(domain_size)
            .into_iter()
            .map(|t| {
                let mut choices = vec![t.0, t.1, t.2];
                choices.sort_unstable();
                Position {
                    triples: vec![t],
                    choices,
                }
            })
            .collect(),
        MajorityFilter::TotallySymmetric => {
            let mut positions = Vec::new();
            for a in 1..=k {
                for b in a + 1..=k {
                    for c in b + 1..=k {
                        let triples = vec![
                            (a, b, c),
                            (a, c, b),
                            (b, a, c),
                            (b, c, a),
                            (c, a, b),
                            (c, b, a),
                        ];
                        positions.push(Position {
                            triples,
                            choices: (1..=k).collect(),
                        });
                    }
                }
            }
            positions
        }
    };
    Ok(MajorityEnumerator {
        domain_size,
        state: vec![0; positions.len()],
        positions,
        started: false,
        done: false,
    })
}

struct Position {
    triples: Vec<(u8, u8, u8)>,
    choices: Vec<u8>,
}

pub struct MajorityEnumerator {
    domain_size: usize,
    positions: Vec<Position>,
    state: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for MajorityEnumerator {
    type Item = FiniteOperation;

    fn next(&mut self) -> Option<FiniteOperation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else {
            // odometer: last position fastest keeps the free vectors in
            // lexicographic order
            let mut i = self.positions.len();
            loop {
                if i == 0 {
                    self.done = true;
                    return None;
                }
                i -= 1;
                self.state[i] += 1;
                if self.state[i] < self.positions[i].choices.len() {
                    break;
                }
                self.state[i] = 0;
            }
        }
        let mut free: BTreeMap<(u8, u8, u8), u8> = BTreeMap::new();
        for (pos, &choice) in self.positions.iter().zip(&self.state) {
            let v = pos.choices[choice];
            for &t in &pos.triples {
                free.insert(t, v);
            }
        }
        let vector: Vec<u8> = distinct_triples(self.domain_size)
            .into_iter()
            .map(|t| free[&t])
            .collect();
        Some(
            FiniteOperation::majority_from_free_values(self.domain_size, &vector)
                .expect("enumerated table is valid"),
        )
    }
}

/// Closure data for all 729 majority tables on {1,2,3}. A table's code is
/// its index in the `All` enumeration order: the base-3 digits of the code
/// are the free values (minus one) over the lexicographically ordered
/// distinct triples.
pub struct ThreeElementScan {
    data: ScanData,
}

impl ThreeElementScan {
    pub fn run() -> ThreeElementScan {
        Self::run_with_threads(1)
    }

    pub fn run_with_threads(threads: usize) -> ThreeElementScan {
        ThreeElementScan {
            data: ScanData::run(threads),
        }
    }

    pub fn total(&self) -> usize {
        729
    }

    pub fn op_of_code(code: u16) -> FiniteOperation {
        assert!(code < 729);
        Dense3::get().op_of(code + 3)
    }

    /// The code of a majority table on {1,2,3}; `None` for anything else.
    pub fn code_of_op(op: &FiniteOperation) -> Option<u16> {
        if op.domain_size() != 3 || op.arity() != 3 || !op.is_majority().ok()? {
            return None;
        }
        Dense3::get().id_of(op).map(|id| id - 3)
    }

    /// Number of elements of the ternary part generated by the table.
    pub fn part_size(&self, code: u16) -> usize {
        self.data.closures[code as usize].count()
    }

    /// Codes of the majority tables inside the closure, sorted.
    pub fn majority_member_codes(&self, code: u16) -> Vec<u16> {
        self.data.closures[code as usize]
            .iter()
            .filter(|&id| id >= 3)
            .map(|id| id - 3)
            .collect()
    }

    /// The nontrivial part of the closure as concrete tables, in code order.
    pub fn nontrivial_part_ops(&self, code: u16) -> Vec<FiniteOperation> {
        let ctx = Dense3::get();
        self.data.closures[code as usize]
            .iter()
            .filter(|&id| id >= 3)
            .map(|id| ctx.op_of(id))
            .collect()
    }

    /// Whether f lies in the closure generated by g.
    pub fn generates(&self, g: u16, f: u16) -> bool {
        self.data.closures[g as usize].contains(f + 3)
    }

    /// Minimality by the generation criterion: every majority table in the
    /// closure of f must generate f back.
    pub fn is_minimal(&self, code: u16) -> bool {
        self.data.minimal(code)
    }

    pub fn minimal_codes(&self) -> Vec<u16> {
        (0..729u16).filter(|&c| self.is_minimal(c)).collect()
    }

    pub fn part_size_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for code in 0..729u16 {
            *hist.entry(self.part_size(code)).or_insert(0) += 1;
        }
        hist
    }
}

/// One isomorphism class (under domain relabeling) of minimal tables.
#[derive(Debug, Clone, Serialize)]
pub struct IsoClass {
    /// Value table of the least representative.
    pub representative: Vec<u8>,
    /// How many minimal tables are relabelings of the representative.
    pub class_size: usize,
    pub clone_part_size: usize,
    pub clone_majority_count: usize,
    /// Symmetry class name -> count over the clone's majority operations.
    pub symmetry_classes: BTreeMap<String, usize>,
    /// Label of the matching reference table, or "unmatched".
    pub matched_label: String,
}

/// One distinct minimal clone discovered by a run.
#[derive(Debug, Clone, Serialize)]
pub struct CloneSummary {
    pub part_size: usize,
    pub majority_count: usize,
    /// How many of the scanned minimal tables generate exactly this clone.
    pub minimal_generator_count: usize,
}

/// Machine-readable results of a classification run.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub domain_size: usize,
    pub total_majority: usize,
    pub minimal_majority: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part_size_histogram: Option<BTreeMap<String, usize>>,
    pub classes: Vec<IsoClass>,
    pub clones: Vec<CloneSummary>,
    /// Majority counts of the distinct clones up to relabeling isomorphism.
    pub clone_majority_counts_up_to_iso: Vec<usize>,
    /// Scope and convention statements that apply to the whole run.
    pub notes: Vec<String>,
    pub anomalies: Vec<String>,
}

const RELABELING_NOTE: &str =
    "isomorphism means domain relabeling only; variable-permuted mates are separate tables";
const TERNARY_PART_NOTE: &str =
    "clone isomorphisms are verified at the ternary-part level, not for the whole clone";

fn relabelings(op: &FiniteOperation) -> Vec<FiniteOperation> {
    DomainBijection::all(op.domain_size())
        .iter()
        .map(|s| op.relabel_domain(s).expect("same domain"))
        .collect()
}

fn matches_reference(
    op: &FiniteOperation,
    tables: &[reference::ReferenceTable],
) -> Option<&'static str> {
    let variants = relabelings(op);
    tables
        .iter()
        .find(|t| variants.contains(&t.op))
        .map(|t| t.label)
}

/// Scans all 729 majority tables on {1,2,3}, decides minimality of each,
/// groups the minimal ones by domain relabeling, and matches every class
/// against the three-element reference tables.
pub fn classify_three_element(threads: usize) -> ClassificationReport {
    let scan = ThreeElementScan::run_with_threads(threads);
    let minimal = scan.minimal_codes();
    let refs = reference::three_element_tables();
    let mut anomalies: Vec<String> = Vec::new();

    // group by relabeling: canonical code = least code over the 6 relabelings
    let canon_of = |code: u16| -> u16 {
        relabelings(&ThreeElementScan::op_of_code(code))
            .iter()
            .map(|r| ThreeElementScan::code_of_op(r).expect("relabeling stays majority"))
            .min()
            .unwrap()
    };
    let mut classes: BTreeMap<u16, Vec<u16>> = BTreeMap::new();
    for &code in &minimal {
        classes.entry(canon_of(code)).or_default().push(code);
    }

    let mut class_entries = Vec::new();
    for (&rep, members) in &classes {
        let rep_op = ThreeElementScan::op_of_code(rep);
        let matched_label = match matches_reference(&rep_op, refs) {
            Some(label) => label.to_string(),
            None => {
                anomalies.push(format!(
                    "minimal class with representative code {rep} matches no reference table"
                ));
                "unmatched".to_string()
            }
        };
        let mut symmetry_classes: BTreeMap<String, usize> = BTreeMap::new();
        for member in scan.nontrivial_part_ops(rep) {
            let name = symmetry_class(&member).expect("ternary").name().to_string();
            *symmetry_classes.entry(name).or_insert(0) += 1;
        }
        class_entries.push(IsoClass {
            representative: rep_op.values().to_vec(),
            class_size: members.len(),
            clone_part_size: scan.part_size(rep),
            clone_majority_count: scan.part_size(rep) - 3,
            symmetry_classes,
            matched_label,
        });
    }

    // distinct clones: group minimal generators by their closure set
    let mut clones: BTreeMap<Vec<u16>, Vec<u16>> = BTreeMap::new();
    for &code in &minimal {
        clones
            .entry(scan.majority_member_codes(code))
            .or_default()
            .push(code);
    }
    let clone_entries: Vec<CloneSummary> = clones
        .iter()
        .map(|(members, gens)| CloneSummary {
            part_size: members.len() + 3,
            majority_count: members.len(),
            minimal_generator_count: gens.len(),
        })
        .collect();

    // clones up to relabeling isomorphism: canonicalize the member set
    let mut iso_clones: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    for members in clones.keys() {
        let canon = DomainBijection::all(3)
            .iter()
            .map(|s| {
                let mut image: Vec<u16> = members
                    .iter()
                    .map(|&c| {
                        let r = ThreeElementScan::op_of_code(c).relabel_domain(s).unwrap();
                        ThreeElementScan::code_of_op(&r).unwrap()
                    })
                    .collect();
                image.sort_unstable();
                image
            })
            .min()
            .unwrap();
        *iso_clones.entry(canon).or_insert(0) += 1;
    }
    let mut clone_majority_counts_up_to_iso: Vec<usize> = iso_clones.keys().map(Vec::len).collect();
    clone_majority_counts_up_to_iso.sort_unstable();
    if clone_majority_counts_up_to_iso != vec![1, 3, 8] {
        anomalies.push(format!(
            "distinct clones up to isomorphism have majority counts {clone_majority_counts_up_to_iso:?}, expected [1, 3, 8]"
        ));
    }
    for entry in &class_entries {
        if ![4, 6, 11].contains(&entry.clone_part_size) {
            anomalies.push(format!(
                "clone part size {} outside {{4, 6, 11}}",
                entry.clone_part_size
            ));
        }
    }

    // derived regression pins
    let pins = &reference::pins().three_element;
    let histogram = scan.part_size_histogram();
    if minimal.len() != pins.minimal_majority_tables {
        anomalies.push(format!(
            "derived pin mismatch: {} minimal tables, pinned {}",
            minimal.len(),
            pins.minimal_majority_tables
        ));
    }
    if classes.len() != pins.relabeling_classes {
        anomalies.push(format!(
            "derived pin mismatch: {} relabeling classes, pinned {}",
            classes.len(),
            pins.relabeling_classes
        ));
    }
    if clones.len() != pins.distinct_minimal_clones {
        anomalies.push(format!(
            "derived pin mismatch: {} distinct clones, pinned {}",
            clones.len(),
            pins.distinct_minimal_clones
        ));
    }
    let pinned_hist: BTreeMap<usize, usize> = pins
        .part_size_histogram
        .iter()
        .map(|(k, &v)| (k.parse::<usize>().expect("pin keys are sizes"), v))
        .collect();
    if histogram != pinned_hist {
        anomalies.push(format!(
            "derived pin mismatch: part size histogram {histogram:?}"
        ));
    }

    ClassificationReport {
        schema_version: 1,
        domain_size: 3,
        total_majority: scan.total(),
        minimal_majority: minimal.len(),
        part_size_histogram: Some(
            histogram
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        ),
        classes: class_entries,
        clones: clone_entries,
        clone_majority_counts_up_to_iso,
        notes: vec![RELABELING_NOTE.to_string()],
        anomalies,
    }
}

/// Verifies the twelve four-element reference tables: majority,
/// nonconservative, minimal, clone majority counts 1/3/8, and ternary parts
/// isomorphic to the corresponding three-element clones.
pub fn verify_four_element_tables() -> Result<ClassificationReport, ClassifyError> {
    let refs = reference::try_four_element_tables().map_err(ClassifyError::GoldenData)?;
    let refs3 = reference::try_three_element_tables().map_err(ClassifyError::GoldenData)?;
    if refs.len() != 12 {
        return Err(ClassifyError::GoldenData(format!(
            "expected 12 tables, found {}",
            refs.len()
        )));
    }
    let mut anomalies = Vec::new();

    let mut parts = Vec::new();
    for t in refs {
        if !t.op.is_majority().unwrap_or(false) {
            anomalies.push(format!("{} is not a majority table", t.label));
        }
        if t.op.is_conservative() {
            anomalies.push(format!("{} is conservative", t.label));
        }
        match is_minimal_majority_clone(&t.op) {
            Ok(out) if out.verdict.is_minimal() => parts.push((t, out.part)),
            Ok(_) => anomalies.push(format!("{} does not generate a minimal clone", t.label)),
            Err(e) => anomalies.push(format!("{}: {e}", t.label)),
        }
    }

    // family structure: part sizes and clone membership
    for (t, part) in &parts {
        let expected_size = match t.family {
            Family::M1 => 4,
            Family::M2 => 6,
            Family::M3 => 11,
        };
        if part.len() != expected_size {
            anomalies.push(format!(
                "{} has part size {}, expected {expected_size}",
                t.label,
                part.len()
            ));
        }
    }
    for family in [Family::M1, Family::M2, Family::M3] {
        let Some((_, part)) = parts.iter().find(|(t, _)| t.family == family) else {
            continue;
        };
        // the clone's majority elements are exactly the columns of its family
        let family_tables: Vec<&FiniteOperation> = refs
            .iter()
            .filter(|t| t.family == family)
            .map(|t| &t.op)
            .collect();
        for ft in &family_tables {
            if !part.contains(ft) {
                anomalies.push(format!(
                    "family {} column missing from its clone",
                    family.label()
                ));
            }
        }
        if part.majority_count() != family_tables.len() {
            anomalies.push(format!(
                "family {} clone holds {} majority operations, expected {}",
                family.label(),
                part.majority_count(),
                family_tables.len()
            ));
        }
        // ternary part isomorphic to the three-element counterpart
        let counterpart = refs3
            .iter()
            .find(|t| t.family == family && t.op.domain_size() == 3);
        if let Some(counterpart) = counterpart {
            let small =
                ternary_closure(std::slice::from_ref(&counterpart.op)).expect("reference closure");
            if ternary_parts_isomorphic(part, &small).is_none() {
                anomalies.push(format!(
                    "clone of family {} is not isomorphic to its three-element counterpart",
                    family.label()
                ));
            }
        }
    }

    // relabeling classes among the twelve tables
    let canon = |op: &FiniteOperation| -> Vec<u8> {
        relabelings(op)
            .iter()
            .map(|r| r.values().to_vec())
            .min()
            .unwrap()
    };
    let mut classes: BTreeMap<Vec<u8>, Vec<&reference::ReferenceTable>> = BTreeMap::new();
    for t in refs {
        classes.entry(canon(&t.op)).or_default().push(t);
    }
    let mut class_entries = Vec::new();
    for members in classes.values() {
        let rep = members
            .iter()
            .min_by_key(|t| t.op.values().to_vec())
            .expect("class nonempty");
        let part = &parts
            .iter()
            .find(|(t, _)| t.label == rep.label)
            .expect("verified")
            .1;
        let mut symmetry_classes = BTreeMap::new();
        for e in part
            .elements()
            .iter()
            .filter(|e| e.is_majority().unwrap_or(false))
        {
            let name = symmetry_class(e).expect("ternary").name().to_string();
            *symmetry_classes.entry(name).or_insert(0) += 1;
        }
        class_entries.push(IsoClass {
            representative: rep.op.values().to_vec(),
            class_size: members.len(),
            clone_part_size: part.len(),
            clone_majority_count: part.majority_count(),
            symmetry_classes,
            matched_label: rep.label.to_string(),
        });
    }

    // distinct clones among the twelve
    let mut clones: BTreeMap<Vec<Vec<u8>>, usize> = BTreeMap::new();
    for (_, part) in &parts {
        let mut key: Vec<Vec<u8>> = part
            .elements()
            .iter()
            .map(|e| e.values().to_vec())
            .collect();
        key.sort_unstable();
        *clones.entry(key).or_insert(0) += 1;
    }
    let clone_entries: Vec<CloneSummary> = clones
        .iter()
        .map(|(members, &gens)| CloneSummary {
            part_size: members.len(),
            majority_count: members.len() - 3,
            minimal_generator_count: gens,
        })
        .collect();
    let mut counts: Vec<usize> = clone_entries.iter().map(|c| c.majority_count).collect();
    counts.sort_unstable();
    if counts != vec![1, 3, 8] {
        anomalies.push(format!(
            "clone majority counts {counts:?}, expected [1, 3, 8]"
        ));
    }

    Ok(ClassificationReport {
        schema_version: 1,
        domain_size: 4,
        total_majority: refs.len(),
        minimal_majority: parts.len(),
        part_size_histogram: None,
        classes: class_entries,
        clones: clone_entries,
        clone_majority_counts_up_to_iso: counts,
        notes: vec![RELABELING_NOTE.to_string(), TERNARY_PART_NOTE.to_string()],
        anomalies,
    })
}

/// Structural constraints on the small clones of a classification run: no
/// minimal clone carries exactly 2 or exactly 4 majority operations, and
/// every minimal part with at most 7 elements is isomorphic to the 4- or
/// 6-element reference part.
#[derive(Debug, Clone, Serialize)]
pub struct SmallCloneCheck {
    pub violations: Vec<String>,
}

impl SmallCloneCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_small_clone_constraints(report: &ClassificationReport) -> SmallCloneCheck {
    let mut violations = Vec::new();
    let part_m1 = ternary_closure(&[reference::m1()]).expect("reference closure");
    let part_m2 = ternary_closure(&[reference::m2()]).expect("reference closure");
    for class in &report.classes {
        let rep = FiniteOperation::new(report.domain_size, 3, class.representative.clone())
            .expect("representative table is valid");
        let part = match ternary_closure(std::slice::from_ref(&rep)) {
            Ok(p) => p,
            Err(e) => {
                violations.push(format!("closure of a representative failed: {e}"));
                continue;
            }
        };
        let majority = part.majority_count();
        if majority == 2 || majority == 4 {
            violations.push(format!(
                "minimal clone with exactly {majority} majority operations found"
            ));
        }
        if part.len() <= 7
            && ternary_parts_isomorphic(&part, &part_m1).is_none()
            && ternary_parts_isomorphic(&part, &part_m2).is_none()
        {
            violations.push(format!(
                "minimal part of size {} matches neither reference part",
                part.len()
            ));
        }
    }
    SmallCloneCheck { violations }
}

/// Restriction profile of a conservative minimal majority operation: which
/// reference class each 3-subset restriction lands in.
#[derive(Debug, Clone, Serialize)]
pub struct RestrictionProfile {
    pub entries: Vec<ProfileEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileEntry {
    pub subset: Vec<u8>,
    /// Matched reference column.
    pub label: String,
    /// Clone family of the matched column.
    pub family: String,
}

pub fn conservative_restriction_profile(
    f: &FiniteOperation,
) -> Result<RestrictionProfile, ClassifyError> {
    if !f.is_majority().map_err(CloneError::Op)? {
        return Err(ClassifyError::NotMajority);
    }
    if !f.is_conservative() {
        return Err(ClassifyError::NotConservative);
    }
    let k = f.domain_size();
    if k < 3 {
        return Err(ClassifyError::DomainTooSmall(k, 3));
    }
    if !is_minimal_majority_clone(f)?.verdict.is_minimal() {
        return Err(ClassifyError::NotMinimal);
    }
    let refs = reference::try_three_element_tables().map_err(ClassifyError::GoldenData)?;
    let mut entries = Vec::new();
    for a in 1..=k as u8 {
        for b in a + 1..=k as u8 {
            for c in b + 1..=k as u8 {
                let subset = vec![a, b, c];
                let restricted = f.restrict(&subset).map_err(CloneError::Op)?;
                match matches_reference(&restricted.op, refs) {
                    Some(label) => {
                        let family = refs
                            .iter()
                            .find(|t| t.label == label)
                            .expect("matched label exists")
                            .family;
                        entries.push(ProfileEntry {
                            subset,
                            label: label.to_string(),
                            family: family.label().to_string(),
                        });
                    }
                    None => return Err(ClassifyError::UnmatchedRestriction { subset }),
                }
            }
        }
    }
    Ok(RestrictionProfile { entries })
}

/// Agreement of the two minimality criteria over all 729 tables: the
/// generation route (every majority operation in the closure generates the
/// table back) and the subalgebra route (the subalgebra pipeline's closure of
/// each member equals the whole part).
#[derive(Debug, Clone)]
pub struct MinimalityCrossCheck {
    pub minimal_count: usize,
    /// Codes on which the two criteria disagree (must be empty).
    pub disagreements: Vec<u16>,
    /// Whether the two pipelines computed identical closure sets throughout.
    pub closure_sets_agree: bool,
}

impl MinimalityCrossCheck {
    pub fn agree(&self) -> bool {
        self.disagreements.is_empty() && self.closure_sets_agree
    }
}

pub fn minimality_cross_check(threads: usize) -> MinimalityCrossCheck {
    let scan = ScanData::run(threads);
    let quads = sweep::subalgebra_scan(threads);
    let mut disagreements = Vec::new();
    let mut minimal_count = 0usize;
    let mut closure_sets_agree = true;
    for code in 0..729u16 {
        let generation_route = scan.minimal(code);
        // subalgebra route: every nontrivial member's generated subalgebra is
        // the whole part
        let part = &quads[code as usize];
        let subalgebra_route = part
            .iter()
            .filter(|&id| id >= 3)
            .all(|id| &quads[(id - 3) as usize] == part);
        if generation_route {
            minimal_count += 1;
        }
        if generation_route != subalgebra_route {
            disagreements.push(code);
        }
        if scan.closures[code as usize] != quads[code as usize] {
            closure_sets_agree = false;
        }
    }
    MinimalityCrossCheck {
        minimal_count,
        disagreements,
        closure_sets_agree,
    }
}
