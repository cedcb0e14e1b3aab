//! Structural assertions over the full classification output, plus the
//! enumeration-oracle example for a non-minimal table.

use minclone::{
    is_minimal_majority_clone, orbits, symmetry_class, DomainBijection, SymmetryClass,
    ThreeElementScan,
};
use std::sync::OnceLock;

fn scan() -> &'static ThreeElementScan {
    static SCAN: OnceLock<ThreeElementScan> = OnceLock::new();
    SCAN.get_or_init(ThreeElementScan::run)
}

/// The least majority table (in table order) that is not a domain relabeling
/// of any reference column, found by exhaustive search.
fn least_unmatched_code() -> u16 {
    let refs = minclone::reference::three_element_tables();
    let bijections = DomainBijection::all(3);
    'codes: for code in 0..729u16 {
        let op = ThreeElementScan::op_of_code(code);
        for sigma in &bijections {
            let relabeled = op.relabel_domain(sigma).unwrap();
            if refs.iter().any(|t| t.op == relabeled) {
                continue 'codes;
            }
        }
        return code;
    }
    panic!("some table is not isomorphic to a reference column: 729 > 12·6");
}

#[test]
fn least_non_reference_table_is_not_minimal() {
    let code = least_unmatched_code();
    // table order equals code order, so this really is the least such table
    assert!(!scan().is_minimal(code), "code {code}");
    let op = ThreeElementScan::op_of_code(code);
    let outcome = is_minimal_majority_clone(&op).unwrap();
    assert!(
        !outcome.verdict.is_minimal(),
        "clone engine agrees on code {code}"
    );
}

#[test]
fn minimal_parts_with_two_or_more_elements_have_a_big_orbit() {
    // some orbit of the nontrivial part has at least 3 elements
    let scan = scan();
    for code in scan.minimal_codes() {
        let part = scan.nontrivial_part_ops(code);
        if part.len() < 2 {
            continue;
        }
        let orbit_sizes: Vec<usize> = orbits(&part).unwrap().iter().map(Vec::len).collect();
        assert!(
            orbit_sizes.iter().any(|&s| s >= 3),
            "code {code}: orbit sizes {orbit_sizes:?}"
        );
    }
}

#[test]
fn all_cyclic_forces_a_single_majority_operation() {
    // if every nontrivial element of a minimal part is cyclically symmetric,
    // the part has exactly one nontrivial element; equivalently every bigger
    // minimal part contains an element that is not cyclically symmetric
    let scan = scan();
    for code in scan.minimal_codes() {
        let part = scan.nontrivial_part_ops(code);
        let all_cyclic = part.iter().all(|e| {
            matches!(
                symmetry_class(e).unwrap(),
                SymmetryClass::Cyclic | SymmetryClass::Total
            )
        });
        if all_cyclic {
            assert_eq!(part.len(), 1, "code {code}");
        }
        if part.len() >= 2 {
            assert!(
                part.iter().any(|e| !matches!(
                    symmetry_class(e).unwrap(),
                    SymmetryClass::Cyclic | SymmetryClass::Total
                )),
                "code {code}"
            );
        }
    }
}

#[test]
fn minimal_tables_split_one_three_eight_by_family() {
    // each minimal table's clone has 1, 3, or 8 majority operations
    let scan = scan();
    let mut by_count = std::collections::BTreeMap::new();
    for code in scan.minimal_codes() {
        *by_count.entry(scan.part_size(code) - 3).or_insert(0usize) += 1;
    }
    assert_eq!(by_count, [(1, 3), (3, 3), (8, 24)].into_iter().collect());
}

#[test]
fn clone_engine_minimality_agrees_with_the_scan() {
    // every minimal code (cheap parts) plus a few non-minimal ones of each
    // observed part size, through the full engine path
    let scan = scan();
    let mut samples: Vec<u16> = scan.minimal_codes();
    let mut seen_sizes = std::collections::HashSet::new();
    for code in 0..729u16 {
        if !scan.is_minimal(code) && seen_sizes.insert(scan.part_size(code)) {
            samples.push(code);
        }
    }
    for code in samples {
        let op = ThreeElementScan::op_of_code(code);
        let outcome = is_minimal_majority_clone(&op).unwrap();
        assert_eq!(
            outcome.verdict.is_minimal(),
            scan.is_minimal(code),
            "code {code}"
        );
        assert_eq!(outcome.part.len(), scan.part_size(code), "code {code}");
    }
}

#[test]
fn nu_reduction_never_yields_a_projection() {
    // all 64 near-unanimity tables of arity 4 on {1,2}: the free positions
    // are the tuples with two entries of each value
    use minclone::nu_reduce;
    for bits in 0..64u32 {
        let mut values = Vec::with_capacity(16);
        let mut free = 0;
        for t in 0..16usize {
            let args: Vec<u8> = (0..4).rev().map(|i| ((t >> i) & 1) as u8 + 1).collect();
            let ones = args.iter().filter(|&&a| a == 1).count();
            values.push(match ones {
                3 | 4 => 1,
                0 | 1 => 2,
                _ => {
                    let v = ((bits >> free) & 1) as u8 + 1;
                    free += 1;
                    v
                }
            });
        }
        let g = minclone::FiniteOperation::new(2, 4, values).unwrap();
        assert!(g.is_near_unanimity().unwrap());
        let reduced = nu_reduce(&g).unwrap();
        assert_eq!(reduced.arity(), 3);
        // the reduction is nontrivial but need not stay near-unanimity for
        // an arbitrary near-unanimity table
        assert!(reduced.is_projection().is_none(), "bits {bits}");
    }
}
