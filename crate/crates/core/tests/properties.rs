//! Property tests for the action laws, predicate invariances, and closure
//! invariants.

use minclone::{
    enumerate_majority, satisfies_m1_identities, stabilizer, ternary_closure, DomainBijection,
    FiniteOperation, MajorityFilter, PermutationS, ThreeElementScan,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn scan() -> &'static ThreeElementScan {
    static SCAN: OnceLock<ThreeElementScan> = OnceLock::new();
    SCAN.get_or_init(ThreeElementScan::run)
}

fn arb_operation(max_domain: usize, arity: usize) -> impl Strategy<Value = FiniteOperation> {
    (2..=max_domain).prop_flat_map(move |k| {
        prop::collection::vec(1..=k as u8, k.pow(arity as u32))
            .prop_map(move |values| FiniteOperation::new(k, arity, values).unwrap())
    })
}

fn arb_perm(arity: usize) -> impl Strategy<Value = PermutationS> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<u8> = (1..=arity as u8).collect();
        for i in (1..images.len()).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            images.swap(i, j);
        }
        PermutationS::new(images).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permuting_variables_is_a_group_action(
        op in arb_operation(4, 3),
        pi in arb_perm(3),
        rho in arb_perm(3),
    ) {
        let one_by_one = op.permute_variables(&pi).unwrap().permute_variables(&rho).unwrap();
        let composite = op.permute_variables(&rho.compose(&pi)).unwrap();
        prop_assert_eq!(one_by_one, composite);
        let id = PermutationS::identity(3);
        prop_assert_eq!(op.permute_variables(&id).unwrap(), op);
    }

    #[test]
    fn relabeling_is_a_group_action_and_commutes_with_permuting(
        op in arb_operation(4, 3),
        pi in arb_perm(3),
    ) {
        let k = op.domain_size();
        let id = DomainBijection::identity(k);
        prop_assert_eq!(op.relabel_domain(&id).unwrap(), op.clone());
        for sigma in DomainBijection::all(k) {
            for tau in DomainBijection::all(k) {
                let step = op.relabel_domain(&sigma).unwrap().relabel_domain(&tau).unwrap();
                // tau after sigma
                let composite_images: Vec<u8> =
                    (1..=k as u8).map(|a| tau.image(sigma.image(a))).collect();
                let composite = DomainBijection::new(composite_images).unwrap();
                prop_assert_eq!(step, op.relabel_domain(&composite).unwrap());
            }
            // relabeling commutes with variable permutation
            let a = op.relabel_domain(&sigma).unwrap().permute_variables(&pi).unwrap();
            let b = op.permute_variables(&pi).unwrap().relabel_domain(&sigma).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn majority_implies_near_unanimity_and_predicates_are_invariant(
        op in arb_operation(4, 3),
        pi in arb_perm(3),
    ) {
        if op.is_majority().unwrap() {
            prop_assert!(op.is_near_unanimity().unwrap());
        }
        let permuted = op.permute_variables(&pi).unwrap();
        prop_assert_eq!(permuted.is_majority().unwrap(), op.is_majority().unwrap());
        prop_assert_eq!(permuted.is_conservative(), op.is_conservative());
        for sigma in DomainBijection::all(op.domain_size()) {
            let relabeled = op.relabel_domain(&sigma).unwrap();
            prop_assert_eq!(relabeled.is_majority().unwrap(), op.is_majority().unwrap());
            prop_assert_eq!(relabeled.is_conservative(), op.is_conservative());
        }
    }

    #[test]
    fn restricting_to_the_full_domain_is_identity(op in arb_operation(4, 2)) {
        let k = op.domain_size();
        let full: Vec<u8> = (1..=k as u8).collect();
        let r = op.restrict(&full).unwrap();
        prop_assert_eq!(r.op, op);
        prop_assert_eq!(r.labels, full);
    }

    #[test]
    fn orbit_times_stabilizer_is_six(op in arb_operation(5, 3)) {
        let stab = stabilizer(&op).unwrap().len();
        let orbit: std::collections::HashSet<_> = PermutationS::all_ternary()
            .iter()
            .map(|p| op.permute_variables(p).unwrap())
            .collect();
        prop_assert_eq!(stab * orbit.len(), 6);
    }
}

#[test]
fn minimality_is_relabeling_invariant_on_the_full_run() {
    let scan = scan();
    for code in 0..729u16 {
        let expected = scan.is_minimal(code);
        let op = ThreeElementScan::op_of_code(code);
        for sigma in DomainBijection::all(3) {
            let relabeled = op.relabel_domain(&sigma).unwrap();
            let rcode = ThreeElementScan::code_of_op(&relabeled).unwrap();
            assert_eq!(scan.is_minimal(rcode), expected, "code {code}");
        }
    }
}

#[test]
fn closures_contain_variable_permutations_of_members() {
    let scan = scan();
    for code in (0..729u16).step_by(13) {
        for member in scan.nontrivial_part_ops(code) {
            for p in PermutationS::all_ternary() {
                let permuted = member.permute_variables(&p).unwrap();
                let pcode = ThreeElementScan::code_of_op(&permuted).unwrap();
                assert!(scan.generates(code, pcode), "code {code}");
            }
        }
    }
}

#[test]
fn closure_members_are_majority_or_projection() {
    // one part of each observed size, through the clone engine itself
    let scan = scan();
    let mut picked: Vec<u16> = Vec::new();
    let mut seen_sizes = std::collections::HashSet::new();
    for code in 0..729u16 {
        if seen_sizes.insert(scan.part_size(code)) {
            picked.push(code);
        }
    }
    for table in minclone::reference::four_element_tables() {
        let part = ternary_closure(std::slice::from_ref(&table.op)).unwrap();
        for e in part.elements() {
            assert!(e.is_projection().is_some() || e.is_majority().unwrap());
        }
    }
    for code in picked {
        let part = ternary_closure(&[ThreeElementScan::op_of_code(code)]).unwrap();
        assert_eq!(
            part.len(),
            scan.part_size(code),
            "engines agree on code {code}"
        );
        for e in part.elements() {
            assert!(e.is_projection().is_some() || e.is_majority().unwrap());
        }
    }
}

#[test]
fn majority_identities_force_m1_shape() {
    // the totally symmetric majority tables on {1,2,3} are the three constant
    // free-value tables, and each satisfies the single-majority identities
    let mut count = 0;
    for op in enumerate_majority(3, MajorityFilter::TotallySymmetric).unwrap() {
        if satisfies_m1_identities(&op).unwrap() {
            count += 1;
        }
    }
    assert_eq!(count, 3);
}
