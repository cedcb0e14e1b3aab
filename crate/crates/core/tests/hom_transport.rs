//! Randomized soundness audit of homomorphism transport: whenever the check
//! reports a map, evaluating any term in the source and transporting must
//! agree with evaluating the same term in the target.

use minclone::{ternary_hom_check, FiniteOperation, HomCheck, Term, DEFAULT_BUDGET};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_term(rng: &mut StdRng, depth: usize) -> Term {
    if depth == 0 || rng.random_bool(0.35) {
        Term::var(rng.random_range(1..=3))
    } else {
        Term::app(
            0,
            [
                random_term(rng, depth - 1),
                random_term(rng, depth - 1),
                random_term(rng, depth - 1),
            ],
        )
    }
}

#[test]
fn transported_terms_agree_with_direct_evaluation() {
    let m2 = minclone::reference::m2();
    for k in [3usize, 4, 5] {
        let target = FiniteOperation::reversed_dual_discriminator(k);
        let check = ternary_hom_check(&m2, &target, DEFAULT_BUDGET).unwrap();
        let HomCheck::Hom(map) = check else {
            panic!("a homomorphism into the reversed dual discriminator exists for k = {k}");
        };
        let source_gens = [m2.clone()];
        let target_gens = [target.clone()];
        let mut rng = StdRng::seed_from_u64(0x007a_1105);
        for _ in 0..1000 {
            let t = random_term(&mut rng, 4);
            let in_source = t.evaluate(&source_gens).unwrap();
            let idx = map
                .source
                .index_of(&in_source)
                .expect("term value is in the part");
            let transported = &map.images[idx];
            let in_target = t.evaluate(&target_gens).unwrap();
            assert_eq!(
                transported,
                &in_target,
                "term {} on domain {k}",
                t.to_prefix(1)
            );
        }
    }
}

#[test]
fn reversed_dual_discriminator_fails_the_single_majority_identities() {
    for k in [3usize, 4, 5] {
        let target = FiniteOperation::reversed_dual_discriminator(k);
        // membership in the three-majority variety but not the one-majority one
        assert!(
            k == 3 || !minclone::satisfies_m1_identities(&target).unwrap(),
            "k = {k}"
        );
        if k == 3 {
            // on three elements the reversed dual discriminator is the
            // reference table itself, which is not totally symmetric either
            assert!(!minclone::satisfies_m1_identities(&target).unwrap());
        }
    }
}
