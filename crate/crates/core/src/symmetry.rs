//! The action of S_3 on ternary operations (stabilizers, orbits, symmetry
//! classes) and three associative binary operations on ternary parts.
//!
//! Convention note. The composite "g(2,3,1)" means compose3(g, e2, e3, e1),
//! i.e. the variable substitution x ↦ y, y ↦ z, z ↦ x, so as a table it is
//! (x,y,z) ↦ g(y,z,x). Off-by-one cycle conventions are the dominant bug
//! risk here; the convention is validated by the idempotence of the
//! dual-discriminator-type reference table under • and ⊚ and by the orbit
//! structure of its clone (see the module tests).

use crate::clone::compose3;
use crate::op::{FiniteOperation, OpError, PermutationS};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error(transparent)]
    Op(#[from] OpError),
    #[error("set is not closed under the variable action: element {index} maps outside")]
    NotClosedUnderAction { index: usize },
    #[error("set is not closed: product of elements {left} and {right} falls outside")]
    NotClosed { left: usize, right: usize },
    #[error("set is empty")]
    EmptySet,
}

/// Symmetry type of a ternary operation, read off its stabilizer subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryClass {
    /// Trivial stabilizer.
    Trivial,
    /// Stabilizer of order two, generated by the recorded transposition.
    Transpositional(PermutationS),
    /// Stabilizer A_3: invariant under cyclic permutations only.
    Cyclic,
    /// Stabilizer S_3: totally symmetric.
    Total,
}

impl SymmetryClass {
    pub fn name(&self) -> &'static str {
        match self {
            SymmetryClass::Trivial => "trivial",
            SymmetryClass::Transpositional(_) => "transpositional",
            SymmetryClass::Cyclic => "cyclic",
            SymmetryClass::Total => "total",
        }
    }
}

/// The stabilizer of f: all variable permutations leaving the table fixed.
pub fn stabilizer(f: &FiniteOperation) -> Result<Vec<PermutationS>, OpError> {
    if f.arity() != 3 {
        return Err(OpError::ArityMismatch {
            expected: 3,
            got: f.arity(),
        });
    }
    let mut out = Vec::new();
    for perm in PermutationS::all_ternary() {
        if &f.permute_variables(&perm)? == f {
            out.push(perm);
        }
    }
    Ok(out)
}

pub fn symmetry_class(f: &FiniteOperation) -> Result<SymmetryClass, OpError> {
    let stab = stabilizer(f)?;
    Ok(match stab.len() {
        1 => SymmetryClass::Trivial,
        2 => {
            let transposition = stab
                .into_iter()
                .find(|p| !p.is_identity())
                .expect("order-2 stabilizer");
            SymmetryClass::Transpositional(transposition)
        }
        3 => SymmetryClass::Cyclic,
        6 => SymmetryClass::Total,
        n => unreachable!("stabilizer of order {n} is not a subgroup of S_3"),
    })
}

/// Orbit partition of a set of ternary operations under the variable action.
/// The set must be closed under the action; orbits are returned as sorted
/// index lists, ordered by least member.
pub fn orbits(ops: &[FiniteOperation]) -> Result<Vec<Vec<usize>>, SymmetryError> {
    let perms = PermutationS::all_ternary();
    let index_of = |op: &FiniteOperation| ops.iter().position(|o| o == op);
    let mut orbit_of = vec![usize::MAX; ops.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..ops.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for perm in &perms {
            let image = ops[start].permute_variables(perm)?;
            let Some(i) = index_of(&image) else {
                return Err(SymmetryError::NotClosedUnderAction { index: start });
            };
            if orbit_of[i] == usize::MAX {
                orbit_of[i] = orbits.len();
                members.push(i);
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

/// The three binary operations on ternary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigroupOp {
    /// f∗g = f(g(1,2,3), g(2,3,1), g(3,1,2))
    Star,
    /// f•g = f(g(1,2,3), 2, 3)
    Bullet,
    /// f⊚g = f(1, g(1,2,3), g(1,3,2))
    Circ,
}

impl SemigroupOp {
    pub fn name(self) -> &'static str {
        match self {
            SemigroupOp::Star => "star",
            SemigroupOp::Bullet => "bullet",
            SemigroupOp::Circ => "circ",
        }
    }

    pub fn apply(
        self,
        f: &FiniteOperation,
        g: &FiniteOperation,
    ) -> Result<FiniteOperation, OpError> {
        match self {
            SemigroupOp::Star => star(f, g),
            SemigroupOp::Bullet => bullet(f, g),
            SemigroupOp::Circ => circ(f, g),
        }
    }
}

pub fn star(f: &FiniteOperation, g: &FiniteOperation) -> Result<FiniteOperation, OpError> {
    let rot = PermutationS::new(vec![2, 3, 1])?;
    let rot2 = PermutationS::new(vec![3, 1, 2])?;
    compose3(
        f,
        g,
        &g.permute_variables(&rot)?,
        &g.permute_variables(&rot2)?,
    )
}

pub fn bullet(f: &FiniteOperation, g: &FiniteOperation) -> Result<FiniteOperation, OpError> {
    let k = f.domain_size();
    compose3(
        f,
        g,
        &FiniteOperation::projection(k, 3, 2),
        &FiniteOperation::projection(k, 3, 3),
    )
}

pub fn circ(f: &FiniteOperation, g: &FiniteOperation) -> Result<FiniteOperation, OpError> {
    let k = f.domain_size();
    let swap23 = PermutationS::new(vec![1, 3, 2])?;
    compose3(
        f,
        &FiniteOperation::projection(k, 3, 1),
        g,
        &g.permute_variables(&swap23)?,
    )
}

/// Cayley table of a finite set under one of the binary operations, as row
/// major indices. Fails with the offending pair when the set is not closed.
pub fn cayley_table(
    elements: &[FiniteOperation],
    which: SemigroupOp,
) -> Result<Vec<u16>, SymmetryError> {
    if elements.is_empty() {
        return Err(SymmetryError::EmptySet);
    }
    let n = elements.len();
    let index: std::collections::HashMap<&FiniteOperation, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    // precompute the permuted companions of each right operand
    let rot = PermutationS::new(vec![2, 3, 1]).unwrap();
    let rot2 = PermutationS::new(vec![3, 1, 2]).unwrap();
    let swap23 = PermutationS::new(vec![1, 3, 2]).unwrap();
    let k = elements[0].domain_size();
    let e1 = FiniteOperation::projection(k, 3, 1);
    let e2 = FiniteOperation::projection(k, 3, 2);
    let e3 = FiniteOperation::projection(k, 3, 3);
    let mut table = vec![0u16; n * n];
    for (b, g) in elements.iter().enumerate() {
        let (a1, a2, a3) = match which {
            SemigroupOp::Star => (
                g.clone(),
                g.permute_variables(&rot).map_err(SymmetryError::Op)?,
                g.permute_variables(&rot2).map_err(SymmetryError::Op)?,
            ),
            SemigroupOp::Bullet => (g.clone(), e2.clone(), e3.clone()),
            SemigroupOp::Circ => (
                e1.clone(),
                g.clone(),
                g.permute_variables(&swap23).map_err(SymmetryError::Op)?,
            ),
        };
        for (a, f) in elements.iter().enumerate() {
            let product = compose3(f, &a1, &a2, &a3).map_err(SymmetryError::Op)?;
            match index.get(&product) {
                Some(&i) => table[a * n + b] = i as u16,
                None => return Err(SymmetryError::NotClosed { left: a, right: b }),
            }
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Associativity {
    Associative,
    /// Indices of a triple with (a∘b)∘c ≠ a∘(b∘c).
    Counterexample {
        a: usize,
        b: usize,
        c: usize,
    },
}

/// Exhaustively verifies (a∘b)∘c = a∘(b∘c) over the whole set.
pub fn check_associativity(
    elements: &[FiniteOperation],
    which: SemigroupOp,
) -> Result<Associativity, SymmetryError> {
    let cay = cayley_table(elements, which)?;
    Ok(check_cayley_associativity(&cay, elements.len()))
}

/// The exhaustive triple scan on a raw Cayley table (row-major, n×n). Exposed
/// so the scan itself can be exercised on a magma with a known
/// non-associative triple.
pub fn check_cayley_associativity(cay: &[u16], n: usize) -> Associativity {
    assert_eq!(cay.len(), n * n);
    for a in 0..n {
        for b in 0..n {
            let ab = cay[a * n + b] as usize;
            for c in 0..n {
                let bc = cay[b * n + c] as usize;
                if cay[ab * n + c] != cay[a * n + bc] {
                    return Associativity::Counterexample { a, b, c };
                }
            }
        }
    }
    Associativity::Associative
}

/// Finds an idempotent by power iteration with tortoise–hare cycle detection,
/// starting from the least element in table order. The powers of an element
/// of a finite semigroup are eventually periodic and the cycle contains an
/// idempotent power.
pub fn find_idempotent(
    elements: &[FiniteOperation],
    which: SemigroupOp,
) -> Result<FiniteOperation, SymmetryError> {
    let n = elements.len();
    let cay = cayley_table(elements, which)?;
    let start = (0..n)
        .min_by_key(|&i| &elements[i])
        .ok_or(SymmetryError::EmptySet)?;
    // s_t = a^(t+1); step is right multiplication by a
    let step = |x: usize| cay[x * n + start] as usize;
    let mut tortoise = step(start);
    let mut hare = step(step(start));
    while tortoise != hare {
        tortoise = step(tortoise);
        hare = step(step(hare));
    }
    // tail length mu
    let mut mu = 0usize;
    tortoise = start;
    while tortoise != hare {
        tortoise = step(tortoise);
        hare = step(hare);
        mu += 1;
    }
    // cycle length lambda
    let mut lambda = 1usize;
    hare = step(tortoise);
    while tortoise != hare {
        hare = step(hare);
        lambda += 1;
    }
    // a^m is idempotent iff lambda divides m and m lands inside the cycle
    let mut m = lambda;
    while m < mu + 1 {
        m += lambda;
    }
    let mut x = start;
    for _ in 1..m {
        x = step(x);
    }
    debug_assert_eq!(
        cay[x * n + x] as usize,
        x,
        "power iteration yields an idempotent"
    );
    Ok(elements[x].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clone::ternary_closure;
    use crate::reference;

    fn nontrivial_part(gen: &FiniteOperation) -> Vec<FiniteOperation> {
        let part = ternary_closure(std::slice::from_ref(gen)).unwrap();
        part.elements()[3..].to_vec()
    }

    #[test]
    fn stabilizers_of_reference_tables() {
        assert_eq!(stabilizer(&reference::m1()).unwrap().len(), 6);
        let s2 = stabilizer(&reference::m2()).unwrap();
        assert_eq!(s2.len(), 2);
        assert!(s2.iter().any(|p| p.images() == [1, 3, 2]));
        let s3 = stabilizer(&reference::m3()).unwrap();
        assert_eq!(s3.len(), 3);
        assert!(s3
            .iter()
            .all(|p| p.is_identity() || p.images() == [2, 3, 1] || p.images() == [3, 1, 2]));
    }

    #[test]
    fn symmetry_classes_of_reference_tables() {
        assert_eq!(
            symmetry_class(&reference::m1()).unwrap(),
            SymmetryClass::Total
        );
        assert_eq!(
            symmetry_class(&reference::m3()).unwrap(),
            SymmetryClass::Cyclic
        );
        match symmetry_class(&reference::m2()).unwrap() {
            SymmetryClass::Transpositional(p) => assert_eq!(p.images(), [1, 3, 2]),
            other => panic!("expected transpositional, got {other:?}"),
        }
    }

    #[test]
    fn orbit_structure_of_reference_clones() {
        // one orbit of size 3 for the three-majority clone
        let part2 = nontrivial_part(&reference::m2());
        let orbs = orbits(&part2).unwrap();
        assert_eq!(orbs.len(), 1);
        assert_eq!(orbs[0].len(), 3);

        // a single totally symmetric element forms one orbit of size 1
        let part1 = nontrivial_part(&reference::m1());
        let orbs = orbits(&part1).unwrap();
        assert_eq!(orbs.iter().map(Vec::len).collect::<Vec<_>>(), vec![1]);

        // the eight-majority clone splits into orbit sizes summing to 8,
        // computed by the table action directly
        let part3 = nontrivial_part(&reference::m3());
        let orbs = orbits(&part3).unwrap();
        let mut sizes: Vec<usize> = orbs.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes.iter().sum::<usize>(), 8);
        assert_eq!(sizes, vec![2, 6]);
    }

    #[test]
    fn orbits_reject_unclosed_sets() {
        let m2 = reference::m2();
        let err = orbits(std::slice::from_ref(&m2)).unwrap_err();
        assert!(matches!(
            err,
            SymmetryError::NotClosedUnderAction { index: 0 }
        ));
    }

    #[test]
    fn orbit_stabilizer_product_is_six() {
        for t in reference::three_element_tables() {
            let stab = stabilizer(&t.op).unwrap().len();
            let orbit: std::collections::HashSet<_> = PermutationS::all_ternary()
                .iter()
                .map(|p| t.op.permute_variables(p).unwrap())
                .collect();
            assert_eq!(stab * orbit.len(), 6, "{}", t.label);
        }
    }

    #[test]
    fn semigroup_idempotence_of_reference_tables() {
        let m1 = reference::m1();
        let m2 = reference::m2();
        assert_eq!(star(&m1, &m1).unwrap(), m1);
        assert_eq!(bullet(&m2, &m2).unwrap(), m2);
        assert_eq!(circ(&m2, &m2).unwrap(), m2);
    }

    #[test]
    fn bullet_against_pointwise_oracle() {
        // f•g evaluated entry by entry equals f(g(x,y,z), y, z)
        let f = reference::m3();
        let g = reference::m2();
        let product = bullet(&f, &g).unwrap();
        for x in 1..=3u8 {
            for y in 1..=3u8 {
                for z in 1..=3u8 {
                    let direct = f
                        .evaluate(&[g.evaluate(&[x, y, z]).unwrap(), y, z])
                        .unwrap();
                    assert_eq!(product.evaluate(&[x, y, z]).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn star_against_pointwise_oracle() {
        let f = reference::m2();
        let g = reference::m3();
        let product = star(&f, &g).unwrap();
        for x in 1..=3u8 {
            for y in 1..=3u8 {
                for z in 1..=3u8 {
                    let direct = f
                        .evaluate(&[
                            g.evaluate(&[x, y, z]).unwrap(),
                            g.evaluate(&[y, z, x]).unwrap(),
                            g.evaluate(&[z, x, y]).unwrap(),
                        ])
                        .unwrap();
                    assert_eq!(product.evaluate(&[x, y, z]).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn associativity_on_reference_parts() {
        for generator in [reference::m1(), reference::m2(), reference::m3()] {
            let part = nontrivial_part(&generator);
            for which in [SemigroupOp::Star, SemigroupOp::Bullet, SemigroupOp::Circ] {
                assert_eq!(
                    check_associativity(&part, which).unwrap(),
                    Associativity::Associative,
                    "{:?} on part of {:?}",
                    which,
                    generator.values()
                );
            }
        }
    }

    #[test]
    fn associativity_scan_catches_a_constructed_counterexample() {
        // subtraction mod 3 is a magma with (0-1)-1 = 1 but 0-(1-1) = 0
        let n = 3usize;
        let mut cay = vec![0u16; 9];
        for a in 0..3u16 {
            for b in 0..3u16 {
                cay[(a * 3 + b) as usize] = (a + 2 * b) % 3; // a - b mod 3
            }
        }
        match check_cayley_associativity(&cay, n) {
            Associativity::Counterexample { a, b, c } => {
                let ab = cay[a * n + b] as usize;
                let bc = cay[b * n + c] as usize;
                assert_ne!(cay[ab * n + c], cay[a * n + bc]);
            }
            Associativity::Associative => panic!("subtraction is not associative"),
        }
    }

    #[test]
    fn not_closed_is_reported_with_witness() {
        // a lone variable-asymmetric element of the eight-majority clone is
        // not star-closed: f ∗ f collapses two of its values the other way
        let m3b = reference::three_element_tables()[5].op.clone();
        let err = cayley_table(std::slice::from_ref(&m3b), SemigroupOp::Star).unwrap_err();
        assert!(matches!(
            err,
            SymmetryError::NotClosed { left: 0, right: 0 }
        ));
    }

    #[test]
    fn idempotents_exist_on_reference_parts() {
        // singleton case
        let m1 = vec![reference::m1()];
        assert_eq!(
            find_idempotent(&m1, SemigroupOp::Bullet).unwrap(),
            reference::m1()
        );
        for generator in [reference::m2(), reference::m3()] {
            let part = nontrivial_part(&generator);
            for which in [SemigroupOp::Star, SemigroupOp::Bullet, SemigroupOp::Circ] {
                let e = find_idempotent(&part, which).unwrap();
                assert_eq!(which.apply(&e, &e).unwrap(), e);
            }
        }
    }

    #[test]
    fn totally_symmetric_bullet_is_swap_invariant() {
        // if f and g are totally symmetric then f•g is invariant under (23)
        let swap23 = PermutationS::new(vec![1, 3, 2]).unwrap();
        let mut seen = 0;
        for f in crate::classify::enumerate_majority(
            3,
            crate::classify::MajorityFilter::TotallySymmetric,
        )
        .unwrap()
        {
            for g in crate::classify::enumerate_majority(
                3,
                crate::classify::MajorityFilter::TotallySymmetric,
            )
            .unwrap()
            {
                let prod = bullet(&f, &g).unwrap();
                assert_eq!(prod.permute_variables(&swap23).unwrap(), prod);
                seen += 1;
            }
        }
        assert_eq!(seen, 9);
    }
}
