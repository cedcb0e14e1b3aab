//! A family of simple algebras with one totally symmetric majority operation
//! built from a midpoint rule on the chain 1 < 2 < … < n, together with
//! principal congruence generation, simplicity, and ideal closures.
//!
//! For a < b < c the value is b when b is a midpoint of the segment [a, c]
//! (segments of odd length have two midpoints), and otherwise the endpoint
//! farther from b. The table is completed by total symmetry and the majority
//! rule.

use crate::op::{FiniteOperation, OpError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error(transparent)]
    Op(#[from] OpError),
    #[error("operation is not a majority operation")]
    NotMajority,
}

/// Builds the n-element midpoint majority algebra's basic operation.
pub fn midpoint_algebra(n: usize) -> FiniteOperation {
    assert!(n >= 2, "need at least two elements");
    FiniteOperation::from_fn3(n, |x, y, z| {
        let mut s = [x as usize, y as usize, z as usize];
        s.sort_unstable();
        let [a, b, c] = s;
        if a == b {
            return a as u8;
        }
        if b == c {
            return b as u8;
        }
        let lo = (a + c) / 2; // floor midpoint
        let hi = a + c - lo; // ceil midpoint
        let v = if hi < b {
            a
        } else if b == lo || b == hi {
            b
        } else {
            c
        };
        v as u8
    })
}

/// An equivalence relation on {1..k} in canonical labeling: each element is
/// labeled by the least member of its block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<u8>,
}

impl Partition {
    pub fn identity(domain_size: usize) -> Partition {
        Partition {
            labels: (1..=domain_size as u8).collect(),
        }
    }

    pub fn full(domain_size: usize) -> Partition {
        Partition {
            labels: vec![1; domain_size],
        }
    }

    pub fn domain_size(&self) -> usize {
        self.labels.len()
    }

    /// Canonical block label of a 1-based element.
    pub fn label(&self, a: u8) -> u8 {
        self.labels[a as usize - 1]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn related(&self, a: u8, b: u8) -> bool {
        self.label(a) == self.label(b)
    }

    pub fn is_identity(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| l as usize == i + 1)
    }

    pub fn is_full(&self) -> bool {
        self.labels.iter().all(|&l| l == 1)
    }

    pub fn block_count(&self) -> usize {
        let mut distinct: Vec<u8> = self.labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len()
    }

    pub fn blocks(&self) -> Vec<Vec<u8>> {
        let mut blocks: std::collections::BTreeMap<u8, Vec<u8>> = std::collections::BTreeMap::new();
        for (i, &l) in self.labels.iter().enumerate() {
            blocks.entry(l).or_default().push(i as u8 + 1);
        }
        blocks.into_values().collect()
    }

    fn from_union_find(uf: &mut UnionFind) -> Partition {
        let n = uf.parent.len();
        // least member of each class becomes the label
        let mut least = vec![u8::MAX; n];
        for i in 0..n {
            let r = uf.find(i);
            least[r] = least[r].min(i as u8 + 1);
        }
        let labels = (0..n).map(|i| least[uf.find(i)]).collect();
        Partition { labels }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// A generated principal congruence with its merge trace: the pairs that were
/// newly identified, in processing order, starting with the generating pair.
#[derive(Debug, Clone)]
pub struct PrincipalCongruence {
    pub partition: Partition,
    pub merges: Vec<(u8, u8)>,
}

/// The least congruence of ({1..k}; op) identifying a and b: union-find
/// seeded with {a,b}, closed under all unary polynomial translations of the
/// basic operation (every argument position, all constant fillings of the
/// others) to a fixed point.
pub fn principal_congruence(
    op: &FiniteOperation,
    a: u8,
    b: u8,
) -> Result<PrincipalCongruence, CongruenceError> {
    let k = op.domain_size();
    for x in [a, b] {
        if x == 0 || x as usize > k {
            return Err(CongruenceError::Op(OpError::ElementOutOfRange(x, k)));
        }
    }
    let arity = op.arity();
    let mut uf = UnionFind::new(k);
    let mut merges = Vec::new();
    let mut queue: Vec<(u8, u8)> = Vec::new();
    if uf.union(a as usize - 1, b as usize - 1) {
        merges.push((a.min(b), a.max(b)));
        queue.push((a, b));
    }
    let mut args = vec![1u8; arity];
    while let Some((u, v)) = queue.pop() {
        // translations: freeze all but one argument position
        for slot in 0..arity {
            let frozen = arity - 1;
            let combos = k.pow(frozen as u32);
            for mut c in 0..combos {
                for (i, arg) in args.iter_mut().enumerate() {
                    if i == slot {
                        continue;
                    }
                    *arg = (c % k) as u8 + 1;
                    c /= k;
                }
                args[slot] = u;
                let tu = op.evaluate(&args)?;
                args[slot] = v;
                let tv = op.evaluate(&args)?;
                if uf.union(tu as usize - 1, tv as usize - 1) {
                    merges.push((tu.min(tv), tu.max(tv)));
                    queue.push((tu, tv));
                }
            }
        }
    }
    Ok(PrincipalCongruence {
        partition: Partition::from_union_find(&mut uf),
        merges,
    })
}

/// Whether a partition is compatible with the operation: componentwise
/// related argument tuples must have related values.
pub fn is_congruence(op: &FiniteOperation, partition: &Partition) -> bool {
    let k = op.domain_size();
    if partition.domain_size() != k {
        return false;
    }
    // pairs of related elements per coordinate
    let related: Vec<(u8, u8)> = (1..=k as u8)
        .flat_map(|a| (1..=k as u8).map(move |b| (a, b)))
        .filter(|&(a, b)| partition.related(a, b))
        .collect();
    let arity = op.arity();
    let mut lhs = vec![1u8; arity];
    let mut rhs = vec![1u8; arity];
    let mut stack = vec![0usize; arity];
    // iterate over all choices of related pairs per coordinate
    let total = related.len().pow(arity as u32);
    for mut t in 0..total {
        for slot in stack.iter_mut() {
            *slot = t % related.len();
            t /= related.len();
        }
        for (i, &choice) in stack.iter().enumerate() {
            let (a, b) = related[choice];
            lhs[i] = a;
            rhs[i] = b;
        }
        let va = op.evaluate(&lhs).expect("valid tuple");
        let vb = op.evaluate(&rhs).expect("valid tuple");
        if !partition.related(va, vb) {
            return false;
        }
    }
    true
}

/// An algebra is simple when every pair a < b already generates the full
/// congruence; any nontrivial congruence contains a nontrivial principal one.
pub fn is_simple(op: &FiniteOperation) -> bool {
    let k = op.domain_size();
    debug_assert!(k >= 2);
    for a in 1..=k as u8 {
        for b in a + 1..=k as u8 {
            let pc = principal_congruence(op, a, b).expect("elements in range");
            if !pc.partition.is_full() {
                return false;
            }
        }
    }
    true
}

/// The least superset I of the seed with f(a,b,c) ∈ I whenever at least two
/// of a, b, c lie in I. Returns the sorted members.
pub fn ideal_closure(op: &FiniteOperation, seed: &[u8]) -> Result<Vec<u8>, CongruenceError> {
    if !op.is_majority()? {
        return Err(CongruenceError::NotMajority);
    }
    let k = op.domain_size();
    for &s in seed {
        if s == 0 || s as usize > k {
            return Err(CongruenceError::Op(OpError::ElementOutOfRange(s, k)));
        }
    }
    let mut in_set = vec![false; k + 1];
    for &s in seed {
        in_set[s as usize] = true;
    }
    loop {
        let mut grew = false;
        for a in 1..=k as u8 {
            for b in 1..=k as u8 {
                for c in 1..=k as u8 {
                    let inside = in_set[a as usize] as u8
                        + in_set[b as usize] as u8
                        + in_set[c as usize] as u8;
                    if inside >= 2 {
                        let v = op.eval3(a, b, c) as usize;
                        if !in_set[v] {
                            in_set[v] = true;
                            grew = true;
                        }
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok((1..=k as u8).filter(|&x| in_set[x as usize]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clone::satisfies_m1_identities;

    #[test]
    fn midpoint_values_from_the_case_split() {
        let a7 = midpoint_algebra(7);
        // ceil((1+5)/2) = 3 < 4, so the left endpoint wins
        assert_eq!(a7.evaluate(&[1, 4, 5]).unwrap(), 1);
        // 2 = floor((1+3)/2): the midpoint wins
        assert_eq!(a7.evaluate(&[1, 2, 3]).unwrap(), 2);
        // 2 < floor((1+5)/2) = 3: the right endpoint wins
        assert_eq!(a7.evaluate(&[1, 2, 5]).unwrap(), 5);
        // majority rule on repeated arguments
        assert_eq!(a7.evaluate(&[2, 2, 6]).unwrap(), 2);
    }

    #[test]
    fn midpoint_algebras_are_symmetric_conservative_majority() {
        for n in 2..=12 {
            let op = midpoint_algebra(n);
            assert!(op.is_majority().unwrap(), "n={n}");
            assert!(op.is_conservative(), "n={n}");
            assert!(satisfies_m1_identities(&op).unwrap(), "n={n}");
            for perm in crate::op::PermutationS::all_ternary() {
                assert_eq!(op.permute_variables(&perm).unwrap(), op, "n={n}");
            }
        }
    }

    #[test]
    fn principal_congruences() {
        let a7 = midpoint_algebra(7);
        let same = principal_congruence(&a7, 1, 1).unwrap();
        assert!(same.partition.is_identity());
        assert!(same.merges.is_empty());

        let pc = principal_congruence(&a7, 1, 2).unwrap();
        assert!(pc.partition.is_full());
        assert_eq!(pc.merges[0], (1, 2));
        assert!(is_congruence(&a7, &pc.partition));

        let a8 = midpoint_algebra(8);
        assert!(principal_congruence(&a8, 3, 4).unwrap().partition.is_full());

        assert!(matches!(
            principal_congruence(&a7, 0, 3),
            Err(CongruenceError::Op(OpError::ElementOutOfRange(0, 7)))
        ));
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&midpoint_algebra(7)));
        assert!(is_simple(&midpoint_algebra(12)));
        // two-element algebras only carry the trivial partitions
        assert!(is_simple(&midpoint_algebra(2)));
    }

    #[test]
    fn ideal_closures() {
        let a7 = midpoint_algebra(7);
        assert_eq!(ideal_closure(&a7, &[]).unwrap(), Vec::<u8>::new());
        assert_eq!(ideal_closure(&a7, &[5]).unwrap(), vec![5]);
        // brute-force oracle for the {1,2} seed: close by scanning all triples
        let mut oracle = [false; 8];
        oracle[1] = true;
        oracle[2] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for a in 1..=7u8 {
                for b in 1..=7u8 {
                    for c in 1..=7u8 {
                        let members = [a, b, c].iter().filter(|&&x| oracle[x as usize]).count();
                        if members >= 2 {
                            let v = a7.evaluate(&[a, b, c]).unwrap() as usize;
                            if !oracle[v] {
                                oracle[v] = true;
                                grew = true;
                            }
                        }
                    }
                }
            }
        }
        let expected: Vec<u8> = (1..=7).filter(|&x| oracle[x as usize]).collect();
        assert_eq!(
            expected,
            (1..=7).collect::<Vec<u8>>(),
            "the pair {{1,2}} spreads everywhere"
        );
        assert_eq!(ideal_closure(&a7, &[1, 2]).unwrap(), expected);

        let e1 = FiniteOperation::projection(3, 3, 1);
        assert!(matches!(
            ideal_closure(&e1, &[1]),
            Err(CongruenceError::NotMajority)
        ));
    }

    #[test]
    fn ideal_closures_are_intervals() {
        for n in 2..=12usize {
            let op = midpoint_algebra(n);
            for a in 1..=n as u8 {
                for b in a + 1..=n as u8 {
                    let ideal = ideal_closure(&op, &[a, b]).unwrap();
                    let lo = *ideal.first().unwrap();
                    let hi = *ideal.last().unwrap();
                    assert_eq!(
                        ideal,
                        (lo..=hi).collect::<Vec<u8>>(),
                        "seed {{{a},{b}}} in the {n}-element algebra"
                    );
                }
            }
        }
    }

    #[test]
    fn congruence_blocks_are_ideals() {
        let a6 = midpoint_algebra(6);
        for a in 1..=6u8 {
            for b in a + 1..=6u8 {
                let pc = principal_congruence(&a6, a, b).unwrap();
                for block in pc.partition.blocks() {
                    let closed = ideal_closure(&a6, &block).unwrap();
                    assert_eq!(closed, block, "blocks are ideals");
                }
            }
        }
    }
}
