//! Finitary operations on finite domains, stored as flat value tables.
//!
//! Element labels are 1-based everywhere in the public API and in files, so
//! tables read exactly like the printed ones. The value at argument tuple
//! (a_1,…,a_n) sits at index Σ (a_i−1)·k^(n−i); this row-major order is
//! normative for the JSON table format.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on operation arity. Nothing in scope needs more than 5.
pub const MAX_ARITY: usize = 6;

/// Hard cap on domain size (labels are stored as `u8`).
pub const MAX_DOMAIN: usize = 255;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("value table has length {got}, expected {expected} (= k^n)")]
    LengthMismatch { expected: usize, got: usize },
    #[error("value {value} at table index {index} is outside the domain 1..={domain}")]
    ValueOutOfRange {
        index: usize,
        value: u8,
        domain: usize,
    },
    #[error("domain size {0} is not in 1..={MAX_DOMAIN}")]
    DomainOutOfRange(usize),
    #[error("arity {0} is not in 1..={MAX_ARITY}")]
    ArityOutOfRange(usize),
    #[error("expected arity {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("element {0} is outside the domain 1..={1}")]
    ElementOutOfRange(u8, usize),
    #[error("images {0:?} do not form a permutation")]
    NotAPermutation(Vec<u8>),
    #[error("domain sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not preserved: value at {witness:?} falls outside it")]
    NotPreserved { witness: Vec<u8> },
}

/// An n-ary operation on the domain {1,…,k}, as a full value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteOperation {
    domain_size: usize,
    arity: usize,
    values: Vec<u8>,
}

impl FiniteOperation {
    /// Builds a validated operation from its value table.
    pub fn new(domain_size: usize, arity: usize, values: Vec<u8>) -> Result<Self, OpError> {
        if domain_size == 0 || domain_size > MAX_DOMAIN {
            return Err(OpError::DomainOutOfRange(domain_size));
        }
        if arity == 0 || arity > MAX_ARITY {
            return Err(OpError::ArityOutOfRange(arity));
        }
        let expected = domain_size.pow(arity as u32);
        if values.len() != expected {
            return Err(OpError::LengthMismatch {
                expected,
                got: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if value == 0 || value as usize > domain_size {
                return Err(OpError::ValueOutOfRange {
                    index,
                    value,
                    domain: domain_size,
                });
            }
        }
        Ok(FiniteOperation {
            domain_size,
            arity,
            values,
        })
    }

    /// The i-th n-ary projection (i is 1-based).
    pub fn projection(domain_size: usize, arity: usize, coord: usize) -> Self {
        assert!(
            coord >= 1 && coord <= arity,
            "projection coordinate out of range"
        );
        let len = domain_size.pow(arity as u32);
        let mut values = vec![0u8; len];
        let mut args = vec![1u8; arity];
        for (t, slot) in values.iter_mut().enumerate() {
            decode_args(t, domain_size, arity, &mut args);
            *slot = args[coord - 1];
        }
        FiniteOperation {
            domain_size,
            arity,
            values,
        }
    }

    /// The dual discriminator: d(x,y,z) = x if x = y, else z.
    pub fn dual_discriminator(domain_size: usize) -> Self {
        Self::from_fn3(domain_size, |x, y, z| if x == y { x } else { z })
    }

    /// The reversed dual discriminator: (x,y,z) ↦ d(z,y,x) = z if z = y, else x.
    pub fn reversed_dual_discriminator(domain_size: usize) -> Self {
        Self::from_fn3(domain_size, |x, y, z| if z == y { z } else { x })
    }

    /// Builds a ternary operation from a closure over 1-based elements.
    pub fn from_fn3(domain_size: usize, f: impl Fn(u8, u8, u8) -> u8) -> Self {
        let k = domain_size;
        let mut values = Vec::with_capacity(k * k * k);
        for x in 1..=k as u8 {
            for y in 1..=k as u8 {
                for z in 1..=k as u8 {
                    values.push(f(x, y, z));
                }
            }
        }
        FiniteOperation::new(k, 3, values).expect("closure produced an invalid table")
    }

    /// Builds a majority operation on {1..k} from its free values, given in
    /// lexicographic order of the triples with three distinct entries. Tuples
    /// with a repeated entry get the majority value.
    pub fn majority_from_free_values(domain_size: usize, free: &[u8]) -> Result<Self, OpError> {
        let triples = distinct_triples(domain_size);
        if free.len() != triples.len() {
            return Err(OpError::LengthMismatch {
                expected: triples.len(),
                got: free.len(),
            });
        }
        let k = domain_size;
        let mut values = vec![0u8; k * k * k];
        for ((x, y, z), &v) in triples.iter().zip(free) {
            values[index3(k, *x, *y, *z)] = v;
        }
        for x in 1..=k as u8 {
            for y in 1..=k as u8 {
                for z in 1..=k as u8 {
                    if x == y || x == z {
                        values[index3(k, x, y, z)] = x;
                    } else if y == z {
                        values[index3(k, x, y, z)] = y;
                    }
                }
            }
        }
        FiniteOperation::new(k, 3, values)
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The raw value table (1-based labels, normative index order).
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Evaluates at a 1-based argument tuple.
    pub fn evaluate(&self, args: &[u8]) -> Result<u8, OpError> {
        if args.len() != self.arity {
            return Err(OpError::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        let mut index = 0usize;
        for &a in args {
            if a == 0 || a as usize > self.domain_size {
                return Err(OpError::ElementOutOfRange(a, self.domain_size));
            }
            index = index * self.domain_size + (a as usize - 1);
        }
        Ok(self.values[index])
    }

    /// Evaluates a ternary operation without validity checks.
    #[inline]
    pub(crate) fn eval3(&self, x: u8, y: u8, z: u8) -> u8 {
        debug_assert_eq!(self.arity, 3);
        self.values[index3(self.domain_size, x, y, z)]
    }

    /// Returns the 1-based coordinate i when the operation is the i-th
    /// projection, and `None` otherwise. On a one-element domain every
    /// operation is a projection; coordinate 1 is returned by convention.
    pub fn is_projection(&self) -> Option<usize> {
        if self.domain_size == 1 {
            return Some(1);
        }
        let mut args = vec![1u8; self.arity];
        'coords: for coord in 0..self.arity {
            for (t, &v) in self.values.iter().enumerate() {
                decode_args(t, self.domain_size, self.arity, &mut args);
                if v != args[coord] {
                    continue 'coords;
                }
            }
            return Some(coord + 1);
        }
        None
    }

    /// Whether the ternary identities f(x,x,y) = f(x,y,x) = f(y,x,x) = x hold.
    pub fn is_majority(&self) -> Result<bool, OpError> {
        if self.arity != 3 {
            return Err(OpError::ArityMismatch {
                expected: 3,
                got: self.arity,
            });
        }
        let k = self.domain_size as u8;
        for x in 1..=k {
            for y in 1..=k {
                if self.eval3(x, x, y) != x || self.eval3(x, y, x) != x || self.eval3(y, x, x) != x
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether g returns x on every tuple with at most one deviating argument.
    pub fn is_near_unanimity(&self) -> Result<bool, OpError> {
        if self.arity < 3 {
            return Err(OpError::ArityMismatch {
                expected: 3,
                got: self.arity,
            });
        }
        let k = self.domain_size as u8;
        let mut args = vec![0u8; self.arity];
        for x in 1..=k {
            for y in 1..=k {
                for slot in 0..self.arity {
                    args.fill(x);
                    args[slot] = y;
                    if self.evaluate(&args)? != x {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Whether every value lies among the arguments (preserves all subsets).
    pub fn is_conservative(&self) -> bool {
        let mut args = vec![1u8; self.arity];
        for (t, &v) in self.values.iter().enumerate() {
            decode_args(t, self.domain_size, self.arity, &mut args);
            if !args.contains(&v) {
                return false;
            }
        }
        true
    }

    /// The operation (a_1,…,a_n) ↦ op(a_{π(1)},…,a_{π(n)}).
    pub fn permute_variables(&self, perm: &PermutationS) -> Result<FiniteOperation, OpError> {
        if perm.arity() != self.arity {
            return Err(OpError::ArityMismatch {
                expected: self.arity,
                got: perm.arity(),
            });
        }
        let mut args = vec![1u8; self.arity];
        let mut permuted = vec![1u8; self.arity];
        let mut values = vec![0u8; self.values.len()];
        for (t, slot) in values.iter_mut().enumerate() {
            decode_args(t, self.domain_size, self.arity, &mut args);
            for i in 0..self.arity {
                permuted[i] = args[perm.image(i + 1) as usize - 1];
            }
            *slot = self.evaluate(&permuted)?;
        }
        Ok(FiniteOperation {
            domain_size: self.domain_size,
            arity: self.arity,
            values,
        })
    }

    /// The operation (a_1,…,a_n) ↦ σ(op(σ⁻¹(a_1),…,σ⁻¹(a_n))).
    pub fn relabel_domain(&self, sigma: &DomainBijection) -> Result<FiniteOperation, OpError> {
        if sigma.domain_size() != self.domain_size {
            return Err(OpError::SizeMismatch(self.domain_size, sigma.domain_size()));
        }
        let inv = sigma.inverse();
        let mut args = vec![1u8; self.arity];
        let mut pre = vec![1u8; self.arity];
        let mut values = vec![0u8; self.values.len()];
        for (t, slot) in values.iter_mut().enumerate() {
            decode_args(t, self.domain_size, self.arity, &mut args);
            for i in 0..self.arity {
                pre[i] = inv.image(args[i]);
            }
            *slot = sigma.image(self.evaluate(&pre)?);
        }
        Ok(FiniteOperation {
            domain_size: self.domain_size,
            arity: self.arity,
            values,
        })
    }

    /// Restricts to a subuniverse. The subset is relabeled 1..|B| by increasing
    /// original label; the returned map sends new labels to original ones.
    pub fn restrict(&self, subset: &[u8]) -> Result<Restriction, OpError> {
        if subset.is_empty() {
            return Err(OpError::EmptySubset);
        }
        let mut labels: Vec<u8> = subset.to_vec();
        labels.sort_unstable();
        labels.dedup();
        for &b in &labels {
            if b == 0 || b as usize > self.domain_size {
                return Err(OpError::ElementOutOfRange(b, self.domain_size));
            }
        }
        let mut back = vec![0u8; self.domain_size + 1];
        for (i, &b) in labels.iter().enumerate() {
            back[b as usize] = i as u8 + 1;
        }
        let m = labels.len();
        let mut values = vec![0u8; m.pow(self.arity as u32)];
        let mut sub_args = vec![1u8; self.arity];
        let mut args = vec![1u8; self.arity];
        for (t, slot) in values.iter_mut().enumerate() {
            decode_args(t, m, self.arity, &mut sub_args);
            for i in 0..self.arity {
                args[i] = labels[sub_args[i] as usize - 1];
            }
            let v = self.evaluate(&args)?;
            if back[v as usize] == 0 {
                return Err(OpError::NotPreserved {
                    witness: args.clone(),
                });
            }
            *slot = back[v as usize];
        }
        Ok(Restriction {
            op: FiniteOperation {
                domain_size: m,
                arity: self.arity,
                values,
            },
            labels,
        })
    }
}

/// Result of restricting an operation to a subuniverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    /// The restricted operation on the relabeled domain {1..|B|}.
    pub op: FiniteOperation,
    /// `labels[i]` is the original label of new element i+1.
    pub labels: Vec<u8>,
}

/// A permutation of argument positions {1..n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationS {
    images: Vec<u8>,
}

impl PermutationS {
    pub fn new(images: Vec<u8>) -> Result<Self, OpError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i as usize > n || seen[i as usize] {
                return Err(OpError::NotAPermutation(images));
            }
            seen[i as usize] = true;
        }
        Ok(PermutationS { images })
    }

    pub fn identity(arity: usize) -> Self {
        PermutationS {
            images: (1..=arity as u8).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    /// π(i), with i 1-based.
    pub fn image(&self, i: usize) -> u8 {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Function composition: (self ∘ other)(i) = self(other(i)). Acting on an
    /// operation by `other` and then by `self` equals acting by `self ∘ other`.
    pub fn compose(&self, other: &PermutationS) -> PermutationS {
        assert_eq!(self.arity(), other.arity());
        PermutationS {
            images: (1..=self.arity())
                .map(|i| self.image(other.image(i) as usize))
                .collect(),
        }
    }

    pub fn inverse(&self) -> PermutationS {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        PermutationS { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// The six elements of S_3, in lexicographic order of image vectors.
    pub fn all_ternary() -> Vec<PermutationS> {
        [
            [1, 2, 3],
            [1, 3, 2],
            [2, 1, 3],
            [2, 3, 1],
            [3, 1, 2],
            [3, 2, 1],
        ]
        .iter()
        .map(|im| PermutationS {
            images: im.to_vec(),
        })
        .collect()
    }
}

/// A bijection of the domain {1..k}, used to realize isomorphism of
/// operations as domain relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DomainBijection {
    images: Vec<u8>,
}

impl DomainBijection {
    pub fn new(images: Vec<u8>) -> Result<Self, OpError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i as usize > n || seen[i as usize] {
                return Err(OpError::NotAPermutation(images));
            }
            seen[i as usize] = true;
        }
        Ok(DomainBijection { images })
    }

    pub fn identity(domain_size: usize) -> Self {
        DomainBijection {
            images: (1..=domain_size as u8).collect(),
        }
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    /// σ(a), with a 1-based.
    pub fn image(&self, a: u8) -> u8 {
        self.images[a as usize - 1]
    }

    pub fn inverse(&self) -> DomainBijection {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        DomainBijection { images }
    }

    /// All k! bijections of {1..k}, in lexicographic order of image vectors.
    /// Intended for small k only (classification uses k ≤ 4).
    pub fn all(domain_size: usize) -> Vec<DomainBijection> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (1..=domain_size as u8).collect();
        loop {
            out.push(DomainBijection {
                images: current.clone(),
            });
            // next lexicographic permutation
            let n = current.len();
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

/// Decodes table index t into 1-based arguments (row-major, last fastest).
#[inline]
pub(crate) fn decode_args(t: usize, domain_size: usize, arity: usize, out: &mut [u8]) {
    let mut rest = t;
    for i in (0..arity).rev() {
        out[i] = (rest % domain_size) as u8 + 1;
        rest /= domain_size;
    }
}

#[inline]
pub(crate) fn index3(k: usize, x: u8, y: u8, z: u8) -> usize {
    ((x as usize - 1) * k + (y as usize - 1)) * k + (z as usize - 1)
}

/// All triples over {1..k} with three distinct entries, in lexicographic order.
pub fn distinct_triples(domain_size: usize) -> Vec<(u8, u8, u8)> {
    let k = domain_size as u8;
    let mut out = Vec::new();
    for x in 1..=k {
        for y in 1..=k {
            for z in 1..=k {
                if x != y && y != z && x != z {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// On-disk operation table: `{"domain": k, "arity": n, "values": [...]}` with
/// 1-based values in the normative index order, plus an optional name.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OpFile {
    pub domain: usize,
    pub arity: usize,
    pub values: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl OpFile {
    pub fn from_op(op: &FiniteOperation, name: Option<String>) -> Self {
        OpFile {
            domain: op.domain_size(),
            arity: op.arity(),
            values: op.values().to_vec(),
            name,
        }
    }

    pub fn into_op(self) -> Result<FiniteOperation, OpError> {
        FiniteOperation::new(self.domain, self.arity, self.values)
    }
}

impl FiniteOperation {
    pub fn to_json(&self, name: Option<&str>) -> String {
        serde_json::to_string_pretty(&OpFile::from_op(self, name.map(str::to_owned)))
            .expect("operation table serializes")
    }

    pub fn from_json_str(s: &str) -> Result<FiniteOperation, String> {
        let file: OpFile = serde_json::from_str(s).map_err(|e| e.to_string())?;
        file.into_op().map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    #[test]
    fn make_operation_validates() {
        assert!(FiniteOperation::new(2, 1, vec![1, 2]).is_ok());
        let err = FiniteOperation::new(3, 3, vec![1; 26]).unwrap_err();
        assert_eq!(
            err,
            OpError::LengthMismatch {
                expected: 27,
                got: 26
            }
        );
        let err = FiniteOperation::new(2, 2, vec![1, 2, 3, 1]).unwrap_err();
        assert!(matches!(
            err,
            OpError::ValueOutOfRange {
                index: 2,
                value: 3,
                ..
            }
        ));
    }

    #[test]
    fn evaluate_matches_reference_tables() {
        let m1 = reference::m1();
        let m2 = reference::m2();
        let m3 = reference::m3();
        assert_eq!(m2.evaluate(&[2, 3, 1]).unwrap(), 2);
        assert_eq!(m3.evaluate(&[3, 1, 2]).unwrap(), 3);
        assert_eq!(m1.evaluate(&[2, 2, 3]).unwrap(), 2);
        assert!(matches!(
            m1.evaluate(&[1, 2]),
            Err(OpError::ArityMismatch { .. })
        ));
        assert!(matches!(
            m1.evaluate(&[1, 2, 4]),
            Err(OpError::ElementOutOfRange(4, 3))
        ));
    }

    #[test]
    fn projection_detection() {
        let e2 = FiniteOperation::projection(3, 3, 2);
        assert_eq!(e2.is_projection(), Some(2));
        assert_eq!(reference::m1().is_projection(), None);
        // the unique majority operation on {1,2} is not a projection
        let maj2 = FiniteOperation::majority_from_free_values(2, &[]).unwrap();
        assert_eq!(maj2.is_projection(), None);
        // one-element domain: everything is a projection, coordinate 1
        let one = FiniteOperation::new(1, 3, vec![1]).unwrap();
        assert_eq!(one.is_projection(), Some(1));
    }

    #[test]
    fn majority_and_near_unanimity() {
        assert!(reference::m2().is_majority().unwrap());
        assert!(reference::big_m1().is_majority().unwrap());
        let e1 = FiniteOperation::projection(3, 3, 1);
        assert!(!e1.is_majority().unwrap());
        assert!(reference::m3().is_near_unanimity().unwrap());
        let e1_4 = FiniteOperation::projection(2, 4, 1);
        assert!(!e1_4.is_near_unanimity().unwrap());
        assert!(e1.is_near_unanimity().is_ok());
        let binary = FiniteOperation::projection(2, 2, 1);
        assert!(binary.is_near_unanimity().is_err());
    }

    #[test]
    fn four_ary_composite_is_near_unanimity() {
        // g(x1,x2,x3,x4) = m1(m1(x1,x2,x3), x3, x4)
        let m1 = reference::m1();
        let k = 3usize;
        let mut values = Vec::with_capacity(k.pow(4));
        for x1 in 1..=k as u8 {
            for x2 in 1..=k as u8 {
                for x3 in 1..=k as u8 {
                    for x4 in 1..=k as u8 {
                        values.push(m1.eval3(m1.eval3(x1, x2, x3), x3, x4));
                    }
                }
            }
        }
        let g = FiniteOperation::new(k, 4, values).unwrap();
        assert!(g.is_near_unanimity().unwrap());
    }

    #[test]
    fn conservativity() {
        assert!(reference::m1().is_conservative());
        assert!(!reference::big_m1().is_conservative());
        assert!(FiniteOperation::dual_discriminator(5).is_conservative());
    }

    #[test]
    fn permute_variables_on_reference_tables() {
        let m1 = reference::m1();
        for p in PermutationS::all_ternary() {
            assert_eq!(
                m1.permute_variables(&p).unwrap(),
                m1,
                "m1 is totally symmetric"
            );
        }
        let m2 = reference::m2();
        let swap23 = PermutationS::new(vec![1, 3, 2]).unwrap();
        assert_eq!(m2.permute_variables(&swap23).unwrap(), m2);
        // m3 with variables 1,2 swapped is the table with value 1 on the
        // cyclic triples and 3 on the others
        let m3 = reference::m3();
        let swap12 = PermutationS::new(vec![2, 1, 3]).unwrap();
        let swapped = m3.permute_variables(&swap12).unwrap();
        let expected = reference::three_element_tables()[8].op.clone();
        assert_eq!(swapped, expected);
    }

    #[test]
    fn relabel_domain_on_reference_tables() {
        let m1 = reference::m1();
        // swapping 1 and 2 turns m1 into the median of the chain 2 < 1 < 3,
        // i.e. the median of the naturally ordered chain after relabeling
        let swap12 = DomainBijection::new(vec![2, 1, 3]).unwrap();
        let relabeled = m1.relabel_domain(&swap12).unwrap();
        let median = FiniteOperation::from_fn3(3, |x, y, z| {
            let mut v = [x, y, z];
            v.sort_unstable();
            v[1]
        });
        assert_eq!(relabeled, median);
        let id = DomainBijection::identity(3);
        assert_eq!(m1.relabel_domain(&id).unwrap(), m1);
        // any σ fixing 4 leaves big M1 unchanged
        let m4 = reference::big_m1();
        for sigma in DomainBijection::all(4) {
            if sigma.image(4) == 4 {
                assert_eq!(m4.relabel_domain(&sigma).unwrap(), m4);
            }
        }
    }

    #[test]
    fn restriction() {
        let m1 = reference::m1();
        let r = m1.restrict(&[1, 2]).unwrap();
        let maj2 = FiniteOperation::majority_from_free_values(2, &[]).unwrap();
        assert_eq!(r.op, maj2);
        assert_eq!(r.labels, vec![1, 2]);

        let m2 = reference::m2();
        let r = m2.restrict(&[1, 3]).unwrap();
        assert_eq!(r.op, maj2);
        assert_eq!(r.labels, vec![1, 3]);

        let err = reference::big_m1().restrict(&[1, 2, 3]).unwrap_err();
        match err {
            OpError::NotPreserved { witness } => {
                let v = reference::big_m1().evaluate(&witness).unwrap();
                assert_eq!(v, 4);
            }
            other => panic!("expected NotPreserved, got {other:?}"),
        }

        // restriction to the full domain is the identity relabeling
        let r = m2.restrict(&[1, 2, 3]).unwrap();
        assert_eq!(r.op, m2);
        assert_eq!(r.labels, vec![1, 2, 3]);
    }

    #[test]
    fn majority_count_is_three_to_the_six() {
        assert_eq!(distinct_triples(3).len(), 6);
        assert_eq!(distinct_triples(2).len(), 0);
        assert_eq!(distinct_triples(4).len(), 24);
    }

    #[test]
    fn op_file_round_trip() {
        let m2 = reference::m2();
        let json = m2.to_json(Some("m2"));
        let back = FiniteOperation::from_json_str(&json).unwrap();
        assert_eq!(back, m2);
    }
}
