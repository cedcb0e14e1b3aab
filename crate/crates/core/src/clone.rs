//! The ternary part of a clone generated by ternary operations: closure
//! computation with witness terms, subalgebra generation, minimality of
//! majority clones, near-unanimity reduction, and ternary-part homomorphism
//! and isomorphism checks.

use crate::dense3::{Dense3, Id};
use crate::op::{FiniteOperation, OpError};
use crate::term::Term;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

/// Default element cap for closure computations. Majority generators stay
/// tiny; the cap guards against arbitrary generators a user might feed in.
pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CloneError {
    #[error(transparent)]
    Op(#[from] OpError),
    #[error("closure exceeded the element budget of {0}")]
    BudgetExceeded(usize),
    #[error("operation is not a majority operation")]
    NotMajority,
    #[error("operation is not a near-unanimity operation")]
    NotNearUnanimity,
    #[error("arity {0} is too small, need at least 4")]
    ArityTooSmall(usize),
    #[error("generator list is empty")]
    NoGenerators,
}

/// compose3(f, g1, g2, g3) = (x,y,z) ↦ f(g1(x,y,z), g2(x,y,z), g3(x,y,z)).
pub fn compose3(
    f: &FiniteOperation,
    g1: &FiniteOperation,
    g2: &FiniteOperation,
    g3: &FiniteOperation,
) -> Result<FiniteOperation, OpError> {
    let k = f.domain_size();
    for g in [f, g1, g2, g3] {
        if g.arity() != 3 {
            return Err(OpError::ArityMismatch {
                expected: 3,
                got: g.arity(),
            });
        }
        if g.domain_size() != k {
            return Err(OpError::SizeMismatch(k, g.domain_size()));
        }
    }
    let fv = f.values();
    let v1 = g1.values();
    let v2 = g2.values();
    let v3 = g3.values();
    let values = (0..k * k * k)
        .map(|t| {
            let a = v1[t] as usize - 1;
            let b = v2[t] as usize - 1;
            let c = v3[t] as usize - 1;
            fv[(a * k + b) * k + c]
        })
        .collect();
    FiniteOperation::new(k, 3, values)
}

/// The ternary part of the clone generated by a set of ternary operations:
/// the closure of the three projections and the generators under composition
/// with a generator outermost. Elements are ordered by discovery generation
/// with lexicographic tie-break on the tables; each element carries a witness
/// term over the generator symbols.
#[derive(Debug, Clone)]
pub struct TernaryPart {
    domain_size: usize,
    elements: Vec<FiniteOperation>,
    witnesses: Vec<Term>,
    generator_indices: Vec<usize>,
    index: HashMap<FiniteOperation, usize>,
}

impl TernaryPart {
    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds the three projections
    }

    pub fn elements(&self) -> &[FiniteOperation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &FiniteOperation {
        &self.elements[i]
    }

    pub fn witnesses(&self) -> &[Term] {
        &self.witnesses
    }

    pub fn witness(&self, i: usize) -> &Term {
        &self.witnesses[i]
    }

    /// Positions of the generators inside `elements`, one per input generator.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn generators(&self) -> Vec<FiniteOperation> {
        self.generator_indices
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    pub fn index_of(&self, op: &FiniteOperation) -> Option<usize> {
        self.index.get(op).copied()
    }

    pub fn contains(&self, op: &FiniteOperation) -> bool {
        self.index.contains_key(op)
    }

    /// Indices of the nontrivial (non-projection) elements: everything after
    /// the three leading projections.
    pub fn nontrivial_indices(&self) -> std::ops::Range<usize> {
        3..self.elements.len()
    }

    pub fn majority_count(&self) -> usize {
        self.elements
            .iter()
            .filter(|e| e.is_majority().unwrap_or(false))
            .count()
    }

    /// Composes by element index; `None` when the result escapes the part,
    /// which indicates a part that was not actually closed.
    pub fn compose_index(&self, f: usize, g1: usize, g2: usize, g3: usize) -> Option<usize> {
        let r = compose3(
            &self.elements[f],
            &self.elements[g1],
            &self.elements[g2],
            &self.elements[g3],
        )
        .ok()?;
        self.index_of(&r)
    }

    pub fn to_export(&self) -> PartExport {
        let gens = self.generator_indices.len();
        PartExport {
            schema_version: 1,
            domain: self.domain_size,
            generator_index: if gens == 1 {
                Some(self.generator_indices[0])
            } else {
                None
            },
            generator_indices: self.generator_indices.clone(),
            elements: self
                .elements
                .iter()
                .zip(&self.witnesses)
                .map(|(op, w)| PartElementExport {
                    values: op.values().to_vec(),
                    majority: op.is_majority().unwrap_or(false),
                    witness: w.to_prefix(gens),
                })
                .collect(),
        }
    }
}

/// JSON export of a ternary part.
#[derive(Debug, Clone, Serialize)]
pub struct PartExport {
    pub schema_version: u32,
    pub domain: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_index: Option<usize>,
    pub generator_indices: Vec<usize>,
    pub elements: Vec<PartElementExport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartElementExport {
    pub values: Vec<u8>,
    pub majority: bool,
    pub witness: String,
}

/// Computes the ternary part generated by `generators` with the default
/// element budget.
pub fn ternary_closure(generators: &[FiniteOperation]) -> Result<TernaryPart, CloneError> {
    ternary_closure_with_budget(generators, DEFAULT_BUDGET)
}

/// Closure with an explicit element budget.
///
/// The worklist composes with generators outermost only. This reaches the
/// whole ternary part: a ternary term over a generator set G is either a
/// projection or of the form g(t1,t2,t3) with g ∈ G and ternary ti, so by
/// induction every term value shows up. The naive all-outers worklist does
/// quadratically more composition work for the same fixed point.
pub fn ternary_closure_with_budget(
    generators: &[FiniteOperation],
    budget: usize,
) -> Result<TernaryPart, CloneError> {
    if generators.is_empty() {
        return Err(CloneError::NoGenerators);
    }
    let k = generators[0].domain_size();
    for g in generators {
        if g.arity() != 3 {
            return Err(CloneError::Op(OpError::ArityMismatch {
                expected: 3,
                got: g.arity(),
            }));
        }
        if g.domain_size() != k {
            return Err(CloneError::Op(OpError::SizeMismatch(k, g.domain_size())));
        }
    }
    let dense_ok = k == 3 && generators.iter().all(|g| Dense3::get().id_of(g).is_some());
    if dense_ok {
        closure_dense(generators, budget)
    } else {
        closure_generic(generators, budget)
    }
}

fn seed_part(
    generators: &[FiniteOperation],
    k: usize,
) -> (
    Vec<FiniteOperation>,
    Vec<Term>,
    Vec<usize>,
    HashMap<FiniteOperation, usize>,
) {
    let mut elements: Vec<FiniteOperation> = (1..=3)
        .map(|i| FiniteOperation::projection(k, 3, i))
        .collect();
    let mut witnesses: Vec<Term> = (1..=3).map(|i| Term::var(i as u8)).collect();
    let mut index: HashMap<FiniteOperation, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut generator_indices = Vec::with_capacity(generators.len());
    for (j, g) in generators.iter().enumerate() {
        if let Some(&i) = index.get(g) {
            generator_indices.push(i);
        } else {
            let i = elements.len();
            index.insert(g.clone(), i);
            elements.push(g.clone());
            witnesses.push(Term::app(
                j as u8,
                [Term::var(1), Term::var(2), Term::var(3)],
            ));
            generator_indices.push(i);
        }
    }
    (elements, witnesses, generator_indices, index)
}

fn closure_generic(
    generators: &[FiniteOperation],
    budget: usize,
) -> Result<TernaryPart, CloneError> {
    let k = generators[0].domain_size();
    let (mut elements, mut witnesses, generator_indices, mut index) = seed_part(generators, k);
    let outers: Vec<usize> = generator_indices
        .iter()
        .copied()
        .filter(|&i| elements[i].is_projection().is_none())
        .collect();

    let mut old_len = 0usize;
    loop {
        let len = elements.len();
        if len > budget {
            return Err(CloneError::BudgetExceeded(budget));
        }
        if old_len == len {
            break;
        }
        // new elements of this wave, keyed by table for the lexicographic
        // tie-break; the first parent found wins, so witnesses stay minimal
        let mut wave: BTreeMap<FiniteOperation, (usize, usize, usize, usize)> = BTreeMap::new();
        for (j, &oi) in generator_indices.iter().enumerate() {
            if !outers.contains(&oi) {
                continue;
            }
            let outer = elements[oi].clone();
            for i1 in 0..len {
                for i2 in 0..len {
                    for i3 in 0..len {
                        if i1 < old_len && i2 < old_len && i3 < old_len {
                            continue;
                        }
                        let r = compose3(&outer, &elements[i1], &elements[i2], &elements[i3])?;
                        if !index.contains_key(&r) && !wave.contains_key(&r) {
                            wave.insert(r, (j, i1, i2, i3));
                        }
                    }
                }
            }
        }
        old_len = len;
        for (table, (j, i1, i2, i3)) in wave {
            let i = elements.len();
            index.insert(table.clone(), i);
            elements.push(table);
            witnesses.push(Term::app(
                j as u8,
                [
                    witnesses[i1].clone(),
                    witnesses[i2].clone(),
                    witnesses[i3].clone(),
                ],
            ));
        }
    }
    Ok(TernaryPart {
        domain_size: k,
        elements,
        witnesses,
        generator_indices,
        index,
    })
}

fn closure_dense(generators: &[FiniteOperation], budget: usize) -> Result<TernaryPart, CloneError> {
    let ctx = Dense3::get();
    let (elements, mut witnesses, generator_indices, _) = seed_part(generators, 3);
    let mut ids: Vec<Id> = elements.iter().map(|e| ctx.id_of(e).unwrap()).collect();
    let mut pos = vec![u16::MAX; crate::dense3::UNIVERSE];
    for (i, &id) in ids.iter().enumerate() {
        pos[id as usize] = i as u16;
    }
    let htabs: Vec<(usize, Vec<u8>)> = generator_indices
        .iter()
        .enumerate()
        .filter(|&(_, &oi)| !ctx.is_projection(ids[oi]))
        .map(|(j, &oi)| (j, ctx.half_table(&elements[oi])))
        .collect();

    let mut old_len = 0usize;
    loop {
        let len = ids.len();
        if len > budget {
            return Err(CloneError::BudgetExceeded(budget));
        }
        if old_len == len {
            break;
        }
        let mut wave: BTreeMap<Id, (usize, usize, usize, usize)> = BTreeMap::new();
        for (j, htab) in &htabs {
            for i1 in 0..len {
                for i2 in 0..len {
                    for i3 in 0..len {
                        if i1 < old_len && i2 < old_len && i3 < old_len {
                            continue;
                        }
                        let r = ctx.compose(htab, ids[i1], ids[i2], ids[i3]);
                        if pos[r as usize] == u16::MAX && !wave.contains_key(&r) {
                            wave.insert(r, (*j, i1, i2, i3));
                        }
                    }
                }
            }
        }
        old_len = len;
        // majority ids sort numerically exactly as their tables sort
        // lexicographically, so the wave order is the table order
        for (id, (j, i1, i2, i3)) in wave {
            pos[id as usize] = ids.len() as u16;
            ids.push(id);
            witnesses.push(Term::app(
                j as u8,
                [
                    witnesses[i1].clone(),
                    witnesses[i2].clone(),
                    witnesses[i3].clone(),
                ],
            ));
        }
    }
    let elements: Vec<FiniteOperation> = ids.iter().map(|&id| ctx.op_of(id)).collect();
    let index = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    Ok(TernaryPart {
        domain_size: 3,
        elements,
        witnesses,
        generator_indices,
        index,
    })
}

/// The smallest subset of the part containing the projections and the seed
/// and closed under composition with all four arguments drawn from the
/// subset. Returns sorted element indices.
pub fn subalgebra_generated(part: &TernaryPart, seed: &[usize]) -> Vec<usize> {
    for &s in seed {
        assert!(s < part.len(), "seed index {s} out of range");
    }
    let ctx = Dense3::get();
    if part.domain_size() == 3
        && part.elements().iter().all(|e| ctx.id_of(e).is_some())
        && part.len() > 64
    {
        subalgebra_dense(part, seed)
    } else {
        subalgebra_small(part, seed)
    }
}

/// Plain incremental worklist over quadruples, for small parts.
fn subalgebra_small(part: &TernaryPart, seed: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; part.len()];
    let mut members: Vec<usize> = Vec::new();
    for i in (0..3).chain(seed.iter().copied()) {
        if !in_set[i] {
            in_set[i] = true;
            members.push(i);
        }
    }
    let mut p = 0usize;
    while p < members.len() {
        if members.len() == part.len() {
            break; // the whole part is closed, nothing more can be added
        }
        // quadruples whose maximum position in `members` is exactly p
        for a0 in 0..=p {
            let f = members[a0];
            if part.element(f).is_projection().is_some() {
                continue;
            }
            for a1 in 0..=p {
                for a2 in 0..=p {
                    let start = if a0 == p || a1 == p || a2 == p { 0 } else { p };
                    for a3 in start..=p {
                        let r = part
                            .compose_index(f, members[a1], members[a2], members[a3])
                            .expect("part is closed under composition");
                        if !in_set[r] {
                            in_set[r] = true;
                            members.push(r);
                        }
                    }
                }
            }
        }
        p += 1;
    }
    members.sort_unstable();
    members
}

/// Two-phase worklist for big three-element parts: close under the seed
/// elements as outers first (cheap, saturates fast), then run all-outers
/// verification sweeps until stable. Stops as soon as the subset reaches the
/// whole part, which is closed by construction.
fn subalgebra_dense(part: &TernaryPart, seed: &[usize]) -> Vec<usize> {
    let ctx = Dense3::get();
    let ids: Vec<Id> = part
        .elements()
        .iter()
        .map(|e| ctx.id_of(e).unwrap())
        .collect();
    let mut pos = vec![u16::MAX; crate::dense3::UNIVERSE];
    for (i, &id) in ids.iter().enumerate() {
        pos[id as usize] = i as u16;
    }
    let n = part.len();
    let mut in_set = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    for i in (0..3).chain(seed.iter().copied()) {
        if !in_set[i] {
            in_set[i] = true;
            members.push(i);
        }
    }
    let mut htabs: HashMap<usize, Vec<u8>> = HashMap::new();
    loop {
        // phase 1: incremental closure under each seed element as outer
        'seeds: for &s in seed {
            if ctx.is_projection(ids[s]) {
                continue;
            }
            let htab = htabs
                .entry(s)
                .or_insert_with(|| ctx.half_table(part.element(s)));
            let mut p = 0usize;
            while p < members.len() {
                if members.len() == n {
                    break 'seeds;
                }
                for i1 in 0..=p {
                    for i2 in 0..=p {
                        let start = if i1 == p || i2 == p { 0 } else { p };
                        for i3 in start..=p {
                            let r = ctx.compose(
                                htab,
                                ids[members[i1]],
                                ids[members[i2]],
                                ids[members[i3]],
                            );
                            let ri = pos[r as usize];
                            debug_assert_ne!(ri, u16::MAX, "part is closed");
                            if !in_set[ri as usize] {
                                in_set[ri as usize] = true;
                                members.push(ri as usize);
                            }
                        }
                    }
                }
                p += 1;
            }
        }
        if members.len() == n {
            break;
        }
        // phase 2: one all-outers sweep; stable means done
        let len = members.len();
        let mut grew = false;
        'sweep: for o in 0..len {
            let f = members[o];
            if ctx.is_projection(ids[f]) {
                continue;
            }
            let htab = htabs
                .entry(f)
                .or_insert_with(|| ctx.half_table(part.element(f)));
            for i1 in 0..len {
                for i2 in 0..len {
                    for i3 in 0..len {
                        let r =
                            ctx.compose(htab, ids[members[i1]], ids[members[i2]], ids[members[i3]]);
                        let ri = pos[r as usize] as usize;
                        if !in_set[ri] {
                            in_set[ri] = true;
                            members.push(ri);
                            grew = true;
                            if members.len() == n {
                                break 'sweep;
                            }
                        }
                    }
                }
            }
        }
        if members.len() == n || !grew {
            break;
        }
    }
    members.sort_unstable();
    members
}

/// Outcome of a minimality check, with certificate.
#[derive(Debug, Clone)]
pub struct MinimalityOutcome {
    pub part: TernaryPart,
    pub verdict: MinimalityVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityVerdict {
    /// Every nontrivial element generates the whole part; the indices are the
    /// majority operations that were checked.
    Minimal { majority_indices: Vec<usize> },
    /// Some nontrivial element generates a proper subalgebra.
    NotMinimal {
        witness_index: usize,
        generated_size: usize,
    },
}

impl MinimalityVerdict {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalityVerdict::Minimal { .. })
    }
}

/// Decides whether a majority operation generates a minimal clone: the
/// projections must be the only proper subalgebra of its ternary part.
pub fn is_minimal_majority_clone(f: &FiniteOperation) -> Result<MinimalityOutcome, CloneError> {
    is_minimal_majority_clone_with_budget(f, DEFAULT_BUDGET)
}

pub fn is_minimal_majority_clone_with_budget(
    f: &FiniteOperation,
    budget: usize,
) -> Result<MinimalityOutcome, CloneError> {
    if !f.is_majority()? {
        return Err(CloneError::NotMajority);
    }
    let part = ternary_closure_with_budget(std::slice::from_ref(f), budget)?;
    for g in part.nontrivial_indices() {
        let sub = subalgebra_generated(&part, &[g]);
        if sub.len() < part.len() {
            return Ok(MinimalityOutcome {
                verdict: MinimalityVerdict::NotMinimal {
                    witness_index: g,
                    generated_size: sub.len(),
                },
                part,
            });
        }
    }
    let majority_indices: Vec<usize> = part.nontrivial_indices().collect();
    debug_assert!(majority_indices
        .iter()
        .all(|&i| part.element(i).is_majority().unwrap_or(false)));
    Ok(MinimalityOutcome {
        verdict: MinimalityVerdict::Minimal { majority_indices },
        part,
    })
}

/// Identifies two argument positions of an n-ary operation (0-based slots),
/// producing an (n−1)-ary operation where the earlier slot carries both.
fn identify(op: &FiniteOperation, slot_a: usize, slot_b: usize) -> FiniteOperation {
    debug_assert!(slot_a < slot_b);
    let k = op.domain_size();
    let n = op.arity();
    let len = k.pow((n - 1) as u32);
    let mut small_args = vec![1u8; n - 1];
    let mut big_args = vec![1u8; n];
    let mut values = vec![0u8; len];
    for (t, slot) in values.iter_mut().enumerate() {
        crate::op::decode_args(t, k, n - 1, &mut small_args);
        for (i, big) in big_args.iter_mut().enumerate() {
            *big = match i.cmp(&slot_b) {
                std::cmp::Ordering::Less => small_args[i],
                std::cmp::Ordering::Equal => small_args[slot_a],
                std::cmp::Ordering::Greater => small_args[i - 1],
            };
        }
        *slot = op.evaluate(&big_args).expect("valid arguments");
    }
    FiniteOperation::new(k, n - 1, values).expect("valid identified table")
}

/// Reduces a near-unanimity operation of arity n ≥ 4 to a nontrivial
/// operation of arity n−1 by identifying x1 = x2 if that is nontrivial and
/// x3 = x4 otherwise. One of the two is nontrivial whenever the input is,
/// so the result is never a projection (except on a one-element domain,
/// where everything is).
pub fn nu_reduce(g: &FiniteOperation) -> Result<FiniteOperation, CloneError> {
    if g.arity() < 4 {
        return Err(CloneError::ArityTooSmall(g.arity()));
    }
    if !g.is_near_unanimity()? {
        return Err(CloneError::NotNearUnanimity);
    }
    let first = identify(g, 0, 1);
    if first.is_projection().is_none() {
        return Ok(first);
    }
    let second = identify(g, 2, 3);
    if second.is_projection().is_none() {
        return Ok(second);
    }
    debug_assert_eq!(g.domain_size(), 1, "one identification must be nontrivial");
    Ok(first)
}

/// A ternary-part homomorphism from C3(m) into the clone of f, given by the
/// image table of every source element.
#[derive(Debug, Clone)]
pub struct HomMap {
    pub source: TernaryPart,
    pub images: Vec<FiniteOperation>,
}

/// A violated transport instance: composing in the source and transporting
/// disagrees with transporting first and composing in the target.
#[derive(Debug, Clone)]
pub struct HomViolation {
    pub args: [usize; 3],
    pub composed_index: usize,
    pub transported: FiniteOperation,
    pub target_composed: FiniteOperation,
}

#[derive(Debug, Clone)]
pub enum HomCheck {
    Hom(HomMap),
    Violation {
        source: TernaryPart,
        violation: HomViolation,
    },
}

impl HomCheck {
    pub fn hom(&self) -> Option<&HomMap> {
        match self {
            HomCheck::Hom(m) => Some(m),
            _ => None,
        }
    }
}

/// Decides whether a ternary-part homomorphism C3(m) → C3(f) with e_i ↦ e_i
/// and m ↦ f exists; equivalently, every three-variable identity of m holds
/// for f.
///
/// Every source element is transported by evaluating its witness term with
/// the symbol read as f. Checking the homomorphism equation with the
/// generator outermost and arguments ranging over all of C3(m) suffices: by
/// superassociativity, consistency propagates by induction on the witness
/// depth of the outer element.
pub fn ternary_hom_check(
    m: &FiniteOperation,
    f: &FiniteOperation,
    budget: usize,
) -> Result<HomCheck, CloneError> {
    let source = ternary_closure_with_budget(std::slice::from_ref(m), budget)?;
    let gen_index = source.generator_indices()[0];
    let targets = [f.clone()];
    let mut images = Vec::with_capacity(source.len());
    for w in source.witnesses() {
        images.push(w.evaluate(&targets)?);
    }
    let n = source.len();
    for g1 in 0..n {
        for g2 in 0..n {
            for g3 in 0..n {
                let composed = source
                    .compose_index(gen_index, g1, g2, g3)
                    .expect("source part is closed");
                let target_composed = compose3(f, &images[g1], &images[g2], &images[g3])?;
                if images[composed] != target_composed {
                    return Ok(HomCheck::Violation {
                        violation: HomViolation {
                            args: [g1, g2, g3],
                            composed_index: composed,
                            transported: images[composed].clone(),
                            target_composed,
                        },
                        source,
                    });
                }
            }
        }
    }
    Ok(HomCheck::Hom(HomMap { source, images }))
}

/// Searches for an isomorphism between two ternary parts: a bijection of
/// elements fixing the three projection positions and commuting with
/// composition. Returns the image index of every element of `p`.
///
/// Candidate generator images are pruned by abstract invariants (stabilizer
/// and orbit size under the variable action, computed inside each part), then
/// verified on the full composition tables.
pub fn ternary_parts_isomorphic(p: &TernaryPart, q: &TernaryPart) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let inv_p = part_invariants(p);
    let inv_q = part_invariants(q);
    {
        let mut a = inv_p.clone();
        let mut b = inv_q.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let gens: Vec<usize> = p.generator_indices().to_vec();
    let mut chosen = vec![usize::MAX; gens.len()];
    assign_generators(p, q, &inv_p, &inv_q, &gens, 0, &mut chosen)
}

fn assign_generators(
    p: &TernaryPart,
    q: &TernaryPart,
    inv_p: &[(bool, usize, usize)],
    inv_q: &[(bool, usize, usize)],
    gens: &[usize],
    at: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if at == gens.len() {
        return verify_iso(p, q, chosen);
    }
    let src = gens[at];
    // a generator can be a projection only in degenerate inputs; its image
    // is then forced
    if src < 3 {
        chosen[at] = src;
        return assign_generators(p, q, inv_p, inv_q, gens, at + 1, chosen);
    }
    for cand in 3..q.len() {
        if inv_q[cand] != inv_p[src] {
            continue;
        }
        chosen[at] = cand;
        if let Some(map) = assign_generators(p, q, inv_p, inv_q, gens, at + 1, chosen) {
            return Some(map);
        }
    }
    None
}

fn verify_iso(p: &TernaryPart, q: &TernaryPart, chosen: &[usize]) -> Option<Vec<usize>> {
    // transport every element of p along its witness, interpreting the j-th
    // generator symbol as the chosen image in q
    let gen_images: Vec<FiniteOperation> = chosen.iter().map(|&c| q.element(c).clone()).collect();
    let mut map = Vec::with_capacity(p.len());
    for w in p.witnesses() {
        let img = w.evaluate(&gen_images).ok()?;
        map.push(q.index_of(&img)?);
    }
    // bijectivity
    let mut seen = vec![false; q.len()];
    for &i in &map {
        if seen[i] {
            return None;
        }
        seen[i] = true;
    }
    // projections fixed
    if map[0] != 0 || map[1] != 1 || map[2] != 2 {
        return None;
    }
    // full homomorphism equation over all quadruples
    let n = p.len();
    for f in 0..n {
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    let lhs = map[p.compose_index(f, g1, g2, g3)?];
                    let rhs = q.compose_index(map[f], map[g1], map[g2], map[g3])?;
                    if lhs != rhs {
                        return None;
                    }
                }
            }
        }
    }
    Some(map)
}

/// (nontrivial, stabilizer size, orbit size) of each element under the
/// variable action computed inside the part, so the invariants are abstract.
fn part_invariants(part: &TernaryPart) -> Vec<(bool, usize, usize)> {
    let n = part.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let nontrivial = i >= 3;
        let mut orbit = std::collections::BTreeSet::new();
        let mut stab = 0usize;
        for perm in crate::op::PermutationS::all_ternary() {
            let e1 = perm.image(1) as usize - 1;
            let e2 = perm.image(2) as usize - 1;
            let e3 = perm.image(3) as usize - 1;
            let img = part
                .compose_index(i, e1, e2, e3)
                .expect("part closed under projections");
            if img == i {
                stab += 1;
            }
            orbit.insert(img);
        }
        out.push((nontrivial, stab, orbit.len()));
    }
    out
}

/// Exhaustively verifies the three composition axioms on a part: the
/// projection axiom e_i(g1,g2,g3) = g_i, the identity axiom
/// f(e1,e2,e3) = f, and superassociativity
/// f(ḡ)(h̄) = f(g1(h̄), g2(h̄), g3(h̄)). Intended for small parts: the
/// superassociativity scan is septic in the part size.
pub fn check_clone_axioms(part: &TernaryPart) -> Result<(), String> {
    let n = part.len();
    // index-level composition table
    let mut table = vec![0u16; n * n * n * n];
    for f in 0..n {
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    let r = part
                        .compose_index(f, g1, g2, g3)
                        .ok_or_else(|| "part is not closed under composition".to_string())?;
                    table[((f * n + g1) * n + g2) * n + g3] = r as u16;
                }
            }
        }
    }
    let at = |f: usize, g1: usize, g2: usize, g3: usize| {
        table[((f * n + g1) * n + g2) * n + g3] as usize
    };
    for g1 in 0..n {
        for g2 in 0..n {
            for g3 in 0..n {
                let args = [g1, g2, g3];
                for (i, &gi) in args.iter().enumerate() {
                    if at(i, g1, g2, g3) != gi {
                        return Err(format!(
                            "projection axiom fails at e{}({g1},{g2},{g3})",
                            i + 1
                        ));
                    }
                }
            }
        }
    }
    for f in 0..n {
        if at(f, 0, 1, 2) != f {
            return Err(format!("identity axiom fails at element {f}"));
        }
    }
    for f in 0..n {
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    let fg = at(f, g1, g2, g3);
                    for h1 in 0..n {
                        for h2 in 0..n {
                            for h3 in 0..n {
                                let lhs = at(fg, h1, h2, h3);
                                let rhs = at(
                                    f,
                                    at(g1, h1, h2, h3),
                                    at(g2, h1, h2, h3),
                                    at(g3, h1, h2, h3),
                                );
                                if lhs != rhs {
                                    return Err(format!(
                                        "superassociativity fails at ({f}; {g1},{g2},{g3}; {h1},{h2},{h3})"
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks the defining identities of the one-majority-operation variety:
/// f(x,y,z) = f(y,z,x) = f(y,x,z) = f(f(x,y,z),y,z) and f(x,x,y) = x.
pub fn satisfies_m1_identities(f: &FiniteOperation) -> Result<bool, OpError> {
    if f.arity() != 3 {
        return Err(OpError::ArityMismatch {
            expected: 3,
            got: f.arity(),
        });
    }
    let k = f.domain_size() as u8;
    for x in 1..=k {
        for y in 1..=k {
            if f.eval3(x, x, y) != x {
                return Ok(false);
            }
            for z in 1..=k {
                let v = f.eval3(x, y, z);
                if f.eval3(y, z, x) != v || f.eval3(y, x, z) != v || f.eval3(v, y, z) != v {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
