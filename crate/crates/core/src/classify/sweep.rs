//! Exhaustive scan of the 729 majority tables on {1,2,3}.
//!
//! Two independent closure pipelines feed the minimality verdicts:
//!
//! * the generator-outermost worklist (the same rule the clone engine uses),
//! * the subalgebra worklist with all four composition arguments drawn from
//!   the growing subset.
//!
//! Both run over the dense 732-element universe. Two facts keep the scan
//! fast without affecting the computed sets: the universe of all majority
//! tables plus projections is itself composition-closed, so a closure that
//! reaches 732 members is done; and a discovered element's already-memoized
//! closure is a subset of the current one, so it can be unioned in wholesale.

use crate::dense3::{Dense3, Id, UNIVERSE};

const WORDS: usize = UNIVERSE.div_ceil(64);

/// Fixed-width bitset over the 732-element universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct IdSet {
    words: [u64; WORDS],
}

impl IdSet {
    pub fn empty() -> IdSet {
        IdSet { words: [0; WORDS] }
    }

    pub fn full() -> IdSet {
        let mut s = IdSet::empty();
        for id in 0..UNIVERSE as Id {
            s.insert(id);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, id: Id) -> bool {
        let w = (id / 64) as usize;
        let bit = 1u64 << (id % 64);
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    #[inline]
    pub fn contains(&self, id: Id) -> bool {
        self.words[(id / 64) as usize] & (1u64 << (id % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = Id> + '_ {
        (0..UNIVERSE as Id).filter(|&id| self.contains(id))
    }
}

/// Generator-outermost closure of one majority table, with union seeding
/// from `memo` and the saturation stop.
fn generator_closure(ctx: &Dense3, code: u16, memo: &[Option<IdSet>]) -> IdSet {
    let f: Id = code + 3;
    let htab = ctx.half_table(&ctx.op_of(f));
    let mut set = IdSet::empty();
    let mut members: Vec<Id> = Vec::with_capacity(64);
    let mut count = 0usize;
    for id in [0, 1, 2, f] {
        if set.insert(id) {
            members.push(id);
            count += 1;
        }
    }
    let mut p = 0usize;
    'work: while p < members.len() {
        for i1 in 0..=p {
            for i2 in 0..=p {
                let start = if i1 == p || i2 == p { 0 } else { p };
                for i3 in start..=p {
                    let r = ctx.compose(&htab, members[i1], members[i2], members[i3]);
                    if set.insert(r) {
                        count += 1;
                        members.push(r);
                        if r >= 3 {
                            if let Some(known) = &memo[(r - 3) as usize] {
                                for id in known.iter() {
                                    if set.insert(id) {
                                        count += 1;
                                        members.push(id);
                                    }
                                }
                            }
                        }
                        if count == UNIVERSE {
                            break 'work;
                        }
                    }
                }
            }
        }
        p += 1;
    }
    if count == UNIVERSE {
        return IdSet::full();
    }
    set
}

/// Subalgebra closure of {projections, g} under composition with all four
/// arguments in the subset. A generator-outermost pass runs first (it is a
/// sub-worklist of the full rule and saturates quickly), then all-outers
/// sweeps verify the fixed point.
fn subalgebra_closure(ctx: &Dense3, code: u16, memo: &[Option<IdSet>]) -> IdSet {
    let g: Id = code + 3;
    let mut set = IdSet::empty();
    let mut members: Vec<Id> = Vec::with_capacity(64);
    let mut count = 0usize;
    for id in [0, 1, 2, g] {
        if set.insert(id) {
            members.push(id);
            count += 1;
        }
    }
    let g_htab = ctx.half_table(&ctx.op_of(g));
    loop {
        // phase 1: generator-outermost, incremental, with seeding
        let mut p = 0usize;
        'phase1: while p < members.len() {
            for i1 in 0..=p {
                for i2 in 0..=p {
                    let start = if i1 == p || i2 == p { 0 } else { p };
                    for i3 in start..=p {
                        let r = ctx.compose(&g_htab, members[i1], members[i2], members[i3]);
                        if set.insert(r) {
                            count += 1;
                            members.push(r);
                            if r >= 3 {
                                if let Some(known) = &memo[(r - 3) as usize] {
                                    for id in known.iter() {
                                        if set.insert(id) {
                                            count += 1;
                                            members.push(id);
                                        }
                                    }
                                }
                            }
                            if count == UNIVERSE {
                                break 'phase1;
                            }
                        }
                    }
                }
            }
            p += 1;
        }
        if count == UNIVERSE {
            return IdSet::full();
        }
        // phase 2: one sweep with every nontrivial member as the outer
        let len = members.len();
        let mut grew = false;
        'sweep: for o in 0..len {
            if ctx.is_projection(members[o]) {
                continue;
            }
            let htab = ctx.half_table(&ctx.op_of(members[o]));
            for i1 in 0..len {
                for i2 in 0..len {
                    for i3 in 0..len {
                        let r = ctx.compose(&htab, members[i1], members[i2], members[i3]);
                        if set.insert(r) {
                            count += 1;
                            members.push(r);
                            grew = true;
                            if count == UNIVERSE {
                                break 'sweep;
                            }
                        }
                    }
                }
            }
        }
        if count == UNIVERSE {
            return IdSet::full();
        }
        if !grew {
            return set;
        }
    }
}

fn run_pipeline(
    threads: usize,
    closure: impl Fn(&Dense3, u16, &[Option<IdSet>]) -> IdSet + Sync,
) -> Vec<IdSet> {
    let ctx = Dense3::get();
    let threads = threads.clamp(1, 729);
    if threads == 1 {
        let mut memo: Vec<Option<IdSet>> = vec![None; 729];
        for code in 0..729u16 {
            let set = closure(ctx, code, &memo);
            memo[code as usize] = Some(set);
        }
        return memo.into_iter().map(Option::unwrap).collect();
    }
    // each worker owns a contiguous code range and a private memo; results do
    // not depend on the split because every closure set is intrinsic
    let chunk = 729usize.div_ceil(threads);
    let mut out: Vec<Option<IdSet>> = vec![None; 729];
    let closure_ref = &closure;
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let lo = t * chunk;
            let hi = ((t + 1) * chunk).min(729);
            if lo >= hi {
                break;
            }
            handles.push(scope.spawn(move || {
                let mut memo: Vec<Option<IdSet>> = vec![None; 729];
                for code in lo as u16..hi as u16 {
                    let set = closure_ref(ctx, code, &memo);
                    memo[code as usize] = Some(set);
                }
                (lo, hi, memo)
            }));
        }
        for h in handles {
            let (lo, hi, memo) = h.join().expect("scan worker");
            for (code, slot) in memo.into_iter().enumerate().take(hi).skip(lo) {
                out[code] = slot;
            }
        }
    });
    out.into_iter().map(Option::unwrap).collect()
}

/// Closure data for every majority table on the three-element domain,
/// computed with the generator-outermost pipeline.
pub(crate) struct ScanData {
    pub closures: Vec<IdSet>,
}

impl ScanData {
    pub fn run(threads: usize) -> ScanData {
        ScanData {
            closures: run_pipeline(threads, generator_closure),
        }
    }

    /// f is minimal iff every majority table in its closure generates f.
    pub fn minimal(&self, code: u16) -> bool {
        let f: Id = code + 3;
        self.closures[code as usize]
            .iter()
            .filter(|&id| id >= 3)
            .all(|id| self.closures[(id - 3) as usize].contains(f))
    }
}

/// The subalgebra-pipeline closures (route for the cross-check).
pub(crate) fn subalgebra_scan(threads: usize) -> Vec<IdSet> {
    run_pipeline(threads, subalgebra_closure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clone::ternary_closure;
    use crate::dense3::Dense3;

    #[test]
    fn scan_agrees_with_the_clone_engine_on_samples() {
        let ctx = Dense3::get();
        let scan = ScanData::run(1);
        for code in [0u16, 7, 146, 367, 403, 457, 702, 728] {
            let op = ctx.op_of(code + 3);
            let part = ternary_closure(&[op]).unwrap();
            let mut expected: Vec<Id> = part
                .elements()
                .iter()
                .map(|e| ctx.id_of(e).unwrap())
                .collect();
            expected.sort_unstable();
            let got: Vec<Id> = scan.closures[code as usize].iter().collect();
            assert_eq!(got, expected, "closure set of code {code}");
        }
    }

    #[test]
    fn both_pipelines_compute_the_same_sets() {
        let scan = ScanData::run(1);
        let quads = subalgebra_scan(1);
        for (code, quad) in quads.iter().enumerate() {
            assert!(&scan.closures[code] == quad, "code {code}");
        }
    }

    #[test]
    fn thread_split_does_not_change_results() {
        let single = ScanData::run(1);
        let multi = ScanData::run(3);
        for (code, set) in multi.closures.iter().enumerate() {
            assert!(&single.closures[code] == set, "code {code}");
        }
    }
}
