//! Dense index space for ternary operations on the three-element domain.
//!
//! Every ternary operation that can appear in a closure generated by majority
//! operations is a projection or a majority table. On {1,2,3} that universe
//! has 3 + 3^6 = 732 members, so elements are interned as small ids:
//! 0, 1, 2 are the projections and 3 + c is the majority table whose values
//! on the six distinct triples, read in lexicographic triple order, form the
//! base-3 digits of c.
//!
//! Composition with a fixed majority outer acts digit-by-digit on those six
//! values, so a per-outer table over half-codes (three digits, 0..27) turns
//! one composition into two lookups. Behaviour on tuples with a repeated
//! entry depends only on which arguments are projections, captured by a tiny
//! "kind" table computed on the two-element domain.

use crate::op::{index3, FiniteOperation};
use std::sync::OnceLock;

pub const UNIVERSE: usize = 732;
pub type Id = u16;

/// Distinct triples over {1,2,3} in lexicographic order (0-based entries).
const TRIPLES: [[u8; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

const KIND_PROJ_MAX: u8 = 2;

pub struct Dense3 {
    /// id -> values on the six distinct triples (0-based)
    vec6: Vec<[u8; 6]>,
    /// id -> half-codes (digits 0..2 of vec6 packed base 3, then digits 3..5)
    hi: Vec<u8>,
    lo: Vec<u8>,
    /// id -> 0,1,2 for projections, 3 for majority
    kind: Vec<u8>,
    /// kind composition under a majority outer, from the two-element domain
    ktab: [[[u8; 4]; 4]; 4],
}

fn maj2(a: u8, b: u8, c: u8) -> u8 {
    if a == b || a == c {
        a
    } else {
        b
    }
}

fn kind_table() -> [[[u8; 4]; 4]; 4] {
    // the four self-dual monotone ternary operations on {0,1}
    let mut ops = [[0u8; 8]; 4];
    for a in 0..2u8 {
        for b in 0..2u8 {
            for c in 0..2u8 {
                let i = (4 * a + 2 * b + c) as usize;
                ops[0][i] = a;
                ops[1][i] = b;
                ops[2][i] = c;
                ops[3][i] = maj2(a, b, c);
            }
        }
    }
    let mut out = [[[0u8; 4]; 4]; 4];
    for k1 in 0..4 {
        for k2 in 0..4 {
            for k3 in 0..4 {
                let mut r = [0u8; 8];
                for i in 0..8 {
                    r[i] = maj2(ops[k1][i], ops[k2][i], ops[k3][i]);
                }
                out[k1][k2][k3] = (0..4)
                    .find(|&k| ops[k] == r)
                    .expect("a composite of projections and majority stays self-dual monotone")
                    as u8;
            }
        }
    }
    out
}

impl Dense3 {
    fn build() -> Dense3 {
        let mut vec6 = Vec::with_capacity(UNIVERSE);
        let mut kind = Vec::with_capacity(UNIVERSE);
        for p in 0..3usize {
            let mut v = [0u8; 6];
            for (i, t) in TRIPLES.iter().enumerate() {
                v[i] = t[p];
            }
            vec6.push(v);
            kind.push(p as u8);
        }
        for code in 0..729u16 {
            vec6.push(vec6_of_code(code));
            kind.push(3);
        }
        let hi = vec6.iter().map(|v| v[0] * 9 + v[1] * 3 + v[2]).collect();
        let lo = vec6.iter().map(|v| v[3] * 9 + v[4] * 3 + v[5]).collect();
        Dense3 {
            vec6,
            hi,
            lo,
            kind,
            ktab: kind_table(),
        }
    }

    pub fn get() -> &'static Dense3 {
        static CTX: OnceLock<Dense3> = OnceLock::new();
        CTX.get_or_init(Dense3::build)
    }

    pub fn is_projection(&self, id: Id) -> bool {
        self.kind[id as usize] <= KIND_PROJ_MAX
    }

    /// Interns a ternary operation on {1,2,3}; `None` if it is neither a
    /// projection nor a majority table (then it has no id in this universe).
    pub fn id_of(&self, op: &FiniteOperation) -> Option<Id> {
        debug_assert_eq!(op.domain_size(), 3);
        debug_assert_eq!(op.arity(), 3);
        if let Some(i) = op.is_projection() {
            // a projection table is also reported for majority-shaped tables
            // only on degenerate domains, not on {1,2,3}
            return Some(i as Id - 1);
        }
        if !op.is_majority().expect("ternary") {
            return None;
        }
        let mut code = 0u16;
        for t in &TRIPLES {
            code = code * 3 + (op.values()[index3(3, t[0] + 1, t[1] + 1, t[2] + 1)] - 1) as u16;
        }
        Some(code + 3)
    }

    pub fn op_of(&self, id: Id) -> FiniteOperation {
        if self.is_projection(id) {
            return FiniteOperation::projection(3, 3, id as usize + 1);
        }
        let v = &self.vec6[id as usize];
        let free: Vec<u8> = v.iter().map(|d| d + 1).collect();
        FiniteOperation::majority_from_free_values(3, &free).expect("valid majority table")
    }

    /// Per-outer composition table over half-codes: entry [(h1·27+h2)·27+h3]
    /// is the composed half-code under the outer's full table.
    pub fn half_table(&self, outer: &FiniteOperation) -> Vec<u8> {
        debug_assert_eq!(outer.domain_size(), 3);
        let values = outer.values();
        let mut dig = [[0u8; 3]; 27];
        for (h, d) in dig.iter_mut().enumerate() {
            *d = [(h / 9) as u8, ((h / 3) % 3) as u8, (h % 3) as u8];
        }
        let mut out = vec![0u8; 27 * 27 * 27];
        for h1 in 0..27usize {
            for h2 in 0..27usize {
                for h3 in 0..27usize {
                    let mut r = 0u8;
                    for ((&d1, &d2), &d3) in dig[h1].iter().zip(&dig[h2]).zip(&dig[h3]) {
                        let t = (9 * d1 + 3 * d2 + d3) as usize;
                        r = r * 3 + (values[t] - 1);
                    }
                    out[(h1 * 27 + h2) * 27 + h3] = r;
                }
            }
        }
        out
    }

    /// Composes `outer ∘ (g1, g2, g3)` where `htab` is the outer's half table.
    /// The outer must be a majority operation.
    #[inline]
    pub fn compose(&self, htab: &[u8], g1: Id, g2: Id, g3: Id) -> Id {
        let kind = self.ktab[self.kind[g1 as usize] as usize][self.kind[g2 as usize] as usize]
            [self.kind[g3 as usize] as usize];
        if kind <= KIND_PROJ_MAX {
            return kind as Id;
        }
        let h = ((self.hi[g1 as usize] as usize * 27) + self.hi[g2 as usize] as usize) * 27
            + self.hi[g3 as usize] as usize;
        let l = ((self.lo[g1 as usize] as usize * 27) + self.lo[g2 as usize] as usize) * 27
            + self.lo[g3 as usize] as usize;
        (htab[h] as Id) * 27 + htab[l] as Id + 3
    }
}

fn vec6_of_code(code: u16) -> [u8; 6] {
    let mut v = [0u8; 6];
    let mut c = code;
    for slot in v.iter_mut().rev() {
        *slot = (c % 3) as u8;
        c /= 3;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clone::compose3;
    use crate::reference;

    #[test]
    fn interning_round_trips() {
        let ctx = Dense3::get();
        for id in [0u16, 1, 2, 3, 100, 731] {
            let op = ctx.op_of(id);
            assert_eq!(ctx.id_of(&op), Some(id));
        }
        let e2 = FiniteOperation::projection(3, 3, 2);
        assert_eq!(ctx.id_of(&e2), Some(1));
        let not_majority = FiniteOperation::projection(3, 3, 1)
            .permute_variables(&crate::op::PermutationS::identity(3))
            .unwrap();
        assert_eq!(ctx.id_of(&not_majority), Some(0));
    }

    #[test]
    fn compose_agrees_with_table_composition() {
        let ctx = Dense3::get();
        let m3 = reference::m3();
        let htab = ctx.half_table(&m3);
        let cases: [(Id, Id, Id); 6] = [
            (0, 1, 2),
            (3, 1, 2),
            (40, 700, 3),
            (0, 0, 5),
            (600, 600, 600),
            (2, 1, 0),
        ];
        for (a, b, c) in cases {
            let expect = compose3(&m3, &ctx.op_of(a), &ctx.op_of(b), &ctx.op_of(c)).unwrap();
            let got = ctx.op_of(ctx.compose(&htab, a, b, c));
            assert_eq!(got, expect, "compose({a},{b},{c})");
        }
    }

    #[test]
    fn universe_is_closed_under_majority_composition() {
        // spot check: composites of majority tables and projections intern
        let ctx = Dense3::get();
        let m2 = reference::m2();
        let htab = ctx.half_table(&m2);
        for a in [0u16, 3, 146, 729] {
            for b in [1u16, 5, 400] {
                for c in [2u16, 731, 77] {
                    let id = ctx.compose(&htab, a, b, c);
                    assert!((id as usize) < UNIVERSE);
                    let op = ctx.op_of(id);
                    let direct =
                        compose3(&m2, &ctx.op_of(a), &ctx.op_of(b), &ctx.op_of(c)).unwrap();
                    assert_eq!(op, direct);
                }
            }
        }
    }
}
