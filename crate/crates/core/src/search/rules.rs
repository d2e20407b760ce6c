//! The k = 3 completion-set machinery: for a committed disjoint pair of
//! triples, `D(a, b)` collects the outside elements `c` with `{a, b, c}` in
//! the family. Three exclusion rules follow for any almost intersecting
//! extension:
//!
//! 1. once `|D(a, b)| >= 3`, every further member must meet `{a, b}`;
//! 2. once `|D(a, b)| >= 2`, no member fits inside the committed union minus
//!    `{a, b}`;
//! 3. for a perfect matching of the two triples with two legs already
//!    completed, a member on the third leg must complete to the one common
//!    element.
//!
//! Each rule also exists as a standalone predicate over complete families,
//! for property testing.

use crate::family::{KSubset, SetFamily};
use crate::{Error, Result};

use super::{Bits, SearchStats};

/// The six perfect matchings of `{0,1,2} x {0,1,2}`, as triples of flat
/// `(a * 3 + b)` leg indices.
const MATCHINGS: [[usize; 3]; 6] = [
    [0, 4, 8], // (0,0)(1,1)(2,2)
    [0, 5, 7], // (0,0)(1,2)(2,1)
    [1, 3, 8], // (0,1)(1,0)(2,2)
    [1, 5, 6], // (0,1)(1,2)(2,0)
    [2, 3, 7], // (0,2)(1,0)(2,1)
    [2, 4, 6], // (0,2)(1,1)(2,0)
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum K3Class {
    /// All three elements inside the committed union `[6]`.
    Inside,
    /// Two elements `{a, b}` inside, one outside.
    Straddle { leg: u8, out: u64 },
}

/// Search-time exclusion engine for the relabeled committed pair
/// `({1,2,3}, {4,5,6})`.
pub(super) struct K3Engine {
    masks: Vec<u64>,
    class: Vec<K3Class>,
    /// Element mask of each leg `{a, b}`.
    leg_mask: [u64; 9],
}

const UNION_MASK: u64 = 0x3F;

impl K3Engine {
    pub(super) fn new(masks: &[u64]) -> Self {
        let mut leg_mask = [0u64; 9];
        for a in 0..3u32 {
            for b in 0..3u32 {
                leg_mask[(a * 3 + b) as usize] = (1 << a) | (1 << (b + 3));
            }
        }
        let class = masks
            .iter()
            .map(|&m| {
                let out = m & !UNION_MASK;
                if out == 0 {
                    K3Class::Inside
                } else {
                    debug_assert_eq!(out.count_ones(), 1);
                    let inside = m & UNION_MASK;
                    let a = inside.trailing_zeros();
                    let b = (inside >> 3).trailing_zeros();
                    debug_assert!(a < 3 && b < 3);
                    K3Class::Straddle {
                        leg: (a * 3 + b) as u8,
                        out,
                    }
                }
            })
            .collect();
        K3Engine {
            masks: masks.to_vec(),
            class,
            leg_mask,
        }
    }

    /// Folds an included candidate into the completion sets; returns whether
    /// anything changed (only straddling members move them).
    pub(super) fn note_inclusion(&self, c: usize, dmask: &mut [u64; 9]) -> bool {
        match self.class[c] {
            K3Class::Inside => false,
            K3Class::Straddle { leg, out } => {
                dmask[leg as usize] |= out;
                true
            }
        }
    }

    /// Removes every alive candidate the three rules exclude under the
    /// current completion sets.
    pub(super) fn sweep(
        &self,
        alive: &mut Bits,
        dmask: &[u64; 9],
        stats: &mut SearchStats,
    ) {
        let mut kill: Vec<usize> = Vec::new();
        for (leg, &dm) in dmask.iter().enumerate() {
            let t = dm.count_ones();
            if t >= 3 {
                for d in alive.iter_ones() {
                    if self.masks[d] & self.leg_mask[leg] == 0 {
                        kill.push(d);
                        stats.rule_meets_pair += 1;
                    }
                }
            } else if t == 2 {
                for d in alive.iter_ones() {
                    if self.class[d] == K3Class::Inside
                        && self.masks[d] & self.leg_mask[leg] == 0
                    {
                        kill.push(d);
                        stats.rule_inside_excluded += 1;
                    }
                }
            }
            for d in kill.drain(..) {
                alive.clear(d);
            }
        }
        for matching in MATCHINGS {
            for rot in 0..3 {
                let target = matching[rot];
                let other = dmask[matching[(rot + 1) % 3]] | dmask[matching[(rot + 2) % 3]];
                if dmask[matching[(rot + 1) % 3]] == 0 || dmask[matching[(rot + 2) % 3]] == 0 {
                    continue;
                }
                // Completions of the third leg must equal the single common
                // element; with two distinct elements seen, none qualify.
                for d in alive.iter_ones() {
                    if let K3Class::Straddle { leg, out } = self.class[d] {
                        if leg as usize == target && out != other {
                            kill.push(d);
                            stats.rule_one_element += 1;
                        }
                    }
                }
                for d in kill.drain(..) {
                    alive.clear(d);
                }
            }
        }
    }
}

fn completion_context(
    f: &SetFamily,
    pair: (&KSubset, &KSubset),
) -> Result<(u64, Vec<u32>, Vec<u32>)> {
    if f.params().k() != 3 {
        return Err(Error::Domain(format!(
            "completion sets are only defined for 3-uniform families, got k = {}",
            f.params().k()
        )));
    }
    let (p, q) = pair;
    if p.params() != f.params() || q.params() != f.params() {
        return Err(Error::Param("pair params differ from family params".into()));
    }
    if p.bits() & q.bits() != 0 {
        return Err(Error::Param(format!("pair {p}, {q} is not disjoint")));
    }
    Ok((p.bits() | q.bits(), p.elements(), q.elements()))
}

/// `D(a, b)`: the elements outside the committed pair's union completing
/// `{a, b}` to a member of `f`. Requires `k = 3`, a disjoint pair, and
/// `a` from the first member, `b` from the second.
pub fn d_sets(
    f: &SetFamily,
    pair: (&KSubset, &KSubset),
    a: u32,
    b: u32,
) -> Result<Vec<u32>> {
    let (union, _, _) = completion_context(f, pair)?;
    if !pair.0.contains(a) || !pair.1.contains(b) {
        return Err(Error::Param(format!(
            "need a in {} and b in {}, got a={a}, b={b}",
            pair.0, pair.1
        )));
    }
    let ab = (1u64 << (a - 1)) | (1u64 << (b - 1));
    let mut out = Vec::new();
    for m in f.iter() {
        if m.bits() & ab == ab {
            let rest = m.bits() & !ab;
            if rest & union == 0 {
                out.push(rest.trailing_zeros() + 1);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn all_d_sets(f: &SetFamily, pair: (&KSubset, &KSubset)) -> Result<Vec<Vec<Vec<u32>>>> {
    let (_, ps, qs) = completion_context(f, pair)?;
    let mut grid = vec![vec![Vec::new(); 3]; 3];
    for (i, &a) in ps.iter().enumerate() {
        for (j, &b) in qs.iter().enumerate() {
            grid[i][j] = d_sets(f, pair, a, b)?;
        }
    }
    Ok(grid)
}

/// Matching property of the completion sets: along any perfect matching of
/// the pair's elements, (i) three nonempty completion sets must be the same
/// one-element set, and (ii) a completion set of size three or more forces
/// the other two empty.
pub fn lemma_4_1_holds(f: &SetFamily, pair: (&KSubset, &KSubset)) -> Result<bool> {
    let grid = all_d_sets(f, pair)?;
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for perm in PERMS {
        let legs: Vec<&Vec<u32>> = (0..3).map(|i| &grid[i][perm[i]]).collect();
        if legs.iter().all(|d| !d.is_empty()) {
            let same_singleton =
                legs.iter().all(|d| d.len() == 1) && legs[1] == legs[0] && legs[2] == legs[0];
            if !same_singleton {
                return Ok(false);
            }
        }
        for i in 0..3 {
            if legs[i].len() >= 3
                && (!legs[(i + 1) % 3].is_empty() || !legs[(i + 2) % 3].is_empty())
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// High-multiplicity property: `|D(a, b)| >= 3` forces every member of the
/// family to meet `{a, b}`.
pub fn lemma_4_2_holds(f: &SetFamily, pair: (&KSubset, &KSubset)) -> Result<bool> {
    let (_, ps, qs) = completion_context(f, pair)?;
    for &a in &ps {
        for &b in &qs {
            if d_sets(f, pair, a, b)?.len() >= 3 {
                let ab = (1u64 << (a - 1)) | (1u64 << (b - 1));
                if f.iter().any(|m| m.bits() & ab == 0) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Inside-exclusion property: `|D(a, b)| >= 2` forbids members inside the
/// committed union that avoid `{a, b}`.
pub fn lemma_4_3_holds(f: &SetFamily, pair: (&KSubset, &KSubset)) -> Result<bool> {
    let (union, ps, qs) = completion_context(f, pair)?;
    for &a in &ps {
        for &b in &qs {
            if d_sets(f, pair, a, b)?.len() >= 2 {
                let ab = (1u64 << (a - 1)) | (1u64 << (b - 1));
                let hole = union & !ab;
                if f.iter().any(|m| m.bits() & !hole == 0) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
