//! Independent brute-force cross-checks for the branch and bound: a naive
//! subset-lattice walk for the exact optimum on tiny universes, and a direct
//! local-maximality scan.

use crate::constructions::{all_k_subsets, Interval};
use crate::family::{KSubset, Params, SetFamily};
use crate::{Error, Result};

const MAX_ORACLE_UNIVERSE: usize = 40;

/// Whether `m` can join `chosen` without handing any member a second
/// disjoint partner.
fn can_add(m: u64, chosen: &[u64], counts: &[u8]) -> bool {
    let mut d = 0;
    for (j, &c) in chosen.iter().enumerate() {
        if m & c == 0 {
            if counts[j] == 1 {
                return false;
            }
            d += 1;
            if d == 2 {
                return false;
            }
        }
    }
    true
}

fn walk(
    masks: &[u64],
    i: usize,
    chosen: &mut Vec<u64>,
    counts: &mut Vec<u8>,
    has_edge: bool,
    best: &mut usize,
) {
    if has_edge && chosen.len() > *best {
        *best = chosen.len();
    }
    if i == masks.len() {
        return;
    }
    // Early cut: only sets that fit individually now can ever join later.
    let addable = (i..masks.len())
        .filter(|&j| can_add(masks[j], chosen, counts))
        .count();
    if chosen.len() + addable <= *best {
        return;
    }

    if can_add(masks[i], chosen, counts) {
        let mut disjoint = false;
        for (j, &c) in chosen.iter().enumerate() {
            if masks[i] & c == 0 {
                counts[j] += 1;
                disjoint = true;
            }
        }
        chosen.push(masks[i]);
        counts.push(u8::from(disjoint));
        walk(masks, i + 1, chosen, counts, has_edge || disjoint, best);
        chosen.pop();
        counts.pop();
        for (j, &c) in chosen.iter().enumerate() {
            if masks[i] & c == 0 {
                counts[j] -= 1;
            }
        }
    }
    walk(masks, i + 1, chosen, counts, has_edge, best);
}

/// Maximum almost intersecting family size by naive enumeration of all
/// subfamilies, with early cuts. Refuses universes above 40 sets. Returns 0
/// when no almost intersecting family exists.
pub fn oracle_max(params: Params) -> Result<usize> {
    let masks = all_k_subsets(Interval::new(1, params.n())?, params.k());
    if masks.len() > MAX_ORACLE_UNIVERSE {
        return Err(Error::Resource(format!(
            "universe of {} sets exceeds the oracle limit {MAX_ORACLE_UNIVERSE}",
            masks.len()
        )));
    }
    let mut best = 0;
    walk(
        &masks,
        0,
        &mut Vec::new(),
        &mut Vec::new(),
        false,
        &mut best,
    );
    Ok(best)
}

/// All sets outside `f` whose addition leaves the family almost
/// intersecting; an empty list certifies local maximality. Validated with
/// the plain family predicates, independent of the search internals.
pub fn local_maximality_check(f: &SetFamily) -> Vec<KSubset> {
    let params = f.params();
    let mut out = Vec::new();
    for mask in all_k_subsets(
        Interval::new(1, params.n()).expect("params validated"),
        params.k(),
    ) {
        let g = KSubset::from_bits(params, mask).expect("universe member");
        if f.contains(&g) {
            continue;
        }
        let extended = f.with_set(g).expect("same params");
        if extended.is_almost_intersecting() {
            out.push(g);
        }
    }
    out
}
