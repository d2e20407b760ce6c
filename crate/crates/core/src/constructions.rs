//! Builders for the named extremal families: full stars, the `B_r` families,
//! the Hilton–Milner family `B_{k+1}`, the almost intersecting `B+`, and
//! lexicographic initial segments, plus the subset enumeration helpers the
//! rest of the crate shares.

use std::cmp::Ordering;

use crate::family::{KSubset, Params, SetFamily};
use crate::{Error, Result};

/// A contiguous 1-based interval `[lo, hi]` of ground-set elements.
///
/// Only contiguous sub-universes are supported; that is all the lex
/// machinery ever needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: u32,
    hi: u32,
}

impl Interval {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if !(1 <= lo && lo <= hi && hi <= 64) {
            return Err(Error::Param(format!(
                "need 1 <= lo <= hi <= 64, got [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    pub fn len(self) -> u32 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn mask(self) -> u64 {
        let full = if self.hi == 64 {
            u64::MAX
        } else {
            (1u64 << self.hi) - 1
        };
        full & !((1u64 << (self.lo - 1)) - 1)
    }
}

/// Exact `C(n, k)` in machine words; all values with `n <= 64` fit in `u64`.
pub(crate) fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc as u64
}

/// All k-subsets of `x` as masks, in ascending mask order (Gosper's hack
/// over the compressed positions, shifted into place).
pub fn all_k_subsets(x: Interval, k: u32) -> Vec<u64> {
    let t = x.len();
    if k == 0 || k > t {
        return Vec::new();
    }
    let shift = x.lo - 1;
    let mut out = Vec::with_capacity(binom_u64(t as u64, k as u64) as usize);
    let limit: u128 = 1u128 << t;
    let mut v: u64 = (1u64 << k) - 1;
    while (v as u128) < limit {
        out.push(v << shift);
        let low = v & v.wrapping_neg();
        let ripple = v + low;
        v = ripple | (((v ^ ripple) >> 2) / low);
    }
    out
}

/// Sort key realizing the lexicographic order `<_L` on equal-size subsets:
/// `A <_L B` iff `min(A \ B) < min(B \ A)`. Smaller key means earlier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LexKey(u64);

impl KSubset {
    pub fn lex_key(self) -> LexKey {
        LexKey(!self.bits().reverse_bits())
    }
}

/// The `<_L` comparator on equal-size subsets.
pub fn lex_cmp(a: &KSubset, b: &KSubset) -> Ordering {
    a.lex_key().cmp(&b.lex_key())
}

/// The full star `S(n, k, x)`: all k-subsets of `[n]` containing `x`.
pub fn full_star(n: u32, k: u32, x: u32) -> Result<SetFamily> {
    let params = Params::new(n, k)?;
    if x == 0 || x > n {
        return Err(Error::Param(format!("star center {x} outside [{n}]")));
    }
    let xb = 1u64 << (x - 1);
    let mut masks = Vec::new();
    if k == 1 {
        masks.push(xb);
    } else {
        // (k-1)-subsets of the n-1 positions other than x-1, expanded.
        let rest = all_k_subsets(Interval::new(1, n - 1)?, k - 1);
        for r in rest {
            let low = r & ((1u64 << (x - 1)) - 1);
            let high = (r ^ low) << 1;
            masks.push(low | high | xb);
        }
    }
    SetFamily::from_masks(params, masks)
}

/// The intersecting family `B_r(n, k)` for `3 <= r <= k + 1`: sets containing
/// 1 and meeting `[2, r]`, together with sets avoiding 1 that contain all of
/// `[2, r]`.
pub fn b_r(n: u32, k: u32, r: u32) -> Result<SetFamily> {
    let params = Params::new(n, k)?;
    if !(3 <= r && r <= k + 1) {
        return Err(Error::Param(format!(
            "need 3 <= r <= k + 1, got r={r}, k={k}"
        )));
    }
    let head = Interval::new(2, r)?.mask();
    let mut masks = Vec::new();
    // 1 in B, B meets [2, r]: 1 plus a (k-1)-subset of [2, n] meeting [2, r].
    for rest in all_k_subsets(Interval::new(2, n)?, k - 1) {
        if rest & head != 0 {
            masks.push(rest | 1);
        }
    }
    // 1 not in B, [2, r] inside B: [2, r] plus a (k-r+1)-subset of [r+1, n].
    if r == k + 1 {
        masks.push(head);
    } else {
        for tail in all_k_subsets(Interval::new(r + 1, n)?, k - r + 1) {
            masks.push(head | tail);
        }
    }
    SetFamily::from_masks(params, masks)
}

/// The Hilton–Milner family `B_{k+1}(n, k)`.
pub fn hilton_milner(n: u32, k: u32) -> Result<SetFamily> {
    b_r(n, k, k + 1)
}

/// `B+`: the Hilton–Milner family plus one extra set containing 1 and
/// avoiding `[2, k + 1]`. The result is almost intersecting.
pub fn b_plus(n: u32, k: u32, extra: &KSubset) -> Result<SetFamily> {
    let params = Params::new(n, k)?;
    if extra.params() != params {
        return Err(Error::Param(format!(
            "extra set has params {:?}, expected {:?}",
            extra.params(),
            params
        )));
    }
    let head = Interval::new(2, k + 1)?.mask();
    if !extra.contains(1) || extra.bits() & head != 0 {
        return Err(Error::Param(format!(
            "extra set must contain 1 and avoid [2, {}], got {extra}",
            k + 1
        )));
    }
    hilton_milner(n, k)?.with_set(*extra)
}

/// `B+` with the lex-least valid extra set `{1} ∪ [k + 2, 2k]`.
pub fn b_plus_default(n: u32, k: u32) -> Result<SetFamily> {
    let params = Params::new(n, k)?;
    if n < 2 * k {
        return Err(Error::Param(format!(
            "default extra set {{1}} ∪ [{}, {}] needs n >= 2k",
            k + 2,
            2 * k
        )));
    }
    let bits = if k == 1 {
        1u64
    } else {
        1 | Interval::new(k + 2, 2 * k)?.mask()
    };
    let extra = KSubset::from_bits(params, bits)?;
    b_plus(n, k, &extra)
}

fn unrank_lex(x: Interval, k: u32, rank: u64) -> u64 {
    let mut bits = 0u64;
    let mut e = x.lo;
    let mut left = k;
    let mut r = rank;
    while left > 0 {
        debug_assert!(e <= x.hi);
        let after = (x.hi - e) as u64;
        let with_e = binom_u64(after, (left - 1) as u64);
        if r < with_e {
            bits |= 1 << (e - 1);
            left -= 1;
        } else {
            r -= with_e;
        }
        e += 1;
    }
    bits
}

/// Rank of a subset of `x` in the lexicographic order (0-based).
pub fn lex_rank(x: Interval, s: &KSubset) -> Result<u64> {
    if s.bits() & !x.mask() != 0 {
        return Err(Error::Param(format!("{s} not inside [{}, {}]", x.lo, x.hi)));
    }
    let k = s.params().k();
    let mut rank = 0u64;
    let mut left = k;
    for e in x.lo..=x.hi {
        if left == 0 {
            break;
        }
        let after = (x.hi - e) as u64;
        if s.contains(e) {
            left -= 1;
        } else {
            rank += binom_u64(after, (left - 1) as u64);
        }
    }
    Ok(rank)
}

/// `L(m, X, k)`: the first `m` k-subsets of the interval `X` in `<_L` order,
/// generated by unranking. Requires `1 <= m <= C(|X|, k)`.
pub fn lex_family(m: u64, x: Interval, k: u32) -> Result<SetFamily> {
    let total = binom_u64(x.len() as u64, k as u64);
    if m == 0 || m > total {
        return Err(Error::Param(format!(
            "need 1 <= m <= C({}, {k}) = {total}, got m={m}",
            x.len()
        )));
    }
    let params = Params::new(x.hi, k)?;
    SetFamily::from_masks(params, (0..m).map(|r| unrank_lex(x, k, r)))
}

/// Complements of the non-members: the (n-k)-uniform family
/// `{X : complement(X) not in f}` over the same ground set.
pub fn complement_family(f: &SetFamily) -> Result<SetFamily> {
    let n = f.params().n();
    let k = f.params().k();
    let params = Params::new(n, n - k)?;
    let universe = Params::new(n, k)?.universe_mask();
    let masks = all_k_subsets(Interval::new(1, n)?, n - k)
        .into_iter()
        .filter(|&m| {
            let comp = universe & !m;
            !f.iter().any(|s| s.bits() == comp)
        });
    SetFamily::from_masks(params, masks)
}
