//! k-subsets of `[n]` as single-word bitmasks, and canonically ordered
//! families of them with the intersection-structure predicates.
//!
//! Storage order everywhere is ascending bitmask-as-integer. The
//! lexicographic order on subsets is a separate comparator provided by
//! [`crate::constructions::LexKey`], never a storage order.

use std::fmt;

use crate::{Error, Result};

/// Ground-set size `n` and uniformity `k` shared by every set in a family.
///
/// Elements are 1-based: the universe is `[n] = {1, ..., n}`, and element `i`
/// occupies bit `i - 1` of a mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    n: u32,
    k: u32,
}

impl Params {
    /// Requires `1 <= k < n <= 64`.
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if !(1 <= k && k < n && n <= 64) {
            return Err(Error::Param(format!(
                "need 1 <= k < n <= 64, got n={n}, k={k}"
            )));
        }
        Ok(Params { n, k })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// Mask with one bit set per ground-set element.
    pub fn universe_mask(self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn check_element(self, x: u32) -> Result<()> {
        if x == 0 || x > self.n {
            return Err(Error::Param(format!(
                "element {x} out of range for ground set [{}]",
                self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={})", self.n, self.k)
    }
}

/// A k-element subset of `[n]`, stored as one 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    bits: u64,
    params: Params,
}

impl KSubset {
    /// Builds a set from a raw mask. The mask must have exactly `k` bits,
    /// none at position `>= n`.
    pub fn from_bits(params: Params, bits: u64) -> Result<Self> {
        if bits & !params.universe_mask() != 0 {
            return Err(Error::Param(format!(
                "mask {bits:#b} has elements outside [{}]",
                params.n()
            )));
        }
        if bits.count_ones() != params.k() {
            return Err(Error::Param(format!(
                "mask has {} elements, expected k={}",
                bits.count_ones(),
                params.k()
            )));
        }
        Ok(KSubset { bits, params })
    }

    /// Builds a set from 1-based elements (any order, duplicates rejected
    /// via the popcount check).
    pub fn from_elements(params: Params, elements: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &x in elements {
            params.check_element(x)?;
            bits |= 1 << (x - 1);
        }
        if bits.count_ones() as usize != elements.len() {
            return Err(Error::Param(format!(
                "duplicate elements in {elements:?}"
            )));
        }
        Self::from_bits(params, bits)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn params(self) -> Params {
        self.params
    }

    /// 1-based elements in ascending order.
    pub fn elements(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.params.k() as usize);
        let mut rest = self.bits;
        while rest != 0 {
            out.push(rest.trailing_zeros() + 1);
            rest &= rest - 1;
        }
        out
    }

    pub fn contains(self, x: u32) -> bool {
        (1..=64).contains(&x) && self.bits >> (x - 1) & 1 == 1
    }

    /// True iff the two sets share an element. Errors when the sets live on
    /// different parameters.
    pub fn intersects(self, other: KSubset) -> Result<bool> {
        if self.params != other.params {
            return Err(Error::Param(format!(
                "mismatched params {:?} vs {:?}",
                self.params, other.params
            )));
        }
        Ok(self.bits & other.bits != 0)
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A deduplicated family of k-subsets sharing one `Params`, stored in
/// ascending mask order. Families are immutable values; operations return
/// new families.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    params: Params,
    members: Vec<KSubset>,
}

impl SetFamily {
    pub fn empty(params: Params) -> Self {
        SetFamily {
            params,
            members: Vec::new(),
        }
    }

    /// Collects members into canonical order, silently deduplicating.
    /// Errors if any member carries different parameters.
    pub fn new(params: Params, sets: impl IntoIterator<Item = KSubset>) -> Result<Self> {
        let mut members: Vec<KSubset> = Vec::new();
        for s in sets {
            if s.params() != params {
                return Err(Error::Param(format!(
                    "member {s} has params {:?}, family has {:?}",
                    s.params(),
                    params
                )));
            }
            members.push(s);
        }
        members.sort_unstable_by_key(|s| s.bits());
        members.dedup();
        Ok(SetFamily { params, members })
    }

    pub fn from_masks(params: Params, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let sets = masks
            .into_iter()
            .map(|m| KSubset::from_bits(params, m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, sets)
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[KSubset] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &KSubset> {
        self.members.iter()
    }

    pub fn contains(&self, s: &KSubset) -> bool {
        self.members
            .binary_search_by_key(&s.bits(), |m| m.bits())
            .is_ok()
    }

    /// New family with `s` added (no-op if already present).
    pub fn with_set(&self, s: KSubset) -> Result<Self> {
        Self::new(
            self.params,
            self.members.iter().copied().chain(std::iter::once(s)),
        )
    }

    pub fn union(&self, other: &SetFamily) -> Result<Self> {
        if self.params != other.params {
            return Err(Error::Param(format!(
                "mismatched params {:?} vs {:?}",
                self.params, other.params
            )));
        }
        Self::new(
            self.params,
            self.members.iter().chain(other.members.iter()).copied(),
        )
    }

    /// True iff every pair of distinct members shares an element. Empty and
    /// singleton families count as intersecting.
    pub fn is_intersecting(&self) -> bool {
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                if a.bits() & b.bits() == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// For each member index, the number of co-members disjoint from it.
    pub fn disjoint_partner_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.members.len()];
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if self.members[i].bits() & self.members[j].bits() == 0 {
                    counts[i] += 1;
                    counts[j] += 1;
                }
            }
        }
        counts
    }

    /// Not intersecting, but every member is disjoint from at most one
    /// co-member.
    pub fn is_almost_intersecting(&self) -> bool {
        let counts = self.disjoint_partner_counts();
        counts.iter().any(|&c| c > 0) && counts.iter().all(|&c| c <= 1)
    }

    /// Number of members containing `x`.
    pub fn degree(&self, x: u32) -> Result<usize> {
        self.params.check_element(x)?;
        let bit = 1u64 << (x - 1);
        Ok(self.members.iter().filter(|m| m.bits() & bit != 0).count())
    }

    /// The smallest element attaining the maximum degree, with that degree.
    /// The empty family reports `(1, 0)`.
    pub fn max_degree(&self) -> (u32, usize) {
        let mut best = (1u32, 0usize);
        for x in 1..=self.params.n() {
            let bit = 1u64 << (x - 1);
            let d = self.members.iter().filter(|m| m.bits() & bit != 0).count();
            if d > best.1 {
                best = (x, d);
            }
        }
        best
    }

    /// Degrees of all ground-set elements, sorted ascending. Isomorphism
    /// invariant.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (1..=self.params.n())
            .map(|x| {
                let bit = 1u64 << (x - 1);
                self.members.iter().filter(|m| m.bits() & bit != 0).count()
            })
            .collect();
        degs.sort_unstable();
        degs
    }

    /// `F(x)`: members containing `x`, with `x` removed; a (k-1)-uniform
    /// family on the same ground set.
    pub fn link(&self, x: u32) -> Result<SetFamily> {
        self.params.check_element(x)?;
        if self.params.k() == 1 {
            return Err(Error::Domain(
                "link of a 1-uniform family would be 0-uniform".into(),
            ));
        }
        let sub = Params::new(self.params.n(), self.params.k() - 1)?;
        let bit = 1u64 << (x - 1);
        SetFamily::from_masks(
            sub,
            self.members
                .iter()
                .filter(|m| m.bits() & bit != 0)
                .map(|m| m.bits() & !bit),
        )
    }

    /// `F(x̄)`: members not containing `x`.
    pub fn without(&self, x: u32) -> Result<SetFamily> {
        self.params.check_element(x)?;
        let bit = 1u64 << (x - 1);
        SetFamily::new(
            self.params,
            self.members.iter().filter(|m| m.bits() & bit == 0).copied(),
        )
    }

    /// `F(x, ȳ)`: members containing `x` but not `y`, with `x` removed.
    pub fn link_avoiding(&self, x: u32, y: u32) -> Result<SetFamily> {
        self.params.check_element(x)?;
        self.params.check_element(y)?;
        if x == y {
            return Err(Error::Param(format!("link_avoiding needs x != y, got {x}")));
        }
        if self.params.k() == 1 {
            return Err(Error::Domain(
                "link of a 1-uniform family would be 0-uniform".into(),
            ));
        }
        let sub = Params::new(self.params.n(), self.params.k() - 1)?;
        let xb = 1u64 << (x - 1);
        let yb = 1u64 << (y - 1);
        SetFamily::from_masks(
            sub,
            self.members
                .iter()
                .filter(|m| m.bits() & xb != 0 && m.bits() & yb == 0)
                .map(|m| m.bits() & !xb),
        )
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {{", self.params)?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Searches for a ground-set permutation mapping `f` onto `g`.
///
/// Returns a witness `perm` with `perm[i]` the image of element `i + 1`, or
/// `None`. Backtracking over element images with degree-multiset and
/// pair-degree pruning; intended for small ground sets (n up to ~16).
pub fn family_isomorphic(f: &SetFamily, g: &SetFamily) -> Option<Vec<u32>> {
    if f.params() != g.params() || f.len() != g.len() {
        return None;
    }
    let n = f.params().n() as usize;
    if f.is_empty() {
        return Some((1..=n as u32).collect());
    }
    if f.degree_multiset() != g.degree_multiset() {
        return None;
    }

    let deg = |fam: &SetFamily| -> Vec<usize> {
        (1..=n as u32)
            .map(|x| fam.degree(x).expect("element in range"))
            .collect()
    };
    let pair_deg = |fam: &SetFamily| -> Vec<Vec<u16>> {
        let mut pd = vec![vec![0u16; n]; n];
        for m in fam.iter() {
            let elems = m.elements();
            for (i, &a) in elems.iter().enumerate() {
                for &b in &elems[i + 1..] {
                    pd[(a - 1) as usize][(b - 1) as usize] += 1;
                    pd[(b - 1) as usize][(a - 1) as usize] += 1;
                }
            }
        }
        pd
    };

    let deg_f = deg(f);
    let deg_g = deg(g);
    let pd_f = pair_deg(f);
    let pd_g = pair_deg(g);
    let g_masks: Vec<u64> = g.iter().map(|m| m.bits()).collect();

    // Assign high-degree elements first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&x| (std::cmp::Reverse(deg_f[x]), x));

    // members_of[x]: indices of f-members containing element x+1.
    let mut members_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (mi, m) in f.iter().enumerate() {
        for e in m.elements() {
            members_of[(e - 1) as usize].push(mi);
        }
    }

    struct Ctx<'a> {
        n: usize,
        order: &'a [usize],
        deg_f: &'a [usize],
        deg_g: &'a [usize],
        pd_f: &'a [Vec<u16>],
        pd_g: &'a [Vec<u16>],
        f_members: &'a [KSubset],
        members_of: &'a [Vec<usize>],
        g_masks: &'a [u64],
    }

    fn assign(ctx: &Ctx, depth: usize, img: &mut [Option<u32>], used: &mut u64) -> bool {
        if depth == ctx.n {
            return true;
        }
        let x = ctx.order[depth];
        'candidates: for y in 0..ctx.n {
            if *used >> y & 1 == 1 || ctx.deg_f[x] != ctx.deg_g[y] {
                continue;
            }
            for (z, assigned) in img.iter().enumerate() {
                if let Some(w) = assigned {
                    if ctx.pd_f[x][z] != ctx.pd_g[y][(w - 1) as usize] {
                        continue 'candidates;
                    }
                }
            }
            img[x] = Some(y as u32 + 1);
            *used |= 1 << y;
            // Every f-member whose elements are now all assigned must map
            // to a g-member.
            let mut ok = true;
            'members: for &mi in &ctx.members_of[x] {
                let mut image = 0u64;
                for e in ctx.f_members[mi].elements() {
                    match img[(e - 1) as usize] {
                        Some(w) => image |= 1 << (w - 1),
                        None => continue 'members,
                    }
                }
                if ctx.g_masks.binary_search(&image).is_err() {
                    ok = false;
                    break;
                }
            }
            if ok && assign(ctx, depth + 1, img, used) {
                return true;
            }
            img[x] = None;
            *used &= !(1 << y);
        }
        false
    }

    let ctx = Ctx {
        n,
        order: &order,
        deg_f: &deg_f,
        deg_g: &deg_g,
        pd_f: &pd_f,
        pd_g: &pd_g,
        f_members: f.members(),
        members_of: &members_of,
        g_masks: &g_masks,
    };
    let mut img: Vec<Option<u32>> = vec![None; n];
    let mut used = 0u64;
    if assign(&ctx, 0, &mut img, &mut used) {
        let perm: Vec<u32> = img.into_iter().map(|v| v.expect("complete")).collect();
        debug_assert!({
            let mapped: Vec<u64> = f
                .iter()
                .map(|m| {
                    let mut out = 0u64;
                    for e in m.elements() {
                        out |= 1 << (perm[(e - 1) as usize] - 1);
                    }
                    out
                })
                .collect();
            let mut sorted = mapped.clone();
            sorted.sort_unstable();
            sorted == g_masks
        });
        Some(perm)
    } else {
        None
    }
}

/// Applies a ground-set permutation (`perm[i]` = image of element `i + 1`)
/// to every member.
pub fn apply_permutation(f: &SetFamily, perm: &[u32]) -> Result<SetFamily> {
    let n = f.params().n() as usize;
    if perm.len() != n {
        return Err(Error::Param(format!(
            "permutation length {} != n = {n}",
            perm.len()
        )));
    }
    let mut seen = 0u64;
    for &y in perm {
        if y == 0 || y as usize > n || seen >> (y - 1) & 1 == 1 {
            return Err(Error::Param(format!("not a permutation of [{n}]: {perm:?}")));
        }
        seen |= 1 << (y - 1);
    }
    SetFamily::from_masks(
        f.params(),
        f.iter().map(|m| {
            let mut out = 0u64;
            for e in m.elements() {
                out |= 1 << (perm[(e - 1) as usize] - 1);
            }
            out
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{b_r, full_star};

    fn fam(n: u32, k: u32, sets: &[&[u32]]) -> SetFamily {
        let p = Params::new(n, k).unwrap();
        SetFamily::new(
            p,
            sets.iter().map(|s| KSubset::from_elements(p, s).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn params_bounds() {
        assert!(Params::new(5, 2).is_ok());
        assert!(Params::new(64, 63).is_ok());
        assert!(Params::new(65, 2).is_err());
        assert!(Params::new(4, 4).is_err());
        assert!(Params::new(4, 0).is_err());
    }

    #[test]
    fn ksubset_validation() {
        let p = Params::new(5, 2).unwrap();
        assert!(KSubset::from_elements(p, &[1, 2]).is_ok());
        assert!(KSubset::from_elements(p, &[1, 6]).is_err());
        assert!(KSubset::from_elements(p, &[1, 1]).is_err());
        assert!(KSubset::from_elements(p, &[1, 2, 3]).is_err());
        assert!(KSubset::from_bits(p, 0b11).is_ok());
        assert!(KSubset::from_bits(p, 0b111).is_err());
        assert!(KSubset::from_bits(p, 1 << 5 | 1).is_err());
    }

    #[test]
    fn intersects_basic() {
        let p = Params::new(5, 2).unwrap();
        let a = KSubset::from_elements(p, &[1, 2]).unwrap();
        let b = KSubset::from_elements(p, &[2, 3]).unwrap();
        let c = KSubset::from_elements(p, &[3, 4]).unwrap();
        assert!(a.intersects(b).unwrap());
        assert!(!a.intersects(c).unwrap());
        // {1,2,3} vs {4,5,6}: a disjoint pair.
        let p6 = Params::new(7, 3).unwrap();
        let x = KSubset::from_elements(p6, &[1, 2, 3]).unwrap();
        let y = KSubset::from_elements(p6, &[4, 5, 6]).unwrap();
        assert!(!x.intersects(y).unwrap());
        // Mismatched params error.
        let q = Params::new(6, 2).unwrap();
        let z = KSubset::from_elements(q, &[1, 2]).unwrap();
        assert!(a.intersects(z).is_err());
    }

    #[test]
    fn is_intersecting_cases() {
        let star = full_star(5, 2, 1).unwrap();
        assert!(star.is_intersecting());
        assert!(!fam(5, 2, &[&[1, 2], &[3, 4]]).is_intersecting());
        assert!(SetFamily::empty(Params::new(5, 2).unwrap()).is_intersecting());
        assert!(fam(5, 2, &[&[1, 2]]).is_intersecting());
    }

    #[test]
    fn disjoint_partner_counts_cases() {
        // All 2-subsets of [4], viewed inside [5]: each member has exactly
        // one disjoint co-member (its complement in [4]).
        let mut sets: Vec<Vec<u32>> = Vec::new();
        for a in 1..=4u32 {
            for b in a + 1..=4 {
                sets.push(vec![a, b]);
            }
        }
        let refs: Vec<&[u32]> = sets.iter().map(|s| s.as_slice()).collect();
        let f = fam(5, 2, &refs);
        assert_eq!(f.len(), 6);
        assert!(f.disjoint_partner_counts().iter().all(|&c| c == 1));

        let g = fam(6, 2, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert!(g.disjoint_partner_counts().iter().all(|&c| c == 2));

        let star = full_star(6, 3, 2).unwrap();
        assert!(star.disjoint_partner_counts().iter().all(|&c| c == 0));
    }

    #[test]
    fn almost_intersecting_cases() {
        assert!(fam(5, 2, &[&[1, 2], &[3, 4]]).is_almost_intersecting());
        assert!(!full_star(6, 3, 1).unwrap().is_almost_intersecting());
        assert!(!fam(6, 2, &[&[1, 2], &[3, 4], &[5, 6]]).is_almost_intersecting());
        assert!(!SetFamily::empty(Params::new(5, 2).unwrap()).is_almost_intersecting());
    }

    #[test]
    fn degree_and_max_degree() {
        let star = full_star(6, 3, 1).unwrap();
        assert_eq!(star.degree(1).unwrap(), 10); // C(5,2)
        assert_eq!(star.max_degree(), (1, 10));
        assert!(star.degree(7).is_err());
        let empty = SetFamily::empty(Params::new(6, 3).unwrap());
        assert_eq!(empty.max_degree(), (1, 0));
    }

    #[test]
    fn hm_max_degree_at_one() {
        // Hilton-Milner family: max degree C(n-1,k-1) - C(n-k-1,k-1) at 1.
        use crate::BigCount;
        for (n, k) in [(9u32, 3u32), (10, 4), (11, 4)] {
            let hm = b_r(n, k, k + 1).unwrap();
            let expect = crate::bounds::binom(n as i64 - 1, k as i64 - 1)
                - crate::bounds::binom(n as i64 - k as i64 - 1, k as i64 - 1);
            let (x, d) = hm.max_degree();
            assert_eq!(x, 1);
            assert_eq!(BigCount::from(d), expect);
        }
    }

    #[test]
    fn link_without_cases() {
        let star = full_star(6, 3, 1).unwrap();
        let l = star.link(1).unwrap();
        assert_eq!(l.params().k(), 2);
        assert_eq!(l.len(), 10); // all 2-subsets of [2,6]
        assert!(l.iter().all(|m| !m.contains(1)));
        assert_eq!(star.without(1).unwrap().len(), 0);

        // Exactly one Hilton-Milner member avoids 1, namely [2,k+1].
        let hm = b_r(9, 4, 5).unwrap();
        let w = hm.without(1).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.members()[0].elements(), vec![2, 3, 4, 5]);

        let f = fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let la = f.link_avoiding(1, 3).unwrap();
        assert_eq!(la.len(), 1);
        assert_eq!(la.members()[0].elements(), vec![2]);

        // |link| + |without| = |f|
        assert_eq!(
            star.link(3).unwrap().len() + star.without(3).unwrap().len(),
            star.len()
        );
    }

    #[test]
    fn isomorphism_witness_and_rejection() {
        // C([4],2) inside [5] vs its image under reversal of [5].
        let mut sets: Vec<Vec<u32>> = Vec::new();
        for a in 1..=4u32 {
            for b in a + 1..=4 {
                sets.push(vec![a, b]);
            }
        }
        let refs: Vec<&[u32]> = sets.iter().map(|s| s.as_slice()).collect();
        let f = fam(5, 2, &refs);
        let g = apply_permutation(&f, &[5, 4, 3, 2, 1]).unwrap();
        let w = family_isomorphic(&f, &g).expect("isomorphic");
        assert_eq!(apply_permutation(&f, &w).unwrap(), g);

        // Reflexive with identity accepted.
        let id = family_isomorphic(&f, &f).unwrap();
        assert_eq!(apply_permutation(&f, &id).unwrap(), f);

        // Equal sizes, different structure.
        let b3 = b_r(8, 3, 3).unwrap();
        let b4 = b_r(8, 3, 4).unwrap();
        assert_eq!(b3.len(), b4.len());
        assert_ne!(b3.degree_multiset(), b4.degree_multiset());
        assert!(family_isomorphic(&b3, &b4).is_none());
    }

    #[test]
    fn isomorphic_families_share_invariants() {
        let f = b_r(9, 3, 4).unwrap();
        let g = apply_permutation(&f, &[3, 1, 2, 9, 8, 7, 6, 5, 4]).unwrap();
        let w = family_isomorphic(&f, &g).expect("isomorphic");
        assert_eq!(apply_permutation(&f, &w).unwrap(), g);
        assert_eq!(f.degree_multiset(), g.degree_multiset());
        let mut cf = f.disjoint_partner_counts();
        let mut cg = g.disjoint_partner_counts();
        cf.sort_unstable();
        cg.sort_unstable();
        assert_eq!(cf, cg);
    }
}
