//! The canonical decomposition of an almost intersecting family into an
//! intersecting core plus disjoint pairs, and the full-tail machinery.

use crate::family::{KSubset, SetFamily};
use crate::{Error, Result};

/// The unique split of an (almost) intersecting family: the members with no
/// disjoint co-member (`core`, always intersecting) and the matched disjoint
/// couples (`pairs`, each stored smaller member first, sorted by first
/// member).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPartition {
    core: SetFamily,
    pairs: Vec<(KSubset, KSubset)>,
}

/// Splits `f` into core and pairs. Accepts intersecting families (zero
/// pairs); errors if any member has two or more disjoint co-members.
pub fn canonical_partition(f: &SetFamily) -> Result<CanonicalPartition> {
    let counts = f.disjoint_partner_counts();
    if let Some(i) = counts.iter().position(|&c| c >= 2) {
        return Err(Error::NotAlmostIntersecting(format!(
            "member {} is disjoint from {} co-members",
            f.members()[i],
            counts[i]
        )));
    }
    let mut core = Vec::new();
    let mut pairs = Vec::new();
    for (i, m) in f.members().iter().enumerate() {
        if counts[i] == 0 {
            core.push(*m);
            continue;
        }
        // Unique partner; record each couple once, from its smaller side.
        let j = f
            .members()
            .iter()
            .position(|o| m.bits() & o.bits() == 0)
            .expect("count is 1");
        if i < j {
            pairs.push((*m, f.members()[j]));
        }
    }
    Ok(CanonicalPartition {
        core: SetFamily::new(f.params(), core)?,
        pairs,
    })
}

/// Number of disjoint pairs in the canonical partition.
pub fn ell(f: &SetFamily) -> Result<usize> {
    Ok(canonical_partition(f)?.ell())
}

impl CanonicalPartition {
    pub fn core(&self) -> &SetFamily {
        &self.core
    }

    pub fn pairs(&self) -> &[(KSubset, KSubset)] {
        &self.pairs
    }

    pub fn ell(&self) -> usize {
        self.pairs.len()
    }

    /// Core plus all pair members: the original family.
    pub fn reassemble(&self) -> SetFamily {
        SetFamily::new(
            self.core.params(),
            self.core
                .iter()
                .copied()
                .chain(self.pairs.iter().flat_map(|&(p, q)| [p, q])),
        )
        .expect("members share params")
    }

    /// Iterates over all `2^ell` full tails (one member chosen from each
    /// pair). Guarded against blowup for `ell > 20`.
    pub fn full_tails(&self) -> Result<FullTails<'_>> {
        if self.ell() > 20 {
            return Err(Error::Resource(format!(
                "2^{} full tails is too many to enumerate",
                self.ell()
            )));
        }
        Ok(FullTails {
            partition: self,
            next: 0,
            total: 1u64 << self.ell(),
        })
    }

    /// The full tail avoiding `x`: from each pair, the member not containing
    /// `x` (at most one can, since the pair is disjoint). When neither does,
    /// the storage-smaller member is chosen.
    pub fn tail_avoiding(&self, x: u32) -> SetFamily {
        SetFamily::new(
            self.core.params(),
            self.pairs.iter().map(|&(p, q)| if p.contains(x) { q } else { p }),
        )
        .expect("members share params")
    }
}

/// Lazy iterator over full tails; bit `i` of the counter selects the larger
/// member of pair `i`.
pub struct FullTails<'a> {
    partition: &'a CanonicalPartition,
    next: u64,
    total: u64,
}

impl Iterator for FullTails<'_> {
    type Item = SetFamily;

    fn next(&mut self) -> Option<SetFamily> {
        if self.next >= self.total {
            return None;
        }
        let choice = self.next;
        self.next += 1;
        let tail = SetFamily::new(
            self.partition.core.params(),
            self.partition
                .pairs
                .iter()
                .enumerate()
                .map(|(i, &(p, q))| if choice >> i & 1 == 0 { p } else { q }),
        )
        .expect("members share params");
        debug_assert!(
            self.partition
                .core
                .union(&tail)
                .expect("same params")
                .is_intersecting(),
            "core plus full tail must be intersecting"
        );
        Some(tail)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}
