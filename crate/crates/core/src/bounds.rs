//! Exact big-integer binomial arithmetic, the closed-form size/degree/bound
//! formulas for the named families, the set-pair (Bollobás) inequality check,
//! and grid checkers for the supporting binomial inequalities.
//!
//! Everything here is exact: ratio comparisons are done by integer
//! cross-multiplication and square-root hypotheses by squaring, never with
//! floating point.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::Zero;

use crate::partition::CanonicalPartition;
use crate::{Error, Result};

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;

/// Exact `C(n, k)`, with `C(n, k) = 0` whenever `k < 0`, `n < 0`, or
/// `k > n`. Multiplicative formula; each intermediate division is exact.
pub fn binom(n: i64, k: i64) -> BigCount {
    if k < 0 || n < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigCount::from(1u32);
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// The intersecting-family bound `C(n - 1, k - 1)`, valid for `n >= 2k`.
pub fn ekr_bound(n: i64, k: i64) -> Result<BigCount> {
    if n < 2 * k {
        return Err(Error::Domain(format!("need n >= 2k, got n={n}, k={k}")));
    }
    Ok(binom(n - 1, k - 1))
}

fn check_r(k: i64, r: i64) -> Result<()> {
    if !(3 <= r && r <= k + 1) {
        return Err(Error::Param(format!("need 3 <= r <= k + 1, got r={r}, k={k}")));
    }
    Ok(())
}

/// `|B_r| = C(n-1, k-1) - C(n-r, k-1) + C(n-r, k-r+1)`.
pub fn size_b_r(n: i64, k: i64, r: i64) -> Result<BigCount> {
    check_r(k, r)?;
    Ok(binom(n - 1, k - 1) - binom(n - r, k - 1) + binom(n - r, k - r + 1))
}

/// `Δ(B_r) = C(n-1, k-1) - C(n-r, k-1)`, attained at element 1.
pub fn delta_b_r(n: i64, k: i64, r: i64) -> Result<BigCount> {
    check_r(k, r)?;
    Ok(binom(n - 1, k - 1) - binom(n - r, k - 1))
}

/// `|B+| = C(n-1, k-1) - C(n-k-1, k-1) + 2`, valid for `n >= k + 2`.
pub fn size_b_plus(n: i64, k: i64) -> Result<BigCount> {
    if n < k + 2 {
        return Err(Error::Domain(format!("need n >= k + 2, got n={n}, k={k}")));
    }
    Ok(binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 2u32)
}

/// Upper bound `C(2k - 1, k - 1)` on the number of disjoint pairs of any
/// almost intersecting k-uniform family.
pub fn ell_upper_bound(k: i64) -> BigCount {
    binom(2 * k - 1, k - 1)
}

/// A system of set pairs `(A_i, B_i)` over `[n]` with `|A_i| = a`,
/// `|B_i| = b`, and `A_i` disjoint from `B_i`.
#[derive(Clone, Debug)]
pub struct SetPairSystem {
    n: u32,
    a: u32,
    b: u32,
    pairs: Vec<(u64, u64)>,
}

impl SetPairSystem {
    pub fn new(n: u32, a: u32, b: u32, pairs: Vec<(u64, u64)>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Param(format!("need 1 <= n <= 64, got {n}")));
        }
        let universe = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (i, &(x, y)) in pairs.iter().enumerate() {
            if x & !universe != 0 || y & !universe != 0 {
                return Err(Error::Param(format!("pair {i} leaves the ground set [{n}]")));
            }
            if x.count_ones() != a || y.count_ones() != b {
                return Err(Error::Param(format!(
                    "pair {i} has sizes ({}, {}), expected ({a}, {b})",
                    x.count_ones(),
                    y.count_ones()
                )));
            }
            if x & y != 0 {
                return Err(Error::Param(format!("pair {i} is not disjoint")));
            }
        }
        Ok(SetPairSystem { n, a, b, pairs })
    }

    /// The doubled system of a canonical partition: each disjoint couple
    /// `(P_i, Q_i)` contributes both `(P_i, Q_i)` and `(Q_i, P_i)`.
    pub fn doubled_from_partition(p: &CanonicalPartition) -> Self {
        let params = p.core().params();
        let k = params.k();
        let mut pairs = Vec::with_capacity(2 * p.ell());
        for &(x, y) in p.pairs() {
            pairs.push((x.bits(), y.bits()));
        }
        for &(x, y) in p.pairs() {
            pairs.push((y.bits(), x.bits()));
        }
        SetPairSystem {
            n: params.n(),
            a: k,
            b: k,
            pairs,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Result of [`bollobas_check`]: whether the skew cross-intersection
/// hypothesis holds, the system size `m`, the bound `C(a + b, a)`, and the
/// comparison. The bound is a theorem instance only when the hypothesis
/// holds.
#[derive(Clone, Debug)]
pub struct BollobasVerdict {
    pub hypothesis_holds: bool,
    pub m: usize,
    pub bound: BigCount,
    pub within_bound: bool,
}

/// Verifies `A_i ∩ B_j != ∅` for all `i != j`, then compares
/// `m <= C(a + b, a)`.
pub fn bollobas_check(s: &SetPairSystem) -> BollobasVerdict {
    let mut hypothesis_holds = true;
    'outer: for (i, &(x, _)) in s.pairs.iter().enumerate() {
        for (j, &(_, y)) in s.pairs.iter().enumerate() {
            if i != j && x & y == 0 {
                hypothesis_holds = false;
                break 'outer;
            }
        }
    }
    let m = s.pairs.len();
    let bound = binom((s.a + s.b) as i64, s.a as i64);
    let within_bound = BigCount::from(m) <= bound;
    BollobasVerdict {
        hypothesis_holds,
        m,
        bound,
        within_bound,
    }
}

/// The lex cross-intersection threshold pair: if a (k-1)-uniform family on
/// `[2, n]` has at least `C(n-1, k-1) - C(n-r, k-1)` members (the
/// threshold), any k-uniform cross-intersecting partner has at most
/// `C(n-r, k-r+1)` members (the cap). Valid for `n > 2k`, `k >= r >= 3`.
pub fn cor25_bound(n: i64, k: i64, r: i64) -> Result<(BigCount, BigCount)> {
    if !(n > 2 * k && k >= r && r >= 3) {
        return Err(Error::Domain(format!(
            "need n > 2k and k >= r >= 3, got n={n}, k={k}, r={r}"
        )));
    }
    Ok((
        binom(n - 1, k - 1) - binom(n - r, k - 1),
        binom(n - r, k - r + 1),
    ))
}

/// If the k-uniform side of a cross-intersecting pair on `[2, n]` has at
/// least k members, the (k-1)-uniform side has at most
/// `C(n-1, k-1) - C(n-k, k-1)` members. Valid for `n > 2k > 2`.
pub fn cor26_bound(n: i64, k: i64) -> Result<BigCount> {
    if !(n > 2 * k && k > 1) {
        return Err(Error::Domain(format!(
            "need n > 2k > 2, got n={n}, k={k}"
        )));
    }
    Ok(binom(n - 1, k - 1) - binom(n - k, k - 1))
}

/// Which supporting inequality a grid checker targets. The display names
/// double as the CLI identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    L31,
    L32,
    L33,
    L35,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaId::L31 => "3.1",
            LemmaId::L32 => "3.2",
            LemmaId::L33 => "3.3",
            LemmaId::L35 => "3.5",
        })
    }
}

impl std::str::FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3.1" => Ok(LemmaId::L31),
            "3.2" => Ok(LemmaId::L32),
            "3.3" => Ok(LemmaId::L33),
            "3.5" => Ok(LemmaId::L35),
            _ => Err(Error::Param(format!(
                "unknown lemma id {s:?}, expected 3.1, 3.2, 3.3 or 3.5"
            ))),
        }
    }
}

/// One grid point of a lemma check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GridPoint {
    pub k: i64,
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub s: Option<i64>,
    pub r: Option<i64>,
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}", self.k)?;
        for (name, v) in [("n", self.n), ("m", self.m), ("s", self.s), ("r", self.r)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaOutcome {
    Pass,
    Fail,
    /// The point violates the inequality's stated hypotheses; evaluated
    /// nowhere, reported rather than failed.
    OutOfDomain,
}

/// Verdict for one inequality instance at one grid point.
#[derive(Clone, Debug)]
pub struct LemmaVerdict {
    pub lemma: LemmaId,
    /// Which displayed inequality of the lemma ("3.1", "3.2", "3.3", "3.4",
    /// "3.5", "3.7").
    pub inequality: &'static str,
    pub point: GridPoint,
    pub outcome: LemmaOutcome,
}

fn verdict(
    lemma: LemmaId,
    inequality: &'static str,
    point: GridPoint,
    outcome: LemmaOutcome,
) -> LemmaVerdict {
    LemmaVerdict {
        lemma,
        inequality,
        point,
        outcome,
    }
}

/// Smallest integer `t >= 0` with `t * t >= x`.
fn ceil_sqrt(x: i64) -> i64 {
    if x <= 0 {
        return 0;
    }
    let s = x.isqrt();
    if s * s < x {
        s + 1
    } else {
        s
    }
}

/// Grid check of `C(2k, k-2) >= C(2k-1, k-1)` (hypothesis `k >= 6`) and
/// `C(2k+1, k-2) >= C(2k-1, k-1)` (hypothesis `k >= 4`).
pub fn check_lemma_3_1(ks: RangeInclusive<i64>) -> Vec<LemmaVerdict> {
    let mut out = Vec::new();
    for k in ks {
        let point = GridPoint { k, ..GridPoint::default() };
        let rhs = binom(2 * k - 1, k - 1);
        let o1 = if k < 6 {
            LemmaOutcome::OutOfDomain
        } else if binom(2 * k, k - 2) >= rhs {
            LemmaOutcome::Pass
        } else {
            LemmaOutcome::Fail
        };
        out.push(verdict(LemmaId::L31, "3.1", point, o1));
        let o2 = if k < 4 {
            LemmaOutcome::OutOfDomain
        } else if binom(2 * k + 1, k - 2) >= rhs {
            LemmaOutcome::Pass
        } else {
            LemmaOutcome::Fail
        };
        out.push(verdict(LemmaId::L31, "3.2", point, o2));
    }
    out
}

/// Grid check, for `k >= 10` and `2k - 4 <= m <= 3k + 2`, of the ratio
/// bounds `2 >= C(m, k-2) / C(m-1, k-2) >= 4/3` (by cross-multiplication)
/// and, for every `s` with `m - s >= 2k - 4`, of
/// `sum_{i=0..s} C(m-i, k-2) >= (2 - 2^-s) C(m, k-2)`.
pub fn check_lemma_3_2(ks: RangeInclusive<i64>) -> Vec<LemmaVerdict> {
    let mut out = Vec::new();
    for k in ks {
        if k < 10 {
            out.push(verdict(
                LemmaId::L32,
                "3.3",
                GridPoint { k, ..GridPoint::default() },
                LemmaOutcome::OutOfDomain,
            ));
            continue;
        }
        for m in (2 * k - 4)..=(3 * k + 2) {
            let point = GridPoint { k, m: Some(m), ..GridPoint::default() };
            let cur = binom(m, k - 2);
            let prev = binom(m - 1, k - 2);
            let ratio_ok =
                BigCount::from(2u32) * &prev >= cur && BigCount::from(3u32) * &cur >= BigCount::from(4u32) * &prev;
            out.push(verdict(
                LemmaId::L32,
                "3.3",
                point,
                if ratio_ok { LemmaOutcome::Pass } else { LemmaOutcome::Fail },
            ));
            // Running sum over i <= s; compare 2^s * sum >= (2^(s+1) - 1) * C(m, k-2).
            let mut sum = BigCount::zero();
            for s in 0..=(m - (2 * k - 4)) {
                sum += binom(m - s, k - 2);
                let lhs = &sum << s as u64;
                let rhs = ((BigCount::from(1u32) << (s + 1) as u64) - 1u32) * &cur;
                let point = GridPoint { k, m: Some(m), s: Some(s), ..GridPoint::default() };
                out.push(verdict(
                    LemmaId::L32,
                    "3.4",
                    point,
                    if lhs >= rhs { LemmaOutcome::Pass } else { LemmaOutcome::Fail },
                ));
            }
        }
    }
    out
}

/// Boundary ground-set size for the strict shadow inequality: the smallest
/// `n` with `n - 2k - 4 >= 2 * sqrt(k)`, resolved exactly by squaring.
pub fn lemma_3_3_boundary_n(k: i64) -> i64 {
    2 * k + 4 + ceil_sqrt(4 * k)
}

/// Grid check, for `k >= 9` at the boundary `n` and every
/// `sqrt(k) + 5 <= r <= k`, of the strict inequality
/// `C(n-r+1, k-r+2) < C(n-r-1, k-2)`.
pub fn check_lemma_3_3(ks: RangeInclusive<i64>) -> Vec<LemmaVerdict> {
    let mut out = Vec::new();
    for k in ks {
        if k < 9 {
            out.push(verdict(
                LemmaId::L33,
                "3.5",
                GridPoint { k, ..GridPoint::default() },
                LemmaOutcome::OutOfDomain,
            ));
            continue;
        }
        let n = lemma_3_3_boundary_n(k);
        let r_min = 5 + ceil_sqrt(k);
        for r in r_min..=k {
            let point = GridPoint { k, n: Some(n), r: Some(r), ..GridPoint::default() };
            let strict = binom(n - r + 1, k - r + 2) < binom(n - r - 1, k - 2);
            out.push(verdict(
                LemmaId::L33,
                "3.5",
                point,
                if strict { LemmaOutcome::Pass } else { LemmaOutcome::Fail },
            ));
        }
    }
    out
}

/// Grid check, for `k >= 4` and `3k + 3 <= n <= 3k + 3 + n_extra`, of
/// `C(n-4, k-3) + C(2k-1, k-1) <= C(n-5, k-2) + C(n-5, k-4)`.
pub fn check_lemma_3_5(ks: RangeInclusive<i64>, n_extra: i64) -> Vec<LemmaVerdict> {
    let mut out = Vec::new();
    for k in ks {
        if k < 4 {
            out.push(verdict(
                LemmaId::L35,
                "3.7",
                GridPoint { k, ..GridPoint::default() },
                LemmaOutcome::OutOfDomain,
            ));
            continue;
        }
        let tail = binom(2 * k - 1, k - 1);
        for n in (3 * k + 3)..=(3 * k + 3 + n_extra) {
            let point = GridPoint { k, n: Some(n), ..GridPoint::default() };
            let lhs = binom(n - 4, k - 3) + &tail;
            let rhs = binom(n - 5, k - 2) + binom(n - 5, k - 4);
            out.push(verdict(
                LemmaId::L35,
                "3.7",
                point,
                if lhs <= rhs { LemmaOutcome::Pass } else { LemmaOutcome::Fail },
            ));
        }
    }
    out
}

/// Dispatcher over the four lemma checkers, `k` from 1 up to `kmax` (points
/// outside a lemma's hypotheses report as out-of-domain). Lemma 3.5 spans
/// `n` up to `3k + 50`.
pub fn check_lemma(id: LemmaId, kmax: i64) -> Vec<LemmaVerdict> {
    match id {
        LemmaId::L31 => check_lemma_3_1(1..=kmax),
        LemmaId::L32 => check_lemma_3_2(1..=kmax),
        LemmaId::L33 => check_lemma_3_3(1..=kmax),
        LemmaId::L35 => check_lemma_3_5(1..=kmax, 47),
    }
}

/// Which case of the main bound's stated ranges `(n, k)` falls in:
/// (i) `k = 3, n >= 13`; (ii) `k >= 4, n >= 3k + 3`;
/// (iii) `k >= 10, n > 2k + 2*sqrt(k) + 4`. Lowest-numbered case wins; the
/// square root is compared exactly via `(n - 2k - 4)^2 > 4k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremCase {
    I,
    II,
    III,
    Outside,
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremCase::I => "i",
            TheoremCase::II => "ii",
            TheoremCase::III => "iii",
            TheoremCase::Outside => "outside",
        })
    }
}

pub fn theorem_case(n: i64, k: i64) -> TheoremCase {
    if k == 3 && n >= 13 {
        return TheoremCase::I;
    }
    if k >= 4 && n >= 3 * k + 3 {
        return TheoremCase::II;
    }
    let d = n - 2 * k - 4;
    if k >= 10 && d > 0 && d * d > 4 * k {
        return TheoremCase::III;
    }
    TheoremCase::Outside
}

/// The degree regime parameter: the smallest `r` in `4..=k` with
/// `delta <= Δ(B_r)(n, k)`, if any. Diagnostic only.
pub fn degree_regime_r(delta: &BigCount, n: i64, k: i64) -> Option<i64> {
    (4..=k).find(|&r| delta <= &delta_b_r(n, k, r).expect("r in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{all_k_subsets, Interval};
    use crate::family::{Params, SetFamily};
    use crate::partition::canonical_partition;

    #[test]
    fn binom_values() {
        assert_eq!(binom(4, 2), BigCount::from(6u32));
        assert_eq!(binom(12, 4), BigCount::from(495u32));
        assert_eq!(binom(5, 7), BigCount::zero());
        assert_eq!(binom(5, -1), BigCount::zero());
        assert_eq!(binom(0, 0), BigCount::from(1u32));
        // A value far beyond machine words.
        let big = binom(286, 32);
        assert!(big > BigCount::from(u128::MAX));
    }

    #[test]
    fn binom_pascal_grid() {
        for n in 1..=80i64 {
            for k in 0..=n {
                assert_eq!(
                    binom(n, k),
                    binom(n - 1, k - 1) + binom(n - 1, k),
                    "Pascal at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn ekr_bound_values() {
        assert_eq!(ekr_bound(6, 3).unwrap(), BigCount::from(10u32));
        assert_eq!(ekr_bound(13, 3).unwrap(), BigCount::from(66u32));
        for k in 1..=8i64 {
            assert_eq!(ekr_bound(2 * k, k).unwrap(), binom(2 * k - 1, k - 1));
        }
        assert!(ekr_bound(5, 3).is_err());
    }

    #[test]
    fn b_r_formula_values() {
        assert_eq!(size_b_r(10, 4, 3).unwrap(), BigCount::from(70u32));
        assert_eq!(size_b_r(10, 4, 4).unwrap(), BigCount::from(70u32));
        assert_eq!(
            delta_b_r(11, 5, 6).unwrap(),
            binom(10, 4) - binom(5, 4)
        );
        assert!(size_b_r(10, 4, 2).is_err());
        assert!(delta_b_r(10, 4, 6).is_err());

        // Strictly increasing size chain for r = 4..k+1 at (11, 5).
        let sizes: Vec<BigCount> = (4..=6)
            .map(|r| size_b_r(11, 5, r).unwrap())
            .collect();
        assert!(sizes.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(size_b_r(11, 5, 3).unwrap(), size_b_r(11, 5, 4).unwrap());
    }

    #[test]
    fn delta_telescoping_identity() {
        // Δ(B_r) also equals C(n-2,k-2) + ... + C(n-r,k-2).
        for k in 3..=6i64 {
            for n in (2 * k + 1)..=14 {
                for r in 3..=(k + 1) {
                    let direct = delta_b_r(n, k, r).unwrap();
                    let mut sum = BigCount::zero();
                    for j in 2..=r {
                        sum += binom(n - j, k - 2);
                    }
                    assert_eq!(direct, sum, "telescoping at ({n},{k},{r})");
                }
            }
        }
    }

    #[test]
    fn b_plus_formula_values() {
        assert_eq!(size_b_plus(13, 3).unwrap(), BigCount::from(32u32));
        for n in 13..=30i64 {
            assert_eq!(
                size_b_plus(n, 3).unwrap(),
                BigCount::from((3 * n - 7) as u64),
                "3n - 7 identity at n={n}"
            );
        }
        assert!(size_b_plus(4, 3).is_err());
    }

    #[test]
    fn ell_upper_bound_values() {
        assert_eq!(ell_upper_bound(1), BigCount::from(1u32));
        assert_eq!(ell_upper_bound(2), BigCount::from(3u32));
        assert_eq!(ell_upper_bound(4), BigCount::from(35u32));
    }

    #[test]
    fn bollobas_tiny_and_violating() {
        let s = SetPairSystem::new(2, 1, 1, vec![(0b01, 0b10), (0b10, 0b01)]).unwrap();
        let v = bollobas_check(&s);
        assert!(v.hypothesis_holds);
        assert_eq!(v.m, 2);
        assert_eq!(v.bound, BigCount::from(2u32));
        assert!(v.within_bound);

        // A_1 disjoint from B_2: hypothesis violated.
        let bad = SetPairSystem::new(4, 1, 1, vec![(0b0001, 0b0010), (0b0100, 0b1000)]).unwrap();
        assert!(!bollobas_check(&bad).hypothesis_holds);

        // Malformed systems are rejected at construction.
        assert!(SetPairSystem::new(4, 1, 2, vec![(0b0001, 0b0001)]).is_err());
        assert!(SetPairSystem::new(4, 1, 1, vec![(0b0011, 0b0100)]).is_err());
    }

    #[test]
    fn bollobas_doubled_partition() {
        let p = Params::new(4, 2).unwrap();
        let f = SetFamily::from_masks(p, all_k_subsets(Interval::new(1, 4).unwrap(), 2)).unwrap();
        let part = canonical_partition(&f).unwrap();
        let sys = SetPairSystem::doubled_from_partition(&part);
        let v = bollobas_check(&sys);
        assert!(v.hypothesis_holds);
        assert_eq!(v.m, 6);
        assert_eq!(v.bound, BigCount::from(6u32));
        assert!(v.within_bound);
    }

    #[test]
    fn cor_bound_values() {
        let (threshold, cap) = cor25_bound(10, 4, 3).unwrap();
        assert_eq!(threshold, BigCount::from(49u32));
        assert_eq!(cap, BigCount::from(21u32));
        // r = k: the cap degenerates to n - k.
        let (_, cap) = cor25_bound(11, 4, 4).unwrap();
        assert_eq!(cap, BigCount::from(7u32));
        assert!(cor25_bound(8, 4, 3).is_err());

        assert_eq!(cor26_bound(9, 4).unwrap(), BigCount::from(46u32));
        for k in 2..=6i64 {
            assert_eq!(
                cor26_bound(2 * k + 1, k).unwrap(),
                binom(2 * k, k - 1) - binom(k + 1, k - 1)
            );
        }
        assert!(cor26_bound(8, 4).is_err());
    }

    #[test]
    fn lemma_3_1_spot_values() {
        let verdicts = check_lemma_3_1(5..=6);
        // k = 6: C(12,4) = 495 >= C(11,5) = 462.
        assert_eq!(binom(12, 4), BigCount::from(495u32));
        assert_eq!(binom(11, 5), BigCount::from(462u32));
        let at = |k: i64, ineq: &str| {
            verdicts
                .iter()
                .find(|v| v.point.k == k && v.inequality == ineq)
                .unwrap()
                .outcome
        };
        assert_eq!(at(6, "3.1"), LemmaOutcome::Pass);
        // k = 5 violates the first inequality but is outside its hypothesis.
        assert!(binom(10, 3) < binom(9, 4));
        assert_eq!(at(5, "3.1"), LemmaOutcome::OutOfDomain);
        assert_eq!(at(5, "3.2"), LemmaOutcome::Pass);
    }

    #[test]
    fn lemma_3_3_boundary_spot() {
        assert_eq!(lemma_3_3_boundary_n(9), 28);
        assert_eq!(lemma_3_3_boundary_n(10), 31);
        let verdicts = check_lemma_3_3(9..=9);
        let v = verdicts
            .iter()
            .find(|v| v.point.r == Some(8))
            .expect("r = 8 on the grid at k = 9");
        assert_eq!(v.point.n, Some(28));
        assert_eq!(v.outcome, LemmaOutcome::Pass);
        assert!(binom(21, 3) < binom(19, 7));
    }

    #[test]
    fn lemma_3_5_equality_point() {
        // k = 4, n = 15 is an equality point of the non-strict inequality.
        let lhs = binom(11, 1) + binom(7, 3);
        let rhs = binom(10, 2) + binom(10, 0);
        assert_eq!(lhs, rhs);
        let verdicts = check_lemma_3_5(4..=4, 0);
        assert!(verdicts.iter().all(|v| v.outcome == LemmaOutcome::Pass));
    }

    #[test]
    fn theorem_case_values() {
        assert_eq!(theorem_case(13, 3), TheoremCase::I);
        assert_eq!(theorem_case(12, 3), TheoremCase::Outside);
        assert_eq!(theorem_case(15, 4), TheoremCase::II);
        assert_eq!(theorem_case(40, 10), TheoremCase::II);
        assert_eq!(theorem_case(31, 10), TheoremCase::III);
        assert_eq!(theorem_case(30, 10), TheoremCase::Outside);
        assert_eq!(theorem_case(9, 2), TheoremCase::Outside);
    }

    #[test]
    fn degree_regime_values() {
        // Δ(B_4)(13, 4) sits exactly at r = 4.
        let d = delta_b_r(13, 4, 4).unwrap();
        assert_eq!(degree_regime_r(&d, 13, 4), Some(4));
        let above = delta_b_r(13, 4, 4).unwrap() + 1u32;
        assert_eq!(degree_regime_r(&above, 13, 4), None);
        let tiny = BigCount::zero();
        assert_eq!(degree_regime_r(&tiny, 13, 4), Some(4));
    }
}
