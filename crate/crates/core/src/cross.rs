//! Shadows, cross-intersecting predicates, lex compression feasibility, and
//! the maximum cross-intersecting partner of a family.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{all_k_subsets, binom_u64, lex_family, Interval};
use crate::family::{Params, SetFamily};
use crate::{Error, Result};

/// Two families of (possibly different) uniformities over a common ground
/// interval, candidates for the cross-intersecting property.
#[derive(Clone, Debug)]
pub struct CrossPair {
    fam_a: SetFamily,
    fam_b: SetFamily,
    ground: Interval,
}

impl CrossPair {
    /// Requires both families to live inside `ground` and
    /// `a + b <= |ground|`.
    pub fn new(fam_a: SetFamily, fam_b: SetFamily, ground: Interval) -> Result<Self> {
        for f in [&fam_a, &fam_b] {
            if f.iter().any(|s| s.bits() & !ground.mask() != 0) {
                return Err(Error::Param(format!(
                    "family member outside ground interval [{}, {}]",
                    ground.lo(),
                    ground.hi()
                )));
            }
        }
        let (a, b) = (fam_a.params().k(), fam_b.params().k());
        if a + b > ground.len() {
            return Err(Error::Param(format!(
                "uniformities {a} + {b} exceed |ground| = {}",
                ground.len()
            )));
        }
        Ok(CrossPair { fam_a, fam_b, ground })
    }

    pub fn fam_a(&self) -> &SetFamily {
        &self.fam_a
    }

    pub fn fam_b(&self) -> &SetFamily {
        &self.fam_b
    }

    pub fn ground(&self) -> Interval {
        self.ground
    }

    pub fn is_cross_intersecting(&self) -> bool {
        cross_intersecting(&self.fam_a, &self.fam_b)
    }
}

/// All-pairs check that every member of `a` meets every member of `b`,
/// short-circuiting on the first disjoint pair.
pub fn cross_intersecting(a: &SetFamily, b: &SetFamily) -> bool {
    a.iter()
        .all(|x| b.iter().all(|y| x.bits() & y.bits() != 0))
}

/// The b-shadow: all b-subsets contained in at least one member.
pub fn shadow(f: &SetFamily, b: u32) -> Result<SetFamily> {
    let k = f.params().k();
    if b == 0 || b > k {
        return Err(Error::Param(format!(
            "shadow size must satisfy 1 <= b <= k = {k}, got {b}"
        )));
    }
    let params = Params::new(f.params().n(), b)?;
    let mut masks: BTreeSet<u64> = BTreeSet::new();
    for m in f.iter() {
        // Enumerate b-subsets of the member's own k elements.
        let positions: Vec<u32> = m.elements().iter().map(|e| e - 1).collect();
        for sub in all_k_subsets(Interval::new(1, k)?, b) {
            let mut mask = 0u64;
            let mut rest = sub;
            while rest != 0 {
                let j = rest.trailing_zeros();
                rest &= rest - 1;
                mask |= 1u64 << positions[j as usize];
            }
            masks.insert(mask);
        }
    }
    SetFamily::from_masks(params, masks)
}

/// Feasibility of cross-intersecting families of the given sizes: builds the
/// two lexicographic initial segments `L(size_a, ground, a)` and
/// `L(size_b, ground, b)` and tests whether they are cross-intersecting.
/// Sizes of zero are trivially feasible.
pub fn lex_compress_check(
    size_a: u64,
    size_b: u64,
    ground: Interval,
    a: u32,
    b: u32,
) -> Result<bool> {
    if a + b > ground.len() {
        return Err(Error::Param(format!(
            "uniformities {a} + {b} exceed |ground| = {}",
            ground.len()
        )));
    }
    for (size, unif) in [(size_a, a), (size_b, b)] {
        if size > binom_u64(ground.len() as u64, unif as u64) {
            return Err(Error::Param(format!(
                "{size} exceeds the number of {unif}-subsets of the ground interval"
            )));
        }
    }
    if size_a == 0 || size_b == 0 {
        return Ok(true);
    }
    let la = lex_family(size_a, ground, a)?;
    let lb = lex_family(size_b, ground, b)?;
    Ok(cross_intersecting(&la, &lb))
}

/// The unique maximum cross-intersecting partner: every b-subset of `ground`
/// that meets all members of `f`. An empty `f` yields all b-subsets.
pub fn max_cross_partner(f: &SetFamily, b: u32, ground: Interval) -> Result<SetFamily> {
    if b == 0 || b > ground.len() {
        return Err(Error::Param(format!(
            "partner uniformity must satisfy 1 <= b <= |ground| = {}, got {b}",
            ground.len()
        )));
    }
    let params = Params::new(ground.hi(), b)?;
    let masks = all_k_subsets(ground, b)
        .into_iter()
        .filter(|&m| f.iter().all(|s| s.bits() & m != 0));
    SetFamily::from_masks(params, masks)
}

/// Configuration for the seeded random lex-compression trials.
#[derive(Clone, Copy, Debug)]
pub struct TrialConfig {
    pub ground: Interval,
    pub a: u32,
    pub b: u32,
    pub trials: u64,
    pub seed: u64,
}

/// Outcome of a trial batch: how many random cross-intersecting pairs kept
/// the property after lex compression, and the indices of any that did not.
#[derive(Clone, Debug, Default)]
pub struct TrialReport {
    pub trials: u64,
    pub preserved: u64,
    pub failures: Vec<u64>,
}

fn run_one_trial(cfg: &TrialConfig, index: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(
        cfg.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15),
    );
    // Sample A by rejection-free construction: random size, random subsets.
    let universe_a = all_k_subsets(cfg.ground, cfg.a);
    let size_a = rng.random_range(1..=universe_a.len());
    let mut pool = universe_a;
    pool.shuffle(&mut rng);
    pool.truncate(size_a);
    let params_a = Params::new(cfg.ground.hi(), cfg.a)?;
    let fam_a = SetFamily::from_masks(params_a, pool)?;

    // The maximum partner makes the pair cross-intersecting by construction.
    let partner = max_cross_partner(&fam_a, cfg.b, cfg.ground)?;
    if partner.is_empty() {
        return lex_compress_check(fam_a.len() as u64, 0, cfg.ground, cfg.a, cfg.b);
    }
    let size_b = rng.random_range(1..=partner.len());
    let mut masks: Vec<u64> = partner.iter().map(|s| s.bits()).collect();
    masks.shuffle(&mut rng);
    masks.truncate(size_b);
    let fam_b = SetFamily::from_masks(partner.params(), masks)?;
    debug_assert!(cross_intersecting(&fam_a, &fam_b));

    lex_compress_check(
        fam_a.len() as u64,
        fam_b.len() as u64,
        cfg.ground,
        cfg.a,
        cfg.b,
    )
}

/// Runs `cfg.trials` seeded random compression trials, distributing them
/// over `workers` threads. Each trial is seeded by its index, so the report
/// does not depend on scheduling.
pub fn run_lex_compression_trials(cfg: &TrialConfig, workers: usize) -> Result<TrialReport> {
    if cfg.a + cfg.b > cfg.ground.len() {
        return Err(Error::Param(format!(
            "uniformities {} + {} exceed |ground| = {}",
            cfg.a,
            cfg.b,
            cfg.ground.len()
        )));
    }
    let workers = workers.max(1);
    let results: Vec<Result<bool>> = if workers == 1 {
        (0..cfg.trials).map(|t| run_one_trial(cfg, t)).collect()
    } else {
        let mut results: Vec<Option<Result<bool>>> = Vec::new();
        results.resize_with(cfg.trials as usize, || None);
        let next = std::sync::atomic::AtomicU64::new(0);
        let slots = std::sync::Mutex::new(&mut results);
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let t = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if t >= cfg.trials {
                        break;
                    }
                    let outcome = run_one_trial(cfg, t);
                    slots.lock().expect("no poisoned trials")[t as usize] = Some(outcome);
                });
            }
        });
        results.into_iter().map(|r| r.expect("all trials ran")).collect()
    };

    let mut report = TrialReport {
        trials: cfg.trials,
        ..TrialReport::default()
    };
    for (t, r) in results.into_iter().enumerate() {
        if r? {
            report.preserved += 1;
        } else {
            report.failures.push(t as u64);
        }
    }
    Ok(report)
}
