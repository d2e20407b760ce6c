//! Exact maximum almost intersecting family computation, formulated as a
//! maximum induced subgraph of the Kneser disjointness graph with maximum
//! degree one containing at least one edge.
//!
//! The branch and bound commits a canonical disjoint pair up front (symmetry
//! mode: any almost intersecting family maps onto one containing
//! `([1,k], [k+1,2k])` by relabeling), propagates dead candidates — anything
//! that would hand some member a second disjoint partner — and prunes by an
//! upper bound that caps each unmatched member at one future partner. For
//! `k = 3` the candidate-exclusion rules of [`rules`] are layered on top.
//!
//! Parallel runs split top-level subtrees across workers and share only the
//! monotone incumbent size; the optimum and the witness set are independent
//! of worker count and scheduling.

pub mod oracle;
pub mod rules;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::constructions::{all_k_subsets, binom_u64, Interval};
use crate::family::{family_isomorphic, Params, SetFamily};
use crate::{Error, Result};

pub use oracle::{local_maximality_check, oracle_max};
pub use rules::{d_sets, lemma_4_1_holds, lemma_4_2_holds, lemma_4_3_holds};

const MAX_UNIVERSE: u64 = 10_000;

/// A maximum almost intersecting family instance with its search options and
/// budget.
#[derive(Clone, Debug)]
pub struct SearchProblem {
    params: Params,
    symmetry: bool,
    k3_rules: bool,
    budget_nodes: u64,
    budget_time: Option<Duration>,
    workers: usize,
}

impl SearchProblem {
    /// Requires a universe of at most 10^4 candidate sets. Defaults:
    /// symmetry on, k=3 rules on, 10^9 node budget, one hour wall clock,
    /// one worker.
    pub fn new(params: Params) -> Result<Self> {
        let universe = binom_u64(params.n() as u64, params.k() as u64);
        if universe > MAX_UNIVERSE {
            return Err(Error::Resource(format!(
                "universe C({}, {}) = {universe} exceeds {MAX_UNIVERSE} vertices",
                params.n(),
                params.k()
            )));
        }
        Ok(SearchProblem {
            params,
            symmetry: true,
            k3_rules: true,
            budget_nodes: 1_000_000_000,
            budget_time: Some(Duration::from_secs(3600)),
            workers: 1,
        })
    }

    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }

    pub fn with_k3_rules(mut self, on: bool) -> Self {
        self.k3_rules = on;
        self
    }

    pub fn with_budget_nodes(mut self, nodes: u64) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::Param("node budget must be positive".into()));
        }
        self.budget_nodes = nodes;
        Ok(self)
    }

    pub fn with_budget_time(mut self, limit: Option<Duration>) -> Result<Self> {
        if limit == Some(Duration::ZERO) {
            return Err(Error::Param("time budget must be positive".into()));
        }
        self.budget_time = limit;
        Ok(self)
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn params(&self) -> Params {
        self.params
    }
}

/// Nodes expanded and candidates removed, per cause.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Subtrees cut because the optimistic bound fell below the incumbent.
    pub bound_prunes: u64,
    /// Candidates removed because they would give some member a second
    /// disjoint partner.
    pub dead_candidates: u64,
    /// k=3 rule exclusions: matched-pair completion constraints.
    pub rule_one_element: u64,
    /// k=3 rule exclusions: candidates avoiding a high-multiplicity pair.
    pub rule_meets_pair: u64,
    /// k=3 rule exclusions: sets inside the committed union avoiding a
    /// multiplicity-two pair.
    pub rule_inside_excluded: u64,
}

impl SearchStats {
    fn add(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.bound_prunes += other.bound_prunes;
        self.dead_candidates += other.dead_candidates;
        self.rule_one_element += other.rule_one_element;
        self.rule_meets_pair += other.rule_meets_pair;
        self.rule_inside_excluded += other.rule_inside_excluded;
    }
}

/// Search result: the maximum size found (the true optimum when
/// `exhausted`), the extremal families up to isomorphism, and statistics.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Maximum almost intersecting family size found; the exact optimum iff
    /// `exhausted`, otherwise a valid lower bound.
    pub optimum: usize,
    /// Whether the search space was fully covered within budget.
    pub exhausted: bool,
    /// One representative per isomorphism class when at most 100 raw
    /// witnesses were found; empty (with `classified` false) beyond that.
    pub witnesses: Vec<SetFamily>,
    /// Raw count of distinct optimum-size families found.
    pub witness_count: usize,
    pub classified: bool,
    pub stats: SearchStats,
    /// The intersecting maximum for context: `C(n-1, k-1)` for `n >= 2k`,
    /// else `C(n, k)`.
    pub intersecting_max: u64,
}

/// Dense bitset over candidate indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn ones(n: usize) -> Self {
        let mut b = Bits(vec![u64::MAX; n.div_ceil(64)]);
        let spare = b.0.len() * 64 - n;
        if spare > 0 {
            let last = b.0.len() - 1;
            b.0[last] >>= spare;
        }
        b
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    /// Removes `other` from `self`, returning how many bits went away.
    fn remove(&mut self, other: &Bits) -> u64 {
        let mut gone = 0;
        for (w, o) in self.0.iter_mut().zip(&other.0) {
            gone += (*w & o).count_ones() as u64;
            *w &= !o;
        }
        gone
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Immutable per-run context shared across workers.
struct Ctx {
    masks: Vec<u64>,
    disj: Vec<Bits>,
    committed: Vec<u64>,
    k3: Option<rules::K3Engine>,
    budget_nodes: u64,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    stop: AtomicBool,
    best: AtomicUsize,
}

impl Ctx {
    fn committed_len(&self) -> usize {
        self.committed.len()
    }

    fn raise_best(&self, total: usize) {
        let mut cur = self.best.load(Ordering::Relaxed);
        while total > cur {
            match self
                .best
                .compare_exchange_weak(cur, total, Ordering::Relaxed, Ordering::Relaxed)
            {
                Ok(_) => break,
                Err(seen) => cur = seen,
            }
        }
    }

    fn tick(&self, local_nodes: &mut u64) -> bool {
        *local_nodes += 1;
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget_nodes {
            self.stop.store(true, Ordering::Relaxed);
        }
        if local_nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.stop.load(Ordering::Relaxed)
    }
}

/// Mutable search node, cloned down the include branch.
#[derive(Clone)]
struct State {
    alive: Bits,
    chosen: Vec<u32>,
    /// Disjoint-from-chosen count per candidate (only alive entries matter).
    cnt: Vec<u8>,
    /// The chosen candidate a count-one candidate is disjoint from.
    partner: Vec<u32>,
    /// Chosen candidates that already have their one disjoint partner.
    matched: Bits,
    has_edge: bool,
    dmask: [u64; 9],
}

impl State {
    fn root(ctx: &Ctx) -> Self {
        let n = ctx.masks.len();
        State {
            alive: Bits::ones(n),
            chosen: Vec::new(),
            cnt: vec![0; n],
            partner: vec![0; n],
            matched: Bits::zeros(n),
            has_edge: !ctx.committed.is_empty(),
            dmask: [0; 9],
        }
    }

    fn include(&mut self, ctx: &Ctx, c: usize, stats: &mut SearchStats) {
        debug_assert!(self.alive.get(c));
        self.alive.clear(c);
        let was_partnered = self.cnt[c] == 1;
        self.chosen.push(c as u32);
        // k=3 exclusions first so their statistics are visible; the generic
        // dead-candidate rule below removes anything they would have.
        if let Some(k3) = &ctx.k3 {
            if k3.note_inclusion(c, &mut self.dmask) {
                k3.sweep(&mut self.alive, &self.dmask, stats);
            }
        }
        if was_partnered {
            let m = self.partner[c] as usize;
            self.matched.set(m);
            self.matched.set(c);
            self.has_edge = true;
            // Both ends of the new pair are saturated: any candidate
            // disjoint from either is dead.
            stats.dead_candidates += self.alive.remove(&ctx.disj[c]);
            stats.dead_candidates += self.alive.remove(&ctx.disj[m]);
        } else {
            let mut newly_dead = Vec::new();
            for d in self.alive.iter_ones() {
                if ctx.disj[c].get(d) {
                    self.cnt[d] += 1;
                    if self.cnt[d] >= 2 {
                        newly_dead.push(d);
                    } else {
                        self.partner[d] = c as u32;
                    }
                }
            }
            for d in newly_dead {
                self.alive.clear(d);
                stats.dead_candidates += 1;
            }
        }
    }

    /// Optimistic completion size: every zero-conflict candidate may join,
    /// and each unmatched chosen member may absorb at most one of its
    /// disjoint candidates.
    fn bound(&self, ctx: &Ctx) -> usize {
        let mut zeros = 0;
        let mut partners: Vec<u32> = Vec::new();
        for d in self.alive.iter_ones() {
            if self.cnt[d] == 0 {
                zeros += 1;
            } else {
                debug_assert_eq!(self.cnt[d], 1);
                debug_assert!(!self.matched.get(self.partner[d] as usize));
                partners.push(self.partner[d]);
            }
        }
        partners.sort_unstable();
        partners.dedup();
        ctx.committed_len() + self.chosen.len() + zeros + partners.len()
    }
}

#[derive(Default)]
struct TaskResult {
    best: usize,
    /// (total size, sorted member masks including committed ones).
    witnesses: Vec<(usize, Vec<u64>)>,
    stats: SearchStats,
}

fn record(ctx: &Ctx, state: &State, local: &mut TaskResult) {
    if !state.has_edge {
        return;
    }
    let total = ctx.committed_len() + state.chosen.len();
    ctx.raise_best(total);
    if total < ctx.best.load(Ordering::Relaxed) || total < local.best {
        return;
    }
    if total > local.best {
        local.best = total;
        local.witnesses.clear();
    }
    let mut masks: Vec<u64> = ctx
        .committed
        .iter()
        .copied()
        .chain(state.chosen.iter().map(|&c| ctx.masks[c as usize]))
        .collect();
    masks.sort_unstable();
    local.witnesses.push((total, masks));
}

/// Branch candidates in spec order: descending intersection count with the
/// chosen family (i.e. ascending disjointness count), ties by canonical
/// storage order.
fn branch_order(state: &State) -> Vec<u32> {
    let mut order: Vec<u32> = state.alive.iter_ones().map(|c| c as u32).collect();
    order.sort_unstable_by_key(|&c| (state.cnt[c as usize], c));
    order
}

fn dfs(ctx: &Ctx, state: &mut State, local: &mut TaskResult, local_nodes: &mut u64) {
    if ctx.tick(local_nodes) {
        return;
    }
    record(ctx, state, local);
    for c in branch_order(state) {
        if ctx.stop.load(Ordering::Relaxed) {
            return;
        }
        let c = c as usize;
        debug_assert!(state.alive.get(c));
        if state.bound(ctx) < ctx.best.load(Ordering::Relaxed) {
            local.stats.bound_prunes += 1;
            return;
        }
        let mut child = state.clone();
        child.include(ctx, c, &mut local.stats);
        dfs(ctx, &mut child, local, local_nodes);
        state.alive.clear(c);
    }
}

/// Expands one node during frontier generation: records it, then returns
/// its surviving include-children in branch order.
fn expand_node(
    ctx: &Ctx,
    mut state: State,
    local: &mut TaskResult,
    local_nodes: &mut u64,
) -> Vec<State> {
    let mut children = Vec::new();
    if ctx.tick(local_nodes) {
        return children;
    }
    record(ctx, &state, local);
    for c in branch_order(&state) {
        if ctx.stop.load(Ordering::Relaxed) {
            break;
        }
        let c = c as usize;
        if state.bound(ctx) < ctx.best.load(Ordering::Relaxed) {
            local.stats.bound_prunes += 1;
            break;
        }
        let mut child = state.clone();
        child.include(ctx, c, &mut local.stats);
        children.push(child);
        state.alive.clear(c);
    }
    children
}

/// A greedy valid extension: all candidates through a common element are
/// pairwise intersecting, so the largest such bundle seeds the incumbent.
fn star_seed(ctx: &Ctx, n: u32) -> usize {
    if ctx.committed.is_empty() {
        return 0;
    }
    let best_star = (0..n)
        .map(|e| {
            let bit = 1u64 << e;
            ctx.masks.iter().filter(|&&m| m & bit != 0).count()
        })
        .max()
        .unwrap_or(0);
    ctx.committed_len() + best_star
}

/// Exact maximum almost intersecting family size (and witnesses) for the
/// problem's parameters, by branch and bound.
pub fn max_almost_intersecting(problem: &SearchProblem) -> Result<SearchOutcome> {
    let params = problem.params;
    let (n, k) = (params.n(), params.k());
    let intersecting_max = if n >= 2 * k {
        binom_u64((n - 1) as u64, (k - 1) as u64)
    } else {
        binom_u64(n as u64, k as u64)
    };

    let universe = all_k_subsets(Interval::new(1, n)?, k);

    let (committed, masks): (Vec<u64>, Vec<u64>) = if problem.symmetry {
        if n < 2 * k {
            // No two disjoint k-sets exist: no almost intersecting family.
            return Ok(SearchOutcome {
                optimum: 0,
                exhausted: true,
                witnesses: Vec::new(),
                witness_count: 0,
                classified: true,
                stats: SearchStats::default(),
                intersecting_max,
            });
        }
        let p = (1u64 << k) - 1;
        let q = p << k;
        let rest = universe
            .iter()
            .copied()
            .filter(|&m| m & p != 0 && m & q != 0)
            .collect();
        (vec![p, q], rest)
    } else {
        (Vec::new(), universe)
    };

    let disj: Vec<Bits> = masks
        .iter()
        .map(|&m| {
            let mut row = Bits::zeros(masks.len());
            for (j, &o) in masks.iter().enumerate() {
                if m & o == 0 {
                    row.set(j);
                }
            }
            row
        })
        .collect();

    let k3 = if problem.symmetry && problem.k3_rules && k == 3 {
        Some(rules::K3Engine::new(&masks))
    } else {
        None
    };

    let ctx = Ctx {
        masks,
        disj,
        committed,
        k3,
        budget_nodes: problem.budget_nodes,
        deadline: problem.budget_time.map(|d| Instant::now() + d),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        best: AtomicUsize::new(0),
    };
    ctx.best.store(star_seed(&ctx, n), Ordering::Relaxed);

    // Frontier expansion, then parallel subtree search.
    let mut frontier_result = TaskResult::default();
    let mut frontier_nodes = 0u64;
    let target = problem.workers * 8;
    let mut level = vec![State::root(&ctx)];
    let mut depth = 0;
    while problem.workers > 1 && level.len() < target && depth < 3 && !level.is_empty() {
        let mut next = Vec::new();
        for st in level {
            next.extend(expand_node(&ctx, st, &mut frontier_result, &mut frontier_nodes));
        }
        level = next;
        depth += 1;
    }

    let task_results: Vec<TaskResult> = if problem.workers == 1 {
        let mut local = TaskResult::default();
        let mut local_nodes = 0u64;
        for mut st in level {
            dfs(&ctx, &mut st, &mut local, &mut local_nodes);
        }
        vec![local]
    } else {
        let tasks = level;
        let next = AtomicUsize::new(0);
        let results: Mutex<Vec<TaskResult>> = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..problem.workers {
                scope.spawn(|| {
                    let mut local = TaskResult::default();
                    let mut local_nodes = 0u64;
                    loop {
                        let t = next.fetch_add(1, Ordering::Relaxed);
                        if t >= tasks.len() {
                            break;
                        }
                        let mut st = tasks[t].clone();
                        dfs(&ctx, &mut st, &mut local, &mut local_nodes);
                    }
                    results.lock().expect("worker results").push(local);
                });
            }
        });
        results.into_inner().expect("worker results")
    };

    let exhausted = !ctx.stop.load(Ordering::Relaxed);
    let optimum = ctx.best.load(Ordering::Relaxed);

    let mut stats = frontier_result.stats;
    let mut raw: Vec<Vec<u64>> = frontier_result
        .witnesses
        .into_iter()
        .filter(|(t, _)| *t == optimum)
        .map(|(_, m)| m)
        .collect();
    for r in task_results {
        stats.add(&r.stats);
        raw.extend(
            r.witnesses
                .into_iter()
                .filter(|(t, _)| *t == optimum)
                .map(|(_, m)| m),
        );
    }
    stats.nodes = ctx.nodes.load(Ordering::Relaxed);
    raw.sort_unstable();
    raw.dedup();

    if optimum == 0 {
        // Only reachable without symmetry when no family has an edge.
        return Ok(SearchOutcome {
            optimum: 0,
            exhausted,
            witnesses: Vec::new(),
            witness_count: 0,
            classified: true,
            stats,
            intersecting_max,
        });
    }

    let witness_count = raw.len();
    let (witnesses, classified) = if witness_count <= 100 {
        let families: Vec<SetFamily> = raw
            .iter()
            .map(|masks| SetFamily::from_masks(params, masks.iter().copied()))
            .collect::<Result<_>>()?;
        let mut reps: Vec<SetFamily> = Vec::new();
        for f in families {
            debug_assert!(f.is_almost_intersecting());
            if !reps.iter().any(|r| family_isomorphic(r, &f).is_some()) {
                reps.push(f);
            }
        }
        (reps, true)
    } else {
        (Vec::new(), false)
    };

    Ok(SearchOutcome {
        optimum,
        exhausted,
        witnesses,
        witness_count,
        classified,
        stats,
        intersecting_max,
    })
}
