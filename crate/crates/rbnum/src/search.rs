//! Exhaustive branch-and-prune search for rainbow numbers.
//!
//! The search walks canonical colorings of `[n]` as restricted-growth
//! strings: positions are assigned in order `1..=n`, each position tries the
//! existing colors in ascending order and then one fresh color, so complete
//! colorings are visited in lexicographic order and no partition is visited
//! twice under color renaming.
//!
//! Two prunes keep this exact but fast:
//!
//! * **Rainbow prune.** After assigning position `m`, only solutions whose
//!   maximum is `m` can newly become rainbow; if one did, no completion can
//!   ever un-color it, so the branch dies.
//! * **Color-count bound.** A branch is cut when even giving every remaining
//!   position a fresh color cannot beat the best color count found so far.
//!   For the three-variable equation the bound tightens: each fresh color
//!   must start at a position at least twice the previous fresh-color
//!   position (see [`crate::constructions::satisfies_doubling_bounds`]), so
//!   the remaining-colors estimate follows a doubling chain instead of the
//!   raw position count. The tightened bound is toggleable
//!   ([`SearchLimits::doubling_prune`]) and never changes results.
//!
//! The maximum rainbow-free color count is established first (optionally
//! seeded by an independently re-verified construction, and optionally split
//! over threads sharing an atomic best bound). The reported witness always
//! comes from a second, sequential pass that finds the lexicographically
//! first coloring attaining the maximum, so results are identical under any
//! parallel schedule.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicU8, AtomicUsize, Ordering::Relaxed};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::constructions::{staircase_coloring, trailing_zeros_coloring};
use crate::model::{
    colors_distinct, find_rainbow_solution, for_each_solution, Coloring, Equation, Error, RbResult,
    SearchStats, SearchStatus,
};

/// Resource limits and search options. Limits apply to one computation (one
/// `(n, k)`); a sweep applies them afresh per row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Abort after visiting this many nodes (assignment attempts).
    pub max_nodes: Option<u64>,
    /// Abort once this much wall time has elapsed.
    pub max_wall_time: Option<Duration>,
    /// Have [`compute_rb`] also enumerate and count the extremal colorings.
    pub enumerate_all_extremal: bool,
    /// Worker threads for the bound-establishing phase; 1 = sequential.
    pub parallel_width: usize,
    /// Tightened color-count bound for the three-variable equation
    /// (first-occurrence doubling). No effect on results, only on speed;
    /// ignored for k >= 4.
    pub doubling_prune: bool,
    /// Seed the best-count bound with the applicable construction's coloring
    /// after re-verifying it rainbow-free. No effect on results.
    pub warm_start: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: None,
            max_wall_time: None,
            enumerate_all_extremal: false,
            parallel_width: 1,
            doubling_prune: true,
            warm_start: true,
        }
    }
}

/// Result of [`max_rainbow_free`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    /// Maximum colors of a rainbow-free exact coloring when complete;
    /// otherwise the best certified lower bound.
    pub max_colors: usize,
    /// Rainbow-free coloring attaining `max_colors`; lexicographically
    /// smallest canonical one when complete.
    pub witness: Coloring,
    pub status: SearchStatus,
    pub stats: SearchStats,
}

/// Result of [`enumerate_extremal`]: all canonical rainbow-free colorings
/// with the maximum color count, in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalEnumeration {
    pub n: usize,
    pub k: usize,
    /// `Some(max + 1)` when the underlying search completed.
    pub rb: Option<usize>,
    /// Color count of the listed colorings (the certified bound when
    /// incomplete).
    pub max_rainbow_free_colors: usize,
    pub colorings: Vec<Coloring>,
    /// False when a limit struck before the listing was finished; the list
    /// is then a (possibly empty) prefix.
    pub complete: bool,
    pub stats: SearchStats,
}

const FLUSH_EVERY: u64 = 1024;
const SPLIT_DEPTH_CAP: usize = 7;

#[derive(Debug, Default, Clone, Copy)]
struct LocalStats {
    nodes: u64,
    prunes_by_rainbow: u64,
    prunes_by_bound: u64,
}

impl LocalStats {
    fn absorb(&mut self, other: LocalStats) {
        self.nodes += other.nodes;
        self.prunes_by_rainbow += other.prunes_by_rainbow;
        self.prunes_by_bound += other.prunes_by_bound;
    }
}

/// Cross-thread abort latch; the first trigger wins and records why.
struct AbortSignal {
    flag: AtomicBool,
    reason: AtomicU8,
}

impl AbortSignal {
    fn new() -> Self {
        AbortSignal {
            flag: AtomicBool::new(false),
            reason: AtomicU8::new(0),
        }
    }

    fn trigger(&self, status: SearchStatus) {
        let code = match status {
            SearchStatus::AbortedNodeLimit => 1,
            SearchStatus::AbortedTimeLimit => 2,
            SearchStatus::Complete => return,
        };
        if !self.flag.swap(true, Relaxed) {
            self.reason.store(code, Relaxed);
        }
    }

    fn check(&self) -> Option<SearchStatus> {
        if !self.flag.load(Relaxed) {
            return None;
        }
        Some(match self.reason.load(Relaxed) {
            2 => SearchStatus::AbortedTimeLimit,
            _ => SearchStatus::AbortedNodeLimit,
        })
    }
}

enum Stop {
    /// First-hit collection succeeded.
    Found,
    /// A limit fired; the reason lives in the shared [`AbortSignal`].
    Aborted,
}

/// Per-worker budget view. Node accounting is exact when sequential; a
/// parallel worker may overshoot the node limit by at most
/// `width * FLUSH_EVERY` before noticing.
struct Budget<'a> {
    unflushed: u64,
    seen_global: u64,
    shared_nodes: &'a AtomicU64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    abort: &'a AbortSignal,
}

impl<'a> Budget<'a> {
    fn tick(&mut self) -> Result<(), Stop> {
        self.unflushed += 1;
        if let Some(limit) = self.node_limit {
            if self.seen_global + self.unflushed > limit {
                self.abort.trigger(SearchStatus::AbortedNodeLimit);
            }
        }
        if self.unflushed >= FLUSH_EVERY {
            self.flush();
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.abort.trigger(SearchStatus::AbortedTimeLimit);
                }
            }
        }
        if self.abort.check().is_some() {
            Err(Stop::Aborted)
        } else {
            Ok(())
        }
    }

    fn flush(&mut self) {
        if self.unflushed > 0 {
            self.seen_global = self.shared_nodes.fetch_add(self.unflushed, Relaxed) + self.unflushed;
            self.unflushed = 0;
        }
    }
}

/// Remaining fresh colors reachable from a state at `pos` with first
/// occurrences ending at `s_last`. With `doubling` (three-variable equation)
/// each future fresh color doubles the previous first-occurrence position.
fn potential_of(n: usize, pos: usize, colors: usize, s_last: usize, doubling: bool) -> usize {
    if !doubling {
        return colors + (n - pos);
    }
    let mut extra = 0;
    let mut next = (2 * s_last).max(pos + 1);
    while next <= n {
        extra += 1;
        next *= 2;
    }
    colors + extra
}

fn creates_rainbow_at(sols_by_max: &[Vec<Box<[usize]>>], assignment: &[usize], m: usize) -> bool {
    sols_by_max[m]
        .iter()
        .any(|sol| colors_distinct(assignment, sol))
}

/// Snapshot of a partial assignment, used to hand subtrees to workers.
#[derive(Clone)]
struct PrefixState {
    assignment: Vec<usize>,
    first_occ: Vec<usize>,
}

impl PrefixState {
    fn root(n: usize) -> Self {
        PrefixState {
            assignment: vec![0; n],
            first_occ: vec![1],
        }
    }
}

enum Mode<'a> {
    /// Push the shared best color count upward; remember the first coloring
    /// attaining each improvement as an abort-time fallback witness.
    Maximize {
        shared_best: &'a AtomicUsize,
        fallback: &'a Mutex<(usize, Vec<usize>)>,
    },
    /// Collect complete colorings with exactly `target` colors.
    Collect {
        target: usize,
        first_only: bool,
        out: Vec<Vec<usize>>,
    },
}

struct Engine<'a> {
    n: usize,
    sols_by_max: &'a [Vec<Box<[usize]>>],
    doubling: bool,
    fresh_cap: usize,
    mode: Mode<'a>,
    budget: Budget<'a>,
    stats: LocalStats,
    assignment: Vec<usize>,
    first_occ: Vec<usize>,
}

impl<'a> Engine<'a> {
    fn bar(&self) -> usize {
        match &self.mode {
            Mode::Maximize { shared_best, .. } => shared_best.load(Relaxed),
            Mode::Collect { target, .. } => target - 1,
        }
    }

    /// Positions `1..=pos` are assigned; explore all extensions.
    fn dfs(&mut self, pos: usize) -> Result<(), Stop> {
        let next = pos + 1;
        let existing = self.first_occ.len();
        let last_color = if existing < self.fresh_cap {
            existing
        } else {
            existing - 1
        };
        for color in 0..=last_color {
            self.budget.tick()?;
            self.stats.nodes += 1;
            let fresh = color == existing;
            self.assignment[next - 1] = color;
            if fresh {
                self.first_occ.push(next);
            }
            if creates_rainbow_at(self.sols_by_max, &self.assignment, next) {
                self.stats.prunes_by_rainbow += 1;
            } else if next == self.n {
                self.on_leaf()?;
            } else if self.potential(next) <= self.bar() {
                self.stats.prunes_by_bound += 1;
            } else {
                self.dfs(next)?;
            }
            if fresh {
                self.first_occ.pop();
            }
        }
        Ok(())
    }

    fn potential(&self, pos: usize) -> usize {
        potential_of(
            self.n,
            pos,
            self.first_occ.len(),
            *self.first_occ.last().expect("nonempty"),
            self.doubling,
        )
    }

    fn on_leaf(&mut self) -> Result<(), Stop> {
        let colors = self.first_occ.len();
        match &mut self.mode {
            Mode::Maximize {
                shared_best,
                fallback,
            } => {
                let mut current = shared_best.load(Relaxed);
                while colors > current {
                    match shared_best.compare_exchange_weak(current, colors, Relaxed, Relaxed) {
                        Ok(_) => {
                            let mut slot = fallback.lock().expect("fallback lock");
                            if colors > slot.0 {
                                *slot = (colors, self.assignment.clone());
                            }
                            break;
                        }
                        Err(seen) => current = seen,
                    }
                }
                Ok(())
            }
            Mode::Collect {
                target,
                first_only,
                out,
            } => {
                debug_assert!(colors <= *target, "fresh_cap bounds the color count");
                if colors == *target {
                    out.push(self.assignment.clone());
                    if *first_only {
                        return Err(Stop::Found);
                    }
                }
                Ok(())
            }
        }
    }
}

/// One `(n, k)` search: the solution index plus cross-phase budget state.
struct SearchRun<'a> {
    n: usize,
    limits: &'a SearchLimits,
    sols_by_max: Vec<Vec<Box<[usize]>>>,
    doubling: bool,
    width: usize,
    start: Instant,
    deadline: Option<Instant>,
    shared_nodes: AtomicU64,
    abort: AbortSignal,
    stats: LocalStats,
}

impl<'a> SearchRun<'a> {
    fn new(n: usize, eq: Equation, limits: &'a SearchLimits) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let start = Instant::now();
        let mut sols_by_max: Vec<Vec<Box<[usize]>>> = vec![Vec::new(); n + 1];
        for_each_solution(eq, n, &mut |tuple| {
            sols_by_max[*tuple.last().expect("nonempty")].push(tuple.to_vec().into_boxed_slice());
            true
        });
        Ok(SearchRun {
            n,
            limits,
            sols_by_max,
            doubling: limits.doubling_prune && eq.k() == 3,
            width: limits.parallel_width.max(1),
            start,
            deadline: limits.max_wall_time.map(|t| start + t),
            shared_nodes: AtomicU64::new(0),
            abort: AbortSignal::new(),
            stats: LocalStats::default(),
        })
    }

    fn budget(&self) -> Budget<'_> {
        Budget {
            unflushed: 0,
            seen_global: self.shared_nodes.load(Relaxed),
            shared_nodes: &self.shared_nodes,
            node_limit: self.limits.max_nodes,
            deadline: self.deadline,
            abort: &self.abort,
        }
    }

    fn engine<'b>(&'b self, prefix: &PrefixState, fresh_cap: usize, mode: Mode<'b>) -> Engine<'b> {
        Engine {
            n: self.n,
            sols_by_max: &self.sols_by_max,
            doubling: self.doubling,
            fresh_cap,
            mode,
            budget: self.budget(),
            stats: LocalStats::default(),
            assignment: prefix.assignment.clone(),
            first_occ: prefix.first_occ.clone(),
        }
    }

    fn root_potential(&self) -> usize {
        potential_of(self.n, 1, 1, 1, self.doubling)
    }

    /// Expand the tree to `depth` sequentially, returning the surviving
    /// states in lexicographic order.
    fn expand_prefixes(&mut self, bar: usize, fresh_cap: usize, depth: usize) -> Vec<PrefixState> {
        fn rec(
            run: &SearchRun<'_>,
            stats: &mut LocalStats,
            state: &mut PrefixState,
            pos: usize,
            depth: usize,
            bar: usize,
            fresh_cap: usize,
            out: &mut Vec<PrefixState>,
        ) {
            if pos == depth {
                out.push(state.clone());
                return;
            }
            let next = pos + 1;
            let existing = state.first_occ.len();
            let last_color = if existing < fresh_cap { existing } else { existing - 1 };
            for color in 0..=last_color {
                stats.nodes += 1;
                let fresh = color == existing;
                state.assignment[next - 1] = color;
                if fresh {
                    state.first_occ.push(next);
                }
                if creates_rainbow_at(&run.sols_by_max, &state.assignment, next) {
                    stats.prunes_by_rainbow += 1;
                } else if potential_of(
                    run.n,
                    next,
                    state.first_occ.len(),
                    *state.first_occ.last().expect("nonempty"),
                    run.doubling,
                ) <= bar
                {
                    stats.prunes_by_bound += 1;
                } else {
                    rec(run, stats, state, next, depth, bar, fresh_cap, out);
                }
                if fresh {
                    state.first_occ.pop();
                }
            }
        }

        let mut out = Vec::new();
        let mut state = PrefixState::root(self.n);
        let mut stats = LocalStats::default();
        rec(self, &mut stats, &mut state, 1, depth, bar, fresh_cap, &mut out);
        self.stats.absorb(stats);
        out
    }

    fn split_depth(&self) -> usize {
        (self.n - 1).min(SPLIT_DEPTH_CAP).max(1)
    }

    /// Phase one: raise `initial_best` to the true maximum color count.
    /// Returns the maximum together with a coloring attaining it.
    fn maximize(&mut self, initial_best: usize, seed: Vec<usize>) -> (usize, Vec<usize>) {
        let shared_best = AtomicUsize::new(initial_best);
        let fallback = Mutex::new((initial_best, seed));
        if self.root_potential() <= initial_best {
            self.stats.prunes_by_bound += 1;
        } else if self.n == 1 {
            // single-element domain: the one coloring has one color
        } else if self.width > 1 {
            use rayon::prelude::*;
            let depth = self.split_depth();
            let tasks = self.expand_prefixes(initial_best, self.n + 1, depth);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.width)
                .build();
            let run_task = |prefix: &PrefixState| -> LocalStats {
                let mut engine = self.engine(
                    prefix,
                    self.n + 1,
                    Mode::Maximize {
                        shared_best: &shared_best,
                        fallback: &fallback,
                    },
                );
                let _ = engine.dfs(depth);
                engine.budget.flush();
                engine.stats
            };
            let collected: Vec<LocalStats> = match pool {
                Ok(pool) => pool.install(|| tasks.par_iter().map(run_task).collect()),
                Err(_) => tasks.iter().map(run_task).collect(),
            };
            for s in collected {
                self.stats.absorb(s);
            }
        } else {
            let mut engine = self.engine(
                &PrefixState::root(self.n),
                self.n + 1,
                Mode::Maximize {
                    shared_best: &shared_best,
                    fallback: &fallback,
                },
            );
            let outcome = engine.dfs(1);
            debug_assert!(!matches!(outcome, Err(Stop::Found)));
            engine.budget.flush();
            let stats = engine.stats;
            drop(engine);
            self.stats.absorb(stats);
        }
        let best = shared_best.load(Relaxed);
        let (fallback_colors, witness) = fallback.into_inner().expect("fallback lock");
        debug_assert_eq!(fallback_colors, best);
        (best, witness)
    }

    /// Phase two: the lexicographically-first coloring with exactly `target`
    /// colors. Sequential, so the witness is schedule-independent.
    fn lex_first(&mut self, target: usize) -> Option<Vec<usize>> {
        if self.abort.check().is_some() {
            return None;
        }
        if self.n == 1 {
            return (target == 1).then(|| vec![0]);
        }
        if self.root_potential() < target {
            return None;
        }
        let mut engine = self.engine(
            &PrefixState::root(self.n),
            target,
            Mode::Collect {
                target,
                first_only: true,
                out: Vec::new(),
            },
        );
        let outcome = engine.dfs(1);
        engine.budget.flush();
        let stats = engine.stats;
        let Mode::Collect { mut out, .. } = engine.mode else {
            unreachable!()
        };
        self.stats.absorb(stats);
        match outcome {
            Err(Stop::Found) | Ok(()) => out.pop(),
            Err(Stop::Aborted) => None,
        }
    }

    /// Enumerate every coloring with exactly `target` colors, in
    /// lexicographic order. The flag reports whether the listing finished.
    fn collect_all(&mut self, target: usize) -> (Vec<Vec<usize>>, bool) {
        if self.abort.check().is_some() {
            return (Vec::new(), false);
        }
        if self.n == 1 {
            let list = if target == 1 { vec![vec![0]] } else { Vec::new() };
            return (list, true);
        }
        if self.root_potential() < target {
            self.stats.prunes_by_bound += 1;
            return (Vec::new(), true);
        }
        if self.width > 1 {
            use rayon::prelude::*;
            let depth = self.split_depth();
            let tasks = self.expand_prefixes(target - 1, target, depth);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.width)
                .build();
            let run_task = |prefix: &PrefixState| -> (Vec<Vec<usize>>, bool, LocalStats) {
                let mut engine = self.engine(
                    prefix,
                    target,
                    Mode::Collect {
                        target,
                        first_only: false,
                        out: Vec::new(),
                    },
                );
                let outcome = engine.dfs(depth);
                engine.budget.flush();
                let Mode::Collect { out, .. } = engine.mode else {
                    unreachable!()
                };
                (out, outcome.is_ok(), engine.stats)
            };
            let results: Vec<(Vec<Vec<usize>>, bool, LocalStats)> = match pool {
                Ok(pool) => pool.install(|| tasks.par_iter().map(run_task).collect()),
                Err(_) => tasks.iter().map(run_task).collect(),
            };
            let mut list = Vec::new();
            let mut complete = true;
            for (part, ok, stats) in results {
                list.extend(part);
                complete &= ok;
                self.stats.absorb(stats);
            }
            (list, complete)
        } else {
            let mut engine = self.engine(
                &PrefixState::root(self.n),
                target,
                Mode::Collect {
                    target,
                    first_only: false,
                    out: Vec::new(),
                },
            );
            let outcome = engine.dfs(1);
            engine.budget.flush();
            let stats = engine.stats;
            let Mode::Collect { out, .. } = engine.mode else {
                unreachable!()
            };
            self.stats.absorb(stats);
            (out, outcome.is_ok())
        }
    }

    fn status(&self) -> SearchStatus {
        self.abort.check().unwrap_or(SearchStatus::Complete)
    }

    fn final_stats(&self) -> SearchStats {
        SearchStats {
            nodes_visited: self.stats.nodes,
            prunes_by_rainbow: self.stats.prunes_by_rainbow,
            prunes_by_bound: self.stats.prunes_by_bound,
            wall_time: self.start.elapsed(),
        }
    }
}

/// Warm-start seed: the applicable construction, re-verified rainbow-free by
/// an independent full scan. `None` when inapplicable or (never in practice)
/// the verification fails.
fn construction_seed(n: usize, eq: Equation) -> Option<Coloring> {
    let candidate = match eq.k() {
        3 => trailing_zeros_coloring(n).ok()?,
        _ => staircase_coloring(n, eq.k()).ok()?,
    };
    if find_rainbow_solution(&candidate, eq).is_none() {
        Some(candidate)
    } else {
        debug_assert!(false, "construction must be rainbow-free");
        None
    }
}

struct EngineOutput {
    max_colors: usize,
    witness: Coloring,
    status: SearchStatus,
    stats: SearchStats,
    extremal: Option<(Vec<Coloring>, bool)>,
}

fn run_engine(
    n: usize,
    eq: Equation,
    limits: &SearchLimits,
    want_extremal: bool,
) -> Result<EngineOutput, Error> {
    let mut run = SearchRun::new(n, eq, limits)?;

    if !eq.has_solutions(n) {
        // No solutions: every coloring is rainbow-free, so the all-distinct
        // coloring maximizes colors and rb = n + 1.
        let witness = Coloring::identity(n)?;
        return Ok(EngineOutput {
            max_colors: n,
            witness: witness.clone(),
            status: SearchStatus::Complete,
            stats: run.final_stats(),
            extremal: want_extremal.then(|| (vec![witness], true)),
        });
    }

    // Any single-color coloring is rainbow-free, so 1 is always certified.
    let mut initial_best = 1;
    let mut seed = vec![0; n];
    if limits.warm_start {
        if let Some(c) = construction_seed(n, eq) {
            if c.color_count() > initial_best {
                initial_best = c.color_count();
                seed = c.assignment().to_vec();
            }
        }
    }

    let (max_colors, fallback) = run.maximize(initial_best, seed);
    let witness_raw = match run.status() {
        SearchStatus::Complete => run.lex_first(max_colors).unwrap_or(fallback),
        _ => fallback,
    };
    let extremal = if want_extremal && run.status().is_complete() {
        let (raw, complete) = run.collect_all(max_colors);
        let colorings: Vec<Coloring> = raw
            .into_iter()
            .map(Coloring::from_canonical_unchecked)
            .collect();
        debug_assert!(colorings.windows(2).all(|w| w[0] < w[1]));
        Some((colorings, complete))
    } else if want_extremal {
        Some((Vec::new(), false))
    } else {
        None
    };

    Ok(EngineOutput {
        max_colors,
        witness: Coloring::from_canonical_unchecked(witness_raw),
        status: run.status(),
        stats: run.final_stats(),
        extremal,
    })
}

/// Maximum number of colors over all rainbow-free exact colorings of
/// `[1, n]`, with a witness attaining it.
///
/// Returns `(n, identity)` when `[n]` has no solutions. On a limit abort the
/// returned count is only a certified lower bound (see
/// [`SearchOutcome::status`]).
pub fn max_rainbow_free(
    n: usize,
    eq: Equation,
    limits: &SearchLimits,
) -> Result<SearchOutcome, Error> {
    let out = run_engine(n, eq, limits, false)?;
    Ok(SearchOutcome {
        max_colors: out.max_colors,
        witness: out.witness,
        status: out.status,
        stats: out.stats,
    })
}

/// The rainbow number `rb([n], eq)` by exhaustive search:
/// `max_rainbow_free + 1`, or `n + 1` when `[n]` has no solutions.
///
/// With [`SearchLimits::enumerate_all_extremal`] the extremal colorings are
/// counted as well. Identical results for any `parallel_width`.
pub fn compute_rb(n: usize, eq: Equation, limits: &SearchLimits) -> Result<RbResult, Error> {
    let out = run_engine(n, eq, limits, limits.enumerate_all_extremal)?;
    let complete = out.status.is_complete();
    Ok(RbResult {
        n,
        k: eq.k(),
        rb: complete.then(|| out.max_colors + 1),
        max_rainbow_free_colors: out.max_colors,
        extremal_count: match &out.extremal {
            Some((list, true)) => Some(list.len() as u64),
            _ => None,
        },
        witness: out.witness,
        stats: out.stats,
        status: out.status,
    })
}

/// All extremal colorings: canonical rainbow-free colorings of `[1, n]` with
/// the maximum color count (`rb - 1` colors), sorted lexicographically.
pub fn enumerate_extremal(
    n: usize,
    eq: Equation,
    limits: &SearchLimits,
) -> Result<ExtremalEnumeration, Error> {
    let out = run_engine(n, eq, limits, true)?;
    let complete = out.status.is_complete();
    let (colorings, list_complete) = out.extremal.expect("requested");
    Ok(ExtremalEnumeration {
        n,
        k: eq.k(),
        rb: (complete && list_complete).then(|| out.max_colors + 1),
        max_rainbow_free_colors: out.max_colors,
        colorings,
        complete: complete && list_complete,
        stats: out.stats,
    })
}

/// Does `(n, eq)` have exactly one extremal coloring? Errors with
/// [`Error::SearchIncomplete`] when limits struck first.
pub fn verify_unique_extremal(
    n: usize,
    eq: Equation,
    limits: &SearchLimits,
) -> Result<bool, Error> {
    let enumeration = enumerate_extremal(n, eq, limits)?;
    if !enumeration.complete {
        return Err(Error::SearchIncomplete);
    }
    Ok(enumeration.colorings.len() == 1)
}

/// [`compute_rb`] over an inclusive range of `n`, one row per value, limits
/// applied afresh per row. Individual rows may abort; the sweep itself never
/// does.
pub fn sweep(
    n_range: RangeInclusive<usize>,
    eq: Equation,
    limits: &SearchLimits,
) -> Result<Vec<RbResult>, Error> {
    let (&n_min, &n_max) = (n_range.start(), n_range.end());
    if n_min == 0 {
        return Err(Error::EmptyDomain);
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        rows.push(compute_rb(n, eq, limits)?);
    }
    Ok(rows)
}
