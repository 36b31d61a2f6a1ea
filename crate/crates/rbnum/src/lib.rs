//! Exact rainbow numbers for the equation `x1 + x2 + ... + x(k-1) = xk`.
//!
//! For an integer interval `[n] = {1, ..., n}`, an *exact* r-coloring assigns
//! each element one of r colors with every color used at least once. A
//! solution of the equation with pairwise-distinct values is *rainbow* when
//! its k elements receive k distinct colors. The rainbow number `rb([n], eq)`
//! is the smallest r such that **every** exact r-coloring of `[n]` contains a
//! rainbow solution; when `[n]` has no solution at all, `rb([n], eq) = n + 1`
//! by convention.
//!
//! This crate computes rainbow numbers exactly, three independent ways:
//!
//! * **Constructions** ([`constructions`]): explicit rainbow-free colorings —
//!   the trailing-zeros coloring for three variables (`⌊log2 n⌋ + 1` colors)
//!   and the staircase coloring for `k >= 4` (`n - L + 2` colors, with `L` the
//!   staircase threshold). Each witnesses a lower bound on `rb`.
//! * **Closed forms** ([`constructions::rb_formula_k3`],
//!   [`constructions::rb_formula_k4`]): `⌊log2 n⌋ + 2` for `k = 3` (n ≥ 3) and
//!   `⌊(n + 7) / 2⌋` for `k = 4` (n ≥ 5). Integer arithmetic only.
//! * **Search oracle** ([`search`]): a pruned exhaustive branch-and-prune
//!   search over canonical colorings (restricted-growth strings) that
//!   determines the maximum number of colors in a rainbow-free coloring —
//!   hence `rb` — and can enumerate every extremal coloring.
//!
//! The formulas are never trusted blind: the test suite reproduces them from
//! the search oracle and cross-checks the oracle against a naive full
//! enumeration at small `n`.
//!
//! # Example
//!
//! ```
//! use rbnum::{Equation, SearchLimits, compute_rb};
//!
//! let eq = Equation::new(3).unwrap();      // x1 + x2 = x3
//! let result = compute_rb(5, eq, &SearchLimits::default()).unwrap();
//! assert_eq!(result.rb, Some(4));
//! // Witness: one of the 3-colorings of [5] without a rainbow solution.
//! assert_eq!(result.witness.classes_string(), "{1,3,5} {2} {4}");
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example (`cargo run --example <name>`):
//!
//! * `trailing_zeros` — the three-variable construction, with first-occurrence
//!   vectors and verification.
//! * `staircase` — staircase colorings across `k`, thresholds and color counts.
//! * `compute_rb` — full search-oracle run for one `(n, k)`.
//! * `extremal_uniqueness` — enumerate extremal colorings for `k = 4`, odd `n`.
//! * `five_variable_scan` — `k = 5` data the closed forms do not cover.
//! * `sweep_csv` — a machine-readable sweep over a range of `n`.
//! * `coloring_files` — the coloring text format, round-tripped and verified.
//!
//! The `rbnum` binary exposes the same capabilities as subcommands
//! (`rb`, `construct`, `verify`, `sweep`); see the README.

pub mod constructions;
pub mod model;
pub mod report;
pub mod search;

pub use model::{
    enumerate_solutions, find_rainbow_solution, is_rainbow, solutions_with_max, BoundsReport,
    Coloring, Equation, Error, RbResult, SearchStats, SearchStatus, Solution,
};
pub use search::{
    compute_rb, enumerate_extremal, max_rainbow_free, sweep, verify_unique_extremal,
    ExtremalEnumeration, SearchLimits, SearchOutcome,
};
