//! Domain types: equations, colorings, solutions, the rainbow predicate, and
//! the result/report records shared by the search and report layers.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::time::Duration;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors raised by the library's validation and parsing paths.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("equation needs at least 3 variables, got k={0}")]
    InvalidEquation(usize),
    #[error("domain must contain at least one element")]
    EmptyDomain,
    #[error("coloring must assign at least one element")]
    EmptyColoring,
    #[error("coloring is not exact: {0}")]
    NotExact(String),
    #[error("operation requires a canonical coloring (first occurrences in color order)")]
    NotCanonical,
    #[error("solution value {value} exceeds the domain [1, {n}]")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("solution maximum m={m} outside [1, {n}]")]
    MaxOutOfRange { m: usize, n: usize },
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("malformed coloring file: {0}")]
    Parse(String),
    #[error("staircase construction needs k >= 4, got k={0}")]
    StaircaseNeedsK4(usize),
    #[error("increasing tuples need length >= 2, got {0}")]
    TupleTooShort(usize),
    #[error(
        "no solutions exist in [1, {n}] for this equation, so the rainbow number is n+1 = {}; \
         there is no staircase coloring to build",
        n + 1
    )]
    NoSolutions { n: usize },
    #[error("closed form applies for n >= {min_n}, got n={n}")]
    FormulaOutOfRange { n: usize, min_n: usize },
    #[error("search hit its limits before the result was certified")]
    SearchIncomplete,
}

/// The equation `x1 + x2 + ... + x(k-1) = xk` over distinct values, `k >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Equation {
    k: usize,
}

impl Equation {
    pub fn new(k: usize) -> Result<Self, Error> {
        if k < 3 {
            return Err(Error::InvalidEquation(k));
        }
        Ok(Equation { k })
    }

    /// Total number of variables.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of summands on the left-hand side (`k - 1`).
    pub fn lhs_count(&self) -> usize {
        self.k - 1
    }

    /// Smallest possible value of `xk` in any solution: `1 + 2 + ... + (k-1)`.
    ///
    /// `[n]` contains a solution if and only if `n >= k(k-1)/2`.
    pub fn min_solution_max(&self) -> usize {
        self.k * (self.k - 1) / 2
    }

    pub fn has_solutions(&self, n: usize) -> bool {
        n >= self.min_solution_max()
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..self.k {
            if i > 1 {
                write!(f, "+")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, "=x{}", self.k)
    }
}

/// A non-degenerate solution: `k` pairwise-distinct values of `[n]`, sorted
/// increasing, whose maximum equals the sum of the rest.
///
/// The sum of `k - 1` distinct positive integers always exceeds each summand,
/// so `xk` is automatically the strict maximum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Solution {
    values: Vec<usize>,
}

impl Solution {
    pub fn new(mut values: Vec<usize>) -> Result<Self, Error> {
        values.sort_unstable();
        if values.len() < 3 {
            return Err(Error::InvalidSolution(format!(
                "need at least 3 values, got {}",
                values.len()
            )));
        }
        if values[0] == 0 {
            return Err(Error::InvalidSolution("values must be positive".into()));
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSolution("values must be distinct".into()));
        }
        let (&last, rest) = values.split_last().expect("nonempty");
        let sum: usize = rest.iter().sum();
        if sum != last {
            return Err(Error::InvalidSolution(format!(
                "maximum {last} is not the sum {sum} of the other values"
            )));
        }
        Ok(Solution { values })
    }

    /// Internal constructor for tuples produced by the enumerator, which are
    /// sorted and sum-correct by construction.
    pub(crate) fn from_sorted_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Solution::new(values.clone()).is_ok());
        Solution { values }
    }

    /// Sorted values; the last entry is the sum of the others.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn max_value(&self) -> usize {
        *self.values.last().expect("nonempty")
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Visit every solution whose values lie in `[1, n]`, in lexicographic order
/// of the sorted value tuple. The buffer holds the `k-1` summands followed by
/// their sum. Returns `false` if the callback stopped the scan.
///
/// Iteration is allocation-free per tuple, which matters when verifying
/// constructions across the whole solution set for large `n`.
pub(crate) fn for_each_solution<F>(eq: Equation, n: usize, f: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    fn go<F>(buf: &mut Vec<usize>, left: usize, partial: usize, n: usize, f: &mut F) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        if left == 0 {
            buf.push(partial);
            let keep_going = f(buf);
            buf.pop();
            return keep_going;
        }
        let lo = buf.last().map_or(1, |&v| v + 1);
        // Picking v, v+1, ..., v+left-1 is the cheapest completion; the sum
        // must still fit in [1, n].
        let tail = left * (left - 1) / 2;
        if partial + tail + left * lo > n {
            return true;
        }
        let hi = (n - partial - tail) / left;
        for v in lo..=hi {
            buf.push(v);
            let keep_going = go(buf, left - 1, partial + v, n, f);
            buf.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    let mut buf = Vec::with_capacity(eq.k());
    go(&mut buf, eq.lhs_count(), 0, n, f)
}

/// All solutions within `[1, n]`, sorted lexicographically.
///
/// Empty exactly when `n < k(k-1)/2`.
pub fn enumerate_solutions(eq: Equation, n: usize) -> Vec<Solution> {
    let mut out = Vec::new();
    for_each_solution(eq, n, &mut |tuple| {
        out.push(Solution::from_sorted_unchecked(tuple.to_vec()));
        true
    });
    out
}

/// Solutions within `[1, n]` whose maximum (= sum) is exactly `m`.
///
/// The union over `m in [1, n]` partitions [`enumerate_solutions`]; this is
/// the incremental-check primitive of the search engine.
pub fn solutions_with_max(eq: Equation, n: usize, m: usize) -> Result<Vec<Solution>, Error> {
    if m == 0 || m > n {
        return Err(Error::MaxOutOfRange { m, n });
    }
    let mut out = Vec::new();
    for_each_solution(eq, m, &mut |tuple| {
        if *tuple.last().expect("nonempty") == m {
            out.push(Solution::from_sorted_unchecked(tuple.to_vec()));
        }
        true
    });
    Ok(out)
}

/// True when all colors of a tuple of positions are pairwise distinct.
pub(crate) fn colors_distinct(assignment: &[usize], values: &[usize]) -> bool {
    for i in 1..values.len() {
        let ci = assignment[values[i] - 1];
        for j in 0..i {
            if assignment[values[j] - 1] == ci {
                return false;
            }
        }
    }
    true
}

/// Does `solution` receive pairwise-distinct colors under `coloring`?
///
/// Only the partition structure matters, so the verdict is invariant under
/// any renaming of colors.
pub fn is_rainbow(coloring: &Coloring, solution: &Solution) -> Result<bool, Error> {
    let n = coloring.n();
    if let Some(&v) = solution.values().iter().find(|&&v| v > n) {
        return Err(Error::ValueOutOfRange { value: v, n });
    }
    Ok(colors_distinct(coloring.assignment(), solution.values()))
}

/// The lexicographically-first rainbow solution under `coloring`, if any.
///
/// `None` certifies the coloring rainbow-free: every solution of `[1, n]` was
/// scanned.
pub fn find_rainbow_solution(coloring: &Coloring, eq: Equation) -> Option<Solution> {
    let assignment = coloring.assignment();
    let mut found = None;
    for_each_solution(eq, coloring.n(), &mut |tuple| {
        if colors_distinct(assignment, tuple) {
            found = Some(Solution::from_sorted_unchecked(tuple.to_vec()));
            false
        } else {
            true
        }
    });
    found
}

/// An exact coloring of `[n]`: position `x` (1-based) has color
/// `assignment[x-1]`.
///
/// Colors are consecutive integers `0..r-1` internally and every color
/// occurs (exactness). [`Coloring::new`] compresses arbitrary input labels to
/// this form preserving their relative order, so label values carry no
/// meaning beyond the partition they induce. A coloring is *canonical* when
/// the first occurrence of color `i` precedes the first occurrence of color
/// `i+1` (a restricted-growth string); equality and ordering compare
/// canonical forms, i.e. colorings are equal iff they induce the same
/// partition of `[n]`.
#[derive(Debug, Clone)]
pub struct Coloring {
    assignment: Vec<usize>,
    color_count: usize,
    canonical: bool,
}

impl Coloring {
    /// Build a coloring from raw labels. Labels are compressed to `0..r-1`
    /// in increasing label order; `(2,1,2)` becomes internal `(1,0,1)`.
    pub fn new(assignment: Vec<usize>) -> Result<Self, Error> {
        if assignment.is_empty() {
            return Err(Error::EmptyColoring);
        }
        let mut labels: Vec<usize> = assignment.clone();
        labels.sort_unstable();
        labels.dedup();
        let compressed: Vec<usize> = assignment
            .iter()
            .map(|v| labels.binary_search(v).expect("label present"))
            .collect();
        Ok(Self::from_internal(compressed, labels.len()))
    }

    fn from_internal(assignment: Vec<usize>, color_count: usize) -> Self {
        let canonical = is_restricted_growth(&assignment);
        Coloring {
            assignment,
            color_count,
            canonical,
        }
    }

    /// Internal constructor for assignments already in restricted-growth form
    /// (as produced by the constructions and the search engine).
    pub(crate) fn from_canonical_unchecked(assignment: Vec<usize>) -> Self {
        debug_assert!(is_restricted_growth(&assignment));
        let color_count = assignment.iter().max().map_or(0, |&m| m + 1);
        Coloring {
            assignment,
            color_count,
            canonical: true,
        }
    }

    /// The all-distinct coloring of `[n]`: every element its own color.
    ///
    /// This is the `n`-color rainbow-free witness behind the `rb = n + 1`
    /// convention when `[n]` has no solutions.
    pub fn identity(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        Ok(Coloring {
            assignment: (0..n).collect(),
            color_count: n,
            canonical: true,
        })
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    /// Number of distinct colors `r`.
    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// Color of element `x`, 1-based. Panics if `x` is outside `[1, n]`.
    pub fn color_of(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.n(), "element {x} outside [1, {}]", self.n());
        self.assignment[x - 1]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Relabel colors in order of first appearance, yielding the canonical
    /// restricted-growth form. Idempotent.
    pub fn canonicalize(&self) -> Coloring {
        if self.canonical {
            return self.clone();
        }
        Coloring {
            assignment: canonical_form(&self.assignment, self.color_count),
            color_count: self.color_count,
            canonical: true,
        }
    }

    fn canonical_key(&self) -> Cow<'_, [usize]> {
        if self.canonical {
            Cow::Borrowed(&self.assignment)
        } else {
            Cow::Owned(canonical_form(&self.assignment, self.color_count))
        }
    }

    /// First-occurrence positions `(s_0, ..., s_{r-1})`, 1-based: `s_i` is the
    /// least element with color `i`. Requires a canonical coloring, in which
    /// case the vector is strictly increasing and `s_0 = 1`.
    pub fn first_occurrences(&self) -> Result<Vec<usize>, Error> {
        if !self.canonical {
            return Err(Error::NotCanonical);
        }
        let mut occ = vec![0usize; self.color_count];
        for (idx, &c) in self.assignment.iter().enumerate() {
            if occ[c] == 0 {
                occ[c] = idx + 1;
            }
        }
        Ok(occ)
    }

    /// Color classes as sorted 1-based element lists, indexed by color.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.color_count];
        for (idx, &c) in self.assignment.iter().enumerate() {
            classes[c].push(idx + 1);
        }
        classes
    }

    /// Classes of the canonical form rendered like `{1,3,5} {2} {4}`.
    pub fn classes_string(&self) -> String {
        let canon = self.canonicalize();
        let mut out = String::new();
        for (i, class) in canon.color_classes().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push('{');
            for (j, v) in class.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&v.to_string());
            }
            out.push('}');
        }
        out
    }

    /// Serialize to the coloring file format: a header `n=<n> r=<r>` followed
    /// by the `n` colors, 1-based, space-separated on one line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} r={}\n", self.n(), self.color_count);
        for (i, &c) in self.assignment.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&(c + 1).to_string());
        }
        out.push('\n');
        out
    }

    /// Parse the coloring file format, validating the header against the
    /// body: exactly `n` colors, each in `1..=r`, and all of `1..=r` present.
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut fields = header.split_whitespace();
        let n = parse_header_field(fields.next(), "n")?;
        let r = parse_header_field(fields.next(), "r")?;
        if fields.next().is_some() {
            return Err(Error::Parse("header must be exactly `n=<n> r=<r>`".into()));
        }
        if n == 0 {
            return Err(Error::Parse("n must be at least 1".into()));
        }
        if r == 0 || r > n {
            return Err(Error::Parse(format!("r={r} outside [1, {n}]")));
        }
        let body = lines.collect::<Vec<_>>().join(" ");
        let mut assignment = Vec::with_capacity(n);
        for token in body.split_whitespace() {
            let c: usize = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad color token {token:?}")))?;
            if c == 0 || c > r {
                return Err(Error::Parse(format!("color {c} outside [1, {r}]")));
            }
            assignment.push(c - 1);
        }
        if assignment.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} colors, found {}",
                assignment.len()
            )));
        }
        let mut seen = vec![false; r];
        for &c in &assignment {
            seen[c] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::NotExact(format!(
                "color {} of {r} never used",
                missing + 1
            )));
        }
        Ok(Self::from_internal(assignment, r))
    }
}

fn parse_header_field(field: Option<&str>, name: &str) -> Result<usize, Error> {
    let field = field.ok_or_else(|| Error::Parse(format!("missing `{name}=` in header")))?;
    let value = field
        .strip_prefix(name)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected `{name}=<int>`, got {field:?}")))?;
    value
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer in `{field}`")))
}

fn is_restricted_growth(assignment: &[usize]) -> bool {
    let mut max_seen = 0usize;
    for (idx, &c) in assignment.iter().enumerate() {
        if idx == 0 {
            if c != 0 {
                return false;
            }
        } else if c > max_seen + 1 {
            return false;
        }
        max_seen = max_seen.max(c);
    }
    true
}

fn canonical_form(assignment: &[usize], color_count: usize) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut relabel = vec![UNSET; color_count];
    let mut next = 0usize;
    assignment
        .iter()
        .map(|&c| {
            if relabel[c] == UNSET {
                relabel[c] = next;
                next += 1;
            }
            relabel[c]
        })
        .collect()
}

impl PartialEq for Coloring {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Coloring {}

impl PartialOrd for Coloring {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coloring {
    /// Lexicographic order on canonical forms.
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl fmt::Display for Coloring {
    /// 1-based colors, space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &c) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", c + 1)?;
        }
        Ok(())
    }
}

impl Serialize for Coloring {
    /// Stored as the 1-based assignment vector.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.assignment.iter().map(|&c| c + 1).collect();
        one_based.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let one_based = Vec::<usize>::deserialize(deserializer)?;
        if one_based.iter().any(|&c| c == 0) {
            return Err(D::Error::custom("stored colors are 1-based"));
        }
        let zero_based: Vec<usize> = one_based.iter().map(|&c| c - 1).collect();
        Coloring::new(zero_based).map_err(D::Error::custom)
    }
}

/// How a search run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Complete,
    AbortedNodeLimit,
    AbortedTimeLimit,
}

impl SearchStatus {
    pub fn is_complete(&self) -> bool {
        matches!(self, SearchStatus::Complete)
    }
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SearchStatus::Complete => "complete",
            SearchStatus::AbortedNodeLimit => "aborted_node_limit",
            SearchStatus::AbortedTimeLimit => "aborted_time_limit",
        };
        write!(f, "{s}")
    }
}

/// Search effort counters. Excluded from determinism guarantees: node and
/// prune counts depend on the parallel schedule, wall time on the machine.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub prunes_by_rainbow: u64,
    pub prunes_by_bound: u64,
    pub wall_time: Duration,
}

/// Outcome of a rainbow-number computation for one `(n, k)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RbResult {
    pub n: usize,
    pub k: usize,
    /// `Some(max_rainbow_free_colors + 1)` when the search completed; `None`
    /// when aborted — an aborted search never claims an exact rainbow number.
    pub rb: Option<usize>,
    /// Maximum colors of a rainbow-free exact coloring when complete (equal
    /// to `n` when `[n]` has no solutions); otherwise the best certified
    /// lower bound found before the abort.
    pub max_rainbow_free_colors: usize,
    /// Number of canonical extremal colorings, when enumerated to completion.
    pub extremal_count: Option<u64>,
    /// A rainbow-free coloring attaining `max_rainbow_free_colors`; for
    /// complete runs this is the lexicographically-smallest canonical one.
    pub witness: Coloring,
    pub stats: SearchStats,
    pub status: SearchStatus,
}

/// Proven lower-bound data for one `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    /// Staircase threshold `L` (first fresh-color position of the staircase
    /// coloring); populated for `k >= 4` only.
    pub staircase_threshold: Option<usize>,
    /// Best proven lower bound on `rb([n], eq)`.
    pub general_lower: usize,
    /// Closed-form value when one applies (`k = 3`, `n >= 3` or `k = 4`,
    /// `n >= 5`).
    pub formula_value: Option<usize>,
    pub has_solutions: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(k: usize) -> Equation {
        Equation::new(k).unwrap()
    }

    fn coloring(labels: &[usize]) -> Coloring {
        Coloring::new(labels.to_vec()).unwrap()
    }

    fn sets(sols: &[Solution]) -> Vec<Vec<usize>> {
        sols.iter().map(|s| s.values().to_vec()).collect()
    }

    /// Independent oracle: filter all strictly-increasing k-subsets of [1, n]
    /// by the sum condition, via odometer enumeration.
    fn brute_solutions(k: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if n < k {
            return out;
        }
        let mut tuple: Vec<usize> = (1..=k).collect();
        loop {
            if tuple[..k - 1].iter().sum::<usize>() == tuple[k - 1] {
                out.push(tuple.clone());
            }
            // next increasing k-tuple in [1, n]
            let mut i = k;
            loop {
                if i == 0 {
                    out.sort();
                    return out;
                }
                i -= 1;
                if tuple[i] < n - (k - 1 - i) {
                    tuple[i] += 1;
                    for j in i + 1..k {
                        tuple[j] = tuple[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn equation_validation() {
        assert!(Equation::new(2).is_err());
        assert!(Equation::new(0).is_err());
        let e = eq(3);
        assert_eq!(e.k(), 3);
        assert_eq!(e.lhs_count(), 2);
        assert_eq!(e.min_solution_max(), 3);
        assert_eq!(e.to_string(), "x1+x2=x3");
        assert_eq!(eq(5).to_string(), "x1+x2+x3+x4=x5");
        assert_eq!(eq(5).min_solution_max(), 10);
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(sets(&enumerate_solutions(eq(3), 3)), vec![vec![1, 2, 3]]);
        assert!(enumerate_solutions(eq(4), 5).is_empty());
        assert_eq!(
            sets(&enumerate_solutions(eq(3), 5)),
            vec![vec![1, 2, 3], vec![1, 3, 4], vec![1, 4, 5], vec![2, 3, 5]]
        );
    }

    #[test]
    fn enumerate_matches_bruteforce() {
        for k in 3..=6 {
            for n in 1..=24 {
                let fast = sets(&enumerate_solutions(eq(k), n));
                let mut sorted = fast.clone();
                sorted.sort();
                assert_eq!(fast, sorted, "lexicographic order (k={k}, n={n})");
                assert_eq!(fast, brute_solutions(k, n), "content (k={k}, n={n})");
            }
        }
    }

    #[test]
    fn enumerate_empty_below_threshold() {
        for k in 3..=7 {
            let e = eq(k);
            let t = e.min_solution_max();
            assert!(enumerate_solutions(e, t - 1).is_empty());
            assert!(!enumerate_solutions(e, t).is_empty());
        }
    }

    #[test]
    fn solutions_with_max_examples() {
        assert_eq!(
            sets(&solutions_with_max(eq(3), 5, 5).unwrap()),
            vec![vec![1, 4, 5], vec![2, 3, 5]]
        );
        assert!(solutions_with_max(eq(3), 5, 2).unwrap().is_empty());
        assert_eq!(
            sets(&solutions_with_max(eq(4), 9, 9).unwrap()),
            vec![vec![1, 2, 6, 9], vec![1, 3, 5, 9], vec![2, 3, 4, 9]]
        );
        assert!(solutions_with_max(eq(3), 5, 6).is_err());
        assert!(solutions_with_max(eq(3), 5, 0).is_err());
    }

    #[test]
    fn solutions_with_max_partitions_enumeration() {
        for k in 3..=5 {
            for n in [6usize, 9, 12] {
                let mut unioned: Vec<Vec<usize>> = Vec::new();
                for m in 1..=n {
                    unioned.extend(sets(&solutions_with_max(eq(k), n, m).unwrap()));
                }
                unioned.sort();
                assert_eq!(unioned, sets(&enumerate_solutions(eq(k), n)));
            }
        }
    }

    #[test]
    fn solution_validation() {
        assert!(Solution::new(vec![1, 2, 3]).is_ok());
        assert_eq!(Solution::new(vec![3, 1, 2]).unwrap().values(), &[1, 2, 3]);
        assert!(Solution::new(vec![1, 2, 4]).is_err());
        assert!(Solution::new(vec![1, 1, 2]).is_err());
        assert!(Solution::new(vec![1, 2]).is_err());
        assert!(Solution::new(vec![0, 1, 1]).is_err());
        assert_eq!(Solution::new(vec![1, 2, 3]).unwrap().to_string(), "{1,2,3}");
    }

    #[test]
    fn rainbow_predicate() {
        // (1,2,1,3,1): elements 1,3,5 share a color, 2 and 4 are alone.
        let c = coloring(&[1, 2, 1, 3, 1]);
        for s in enumerate_solutions(eq(3), 5) {
            assert!(!is_rainbow(&c, &s).unwrap(), "{s} should not be rainbow");
        }
        assert!(find_rainbow_solution(&c, eq(3)).is_none());

        let all_distinct = Coloring::identity(5).unwrap();
        let s123 = Solution::new(vec![1, 2, 3]).unwrap();
        assert!(is_rainbow(&all_distinct, &s123).unwrap());
        assert_eq!(
            find_rainbow_solution(&all_distinct, eq(3)).unwrap().values(),
            &[1, 2, 3]
        );

        // Out-of-domain solution values are rejected.
        let small = coloring(&[0, 0, 1]);
        let s145 = Solution::new(vec![1, 4, 5]).unwrap();
        assert!(is_rainbow(&small, &s145).is_err());
    }

    #[test]
    fn coloring_label_compression() {
        let c = coloring(&[2, 1, 2]);
        assert_eq!(c.assignment(), &[1, 0, 1]);
        assert_eq!(c.color_count(), 2);
        assert!(!c.is_canonical());
        assert_eq!(c.canonicalize().assignment(), &[0, 1, 0]);

        let c = coloring(&[3, 1, 2, 3]);
        assert_eq!(c.canonicalize().assignment(), &[0, 1, 2, 0]);

        assert!(Coloring::new(vec![]).is_err());
    }

    #[test]
    fn canonicalize_idempotent_and_partition_preserving() {
        let c = coloring(&[5, 9, 5, 0, 9]);
        let canon = c.canonicalize();
        assert!(canon.is_canonical());
        assert_eq!(canon.assignment(), canon.canonicalize().assignment());
        assert_eq!(c.color_classes(), {
            // same partition up to class order
            let mut a = c.color_classes();
            let mut b = canon.color_classes();
            a.sort();
            b.sort();
            assert_eq!(a, b);
            c.color_classes()
        });
        assert_eq!(c, canon, "equality is partition equality");
    }

    #[test]
    fn first_occurrences_requires_canonical() {
        let c = coloring(&[1, 0, 1]);
        assert!(matches!(c.first_occurrences(), Err(Error::NotCanonical)));
        assert_eq!(c.canonicalize().first_occurrences().unwrap(), vec![1, 2]);
        assert_eq!(
            Coloring::identity(4).unwrap().first_occurrences().unwrap(),
            vec![1, 2, 3, 4]
        );
    }

    #[test]
    fn classes_rendering() {
        let c = coloring(&[0, 1, 0, 2, 0]);
        assert_eq!(c.classes_string(), "{1,3,5} {2} {4}");
        assert_eq!(c.to_string(), "1 2 1 3 1");
    }

    #[test]
    fn ordering_is_canonical_lexicographic() {
        let a = coloring(&[0, 0, 1]);
        let b = coloring(&[0, 1, 0]);
        let b_relabeled = coloring(&[7, 3, 7]); // same partition as b
        assert!(a < b);
        assert_eq!(b, b_relabeled);
        let mut v = vec![b.clone(), a.clone(), b_relabeled.clone()];
        v.sort();
        assert_eq!(v, vec![a, b_relabeled, b]);
    }

    #[test]
    fn text_round_trip() {
        let c = coloring(&[0, 1, 0, 2, 0, 1, 0, 3]);
        let text = c.to_text();
        assert_eq!(text, "n=8 r=4\n1 2 1 3 1 2 1 4\n");
        let parsed = Coloring::from_text(&text).unwrap();
        assert_eq!(parsed.assignment(), c.assignment());
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn text_parse_rejections() {
        assert!(Coloring::from_text("").is_err());
        assert!(Coloring::from_text("n=3\n1 2 1\n").is_err());
        assert!(Coloring::from_text("n=3 r=2\n1 2\n").is_err());
        assert!(Coloring::from_text("n=3 r=2\n1 2 3\n").is_err());
        assert!(Coloring::from_text("n=3 r=2\n1 2 x\n").is_err());
        assert!(Coloring::from_text("n=3 r=0\n\n").is_err());
        assert!(Coloring::from_text("n=0 r=1\n\n").is_err());
        // exactness: r claims 3 colors, only 2 used
        assert!(matches!(
            Coloring::from_text("n=3 r=3\n1 2 1\n"),
            Err(Error::NotExact(_))
        ));
        // non-canonical but exact files are fine
        let c = Coloring::from_text("n=3 r=2\n2 1 2\n").unwrap();
        assert!(!c.is_canonical());
        assert_eq!(c.canonicalize().assignment(), &[0, 1, 0]);
    }

    #[test]
    fn serde_coloring_one_based() {
        let c = coloring(&[0, 1, 0, 2]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "[1,2,1,3]");
        let back: Coloring = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Coloring>("[0,1]").is_err());
    }

    #[test]
    fn status_strings() {
        assert_eq!(SearchStatus::Complete.to_string(), "complete");
        assert_eq!(SearchStatus::AbortedNodeLimit.to_string(), "aborted_node_limit");
        assert_eq!(SearchStatus::AbortedTimeLimit.to_string(), "aborted_time_limit");
        let j = serde_json::to_string(&SearchStatus::AbortedTimeLimit).unwrap();
        assert_eq!(j, "\"aborted_time_limit\"");
    }
}
