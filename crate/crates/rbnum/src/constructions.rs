//! Explicit rainbow-free colorings, closed forms, and proven lower bounds.
//!
//! Everything here is integer arithmetic: `⌊log2 n⌋` comes from the bit
//! length, ceiling divisions are `(a + b - 1) / b` on nonnegative operands.

use crate::model::{BoundsReport, Coloring, Equation, Error};

/// Color each `x` in `[1, n]` by the number of trailing zero bits of `x`.
///
/// Rainbow-free for the three-variable equation: in any solution `a + b = c`,
/// either `a` and `b` share their trailing-zeros count, or `c` inherits the
/// smaller of the two. Uses exactly `⌊log2 n⌋ + 1` colors (one per power of
/// two up to `n`) and is canonical with first occurrences `1, 2, 4, 8, ...`.
pub fn trailing_zeros_coloring(n: usize) -> Result<Coloring, Error> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let assignment = (1..=n).map(|x| x.trailing_zeros() as usize).collect();
    Ok(Coloring::from_canonical_unchecked(assignment))
}

/// Largest possible smallest element among strictly-increasing tuples of
/// `tuple_len` values in `[1, n]` that reach sum `>= n` while keeping their
/// largest element minimal.
///
/// Closed form `⌈(2n - t(t-1)) / (2t)⌉` for `t = tuple_len`, clamped to 1
/// when `2n <= t(t-1)` (the smallest element is at least 1 by membership).
/// This is the staircase threshold `L` when `t = k - 2`.
pub fn staircase_threshold(n: usize, tuple_len: usize) -> Result<usize, Error> {
    if tuple_len < 2 {
        return Err(Error::TupleTooShort(tuple_len));
    }
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let t = tuple_len as i64;
    let num = 2 * n as i64 - t * (t - 1);
    if num <= 0 {
        return Ok(1);
    }
    Ok(((num + 2 * t - 1) / (2 * t)) as usize)
}

/// The staircase coloring of `[1, n]` for `k >= 4`: one shared color on
/// `{1, ..., L-1}` and a fresh color on each of `L, L+1, ..., n`, where
/// `L` is [`staircase_threshold`]`(n, k - 2)`.
///
/// Rainbow-free with `n - L + 2` colors: a rainbow solution could repeat the
/// shared color at most once, so at least `k - 2` of its summands would be
/// `>= L` — but any `k - 2` distinct values `>= L` already sum past what the
/// threshold allows, pushing the solution's maximum beyond `n`.
///
/// Errors when `[n]` has no solutions (then `rb = n + 1` and the all-distinct
/// [`Coloring::identity`] is the relevant witness instead).
pub fn staircase_coloring(n: usize, k: usize) -> Result<Coloring, Error> {
    if k < 4 {
        return Err(Error::StaircaseNeedsK4(k));
    }
    let eq = Equation::new(k)?;
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    if !eq.has_solutions(n) {
        return Err(Error::NoSolutions { n });
    }
    let threshold = staircase_threshold(n, k - 2)?;
    debug_assert!(threshold >= 2, "solutions exist, so the shared block is nonempty");
    let assignment = (1..=n)
        .map(|x| if x < threshold { 0 } else { x - threshold + 1 })
        .collect();
    Ok(Coloring::from_canonical_unchecked(assignment))
}

/// `rb([n], x1+x2=x3) = ⌊log2 n⌋ + 2` for `n >= 3`.
pub fn rb_formula_k3(n: usize) -> Result<usize, Error> {
    if n < 3 {
        return Err(Error::FormulaOutOfRange { n, min_n: 3 });
    }
    Ok(n.ilog2() as usize + 2)
}

/// `rb([n], x1+x2+x3=x4) = ⌊(n + 7) / 2⌋` for `n >= 5`.
pub fn rb_formula_k4(n: usize) -> Result<usize, Error> {
    if n < 5 {
        return Err(Error::FormulaOutOfRange { n, min_n: 5 });
    }
    Ok((n + 7) / 2)
}

/// Proven lower bound on `rb([n], eq)` for `k >= 4`:
/// `n - L + 3` when `[n]` has solutions (the staircase coloring plus one),
/// `n + 1` otherwise.
pub fn general_lower_bound(n: usize, k: usize) -> Result<BoundsReport, Error> {
    if k < 4 {
        // For k = 3 use rb_formula_k3 / bounds_report.
        return Err(Error::StaircaseNeedsK4(k));
    }
    let eq = Equation::new(k)?;
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let threshold = staircase_threshold(n, k - 2)?;
    let has_solutions = eq.has_solutions(n);
    let general_lower = if has_solutions { n - threshold + 3 } else { n + 1 };
    let formula_value = if k == 4 { rb_formula_k4(n).ok() } else { None };
    Ok(BoundsReport {
        n,
        k,
        staircase_threshold: Some(threshold),
        general_lower,
        formula_value,
        has_solutions,
    })
}

/// Bounds for any `k >= 3`: dispatches to the closed form for `k = 3` (where
/// it is exact, hence also the best lower bound) and to
/// [`general_lower_bound`] for `k >= 4`.
pub fn bounds_report(n: usize, k: usize) -> Result<BoundsReport, Error> {
    if k >= 4 {
        return general_lower_bound(n, k);
    }
    let eq = Equation::new(k)?;
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let has_solutions = eq.has_solutions(n);
    let formula_value = rb_formula_k3(n).ok();
    let general_lower = if has_solutions {
        formula_value.expect("solutions imply n >= 3")
    } else {
        n + 1
    };
    Ok(BoundsReport {
        n,
        k,
        staircase_threshold: None,
        general_lower,
        formula_value,
        has_solutions,
    })
}

/// Growth bounds satisfied by every canonical rainbow-free coloring for the
/// three-variable equation: consecutive first occurrences at least double
/// (`s_{i+1} >= 2 s_i`), hence `s_i >= 2^i`.
///
/// Requires a canonical coloring. A `false` verdict certifies that no
/// rainbow-free coloring has this first-occurrence vector.
pub fn satisfies_doubling_bounds(coloring: &Coloring) -> Result<bool, Error> {
    let occ = coloring.first_occurrences()?;
    for (i, &s) in occ.iter().enumerate() {
        let floor = match 1usize.checked_shl(i as u32) {
            Some(f) => f,
            None => return Ok(false),
        };
        if s < floor {
            return Ok(false);
        }
    }
    Ok(occ.windows(2).all(|w| w[1] >= 2 * w[0]))
}
