//! The pruned search against a naive full set-partition enumeration, plus
//! determinism and abort behavior. Small sizes here; the acceptance suite
//! covers the full advertised ranges.

mod common;

use rbnum::{
    compute_rb, enumerate_extremal, max_rainbow_free, verify_unique_extremal, Equation,
    SearchLimits, SearchStatus,
};

fn eq(k: usize) -> Equation {
    Equation::new(k).unwrap()
}

fn listing(n: usize, k: usize, limits: &SearchLimits) -> (usize, Vec<Vec<usize>>) {
    let e = enumerate_extremal(n, eq(k), limits).unwrap();
    assert!(e.complete, "n={n} k={k} should complete");
    let raw = e
        .colorings
        .iter()
        .map(|c| c.assignment().to_vec())
        .collect();
    (e.max_rainbow_free_colors, raw)
}

#[test]
fn search_equals_naive_enumeration_small() {
    let limits = SearchLimits::default();
    for k in 3..=5 {
        for n in 1..=8 {
            let naive = common::naive_max_and_extremal(n, k);
            let searched = listing(n, k, &limits);
            assert_eq!(searched, naive, "n={n} k={k}");
        }
    }
}

#[test]
fn witness_is_lexicographically_first_extremal() {
    let limits = SearchLimits::default();
    for k in 3..=4 {
        for n in 3..=8 {
            let (_, naive_extremal) = common::naive_max_and_extremal(n, k);
            let result = compute_rb(n, eq(k), &limits).unwrap();
            assert_eq!(
                result.witness.assignment(),
                &naive_extremal[0][..],
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn parallel_schedule_does_not_change_anything_deterministic() {
    for &(n, k) in &[(12, 4), (13, 3), (12, 5)] {
        let mut widths = Vec::new();
        for width in [1usize, 2, 4, 8] {
            let limits = SearchLimits {
                parallel_width: width,
                enumerate_all_extremal: true,
                ..SearchLimits::default()
            };
            let r = compute_rb(n, eq(k), &limits).unwrap();
            let e = enumerate_extremal(n, eq(k), &limits).unwrap();
            widths.push((
                r.rb,
                r.max_rainbow_free_colors,
                r.extremal_count,
                r.witness.assignment().to_vec(),
                e.colorings.len(),
            ));
        }
        assert!(
            widths.windows(2).all(|w| w[0] == w[1]),
            "(n, k) = ({n}, {k}): {widths:?}"
        );
    }
}

#[test]
fn five_variable_frozen_census() {
    let limits = SearchLimits::default();
    // single solution 1+2+3+4 = 10: one merged pair among its 5 values
    assert_eq!(listing(10, 5, &limits).1.len(), 10);
    // {1, 2} is inside every solution of [12]; no other pair is
    assert!(verify_unique_extremal(12, eq(5), &limits).unwrap());
    // [13] loses single-merge extremality entirely
    let r13 = compute_rb(13, eq(5), &limits).unwrap();
    assert_eq!(r13.rb, Some(12));
    assert!(!verify_unique_extremal(13, eq(5), &limits).unwrap());
}

#[test]
fn aborted_runs_certify_without_claiming() {
    let limits = SearchLimits {
        max_nodes: Some(200),
        ..SearchLimits::default()
    };
    let r = compute_rb(14, eq(4), &limits).unwrap();
    assert_eq!(r.status, SearchStatus::AbortedNodeLimit);
    assert_eq!(r.rb, None);
    let o = max_rainbow_free(14, eq(4), &limits).unwrap();
    assert_eq!(o.status, SearchStatus::AbortedNodeLimit);
    assert_eq!(o.witness.color_count(), o.max_colors);
}
