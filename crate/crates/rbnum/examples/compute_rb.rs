//! One full search-oracle run: the exact rainbow number for a single
//! (n, k), with witness, extremal count, and effort statistics.
//!
//! Usage: cargo run --example compute_rb [n] [k] [threads]
//!        (defaults: n = 14, k = 3, threads = 1)

use rbnum::constructions::bounds_report;
use rbnum::{compute_rb, Equation, SearchLimits};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args
        .next()
        .map(|a| a.parse().expect("n must be a positive integer"))
        .unwrap_or(14);
    let k: usize = args
        .next()
        .map(|a| a.parse().expect("k must be an integer >= 3"))
        .unwrap_or(3);
    let threads: usize = args
        .next()
        .map(|a| a.parse().expect("threads must be a positive integer"))
        .unwrap_or(1);

    let eq = Equation::new(k).expect("k must be at least 3");
    let limits = SearchLimits {
        enumerate_all_extremal: true,
        parallel_width: threads,
        ..SearchLimits::default()
    };

    println!("searching rb([{n}], {eq}) with {threads} thread(s)...");
    let result = compute_rb(n, eq, &limits).expect("search runs");

    println!("  status: {}", result.status);
    match result.rb {
        Some(rb) => println!("  rb = {rb}"),
        None => println!(
            "  rb not settled; certified lower bound rb >= {}",
            result.max_rainbow_free_colors + 1
        ),
    }
    println!(
        "  max rainbow-free colors = {}",
        result.max_rainbow_free_colors
    );
    println!("  witness (lexicographically first): {}", result.witness);
    println!("  witness classes: {}", result.witness.classes_string());
    if let Some(count) = result.extremal_count {
        println!("  extremal colorings with that many colors: {count}");
    }

    let bounds = bounds_report(n, k).expect("bounds");
    match bounds.formula_value {
        Some(f) => println!("  closed form: rb = {f}"),
        None => println!("  closed form: none applies for this (n, k)"),
    }
    println!("  proven lower bound: rb >= {}", bounds.general_lower);

    println!(
        "  effort: {} nodes, {} rainbow prunes, {} bound prunes, {} ms",
        result.stats.nodes_visited,
        result.stats.prunes_by_rainbow,
        result.stats.prunes_by_bound,
        result.stats.wall_time.as_millis()
    );
}
