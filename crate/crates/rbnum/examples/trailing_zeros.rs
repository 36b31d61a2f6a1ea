//! The trailing-zeros coloring: the extremal rainbow-free construction for
//! the three-variable equation x1 + x2 = x3.
//!
//! Element x receives the number of trailing zero bits of x as its color, so
//! color i first appears at position 2^i and the coloring uses
//! floor(log2 n) + 1 colors. In any solution x1 + x2 = x3 with distinct
//! values, the two smallest trailing-zero counts are equal, so no solution
//! is rainbow — which makes rb([n]) = floor(log2 n) + 2 an upper-bound-tight
//! statement.
//!
//! Usage: cargo run --example trailing_zeros [n]    (default n = 32)

use rbnum::constructions::{rb_formula_k3, satisfies_doubling_bounds, trailing_zeros_coloring};
use rbnum::{find_rainbow_solution, Equation};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be a positive integer"))
        .unwrap_or(32);
    assert!(n >= 1, "n must be at least 1");

    let eq = Equation::new(3).unwrap();
    let coloring = trailing_zeros_coloring(n).unwrap();

    println!("trailing-zeros coloring of [1, {n}] for {eq}");
    if n <= 64 {
        println!("  colors (1-based): {coloring}");
        println!("  classes:          {}", coloring.classes_string());
    }
    println!(
        "  color count: {} (= floor(log2 {n}) + 1 = {})",
        coloring.color_count(),
        n.ilog2() + 1
    );
    println!(
        "  first occurrences (powers of two): {:?}",
        coloring.first_occurrences().unwrap()
    );
    println!(
        "  doubling bounds on first occurrences: {}",
        if satisfies_doubling_bounds(&coloring).unwrap() { "satisfied" } else { "violated" }
    );
    match find_rainbow_solution(&coloring, eq) {
        None => println!("  rainbow-free: true (checked every solution in [1, {n}])"),
        Some(s) => println!("  rainbow-free: FALSE — rainbow solution {s}"),
    }

    if n >= 3 {
        println!(
            "\nwitnessed lower bound: rb([{n}]) >= {} + 1 = {}",
            coloring.color_count(),
            coloring.color_count() + 1
        );
        println!(
            "closed form:           rb([{n}]) = {}",
            rb_formula_k3(n).unwrap()
        );
    }

    println!("\ncolor counts as n doubles:");
    println!("  {:>6} {:>7}", "n", "colors");
    let mut m = 1usize;
    while m <= n.max(256) {
        let c = trailing_zeros_coloring(m).unwrap();
        println!("  {:>6} {:>7}", m, c.color_count());
        m *= 2;
    }
}
