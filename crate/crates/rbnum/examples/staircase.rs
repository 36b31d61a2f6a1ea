//! The staircase coloring: the general rainbow-free construction for
//! k >= 4 variables (x1 + ... + x(k-1) = xk).
//!
//! One color covers the "step" 1..L-1 and every element from L up gets a
//! fresh color, giving n - L + 2 colors total. The threshold L is the
//! largest first element among minimum-maximum solution tuples, so every
//! solution is forced to reuse the step color at least twice. The coloring
//! witnesses rb([n], eq) >= n - L + 3.
//!
//! Usage: cargo run --example staircase [n] [k]    (default n = 9, k = 4)

use rbnum::constructions::{bounds_report, staircase_coloring, staircase_threshold};
use rbnum::{find_rainbow_solution, Equation};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args
        .next()
        .map(|a| a.parse().expect("n must be a positive integer"))
        .unwrap_or(9);
    let k: usize = args
        .next()
        .map(|a| a.parse().expect("k must be an integer >= 4"))
        .unwrap_or(4);
    assert!(k >= 4, "the staircase construction needs k >= 4");

    let eq = Equation::new(k).unwrap();
    println!("staircase coloring of [1, {n}] for {eq}");
    match staircase_coloring(n, k) {
        Ok(coloring) => {
            let threshold = staircase_threshold(n, k - 2).unwrap();
            if n <= 64 {
                println!("  colors (1-based): {coloring}");
                println!("  classes:          {}", coloring.classes_string());
            }
            println!("  threshold L = {threshold} (step covers 1..={})", threshold.max(1) - 1);
            println!(
                "  color count: {} (= n - L + 2 = {} - {} + 2)",
                coloring.color_count(),
                n,
                threshold
            );
            match find_rainbow_solution(&coloring, eq) {
                None => println!("  rainbow-free: true"),
                Some(s) => println!("  rainbow-free: FALSE — rainbow solution {s}"),
            }
            let bounds = bounds_report(n, k).unwrap();
            println!("  witnessed lower bound: rb >= {}", bounds.general_lower);
            if let Some(formula) = bounds.formula_value {
                println!("  closed form (k = 4):   rb  = {formula}");
            }
        }
        Err(e) => println!("  no construction: {e}"),
    }

    println!("\nthresholds and color counts across k:");
    println!("  {:>4} {:>3} {:>4} {:>8} {:>9}", "n", "k", "L", "colors", "rb lower");
    for kk in 4..=6usize {
        let smallest = kk * (kk - 1) / 2;
        for nn in [smallest, smallest + 3, smallest + 8, smallest + 15] {
            let c = staircase_coloring(nn, kk).unwrap();
            let l = staircase_threshold(nn, kk - 2).unwrap();
            let bounds = bounds_report(nn, kk).unwrap();
            println!(
                "  {:>4} {:>3} {:>4} {:>8} {:>9}",
                nn,
                kk,
                l,
                c.color_count(),
                bounds.general_lower
            );
        }
    }
}
