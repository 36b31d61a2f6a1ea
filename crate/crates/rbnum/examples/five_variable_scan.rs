//! Exact data for x1+x2+x3+x4 = x5, where no closed form is known: the
//! search oracle settles rb, and the extremal census shows where the
//! optimum is unique.
//!
//! Usage: cargo run --example five_variable_scan [n_min] [n_max] [threads]
//!        (defaults: 9 13 1)

use rbnum::constructions::general_lower_bound;
use rbnum::{enumerate_extremal, Equation, SearchLimits};

fn main() {
    let mut args = std::env::args().skip(1);
    let n_min: usize = args
        .next()
        .map(|a| a.parse().expect("n_min must be a positive integer"))
        .unwrap_or(9);
    let n_max: usize = args
        .next()
        .map(|a| a.parse().expect("n_max must be a positive integer"))
        .unwrap_or(13);
    let threads: usize = args
        .next()
        .map(|a| a.parse().expect("threads must be a positive integer"))
        .unwrap_or(1);

    let eq = Equation::new(5).expect("k = 5");
    let limits = SearchLimits {
        parallel_width: threads,
        ..SearchLimits::default()
    };

    println!("exact values for {eq} (smallest n with any solution: {})", eq.min_solution_max());
    println!(
        "{:>4} {:>4} {:>7} {:>10} {:>8} {:>12}",
        "n", "rb", "lower", "max colors", "count", "nodes"
    );

    for n in n_min..=n_max {
        let enumeration = enumerate_extremal(n, eq, &limits).expect("search runs");
        assert!(enumeration.complete, "searches at this size finish quickly");
        let rb = enumeration.rb.expect("complete search settles rb");
        let lower = general_lower_bound(n, 5).expect("bound").general_lower;

        println!(
            "{:>4} {:>4} {:>7} {:>10} {:>8} {:>12}",
            n,
            rb,
            lower,
            enumeration.max_rainbow_free_colors,
            enumeration.colorings.len(),
            enumeration.stats.nodes_visited
        );

        if enumeration.colorings.len() == 1 {
            println!(
                "       unique optimum: {}",
                enumeration.colorings[0].classes_string()
            );
        }
    }

    println!();
    println!("the proven lower bound tracks the oracle closely but is not always tight.");
}
