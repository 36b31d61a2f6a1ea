//! Enumerate extremal colorings for x1+x2+x3 = x4 and watch the parity
//! pattern: for odd n the maximum-color rainbow-free coloring is unique,
//! and from n = 7 on it is exactly the staircase construction.
//!
//! Usage: cargo run --example extremal_uniqueness [n_max]
//!        (default: n_max = 13)

use rbnum::constructions::staircase_coloring;
use rbnum::{enumerate_extremal, Equation, SearchLimits};

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n_max must be a positive integer"))
        .unwrap_or(13);

    let eq = Equation::new(4).expect("k = 4");
    let limits = SearchLimits::default();

    println!("extremal rainbow-free colorings for {eq}");
    println!("{:>4} {:>4} {:>10} {:>8}  note", "n", "rb", "max colors", "count");

    for n in 5..=n_max {
        let enumeration = enumerate_extremal(n, eq, &limits).expect("search runs");
        assert!(enumeration.complete, "searches at this size finish quickly");

        let count = enumeration.colorings.len();
        let rb = enumeration.rb.expect("complete search settles rb");

        let mut note = String::new();
        if count == 1 {
            note.push_str("unique");
            if n >= 7 {
                let stair = staircase_coloring(n, 4).expect("staircase");
                if enumeration.colorings[0] == stair {
                    note.push_str(", equals the staircase coloring");
                } else {
                    note.push_str(", but NOT the staircase coloring");
                }
            }
        } else {
            note.push_str("multiple optima");
        }

        println!(
            "{:>4} {:>4} {:>10} {:>8}  {}",
            n, rb, enumeration.max_rainbow_free_colors, count, note
        );

        if count == 1 && n <= 9 {
            println!("       classes: {}", enumeration.colorings[0].classes_string());
        }
    }

    println!();
    println!("odd n gives a single optimum; even n leaves room to trade classes.");
}
