//! Produce the machine-readable sweep table straight from the library:
//! one row per n, in the same CSV (or JSON) shape the command-line
//! `sweep` subcommand emits.
//!
//! Usage: cargo run --example sweep_csv [n_min] [n_max] [k] [csv|json]
//!        (defaults: 3 16 3 csv)

use rbnum::report::{rows_to_csv, rows_to_json, SweepRow};
use rbnum::{compute_rb, Equation, SearchLimits};

fn main() {
    let mut args = std::env::args().skip(1);
    let n_min: usize = args
        .next()
        .map(|a| a.parse().expect("n_min must be a positive integer"))
        .unwrap_or(3);
    let n_max: usize = args
        .next()
        .map(|a| a.parse().expect("n_max must be a positive integer"))
        .unwrap_or(16);
    let k: usize = args
        .next()
        .map(|a| a.parse().expect("k must be an integer >= 3"))
        .unwrap_or(3);
    let format = args.next().unwrap_or_else(|| "csv".to_string());

    let eq = Equation::new(k).expect("k must be at least 3");
    let limits = SearchLimits::default();

    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let result = compute_rb(n, eq, &limits).expect("search runs");
        rows.push(SweepRow::from_result(&result).expect("row"));
    }

    match format.as_str() {
        "csv" => print!("{}", rows_to_csv(&rows)),
        "json" => print!("{}", rows_to_json(&rows)),
        other => {
            eprintln!("unknown format {other:?}; use csv or json");
            std::process::exit(1);
        }
    }

    eprintln!("swept {} value(s) of n for k = {k}", rows.len());
}
