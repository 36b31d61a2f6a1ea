//! The coloring text format end to end: write a coloring to a file,
//! read it back, confirm the round trip is byte-exact, and show what
//! the parser rejects.
//!
//! Usage: cargo run --example coloring_files

use rbnum::constructions::trailing_zeros_coloring;
use rbnum::Coloring;

fn main() {
    let n = 20;
    let coloring = trailing_zeros_coloring(n).expect("construction");

    let text = coloring.to_text();
    println!("serialized form of the trailing-zeros coloring on [1, {n}]:");
    print!("{text}");
    println!();

    // Round trip through an actual file in the platform temp directory.
    let path = std::env::temp_dir().join("rbnum-example-coloring.txt");
    std::fs::write(&path, &text).expect("write temp file");
    let read_back = std::fs::read_to_string(&path).expect("read temp file");
    let parsed = Coloring::from_text(&read_back).expect("parse");
    std::fs::remove_file(&path).ok();

    assert_eq!(parsed, coloring, "parsed coloring equals the original");
    assert_eq!(
        parsed.to_text(),
        text,
        "re-serializing reproduces the bytes exactly"
    );
    println!("round trip through {} is byte-exact", path.display());
    println!("parsed classes: {}", parsed.classes_string());
    println!();

    // What the parser refuses, and why.
    let rejects: &[(&str, &str)] = &[
        ("", "empty input"),
        ("n=3 r=2\n1 2\n", "wrong number of values for n"),
        ("n=3 r=2\n1 1 1\n", "claims 2 colors but uses 1"),
        ("n=3 r=2\n1 2 5\n", "color label above r"),
        ("n=3 r=2\n1 two 2\n", "non-numeric value"),
        ("r=2 n=3\n1 2 1\n", "header fields out of order"),
    ];
    println!("inputs the parser rejects:");
    for (input, why) in rejects {
        let err = Coloring::from_text(input).expect_err("must be rejected");
        println!("  {:<20} ({}): {}", format!("{input:?}"), why, err);
    }
}
