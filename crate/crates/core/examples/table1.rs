//! Ranks the ten last US presidents by Web hit count and prints the
//! positional code and complexity of each.

use std::path::Path;

use simplicity::knowledge::load_frequency_csv;

fn main() {
    let csv = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/table1.csv");
    let presidents = load_frequency_csv("presidents", &csv).expect("table1.csv");

    println!("{:<16} {:>10} {:<5} complexity", "president", "hits", "code");
    for (rank, entry, code, bits) in presidents.table() {
        println!(
            "{:<16} {:>10} {:<5} {bits}   (rank {})",
            entry.item,
            entry.count,
            code.to_string(),
            rank.0
        );
    }
}
