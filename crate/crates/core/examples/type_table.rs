//! Admissible semi-equivelar types for a given Euler characteristic.

use gemkit::search::enumerate_embedding_types;

fn main() {
    let chi: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    for t in enumerate_embedding_types(chi, 24) {
        println!(
            "{:<12} degree {} order {}",
            t.condensed(),
            t.degree,
            t.order
        );
    }
}
