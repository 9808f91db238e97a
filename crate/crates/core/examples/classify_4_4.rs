//! Classification of gems whose regular embeddings have type (4,4,4,4),
//! by order. Order 16 takes about a minute in release builds.

use gemkit::search::{classify_4_4, CLASSIFY_BUDGET};

fn main() -> gemkit::Result<()> {
    let order_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(16);
    let r = classify_4_4(order_max, CLASSIFY_BUDGET)?;
    for s in &r.per_order {
        println!(
            "order {:>2}: {} gems, {} bipartite, {} bipartite manifolds, {} nonbipartite manifolds",
            s.order, s.hits, s.bipartite, s.bipartite_manifolds, s.nonbipartite_manifolds
        );
    }
    for g in r.gems.iter().filter(|g| g.is_manifold()) {
        println!("  order {} lens {:?}: {}", g.order, g.lens, g.homology);
    }
    println!(
        "bipartite manifolds are lens spaces: {}, no nonbipartite manifold: {}, no S^2 x S^1: {}",
        r.bipartite_manifolds_are_lens, r.no_nonbipartite_manifold, r.no_sphere_times_circle
    );
    Ok(())
}
