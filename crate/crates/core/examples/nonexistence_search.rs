//! Exhaustive search showing that no 12-vertex gem realizes the type
//! (6,6,4) on the projective plane, while order 24 gives a sphere.

use gemkit::search::{find_gems, SearchSpec};

fn main() -> gemkit::Result<()> {
    let mut spec = SearchSpec::signature(3, 12, &[6, 6, 4]);
    spec.chi = Some(1);
    let r = find_gems(&spec)?;
    println!(
        "order 12, chi 1: {} hits, exhaustive {}, {} nodes",
        r.hit_count, r.exhaustive, r.nodes
    );

    let mut spec = SearchSpec::signature(3, 24, &[6, 6, 4]);
    spec.chi = Some(2);
    spec.limit = Some(1);
    let r = find_gems(&spec)?;
    for h in &r.hits {
        println!(
            "order 24, chi 2: bipartite {}, type {:?}",
            h.bipartite, h.signature
        );
    }
    Ok(())
}
