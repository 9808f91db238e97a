//! Builds every catalog entry and prints its invariants.

use gemkit::complex;
use gemkit::generators::{catalog, catalog_entries_all};

fn main() -> gemkit::Result<()> {
    for e in catalog_entries_all() {
        let p = e.parameter.as_ref().map(|r| r.min.max(6) as usize);
        let g = catalog(&e.name, p)?;
        println!(
            "{:<14} {:<8} order {:>3}, bipartite {:<5}, {}",
            e.name,
            e.surface,
            g.order(),
            g.is_bipartite(),
            complex::homology(&g)?
        );
    }
    Ok(())
}
