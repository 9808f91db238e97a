//! Lens space gems L(p,q) built from k copies of a 2p-cycle, with their
//! homology and manifold verdict.

use gemkit::complex;
use gemkit::embedding;
use gemkit::generators::lens_gem;

fn main() -> gemkit::Result<()> {
    for (p, q, k) in [(1, 0, 2), (2, 1, 2), (3, 1, 2), (5, 2, 2), (5, 1, 4)] {
        let g = lens_gem(p, q, k)?;
        let h = complex::homology(&g)?;
        let rho = embedding::regular_genus(&g)?.rho;
        println!(
            "L({p},{q}) k={k}: order {}, contracted {}, regular genus {rho}, {h}, {}",
            g.order(),
            g.is_contracted()?,
            complex::manifold_check(&g)?
        );
    }
    Ok(())
}
