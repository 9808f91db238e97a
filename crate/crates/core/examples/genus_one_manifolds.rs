//! Genus-one gems of sphere bundles over the circle in dimensions 3 to 6.

use gemkit::complex;
use gemkit::embedding;
use gemkit::generators::sphere_times_circle_gem;

fn main() -> gemkit::Result<()> {
    for d in 3..=6 {
        for twisted in [false, true] {
            let g = sphere_times_circle_gem(d, twisted)?;
            println!(
                "d={d} twisted={twisted}: order {}, regular genus {}, {}",
                g.order(),
                embedding::regular_genus(&g)?.rho,
                complex::homology(&g)?
            );
        }
    }
    Ok(())
}
