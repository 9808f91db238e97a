//! Euler characteristic of every regular embedding of a few gems, and the
//! resulting regular genus.

use gemkit::embedding::{self, all_cyclic_permutations};
use gemkit::generators::{rp2_sum_gem, standard_sphere, torus_sum_gem};

fn main() -> gemkit::Result<()> {
    let gems = [
        ("S^3", standard_sphere(3)?),
        ("#3 RP^2", rp2_sum_gem(3)?),
        ("#2 T^2", torus_sum_gem(2)?),
    ];
    for (name, g) in gems {
        println!("{name} (order {})", g.order());
        for eps in all_cyclic_permutations(g.dimension()) {
            let chi = embedding::euler_characteristic(&g, &eps)?;
            println!("  {eps}: chi {chi}, rho {}", embedding::rho(chi));
        }
        println!("  regular genus {}", embedding::regular_genus(&g)?.rho);
    }
    Ok(())
}
