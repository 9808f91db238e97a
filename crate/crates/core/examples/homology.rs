//! Cellular homology of the pseudo-complex K(G) via Smith normal form.

use gemkit::complex::{self, PseudoComplex};
use gemkit::generators::{catalog, lens_gem, rp2_sum_gem, sphere_times_circle_gem};

fn main() -> gemkit::Result<()> {
    let gems = [
        ("L(7,2)", lens_gem(7, 2, 2)?),
        ("RP^2 # RP^2", rp2_sum_gem(2)?),
        ("klein-6.6.6", catalog("klein-6.6.6", None)?),
        ("twisted S^3 bundle", sphere_times_circle_gem(4, true)?),
    ];
    for (name, g) in gems {
        let k = PseudoComplex::build(&g)?;
        println!(
            "{name}: f-vector {:?}, chi {}",
            k.f_vector(),
            k.euler_characteristic()
        );
        println!("  {}", k.homology());
        println!(
            "  orientable {}, {}",
            complex::orientable(&g)?,
            complex::manifold_check(&g)?
        );
    }
    Ok(())
}
