//! Isomorphism testing with fixed and permuted colors, and canonical forms.

use gemkit::generators::{catalog, torus_sum_gem};
use gemkit::iso::{canonical_form, isomorphic, ColorMode};

fn main() -> gemkit::Result<()> {
    let a = torus_sum_gem(2)?;
    let relabeled = a.relabel(&[7, 3, 9, 0, 5, 1, 8, 2, 6, 4])?;
    let recolored = relabeled.permute_colors(&[1, 2, 0])?;
    let pairs = [
        ("relabeled", &a, relabeled.clone()),
        ("relabeled and recolored", &a, recolored),
        (
            "torus vs Klein bottle",
            &catalog("torus-6.6.6", None)?,
            catalog("klein-6.6.6", None)?,
        ),
    ];
    for (name, g, h) in pairs {
        for mode in [ColorMode::ColorFixed, ColorMode::ColorPermuting] {
            let same = canonical_form(g, mode) == canonical_form(&h, mode);
            match isomorphic(g, &h, mode) {
                Some(iso) => println!(
                    "{name}, {mode:?}: isomorphic (canonical forms equal: {same}), colors {:?}, vertices {:?}",
                    iso.color_map, iso.vertex_map
                ),
                None => println!("{name}, {mode:?}: not isomorphic (canonical forms equal: {same})"),
            }
        }
    }
    Ok(())
}
