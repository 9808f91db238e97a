//! Semi-equivelar embeddings: the face-cycle type at each vertex, with and
//! without bigons.

use gemkit::embedding::{semi_equivelar_report, BigonPolicy};
use gemkit::generators::{catalog, lens_gem, sphere_times_circle_gem};

fn main() -> gemkit::Result<()> {
    let gems = [
        ("L(2,1)", lens_gem(2, 1, 2)?),
        ("S^2 x S^1", sphere_times_circle_gem(3, false)?),
        ("s2-6.6.4", catalog("s2-6.6.4", None)?),
    ];
    for (name, g) in gems {
        for policy in [BigonPolicy::Include, BigonPolicy::Exclude] {
            let r = semi_equivelar_report(&g, policy)?;
            println!("{name} {policy:?}:");
            for e in r.reports.iter().filter(|e| e.is_semi_equivelar()) {
                println!(
                    "  {} type {} chi {}",
                    e.epsilon,
                    e.condensed.as_deref().unwrap_or("-"),
                    e.chi
                );
            }
        }
    }
    Ok(())
}
