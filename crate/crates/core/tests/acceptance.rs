//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use gemkit::complex::{self, HomologyGroup, ManifoldVerdict, PseudoComplex};
use gemkit::embedding::{self, BigonPolicy, CyclicPermutation, TypeSignature};
use gemkit::generators::{
    catalog, catalog_entries, lens_gem, lens_nonbipartite_attempt, rp2_sum_gem,
    sphere_times_circle_gem, standard_sphere, torus_sum_gem,
};
use gemkit::iso::{canonical_form, isomorphic, ColorMode};
use gemkit::search::{classify_4_4, enumerate_embedding_types, find_gems, SearchSpec, TypeOrder};
use gemkit::ColoredGraph;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn identity(d: usize) -> CyclicPermutation {
    CyclicPermutation::identity(d)
}

fn criterion_1() -> Check {
    let key = |chi: i64| -> Vec<(Vec<usize>, bool, TypeOrder)> {
        enumerate_embedding_types(chi, 60)
            .into_iter()
            .map(|t| (t.faces, t.free_face, t.order))
            .collect()
    };
    let fixed = |faces: &[usize], p: u64| (faces.to_vec(), false, TypeOrder::Fixed(p));
    let mut want1 = vec![
        fixed(&[4, 4, 4], 4),
        fixed(&[4, 6, 8], 24),
        fixed(&[4, 6, 10], 60),
        fixed(&[4, 6, 6], 12),
        (vec![4, 4], true, TypeOrder::PerFreeFace(1)),
    ];
    let mut got1 = key(1);
    want1.sort();
    got1.sort();
    ensure!(got1 == want1, "chi=1 table {got1:?}");

    let mut want2 = vec![
        fixed(&[4, 4, 4], 8),
        fixed(&[4, 6, 8], 48),
        fixed(&[4, 6, 10], 120),
        fixed(&[4, 6, 6], 24),
        (vec![4, 4], true, TypeOrder::PerFreeFace(2)),
    ];
    let mut got2 = key(2);
    want2.sort();
    got2.sort();
    ensure!(got2 == want2, "chi=2 table {got2:?}");

    let mut got0: Vec<Vec<usize>> = key(0).into_iter().map(|t| t.0).collect();
    got0.sort();
    let mut want0 = vec![
        vec![4, 4, 4, 4],
        vec![6, 6, 6],
        vec![4, 8, 8],
        vec![4, 6, 12],
    ];
    want0.sort();
    ensure!(got0 == want0, "chi=0 table {got0:?}");
    ensure!(
        enumerate_embedding_types(0, 60)
            .iter()
            .all(|t| t.order == TypeOrder::Unconstrained),
        "chi=0 orders must be unconstrained"
    );

    // cross-check the closed-form rows with a brute-force loop
    for chi in [1, 2] {
        let brute: Vec<(Vec<i64>, i64)> = common::brute_types_3(chi, 60)
            .into_iter()
            .filter(|(f, _)| !(f[0] == 4 && f[1] == 4 && f[2] >= 6))
            .collect();
        let mut ours: Vec<(Vec<i64>, i64)> = enumerate_embedding_types(chi, 60)
            .into_iter()
            .filter(|t| !t.free_face)
            .map(|t| {
                let TypeOrder::Fixed(p) = t.order else {
                    unreachable!()
                };
                (t.faces.iter().map(|&q| q as i64).collect(), p as i64)
            })
            .collect();
        ours.sort();
        let mut brute = brute;
        brute.sort();
        ensure!(
            ours == brute,
            "chi={chi}: enumeration {ours:?} vs brute force {brute:?}"
        );
    }
    Ok(())
}

fn criterion_2() -> Check {
    for d in 2..=6 {
        let g = standard_sphere(d).map_err(|e| e.to_string())?;
        let r = embedding::regular_genus(&g).map_err(|e| e.to_string())?;
        ensure!(r.rho.doubled() == 0, "S^{d}: rho = {}", r.rho);
        for eps in embedding::all_cyclic_permutations(d) {
            let chi = embedding::euler_characteristic(&g, &eps).map_err(|e| e.to_string())?;
            ensure!(chi == 2, "S^{d} under {eps}: chi = {chi}");
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    for (p, q, k) in [(2, 1, 2), (3, 1, 2), (5, 2, 2), (3, 1, 4), (2, 0, 2)] {
        let g = lens_gem(p, q, k).map_err(|e| e.to_string())?;
        let tag = format!("lens({p},{q},{k})");
        ensure!(g.order() == 2 * p * k, "{tag}: order {}", g.order());
        ensure!(g.is_bipartite(), "{tag}: not bipartite");
        ensure!(g.g_of(&[0, 2]) == k, "{tag}: g02 = {}", g.g_of(&[0, 2]));
        let eps = identity(3);
        for x in 0..g.order() {
            let f = common::faces_at(&g, &[0, 1, 2, 3], x);
            ensure!(f == vec![4, 4, 4, 4], "{tag}: faces at {x} are {f:?}");
        }
        let sig = embedding::semi_equivelar_type(&g, &eps, BigonPolicy::Exclude)
            .map_err(|e| e.to_string())?;
        ensure!(
            sig == Some(TypeSignature::new(vec![4; 4])),
            "{tag}: type {sig:?}"
        );
        let chi = embedding::euler_characteristic(&g, &eps).map_err(|e| e.to_string())?;
        ensure!(chi == 0, "{tag}: chi {chi}");
        let report = embedding::semi_equivelar_report(&g, BigonPolicy::Exclude)
            .map_err(|e| e.to_string())?;
        ensure!(
            report.reports.len() == 3,
            "{tag}: {} permutation classes",
            report.reports.len()
        );
        ensure!(
            report.witness_rho_times_2 == Some(2),
            "{tag}: semi-equivelar rho {:?}",
            report.witness()
        );
        // S^3 reaches genus 0 through an embedding with 2-gon faces
        let rg = embedding::regular_genus(&g).map_err(|e| e.to_string())?;
        let genus = if q == 0 { 0 } else { 2 };
        ensure!(rg.rho.doubled() == genus, "{tag}: regular genus {}", rg.rho);
        let v = complex::manifold_check(&g).map_err(|e| e.to_string())?;
        ensure!(
            v == ManifoldVerdict::Certified3Manifold,
            "{tag}: verdict {v}"
        );
        let h = complex::homology(&g).map_err(|e| e.to_string())?;
        let want = if q == 0 {
            HomologyGroup::free(0)
        } else {
            HomologyGroup::cyclic(p as u64)
        };
        ensure!(*h.get(1) == want, "{tag}: H1 = {}", h.get(1));
        // independent route: ranks over Q and F_p
        let b = common::betti_mod(&g, 0);
        ensure!(b == vec![1, 0, 0, 1], "{tag}: rational Betti numbers {b:?}");
        let t = common::torsion_count_h1(&g, p as i64);
        ensure!(
            t == usize::from(q != 0),
            "{tag}: {t} p-torsion summands in H1"
        );
    }
    Ok(())
}

fn criterion_4() -> Check {
    for p in 1..=3 {
        for k in [2, 4] {
            for r in (0..2 * p).step_by(2) {
                let (g, d) = lens_nonbipartite_attempt(p, k, r).map_err(|e| e.to_string())?;
                let tag = format!("attempt(p={p},k={k},r={r})");
                ensure!(!g.is_bipartite(), "{tag}: bipartite");
                ensure!(g.g_of(&[0, 2]) == k, "{tag}: g02 = {}", g.g_of(&[0, 2]));
                let g03 = 1 + p * (k - 2) / 2;
                ensure!(g.g_of(&[0, 3]) == g03, "{tag}: g03 = {}", g.g_of(&[0, 3]));
                ensure!(g.g_of(&[2, 3]) == g03, "{tag}: g23 = {}", g.g_of(&[2, 3]));
                ensure!(
                    g.g_of(&[0, 2, 3]) == k / 2,
                    "{tag}: g023 = {}",
                    g.g_of(&[0, 2, 3])
                );
                if p == 1 {
                    ensure!(g.g_of(&[1, 2]) == k / 2, "{tag}: g12 = {}", g.g_of(&[1, 2]));
                    ensure!(g.g_of(&[1, 3]) == 1, "{tag}: g13 = {}", g.g_of(&[1, 3]));
                    ensure!(
                        g.g_of(&[1, 2, 3]) == 1,
                        "{tag}: g123 = {}",
                        g.g_of(&[1, 2, 3])
                    );
                }
                ensure!(d.matches_prediction(), "{tag}: diagnostic disagrees");
                ensure!(!d.verdict.passed(), "{tag}: manifold check passed");
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let report = classify_4_4(8, 16).map_err(|e| e.to_string())?;
    ensure!(report.exhaustive, "search was not exhaustive");
    let manifolds: Vec<_> = report
        .gems
        .iter()
        .filter(|g| g.bipartite && g.is_manifold())
        .collect();
    ensure!(
        manifolds.len() >= 2,
        "{} bipartite manifold gems",
        manifolds.len()
    );
    let at8: Vec<_> = manifolds.iter().filter(|g| g.order == 8).collect();
    let mut h1: Vec<HomologyGroup> = at8.iter().map(|g| g.homology.get(1).clone()).collect();
    h1.sort_by_key(|h| h.torsion.clone());
    ensure!(
        h1 == vec![HomologyGroup::free(0), HomologyGroup::cyclic(2)],
        "order-8 bipartite manifolds have H1 {h1:?}"
    );
    for m in &manifolds {
        let Some((p, q, k)) = m.lens else {
            return Err(format!("{} has no lens match", m.canonical));
        };
        let g = ColoredGraph::try_from(m.graph.clone()).map_err(|e| e.to_string())?;
        let l = lens_gem(p, q, k).map_err(|e| e.to_string())?;
        let iso =
            isomorphic(&g, &l, ColorMode::ColorPermuting).ok_or("lens match not reproducible")?;
        ensure!(iso.verify(&g, &l), "isomorphism witness does not verify");
    }
    ensure!(
        report.gems.iter().all(|g| g.bipartite || !g.is_manifold()),
        "a nonbipartite hit is a manifold"
    );
    Ok(())
}

fn criterion_6() -> Check {
    let mut spec = SearchSpec::signature(3, 12, &[6, 6, 4]);
    spec.chi = Some(1);
    let r = find_gems(&spec).map_err(|e| e.to_string())?;
    ensure!(r.exhaustive, "not exhaustive");
    ensure!(r.hit_count == 0, "{} hits", r.hit_count);
    Ok(())
}

fn criterion_7() -> Check {
    for n in 1..=6usize {
        let g = rp2_sum_gem(n).map_err(|e| e.to_string())?;
        let tag = format!("rp2_sum({n})");
        ensure!(!g.is_bipartite(), "{tag}: bipartite");
        let len = 2 * n + 2;
        for x in 0..g.order() {
            ensure!(
                common::faces_at(&g, &[0, 1, 2], x) == vec![len; 3],
                "{tag}: faces at {x}"
            );
        }
        let chi = embedding::euler_characteristic(&g, &identity(2)).map_err(|e| e.to_string())?;
        ensure!(chi == 2 - n as i64, "{tag}: chi {chi}");
        let h = complex::homology(&g).map_err(|e| e.to_string())?;
        ensure!(
            *h.get(1) == HomologyGroup::new(n - 1, vec![2]),
            "{tag}: H1 {}",
            h.get(1)
        );
        let rg = embedding::regular_genus(&g).map_err(|e| e.to_string())?;
        ensure!(rg.rho.doubled() == n as i64, "{tag}: rho {}", rg.rho);
    }
    for n in 1..=5usize {
        let g = torus_sum_gem(n).map_err(|e| e.to_string())?;
        let tag = format!("torus_sum({n})");
        ensure!(g.is_bipartite(), "{tag}: not bipartite");
        ensure!(g.order() == 4 * n + 2, "{tag}: order {}", g.order());
        for x in 0..g.order() {
            ensure!(
                common::faces_at(&g, &[0, 1, 2], x) == vec![4 * n + 2; 3],
                "{tag}: faces at {x}"
            );
        }
        let chi = embedding::euler_characteristic(&g, &identity(2)).map_err(|e| e.to_string())?;
        ensure!(chi == 2 - 2 * n as i64, "{tag}: chi {chi}");
        let h = complex::homology(&g).map_err(|e| e.to_string())?;
        ensure!(
            *h.get(1) == HomologyGroup::free(2 * n),
            "{tag}: H1 {}",
            h.get(1)
        );
        let rg = embedding::regular_genus(&g).map_err(|e| e.to_string())?;
        ensure!(rg.rho.doubled() == 2 * n as i64, "{tag}: rho {}", rg.rho);
    }
    Ok(())
}

fn criterion_8() -> Check {
    for d in 3..=5usize {
        for twisted in [false, true] {
            let tag = format!("sphere_times_circle({d},{twisted})");
            let g = sphere_times_circle_gem(d, twisted).map_err(|e| e.to_string())?;
            ensure!(g.order() == 2 * (d + 1), "{tag}: order {}", g.order());
            let eps: Vec<usize> = (0..=d).collect();
            let mut want = vec![2; d - 2];
            want.extend([6, 6, 6]);
            let want = TypeSignature::new(want);
            for x in 0..g.order() {
                let f = TypeSignature::new(common::faces_at(&g, &eps, x));
                ensure!(f.equivalent(&want), "{tag}: faces at {x} are {f}");
            }
            let chi =
                embedding::euler_characteristic(&g, &identity(d)).map_err(|e| e.to_string())?;
            ensure!(chi == 0, "{tag}: chi {chi}");
            ensure!(embedding::rho(chi).doubled() == 2, "{tag}: rho");
            let h = complex::homology(&g).map_err(|e| e.to_string())?;
            ensure!(
                *h.get(1) == HomologyGroup::free(1),
                "{tag}: H1 {}",
                h.get(1)
            );
            ensure!(g.is_bipartite() == !twisted, "{tag}: orientability");
            let top = if twisted {
                HomologyGroup::free(0)
            } else {
                HomologyGroup::free(1)
            };
            ensure!(*h.get(d) == top, "{tag}: H{d} {}", h.get(d));
            let v = complex::manifold_check(&g).map_err(|e| e.to_string())?;
            let want_v = if d == 3 {
                ManifoldVerdict::Certified3Manifold
            } else {
                ManifoldVerdict::HomologyCertified
            };
            ensure!(v == want_v, "{tag}: verdict {v}");
        }
    }
    Ok(())
}

fn entry_check(
    name: &str,
    g: &ColoredGraph,
    sig: &[usize],
    order: usize,
    chi: i64,
    orientable: bool,
) -> Check {
    ensure!(g.order() == order, "{name}: order {}", g.order());
    let mut want = sig.to_vec();
    want.sort();
    for x in 0..g.order() {
        let mut f = common::faces_at(g, &[0, 1, 2], x);
        f.sort();
        ensure!(f == want, "{name}: faces at {x} are {f:?}");
    }
    let faces = g.g_of(&[0, 1]) + g.g_of(&[1, 2]) + g.g_of(&[0, 2]);
    let euler = g.order() as i64 - 3 * g.order() as i64 / 2 + faces as i64;
    ensure!(euler == chi, "{name}: V - E + F = {euler}");
    ensure!(g.is_bipartite() == orientable, "{name}: orientability");
    Ok(())
}

fn criterion_9() -> Check {
    for e in catalog_entries() {
        match e.name.as_str() {
            "rp2-4.4.2p" => {
                for p in (2..=10).step_by(2) {
                    let g = catalog(&e.name, Some(p)).map_err(|e| e.to_string())?;
                    entry_check(
                        &format!("{} p={p}", e.name),
                        &g,
                        &[4, 4, 2 * p],
                        2 * p,
                        1,
                        false,
                    )?;
                }
            }
            "s2-4.4.p" => {
                for p in (4..=10).step_by(2) {
                    let g = catalog(&e.name, Some(p)).map_err(|e| e.to_string())?;
                    entry_check(&format!("{} p={p}", e.name), &g, &[4, 4, p], 2 * p, 2, true)?;
                }
            }
            _ => {
                let g = catalog(&e.name, None).map_err(|e| e.to_string())?;
                entry_check(&e.name, &g, &e.signature, e.order, e.chi, e.orientable)?;
            }
        }
    }
    for (name, sig, order, chi, orientable) in [
        ("torus-6.6.6", [6, 6, 6], 12, 0, true),
        ("torus-4.8.8", [4, 8, 8], 16, 0, true),
        ("torus-4.6.12", [4, 6, 12], 24, 0, true),
        ("s2-6.6.4", [6, 6, 4], 24, 2, true),
    ] {
        let g = catalog(name, None).map_err(|e| e.to_string())?;
        entry_check(name, &g, &sig, order, chi, orientable)?;
    }
    Ok(())
}

fn criterion_10() -> Check {
    let mut rng = common::rng(0x5eed);
    let mut certified3 = Vec::new();
    for i in 0..1000 {
        let n = 2 * (1 + i % 8);
        let g = common::random_connected(2, n, &mut rng);
        let k = PseudoComplex::build(&g).map_err(|e| e.to_string())?;
        ensure!(
            k.boundary_squared_is_zero(),
            "boundary of boundary nonzero on a 3-colored graph"
        );
        let chi = embedding::euler_characteristic(&g, &identity(2)).map_err(|e| e.to_string())?;
        ensure!(
            k.euler_characteristic() == chi,
            "chi(K) {} != chi_eps {chi}",
            k.euler_characteristic()
        );
        let h = k.homology();
        ensure!(
            (*h.get(2) == HomologyGroup::free(1)) == g.is_bipartite(),
            "H2 vs bipartite on a surface"
        );

        let m = 2 * (1 + i % 6);
        let g4 = common::random_connected(3, m, &mut rng);
        let k4 = PseudoComplex::build(&g4).map_err(|e| e.to_string())?;
        ensure!(
            k4.boundary_squared_is_zero(),
            "boundary of boundary nonzero on a 4-colored graph"
        );
        if complex::manifold_check(&g4)
            .map_err(|e| e.to_string())?
            .passed()
        {
            certified3.push(g4);
        }
    }
    for (p, q, k) in [
        (1, 0, 2),
        (2, 1, 2),
        (3, 1, 2),
        (5, 2, 2),
        (3, 1, 4),
        (4, 1, 2),
    ] {
        certified3.push(lens_gem(p, q, k).map_err(|e| e.to_string())?);
    }
    certified3.push(sphere_times_circle_gem(3, false).map_err(|e| e.to_string())?);
    certified3.push(sphere_times_circle_gem(3, true).map_err(|e| e.to_string())?);
    ensure!(
        certified3.len() > 8,
        "no random certified 3-manifold gems were sampled"
    );
    for g in &certified3 {
        let k = PseudoComplex::build(g).map_err(|e| e.to_string())?;
        ensure!(
            k.euler_characteristic() == 0,
            "certified 3-manifold with chi {}",
            k.euler_characteristic()
        );
        let h = k.homology();
        ensure!(
            (*h.get(3) == HomologyGroup::free(1)) == g.is_bipartite(),
            "H3 vs bipartite"
        );
    }
    for i in 0..1000 {
        let (d, n) = if i % 2 == 0 {
            (2, 2 * (1 + i % 7))
        } else {
            (3, 2 * (1 + i % 5))
        };
        let g = common::random_connected(d, n, &mut rng);
        let pi = common::random_permutation(n, &mut rng);
        let h = g.relabel(&pi).map_err(|e| e.to_string())?;
        for mode in [ColorMode::ColorFixed, ColorMode::ColorPermuting] {
            ensure!(
                canonical_form(&g, mode) == canonical_form(&h, mode),
                "canonical form changed under relabeling"
            );
        }
        ensure!(
            complex::homology(&g).map_err(|e| e.to_string())?
                == complex::homology(&h).map_err(|e| e.to_string())?,
            "homology changed under relabeling"
        );
        let a = embedding::regular_genus(&g).map_err(|e| e.to_string())?;
        let b = embedding::regular_genus(&h).map_err(|e| e.to_string())?;
        ensure!(
            a.rho == b.rho && a.witnesses == b.witnesses,
            "regular genus changed under relabeling"
        );
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("type tables for chi = 1, 2, 0", criterion_1),
        ("standard spheres have regular genus 0", criterion_2),
        ("lens gems: order, type, genus, verdict, H1", criterion_3),
        (
            "nonbipartite (4^4) attempts match the g formulas and fail",
            criterion_4,
        ),
        ("(4^4) classification up to order 8", criterion_5),
        (
            "no (6^2,4) gem of the projective plane at order 12",
            criterion_6,
        ),
        (
            "surface families for sums of projective planes and tori",
            criterion_7,
        ),
        (
            "genus-one (d-1)-sphere bundles over the circle",
            criterion_8,
        ),
        ("catalog entries meet their invariants", criterion_9),
        (
            "structural properties on random and generated graphs",
            criterion_10,
        ),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
