//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance`; add `-- --long` to include the
//! E7 and E8 sweeps.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cluster_cone::exact::{int_vec, IntVec};
use cluster_cone::groebner::{
    derivation_sweep, interior_weight, no_frozen_cone_two_ways, rotation_permutation, statistics,
    verify_alternating_rays, verify_lineality, verify_max_equality, verify_omega_membership,
    verify_rays, Statistics,
};
use cluster_cone::{
    groebner_cone, CartanFamily, CartanType, Classical, ClusterData, Cone, FrozenMode, ModelSpec,
    PolygonModel, RootModel,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

const CLASSICAL_SWEEP: &[(Classical, usize)] = &[
    (Classical::A, 1),
    (Classical::A, 2),
    (Classical::A, 3),
    (Classical::A, 4),
    (Classical::A, 5),
    (Classical::A, 6),
    (Classical::B, 2),
    (Classical::B, 3),
    (Classical::B, 4),
    (Classical::C, 2),
    (Classical::C, 3),
    (Classical::C, 4),
    (Classical::D, 4),
    (Classical::D, 5),
];

const ROOT_SWEEP: &[(CartanFamily, usize)] = &[
    (CartanFamily::A, 2),
    (CartanFamily::B, 2),
    (CartanFamily::G, 2),
    (CartanFamily::F, 4),
    (CartanFamily::E, 6),
];

fn spec(f: Classical, n: usize, frozen: FrozenMode) -> ModelSpec {
    ModelSpec::new(f, n, frozen).expect("valid spec")
}

fn polygon_data(f: Classical, n: usize, frozen: FrozenMode) -> Result<ClusterData, String> {
    PolygonModel::new(spec(f, n, frozen))
        .cluster_data()
        .map_err(|e| e.to_string())
}

fn root_model(f: CartanFamily, n: usize) -> Result<RootModel, String> {
    let t = CartanType::new(f, n).map_err(|e| e.to_string())?;
    RootModel::new(t).map_err(|e| e.to_string())
}

/// All algebras of the sweep lists with a printable name.
fn sweep_algebras(roots: &[(CartanFamily, usize)]) -> Result<Vec<(String, ClusterData)>, String> {
    let mut out = Vec::new();
    for &(f, n) in CLASSICAL_SWEEP {
        out.push((
            format!("{}{n} polygon", f.letter()),
            polygon_data(f, n, FrozenMode::Special)?,
        ));
    }
    for &(f, n) in roots {
        let m = root_model(f, n)?;
        out.push((
            format!("{}{n} root", f.letter()),
            m.cluster_data().map_err(|e| e.to_string())?,
        ));
    }
    Ok(out)
}

fn first_failure(name: &str, failures: &[String]) -> Outcome {
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(format!("{name}: {f} ({} failures)", failures.len())),
    }
}

fn exact_a1() -> Outcome {
    let model = PolygonModel::new(spec(Classical::A, 1, FrozenMode::Special));
    let labels: Vec<String> = model.variables().iter().map(|d| d.to_string()).collect();
    let listed = ["[1,3]", "[2,4]", "[1,2]", "[2,3]", "[3,4]", "[1,4]"];
    if labels != listed {
        return Err(format!("coordinate order {labels:?}"));
    }
    let cone = groebner_cone(&model.cluster_data().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let lineality = [
        int_vec(&[0, 1, 1, 1, 0, 0]),
        int_vec(&[1, 0, 0, 1, 1, 0]),
        int_vec(&[0, 1, 0, 0, 1, 1]),
        int_vec(&[1, 0, 1, 0, 0, 1]),
    ];
    let rays = [int_vec(&[0, 0, -1, 0, 0, 0]), int_vec(&[0, 0, 0, -1, 0, 0])];
    let expected = Cone::from_generators(6, &rays, &lineality).map_err(|e| e.to_string())?;
    if cone != expected {
        return Err(format!("computed {cone:?}"));
    }
    if cone.lineality().len() != 4 || cone.rays().len() != 2 {
        return Err("unexpected sizes".into());
    }
    Ok(())
}

fn equality_sweep(long: bool) -> Outcome {
    let mut roots = ROOT_SWEEP.to_vec();
    if long {
        roots.extend([(CartanFamily::E, 7), (CartanFamily::E, 8)]);
    }
    for (name, data) in sweep_algebras(&roots)? {
        first_failure(&name, &verify_max_equality(&data).failures)?;
    }
    Ok(())
}

fn membership_and_interior() -> Outcome {
    for (name, data) in sweep_algebras(ROOT_SWEEP)? {
        first_failure(&name, &verify_omega_membership(&data).failures)?;
        let iw = interior_weight(&data).map_err(|e| e.to_string())?;
        if !iw.certified() {
            return Err(format!(
                "{name}: minimum dot {:?}, relative interior {}",
                iw.min_dot, iw.relative_interior
            ));
        }
    }
    Ok(())
}

fn frozen_lineality() -> Outcome {
    for &(f, n) in CLASSICAL_SWEEP {
        let s = spec(f, n, FrozenMode::Special);
        let model = PolygonModel::new(s);
        let cone = groebner_cone(&model.cluster_data().map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let expected = model.n_frozen() + usize::from(f == Classical::D);
        if cone.lineality().len() != expected {
            return Err(format!(
                "{s}: lineality dimension {} instead of {expected}",
                cone.lineality().len()
            ));
        }
        let report = verify_lineality(s).map_err(|e| e.to_string())?;
        first_failure(&s.to_string(), &report.failures)?;
    }
    Ok(())
}

fn frozen_rays() -> Outcome {
    for &(f, n) in CLASSICAL_SWEEP {
        let s = spec(f, n, FrozenMode::Special);
        let report = verify_rays(s).map_err(|e| e.to_string())?;
        first_failure(&s.to_string(), &report.failures)?;
    }
    Ok(())
}

fn alternating_rays() -> Outcome {
    let polygons = [
        (Classical::A, 2),
        (Classical::A, 4),
        (Classical::B, 2),
        (Classical::B, 4),
        (Classical::C, 2),
        (Classical::C, 4),
    ];
    for (f, n) in polygons {
        let model = PolygonModel::new(spec(f, n, FrozenMode::None));
        let data = model.cluster_data().map_err(|e| e.to_string())?;
        let t = rotation_permutation(&model).map_err(|e| e.to_string())?;
        let report = verify_alternating_rays(&data, &t).map_err(|e| e.to_string())?;
        first_failure(&format!("{}{n}", f.letter()), &report.failures)?;
    }
    let f4 = root_model(CartanFamily::F, 4)?;
    let data = f4.cluster_data().map_err(|e| e.to_string())?;
    let report =
        verify_alternating_rays(&data, f4.tau_permutation()).map_err(|e| e.to_string())?;
    first_failure("F4", &report.failures)
}

fn no_frozen() -> Outcome {
    let list = [
        (Classical::A, 2),
        (Classical::A, 3),
        (Classical::A, 4),
        (Classical::A, 5),
        (Classical::B, 2),
        (Classical::B, 3),
        (Classical::B, 4),
        (Classical::C, 2),
        (Classical::C, 3),
        (Classical::C, 4),
        (Classical::D, 4),
        (Classical::D, 5),
    ];
    for (f, n) in list {
        let s = spec(f, n, FrozenMode::None);
        let lin = verify_lineality(s).map_err(|e| e.to_string())?;
        first_failure(&s.to_string(), &lin.failures)?;
        let rays = verify_rays(s).map_err(|e| e.to_string())?;
        first_failure(&s.to_string(), &rays.failures)?;
        for note in rays.notes.iter().filter(|n| n.contains("not extreme")) {
            println!("    note {s}: {note}");
        }
        let routes = no_frozen_cone_two_ways(f, n).map_err(|e| e.to_string())?;
        if !routes.equal {
            return Err(format!("{s}: the two constructions differ"));
        }
    }
    Ok(())
}

fn derivations() -> Outcome {
    for (f, n) in [(Classical::A, 2), (Classical::A, 3), (Classical::B, 2)] {
        for frozen in [FrozenMode::Special, FrozenMode::None] {
            let data = polygon_data(f, n, frozen)?;
            let report = derivation_sweep(&data, 3).map_err(|e| e.to_string())?;
            first_failure(&format!("{}{n} {frozen}", f.letter()), &report.failures)?;
        }
    }
    Ok(())
}

fn cross_model() -> Outcome {
    let list = [
        (Classical::A, CartanFamily::A, 1),
        (Classical::A, CartanFamily::A, 2),
        (Classical::A, CartanFamily::A, 3),
        (Classical::A, CartanFamily::A, 4),
        (Classical::B, CartanFamily::B, 2),
        (Classical::B, CartanFamily::B, 3),
        (Classical::B, CartanFamily::B, 4),
        (Classical::C, CartanFamily::C, 2),
        (Classical::C, CartanFamily::C, 3),
        (Classical::C, CartanFamily::C, 4),
        (Classical::D, CartanFamily::D, 4),
    ];
    for (pf, rf, n) in list {
        let poly: Statistics = statistics(&polygon_data(pf, n, FrozenMode::None)?)
            .map_err(|e| e.to_string())?;
        let root_data = root_model(rf, n)?
            .cluster_data()
            .map_err(|e| e.to_string())?;
        let root = statistics(&root_data).map_err(|e| e.to_string())?;
        let expected_vars = match pf {
            Classical::A => n * (n + 3) / 2,
            Classical::B | Classical::C => n * (n + 1),
            Classical::D => n * n,
        };
        if poly != root || poly.variables != expected_vars {
            return Err(format!("{}{n}: polygon {poly:?}, root {root:?}", pf.letter()));
        }
    }
    Ok(())
}

fn random_generators(rng: &mut ChaCha8Rng) -> (usize, Vec<IntVec>) {
    let dim = rng.gen_range(1..=6);
    let count = rng.gen_range(1..=8);
    let gens = (0..count)
        .map(|_| (0..dim).map(|_| rng.gen_range(-3i64..=3).into()).collect())
        .collect();
    (dim, gens)
}

fn cone_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let (dim, gens) = random_generators(&mut rng);
        let cone = Cone::from_generators(dim, &gens, &[]).map_err(|e| e.to_string())?;
        if cone.dual().dual() != cone {
            return Err(format!("trial {trial}: dual of dual differs for {gens:?}"));
        }
        for g in &gens {
            if !cone.contains(g).map_err(|e| e.to_string())? {
                return Err(format!("trial {trial}: generator {g:?} not contained"));
            }
        }
        for (i, r) in cone.rays().iter().enumerate() {
            let others: Vec<IntVec> = cone
                .rays()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, x)| x.clone())
                .collect();
            let rest =
                Cone::from_generators(dim, &others, cone.lineality()).map_err(|e| e.to_string())?;
            if rest.contains(r).map_err(|e| e.to_string())? {
                return Err(format!("trial {trial}: ray {r:?} is redundant"));
            }
        }
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let again = Cone::from_generators(dim, &shuffled, &[]).map_err(|e| e.to_string())?;
        if again != cone {
            return Err(format!("trial {trial}: generator order changes the cone"));
        }
    }
    Ok(())
}

fn report(number: usize, title: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(()) if elapsed <= limit => (true, String::new()),
        Ok(()) => (false, format!(" exceeded {limit:?}")),
        Err(e) => (false, format!(" {e}")),
    };
    println!(
        "{} {number:>2} {title} [{:.2?}]{detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed
    );
    ok
}

fn main() -> ExitCode {
    let long = std::env::args().any(|a| a == "--long");
    let minute = Duration::from_secs(60);
    let results = [
        report(1, "A1 cone reproduced exactly", Duration::from_secs(1), exact_a1),
        report(2, "max equality for all relations", 5 * minute, || equality_sweep(long)),
        report(3, "omega rows in the cone, interior weight", 5 * minute, membership_and_interior),
        report(4, "lineality dimensions and bases with frozen edges", 5 * minute, frozen_lineality),
        report(5, "ray generators with frozen edges", 10 * minute, frozen_rays),
        report(6, "alternating sums are the rays", 5 * minute, alternating_rays),
        report(7, "generators without frozen variables", 10 * minute, no_frozen),
        report(8, "derivation degrees avoid the primitive cone", 5 * minute, derivations),
        report(9, "polygon and root models agree", 5 * minute, cross_model),
        report(10, "cone engine on random generators", 5 * minute, cone_oracle),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
