//! Acceptance suite: every structural property of the bijection, run on
//! the four-element reference instance and on a pool of seeded random
//! realizable instances. Each test prints one pass/fail line.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use extlift_core::realizable::{sample_heights_with, sample_vector_with};
use extlift_core::*;

struct Instance {
    label: String,
    matrix: RealizationMatrix,
    m: Chirotope,
    sigstar: ExtensionSignature,
    sigma: LiftingSignature,
    v: GenericVector,
    h: HeightVector,
}

fn random_matrix(rng: &mut ChaCha8Rng, r: usize, n: usize) -> RealizationMatrix {
    loop {
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..r).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let Ok(a) = RealizationMatrix::from_i64(r, cols) else {
            continue;
        };
        let m = chirotope_from_matrix(&a).unwrap();
        if (0..n).any(|e| m.is_loop(e) || m.is_coloop(e)) {
            continue;
        }
        return a;
    }
}

fn instances() -> &'static Vec<Instance> {
    static POOL: OnceLock<Vec<Instance>> = OnceLock::new();
    POOL.get_or_init(|| {
        let shapes = [
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 5),
            (3, 6),
            (3, 7),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(20240);
        let mut out = Vec::new();
        for i in 0..24 {
            let (r, n) = shapes[i % shapes.len()];
            let matrix = random_matrix(&mut rng, r, n);
            let m = chirotope_from_matrix(&matrix).unwrap();
            let v = sample_vector_with(&matrix, &mut rng);
            let h = sample_heights_with(&matrix, &mut rng);
            let sigstar = localization_from_vector(&matrix, &v).unwrap();
            let sigma = lifting_from_heights(&matrix, &h).unwrap();
            out.push(Instance {
                label: format!("instance {i} (r={r}, n={n})"),
                matrix,
                m,
                sigstar,
                sigma,
                v,
                h,
            });
        }
        out
    })
}

fn reports() -> &'static (Vec<VerificationReport>, Duration) {
    static REPORTS: OnceLock<(Vec<VerificationReport>, Duration)> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let start = Instant::now();
        let reports = instances()
            .iter()
            .map(|inst| verify_all(&inst.m, &inst.sigstar, &inst.sigma).unwrap())
            .collect();
        (reports, start.elapsed())
    })
}

/// Asserts that the named check passed in every report.
fn assert_check(name: &str) {
    let (reports, _) = reports();
    for (inst, report) in instances().iter().zip(reports) {
        let check = report
            .checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("{}: no check named {name}", inst.label));
        assert!(
            check.passed,
            "{}: check {name} failed: {:?}",
            inst.label, check.witness
        );
    }
}

fn reference_pipeline() -> (Chirotope, ExtensionSignature, LiftingSignature, RealizationMatrix) {
    let a = RealizationMatrix::from_rows(2, &[vec![1, 2, 0, 0], vec![0, 0, 1, 2]]).unwrap();
    let m = chirotope_from_matrix(&a).unwrap();
    let sigstar = localization_from_vector(&a, &GenericVector::from_i64(&[1, 1])).unwrap();
    let sigma = lifting_from_heights(&a, &HeightVector::from_i64(&[0, 1, 0, 1])).unwrap();
    (m, sigstar, sigma, a)
}

#[test]
fn criterion_01_reference_instance_counts() {
    let start = Instant::now();
    let (m, sigstar, sigma, _) = reference_pipeline();
    assert_eq!(m.bases().len(), 4, "four bases");
    let compatible = compatible_reorientations(&m, &sigstar, &sigma).unwrap();
    assert_eq!(compatible.len(), 4, "four compatible reorientations");
    let mbar = compose_compliant(&m, &sigstar, &sigma).unwrap();
    assert_eq!(bounded_regions(&mbar).unwrap().len(), 4, "four bounded regions");
    let rows = bijection_table(&m, &sigstar, &sigma).unwrap();
    assert_eq!(rows.len(), 4, "four bijection rows");
    assert!(rows.iter().all(|r| r.verified), "every row verified");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "runtime {elapsed:?} >= 1s");
    println!("criterion 1 (reference-instance counts, {elapsed:?}): PASS");
}

#[test]
fn criterion_02_forward_map_bijection() {
    assert!(instances().len() >= 20, "at least 20 seeded instances");
    assert_check("forward-map-bijective");
    let (_, elapsed) = reports();
    assert!(
        *elapsed < Duration::from_secs(30),
        "total verification runtime {elapsed:?} >= 30s"
    );
    println!(
        "criterion 2 (forward-map bijection on {} instances, {elapsed:?} total): PASS",
        instances().len()
    );
}

#[test]
fn criterion_03_compatibility_equivalence() {
    assert_check("compat-equivalence-extension");
    assert_check("compat-equivalence-lifting");
    // Exercise the public per-subset predicates against the reorientation
    // route on a handful of instances directly.
    for inst in instances().iter().take(4) {
        let ext = extend(&inst.m, &inst.sigstar).unwrap();
        let lifted = lift(&inst.m, &inst.sigma).unwrap();
        let f = inst.m.n();
        for a in all_subsets(inst.m.n()) {
            assert_eq!(
                is_compatible_ext(&inst.m, a, &inst.sigstar).unwrap(),
                ext.reorient(a.with(f)).is_totally_cyclic(),
                "{}: extension statement at A={:?}",
                inst.label,
                a.elems()
            );
            assert_eq!(
                is_compatible_lift(&inst.m, a, &inst.sigma).unwrap(),
                lifted.reorient(a.with(f)).is_acyclic(),
                "{}: lifting statement at A={:?}",
                inst.label,
                a.elems()
            );
        }
    }
    println!("criterion 3 (compatibility equivalence, both statements, all subsets): PASS");
}

#[test]
fn criterion_04_direct_basis_bijection() {
    assert_check("cocircuit-supports-through-f-g");
    assert_check("basis-lift-bijection");
    assert_check("fundamental-supports");
    println!("criterion 4 (cocircuits through f,g and fundamental supports): PASS");
}

#[test]
fn criterion_05_central_bijection() {
    assert_check("optimal-basis-unique");
    assert_check("mutual-inverses");
    println!("criterion 5 (optimal basis uniqueness/existence, mutual inverses): PASS");
}

#[test]
fn criterion_06_composite_path_equality() {
    assert_check("composite-path-equality");
    println!("criterion 6 (direct map equals the route through the extension-lifting): PASS");
}

#[test]
fn criterion_07_cardinality_identity() {
    assert_check("cardinality-identity");
    assert_check("regions-equal-compatible");
    println!("criterion 7 (|bases| = |compatible| = |bounded regions|): PASS");
}

#[test]
fn criterion_08_activities() {
    assert_check("activities-pattern");
    println!("criterion 8 (activities (1,0) for bases with g, without f): PASS");
}

#[test]
fn criterion_09_orthogonality_and_oracle() {
    assert_check("fundamental-orthogonality");
    assert_check("membership-symmetry");
    assert_check("general-orthogonality");
    for inst in instances() {
        for check in verify_oracle(&inst.matrix, &inst.m) {
            assert!(
                check.passed,
                "{}: {} failed: {:?}",
                inst.label, check.name, check.witness
            );
        }
    }
    println!("criterion 9 (orthogonality sign rule + linear-algebra oracle equality): PASS");
}

#[test]
fn criterion_10_position_invariance() {
    let mut tested = 0;
    for inst in instances().iter().take(6) {
        let compliant = realize_extension_lifting(&inst.matrix, &inst.v, &inst.h).unwrap();
        // a second realization with a different, generically-placed f-column
        let mut t = -1i64;
        let other = loop {
            match realize_extension_lifting_with_t(&inst.matrix, &inst.v, &inst.h, t) {
                Ok(r) => break r,
                Err(_) => t *= 2,
            }
        };
        assert_ne!(compliant.t, other.t.clone(), "{}: distinct f-columns", inst.label);
        let composed = compose_compliant(&inst.m, &inst.sigstar, &inst.sigma).unwrap();

        let regions = bounded_regions(&compliant.extlift).unwrap();
        assert_eq!(
            regions,
            bounded_regions(&other.extlift).unwrap(),
            "{}: bounded regions differ between realizations",
            inst.label
        );
        assert_eq!(
            regions,
            bounded_regions(&composed).unwrap(),
            "{}: bounded regions differ from the composed route",
            inst.label
        );
        for &region in &regions {
            let b1 = compliant.extlift.subset_from_om(
                optimal_basis(&compliant.extlift, region).unwrap().without(0),
            );
            let b2 = other
                .extlift
                .subset_from_om(optimal_basis(&other.extlift, region).unwrap().without(0));
            let b3 = composed
                .subset_from_om(optimal_basis(&composed, region).unwrap().without(0));
            assert_eq!(b1, b2, "{}: region {:?} maps differently", inst.label, region.elems());
            assert_eq!(b1, b3, "{}: region {:?} maps differently", inst.label, region.elems());
        }
        tested += 1;
    }
    assert!(tested >= 5, "at least 5 instances");
    println!("criterion 10 (position invariance over {tested} instances): PASS");
}

#[test]
fn all_propositions_pass_on_every_instance() {
    let (reports, _) = reports();
    for (inst, report) in instances().iter().zip(reports) {
        assert!(
            report.all_passed(),
            "{}: failures {:?}",
            inst.label,
            report.failures()
        );
    }
    println!(
        "full verifier: {} checks per instance, {} instances, all PASS",
        reports[0].checks.len(),
        reports.len()
    );
}
