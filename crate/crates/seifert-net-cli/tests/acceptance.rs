//! Release gate: one test per acceptance criterion.  Each test prints a
//! single `PASS criterion N` line with the scope it covered; a failure
//! anywhere is a release blocker.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use seifert_net_core::twist::m_equivalence_basic_candidates;
use seifert_net_core::verify::{
    band_sum_trivializable, lens_family_exclusion_ratios, prism_invariants, prism_order,
    verify_prism_dichotomy, CheckRecord, DichotomyOutcome, LensFamily, VerifyReport,
};
use seifert_net_core::{
    build_figure2, build_subcomplex_t, canonical_torus_knot, classify_surgery,
    surgered_invariants, twist_along_seiferter, BasicSeiferter, Catalog, LensSpace,
    ManifoldDescription, SeifertInvariants, SeifertSurgery, TorusKnotId, VerifyBounds,
};

fn gcd(a: i64, b: i64) -> i64 {
    a.abs().gcd(&b.abs())
}

fn knot(p: i64, q: i64) -> TorusKnotId {
    canonical_torus_knot(p, q).expect("coprime")
}

static FULL_SWEEP: OnceLock<(VerifyReport, Duration)> = OnceLock::new();

fn full_sweep() -> &'static (VerifyReport, Duration) {
    FULL_SWEEP.get_or_init(|| {
        let start = Instant::now();
        let report = seifert_net_core::run_all(&VerifyBounds::default(), 0);
        (report, start.elapsed())
    })
}

fn sweep_record(name: &str) -> &'static CheckRecord {
    let (report, _) = full_sweep();
    report
        .records
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("sweep has a record named {name}"))
}

#[test]
fn criterion_1_figure2_edges_and_slope_arithmetic() {
    let start = Instant::now();
    let catalog = Catalog::embedded();
    let graph = build_figure2(catalog).expect("figure-2 slice builds");

    assert_eq!(graph.vertex_count(), 16);
    assert_eq!(graph.edge_count(), 15);

    let edges: BTreeSet<(String, String, String, i64)> = graph
        .edges()
        .iter()
        .map(|e| (e.u.key(), e.v.key(), e.seiferter.clone(), e.turns_from_u))
        .collect();

    assert!(edges.contains(&(
        "P(-2,3,7)(18)".to_owned(),
        "T(-3,2)(-7)".to_owned(),
        "c_prime".to_owned(),
        -1,
    )));
    assert!(edges.contains(&(
        "T(-3,2)(-2)".to_owned(),
        "T(-3,2)(-2)[c:-1](-2)".to_owned(),
        "c".to_owned(),
        -1,
    )));
    assert!(edges.contains(&(
        "T(-3,2)(-2)[c:-1](-2)".to_owned(),
        "figure-eight(-2)".to_owned(),
        "c".to_owned(),
        -1,
    )));

    let meridian_line: BTreeSet<(i64, i64)> = graph
        .edges()
        .iter()
        .filter(|e| e.seiferter == "c_mu")
        .map(|e| {
            assert_eq!(e.v.slope, e.u.slope + e.turns_from_u);
            let (lo, hi) = if e.u.slope < e.v.slope {
                (e.u.slope, e.v.slope)
            } else {
                (e.v.slope, e.u.slope)
            };
            (lo, hi)
        })
        .collect();
    let expected_line: BTreeSet<(i64, i64)> = (-9..3).map(|s| (s, s + 1)).collect();
    assert_eq!(meridian_line, expected_line);

    let host = SeifertSurgery::torus(knot(-3, 2), -7);
    let c_prime = catalog
        .lookup(knot(-3, 2), -7)
        .expect("catalog lookup")
        .into_iter()
        .find(|s| s.id == "c_prime")
        .expect("c_prime is on record at this vertex");
    assert_eq!(c_prime.linking_for_twist(), 5);
    assert_eq!(-7 + 1 * 5i64.pow(2), 18);
    let pretzel = twist_along_seiferter(catalog, &host, "c_prime", 1).expect("twist applies");
    assert_eq!(pretzel.key(), "P(-2,3,7)(18)");
    assert_eq!(pretzel.slope, 18);

    let base = SeifertSurgery::torus(knot(-3, 2), -2);
    let c = catalog
        .lookup(knot(-3, 2), -2)
        .expect("catalog lookup")
        .into_iter()
        .find(|s| s.id == "c")
        .expect("c is on record at this vertex");
    assert_eq!(c.linking_for_twist(), 0);
    assert_eq!(-2 + (-2) * 0i64.pow(2), -2);
    let figure_eight = twist_along_seiferter(catalog, &base, "c", -2).expect("twist applies");
    assert_eq!(figure_eight.key(), "figure-eight(-2)");
    assert_eq!(figure_eight.slope, -2);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS criterion 1: figure-2 slice, 16 vertices, 15 edges, exact slopes, {elapsed:?}");
}

#[test]
fn criterion_2_lens_family_slope_identities() {
    let start = Instant::now();
    let catalog = Catalog::embedded();
    let mut cases = 0u64;
    for n in 2..=1_000i64 {
        assert_eq!(
            (-2 * n - 3) * (n + 2) + 1 + (2 * n + 2).pow(2),
            n * (2 * n + 1) - 1
        );
        assert_eq!(
            (-2 * n - 3) * (n + 1) + 1 + (2 * n + 1).pow(2),
            n * (2 * n - 1) - 1
        );
        for family in [LensFamily::Plus, LensFamily::Minus] {
            let (pre_knot, pre_m) = family.pre_host(n);
            let (host_knot, host_m) = family.host(n);
            assert_eq!(pre_m + family.linking(n).pow(2), host_m);

            let pre = SeifertSurgery::torus(pre_knot, pre_m);
            let host = SeifertSurgery::torus(host_knot, host_m);
            let forward = twist_along_seiferter(catalog, &pre, family.pre_seiferter_id(), 1)
                .expect("pre-host twist applies");
            assert_eq!(forward, host);
            let backward = twist_along_seiferter(catalog, &host, family.seiferter_id(), -1)
                .expect("host twist applies");
            assert_eq!(backward, pre);
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS criterion 2: slope identities for n in [2,1000], {cases} twist round trips, {elapsed:?}");
}

#[test]
fn criterion_3_classification_regression() {
    let start = Instant::now();
    let mut cases = 0u64;
    for p_abs in 3..=30i64 {
        for q in 2..p_abs {
            if gcd(p_abs, q) != 1 {
                continue;
            }
            for p in [p_abs, -p_abs] {
                let pq = p * q;
                for m in (pq - 40)..=(pq + 40) {
                    let description = classify_surgery(p, q, m).expect("classifies");
                    assert_eq!(
                        matches!(description, ManifoldDescription::ConnectedSumLens { .. }),
                        m == pq
                    );
                    assert_eq!(
                        matches!(description, ManifoldDescription::Lens(_)),
                        (pq - m).abs() == 1
                    );
                    assert_eq!(
                        matches!(description, ManifoldDescription::Prism(_)),
                        q == 2 && (2 * p - m).abs() == 2
                    );
                    assert_eq!(description.first_homology_order(), m.unsigned_abs());
                    if m != pq {
                        let invariants = surgered_invariants(p, q, m).expect("non-degenerate");
                        assert_eq!(
                            invariants.first_homology_order().expect("defined"),
                            m.unsigned_abs()
                        );
                    }
                    cases += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("PASS criterion 3: classification regression, {cases} surgeries, {elapsed:?}");
}

#[test]
fn criterion_4_prism_exhaustive_suite() {
    for name in [
        "prism_homology_formula",
        "prism_order_dichotomy",
        "prism_orientation_reversal",
    ] {
        let record = sweep_record(name);
        assert!(record.passed, "{name}: {:?}", record.counterexample);
        assert!(record.cases_checked > 0);
    }
    assert!(sweep_record("prism_order_dichotomy").cases_checked > 10_000_000);

    let mut spot_cases = 0u64;
    for b in -3..=3i64 {
        for x in [3, 5, 7, 9i64] {
            for y in 1..x {
                if gcd(x, y) != 1 {
                    continue;
                }
                let invariants = prism_invariants(b, x, y);
                assert_eq!(
                    invariants.first_homology_order().expect("defined"),
                    prism_order(b, x, y).unsigned_abs()
                );
                for y2 in 1..x {
                    if gcd(x, y2) != 1 {
                        continue;
                    }
                    let outcome = verify_prism_dichotomy(x, b, y, b, y2);
                    assert!(!matches!(outcome, DichotomyOutcome::UnexplainedOrderEquality));
                    spot_cases += 1;
                }
            }
        }
    }

    let (report, elapsed) = full_sweep();
    assert!(report.passed);
    assert!(*elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "PASS criterion 4: prism formulas, dichotomy, reversal over full bounds ({} cases) plus {spot_cases} direct spot checks, {elapsed:?}",
        sweep_record("prism_order_dichotomy").cases_checked
    );
}

#[test]
fn criterion_5_band_sum_decision_procedure() {
    let record = sweep_record("band_sum_trivialization");
    assert!(record.passed, "{:?}", record.counterexample);

    let mut cases = 0u64;
    for p_abs in 3..=60i64 {
        for q in 2..p_abs {
            if gcd(p_abs, q) != 1 {
                continue;
            }
            for p in [p_abs, -p_abs] {
                assert_eq!(band_sum_trivializable(BasicSeiferter::Sq, p, q), q == 2);
                let exceptional = q == 2 && p_abs == 3;
                assert_eq!(
                    band_sum_trivializable(BasicSeiferter::Sp, p, q),
                    exceptional
                );
                assert_eq!(
                    band_sum_trivializable(BasicSeiferter::Meridian, p, q),
                    exceptional
                );
                cases += 1;
            }
        }
    }
    println!("PASS criterion 5: band-sum trivialization characterized on {cases} hosts");
}

#[test]
fn criterion_6_m_equivalence_obstructions() {
    for name in ["lens_family_linking_exclusion", "fiber_slope_meridian_exclusion"] {
        let record = sweep_record(name);
        assert!(record.passed, "{name}: {:?}", record.counterexample);
    }

    let mut empty_candidate_cases = 0u64;
    for n in 2..=10_000i64 {
        let host = knot(2 * n + 1, n);
        let m = n * (2 * n + 1) - 1;
        let lk = 2 * n + 2;
        assert!(
            m_equivalence_basic_candidates(host, m, lk).is_empty(),
            "candidates survive at n = {n}"
        );
        for ratio in lens_family_exclusion_ratios(LensFamily::Plus, n) {
            assert!(!ratio.is_integer(), "integral ratio {ratio} at n = {n}");
        }
        empty_candidate_cases += 1;
    }
    println!(
        "PASS criterion 6: no m-equivalence candidates for n in [2,10000] ({empty_candidate_cases} hosts), meridian exclusion to |p| <= 100"
    );
}

#[test]
fn criterion_7_algebra_property_suite() {
    let mut rng = StdRng::seed_from_u64(0x5e1f_ac3e);
    let mut cases = 0u64;

    for _ in 0..10_000 {
        let b = rng.random_range(-6..=6i64);
        let fiber_count = rng.random_range(0..=4usize);
        let mut fibers = Vec::with_capacity(fiber_count);
        for _ in 0..fiber_count {
            let alpha = rng.random_range(1..=30i64);
            let beta = loop {
                let candidate = rng.random_range(-30..=30i64);
                if gcd(alpha, candidate) == 1 {
                    break candidate;
                }
            };
            fibers.push((alpha, beta));
        }
        let invariants = SeifertInvariants::new(b, &fibers).expect("valid invariants");
        let normalized = invariants.normalize().expect("normalizes");
        assert_eq!(normalized.normalize().expect("normalizes"), normalized);
        assert_eq!(
            invariants.euler_number().expect("defined"),
            normalized.euler_number().expect("defined")
        );
        let reversed = invariants.reverse_orientation().expect("reverses");
        assert_eq!(
            reversed.euler_number().expect("defined"),
            -invariants.euler_number().expect("defined")
        );
        cases += 1;
    }

    for p in 1..=200i64 {
        let residues: Vec<i64> = (0..p.max(1)).filter(|q| gcd(p, *q) == 1).collect();
        for &q in &residues {
            let space = LensSpace::new(p, q).expect("valid lens space");
            assert!(space.unoriented_equivalent(&space));
            assert!(space.oriented_equivalent(&space));
        }
        for &q1 in &residues {
            let a = LensSpace::new(p, q1).expect("valid");
            for &q2 in &residues {
                let b = LensSpace::new(p, q2).expect("valid");
                assert_eq!(a.unoriented_equivalent(&b), b.unoriented_equivalent(&a));
                cases += 1;
            }
        }
    }
    for _ in 0..10_000 {
        let p = rng.random_range(2..=200i64);
        let mut pick = || loop {
            let q = rng.random_range(1..p);
            if gcd(p, q) == 1 {
                break LensSpace::new(p, q).expect("valid");
            }
        };
        let (a, b, c) = (pick(), pick(), pick());
        if a.unoriented_equivalent(&b) && b.unoriented_equivalent(&c) {
            assert!(a.unoriented_equivalent(&c), "transitivity fails at {a}, {b}, {c}");
        }
        cases += 1;
    }

    let catalog = Catalog::embedded();
    let first_fig = build_figure2(catalog).expect("builds");
    let second_fig = build_figure2(catalog).expect("builds");
    assert_eq!(first_fig.export_json(), second_fig.export_json());
    assert_eq!(first_fig.export_dot(), second_fig.export_dot());
    let first_sub = build_subcomplex_t(7, 3).expect("builds");
    let second_sub = build_subcomplex_t(7, 3).expect("builds");
    assert_eq!(first_sub.export_json(), second_sub.export_json());
    assert_eq!(first_sub.export_dot(), second_sub.export_dot());

    assert!(cases >= 10_000);
    println!("PASS criterion 7: algebra properties over {cases} seeded instances, exports byte-stable");
}

#[test]
fn criterion_8_end_to_end_cli() {
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    let golden = |name: &str| -> String {
        fs::read_to_string(golden_dir.join(name)).expect("golden file exists")
    };
    let run = |args: &[&str]| -> (Option<i32>, String) {
        let out = Command::new(env!("CARGO_BIN_EXE_seifert-net"))
            .args(args)
            .env_remove("SEIFERT_NET_CATALOG")
            .output()
            .expect("binary runs");
        (
            out.status.code(),
            String::from_utf8(out.stdout).expect("stdout is utf-8"),
        )
    };

    let (verify_code, _) = run(&["verify-all"]);
    assert_eq!(verify_code, Some(0));

    let (classify_code, classify_out) = run(&["classify", "-p", "3", "-q", "2", "-m", "7"]);
    assert_eq!(classify_code, Some(0));
    assert_eq!(classify_out, golden("classify_t32_7.txt"));

    let (twist_code, twist_out) =
        run(&["twist", "--base", "T(-3,2),-7", "--step", "c_prime:+1"]);
    assert_eq!(twist_code, Some(0));
    assert_eq!(twist_out, golden("twist_pretzel.txt"));

    let (dot_code, dot_out) = run(&["network", "figure2", "--format", "dot"]);
    assert_eq!(dot_code, Some(0));
    assert_eq!(dot_out, golden("figure2.dot"));

    println!("PASS criterion 8: verify-all exits 0; classify, twist, figure-2 transcripts match byte-for-byte");
}
