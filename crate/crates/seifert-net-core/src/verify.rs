//! Brute-force verification of the arithmetic facts the rest of the
//! crate relies on: prism-manifold homology, the band-sum case analysis
//! for basic seiferters, linking-number exclusions for the lens-space
//! seiferter families, and the slope identities realized by the twist
//! engine.
//!
//! Each check sweeps a bounded parameter range and reports the number of
//! cases checked plus the first counterexample found, so a failing run
//! pinpoints the offending parameters.

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::classify::{classify_surgery, ManifoldDescription};
use crate::model::{canonical_torus_knot, SeifertSurgery, TorusKnotId};
use crate::sfs::SeifertInvariants;
use crate::twist::{
    linking_obstruction_passes, m_equivalence_basic_candidates, twist_along_seiferter,
    BasicSeiferter,
};

/// Sweep bounds for [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyBounds {
    /// Largest odd base-orbifold index for prism sweeps.
    pub x_max: i64,
    /// Prism integer summands range over `-b_span..=b_span`.
    pub b_span: i64,
    /// Band-sum and move-gate hosts satisfy `|p| * q <= pq_max`.
    pub pq_max: i64,
    /// Lens-family parameter sweeps cover `2..=n_max`.
    pub n_max: i64,
    /// Meridian-exclusion hosts satisfy `|p| <= p_max_meridian`.
    pub p_max_meridian: i64,
    /// Twist-identity sweeps cover family parameters `2..=slope_n_max`.
    pub slope_n_max: i64,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            x_max: 99,
            b_span: 10,
            pq_max: 60,
            n_max: 10_000,
            p_max_meridian: 100,
            slope_n_max: 1_000,
        }
    }
}

/// Outcome of one check sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: String,
    pub cases_checked: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Outcome of the full verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub records: Vec<CheckRecord>,
    pub passed: bool,
}

/// How two prism parameter sets over the same base index compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DichotomyOutcome {
    /// Identical parameters.
    SameInvariant,
    /// Mirror partners: `b + b' = -3` and `y + y' = x`.
    OrientationReversingPair,
    /// First homology orders differ.
    NoOrderEquality,
    /// Equal orders without either explanation; never produced if the
    /// dichotomy holds.
    UnexplainedOrderEquality,
}

/// Seifert invariants of the prism manifold with parameters `(b, x, y)`:
/// `(b; 1/2, 1/2, y/x)` with `x` odd and `0 < y < x` coprime to `x`.
pub fn prism_invariants(b: i64, x: i64, y: i64) -> SeifertInvariants {
    assert!(x >= 3 && x % 2 != 0, "prism base index must be odd and >= 3");
    assert!(0 < y && y < x, "prism fiber parameter out of range");
    SeifertInvariants::new(b, &[(2, 1), (2, 1), (x, y)]).expect("valid prism invariants")
}

/// First homology order of the prism manifold `(b; 1/2, 1/2, y/x)`,
/// in closed form: `4 |(b + 1) x + y|`.
pub fn prism_order(b: i64, x: i64, y: i64) -> i64 {
    4 * ((b + 1) * x + y).abs()
}

/// Classifies a pair of prism parameter sets over the same base index
/// `x`.  Equal homology orders are expected to force equal parameters or
/// an orientation-reversing pair; any other coincidence is reported as
/// [`DichotomyOutcome::UnexplainedOrderEquality`].
///
/// Panics when `x` is even, `x < 3`, or a fiber parameter leaves
/// `0 < y < x`.
pub fn verify_prism_dichotomy(x: i64, b1: i64, y1: i64, b2: i64, y2: i64) -> DichotomyOutcome {
    assert!(x >= 3 && x % 2 != 0, "prism base index must be odd and >= 3");
    assert!(0 < y1 && y1 < x && 0 < y2 && y2 < x, "fiber parameter out of range");
    if prism_order(b1, x, y1) != prism_order(b2, x, y2) {
        return DichotomyOutcome::NoOrderEquality;
    }
    if b1 == b2 && y1 == y2 {
        return DichotomyOutcome::SameInvariant;
    }
    if b1 + b2 == -3 && y1 + y2 == x {
        return DichotomyOutcome::OrientationReversingPair;
    }
    DichotomyOutcome::UnexplainedOrderEquality
}

/// The two one-parameter families of lens-space surgeries carrying a
/// cataloged seiferter at the slope one below the fiber slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LensFamily {
    /// Hosts `(T(2n+1, n), n(2n+1) - 1)` with seiferter linking `2n + 2`.
    Plus,
    /// Hosts `(T(2n-1, n), n(2n-1) - 1)` with seiferter linking `2n + 1`.
    Minus,
}

impl LensFamily {
    /// The host surgery at family parameter `n >= 2`.
    pub fn host(self, n: i64) -> (TorusKnotId, i64) {
        assert!(n >= 2, "family parameter must be at least 2");
        let p = match self {
            LensFamily::Plus => 2 * n + 1,
            LensFamily::Minus => 2 * n - 1,
        };
        let knot = canonical_torus_knot(p, n).expect("family parameters are coprime");
        (knot, n * p - 1)
    }

    /// The host one twist before [`host`](Self::host), reached back by a
    /// single negative twist along the family seiferter.
    pub fn pre_host(self, n: i64) -> (TorusKnotId, i64) {
        assert!(n >= 2, "family parameter must be at least 2");
        let q = match self {
            LensFamily::Plus => n + 2,
            LensFamily::Minus => n + 1,
        };
        let p = -(2 * n + 3);
        let knot = canonical_torus_knot(p, q).expect("family parameters are coprime");
        (knot, p * q + 1)
    }

    /// Linking number of the family seiferter with its host knot.
    pub fn linking(self, n: i64) -> i64 {
        match self {
            LensFamily::Plus => 2 * n + 2,
            LensFamily::Minus => 2 * n + 1,
        }
    }

    /// Catalog id of the family seiferter.
    pub fn seiferter_id(self) -> &'static str {
        match self {
            LensFamily::Plus => "c_lens_plus",
            LensFamily::Minus => "c_lens_minus",
        }
    }

    /// Catalog id of the seiferter at the pre-twist host.
    pub fn pre_seiferter_id(self) -> &'static str {
        match self {
            LensFamily::Plus => "c_lens_plus_pre",
            LensFamily::Minus => "c_lens_minus_pre",
        }
    }
}

/// The four ratios `(lk - 1)/m`, `(lk + 1)/m`, `(lk - pq)/m`,
/// `(lk + pq)/m` for a lens-family host.  An m-equivalence of the family
/// seiferter with the meridian or a regular fiber would make one of them
/// an integer; the sweep checks that none ever is.
pub fn lens_family_exclusion_ratios(family: LensFamily, n: i64) -> [Ratio<i64>; 4] {
    let (knot, m) = family.host(n);
    let lk = family.linking(n);
    let pq = knot.fiber_slope();
    [
        Ratio::new(lk - 1, m),
        Ratio::new(lk + 1, m),
        Ratio::new(lk - pq, m),
        Ratio::new(lk + pq, m),
    ]
}

/// Whether some band sum of the given basic seiferter with its host
/// `T(p,q)` is a trivial knot: always for `s_q` on hosts with `q = 2`,
/// and only on the `(3,2)` and `(-3,2)` hosts for `s_p` and the
/// meridian.
///
/// Panics unless `|p| > q >= 2` with `p, q` coprime.
pub fn band_sum_trivializable(which: BasicSeiferter, p: i64, q: i64) -> bool {
    assert!(p.abs() > q && q >= 2, "host must be a nontrivial torus knot");
    assert_eq!(p.gcd(&q), 1, "host parameters must be coprime");
    match which {
        BasicSeiferter::Sq => q == 2,
        BasicSeiferter::Sp | BasicSeiferter::Meridian => p.abs() == 3 && q == 2,
    }
}

/// One cable-position candidate in the second case of a band-sum chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseIiCandidate {
    /// The inner cabling parameter, `|s| >= 2`.
    pub s: i64,
    /// Whether a sign choice matches the linking constraint
    /// `|1 + e a| = |s|`.
    pub linking_matches: bool,
    /// Whether the derived bound `|c s| <= |s| + 2` holds; implied
    /// whenever the linking constraint matches.
    pub bound_holds: bool,
}

/// The two-case feasibility chain for one basic seiferter's band sums.
///
/// A trivializing band forces the twisted seiferter into one of two
/// cable positions in the surgered solid torus.  The first case requires
/// `|1 + e a| = 1` for a sign `e`; the second puts the host on a
/// `(1, s)` cable with `a = s c +- 1`, `|s| >= 2`, and linking
/// constraint `|1 + e a| = |s|`.  Here `a, c` are the host parameters in
/// the order the chain actually uses them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseChain {
    /// Signs `e` solving the first case.
    pub case_i_solutions: Vec<i64>,
    pub case_i_feasible: bool,
    /// All integer solutions of the cable condition `a = s c +- 1` with
    /// `|s| >= 2`.
    pub case_ii_candidates: Vec<CaseIiCandidate>,
    pub case_ii_feasible: bool,
    /// Whether either case admits a solution.
    pub derived_trivializable: bool,
}

fn case_chain(a: i64, c: i64) -> CaseChain {
    let case_i_solutions: Vec<i64> = [-1, 1]
        .into_iter()
        .filter(|e| (1 + e * a).abs() == 1)
        .collect();
    let case_i_feasible = !case_i_solutions.is_empty();
    let mut case_ii_candidates = Vec::new();
    for target in [a - 1, a + 1] {
        if target % c != 0 {
            continue;
        }
        let s = target / c;
        if s.abs() < 2 {
            continue;
        }
        let linking_matches = [-1, 1].into_iter().any(|e| (1 + e * a).abs() == s.abs());
        let bound_holds = (c * s).abs() <= s.abs() + 2;
        case_ii_candidates.push(CaseIiCandidate {
            s,
            linking_matches,
            bound_holds,
        });
    }
    let case_ii_feasible = case_ii_candidates.iter().any(|cand| cand.linking_matches);
    CaseChain {
        case_i_solutions,
        case_i_feasible,
        case_ii_candidates,
        case_ii_feasible,
        derived_trivializable: case_i_feasible || case_ii_feasible,
    }
}

/// Band-sum feasibility report for one host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandSumReport {
    pub p: i64,
    pub q: i64,
    /// Chain for `s_q`, with `a = q` and `c = p`.
    pub sq_chain: CaseChain,
    /// Chain for `s_p`, with `a = p` and `c = q`.
    pub sp_chain: CaseChain,
    /// The meridian characterization has no feasibility chain of this
    /// shape; it is recorded directly.
    pub meridian_note: String,
}

/// Runs the band-sum case analysis for both fiber seiferters of a host.
///
/// Panics unless `|p| > q >= 2` with `p, q` coprime.
pub fn band_sum_case_constraints(p: i64, q: i64) -> BandSumReport {
    assert!(p.abs() > q && q >= 2, "host must be a nontrivial torus knot");
    assert_eq!(p.gcd(&q), 1, "host parameters must be coprime");
    BandSumReport {
        p,
        q,
        sq_chain: case_chain(q, p),
        sp_chain: case_chain(p, q),
        meridian_note: "meridian band sums trivialize exactly on the (3,2) and (-3,2) hosts"
            .to_owned(),
    }
}

/// What a single band move can and cannot produce at a surgery with
/// `|p| > q > 2` and a slope at distance at least two from the fiber
/// slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveGateReport {
    /// Whether the gate's hypotheses hold at this surgery.
    pub applies: bool,
    /// Whether the surgered space is a small Seifert fibered space, the
    /// classification fact the gate rests on.
    pub small_sfs: bool,
    /// Whether single band moves from all three basic seiferters are
    /// ruled out by the band-sum analysis.
    pub single_move_from_basics_excluded: bool,
    /// A single move applied to a regular fiber lands on the cable of a
    /// meridian with this many twists; that image is never hyperbolic.
    pub regular_fiber_cable_twists: i64,
}

/// Evaluates the single-move gate at a surgery.
pub fn seiferter_move_gate(knot: TorusKnotId, m: i64) -> MoveGateReport {
    let (p, q) = (knot.p(), knot.q());
    let pq = knot.fiber_slope();
    let applies = p.abs() > q && q > 2 && (m - pq).abs() > 1;
    let small_sfs = applies
        && matches!(
            classify_surgery(p, q, m),
            Ok(ManifoldDescription::SmallSfs(_))
        );
    let single_move_from_basics_excluded = applies
        && !band_sum_trivializable(BasicSeiferter::Sq, p, q)
        && !band_sum_trivializable(BasicSeiferter::Sp, p, q)
        && !band_sum_trivializable(BasicSeiferter::Meridian, p, q);
    MoveGateReport {
        applies,
        small_sfs,
        single_move_from_basics_excluded,
        regular_fiber_cable_twists: m - pq,
    }
}

type Sweep = (u64, Option<String>);

fn combine(a: Sweep, b: Sweep) -> Sweep {
    (a.0 + b.0, a.1.or(b.1))
}

fn odd_bases(bounds: &VerifyBounds) -> Vec<i64> {
    (3..=bounds.x_max).filter(|x| x % 2 != 0).collect()
}

fn check_prism_homology(bounds: &VerifyBounds) -> CheckRecord {
    let (cases_checked, counterexample) = odd_bases(bounds)
        .par_iter()
        .map(|&x| {
            let mut sweep: Sweep = (0, None);
            for b in -bounds.b_span..=bounds.b_span {
                for y in 1..x {
                    if x.gcd(&y) != 1 {
                        continue;
                    }
                    sweep.0 += 1;
                    let order = prism_invariants(b, x, y)
                        .first_homology_order()
                        .expect("prism invariants are nondegenerate");
                    if order != prism_order(b, x, y) as u64 {
                        sweep.1 = sweep
                            .1
                            .take()
                            .or_else(|| Some(format!("b={b} x={x} y={y}: order {order}")));
                    }
                }
            }
            sweep
        })
        .reduce(|| (0, None), combine);
    CheckRecord {
        name: "prism_homology_formula".to_owned(),
        parameters: format!("odd x <= {}, |b| <= {}", bounds.x_max, bounds.b_span),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn check_prism_dichotomy(bounds: &VerifyBounds) -> CheckRecord {
    let (cases_checked, counterexample) = odd_bases(bounds)
        .par_iter()
        .map(|&x| {
            let params: Vec<(i64, i64)> = (-bounds.b_span..=bounds.b_span)
                .flat_map(|b| (1..x).filter(|y| x.gcd(y) == 1).map(move |y| (b, y)))
                .collect();
            let mut sweep: Sweep = (0, None);
            for &(b1, y1) in &params {
                for &(b2, y2) in &params {
                    sweep.0 += 1;
                    let outcome = verify_prism_dichotomy(x, b1, y1, b2, y2);
                    if outcome == DichotomyOutcome::UnexplainedOrderEquality {
                        sweep.1 = sweep.1.take().or_else(|| {
                            Some(format!("x={x} (b={b1},y={y1}) vs (b={b2},y={y2})"))
                        });
                    }
                }
            }
            sweep
        })
        .reduce(|| (0, None), combine);
    CheckRecord {
        name: "prism_order_dichotomy".to_owned(),
        parameters: format!("odd x <= {}, |b| <= {}", bounds.x_max, bounds.b_span),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn check_prism_reversal(bounds: &VerifyBounds) -> CheckRecord {
    let (cases_checked, counterexample) = odd_bases(bounds)
        .par_iter()
        .map(|&x| {
            let mut sweep: Sweep = (0, None);
            for b in -bounds.b_span..=bounds.b_span {
                for y in 1..x {
                    if x.gcd(&y) != 1 {
                        continue;
                    }
                    sweep.0 += 1;
                    let reversed = prism_invariants(b, x, y)
                        .reverse_orientation()
                        .and_then(|inv| inv.normalize())
                        .expect("prism invariants are nondegenerate");
                    let mirror = prism_invariants(-b - 3, x, x - y)
                        .normalize()
                        .expect("prism invariants are nondegenerate");
                    if reversed != mirror {
                        sweep.1 = sweep
                            .1
                            .take()
                            .or_else(|| Some(format!("b={b} x={x} y={y}")));
                    }
                }
            }
            sweep
        })
        .reduce(|| (0, None), combine);
    CheckRecord {
        name: "prism_orientation_reversal".to_owned(),
        parameters: format!("odd x <= {}, |b| <= {}", bounds.x_max, bounds.b_span),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn band_sum_hosts(pq_max: i64) -> Vec<(i64, i64)> {
    let mut hosts = Vec::new();
    for q in 2.. {
        if q * (q + 1) > pq_max {
            break;
        }
        for a in (q + 1)..=(pq_max / q) {
            if a.gcd(&q) != 1 {
                continue;
            }
            hosts.push((a, q));
            hosts.push((-a, q));
        }
    }
    hosts
}

fn check_band_sums(bounds: &VerifyBounds) -> CheckRecord {
    let (cases_checked, counterexample) = band_sum_hosts(bounds.pq_max)
        .par_iter()
        .map(|&(p, q)| {
            let report = band_sum_case_constraints(p, q);
            let mut failures = Vec::new();
            if report.sq_chain.derived_trivializable
                != band_sum_trivializable(BasicSeiferter::Sq, p, q)
            {
                failures.push("sq chain disagrees");
            }
            if report.sp_chain.derived_trivializable
                != band_sum_trivializable(BasicSeiferter::Sp, p, q)
            {
                failures.push("sp chain disagrees");
            }
            if !report.sq_chain.case_ii_candidates.is_empty() {
                failures.push("sq chain admits a cable candidate");
            }
            for chain in [&report.sq_chain, &report.sp_chain] {
                if chain
                    .case_ii_candidates
                    .iter()
                    .any(|cand| cand.linking_matches && !cand.bound_holds)
                {
                    failures.push("cable candidate violates the derived bound");
                }
            }
            let counterexample = if failures.is_empty() {
                None
            } else {
                Some(format!("p={p} q={q}: {}", failures.join("; ")))
            };
            (1, counterexample)
        })
        .reduce(|| (0, None), combine);
    CheckRecord {
        name: "band_sum_trivialization".to_owned(),
        parameters: format!("|p| q <= {}", bounds.pq_max),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn check_meridian_exclusion(bounds: &VerifyBounds) -> CheckRecord {
    let mut hosts = Vec::new();
    for a in 3..=bounds.p_max_meridian {
        for q in 2..a {
            if a.gcd(&q) != 1 {
                continue;
            }
            hosts.push((a, q));
            hosts.push((-a, q));
        }
    }
    let (mut cases_checked, mut counterexample) = hosts
        .par_iter()
        .map(|&(p, q)| {
            if p.abs() == 3 && q == 2 {
                return (0, None);
            }
            let sum = (p + q).abs();
            let chosen = if sum != 1 { sum } else { (p - q).abs() };
            let counterexample = if linking_obstruction_passes(chosen, 1, p * q) {
                Some(format!("p={p} q={q}: linking {chosen} meets the meridian"))
            } else {
                None
            };
            (1, counterexample)
        })
        .reduce(|| (0, None), combine);
    for p in [3, -3] {
        cases_checked += 1;
        if !linking_obstruction_passes(5, 1, p * 2) {
            counterexample = counterexample
                .take()
                .or_else(|| Some(format!("p={p} q=2: expected the trefoil exception to pass")));
        }
    }
    CheckRecord {
        name: "fiber_slope_meridian_exclusion".to_owned(),
        parameters: format!("3 <= |p| <= {}", bounds.p_max_meridian),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn check_lens_families(bounds: &VerifyBounds) -> CheckRecord {
    let ns: Vec<i64> = (2..=bounds.n_max).collect();
    let (cases_checked, counterexample) = ns
        .par_iter()
        .map(|&n| {
            let mut sweep: Sweep = (0, None);
            for family in [LensFamily::Plus, LensFamily::Minus] {
                sweep.0 += 1;
                let (knot, m) = family.host(n);
                let lk = family.linking(n);
                let ratios = lens_family_exclusion_ratios(family, n);
                let integral = ratios.iter().any(|r| r.is_integer());
                let candidates = m_equivalence_basic_candidates(knot, m, lk);
                if integral || !candidates.is_empty() {
                    sweep.1 = sweep.1.take().or_else(|| {
                        Some(format!("{family:?} n={n}: candidates {candidates:?}"))
                    });
                }
            }
            sweep
        })
        .reduce(|| (0, None), combine);
    CheckRecord {
        name: "lens_family_linking_exclusion".to_owned(),
        parameters: format!("2 <= n <= {}", bounds.n_max),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn check_twist_identities(bounds: &VerifyBounds) -> CheckRecord {
    let catalog = Catalog::embedded();
    let ns: Vec<i64> = (2..=bounds.slope_n_max).collect();
    let (cases_checked, counterexample) = ns
        .par_iter()
        .map(|&n| {
            let mut sweep: Sweep = (0, None);
            for family in [LensFamily::Plus, LensFamily::Minus] {
                let (pre_knot, pre_m) = family.pre_host(n);
                let (post_knot, post_m) = family.host(n);
                let pre = SeifertSurgery::torus(pre_knot, pre_m);
                let post = SeifertSurgery::torus(post_knot, post_m);
                sweep.0 += 2;
                let forward = twist_along_seiferter(catalog, &pre, family.pre_seiferter_id(), 1);
                if forward.as_ref().ok() != Some(&post) {
                    sweep.1 = sweep
                        .1
                        .take()
                        .or_else(|| Some(format!("{family:?} n={n}: forward twist missed")));
                }
                let backward = twist_along_seiferter(catalog, &post, family.seiferter_id(), -1);
                if backward.as_ref().ok() != Some(&pre) {
                    sweep.1 = sweep
                        .1
                        .take()
                        .or_else(|| Some(format!("{family:?} n={n}: backward twist missed")));
                }
            }
            sweep
        })
        .reduce(|| (0, None), combine);
    CheckRecord {
        name: "lens_family_twist_identities".to_owned(),
        parameters: format!("2 <= n <= {}", bounds.slope_n_max),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn check_move_gate(bounds: &VerifyBounds) -> CheckRecord {
    let hosts: Vec<(i64, i64)> = band_sum_hosts(bounds.pq_max)
        .into_iter()
        .filter(|&(_, q)| q > 2)
        .collect();
    let (cases_checked, counterexample) = hosts
        .par_iter()
        .map(|&(p, q)| {
            let knot = canonical_torus_knot(p, q).expect("hosts are coprime");
            let pq = knot.fiber_slope();
            let mut sweep: Sweep = (0, None);
            for m in (pq - 25)..=(pq + 25) {
                sweep.0 += 1;
                let gate = seiferter_move_gate(knot, m);
                let expected_applies = (m - pq).abs() > 1;
                let bad = gate.applies != expected_applies
                    || (gate.applies && !(gate.small_sfs && gate.single_move_from_basics_excluded));
                if bad {
                    sweep.1 = sweep
                        .1
                        .take()
                        .or_else(|| Some(format!("p={p} q={q} m={m}: {gate:?}")));
                }
            }
            sweep
        })
        .reduce(|| (0, None), combine);
    CheckRecord {
        name: "surgery_move_gate".to_owned(),
        parameters: format!("|p| q <= {}, q > 2, |m - pq| <= 25", bounds.pq_max),
        cases_checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

/// Runs every check.  `workers = 0` uses the global thread pool; any
/// other value builds a dedicated pool of that size.
pub fn run_all(bounds: &VerifyBounds, workers: usize) -> VerifyReport {
    let run = || {
        let records = vec![
            check_prism_homology(bounds),
            check_prism_dichotomy(bounds),
            check_prism_reversal(bounds),
            check_band_sums(bounds),
            check_meridian_exclusion(bounds),
            check_lens_families(bounds),
            check_twist_identities(bounds),
            check_move_gate(bounds),
        ];
        let passed = records.iter().all(|r| r.passed);
        VerifyReport { records, passed }
    };
    if workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(run)
    }
}
