//! Acceptance criteria, one line per criterion. Run with
//! `cargo test -p ihull-core --test acceptance`.

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ihull_core::cover::{
    classify_point, completion_distance, cover_distance, inapproachability_lower_bound, origin_path_upper_bound,
    separated_net, CompletionPoint, CoverClassification, CoverPoint,
};
use ihull_core::grid::{oracle_batch, oracle_distance, Connectivity, GridConfig};
use ihull_core::hull::{
    check_proposition_a, check_theorem_b, hull_distance, parse_point, space, ExtendedPoint, HaloRef, HarnessReport,
    SpaceId,
};
use ihull_core::lcf::parse_number;
use ihull_core::probes::{random_finite, random_infinitesimal, space_probes, witness_probes};
use ihull_core::rational::{int, ratio, to_f64};
use ihull_core::{CoefficientInterval, LeviCivita, MagnitudeClass, Precision, Rational, Truth};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn lit(s: &str) -> LeviCivita {
    parse_number(s).expect("literal")
}

fn cp(r: &str, zeta: &str) -> CoverPoint {
    CoverPoint::new(lit(r), lit(zeta)).expect("valid cover point")
}

fn exact_point(r: Rational, zeta: Rational) -> CoverPoint {
    CoverPoint::new(LeviCivita::from_rational(r), LeviCivita::from_rational(zeta)).expect("valid cover point")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn st(x: &LeviCivita) -> Result<CoefficientInterval, String> {
    x.standard_part().map_err(|e| e.to_string())
}

fn witness_distance() -> Outcome {
    let pr = Precision::default();
    let a = cp("1", "t^-1");
    let eps = lit("t");
    let d = cover_distance(&a, &cp("t", "0"), &pr).map_err(|e| e.to_string())?;
    let s = st(&d)?;
    ensure(s == CoefficientInterval::from_int(1), || format!("st(d) = {s}"))?;
    let bound = origin_path_upper_bound(&a, &eps, &pr).map_err(|e| e.to_string())?;
    ensure(bound == lit("1 + 2t - 2t^2"), || format!("bound = {bound}"))?;
    let cmp = d.compare(&bound).map_err(|e| e.to_string())?;
    ensure(cmp != Ordering::Greater, || format!("{d} > {bound}"))?;
    Ok(format!("d = {d}, st = 1, bound = {bound}"))
}

fn inapproachability() -> Outcome {
    let center = cp("1", "t^-1");
    let proxy = CoverPoint::from_ints(1, 50);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut qs = Vec::new();
    while qs.len() < 100 {
        let r = ratio(rng.random_range(4..=64), 16);
        let zeta = ratio(rng.random_range(-400..=400), 4);
        // The proxy only mirrors the infinite center away from its rectangle.
        let inside = r >= ratio(1, 2) && r <= int(2) && zeta > int(49) && zeta < int(51);
        if !inside {
            qs.push(exact_point(r, zeta));
        }
    }
    for q in &qs {
        let b = inapproachability_lower_bound(&center, q).map_err(|e| e.to_string())?;
        ensure(b == ratio(1, 2), || format!("bound {b} for {q}"))?;
    }
    let pairs: Vec<_> = qs.iter().map(|q| (proxy.clone(), q.clone())).collect();
    let oracle = oracle_batch(&pairs, 128, Connectivity::EightKnight)
        .into_iter()
        .collect::<Result<Vec<f64>, _>>()
        .map_err(|e| e.to_string())?;
    let min = oracle.iter().cloned().fold(f64::INFINITY, f64::min);
    ensure(min > 0.5, || format!("oracle minimum {min}"))?;
    Ok(format!("100 bounds = 1/2, oracle min from (1, 50) = {min:.4}"))
}

fn theorem_1_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let values: Vec<LeviCivita> = (0..500).map(|_| random_finite(&mut rng)).collect();
    let mut zero_parts = 0;
    for (i, a) in values.iter().enumerate() {
        let b = &values[(i * 7 + 3) % values.len()];
        let (sa, sb) = (st(a)?, st(b)?);
        ensure(st(&(a + b))? == &sa + &sb, || format!("st(a + b) for {a}, {b}"))?;
        ensure(st(&(a * b))? == &sa * &sb, || format!("st(ab) for {a}, {b}"))?;
        let infinitesimal = a.classify_magnitude() == MagnitudeClass::Infinitesimal || a.is_exact_zero();
        ensure(sa.is_zero() == infinitesimal, || format!("kernel test fails for {a}"))?;
        zero_parts += usize::from(sa.is_zero());
    }
    let t = LeviCivita::t();
    for _ in 0..100 {
        let y = random_finite(&mut rng);
        let q = y.approximate_within(&t).map_err(|e| e.to_string())?;
        let gap = (&q - &y).abs().map_err(|e| e.to_string())?;
        ensure(gap.compare(&t).map_err(|e| e.to_string())? == Ordering::Less, || format!("|{q} - {y}| >= t"))?;
    }
    Ok(format!("500 values ({zero_parts} infinitesimal), 100 approximations"))
}

fn perturb(p: &ExtendedPoint, delta: &LeviCivita) -> ExtendedPoint {
    let mut coords = p.coords().to_vec();
    if matches!(p.space(), SpaceId::Cover | SpaceId::CoverCompletion) {
        coords[0] = &coords[0] * &(&LeviCivita::one() + delta);
        coords[1] = &coords[1] + delta;
    } else {
        for c in &mut coords {
            *c = &*c + delta;
        }
    }
    ExtendedPoint::new(p.space(), coords).expect("perturbed point")
}

fn well_defined() -> Outcome {
    let pr = Precision::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for i in 0..200 {
        let id = SpaceId::ALL[i % SpaceId::ALL.len()];
        let s = space(id);
        let ps = space_probes(id, 2, &mut rng);
        let (da, db) = (random_infinitesimal(&mut rng), random_infinitesimal(&mut rng));
        let before = hull_distance(s, &HaloRef::new(ps[0].clone()), &HaloRef::new(ps[1].clone()), &pr);
        let after = hull_distance(s, &HaloRef::new(perturb(&ps[0], &da)), &HaloRef::new(perturb(&ps[1], &db)), &pr);
        let (before, after) = match (before, after) {
            (Ok(b), Ok(a)) => (b, a),
            (b, a) => return Err(format!("{id} {} {}: {b:?} / {a:?}", ps[0], ps[1])),
        };
        ensure(before.intersects(&after), || format!("{id}: {before} vs {after}"))?;
        checked += 1;
    }
    Ok(format!("{checked} perturbed pairs consistent"))
}

fn closed_form_vs_oracle() -> Outcome {
    let pr = Precision::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut errors = Vec::new();
    let mut worst = (0.0, String::new());
    while errors.len() < 50 {
        let a = exact_point(ratio(rng.random_range(8..=32), 16), ratio(rng.random_range(-64..=64), 16));
        let b = exact_point(ratio(rng.random_range(8..=32), 16), ratio(rng.random_range(-64..=64), 16));
        if a == b {
            continue;
        }
        let closed = st(&cover_distance(&a, &b, &pr).map_err(|e| e.to_string())?)?.midpoint_f64();
        let cfg = GridConfig::for_points(&a, &b, 256, Connectivity::EightKnight).map_err(|e| e.to_string())?;
        let oracle = oracle_distance(&cfg, &a, &b).map_err(|e| e.to_string())?;
        let rel = (oracle - closed).abs() / closed;
        if rel > worst.0 {
            worst = (rel, format!("{a} - {b}"));
        }
        errors.push(rel);
    }
    errors.sort_by(f64::total_cmp);
    let median = 0.5 * (errors[24] + errors[25]);
    let summary = format!("max rel {:.4} at {}, median {median:.4}", worst.0, worst.1);
    ensure(worst.0 <= 0.08 && median <= 0.03, || summary.clone())?;
    Ok(summary)
}

fn heine_borel_failure() -> Outcome {
    let pr = Precision::default();
    let net = separated_net(10);
    ensure(net.len() == 10, || format!("{} points", net.len()))?;
    let one = LeviCivita::one();
    let two = LeviCivita::from_int(2);
    for p in &net {
        let d = completion_distance(&CompletionPoint::Origin, &CompletionPoint::Point(p.clone()), &pr)
            .map_err(|e| e.to_string())?;
        ensure(d == one, || format!("d(origin, {p}) = {d}"))?;
    }
    let mut pairs = 0;
    for (i, a) in net.iter().enumerate() {
        for b in &net[i + 1..] {
            let d = cover_distance(a, b, &pr).map_err(|e| e.to_string())?;
            ensure(d == two, || format!("d({a}, {b}) = {d}"))?;
            pairs += 1;
        }
    }
    Ok(format!("10 points at distance 1 from the origin, {pairs} pairs at distance 2"))
}

fn report_line(r: &HarnessReport) -> String {
    format!("{} on {}: {}", r.check, r.space, if r.passed { "pass" } else { "fail" })
}

fn harness_ok(r: &HarnessReport) -> Result<(), String> {
    ensure(r.passed && !r.contradiction, || format!("{} {:?}", report_line(r), r.clauses))
}

fn harnesses() -> Outcome {
    let pr = Precision::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut lines = Vec::new();
    for id in [SpaceId::RationalsLine, SpaceId::EuclideanPlane, SpaceId::Cover] {
        let mut probes = space_probes(id, 100, &mut rng);
        probes.extend(witness_probes(id, &pr));
        let b = check_theorem_b(space(id), &probes, &pr);
        harness_ok(&b)?;
        let all = b.clauses.iter().find(|c| c.name == "all-finite-approachable").map(|c| c.observed);
        let witness = b.clauses.iter().find(|c| c.name == "finite-inapproachable-witness");
        match id {
            SpaceId::Cover => {
                let w = witness.ok_or("missing witness clause")?;
                let flagged = b
                    .probes
                    .iter()
                    .any(|v| v.point == "(1, t^-1)" && v.finite == Truth::True && v.approachable == Truth::False);
                ensure(w.observed == Truth::True && flagged, || format!("(1, t^-1) not flagged: {}", w.details))?;
            }
            _ => ensure(all == Some(Truth::True), || format!("{id}: all-finite-approachable {all:?}"))?,
        }
        lines.push(report_line(&b));
        let a = check_proposition_a(space(id), &probes, &pr);
        harness_ok(&a)?;
        if id != SpaceId::EuclideanPlane {
            let witness = witness_probes(id, &pr)[0].display_decimal(12);
            let shown = a
                .probes
                .iter()
                .any(|v| v.point == witness && v.approachable == Truth::True && v.nearstandard == Truth::False);
            ensure(a.clauses[0].observed == Truth::True && shown, || format!("{id}: witness {witness} not shown"))?;
        }
        lines.push(report_line(&a));
    }
    Ok(lines.join("; "))
}

fn classification_table() -> Outcome {
    let rows = [
        (cp("1 + t", "5"), "nearstandard"),
        (cp("1", "t^-1"), "finite-inapproachable"),
        (cp("t", "t^-2"), "origin-halo"),
        (cp("t^-1", "0"), "outside-galaxy"),
    ];
    for (p, expected) in &rows {
        let c = classify_point(p);
        ensure(c.name() == *expected, || format!("{p}: {c}"))?;
    }
    match classify_point(&rows[0].0) {
        CoverClassification::Nearstandard { r, zeta } => {
            ensure(r == CoefficientInterval::from_int(1) && zeta == CoefficientInterval::from_int(5), || {
                format!("standard point ({r}, {zeta})")
            })?
        }
        other => return Err(other.to_string()),
    }
    let pr = Precision::default();
    let mut worst = Rational::from_integer(0.into());
    for r in [ratio(1, 2), int(1), int(3)] {
        let a = exact_point(r.clone(), int(0));
        let below = exact_point(r.clone(), ratio(314_059, 100_000));
        let above = exact_point(r.clone(), ratio(314_259, 100_000));
        let chord = st(&cover_distance(&a, &below, &pr).map_err(|e| e.to_string())?)?;
        let through = st(&cover_distance(&a, &above, &pr).map_err(|e| e.to_string())?)?;
        let gap = (through.hi() - chord.lo()) / &r;
        ensure(gap < ratio(1, 100), || format!("r = {r}: gap {gap}"))?;
        if gap > worst {
            worst = gap;
        }
    }
    Ok(format!("4 rows match, worst relative gap at pi +- 1e-3 = {:.2e}", to_f64(&worst)))
}

fn main() -> ExitCode {
    // Warm up the point parser so parse failures surface before timing.
    parse_point(SpaceId::Cover, "(1, t^-1)", &Precision::default()).expect("parser");
    let criteria: [Criterion; 8] = [
        ("witness distance and upper bound", Duration::from_secs(1), witness_distance),
        ("inapproachability certificate", Duration::from_secs(120), inapproachability),
        ("standard part morphism and kernel", Duration::from_secs(10), theorem_1_1),
        ("hull distance well-definedness", Duration::from_secs(30), well_defined),
        ("closed form vs grid oracle", Duration::from_secs(300), closed_form_vs_oracle),
        ("separated net", Duration::from_secs(1), heine_borel_failure),
        ("theorem b and proposition a harnesses", Duration::from_secs(30), harnesses),
        ("classification table and branch continuity", Duration::from_secs(1), classification_table),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(details) if elapsed > *budget => Err(format!("{details}; over budget {budget:?}")),
            other => other,
        };
        let (verdict, details) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failures += usize::from(outcome.is_err());
        println!("{verdict} criterion {} ({name}) [{:.2?}]: {details}", i + 1, elapsed);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
