//! Named scenarios for `ihull verify`.

use std::cmp::Ordering;
use std::thread;

use clap::ValueEnum;
use ihull_core::cover::{
    classify_point, completion_distance, cover_distance, inapproachability_lower_bound, origin_path_upper_bound,
    separated_net, separation_certificate, CompletionPoint, CoverPoint,
};
use ihull_core::hull::{
    check_proposition_a, check_theorem_b, in_galaxy, is_approachable, space, ExtendedPoint, HarnessReport, SpaceId,
};
use ihull_core::lcf::{format_number, parse_number};
use ihull_core::probes::{random_finite, space_probes, witness_probes};
use ihull_core::rational::ratio;
use ihull_core::{LeviCivita, MagnitudeClass, Precision, Truth};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{Check, Report, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    #[value(name = "theorem-1.1")]
    Theorem11,
    CoverInapproachable,
    PropositionA,
    TheoremB,
    HbFailure,
}

impl Scenario {
    fn name(self) -> &'static str {
        match self {
            Scenario::Theorem11 => "theorem-1.1",
            Scenario::CoverInapproachable => "cover-inapproachable",
            Scenario::PropositionA => "proposition-a",
            Scenario::TheoremB => "theorem-b",
            Scenario::HbFailure => "hb-failure",
        }
    }
}

pub struct Options {
    pub precision: Precision,
    pub seed: u64,
    pub probes: usize,
    pub net_size: usize,
}

pub fn run(scenario: Scenario, opts: &Options) -> Report {
    let mut report = Report::new(scenario.name());
    match scenario {
        Scenario::Theorem11 => standard_part(&mut report, opts),
        Scenario::CoverInapproachable => cover_inapproachable(&mut report, &opts.precision),
        Scenario::PropositionA => harness(&mut report, opts, check_proposition_a),
        Scenario::TheoremB => {
            harness(&mut report, opts, check_theorem_b);
            cover_witness(&mut report);
        }
        Scenario::HbFailure => hb_failure(&mut report, opts),
    }
    report
}

fn lit(s: &str) -> LeviCivita {
    parse_number(s).expect("built-in literal")
}

fn cover_point(r: &str, zeta: &str) -> CoverPoint {
    CoverPoint::new(lit(r), lit(zeta)).expect("built-in point")
}

fn errored(name: &str, e: impl std::fmt::Display) -> Check {
    Check::new(name, Verdict::Unknown, format!("could not evaluate: {e}"))
}

fn standard_part(report: &mut Report, opts: &Options) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let values: Vec<LeviCivita> = (0..500).map(|_| random_finite(&mut rng)).collect();
    let (mut add, mut mul, mut kernel) = (Vec::new(), Vec::new(), Vec::new());
    for (i, a) in values.iter().enumerate() {
        let b = &values[(i * 7 + 3) % values.len()];
        let (Ok(sa), Ok(sb)) = (a.standard_part(), b.standard_part()) else {
            kernel.push(format!("{a} is not finite"));
            continue;
        };
        if (a + b).standard_part().ok() != Some(&sa + &sb) {
            add.push(format!("({a}) + ({b})"));
        }
        if (a * b).standard_part().ok() != Some(&sa * &sb) {
            mul.push(format!("({a}) * ({b})"));
        }
        let infinitesimal = a.is_exact_zero() || a.classify_magnitude() == MagnitudeClass::Infinitesimal;
        if sa.is_zero() != infinitesimal {
            kernel.push(a.to_string());
        }
    }
    let summary = |bad: &[String]| match bad.first() {
        None => "500 random finite values, no exceptions".to_string(),
        Some(first) => format!("{} exceptions, first {first}", bad.len()),
    };
    report.push(Check::from_bool("st-additive", add.is_empty(), summary(&add)));
    report.push(Check::from_bool("st-multiplicative", mul.is_empty(), summary(&mul)));
    report.push(Check::from_bool("kernel-is-infinitesimals", kernel.is_empty(), summary(&kernel)));

    let t = LeviCivita::t();
    let mut bad = Vec::new();
    for _ in 0..100 {
        let y = random_finite(&mut rng);
        let ok = y
            .approximate_within(&t)
            .and_then(|q| (&q - &y).abs())
            .and_then(|gap| gap.compare(&t))
            .map(|c| c == Ordering::Less);
        if ok != Ok(true) {
            bad.push(y.to_string());
        }
    }
    report.push(Check::from_bool(
        "approximate-within-t",
        bad.is_empty(),
        if bad.is_empty() { "100 values approximated within t".to_string() } else { format!("failed for {}", bad[0]) },
    ));
}

fn cover_inapproachable(report: &mut Report, pr: &Precision) {
    let center = cover_point("1", "t^-1");
    let eps_point = cover_point("t", "0");
    let d = cover_distance(&center, &eps_point, pr);
    report.push(match &d {
        Ok(d) => match d.standard_part() {
            Ok(st) => Check::from_bool(
                "distance-standard-part",
                st.as_exact() == Some(&ratio(1, 1)),
                format!("d = {d}, st = {st}"),
            ),
            Err(e) => errored("distance-standard-part", e),
        },
        Err(e) => errored("distance-standard-part", e),
    });
    let bound = origin_path_upper_bound(&center, &lit("t"), pr);
    report.push(match (&d, &bound) {
        (Ok(d), Ok(b)) => {
            let dominates = d.compare(b).map(|c| c != Ordering::Greater);
            Check::from_bool(
                "origin-path-upper-bound",
                *b == lit("1 + 2t - 2t^2") && dominates == Ok(true),
                format!("bound = {b}, dominates d: {}", dominates.map_or("unknown".into(), |x| x.to_string())),
            )
        }
        (_, Err(e)) | (Err(e), _) => errored("origin-path-upper-bound", e),
    });
    let class = classify_point(&center);
    report.push(Check::from_bool(
        "classification",
        class.name() == "finite-inapproachable",
        format!("{center} is {class}"),
    ));
    let cover = space(ihull_core::hull::SpaceId::Cover);
    let p = ExtendedPoint::new(SpaceId::Cover, vec![center.r().clone(), center.zeta().clone()]).expect("valid point");
    let finite = in_galaxy(cover, &p, pr);
    let approachable = is_approachable(cover, &p, pr);
    report.push(Check::new(
        "finite-not-approachable",
        match (finite, approachable) {
            (Truth::True, Truth::False) => Verdict::Pass,
            (Truth::Unknown, _) | (_, Truth::Unknown) => Verdict::Unknown,
            _ => Verdict::Fail,
        },
        format!("finite = {finite}, approachable = {approachable}"),
    ));
    let certificate = separation_certificate(&center).and_then(|c| c.validate().map(|_| c));
    report.push(match certificate {
        Ok(c) => Check::from_bool(
            "separation-certificate",
            c.ball_radius == ratio(1, 2),
            format!("rectangle [{}, {}] x zeta +- {}, ball radius {}", c.r_lo, c.r_hi, c.zeta_halfwidth, c.ball_radius),
        ),
        Err(e) => errored("separation-certificate", e),
    });
    for (r, z) in [(1, 0), (7, 3)] {
        let q = CoverPoint::from_ints(r, z);
        let name = format!("lower-bound-to-({r}, {z})");
        report.push(match inapproachability_lower_bound(&center, &q) {
            Ok(b) => Check::from_bool(name, b == ratio(1, 2), format!("d({center}, {q}) >= {b}")),
            Err(e) => errored(&name, e),
        });
    }
}

type Harness = fn(&dyn ihull_core::hull::MetricSpace, &[ExtendedPoint], &Precision) -> HarnessReport;

fn harness(report: &mut Report, opts: &Options, check: Harness) {
    let results: Vec<HarnessReport> = thread::scope(|scope| {
        let handles: Vec<_> = SpaceId::ALL
            .iter()
            .enumerate()
            .map(|(i, &id)| {
                scope.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(i as u64));
                    let mut probes = space_probes(id, opts.probes, &mut rng);
                    probes.extend(witness_probes(id, &opts.precision));
                    check(space(id), &probes, &opts.precision)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("harness thread")).collect()
    });
    for r in &results {
        for clause in &r.clauses {
            let verdict = match (clause.expected, clause.observed) {
                (None, _) => Verdict::Pass,
                (Some(_), Truth::Unknown) => Verdict::Unknown,
                _ if clause.satisfied() => Verdict::Pass,
                _ => Verdict::Fail,
            };
            let details = match clause.expected {
                None => format!("informational, observed {}: {}", clause.observed, clause.details),
                Some(e) => format!("observed {}, expected {e}: {}", clause.observed, clause.details),
            };
            report.push(Check::new(format!("{}/{}", r.space, clause.name), verdict, details));
        }
        report.push(Check::from_bool(
            format!("{}/consistent", r.space),
            !r.contradiction,
            format!("{} probes, {} with unknown verdicts", r.probes.len(), r.unknown_verdicts),
        ));
    }
    report.reports = results;
}

/// The cover witness of the theorem-b scenario, looked up in the harness output.
fn cover_witness(report: &mut Report) {
    let point = cover_point("1", "t^-1");
    let shown = point.to_string();
    let verdict =
        report.reports.iter().filter(|r| r.space == SpaceId::Cover).flat_map(|r| &r.probes).find(|v| v.point == shown);
    let class = classify_point(&point);
    report.push(match verdict {
        Some(v) => Check::from_bool(
            "cover/witness",
            v.finite == Truth::True && v.approachable == Truth::False && class.name() == "finite-inapproachable",
            format!("{shown} is {class}: finite = {}, approachable = {}", v.finite, v.approachable),
        ),
        None => Check::new("cover/witness", Verdict::Fail, format!("{shown} missing from the probes")),
    });
}

fn hb_failure(report: &mut Report, opts: &Options) {
    let n = opts.net_size.max(2);
    let net = separated_net(n);
    let pr = &opts.precision;
    let one = LeviCivita::one();
    let two = LeviCivita::from_int(2);
    let mut far = Vec::new();
    for p in &net {
        match completion_distance(&CompletionPoint::Origin, &CompletionPoint::Point(p.clone()), pr) {
            Ok(d) if d == one => {}
            Ok(d) => far.push(format!("d(origin, {p}) = {d}")),
            Err(e) => far.push(format!("d(origin, {p}): {e}")),
        }
    }
    report.push(Check::from_bool(
        "unit-sphere",
        far.is_empty(),
        far.first().cloned().unwrap_or_else(|| format!("{n} points at distance exactly 1 from the origin")),
    ));
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (i, a) in net.iter().enumerate() {
        for b in &net[i + 1..] {
            pairs += 1;
            match cover_distance(a, b, pr) {
                Ok(d) if d == two => {}
                Ok(d) => bad.push(format!("d({a}, {b}) = {d}")),
                Err(e) => bad.push(format!("d({a}, {b}): {e}")),
            }
        }
    }
    report.push(Check::from_bool(
        "two-separated",
        bad.is_empty(),
        bad.first().cloned().unwrap_or_else(|| format!("all {pairs} pairs at distance exactly 2")),
    ));
    let (a, b) = (CoverPoint::from_ints(1, 0), CoverPoint::from_ints(1, 1));
    report.push(match cover_distance(&a, &b, pr).map(|d| (d.compare(&two), d)) {
        Ok((Ok(Ordering::Less), d)) => {
            Check::new("negative-control", Verdict::Pass, format!("d({a}, {b}) = {} < 2", format_number(&d, Some(6))))
        }
        Ok((_, d)) => Check::new("negative-control", Verdict::Fail, format!("d({a}, {b}) = {d}")),
        Err(e) => errored("negative-control", e),
    });
}
